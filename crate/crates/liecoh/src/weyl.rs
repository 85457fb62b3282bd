//! Weyl groups: enumeration by word length and flag-variety Poincaré
//! polynomials.
//!
//! A Weyl group is enumerated as the orbit of a regular dominant weight
//! vector under the simple reflections, by breadth-first search; the BFS
//! depth of an orbit point is the Coxeter length of the unique group element
//! producing it.  The resulting length histogram is checked against the
//! closed form `prod_l (1 + t + ... + t^{l-1})` over the invariant degrees,
//! which is also (in doubled degrees) the Poincaré polynomial of the
//! complete flag variety.

use std::collections::{HashSet, VecDeque};
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, GradedDims, Result};

/// Supported Cartan types.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartanType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    G2,
    F4,
    E6,
    E7,
}

impl std::fmt::Display for CartanType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::G2 => write!(f, "G2"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::E6 => write!(f, "E6"),
            CartanType::E7 => write!(f, "E7"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<CartanType> {
        let bad = || Error::InvalidInput(format!("unknown Cartan type {s:?}"));
        let (head, tail) = s.split_at(1);
        let n: u32 = tail.parse().map_err(|_| bad())?;
        let ty = match head {
            "A" if (1..=4).contains(&n) => CartanType::A(n),
            "B" if (2..=4).contains(&n) => CartanType::B(n),
            "C" if n == 3 => CartanType::C(n),
            "D" if n == 4 => CartanType::D(n),
            "G" if n == 2 => CartanType::G2,
            "F" if n == 4 => CartanType::F4,
            "E" if n == 6 => CartanType::E6,
            "E" if n == 7 => CartanType::E7,
            _ => return Err(bad()),
        };
        Ok(ty)
    }
}

impl CartanType {
    pub fn rank(self) -> u32 {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::G2 => 2,
            CartanType::F4 => 4,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
        }
    }

    /// Degrees of the basic invariant polynomials.  Their product is the
    /// group order; their sum minus the rank is the number of positive
    /// roots, hence the maximal length.
    pub fn degrees(self) -> Vec<u32> {
        match self {
            CartanType::A(n) => (2..=n + 1).collect(),
            CartanType::B(n) | CartanType::C(n) => (1..=n).map(|i| 2 * i).collect(),
            CartanType::D(n) => {
                let mut d: Vec<u32> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort();
                d
            }
            CartanType::G2 => vec![2, 6],
            CartanType::F4 => vec![2, 6, 8, 12],
            CartanType::E6 => vec![2, 5, 6, 8, 9, 12],
            CartanType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
        }
    }

    pub fn order(self) -> u64 {
        self.degrees().iter().map(|&l| l as u64).product()
    }

    /// The Cartan matrix, rows and columns indexed by the simple roots.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank() as usize;
        // Start from the simply-laced path A_n and adjust.
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
            if i + 1 < n {
                row[i + 1] = -1;
            }
            if i > 0 {
                row[i - 1] = -1;
            }
        }
        match self {
            CartanType::A(_) => {}
            CartanType::B(_) => {
                // Last simple root short: a[n-2][n-1] = -2.
                a[n - 2][n - 1] = -2;
            }
            CartanType::C(_) => {
                a[n - 1][n - 2] = -2;
            }
            CartanType::D(_) => {
                // Fork at node n-3: nodes n-2 and n-1 both attach to n-3.
                a[n - 2][n - 1] = 0;
                a[n - 1][n - 2] = 0;
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
            }
            CartanType::G2 => {
                a[0][1] = -3;
            }
            CartanType::F4 => {
                a[1][2] = -2;
            }
            CartanType::E6 | CartanType::E7 => {
                // Path on nodes 0..n-2 with node n-1 attached to node 2.
                a[n - 2][n - 1] = 0;
                a[n - 1][n - 2] = 0;
                a[2][n - 1] = -1;
                a[n - 1][2] = -1;
            }
        }
        a
    }
}

/// Result of enumerating a Weyl group.
#[derive(Debug, Clone, Serialize)]
pub struct WeylReport {
    pub cartan_type: String,
    pub rank: u32,
    pub order: u64,
    pub max_length: u32,
    /// Number of elements of each Coxeter length, indexed by length.
    pub length_histogram: Vec<u64>,
    /// Poincaré polynomial of the complete flag variety, supported in even
    /// degrees; coefficient in degree `2d` equals `length_histogram[d]`.
    pub flag_poincare: GradedDims,
}

/// Orbit of `start` under the simple reflections, bucketed by BFS depth.
/// Fails if the orbit would exceed `cap` points.
fn orbit_lengths(cartan: &[Vec<i64>], start: &[i64], cap: u64) -> Result<Vec<u64>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<(Vec<i64>, u32)> = VecDeque::new();
    let mut histogram: Vec<u64> = Vec::new();
    seen.insert(start.to_vec());
    queue.push_back((start.to_vec(), 0));
    while let Some((v, depth)) = queue.pop_front() {
        if histogram.len() <= depth as usize {
            histogram.resize(depth as usize + 1, 0);
        }
        histogram[depth as usize] += 1;
        for j in 0..n {
            if v[j] == 0 {
                continue;
            }
            // Simple reflection: subtract v[j] times the j-th simple root,
            // whose weight coordinates form the j-th column of the Cartan
            // matrix.
            let mut w = v.clone();
            for (i, row) in cartan.iter().enumerate() {
                w[i] -= v[j] * row[j];
            }
            if seen.insert(w.clone()) {
                if seen.len() as u64 > cap {
                    return Err(Error::InvalidInput(format!(
                        "orbit exceeds the cap of {cap} elements; raise the cap to proceed"
                    )));
                }
                queue.push_back((w, depth + 1));
            }
        }
    }
    Ok(histogram)
}

/// Poincaré polynomial of the flag variety:
/// `prod_{l in degrees} (1 + t^2 + t^4 + ... + t^{2(l-1)})`.
pub fn flag_poincare(ty: CartanType) -> GradedDims {
    let mut out = GradedDims::new();
    out.add(0, 1);
    for l in ty.degrees() {
        let factor: GradedDims = (0..l).map(|j| (2 * j, 1)).collect();
        out = out.tensor(&factor);
    }
    out
}

/// Default cap on the number of enumerated elements.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// Enumerate the Weyl group of `ty` and cross-check the length histogram
/// against the closed-form order, maximal length and flag Poincaré
/// polynomial.
pub fn enumerate(ty: CartanType, cap: u64) -> Result<WeylReport> {
    let ctx = format!("weyl::enumerate({ty})");
    let expected_order = ty.order();
    if expected_order > cap {
        return Err(Error::InvalidInput(format!(
            "Weyl group of {ty} has {expected_order} elements, above the cap of {cap}; \
             raise the cap to proceed"
        )));
    }
    let cartan = ty.cartan_matrix();
    let n = ty.rank() as usize;
    // A strictly dominant start vector has trivial stabilizer, so the orbit
    // is in length-preserving bijection with the group.  Retry with a second
    // regular vector if the first one degenerates (it cannot for the shipped
    // catalogue, but the check is cheap).
    let starts: [Vec<i64>; 2] = [
        (0..n).map(|i| 1i64 << i.min(62)).collect(),
        (1..=n as i64).collect(),
    ];
    let mut histogram = Vec::new();
    for start in &starts {
        histogram = orbit_lengths(&cartan, start, cap)?;
        if histogram.iter().sum::<u64>() == expected_order {
            break;
        }
    }
    let total: u64 = histogram.iter().sum();
    if total != expected_order {
        return Err(Error::invariant(
            &ctx,
            format!("orbit has {total} points but the group order is {expected_order}"),
        ));
    }
    let max_length = histogram.len() as u32 - 1;
    let expected_max: u32 = ty.degrees().iter().map(|&l| l - 1).sum();
    if max_length != expected_max {
        return Err(Error::invariant(
            &ctx,
            format!("maximal length {max_length}, expected {expected_max}"),
        ));
    }
    let flag = flag_poincare(ty);
    for (d, &h) in histogram.iter().enumerate() {
        if flag.get(2 * d as u32) != h {
            return Err(Error::invariant(
                &ctx,
                format!(
                    "length {d}: histogram {h} but flag polynomial gives {}",
                    flag.get(2 * d as u32)
                ),
            ));
        }
    }
    if !flag.is_palindromic(2 * max_length) {
        return Err(Error::invariant(&ctx, "flag polynomial is not palindromic"));
    }
    Ok(WeylReport {
        cartan_type: ty.to_string(),
        rank: ty.rank(),
        order: expected_order,
        max_length,
        length_histogram: histogram,
        flag_poincare: flag,
    })
}

/// The Cartan types enumerable within the default cap.
pub fn catalogue() -> Vec<CartanType> {
    vec![
        CartanType::A(1),
        CartanType::A(2),
        CartanType::A(3),
        CartanType::A(4),
        CartanType::B(2),
        CartanType::B(3),
        CartanType::B(4),
        CartanType::C(3),
        CartanType::D(4),
        CartanType::G2,
        CartanType::F4,
        CartanType::E6,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(CartanType::A(3).order(), 24);
        assert_eq!(CartanType::B(3).order(), 48);
        assert_eq!(CartanType::D(4).order(), 192);
        assert_eq!(CartanType::G2.order(), 12);
        assert_eq!(CartanType::F4.order(), 1152);
        assert_eq!(CartanType::E6.order(), 51840);
        assert_eq!(CartanType::E7.order(), 2_903_040);
    }

    #[test]
    fn a2_histogram() {
        let rep = enumerate(CartanType::A(2), DEFAULT_CAP).unwrap();
        assert_eq!(rep.length_histogram, vec![1, 2, 2, 1]);
        assert_eq!(rep.max_length, 3);
    }

    #[test]
    fn g2_histogram() {
        let rep = enumerate(CartanType::G2, DEFAULT_CAP).unwrap();
        assert_eq!(rep.length_histogram, vec![1, 2, 2, 2, 2, 2, 1]);
    }

    #[test]
    fn full_catalogue_is_consistent() {
        for ty in catalogue() {
            let rep = enumerate(ty, DEFAULT_CAP).unwrap();
            assert_eq!(rep.order, ty.order(), "{ty}");
        }
    }

    #[test]
    fn e7_needs_a_raised_cap() {
        assert!(matches!(
            enumerate(CartanType::E7, DEFAULT_CAP),
            Err(Error::InvalidInput(_))
        ));
        let rep = enumerate(CartanType::E7, 3_000_000).unwrap();
        assert_eq!(rep.order, 2_903_040);
        assert_eq!(rep.max_length, 63);
    }

    #[test]
    fn parse() {
        assert_eq!("B4".parse::<CartanType>().unwrap(), CartanType::B(4));
        assert!("H3".parse::<CartanType>().is_err());
        assert!("A9".parse::<CartanType>().is_err());
    }
}
