//! Embedded catalogue of the compact 1-connected simple Lie groups.
//!
//! For every supported group this module records the rank, the dimension,
//! the list `q(G)` of basic-class degrees (half-degrees of the primitive
//! generators of the rational cohomology), and the *special classes*: the
//! even degrees `t` carrying a torsion generator, each with its torsion
//! coefficient `p_t` and its cup length `r_t` (the least power vanishing in
//! the integral ring).
//!
//! The five exceptional groups and the classical families `SU(n)`/`Sp(n)`
//! are fully supported.  `Spin(n)` data is available too, but its cup
//! lengths depend on reading a logarithm in the source table as base 2; that
//! interpretation is recorded on the data (`spin_log2`) and interfaces that
//! consume it are expected to require an explicit opt-in.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// A supported compact simply-connected Lie group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LieGroup {
    SU(u32),
    Sp(u32),
    Spin(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl fmt::Display for LieGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieGroup::SU(n) => write!(f, "SU({n})"),
            LieGroup::Sp(n) => write!(f, "Sp({n})"),
            LieGroup::Spin(n) => write!(f, "Spin({n})"),
            LieGroup::G2 => write!(f, "G2"),
            LieGroup::F4 => write!(f, "F4"),
            LieGroup::E6 => write!(f, "E6"),
            LieGroup::E7 => write!(f, "E7"),
            LieGroup::E8 => write!(f, "E8"),
        }
    }
}

impl std::str::FromStr for LieGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('_', "");
        let parametric = |name: &str| -> Option<u32> {
            let rest = s.strip_prefix(name)?;
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .unwrap_or(rest);
            inner.parse().ok()
        };
        match s.as_str() {
            "G2" => return Ok(LieGroup::G2),
            "F4" => return Ok(LieGroup::F4),
            "E6" => return Ok(LieGroup::E6),
            "E7" => return Ok(LieGroup::E7),
            "E8" => return Ok(LieGroup::E8),
            _ => {}
        }
        if let Some(n) = parametric("SU") {
            if n >= 2 {
                return Ok(LieGroup::SU(n));
            }
            return Err(Error::InvalidInput("SU(n) requires n >= 2".into()));
        }
        if let Some(n) = parametric("Sp") {
            if n >= 1 {
                return Ok(LieGroup::Sp(n));
            }
            return Err(Error::InvalidInput("Sp(n) requires n >= 1".into()));
        }
        if let Some(n) = parametric("Spin") {
            if n >= 7 {
                return Ok(LieGroup::Spin(n));
            }
            return Err(Error::InvalidInput("Spin(n) requires n >= 7".into()));
        }
        Err(Error::InvalidInput(format!(
            "unknown group {s:?}; expected G2, F4, E6, E7, E8, SU(n), Sp(n) or Spin(n)"
        )))
    }
}

/// A torsion-carrying even degree with its torsion coefficient and cup length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpecialClass {
    /// Degree `t` of the torsion generator `x_t`.
    pub degree: u32,
    /// Prime `p` with `p * x_t = 0`.
    pub torsion_index: u32,
    /// Least `r` with `x_t^r = 0`.
    pub cup_length: u32,
}

/// Resolved numeric data of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LieGroupData {
    pub group: LieGroup,
    pub rank: u32,
    pub dim: u32,
    /// Basic-class degrees, sorted; strictly increasing except for
    /// `Spin(4m)`, where one duplicate is genuine.
    pub degrees_q: Vec<u32>,
    pub special: Vec<SpecialClass>,
    /// Set when cup lengths were derived under the base-2 logarithm reading
    /// of the Spin table (see the module docs).
    pub spin_log2: bool,
}

impl LieGroupData {
    pub fn is_exceptional(&self) -> bool {
        matches!(
            self.group,
            LieGroup::G2 | LieGroup::F4 | LieGroup::E6 | LieGroup::E7 | LieGroup::E8
        )
    }

    /// Degrees `2l - 1` of the odd free exterior generators.
    pub fn free_degrees(&self) -> Vec<u32> {
        self.degrees_q.iter().map(|&l| 2 * l - 1).collect()
    }
}

/// One row of the embedded exceptional table:
/// (group, rank, dim, q-degrees, [(t, p, r)]).
type ExceptionalRow = (
    LieGroup,
    u32,
    u32,
    &'static [u32],
    &'static [(u32, u32, u32)],
);

/// The exceptional groups as a single literal table.
pub const EXCEPTIONAL_TABLE: [ExceptionalRow; 5] = [
    (LieGroup::G2, 2, 14, &[2, 6], &[(6, 2, 2)]),
    (
        LieGroup::F4,
        4,
        52,
        &[2, 6, 8, 12],
        &[(6, 2, 2), (8, 3, 3)],
    ),
    (
        LieGroup::E6,
        6,
        78,
        &[2, 5, 6, 8, 9, 12],
        &[(6, 2, 2), (8, 3, 3)],
    ),
    (
        LieGroup::E7,
        7,
        133,
        &[2, 6, 8, 10, 12, 14, 18],
        &[(6, 2, 2), (8, 3, 3), (10, 2, 2), (18, 2, 2)],
    ),
    (
        LieGroup::E8,
        8,
        248,
        &[2, 8, 12, 14, 18, 20, 24, 30],
        &[
            (6, 2, 8),
            (8, 3, 3),
            (10, 2, 4),
            (12, 5, 5),
            (18, 2, 2),
            (20, 3, 3),
            (30, 2, 2),
        ],
    ),
];

/// Non-vanishing squares of the odd generators of the mod 2 model, as
/// `(group, odd degree, square as [(even degree, exponent)])`.  Squares not
/// listed here are zero; odd primes have no non-vanishing squares at all.
pub const MOD2_SQUARE_TABLE: [(LieGroup, u32, &[(u32, u32)]); 11] = [
    (LieGroup::G2, 3, &[(6, 1)]),
    (LieGroup::F4, 3, &[(6, 1)]),
    (LieGroup::E6, 3, &[(6, 1)]),
    (LieGroup::E7, 3, &[(6, 1)]),
    (LieGroup::E8, 3, &[(6, 1)]),
    (LieGroup::E7, 5, &[(10, 1)]),
    (LieGroup::E8, 5, &[(10, 1)]),
    (LieGroup::E7, 9, &[(18, 1)]),
    (LieGroup::E8, 9, &[(18, 1)]),
    (LieGroup::E8, 15, &[(30, 1)]),
    (LieGroup::E8, 23, &[(6, 6), (10, 1)]),
];

/// Squares of the odd free integral generators, as
/// `(group, odd degree, [(even degree, exponent)])`; unlisted squares are 0.
pub const FREE_SQUARE_TABLE: [(LieGroup, u32, &[(u32, u32)]); 7] = [
    (LieGroup::G2, 3, &[(6, 1)]),
    (LieGroup::F4, 3, &[(6, 1)]),
    (LieGroup::E6, 3, &[(6, 1)]),
    (LieGroup::E7, 3, &[(6, 1)]),
    (LieGroup::E8, 3, &[(6, 1)]),
    (LieGroup::E8, 15, &[(30, 1)]),
    (LieGroup::E8, 23, &[(6, 6), (10, 1)]),
];

fn floor_log2(mut x: u32) -> u32 {
    debug_assert!(x >= 1);
    let mut l = 0;
    while x >= 2 {
        x /= 2;
        l += 1;
    }
    l
}

/// Numeric data for a group.
pub fn group_data(group: LieGroup) -> Result<LieGroupData> {
    let data = match group {
        LieGroup::G2 | LieGroup::F4 | LieGroup::E6 | LieGroup::E7 | LieGroup::E8 => {
            let row = EXCEPTIONAL_TABLE
                .iter()
                .find(|r| r.0 == group)
                .expect("exceptional row present");
            LieGroupData {
                group,
                rank: row.1,
                dim: row.2,
                degrees_q: row.3.to_vec(),
                special: row
                    .4
                    .iter()
                    .map(|&(degree, torsion_index, cup_length)| SpecialClass {
                        degree,
                        torsion_index,
                        cup_length,
                    })
                    .collect(),
                spin_log2: false,
            }
        }
        LieGroup::SU(n) => LieGroupData {
            group,
            rank: n - 1,
            dim: n * n - 1,
            degrees_q: (2..=n).collect(),
            special: Vec::new(),
            spin_log2: false,
        },
        LieGroup::Sp(n) => LieGroupData {
            group,
            rank: n,
            dim: n * (2 * n + 1),
            degrees_q: (1..=n).map(|i| 2 * i).collect(),
            special: Vec::new(),
            spin_log2: false,
        },
        LieGroup::Spin(m) if m % 2 == 1 => {
            let n = m / 2;
            let special = (1..=(n - 1) / 2)
                .map(|i| SpecialClass {
                    degree: 4 * i + 2,
                    torsion_index: 2,
                    cup_length: 1 << (floor_log2(n / (2 * i + 1)) + 1),
                })
                .collect();
            LieGroupData {
                group,
                rank: n,
                dim: m * (m - 1) / 2,
                degrees_q: (1..=n).map(|i| 2 * i).collect(),
                special,
                spin_log2: true,
            }
        }
        LieGroup::Spin(m) => {
            let n = m / 2;
            let mut q: Vec<u32> = (1..n).map(|i| 2 * i).collect();
            q.push(n);
            q.sort();
            let special = (1..=(n - 2) / 2)
                .map(|i| SpecialClass {
                    degree: 4 * i + 2,
                    torsion_index: 2,
                    cup_length: 1 << (floor_log2((n - 1) / (2 * i + 1)) + 1),
                })
                .collect();
            LieGroupData {
                group,
                rank: n,
                dim: n * (2 * n - 1),
                degrees_q: q,
                special,
                spin_log2: true,
            }
        }
    };
    validate(&data)?;
    Ok(data)
}

/// Structural sanity checks applied to every emitted row.
fn validate(d: &LieGroupData) -> Result<()> {
    let ctx = format!("group_data({})", d.group);
    if d.degrees_q.len() != d.rank as usize {
        return Err(Error::invariant(&ctx, "rank differs from |q(G)|"));
    }
    let increasing = d
        .degrees_q
        .windows(2)
        .all(|w| if d.spin_log2 { w[0] <= w[1] } else { w[0] < w[1] });
    if !increasing || d.degrees_q.first() != Some(&2) {
        return Err(Error::invariant(&ctx, "q(G) is not sorted starting at 2"));
    }
    let sum: u32 = d.degrees_q.iter().map(|&l| 2 * l - 1).sum();
    if sum != d.dim {
        return Err(Error::invariant(
            &ctx,
            format!("sum of free generator degrees {sum} differs from dim {}", d.dim),
        ));
    }
    let mut last = 0;
    for s in &d.special {
        if s.degree % 2 != 0 || s.degree <= last {
            return Err(Error::invariant(&ctx, "special degrees not even increasing"));
        }
        last = s.degree;
        let p = s.torsion_index;
        if !(p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| p % q != 0)) {
            return Err(Error::invariant(&ctx, "torsion index is not prime"));
        }
        if s.cup_length < 2 {
            return Err(Error::invariant(&ctx, "cup length below 2"));
        }
    }
    Ok(())
}

/// Degrees `t` with `p`-torsion: the support of the truncated polynomial
/// part of the mod `p` model.
pub fn d1(data: &LieGroupData, p: u32) -> Vec<u32> {
    data.special
        .iter()
        .filter(|s| s.torsion_index == p)
        .map(|s| s.degree)
        .collect()
}

/// Cup length `r_t` of the degree `t` special class.
pub fn cup_length(data: &LieGroupData, t: u32) -> Option<u32> {
    data.special
        .iter()
        .find(|s| s.degree == t)
        .map(|s| s.cup_length)
}

/// The partition of the mod `p` generator degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreePartition {
    /// Degrees `t` of the even truncated generators (each also contributes
    /// an odd generator of degree `t - 1`).
    pub d1: Vec<u32>,
    /// Values `m` contributing odd generators of degree `m - 1`.
    pub d2: Vec<u32>,
}

/// Derive the degree partition for `(G, p)`.
///
/// `d2` is obtained from the doubled basic degrees `2 * q(G)` by deleting,
/// for each `t` in `d1`, one occurrence of `t * r_t`.  The derivation is a
/// gate: if a required occurrence is missing, or the surviving degrees
/// (together with `d1`) are not pairwise distinct, or the total count is not
/// the rank, the whole construction is rejected.
pub fn degree_partition(data: &LieGroupData, p: u32) -> Result<DegreePartition> {
    let ctx = format!("degree_partition({}, {p})", data.group);
    let d1 = d1(data, p);
    let mut doubled: Vec<u32> = data.degrees_q.iter().map(|&l| 2 * l).collect();
    for &t in &d1 {
        let r = cup_length(data, t).expect("special degree has a cup length");
        let target = t * r;
        match doubled.iter().position(|&x| x == target) {
            Some(i) => {
                doubled.remove(i);
            }
            None => {
                return Err(Error::invariant(
                    &ctx,
                    format!("no doubled basic degree {target} left to cancel for t = {t}"),
                ));
            }
        }
    }
    let d2 = doubled;
    let mut all: Vec<u32> = d1.iter().chain(d2.iter()).copied().collect();
    all.sort();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invariant(&ctx, "partition degrees are not distinct"));
    }
    if all.len() != data.rank as usize {
        return Err(Error::invariant(
            &ctx,
            format!("partition has {} degrees, expected rank {}", all.len(), data.rank),
        ));
    }
    Ok(DegreePartition { d1, d2 })
}

/// Squares of the odd model generators mod `p`, keyed by odd degree; each
/// value lists `(even degree, exponent)` factors.  Empty value = square 0.
pub fn zeta_square_table(data: &LieGroupData, p: u32) -> BTreeMap<u32, Vec<(u32, u32)>> {
    let mut out = BTreeMap::new();
    if p != 2 {
        return out;
    }
    for (g, odd, square) in MOD2_SQUARE_TABLE.iter() {
        if *g == data.group {
            out.insert(*odd, square.to_vec());
        }
    }
    out
}

/// Squares of the odd free integral generators, keyed by odd degree.
pub fn free_square_table(data: &LieGroupData) -> BTreeMap<u32, Vec<(u32, u32)>> {
    let mut out = BTreeMap::new();
    for (g, odd, square) in FREE_SQUARE_TABLE.iter() {
        if *g == data.group {
            out.insert(*odd, square.to_vec());
        }
    }
    out
}

/// The five exceptional groups.
pub fn exceptional_groups() -> [LieGroup; 5] {
    [
        LieGroup::G2,
        LieGroup::F4,
        LieGroup::E6,
        LieGroup::E7,
        LieGroup::E8,
    ]
}

/// Deterministic JSON dump of the embedded tables (fixed groups plus sample
/// members of the parametric families); the basis of the checksum test and
/// of the `dump-tables` CLI command.
pub fn dump_tables() -> serde_json::Value {
    let mut groups = Vec::new();
    for g in exceptional_groups() {
        groups.push(g);
    }
    for n in 2..=6 {
        groups.push(LieGroup::SU(n));
    }
    for n in 1..=5 {
        groups.push(LieGroup::Sp(n));
    }
    for n in 7..=12 {
        groups.push(LieGroup::Spin(n));
    }
    let rows: Vec<serde_json::Value> = groups
        .iter()
        .map(|&g| {
            let d = group_data(g).expect("catalogue row");
            serde_json::json!({
                "group": d.group.to_string(),
                "rank": d.rank,
                "dim": d.dim,
                "degrees_q": d.degrees_q,
                "special": d.special.iter().map(|s| {
                    serde_json::json!({
                        "degree": s.degree,
                        "torsion_index": s.torsion_index,
                        "cup_length": s.cup_length,
                    })
                }).collect::<Vec<_>>(),
                "spin_log2": d.spin_log2,
            })
        })
        .collect();
    serde_json::json!({ "groups": rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("G2".parse::<LieGroup>().unwrap(), LieGroup::G2);
        assert_eq!("E_8".parse::<LieGroup>().unwrap(), LieGroup::E8);
        assert_eq!("SU(4)".parse::<LieGroup>().unwrap(), LieGroup::SU(4));
        assert_eq!("Sp3".parse::<LieGroup>().unwrap(), LieGroup::Sp(3));
        assert_eq!("Spin(9)".parse::<LieGroup>().unwrap(), LieGroup::Spin(9));
        assert!("SU(1)".parse::<LieGroup>().is_err());
        assert!("Spin(6)".parse::<LieGroup>().is_err());
        assert!("E9".parse::<LieGroup>().is_err());
    }

    #[test]
    fn dimensions_match_free_generator_degrees() {
        let mut groups = vec![
            LieGroup::G2,
            LieGroup::F4,
            LieGroup::E6,
            LieGroup::E7,
            LieGroup::E8,
        ];
        for n in 2..=8 {
            groups.push(LieGroup::SU(n));
        }
        for n in 1..=8 {
            groups.push(LieGroup::Sp(n));
        }
        for n in 7..=16 {
            groups.push(LieGroup::Spin(n));
        }
        for g in groups {
            // validate() inside group_data checks sum(2l - 1) = dim.
            group_data(g).unwrap();
        }
    }

    #[test]
    fn exceptional_partitions() {
        let e8 = group_data(LieGroup::E8).unwrap();
        let p2 = degree_partition(&e8, 2).unwrap();
        assert_eq!(p2.d1, vec![6, 10, 18, 30]);
        assert_eq!(p2.d2, vec![4, 16, 24, 28]);
        let p3 = degree_partition(&e8, 3).unwrap();
        assert_eq!(p3.d1, vec![8, 20]);
        assert_eq!(p3.d2, vec![4, 16, 28, 36, 40, 48]);
        let p5 = degree_partition(&e8, 5).unwrap();
        assert_eq!(p5.d1, vec![12]);
        assert_eq!(p5.d2, vec![4, 16, 24, 28, 36, 40, 48]);

        let e7 = group_data(LieGroup::E7).unwrap();
        let p2 = degree_partition(&e7, 2).unwrap();
        assert_eq!(p2.d1, vec![6, 10, 18]);
        assert_eq!(p2.d2, vec![4, 16, 24, 28]);

        let g2 = group_data(LieGroup::G2).unwrap();
        let p2 = degree_partition(&g2, 2).unwrap();
        assert_eq!(p2.d1, vec![6]);
        assert_eq!(p2.d2, vec![4]);
        // No 3-torsion in G2: the partition degenerates to the doubled
        // basic degrees.
        let p3 = degree_partition(&g2, 3).unwrap();
        assert!(p3.d1.is_empty());
        assert_eq!(p3.d2, vec![4, 12]);
    }

    #[test]
    fn spin_even_rank_duplicates_are_rejected_by_the_gate() {
        // q(Spin(8)) = {2, 4, 4, 6}: the doubled degrees collide, so the
        // distinctness gate must fire.
        let d = group_data(LieGroup::Spin(8)).unwrap();
        assert_eq!(d.degrees_q, vec![2, 4, 4, 6]);
        assert!(degree_partition(&d, 2).is_err());
        // Odd-parameter Spin groups pass.
        let d7 = group_data(LieGroup::Spin(7)).unwrap();
        let p = degree_partition(&d7, 2).unwrap();
        assert_eq!(p.d1, vec![6]);
        assert_eq!(p.d2, vec![4, 8]);
    }

    #[test]
    fn square_tables() {
        let e8 = group_data(LieGroup::E8).unwrap();
        let sq = zeta_square_table(&e8, 2);
        assert_eq!(sq.get(&23), Some(&vec![(6, 6), (10, 1)]));
        assert_eq!(sq.get(&15), Some(&vec![(30, 1)]));
        assert!(zeta_square_table(&e8, 3).is_empty());
        let e7 = group_data(LieGroup::E7).unwrap();
        let sq7 = zeta_square_table(&e7, 2);
        assert_eq!(sq7.get(&9), Some(&vec![(18, 1)]));
        assert_eq!(sq7.get(&15), None);
        assert_eq!(free_square_table(&e7).get(&3), Some(&vec![(6, 1)]));
        assert_eq!(free_square_table(&e7).get(&15), None);
    }
}
