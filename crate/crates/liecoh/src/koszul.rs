//! Koszul complexes and the structure of their coboundary image.
//!
//! A complex here is a graded-commutative algebra together with a degree +1
//! antiderivation squaring to zero.  The general constructor verifies the
//! differential; the *truncated* specialisation
//! `C = F_p[y_1..y_r]/(y_i^{k_i}) (x) exterior(th_1..th_r)` with
//! `delta(th_i) = y_i` additionally knows:
//!
//! * the closed form of its cohomology — an exterior algebra on classes
//!   `g_i = y_i^{k_i - 1} th_i`,
//! * the distinguished image elements `C_I`, `R_I`, `D_I` and the product
//!   expansion of `C_H * C_L`,
//! * a finite presentation of the image of the differential, with relation
//!   strings, verified against brute-force linear algebra before being
//!   returned.
//!
//! In characteristic 2 the exterior generators may carry prescribed squares
//! (polynomials in the `y_i`), which feed into the product expansions.

use std::collections::BTreeMap;

use crate::algebra::{
    Antiderivation, GeneratorSpec, GradedAlgebra, Polynomial, SquareExpr,
};
use crate::linalg::MatrixFp;
use crate::present::{PresGenerator, RingPresentation};
use crate::sym::{SymPoly, SymTerm};
use crate::{Error, GradedDims, Result};

/// A cochain complex: algebra plus differential with `delta^2 = 0`.
#[derive(Debug, Clone)]
pub struct KoszulComplex {
    pub algebra: GradedAlgebra,
    pub diff: Antiderivation,
}

impl KoszulComplex {
    /// Wrap an algebra and an antiderivation, verifying `delta^2 = 0` on
    /// every basis monomial up to the top degree.
    pub fn new(algebra: GradedAlgebra, diff: Antiderivation) -> Result<Self> {
        if algebra.characteristic() == 0 {
            return Err(Error::InvalidInput(
                "complexes require prime characteristic".into(),
            ));
        }
        for d in 0..=algebra.top_degree() {
            for m in algebra.basis_in_degree(d) {
                let once = diff.apply_monomial(&algebra, &m, 1);
                let twice = diff.apply(&algebra, &once);
                if !twice.is_zero() {
                    return Err(Error::invariant(
                        "KoszulComplex::new",
                        format!(
                            "delta^2 != 0 on basis monomial of degree {d}: {}",
                            algebra.render(&algebra.monomial_poly(m, 1))
                        ),
                    ));
                }
            }
        }
        Ok(KoszulComplex { algebra, diff })
    }

    /// Matrix of `delta` from degree `d` to `d + 1`: columns indexed by the
    /// degree `d` basis, rows by the degree `d + 1` basis.
    pub fn diff_matrix(&self, d: u32) -> Result<MatrixFp> {
        let src = self.algebra.basis_in_degree(d);
        let tgt_len = self.algebra.basis_in_degree(d + 1).len();
        let mut m = MatrixFp::zero(self.algebra.characteristic(), tgt_len, src.len())?;
        for (j, mono) in src.iter().enumerate() {
            let img = self.diff.apply_monomial(&self.algebra, mono, 1);
            let v = self.algebra.to_vector(&img, d + 1)?;
            for (i, &c) in v.iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// Brute-force cohomology dimensions: `dim ker(delta_d) - rank(delta_{d-1})`.
    pub fn cohomology_dims_bruteforce(&self) -> Result<GradedDims> {
        let mut dims = GradedDims::new();
        let mut prev_rank = 0usize;
        for d in 0..=self.algebra.top_degree() {
            let m = self.diff_matrix(d)?;
            let ker = m.ncols() - m.rank();
            dims.add(d, (ker - prev_rank) as u64);
            prev_rank = m.rank();
        }
        Ok(dims)
    }

    /// Brute-force dimensions of the image of `delta`, graded by the degree
    /// the image lives in.
    pub fn image_dims_bruteforce(&self) -> Result<GradedDims> {
        let mut dims = GradedDims::new();
        for d in 0..=self.algebra.top_degree() {
            let rank = self.diff_matrix(d)?.rank();
            dims.add(d + 1, rank as u64);
        }
        Ok(dims)
    }
}

/// The truncated-polynomial Koszul complex described in the module docs.
#[derive(Debug, Clone)]
pub struct TruncatedKoszul {
    pub complex: KoszulComplex,
    /// Algebra index of `y_i` / `th_i`, in declaration order.
    y_idx: Vec<usize>,
    theta_idx: Vec<usize>,
    k: Vec<u32>,
    /// Label of each position used to name `C` elements (`C_1_2`, `C_6_10`).
    labels: Vec<String>,
}

/// Description of one `(y_i, th_i)` pair.
#[derive(Debug, Clone)]
pub struct KoszulPair {
    pub y_name: String,
    pub theta_name: String,
    /// Degree of `y_i` (even, positive); `th_i` gets degree `deg y_i - 1`.
    pub degree: u32,
    /// Truncation exponent `k_i >= 2`.
    pub truncation: u32,
    /// Prescribed square of `th_i` (even characteristic-2 data, may be empty).
    pub theta_square: SquareExpr,
    /// Label for naming image elements; defaults to the 1-based position.
    pub label: Option<String>,
}

impl TruncatedKoszul {
    pub fn new(p: u32, pairs: Vec<KoszulPair>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidInput("at least one pair required".into()));
        }
        let mut specs = Vec::new();
        for pair in &pairs {
            specs.push(GeneratorSpec::even(
                pair.y_name.clone(),
                pair.degree,
                pair.truncation,
            ));
            specs.push(GeneratorSpec::odd_with_square(
                pair.theta_name.clone(),
                pair.degree - 1,
                pair.theta_square.clone(),
            ));
        }
        let algebra = GradedAlgebra::new(p, specs)?;
        let mut values = Vec::new();
        let mut y_idx = Vec::new();
        let mut theta_idx = Vec::new();
        let mut k = Vec::new();
        let mut labels = Vec::new();
        for (i, pair) in pairs.iter().enumerate() {
            let yi = algebra.gen_index(&pair.y_name).unwrap();
            let ti = algebra.gen_index(&pair.theta_name).unwrap();
            values.push((pair.theta_name.clone(), algebra.gen_poly(yi)));
            y_idx.push(yi);
            theta_idx.push(ti);
            k.push(pair.truncation);
            labels.push(
                pair.label
                    .clone()
                    .unwrap_or_else(|| (i + 1).to_string()),
            );
        }
        let diff = Antiderivation::new(&algebra, values)?;
        let complex = KoszulComplex::new(algebra, diff)?;
        Ok(TruncatedKoszul {
            complex,
            y_idx,
            theta_idx,
            k,
            labels,
        })
    }

    pub fn rank(&self) -> usize {
        self.y_idx.len()
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.complex.algebra
    }

    pub fn y_poly(&self, i: usize) -> Polynomial {
        self.algebra().gen_poly(self.y_idx[i])
    }

    pub fn y_name(&self, i: usize) -> &str {
        &self.algebra().generators()[self.y_idx[i]].name
    }

    pub fn y_degree(&self, i: usize) -> u32 {
        self.algebra().generators()[self.y_idx[i]].degree
    }

    pub fn truncation(&self, i: usize) -> u32 {
        self.k[i]
    }

    /// Name of the image element attached to the position set `I`: the
    /// `y` generator itself for a singleton, otherwise `C_<labels>`.
    pub fn c_name(&self, set: &[usize]) -> String {
        if set.len() == 1 {
            self.y_name(set[0]).to_string()
        } else {
            let mut s = String::from("C");
            for &i in set {
                s.push('_');
                s.push_str(&self.labels[i]);
            }
            s
        }
    }

    /// Product `th_{i_1} * ... * th_{i_k}` over the sorted position set.
    pub fn theta_monomial(&self, set: &[usize]) -> Polynomial {
        let alg = self.algebra();
        let mut out = alg.one();
        for &i in set {
            out = alg.mul(&out, &alg.gen_poly(self.theta_idx[i]));
        }
        out
    }

    /// Cocycle `g_I = (prod_{i in I} y_i^{k_i - 1}) th_I`.
    pub fn g_elem(&self, set: &[usize]) -> Polynomial {
        let alg = self.algebra();
        let mut out = self.theta_monomial(set);
        for &i in set {
            out = alg.mul(&out, &alg.pow(&self.y_poly(i), self.k[i] - 1));
        }
        out
    }

    /// Image element `C_I = sum_s (-1)^(s-1) y_{i_s} th_{I minus i_s}`;
    /// equal to `delta(th_I)`.
    pub fn c_elem(&self, set: &[usize]) -> Polynomial {
        let alg = self.algebra();
        let mut out = Polynomial::zero();
        for (s, &i) in set.iter().enumerate() {
            let rest: Vec<usize> = set.iter().copied().filter(|&j| j != i).collect();
            let sign = if s % 2 == 0 { 1 } else { -1 };
            let term = alg.mul(&self.y_poly(i), &self.theta_monomial(&rest));
            out = alg.add(&out, &alg.scale(&term, sign));
        }
        out
    }

    /// `R_I = (prod_{i in I} y_i^{k_i - 1}) C_I`; identically zero in the
    /// complex (each Leibniz summand hits a truncated power).
    pub fn r_elem(&self, set: &[usize]) -> Polynomial {
        let alg = self.algebra();
        let mut out = self.c_elem(set);
        for &i in set {
            out = alg.mul(&out, &alg.pow(&self.y_poly(i), self.k[i] - 1));
        }
        out
    }

    /// `D_I = sum_s (-1)^(s-1) y_{i_s} C_{I minus i_s}`; identically zero
    /// in the complex (`delta` of a cocycle).
    pub fn d_elem(&self, set: &[usize]) -> Polynomial {
        let alg = self.algebra();
        let mut out = Polynomial::zero();
        for (s, &i) in set.iter().enumerate() {
            let rest: Vec<usize> = set.iter().copied().filter(|&j| j != i).collect();
            let sign = if s % 2 == 0 { 1 } else { -1 };
            let term = alg.mul(&self.y_poly(i), &self.c_elem(&rest));
            out = alg.add(&out, &alg.scale(&term, sign));
        }
        out
    }

    /// The structured expansion of `C_H * C_L`:
    /// `sum_s (-1)^(s + |H|) y_{h_s} delta(th_{H minus h_s} * th_L)`.
    ///
    /// Each summand reduces overlapping exterior factors through their
    /// prescribed squares, so this is the product-of-images identity with
    /// all Koszul signs carried along; the product `c_elem(H) * c_elem(L)`
    /// must equal it exactly.
    pub fn s_expansion(&self, h: &[usize], l: &[usize]) -> Polynomial {
        let alg = self.algebra();
        let mut out = Polynomial::zero();
        for (s, &i) in h.iter().enumerate() {
            let rest: Vec<usize> = h.iter().copied().filter(|&j| j != i).collect();
            let prod = alg.mul(&self.theta_monomial(&rest), &self.theta_monomial(l));
            let dd = self.complex.diff.apply(alg, &prod);
            let sign = if (s + 1 + h.len()) % 2 == 0 { 1 } else { -1 };
            let term = alg.mul(&self.y_poly(i), &dd);
            out = alg.add(&out, &alg.scale(&term, sign));
        }
        out
    }

    /// Closed-form cohomology: the exterior algebra on classes `g_i` of
    /// degree `k_i * deg(y_i) - 1`.
    pub fn closed_form_cohomology(&self) -> Result<GradedAlgebra> {
        let specs = (0..self.rank())
            .map(|i| GeneratorSpec::odd(format!("g{}", i + 1), self.k[i] * self.y_degree(i) - 1))
            .collect();
        GradedAlgebra::new(self.algebra().characteristic(), specs)
    }

    /// Closed-form dimensions of the image of `delta`, derived from the
    /// dimension count of the complex and of its cohomology via exactness:
    /// `im(d + 1) = C(d) - H(d) - im(d)`.
    pub fn image_dims_closed_form(&self) -> Result<GradedDims> {
        let c = self.algebra().poincare();
        let h = self.closed_form_cohomology()?.poincare();
        let top = self.algebra().top_degree();
        let mut dims = GradedDims::new();
        let mut prev = 0i64;
        for d in 0..=top {
            let next = c.get(d) as i64 - h.get(d) as i64 - prev;
            if next < 0 {
                return Err(Error::invariant(
                    "image_dims_closed_form",
                    format!("negative image dimension in degree {}", d + 1),
                ));
            }
            dims.add(d + 1, next as u64);
            prev = next;
        }
        if prev != 0 {
            return Err(Error::invariant(
                "image_dims_closed_form",
                "image does not terminate at the top degree",
            ));
        }
        Ok(dims)
    }

    /// Decompose `delta(p)` symbolically over the names `y_i` and `C_I`.
    ///
    /// Each monomial `e * th_M` (with `e` in the even part) contributes
    /// `e * delta(th_M)`, recorded as the symbol of `C_M` (or `y_i` for a
    /// singleton) with the sign relating the sorted basis monomial to the
    /// position-ordered product `th_M`.
    pub fn delta_symbolic(&self, p: &Polynomial) -> SymPoly {
        let alg = self.algebra();
        let mut out = SymPoly::zero();
        for (mono, &coeff) in &p.terms {
            let mut set = Vec::new();
            let mut even_factors = Vec::new();
            for (pos, &ti) in self.theta_idx.iter().enumerate() {
                if mono.0[ti] == 1 {
                    set.push(pos);
                }
            }
            for (gi, gen) in alg.generators().iter().enumerate() {
                if !gen.is_odd() && mono.0[gi] > 0 {
                    even_factors.push((gen.name.clone(), mono.0[gi]));
                }
            }
            if set.is_empty() {
                continue; // delta vanishes on the even part
            }
            // Sign between the basis monomial and the position-ordered
            // product of the same exterior factors.
            let ordered = self.theta_monomial(&set);
            let raw = *ordered.terms.values().next().expect("unit product");
            // Coefficients are stored as least nonnegative residues, so a
            // sign of -1 appears as p - 1.
            let sigma: i64 = if raw == 1 { 1 } else { -1 };
            debug_assert!(raw == 1 || raw == alg.characteristic() as i64 - 1 || raw == -1);
            let mut factors = even_factors;
            if set.len() == 1 {
                factors.push((self.y_name(set[0]).to_string(), 1));
            } else {
                factors.push((self.c_name(&set), 1));
            }
            out.add_term(SymTerm {
                coeff: coeff * sigma,
                factors,
            });
        }
        out
    }

    /// Symbolic relation `S_{H,L} = C_H * C_L - <structured expansion>`,
    /// reduced mod p.  Substituting the actual image elements turns it into
    /// the identically-zero element of the complex.
    pub fn s_relation_sym(&self, h: &[usize], l: &[usize]) -> SymPoly {
        let alg = self.algebra();
        let product = SymPoly::term(1, vec![(&self.c_name(h), 1)])
            .times(&SymPoly::term(1, vec![(&self.c_name(l), 1)]));
        let mut expansion = SymPoly::zero();
        for (s, &i) in h.iter().enumerate() {
            let rest: Vec<usize> = h.iter().copied().filter(|&j| j != i).collect();
            let prod = alg.mul(&self.theta_monomial(&rest), &self.theta_monomial(l));
            let sign = if (s + 1 + h.len()) % 2 == 0 { 1 } else { -1 };
            let term = SymPoly::term(sign, vec![(self.y_name(i), 1)])
                .times(&self.delta_symbolic(&prod));
            expansion = expansion.plus(&term);
        }
        product
            .plus(&expansion.scaled(-1))
            .reduced_mod(alg.characteristic())
    }

    /// Symbolic relation `D_I = sum_s (-1)^(s-1) y_{i_s} C_{I minus i_s}`.
    pub fn d_relation_sym(&self, set: &[usize]) -> SymPoly {
        let mut out = SymPoly::zero();
        for (s, &i) in set.iter().enumerate() {
            let rest: Vec<usize> = set.iter().copied().filter(|&j| j != i).collect();
            let sign = if s % 2 == 0 { 1 } else { -1 };
            out = out.plus(
                &SymPoly::term(sign, vec![(self.y_name(i), 1)])
                    .times(&SymPoly::term(1, vec![(&self.c_name(&rest), 1)])),
            );
        }
        out.reduced_mod(self.algebra().characteristic())
    }

    /// Symbolic relation `R_I = (prod y_i^{k_i - 1}) C_I`.
    pub fn r_relation_sym(&self, set: &[usize]) -> SymPoly {
        let mut factors: Vec<(&str, u32)> = Vec::new();
        let names: Vec<String> = set.iter().map(|&i| self.y_name(i).to_string()).collect();
        for (pos, &i) in set.iter().enumerate() {
            factors.push((&names[pos], self.k[i] - 1));
        }
        let cname = self.c_name(set);
        factors.push((&cname, 1));
        SymPoly::term(1, factors)
    }

    /// All position subsets of size at least `min`, ordered by size then
    /// lexicographically.
    pub fn subsets_of_size_at_least(&self, min: usize) -> Vec<Vec<usize>> {
        let r = self.rank();
        let mut out = Vec::new();
        for mask in 1u32..(1 << r) {
            let set: Vec<usize> = (0..r).filter(|&i| mask & (1 << i) != 0).collect();
            if set.len() >= min {
                out.push(set);
            }
        }
        out.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
        out
    }

    /// Degree of the image element `C_I`.
    pub fn c_degree(&self, set: &[usize]) -> u32 {
        set.iter().map(|&i| self.y_degree(i) - 1).sum::<u32>() + 1
    }

    /// Finite presentation of the image of `delta`: generators `y_i`, `C_I`
    /// subject to the truncations, `R_J` (|J| >= 2), `D_K` (|K| >= 3) and
    /// the product expansions `S_{H,L}`.
    ///
    /// Before returning, the presentation is verified against the complex:
    /// every relation vanishes under substitution of the actual image
    /// elements, and the module spanned by `{a * C_I}` has the brute-force
    /// image dimensions, which in turn equal the closed form.
    pub fn image_presentation(&self) -> Result<RingPresentation> {
        let p = self.algebra().characteristic();
        let mut generators = Vec::new();
        for i in 0..self.rank() {
            generators.push(PresGenerator {
                name: self.y_name(i).to_string(),
                degree: self.y_degree(i),
                additive_order: p,
            });
        }
        for set in self.subsets_of_size_at_least(2) {
            generators.push(PresGenerator {
                name: self.c_name(&set),
                degree: self.c_degree(&set),
                additive_order: p,
            });
        }
        let degrees: BTreeMap<String, u32> = generators
            .iter()
            .map(|g| (g.name.clone(), g.degree))
            .collect();

        let mut relations = Vec::new();
        let mut relation_polys: Vec<(SymPoly, Polynomial)> = Vec::new();
        for i in 0..self.rank() {
            let sym = SymPoly::term(1, vec![(self.y_name(i), self.k[i])]);
            relation_polys.push((sym, Polynomial::zero()));
        }
        for set in self.subsets_of_size_at_least(2) {
            relation_polys.push((self.r_relation_sym(&set), self.r_elem(&set)));
        }
        for set in self.subsets_of_size_at_least(3) {
            relation_polys.push((self.d_relation_sym(&set), self.d_elem(&set)));
        }
        let pairs = self.subsets_of_size_at_least(2);
        for h in &pairs {
            for l in &pairs {
                if h > l {
                    continue;
                }
                let alg = self.algebra();
                let value = alg.sub(
                    &alg.mul(&self.c_elem(h), &self.c_elem(l)),
                    &self.s_expansion(h, l),
                );
                relation_polys.push((self.s_relation_sym(h, l), value));
            }
        }
        for (sym, value) in &relation_polys {
            // Each relation must be the zero element of the complex once the
            // abstract symbols are replaced by the image elements they name.
            if !value.is_zero() {
                return Err(Error::invariant(
                    "image_presentation",
                    format!(
                        "relation {} does not vanish in the complex",
                        sym.render(&degrees)
                    ),
                ));
            }
            relations.push(sym.render(&degrees));
        }

        let closed = self.image_dims_closed_form()?;
        let brute = self.complex.image_dims_bruteforce()?;
        if closed != brute {
            return Err(Error::invariant(
                "image_presentation",
                format!("closed-form image dims {closed:?} differ from brute force {brute:?}"),
            ));
        }
        let spanned = self.image_span_dims()?;
        if spanned != brute {
            return Err(Error::invariant(
                "image_presentation",
                format!("spanning-set dims {spanned:?} differ from brute force {brute:?}"),
            ));
        }

        let pres = RingPresentation {
            coefficient: p,
            generators,
            relations,
            graded_dims: Some(closed),
        };
        pres.validate()?;
        Ok(pres)
    }

    /// Dimensions of the span of `{a * C_I : a monomial, I nonempty}` in
    /// the complex — the module form of the image.
    pub fn image_span_dims(&self) -> Result<GradedDims> {
        let alg = self.algebra();
        let p = alg.characteristic();
        let sets = self.subsets_of_size_at_least(1);
        let elems: Vec<(u32, Polynomial)> = sets
            .iter()
            .map(|s| {
                let e = self.c_elem(s);
                (self.c_degree(s), e)
            })
            .collect();
        let mut dims = GradedDims::new();
        for d in 1..=alg.top_degree() {
            let basis_len = alg.basis_in_degree(d).len();
            if basis_len == 0 {
                continue;
            }
            let mut rows = Vec::new();
            for (cd, c) in &elems {
                if *cd > d {
                    continue;
                }
                for a in alg.basis_in_degree(d - cd) {
                    // Coefficients range over the even subalgebra only.
                    if self.theta_idx.iter().any(|&ti| a.0[ti] > 0) {
                        continue;
                    }
                    let prod = alg.mul(&alg.monomial_poly(a, 1), c);
                    rows.push(alg.to_vector(&prod, d)?);
                }
            }
            if rows.is_empty() {
                continue;
            }
            let m = MatrixFp::from_rows(p, basis_len, &rows)?;
            dims.add(d, m.rank() as u64);
        }
        Ok(dims)
    }
}

/// Convenience constructor for tests and randomized suites: rank `r` with
/// the given `(degree, truncation)` per pair and optional squares.
pub fn truncated(
    p: u32,
    shape: &[(u32, u32)],
    squares: &[SquareExpr],
) -> Result<TruncatedKoszul> {
    let pairs = shape
        .iter()
        .enumerate()
        .map(|(i, &(degree, truncation))| KoszulPair {
            y_name: format!("y{}", i + 1),
            theta_name: format!("t{}", i + 1),
            degree,
            truncation,
            theta_square: squares.get(i).cloned().unwrap_or_default(),
            label: None,
        })
        .collect();
    TruncatedKoszul::new(p, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_variable_cohomology() {
        // K(F_3[y]/y^3; y): cohomology is exterior on g = y^2 t of degree 5.
        let k = truncated(3, &[(2, 3)], &[]).unwrap();
        let closed = k.closed_form_cohomology().unwrap().poincare();
        let brute = k.complex.cohomology_dims_bruteforce().unwrap();
        assert_eq!(closed, brute);
        assert_eq!(brute.to_pairs(), vec![(0, 1), (5, 1)]);
    }

    #[test]
    fn rank_three_cohomology_matches_closed_form() {
        let k = truncated(5, &[(2, 2), (4, 3), (6, 2)], &[]).unwrap();
        assert_eq!(
            k.closed_form_cohomology().unwrap().poincare(),
            k.complex.cohomology_dims_bruteforce().unwrap()
        );
    }

    #[test]
    fn char_two_with_squares() {
        // th_1 has degree 3 and prescribed square y_2 (degree 6).
        let k = truncated(
            2,
            &[(4, 2), (6, 3)],
            &[vec![(1, vec![("y2".to_string(), 1)])], vec![]],
        )
        .unwrap();
        assert_eq!(
            k.closed_form_cohomology().unwrap().poincare(),
            k.complex.cohomology_dims_bruteforce().unwrap()
        );
    }

    #[test]
    fn c_elements_are_coboundaries() {
        let k = truncated(3, &[(2, 2), (4, 2), (6, 3)], &[]).unwrap();
        for set in k.subsets_of_size_at_least(1) {
            let direct = k.c_elem(&set);
            let via_delta = k
                .complex
                .diff
                .apply(k.algebra(), &k.theta_monomial(&set));
            assert_eq!(direct, via_delta, "set {set:?}");
        }
    }

    #[test]
    fn r_and_d_vanish() {
        let k = truncated(3, &[(2, 2), (2, 3), (4, 2)], &[]).unwrap();
        for set in k.subsets_of_size_at_least(2) {
            assert!(k.r_elem(&set).is_zero(), "R for {set:?}");
        }
        for set in k.subsets_of_size_at_least(3) {
            assert!(k.d_elem(&set).is_zero(), "D for {set:?}");
        }
    }

    #[test]
    fn product_expansion_identity() {
        // Includes the interleaved pair H = {0,3}, L = {1,2}, whose shuffle
        // signs are the delicate part in odd characteristic.
        let k = truncated(3, &[(2, 2), (2, 2), (2, 2), (2, 2)], &[]).unwrap();
        let pairs = k.subsets_of_size_at_least(2);
        for h in &pairs {
            for l in &pairs {
                let lhs = k.algebra().mul(&k.c_elem(h), &k.c_elem(l));
                assert_eq!(lhs, k.s_expansion(h, l), "H {h:?} L {l:?}");
            }
        }
    }

    #[test]
    fn g_elements_are_cocycles() {
        let k = truncated(2, &[(2, 2), (4, 3)], &[]).unwrap();
        for set in k.subsets_of_size_at_least(1) {
            let g = k.g_elem(&set);
            assert!(!g.is_zero());
            assert!(k.complex.diff.apply(k.algebra(), &g).is_zero());
        }
    }

    #[test]
    fn presentation_verifies_and_round_trips() {
        let k = truncated(2, &[(6, 2), (10, 2)], &[]).unwrap();
        let pres = k.image_presentation().unwrap();
        assert_eq!(pres.coefficient, 2);
        assert!(pres.relations.contains(&"y1^2".to_string()));
        assert!(pres.relations.iter().any(|r| r.contains("C_1_2")));
        pres.validate().unwrap();
    }

    #[test]
    fn antiderivation_product_rule() {
        let k = truncated(5, &[(2, 3), (4, 2)], &[]).unwrap();
        let alg = k.algebra();
        let d = &k.complex.diff;
        for da in 0..=6 {
            for a in alg.basis_in_degree(da) {
                for db in 0..=6 {
                    for b in alg.basis_in_degree(db) {
                        let pa = alg.monomial_poly(a.clone(), 1);
                        let pb = alg.monomial_poly(b, 1);
                        let lhs = d.apply(alg, &alg.mul(&pa, &pb));
                        let sign = if da % 2 == 0 { 1 } else { -1 };
                        let rhs = alg.add(
                            &alg.mul(&d.apply(alg, &pa), &pb),
                            &alg.scale(&alg.mul(&pa, &d.apply(alg, &pb)), sign),
                        );
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
