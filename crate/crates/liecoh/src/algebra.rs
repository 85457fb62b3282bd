//! Finitely generated graded-commutative algebras with exact arithmetic.
//!
//! An algebra here is a tensor product of
//!
//! * truncated polynomial factors `F[y] / (y^k)` on *even* generators, and
//! * exterior factors on *odd* generators, where in characteristic 2 an odd
//!   generator may carry a prescribed square (a polynomial in the even
//!   generators); in every other characteristic odd squares are forced to
//!   zero by graded commutativity.
//!
//! Multiplication is exact: signs come from counting inversions of odd
//! generators, truncated even powers annihilate a term, and odd squares are
//! substituted recursively.  Coefficients are 64-bit integers, reduced to
//! least non-negative residues when the characteristic is a prime `p`; every
//! integral polynomial manipulated by this crate has tiny coefficients, and
//! all characteristic-0 arithmetic uses checked operations.

use std::collections::BTreeMap;

use crate::sym::{SymPoly, SymTerm};
use crate::{Error, GradedDims, Result};

/// A square prescription for an odd generator: a sum of
/// `(coefficient, [(even generator name, exponent), ...])` terms.
pub type SquareExpr = Vec<(i64, Vec<(String, u32)>)>;

/// Kind of a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenKind {
    /// Even polynomial generator truncated by `y^truncation = 0`.
    Even { truncation: u32 },
    /// Odd exterior generator; `square` may be non-empty only in
    /// characteristic 2 and may involve even generators only.
    Odd { square: SquareExpr },
}

/// Input description of a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
    pub kind: GenKind,
}

impl GeneratorSpec {
    pub fn even(name: impl Into<String>, degree: u32, truncation: u32) -> Self {
        GeneratorSpec {
            name: name.into(),
            degree,
            kind: GenKind::Even { truncation },
        }
    }

    pub fn odd(name: impl Into<String>, degree: u32) -> Self {
        GeneratorSpec {
            name: name.into(),
            degree,
            kind: GenKind::Odd { square: Vec::new() },
        }
    }

    pub fn odd_with_square(name: impl Into<String>, degree: u32, square: SquareExpr) -> Self {
        GeneratorSpec {
            name: name.into(),
            degree,
            kind: GenKind::Odd { square },
        }
    }
}

/// A resolved generator of a constructed algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    /// `0` marks an odd (exterior) generator; otherwise the even truncation.
    pub truncation: u32,
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.truncation == 0
    }

    /// Largest admissible exponent.
    fn max_exp(&self) -> u32 {
        if self.is_odd() {
            1
        } else {
            self.truncation - 1
        }
    }
}

/// A monomial: exponents aligned with the algebra's generator order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

/// A sparse polynomial: monomial -> coefficient, zero coefficients omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    pub terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A graded-commutative algebra of the shape described in the module docs.
///
/// Generators are stored sorted by `(degree, declaration index)`; all
/// monomial exponent vectors refer to this canonical order, and bases within
/// a degree are listed in lexicographic exponent order.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    characteristic: u32,
    gens: Vec<Generator>,
    squares: Vec<Polynomial>,
    top_degree: u32,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl GradedAlgebra {
    /// Build an algebra from generator specifications.
    ///
    /// Validation: the characteristic is 0 or a prime; names are unique
    /// identifiers; even generators have positive even degree and truncation
    /// at least 2; odd generators have odd degree; a prescribed square is a
    /// homogeneous polynomial of twice the generator degree in even
    /// generators only, and is non-empty only in characteristic 2.
    pub fn new(characteristic: u32, specs: Vec<GeneratorSpec>) -> Result<Self> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::InvalidInput(format!(
                "characteristic must be 0 or a prime, got {characteristic}"
            )));
        }
        let mut names = std::collections::BTreeSet::new();
        for s in &specs {
            if !valid_name(&s.name) {
                return Err(Error::InvalidInput(format!(
                    "generator name {:?} is not an identifier",
                    s.name
                )));
            }
            if !names.insert(s.name.clone()) {
                return Err(Error::InvalidInput(format!(
                    "duplicate generator name {:?}",
                    s.name
                )));
            }
            match &s.kind {
                GenKind::Even { truncation } => {
                    if s.degree == 0 || s.degree % 2 != 0 {
                        return Err(Error::InvalidInput(format!(
                            "even generator {} must have positive even degree, got {}",
                            s.name, s.degree
                        )));
                    }
                    if *truncation < 2 {
                        return Err(Error::InvalidInput(format!(
                            "truncation of {} must be at least 2, got {truncation}",
                            s.name
                        )));
                    }
                }
                GenKind::Odd { square } => {
                    if s.degree % 2 == 0 {
                        return Err(Error::InvalidInput(format!(
                            "odd generator {} must have odd degree, got {}",
                            s.name, s.degree
                        )));
                    }
                    if !square.is_empty() && characteristic != 2 {
                        return Err(Error::InvalidInput(format!(
                            "odd generator {} has a prescribed square outside characteristic 2",
                            s.name
                        )));
                    }
                }
            }
        }

        // Canonical generator order: (degree, declaration index).
        let mut order: Vec<usize> = (0..specs.len()).collect();
        order.sort_by_key(|&i| (specs[i].degree, i));

        let gens: Vec<Generator> = order
            .iter()
            .map(|&i| Generator {
                name: specs[i].name.clone(),
                degree: specs[i].degree,
                truncation: match specs[i].kind {
                    GenKind::Even { truncation } => truncation,
                    GenKind::Odd { .. } => 0,
                },
            })
            .collect();
        let top_degree = gens.iter().map(|g| g.degree * g.max_exp()).sum();

        let mut alg = GradedAlgebra {
            characteristic,
            squares: vec![Polynomial::zero(); gens.len()],
            gens,
            top_degree,
        };

        // Resolve prescribed squares now that names have indices.
        for &i in &order {
            if let GenKind::Odd { square } = &specs[i].kind {
                if square.is_empty() {
                    continue;
                }
                let gi = alg.gen_index(&specs[i].name).unwrap();
                let mut poly = Polynomial::zero();
                for (coeff, factors) in square {
                    let mut exps = vec![0u32; alg.gens.len()];
                    for (name, e) in factors {
                        let j = alg.gen_index(name).ok_or_else(|| {
                            Error::InvalidInput(format!(
                                "square of {} mentions unknown generator {name}",
                                specs[i].name
                            ))
                        })?;
                        if alg.gens[j].is_odd() {
                            return Err(Error::InvalidInput(format!(
                                "square of {} must involve even generators only",
                                specs[i].name
                            )));
                        }
                        exps[j] += e;
                    }
                    alg.add_term(&mut poly, Monomial(exps), *coeff);
                }
                match alg.homogeneous_degree(&poly)? {
                    None => {}
                    Some(d) if d == 2 * specs[i].degree => {}
                    Some(d) => {
                        return Err(Error::InvalidInput(format!(
                            "square of {} has degree {d}, expected {}",
                            specs[i].name,
                            2 * specs[i].degree
                        )));
                    }
                }
                for mono in poly.terms.keys() {
                    if !alg.monomial_admissible(mono) {
                        return Err(Error::InvalidInput(format!(
                            "square of {} is not reduced below the truncations",
                            specs[i].name
                        )));
                    }
                }
                alg.squares[gi] = poly;
            }
        }
        Ok(alg)
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn square_of(&self, idx: usize) -> &Polynomial {
        &self.squares[idx]
    }

    /// Top non-vanishing degree: the degree of the product of all generators
    /// at maximal admissible exponents.
    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    /// Total dimension: product of truncations times 2^(number of odd gens).
    pub fn total_dim(&self) -> u64 {
        self.gens
            .iter()
            .map(|g| (g.max_exp() + 1) as u64)
            .product()
    }

    fn monomial_admissible(&self, m: &Monomial) -> bool {
        m.0.len() == self.gens.len()
            && m.0
                .iter()
                .zip(&self.gens)
                .all(|(&e, g)| e <= g.max_exp())
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.0.iter()
            .zip(&self.gens)
            .map(|(&e, g)| e * g.degree)
            .sum()
    }

    fn reduce_coeff(&self, c: i64) -> i64 {
        if self.characteristic == 0 {
            c
        } else {
            c.rem_euclid(self.characteristic as i64)
        }
    }

    fn add_term(&self, poly: &mut Polynomial, m: Monomial, c: i64) {
        let c = self.reduce_coeff(c);
        if c == 0 {
            return;
        }
        let cur = poly.terms.get(&m).copied().unwrap_or(0);
        let v = self.reduce_coeff(
            cur.checked_add(c)
                .expect("coefficient overflow in characteristic 0"),
        );
        if v == 0 {
            poly.terms.remove(&m);
        } else {
            poly.terms.insert(m, v);
        }
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let mut p = Polynomial::zero();
        self.add_term(&mut p, Monomial(vec![0; self.gens.len()]), c);
        p
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    /// The generator with the given index, as a polynomial.
    pub fn gen_poly(&self, idx: usize) -> Polynomial {
        let mut exps = vec![0u32; self.gens.len()];
        exps[idx] = 1;
        self.monomial_poly(Monomial(exps), 1)
    }

    pub fn monomial_poly(&self, m: Monomial, c: i64) -> Polynomial {
        assert!(self.monomial_admissible(&m), "inadmissible monomial");
        let mut p = Polynomial::zero();
        self.add_term(&mut p, m, c);
        p
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut out = a.clone();
        for (m, &c) in &b.terms {
            self.add_term(&mut out, m.clone(), c);
        }
        out
    }

    pub fn scale(&self, a: &Polynomial, c: i64) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, &v) in &a.terms {
            self.add_term(
                &mut out,
                m.clone(),
                v.checked_mul(c).expect("coefficient overflow"),
            );
        }
        out
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add(a, &self.scale(b, -1))
    }

    /// Product of two monomials as a polynomial (squares of odd generators
    /// may expand into several terms, or annihilate via truncation).
    fn mul_monomials(&self, a: &Monomial, b: &Monomial, c: i64) -> Polynomial {
        // Koszul sign: each odd generator of `b` moves past every odd
        // generator of `a` with a *larger* index.
        let mut sign = 1i64;
        if self.characteristic != 2 {
            let mut inversions = 0u32;
            for (i, g) in self.gens.iter().enumerate() {
                if !g.is_odd() || a.0[i] == 0 {
                    continue;
                }
                for (j, h) in self.gens.iter().enumerate().take(i) {
                    if h.is_odd() && b.0[j] == 1 {
                        inversions += 1;
                    }
                }
            }
            if inversions % 2 == 1 {
                sign = -1;
            }
        }

        let mut exps = vec![0u32; self.gens.len()];
        let mut squared = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            let e = a.0[i] + b.0[i];
            if g.is_odd() {
                match e {
                    0 | 1 => exps[i] = e,
                    2 => squared.push(i),
                    _ => unreachable!("odd exponent above 2"),
                }
            } else {
                if e >= g.truncation {
                    return Polynomial::zero();
                }
                exps[i] = e;
            }
        }

        let mut out = self.monomial_poly(Monomial(exps), sign * c);
        // Substitute prescribed squares (polynomials in even generators, so
        // the recursion cannot re-enter this branch).
        for &i in &squared {
            if self.squares[i].is_zero() {
                return Polynomial::zero();
            }
            let sq = self.squares[i].clone();
            out = self.mul(&out, &sq);
        }
        out
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, &ca) in &a.terms {
            for (mb, &cb) in &b.terms {
                let prod = self.mul_monomials(
                    ma,
                    mb,
                    ca.checked_mul(cb).expect("coefficient overflow"),
                );
                out = self.add(&out, &prod);
            }
        }
        out
    }

    pub fn pow(&self, a: &Polynomial, n: u32) -> Polynomial {
        let mut out = self.one();
        for _ in 0..n {
            out = self.mul(&out, a);
        }
        out
    }

    /// `Some(d)` when the polynomial is homogeneous of degree `d`, `None`
    /// when it is zero; an error when terms mix degrees.
    pub fn homogeneous_degree(&self, p: &Polynomial) -> Result<Option<u32>> {
        let mut deg = None;
        for m in p.terms.keys() {
            let d = self.monomial_degree(m);
            match deg {
                None => deg = Some(d),
                Some(prev) if prev == d => {}
                Some(prev) => {
                    return Err(Error::InvalidInput(format!(
                        "polynomial mixes degrees {prev} and {d}"
                    )));
                }
            }
        }
        Ok(deg)
    }

    /// Monomial basis of the given degree, in lexicographic exponent order.
    pub fn basis_in_degree(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.gens.len()];
        self.enumerate(0, degree, &mut exps, &mut out);
        out.sort();
        out
    }

    fn enumerate(&self, idx: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx == self.gens.len() {
            if remaining == 0 {
                out.push(Monomial(exps.clone()));
            }
            return;
        }
        let g = &self.gens[idx];
        let max = if g.degree == 0 {
            0
        } else {
            (remaining / g.degree).min(g.max_exp())
        };
        for e in 0..=max {
            exps[idx] = e;
            self.enumerate(idx + 1, remaining - e * g.degree, exps, out);
        }
        exps[idx] = 0;
    }

    /// Graded dimensions over degrees `0 ..= top_degree`.
    pub fn poincare(&self) -> GradedDims {
        let mut dims = GradedDims::new();
        for d in 0..=self.top_degree {
            let n = self.basis_in_degree(d).len() as u64;
            dims.add(d, n);
        }
        dims
    }

    /// Coordinates of a homogeneous polynomial in the basis of its degree.
    pub fn to_vector(&self, p: &Polynomial, degree: u32) -> Result<Vec<u32>> {
        let basis = self.basis_in_degree(degree);
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut v = vec![0u32; basis.len()];
        for (m, &c) in &p.terms {
            if self.monomial_degree(m) != degree {
                return Err(Error::InvalidInput(format!(
                    "term of degree {} in a vector of degree {degree}",
                    self.monomial_degree(m)
                )));
            }
            let i = index[m];
            v[i] = self.reduce_coeff(c) as u32;
        }
        Ok(v)
    }

    /// Convert to a symbolic polynomial over the generator names.
    pub fn to_sym(&self, p: &Polynomial) -> SymPoly {
        let terms = p
            .terms
            .iter()
            .map(|(m, &c)| SymTerm {
                coeff: c,
                factors: m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|&(_, &e)| e > 0)
                    .map(|(i, &e)| (self.gens[i].name.clone(), e))
                    .collect(),
            })
            .collect();
        SymPoly::from_terms(terms)
    }

    /// Evaluate a symbolic polynomial under a name -> element map.  Factors
    /// of a term are multiplied in the term's canonical (name-sorted) order,
    /// which fixes the sign when odd elements are substituted.
    pub fn eval_sym(
        &self,
        sym: &SymPoly,
        map: &BTreeMap<String, Polynomial>,
    ) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for term in sym.terms() {
            let mut acc = self.constant(term.coeff);
            for (name, exp) in &term.factors {
                let val = map.get(name).ok_or_else(|| {
                    Error::InvalidInput(format!("no value provided for symbol {name}"))
                })?;
                for _ in 0..*exp {
                    acc = self.mul(&acc, val);
                }
            }
            out = self.add(&out, &acc);
        }
        Ok(out)
    }

    /// Canonical rendering of a polynomial ("x6^2*z9 + x10*z5").
    pub fn render(&self, p: &Polynomial) -> String {
        let degrees: BTreeMap<String, u32> = self
            .gens
            .iter()
            .map(|g| (g.name.clone(), g.degree))
            .collect();
        self.to_sym(p).render(&degrees)
    }
}

/// A degree `+1` antiderivation on a [`GradedAlgebra`], determined by its
/// values on the odd generators (and vanishing on the even ones).
///
/// On a sorted monomial `g_1^{e_1} ... g_n^{e_n}` the value is the signed
/// Leibniz sum over the odd generators present, the sign of each summand
/// being the parity of the number of odd generators strictly before it.
#[derive(Debug, Clone)]
pub struct Antiderivation {
    /// Value on each generator; must be zero for even generators.
    values: Vec<Polynomial>,
}

impl Antiderivation {
    pub fn new(alg: &GradedAlgebra, values: Vec<(String, Polynomial)>) -> Result<Self> {
        let mut resolved = vec![Polynomial::zero(); alg.generators().len()];
        for (name, val) in values {
            let i = alg
                .gen_index(&name)
                .ok_or_else(|| Error::InvalidInput(format!("unknown generator {name}")))?;
            if !alg.generators()[i].is_odd() && !val.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "antiderivation must vanish on even generator {name}"
                )));
            }
            match alg.homogeneous_degree(&val)? {
                None => {}
                Some(d) if d == alg.generators()[i].degree + 1 => {}
                Some(d) => {
                    return Err(Error::InvalidInput(format!(
                        "value on {name} has degree {d}, expected {}",
                        alg.generators()[i].degree + 1
                    )));
                }
            }
            resolved[i] = val;
        }
        Ok(Antiderivation { values: resolved })
    }

    pub fn value_on(&self, idx: usize) -> &Polynomial {
        &self.values[idx]
    }

    pub fn apply_monomial(&self, alg: &GradedAlgebra, m: &Monomial, c: i64) -> Polynomial {
        let mut out = Polynomial::zero();
        let mut odd_before = 0u32;
        for (i, g) in alg.generators().iter().enumerate() {
            if !g.is_odd() || m.0[i] == 0 {
                continue;
            }
            if !self.values[i].is_zero() {
                let sign = if odd_before % 2 == 0 { 1 } else { -1 };
                let mut rest = m.clone();
                rest.0[i] = 0;
                let rest_poly = alg.monomial_poly(rest, c * sign);
                // Even-valued differential target commutes with everything,
                // so the order of the product does not matter.
                out = alg.add(&out, &alg.mul(&rest_poly, &self.values[i]));
            }
            odd_before += 1;
        }
        out
    }

    pub fn apply(&self, alg: &GradedAlgebra, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, &c) in &p.terms {
            out = alg.add(&out, &self.apply_monomial(alg, m, c));
        }
        out
    }
}
