//! Symbolic polynomials over named generators.
//!
//! Relations of ring presentations are rendered as canonical strings such as
//! `"x6^2*x18 + x10^3"` and must parse back to the same polynomial; this
//! module provides the polynomial type, the renderer and the parser.
//!
//! Rendering conventions:
//!
//! * factors of a term are sorted by `(degree, name)` and joined with `*`,
//!   exponent `1` left implicit (`x6`, `x6^2`);
//! * the coefficient prefixes the factors (`2*x6`), `1` left implicit;
//! * terms are sorted by `(total degree, factor list)` and joined with
//!   ` + ` (a negative coefficient switches the separator to ` - `);
//! * the zero polynomial renders as `"0"`.

use std::collections::BTreeMap;

use crate::{Error, Result};

/// One term: integer coefficient times a product of named generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymTerm {
    pub coeff: i64,
    pub factors: Vec<(String, u32)>,
}

/// A polynomial over named generators with integer coefficients.
///
/// Terms are stored keyed by their factor multiset, with zero coefficients
/// dropped; two polynomials are equal iff their normalised terms agree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<Vec<(String, u32)>, i64>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_terms(terms: Vec<SymTerm>) -> Self {
        let mut out = SymPoly::zero();
        for t in terms {
            out.add_term(t);
        }
        out
    }

    pub fn term(coeff: i64, factors: Vec<(&str, u32)>) -> Self {
        SymPoly::from_terms(vec![SymTerm {
            coeff,
            factors: factors
                .into_iter()
                .map(|(n, e)| (n.to_string(), e))
                .collect(),
        }])
    }

    pub fn add_term(&mut self, t: SymTerm) {
        if t.coeff == 0 {
            return;
        }
        // Merge repeated names and sort by name for the canonical key.
        let mut merged: BTreeMap<String, u32> = BTreeMap::new();
        for (name, e) in t.factors {
            if e > 0 {
                *merged.entry(name).or_insert(0) += e;
            }
        }
        let key: Vec<(String, u32)> = merged.into_iter().collect();
        let v = self.terms.get(&key).copied().unwrap_or(0) + t.coeff;
        if v == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = SymTerm> + '_ {
        self.terms.iter().map(|(k, &c)| SymTerm {
            coeff: c,
            factors: k.clone(),
        })
    }

    pub fn plus(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for t in other.terms() {
            out.add_term(t);
        }
        out
    }

    pub fn scaled(&self, c: i64) -> SymPoly {
        SymPoly::from_terms(
            self.terms()
                .map(|t| SymTerm {
                    coeff: t.coeff * c,
                    factors: t.factors,
                })
                .collect(),
        )
    }

    pub fn times(&self, other: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for a in self.terms() {
            for b in other.terms() {
                let mut factors = a.factors.clone();
                factors.extend(b.factors.iter().cloned());
                out.add_term(SymTerm {
                    coeff: a.coeff * b.coeff,
                    factors,
                });
            }
        }
        out
    }

    /// Reduce coefficients to least non-negative residues mod `p`.
    pub fn reduced_mod(&self, p: u32) -> SymPoly {
        SymPoly::from_terms(
            self.terms()
                .map(|t| SymTerm {
                    coeff: t.coeff.rem_euclid(p as i64),
                    factors: t.factors,
                })
                .collect(),
        )
    }

    fn term_degree(factors: &[(String, u32)], degrees: &BTreeMap<String, u32>) -> Result<u32> {
        let mut d = 0;
        for (name, e) in factors {
            let gd = degrees
                .get(name)
                .ok_or_else(|| Error::InvalidInput(format!("unknown generator {name}")))?;
            d += gd * e;
        }
        Ok(d)
    }

    /// `Some(d)` when homogeneous of degree `d`, `None` when zero.
    pub fn homogeneous_degree(&self, degrees: &BTreeMap<String, u32>) -> Result<Option<u32>> {
        let mut deg = None;
        for (factors, _) in &self.terms {
            let d = Self::term_degree(factors, degrees)?;
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

    /// Canonical rendering; see the module docs for the conventions.
    pub fn render(&self, degrees: &BTreeMap<String, u32>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut rendered: Vec<(u32, Vec<(u32, String, u32)>, i64)> = Vec::new();
        for (factors, &coeff) in &self.terms {
            let total = Self::term_degree(factors, degrees).unwrap_or(0);
            let mut fs: Vec<(u32, String, u32)> = factors
                .iter()
                .map(|(n, e)| (degrees.get(n).copied().unwrap_or(0), n.clone(), *e))
                .collect();
            fs.sort();
            rendered.push((total, fs, coeff));
        }
        rendered.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

        let mut out = String::new();
        for (i, (_, fs, coeff)) in rendered.iter().enumerate() {
            let mag = coeff.unsigned_abs();
            if i == 0 {
                if *coeff < 0 {
                    out.push('-');
                }
            } else if *coeff < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut parts: Vec<String> = Vec::new();
            if mag != 1 || fs.is_empty() {
                parts.push(mag.to_string());
            }
            for (_, name, e) in fs {
                if *e == 1 {
                    parts.push(name.clone());
                } else {
                    parts.push(format!("{name}^{e}"));
                }
            }
            out.push_str(&parts.join("*"));
        }
        out
    }

    /// Parse a polynomial rendered by [`SymPoly::render`].  Accepts the
    /// grammar `poly := ['-'] term (('+'|'-') term)*`,
    /// `term := (int '*')? factor ('*' factor)* | int`,
    /// `factor := ident ('^' int)?`.
    pub fn parse(input: &str) -> Result<SymPoly> {
        let mut parser = Parser {
            chars: input.chars().peekable(),
        };
        let poly = parser.poly()?;
        parser.skip_ws();
        if parser.chars.peek().is_some() {
            return Err(Error::InvalidInput(format!(
                "trailing input while parsing polynomial {input:?}"
            )));
        }
        Ok(poly)
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let mut s = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.chars.next().unwrap());
        }
        s.parse()
            .map_err(|_| Error::InvalidInput("expected an integer".into()))
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let mut s = String::new();
        match self.chars.peek() {
            Some(&c) if c.is_ascii_alphabetic() || c == '_' => {
                s.push(c);
                self.chars.next();
            }
            other => {
                return Err(Error::InvalidInput(format!(
                    "expected an identifier, found {other:?}"
                )));
            }
        }
        while matches!(self.chars.peek(), Some(&c) if c.is_ascii_alphanumeric() || c == '_') {
            s.push(self.chars.next().unwrap());
        }
        Ok(s)
    }

    fn factor(&mut self) -> Result<(String, u32)> {
        let name = self.ident()?;
        self.skip_ws();
        if let Some('^') = self.chars.peek() {
            self.chars.next();
            let e = self.integer()?;
            if e < 1 {
                return Err(Error::InvalidInput("exponent must be positive".into()));
            }
            Ok((name, e as u32))
        } else {
            Ok((name, 1))
        }
    }

    fn term(&mut self) -> Result<SymTerm> {
        self.skip_ws();
        let mut coeff = 1i64;
        let mut factors = Vec::new();
        let mut saw_any = false;
        if matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.integer()?;
            saw_any = true;
        }
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some(&c) if c.is_ascii_alphabetic() || c == '_' => {
                    factors.push(self.factor()?);
                    saw_any = true;
                }
                Some('*') => {
                    self.chars.next();
                }
                _ => break,
            }
        }
        if !saw_any {
            return Err(Error::InvalidInput("expected a term".into()));
        }
        Ok(SymTerm { coeff, factors })
    }

    fn poly(&mut self) -> Result<SymPoly> {
        let mut out = SymPoly::zero();
        self.skip_ws();
        let mut sign = 1i64;
        if let Some('-') = self.chars.peek() {
            self.chars.next();
            sign = -1;
        }
        if let Some('0') = self.chars.peek() {
            // Lone zero polynomial.
            let mut probe = self.chars.clone();
            probe.next();
            let rest: String = probe.collect();
            if rest.trim().is_empty() {
                self.chars.next();
                return Ok(SymPoly::zero());
            }
        }
        loop {
            let mut t = self.term()?;
            t.coeff *= sign;
            out.add_term(t);
            self.skip_ws();
            match self.chars.peek() {
                Some('+') => {
                    self.chars.next();
                    sign = 1;
                }
                Some('-') => {
                    self.chars.next();
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degs(pairs: &[(&str, u32)]) -> BTreeMap<String, u32> {
        pairs.iter().map(|&(n, d)| (n.to_string(), d)).collect()
    }

    #[test]
    fn render_and_parse_round_trip() {
        let d = degs(&[("x6", 6), ("x10", 10), ("z9", 9), ("z5", 5)]);
        let p = SymPoly::term(1, vec![("x6", 2), ("z9", 1)])
            .plus(&SymPoly::term(1, vec![("x10", 1), ("z5", 1)]));
        let s = p.render(&d);
        assert_eq!(s, "z5*x10 + x6^2*z9");
        assert_eq!(SymPoly::parse(&s).unwrap(), p);
    }

    #[test]
    fn render_orders_by_degree_then_lex() {
        let d = degs(&[("a", 2), ("b", 4)]);
        let p = SymPoly::term(1, vec![("b", 1)]).plus(&SymPoly::term(3, vec![("a", 1)]));
        assert_eq!(p.render(&d), "3*a + b");
    }

    #[test]
    fn negative_coefficients() {
        let d = degs(&[("x", 2)]);
        let p = SymPoly::term(-2, vec![("x", 1)]).plus(&SymPoly::term(1, vec![("x", 3)]));
        let s = p.render(&d);
        assert_eq!(s, "-2*x + x^3");
        assert_eq!(SymPoly::parse(&s).unwrap(), p);
    }

    #[test]
    fn zero_round_trip() {
        let d = degs(&[]);
        assert_eq!(SymPoly::zero().render(&d), "0");
        assert!(SymPoly::parse("0").unwrap().is_zero());
    }

    #[test]
    fn cancellation() {
        let p = SymPoly::term(1, vec![("x", 1)]).plus(&SymPoly::term(-1, vec![("x", 1)]));
        assert!(p.is_zero());
    }

    #[test]
    fn homogeneity() {
        let d = degs(&[("x", 2), ("y", 4)]);
        let p = SymPoly::term(1, vec![("x", 2)]).plus(&SymPoly::term(5, vec![("y", 1)]));
        assert_eq!(p.homogeneous_degree(&d).unwrap(), Some(4));
        let q = p.plus(&SymPoly::term(1, vec![("x", 1)]));
        assert!(q.homogeneous_degree(&d).is_err());
    }
}
