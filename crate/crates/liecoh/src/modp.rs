//! The mod p cohomology model of a group and its Bockstein differential.
//!
//! For a supported group `G` and prime `p`, the model is
//!
//! `H*(G; F_p) = F_p[x_t] / (x_t^{r_t})  (x)  exterior(z_{m-1})`
//!
//! where `t` runs over the `p`-torsion degrees (`d1`) and `m` over the full
//! degree partition (`d1` and `d2`); each `t` in `d1` contributes both the
//! truncated even class `x_t` and the odd class `z_{t-1}`.  In
//! characteristic 2 some odd classes have prescribed squares taken from the
//! embedded square table.
//!
//! The Bockstein `delta_p` sends `z_{t-1}` to `x_t` for `t` in `d1` and
//! kills every other generator; the model together with `delta_p` is a
//! cochain complex, and both its cohomology (the Bockstein cohomology) and
//! the image of `delta_p` (the reduction of the `p`-torsion ideal) are
//! computed degreewise by exact linear algebra, with closed-form
//! cross-checks.

use crate::algebra::{Antiderivation, GeneratorSpec, GradedAlgebra, Polynomial, SquareExpr};
use crate::koszul::{KoszulComplex, KoszulPair, TruncatedKoszul};
use crate::liedata::{self, DegreePartition, LieGroup, LieGroupData};
use crate::present::{PresGenerator, RingPresentation};
use crate::{Error, GradedDims, Result};

/// The mod p model of a group.
#[derive(Debug, Clone)]
pub struct ModPModel {
    pub data: LieGroupData,
    pub p: u32,
    pub partition: DegreePartition,
    /// The full model with the Bockstein as differential.
    pub complex: KoszulComplex,
}

fn square_expr(square: &[(u32, u32)]) -> SquareExpr {
    if square.is_empty() {
        Vec::new()
    } else {
        vec![(
            1,
            square
                .iter()
                .map(|&(t, e)| (format!("x{t}"), e))
                .collect(),
        )]
    }
}

/// Build the mod `p` model of `G`.
///
/// Fails when the degree partition gate rejects `(G, p)` or when a model
/// invariant (top degree = dim G, Poincaré duality, `delta_p^2 = 0`) fails.
pub fn build_model(group: LieGroup, p: u32) -> Result<ModPModel> {
    let data = liedata::group_data(group)?;
    let partition = liedata::degree_partition(&data, p)?;
    let squares = liedata::zeta_square_table(&data, p);

    let mut specs = Vec::new();
    let mut values = Vec::new();
    for &t in &partition.d1 {
        let r = liedata::cup_length(&data, t).expect("torsion degree has a cup length");
        specs.push(GeneratorSpec::even(format!("x{t}"), t, r));
        let sq = squares.get(&(t - 1)).map(|s| square_expr(s)).unwrap_or_default();
        specs.push(GeneratorSpec::odd_with_square(format!("z{}", t - 1), t - 1, sq));
        values.push((format!("z{}", t - 1), t));
    }
    for &m in &partition.d2 {
        let sq = squares.get(&(m - 1)).map(|s| square_expr(s)).unwrap_or_default();
        specs.push(GeneratorSpec::odd_with_square(format!("z{}", m - 1), m - 1, sq));
    }
    let algebra = GradedAlgebra::new(p, specs)?;
    let diff_values = values
        .into_iter()
        .map(|(z, t)| {
            let xi = algebra.gen_index(&format!("x{t}")).unwrap();
            (z, algebra.gen_poly(xi))
        })
        .collect();
    let diff = Antiderivation::new(&algebra, diff_values)?;
    let complex = KoszulComplex::new(algebra, diff)?;

    let model = ModPModel {
        data,
        p,
        partition,
        complex,
    };
    model.check_structure()?;
    Ok(model)
}

impl ModPModel {
    pub fn algebra(&self) -> &GradedAlgebra {
        &self.complex.algebra
    }

    fn check_structure(&self) -> Result<()> {
        let ctx = format!("build_model({}, {})", self.data.group, self.p);
        let top = self.algebra().top_degree();
        if top != self.data.dim {
            return Err(Error::invariant(
                &ctx,
                format!("top degree {top} differs from dim {}", self.data.dim),
            ));
        }
        let dims = self.algebra().poincare();
        if !dims.is_palindromic(top) {
            return Err(Error::invariant(&ctx, "model dimensions are not palindromic"));
        }
        if dims.get(0) != 1 {
            return Err(Error::invariant(&ctx, "degree 0 is not one-dimensional"));
        }
        Ok(())
    }

    /// Graded dimensions of `H*(G; F_p)`.
    pub fn dims(&self) -> GradedDims {
        self.algebra().poincare()
    }

    /// Apply the Bockstein to an element of the model.
    pub fn bockstein_apply(&self, p: &Polynomial) -> Polynomial {
        self.complex.diff.apply(self.algebra(), p)
    }

    /// Graded dimensions of the Bockstein cohomology `ker / im`.
    pub fn bockstein_cohomology_dims(&self) -> Result<GradedDims> {
        self.complex.cohomology_dims_bruteforce()
    }

    /// Graded dimensions of the image of the Bockstein.
    pub fn im_delta_dims(&self) -> Result<GradedDims> {
        self.complex.image_dims_bruteforce()
    }

    /// The truncated Koszul sub-complex on the pairs `(x_t, z_{t-1})`,
    /// `t` in `d1`; `None` when there is no `p`-torsion.
    pub fn koszul_part(&self) -> Result<Option<TruncatedKoszul>> {
        if self.partition.d1.is_empty() {
            return Ok(None);
        }
        let squares = liedata::zeta_square_table(&self.data, self.p);
        let pairs = self
            .partition
            .d1
            .iter()
            .map(|&t| KoszulPair {
                y_name: format!("x{t}"),
                theta_name: format!("z{}", t - 1),
                degree: t,
                truncation: liedata::cup_length(&self.data, t).unwrap(),
                theta_square: squares.get(&(t - 1)).map(|s| square_expr(s)).unwrap_or_default(),
                label: Some(t.to_string()),
            })
            .collect();
        Ok(Some(TruncatedKoszul::new(self.p, pairs)?))
    }

    /// Exterior factor contributed by the `d2` generators: graded
    /// dimensions of `exterior(z_{m-1})`, `m` in `d2`.
    pub fn d2_exterior_dims(&self) -> GradedDims {
        let mut dims = GradedDims::new();
        dims.add(0, 1);
        for &m in &self.partition.d2 {
            let mut factor = GradedDims::new();
            factor.add(0, 1);
            factor.add(m - 1, 1);
            dims = dims.tensor(&factor);
        }
        dims
    }

    /// Closed-form dimensions of the image of the Bockstein: the Koszul
    /// image dimensions tensored with the `d2` exterior factor.
    pub fn im_delta_dims_closed_form(&self) -> Result<GradedDims> {
        match self.koszul_part()? {
            None => Ok(GradedDims::new()),
            Some(k) => Ok(k.image_dims_closed_form()?.tensor(&self.d2_exterior_dims())),
        }
    }

    /// Finite presentation of the image of the Bockstein: the structured
    /// Koszul presentation tensored with the exterior generators `z_{m-1}`,
    /// `m` in `d2` (whose square relations come from the square table).
    ///
    /// The graded dimensions of the presentation are verified against the
    /// brute-force image dimensions.
    pub fn im_delta_presentation(&self) -> Result<RingPresentation> {
        let ctx = format!("im_delta_presentation({}, {})", self.data.group, self.p);
        let Some(k) = self.koszul_part()? else {
            return Ok(RingPresentation {
                coefficient: self.p,
                generators: Vec::new(),
                relations: Vec::new(),
                graded_dims: Some(GradedDims::new()),
            });
        };
        let mut pres = k.image_presentation()?;
        let squares = liedata::zeta_square_table(&self.data, self.p);
        let degrees = {
            let mut d = pres.degree_map();
            for &m in &self.partition.d2 {
                d.insert(format!("z{}", m - 1), m - 1);
            }
            d
        };
        for &m in &self.partition.d2 {
            let name = format!("z{}", m - 1);
            pres.generators.push(PresGenerator {
                name: name.clone(),
                degree: m - 1,
                additive_order: self.p,
            });
            let mut rel = crate::sym::SymPoly::term(1, vec![(&name, 2)]);
            if let Some(sq) = squares.get(&(m - 1)) {
                let factors: Vec<(String, u32)> =
                    sq.iter().map(|&(t, e)| (format!("x{t}"), e)).collect();
                let fs: Vec<(&str, u32)> = factors.iter().map(|(n, e)| (n.as_str(), *e)).collect();
                rel = rel.plus(&crate::sym::SymPoly::term(-1, fs));
            }
            pres.relations.push(rel.reduced_mod(self.p).render(&degrees));
        }
        let dims = k
            .image_dims_closed_form()?
            .tensor(&self.d2_exterior_dims());
        let brute = self.im_delta_dims()?;
        if dims != brute {
            return Err(Error::invariant(
                &ctx,
                format!("presentation dims {dims:?} differ from brute force {brute:?}"),
            ));
        }
        pres.graded_dims = Some(dims);
        pres.validate()?;
        Ok(pres)
    }

    /// Presentation of the full ring `H*(G; F_p)`: truncated polynomial
    /// generators `x_t` and exterior generators `z_{m-1}`, with the
    /// truncation and square relations.
    pub fn ring_presentation(&self) -> Result<RingPresentation> {
        let squares = liedata::zeta_square_table(&self.data, self.p);
        let mut generators = Vec::new();
        let mut relations = Vec::new();
        let mut degrees = std::collections::BTreeMap::new();
        for &t in &self.partition.d1 {
            degrees.insert(format!("x{t}"), t);
        }
        let all_z: Vec<u32> = self
            .partition
            .d1
            .iter()
            .chain(self.partition.d2.iter())
            .map(|&m| m - 1)
            .collect();
        for &d in &all_z {
            degrees.insert(format!("z{d}"), d);
        }
        for &t in &self.partition.d1 {
            let r = liedata::cup_length(&self.data, t).unwrap();
            generators.push(PresGenerator {
                name: format!("x{t}"),
                degree: t,
                additive_order: self.p,
            });
            relations
                .push(crate::sym::SymPoly::term(1, vec![(&format!("x{t}"), r)]).render(&degrees));
        }
        let mut z_sorted = all_z.clone();
        z_sorted.sort();
        for d in z_sorted {
            let name = format!("z{d}");
            generators.push(PresGenerator {
                name: name.clone(),
                degree: d,
                additive_order: self.p,
            });
            let mut rel = crate::sym::SymPoly::term(1, vec![(&name, 2)]);
            if let Some(sq) = squares.get(&d) {
                let factors: Vec<(String, u32)> =
                    sq.iter().map(|&(t, e)| (format!("x{t}"), e)).collect();
                let fs: Vec<(&str, u32)> = factors.iter().map(|(n, e)| (n.as_str(), *e)).collect();
                rel = rel.plus(&crate::sym::SymPoly::term(-1, fs));
            }
            relations.push(rel.reduced_mod(self.p).render(&degrees));
        }
        let pres = RingPresentation {
            coefficient: self.p,
            generators,
            relations,
            graded_dims: Some(self.dims()),
        };
        pres.validate()?;
        Ok(pres)
    }

    /// Degreewise Euler-characteristic style consistency of the model with
    /// its Bockstein cohomology and coboundary image:
    /// `dim H^d = dim H_beta^d + im^d + im^{d+1}` for every `d`.
    pub fn verify_poincare_split(&self) -> Result<()> {
        let ctx = format!("verify_poincare_split({}, {})", self.data.group, self.p);
        let h = self.dims();
        let hb = self.bockstein_cohomology_dims()?;
        let im = self.im_delta_dims()?;
        for d in 0..=self.data.dim + 1 {
            let lhs = h.get(d);
            let rhs = hb.get(d) + im.get(d) + im.get(d + 1);
            if lhs != rhs {
                return Err(Error::invariant(
                    &ctx,
                    format!("degree {d}: model dim {lhs} but split gives {rhs}"),
                ));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_mod_2_model() {
        let m = build_model(LieGroup::G2, 2).unwrap();
        let dims = m.dims();
        // One-dimensional exactly in {0, 3, 5, 6, 8, 9, 11, 14}.
        let expect: Vec<(u32, u64)> = [0, 3, 5, 6, 8, 9, 11, 14]
            .iter()
            .map(|&d| (d, 1))
            .collect();
        assert_eq!(dims.to_pairs(), expect);
        // z3^2 = x6.
        let alg = m.algebra();
        let z3 = alg.gen_poly(alg.gen_index("z3").unwrap());
        let x6 = alg.gen_poly(alg.gen_index("x6").unwrap());
        assert_eq!(alg.mul(&z3, &z3), x6);
    }

    #[test]
    fn g2_mod_2_bockstein() {
        let m = build_model(LieGroup::G2, 2).unwrap();
        let hb = m.bockstein_cohomology_dims().unwrap();
        assert_eq!(hb.to_pairs(), vec![(0, 1), (3, 1), (11, 1), (14, 1)]);
        assert_eq!(hb.total(), 1 << m.data.rank);
        let im = m.im_delta_dims().unwrap();
        assert_eq!(im.to_pairs(), vec![(6, 1), (9, 1)]);
        assert_eq!(im, m.im_delta_dims_closed_form().unwrap());
        m.verify_poincare_split().unwrap();
    }

    #[test]
    fn g2_mod_3_is_torsion_free() {
        let m = build_model(LieGroup::G2, 3).unwrap();
        assert!(m.partition.d1.is_empty());
        // Exterior on degrees 3 and 11.
        assert_eq!(m.dims().to_pairs(), vec![(0, 1), (3, 1), (11, 1), (14, 1)]);
        assert_eq!(m.im_delta_dims().unwrap(), GradedDims::new());
        assert_eq!(m.bockstein_cohomology_dims().unwrap(), m.dims());
    }

    #[test]
    fn f4_mod_2_presentation() {
        let m = build_model(LieGroup::F4, 2).unwrap();
        let pres = m.im_delta_presentation().unwrap();
        assert!(pres.relations.contains(&"x6^2".to_string()));
        // z3 (from m = 4 in d2) has square x6.
        assert!(pres.relations.contains(&"z3^2 + x6".to_string()));
        assert_eq!(m.dims().total(), 32);
        assert_eq!(m.algebra().top_degree(), 52);
    }

    #[test]
    fn e8_mod_3_and_5() {
        let m3 = build_model(LieGroup::E8, 3).unwrap();
        assert_eq!(m3.partition.d1, vec![8, 20]);
        assert_eq!(m3.dims().total(), 9 * 256);
        assert_eq!(
            m3.bockstein_cohomology_dims().unwrap().total(),
            1 << m3.data.rank
        );
        m3.verify_poincare_split().unwrap();
        assert_eq!(
            m3.im_delta_dims().unwrap(),
            m3.im_delta_dims_closed_form().unwrap()
        );

        let m5 = build_model(LieGroup::E8, 5).unwrap();
        assert_eq!(m5.partition.d1, vec![12]);
        assert_eq!(m5.dims().total(), 5 * 256);
        m5.verify_poincare_split().unwrap();
    }

    #[test]
    fn su_and_sp_models_are_exterior() {
        let m = build_model(LieGroup::SU(4), 2).unwrap();
        // exterior(z3, z5, z7): dims 8, top degree 15.
        assert_eq!(m.dims().total(), 8);
        assert_eq!(m.algebra().top_degree(), 15);
        assert_eq!(m.im_delta_dims().unwrap(), GradedDims::new());
        let m = build_model(LieGroup::Sp(3), 7).unwrap();
        assert_eq!(m.dims().total(), 8);
        assert_eq!(m.algebra().top_degree(), 21);
    }
}
