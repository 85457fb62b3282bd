//! Integral cohomology invariants assembled from the mod p models.
//!
//! The integral cohomology of a supported group splits degreewise into a
//! free part (an exterior algebra on odd generators `rho_{2l-1}`) and
//! `p`-torsion ideals of exponent `p`, one per torsion prime.  This module
//! computes:
//!
//! * the image of the map induced on integral cohomology by the projection
//!   to the flag variety: `Z[x_t] / (p_t x_t, x_t^{r_t})` ([`chow_ring`]),
//! * the free exterior part with its square annotations ([`free_part`]),
//! * a finite presentation of each torsion ideal ([`torsion_presentation`])
//!   and its graded dimensions ([`torsion_dims`]), obtained structurally
//!   from the image of the Bockstein — no integral Smith normal form is
//!   ever computed,
//! * the multiplicative action of the free generators on the torsion ideal
//!   ([`action_relations`]),
//! * the degreewise table of cohomology groups ([`assemble`]), checked
//!   against the mod p models through the universal-coefficient identity
//!   `dim H^d(G; F_p) = free^d + m_p^d + m_p^{d+1}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{GeneratorSpec, GradedAlgebra, Polynomial};
use crate::liedata::{self, LieGroupData};
use crate::modp::{self, ModPModel};
use crate::present::{PresGenerator, RingPresentation};
use crate::sym::SymPoly;
use crate::{Error, GradedDims, Result};

/// Image of the induced map from the flag variety: generators `x_t` with
/// relations `p_t * x_t` and `x_t^{r_t}`, over the integers.
pub fn chow_ring(data: &LieGroupData) -> Result<RingPresentation> {
    let generators: Vec<PresGenerator> = data
        .special
        .iter()
        .map(|s| PresGenerator {
            name: format!("x{}", s.degree),
            degree: s.degree,
            additive_order: s.torsion_index,
        })
        .collect();
    let degrees: BTreeMap<String, u32> = generators
        .iter()
        .map(|g| (g.name.clone(), g.degree))
        .collect();
    let mut relations = Vec::new();
    for s in &data.special {
        relations.push(
            SymPoly::term(
                s.torsion_index as i64,
                vec![(&format!("x{}", s.degree), 1)],
            )
            .render(&degrees),
        );
    }
    for s in &data.special {
        relations.push(
            SymPoly::term(1, vec![(&format!("x{}", s.degree), s.cup_length)]).render(&degrees),
        );
    }
    let pres = RingPresentation {
        coefficient: 0,
        generators,
        relations,
        graded_dims: None,
    };
    pres.validate()?;
    Ok(pres)
}

/// The free exterior part of the integral cohomology.
#[derive(Debug, Clone)]
pub struct FreePart {
    /// Exterior algebra on `rho_{2l-1}`, `l` in `q(G)`, over `Z`
    /// (characteristic 0; ranks are read off its Poincaré series).
    pub algebra: GradedAlgebra,
    /// Non-vanishing squares `rho^2 = <monomial in the x_t>`, recorded as
    /// annotations: they land in 2-torsion and do not affect ranks.
    pub annotations: Vec<(String, SymPoly)>,
}

/// Names for the free generators; duplicate degrees (Spin(4m)) get suffixes.
fn rho_names(degrees: &[u32]) -> Vec<String> {
    let mut seen: BTreeMap<u32, u32> = BTreeMap::new();
    degrees
        .iter()
        .map(|&d| {
            let n = seen.entry(d).or_insert(0);
            *n += 1;
            if *n == 1 {
                format!("rho{d}")
            } else {
                format!("rho{d}_{n}")
            }
        })
        .collect()
}

/// Build the free part of `H*(G; Z)`.
pub fn free_part(data: &LieGroupData) -> Result<FreePart> {
    let degrees = data.free_degrees();
    let names = rho_names(&degrees);
    let specs = names
        .iter()
        .zip(&degrees)
        .map(|(n, &d)| GeneratorSpec::odd(n.clone(), d))
        .collect();
    let algebra = GradedAlgebra::new(0, specs)?;

    let mut annotations = Vec::new();
    for (rho_degree, square) in liedata::free_square_table(data) {
        // Each annotated square must be a 2-torsion element of the image of
        // the flag-variety map: all its factors carry torsion index 2.
        for &(t, _) in &square {
            let ok = data
                .special
                .iter()
                .any(|s| s.degree == t && s.torsion_index == 2);
            if !ok {
                return Err(Error::invariant(
                    format!("free_part({})", data.group),
                    format!("square of rho{rho_degree} involves x{t} which is not 2-torsion"),
                ));
            }
        }
        let factors: Vec<(String, u32)> =
            square.iter().map(|&(t, e)| (format!("x{t}"), e)).collect();
        let fs: Vec<(&str, u32)> = factors.iter().map(|(n, e)| (n.as_str(), *e)).collect();
        annotations.push((format!("rho{rho_degree}"), SymPoly::term(1, fs)));
    }
    Ok(FreePart {
        algebra,
        annotations,
    })
}

/// Graded dimensions of the `p`-torsion ideal, computed as the image of the
/// Bockstein in the mod `p` model.
pub fn torsion_dims(data: &LieGroupData, p: u32) -> Result<GradedDims> {
    let model = modp::build_model(data.group, p)?;
    model.im_delta_dims()
}

/// Finite presentation of the `p`-torsion ideal: the structured Koszul
/// presentation on `x_t`, `C_I` tensored with exterior generators
/// `rho_{m-1}` (`m` in `d2`), whose squares are the integral lifts from the
/// square table when they are `p`-torsion and zero otherwise.
pub fn torsion_presentation(data: &LieGroupData, p: u32) -> Result<RingPresentation> {
    let model = modp::build_model(data.group, p)?;
    let Some(k) = model.koszul_part()? else {
        return Ok(RingPresentation {
            coefficient: p,
            generators: Vec::new(),
            relations: Vec::new(),
            graded_dims: Some(GradedDims::new()),
        });
    };
    let mut pres = k.image_presentation()?;
    let free_squares = liedata::free_square_table(data);
    let degrees = {
        let mut d = pres.degree_map();
        for &m in &model.partition.d2 {
            d.insert(format!("rho{}", m - 1), m - 1);
        }
        d
    };
    for &m in &model.partition.d2 {
        let name = format!("rho{}", m - 1);
        pres.generators.push(PresGenerator {
            name: name.clone(),
            degree: m - 1,
            additive_order: p,
        });
        let mut rel = SymPoly::term(1, vec![(&name, 2)]);
        if let Some(square) = free_squares.get(&(m - 1)) {
            // The square survives into the p-torsion ideal only when all of
            // its factors are p-torsion classes.
            let survives = square.iter().all(|&(t, _)| {
                data.special
                    .iter()
                    .any(|s| s.degree == t && s.torsion_index == p)
            });
            if survives {
                let factors: Vec<(String, u32)> =
                    square.iter().map(|&(t, e)| (format!("x{t}"), e)).collect();
                let fs: Vec<(&str, u32)> = factors.iter().map(|(n, e)| (n.as_str(), *e)).collect();
                rel = rel.plus(&SymPoly::term(-1, fs));
            }
        }
        pres.relations.push(rel.reduced_mod(p).render(&degrees));
    }
    pres.graded_dims = Some(
        k.image_dims_closed_form()?
            .tensor(&model.d2_exterior_dims()),
    );
    pres.validate()?;
    Ok(pres)
}

/// One instance of the action of a free generator on the torsion ideal.
#[derive(Debug, Clone, Serialize)]
pub struct ActionRelation {
    /// Torsion degree `t` whose free partner acts.
    pub t: u32,
    /// The acted-on index set `K` (a nonempty subset of the torsion degrees).
    pub k_set: Vec<u32>,
    /// Degree `t * r_t - 1` of the acting generator `rho`.
    pub rho_degree: u32,
    /// Rendered sides of the relation `lhs = rhs`.
    pub lhs: String,
    pub rhs: String,
}

fn c_symbol(set: &[u32]) -> String {
    if set.len() == 1 {
        format!("x{}", set[0])
    } else {
        let mut s = String::from("C");
        for t in set {
            s.push('_');
            s.push_str(&t.to_string());
        }
        s
    }
}

/// Symbol degree map for the action relations of `(G, p)`.
fn action_degree_map(data: &LieGroupData, d1: &[u32]) -> BTreeMap<String, u32> {
    let mut degrees = BTreeMap::new();
    for &t in d1 {
        let r = liedata::cup_length(data, t).unwrap();
        degrees.insert(format!("x{t}"), t);
        degrees.insert(format!("rho{}", t * r - 1), t * r - 1);
    }
    // C symbols for every subset of size >= 2.
    let n = d1.len();
    for mask in 1u32..(1 << n) {
        let set: Vec<u32> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| d1[i]).collect();
        if set.len() >= 2 {
            let deg = set.iter().map(|&t| t - 1).sum::<u32>() + 1;
            degrees.insert(c_symbol(&set), deg);
        }
    }
    degrees
}

/// All action relations `rho_{t r - 1} * C_K = ...` for `(G, p)`: `t` runs
/// over the torsion degrees, `K` over nonempty subsets of them.  The right
/// hand side is `x_t^{r-1} C_{K + t}` when `t` is not in `K`; zero when `t`
/// is in `K` and `p` is odd; and `x_t^{r-1} (z_{t-1}^2)* C_{K - t}` in
/// characteristic 2, with `(z_{t-1}^2)*` the integral lift of the square.
pub fn action_relations(data: &LieGroupData, p: u32) -> Result<Vec<ActionRelation>> {
    let partition = liedata::degree_partition(data, p)?;
    let d1 = &partition.d1;
    let degrees = action_degree_map(data, d1);
    let squares = liedata::zeta_square_table(data, p);
    let mut out = Vec::new();
    let n = d1.len();
    for &t in d1 {
        let r = liedata::cup_length(data, t).unwrap();
        let rho = format!("rho{}", t * r - 1);
        for mask in 1u32..(1 << n) {
            let k_set: Vec<u32> = (0..n)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| d1[i])
                .collect();
            let lhs = SymPoly::term(1, vec![(&rho, 1), (&c_symbol(&k_set), 1)]);
            let rhs = if !k_set.contains(&t) {
                let mut joined = k_set.clone();
                joined.push(t);
                joined.sort();
                SymPoly::term(1, vec![(&format!("x{t}"), r - 1)])
                    .times(&SymPoly::term(1, vec![(&c_symbol(&joined), 1)]))
            } else if p != 2 {
                SymPoly::zero()
            } else {
                // Characteristic 2, t in K: the product contributes the
                // square of the degree t-1 exterior class.  When K = {t} the
                // leftover index set is empty and its C symbol is the image
                // of 1 under the Bockstein, i.e. zero.
                let removed: Vec<u32> = k_set.iter().copied().filter(|&u| u != t).collect();
                match squares.get(&(t - 1)) {
                    _ if removed.is_empty() => SymPoly::zero(),
                    None => SymPoly::zero(),
                    Some(square) => {
                        let mut poly = SymPoly::term(1, vec![(&format!("x{t}"), r - 1)]);
                        let factors: Vec<(String, u32)> =
                            square.iter().map(|&(u, e)| (format!("x{u}"), e)).collect();
                        let fs: Vec<(&str, u32)> =
                            factors.iter().map(|(nm, e)| (nm.as_str(), *e)).collect();
                        poly = poly.times(&SymPoly::term(1, fs));
                        if !removed.is_empty() {
                            poly = poly.times(&SymPoly::term(1, vec![(&c_symbol(&removed), 1)]));
                        }
                        poly
                    }
                }
            };
            out.push(ActionRelation {
                t,
                k_set,
                rho_degree: t * r - 1,
                lhs: lhs.render(&degrees),
                rhs: rhs.reduced_mod(p).render(&degrees),
            });
        }
    }
    Ok(out)
}

/// Report of a successful embedding verification.
#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingReport {
    pub group: String,
    pub p: u32,
    /// Number of presentation relations that evaluated to zero.
    pub relations_checked: usize,
    /// Number of action relations verified, with the unit scalar relating
    /// the two sides (always 1 in characteristic 2).
    pub action_relations_checked: usize,
    pub action_units: Vec<i64>,
}

/// Substitute the mod `p` reductions into every relation of the torsion
/// presentation and every action relation, and confirm they hold in the
/// mod `p` model.
///
/// The substitution sends `x_t` to the model class `x_t`, `C_I` to the
/// Bockstein of the product of the `z_{t-1}`, `t` in `I`, `rho_{m-1}` to
/// `z_{m-1}` for `m` in `d2`, and the acting generators `rho_{t r - 1}` to
/// `-x_t^{r-1} z_{t-1}`.  Presentation relations must vanish exactly; the
/// two sides of an action relation must agree up to a unit of `F_p`, which
/// is recorded in the report.
pub fn verify_presentation_embedding(data: &LieGroupData, p: u32) -> Result<EmbeddingReport> {
    let ctx = format!("verify_presentation_embedding({}, {p})", data.group);
    let model = modp::build_model(data.group, p)?;
    let alg = model.algebra();
    let pres = torsion_presentation(data, p)?;

    // Value map for every symbol that can occur.
    let mut map: BTreeMap<String, Polynomial> = BTreeMap::new();
    let d1 = model.partition.d1.clone();
    for &t in &d1 {
        map.insert(
            format!("x{t}"),
            alg.gen_poly(alg.gen_index(&format!("x{t}")).unwrap()),
        );
    }
    for &m in &model.partition.d2 {
        map.insert(
            format!("rho{}", m - 1),
            alg.gen_poly(alg.gen_index(&format!("z{}", m - 1)).unwrap()),
        );
    }
    let n = d1.len();
    for mask in 1u32..(1 << n) {
        let set: Vec<u32> = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| d1[i])
            .collect();
        if set.len() < 2 {
            continue;
        }
        let mut theta = alg.one();
        for &t in &set {
            theta = alg.mul(
                &theta,
                &alg.gen_poly(alg.gen_index(&format!("z{}", t - 1)).unwrap()),
            );
        }
        map.insert(c_symbol(&set), model.bockstein_apply(&theta));
    }
    for &t in &d1 {
        let r = liedata::cup_length(data, t).unwrap();
        let x = alg.gen_poly(alg.gen_index(&format!("x{t}")).unwrap());
        let z = alg.gen_poly(alg.gen_index(&format!("z{}", t - 1)).unwrap());
        let val = alg.scale(&alg.mul(&alg.pow(&x, r - 1), &z), -1);
        map.insert(format!("rho{}", t * r - 1), val);
    }

    // Every relation of the torsion presentation vanishes on substitution.
    let mut relations_checked = 0;
    for rel in &pres.relations {
        let poly = SymPoly::parse(rel)?;
        let value = alg.eval_sym(&poly, &map)?;
        if !value.is_zero() {
            return Err(Error::invariant(
                &ctx,
                format!("relation {rel} does not vanish under substitution"),
            ));
        }
        relations_checked += 1;
    }

    // Action relations hold up to a unit.
    let mut action_units = Vec::new();
    for ar in action_relations(data, p)? {
        let lhs = alg.eval_sym(&SymPoly::parse(&ar.lhs)?, &map)?;
        let rhs = alg.eval_sym(&SymPoly::parse(&ar.rhs)?, &map)?;
        let unit = match (lhs.is_zero(), rhs.is_zero()) {
            (true, true) => 1,
            (false, false) => {
                let mut found = None;
                for u in 1..p as i64 {
                    if alg.sub(&lhs, &alg.scale(&rhs, u)).is_zero() {
                        found = Some(u);
                        break;
                    }
                }
                found.ok_or_else(|| {
                    Error::invariant(
                        &ctx,
                        format!(
                            "action relation {} = {} fails: sides are not proportional",
                            ar.lhs, ar.rhs
                        ),
                    )
                })?
            }
            _ => {
                return Err(Error::invariant(
                    &ctx,
                    format!(
                        "action relation {} = {} fails: exactly one side vanishes",
                        ar.lhs, ar.rhs
                    ),
                ));
            }
        };
        action_units.push(unit);
    }

    // The presentation's graded dimensions agree with the brute-force
    // image of the Bockstein.
    let brute = model.im_delta_dims()?;
    if pres.graded_dims.as_ref() != Some(&brute) {
        return Err(Error::invariant(
            &ctx,
            "presentation dims differ from the brute-force torsion dims",
        ));
    }

    Ok(EmbeddingReport {
        group: data.group.to_string(),
        p,
        relations_checked,
        action_relations_checked: action_units.len(),
        action_units,
    })
}

/// Universal-coefficient consistency for one prime:
/// `dim H^d(G; F_p) = free^d + m_p^d + m_p^{d+1}` for all `d`.
pub fn uct_check(data: &LieGroupData, p: u32) -> Result<()> {
    let model = modp::build_model(data.group, p)?;
    uct_check_with(data, &model)
}

fn uct_check_with(data: &LieGroupData, model: &ModPModel) -> Result<()> {
    let ctx = format!("uct_check({}, {})", data.group, model.p);
    let free = free_part(data)?.algebra.poincare();
    let h = model.dims();
    let m = model.im_delta_dims()?;
    for d in 0..=data.dim + 1 {
        let lhs = h.get(d);
        let rhs = free.get(d) + m.get(d) + m.get(d + 1);
        if lhs != rhs {
            return Err(Error::invariant(
                &ctx,
                format!("degree {d}: mod-p dim {lhs} but free + torsion gives {rhs}"),
            ));
        }
    }
    Ok(())
}

/// One degree of the assembled table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeEntry {
    pub degree: u32,
    /// Rank of the free summand.
    pub free: u64,
    /// Number of `Z/p` summands per torsion prime.
    pub torsion: BTreeMap<u32, u64>,
}

/// The degreewise integral cohomology groups of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyGroupTable {
    pub group: String,
    pub dim: u32,
    pub entries: Vec<DegreeEntry>,
}

/// Assemble the degreewise cohomology table from the free part and the
/// torsion ideals, running the universal-coefficient check for every
/// torsion prime along the way.
pub fn assemble(data: &LieGroupData) -> Result<CohomologyGroupTable> {
    let ctx = format!("assemble({})", data.group);
    let free = free_part(data)?.algebra.poincare();
    let mut primes: Vec<u32> = data.special.iter().map(|s| s.torsion_index).collect();
    primes.sort();
    primes.dedup();

    let mut torsion: BTreeMap<u32, GradedDims> = BTreeMap::new();
    for &p in &primes {
        let model = modp::build_model(data.group, p)?;
        uct_check_with(data, &model)?;
        torsion.insert(p, model.im_delta_dims()?);
    }

    let mut entries = Vec::new();
    for d in 0..=data.dim {
        let mut t = BTreeMap::new();
        for (&p, dims) in &torsion {
            let n = dims.get(d);
            if n > 0 {
                t.insert(p, n);
            }
        }
        entries.push(DegreeEntry {
            degree: d,
            free: free.get(d),
            torsion: t,
        });
    }
    let first = &entries[0];
    if first.free != 1 || !first.torsion.is_empty() {
        return Err(Error::invariant(&ctx, "degree 0 is not Z"));
    }
    let last = &entries[data.dim as usize];
    if last.free != 1 || !last.torsion.is_empty() {
        return Err(Error::invariant(&ctx, "top degree is not Z"));
    }
    Ok(CohomologyGroupTable {
        group: data.group.to_string(),
        dim: data.dim,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liedata::LieGroup;

    fn data(g: LieGroup) -> LieGroupData {
        liedata::group_data(g).unwrap()
    }

    #[test]
    fn chow_ring_g2() {
        let pres = chow_ring(&data(LieGroup::G2)).unwrap();
        assert_eq!(pres.coefficient, 0);
        assert_eq!(pres.relations, vec!["2*x6", "x6^2"]);
    }

    #[test]
    fn free_part_g2() {
        let fp = free_part(&data(LieGroup::G2)).unwrap();
        assert_eq!(
            fp.algebra.poincare().to_pairs(),
            vec![(0, 1), (3, 1), (11, 1), (14, 1)]
        );
        assert_eq!(fp.annotations.len(), 1);
        assert_eq!(fp.annotations[0].0, "rho3");
    }

    #[test]
    fn torsion_g2() {
        let d = data(LieGroup::G2);
        assert_eq!(torsion_dims(&d, 2).unwrap().to_pairs(), vec![(6, 1), (9, 1)]);
        assert_eq!(torsion_dims(&d, 3).unwrap(), GradedDims::new());
        let pres = torsion_presentation(&d, 2).unwrap();
        assert!(pres.relations.contains(&"x6^2".to_string()));
        // rho3 squares to x6 inside the 2-torsion ideal.
        assert!(pres.relations.contains(&"rho3^2 + x6".to_string()));
    }

    #[test]
    fn assemble_g2() {
        let table = assemble(&data(LieGroup::G2)).unwrap();
        let nonzero: Vec<(u32, u64, Vec<(u32, u64)>)> = table
            .entries
            .iter()
            .filter(|e| e.free > 0 || !e.torsion.is_empty())
            .map(|e| {
                (
                    e.degree,
                    e.free,
                    e.torsion.iter().map(|(&p, &n)| (p, n)).collect(),
                )
            })
            .collect();
        assert_eq!(
            nonzero,
            vec![
                (0, 1, vec![]),
                (3, 1, vec![]),
                (6, 0, vec![(2, 1)]),
                (9, 0, vec![(2, 1)]),
                (11, 1, vec![]),
                (14, 1, vec![]),
            ]
        );
    }

    #[test]
    fn embedding_g2_and_f4() {
        let rep = verify_presentation_embedding(&data(LieGroup::G2), 2).unwrap();
        assert!(rep.relations_checked > 0);
        assert_eq!(rep.action_relations_checked, 1);
        let rep = verify_presentation_embedding(&data(LieGroup::F4), 3).unwrap();
        assert!(rep.relations_checked > 0);
    }

    #[test]
    fn su_sp_torsion_free() {
        for g in [LieGroup::SU(4), LieGroup::Sp(2)] {
            let table = assemble(&data(g)).unwrap();
            assert!(table.entries.iter().all(|e| e.torsion.is_empty()));
        }
    }
}
