//! Property-based tests for the algebra core and the Koszul machinery.

use proptest::prelude::*;

use liecoh::algebra::{GeneratorSpec, GradedAlgebra, Polynomial};
use liecoh::koszul;

/// Strategy for a small truncated complex shape.
fn shape_strategy() -> impl Strategy<Value = (u32, Vec<(u32, u32)>)> {
    let prime = prop_oneof![Just(2u32), Just(3), Just(5)];
    let pair = (prop_oneof![Just(2u32), Just(4), Just(6)], 2..=3u32);
    (prime, proptest::collection::vec(pair, 1..=3))
}

/// Random homogeneous-free element: a signed combination of basis
/// monomials drawn from the whole algebra.
fn random_element(alg: &GradedAlgebra, picks: &[(u32, i64)]) -> Polynomial {
    let top = alg.top_degree();
    let mut out = Polynomial::zero();
    for &(seed, coeff) in picks {
        let degree = seed % (top + 1);
        let basis = alg.basis_in_degree(degree);
        if basis.is_empty() {
            continue;
        }
        let m = basis[(seed as usize / 7) % basis.len()].clone();
        out = alg.add(&out, &alg.monomial_poly(m, coeff));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(
        (p, shape) in shape_strategy(),
        picks in proptest::collection::vec((0u32..60, -2i64..=2), 1..4),
    ) {
        let k = koszul::truncated(p, &shape, &[]).unwrap();
        let alg = k.algebra();
        let a = random_element(alg, &picks);
        let b = random_element(alg, &picks.iter().map(|&(s, c)| (s.wrapping_add(13), c)).collect::<Vec<_>>());
        let c = random_element(alg, &picks.iter().map(|&(s, c)| (s.wrapping_add(29), c)).collect::<Vec<_>>());
        let lhs = alg.mul(&alg.mul(&a, &b), &c);
        let rhs = alg.mul(&a, &alg.mul(&b, &c));
        prop_assert!(alg.sub(&lhs, &rhs).is_zero());
    }

    #[test]
    fn graded_commutativity_on_generators(
        (p, shape) in shape_strategy(),
    ) {
        let k = koszul::truncated(p, &shape, &[]).unwrap();
        let alg = k.algebra();
        let n = alg.generators().len();
        for i in 0..n {
            for j in 0..n {
                let a = alg.gen_poly(i);
                let b = alg.gen_poly(j);
                let ab = alg.mul(&a, &b);
                let ba = alg.mul(&b, &a);
                let both_odd = alg.generators()[i].is_odd() && alg.generators()[j].is_odd();
                let expected = if both_odd { alg.scale(&ba, -1) } else { ba };
                prop_assert!(alg.sub(&ab, &expected).is_zero(), "generators {i} and {j}");
            }
        }
    }

    #[test]
    fn differential_squares_to_zero_and_leibniz(
        (p, shape) in shape_strategy(),
        picks in proptest::collection::vec((0u32..60, -2i64..=2), 1..4),
    ) {
        let k = koszul::truncated(p, &shape, &[]).unwrap();
        let alg = k.algebra();
        let diff = &k.complex.diff;
        let a = random_element(alg, &picks);
        let dda = diff.apply(alg, &diff.apply(alg, &a));
        prop_assert!(dda.is_zero(), "differential does not square to zero");

        // Leibniz on homogeneous pieces: d(a*b) = d(a)*b + (-1)^|a| a*d(b).
        for da in 0..=alg.top_degree() {
            for (m, &c) in &a.terms {
                if alg.monomial_degree(m) != da {
                    continue;
                }
                let am = alg.monomial_poly(m.clone(), c);
                let b = random_element(alg, &picks.iter().map(|&(s, c)| (s.wrapping_add(17), c)).collect::<Vec<_>>());
                let lhs = diff.apply(alg, &alg.mul(&am, &b));
                let sign = if da % 2 == 0 { 1 } else { -1 };
                let rhs = alg.add(
                    &alg.mul(&diff.apply(alg, &am), &b),
                    &alg.scale(&alg.mul(&am, &diff.apply(alg, &b)), sign),
                );
                prop_assert!(alg.sub(&lhs, &rhs).is_zero(), "Leibniz fails in degree {da}");
            }
        }
    }

    #[test]
    fn poincare_series_is_palindromic_and_multiplicative(
        (p, shape) in shape_strategy(),
    ) {
        let k = koszul::truncated(p, &shape, &[]).unwrap();
        let alg = k.algebra();
        let dims = alg.poincare();
        prop_assert!(dims.is_palindromic(alg.top_degree()));

        // The series is the product over generators of each factor's series.
        let mut product = liecoh::GradedDims::new();
        product.add(0, 1);
        for g in alg.generators() {
            let factor: liecoh::GradedDims = if g.truncation == 0 {
                [(0u32, 1u64), (g.degree, 1)].into_iter().collect()
            } else {
                (0..g.truncation).map(|e| (e * g.degree, 1)).collect()
            };
            product = product.tensor(&factor);
        }
        prop_assert_eq!(dims, product);

        let total: u64 = alg
            .generators()
            .iter()
            .map(|g| if g.truncation == 0 { 2 } else { g.truncation as u64 })
            .product();
        prop_assert_eq!(alg.poincare().total(), total);
    }

    #[test]
    fn closed_form_matches_brute_force(
        (p, shape) in shape_strategy(),
    ) {
        let k = koszul::truncated(p, &shape, &[]).unwrap();
        let closed = k.closed_form_cohomology().unwrap().poincare();
        let brute = k.complex.cohomology_dims_bruteforce().unwrap();
        prop_assert_eq!(closed, brute);
    }
}

#[test]
fn odd_generators_square_to_zero_without_prescribed_square() {
    for p in [0u32, 2, 3, 5] {
        let alg = GradedAlgebra::new(
            p,
            vec![
                GeneratorSpec::even("y", 4, 3),
                GeneratorSpec::odd("z", 3),
            ],
        )
        .unwrap();
        let z = alg.gen_poly(alg.gen_index("z").unwrap());
        assert!(alg.mul(&z, &z).is_zero(), "char {p}");
    }
}
