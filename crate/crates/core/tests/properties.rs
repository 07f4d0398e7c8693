//! Property tests for the algebra layer: ring axioms, order laws, the
//! mod-p homomorphism, parser round-trips, and determinism of the reduced
//! basis under generator permutations.

use proptest::prelude::*;
use std::sync::Arc;

use flatcert_core::groebner::{normal_form, normal_form_with_quotients, s_polynomial};
use flatcert_core::monomial::{monomials_of_degree, Monomial};
use flatcert_core::*;

fn q() -> CoefficientDomain {
    CoefficientDomain::Rationals
}

fn table3() -> Arc<VariableTable> {
    VariableTable::of(&["x", "y", "z"])
}

/// Random sparse polynomial of total degree <= 3 over three variables.
fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    poly_of_degree(3)
}

/// Low-degree variant for the tests that run full basis computations;
/// random cubic ideals can make a lexicographic basis explode.
fn small_poly_strategy() -> impl Strategy<Value = Polynomial> {
    poly_of_degree(2)
}

fn poly_of_degree(max_degree: u32) -> impl Strategy<Value = Polynomial> {
    let monos: Vec<_> = (0..=max_degree).flat_map(|d| monomials_of_degree(3, d)).collect();
    let count = monos.len();
    prop::collection::vec(-4i64..=4, count).prop_map(move |coeffs| {
        let table = table3();
        let terms: Vec<_> = coeffs
            .iter()
            .zip(&monos)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, m)| (q().from_i64(c), m.clone()))
            .collect();
        Polynomial::from_terms(terms, q(), table)
    })
}

proptest! {
    #[test]
    fn ring_axioms_hold_exactly(f in poly_strategy(), g in poly_strategy(), h in poly_strategy()) {
        // (f + g) h = f h + g h
        let lhs = f.add(&g).unwrap().mul(&h).unwrap();
        let rhs = f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // f g = g f
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        // f - f = 0
        prop_assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn leading_term_is_multiplicative(f in poly_strategy(), g in poly_strategy()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let prod = f.mul(&g).unwrap();
        let (pc, pm) = prod.leading_term().unwrap();
        let (fc, fm) = f.leading_term().unwrap();
        let (gc, gm) = g.leading_term().unwrap();
        // Over Q there is no coefficient cancellation at the top monomial.
        prop_assert_eq!(pm.clone(), fm.mul(gm));
        prop_assert_eq!(pc.clone(), q().mul(fc, gc));
    }

    #[test]
    fn reduction_mod_two_is_a_homomorphism(f in poly_strategy(), g in poly_strategy()) {
        // All coefficients here are integers, so reduction is total.
        let fg = f.mul(&g).unwrap().reduce_mod_prime(2).unwrap();
        let f2 = f.reduce_mod_prime(2).unwrap();
        let g2 = g.reduce_mod_prime(2).unwrap();
        prop_assert_eq!(fg, f2.mul(&g2).unwrap());
        let sum = f.add(&g).unwrap().reduce_mod_prime(2).unwrap();
        prop_assert_eq!(sum, f2.add(&g2).unwrap());
    }

    #[test]
    fn parse_format_round_trip(f in poly_strategy()) {
        let text = format_poly(&f);
        let back = parse_poly(&text, &q(), f.table()).unwrap();
        prop_assert_eq!(back.clone(), f);
        // And the rendering is stable.
        prop_assert_eq!(format_poly(&back), text);
    }

    #[test]
    fn coprime_leading_terms_reduce_to_zero(tail in poly_strategy(), g_tail in poly_strategy()) {
        // Force coprime leading monomials: f led by x^4, g free of x.
        let table = table3();
        let x4 = Polynomial::from_terms(
            vec![(q().from_i64(1), Monomial::from_exponents(vec![4, 0, 0]))],
            q(),
            table.clone(),
        );
        let f = x4.add(&tail).unwrap();
        let g_terms: Vec<_> = g_tail
            .terms()
            .iter()
            .filter(|(_, m)| m.degree_of(0) == 0)
            .cloned()
            .collect();
        let g = Polynomial::from_terms(g_terms, q(), table);
        prop_assume!(!g.is_zero());
        let (_, fm) = f.leading_term().unwrap();
        let (_, gm) = g.leading_term().unwrap();
        prop_assert!(fm.gcd_is_one(gm));
        let s = s_polynomial(&f, &g).unwrap();
        let r = normal_form(&s, &[f.clone(), g.clone()]);
        prop_assert!(r.is_zero(), "first Buchberger criterion");
    }

    #[test]
    fn division_identity_is_exact(f in poly_strategy(), g in poly_strategy(), h in poly_strategy()) {
        prop_assume!(!g.is_zero() && !h.is_zero());
        let divisors = vec![g.clone(), h.clone()];
        let (quots, r) = normal_form_with_quotients(&f, &divisors);
        // f = q0 g + q1 h + r, exactly.
        let mut acc = r.clone();
        for (qi, di) in quots.iter().zip(&divisors) {
            acc = acc.add(&qi.mul(di).unwrap()).unwrap();
        }
        prop_assert_eq!(acc, f.clone());
        // No term of the remainder is divisible by a leading monomial.
        for (_, m) in r.terms() {
            for d in &divisors {
                prop_assert!(!d.leading_monomial().unwrap().divides(m));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn reduced_basis_is_permutation_invariant(
        polys in prop::collection::vec(small_poly_strategy(), 1..4),
        seed in 0u64..1000,
    ) {
        let nonzero: Vec<Polynomial> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!nonzero.is_empty());
        let table = table3();
        let cfg = EngineConfig::default();
        let forward = IdealPresentation::new(nonzero.clone(), q(), table.clone()).unwrap();
        let basis_a = forward.groebner_basis(&cfg).unwrap();
        // Deterministic shuffle driven by the seed.
        let mut permuted = nonzero.clone();
        let n = permuted.len();
        for i in 0..n {
            let j = ((seed as usize).wrapping_mul(31).wrapping_add(i * 17)) % n;
            permuted.swap(i, j);
        }
        let backward = IdealPresentation::new(permuted, q(), table).unwrap();
        let basis_b = backward.groebner_basis(&cfg).unwrap();
        prop_assert_eq!(basis_a, basis_b);
    }

    #[test]
    fn buchberger_output_passes_its_own_criterion(
        polys in prop::collection::vec(small_poly_strategy(), 1..4),
    ) {
        let nonzero: Vec<Polynomial> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!nonzero.is_empty());
        let table = table3();
        let pres = IdealPresentation::new(nonzero, q(), table).unwrap();
        let basis = pres.groebner_basis(&EngineConfig::default()).unwrap();
        prop_assert!(is_groebner_basis(basis.elements()));
        // Membership of the generators.
        for g in pres.generators() {
            prop_assert!(normal_form(g, basis.elements()).is_zero());
        }
        // Idempotence: recomputing from the basis returns the basis.
        let again = IdealPresentation::new(basis.elements().to_vec(), q(), pres.table().clone())
            .unwrap()
            .groebner_basis(&EngineConfig::default())
            .unwrap();
        prop_assert_eq!(again, basis);
    }
}
