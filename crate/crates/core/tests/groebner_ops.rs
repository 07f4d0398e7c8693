//! Operation-level examples for the engine: normal forms, S-polynomials,
//! lifts, syzygies, and the elimination chain on toy ideals.

use std::sync::Arc;

use flatcert_core::groebner::{lift, lift_over_basis, normal_form, s_polynomial, syzygy_matrix};
use flatcert_core::ideal::chain_subset;
use flatcert_core::*;

fn q() -> CoefficientDomain {
    CoefficientDomain::Rationals
}

fn pres(table: &Arc<VariableTable>, gens: &[&str]) -> IdealPresentation {
    let polys: Vec<Polynomial> =
        gens.iter().map(|s| parse_poly(s, &q(), table).unwrap()).collect();
    IdealPresentation::new(polys, q(), table.clone()).unwrap()
}

#[test]
fn normal_form_examples() {
    let t = VariableTable::of(&["x", "y"]);
    let f = parse_poly("x^2", &q(), &t).unwrap();
    let g = parse_poly("x^2 - y", &q(), &t).unwrap();
    assert_eq!(normal_form(&f, &[g]), parse_poly("y", &q(), &t).unwrap());

    // Every element of a basis reduces to zero against it.
    let t3 = VariableTable::of(&["x", "y", "z"]);
    let basis = pres(&t3, &["x^2 - y", "x^3 - z"])
        .groebner_basis(&EngineConfig::default())
        .unwrap();
    for g in basis.elements() {
        assert!(normal_form(g, basis.elements()).is_zero());
    }
}

#[test]
fn s_polynomial_examples() {
    let t = VariableTable::of(&["x", "y", "z"]);
    let f = parse_poly("x^2 - y", &q(), &t).unwrap();
    assert!(s_polynomial(&f, &f).unwrap().is_zero());
    let g = parse_poly("x^3 - z", &q(), &t).unwrap();
    let s = s_polynomial(&f, &g).unwrap();
    assert_eq!(s, parse_poly("-x*y + z", &q(), &t).unwrap());
}

#[test]
fn buchberger_on_principal_and_criterion_counterexample() {
    let t = VariableTable::of(&["x", "y", "z"]);
    let single = pres(&t, &["x"]).groebner_basis(&EngineConfig::default()).unwrap();
    assert_eq!(single.elements(), &[parse_poly("x", &q(), &t).unwrap()]);

    // {x^2 - y, x^3 - z} alone misses x*y - z.
    let partial = vec![
        parse_poly("x^2 - y", &q(), &t).unwrap(),
        parse_poly("x^3 - z", &q(), &t).unwrap(),
    ];
    assert!(!is_groebner_basis(&partial));
    let coprime = vec![parse_poly("x", &q(), &t).unwrap(), parse_poly("y", &q(), &t).unwrap()];
    assert!(is_groebner_basis(&coprime));
}

#[test]
fn lift_examples() {
    let t = VariableTable::of(&["x", "y", "z"]);
    // lift({f}, {f}) is the identity row.
    let f = parse_poly("x^2 - y", &q(), &t).unwrap();
    let single = pres(&t, &["x^2 - y"]);
    let m = lift(&[f.clone()], &single).unwrap();
    assert!(m.verify(&[f.clone()], single.generators()));
    assert_eq!(m.rows.len(), 1);
    assert_eq!(m.rows[0][0], parse_poly("1", &q(), &t).unwrap());

    // y^3 - z^2 lies in the twisted-cubic ideal; the lift certifies it.
    let cubic = pres(&t, &["x^2 - y", "x^3 - z"]);
    let target = parse_poly("y^3 - z^2", &q(), &t).unwrap();
    let m = lift(&[target.clone()], &cubic).unwrap();
    assert!(m.verify(&[target], cubic.generators()));

    // Non-members are rejected with their index.
    let outsider = parse_poly("x + 1", &q(), &t).unwrap();
    match lift(&[outsider], &cubic) {
        Err(EngineError::NotAMember(0)) => {}
        other => panic!("expected a membership failure, got {other:?}"),
    }

    // In the other direction, generators lift over the basis.
    let basis = cubic.groebner_basis(&EngineConfig::default()).unwrap();
    let y = lift_over_basis(cubic.generators(), &basis).unwrap();
    assert!(y.verify(cubic.generators(), basis.elements()));
}

#[test]
fn syzygy_examples() {
    // Koszul: G = {x, y} has the single row (y, -x).
    let t = VariableTable::of(&["x", "y"]);
    let basis = pres(&t, &["x", "y"]).groebner_basis(&EngineConfig::default()).unwrap();
    let syz = syzygy_matrix(&basis);
    assert_eq!(syz.rows.len(), 1);
    assert!(syz.verify(basis.elements()));
    // Basis order is descending by leading monomial: (x, y).
    assert_eq!(syz.rows[0][0], parse_poly("y", &q(), &t).unwrap());
    assert_eq!(syz.rows[0][1], parse_poly("-x", &q(), &t).unwrap());

    // Twisted cubic: every emitted row annihilates the basis.
    let t3 = VariableTable::of(&["x", "y", "z"]);
    let basis = pres(&t3, &["x^2 - y", "x^3 - z"])
        .groebner_basis(&EngineConfig::default())
        .unwrap();
    let syz = syzygy_matrix(&basis);
    assert!(!syz.rows.is_empty());
    assert!(syz.verify(basis.elements()));
}

#[test]
fn quadratic_discriminant_matches_the_sum_of_squares_shape() {
    // (X^2)_66 of the 6x6 instance is quadratic in x16 with discriminant
    // proportional to the published sum of squares.
    let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
    let entry = spec.x_squared_entry(&q(), 6, 6);
    let x16 = spec.table().index_of("x16").unwrap();
    let disc = flatcert_core::chain::quadratic_discriminant(&entry, x16).unwrap();
    let published = parse_poly("m^2 + q^2 + t^2 + v^2 + z^2", &q(), spec.table()).unwrap();
    // disc = -4 * (published)
    assert_eq!(disc, published.scale(&q().from_i64(-4)));
}

/// Chain-method verdicts agree with independently known radicality on toy
/// bivariate ideals: certified implies radical, and the known-nonradical
/// inputs are never certified.
#[test]
fn chain_method_agrees_with_known_radicality() {
    let t = VariableTable::of(&["x", "y"]);
    let options = CertifyOptions::default();

    // Radical: intersections of distinct points and products of distinct
    // linear forms; the eliminant is squarefree and every quadratic step
    // has a unit discriminant.
    for gens in [
        vec!["x", "y"],
        vec!["x^2 - x", "y"],
        vec!["x^2 - y^2"],
        vec!["x - y", "y^2 - y"],
    ] {
        let cert = certify_presentation(&pres(&t, &gens), &options);
        assert!(
            matches!(cert.verdict, Verdict::RadicalAwayFrom { .. }),
            "expected certification for {gens:?}, got {:?}",
            cert.verdict
        );
    }

    // Not radical: a square generator survives in the eliminant; the chain
    // must refuse to certify (zero discriminant or failed obligation).
    for gens in [vec!["x^2", "y"], vec!["x^2 - 2*x*y + y^2"], vec!["y^2", "x*y"]] {
        let cert = certify_presentation(&pres(&t, &gens), &options);
        assert!(
            !matches!(cert.verdict, Verdict::RadicalAwayFrom { .. }),
            "must not certify {gens:?}"
        );
    }
}

#[test]
fn checkpointed_run_resumes_to_the_same_basis() {
    let t = VariableTable::of(&["x", "y", "z"]);
    let gens = ["x^2 - y", "x^3 - z", "y^2 - x*z"];
    let ideal = pres(&t, &gens);
    let reference = ideal.groebner_basis(&EngineConfig::default()).unwrap();

    let dir = std::env::temp_dir().join(format!("flatcert-ckpt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ckpt_path = dir.join("run.json");
    let mut limited = EngineConfig::default();
    limited.max_pairs = Some(1);
    limited.checkpoint_path = Some(ckpt_path.clone());
    match flatcert_core::groebner::buchberger(&ideal, &limited) {
        Err(EngineError::ResourceLimit { checkpoint: Some(path), .. }) => {
            assert_eq!(path, ckpt_path);
        }
        other => panic!("expected a checkpointed resource limit, got {other:?}"),
    }

    let bytes = std::fs::read(&ckpt_path).unwrap();
    let checkpoint: flatcert_core::groebner::Checkpoint =
        serde_json::from_slice(&bytes).unwrap();
    let resumed =
        flatcert_core::groebner::buchberger_resume(&ideal, &EngineConfig::default(), &checkpoint)
            .unwrap();
    assert_eq!(resumed.basis, reference);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn chain_subsets_partition_by_greatest_variable() {
    let t = VariableTable::of(&["x", "y", "z"]);
    let basis = pres(&t, &["x^2 - y", "x^3 - z"])
        .groebner_basis(&EngineConfig::default())
        .unwrap();
    let mut total = 0;
    for k in 0..3 {
        total += chain_subset(&basis, k).len();
    }
    assert_eq!(total, basis.len());
}
