use flatcert_core::*;
use std::time::Instant;

fn main() {
    let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
    let domain = CoefficientDomain::Rationals;
    let pres = spec.build(&domain);
    println!("J(2,6): {} generators in {} vars", pres.generators().len(), spec.table().len());
    let t = Instant::now();
    let cfg = EngineConfig::default();
    let basis = pres.groebner_basis(&cfg).unwrap();
    println!("GB over Q in {:?}: {} elements", t.elapsed(), basis.len());

    // Chain classification
    let chain = flatcert_core::chain::classify_chain(&basis, Some(&spec), &domain).unwrap();
    for step in &chain {
        let kind = match &step.kind {
            ChainStepKind::Empty => "empty".to_string(),
            ChainStepKind::Linear { leading_coeff, .. } => format!("linear lc={}", format_poly(leading_coeff)),
            ChainStepKind::Quadratic { leading_coeff, .. } => format!("quadratic lc={}", format_poly(leading_coeff)),
        };
        println!("  {}: {}", step.var_name, kind);
    }

    let f2 = CoefficientDomain::prime_field(2).unwrap();
    let pres2 = spec.build(&f2);
    let t = Instant::now();
    let basis2 = pres2.groebner_basis(&cfg).unwrap();
    println!("GB over F2 in {:?}: {} elements", t.elapsed(), basis2.len());
}
