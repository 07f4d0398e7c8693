use flatcert_core::*;
use std::time::Instant;

fn main() {
    // The heavy extended-tier computation: (J(2,6) : x55*x66 - x56^2).
    let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
    let domain = CoefficientDomain::Rationals;
    let pres = spec.build(&domain);
    let cfg = EngineConfig::default();
    let basis = pres.groebner_basis(&cfg).unwrap();
    let s = parse_poly("u*z - v^2", &domain, spec.table()).unwrap();
    let t = Instant::now();
    let quot = flatcert_core::ideal::ideal_quotient(&pres, &s, &cfg).unwrap();
    println!("(J : u*z - v^2) in {:?}: {} elements; equal to J: {}",
        t.elapsed(), quot.quotient_basis.len(), quot.quotient_basis == basis);
}
