use flatcert_core::*;
use std::time::Instant;

fn main() {
    let spec = DeterminantalIdealSpec::new(2, 4).unwrap();
    let domain = CoefficientDomain::Rationals;
    let pres = spec.build(&domain);
    println!("J(2,4): {} generators in {} vars", pres.generators().len(), spec.table().len());
    let t = Instant::now();
    let cfg = EngineConfig::default();
    let basis = pres.groebner_basis(&cfg).unwrap();
    println!("GB computed in {:?}: {} elements", t.elapsed(), basis.len());
    let t = Instant::now();
    assert!(is_groebner_basis(basis.elements()));
    println!("verified in {:?}", t.elapsed());
}
