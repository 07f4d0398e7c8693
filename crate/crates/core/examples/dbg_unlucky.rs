use flatcert_core::*;
use flatcert_core::unlucky::unlucky_primes;
use num_traits::Signed;
use std::collections::BTreeSet;

fn main() {
    let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
    let domain = CoefficientDomain::Rationals;
    let pres = spec.build(&domain);
    let mut cfg = EngineConfig::default();
    cfg.track_lift = true;
    let comp = flatcert_core::groebner::buchberger(&pres, &cfg).unwrap();
    println!("basis: {} elements", comp.basis.len());

    // Which primes come from the generators' coefficients (numerators)?
    let mut f_nums: BTreeSet<num_bigint::BigUint> = BTreeSet::new();
    for g in pres.generators() {
        for (c, _) in g.terms() {
            let r = c.as_rational().unwrap();
            let n = r.numer().abs().to_biguint().unwrap();
            if n > 1u8.into() { f_nums.insert(n.clone()); }
            assert!(r.denom().abs() == 1.into());
        }
    }
    println!("generator numerators != 1: {:?}", f_nums);

    let mut g_nums: BTreeSet<num_bigint::BigUint> = BTreeSet::new();
    let mut g_dens: BTreeSet<num_bigint::BigUint> = BTreeSet::new();
    for g in comp.basis.elements() {
        for (c, _) in g.terms() {
            let r = c.as_rational().unwrap();
            let n = r.numer().abs().to_biguint().unwrap();
            let d = r.denom().abs().to_biguint().unwrap();
            if n > 1u8.into() { g_nums.insert(n); }
            if d > 1u8.into() { g_dens.insert(d); }
        }
    }
    println!("basis numerators != 1 (count {}): up to {:?}", g_nums.len(), g_nums.iter().rev().take(3).collect::<Vec<_>>());
    println!("basis denominators != 1: {:?}", g_dens);

    let t = std::time::Instant::now();
    let report = unlucky_primes(&pres, &comp.basis, comp.lift_g_from_f.as_ref(), &cfg).unwrap();
    println!("full superset primes: {:?} ({:?})", report.primes, t.elapsed());
}
