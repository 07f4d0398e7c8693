use flatcert_core::*;
use flatcert_core::groebner::{lift_over_basis, syzygy_matrix};
use num_traits::Signed;
use std::collections::BTreeSet;

fn split_primes(rows: &[Vec<Polynomial>]) -> (BTreeSet<u64>, BTreeSet<u64>) {
    let (mut nums, mut dens) = (BTreeSet::new(), BTreeSet::new());
    for row in rows {
        for p in row {
            for (c, _) in p.terms() {
                let r = c.as_rational().unwrap();
                let n = r.numer().abs().to_biguint().unwrap();
                let d = r.denom().abs().to_biguint().unwrap();
                if n > 1u8.into() { nums.extend(flatcert_core::primes::prime_factors(&n).unwrap()); }
                if d > 1u8.into() { dens.extend(flatcert_core::primes::prime_factors(&d).unwrap()); }
            }
        }
    }
    (nums, dens)
}

fn main() {
    let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
    let domain = CoefficientDomain::Rationals;
    let pres = spec.build(&domain);
    let mut cfg = EngineConfig::default();
    cfg.track_lift = true;
    let comp = flatcert_core::groebner::buchberger(&pres, &cfg).unwrap();
    let z = comp.lift_g_from_f.unwrap();
    let (zn, zd) = split_primes(&z.rows);
    println!("Z numerator primes {:?} denominator primes {:?}", zn, zd);
    let y = lift_over_basis(pres.generators(), &comp.basis).unwrap();
    let (yn, yd) = split_primes(&y.rows);
    println!("Y numerator primes {:?} denominator primes {:?}", yn, yd);
    let r = syzygy_matrix(&comp.basis);
    let (rn, rd) = split_primes(&r.rows);
    println!("R numerator primes {:?} denominator primes {:?}", rn, rd);
}
