use flatcert_core::*;
use flatcert_core::groebner::{lift_over_basis, normal_form_with_quotients, syzygy_matrix};
use num_traits::Signed;
use std::collections::BTreeSet;

fn primes_of_rows(rows: &[Vec<Polynomial>]) -> BTreeSet<u64> {
    let mut set = BTreeSet::new();
    for row in rows {
        for p in row {
            for (c, _) in p.terms() {
                let r = c.as_rational().unwrap();
                for part in [r.numer(), r.denom()] {
                    let m = part.abs().to_biguint().unwrap();
                    if m > 1u8.into() {
                        set.extend(flatcert_core::primes::prime_factors(&m).unwrap());
                    }
                }
            }
        }
    }
    set
}

fn main() {
    let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
    let domain = CoefficientDomain::Rationals;
    let pres = spec.build(&domain);
    let mut cfg = EngineConfig::default();
    cfg.track_lift = true;
    let comp = flatcert_core::groebner::buchberger(&pres, &cfg).unwrap();
    let z = comp.lift_g_from_f.unwrap();
    println!("tracked Z primes: {:?}", primes_of_rows(&z.rows));

    // Fresh division of each basis element against the generator list.
    let mut fresh_ok = 0;
    let mut fresh_rows: Vec<Vec<Polynomial>> = Vec::new();
    for g in comp.basis.elements() {
        let (q, r) = normal_form_with_quotients(g, pres.generators());
        if r.is_zero() {
            fresh_ok += 1;
            fresh_rows.push(q);
        }
    }
    println!("fresh division succeeded for {}/{} elements", fresh_ok, comp.basis.len());
    println!("fresh Z primes: {:?}", primes_of_rows(&fresh_rows));

    let y = lift_over_basis(pres.generators(), &comp.basis).unwrap();
    println!("Y primes: {:?}", primes_of_rows(&y.rows));
    let t = std::time::Instant::now();
    let r = syzygy_matrix(&comp.basis);
    println!("R rows: {} primes: {:?} ({:?})", r.rows.len(), primes_of_rows(&r.rows), t.elapsed());
}
