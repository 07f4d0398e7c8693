use flatcert_core::*;
use std::time::Instant;

fn main() {
    let t = Instant::now();
    let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
    let cert = certify(&spec, &CertifyOptions { tier: Tier::Extended, ..Default::default() });
    println!("certify(2,6) in {:?}", t.elapsed());
    println!("verdict: {:?}", cert.verdict.label());
    println!("excluded primes: {:?}", cert.excluded_primes);
    for step in &cert.chain {
        for ob in &step.obligations {
            let tgt = match ob.target { ObligationTarget::FullIdeal => "J".into(), ObligationTarget::EliminationIdeal(k) => format!("J_{k}") };
            match &ob.status {
                NzdStatus::Discharged { unlucky } => println!("  {} vs {}: discharged, unlucky {:?}", format_poly(&ob.element).chars().take(50).collect::<String>(), tgt, unlucky),
                NzdStatus::DischargedTrivially => println!("  {} vs {}: trivial", format_poly(&ob.element), tgt),
                other => println!("  {} vs {}: {:?}", format_poly(&ob.element), tgt, other),
            }
        }
    }
}
