use flatcert_core::*;
use std::time::Instant;

fn main() {
    let t = Instant::now();
    let spec = DeterminantalIdealSpec::new(2, 4).unwrap();
    let cert = certify(&spec, &CertifyOptions::default());
    println!("certify(2,4) in {:?}", t.elapsed());
    println!("verdict: {:?}", cert.verdict);
    println!("excluded: {:?}", cert.excluded_primes);
    for step in &cert.chain {
        let kind = match &step.kind {
            ChainStepKind::Empty => "empty".to_string(),
            ChainStepKind::Linear { leading_coeff, .. } => format!("linear lc={}", format_poly(leading_coeff)),
            ChainStepKind::Quadratic { leading_coeff, discriminant, .. } => format!("quadratic lc={} disc={}", format_poly(leading_coeff), format_poly(discriminant)),
        };
        println!("  {}: {}", step.var_name, kind);
    }
}
