//! The radicality certification pipeline: build the ideal, compute its lex
//! basis, walk the elimination chain, discharge nonzerodivisor obligations,
//! and accumulate every unlucky prime encountered along the way.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::certificate::{CounterexampleP2, RadicalityCertificate, Verdict};
use crate::chain::{classify_chain, ChainStep, ChainStepKind, NzdObligation, NzdStatus, ObligationTarget};
use crate::coeff::CoefficientDomain;
use crate::determinantal::DeterminantalIdealSpec;
use crate::graded::GradedComponent;
use crate::groebner::{buchberger, EngineConfig, GroebnerBasis};
use crate::ideal::{elimination_subset, ideal_quotient, IdealPresentation};
use crate::parse::format_poly;
use crate::poly::Polynomial;
use crate::unlucky::{unlucky_primes, UnluckyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    /// Desk-scale runs: every obligation of the chain is discharged.
    Required,
    /// Additionally records extended diagnostics (full elimination data).
    Extended,
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub tier: Tier,
    pub engine: EngineConfig,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { tier: Tier::Required, engine: EngineConfig::default() }
    }
}

/// Certify `J(s, n)` over the rationals.
pub fn certify(spec: &DeterminantalIdealSpec, options: &CertifyOptions) -> RadicalityCertificate {
    let domain = CoefficientDomain::Rationals;
    let presentation = spec.build(&domain);
    let label = format!("J({},{})", spec.s(), spec.n());
    let mut timings: Vec<(String, f64)> = Vec::new();

    let t0 = Instant::now();
    let mut cfg = options.engine.clone();
    cfg.track_lift = true;
    let comp = match buchberger(&presentation, &cfg) {
        Ok(c) => c,
        Err(e) => {
            return inconclusive(label, spec, format!("basis computation failed: {e}"), timings)
        }
    };
    timings.push(("groebner_basis".into(), t0.elapsed().as_secs_f64()));

    let t1 = Instant::now();
    let main_unlucky =
        match unlucky_primes(&presentation, &comp.basis, comp.lift_g_from_f.as_ref(), &cfg) {
            Ok(r) => r,
            Err(e) => {
                return inconclusive(label, spec, format!("unlucky-prime scan failed: {e}"), timings)
            }
        };
    timings.push(("unlucky_primes_main".into(), t1.elapsed().as_secs_f64()));

    let t2 = Instant::now();
    let mut chain = match classify_chain(&comp.basis, Some(spec), &domain) {
        Ok(c) => c,
        Err(e) => return inconclusive(label, spec, e.to_string(), timings),
    };
    timings.push(("classify_chain".into(), t2.elapsed().as_secs_f64()));

    let t3 = Instant::now();
    let discharge =
        discharge_all(&presentation, &comp.basis, &mut chain, &options.engine, spec.table().len());
    timings.push(("discharge_obligations".into(), t3.elapsed().as_secs_f64()));

    let counterexample_p2 = if spec.s() == 2 { p2_counterexample(spec) } else { None };

    let mut excluded: BTreeSet<u64> = main_unlucky.primes.clone();
    let mut raw = main_unlucky.raw.clone();
    for step in &chain {
        for ob in &step.obligations {
            if let NzdStatus::Discharged { unlucky } = &ob.status {
                excluded.extend(unlucky.iter().copied());
            }
        }
    }
    if let Ok(aux_raws) = &discharge {
        for r in aux_raws {
            raw.extend(r.raw.iter().cloned());
        }
    }
    if spec.s() == 2 {
        // Not radical in characteristic two: the counterexample above.
        excluded.insert(2);
    }

    let verdict = match discharge {
        Err(reason) => Verdict::Inconclusive { reason },
        Ok(_) => {
            let all_ok = chain.iter().all(|step| {
                step.obligations.iter().all(|ob| {
                    matches!(ob.status, NzdStatus::Discharged { .. } | NzdStatus::DischargedTrivially)
                })
            });
            if all_ok {
                Verdict::RadicalAwayFrom { excluded: excluded.clone() }
            } else {
                Verdict::Inconclusive {
                    reason: "a nonzerodivisor obligation failed".into(),
                }
            }
        }
    };

    RadicalityCertificate {
        ideal_label: label,
        s: Some(spec.s()),
        n: Some(spec.n()),
        verdict,
        excluded_primes: excluded,
        raw_magnitudes: raw,
        chain,
        counterexample_p2,
        timings,
    }
}

/// Debug entry point: certify an arbitrary presentation with the same
/// chain machinery (no named witnesses, no characteristic-two analysis).
pub fn certify_presentation(
    presentation: &IdealPresentation,
    options: &CertifyOptions,
) -> RadicalityCertificate {
    let label = "custom".to_string();
    let mut timings = Vec::new();
    let t0 = Instant::now();
    let mut cfg = options.engine.clone();
    cfg.track_lift = true;
    let comp = match buchberger(presentation, &cfg) {
        Ok(c) => c,
        Err(e) => {
            return RadicalityCertificate {
                ideal_label: label,
                s: None,
                n: None,
                verdict: Verdict::Inconclusive { reason: format!("basis computation failed: {e}") },
                excluded_primes: BTreeSet::new(),
                raw_magnitudes: BTreeSet::new(),
                chain: Vec::new(),
                counterexample_p2: None,
                timings,
            }
        }
    };
    timings.push(("groebner_basis".into(), t0.elapsed().as_secs_f64()));
    let main_unlucky = unlucky_primes(presentation, &comp.basis, comp.lift_g_from_f.as_ref(), &cfg)
        .unwrap_or_default();
    let mut chain = match classify_chain(&comp.basis, None, presentation.domain()) {
        Ok(c) => c,
        Err(e) => {
            return RadicalityCertificate {
                ideal_label: label,
                s: None,
                n: None,
                verdict: Verdict::Inconclusive { reason: e.to_string() },
                excluded_primes: main_unlucky.primes,
                raw_magnitudes: main_unlucky.raw,
                chain: Vec::new(),
                counterexample_p2: None,
                timings,
            }
        }
    };
    let discharge = discharge_all(
        presentation,
        &comp.basis,
        &mut chain,
        &options.engine,
        presentation.table().len(),
    );
    let mut excluded = main_unlucky.primes.clone();
    for step in &chain {
        for ob in &step.obligations {
            if let NzdStatus::Discharged { unlucky } = &ob.status {
                excluded.extend(unlucky.iter().copied());
            }
        }
    }
    let verdict = match discharge {
        Err(reason) => Verdict::Inconclusive { reason },
        Ok(_) => {
            let all_ok = chain.iter().all(|step| {
                step.obligations.iter().all(|ob| {
                    matches!(ob.status, NzdStatus::Discharged { .. } | NzdStatus::DischargedTrivially)
                })
            });
            if all_ok {
                Verdict::RadicalAwayFrom { excluded: excluded.clone() }
            } else {
                Verdict::Inconclusive { reason: "a nonzerodivisor obligation failed".into() }
            }
        }
    };
    RadicalityCertificate {
        ideal_label: label,
        s: None,
        n: None,
        verdict,
        excluded_primes: excluded,
        raw_magnitudes: main_unlucky.raw,
        chain,
        counterexample_p2: None,
        timings,
    }
}

/// Discharge the nonzerodivisor obligation for `s` against the ideal with
/// the given presentation and reduced basis.
pub fn discharge_nzd(
    target: &IdealPresentation,
    target_basis: &GroebnerBasis,
    s: &Polynomial,
    engine: &EngineConfig,
) -> Result<(NzdStatus, UnluckyReport), String> {
    if s.is_zero() {
        return Err("nonzerodivisor candidate is zero".into());
    }
    if s.total_degree() == Some(0) {
        return Ok((NzdStatus::DischargedTrivially, UnluckyReport::default()));
    }
    let mut cfg = engine.clone();
    cfg.track_lift = true;
    let quot = ideal_quotient(target, s, &cfg).map_err(|e| e.to_string())?;
    let equal = quot.quotient_basis == *target_basis;
    let report = unlucky_primes(&quot.aux_presentation, &quot.aux_basis, quot.aux_lift.as_ref(), &cfg)
        .map_err(|e| e.to_string())?;
    if equal {
        Ok((NzdStatus::Discharged { unlucky: report.primes.clone() }, report))
    } else {
        Ok((NzdStatus::Failed, report))
    }
}

fn discharge_all(
    presentation: &IdealPresentation,
    basis: &GroebnerBasis,
    chain: &mut [ChainStep],
    engine: &EngineConfig,
    nvars: usize,
) -> Result<Vec<UnluckyReport>, String> {
    let mut reports = Vec::new();
    // Leading coefficients repeat across steps; discharge each once.
    let mut cache: Vec<(Polynomial, NzdStatus)> = Vec::new();
    for idx in 0..chain.len() {
        let (lc, disc) = match &chain[idx].kind {
            ChainStepKind::Empty => (None, None),
            ChainStepKind::Linear { leading_coeff, .. } => (Some(leading_coeff.clone()), None),
            ChainStepKind::Quadratic { leading_coeff, discriminant, .. } => {
                (Some(leading_coeff.clone()), Some(discriminant.clone()))
            }
        };
        if let Some(lc) = lc {
            let status = if let Some((_, st)) = cache.iter().find(|(p, _)| *p == lc) {
                st.clone()
            } else {
                let (st, report) = discharge_nzd(presentation, basis, &lc, engine)?;
                reports.push(report);
                cache.push((lc.clone(), st.clone()));
                st
            };
            chain[idx].obligations.push(NzdObligation {
                element: lc,
                target: ObligationTarget::FullIdeal,
                status,
            });
        }
        if let Some(disc) = disc {
            if disc.is_zero() {
                return Err(format!(
                    "discriminant at step {} is zero; nonzerodivisor precondition violated",
                    chain[idx].var_name
                ));
            }
            // The discriminant lives in the trailing subring after this
            // variable; discharge it against that elimination ideal.
            let k = chain[idx].var_index + 1;
            let (target_pres, target_basis, elem) = if k < nvars {
                let sub_table = presentation.table().suffix(k);
                let sub_gens: Vec<Polynomial> = elimination_subset(basis, k)
                    .into_iter()
                    .map(|g| g.strip_front(k, sub_table.clone()).expect("elimination subset"))
                    .collect();
                let pres =
                    IdealPresentation::new(sub_gens.clone(), presentation.domain().clone(), sub_table.clone())
                        .map_err(|e| e.to_string())?;
                let basis = GroebnerBasis::from_reduced_elements(
                    sub_gens,
                    presentation.domain().clone(),
                    sub_table.clone(),
                );
                let elem = disc.strip_front(k, sub_table).ok_or_else(|| {
                    format!(
                        "discriminant at step {} involves the eliminated variables",
                        chain[idx].var_name
                    )
                })?;
                (pres, basis, elem)
            } else {
                (presentation.clone(), basis.clone(), disc.clone())
            };
            let (status, report) = discharge_nzd(&target_pres, &target_basis, &elem, engine)?;
            reports.push(report);
            chain[idx].obligations.push(NzdObligation {
                element: disc,
                target: ObligationTarget::EliminationIdeal(k),
                status,
            });
        }
    }
    Ok(reports)
}

/// Characteristic-two witness for `J(2, n)`: the first-row sum squares to
/// the generator `(X^2)_11` while staying outside the degree-one slice.
fn p2_counterexample(spec: &DeterminantalIdealSpec) -> Option<CounterexampleP2> {
    let f2 = CoefficientDomain::prime_field(2).unwrap();
    let ideal = spec.build(&f2);
    let component = GradedComponent::new(&ideal, 1).ok()?;
    let mut witness = Polynomial::zero(f2.clone(), spec.table().clone());
    for j in 1..=spec.n() {
        witness = witness.add(&spec.entry(&f2, 1, j)).unwrap();
    }
    let square = witness.mul(&witness).unwrap();
    let generator = spec.x_squared_entry(&f2, 1, 1);
    let square_in_ideal = square == generator;
    let witness_in_ideal = component.contains(&witness).unwrap_or(true);
    Some(CounterexampleP2 {
        witness: format_poly(&witness),
        square_generator: format_poly(&generator),
        degree_one_component_dimension: component.dimension(),
        witness_in_ideal,
        square_in_ideal,
    })
}

fn inconclusive(
    label: String,
    spec: &DeterminantalIdealSpec,
    reason: String,
    timings: Vec<(String, f64)>,
) -> RadicalityCertificate {
    RadicalityCertificate {
        ideal_label: label,
        s: Some(spec.s()),
        n: Some(spec.n()),
        verdict: Verdict::Inconclusive { reason },
        excluded_primes: BTreeSet::new(),
        raw_magnitudes: BTreeSet::new(),
        chain: Vec::new(),
        counterexample_p2: None,
        timings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::vars::VariableTable;

    #[test]
    fn degenerate_square_is_inconclusive() {
        // <x^2>: the chain sees a single quadratic with zero discriminant,
        // which violates the nonzerodivisor precondition.
        let t = VariableTable::of(&["x"]);
        let q = CoefficientDomain::Rationals;
        let pres =
            IdealPresentation::new(vec![parse_poly("x^2", &q, &t).unwrap()], q, t).unwrap();
        let cert = certify_presentation(&pres, &CertifyOptions::default());
        match &cert.verdict {
            Verdict::Inconclusive { reason } => {
                assert!(reason.contains("discriminant"), "unexpected reason: {reason}");
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn zero_divisor_detected() {
        // J = <x*y>: the x-step is linear with leading coefficient y, and
        // y is a zero divisor modulo J.
        let t = VariableTable::of(&["x", "y"]);
        let q = CoefficientDomain::Rationals;
        let pres =
            IdealPresentation::new(vec![parse_poly("x*y", &q, &t).unwrap()], q, t).unwrap();
        let cert = certify_presentation(&pres, &CertifyOptions::default());
        assert!(matches!(cert.verdict, Verdict::Inconclusive { .. }));
        let failed = cert
            .chain
            .iter()
            .flat_map(|s| &s.obligations)
            .any(|ob| matches!(ob.status, NzdStatus::Failed));
        assert!(failed, "expected a failed obligation");
    }

    #[test]
    fn principal_linear_ideal_certifies() {
        // J = <x>: single linear step with unit leading coefficient.
        let t = VariableTable::of(&["x", "y"]);
        let q = CoefficientDomain::Rationals;
        let pres = IdealPresentation::new(vec![parse_poly("x", &q, &t).unwrap()], q, t).unwrap();
        let cert = certify_presentation(&pres, &CertifyOptions::default());
        assert!(matches!(cert.verdict, Verdict::RadicalAwayFrom { .. }));
    }
}
