//! Machine-readable radicality certificates.

use serde_json::{json, Value};
use std::collections::BTreeSet;

use crate::chain::{ChainStep, ChainStepKind, NzdStatus, ObligationTarget};
use crate::parse::format_poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    RadicalAwayFrom { excluded: BTreeSet<u64> },
    NotRadicalAt { p: u64, witness: String },
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::RadicalAwayFrom { .. } => 0,
            Verdict::NotRadicalAt { .. } => 1,
            Verdict::Inconclusive { .. } => 3,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::RadicalAwayFrom { .. } => "radical-away-from",
            Verdict::NotRadicalAt { .. } => "not-radical-at",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Verified characteristic-two counterexample: a degree-one polynomial
/// outside the ideal whose square is a generator.
#[derive(Clone, Debug)]
pub struct CounterexampleP2 {
    pub witness: String,
    pub square_generator: String,
    pub degree_one_component_dimension: usize,
    pub witness_in_ideal: bool,
    pub square_in_ideal: bool,
}

#[derive(Clone, Debug)]
pub struct RadicalityCertificate {
    pub ideal_label: String,
    pub s: Option<u32>,
    pub n: Option<u32>,
    pub verdict: Verdict,
    pub excluded_primes: BTreeSet<u64>,
    pub raw_magnitudes: BTreeSet<num_bigint::BigUint>,
    pub chain: Vec<ChainStep>,
    pub counterexample_p2: Option<CounterexampleP2>,
    pub timings: Vec<(String, f64)>,
}

/// Canonical JSON rendering with deterministic key order. Timings are the
/// only volatile section; diffing tools are expected to drop them.
pub trait CertificateJson {
    fn to_json(&self) -> Value;
}

impl CertificateJson for RadicalityCertificate {
    fn to_json(&self) -> Value {
        let verdict = match &self.verdict {
            Verdict::RadicalAwayFrom { excluded } => json!({
                "kind": "radical-away-from",
                "excluded_primes": excluded.iter().copied().collect::<Vec<_>>(),
            }),
            Verdict::NotRadicalAt { p, witness } => json!({
                "kind": "not-radical-at",
                "p": p,
                "witness": witness,
            }),
            Verdict::Inconclusive { reason } => json!({
                "kind": "inconclusive",
                "reason": reason,
            }),
        };
        let chain: Vec<Value> = self.chain.iter().map(chain_step_json).collect();
        let mut root = serde_json::Map::new();
        root.insert("ideal".into(), json!(self.ideal_label));
        if let Some(s) = self.s {
            root.insert("s".into(), json!(s));
        }
        if let Some(n) = self.n {
            root.insert("n".into(), json!(n));
        }
        root.insert("verdict".into(), verdict);
        root.insert(
            "excluded_primes".into(),
            json!(self.excluded_primes.iter().copied().collect::<Vec<_>>()),
        );
        root.insert(
            "excluded_raw_magnitudes".into(),
            json!(self.raw_magnitudes.iter().map(|m| m.to_string()).collect::<Vec<_>>()),
        );
        root.insert("chain".into(), Value::Array(chain));
        if let Some(cx) = &self.counterexample_p2 {
            root.insert(
                "counterexample_p2".into(),
                json!({
                    "witness": cx.witness,
                    "square_generator": cx.square_generator,
                    "degree_one_component_dimension": cx.degree_one_component_dimension,
                    "witness_in_ideal": cx.witness_in_ideal,
                    "square_in_ideal": cx.square_in_ideal,
                }),
            );
        }
        root.insert(
            "timings".into(),
            Value::Object(
                self.timings
                    .iter()
                    .map(|(k, v)| (k.clone(), json!(v)))
                    .collect(),
            ),
        );
        Value::Object(root)
    }
}

fn chain_step_json(step: &ChainStep) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("variable".into(), json!(step.var_name));
    match &step.kind {
        ChainStepKind::Empty => {
            obj.insert("kind".into(), json!("empty"));
        }
        ChainStepKind::Linear { witness, leading_coeff } => {
            obj.insert("kind".into(), json!("linear"));
            obj.insert("witness".into(), json!(format_poly(witness)));
            obj.insert("leading_coefficient".into(), json!(format_poly(leading_coeff)));
        }
        ChainStepKind::Quadratic { witness, leading_coeff, discriminant } => {
            obj.insert("kind".into(), json!("quadratic"));
            obj.insert("witness".into(), json!(format_poly(witness)));
            obj.insert("leading_coefficient".into(), json!(format_poly(leading_coeff)));
            obj.insert("discriminant".into(), json!(format_poly(discriminant)));
        }
    }
    let obligations: Vec<Value> = step
        .obligations
        .iter()
        .map(|ob| {
            let target = match &ob.target {
                ObligationTarget::FullIdeal => "J".to_string(),
                ObligationTarget::EliminationIdeal(k) => format!("J_elim_{k}"),
            };
            let (status, unlucky) = match &ob.status {
                NzdStatus::Discharged { unlucky } => {
                    ("discharged", unlucky.iter().copied().collect::<Vec<_>>())
                }
                NzdStatus::DischargedTrivially => ("discharged-trivially", Vec::new()),
                NzdStatus::Failed => ("failed", Vec::new()),
                NzdStatus::Pending => ("pending", Vec::new()),
            };
            json!({
                "element": format_poly(&ob.element),
                "target": target,
                "status": status,
                "unlucky": unlucky,
            })
        })
        .collect();
    obj.insert("obligations".into(), Value::Array(obligations));
    Value::Object(obj)
}
