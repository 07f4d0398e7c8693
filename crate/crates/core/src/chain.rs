//! Per-variable classification of the elimination chain and the
//! nonzerodivisor obligations it generates.
//!
//! Walking the lex basis variable by variable, each slice `G_ij` (elements
//! whose greatest variable is exactly `x_ij`) must be empty, contain a
//! polynomial linear in `x_ij`, or consist of a single quadratic. Anything
//! else halts the pipeline as inconclusive.

use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

use crate::coeff::CoefficientDomain;
use crate::determinantal::DeterminantalIdealSpec;
use crate::groebner::GroebnerBasis;
use crate::ideal::chain_subset;
use crate::poly::Polynomial;

#[derive(Debug, Error)]
pub enum ChainError {
    #[error("step {variable}: subset shape is none of empty/linear/quadratic")]
    UnclassifiableStep { variable: String },
    #[error("discriminant of the quadratic step {variable} is zero")]
    ZeroDiscriminant { variable: String },
    #[error("quadratic step {variable}: polynomial does not have degree 2")]
    WrongDegree { variable: String },
}

/// Which ideal an obligation was discharged against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ObligationTarget {
    FullIdeal,
    /// The elimination ideal in the variables from this index on.
    EliminationIdeal(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NzdStatus {
    /// Quotient computed and equal to the target ideal; auxiliary unlucky
    /// primes recorded.
    Discharged { unlucky: BTreeSet<u64> },
    /// Leading coefficient is a nonzero constant; nothing to compute.
    DischargedTrivially,
    Failed,
    Pending,
}

#[derive(Clone, Debug)]
pub struct NzdObligation {
    pub element: Polynomial,
    pub target: ObligationTarget,
    pub status: NzdStatus,
}

#[derive(Clone, Debug)]
pub enum ChainStepKind {
    Empty,
    Linear { witness: Polynomial, leading_coeff: Polynomial },
    Quadratic { witness: Polynomial, leading_coeff: Polynomial, discriminant: Polynomial },
}

#[derive(Clone, Debug)]
pub struct ChainStep {
    pub var_index: usize,
    pub var_name: String,
    pub kind: ChainStepKind,
    pub obligations: Vec<NzdObligation>,
}

/// Discriminant `b^2 - 4ac` of a polynomial of degree exactly 2 in `x_var`.
pub fn quadratic_discriminant(g: &Polynomial, var: usize) -> Result<Polynomial, ChainError> {
    if g.degree_in(var) != 2 {
        return Err(ChainError::WrongDegree { variable: g.table().name(var).to_string() });
    }
    let a = g.coeff_of_power(var, 2);
    let b = g.coeff_of_power(var, 1);
    let c = g.coeff_of_power(var, 0);
    let four = Polynomial::constant(
        g.domain().from_i64(4),
        g.domain().clone(),
        g.table().clone(),
    );
    let b2 = b.mul(&b).expect("same ring");
    let fourac = four.mul(&a).expect("same ring").mul(&c).expect("same ring");
    Ok(b2.sub(&fourac).expect("same ring"))
}

/// Classify every variable's slice of the basis. The preferred linear
/// witnesses follow the construction for symmetric determinantal ideals:
/// the 3x3 minor on rows {i, n-1, n} and columns {j, n-1, n} for j <= n-2,
/// and the (n-1, n) entry of `X^2` for `x_{1,n-1}`; when such a candidate
/// is not proportional to a basis element the lex-least linear element is
/// used instead.
pub fn classify_chain(
    basis: &GroebnerBasis,
    spec: Option<&DeterminantalIdealSpec>,
    domain: &CoefficientDomain,
) -> Result<Vec<ChainStep>, ChainError> {
    let table = basis.table().clone();
    let mut steps = Vec::with_capacity(table.len());
    for var in 0..table.len() {
        let subset = chain_subset(basis, var);
        let var_name = table.name(var).to_string();
        let kind = if subset.is_empty() {
            ChainStepKind::Empty
        } else if let Some(witness) = pick_linear_witness(&subset, var, spec, domain) {
            let leading_coeff = witness.coeff_of_power(var, 1);
            ChainStepKind::Linear { witness, leading_coeff }
        } else if subset.len() == 1 && subset[0].degree_in(var) == 2 {
            let witness = subset[0].clone();
            let leading_coeff = witness.coeff_of_power(var, 2);
            let discriminant = quadratic_discriminant(&witness, var)?;
            ChainStepKind::Quadratic { witness, leading_coeff, discriminant }
        } else {
            return Err(ChainError::UnclassifiableStep { variable: var_name });
        };
        steps.push(ChainStep { var_index: var, var_name, kind, obligations: Vec::new() });
    }
    Ok(steps)
}

fn pick_linear_witness(
    subset: &[Polynomial],
    var: usize,
    spec: Option<&DeterminantalIdealSpec>,
    domain: &CoefficientDomain,
) -> Option<Polynomial> {
    let linear: Vec<&Polynomial> =
        subset.iter().filter(|g| g.degree_in(var) == 1).collect();
    if linear.is_empty() {
        return None;
    }
    if let Some(spec) = spec {
        if let Some(candidate) = named_witness(spec, var, domain) {
            // The named candidates are generators, hence ideal members; they
            // qualify whenever they are linear in the step variable and do
            // not reach above it in the order.
            if candidate.degree_in(var) == 1 && candidate.greatest_var() == Some(var) {
                return Some(candidate);
            }
        }
    }
    linear
        .into_iter()
        .min_by(|a, b| a.cmp_canonical(b))
        .cloned()
}

/// The distinguished linear polynomial for variable `x_ij` of `J(s, n)`.
fn named_witness(
    spec: &DeterminantalIdealSpec,
    var: usize,
    domain: &CoefficientDomain,
) -> Option<Polynomial> {
    let n = spec.n();
    // Recover (i, j) from the variable index.
    let mut idx = var as u32;
    let mut i = 1;
    while idx >= n - i + 1 {
        idx -= n - i + 1;
        i += 1;
    }
    let j = i + idx;
    if n < 3 {
        return None;
    }
    if j <= n - 2 {
        Some(spec.minor(domain, &[i, n - 1, n], &[j, n - 1, n]))
    } else if i == 1 && j == n - 1 {
        Some(spec.x_squared_entry(domain, n - 1, n))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::EngineConfig;
    use crate::ideal::IdealPresentation;
    use crate::parse::parse_poly;
    use crate::vars::VariableTable;

    fn q() -> CoefficientDomain {
        CoefficientDomain::Rationals
    }

    #[test]
    fn discriminant_examples() {
        // x^2 - y: a = 1, b = 0, c = -y, so b^2 - 4ac = 4y.
        let t = VariableTable::of(&["x", "y"]);
        let f = parse_poly("x^2 - y", &q(), &t).unwrap();
        let d = quadratic_discriminant(&f, 0).unwrap();
        assert_eq!(d, parse_poly("4*y", &q(), &t).unwrap());
        // a*x^2 alone has zero discriminant.
        let g = parse_poly("y*x^2", &q(), &t).unwrap();
        assert!(quadratic_discriminant(&g, 0).unwrap().is_zero());
        // Wrong degree is rejected.
        let h = parse_poly("x^3", &q(), &t).unwrap();
        assert!(quadratic_discriminant(&h, 0).is_err());
    }

    #[test]
    fn classify_simple_shapes() {
        // Basis {x - y, y^2}: x-step is linear with unit coefficient,
        // y-step is a single quadratic.
        let t = VariableTable::of(&["x", "y"]);
        let pres = IdealPresentation::new(
            vec![parse_poly("x - y", &q(), &t).unwrap(), parse_poly("y^2", &q(), &t).unwrap()],
            q(),
            t,
        )
        .unwrap();
        let basis = pres.groebner_basis(&EngineConfig::default()).unwrap();
        let steps = classify_chain(&basis, None, &q()).unwrap();
        assert!(matches!(steps[0].kind, ChainStepKind::Linear { .. }));
        assert!(matches!(steps[1].kind, ChainStepKind::Quadratic { .. }));
        if let ChainStepKind::Quadratic { discriminant, .. } = &steps[1].kind {
            assert!(discriminant.is_zero());
        }
    }

    #[test]
    fn empty_step_detected() {
        let t = VariableTable::of(&["x", "y"]);
        let pres =
            IdealPresentation::new(vec![parse_poly("x^2", &q(), &t).unwrap()], q(), t).unwrap();
        let basis = pres.groebner_basis(&EngineConfig::default()).unwrap();
        let steps = classify_chain(&basis, None, &q()).unwrap();
        assert!(matches!(steps[0].kind, ChainStepKind::Quadratic { .. }));
        assert!(matches!(steps[1].kind, ChainStepKind::Empty));
    }
}
