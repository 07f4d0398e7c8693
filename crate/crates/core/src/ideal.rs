//! Ideal presentations and derived ideal operations: elimination subsets,
//! quotient ideals via an auxiliary variable, and exact ideal equality.

use std::sync::Arc;
use thiserror::Error;

use crate::coeff::CoefficientDomain;
use crate::groebner::{buchberger, EngineConfig, EngineError, GroebnerBasis};
use crate::poly::{PolyError, Polynomial};
use crate::vars::VariableTable;

#[derive(Debug, Error)]
pub enum IdealError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("quotient divisor must be nonzero")]
    ZeroDivisorPolynomial,
    #[error("internal: element of the elimination subset not divisible by the divisor")]
    QuotientDivisionFailed,
}

/// A finite generating set. Generators are nonzero and deduplicated by
/// exact equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    generators: Vec<Polynomial>,
    domain: CoefficientDomain,
    table: Arc<VariableTable>,
}

impl IdealPresentation {
    pub fn new(
        generators: Vec<Polynomial>,
        domain: CoefficientDomain,
        table: Arc<VariableTable>,
    ) -> Result<Self, PolyError> {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in generators {
            if g.domain() != &domain {
                return Err(PolyError::DomainMismatch);
            }
            if g.table() != &table {
                return Err(PolyError::TableMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(IdealPresentation { generators: out, domain, table })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn domain(&self) -> &CoefficientDomain {
        &self.domain
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn groebner_basis(&self, config: &EngineConfig) -> Result<GroebnerBasis, EngineError> {
        Ok(buchberger(self, config)?.basis)
    }
}

/// `G ∩ R[x_k, ..., x_last]`: the basis elements involving only variables
/// of index >= k. For a lex basis this is a Groebner basis of the
/// elimination ideal in the trailing subring.
pub fn elimination_subset(basis: &GroebnerBasis, k: usize) -> Vec<Polynomial> {
    basis
        .elements()
        .iter()
        .filter(|g| g.greatest_var().map_or(true, |v| v >= k))
        .cloned()
        .collect()
}

/// The subset of basis elements whose greatest variable is exactly `k`;
/// this is the per-variable slice the elimination chain inspects.
pub fn chain_subset(basis: &GroebnerBasis, k: usize) -> Vec<Polynomial> {
    basis
        .elements()
        .iter()
        .filter(|g| g.greatest_var() == Some(k))
        .cloned()
        .collect()
}

/// Outcome of a quotient computation, retaining the auxiliary run so the
/// caller can harvest unlucky primes from it.
pub struct QuotientComputation {
    pub quotient_basis: GroebnerBasis,
    /// Generators of the auxiliary ideal `<t*f_1, ..., t*f_r, t*s - s>`.
    pub aux_presentation: IdealPresentation,
    /// Its reduced basis, over the extended table.
    pub aux_basis: GroebnerBasis,
    /// Lift of the auxiliary basis over its generators, when tracked.
    pub aux_lift: Option<crate::groebner::LiftMatrix>,
}

/// Ideal quotient `(I : s)` by the auxiliary-variable construction: compute
/// a lex basis of `<t f_1, ..., t f_r, t s - s>` with `t` greatest, keep the
/// `t`-free elements and divide each by `s` exactly.
pub fn ideal_quotient(
    ideal: &IdealPresentation,
    s: &Polynomial,
    config: &EngineConfig,
) -> Result<QuotientComputation, IdealError> {
    if s.is_zero() {
        return Err(IdealError::ZeroDivisorPolynomial);
    }
    s.check_compatible(&Polynomial::zero(ideal.domain().clone(), ideal.table().clone()))?;
    let (ext_table, _) = ideal.table().prepend_fresh("t");
    let domain = ideal.domain().clone();
    let t = Polynomial::variable(0, domain.clone(), ext_table.clone());
    let mut aux_gens = Vec::with_capacity(ideal.generators().len() + 1);
    for f in ideal.generators() {
        let f_ext = f.pad_front(1, ext_table.clone());
        aux_gens.push(t.mul(&f_ext)?);
    }
    let s_ext = s.pad_front(1, ext_table.clone());
    aux_gens.push(t.mul(&s_ext)?.sub(&s_ext)?);
    let aux_presentation = IdealPresentation::new(aux_gens, domain.clone(), ext_table.clone())?;
    let aux_comp = buchberger(&aux_presentation, config)?;
    let aux_basis = aux_comp.basis;
    let aux_lift = aux_comp.lift_g_from_f;

    // t-free subset, mapped back to the original table and divided by s.
    let mut quotient_elems = Vec::new();
    for g in elimination_subset(&aux_basis, 1) {
        let g = g
            .strip_front(1, ideal.table().clone())
            .expect("elimination subset is free of the auxiliary variable");
        let q = g.exact_div(s).map_err(|_| IdealError::QuotientDivisionFailed)?;
        quotient_elems.push(q);
    }
    // The divided set is a Groebner basis but generally not reduced.
    let pres = IdealPresentation::new(quotient_elems, domain, ideal.table().clone())?;
    let reduce_cfg = EngineConfig { track_lift: false, ..config.clone() };
    let quotient_basis = pres.groebner_basis(&reduce_cfg)?;
    Ok(QuotientComputation { quotient_basis, aux_presentation, aux_basis, aux_lift })
}

/// Two ideals are equal iff their reduced lex bases coincide.
pub fn ideal_equal(
    a: &IdealPresentation,
    b: &IdealPresentation,
    config: &EngineConfig,
) -> Result<bool, IdealError> {
    if a.table() != b.table() || a.domain() != b.domain() {
        return Ok(false);
    }
    let ga = a.groebner_basis(config)?;
    let gb = b.groebner_basis(config)?;
    Ok(ga == gb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoefficientDomain;
    use crate::parse::parse_poly;

    fn q() -> CoefficientDomain {
        CoefficientDomain::Rationals
    }

    fn pres(table: &Arc<VariableTable>, gens: &[&str]) -> IdealPresentation {
        let polys: Vec<Polynomial> =
            gens.iter().map(|s| parse_poly(s, &q(), table).unwrap()).collect();
        IdealPresentation::new(polys, q(), table.clone()).unwrap()
    }

    #[test]
    fn presentation_dedupes() {
        let t = VariableTable::of(&["x", "y"]);
        let p = pres(&t, &["x", "x", "0 + x", "y"]);
        assert_eq!(p.generators().len(), 2);
    }

    #[test]
    fn quotient_xy_y2_by_y() {
        // (<x*y, y^2> : y) = <x, y>, checked on all monomials of degree <= 3.
        let t = VariableTable::of(&["x", "y"]);
        let i = pres(&t, &["x*y", "y^2"]);
        let y = parse_poly("y", &q(), &t).unwrap();
        let cfg = EngineConfig::default();
        let quot = ideal_quotient(&i, &y, &cfg).unwrap();
        let expected = pres(&t, &["x", "y"]).groebner_basis(&cfg).unwrap();
        assert_eq!(quot.quotient_basis, expected);

        // Brute-force cross-check: f*y in <xy, y^2> iff f in <x, y>.
        let gb_i = i.groebner_basis(&cfg).unwrap();
        for d in 0..=3u32 {
            for m in crate::monomial::monomials_of_degree(2, d) {
                let f = Polynomial::from_terms(vec![(q().one(), m)], q(), t.clone());
                let fy = f.mul(&y).unwrap();
                let in_i = gb_i.contains(&fy);
                let in_quot = quot.quotient_basis.contains(&f);
                assert_eq!(in_i, in_quot, "mismatch at {f:?}");
            }
        }
    }

    #[test]
    fn quotient_by_one_is_identity() {
        let t = VariableTable::of(&["x", "y"]);
        let i = pres(&t, &["x^2 - y", "x*y"]);
        let one = parse_poly("1", &q(), &t).unwrap();
        let cfg = EngineConfig::default();
        let quot = ideal_quotient(&i, &one, &cfg).unwrap();
        assert_eq!(quot.quotient_basis, i.groebner_basis(&cfg).unwrap());
    }

    #[test]
    fn quotient_rejects_zero() {
        let t = VariableTable::of(&["x"]);
        let i = pres(&t, &["x"]);
        let zero = Polynomial::zero(q(), t.clone());
        assert!(matches!(
            ideal_quotient(&i, &zero, &EngineConfig::default()),
            Err(IdealError::ZeroDivisorPolynomial)
        ));
    }

    #[test]
    fn ideal_equality() {
        let t = VariableTable::of(&["x"]);
        let cfg = EngineConfig::default();
        let a = pres(&t, &["x"]);
        let b = pres(&t, &["x", "x^2"]);
        let c = pres(&t, &["x^2"]);
        assert!(ideal_equal(&a, &b, &cfg).unwrap());
        assert!(!ideal_equal(&a, &c, &cfg).unwrap());
        assert!(ideal_equal(&a, &a, &cfg).unwrap());
    }

    #[test]
    fn elimination_drops_leading_variable() {
        // G = {x - y, y^2} is a lex basis; eliminating x leaves {y^2}.
        let t = VariableTable::of(&["x", "y"]);
        let cfg = EngineConfig::default();
        let gb = pres(&t, &["x - y", "y^2"]).groebner_basis(&cfg).unwrap();
        let sub = elimination_subset(&gb, 1);
        assert_eq!(sub.len(), 1);
        assert_eq!(sub[0], parse_poly("y^2", &q(), &t).unwrap());
        // k = 0 keeps everything.
        assert_eq!(elimination_subset(&gb, 0).len(), gb.len());
    }
}
