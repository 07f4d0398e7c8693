//! Unlucky-prime collection: the primes at which the mod-p image of a
//! rational reduced basis can fail to be a Groebner basis are confined to
//! divisors of the coefficients of the generators, the basis, and the lift
//! and syzygy matrices relating them. We collect the superset over
//! numerators and denominators of all of these.

use num_bigint::BigUint;
use num_traits::Signed;
use std::collections::BTreeSet;
use thiserror::Error;

use crate::coeff::Coeff;
use crate::groebner::{lift_over_basis, syzygy_matrix, EngineError, GroebnerBasis, LiftMatrix};
use crate::ideal::IdealPresentation;
use crate::poly::Polynomial;
use crate::primes::prime_factors;

#[derive(Debug, Error)]
pub enum UnluckyError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("a coefficient has a prime factor exceeding u64: {0}")]
    FactorOverflow(String),
    #[error("unlucky primes are only defined over the rationals")]
    NotRational,
}

/// Raw and factored views of the collected coefficient data.
#[derive(Clone, Debug, Default)]
pub struct UnluckyReport {
    /// Every numerator/denominator magnitude not equal to 0 or 1.
    pub raw: BTreeSet<BigUint>,
    /// The union of their prime factors.
    pub primes: BTreeSet<u64>,
}

impl UnluckyReport {
    fn absorb_coeff(&mut self, c: &Coeff, denominators_only: bool) -> Result<(), UnluckyError> {
        let r = c.as_rational().ok_or(UnluckyError::NotRational)?;
        let parts: &[&num_bigint::BigInt] =
            if denominators_only { &[r.denom()] } else { &[r.numer(), r.denom()] };
        for part in parts {
            let mag = part.abs().to_biguint().expect("abs is nonnegative");
            if mag > BigUint::from(1u8) {
                self.raw.insert(mag.clone());
                let factors =
                    prime_factors(&mag).map_err(|n| UnluckyError::FactorOverflow(n.to_string()))?;
                self.primes.extend(factors);
            }
        }
        Ok(())
    }

    fn absorb_poly(&mut self, p: &Polynomial, denominators_only: bool) -> Result<(), UnluckyError> {
        for (c, _) in p.terms() {
            self.absorb_coeff(c, denominators_only)?;
        }
        Ok(())
    }

    fn absorb_matrix(
        &mut self,
        rows: &[Vec<Polynomial>],
        denominators_only: bool,
    ) -> Result<(), UnluckyError> {
        for row in rows {
            for entry in row {
                self.absorb_poly(entry, denominators_only)?;
            }
        }
        Ok(())
    }
}

/// Collect the unlucky primes for a presentation `F` and its reduced basis
/// `G`: compute `Z` with `G = Z.F`, `Y` with `F = Y.G`, and the syzygy
/// matrix `R` of `G`, then factor the coefficient data. A precomputed `Z`
/// (from a tracked Buchberger run) may be supplied to avoid recomputation.
///
/// Scope: numerators and denominators of the coefficients of `F`, `G`, `Z`
/// and `Y`; denominators only for `R`. A syzygy-row numerator vanishing
/// modulo p merely deletes a term from a standard representation of an
/// S-polynomial, which stays a standard representation, so such primes
/// cannot break the mod-p Groebner property.
pub fn unlucky_primes(
    f: &IdealPresentation,
    g: &GroebnerBasis,
    z: Option<&LiftMatrix>,
    config: &crate::groebner::EngineConfig,
) -> Result<UnluckyReport, UnluckyError> {
    let mut report = UnluckyReport::default();
    for gen in f.generators() {
        report.absorb_poly(gen, false)?;
    }
    for elem in g.elements() {
        report.absorb_poly(elem, false)?;
    }
    let z_matrix;
    let z = match z {
        Some(z) => z,
        None => {
            z_matrix = crate::groebner::lift(g.elements(), f)
                .map_err(UnluckyError::Engine)?;
            &z_matrix
        }
    };
    report.absorb_matrix(&z.rows, false)?;
    let y = lift_over_basis(f.generators(), g)?;
    report.absorb_matrix(&y.rows, false)?;
    let r = syzygy_matrix(g);
    report.absorb_matrix(&r.rows, true)?;
    let _ = config;
    Ok(report)
}

/// Winkler consistency: for a prime outside the collected set, the mod-p
/// image of the rational reduced basis must be the reduced basis of the
/// mod-p ideal, computed independently.
pub fn winkler_check(
    f: &IdealPresentation,
    g: &GroebnerBasis,
    p: u64,
    config: &crate::groebner::EngineConfig,
) -> Result<bool, EngineError> {
    let fp = crate::coeff::CoefficientDomain::PrimeField(p);
    let mut image = Vec::with_capacity(g.len());
    for elem in g.elements() {
        match elem.reduce_mod_prime(p) {
            Ok(q) => image.push(q.monic()),
            Err(_) => return Ok(false),
        }
    }
    let mut gens_p = Vec::with_capacity(f.generators().len());
    for gen in f.generators() {
        match gen.reduce_mod_prime(p) {
            Ok(q) => {
                if !q.is_zero() {
                    gens_p.push(q);
                }
            }
            Err(_) => return Ok(false),
        }
    }
    let pres_p = IdealPresentation::new(gens_p, fp.clone(), f.table().clone())
        .expect("reduced generators share the ring");
    let basis_p = pres_p.groebner_basis(config)?;
    let image_basis =
        GroebnerBasis::from_reduced_elements(image, fp, f.table().clone());
    Ok(image_basis == basis_p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoefficientDomain;
    use crate::groebner::EngineConfig;
    use crate::parse::parse_poly;
    use crate::vars::VariableTable;

    #[test]
    fn single_monic_generator_has_no_unlucky_primes() {
        let t = VariableTable::of(&["x"]);
        let q = CoefficientDomain::Rationals;
        let f = IdealPresentation::new(vec![parse_poly("x", &q, &t).unwrap()], q, t).unwrap();
        let cfg = EngineConfig::default();
        let g = f.groebner_basis(&cfg).unwrap();
        let report = unlucky_primes(&f, &g, None, &cfg).unwrap();
        assert!(report.primes.is_empty());
        assert!(report.raw.is_empty());
    }

    #[test]
    fn coefficient_primes_are_collected() {
        let t = VariableTable::of(&["x", "y"]);
        let q = CoefficientDomain::Rationals;
        let f = IdealPresentation::new(
            vec![parse_poly("6*x - y", &q, &t).unwrap(), parse_poly("y^2", &q, &t).unwrap()],
            q,
            t,
        )
        .unwrap();
        let cfg = EngineConfig::default();
        let g = f.groebner_basis(&cfg).unwrap();
        let report = unlucky_primes(&f, &g, None, &cfg).unwrap();
        assert!(report.primes.contains(&2));
        assert!(report.primes.contains(&3));
    }
}
