//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are kept strictly descending in the lexicographic order and never
//! carry zero coefficients, so structural equality is semantic equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

use crate::coeff::{Coeff, CoefficientDomain};
use crate::monomial::Monomial;
use crate::vars::VariableTable;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials use different variable tables")]
    TableMismatch,
    #[error("polynomials use different coefficient domains")]
    DomainMismatch,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("a denominator is divisible by {0}")]
    DenominatorDivisibleByP(u64),
    #[error("exact division failed")]
    NotDivisible,
}

/// Which normal form the stored coefficients are in. Arithmetic results are
/// `Raw`; ideal generators are normalized to `PrimitiveInteger`; reduced
/// Groebner basis elements over `Q` are `Monic`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Canon {
    Raw,
    PrimitiveInteger,
    Monic,
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    terms: Vec<(Coeff, Monomial)>,
    domain: CoefficientDomain,
    table: Arc<VariableTable>,
    canon: Canon,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        // The canonicalization flag is bookkeeping, not identity.
        self.domain == other.domain && self.table == other.table && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(domain: CoefficientDomain, table: Arc<VariableTable>) -> Self {
        Polynomial { terms: Vec::new(), domain, table, canon: Canon::Raw }
    }

    pub fn constant(c: Coeff, domain: CoefficientDomain, table: Arc<VariableTable>) -> Self {
        let nvars = table.len();
        Polynomial::from_terms(vec![(c, Monomial::one(nvars))], domain, table)
    }

    pub fn variable(idx: usize, domain: CoefficientDomain, table: Arc<VariableTable>) -> Self {
        let nvars = table.len();
        Polynomial::from_terms(
            vec![(domain.one(), Monomial::variable(nvars, idx))],
            domain,
            table,
        )
    }

    /// Build from arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(
        terms: Vec<(Coeff, Monomial)>,
        domain: CoefficientDomain,
        table: Arc<VariableTable>,
    ) -> Self {
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (c, m) in terms {
            debug_assert_eq!(m.nvars(), table.len());
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = domain.add(e.get(), &c);
                    *e.get_mut() = s;
                }
            }
        }
        let mut terms: Vec<(Coeff, Monomial)> = map
            .into_iter()
            .filter(|(_, c)| !domain.is_zero(c))
            .map(|(m, c)| (c, m))
            .collect();
        terms.reverse(); // BTreeMap iterates ascending; we store descending.
        Polynomial { terms, domain, table, canon: Canon::Raw }
    }

    pub fn domain(&self) -> &CoefficientDomain {
        &self.domain
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn canon(&self) -> Canon {
        self.canon
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.table != other.table {
            return Err(PolyError::TableMismatch);
        }
        if self.domain != other.domain {
            return Err(PolyError::DomainMismatch);
        }
        Ok(())
    }

    /// Leading (lex-greatest) term.
    pub fn leading_term(&self) -> Result<(&Coeff, &Monomial), PolyError> {
        self.terms
            .first()
            .map(|(c, m)| (c, m))
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(c, _)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(_, m)| m.degree_of(var)).max().unwrap_or(0)
    }

    /// Index of the greatest variable occurring anywhere, `None` if constant.
    pub fn greatest_var(&self) -> Option<usize> {
        self.terms.iter().filter_map(|(_, m)| m.greatest_var()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => {
                let d = m0.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { self.domain.neg(cb) } else { cb.clone() };
                    out.push((c, mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        self.domain.sub(ca, cb)
                    } else {
                        self.domain.add(ca, cb)
                    };
                    if !self.domain.is_zero(&c) {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (cb, mb) in &other.terms[j..] {
            let c = if negate { self.domain.neg(cb) } else { cb.clone() };
            out.push((c, mb.clone()));
        }
        Polynomial { terms: out, domain: self.domain.clone(), table: self.table.clone(), canon: Canon::Raw }
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (self.domain.neg(c), m.clone()))
            .collect();
        Polynomial { terms, domain: self.domain.clone(), table: self.table.clone(), canon: Canon::Raw }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if self.domain.is_zero(c) {
            return Polynomial::zero(self.domain.clone(), self.table.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, m)| (self.domain.mul(a, c), m.clone()))
            .collect();
        Polynomial { terms, domain: self.domain.clone(), table: self.table.clone(), canon: Canon::Raw }
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if self.domain.is_zero(c) {
            return Polynomial::zero(self.domain.clone(), self.table.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, ma)| (self.domain.mul(a, c), ma.mul(m)))
            .collect();
        Polynomial { terms, domain: self.domain.clone(), table: self.table.clone(), canon: Canon::Raw }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let m = ma.mul(mb);
                let prod = self.domain.mul(ca, cb);
                match map.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = self.domain.add(e.get(), &prod);
                        *e.get_mut() = s;
                    }
                }
            }
        }
        let mut terms: Vec<(Coeff, Monomial)> = map
            .into_iter()
            .filter(|(_, c)| !self.domain.is_zero(c))
            .map(|(m, c)| (c, m))
            .collect();
        terms.reverse();
        Ok(Polynomial { terms, domain: self.domain.clone(), table: self.table.clone(), canon: Canon::Raw })
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.domain.one(), self.domain.clone(), self.table.clone());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Content-normalized integer form: over `Q`, divides out the rational
    /// content so coefficients become coprime integers with positive leading
    /// sign. Over a prime field this is the monic form.
    pub fn primitive_integer(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        match &self.domain {
            CoefficientDomain::PrimeField(_) => {
                let mut p = self.monic();
                p.canon = Canon::PrimitiveInteger;
                p
            }
            CoefficientDomain::Rationals => {
                let mut den_lcm = BigInt::one();
                let mut num_gcd = BigInt::zero();
                for (c, _) in &self.terms {
                    let r = c.as_rational().expect("rational domain");
                    den_lcm = den_lcm.lcm(r.denom());
                    num_gcd = num_gcd.gcd(r.numer());
                }
                let mut factor = BigRational::new(den_lcm, num_gcd);
                let lead = self.terms[0].0.as_rational().unwrap();
                if (lead * &factor).is_negative() {
                    factor = -factor;
                }
                let mut p = self.scale(&Coeff::Rat(factor));
                p.canon = Canon::PrimitiveInteger;
                p
            }
        }
    }

    /// Monic form (leading coefficient 1).
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self
            .domain
            .inv(self.leading_coeff().unwrap())
            .expect("leading coefficient is nonzero");
        let mut p = self.scale(&inv);
        p.canon = Canon::Monic;
        p
    }

    /// Exact division: `self / divisor` with zero remainder, or an error.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut rem = self.clone();
        let mut quo_terms: Vec<(Coeff, Monomial)> = Vec::new();
        let (dc, dm) = divisor.leading_term().unwrap();
        let (dc, dm) = (dc.clone(), dm.clone());
        while !rem.is_zero() {
            let (rc, rm) = rem.leading_term().unwrap();
            let q_mono = match dm.try_quotient(rm) {
                Some(q) => q,
                None => return Err(PolyError::NotDivisible),
            };
            let q_coeff = self.domain.div(rc, &dc).expect("division in a field");
            rem = rem.sub(&divisor.mul_term(&q_coeff, &q_mono))?;
            quo_terms.push((q_coeff, q_mono));
        }
        Ok(Polynomial::from_terms(quo_terms, self.domain.clone(), self.table.clone()))
    }

    /// Coefficient of `x_var^k` as a polynomial in the remaining variables
    /// (the power of `x_var` is removed).
    pub fn coeff_of_power(&self, var: usize, k: u16) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| m.degree_of(var) == k)
            .map(|(c, m)| {
                let mut exps = m.exponents().to_vec();
                exps[var] = 0;
                (c.clone(), Monomial::from_exponents(exps))
            })
            .collect();
        Polynomial::from_terms(terms, self.domain.clone(), self.table.clone())
    }

    /// Coefficient-wise reduction of a rational polynomial modulo `p`.
    pub fn reduce_mod_prime(&self, p: u64) -> Result<Polynomial, PolyError> {
        assert_eq!(self.domain, CoefficientDomain::Rationals, "input must be rational");
        let fp = CoefficientDomain::PrimeField(p);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let r = c.as_rational().unwrap();
            let c = fp
                .from_ratio(r.numer().clone(), r.denom().clone())
                .ok_or(PolyError::DenominatorDivisibleByP(p))?;
            if !fp.is_zero(&c) {
                terms.push((c, m.clone()));
            }
        }
        Ok(Polynomial { terms, domain: fp, table: self.table.clone(), canon: Canon::Raw })
    }

    /// View in a table extended by fresh greatest variables.
    pub fn pad_front(&self, extra: usize, table: Arc<VariableTable>) -> Polynomial {
        debug_assert_eq!(table.len(), self.table.len() + extra);
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (c.clone(), m.pad_front(extra)))
            .collect();
        Polynomial { terms, domain: self.domain.clone(), table, canon: self.canon }
    }

    /// View in the suffix table, assuming the stripped variables are absent.
    pub fn strip_front(&self, count: usize, table: Arc<VariableTable>) -> Option<Polynomial> {
        debug_assert_eq!(table.len() + count, self.table.len());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            terms.push((c.clone(), m.strip_front(count)?));
        }
        Some(Polynomial { terms, domain: self.domain.clone(), table, canon: self.canon })
    }

    /// Total-order comparison on term lists, used for deterministic output.
    pub fn cmp_canonical(&self, other: &Polynomial) -> Ordering {
        let mut i = 0;
        loop {
            match (self.terms.get(i), other.terms.get(i)) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((_, ma)), Some((_, mb))) => match ma.cmp(mb) {
                    Ordering::Equal => i += 1,
                    ord => return ord,
                },
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table3() -> Arc<VariableTable> {
        VariableTable::of(&["x", "y", "z"])
    }

    fn q() -> CoefficientDomain {
        CoefficientDomain::Rationals
    }

    #[test]
    fn additive_identity() {
        let t = table3();
        let f = Polynomial::variable(0, q(), t.clone());
        let zero = Polynomial::zero(q(), t);
        assert_eq!(f.add(&zero).unwrap(), f);
    }

    #[test]
    fn trace_square_identity_2x2() {
        // For symmetric X = [[a, b], [b, c]]:
        // trace(X)^2 - trace(X^2) = 2(ac - b^2).
        let t = VariableTable::of(&["a", "b", "c"]);
        let a = Polynomial::variable(0, q(), t.clone());
        let b = Polynomial::variable(1, q(), t.clone());
        let c = Polynomial::variable(2, q(), t.clone());
        let trace = a.add(&c).unwrap();
        let trace_sq = trace.mul(&trace).unwrap();
        let x2_trace = a
            .mul(&a)
            .unwrap()
            .add(&b.mul(&b).unwrap())
            .unwrap()
            .add(&b.mul(&b).unwrap())
            .unwrap()
            .add(&c.mul(&c).unwrap())
            .unwrap();
        let lhs = trace_sq.sub(&x2_trace).unwrap();
        let sigma2 = a.mul(&c).unwrap().sub(&b.mul(&b).unwrap()).unwrap();
        let rhs = sigma2.scale(&q().from_i64(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn leading_term_of_minor() {
        // x55*x66 - x56^2 has leading term x55*x66 with coefficient 1.
        let t = VariableTable::of(&["x55", "x56", "x66"]);
        let x55 = Polynomial::variable(0, q(), t.clone());
        let x56 = Polynomial::variable(1, q(), t.clone());
        let x66 = Polynomial::variable(2, q(), t.clone());
        let f = x55.mul(&x66).unwrap().sub(&x56.mul(&x56).unwrap()).unwrap();
        let (c, m) = f.leading_term().unwrap();
        assert!(q().is_one(c));
        assert_eq!(m.exponents(), &[1, 0, 1]);
    }

    #[test]
    fn zero_polynomial_has_no_leading_term() {
        let t = table3();
        let z = Polynomial::zero(q(), t);
        assert_eq!(z.leading_term().unwrap_err(), PolyError::ZeroPolynomial);
    }

    #[test]
    fn primitive_integer_form() {
        let t = table3();
        let x = Polynomial::variable(0, q(), t.clone());
        let y = Polynomial::variable(1, q(), t);
        // (2/3)x - 4y  ->  x - 6y
        let f = x
            .scale(&CoefficientDomain::Rationals.from_ratio(2.into(), 3.into()).unwrap())
            .sub(&y.scale(&q().from_i64(4)))
            .unwrap();
        let p = f.primitive_integer();
        assert_eq!(p.canon(), Canon::PrimitiveInteger);
        assert_eq!(p.terms()[0].0, q().from_i64(1));
        assert_eq!(p.terms()[1].0, q().from_i64(-6));
    }

    #[test]
    fn reduce_mod_two() {
        let t = table3();
        let x = Polynomial::variable(0, q(), t.clone());
        // x^2 + 2x mod 2 = x^2
        let f = x.mul(&x).unwrap().add(&x.scale(&q().from_i64(2))).unwrap();
        let g = f.reduce_mod_prime(2).unwrap();
        assert_eq!(g.num_terms(), 1);
        assert_eq!(g.leading_monomial().unwrap().exponents(), &[2, 0, 0]);
        // (1/2)x mod 2 fails.
        let h = x.scale(&CoefficientDomain::Rationals.from_ratio(1.into(), 2.into()).unwrap());
        assert_eq!(h.reduce_mod_prime(2).unwrap_err(), PolyError::DenominatorDivisibleByP(2));
    }

    #[test]
    fn exact_division() {
        let t = table3();
        let x = Polynomial::variable(0, q(), t.clone());
        let y = Polynomial::variable(1, q(), t.clone());
        let f = x.add(&y).unwrap();
        let g = x.sub(&y).unwrap();
        let prod = f.mul(&g).unwrap();
        assert_eq!(prod.exact_div(&f).unwrap(), g);
        assert_eq!(prod.exact_div(&g).unwrap(), f);
        let one = Polynomial::constant(q().one(), q(), t);
        assert_eq!(prod.exact_div(&prod).unwrap(), one);
        assert_eq!(f.exact_div(&prod).unwrap_err(), PolyError::NotDivisible);
    }
}
