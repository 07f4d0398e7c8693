//! Macaulay-matrix oracle: the degree-d slice of a homogeneous ideal as a
//! row-reduced linear basis. Independent of the Groebner machinery, it
//! cross-checks membership verdicts on homogeneous inputs.

use std::collections::BTreeMap;
use thiserror::Error;

use crate::coeff::{Coeff, CoefficientDomain};
use crate::ideal::IdealPresentation;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GradedError {
    #[error("generator {0} is not homogeneous")]
    NonHomogeneous(usize),
    #[error("polynomial degree does not match the component")]
    DegreeMismatch,
}

/// Row-reduced basis of the span of `{m * g : g generator, deg(m g) = d}`.
#[derive(Debug)]
pub struct GradedComponent {
    degree: u32,
    /// Descending list of degree-d monomials; column order of the rows.
    monomials: Vec<Monomial>,
    monomial_index: BTreeMap<Monomial, usize>,
    /// Reduced row echelon rows; pivot columns strictly increasing.
    rows: Vec<Vec<Coeff>>,
    pivots: Vec<usize>,
    domain: CoefficientDomain,
}

impl GradedComponent {
    pub fn new(ideal: &IdealPresentation, degree: u32) -> Result<Self, GradedError> {
        for (i, g) in ideal.generators().iter().enumerate() {
            if !g.is_homogeneous() {
                return Err(GradedError::NonHomogeneous(i));
            }
        }
        let nvars = ideal.table().len();
        let domain = ideal.domain().clone();
        let monomials = monomials_of_degree(nvars, degree);
        let monomial_index: BTreeMap<Monomial, usize> =
            monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

        let mut comp = GradedComponent {
            degree,
            monomials,
            monomial_index,
            rows: Vec::new(),
            pivots: Vec::new(),
            domain,
        };
        for g in ideal.generators() {
            let gd = g.total_degree().expect("generators are nonzero");
            if gd > degree {
                continue;
            }
            for m in monomials_of_degree(nvars, degree - gd) {
                let shifted = g.mul_term(&comp.domain.one(), &m);
                let vec = comp.to_vector(&shifted).expect("degree matches by construction");
                comp.insert_row(vec);
            }
        }
        Ok(comp)
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Basis rows as polynomials.
    pub fn basis_polynomials(
        &self,
        table: &std::sync::Arc<crate::vars::VariableTable>,
    ) -> Vec<Polynomial> {
        self.rows
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !self.domain.is_zero(c))
                    .map(|(i, c)| (c.clone(), self.monomials[i].clone()))
                    .collect();
                Polynomial::from_terms(terms, self.domain.clone(), table.clone())
            })
            .collect()
    }

    fn to_vector(&self, f: &Polynomial) -> Result<Vec<Coeff>, GradedError> {
        let mut vec = vec![self.domain.zero(); self.monomials.len()];
        for (c, m) in f.terms() {
            if m.degree() != self.degree {
                return Err(GradedError::DegreeMismatch);
            }
            let idx = *self.monomial_index.get(m).expect("all monomials of this degree indexed");
            vec[idx] = c.clone();
        }
        Ok(vec)
    }

    /// Reduce a coefficient vector by the current rows, in place.
    fn reduce_vector(&self, vec: &mut [Coeff]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if self.domain.is_zero(&vec[p]) {
                continue;
            }
            let factor = vec[p].clone();
            for (v, r) in vec.iter_mut().zip(row) {
                let prod = self.domain.mul(&factor, r);
                *v = self.domain.sub(v, &prod);
            }
        }
    }

    fn insert_row(&mut self, mut vec: Vec<Coeff>) {
        self.reduce_vector(&mut vec);
        let Some(pivot) = vec.iter().position(|c| !self.domain.is_zero(c)) else {
            return;
        };
        let inv = self.domain.inv(&vec[pivot]).unwrap();
        for v in vec.iter_mut() {
            *v = self.domain.mul(v, &inv);
        }
        // Back-substitute into existing rows to keep reduced echelon form.
        for row in self.rows.iter_mut() {
            if self.domain.is_zero(&row[pivot]) {
                continue;
            }
            let factor = row[pivot].clone();
            for (r, v) in row.iter_mut().zip(&vec) {
                let prod = self.domain.mul(&factor, v);
                *r = self.domain.sub(r, &prod);
            }
        }
        // Keep rows sorted by pivot column.
        let at = self.pivots.iter().position(|&q| q > pivot).unwrap_or(self.pivots.len());
        self.pivots.insert(at, pivot);
        self.rows.insert(at, vec);
    }

    /// Membership of a homogeneous polynomial of matching degree in the
    /// degree-d slice of the ideal.
    pub fn contains(&self, f: &Polynomial) -> Result<bool, GradedError> {
        if f.is_zero() {
            return Ok(true);
        }
        let mut vec = self.to_vector(f)?;
        self.reduce_vector(&mut vec);
        Ok(vec.iter().all(|c| self.domain.is_zero(c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::vars::VariableTable;

    #[test]
    fn degree_zero_of_proper_ideal_is_empty() {
        let t = VariableTable::of(&["x", "y"]);
        let q = CoefficientDomain::Rationals;
        let gens = vec![parse_poly("x^2 - y^2", &q, &t).unwrap()];
        let ideal = IdealPresentation::new(gens, q, t).unwrap();
        let comp = GradedComponent::new(&ideal, 0).unwrap();
        assert_eq!(comp.dimension(), 0);
    }

    #[test]
    fn rejects_inhomogeneous_generators() {
        let t = VariableTable::of(&["x", "y"]);
        let q = CoefficientDomain::Rationals;
        let gens = vec![parse_poly("x^2 - y", &q, &t).unwrap()];
        let ideal = IdealPresentation::new(gens, q, t).unwrap();
        assert_eq!(GradedComponent::new(&ideal, 2).unwrap_err(), GradedError::NonHomogeneous(0));
    }

    #[test]
    fn span_membership() {
        let t = VariableTable::of(&["x", "y", "z"]);
        let q = CoefficientDomain::Rationals;
        let gens = vec![
            parse_poly("x*y - z^2", &q, &t).unwrap(),
            parse_poly("x^2 + y^2", &q, &t).unwrap(),
        ];
        let ideal = IdealPresentation::new(gens, q.clone(), t.clone()).unwrap();
        let c2 = GradedComponent::new(&ideal, 2).unwrap();
        assert_eq!(c2.dimension(), 2);
        let inside = parse_poly("2*x*y - 2*z^2 + x^2 + y^2", &q, &t).unwrap();
        assert!(c2.contains(&inside).unwrap());
        let outside = parse_poly("x^2", &q, &t).unwrap();
        assert!(!c2.contains(&outside).unwrap());
        let wrong_degree = parse_poly("x^3", &q, &t).unwrap();
        assert_eq!(c2.contains(&wrong_degree).unwrap_err(), GradedError::DegreeMismatch);
    }
}
