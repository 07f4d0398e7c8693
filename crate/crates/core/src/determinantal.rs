//! Construction of the determinantal ideals `J(s, n)` attached to a generic
//! symmetric matrix: the trace, the entries of `X^2`, the rank-(s+1) minors,
//! and for s >= 3 the remaining low characteristic-polynomial coefficients.

use std::sync::Arc;
use thiserror::Error;

use crate::coeff::CoefficientDomain;
use crate::ideal::IdealPresentation;
use crate::poly::Polynomial;
use crate::vars::VariableTable;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("signature must satisfy 1 <= s <= n, got s = {s}, n = {n}")]
    BadSignature { s: u32, n: u32 },
    #[error("matrix dimension must be at least 2, got {0}")]
    BadDimension(u32),
}

/// Parameters of `J(s, n)` together with its upper-triangle variable table
/// in the row-major order `x11 > x12 > ... > x1n > x22 > ... > xnn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantalIdealSpec {
    s: u32,
    n: u32,
    table: Arc<VariableTable>,
}

/// Single-letter aliases used for the 6x6 instance: the twenty-one letters
/// of the Italian alphabet in order.
const ITALIAN_ALPHABET: [char; 21] = [
    'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'l', 'm', 'n', 'o', 'p', 'q', 'r', 's', 't',
    'u', 'v', 'z',
];

impl DeterminantalIdealSpec {
    pub fn new(s: u32, n: u32) -> Result<Self, SpecError> {
        if n < 2 {
            return Err(SpecError::BadDimension(n));
        }
        if s < 1 || s > n {
            return Err(SpecError::BadSignature { s, n });
        }
        let mut names = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                names.push(format!("x{i}{j}"));
            }
        }
        let table = if names.len() == ITALIAN_ALPHABET.len() {
            let aliases = ITALIAN_ALPHABET.iter().map(|c| Some(*c)).collect();
            VariableTable::with_aliases(names, aliases).expect("valid alias table")
        } else {
            VariableTable::new(names).expect("valid names")
        };
        Ok(DeterminantalIdealSpec { s, n, table })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    /// Variable index of `x_ij` (1-based matrix coordinates, i <= j).
    pub fn var_index(&self, i: u32, j: u32) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let n = self.n;
        // Row r (1-based) starts after (r-1) full rows of lengths n, n-1, ...
        let before: u32 = (0..i - 1).map(|r| n - r).sum();
        (before + (j - i)) as usize
    }

    /// Entry `x_ij` of the generic symmetric matrix as a polynomial.
    pub fn entry(&self, domain: &CoefficientDomain, i: u32, j: u32) -> Polynomial {
        Polynomial::variable(self.var_index(i, j), domain.clone(), self.table.clone())
    }

    /// Entry `(i, j)` of `X^2`.
    pub fn x_squared_entry(&self, domain: &CoefficientDomain, i: u32, j: u32) -> Polynomial {
        let mut acc = Polynomial::zero(domain.clone(), self.table.clone());
        for k in 1..=self.n {
            let p = self.entry(domain, i, k).mul(&self.entry(domain, k, j)).unwrap();
            acc = acc.add(&p).unwrap();
        }
        acc
    }

    pub fn trace(&self, domain: &CoefficientDomain) -> Polynomial {
        let mut acc = Polynomial::zero(domain.clone(), self.table.clone());
        for i in 1..=self.n {
            acc = acc.add(&self.entry(domain, i, i)).unwrap();
        }
        acc
    }

    /// Determinant of the submatrix on `rows` x `cols` by Laplace expansion.
    pub fn minor(&self, domain: &CoefficientDomain, rows: &[u32], cols: &[u32]) -> Polynomial {
        debug_assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return Polynomial::constant(domain.one(), domain.clone(), self.table.clone());
        }
        let mut acc = Polynomial::zero(domain.clone(), self.table.clone());
        let r = rows[0];
        for (k, &c) in cols.iter().enumerate() {
            let sub_rows = &rows[1..];
            let sub_cols: Vec<u32> =
                cols.iter().enumerate().filter(|(t, _)| *t != k).map(|(_, &c)| c).collect();
            let cofactor = self.minor(domain, sub_rows, &sub_cols);
            let term = self.entry(domain, r, c).mul(&cofactor).unwrap();
            if k % 2 == 0 {
                acc = acc.add(&term).unwrap();
            } else {
                acc = acc.sub(&term).unwrap();
            }
        }
        acc
    }

    /// Coefficient `sigma_k`: the sum of the k x k principal minors.
    pub fn sigma(&self, domain: &CoefficientDomain, k: u32) -> Polynomial {
        let mut acc = Polynomial::zero(domain.clone(), self.table.clone());
        for subset in subsets(self.n, k) {
            acc = acc.add(&self.minor(domain, &subset, &subset)).unwrap();
        }
        acc
    }

    /// The generating set of `J(s, n)` over the symmetric variables: trace,
    /// entries of `X^2`, all rank-(s+1) minors deduplicated by symmetry, and
    /// `sigma_2 ... sigma_s` when s >= 3 (for s = 2 the identity
    /// `trace(X^2) = trace(X)^2 - 2 sigma_2` makes `sigma_2` redundant).
    pub fn build(&self, domain: &CoefficientDomain) -> IdealPresentation {
        let mut gens = Vec::new();
        gens.push(self.trace(domain));
        for i in 1..=self.n {
            for j in i..=self.n {
                gens.push(self.x_squared_entry(domain, i, j));
            }
        }
        let k = self.s + 1;
        if k <= self.n {
            for rows in subsets(self.n, k) {
                for cols in subsets(self.n, k) {
                    // M(rows, cols) = M(cols, rows) for a symmetric matrix;
                    // emit each unordered pair once.
                    if rows <= cols {
                        gens.push(self.minor(domain, &rows, &cols));
                    }
                }
            }
        }
        for k in 2..=self.s.min(self.n) {
            if self.s >= 3 {
                gens.push(self.sigma(domain, k));
            }
        }
        IdealPresentation::new(gens, domain.clone(), self.table.clone())
            .expect("generators share the ring")
    }
}

fn subsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: u32, n: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k as usize {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{format_poly, parse_poly};

    fn q() -> CoefficientDomain {
        CoefficientDomain::Rationals
    }

    #[test]
    fn variable_order_is_row_major_upper_triangle() {
        let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
        let t = spec.table();
        assert_eq!(t.len(), 21);
        assert_eq!(t.name(0), "x11");
        assert_eq!(t.name(5), "x16");
        assert_eq!(t.name(6), "x22");
        assert_eq!(t.name(20), "x66");
        // Alias table: a = x11, f = x16, l = x25, z = x66.
        assert_eq!(t.index_of("a"), Some(0));
        assert_eq!(t.index_of("f"), Some(5));
        assert_eq!(t.index_of("l"), t.index_of("x25"));
        assert_eq!(t.index_of("z"), Some(20));
    }

    #[test]
    fn j22_generator_degrees() {
        // No rank-3 minors exist for a 2x2 matrix: degrees are {1, 2} only.
        let spec = DeterminantalIdealSpec::new(2, 2).unwrap();
        let ideal = spec.build(&q());
        let mut degrees: Vec<u32> =
            ideal.generators().iter().map(|g| g.total_degree().unwrap()).collect();
        degrees.sort();
        degrees.dedup();
        assert_eq!(degrees, vec![1, 2]);
    }

    #[test]
    fn j26_generator_count() {
        // 1 trace + 21 distinct X^2 entries + 210 unordered 3-minor pairs.
        let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
        let ideal = spec.build(&q());
        assert_eq!(ideal.generators().len(), 1 + 21 + 210);
    }

    #[test]
    fn x_squared_entry_11_is_sum_of_squares_of_first_row() {
        let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
        let f = spec.x_squared_entry(&q(), 1, 1);
        let expected =
            parse_poly("x11^2 + x12^2 + x13^2 + x14^2 + x15^2 + x16^2", &q(), spec.table())
                .unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn generators_are_homogeneous_of_low_degree() {
        let spec = DeterminantalIdealSpec::new(2, 4).unwrap();
        for g in spec.build(&q()).generators() {
            assert!(g.is_homogeneous());
            assert!(g.total_degree().unwrap() <= 3);
        }
    }

    #[test]
    fn minor_formatting_matches_alias_grammar() {
        // The (5,6)-cofactor shape used in the linear chain case.
        let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
        let m = spec.minor(&q(), &[5, 6], &[5, 6]);
        assert_eq!(format_poly(&m), "x55*x66 - x56^2");
        let via_alias = parse_poly("u*z - v^2", &q(), spec.table()).unwrap();
        assert_eq!(m, via_alias);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(DeterminantalIdealSpec::new(0, 4).is_err());
        assert!(DeterminantalIdealSpec::new(3, 2).is_err());
        assert!(DeterminantalIdealSpec::new(2, 1).is_err());
    }
}
