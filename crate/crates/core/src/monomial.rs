//! Dense exponent-vector monomials ordered lexicographically.
//!
//! Index 0 of the exponent vector belongs to the greatest variable, so the
//! lexicographic comparison is a plain left-to-right slice comparison.

use smallvec::SmallVec;
use std::cmp::Ordering;

type Exponents = SmallVec<[u16; 22]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: smallvec::smallvec![0; nvars] }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial { exps: Exponents::from_vec(exps) }
    }

    pub fn variable(nvars: usize, idx: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[idx] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_of(&self, idx: usize) -> u16 {
        self.exps[idx]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Index of the greatest variable occurring, `None` for the unit.
    pub fn greatest_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn try_quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Reinterpret in a table extended by `extra` new greatest variables.
    pub fn pad_front(&self, extra: usize) -> Monomial {
        let mut exps = Exponents::with_capacity(self.nvars() + extra);
        exps.extend(std::iter::repeat(0).take(extra));
        exps.extend(self.exps.iter().copied());
        Monomial { exps }
    }

    /// Drop the first `count` variables; they must not occur.
    pub fn strip_front(&self, count: usize) -> Option<Monomial> {
        if self.exps[..count].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial { exps: self.exps[count..].iter().copied().collect() })
    }
}

/// Lexicographic order with variable 0 greatest: compare exponent vectors
/// left to right. This is a monomial order (multiplicative and total).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exposed comparison entry point; errors on arity mismatch instead of
/// panicking, for callers holding monomials from different tables.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering, String> {
    if a.nvars() != b.nvars() {
        return Err("monomials come from different variable tables".into());
    }
    Ok(a.cmp(b))
}

/// All monomials of the given total degree, in descending lex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u16; nvars];
    fn rec(idx: usize, remaining: u32, current: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if idx + 1 == current.len() {
            current[idx] = remaining as u16;
            out.push(Monomial::from_exponents(current.clone()));
            current[idx] = 0;
            return;
        }
        for e in (0..=remaining).rev() {
            current[idx] = e as u16;
            rec(idx + 1, remaining - e, current, out);
        }
        current[idx] = 0;
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, degree, &mut current, &mut out);
    out
}
