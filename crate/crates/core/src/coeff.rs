//! Coefficient domains: exact rationals and prime fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::primes::is_prime;

/// The coefficient ring a computation runs over.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientDomain {
    Rationals,
    PrimeField(u64),
}

impl CoefficientDomain {
    /// Prime field constructor; rejects composite moduli.
    pub fn prime_field(p: u64) -> Result<Self, String> {
        if is_prime(p) {
            Ok(CoefficientDomain::PrimeField(p))
        } else {
            Err(format!("{p} is not prime"))
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoefficientDomain::Rationals => Coeff::Rat(BigRational::zero()),
            CoefficientDomain::PrimeField(_) => Coeff::Mod(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoefficientDomain::Rationals => Coeff::Rat(BigRational::one()),
            CoefficientDomain::PrimeField(_) => Coeff::Mod(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            CoefficientDomain::Rationals => Coeff::Rat(BigRational::from(BigInt::from(v))),
            CoefficientDomain::PrimeField(p) => Coeff::Mod(v.rem_euclid(*p as i64) as u64),
        }
    }

    pub fn from_ratio(&self, num: BigInt, den: BigInt) -> Option<Coeff> {
        match self {
            CoefficientDomain::Rationals => {
                if den.is_zero() {
                    None
                } else {
                    Some(Coeff::Rat(BigRational::new(num, den)))
                }
            }
            CoefficientDomain::PrimeField(p) => {
                let p_big = BigInt::from(*p);
                let d = ((&den % &p_big) + &p_big) % &p_big;
                let d: u64 = d.try_into().ok()?;
                if d == 0 {
                    return None;
                }
                let n = ((&num % &p_big) + &p_big) % &p_big;
                let n: u64 = n.try_into().ok()?;
                Some(Coeff::Mod(mul_mod(n, inv_mod(d, *p)?, *p)))
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientDomain::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (CoefficientDomain::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                Coeff::Mod(add_mod(*x, *y, *p))
            }
            _ => panic!("coefficient/domain mismatch"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoefficientDomain::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            (CoefficientDomain::PrimeField(p), Coeff::Mod(x)) => {
                Coeff::Mod(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("coefficient/domain mismatch"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientDomain::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (CoefficientDomain::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                Coeff::Mod(mul_mod(*x, *y, *p))
            }
            _ => panic!("coefficient/domain mismatch"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        match (self, a) {
            (CoefficientDomain::Rationals, Coeff::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Coeff::Rat(x.recip()))
                }
            }
            (CoefficientDomain::PrimeField(p), Coeff::Mod(x)) => inv_mod(*x, *p).map(Coeff::Mod),
            _ => panic!("coefficient/domain mismatch"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        Some(self.mul(a, &self.inv(b)?))
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Mod(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(x) => x.is_one(),
            Coeff::Mod(x) => *x == 1,
        }
    }
}

/// A coefficient value; only meaningful together with its domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Mod(u64),
}

impl Coeff {
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rat(r) => Some(r),
            Coeff::Mod(_) => None,
        }
    }

    /// Sign of a rational coefficient; prime-field values count as positive.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_negative(),
            Coeff::Mod(_) => false,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Mod(v) => write!(f, "{v}"),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    // Extended Euclid on (a, p).
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "modulus must be prime");
    Some(t.rem_euclid(p as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(CoefficientDomain::prime_field(6).is_err());
        assert!(CoefficientDomain::prime_field(2).is_ok());
        assert!(CoefficientDomain::prime_field(809).is_ok());
    }

    #[test]
    fn mod_inverse() {
        let f = CoefficientDomain::PrimeField(7);
        for a in 1..7 {
            let inv = f.inv(&Coeff::Mod(a)).unwrap();
            assert!(f.is_one(&f.mul(&Coeff::Mod(a), &inv)));
        }
        assert!(f.inv(&Coeff::Mod(0)).is_none());
    }

    #[test]
    fn rational_to_prime_field() {
        // 1/3 mod 2 = 1 since 3 is odd.
        let f2 = CoefficientDomain::PrimeField(2);
        let c = f2.from_ratio(BigInt::from(1), BigInt::from(3)).unwrap();
        assert!(f2.is_one(&c));
        // 1/2 mod 2 does not exist.
        assert!(f2.from_ratio(BigInt::from(1), BigInt::from(2)).is_none());
    }
}
