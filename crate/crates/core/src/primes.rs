//! Deterministic primality testing and integer factorization, used when
//! collecting excluded primes from coefficient data.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// Deterministic Miller-Rabin for u64 (fixed witness set).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    // This witness set decides primality for all n < 3.3 * 10^24.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Pollard's rho with Brent cycle detection. Caller guarantees `n` composite.
fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = (mul_mod(x, x, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn factor_u64_into(n: u64, out: &mut BTreeSet<u64>) {
    if n < 2 {
        return;
    }
    if is_prime(n) {
        out.insert(n);
        return;
    }
    let d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

/// Set of distinct prime factors of |n|. Fails only if a prime factor
/// exceeds `u64`, which cannot happen for inputs below 2^128 with all
/// factors bounded; the error carries the offending cofactor.
pub fn prime_factors(n: &BigUint) -> Result<BTreeSet<u64>, BigUint> {
    let mut set = BTreeSet::new();
    if n.is_zero() || n.is_one() {
        return Ok(set);
    }
    let mut rest = n.clone();
    // Strip small primes first so the u64 path below sees smaller cofactors.
    for p in 2u64..1000 {
        if !is_prime(p) {
            continue;
        }
        let pb = BigUint::from(p);
        if (&rest % &pb).is_zero() {
            set.insert(p);
            while (&rest % &pb).is_zero() {
                rest /= &pb;
            }
        }
        if rest.is_one() {
            return Ok(set);
        }
    }
    factor_big(rest, &mut set)?;
    Ok(set)
}

fn factor_big(n: BigUint, out: &mut BTreeSet<u64>) -> Result<(), BigUint> {
    if n.is_one() {
        return Ok(());
    }
    if let Some(small) = n.to_u64() {
        factor_u64_into(small, out);
        return Ok(());
    }
    // Large cofactor: try a Pollard rho over BigUint.
    if big_is_probable_prime(&n) {
        return Err(n);
    }
    let d = big_pollard_rho(&n);
    let q = &n / &d;
    factor_big(d, out)?;
    factor_big(q, out)
}

fn big_is_probable_prime(n: &BigUint) -> bool {
    // Miller-Rabin with fixed bases; adequate for factor routing.
    let one = BigUint::one();
    let two = &one + &one;
    if n < &two {
        return false;
    }
    if n.is_even() {
        return *n == two;
    }
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut r = 0u32;
    while d.is_even() {
        d >>= 1;
        r += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigUint::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..r.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn big_pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = one.clone();
    loop {
        let mut x = BigUint::from(2u64);
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && &d != n {
            return d;
        }
        c += &one;
    }
}
