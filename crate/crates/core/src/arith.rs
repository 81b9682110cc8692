//! Exact integer and rational arithmetic helpers.
//!
//! Integers are [`BigUint`]/[`BigInt`] from `num-bigint`; rationals are
//! `num-rational`'s [`BigRational`], which is always kept in lowest terms with
//! a positive denominator, so `==` is structural equality of reduced fractions.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms.
pub type Rational = BigRational;

/// Builds the reduced fraction `num / den`. Panics if `den == 0`.
pub fn ratio(num: u64, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_from(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// A prime number, validated once at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(n: u64) -> Result<Self> {
        if is_prime(n) {
            Ok(Prime(n))
        } else {
            Err(Error::NotPrime(n))
        }
    }


    pub const fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Prime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.0)
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
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

/// Deterministic Miller-Rabin; the witness set is exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Returns `(p, f)` with `q = p^f`, or `None` when `q` is not a prime power.
pub fn prime_power_decompose(q: u64) -> Option<(Prime, u32)> {
    if q < 2 {
        return None;
    }
    let p = if is_prime(q) { q } else { smallest_prime_factor(q) };
    let mut rest = q;
    let mut f = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((Prime(p), f))
}

/// Distinct prime factors by trial division, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let p = if is_prime(n) { n } else { smallest_prime_factor(n) };
        out.push(p);
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    out
}

/// The largest power of `r` dividing `n` (the r-part `n_r`). `n` must be nonzero.
pub fn r_part(n: &BigUint, r: Prime) -> BigUint {
    assert!(!n.is_zero(), "r-part of zero is undefined");
    let r = BigUint::from(r.get());
    let mut part = BigUint::one();
    let mut rest = n.clone();
    loop {
        let (quot, rem) = rest.div_rem(&r);
        if !rem.is_zero() {
            return part;
        }
        part *= &r;
        rest = quot;
    }
}

pub fn r_part_u64(mut n: u64, r: Prime) -> u64 {
    assert!(n != 0, "r-part of zero is undefined");
    let mut part = 1;
    while n.is_multiple_of(r.0) {
        n /= r.0;
        part *= r.0;
    }
    part
}

/// Smallest `e >= 1` with `q^e = 1 (mod r)`.
pub fn mult_order(q: u64, r: Prime) -> Result<u64> {
    let r = r.get();
    let base = q % r;
    if base == 0 {
        return Err(Error::DefiningCharacteristic { q, r });
    }
    let mut e = r - 1;
    for p in prime_factors(r - 1) {
        while e.is_multiple_of(p) && pow_mod(base, e / p, r) == 1 {
            e /= p;
        }
    }
    Ok(e)
}

/// `(q^e - 1)_r` where `e` is a positive multiple of the order of `q` mod `r`.
pub fn r_part_of_power_minus_one(q: u64, e: u64, r: Prime) -> BigUint {
    let r = r.get();
    debug_assert_eq!(pow_mod(q, e, r), 1);
    let mut part = r;
    loop {
        let Some(next) = part.checked_mul(r) else {
            return big_r_part_of_power_minus_one(q, e, r, part);
        };
        if pow_mod(q, e, next) != 1 {
            return BigUint::from(part);
        }
        part = next;
    }
}

fn big_r_part_of_power_minus_one(q: u64, e: u64, r: u64, from: u64) -> BigUint {
    let q = BigUint::from(q);
    let e = BigUint::from(e);
    let r = BigUint::from(r);
    let mut part = BigUint::from(from);
    loop {
        let next = &part * &r;
        if !q.modpow(&e, &next).is_one() {
            return part;
        }
        part = next;
    }
}

/// Sieve of Eratosthenes: all primes `<= bound`.
pub fn primes_up_to(bound: u64) -> Vec<Prime> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(Prime(i as u64));
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// All prime powers `2 <= q <= bound`, ascending.
pub fn prime_powers_up_to(bound: u64) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for p in primes_up_to(bound) {
        let mut q = p.get();
        loop {
            out.push(q);
            match q.checked_mul(p.get()) {
                Some(next) if next <= bound => q = next,
                _ => break,
            }
        }
    }
    out.sort_unstable();
    out
}

/// Decimal rendering of `x` rounded half-up to `digits` places, computed
/// with integer arithmetic. For display only.
pub fn decimal_approx(x: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let neg = x.is_negative();
    let num = x.numer().abs() * &scale;
    let den = x.denom();
    let (mut q, r) = num.div_rem(den);
    if r * 2u32 >= *den {
        q += 1u32;
    }
    let (int, frac) = q.div_rem(&scale);
    let sign = if neg && !(int.is_zero() && frac.is_zero()) { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits as usize)
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
