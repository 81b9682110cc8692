//! Cyclotomic values `Phi_i(q)` at integer `q` and their r-parts.
//!
//! Values come from the divisor recursion `q^i - 1 = prod_{j | i} Phi_j(q)`,
//! memoized per `(i, q)`. The r-part is available two ways: [`phi_r_part`]
//! uses the closed-form case analysis in terms of the multiplicative order of
//! `q` mod `r`, while [`phi_r_part_oracle`] factors the evaluated value by
//! trial division. The two must always agree.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{mult_order, r_part, r_part_of_power_minus_one, Prime};
use crate::error::{Error, Result};

/// Index `i` of the cyclotomic polynomial `Phi_i`; always `>= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycIndex(u32);

impl CycIndex {
    pub const fn new(i: u32) -> Option<Self> {
        if i == 0 {
            None
        } else {
            Some(CycIndex(i))
        }
    }

    pub const fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for CycIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

type Memo = RwLock<HashMap<(u32, u64), Arc<BigUint>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `Phi_i(q)` for `q >= 2`.
pub fn cyclotomic_eval(i: CycIndex, q: u64) -> Result<Arc<BigUint>> {
    assert!(q >= 2, "cyclotomic_eval needs q >= 2");
    let key = (i.get(), q);
    if let Some(v) = memo().read().unwrap().get(&key) {
        return Ok(Arc::clone(v));
    }
    let n = i.get();
    let mut value = BigUint::from(q).pow(n) - 1u32;
    for j in (1..n).filter(|j| n.is_multiple_of(*j)) {
        let factor = cyclotomic_eval(CycIndex(j), q)?;
        let (quot, rem) = value.div_rem(&factor);
        if !rem.is_zero() {
            return Err(Error::InexactDivision { index: n, q });
        }
        value = quot;
    }
    let value = Arc::new(value);
    memo()
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| Arc::clone(&value));
    Ok(value)
}

fn check_coprime(q: u64, r: Prime) -> Result<()> {
    if q.is_multiple_of(r.get()) {
        Err(Error::DefiningCharacteristic { q, r: r.get() })
    } else {
        Ok(())
    }
}

/// `phi_{i,r} = (Phi_i(q))_r` by the order-based case analysis.
///
/// For odd `r` with `e` the order of `q` mod `r`: `(q^e - 1)_r` at `i = e`,
/// `r` at `i = e r^f` (`f >= 1`), else 1. For `r = 2`: `(q-1)_2` at `i = 1`,
/// `(q+1)_2` at `i = 2`, `2` at `i = 2^f` (`f >= 2`), else 1.
pub fn phi_r_part(i: CycIndex, q: u64, r: Prime) -> Result<BigUint> {
    check_coprime(q, r)?;
    let i = i.get() as u64;
    if r.get() == 2 {
        return Ok(match i {
            1 => BigUint::from(crate::arith::r_part_u64(q - 1, r)),
            2 => BigUint::from(crate::arith::r_part_u64(q + 1, r)),
            _ if i.is_power_of_two() => BigUint::from(2u32),
            _ => BigUint::one(),
        });
    }
    let e = mult_order(q, r)?;
    if i == e {
        return Ok(r_part_of_power_minus_one(q, e, r));
    }
    if i.is_multiple_of(e) {
        let mut k = i / e;
        while k.is_multiple_of(r.get()) {
            k /= r.get();
        }
        if k == 1 {
            return Ok(BigUint::from(r.get()));
        }
    }
    Ok(BigUint::one())
}

/// Independent route: evaluate `Phi_i(q)` and strip powers of `r` off it.
pub fn phi_r_part_oracle(i: CycIndex, q: u64, r: Prime) -> Result<BigUint> {
    check_coprime(q, r)?;
    Ok(r_part(&*cyclotomic_eval(i, q)?, r))
}
