//! Maximal-torus catalogs and the torus-sum engine.
//!
//! A catalog lists the F-classes of the Weyl group, each with its proportion
//! `|C|/|W|` and the factorization of the corresponding torus order. The
//! r-regular proportion of the whole group is the weighted sum over classes
//! of `1 / |T_C|_r`, since a torus is abelian.

mod format;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{r_part, rational_from, Prime, Rational};
use crate::cyclotomic::{cyclotomic_eval, CycIndex};
use crate::error::{Error, Result};
use crate::family::{FamilyId, GroupParams};

pub use format::{load_catalog, parse_catalog, render_catalog, validate_catalog};

/// Twisted torus factors of the Suzuki and Ree groups, with `t = sqrt(2q)`
/// (resp. `sqrt(3q)` for the `G2` kinds).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwistedFactorKind {
    /// `q + t + 1`
    B2Plus,
    /// `q - t + 1`
    B2Minus,
    /// `q + t + 1`, `t = sqrt(3q)`
    G2Plus,
    /// `q - t + 1`, `t = sqrt(3q)`
    G2Minus,
    /// `q^2 + qt + q + t + 1`
    F4Plus12,
    /// `q^2 - qt + q - t + 1`
    F4Minus12,
}

impl TwistedFactorKind {
    pub const ALL: [TwistedFactorKind; 6] = [
        TwistedFactorKind::B2Plus,
        TwistedFactorKind::B2Minus,
        TwistedFactorKind::G2Plus,
        TwistedFactorKind::G2Minus,
        TwistedFactorKind::F4Plus12,
        TwistedFactorKind::F4Minus12,
    ];

    pub const fn token(self) -> &'static str {
        match self {
            TwistedFactorKind::B2Plus => "b2+",
            TwistedFactorKind::B2Minus => "b2-",
            TwistedFactorKind::G2Plus => "g2+",
            TwistedFactorKind::G2Minus => "g2-",
            TwistedFactorKind::F4Plus12 => "f4+",
            TwistedFactorKind::F4Minus12 => "f4-",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.token() == s)
    }

    /// Characteristic whose odd powers make `t` integral.
    pub const fn characteristic(self) -> u64 {
        match self {
            TwistedFactorKind::G2Plus | TwistedFactorKind::G2Minus => 3,
            _ => 2,
        }
    }

    fn plus(self) -> bool {
        matches!(
            self,
            TwistedFactorKind::B2Plus | TwistedFactorKind::G2Plus | TwistedFactorKind::F4Plus12
        )
    }

    /// Exact value at `q`; `q` must be an odd power of [`Self::characteristic`].
    pub fn eval(self, q: u64) -> Result<BigUint> {
        let p = self.characteristic();
        let incompatible = || Error::IncompatibleTwistedFactor {
            kind: self.token(),
            q,
        };
        let (prime, f) = crate::arith::prime_power_decompose(q).ok_or_else(incompatible)?;
        if prime.get() != p || f % 2 == 0 {
            return Err(incompatible());
        }
        // t^2 = p q
        let t = BigInt::from(p).pow(f.div_ceil(2));
        let q = BigInt::from(q);
        let t = if self.plus() { t } else { -t };
        let value: BigInt = match self {
            TwistedFactorKind::F4Plus12 | TwistedFactorKind::F4Minus12 => {
                &q * &q + &q * &t + &q + &t + 1
            }
            _ => &q + &t + 1,
        };
        Ok(value.to_biguint().expect("twisted factors are positive"))
    }
}

impl fmt::Display for TwistedFactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    Cyc(CycIndex),
    Twisted(TwistedFactorKind),
}

impl Factor {
    pub fn eval(self, q: u64) -> Result<BigUint> {
        match self {
            Factor::Cyc(i) => Ok((*cyclotomic_eval(i, q)?).clone()),
            Factor::Twisted(kind) => kind.eval(q),
        }
    }
}

/// One F-class of the Weyl group and its torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusClass {
    pub id: u32,
    /// `|C| / |W|`
    pub weight: Rational,
    /// Factors with multiplicities.
    pub factors: Vec<(Factor, u32)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Transcribed from a published list.
    Printed,
    /// Reconstructed and checked against the result tables.
    Derived,
}

impl Provenance {
    pub const fn token(self) -> &'static str {
        match self {
            Provenance::Printed => "printed",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub family: FamilyId,
    pub provenance: Option<Provenance>,
    pub classes: Vec<TorusClass>,
}

impl Catalog {
    pub fn weight_sum(&self) -> Rational {
        self.classes
            .iter()
            .fold(Rational::zero(), |acc, c| acc + &c.weight)
    }
}

/// `|T|` at `q`, the exact product of all factors.
pub fn torus_order(class: &TorusClass, q: u64) -> Result<BigUint> {
    let mut order = BigUint::one();
    for &(factor, mult) in &class.factors {
        order *= factor.eval(q)?.pow(mult);
    }
    Ok(order)
}

/// Families with an embedded catalog.
pub const BUILTIN_FAMILIES: [FamilyId; 3] = [FamilyId::TwF4, FamilyId::TwB2, FamilyId::TwG2];

/// The embedded catalog for `family`, if one ships with the crate.
pub fn builtin_catalog(family: FamilyId) -> Option<&'static Catalog> {
    static TW_F4: OnceLock<Catalog> = OnceLock::new();
    static TW_B2: OnceLock<Catalog> = OnceLock::new();
    static TW_G2: OnceLock<Catalog> = OnceLock::new();
    let (cell, text) = match family {
        FamilyId::TwF4 => (&TW_F4, include_str!("../../data/2F4.cat")),
        FamilyId::TwB2 => (&TW_B2, include_str!("../../data/2B2.cat")),
        FamilyId::TwG2 => (&TW_G2, include_str!("../../data/2G2.cat")),
        _ => return None,
    };
    Some(cell.get_or_init(|| load_catalog(text).expect("embedded catalog is valid")))
}

/// Weighted torus sum `sum_C |C|/|W| * 1/|T_C|_r` for an arbitrary catalog.
pub fn proportion_by_catalog(catalog: &Catalog, q: u64, r: Prime) -> Result<Rational> {
    let params = GroupParams::new(catalog.family, q)?;
    params.check_r(r)?;
    let mut total = Rational::zero();
    for class in &catalog.classes {
        let part = r_part(&torus_order(class, q)?, r);
        total += &class.weight / rational_from(&part);
    }
    Ok(total)
}

pub fn proportion_by_torus_sum(family: FamilyId, q: u64, r: Prime) -> Result<Rational> {
    let catalog = builtin_catalog(family).ok_or(Error::CatalogUnavailable(family))?;
    proportion_by_catalog(catalog, q, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn builtins_exist_only_for_twisted_three() {
        for fam in FamilyId::ALL {
            assert_eq!(builtin_catalog(fam).is_some(), BUILTIN_FAMILIES.contains(&fam));
        }
        let f4 = builtin_catalog(FamilyId::TwF4).unwrap();
        assert_eq!(f4.classes.len(), 11);
        assert_eq!(f4.provenance, Some(Provenance::Printed));
        let b2 = builtin_catalog(FamilyId::TwB2).unwrap();
        let weights: Vec<_> = b2.classes.iter().map(|c| c.weight.clone()).collect();
        assert_eq!(weights, vec![ratio(1, 2), ratio(1, 4), ratio(1, 4)]);
        assert_eq!(b2.provenance, Some(Provenance::Derived));
    }

    #[test]
    fn weights_sum_to_one() {
        for fam in BUILTIN_FAMILIES {
            assert_eq!(builtin_catalog(fam).unwrap().weight_sum(), Rational::one());
        }
    }

    #[test]
    fn twisted_f4_orders_at_8() {
        // (q-1)^2, q^2-1, (q-1)(q-t+1), (q-1)(q+t+1), q^2+1, (q-t+1)^2,
        // (q+t+1)^2, (q+1)^2, q^2-q+1, and the two degree-4 factors, t = 4
        let expected: [u64; 11] = [49, 63, 35, 91, 65, 25, 169, 81, 57, 37, 109];
        let cat = builtin_catalog(FamilyId::TwF4).unwrap();
        for (class, want) in cat.classes.iter().zip(expected) {
            assert_eq!(torus_order(class, 8).unwrap(), BigUint::from(want), "class {}", class.id);
        }
    }

    #[test]
    fn twisted_factor_values() {
        assert_eq!(TwistedFactorKind::B2Minus.eval(8).unwrap(), BigUint::from(5u32));
        assert_eq!(TwistedFactorKind::B2Plus.eval(8).unwrap(), BigUint::from(13u32));
        assert_eq!(TwistedFactorKind::B2Minus.eval(2).unwrap(), BigUint::from(1u32));
        assert_eq!(TwistedFactorKind::G2Plus.eval(27).unwrap(), BigUint::from(37u32));
        assert_eq!(TwistedFactorKind::G2Minus.eval(27).unwrap(), BigUint::from(19u32));
        assert!(matches!(
            TwistedFactorKind::B2Plus.eval(4),
            Err(Error::IncompatibleTwistedFactor { q: 4, .. })
        ));
        assert!(TwistedFactorKind::G2Plus.eval(8).is_err());
    }

    #[test]
    fn torus_sum_examples() {
        assert_eq!(proportion_by_torus_sum(FamilyId::TwB2, 8, p(5)).unwrap(), ratio(4, 5));
        assert_eq!(proportion_by_torus_sum(FamilyId::TwB2, 8, p(7)).unwrap(), ratio(4, 7));
        assert_eq!(proportion_by_torus_sum(FamilyId::TwF4, 8, p(7)).unwrap(), ratio(25, 49));
        assert_eq!(proportion_by_torus_sum(FamilyId::TwG2, 3, p(2)).unwrap(), ratio(5, 8));
    }

    #[test]
    fn torus_sum_errors() {
        assert_eq!(
            proportion_by_torus_sum(FamilyId::E8, 2, p(5)),
            Err(Error::CatalogUnavailable(FamilyId::E8))
        );
        assert!(matches!(
            proportion_by_torus_sum(FamilyId::TwB2, 8, p(2)),
            Err(Error::DefiningCharacteristic { .. })
        ));
        assert!(matches!(
            proportion_by_torus_sum(FamilyId::TwB2, 4, p(3)),
            Err(Error::InvalidQ { .. })
        ));
    }

    #[test]
    fn unaffected_prime_gives_one() {
        // 2F4(2): torus orders only involve 3, 5, 13
        assert_eq!(proportion_by_torus_sum(FamilyId::TwF4, 2, p(7)).unwrap(), Rational::one());
        assert_eq!(proportion_by_torus_sum(FamilyId::TwB2, 8, p(3)).unwrap(), Rational::one());
    }
}
