//! The ten families of finite exceptional groups and their parameter rules.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::{prime_power_decompose, Prime};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    TwG2,
    TwB2,
    TriD4,
    TwF4,
    G2,
    F4,
    E6,
    TwE6,
    E7,
    E8,
}

impl FamilyId {
    /// All families, in the order used for listings.
    pub const ALL: [FamilyId; 10] = [
        FamilyId::TwG2,
        FamilyId::TwB2,
        FamilyId::TriD4,
        FamilyId::TwF4,
        FamilyId::G2,
        FamilyId::F4,
        FamilyId::E6,
        FamilyId::TwE6,
        FamilyId::E7,
        FamilyId::E8,
    ];

    /// ASCII name, as used in catalog files and on the command line.
    pub const fn name(self) -> &'static str {
        match self {
            FamilyId::G2 => "G2",
            FamilyId::F4 => "F4",
            FamilyId::E6 => "E6",
            FamilyId::TwE6 => "2E6",
            FamilyId::E7 => "E7",
            FamilyId::E8 => "E8",
            FamilyId::TwB2 => "2B2",
            FamilyId::TwG2 => "2G2",
            FamilyId::TwF4 => "2F4",
            FamilyId::TriD4 => "3D4",
        }
    }

    pub const fn center(self) -> CenterSpec {
        match self {
            FamilyId::E6 => CenterSpec::Gcd3QMinus1,
            FamilyId::TwE6 => CenterSpec::Gcd3QPlus1,
            FamilyId::E7 => CenterSpec::Gcd2QMinus1,
            _ => CenterSpec::Trivial,
        }
    }

    /// Suzuki and Ree families: `q` must be an odd power of this prime.
    pub const fn odd_power_of(self) -> Option<u64> {
        match self {
            FamilyId::TwB2 | FamilyId::TwF4 => Some(2),
            FamilyId::TwG2 => Some(3),
            _ => None,
        }
    }

    /// Checks that `q` is admissible and returns its characteristic and exponent.
    pub fn validate_q(self, q: u64) -> Result<(Prime, u32)> {
        let (p, f) = prime_power_decompose(q).ok_or(Error::InvalidQ {
            family: self,
            q,
            reason: "q must be a prime power",
        })?;
        match self.odd_power_of() {
            Some(2) if p.get() != 2 || f % 2 == 0 => Err(Error::InvalidQ {
                family: self,
                q,
                reason: "q must be 2^f with f odd",
            }),
            Some(3) if p.get() != 3 || f % 2 == 0 => Err(Error::InvalidQ {
                family: self,
                q,
                reason: "q must be 3^f with f odd",
            }),
            _ => Ok((p, f)),
        }
    }

    /// Admissible `q` up to `bound`, ascending.
    pub fn valid_qs(self, bound: u64) -> Vec<u64> {
        match self.odd_power_of() {
            Some(p) => {
                let mut out = Vec::new();
                let mut q = p;
                while q <= bound {
                    out.push(q);
                    match q.checked_mul(p * p) {
                        Some(next) => q = next,
                        None => break,
                    }
                }
                out
            }
            None => crate::arith::prime_powers_up_to(bound),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let family = match s.trim().to_ascii_uppercase().as_str() {
            "G2" => FamilyId::G2,
            "F4" => FamilyId::F4,
            "E6" => FamilyId::E6,
            "2E6" | "TWE6" => FamilyId::TwE6,
            "E7" => FamilyId::E7,
            "E8" => FamilyId::E8,
            "2B2" | "TWB2" | "SZ" => FamilyId::TwB2,
            "2G2" | "TWG2" => FamilyId::TwG2,
            "2F4" | "TWF4" => FamilyId::TwF4,
            "3D4" | "TRID4" => FamilyId::TriD4,
            _ => {
                return Err(format!(
                    "unknown family '{s}' (expected one of G2 F4 E6 2E6 E7 E8 2B2 2G2 2F4 3D4)"
                ))
            }
        };
        Ok(family)
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Order of the center `Z(G)` of the simply connected group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterSpec {
    Trivial,
    Gcd3QMinus1,
    Gcd3QPlus1,
    Gcd2QMinus1,
}

impl CenterSpec {
    pub fn order(self, q: u64) -> u64 {
        let gcd = |a: u64, b: u64| num_integer::gcd(a, b);
        match self {
            CenterSpec::Trivial => 1,
            CenterSpec::Gcd3QMinus1 => gcd(3, q - 1),
            CenterSpec::Gcd3QPlus1 => gcd(3, q + 1),
            CenterSpec::Gcd2QMinus1 => gcd(2, q - 1),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            CenterSpec::Trivial => "1",
            CenterSpec::Gcd3QMinus1 => "(3,q-1)",
            CenterSpec::Gcd3QPlus1 => "(3,q+1)",
            CenterSpec::Gcd2QMinus1 => "(2,q-1)",
        }
    }
}

/// A family together with an admissible `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupParams {
    pub family: FamilyId,
    pub q: u64,
    pub p: Prime,
    pub f: u32,
}

impl GroupParams {
    pub fn new(family: FamilyId, q: u64) -> Result<Self> {
        let (p, f) = family.validate_q(q)?;
        Ok(GroupParams { family, q, p, f })
    }

    /// Rejects `r` equal to the defining characteristic.
    pub fn check_r(&self, r: Prime) -> Result<()> {
        if r == self.p {
            Err(Error::DefiningCharacteristic { q: self.q, r: r.get() })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for fam in FamilyId::ALL {
            assert_eq!(fam.name().parse::<FamilyId>().unwrap(), fam);
        }
        assert_eq!("twf4".parse::<FamilyId>().unwrap(), FamilyId::TwF4);
        assert!("H4".parse::<FamilyId>().is_err());
    }

    #[test]
    fn twisted_q_constraints() {
        assert!(FamilyId::TwB2.validate_q(8).is_ok());
        assert!(FamilyId::TwB2.validate_q(2).is_ok());
        assert!(matches!(
            FamilyId::TwB2.validate_q(4),
            Err(Error::InvalidQ { q: 4, .. })
        ));
        assert!(FamilyId::TwG2.validate_q(27).is_ok());
        assert!(FamilyId::TwG2.validate_q(9).is_err());
        assert!(FamilyId::TwF4.validate_q(27).is_err());
        assert!(FamilyId::E8.validate_q(12).is_err());
        assert!(FamilyId::E8.validate_q(4).is_ok());
        assert_eq!(FamilyId::TwG2.valid_qs(3000), vec![3, 27, 243, 2187]);
        assert_eq!(FamilyId::TwB2.valid_qs(2048), vec![2, 8, 32, 128, 512, 2048]);
    }

    #[test]
    fn center_orders() {
        assert_eq!(FamilyId::E6.center().order(4), 3);
        assert_eq!(FamilyId::E6.center().order(5), 1);
        assert_eq!(FamilyId::TwE6.center().order(5), 3);
        assert_eq!(FamilyId::E7.center().order(3), 2);
        assert_eq!(FamilyId::E7.center().order(8), 1);
        assert_eq!(FamilyId::F4.center().order(7), 1);
    }
}
