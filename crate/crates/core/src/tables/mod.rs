//! Closed-form proportion tables.
//!
//! Each family's table is a list of rows guarded by the multiplicative order
//! `e` of `q` mod `r`, a condition on `r` (and `q mod 4` when `r = 2`), and the
//! index `i` of the symbol `phi_{i,r}` the row is written in. A row's value is
//! `sum_j c_j / phi^j`. Rows containing gcd symbols are split per `r` when
//! the table is built, so every stored row is a plain polynomial in `1/phi`.

mod data;

use std::fmt::{self, Write as _};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{mult_order, r_part_u64, ratio, rational_from, Prime, Rational};
use crate::cyclotomic::{phi_r_part, CycIndex};
use crate::error::Result;
use crate::family::{CenterSpec, FamilyId, GroupParams};
use crate::torus::proportion_by_torus_sum;

/// Condition on `r` (and on `q mod 4` when `r = 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RClass {
    /// `r = 2`, any odd `q`.
    Two,
    TwoQ1Mod4,
    TwoQ3Mod4,
    /// `r = p`
    Eq(u64),
    /// `r > k`
    Above(u64),
    Any,
}

impl RClass {
    pub fn matches(self, q: u64, r: Prime) -> bool {
        let r = r.get();
        match self {
            RClass::Two => r == 2,
            RClass::TwoQ1Mod4 => r == 2 && q % 4 == 1,
            RClass::TwoQ3Mod4 => r == 2 && q % 4 == 3,
            RClass::Eq(p) => r == p,
            RClass::Above(k) => r > k,
            RClass::Any => true,
        }
    }

    pub fn is_two(self) -> bool {
        matches!(self, RClass::Two | RClass::TwoQ1Mod4 | RClass::TwoQ3Mod4)
    }

    fn rank(self) -> (u8, u64) {
        match self {
            RClass::Two => (0, 0),
            RClass::TwoQ1Mod4 => (0, 1),
            RClass::TwoQ3Mod4 => (0, 3),
            RClass::Eq(p) => (1, p),
            RClass::Above(k) => (2, k),
            RClass::Any => (3, 0),
        }
    }
}

impl fmt::Display for RClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RClass::Two => f.write_str("r=2"),
            RClass::TwoQ1Mod4 => f.write_str("r=2,q=1mod4"),
            RClass::TwoQ3Mod4 => f.write_str("r=2,q=3mod4"),
            RClass::Eq(p) => write!(f, "r={p}"),
            RClass::Above(k) => write!(f, "r>{k}"),
            RClass::Any => f.write_str("any r"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RowGuard {
    pub e: u64,
    pub r_class: RClass,
    /// Which `phi_{i,r}` is substituted.
    pub phi_index: CycIndex,
}

impl RowGuard {
    pub fn matches(&self, e: u64, q: u64, r: Prime) -> bool {
        self.e == e && self.r_class.matches(q, r)
    }
}

impl fmt::Display for RowGuard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e={}", self.e)?;
        if self.r_class != RClass::Any {
            write!(f, ",{}", self.r_class)?;
        }
        if u64::from(self.phi_index.get()) != self.e {
            write!(f, ",phi={}", self.phi_index)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaRow {
    pub family: FamilyId,
    pub guard: RowGuard,
    /// `c_0, c_1, ..., c_d`; the value is `sum_j c_j / phi^j`.
    pub coeffs: Vec<Rational>,
}

impl FormulaRow {
    /// Stable identifier, e.g. `2F4/e=2,r>3`.
    pub fn id(&self) -> String {
        format!("{}/{}", self.family, self.guard)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// `sum_j c_j / phi^j` for `phi >= 1`.
    pub fn eval(&self, phi: &BigUint) -> Rational {
        let x = Rational::new(BigInt::one(), BigInt::from(phi.clone()));
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &x + c)
    }
}

fn build_rows(family: FamilyId) -> Vec<FormulaRow> {
    let mut rows = Vec::new();
    for src in data::source(family) {
        let phi_index = CycIndex::new(src.phi_index).expect("phi index >= 1");
        let mut push = |r_class: RClass, coeffs: Vec<Rational>| {
            rows.push(FormulaRow {
                family,
                guard: RowGuard {
                    e: src.e,
                    r_class,
                    phi_index,
                },
                coeffs,
            })
        };
        match &src.coeffs {
            data::Src::Poly(nums, den) => {
                push(src.r_class, nums.iter().map(|&a| ratio(a, *den)).collect())
            }
            data::Src::Terms(terms) => {
                push(src.r_class, terms.iter().map(|&(a, b)| ratio(a, b)).collect())
            }
            data::Src::GcdPoly {
                prime,
                with_gcd,
                plain,
                den,
            } => {
                // g = (p, r) is p when r = p and 1 otherwise
                for (r_class, g) in [(RClass::Eq(*prime), *prime), (RClass::Above(*prime), 1)] {
                    let coeffs = with_gcd
                        .iter()
                        .zip(plain.iter())
                        .map(|(&a, &b)| ratio(a * g + b, den * g))
                        .collect();
                    push(r_class, coeffs);
                }
            }
        }
    }
    rows.sort_by_key(|r| (r.guard.e, r.guard.r_class.rank()));
    rows
}

/// Every encoded row for `family`, in canonical order.
pub fn rows(family: FamilyId) -> &'static [FormulaRow] {
    static TABLES: OnceLock<Vec<Vec<FormulaRow>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| FamilyId::ALL.iter().map(|&f| build_rows(f)).collect());
    let idx = FamilyId::ALL.iter().position(|&f| f == family).unwrap();
    &tables[idx]
}

/// Result of matching `(q, r)` against a family's table.
#[derive(Debug, Clone, Copy)]
pub struct Lookup {
    pub e: u64,
    pub row: Option<&'static FormulaRow>,
}

pub fn row_lookup(family: FamilyId, q: u64, r: Prime) -> Result<Lookup> {
    let params = GroupParams::new(family, q)?;
    params.check_r(r)?;
    let e = mult_order(q, r)?;
    let row = rows(family).iter().find(|row| row.guard.matches(e, q, r));
    Ok(Lookup { e, row })
}

/// `|Z|_r`, the factor turning a simply connected proportion into the
/// proportion for the simple quotient.
pub fn center_r_part(family: FamilyId, q: u64, r: Prime) -> u64 {
    r_part_u64(family.center().order(q), r)
}

pub fn center_adjust(family: FamilyId, q: u64, r: Prime, value_sc: &Rational) -> Rational {
    value_sc * Rational::from_integer(BigInt::from(center_r_part(family, q, r)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Formula,
    TorusSum,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Formula => "formula",
            Engine::TorusSum => "torus-sum",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProportionReport {
    pub family: FamilyId,
    pub q: u64,
    pub r: Prime,
    pub e: u64,
    pub phi: BigUint,
    /// `None` when the table has no row for this `e`.
    pub row: Option<String>,
    pub value_sc: Rational,
    pub value_simple: Rational,
    pub engine: Engine,
}

fn phi_for(lookup: &Lookup, q: u64, r: Prime) -> Result<BigUint> {
    let index = match lookup.row {
        Some(row) => row.guard.phi_index,
        None => CycIndex::new(lookup.e as u32).expect("e >= 1"),
    };
    phi_r_part(index, q, r)
}

/// Proportion of r-regular elements from the tables.
pub fn proportion_formula(family: FamilyId, q: u64, r: Prime) -> Result<ProportionReport> {
    let lookup = row_lookup(family, q, r)?;
    let phi = phi_for(&lookup, q, r)?;
    let value_sc = match lookup.row {
        Some(row) => row.eval(&phi),
        None => Rational::one(),
    };
    Ok(report(family, q, r, &lookup, phi, value_sc, Engine::Formula))
}

/// Proportion of r-regular elements from the builtin torus catalog.
pub fn proportion_torus(family: FamilyId, q: u64, r: Prime) -> Result<ProportionReport> {
    let value_sc = proportion_by_torus_sum(family, q, r)?;
    let lookup = row_lookup(family, q, r)?;
    let phi = phi_for(&lookup, q, r)?;
    Ok(report(family, q, r, &lookup, phi, value_sc, Engine::TorusSum))
}

fn report(
    family: FamilyId,
    q: u64,
    r: Prime,
    lookup: &Lookup,
    phi: BigUint,
    value_sc: Rational,
    engine: Engine,
) -> ProportionReport {
    ProportionReport {
        family,
        q,
        r,
        e: lookup.e,
        phi,
        row: lookup.row.map(FormulaRow::id),
        value_simple: center_adjust(family, q, r, &value_sc),
        value_sc,
        engine,
    }
}

/// `|Z|_r` forced by a row's guard.
pub fn guard_center_r_part(family: FamilyId, guard: &RowGuard) -> u64 {
    match family.center() {
        CenterSpec::Trivial => 1,
        CenterSpec::Gcd3QMinus1 if guard.r_class == RClass::Eq(3) && guard.e == 1 => 3,
        CenterSpec::Gcd3QPlus1 if guard.r_class == RClass::Eq(3) && guard.e == 2 => 3,
        CenterSpec::Gcd2QMinus1 if guard.r_class.is_two() => 2,
        _ => 1,
    }
}

/// The sharp lower bound `c(X)`: the least center-adjusted leading
/// coefficient over all rows, with the first row attaining it.
pub fn constant_infimum(family: FamilyId) -> (Rational, &'static FormulaRow) {
    rows(family)
        .iter()
        .map(|row| {
            let z = guard_center_r_part(family, &row.guard);
            (row.leading() * rational_from(&BigUint::from(z)), row)
        })
        .reduce(|best, next| if next.0 < best.0 { next } else { best })
        .expect("every family has rows")
}

/// Least `c(X)` over all families.
pub fn global_infimum() -> (Rational, FamilyId) {
    FamilyId::ALL
        .iter()
        .map(|&f| (constant_infimum(f).0, f))
        .reduce(|best, next| if next.0 < best.0 { next } else { best })
        .unwrap()
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// One table line, e.g. `e=4: 3/4 + 1/4·φ⁻¹`.
pub fn render_row(row: &FormulaRow) -> String {
    let g = &row.guard;
    let mut out = format!("e={}", g.e);
    let mut notes = Vec::new();
    match g.r_class {
        RClass::Any => {}
        RClass::TwoQ1Mod4 => notes.push("r=2, q≡1 mod 4".to_string()),
        RClass::TwoQ3Mod4 => notes.push("r=2, q≡3 mod 4".to_string()),
        other => notes.push(other.to_string()),
    }
    if u64::from(g.phi_index.get()) != g.e {
        notes.push(format!("φ=φ_{{{},r}}", g.phi_index));
    }
    if !notes.is_empty() {
        write!(out, " ({})", notes.join("; ")).unwrap();
    }
    out.push_str(": ");
    let terms: Vec<String> = row
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| match j {
            0 => c.to_string(),
            _ => format!("{c}·φ⁻{}", superscript(j)),
        })
        .collect();
    out.push_str(&terms.join(" + "));
    out
}

/// Canonical rendering of a family's whole table, one row per line.
pub fn table_emit(family: FamilyId) -> String {
    let mut out = String::new();
    for row in rows(family) {
        out.push_str(&render_row(row));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn coeffs(pairs: &[(u64, u64)]) -> Vec<Rational> {
        pairs.iter().map(|&(a, b)| ratio(a, b)).collect()
    }

    #[test]
    fn lookup_examples() {
        let l = row_lookup(FamilyId::TwF4, 8, p(7)).unwrap();
        assert_eq!(l.e, 1);
        assert_eq!(l.row.unwrap().coeffs, coeffs(&[(7, 16), (1, 2), (1, 16)]));

        let l = row_lookup(FamilyId::E8, 2, p(13)).unwrap();
        assert_eq!(l.e, 12);
        assert_eq!(l.row.unwrap().coeffs, coeffs(&[(253, 288), (34, 288), (1, 288)]));

        let l = row_lookup(FamilyId::F4, 4, p(11)).unwrap();
        assert_eq!(l.e, 5);
        assert!(l.row.is_none());
    }

    #[test]
    fn formula_examples() {
        let r = proportion_formula(FamilyId::TwF4, 8, p(7)).unwrap();
        assert_eq!(r.value_sc, ratio(25, 49));
        assert_eq!(r.phi, BigUint::from(7u32));
        assert_eq!(r.row.as_deref(), Some("2F4/e=1"));

        let r = proportion_formula(FamilyId::TwB2, 8, p(5)).unwrap();
        assert_eq!((r.e, r.value_sc), (4, ratio(4, 5)));

        let r = proportion_formula(FamilyId::TwG2, 3, p(2)).unwrap();
        assert_eq!(r.phi, BigUint::from(4u32));
        assert_eq!(r.value_sc, ratio(5, 8));

        let r = proportion_formula(FamilyId::F4, 4, p(11)).unwrap();
        assert_eq!((r.row, r.value_sc), (None, Rational::one()));
    }

    #[test]
    fn center_adjust_examples() {
        let v = ratio(3, 10);
        assert_eq!(center_adjust(FamilyId::E7, 3, p(2), &v), ratio(3, 5));
        assert_eq!(center_adjust(FamilyId::E7, 3, p(5), &v), v);
        assert_eq!(center_adjust(FamilyId::E6, 7, p(3), &v), ratio(9, 10));
        assert_eq!(center_adjust(FamilyId::E6, 5, p(3), &v), v);
        assert_eq!(center_adjust(FamilyId::TwE6, 5, p(3), &v), ratio(9, 10));
        assert_eq!(center_adjust(FamilyId::F4, 7, p(2), &v), v);

        let rep = proportion_formula(FamilyId::E7, 3, p(2)).unwrap();
        assert_eq!(rep.value_simple, &rep.value_sc * ratio(2, 1));
    }

    #[test]
    fn constants_match_table() {
        let expected = [
            (FamilyId::TwG2, (1, 2)),
            (FamilyId::TwB2, (1, 2)),
            (FamilyId::TriD4, (17, 48)),
            (FamilyId::TwF4, (7, 16)),
            (FamilyId::G2, (11, 36)),
            (FamilyId::F4, (3577, 18432)),
            (FamilyId::E6, (281, 1296)),
            (FamilyId::TwE6, (281, 1296)),
            (FamilyId::E7, (131491, 589824)),
            (FamilyId::E8, (5927482903, 25480396800)),
        ];
        for (fam, (a, b)) in expected {
            assert_eq!(constant_infimum(fam).0, ratio(a, b), "{fam}");
        }
        assert_eq!(global_infimum(), (ratio(3577, 18432), FamilyId::F4));
        assert_eq!(constant_infimum(FamilyId::F4).1.guard.r_class, RClass::TwoQ1Mod4);
    }

    #[test]
    fn errors_propagate() {
        assert!(row_lookup(FamilyId::E8, 9, p(3)).is_err());
        assert!(row_lookup(FamilyId::TwB2, 4, p(3)).is_err());
        assert!(proportion_formula(FamilyId::TwF4, 8, p(2)).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            table_emit(FamilyId::TwB2),
            "e=1: 1/2 + 1/2·φ⁻¹\ne=4: 3/4 + 1/4·φ⁻¹\n"
        );
        assert_eq!(
            render_row(&rows(FamilyId::TwG2)[0]),
            "e=1 (r=2; φ=φ_{2,r}): 7/12 + 1/6·φ⁻¹"
        );
        assert_eq!(rows(FamilyId::TwG2).len(), 4);
        assert_eq!(rows(FamilyId::E8).len(), 26);
    }

    #[test]
    fn e8_gcd_split() {
        let e4: Vec<_> = rows(FamilyId::E8).iter().filter(|r| r.guard.e == 4).collect();
        assert_eq!(e4.len(), 2);
        assert_eq!(e4[0].guard.r_class, RClass::Eq(5));
        assert_eq!(e4[0].coeffs[0], ratio(31345 * 5 + 2304, 46080 * 5));
        assert_eq!(e4[0].coeffs[4], ratio(1, 46080));
        assert_eq!(e4[1].guard.r_class, RClass::Above(5));
        assert_eq!(e4[1].coeffs[0], ratio(33649, 46080));
    }
}
