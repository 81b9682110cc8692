//! Line-oriented catalog files.
//!
//! ```text
//! family 2B2
//! provenance derived
//! class 1 weight 1/2 factors cyc:1
//! class 2 weight 1/4 factors tw:b2+
//! ```
//!
//! Factor tokens are `cyc:<i>[^<m>]` and `tw:<kind>[^<m>]`; `#` starts a comment.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Catalog, Factor, Provenance, TorusClass, TwistedFactorKind};
use crate::arith::Rational;
use crate::cyclotomic::CycIndex;
use crate::error::{Error, Result};
use crate::family::FamilyId;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_weight(s: &str, line: usize) -> Result<Rational> {
    let bad = || parse_err(line, format!("malformed weight '{s}'"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(parse_err(line, format!("zero denominator in weight '{s}'")));
    }
    Ok(Rational::new(num, den))
}

fn parse_factor(tok: &str, line: usize) -> Result<(Factor, u32)> {
    let unknown = || parse_err(line, format!("unknown factor token '{tok}'"));
    let (body, mult) = match tok.split_once('^') {
        Some((body, m)) => {
            let m: u32 = m.parse().map_err(|_| unknown())?;
            if m == 0 {
                return Err(parse_err(line, format!("zero multiplicity in '{tok}'")));
            }
            (body, m)
        }
        None => (tok, 1),
    };
    let factor = if let Some(i) = body.strip_prefix("cyc:") {
        let i: u32 = i.parse().map_err(|_| unknown())?;
        Factor::Cyc(CycIndex::new(i).ok_or_else(|| {
            parse_err(line, format!("cyclotomic index must be >= 1 in '{tok}'"))
        })?)
    } else if let Some(kind) = body.strip_prefix("tw:") {
        Factor::Twisted(TwistedFactorKind::from_token(kind).ok_or_else(unknown)?)
    } else {
        return Err(unknown());
    };
    Ok((factor, mult))
}

/// Parses a catalog without checking its invariants.
pub fn parse_catalog(text: &str) -> Result<Catalog> {
    let mut family = None;
    let mut provenance = None;
    let mut classes = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        match words.next() {
            Some("family") => {
                let name = words.next().ok_or_else(|| parse_err(line, "missing family id"))?;
                if family.is_some() {
                    return Err(parse_err(line, "duplicate family line"));
                }
                family = Some(name.parse::<FamilyId>().map_err(|e| parse_err(line, e))?);
            }
            Some("provenance") => {
                provenance = Some(match words.next() {
                    Some("printed") => Provenance::Printed,
                    Some("derived") => Provenance::Derived,
                    other => {
                        return Err(parse_err(line, format!("unknown provenance {other:?}")))
                    }
                });
            }
            Some("class") => {
                if family.is_none() {
                    return Err(parse_err(line, "class line before family line"));
                }
                let id: u32 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| parse_err(line, "expected class number"))?;
                if words.next() != Some("weight") {
                    return Err(parse_err(line, "expected 'weight'"));
                }
                let weight = parse_weight(
                    words.next().ok_or_else(|| parse_err(line, "missing weight"))?,
                    line,
                )?;
                if words.next() != Some("factors") {
                    return Err(parse_err(line, "expected 'factors'"));
                }
                let factors = words
                    .map(|tok| parse_factor(tok, line))
                    .collect::<Result<Vec<_>>>()?;
                if factors.is_empty() {
                    return Err(parse_err(line, "class has no factors"));
                }
                classes.push(TorusClass { id, weight, factors });
            }
            Some(other) => return Err(parse_err(line, format!("unknown directive '{other}'"))),
            None => unreachable!(),
        }
    }
    let family = family.ok_or_else(|| parse_err(text.lines().count().max(1), "missing family line"))?;
    Ok(Catalog {
        family,
        provenance,
        classes,
    })
}

/// Lists every violated invariant; empty means the catalog is valid.
pub fn validate_catalog(catalog: &Catalog) -> Vec<String> {
    let mut violations = Vec::new();
    if catalog.classes.is_empty() {
        violations.push("catalog has no classes".to_string());
    }
    let mut seen = HashSet::new();
    for class in &catalog.classes {
        if !seen.insert(class.id) {
            violations.push(format!("duplicate class id {}", class.id));
        }
        if !class.weight.is_positive() || class.weight > Rational::one() {
            violations.push(format!(
                "class {}: weight {} outside (0, 1]",
                class.id, class.weight
            ));
        }
        if class.factors.is_empty() {
            violations.push(format!("class {}: no factors", class.id));
        }
        for &(factor, mult) in &class.factors {
            if mult == 0 {
                violations.push(format!("class {}: zero multiplicity", class.id));
            }
            if let Factor::Twisted(kind) = factor {
                if catalog.family.odd_power_of() != Some(kind.characteristic()) {
                    violations.push(format!(
                        "class {}: twisted factor {kind} not defined for {}",
                        class.id, catalog.family
                    ));
                }
            }
        }
    }
    let sum = catalog.weight_sum();
    if !sum.is_one() {
        violations.push(format!("weights sum to {sum}"));
    }
    violations
}

/// Parses and validates; any violation is an error.
pub fn load_catalog(text: &str) -> Result<Catalog> {
    let catalog = parse_catalog(text)?;
    let violations = validate_catalog(&catalog);
    if violations.is_empty() {
        Ok(catalog)
    } else {
        Err(Error::InvalidCatalog(violations))
    }
}

pub fn render_catalog(catalog: &Catalog) -> String {
    let mut out = String::new();
    writeln!(out, "family {}", catalog.family).unwrap();
    if let Some(p) = catalog.provenance {
        writeln!(out, "provenance {}", p.token()).unwrap();
    }
    for class in &catalog.classes {
        write!(out, "class {} weight {} factors", class.id, class.weight).unwrap();
        for &(factor, mult) in &class.factors {
            match factor {
                Factor::Cyc(i) => write!(out, " cyc:{i}").unwrap(),
                Factor::Twisted(kind) => write!(out, " tw:{kind}").unwrap(),
            }
            if mult != 1 {
                write!(out, "^{mult}").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::builtin_catalog;

    #[test]
    fn builtin_round_trip() {
        for fam in crate::torus::BUILTIN_FAMILIES {
            let cat = builtin_catalog(fam).unwrap();
            assert_eq!(&load_catalog(&render_catalog(cat)).unwrap(), cat);
        }
    }

    #[test]
    fn weight_sum_violation() {
        let text = "family 2B2\nclass 1 weight 1/2 factors cyc:1\nclass 2 weight 1/4 factors tw:b2+\n";
        let cat = parse_catalog(text).unwrap();
        assert_eq!(validate_catalog(&cat), vec!["weights sum to 3/4".to_string()]);
        assert!(matches!(load_catalog(text), Err(Error::InvalidCatalog(_))));
    }

    #[test]
    fn bad_tokens_report_line() {
        let text = "family 3D4\n# comment\nclass 1 weight 1 factors cyc:0\n";
        assert!(matches!(parse_catalog(text), Err(Error::Parse { line: 3, .. })));
        let text = "family 3D4\nclass 1 weight 1 factors tw:e8+\n";
        assert!(matches!(parse_catalog(text), Err(Error::Parse { line: 2, .. })));
        let text = "family 3D4\nclass 1 weight 1 factors cyc:3^0\n";
        assert!(matches!(parse_catalog(text), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_catalog("class 1 weight 1 factors cyc:1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_catalog("family X9\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn structural_violations() {
        let text = "family E6\nclass 1 weight 1/2 factors tw:b2+\nclass 1 weight 1/2 factors cyc:1^6\n";
        let v = validate_catalog(&parse_catalog(text).unwrap());
        assert!(v.iter().any(|m| m.contains("duplicate class id 1")), "{v:?}");
        assert!(v.iter().any(|m| m.contains("not defined for E6")), "{v:?}");
    }

    #[test]
    fn comments_and_defaults() {
        let text = "# G2 split torus only, for testing\nfamily G2 # trailing\nclass 7 weight 1 factors cyc:1^2\n";
        let cat = load_catalog(text).unwrap();
        assert_eq!(cat.classes[0].id, 7);
        assert_eq!(cat.provenance, None);
        assert_eq!(render_catalog(&cat), "family G2\nclass 7 weight 1 factors cyc:1^2\n");
    }
}
