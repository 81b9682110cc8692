//! Cross-verification harness.
//!
//! Every suite produces a [`VerificationReport`]; a suite passes when it has
//! no failures. All comparisons are exact. Sweeps fan out over rayon and
//! collect in input order, so reports are deterministic.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{mult_order, primes_up_to, ratio, Prime, Rational};
use crate::cyclotomic::{cyclotomic_eval, phi_r_part, phi_r_part_oracle, CycIndex};
use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::tables::{
    constant_infimum, global_infimum, proportion_formula, rows, FormulaRow, RClass, RowGuard,
};
use crate::torus::{
    builtin_catalog, proportion_by_torus_sum, validate_catalog, TwistedFactorKind,
    BUILTIN_FAMILIES,
};

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
    pub row: Option<String>,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, got {}", self.inputs, self.expected, self.actual)?;
        if let Some(row) = &self.row {
            write!(f, " [{row}]")?;
        }
        Ok(())
    }
}

fn failure(inputs: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Failure {
    Failure {
        inputs: inputs.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
        row: None,
    }
}

#[derive(Debug, Clone, Serialize)]
/// Wall time is kept out of the serialized form so reports stay
/// byte-identical across runs.
pub struct VerificationReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            cases: 0,
            failures: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: VerificationReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }

    fn check(&mut self, ok: bool, fail: impl FnOnce() -> Failure) {
        self.cases += 1;
        if !ok {
            self.failures.push(fail());
        }
    }

    fn timed(mut self, start: Instant) -> Self {
        self.wall_time = start.elapsed();
        self
    }
}

/// `(q, r)` pairs for one family: every admissible `q` in the list and every
/// prime `r <= r_max` other than the characteristic.
#[derive(Debug, Clone)]
pub struct SweepGrid {
    pub family: FamilyId,
    pub qs: Vec<u64>,
    pub r_max: u64,
}

impl SweepGrid {
    pub fn new(family: FamilyId, qs: Vec<u64>, r_max: u64) -> Result<Self> {
        for &q in &qs {
            family.validate_q(q)?;
        }
        Ok(SweepGrid { family, qs, r_max })
    }

    /// All admissible `q <= q_max`.
    pub fn up_to(family: FamilyId, q_max: u64, r_max: u64) -> Self {
        SweepGrid {
            family,
            qs: family.valid_qs(q_max),
            r_max,
        }
    }

    pub fn pairs(&self) -> Vec<(u64, Prime)> {
        let primes = primes_up_to(self.r_max);
        self.qs
            .iter()
            .flat_map(|&q| {
                primes
                    .iter()
                    .filter(move |r| q % r.get() != 0)
                    .map(move |&r| (q, r))
            })
            .collect()
    }
}

fn sweep<F>(suite: &str, pairs: &[(u64, Prime)], check: F) -> VerificationReport
where
    F: Fn(u64, Prime) -> Vec<Failure> + Sync,
{
    let failures: Vec<Failure> = pairs
        .par_iter()
        .flat_map_iter(|&(q, r)| check(q, r))
        .collect();
    VerificationReport {
        suite: suite.to_string(),
        cases: pairs.len() as u64,
        failures,
        wall_time: Duration::ZERO,
    }
}

/// Closed-form `phi_{i,r}` against trial division of `Phi_i(q)`, plus `e <= r - 1`.
pub fn lemma_sweep(q_max: u64, r_max: u64, i_max: u32) -> VerificationReport {
    let start = Instant::now();
    let qs = crate::arith::prime_powers_up_to(q_max);
    let primes = primes_up_to(r_max);
    let cases: Vec<(u64, Prime)> = qs
        .iter()
        .flat_map(|&q| {
            primes
                .iter()
                .filter(move |r| q % r.get() != 0)
                .map(move |&r| (q, r))
        })
        .collect();
    let mut report = VerificationReport::new("lemma");
    let per_q: Vec<(u64, Vec<Failure>)> = cases
        .par_iter()
        .map(|&(q, r)| {
            let mut fails = Vec::new();
            let mut n = 0;
            let e = mult_order(q, r).expect("coprime");
            n += 1;
            if e > r.get() - 1 || (r.get() - 1) % e != 0 {
                fails.push(failure(format!("order q={q} r={r}"), "e | r-1", e));
            }
            for i in 1..=i_max {
                let idx = CycIndex::new(i).unwrap();
                let lemma = phi_r_part(idx, q, r).expect("coprime");
                let oracle = phi_r_part_oracle(idx, q, r).expect("coprime");
                n += 1;
                if lemma != oracle {
                    fails.push(failure(format!("phi i={i} q={q} r={r}"), oracle, lemma));
                }
            }
            (n, fails)
        })
        .collect();
    for (n, fails) in per_q {
        report.cases += n;
        report.failures.extend(fails);
    }
    report.timed(start)
}

/// The worked ²F₄ example: row shapes and the `(8, 7)` value from both engines.
pub fn worked_example() -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("worked");
    let fam = FamilyId::TwF4;
    let find = |e: u64, rc: RClass| {
        rows(fam)
            .iter()
            .find(|r| r.guard.e == e && r.guard.r_class == rc)
            .expect("row present")
    };
    let e1 = find(1, RClass::Any);
    let want = vec![ratio(7, 16), ratio(1, 2), ratio(1, 16)];
    report.check(e1.coeffs == want, || failure("2F4 e=1 coefficients", fmt_coeffs(&want), fmt_coeffs(&e1.coeffs)));
    for phi in [3u64, 7, 31, 49, 127, 8191] {
        let direct = ratio(7, 16) + ratio(1, 2 * phi) + ratio(1, 16 * phi * phi);
        let got = e1.eval(&BigUint::from(phi));
        report.check(got == direct, || failure(format!("2F4 e=1 at phi={phi}"), &direct, &got));
    }
    // e = 2: 9/16 + 1/(6 (3,r)) + 1/(4 phi) + 1/(48 phi^2), split on (3, r)
    for (rc, g) in [(RClass::Eq(3), 3), (RClass::Above(3), 1)] {
        let row = find(2, rc);
        let want = vec![ratio(9, 16) + ratio(1, 6 * g), ratio(1, 4), ratio(1, 48)];
        report.check(row.coeffs == want, || {
            failure(format!("2F4 e=2 {rc}"), fmt_coeffs(&want), fmt_coeffs(&row.coeffs))
        });
    }
    let r7 = Prime::new(7).unwrap();
    let formula = proportion_formula(fam, 8, r7).map(|rep| rep.value_sc);
    let torus = proportion_by_torus_sum(fam, 8, r7);
    for (name, got) in [("formula", formula), ("torus-sum", torus)] {
        let got = got.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string());
        report.check(got == "25/49", || failure(format!("2F4 q=8 r=7 {name}"), "25/49", &got));
    }
    report.timed(start)
}

/// Torus-sum engine against the tables, exactly, over a grid.
pub fn cross_check(grid: &SweepGrid) -> VerificationReport {
    let start = Instant::now();
    let fam = grid.family;
    let mut report = sweep(&format!("cross/{fam}"), &grid.pairs(), |q, r| {
        let formula = proportion_formula(fam, q, r);
        let torus = proportion_by_torus_sum(fam, q, r);
        match (formula, torus) {
            (Ok(f), Ok(t)) if f.value_sc == t => vec![],
            (Ok(f), Ok(t)) => vec![Failure {
                inputs: format!("{fam} q={q} r={r} e={}", f.e),
                expected: t.to_string(),
                actual: f.value_sc.to_string(),
                row: f.row,
            }],
            (f, t) => vec![failure(
                format!("{fam} q={q} r={r}"),
                format!("{:?}", t.err()),
                format!("{:?}", f.err()),
            )],
        }
    });
    if builtin_catalog(fam).is_none() {
        report.failures.push(failure(format!("{fam}"), "builtin catalog", "none"));
    }
    report.timed(start)
}

/// Bounds for [`sample_finder`].
#[derive(Debug, Clone, Copy)]
pub struct SampleLimits {
    pub q_max: u64,
    pub r_max: u64,
}

impl SampleLimits {
    pub fn for_family(family: FamilyId) -> Self {
        SampleLimits {
            q_max: if family.odd_power_of().is_some() { 1 << 13 } else { 10_000 },
            r_max: 10_000,
        }
    }
}

/// Searches ascending `q`, then ascending `r`, for `needed` pairs matching
/// `guard` with pairwise distinct `phi`.
pub fn sample_finder(
    family: FamilyId,
    guard: &RowGuard,
    needed: usize,
    limits: SampleLimits,
) -> Result<Vec<(u64, Prime, BigUint)>> {
    let primes = primes_up_to(limits.r_max);
    let mut found: Vec<(u64, Prime, BigUint)> = Vec::new();
    for q in family.valid_qs(limits.q_max) {
        for &r in &primes {
            if q % r.get() == 0 || !guard.r_class.matches(q, r) {
                continue;
            }
            if mult_order(q, r)? != guard.e {
                continue;
            }
            let phi = phi_r_part(guard.phi_index, q, r)?;
            if found.iter().all(|(_, _, seen)| *seen != phi) {
                found.push((q, r, phi));
                if found.len() == needed {
                    return Ok(found);
                }
            }
        }
    }
    Err(Error::SampleSearchExhausted {
        row: format!("{family}/{guard}"),
        needed,
        found: found.into_iter().map(|(q, r, _)| (q, r.get())).collect(),
    })
}

/// Solves `sum_j c_j x_k^j = v_k` with `x_k = 1/phi_k` by exact elimination.
pub fn solve_in_inverse_phi(points: &[(BigUint, Rational)]) -> Result<Vec<Rational>> {
    let n = points.len();
    let mut m: Vec<Vec<Rational>> = points
        .iter()
        .map(|(phi, v)| {
            let x = Rational::new(1.into(), phi.clone().into());
            let mut row = Vec::with_capacity(n + 1);
            let mut pow = Rational::one();
            for _ in 0..n {
                row.push(pow.clone());
                pow *= &x;
            }
            row.push(v.clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::SingularSystem(points[col].0.to_string()))?;
        m.swap(col, pivot);
        let inv = Rational::one() / &m[col][col];
        for cell in &mut m[col][col..] {
            *cell *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (cell, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *cell -= &factor * p;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Recovers a row's coefficients from torus-sum values at the given samples.
pub fn interpolation_recover(
    family: FamilyId,
    guard: &RowGuard,
    degree: usize,
    samples: &[(u64, Prime)],
) -> Result<Vec<Rational>> {
    if samples.len() < degree + 1 {
        return Err(Error::InsufficientSamples {
            needed: degree + 1,
            got: samples.len(),
        });
    }
    let mut points: Vec<(BigUint, Rational)> = Vec::with_capacity(degree + 1);
    for &(q, r) in &samples[..degree + 1] {
        let phi = phi_r_part(guard.phi_index, q, r)?;
        if points.iter().any(|(seen, _)| *seen == phi) {
            return Err(Error::SingularSystem(phi.to_string()));
        }
        points.push((phi, proportion_by_torus_sum(family, q, r)?));
    }
    solve_in_inverse_phi(&points)
}

fn fmt_coeffs(c: &[Rational]) -> String {
    let parts: Vec<String> = c.iter().map(Rational::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Recovers one encoded row from torus-sum samples.
pub fn recover_row(row: &FormulaRow) -> std::result::Result<(), Failure> {
    let limits = SampleLimits::for_family(row.family);
    let fail = |actual: String| Failure {
        inputs: format!("recover {}", row.id()),
        expected: fmt_coeffs(&row.coeffs),
        actual,
        row: Some(row.id()),
    };
    let samples = sample_finder(row.family, &row.guard, row.degree() + 1, limits)
        .map_err(|e| fail(e.to_string()))?;
    let pairs: Vec<(u64, Prime)> = samples.iter().map(|&(q, r, _)| (q, r)).collect();
    let recovered = interpolation_recover(row.family, &row.guard, row.degree(), &pairs)
        .map_err(|e| fail(e.to_string()))?;
    if recovered == row.coeffs {
        Ok(())
    } else {
        Err(fail(fmt_coeffs(&recovered)))
    }
}

pub fn interpolation_suite(families: &[FamilyId]) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("interp");
    let all: Vec<&FormulaRow> = families.iter().flat_map(|&f| rows(f)).collect();
    let results: Vec<_> = all.par_iter().map(|row| recover_row(row)).collect();
    for res in results {
        report.check(res.is_ok(), || res.unwrap_err());
    }
    report.timed(start)
}

/// Published `c(X)` values.
pub const PUBLISHED_CONSTANTS: [(FamilyId, u64, u64); 10] = [
    (FamilyId::TwG2, 1, 2),
    (FamilyId::TwB2, 1, 2),
    (FamilyId::TriD4, 17, 48),
    (FamilyId::TwF4, 7, 16),
    (FamilyId::G2, 11, 36),
    (FamilyId::F4, 3577, 18432),
    (FamilyId::E6, 281, 1296),
    (FamilyId::TwE6, 281, 1296),
    (FamilyId::E7, 131491, 589824),
    (FamilyId::E8, 5927482903, 25480396800),
];

pub fn odd_order_floor() -> Rational {
    ratio(3577, 18432)
}

pub fn constants_check() -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("constants");
    for (fam, a, b) in PUBLISHED_CONSTANTS {
        let (got, row) = constant_infimum(fam);
        let want = ratio(a, b);
        report.check(got == want, || Failure {
            row: Some(row.id()),
            ..failure(format!("c({fam})"), &want, &got)
        });
    }
    let (global, _) = global_infimum();
    report.check(global == odd_order_floor(), || failure("global minimum", odd_order_floor(), &global));
    report.timed(start)
}

/// `value_simple >= c(X)` (and `<= 1`) on every grid point; for `r = 2`
/// and odd `q`, also `>= 3577/18432`.
pub fn floor_sweep(grids: &[SweepGrid]) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("floor");
    let floor2 = odd_order_floor();
    for grid in grids {
        let fam = grid.family;
        let c = constant_infimum(fam).0;
        let part = sweep("floor", &grid.pairs(), |q, r| {
            let rep = match proportion_formula(fam, q, r) {
                Ok(rep) => rep,
                Err(e) => return vec![failure(format!("{fam} q={q} r={r}"), "a value", e)],
            };
            let mut out = Vec::new();
            let mk = |what: &str, bound: &Rational| Failure {
                inputs: format!("{fam} q={q} r={r} e={} phi={}", rep.e, rep.phi),
                expected: format!("{what} {bound}"),
                actual: rep.value_simple.to_string(),
                row: rep.row.clone(),
            };
            if rep.value_simple < c {
                out.push(mk(">=", &c));
            }
            if rep.value_simple > Rational::one() || !(rep.value_simple > Rational::zero()) {
                out.push(mk("in (0, 1]", &Rational::one()));
            }
            if r.get() == 2 && q % 2 == 1 && rep.value_simple < floor2 {
                out.push(mk(">=", &floor2));
            }
            out
        });
        report.absorb(part);
    }
    report.timed(start)
}

/// `q -> -q` on cyclotomic indices: odd `n` to `2n`, `n = 2 mod 4` to `n/2`.
pub fn ennola(n: u64) -> u64 {
    match n % 4 {
        1 | 3 => 2 * n,
        2 => n / 2,
        _ => n,
    }
}

/// The guard a row maps to under `q -> -q`.
pub fn ennola_guard(g: &RowGuard) -> RowGuard {
    let r_class = match g.r_class {
        RClass::TwoQ1Mod4 => RClass::TwoQ3Mod4,
        RClass::TwoQ3Mod4 => RClass::TwoQ1Mod4,
        other => other,
    };
    // r = 2 rows are all labelled e = 1
    let e = if g.r_class.is_two() { g.e } else { ennola(g.e) };
    RowGuard {
        e,
        r_class,
        phi_index: CycIndex::new(ennola(g.phi_index.get().into()) as u32).unwrap(),
    }
}

fn pairing(from: FamilyId, to: FamilyId) -> VerificationReport {
    let mut report = VerificationReport::new("duality");
    for row in rows(from) {
        let target = ennola_guard(&row.guard);
        let partner = rows(to).iter().find(|r| r.guard == target);
        report.check(partner.is_some_and(|p| p.coeffs == row.coeffs), || Failure {
            row: Some(row.id()),
            ..failure(
                format!("{} -> {to}/{target}", row.id()),
                fmt_coeffs(&row.coeffs),
                partner.map_or("no partner row".to_string(), |p| fmt_coeffs(&p.coeffs)),
            )
        });
    }
    report
}

/// E6 rows pair with 2E6 rows under `q -> -q`; the untwisted self-dual
/// families (and 3D4) map onto themselves.
pub fn duality_check() -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("duality");
    report.absorb(pairing(FamilyId::E6, FamilyId::TwE6));
    report.absorb(pairing(FamilyId::TwE6, FamilyId::E6));
    for fam in [FamilyId::G2, FamilyId::F4, FamilyId::E7, FamilyId::E8, FamilyId::TriD4] {
        report.absorb(pairing(fam, fam));
    }
    report.timed(start)
}

/// Catalog invariants and the twisted-pair product identities.
pub fn structural_check(q_max: u64) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("structural");
    for fam in BUILTIN_FAMILIES {
        let cat = builtin_catalog(fam).expect("builtin");
        let violations = validate_catalog(cat);
        report.check(violations.is_empty(), || failure(format!("{fam} catalog"), "valid", violations.join("; ")));
        let sum = cat.weight_sum();
        report.check(sum.is_one(), || failure(format!("{fam} weight sum"), 1, &sum));
    }
    use TwistedFactorKind::*;
    let pairs = [
        (B2Plus, B2Minus, 4u32, FamilyId::TwB2),
        (F4Plus12, F4Minus12, 12, FamilyId::TwF4),
        (G2Plus, G2Minus, 6, FamilyId::TwG2),
    ];
    for (plus, minus, index, fam) in pairs {
        for q in fam.valid_qs(q_max) {
            let product = plus.eval(q).and_then(|a| Ok(a * minus.eval(q)?));
            let phi = cyclotomic_eval(CycIndex::new(index).unwrap(), q);
            let ok = matches!((&product, &phi), (Ok(a), Ok(b)) if a == &**b);
            report.check(ok, || {
                failure(format!("{plus}*{minus} at q={q}"), format!("{phi:?}"), format!("{product:?}"))
            });
        }
    }
    report.timed(start)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemma,
    Worked,
    Cross,
    Interp,
    Constants,
    Floor,
    Duality,
    Structural,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Lemma,
        Suite::Worked,
        Suite::Cross,
        Suite::Interp,
        Suite::Constants,
        Suite::Floor,
        Suite::Duality,
        Suite::Structural,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            Suite::Lemma => "lemma",
            Suite::Worked => "worked",
            Suite::Cross => "cross",
            Suite::Interp => "interp",
            Suite::Constants => "constants",
            Suite::Floor => "floor",
            Suite::Duality => "duality",
            Suite::Structural => "structural",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite '{s}' (expected all, {})", names.join(", "))
            })
    }
}

/// Grid sizes for the suites.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub lemma_q_max: u64,
    pub lemma_r_max: u64,
    pub lemma_i_max: u32,
    pub cross_grids: Vec<SweepGrid>,
    pub floor_q_max: u64,
    pub floor_r_max: u64,
    pub structural_q_max: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        let cross = |fam: FamilyId, qs: &[u64]| SweepGrid {
            family: fam,
            qs: qs.to_vec(),
            r_max: 10_000,
        };
        VerifyConfig {
            lemma_q_max: 512,
            lemma_r_max: 200,
            lemma_i_max: 36,
            cross_grids: vec![
                cross(FamilyId::TwF4, &[2, 8, 32, 128, 512]),
                cross(FamilyId::TwB2, &[2, 8, 32, 128, 512, 2048]),
                cross(FamilyId::TwG2, &[3, 27, 243, 2187]),
            ],
            floor_q_max: 1 << 11,
            floor_r_max: 10_000,
            structural_q_max: 1 << 13,
        }
    }
}

impl VerifyConfig {
    pub fn floor_grids(&self) -> Vec<SweepGrid> {
        FamilyId::ALL
            .iter()
            .map(|&f| SweepGrid::up_to(f, self.floor_q_max, self.floor_r_max))
            .collect()
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> VerificationReport {
    match suite {
        Suite::Lemma => lemma_sweep(config.lemma_q_max, config.lemma_r_max, config.lemma_i_max),
        Suite::Worked => worked_example(),
        Suite::Cross => {
            let start = Instant::now();
            let mut report = VerificationReport::new("cross");
            for grid in &config.cross_grids {
                report.absorb(cross_check(grid));
            }
            report.timed(start)
        }
        Suite::Interp => interpolation_suite(&BUILTIN_FAMILIES),
        Suite::Constants => constants_check(),
        Suite::Floor => floor_sweep(&config.floor_grids()),
        Suite::Duality => duality_check(),
        Suite::Structural => structural_check(config.structural_q_max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn row(fam: FamilyId, e: u64, rc: RClass) -> &'static FormulaRow {
        rows(fam)
            .iter()
            .find(|r| r.guard.e == e && r.guard.r_class == rc)
            .unwrap()
    }

    fn phis(found: &[(u64, Prime, BigUint)]) -> Vec<u64> {
        let mut v: Vec<u64> = found.iter().map(|(_, _, phi)| phi.try_into().unwrap()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn sample_finder_examples() {
        let lim = SampleLimits::for_family(FamilyId::TwF4);
        let g = row(FamilyId::TwF4, 1, RClass::Any).guard;
        let found = sample_finder(FamilyId::TwF4, &g, 3, lim).unwrap();
        assert_eq!(phis(&found), vec![7, 31, 127]);
        assert_eq!(found.iter().map(|s| s.0).collect::<Vec<_>>(), vec![8, 32, 128]);

        let g = row(FamilyId::TwF4, 2, RClass::Above(3)).guard;
        let found = sample_finder(FamilyId::TwF4, &g, 3, lim).unwrap();
        assert_eq!(phis(&found), vec![11, 19, 43]);

        let g = row(FamilyId::TwB2, 4, RClass::Any).guard;
        let found = sample_finder(FamilyId::TwB2, &g, 2, lim).unwrap();
        assert_eq!(phis(&found), vec![5, 13]);
        assert_eq!(found.iter().map(|s| s.0).collect::<Vec<_>>(), vec![2, 8]);
    }

    #[test]
    fn interpolation_examples() {
        let g = row(FamilyId::TwF4, 1, RClass::Any).guard;
        let got = interpolation_recover(FamilyId::TwF4, &g, 2, &[(8, p(7)), (32, p(31)), (128, p(127))]).unwrap();
        assert_eq!(got, vec![ratio(7, 16), ratio(1, 2), ratio(1, 16)]);

        let g = row(FamilyId::TwB2, 4, RClass::Any).guard;
        let got = interpolation_recover(FamilyId::TwB2, &g, 1, &[(8, p(5)), (8, p(13))]).unwrap();
        assert_eq!(got, vec![ratio(3, 4), ratio(1, 4)]);

        let g = row(FamilyId::TwF4, 12, RClass::Any).guard;
        let got = interpolation_recover(FamilyId::TwF4, &g, 1, &[(8, p(37)), (8, p(109))]).unwrap();
        assert_eq!(got, vec![ratio(11, 12), ratio(1, 12)]);
    }

    #[test]
    fn interpolation_errors() {
        let g = row(FamilyId::TwB2, 1, RClass::Any).guard;
        assert!(matches!(
            interpolation_recover(FamilyId::TwB2, &g, 1, &[(8, p(7))]),
            Err(Error::InsufficientSamples { needed: 2, got: 1 })
        ));
        // 2^7 - 1 = 127 twice
        assert!(matches!(
            interpolation_recover(FamilyId::TwB2, &g, 1, &[(128, p(127)), (128, p(127))]),
            Err(Error::SingularSystem(_))
        ));
    }

    #[test]
    fn twisted_g2_two_row_has_single_phi() {
        // (q+1)_2 = 4 for every odd power of 3
        let g = row(FamilyId::TwG2, 1, RClass::Two).guard;
        let err = sample_finder(FamilyId::TwG2, &g, 2, SampleLimits::for_family(FamilyId::TwG2)).unwrap_err();
        assert!(matches!(err, Error::SampleSearchExhausted { ref found, .. } if found == &vec![(3, 2)]));
    }

    #[test]
    fn solver_recovers_polynomial() {
        let coeffs = vec![ratio(3, 7), ratio(5, 11), ratio(0, 1), ratio(2, 3)];
        let pts: Vec<(BigUint, Rational)> = [2u64, 3, 5, 9]
            .iter()
            .map(|&phi| {
                let r = FormulaRow {
                    family: FamilyId::E8,
                    guard: row(FamilyId::E8, 3, RClass::Any).guard,
                    coeffs: coeffs.clone(),
                };
                (BigUint::from(phi), r.eval(&BigUint::from(phi)))
            })
            .collect();
        assert_eq!(solve_in_inverse_phi(&pts).unwrap(), coeffs);
    }

    #[test]
    fn ennola_map() {
        let pairs: Vec<(u64, u64)> = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 18].iter().map(|&e| (e, ennola(e))).collect();
        assert_eq!(
            pairs,
            vec![(1, 2), (2, 1), (3, 6), (4, 4), (5, 10), (6, 3), (8, 8), (9, 18), (10, 5), (12, 12), (18, 9)]
        );
    }

    #[test]
    fn small_suites_pass() {
        for report in [worked_example(), constants_check(), duality_check(), structural_check(1 << 13)] {
            assert!(report.passed(), "{}: {:?}", report.suite, report.failures);
            assert!(report.cases > 0);
        }
    }

    #[test]
    fn grid_excludes_characteristic() {
        let grid = SweepGrid::new(FamilyId::G2, vec![9, 16], 7).unwrap();
        assert_eq!(grid.pairs().len(), 3 + 3);
        assert!(SweepGrid::new(FamilyId::TwB2, vec![4], 7).is_err());
    }

    #[test]
    fn suite_names() {
        assert_eq!("floor".parse::<Suite>().unwrap(), Suite::Floor);
        assert!("bogus".parse::<Suite>().is_err());
    }
}
