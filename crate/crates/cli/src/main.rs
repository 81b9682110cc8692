//! `exreg`: exact proportions of r-regular elements in the finite
//! exceptional groups.

mod output;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use exreg_core::arith::primes_up_to;
use exreg_core::tables::{self, render_row, rows};
use exreg_core::torus::{self, BUILTIN_FAMILIES};
use exreg_core::verify::{self, Suite, VerifyConfig};
use exreg_core::{Error, FamilyId, Prime, ProportionReport, Rational};

use output::{csv_line, plain_record, plain_value, rational_json, record, OutputFormat, CSV_HEADER};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(name = "exreg", version, about = "Exact r-regular proportions in finite exceptional groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineChoice {
    Formula,
    Torus,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Proportion of r-regular elements in X(q).
    Prop {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        q: u64,
        #[arg(long, value_parser = parse_prime)]
        r: Prime,
        /// Report the simple group G/Z instead of the simply connected group.
        #[arg(long)]
        simple: bool,
        #[arg(long, value_enum, default_value = "formula")]
        engine: EngineChoice,
        /// Torus catalog file to use instead of the builtin one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Print a family's encoded table.
    Table {
        #[arg(long)]
        family: FamilyId,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Print the lower-bound constants c(X).
    Constants {
        #[arg(long)]
        family: Option<FamilyId>,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Run verification suites; exits 1 on any failure.
    Verify {
        /// One of lemma, worked, cross, interp, constants, floor, duality, structural, all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Grid overrides, e.g. `floor-q-max=512,floor-r-max=1000`.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Stream one record per (q, r) pair.
    Scan {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        q_max: u64,
        #[arg(long)]
        r_max: u64,
        #[arg(long)]
        simple: bool,
        /// Compare the simple-group value with c(X); exits 1 on a violation.
        #[arg(long)]
        check_floor: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Print or validate a torus catalog.
    Catalog {
        #[arg(long, required_unless_present = "path")]
        family: Option<FamilyId>,
        #[arg(long)]
        path: Option<PathBuf>,
        #[arg(long)]
        validate: bool,
    },
}

fn parse_prime(s: &str) -> Result<Prime, String> {
    let n: u64 = s.parse().map_err(|e| format!("{e}"))?;
    Prime::new(n).map_err(|e| e.to_string())
}

/// An error carrying its exit status.
struct Fail {
    code: u8,
    message: String,
}

impl From<Error> for Fail {
    fn from(err: Error) -> Self {
        let message = match &err {
            Error::DefiningCharacteristic { q, r } => format!(
                "r = {r} equals the defining characteristic of q = {q}; proportions are only defined for (r,q)=1"
            ),
            Error::CatalogUnavailable(fam) => format!(
                "catalog unavailable for {fam}; builtin catalogs exist only for {} (supply one with --catalog/--path)",
                names(&BUILTIN_FAMILIES)
            ),
            other => other.to_string(),
        };
        Fail {
            code: EXIT_DOMAIN,
            message,
        }
    }
}

impl From<io::Error> for Fail {
    fn from(err: io::Error) -> Self {
        Fail {
            code: EXIT_DOMAIN,
            message: err.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Fail {
    Fail {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn names(fams: &[FamilyId]) -> String {
    fams.iter().map(|f| f.name()).collect::<Vec<_>>().join(", ")
}

type CmdResult = Result<u8, Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("EXREG_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool configured once");
    }
    let result = match cli.command {
        Command::Prop {
            family,
            q,
            r,
            simple,
            engine,
            catalog,
            format,
        } => cmd_prop(family, q, r, simple, engine, catalog, format),
        Command::Table { family, format } => cmd_table(family, format),
        Command::Constants { family, format } => cmd_constants(family, format),
        Command::Verify { suite, grid, format } => cmd_verify(&suite, grid.as_deref(), format),
        Command::Scan {
            family,
            q_max,
            r_max,
            simple,
            check_floor,
            format,
        } => cmd_scan(family, q_max, r_max, simple, check_floor, format),
        Command::Catalog {
            family,
            path,
            validate,
        } => cmd_catalog(family, path, validate),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(fail) => {
            eprintln!("error: {}", fail.message);
            ExitCode::from(fail.code)
        }
    }
}

fn torus_report(
    family: FamilyId,
    q: u64,
    r: Prime,
    catalog: Option<&torus::Catalog>,
) -> Result<ProportionReport, Error> {
    let Some(cat) = catalog else {
        return tables::proportion_torus(family, q, r);
    };
    // reuse the formula report for e, phi and row; swap in the torus value
    let mut rep = tables::proportion_formula(family, q, r)?;
    rep.value_sc = torus::proportion_by_catalog(cat, q, r)?;
    rep.value_simple = tables::center_adjust(family, q, r, &rep.value_sc);
    rep.engine = tables::Engine::TorusSum;
    Ok(rep)
}

fn cmd_prop(
    family: FamilyId,
    q: u64,
    r: Prime,
    simple: bool,
    engine: EngineChoice,
    catalog: Option<PathBuf>,
    format: OutputFormat,
) -> CmdResult {
    family.validate_q(q)?;
    let catalog = match catalog {
        Some(path) => {
            let cat = torus::load_catalog(&fs::read_to_string(&path)?)?;
            if cat.family != family {
                return Err(usage(format!(
                    "catalog {} is for {}, not {family}",
                    path.display(),
                    cat.family
                )));
            }
            Some(cat)
        }
        None => None,
    };
    let mut reports = Vec::new();
    if engine != EngineChoice::Torus {
        reports.push(tables::proportion_formula(family, q, r)?);
    }
    if engine != EngineChoice::Formula {
        reports.push(torus_report(family, q, r, catalog.as_ref())?);
    }
    let agree = reports.windows(2).all(|w| w[0].value_sc == w[1].value_sc);
    let both = engine == EngineChoice::Both;
    let mut out = io::stdout().lock();
    match format {
        OutputFormat::Plain => {
            for rep in &reports {
                let value = if simple { &rep.value_simple } else { &rep.value_sc };
                if both {
                    writeln!(out, "{:<10} {}", format!("{}:", rep.engine), plain_value(value))?;
                } else {
                    writeln!(out, "{}", plain_value(value))?;
                }
            }
            if both {
                writeln!(out, "agree={agree}")?;
            }
            let rep = &reports[0];
            write!(
                out,
                "family={} q={} r={} e={} phi={} row={}",
                rep.family,
                rep.q,
                rep.r,
                rep.e,
                rep.phi,
                rep.row.as_deref().unwrap_or("no-row")
            )?;
            if simple {
                write!(out, " simple=true |Z|_r={}", tables::center_r_part(family, q, r))?;
            }
            writeln!(out)?;
        }
        OutputFormat::Json => {
            for rep in &reports {
                let mut rec = record(rep, simple);
                if both {
                    rec.insert("agree".into(), json!(agree));
                }
                writeln!(out, "{}", Value::Object(rec))?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}{}", if both { ",agree" } else { "" })?;
            for rep in &reports {
                let mut rec = record(rep, simple);
                rec.insert("agree".into(), json!(agree));
                let extra: &[&str] = if both { &["agree"] } else { &[] };
                writeln!(out, "{}", csv_line(&rec, extra))?;
            }
        }
    }
    Ok(if agree { 0 } else { EXIT_VERIFY_FAILED })
}

fn cmd_table(family: FamilyId, format: OutputFormat) -> CmdResult {
    let mut out = io::stdout().lock();
    match format {
        OutputFormat::Plain => write!(out, "{}", tables::table_emit(family))?,
        OutputFormat::Json => {
            for row in rows(family) {
                let rec = json!({
                    "family": family.name(),
                    "row": row.id(),
                    "e": row.guard.e,
                    "r_class": row.guard.r_class.to_string(),
                    "phi_index": row.guard.phi_index.get(),
                    "coeffs": row.coeffs.iter().map(rational_json).collect::<Vec<_>>(),
                    "text": render_row(row),
                });
                writeln!(out, "{rec}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "row,e,r_class,phi_index,j,num,den")?;
            for row in rows(family) {
                for (j, c) in row.coeffs.iter().enumerate() {
                    writeln!(
                        out,
                        "{},{},{},{},{j},{},{}",
                        row.id(),
                        row.guard.e,
                        row.guard.r_class,
                        row.guard.phi_index,
                        c.numer(),
                        c.denom()
                    )?;
                }
            }
        }
    }
    Ok(0)
}

fn cmd_constants(family: Option<FamilyId>, format: OutputFormat) -> CmdResult {
    let families: Vec<FamilyId> = match family {
        Some(f) => vec![f],
        None => FamilyId::ALL.to_vec(),
    };
    let mut out = io::stdout().lock();
    if format == OutputFormat::Csv {
        writeln!(out, "family,num,den,witness")?;
    }
    for &fam in &families {
        let (c, row) = tables::constant_infimum(fam);
        match format {
            OutputFormat::Plain => writeln!(out, "{:<4} {:<32} witness {}", fam.name(), plain_value(&c), row.id())?,
            OutputFormat::Json => writeln!(
                out,
                "{}",
                json!({"family": fam.name(), "c": rational_json(&c), "witness": row.id()})
            )?,
            OutputFormat::Csv => writeln!(out, "{},{},{},{}", fam, c.numer(), c.denom(), row.id())?,
        }
    }
    if family.is_none() {
        let (g, fam) = tables::global_infimum();
        match format {
            OutputFormat::Plain => writeln!(out, "global minimum {} ({fam})", plain_value(&g))?,
            OutputFormat::Json => writeln!(
                out,
                "{}",
                json!({"global_minimum": rational_json(&g), "family": fam.name()})
            )?,
            OutputFormat::Csv => writeln!(out, "global,{},{},{fam}", g.numer(), g.denom())?,
        }
    }
    Ok(0)
}

fn apply_grid(config: &mut VerifyConfig, spec: &str) -> Result<(), Fail> {
    for item in spec.split(',').filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("malformed grid entry '{item}' (expected key=value)")))?;
        let value: u64 = value
            .parse()
            .map_err(|_| usage(format!("grid value for '{key}' must be a positive integer")))?;
        if value == 0 {
            return Err(usage(format!("grid value for '{key}' must be positive")));
        }
        match key {
            "lemma-q-max" => config.lemma_q_max = value,
            "lemma-r-max" => config.lemma_r_max = value,
            "lemma-i-max" => config.lemma_i_max = value as u32,
            "cross-r-max" => config.cross_grids.iter_mut().for_each(|g| g.r_max = value),
            "floor-q-max" => config.floor_q_max = value,
            "floor-r-max" => config.floor_r_max = value,
            "structural-q-max" => config.structural_q_max = value,
            _ => {
                return Err(usage(format!(
                    "unknown grid key '{key}' (expected lemma-q-max, lemma-r-max, lemma-i-max, \
                     cross-r-max, floor-q-max, floor-r-max, structural-q-max)"
                )))
            }
        }
    }
    Ok(())
}

fn cmd_verify(suite: &str, grid: Option<&str>, format: OutputFormat) -> CmdResult {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse::<Suite>().map_err(usage)?]
    };
    let mut config = VerifyConfig::default();
    if let Some(spec) = grid {
        apply_grid(&mut config, spec)?;
    }
    let mut out = io::stdout().lock();
    if format == OutputFormat::Csv {
        writeln!(out, "suite,cases,failures")?;
    }
    let mut failed = false;
    for s in suites {
        let report = verify::run_suite(s, &config);
        failed |= !report.passed();
        match format {
            OutputFormat::Plain => {
                let status = if report.passed() { "ok" } else { "FAILED" };
                writeln!(
                    out,
                    "{}: {} cases, {} failures {status}",
                    report.suite,
                    report.cases,
                    report.failures.len()
                )?;
                for f in report.failures.iter().take(20) {
                    writeln!(out, "  {f}")?;
                }
            }
            OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"))?,
            OutputFormat::Csv => writeln!(out, "{},{},{}", report.suite, report.cases, report.failures.len())?,
        }
        out.flush()?;
        eprintln!("{}: {:.2}s", report.suite, report.wall_time.as_secs_f64());
    }
    Ok(if failed { EXIT_VERIFY_FAILED } else { 0 })
}

fn cmd_scan(
    family: FamilyId,
    q_max: u64,
    r_max: u64,
    simple: bool,
    check_floor: bool,
    format: OutputFormat,
) -> CmdResult {
    let c = tables::constant_infimum(family).0;
    let primes = primes_up_to(r_max);
    let mut out = BufWriter::new(io::stdout().lock());
    if format == OutputFormat::Csv {
        writeln!(out, "{CSV_HEADER}{}", if check_floor { ",floor_ok" } else { "" })?;
    }
    let mut violations = 0usize;
    for q in family.valid_qs(q_max) {
        let reports: Vec<ProportionReport> = primes
            .par_iter()
            .filter(|r| q % r.get() != 0)
            .map(|&r| tables::proportion_formula(family, q, r))
            .collect::<Result<_, _>>()?;
        for rep in &reports {
            let floor_ok = rep.value_simple >= c;
            violations += usize::from(!floor_ok);
            match format {
                OutputFormat::Plain => {
                    write!(out, "{}", plain_record(rep, simple))?;
                    if check_floor {
                        write!(out, " floor={}", if floor_ok { "ok" } else { "VIOLATED" })?;
                    }
                    writeln!(out)?;
                }
                OutputFormat::Json => {
                    let mut rec = record(rep, simple);
                    if check_floor {
                        rec.insert("floor_ok".into(), json!(floor_ok));
                    }
                    writeln!(out, "{}", Value::Object(rec))?;
                }
                OutputFormat::Csv => {
                    let mut rec = record(rep, simple);
                    rec.insert("floor_ok".into(), json!(floor_ok));
                    let extra: &[&str] = if check_floor { &["floor_ok"] } else { &[] };
                    writeln!(out, "{}", csv_line(&rec, extra))?;
                }
            }
        }
    }
    out.flush()?;
    if check_floor {
        eprintln!("floor c({family}) = {}: {violations} violations", c);
    }
    Ok(if check_floor && violations > 0 { EXIT_VERIFY_FAILED } else { 0 })
}

fn cmd_catalog(family: Option<FamilyId>, path: Option<PathBuf>, validate: bool) -> CmdResult {
    let catalog = match (&path, family) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)?;
            torus::parse_catalog(&text)?
        }
        (None, Some(fam)) => torus::builtin_catalog(fam)
            .ok_or(Error::CatalogUnavailable(fam))?
            .clone(),
        (None, None) => return Err(usage("either --family or --path is required")),
    };
    if let (Some(fam), Some(_)) = (family, &path) {
        if catalog.family != fam {
            return Err(usage(format!("catalog is for {}, not {fam}", catalog.family)));
        }
    }
    let mut out = io::stdout().lock();
    if !validate {
        write!(out, "{}", torus::render_catalog(&catalog))?;
        return Ok(0);
    }
    let violations = torus::validate_catalog(&catalog);
    if violations.is_empty() {
        let sum: Rational = catalog.weight_sum();
        writeln!(
            out,
            "valid: {} catalog with {} classes, weights sum to {sum}",
            catalog.family,
            catalog.classes.len()
        )?;
        Ok(0)
    } else {
        for v in &violations {
            writeln!(out, "violation: {v}")?;
        }
        Ok(EXIT_VERIFY_FAILED)
    }
}
