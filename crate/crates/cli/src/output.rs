use clap::ValueEnum;
use serde_json::{json, Map, Value};

use exreg_core::arith::{decimal_approx, to_f64};
use exreg_core::{ProportionReport, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

/// `25/49 (≈0.5102)`
pub fn plain_value(v: &Rational) -> String {
    format!("{v} (≈{})", decimal_approx(v, 4))
}

pub fn rational_json(v: &Rational) -> Value {
    json!({
        "num": v.numer().to_string(),
        "den": v.denom().to_string(),
        "approx": to_f64(v),
    })
}

/// Flat record shared by `prop` and `scan`.
pub fn record(rep: &ProportionReport, simple: bool) -> Map<String, Value> {
    let value = if simple { &rep.value_simple } else { &rep.value_sc };
    let mut m = Map::new();
    m.insert("family".into(), json!(rep.family.name()));
    m.insert("q".into(), json!(rep.q));
    m.insert("r".into(), json!(rep.r.get()));
    m.insert("e".into(), json!(rep.e));
    m.insert("phi".into(), json!(rep.phi.to_string()));
    m.insert("row".into(), json!(rep.row.as_deref().unwrap_or("no-row")));
    m.insert("value_num".into(), json!(value.numer().to_string()));
    m.insert("value_den".into(), json!(value.denom().to_string()));
    m.insert("value_approx".into(), json!(to_f64(value)));
    m.insert("simple".into(), json!(simple));
    m.insert("engine".into(), json!(rep.engine.to_string()));
    m
}

pub const CSV_HEADER: &str = "family,q,r,e,phi,row,value_num,value_den,value_approx,simple,engine";

pub fn csv_line(rec: &Map<String, Value>, extra: &[&str]) -> String {
    let mut cols: Vec<String> = CSV_HEADER
        .split(',')
        .map(|k| match &rec[k] {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
        .collect();
    for k in extra {
        cols.push(match &rec[*k] {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        });
    }
    cols.join(",")
}

pub fn plain_record(rep: &ProportionReport, simple: bool) -> String {
    let value = if simple { &rep.value_simple } else { &rep.value_sc };
    format!(
        "q={} r={} e={} phi={} row={} value={}",
        rep.q,
        rep.r,
        rep.e,
        rep.phi,
        rep.row.as_deref().unwrap_or("no-row"),
        plain_value(value)
    )
}
