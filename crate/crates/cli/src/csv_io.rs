//! The report CSV: `check_id,params,lhs,rhs,margin,pass,provenance,runtime_ms`.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use anyhow::{bail, Context, Result};
use bergman_core::report::{CheckReport, Verdict};

pub const HEADER: [&str; 8] = ["check_id", "params", "lhs", "rhs", "margin", "pass", "provenance", "runtime_ms"];

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

pub fn format_params(params: &BTreeMap<String, f64>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={}", format_real(*v)))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn parse_params(s: &str) -> Result<BTreeMap<String, f64>> {
    if s.is_empty() {
        return Ok(BTreeMap::new());
    }
    s.split(';')
        .map(|kv| {
            let (k, v) = kv.split_once('=').with_context(|| format!("bad parameter {kv:?}"))?;
            Ok((k.to_string(), v.parse::<f64>().with_context(|| format!("bad value in {kv:?}"))?))
        })
        .collect()
}

pub fn write_reports(out: impl Write, reports: &[CheckReport]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(HEADER)?;
    for r in reports {
        w.write_record([
            r.check_id.clone(),
            format_params(&r.params),
            format_real(r.lhs),
            format_real(r.rhs),
            format_real(r.margin),
            r.verdict.to_string(),
            r.provenance.clone(),
            r.runtime_ms.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_reports(input: impl Read) -> Result<Vec<CheckReport>> {
    let mut rd = csv::Reader::from_reader(input);
    let header: Vec<String> = rd.headers()?.iter().map(str::to_string).collect();
    if header != HEADER {
        bail!("unexpected header {header:?}");
    }
    rd.records()
        .map(|rec| {
            let rec = rec?;
            let field = |i: usize| rec.get(i).context("short row");
            let real = |i: usize| -> Result<f64> { Ok(field(i)?.parse::<f64>()?) };
            Ok(CheckReport {
                check_id: field(0)?.to_string(),
                params: parse_params(field(1)?)?,
                lhs: real(2)?,
                rhs: real(3)?,
                margin: real(4)?,
                verdict: field(5)?.parse::<Verdict>()?,
                provenance: field(6)?.to_string(),
                runtime_ms: field(7)?.parse()?,
            })
        })
        .collect()
}
