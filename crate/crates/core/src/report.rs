//! Output formats for ledger reports and dimension tables.
//!
//! JSON: an object with `scenario`, `rows` (ascending `n`), `crossover`
//! (integer or null), `sustained` and `viability`. Every dimension is a
//! decimal string and every rational a `"numerator/denominator"` string, so
//! no value loses precision. CSV: one line per level with the columns of
//! [`CSV_COLUMNS`]. Tables: plain space-aligned text.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ledger::{dh_crossover_with, CurveScenario, DhReport, LedgerRow};
use crate::exec::Parallelism;

/// Column order of the CSV ledger.
pub const CSV_COLUMNS: [&str; 13] = [
    "n",
    "z_dim_upper",
    "w_dim_upper",
    "dr_dim_lower",
    "h2_budget",
    "z_plus_lower",
    "z_plus_cumulative",
    "h1_upper",
    "f0_upper",
    "dr_quotient_lower",
    "margin",
    "verdict",
    "sustained_from_here",
];

/// `"p/q"`, always with an explicit denominator.
pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("malformed rational {s:?}"));
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn parse_natural(s: &str) -> Result<BigUint> {
    s.parse()
        .map_err(|_| Error::InvalidArgument(format!("malformed integer {s:?}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioJson {
    pub genus: u32,
    pub degree: u32,
    pub splus: u32,
    pub coeff_a: String,
    pub coeff_b: String,
    pub real: u32,
    pub complex: u32,
    pub max_n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub n: usize,
    pub z_dim_upper: String,
    pub w_dim_upper: String,
    pub dr_dim_lower: String,
    pub h2_budget: String,
    pub z_plus_lower: String,
    pub z_plus_cumulative: String,
    pub h1_upper: String,
    pub f0_upper: String,
    pub dr_quotient_lower: String,
    pub margin: String,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub scenario: ScenarioJson,
    pub rows: Vec<RowJson>,
    pub crossover: Option<usize>,
    pub sustained: bool,
    pub viability: String,
}

impl From<&CurveScenario> for ScenarioJson {
    fn from(s: &CurveScenario) -> Self {
        ScenarioJson {
            genus: s.genus,
            degree: s.degree,
            splus: s.s_plus,
            coeff_a: format_rational(&s.coeff_a),
            coeff_b: format_rational(&s.coeff_b),
            real: s.real_places,
            complex: s.complex_places,
            max_n: s.max_n,
        }
    }
}

impl ScenarioJson {
    pub fn to_scenario(&self) -> Result<CurveScenario> {
        let scn = CurveScenario {
            genus: self.genus,
            degree: self.degree,
            s_plus: self.splus,
            coeff_a: parse_rational(&self.coeff_a)?,
            coeff_b: parse_rational(&self.coeff_b)?,
            real_places: self.real,
            complex_places: self.complex,
            max_n: self.max_n,
        };
        scn.validate()?;
        Ok(scn)
    }
}

impl From<&LedgerRow> for RowJson {
    fn from(r: &LedgerRow) -> Self {
        RowJson {
            n: r.n,
            z_dim_upper: r.z_dim_upper.to_string(),
            w_dim_upper: r.w_dim_upper.to_string(),
            dr_dim_lower: r.dr_dim_lower.to_string(),
            h2_budget: format_rational(&r.h2_budget),
            z_plus_lower: r.z_plus_lower.to_string(),
            z_plus_cumulative: r.z_plus_cumulative.to_string(),
            h1_upper: format_rational(&r.h1_upper),
            f0_upper: format_rational(&r.f0_upper),
            dr_quotient_lower: format_rational(&r.dr_quotient_lower),
            margin: format_rational(&r.margin),
            verdict: r.verdict.to_string(),
        }
    }
}

impl From<&DhReport> for ReportJson {
    fn from(r: &DhReport) -> Self {
        ReportJson {
            scenario: (&r.scenario).into(),
            rows: r.rows.iter().map(RowJson::from).collect(),
            crossover: r.crossover,
            sustained: r.sustained,
            viability: r.viability.to_string(),
        }
    }
}

pub fn report_to_json(report: &DhReport) -> String {
    let mut s = serde_json::to_string_pretty(&ReportJson::from(report))
        .expect("report serializes");
    s.push('\n');
    s
}

pub fn report_from_json(text: &str) -> Result<ReportJson> {
    let parsed: ReportJson = serde_json::from_str(text)
        .map_err(|e| Error::InvalidArgument(format!("unreadable report: {e}")))?;
    for row in &parsed.rows {
        for v in [&row.z_dim_upper, &row.w_dim_upper, &row.dr_dim_lower] {
            parse_natural(v)?;
        }
        for v in [&row.h2_budget, &row.h1_upper, &row.f0_upper, &row.dr_quotient_lower] {
            parse_rational(v)?;
        }
    }
    Ok(parsed)
}

/// Result of recomputing a stored report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Confirmed { rows: usize },
    Mismatch(String),
}

/// Recomputes every row of a JSON report from its scenario and compares.
pub fn verify_report_json(text: &str, par: Parallelism) -> Result<Verification> {
    let stored = report_from_json(text)?;
    let scn = stored.scenario.to_scenario()?;
    let fresh = ReportJson::from(&dh_crossover_with(&scn, par)?);
    if stored.rows.len() != fresh.rows.len() {
        return Ok(Verification::Mismatch(format!(
            "expected {} rows, found {}",
            fresh.rows.len(),
            stored.rows.len()
        )));
    }
    if let Some((a, b)) = stored.rows.iter().zip(&fresh.rows).find(|(a, b)| a != b) {
        return Ok(Verification::Mismatch(format!(
            "row n={} differs from recomputation (stored verdict {}, recomputed {})",
            a.n, a.verdict, b.verdict
        )));
    }
    if stored.crossover != fresh.crossover {
        return Ok(Verification::Mismatch(format!(
            "crossover {:?} differs from recomputed {:?}",
            stored.crossover, fresh.crossover
        )));
    }
    if stored.sustained != fresh.sustained || stored.viability != fresh.viability {
        return Ok(Verification::Mismatch(
            "summary fields differ from recomputation".into(),
        ));
    }
    Ok(Verification::Confirmed {
        rows: fresh.rows.len(),
    })
}

fn row_cells(r: &RowJson, sustained_from_here: bool) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.z_dim_upper.clone(),
        r.w_dim_upper.clone(),
        r.dr_dim_lower.clone(),
        r.h2_budget.clone(),
        r.z_plus_lower.clone(),
        r.z_plus_cumulative.clone(),
        r.h1_upper.clone(),
        r.f0_upper.clone(),
        r.dr_quotient_lower.clone(),
        r.margin.clone(),
        r.verdict.clone(),
        sustained_from_here.to_string(),
    ]
}

fn ledger_cells(report: &ReportJson) -> Vec<Vec<String>> {
    // sustained_from_here[i]: every row from i to the end holds
    let mut from_here = vec![false; report.rows.len()];
    let mut all = true;
    for (i, r) in report.rows.iter().enumerate().rev() {
        all &= r.verdict == "holds";
        from_here[i] = all;
    }
    report
        .rows
        .iter()
        .zip(from_here)
        .map(|(r, f)| row_cells(r, f))
        .collect()
}

pub fn report_to_csv(report: &DhReport) -> String {
    render_csv(&CSV_COLUMNS, &ledger_cells(&report.into()))
}

pub fn report_to_table(report: &DhReport) -> String {
    let json = ReportJson::from(report);
    let s = &json.scenario;
    let mut out = format!(
        "scenario: g={} d={} s={} A={} B={} signature=({}, {}) max_n={}\n",
        s.genus, s.degree, s.splus, s.coeff_a, s.coeff_b, s.real, s.complex, s.max_n
    );
    out.push_str(&render_table(&CSV_COLUMNS, &ledger_cells(&json)));
    let crossover = json
        .crossover
        .map_or_else(|| "none".to_string(), |c| c.to_string());
    out.push_str(&format!("crossover: {crossover}\n"));
    out.push_str(&format!("sustained: {}\n", json.sustained));
    out.push_str(&format!("viability: {}\n", json.viability));
    out
}

/// Comma-separated lines with a header. Cells never contain commas.
pub fn render_csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = headers.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Right-aligned columns separated by two spaces.
pub fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let mut s = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        s.push('\n');
        s
    };
    let mut out = line(headers.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}
