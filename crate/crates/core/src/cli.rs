//! Command implementations behind the `transmit` binary.
//!
//! Each `run_*` function returns an [`Outcome`] holding the exit code and
//! the text for stdout and stderr, so the commands can be tested without
//! spawning a process. Data goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success or verification pass, 1 usage/parse/validation
//! error, 2 verification mismatch, 3 vertex cap exceeded.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::build::Builder;
use crate::error::Error;
use crate::expr::TopologyExpr;
use crate::formulas::{evaluate_expr, gf_series, tree_triple, TransmissionTriple};
use crate::graph::DistanceHistogram;
use crate::metrics::{
    compare_rank, display_rational, parse_decimal, summarize, SortKey, TopologyReport,
};
use crate::parse::{parse, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!(
                "unknown format `{other}` (expected table, json or csv)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        Error::Arithmetic(_) | Error::Disconnected => EXIT_MISMATCH,
        Error::InvalidArgument(_) | Error::Validation(_) | Error::Parse(_) => EXIT_USAGE,
    }
}

fn describe(input: &str, err: &Error) -> String {
    match err {
        Error::Parse(p) => describe_parse(input, p),
        Error::Validation(violations) => {
            let mut out = format!("error: invalid expression `{}`\n", input.trim());
            for v in violations {
                let _ = writeln!(out, "  {v}");
            }
            out
        }
        Error::ResourceLimit { estimated, cap } => format!(
            "error: `{}` would build {estimated} vertices, over the limit of {cap} (raise --max-vertices)\n",
            input.trim()
        ),
        other => format!("error: {other}\n"),
    }
}

fn describe_parse(input: &str, err: &ParseError) -> String {
    let line = input.replace(['\n', '\r', '\t'], " ");
    format!(
        "error: {err}\n  {line}\n  {}^\n",
        " ".repeat(err.position.saturating_sub(1))
    )
}

fn parse_and_validate(text: &str) -> Result<TopologyExpr, Error> {
    let expr = parse(text)?;
    expr.validate()?;
    Ok(expr)
}

fn failure(input: &str, err: Error) -> Outcome {
    Outcome::fail(exit_code(&err), describe(input, &err))
}

fn rational_json(r: &BigRational) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "display": display_rational(r),
    })
}

fn rational_exact(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_table(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{} ({})", rational_exact(r), display_rational(r))
    }
}

/// JSON object for one report; integers are decimal strings.
pub fn report_json(report: &TopologyReport) -> Value {
    json!({
        "expr": report.expression,
        "size": report.triple.size.to_string(),
        "delta": report.triple.delta.to_string(),
        "delta0": report.triple.delta0.to_string(),
        "mean_all": rational_json(&report.mean_all),
        "mean_distinct": report.mean_distinct.as_ref().map(rational_json),
        "expected_messages": report.expected_messages.as_ref().map(rational_json),
    })
}

fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn to_csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV of UTF-8 fields")
}

/// Left-aligned text table with two-space gutters.
fn to_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut text = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                text.push_str("  ");
            }
            let _ = write!(text, "{cell:<w$}");
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(headers.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn key_value_table(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

/// `transmit eval`: closed-form evaluation, no size cap.
pub fn run_eval(
    expr_text: &str,
    format: Format,
    rate: Option<&str>,
    time: Option<&str>,
) -> Outcome {
    let rates = match (rate, time) {
        (None, None) => None,
        (Some(r), Some(t)) => match (parse_decimal(r), parse_decimal(t)) {
            (Ok(r), Ok(t)) => Some((r, t)),
            (Err(e), _) | (_, Err(e)) => return failure(expr_text, e),
        },
        _ => {
            return Outcome::fail(
                EXIT_USAGE,
                "error: --rate and --time must be given together\n".into(),
            )
        }
    };
    let triple = match parse_and_validate(expr_text).and_then(|e| evaluate_expr(&e)) {
        Ok(t) => t,
        Err(e) => return failure(expr_text, e),
    };
    let report = summarize(
        expr_text.trim(),
        &triple,
        rates.as_ref().map(|(r, _)| r),
        rates.as_ref().map(|(_, t)| t),
    );
    Outcome::ok(render_report(&report, format))
}

fn render_report(report: &TopologyReport, format: Format) -> String {
    let absent = || "-".to_string();
    match format {
        Format::Json => to_json(&report_json(report)),
        Format::Table => key_value_table(&[
            ("expression", report.expression.clone()),
            ("size", report.triple.size.to_string()),
            ("delta", report.triple.delta.to_string()),
            ("delta0", report.triple.delta0.to_string()),
            ("mean_all", rational_table(&report.mean_all)),
            (
                "mean_distinct",
                report
                    .mean_distinct
                    .as_ref()
                    .map_or_else(absent, rational_table),
            ),
            (
                "expected_messages",
                report
                    .expected_messages
                    .as_ref()
                    .map_or_else(absent, rational_table),
            ),
        ]),
        Format::Csv => to_csv(&REPORT_COLUMNS, &[report_row(report)]),
    }
}

const REPORT_COLUMNS: [&str; 7] = [
    "expression",
    "size",
    "delta",
    "delta0",
    "mean_all",
    "mean_distinct",
    "expected_messages",
];

fn report_row(report: &TopologyReport) -> Vec<String> {
    vec![
        report.expression.clone(),
        report.triple.size.to_string(),
        report.triple.delta.to_string(),
        report.triple.delta0.to_string(),
        rational_exact(&report.mean_all),
        report
            .mean_distinct
            .as_ref()
            .map(rational_exact)
            .unwrap_or_default(),
        report
            .expected_messages
            .as_ref()
            .map(rational_exact)
            .unwrap_or_default(),
    ]
}

/// `transmit verify`: build the graph, run the BFS oracle and compare with
/// the closed-form engine.
pub fn run_verify(expr_text: &str, max_vertices: usize) -> Outcome {
    run_verify_with(expr_text, max_vertices, evaluate_expr)
}

/// [`run_verify`] against an arbitrary formula engine.
pub fn run_verify_with<F>(expr_text: &str, max_vertices: usize, engine: F) -> Outcome
where
    F: Fn(&TopologyExpr) -> Result<TransmissionTriple, Error>,
{
    let expr = match parse_and_validate(expr_text) {
        Ok(e) => e,
        Err(e) => return failure(expr_text, e),
    };
    let oracle = match oracle_triple(&expr, max_vertices) {
        Ok(t) => t,
        Err(e) => return failure(expr_text, e),
    };
    let formula = match engine(&expr) {
        Ok(t) => t,
        Err(e) => return failure(expr_text, e),
    };

    let rows = [
        ("size", &oracle.size, &formula.size),
        ("delta", &oracle.delta, &formula.delta),
        ("delta0", &oracle.delta0, &formula.delta0),
    ];
    let mut out = format!("expression  {}\n", expr_text.trim());
    out.push_str(&to_table(
        &["quantity", "oracle", "formula"],
        &rows
            .iter()
            .map(|(name, o, f)| vec![name.to_string(), o.to_string(), f.to_string()])
            .collect::<Vec<_>>(),
    ));
    let pass = oracle == formula;
    let detail: Vec<String> = [rows[1], rows[2], rows[0]]
        .iter()
        .map(|(_, o, f)| format!("{o} {} {f}", if o == f { "=" } else { "≠" }))
        .collect();
    let _ = writeln!(
        out,
        "{} ({})",
        if pass { "PASS" } else { "FAIL" },
        detail.join(", ")
    );
    Outcome {
        code: if pass { EXIT_OK } else { EXIT_MISMATCH },
        stdout: out,
        stderr: if pass {
            String::new()
        } else {
            format!(
                "error: oracle and closed form disagree on `{}`\n",
                expr_text.trim()
            )
        },
    }
}

/// Builds `expr` under the cap and measures `(|G|, δ, δ₀)` by BFS.
pub fn oracle_triple(
    expr: &TopologyExpr,
    max_vertices: usize,
) -> Result<TransmissionTriple, Error> {
    let g = Builder::with_max_vertices(max_vertices).build(expr)?;
    Ok(TransmissionTriple {
        size: g.vertex_count().into(),
        delta: g.graph_transmission()?,
        delta0: g.root_transmission()?,
    })
}

/// `transmit compare`: closed-form reports ranked by `key`.
pub fn run_compare(expr_texts: &[String], key: SortKey, format: Format) -> Outcome {
    if expr_texts.is_empty() {
        return Outcome::fail(
            EXIT_USAGE,
            "error: compare needs at least one expression\n".into(),
        );
    }
    let mut reports = Vec::with_capacity(expr_texts.len());
    for text in expr_texts {
        match parse_and_validate(text).and_then(|e| evaluate_expr(&e)) {
            Ok(t) => reports.push(summarize(text.trim(), &t, None, None)),
            Err(e) => {
                let mut msg = format!("error: cannot evaluate `{}`\n", text.trim());
                msg.push_str(&describe(text, &e));
                return Outcome::fail(exit_code(&e), msg);
            }
        }
    }
    let ranked = match compare_rank(reports, key) {
        Ok(r) => r,
        Err(e) => return failure("", e),
    };
    let out = match format {
        Format::Json => to_json(&Value::Array(ranked.iter().map(report_json).collect())),
        Format::Csv => {
            let mut headers = vec!["rank"];
            headers.extend(REPORT_COLUMNS.iter().take(6));
            let rows: Vec<_> = ranked
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut row = vec![(i + 1).to_string()];
                    row.extend(report_row(r).into_iter().take(6));
                    row
                })
                .collect();
            to_csv(&headers, &rows)
        }
        Format::Table => {
            let rows: Vec<_> = ranked
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    vec![
                        (i + 1).to_string(),
                        r.expression.clone(),
                        r.triple.size.to_string(),
                        r.triple.delta.to_string(),
                        r.triple.delta0.to_string(),
                        r.mean_distinct
                            .as_ref()
                            .map_or_else(|| "-".into(), rational_table),
                    ]
                })
                .collect();
            to_table(
                &[
                    "rank",
                    "expression",
                    "size",
                    "delta",
                    "delta0",
                    "mean_distinct",
                ],
                &rows,
            )
        }
    };
    Outcome::ok(out)
}

/// `transmit series`: generating-function coefficients next to the tree
/// recurrence; exit 2 if any row disagrees.
pub fn run_series(arity: &BigUint, terms: usize, format: Format) -> Outcome {
    let series = match gf_series(arity, terms) {
        Ok(s) => s,
        Err(e) => return failure("", e),
    };
    let mut all_match = true;
    let mut rows = Vec::with_capacity(terms);
    for (k, coefficient) in series.terms.iter().enumerate() {
        let recurrence = match tree_triple(arity, k as u32 + 1) {
            Ok(t) => t.delta,
            Err(e) => return failure("", e),
        };
        let matches = *coefficient == recurrence;
        all_match &= matches;
        rows.push((k, coefficient.clone(), recurrence, matches));
    }
    let out = match format {
        Format::Json => to_json(&Value::Array(
            rows.iter()
                .map(|(k, c, r, m)| {
                    json!({"k": k, "coefficient": c.to_string(), "tree_delta": r.to_string(), "match": m})
                })
                .collect(),
        )),
        Format::Csv | Format::Table => {
            let cells: Vec<_> = rows
                .iter()
                .map(|(k, c, r, m)| vec![k.to_string(), c.to_string(), r.to_string(), m.to_string()])
                .collect();
            let headers = ["k", "coefficient", "tree_delta", "match"];
            if format == Format::Csv {
                to_csv(&headers, &cells)
            } else {
                to_table(&headers, &cells)
            }
        }
    };
    Outcome {
        code: if all_match { EXIT_OK } else { EXIT_MISMATCH },
        stdout: out,
        stderr: if all_match {
            String::new()
        } else {
            "error: series coefficients disagree with the tree recurrence\n".into()
        },
    }
}

/// `transmit hist`: distance histogram of the built graph.
pub fn run_hist(expr_text: &str, max_vertices: usize, format: Format) -> Outcome {
    let hist = match parse_and_validate(expr_text)
        .and_then(|e| Builder::with_max_vertices(max_vertices).build(&e))
        .and_then(|g| g.distance_histogram())
    {
        Ok(h) => h,
        Err(e) => return failure(expr_text, e),
    };
    Outcome::ok(render_hist(expr_text.trim(), &hist, format))
}

fn render_hist(expr: &str, hist: &DistanceHistogram, format: Format) -> String {
    let delta = hist.transmission();
    let size = hist.count(0);
    match format {
        Format::Json => to_json(&json!({
            "expr": expr,
            "size": size.to_string(),
            "counts": hist
                .counts()
                .iter()
                .map(|(d, c)| json!({"distance": d.to_string(), "pairs": c.to_string()}))
                .collect::<Vec<_>>(),
            "delta": delta.to_string(),
        })),
        Format::Csv => to_csv(
            &["distance", "pairs"],
            &hist
                .counts()
                .iter()
                .map(|(d, c)| vec![d.to_string(), c.to_string()])
                .collect::<Vec<_>>(),
        ),
        Format::Table => {
            let rows: Vec<_> = hist
                .counts()
                .iter()
                .map(|(d, c)| vec![d.to_string(), c.to_string()])
                .collect();
            let mut out = format!("expression  {expr}\n");
            out.push_str(&to_table(&["distance", "pairs"], &rows));
            let _ = writeln!(out, "delta  {delta}");
            out
        }
    }
}
