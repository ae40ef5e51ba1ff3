//! Command-line front end.
//!
//! Exit codes: 0 Hamiltonian, 1 non-Hamiltonian candidate, 2 inconsistent,
//! 3 search space above the ceiling, 64 bad input or flags.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::chi::{decisive_order, series_cross_check, ChiValue, SeriesAgreement};
use crate::criteria::{
    evaluate_all, run_criteria, CriterionKind, CriterionResult, Evaluation, Outcome, Witness, ALL_CRITERIA,
};
use crate::error::Error;
use crate::fixedpoint::{build_tables, FixedPointData};
use crate::search::{enumerate, Filter, Mode, SearchSpec, DEFAULT_CEILING};

pub const EXIT_CEILING: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "hamcheck", version, about = "Exact checks for circle actions with isolated fixed points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full chi report and every criterion for one datum (`-` reads stdin).
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Cross-check every chi^i against its power series truncated at this order.
        #[arg(long = "order-oracle", value_name = "K")]
        order_oracle: Option<u64>,
    },
    /// Enumerate canonical data and keep those passing the filters.
    Search {
        /// Real dimension 2n.
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        points: usize,
        #[arg(long = "max-weight")]
        max_weight: i64,
        /// `all` or `non-hamiltonian`.
        #[arg(long, default_value = "all")]
        mode: String,
        /// Comma-separated subset of chi_consistency,pairing_ladder,adjacent_indices.
        #[arg(long, value_delimiter = ',')]
        filters: Option<Vec<String>>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: u128,
    },
    /// Run a subset of the criteria on one datum.
    Criteria {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check {
            file,
            format,
            order_oracle,
        } => cmd_check(&file, format, order_oracle, out),
        Command::Search {
            dim,
            points,
            max_weight,
            mode,
            filters,
            out: target,
            ceiling,
        } => cmd_search(dim, points, max_weight, &mode, filters, target.as_deref(), ceiling, out, err),
        Command::Criteria { file, only, format } => cmd_criteria(&file, only, format, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Ceiling(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CEILING
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum CliError {
    Usage(String),
    Ceiling(Error),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn load(path: &Path) -> Result<FixedPointData, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
    };
    FixedPointData::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn cmd_check(path: &Path, format: Format, oracle: Option<u64>, out: &mut dyn Write) -> Result<i32, CliError> {
    let start = Instant::now();
    let data = load(path)?;
    let evaluation = evaluate_all(&data);
    let agreement = oracle.map(|k| (k, series_cross_check(&data, k)));
    let elapsed = start.elapsed();
    match format {
        Format::Json => {
            let mut doc = document_json(&data);
            let mut report = report_json(&evaluation);
            if let Some((k, rows)) = &agreement {
                report.insert("oracle".into(), oracle_json(&data, *k, rows));
            }
            doc.insert("report".into(), Value::Object(report));
            writeln!(out, "{}", Value::Object(doc))?;
        }
        Format::Text => {
            write!(out, "{}", render_text(&data, &evaluation))?;
            if let Some((k, rows)) = &agreement {
                writeln!(out, "series oracle at order {k} (decisive order {}):", decisive_order(&data))?;
                for row in rows {
                    let mark = if row.agrees { "agrees" } else { "DISAGREES" };
                    writeln!(out, "  chi^{}: {mark}, series {}", row.degree, row.series)?;
                }
            }
            writeln!(out, "elapsed: {:.3} ms", elapsed.as_secs_f64() * 1e3)?;
        }
    }
    Ok(evaluation.summary.exit_code())
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    dim: usize,
    points: usize,
    max_weight: i64,
    mode: &str,
    filters: Option<Vec<String>>,
    target: Option<&Path>,
    ceiling: u128,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    if dim < 2 || !dim.is_multiple_of(2) {
        return Err(CliError::Usage(format!("--dim must be an even number >= 2, got {dim}")));
    }
    let mode: Mode = mode.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let mut spec = SearchSpec::new(dim / 2, points, max_weight)
        .with_mode(mode)
        .with_ceiling(ceiling);
    if let Some(names) = filters {
        let parsed: Result<Vec<Filter>, Error> = names.iter().filter(|s| !s.is_empty()).map(|s| s.parse()).collect();
        spec = spec.with_filters(parsed.map_err(|e| CliError::Usage(e.to_string()))?);
    }
    let start = Instant::now();
    let result = match enumerate(&spec) {
        Ok(r) => r,
        Err(e @ Error::CeilingExceeded { .. }) => return Err(CliError::Ceiling(e)),
        Err(e) => return Err(CliError::Usage(e.to_string())),
    };

    let mut stream = String::new();
    for s in &result.survivors {
        let mut doc = document_json(&s.data);
        doc.insert("report".into(), Value::Object(report_json(&s.evaluation)));
        stream.push_str(&Value::Object(doc).to_string());
        stream.push('\n');
    }
    let st = result.stats;
    let summary = json!({
        "summary": {
            "dim": dim,
            "points": points,
            "max_weight": max_weight,
            "mode": match mode { Mode::AllData => "all", Mode::NonHamiltonianCandidates => "non-hamiltonian" },
            "enumerated": st.enumerated,
            "pruned": st.pruned,
            "rejected": st.rejected,
            "survivors": st.survivors,
        }
    });
    stream.push_str(&summary.to_string());
    stream.push('\n');
    match target {
        Some(path) => fs::write(path, stream)?,
        None => out.write_all(stream.as_bytes())?,
    }
    writeln!(
        err,
        "enumerated {}, pruned {}, rejected {}, survivors {} ({:.1} ms)",
        st.enumerated,
        st.pruned,
        st.rejected,
        st.survivors,
        start.elapsed().as_secs_f64() * 1e3
    )?;
    Ok(0)
}

fn cmd_criteria(path: &Path, only: Option<Vec<String>>, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let data = load(path)?;
    let tables = build_tables(&data);
    let names: Vec<String> = match only {
        Some(v) => v.into_iter().filter(|s| !s.is_empty()).collect(),
        None => ALL_CRITERIA.iter().map(|s| s.to_string()).collect(),
    };
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let results = run_criteria(&data, &tables, &refs).map_err(|e| CliError::Usage(e.to_string()))?;
    match format {
        Format::Json => {
            let rows: Vec<Value> = results.iter().map(criterion_json).collect();
            writeln!(out, "{}", json!({ "criteria": rows }))?;
        }
        Format::Text => {
            for r in &results {
                writeln!(out, "{}", criterion_line(r))?;
            }
        }
    }
    Ok(0)
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn document_json(data: &FixedPointData) -> Map<String, Value> {
    match serde_json::to_value(data.to_document()).expect("document serializes") {
        Value::Object(m) => m,
        _ => unreachable!(),
    }
}

fn witness_json(w: &Witness) -> Value {
    let mut v = match w {
        Witness::SumCollision {
            i,
            j,
            value,
            left,
            right,
        } => json!({"type": "sum_collision", "i": i, "j": j, "value": value, "left": left, "right": right}),
        Witness::ZeroSum { terms } => json!({"type": "zero_sum", "terms": terms}),
        Witness::NegativeSum {
            index2_point,
            index4_point,
            b,
            e,
            f,
        } => json!({"type": "negative_sum", "index2_point": index2_point, "index4_point": index4_point,
                    "b": b, "e": e, "f": f}),
        Witness::TripleSum { a, b, c } => json!({"type": "triple_sum", "a": a, "b": b, "c": c}),
        Witness::LadderBreak {
            weight,
            degree,
            minus_count,
            plus_count,
        } => json!({"type": "ladder_break", "weight": weight, "degree": degree,
                    "minus_count": minus_count, "plus_count": plus_count}),
        Witness::NoAdjacentIndices { histogram } => json!({"type": "no_adjacent_indices", "histogram": histogram}),
    };
    v["description"] = json!(w.to_string());
    v
}

fn criterion_json(c: &CriterionResult) -> Value {
    let (outcome, witness, reason) = match &c.outcome {
        Outcome::Holds => ("holds", Value::Null, Value::Null),
        Outcome::Fails(w) => ("fails", witness_json(w), Value::Null),
        Outcome::Inapplicable(r) => ("inapplicable", Value::Null, json!(r)),
    };
    json!({
        "name": c.name,
        "kind": match c.kind { CriterionKind::Sufficient => "sufficient", CriterionKind::Necessary => "necessary" },
        "hypothesis_holds": c.hypothesis_holds(),
        "outcome": outcome,
        "implication": c.implication(),
        "witness": witness,
        "reason": reason,
        "detail": c.detail,
    })
}

fn report_json(e: &Evaluation) -> Map<String, Value> {
    let chi: Vec<Value> = e
        .chi
        .chi
        .iter()
        .map(|c| match c {
            ChiValue::Constant(v) => int_json(v),
            ChiValue::NonConstant { .. } => Value::Null,
        })
        .collect();
    let residuals: Vec<Value> = e
        .chi
        .chi
        .iter()
        .enumerate()
        .filter_map(|(i, c)| match c {
            ChiValue::NonConstant { candidate, residual } => Some(json!({
                "degree": i,
                "candidate": int_json(candidate),
                "residual": residual.to_string(),
            })),
            ChiValue::Constant(_) => None,
        })
        .collect();
    let mut m = Map::new();
    m.insert("chi".into(), json!(chi));
    m.insert("index_histogram".into(), json!(e.chi.histogram));
    m.insert("chi_verdict".into(), json!(e.chi.verdict.to_string()));
    m.insert(
        "identity_failures".into(),
        json!(e.chi.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>()),
    );
    m.insert("residuals".into(), json!(residuals));
    m.insert("primitive_weights".into(), json!(e.primitive));
    m.insert(
        "criteria".into(),
        Value::Array(e.criteria.iter().map(criterion_json).collect()),
    );
    m.insert(
        "summary".into(),
        json!({
            "verdict": e.summary.label(),
            "text": e.summary.to_string(),
            "exit_code": e.summary.exit_code(),
        }),
    );
    m
}

fn oracle_json(data: &FixedPointData, order: u64, rows: &[SeriesAgreement]) -> Value {
    json!({
        "order": order,
        "decisive_order": decisive_order(data),
        "agrees": rows.iter().all(|r| r.agrees),
        "degrees": rows.iter().map(|r| json!({
            "degree": r.degree,
            "agrees": r.agrees,
            "series": r.series.to_string(),
        })).collect::<Vec<_>>(),
    })
}

fn criterion_line(c: &CriterionResult) -> String {
    let head = match &c.detail {
        Some(d) => format!("{} ({d})", c.name),
        None => c.name.to_string(),
    };
    match &c.outcome {
        Outcome::Holds => format!("  {head}: holds -> {}", c.implication()),
        Outcome::Fails(w) => format!("  {head}: fails -> {}; witness: {w}", c.implication()),
        Outcome::Inapplicable(r) => format!("  {head}: inapplicable -> silent ({r})"),
    }
}

/// Human-readable rendering of a full evaluation.
pub fn render_text(data: &FixedPointData, e: &Evaluation) -> String {
    let mut s = String::new();
    s.push_str(&format!("dimension {} ({} fixed points)\n", 2 * data.n(), data.len()));
    for (k, p) in data.points().iter().enumerate() {
        s.push_str(&format!("  point {k}: weights {:?}, index {}\n", p.weights(), p.index()));
    }
    s.push_str(&format!("index histogram N: {:?}\n", e.chi.histogram));
    for (i, c) in e.chi.chi.iter().enumerate() {
        s.push_str(&format!("  chi^{i} = {c}\n"));
    }
    s.push_str(&format!("chi verdict: {}\n", e.chi.verdict));
    for f in &e.chi.failures {
        s.push_str(&format!("  failure: {f}\n"));
    }
    s.push_str(&format!("primitive weights: {:?}\n", e.primitive));
    s.push_str("criteria:\n");
    for c in &e.criteria {
        s.push_str(&criterion_line(c));
        s.push('\n');
    }
    s.push_str(&format!("summary: {}\n", e.summary));
    s
}
