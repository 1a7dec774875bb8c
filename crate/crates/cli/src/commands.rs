use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use repstab_core::stability::{
    general_bound, kequal_char, lambda_char_decomposed, lambda_char_smalln, sharp_bound_with_horizon, theorem_bounds,
    SharpBound, StabilityReport,
};
use repstab_core::{LambdaSet, Result};

use crate::args::{BoundsArgs, CharArgs, Cli, Format, TableArgs, Target, VerifyArgs};

pub struct Outcome {
    pub text: String,
    /// False when a verification found a mismatch.
    pub all_match: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, all_match: true }
    }
}

fn target_label(t: &Target) -> String {
    match (&t.k, &t.lambda) {
        (Some(k), _) => format!("k={k}"),
        (None, Some(l)) => format!("lambda={l}"),
        (None, None) => unreachable!("clap requires a target"),
    }
}

fn target_lambda(t: &Target) -> Result<LambdaSet> {
    match (&t.k, &t.lambda) {
        (Some(k), _) => LambdaSet::k_equal(*k),
        (None, Some(l)) => Ok(l.clone()),
        (None, None) => unreachable!("clap requires a target"),
    }
}

fn csv_string<R: Serialize>(header: Option<&[&str]>, rows: &[R]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(header.is_none()).from_writer(Vec::new());
    if let Some(h) = header {
        w.write_record(h).expect("in-memory write");
    }
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn char(cli: &Cli, a: &CharArgs) -> Result<Outcome> {
    let f = match (a.target.k, a.oracle) {
        (Some(k), false) => kequal_char(a.n, a.i, a.d, k)?,
        _ => lambda_char_smalln(a.n, a.d, &target_lambda(&a.target)?, a.i, cli.oracle_limit)?,
    };
    let text = match cli.format {
        Format::Text => format!("{f}\n"),
        Format::Csv => {
            let rows: Vec<(String, String)> =
                f.sorted_terms().into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
            csv_string(Some(&["partition", "coefficient"]), &rows)
        }
        Format::Json => {
            let mut v = json!({ "d": a.d, "n": a.n, "i": a.i, "char": f });
            match (&a.target.k, &a.target.lambda) {
                (Some(k), _) => v["k"] = json!(k),
                (_, Some(l)) => v["lambda"] = json!(l.to_string()),
                _ => {}
            }
            json_string(&v)
        }
    };
    Ok(Outcome::ok(text))
}

/// The bound cell of a table row.
pub fn bound_cell(b: &SharpBound) -> String {
    match b {
        SharpBound::Certified(m) => m.to_string(),
        SharpBound::Candidate(m) => format!("horizon-limited({m})"),
        SharpBound::Vacuous => "vacuous".into(),
    }
}

pub fn table(cli: &Cli, a: &TableArgs) -> Result<Outcome> {
    let mut reports: Vec<StabilityReport> = Vec::new();
    for i in a.i.clone() {
        eprintln!("[table] d={} k={} i={i}", a.d, a.k);
        let r = sharp_bound_with_horizon(a.d, a.k, i, a.horizon)?;
        eprintln!("[table]   horizon {} -> {}", r.horizon, bound_cell(&r.sharp_bound));
        reports.push(r);
    }
    let text = match cli.format {
        Format::Text => {
            let is: Vec<String> = reports.iter().map(|r| r.i.to_string()).collect();
            let bs: Vec<String> = reports.iter().map(|r| bound_cell(&r.sharp_bound)).collect();
            let widths: Vec<usize> = is.iter().zip(&bs).map(|(x, y)| x.len().max(y.len())).collect();
            let line = |label: &str, cells: &[String]| {
                let body: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                format!("{label:<5} | {}\n", body.join(" | "))
            };
            format!("k={}:\n{}{}", a.k, line("i", &is), line("bound", &bs))
        }
        Format::Csv => {
            let rows: Vec<(usize, usize, String)> =
                reports.iter().map(|r| (a.k, r.i, bound_cell(&r.sharp_bound))).collect();
            csv_string(Some(&["k", "i", "bound"]), &rows)
        }
        Format::Json => json_string(&reports),
    };
    Ok(Outcome::ok(text))
}

#[derive(Serialize)]
struct VerifyRow {
    n: usize,
    d: usize,
    target: String,
    i: usize,
    formula: String,
    oracle: String,
    status: &'static str,
}

pub fn verify(cli: &Cli, a: &VerifyArgs) -> Result<Outcome> {
    let lambda = target_lambda(&a.target)?;
    if a.n_max > cli.oracle_limit {
        return Err(repstab_core::Error::OracleLimit { n: a.n_max, limit: cli.oracle_limit });
    }
    let label = target_label(&a.target);
    let mut cases = Vec::new();
    for n in lambda.n0()..=a.n_max {
        let is = a.i.clone().unwrap_or(0..=a.d * (n - 1));
        cases.extend(is.map(|i| (n, i)));
    }
    let rows: Vec<VerifyRow> = cases
        .par_iter()
        .map(|&(n, i)| {
            let formula = match a.target.k {
                Some(k) => kequal_char(n, i, a.d, k)?,
                None => lambda_char_decomposed(n, a.d, &lambda, i, cli.oracle_limit)?,
            };
            let oracle = lambda_char_smalln(n, a.d, &lambda, i, cli.oracle_limit)?;
            let status = if formula == oracle { "MATCH" } else { "MISMATCH" };
            Ok(VerifyRow {
                n,
                d: a.d,
                target: label.clone(),
                i,
                formula: formula.to_string(),
                oracle: oracle.to_string(),
                status,
            })
        })
        .collect::<Result<_>>()?;
    let rows: Vec<VerifyRow> =
        rows.into_iter().filter(|r| a.include_zero || r.formula != "0" || r.oracle != "0").collect();
    let mismatches = rows.iter().filter(|r| r.status != "MATCH").count();
    eprintln!("[verify] {} cases, {} mismatches", rows.len(), mismatches);
    let text = match cli.format {
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                out.push_str(&format!(
                    "n={} d={} {} i={}  formula: {}  oracle: {}  {}\n",
                    r.n, r.d, r.target, r.i, r.formula, r.oracle, r.status
                ));
            }
            out
        }
        Format::Csv => csv_string(None, &rows),
        Format::Json => json_string(&rows),
    };
    Ok(Outcome { text, all_match: mismatches == 0 })
}

pub fn bounds(cli: &Cli, a: &BoundsArgs) -> Result<Outcome> {
    let label = target_label(&a.target);
    // (kind, value) pairs
    let mut entries: Vec<(&'static str, String)> = Vec::new();
    match (&a.target.k, &a.target.lambda) {
        (Some(k), _) => {
            for b in theorem_bounds(a.d, *k, a.i)? {
                entries.push(("theorem", b.to_string()));
            }
            let report = sharp_bound_with_horizon(a.d, *k, a.i, a.horizon)?;
            entries.push(("sharp", bound_cell(&report.sharp_bound)));
        }
        (None, Some(l)) => entries.push(("general", general_bound(l, a.i, a.d)?.to_string())),
        (None, None) => unreachable!("clap requires a target"),
    }
    let text = match cli.format {
        Format::Text => entries.iter().map(|(kind, v)| format!("{kind}: {v}\n")).collect(),
        Format::Csv => {
            let rows: Vec<(usize, &str, usize, &str, &str)> =
                entries.iter().map(|(kind, v)| (a.d, label.as_str(), a.i, *kind, v.as_str())).collect();
            csv_string(Some(&["d", "target", "i", "kind", "value"]), &rows)
        }
        Format::Json => {
            let mut v = json!({ "d": a.d, "target": label, "i": a.i });
            for (kind, value) in &entries {
                let slot = v.as_object_mut().expect("object").entry(*kind).or_insert_with(|| json!([]));
                slot.as_array_mut().expect("array").push(json!(value));
            }
            json_string(&v)
        }
    };
    Ok(Outcome::ok(text))
}
