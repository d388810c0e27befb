//! The reference table of dual F-signatures and F-signatures for small
//! Segre products, recomputed from scratch and checked against the expected
//! values on every run.

use fsig::rational::Rational;
use fsig::signature::{equality_case, segre_upper_bound, smirnov_tucker_min, Family, SegreParams};
use rayon::prelude::*;

use crate::output::OutputRecord;
use crate::{CliError, EXIT_MISMATCH, EXIT_OK};

/// Expected `(r, s_dual, s)` rows. These are regression anchors: the table
/// command recomputes each row by two independent methods and compares.
pub const EXPECTED_TABLE: &[(&[u32], &str, &str)] = &[
    (&[1, 1], "2/3", "2/3"),
    (&[1, 2], "11/16", "11/24"),
    (&[1, 3], "59/90", "13/60"),
    (&[2, 2], "11/20", "11/20"),
    (&[2, 3], "151/270", "151/360"),
    (&[3, 3], "151/315", "151/315"),
    (&[1, 1, 1], "1/2", "1/2"),
    (&[1, 1, 2], "41/80", "19/60"),
    (&[1, 2, 2], "2/5", "4/15"),
    (&[2, 2, 2], "12/35", "12/35"),
    (&[1, 1, 1, 1], "2/5", "2/5"),
    (&[1, 1, 1, 2], "129/320", "29/120"),
    (&[1, 1, 2, 2], "171/560", "5/28"),
    (&[1, 2, 2, 2], "1137/4480", "379/2240"),
];

#[derive(Debug, Clone)]
pub struct TableRow {
    pub r: Vec<u32>,
    pub dual: Rational,
    pub dual_method: String,
    pub s: Rational,
    pub expected_dual: Rational,
    pub expected_s: Rational,
    pub mismatches: Vec<String>,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug)]
pub struct TableOutcome {
    pub rows: Vec<TableRow>,
    pub records: Vec<OutputRecord>,
}

impl TableOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.rows.iter().all(TableRow::matches) {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        }
    }

    pub fn mismatch_lines(&self) -> Vec<String> {
        self.rows
            .iter()
            .flat_map(|row| row.mismatches.iter().cloned())
            .collect()
    }
}

fn compute_row(r: &[u32], expected_dual: &str, expected_s: &str) -> Result<TableRow, CliError> {
    let params = SegreParams::new(r.to_vec()).expect("table rows are valid parameters");
    let expected_dual: Rational = expected_dual.parse().expect("expected values parse");
    let expected_s: Rational = expected_s.parse().expect("expected values parse");

    let bound = segre_upper_bound(&params);
    let reason = equality_case(&params).expect("every table row is an equality case");
    let brute = smirnov_tucker_min(&Family::Segre(params.clone()), 20)?;
    let s = params.f_signature();

    let mut mismatches = Vec::new();
    if bound.value != brute.value {
        mismatches.push(format!(
            "r={r:?}: equality-certified bound {} disagrees with brute force {}",
            bound.value, brute.value
        ));
    }
    if bound.value != expected_dual {
        mismatches.push(format!(
            "r={r:?}: dual {} differs from expected {}",
            bound.value, expected_dual
        ));
    }
    if s != expected_s {
        mismatches.push(format!(
            "r={r:?}: F-signature {} differs from expected {}",
            s, expected_s
        ));
    }

    Ok(TableRow {
        r: r.to_vec(),
        dual: bound.value,
        dual_method: format!("closed_form ({reason}) + brute_force"),
        s,
        expected_dual,
        expected_s,
        mismatches,
    })
}

/// Recomputes the whole table; rows run concurrently, output order is fixed.
pub fn run_table(threads: Option<usize>) -> Result<TableOutcome, CliError> {
    let rows: Vec<Result<TableRow, CliError>> = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("could not build thread pool: {e}")))?
            .install(|| {
                EXPECTED_TABLE
                    .par_iter()
                    .map(|(r, dual, s)| compute_row(r, dual, s))
                    .collect()
            }),
        None => EXPECTED_TABLE
            .par_iter()
            .map(|(r, dual, s)| compute_row(r, dual, s))
            .collect(),
    };
    let rows: Vec<TableRow> = rows.into_iter().collect::<Result<_, _>>()?;

    let mut records = Vec::new();
    for row in &rows {
        let params = serde_json::json!({"r": row.r});
        let verdict = if row.matches() {
            "matches the expected value".to_string()
        } else {
            "MISMATCH against the expected value".to_string()
        };
        records.push(OutputRecord {
            family: "segre".into(),
            params: params.clone(),
            quantity: "dual_f_signature".into(),
            value: row.dual.to_string(),
            method: row.dual_method.clone(),
            witness: None,
            certificates: vec![verdict.clone()],
        });
        records.push(OutputRecord {
            family: "segre".into(),
            params,
            quantity: "f_signature".into(),
            value: row.s.to_string(),
            method: "closed_form".into(),
            witness: None,
            certificates: vec![verdict],
        });
    }
    Ok(TableOutcome { rows, records })
}

/// Human-readable rendering of the table outcome.
pub fn render_table(outcome: &TableOutcome) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<12} {:>12} {:>12}  method\n",
        "r", "s_dual", "s"
    ));
    for row in &outcome.rows {
        let r = row
            .r
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!(
            "{:<12} {:>12} {:>12}  {}\n",
            format!("({r})"),
            row.dual.to_string(),
            row.s.to_string(),
            row.dual_method
        ));
    }
    let matching = outcome.rows.iter().filter(|r| r.matches()).count();
    out.push_str(&format!(
        "{matching}/{} rows match the expected table\n",
        outcome.rows.len()
    ));
    for line in outcome.mismatch_lines() {
        out.push_str(&format!("MISMATCH: {line}\n"));
    }
    out
}
