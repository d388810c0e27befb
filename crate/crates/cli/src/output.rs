//! Machine-readable output records and the three emission formats.
//!
//! Every numeric value is an exact fraction string that parses back to the
//! identical rational; the JSON, CSV, and plain renderings of a run carry
//! the same values. A decimal column appears only under `--approx`, and only
//! in the plain format.

use fsig::rational::{to_f64, Rational};
use serde::Serialize;

/// One computed quantity with its provenance.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub family: String,
    pub params: serde_json::Value,
    pub quantity: String,
    pub value: String,
    pub method: String,
    pub witness: Option<Vec<String>>,
    pub certificates: Vec<String>,
}

impl OutputRecord {
    pub fn value_rational(&self) -> Rational {
        self.value
            .parse()
            .expect("record values are exact fraction strings")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

pub fn render(records: &[OutputRecord], format: Format, approx: bool) -> String {
    match format {
        Format::Plain => render_plain(records, approx),
        Format::Json => render_json(records),
        Format::Csv => render_csv(records),
    }
}

fn render_plain(records: &[OutputRecord], approx: bool) -> String {
    let mut out = String::new();
    for r in records {
        let params = compact_params(&r.params);
        out.push_str(&format!(
            "{} {} {} = {}",
            r.family, params, r.quantity, r.value
        ));
        if approx {
            out.push_str(&format!(" (~{:.6})", to_f64(&r.value_rational())));
        }
        out.push_str(&format!(" [{}]", r.method));
        if let Some(witness) = &r.witness {
            out.push_str(&format!(" witness={{{}}}", witness.join(", ")));
        }
        for c in &r.certificates {
            out.push_str(&format!("\n    - {c}"));
        }
        out.push('\n');
    }
    out
}

fn compact_params(params: &serde_json::Value) -> String {
    match params {
        serde_json::Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", compact_params(v)))
            .collect::<Vec<_>>()
            .join(" "),
        serde_json::Value::Array(items) => items
            .iter()
            .map(compact_params)
            .collect::<Vec<_>>()
            .join(","),
        other => other.to_string(),
    }
}

fn render_json(records: &[OutputRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

fn render_csv(records: &[OutputRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "family",
            "params",
            "quantity",
            "value",
            "method",
            "witness",
            "certificates",
        ])
        .expect("csv header");
    for r in records {
        let witness = match &r.witness {
            Some(w) => serde_json::to_string(w).expect("witness serializes"),
            None => String::new(),
        };
        writer
            .write_record([
                r.family.as_str(),
                &r.params.to_string(),
                r.quantity.as_str(),
                r.value.as_str(),
                r.method.as_str(),
                &witness,
                &serde_json::to_string(&r.certificates).expect("certificates serialize"),
            ])
            .expect("csv row");
    }
    String::from_utf8(writer.into_inner().expect("csv buffer")).expect("csv is utf-8")
}
