//! Command implementations shared by the binary and the test suites.

use fsig::error::Error;
use fsig::macaulay::{is_o_sequence, key_lemma_check, key_lemma_equalities, represent, OSequence};
use fsig::signature::{
    conjecture_probe, equality_case, eulerian_dual_closed_form, smirnov_tucker_min, veronese_dual,
    Family, Method, SegreParams, SignatureReport,
};

use crate::output::OutputRecord;
use crate::{CliError, EXIT_MISMATCH, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VeroneseMethod {
    Closed,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegreMethod {
    Bound,
    Brute,
    Auto,
}

/// Exit code from cross-checking values that must agree exactly: `0` when
/// they all match, `1` (the correctness alarm) otherwise.
pub fn method_agreement_exit(values: &[&str]) -> i32 {
    if values.windows(2).all(|w| w[0] == w[1]) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn report_record(
    family: &str,
    params: serde_json::Value,
    quantity: &str,
    report: &SignatureReport,
) -> OutputRecord {
    OutputRecord {
        family: family.into(),
        params,
        quantity: quantity.into(),
        value: report.value.to_string(),
        method: report.method.to_string(),
        witness: report.witness.as_ref().map(|w| w.labels()),
        certificates: report.certificates.clone(),
    }
}

pub fn cmd_veronese(
    n: u32,
    d: u32,
    method: VeroneseMethod,
    cap: u32,
) -> Result<(Vec<OutputRecord>, i32), CliError> {
    if n < 1 || d < 1 {
        return Err(CliError::Usage("n and d must be positive".into()));
    }
    let params = serde_json::json!({"n": n, "d": d});
    let mut records = Vec::new();
    let mut exit = EXIT_OK;

    if matches!(method, VeroneseMethod::Closed | VeroneseMethod::Both) {
        let closed = veronese_dual(n, d);
        records.push(report_record(
            "veronese",
            params.clone(),
            "dual_f_signature",
            &closed,
        ));
    }
    if matches!(method, VeroneseMethod::Brute | VeroneseMethod::Both) {
        let brute = smirnov_tucker_min(&Family::Veronese { n, d }, cap)?;
        records.push(report_record(
            "veronese",
            params.clone(),
            "dual_f_signature",
            &brute,
        ));
    }
    if method == VeroneseMethod::Both {
        let values: Vec<&str> = records.iter().map(|r| r.value.as_str()).collect();
        exit = method_agreement_exit(&values);
        let note = if exit == EXIT_OK {
            "closed form and brute force agree".to_string()
        } else {
            "METHOD DISAGREEMENT between closed form and brute force".to_string()
        };
        for r in &mut records {
            r.certificates.push(note.clone());
        }
    }
    Ok((records, exit))
}

pub fn cmd_segre(
    r: Vec<u32>,
    method: SegreMethod,
    probe: bool,
    classes: bool,
    cap: u32,
) -> Result<(Vec<OutputRecord>, i32), CliError> {
    let params = SegreParams::new(r.clone())
        .map_err(|_| CliError::Usage("factors must be positive and ascending".into()))?;
    let json_params = serde_json::json!({"r": r});
    let mut records = Vec::new();
    let mut exit = EXIT_OK;

    if classes {
        records.extend(class_records(&params, &r));
    }

    let bound = segre_bound_record(&params, &json_params);
    let brute = match method {
        SegreMethod::Bound => None,
        SegreMethod::Brute => Some(smirnov_tucker_min(&Family::Segre(params.clone()), cap)?),
        SegreMethod::Auto => match smirnov_tucker_min(&Family::Segre(params.clone()), cap) {
            Ok(report) => Some(report),
            Err(Error::SubsetCap { .. }) => None,
            Err(other) => return Err(other.into()),
        },
    };

    if method != SegreMethod::Brute {
        records.push(bound.clone());
    }
    if let Some(brute) = &brute {
        records.push(report_record(
            "segre",
            json_params.clone(),
            "dual_f_signature",
            brute,
        ));
    }

    // An equality-certified bound and a brute-force minimum must coincide.
    if method != SegreMethod::Brute && equality_case(&params).is_some() {
        if let Some(brute) = &brute {
            exit = method_agreement_exit(&[&bound.value, &brute.value.to_string()]);
        }
    }

    // The F-signature always comes along: it is the trivial class volume.
    let s = params.f_signature();
    records.push(OutputRecord {
        family: "segre".into(),
        params: json_params.clone(),
        quantity: "f_signature".into(),
        value: s.to_string(),
        method: Method::ClosedForm.to_string(),
        witness: None,
        certificates: Vec::new(),
    });

    if probe {
        let probe_result = conjecture_probe(&params, cap)?;
        let verdict = if probe_result.equal {
            "bound attained by the exhaustive minimum".to_string()
        } else {
            format!(
                "GAP: exhaustive minimum {} is below the bound {}",
                probe_result.minimum.value, probe_result.upper_bound
            )
        };
        records.push(OutputRecord {
            family: "segre".into(),
            params: json_params.clone(),
            quantity: "upper_bound".into(),
            value: probe_result.upper_bound.to_string(),
            method: Method::UpperBound.to_string(),
            witness: None,
            certificates: vec![verdict.clone()],
        });
        records.push(report_record(
            "segre",
            json_params,
            "dual_f_signature",
            &probe_result.minimum,
        ));
        records.last_mut().unwrap().certificates.push(verdict);
    }

    Ok((records, exit))
}

/// One record per conic class: the generalized F-signature of every class,
/// with the exact partition-of-unity total as a shared certificate.
fn class_records(params: &SegreParams, r: &[u32]) -> Vec<OutputRecord> {
    use fsig::rational::Rational;
    let classes = params.conic_classes();
    let volumes: Vec<Rational> = classes.iter().map(|z| params.gen_f_signature(z)).collect();
    let total: Rational = volumes.iter().cloned().sum();
    let partition = format!(
        "volumes over {} conic classes sum to {}",
        classes.len(),
        total
    );
    classes
        .iter()
        .zip(volumes)
        .map(|(z, volume)| OutputRecord {
            family: "segre".into(),
            params: serde_json::json!({"r": r, "z": z.entries()}),
            quantity: "gen_f_signature".into(),
            value: volume.to_string(),
            method: Method::ClosedForm.to_string(),
            witness: None,
            certificates: vec![partition.clone()],
        })
        .collect()
}

fn segre_bound_record(params: &SegreParams, json_params: &serde_json::Value) -> OutputRecord {
    let report = fsig::signature::segre_upper_bound(params);
    let quantity = if report.method == Method::ClosedForm {
        "dual_f_signature"
    } else {
        "upper_bound"
    };
    let mut record = report_record("segre", json_params.clone(), quantity, &report);
    // For two factors, cross-check against the Eulerian closed form.
    if params.factor_count() == 2 {
        let r = params.factors();
        let closed = eulerian_dual_closed_form(r[0], r[1]);
        record.certificates.push(if closed == report.value {
            "matches the Eulerian closed form".to_string()
        } else {
            "METHOD DISAGREEMENT with the Eulerian closed form".to_string()
        });
    }
    record
}

#[derive(Debug, Clone)]
pub enum OSequenceCommand {
    Check { values: Vec<u64> },
    Shift { f: u64, i: u32 },
    KeyLemma { values: Vec<u64>, n: u32 },
}

pub fn cmd_osequence(cmd: OSequenceCommand) -> Result<(Vec<OutputRecord>, i32), CliError> {
    let mut records = Vec::new();
    match cmd {
        OSequenceCommand::Check { values } => {
            if values.is_empty() {
                return Err(CliError::Usage("the sequence must be non-empty".into()));
            }
            let params = serde_json::json!({"h": values});
            let (valid, violation) = is_o_sequence(&OSequence::new(values));
            records.push(OutputRecord {
                family: "osequence".into(),
                params,
                quantity: "osequence_valid".into(),
                value: if valid { "1" } else { "0" }.into(),
                method: "closed_form".into(),
                witness: None,
                certificates: match violation {
                    Some(index) => vec![format!("violation at index {index}")],
                    None => vec!["valid".into()],
                },
            });
        }
        OSequenceCommand::Shift { f, i } => {
            if f < 1 || i < 1 {
                return Err(CliError::Usage("f and i must be positive".into()));
            }
            let representation = represent(f, i);
            let params = serde_json::json!({"f": f, "i": i});
            let terms: Vec<String> = representation
                .terms()
                .iter()
                .map(|&(n, j)| format!("C({n},{j})"))
                .collect();
            for (quantity, value) in [
                ("upper_shift", representation.upper_shift()),
                ("lower_shift", representation.lower_shift()),
            ] {
                records.push(OutputRecord {
                    family: "osequence".into(),
                    params: params.clone(),
                    quantity: quantity.into(),
                    value: value.to_string(),
                    method: "closed_form".into(),
                    witness: None,
                    certificates: vec![format!("representation: {}", terms.join(" + "))],
                });
            }
        }
        OSequenceCommand::KeyLemma { values, n } => {
            if values.is_empty() {
                return Err(CliError::Usage("the sequence must be non-empty".into()));
            }
            let params = serde_json::json!({"h": values, "n": n});
            let h = OSequence::new(values);
            let holds = key_lemma_check(&h, n).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut certificates = Vec::new();
            if holds {
                let equalities = key_lemma_equalities(&h, n).expect("checked above");
                if equalities.len() == h.values().len() {
                    certificates.push("holds with equality at every index".to_string());
                } else if equalities.len() > 1 {
                    certificates.push(format!(
                        "holds; equality at indices {}",
                        equalities
                            .iter()
                            .map(|i| i.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    ));
                } else {
                    certificates.push("holds".to_string());
                }
            }
            records.push(OutputRecord {
                family: "osequence".into(),
                params,
                quantity: "key_lemma".into(),
                value: if holds { "1" } else { "0" }.into(),
                method: "closed_form".into(),
                witness: None,
                certificates,
            });
        }
    }
    Ok((records, EXIT_OK))
}

/// Parses a comma-separated list of nonnegative integers.
pub fn parse_u64_list(input: &str) -> Result<Vec<u64>, CliError> {
    input
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("malformed list entry {part:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agreement_exit_codes() {
        assert_eq!(method_agreement_exit(&["2/3", "2/3"]), EXIT_OK);
        assert_eq!(method_agreement_exit(&["2/3", "1/2"]), EXIT_MISMATCH);
        assert_eq!(method_agreement_exit(&["11/16"]), EXIT_OK);
    }

    #[test]
    fn veronese_both_agree() {
        let (records, exit) = cmd_veronese(2, 3, VeroneseMethod::Both, 20).unwrap();
        assert_eq!(exit, EXIT_OK);
        assert_eq!(records.len(), 2);
        assert!(records.iter().all(|r| r.value == "2/3"));
    }

    #[test]
    fn segre_auto_reports_dual_and_s() {
        let (records, exit) = cmd_segre(vec![1, 2], SegreMethod::Auto, false, false, 20).unwrap();
        assert_eq!(exit, EXIT_OK);
        let dual: Vec<&OutputRecord> = records
            .iter()
            .filter(|r| r.quantity == "dual_f_signature")
            .collect();
        assert!(dual.iter().any(|r| r.method == "closed_form"));
        assert!(dual.iter().any(|r| r.method == "brute_force"));
        assert!(dual.iter().all(|r| r.value == "11/16"));
        let s = records
            .iter()
            .find(|r| r.quantity == "f_signature")
            .unwrap();
        assert_eq!(s.value, "11/24");
    }

    #[test]
    fn segre_rejects_non_ascending() {
        assert!(matches!(
            cmd_segre(vec![2, 1], SegreMethod::Auto, false, false, 20),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn osequence_commands() {
        let (records, _) = cmd_osequence(OSequenceCommand::Check {
            values: vec![1, 2, 5],
        })
        .unwrap();
        assert_eq!(records[0].value, "0");
        assert_eq!(records[0].certificates, vec!["violation at index 2"]);

        let (records, _) = cmd_osequence(OSequenceCommand::Shift { f: 5, i: 2 }).unwrap();
        assert_eq!(records[0].quantity, "upper_shift");
        assert_eq!(records[0].value, "7");
        assert_eq!(records[1].quantity, "lower_shift");
        assert_eq!(records[1].value, "2");

        let (records, _) = cmd_osequence(OSequenceCommand::KeyLemma {
            values: vec![1, 3, 6, 10],
            n: 2,
        })
        .unwrap();
        assert_eq!(records[0].value, "1");
        assert_eq!(
            records[0].certificates,
            vec!["holds with equality at every index"]
        );
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_u64_list("1,2,5").unwrap(), vec![1, 2, 5]);
        assert!(parse_u64_list("1,x,3").is_err());
    }
}
