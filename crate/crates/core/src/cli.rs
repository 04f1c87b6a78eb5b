//! Deterministic machine-readable verification reports and the command
//! runners behind the command-line interface. Every report carries the
//! command echo, the inputs, a pass/mismatch/fail outcome, the payload, and
//! the wall time; payloads always include both the enumerated and the
//! closed-form dimension so a log file is self-auditing.

use crate::basisenum::{check_recursion, count_basis, count_basis_by_enumeration, count_v_basis};
use crate::charring::{
    character_from_basis, classical_character, fermionic_character, verify_demazure_factorization,
    verify_kostka, weyl_dim,
};
use crate::fusion::{fusion_graded_character, point_independence, FusionError, FusionSpec};
use crate::lattice::DominantWeight;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Mismatch,
    Fail,
}

impl Outcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Mismatch => "mismatch",
            Outcome::Fail => "fail",
        }
    }

    fn from_bool(ok: bool) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Mismatch
        }
    }
}

/// One verification run: deterministic given the inputs and a fixed thread
/// count of one.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub outcome: Outcome,
    pub payload: Value,
    pub wall_time_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "outcome": self.outcome.as_str(),
            "payload": self.payload,
            "wall_time_ms": self.wall_time_ms,
        })
    }

    /// 0 on pass, 1 on mismatch or failure.
    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::Pass => 0,
            _ => 1,
        }
    }
}

fn with_threads<T: Send>(threads: usize, f: impl FnOnce(bool) -> T + Send) -> T {
    match threads {
        1 => f(false),
        0 => f(true),
        n => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(|| f(true)),
    }
}

fn number(s: String) -> Value {
    Value::Number(serde_json::Number::from_str(&s).expect("decimal literal"))
}

fn dimension_block(lambda: &DominantWeight, parallel: bool) -> (Value, bool) {
    let enumerated = count_basis_by_enumeration(lambda, parallel);
    let closed = count_basis(lambda);
    let equal = enumerated == closed;
    (
        json!({
            "dimension_enumerated": number(enumerated.to_string()),
            "dimension_closed_form": number(closed.to_string()),
            "dimensions_match": equal,
        }),
        equal,
    )
}

/// Enumerated and closed-form dimension with equality verdict.
pub fn run_dim(lambda: &DominantWeight, threads: usize) -> Report {
    let start = Instant::now();
    let (dims, equal) = with_threads(threads, |par| dimension_block(lambda, par));
    Report {
        command: "dim".into(),
        inputs: json!({"rank": lambda.rank(), "weight": lambda.coeffs()}),
        outcome: Outcome::from_bool(equal),
        payload: dims,
        wall_time_ms: start.elapsed().as_millis(),
    }
}

/// Fermionic character with the basis-aggregated cross-check. Returns the
/// report together with the CSV rendering of the character table.
pub fn run_character(lambda: &DominantWeight, threads: usize) -> (Report, String) {
    let start = Instant::now();
    let (ferm, from_basis, dims, dims_ok) = with_threads(threads, |par| {
        let ferm = fermionic_character(lambda);
        let from_basis = character_from_basis(lambda, par);
        let (dims, dims_ok) = dimension_block(lambda, par);
        (ferm, from_basis, dims, dims_ok)
    });
    let chars_match = ferm == from_basis;
    let csv = ferm.to_csv();
    let mut payload = json!({
        "character": ferm.to_json(),
        "matches_basis_aggregation": chars_match,
        "top_grade": ferm.top_grade().unwrap_or(0),
        "weyl_symmetric": ferm.is_weyl_symmetric(),
    });
    merge(&mut payload, dims);
    let report = Report {
        command: "character".into(),
        inputs: json!({"rank": lambda.rank(), "weight": lambda.coeffs()}),
        outcome: Outcome::from_bool(chars_match && dims_ok),
        payload,
        wall_time_ms: start.elapsed().as_millis(),
    };
    (report, csv)
}

/// Kostka decomposition check with reading resolution.
pub fn run_kostka(lambda: &DominantWeight) -> Report {
    let start = Instant::now();
    let rep = verify_kostka(lambda);
    let (dims, dims_ok) = dimension_block(lambda, false);
    let mut payload = rep.to_json();
    merge(&mut payload, dims);
    Report {
        command: "kostka".into(),
        inputs: json!({"rank": lambda.rank(), "weight": lambda.coeffs()}),
        outcome: Outcome::from_bool(rep.pass() && dims_ok),
        payload,
        wall_time_ms: start.elapsed().as_millis(),
    }
}

/// Fusion oracle character, comparison against the fermionic character, and
/// the optional point-independence check.
pub fn run_fusion(spec: &FusionSpec, alt_points: Option<&[i64]>, max_grade: usize) -> Report {
    let start = Instant::now();
    let lambda = spec.lambda();
    let inputs = json!({
        "rank": spec.rank,
        "factors": spec.factors.iter().map(|&(i, p)| json!({"fundamental": i, "point": p})).collect::<Vec<_>>(),
        "lambda": lambda.coeffs(),
        "alt_points": alt_points,
        "max_grade": max_grade,
    });

    let run = || -> Result<(Value, bool), FusionError> {
        let outcome = fusion_graded_character(spec.build()?, max_grade)?;
        let ferm = fermionic_character(&lambda);
        let matches = outcome.character == ferm;
        let mut all_ok = matches;
        let mut payload = json!({
            "character": outcome.character.to_json(),
            "top_grade": outcome.top_grade,
            "cumulative_dims": outcome.cumulative_dims,
            "matches_fermionic": matches,
            "weyl_symmetric": outcome.character.is_weyl_symmetric(),
        });
        if let Some(alt) = alt_points {
            let rep = point_independence(spec.build()?, alt, max_grade)?;
            all_ok &= rep.pass;
            merge(
                &mut payload,
                json!({"point_independence": {"pass": rep.pass, "alt_points": alt}}),
            );
        }
        let (dims, dims_ok) = dimension_block(&lambda, false);
        all_ok &= dims_ok;
        merge(&mut payload, dims);
        Ok((payload, all_ok))
    };

    let (outcome, payload) = match run() {
        Ok((payload, ok)) => (Outcome::from_bool(ok), payload),
        Err(e) => (Outcome::Fail, json!({"error": e.to_string()})),
    };
    Report {
        command: "fusion".into(),
        inputs,
        outcome,
        payload,
        wall_time_ms: start.elapsed().as_millis(),
    }
}

fn all_weights(rank: usize, max_level: i64) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; rank];
    loop {
        if coeffs.iter().sum::<i64>() <= max_level {
            out.push(DominantWeight::new(coeffs.clone()).expect("non-negative"));
        }
        let mut k = 0;
        loop {
            if k == rank {
                out.sort();
                return out;
            }
            coeffs[k] += 1;
            if coeffs[k] <= max_level {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
    }
}

/// Alternative evaluation points guaranteed distinct from the defaults.
fn alternative_points(k: usize) -> Vec<i64> {
    (0..k as i64).map(|t| 3 + 4 * t).collect()
}

/// Sweeps every dominant weight with the given rank and level bounds
/// through the whole battery of checks.
pub fn run_verify_all(
    max_rank: usize,
    max_level: i64,
    threads: usize,
    max_grade: usize,
    verbose: bool,
) -> Report {
    let start = Instant::now();
    let fusion_ambient_limit = 512u64;
    let mut cases = Vec::new();
    let mut all_pass = true;

    with_threads(threads, |par| {
        for rank in 1..=max_rank {
            for lambda in all_weights(rank, max_level) {
                if verbose {
                    eprintln!("verify rank {rank} weight {lambda}");
                }
                let mut checks = serde_json::Map::new();
                let mut case_pass = true;
                let mut record = |name: &str, ok: bool| {
                    checks.insert(name.to_string(), Value::Bool(ok));
                    case_pass &= ok;
                };

                let ferm = fermionic_character(&lambda);
                record(
                    "dimension_product_formula",
                    count_basis_by_enumeration(&lambda, par) == count_basis(&lambda),
                );
                record(
                    "fermionic_equals_basis_character",
                    ferm == character_from_basis(&lambda, par),
                );
                record(
                    "grade_zero_slice_is_classical",
                    ferm.degree_slice(0) == classical_character(&lambda),
                );
                record(
                    "v_basis_count_is_weyl_dim",
                    count_v_basis(&lambda) == weyl_dim(&lambda),
                );
                record(
                    "demazure_factorization_at_one",
                    verify_demazure_factorization(&lambda).pass,
                );
                record("weyl_symmetry", ferm.is_weyl_symmetric());
                if rank <= 2 {
                    record("kostka_decomposition", verify_kostka(&lambda).pass());
                }
                if rank >= 2 {
                    record("column_recursion", check_recursion(&lambda).holds);
                }

                let level = lambda.level();
                if level >= 1 && level <= 3 {
                    let ambient: u64 = (1..=rank as i64)
                        .map(|i| {
                            crate::qpoly::binom(rank as i64 + 1, i)
                                .to_u64()
                                .unwrap_or(u64::MAX)
                                .saturating_pow(lambda.coeff(i as usize) as u32)
                        })
                        .product();
                    if ambient <= fusion_ambient_limit {
                        let mut factors = Vec::new();
                        for i in 1..=rank {
                            for _ in 0..lambda.coeff(i) {
                                factors.push((i, factors.len() as i64));
                            }
                        }
                        let spec = FusionSpec {
                            rank,
                            factors,
                        };
                        let fusion_ok = (|| -> Result<bool, FusionError> {
                            let out = fusion_graded_character(spec.build()?, max_grade)?;
                            let indep = point_independence(
                                spec.build()?,
                                &alternative_points(spec.factors.len()),
                                max_grade,
                            )?;
                            Ok(out.character == ferm && indep.pass)
                        })()
                        .unwrap_or(false);
                        record("fusion_oracle", fusion_ok);
                    }
                }

                all_pass &= case_pass;
                cases.push(json!({
                    "rank": rank,
                    "lambda": lambda.coeffs(),
                    "pass": case_pass,
                    "checks": Value::Object(checks),
                }));
            }
        }
    });

    Report {
        command: "verify-all".into(),
        inputs: json!({
            "max_rank": max_rank,
            "max_level": max_level,
            "threads": threads,
            "max_grade": max_grade,
        }),
        outcome: Outcome::from_bool(all_pass),
        payload: json!({"all_pass": all_pass, "cases": cases}),
        wall_time_ms: start.elapsed().as_millis(),
    }
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        for (k, v) in b {
            a.insert(k, v);
        }
    }
}

/// Pretty, stable JSON rendering used by the binary and the C interface.
pub fn render(report: &Report) -> String {
    serde_json::to_string_pretty(&report.to_json()).expect("report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(coeffs: &[i64]) -> DominantWeight {
        DominantWeight::new(coeffs.to_vec()).unwrap()
    }

    #[test]
    fn dim_report_examples() {
        let rep = run_dim(&dom(&[2, 1]), 1);
        assert_eq!(rep.outcome, Outcome::Pass);
        assert_eq!(rep.exit_code(), 0);
        let v = rep.to_json();
        assert_eq!(v["payload"]["dimension_closed_form"], json!(27));
        assert_eq!(v["payload"]["dimension_enumerated"], json!(27));

        let rep = run_dim(&dom(&[0]), 1);
        assert_eq!(rep.to_json()["payload"]["dimension_closed_form"], json!(1));

        let rep = run_dim(&dom(&[1, 1, 1]), 1);
        assert_eq!(rep.to_json()["payload"]["dimension_closed_form"], json!(96));
    }

    #[test]
    fn character_report_and_csv() {
        let (rep, csv) = run_character(&dom(&[1, 1]), 1);
        assert_eq!(rep.outcome, Outcome::Pass);
        assert!(csv.starts_with("weight,degree,multiplicity"));
        let v = rep.to_json();
        assert_eq!(v["payload"]["matches_basis_aggregation"], json!(true));
        assert_eq!(v["outcome"], json!("pass"));
    }

    #[test]
    fn kostka_report_runs() {
        let rep = run_kostka(&dom(&[1, 1]));
        assert_eq!(rep.outcome, Outcome::Pass);
        assert_eq!(
            rep.to_json()["payload"]["selected_reading"],
            json!("transposed-charge")
        );
    }

    #[test]
    fn fusion_report_runs() {
        let spec: FusionSpec = "r=2; factors=w1@0,w2@1".parse().unwrap();
        let rep = run_fusion(&spec, Some(&[4, 9]), 64);
        assert_eq!(rep.outcome, Outcome::Pass);
        let v = rep.to_json();
        assert_eq!(v["payload"]["matches_fermionic"], json!(true));
        assert_eq!(v["payload"]["point_independence"]["pass"], json!(true));
    }

    #[test]
    fn fusion_report_fails_on_duplicate_points() {
        let spec = FusionSpec {
            rank: 1,
            factors: vec![(1, 5), (1, 5)],
        };
        let rep = run_fusion(&spec, None, 16);
        assert_eq!(rep.outcome, Outcome::Fail);
        assert_eq!(rep.exit_code(), 1);
    }

    #[test]
    fn verify_all_small_sweeps() {
        let rep = run_verify_all(2, 2, 1, 64, false);
        assert_eq!(rep.outcome, Outcome::Pass, "{}", render(&rep));

        let rep = run_verify_all(1, 4, 1, 64, false);
        assert_eq!(rep.outcome, Outcome::Pass);

        // empty sweep passes trivially
        let rep = run_verify_all(2, 0, 1, 64, false);
        assert_eq!(rep.outcome, Outcome::Pass);
    }

    #[test]
    fn report_json_round_trips() {
        let rep = run_dim(&dom(&[1, 0]), 1);
        let text = render(&rep);
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep.to_json());
    }
}
