//! The end-to-end report and its exit code.

use serde::Serialize;
use serde_json::{json, Value};

use crate::criterion::{decide, DecideOptions};
use crate::error::Error;
use crate::pairfile::PairFile;
use crate::tdp::{verify_axioms, TdProfile};

/// Process exit status of a pipeline run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Verified, and the module exists.
    Exists,
    /// Verified, but `P(λ*) = 0`.
    CriterionFails,
    /// Not a valid pair of the assumed class.
    InvalidPair,
    /// Parse failure or a broken internal invariant.
    Error,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Exists => 0,
            Outcome::Error => 1,
            Outcome::CriterionFails => 2,
            Outcome::InvalidPair => 3,
        }
    }

    pub fn of_error(e: &Error) -> Self {
        match e {
            Error::Precondition { .. } => Outcome::InvalidPair,
            _ => Outcome::Error,
        }
    }
}

pub fn error_json(e: &Error) -> Value {
    let (kind, stage) = match e {
        Error::Parse { .. } => ("parse", None),
        Error::Domain(_) => ("domain", None),
        Error::Precondition { stage, .. } => ("precondition", Some(*stage)),
        Error::Structural { stage, .. } => ("structural", Some(*stage)),
        Error::Generation(_) => ("generation", None),
        Error::PairFile(_) => ("pair_file", None),
        Error::Io(_) => ("io", None),
        Error::Json(_) => ("json", None),
    };
    json!({ "kind": kind, "stage": stage, "message": e.to_string() })
}

/// Full report for one pair file.
pub fn run_pipeline(file: &PairFile, opts: &DecideOptions) -> (Value, Outcome) {
    let fail = |e: Error| {
        let outcome = Outcome::of_error(&e);
        (json!({ "status": outcome, "exit_code": outcome.code(), "error": error_json(&e) }), outcome)
    };
    let pair = match file.to_pair() {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let c_hint = match (&opts.c_hint, file.c_hint()) {
        (Some(c), _) => Some(c.clone()),
        (None, Ok(c)) => c,
        (None, Err(e)) => return fail(e),
    };
    let profile = match TdProfile::derive(&pair, c_hint.as_ref()) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let axioms = verify_axioms(&pair, &profile);
    let opts = DecideOptions {
        c_hint,
        zeta_override: opts.zeta_override.clone(),
    };
    match decide(&pair, &opts) {
        Ok(decision) => {
            let outcome = if !decision.consistent() {
                Outcome::Error
            } else if decision.exists {
                Outcome::Exists
            } else {
                Outcome::CriterionFails
            };
            let report = json!({
                "status": outcome,
                "exit_code": outcome.code(),
                "profile": profile.summary(),
                "axioms": axioms,
                "decision": decision,
            });
            (report, outcome)
        }
        Err(e) => {
            let outcome = Outcome::of_error(&e);
            let report = json!({
                "status": outcome,
                "exit_code": outcome.code(),
                "profile": profile.summary(),
                "axioms": axioms,
                "error": error_json(&e),
            });
            (report, outcome)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{derive_qmixed, generate_qgeometric};
    use crate::linalg::MatrixE;
    use crate::scalar::{FieldSpec, Scalar};
    use crate::tdp::TriPair;
    use serde_json::Map;

    fn file_of(pair: &TriPair) -> PairFile {
        PairFile::from_pair(pair, Map::new())
    }

    #[test]
    fn round_trip_instance_exits_zero() {
        let f = FieldSpec::Symbolic;
        let pair = derive_qmixed(&generate_qgeometric(1, &f).unwrap(), &Scalar::from_int(2)).unwrap();
        let (report, outcome) = run_pipeline(&file_of(&pair), &DecideOptions::default());
        assert_eq!(outcome, Outcome::Exists, "{report}");
        let checks = report["decision"]["action_checks"].as_object().unwrap();
        let relations = checks.iter().filter(|(k, _)| k.starts_with("weyl") || k.starts_with("serre") || k.ends_with("=1"));
        assert_eq!(relations.clone().count(), 20);
        assert!(relations.into_iter().all(|(_, v)| v == true));
    }

    #[test]
    fn commuting_diagonal_pair_is_invalid() {
        let f = FieldSpec::Symbolic;
        let a = MatrixE::diagonal(&[f.q_pow(-1), f.q()]);
        let astar = MatrixE::diagonal(&[f.q() + Scalar::from_int(2) * f.q_pow(-1), f.q_pow(-1) + Scalar::from_int(2) * f.q()]);
        let pair = TriPair::new(a, astar, f).unwrap();
        let (report, outcome) = run_pipeline(&file_of(&pair), &DecideOptions::default());
        assert_eq!(outcome, Outcome::InvalidPair, "{report}");
        assert_eq!(outcome.code(), 3);
    }

    #[test]
    fn malformed_file_exits_one() {
        let mut file = file_of(&generate_qgeometric(1, &FieldSpec::Symbolic).unwrap());
        file.a.pop();
        let (report, outcome) = run_pipeline(&file, &DecideOptions::default());
        assert_eq!(outcome.code(), 1);
        assert_eq!(report["error"]["kind"], "pair_file");
    }

    #[test]
    fn injected_zeta_is_flagged_inconsistent() {
        let f = FieldSpec::Symbolic;
        let pair = derive_qmixed(&generate_qgeometric(1, &f).unwrap(), &Scalar::from_int(2)).unwrap();
        let qd = f.q_minus_qinv();
        let opts = DecideOptions {
            c_hint: None,
            zeta_override: Some(vec![Scalar::one(), -(&qd * &qd)]),
        };
        let (report, outcome) = run_pipeline(&file_of(&pair), &opts);
        // the closure cross-check disagrees with the injected P
        assert_eq!(outcome, Outcome::Error, "{report}");
        assert_eq!(report["decision"]["exists"], false);
    }
}
