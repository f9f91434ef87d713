use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::exact::rational::{fraction_string, Rational};

/// One checked instance of an identity: both sides, exact.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerificationRecord {
    pub identity: String,
    pub parameters: BTreeMap<String, String>,
    #[serde(serialize_with = "as_fraction")]
    pub lhs: Rational,
    #[serde(serialize_with = "as_fraction")]
    pub rhs: Rational,
    pub pass: bool,
    pub elapsed_ms: u128,
}

fn as_fraction<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fraction_string(r))
}

impl VerificationRecord {
    /// Record comparing `lhs` with `rhs`; `pass` is exact equality.
    pub fn compare(identity: &str, parameters: &[(&str, String)], lhs: Rational, rhs: Rational, started: Instant) -> Self {
        let pass = lhs == rhs;
        Self::with_outcome(identity, parameters, lhs, rhs, pass, started)
    }

    pub fn with_outcome(
        identity: &str,
        parameters: &[(&str, String)],
        lhs: Rational,
        rhs: Rational,
        pass: bool,
        started: Instant,
    ) -> Self {
        VerificationRecord {
            identity: identity.to_string(),
            parameters: parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            lhs,
            rhs,
            pass,
            elapsed_ms: started.elapsed().as_millis(),
        }
    }
}

/// True when every record passed (vacuously true for none).
pub fn all_pass(records: &[VerificationRecord]) -> bool {
    records.iter().all(|r| r.pass)
}
