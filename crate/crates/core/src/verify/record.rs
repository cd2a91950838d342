use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identity::{IdentityId, Params};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordKind {
    Numeric,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(weight: u32) -> Self {
        if weight.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Outcome of checking one identity instance.
///
/// Values are rendered as strings: decimal floats for numeric records and
/// reduced fractions for exact ones. Field order is the JSON field order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub identity: IdentityId,
    pub params: Params,
    /// Displayed form, for displayed examples and known evaluations.
    pub label: Option<String>,
    pub kind: RecordKind,
    pub weight: Option<u32>,
    pub parity: Option<Parity>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub residual: Option<String>,
    pub tolerance: Option<String>,
    pub passed: bool,
    /// Passed, but with `|residual|` within a factor 10 of the tolerance.
    pub marginal: bool,
    /// The first attempt failed and the record comes from a rerun at twice the digits.
    pub retried: bool,
    pub precision_bits: Option<usize>,
    pub error: Option<String>,
    /// Wall time in milliseconds. Left out of serialized output unless set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl VerificationRecord {
    pub(crate) fn new(identity: IdentityId, params: Params) -> Self {
        let kind = if identity.is_exact() {
            RecordKind::Exact
        } else {
            RecordKind::Numeric
        };
        let weight = identity.weight(&params);
        VerificationRecord {
            identity,
            params,
            label: None,
            kind,
            weight,
            parity: weight.map(Parity::of),
            lhs: None,
            rhs: None,
            residual: None,
            tolerance: None,
            passed: false,
            marginal: false,
            retried: false,
            precision_bits: None,
            error: None,
            elapsed_ms: None,
        }
    }

    /// A failed record for a point whose evaluation raised an error.
    pub fn failure(identity: IdentityId, params: Params, err: &Error) -> Self {
        let mut r = VerificationRecord::new(identity, params);
        r.error = Some(err.to_string());
        r
    }

    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// One record per line.
pub fn to_jsonl(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_json_line());
        out.push('\n');
    }
    out
}

pub fn from_jsonl(text: &str) -> Result<Vec<VerificationRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bucket {
    Odd,
    Even,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub identity: IdentityId,
    pub bucket: Bucket,
    pub total: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub marginal: usize,
    pub retried: usize,
    pub groups: Vec<GroupSummary>,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

/// Pass counts grouped by identity and weight parity; exact identities
/// are counted in their own bucket.
pub fn weight_report(records: &[VerificationRecord]) -> Summary {
    let mut groups: std::collections::BTreeMap<(IdentityId, Bucket), (usize, usize)> = Default::default();
    let mut s = Summary::default();
    for r in records {
        let bucket = match (r.kind, r.parity) {
            (RecordKind::Exact, _) => Bucket::Exact,
            (_, Some(Parity::Even)) => Bucket::Even,
            _ => Bucket::Odd,
        };
        let g = groups.entry((r.identity, bucket)).or_default();
        g.0 += 1;
        s.total += 1;
        if r.passed {
            g.1 += 1;
            s.passed += 1;
        }
        s.marginal += usize::from(r.marginal);
        s.retried += usize::from(r.retried);
    }
    s.failed = s.total - s.passed;
    s.groups = groups
        .into_iter()
        .map(|((identity, bucket), (total, passed))| GroupSummary {
            identity,
            bucket,
            total,
            passed,
        })
        .collect();
    s
}
