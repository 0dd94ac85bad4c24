use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

/// One case of a campaign.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub campaign: String,
    pub range: String,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub campaign: String,
    pub range: String,
    pub records: Vec<CaseRecord>,
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.matched).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(!self.passed())
    }

    pub fn summary(&self, timing: bool) -> Summary {
        Summary {
            campaign: self.campaign.clone(),
            range: self.range.clone(),
            cases: self.records.len(),
            failures: self.failures(),
            wall_time_ms: timing.then_some(self.wall_time.as_millis()),
        }
    }

    /// One JSON object per case, then `{"summary": …}`. Without `timing`
    /// the output depends only on the inputs.
    pub fn to_json_lines(&self, timing: bool) -> String {
        let mut out = String::new();
        for r in &self.records {
            writeln!(out, "{}", serde_json::to_string(r).expect("records serialize")).unwrap();
        }
        let summary = serde_json::json!({ "summary": self.summary(timing) });
        writeln!(out, "{summary}").unwrap();
        out
    }
}
