//! Versioned JSON reports shared by the command line and the golden tables.

use serde::Serialize;
use serde_json::Value;

use crate::solver::{SolutionFamily, Verification};

pub const REPORT_SCHEMA: &str = "tanglekit.report/1";

/// Counts of instance verdicts over a set of families.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub instances: usize,
    pub verified: usize,
    pub failed: usize,
    pub cap_exceeded: usize,
    pub ambiguous: usize,
    pub not_requested: usize,
}

impl VerificationSummary {
    pub fn of<'a>(families: impl IntoIterator<Item = &'a SolutionFamily>) -> Self {
        let mut s = VerificationSummary::default();
        for inst in families.into_iter().flat_map(|f| &f.instances) {
            s.instances += 1;
            match inst.verified {
                Verification::Verified => s.verified += 1,
                Verification::Failed(_) => s.failed += 1,
                Verification::CapExceeded => s.cap_exceeded += 1,
                Verification::Ambiguous => s.ambiguous += 1,
                Verification::NotRequested => s.not_requested += 1,
            }
        }
        s
    }

    pub fn any_failed(&self) -> bool {
        self.failed > 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: Value,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSummary>,
}

impl Report {
    pub fn new(command: impl Into<String>, input: Value) -> Self {
        Report {
            schema: REPORT_SCHEMA,
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            input,
            status: "ok".into(),
            reason: None,
            results: Value::Null,
            verification: None,
        }
    }

    pub fn results(mut self, results: impl Serialize) -> Self {
        self.results = serde_json::to_value(results).expect("report values serialize");
        self
    }

    pub fn status(mut self, status: impl Into<String>, reason: Option<String>) -> Self {
        self.status = status.into();
        self.reason = reason;
        self
    }

    pub fn families(self, families: &[SolutionFamily]) -> Self {
        let mut r = self.results(families);
        r.verification = Some(VerificationSummary::of(families));
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve_2k_to_2k1;
    use serde_json::json;

    #[test]
    fn family_report_shape() {
        let fams = solve_2k_to_2k1(3, -1);
        let r = Report::new("xer-products", json!({"k": 3, "w": -1})).families(&fams);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], REPORT_SCHEMA);
        let inst = &v["results"][0]["instances"][0];
        assert_eq!(inst["U_expr"], "(-1/1 + -1/5)");
        assert_eq!(inst["U_fraction"], "-6/5");
        assert_eq!(inst["move"], "(0/1, -1/1)");
        assert_eq!(inst["verified"], "not requested");
        assert_eq!(r.verification.unwrap().not_requested, 2);
    }
}
