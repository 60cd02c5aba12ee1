//! Structured verification reports shared by the verification operations
//! and the command-line driver.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
    ResourceLimit,
}

/// One verification check: stable identifier, outcome, and a sorted
/// key/value payload (expected/computed values, counterexamples, notes).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
    pub ms: u64,
}

/// A scalar nonvanishing condition consulted during verification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GenericityItem {
    pub condition: String,
    pub value: String,
    pub ok: bool,
}

/// Collects check outcomes. Each recorded check is stamped with the time
/// elapsed since the previous record, attributing computation to the check
/// that consumed it.
#[derive(Debug)]
pub struct Reporter {
    checks: Vec<CheckReport>,
    genericity: Vec<GenericityItem>,
    primes: Vec<u64>,
    clock: Instant,
}

impl Default for Reporter {
    fn default() -> Self {
        Self::new()
    }
}

impl Reporter {
    pub fn new() -> Self {
        Reporter {
            checks: Vec::new(),
            genericity: Vec::new(),
            primes: Vec::new(),
            clock: Instant::now(),
        }
    }

    fn stamp(&mut self) -> u64 {
        let ms = self.clock.elapsed().as_millis() as u64;
        self.clock = Instant::now();
        ms
    }

    pub fn record(
        &mut self,
        id: impl Into<String>,
        status: CheckStatus,
        details: BTreeMap<String, String>,
    ) {
        let ms = self.stamp();
        self.checks.push(CheckReport {
            check_id: id.into(),
            status,
            details,
            ms,
        });
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.record(id, CheckStatus::Pass, BTreeMap::new());
    }

    pub fn fail(&mut self, id: impl Into<String>, details: BTreeMap<String, String>) {
        self.record(id, CheckStatus::Fail, details);
    }

    pub fn bool_check(&mut self, id: impl Into<String>, ok: bool) {
        if ok {
            self.pass(id);
        } else {
            self.fail(id, BTreeMap::new());
        }
    }

    /// Pass/fail on equality, recording both sides on failure.
    pub fn eq_check<T: PartialEq + std::fmt::Display>(
        &mut self,
        id: impl Into<String>,
        expected: &T,
        computed: &T,
    ) {
        if expected == computed {
            self.pass(id);
        } else {
            let mut details = BTreeMap::new();
            details.insert("expected".to_string(), expected.to_string());
            details.insert("computed".to_string(), computed.to_string());
            self.fail(id, details);
        }
    }

    /// Like [`Self::eq_check`] for types that only implement `Debug`.
    pub fn eq_check_debug<T: PartialEq + std::fmt::Debug>(
        &mut self,
        id: impl Into<String>,
        expected: &T,
        computed: &T,
    ) {
        if expected == computed {
            self.pass(id);
        } else {
            let mut details = BTreeMap::new();
            details.insert("expected".to_string(), format!("{expected:?}"));
            details.insert("computed".to_string(), format!("{computed:?}"));
            self.fail(id, details);
        }
    }

    pub fn skip(&mut self, id: impl Into<String>, reason: impl Into<String>) {
        let mut details = BTreeMap::new();
        details.insert("reason".to_string(), reason.into());
        self.record(id, CheckStatus::Skipped, details);
    }

    pub fn resource_limit(&mut self, id: impl Into<String>, message: impl Into<String>) {
        let mut details = BTreeMap::new();
        details.insert("budget".to_string(), message.into());
        self.record(id, CheckStatus::ResourceLimit, details);
    }

    pub fn genericity(&mut self, condition: impl Into<String>, value: impl Into<String>, ok: bool) {
        self.genericity.push(GenericityItem {
            condition: condition.into(),
            value: value.into(),
            ok,
        });
    }

    pub fn note_prime(&mut self, p: u64) {
        if !self.primes.contains(&p) {
            self.primes.push(p);
        }
    }

    pub fn checks(&self) -> &[CheckReport] {
        &self.checks
    }

    pub fn all_passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.status, CheckStatus::Fail))
    }

    pub fn merge(&mut self, other: Reporter) {
        self.checks.extend(other.checks);
        self.genericity.extend(other.genericity);
        for p in other.primes {
            self.note_prime(p);
        }
    }

    pub fn into_report(self) -> VerificationReport {
        VerificationReport::from_parts(self.checks, self.genericity, self.primes)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// Complete machine-readable verification report. Checks are sorted by
/// identifier so equal runs serialize identically.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub checks: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub genericity: Vec<GenericityItem>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub primes: Vec<u64>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn from_parts(
        mut checks: Vec<CheckReport>,
        genericity: Vec<GenericityItem>,
        mut primes: Vec<u64>,
    ) -> Self {
        checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        primes.sort_unstable();
        primes.dedup();
        let summary = Summary {
            pass: checks
                .iter()
                .filter(|c| c.status == CheckStatus::Pass)
                .count(),
            fail: checks
                .iter()
                .filter(|c| c.status == CheckStatus::Fail)
                .count(),
            skipped: checks
                .iter()
                .filter(|c| matches!(c.status, CheckStatus::Skipped | CheckStatus::ResourceLimit))
                .count(),
        };
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            checks,
            genericity,
            primes,
            summary,
        }
    }

    pub fn strip_timings(&mut self) {
        for c in &mut self.checks {
            c.ms = 0;
        }
    }

    /// Process exit code: 0 all pass, 1 any failure, 3 resource limit.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self
            .checks
            .iter()
            .any(|c| c.status == CheckStatus::ResourceLimit)
        {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let width = self
            .checks
            .iter()
            .map(|c| c.check_id.len())
            .max()
            .unwrap_or(8)
            .max(8);
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skip",
                CheckStatus::ResourceLimit => "resource_limit",
            };
            writeln!(out, "{:width$}  {:>14}  {:>6} ms", c.check_id, status, c.ms).unwrap();
            for (k, v) in &c.details {
                let mut v = v.as_str();
                let trimmed;
                if v.len() > 200 {
                    trimmed = format!("{}...", &v[..200]);
                    v = &trimmed;
                }
                writeln!(out, "{:width$}    {k}: {v}", "").unwrap();
            }
        }
        if !self.genericity.is_empty() {
            writeln!(out, "genericity:").unwrap();
            for g in &self.genericity {
                writeln!(
                    out,
                    "  {} = {} [{}]",
                    g.condition,
                    g.value,
                    if g.ok { "ok" } else { "VANISHES" }
                )
                .unwrap();
            }
        }
        if !self.primes.is_empty() {
            let primes: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
            writeln!(out, "primes: {}", primes.join(", ")).unwrap();
        }
        let total = self.summary.pass + self.summary.fail;
        writeln!(out, "{}/{} checks passed", self.summary.pass, total).unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_sorting_and_summary() {
        let mut rep = Reporter::new();
        rep.pass("b/two");
        rep.pass("a/one");
        rep.bool_check("c/three", false);
        rep.skip("d/four", "not requested");
        let report = rep.into_report();
        let ids: Vec<&str> = report.checks.iter().map(|c| c.check_id.as_str()).collect();
        assert_eq!(ids, vec!["a/one", "b/two", "c/three", "d/four"]);
        assert_eq!(report.summary.pass, 2);
        assert_eq!(report.summary.fail, 1);
        assert_eq!(report.summary.skipped, 1);
        assert_eq!(report.exit_code(), 1);
        assert!(report.to_text().contains("2/3 checks passed"));
    }

    #[test]
    fn json_round_trip() {
        let mut rep = Reporter::new();
        rep.eq_check("eq", &3, &4);
        rep.note_prime(103);
        rep.genericity("r1", "1", true);
        let mut report = rep.into_report();
        report.strip_timings();
        let json = report.to_json();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(back.exit_code(), 1);
        assert_eq!(back.checks[0].details["expected"], "3");
    }

    #[test]
    fn resource_limit_exit_code() {
        let mut rep = Reporter::new();
        rep.pass("ok");
        rep.resource_limit("heavy", "pair budget exceeded");
        let report = rep.into_report();
        assert_eq!(report.exit_code(), 3);
    }
}
