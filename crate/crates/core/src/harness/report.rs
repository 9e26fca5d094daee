use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Result, ScopeError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    Skipped,
}

/// One prediction-vs-observation comparison.
///
/// Construct through [`SweepRow::compare`] or [`SweepRow::skipped`] so that
/// a reason is present exactly on skipped rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub p: Option<u32>,
    /// Degree `m` for partition rows, rank `n` for weight rows.
    pub size: usize,
    pub check: String,
    pub lambda: String,
    pub mu: Option<String>,
    pub predicted: String,
    pub observed: String,
    pub status: Status,
    pub reason: Option<String>,
}

impl SweepRow {
    #[allow(clippy::too_many_arguments)]
    pub fn compare(
        p: Option<u32>,
        size: usize,
        check: &str,
        lambda: String,
        mu: Option<String>,
        predicted: String,
        observed: String,
        ok: bool,
    ) -> Self {
        SweepRow {
            p,
            size,
            check: check.to_string(),
            lambda,
            mu,
            predicted,
            observed,
            status: if ok { Status::Match } else { Status::Mismatch },
            reason: None,
        }
    }

    pub fn skipped(p: u32, size: usize, check: &str, lambda: String, mu: Option<String>, why: ScopeError) -> Self {
        SweepRow {
            p: Some(p),
            size,
            check: check.to_string(),
            lambda,
            mu,
            predicted: String::new(),
            observed: String::new(),
            status: Status::Skipped,
            reason: Some(why.as_str().to_string()),
        }
    }
}

/// Echo of the sweep parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SweepConfig {
    Comb { primes: Vec<u32>, n_max: usize, max_entry: i64 },
    Sym { primes: Vec<u32>, degrees: Vec<usize>, cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub rows: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub skipped: usize,
    /// Only field that varies between identical runs.
    pub wall_time_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: SweepConfig,
    pub rows: Vec<SweepRow>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: SweepConfig, rows: Vec<SweepRow>, elapsed: Option<Duration>) -> Self {
        let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
        let summary = Summary {
            rows: rows.len(),
            matches: count(Status::Match),
            mismatches: count(Status::Mismatch),
            skipped: count(Status::Skipped),
            wall_time_ms: elapsed.map(|d| d.as_millis() as u64),
        };
        Report { version: env!("CARGO_PKG_VERSION").to_string(), config, rows, summary }
    }

    pub fn all_match(&self) -> bool {
        self.summary.mismatches == 0
    }

    pub fn without_timing(mut self) -> Self {
        self.summary.wall_time_ms = None;
        self
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.status == Status::Mismatch)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// One line per row: `p,size,check,lambda,mu,predicted,observed,status,reason`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = ["p", "size", "check", "lambda", "mu", "predicted", "observed", "status", "reason"];
        w.write_record(header).expect("in-memory write");
        for r in &self.rows {
            let status = match r.status {
                Status::Match => "match",
                Status::Mismatch => "mismatch",
                Status::Skipped => "skipped",
            };
            w.write_record([
                r.p.map(|p| p.to_string()).unwrap_or_default().as_str(),
                &r.size.to_string(),
                &r.check,
                &r.lambda,
                r.mu.as_deref().unwrap_or(""),
                &r.predicted,
                &r.observed,
                status,
                r.reason.as_deref().unwrap_or(""),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        let _ = writeln!(
            out,
            "rows={} match={} mismatch={} skipped={}",
            s.rows, s.matches, s.mismatches, s.skipped
        );
        if let Some(ms) = s.wall_time_ms {
            let _ = writeln!(out, "wall_time_ms={ms}");
        }
        for r in self.mismatches() {
            let _ = writeln!(
                out,
                "MISMATCH p={:?} size={} {} lambda={} mu={} predicted={} observed={}",
                r.p,
                r.size,
                r.check,
                r.lambda,
                r.mu.as_deref().unwrap_or("-"),
                r.predicted,
                r.observed
            );
        }
        out
    }
}
