//! Verification reports and table renderers.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use commclass_core::atoms::AtomHistogram;
use serde::Serialize;

/// Fixed CSV header for atom-count tables.
pub const CSV_HEADER: &str = "n,a0,a1,a2,a3,a4";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Counterexample,
    ResourceLimited,
}

impl Verdict {
    /// Process exit code: 0, 2 or 3.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Holds => 0,
            Verdict::Counterexample => 2,
            Verdict::ResourceLimited => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Counterexample => "counterexample",
            Verdict::ResourceLimited => "resource-limited",
        }
    }

    /// Counterexample dominates resource limits, which dominate success.
    pub fn combine(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Counterexample, _) | (_, Verdict::Counterexample) => Verdict::Counterexample,
            (Verdict::ResourceLimited, _) | (_, Verdict::ResourceLimited) => {
                Verdict::ResourceLimited
            }
            _ => Verdict::Holds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub range: String,
    pub verdict: Verdict,
    pub witness: Option<String>,
    #[serde(rename = "elapsed-ms")]
    pub elapsed_ms: u64,
    pub totals: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>, range: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            range: range.into(),
            verdict: Verdict::Holds,
            witness: None,
            elapsed_ms: 0,
            totals: BTreeMap::new(),
        }
    }

    pub fn total(&mut self, key: &str, value: u64) -> &mut Self {
        self.totals.insert(key.to_string(), value);
        self
    }

    pub fn add(&mut self, key: &str, value: u64) {
        *self.totals.entry(key.to_string()).or_default() += value;
    }

    /// Records a violation; the first witness is kept.
    pub fn counterexample(&mut self, witness: impl Into<String>) {
        if self.verdict != Verdict::Counterexample {
            self.witness = Some(witness.into());
        }
        self.verdict = Verdict::Counterexample;
    }

    pub fn resource_limited(&mut self, reason: impl Into<String>) {
        if self.verdict == Verdict::Holds {
            self.verdict = Verdict::ResourceLimited;
            self.witness = Some(reason.into());
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn timed(mut self, elapsed: Duration) -> Self {
        self.elapsed_ms = elapsed.as_millis() as u64;
        self
    }

    /// Copy with timing cleared, for byte-level comparisons.
    pub fn untimed(&self) -> Self {
        VerificationReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    /// One JSON object on a single line.
    pub fn to_record(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}: {} [{}]", self.name, self.verdict.as_str(), self.range);
        if let Some(w) = &self.witness {
            let _ = write!(s, "\n  witness: {w}");
        }
        for (k, v) in &self.totals {
            let _ = write!(s, "\n  {k}: {v}");
        }
        let _ = write!(s, "\n  elapsed-ms: {}", self.elapsed_ms);
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::from("| field | value |\n|---|---|\n");
        let _ = writeln!(s, "| name | {} |", self.name);
        let _ = writeln!(s, "| range | {} |", self.range);
        let _ = writeln!(s, "| verdict | {} |", self.verdict.as_str());
        let _ = writeln!(
            s,
            "| witness | {} |",
            self.witness.as_deref().unwrap_or("-")
        );
        for (k, v) in &self.totals {
            let _ = writeln!(s, "| {k} | {v} |");
        }
        let _ = writeln!(s, "| elapsed-ms | {} |", self.elapsed_ms);
        s
    }
}

/// Overall verdict of several reports.
pub fn overall(reports: &[VerificationReport]) -> Verdict {
    reports
        .iter()
        .fold(Verdict::Holds, |acc, r| acc.combine(r.verdict))
}

/// First five columns of a histogram; column 3 is always materialized.
fn five(h: &AtomHistogram) -> [u64; 5] {
    let mut out = [0u64; 5];
    for (k, c) in h.counts.iter().take(5).enumerate() {
        out[k] = *c;
    }
    out
}

pub fn table_csv(rows: &[AtomHistogram]) -> String {
    let mut s = format!("{CSV_HEADER}\n");
    for h in rows {
        let c = five(h);
        let _ = writeln!(s, "{},{},{},{},{},{}", h.n, c[0], c[1], c[2], c[3], c[4]);
    }
    s
}

pub fn table_markdown(rows: &[AtomHistogram]) -> String {
    let mut s = String::from("| n | 0 | 1 | 2 | 3 | 4 |\n|---:|---:|---:|---:|---:|---:|\n");
    for h in rows {
        let c = five(h);
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} |",
            h.n, c[0], c[1], c[2], c[3], c[4]
        );
    }
    s
}

#[derive(Serialize)]
struct RowRecord {
    n: usize,
    counts: [u64; 5],
    total: u64,
}

pub fn table_records(rows: &[AtomHistogram]) -> String {
    let mut s = String::new();
    for h in rows {
        let rec = RowRecord {
            n: h.n,
            counts: five(h),
            total: h.total(),
        };
        s.push_str(&serde_json::to_string(&rec).expect("row serializes"));
        s.push('\n');
    }
    s
}
