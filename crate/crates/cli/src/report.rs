use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::config::Format;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecInfo {
    pub m: usize,
    pub q: Vec<String>,
    pub zeta: String,
    pub generic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeInfo {
    pub n: usize,
    pub hom_dim: usize,
    pub ker: usize,
    pub im: usize,
    pub hh: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingInfo {
    pub generators: Vec<String>,
    pub relations_verified: bool,
    pub total_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub spec: SpecInfo,
    pub degrees: Vec<DegreeInfo>,
    pub ring: Option<RingInfo>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Csv => self.csv(),
            Format::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let s = &self.spec;
        let regime = if s.generic { "generic" } else { "root of unity" };
        writeln!(out, "m = {}, q = ({}), ζ = {} ({regime})", s.m, s.q.join(", "), s.zeta).unwrap();
        if !self.degrees.is_empty() {
            writeln!(out, "{:>4} {:>8} {:>6} {:>6} {:>4}", "n", "hom_dim", "ker", "im", "hh").unwrap();
            for d in &self.degrees {
                writeln!(out, "{:>4} {:>8} {:>6} {:>6} {:>4}", d.n, d.hom_dim, d.ker, d.im, d.hh).unwrap();
            }
            let hh: Vec<String> = self.degrees.iter().map(|d| d.hh.to_string()).collect();
            writeln!(out, "HH {}", hh.join(" ")).unwrap();
        }
        if let Some(r) = &self.ring {
            writeln!(
                out,
                "ring: total dim {}, generators {}, relations {}",
                r.total_dim,
                r.generators.join(", "),
                if r.relations_verified { "verified" } else { "violated" }
            )
            .unwrap();
        }
        for c in &self.checks {
            writeln!(out, "[{}] {}: {}", if c.pass { "pass" } else { "FAIL" }, c.name, c.detail).unwrap();
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = String::from("n,hom_dim,ker,im,hh\n");
        for d in &self.degrees {
            writeln!(out, "{},{},{},{},{}", d.n, d.hom_dim, d.ker, d.im, d.hh).unwrap();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub m: usize,
    pub zeta: String,
    pub total: Option<usize>,
    pub expected: usize,
    pub status: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_degree: Option<usize>,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status != "fail")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Csv => {
                let mut out = String::from("m,zeta,total,expected,status\n");
                for r in &self.rows {
                    let total = r.total.map(|t| t.to_string()).unwrap_or_default();
                    writeln!(out, "{},{},{},{},{}", r.m, r.zeta, total, r.expected, r.status).unwrap();
                }
                out
            }
            Format::Table => {
                let mut out = format!("{:>3} {:>8} {:>6} {:>9}  status\n", "m", "zeta", "total", "expected");
                for r in &self.rows {
                    let total = r.total.map(|t| t.to_string()).unwrap_or_else(|| "-".into());
                    writeln!(out, "{:>3} {:>8} {:>6} {:>9}  {}", r.m, r.zeta, total, r.expected, r.status).unwrap();
                    if !r.detail.is_empty() {
                        writeln!(out, "    {}", r.detail).unwrap();
                    }
                }
                out
            }
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
