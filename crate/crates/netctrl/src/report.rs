//! Report documents and their text rendering.
//!
//! Every document serializes to JSON with serde and renders to text as
//! `key: value` lines whose keys follow the JSON field names.

use std::fmt::Write as _;

use netctrl_core::verify::{ExampleRow, SweepConfig, SweepOutcome};
use netctrl_core::{ControllabilityReport, ForceChronicle, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

pub trait Render: Serialize {
    fn text(&self) -> String;

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text(),
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }
}

/// The JSON spelling of a unit enum variant.
fn json_name<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        other => panic!("expected a unit variant, got {other:?}"),
    }
}

fn chronicle_lines(out: &mut String, chronicle: &ForceChronicle) {
    for step in &chronicle.steps {
        let _ = writeln!(out, "{} -> {}", step.forcer, step.forced);
    }
}

/// Outcome of closing one vertex set under the color change rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZfsReport {
    pub set: VertexSet,
    pub is_zfs: bool,
    pub closure: VertexSet,
    pub chronicle: ForceChronicle,
}

impl Render for ZfsReport {
    fn text(&self) -> String {
        let mut out = if self.is_zfs {
            format!("zero forcing set; closure = {}\n", self.closure)
        } else {
            format!("NOT a zero forcing set; closure = {}\n", self.closure)
        };
        chronicle_lines(&mut out, &self.chronicle);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimumZfsReport {
    pub zero_forcing_number: usize,
    pub witness: VertexSet,
    pub chronicle: ForceChronicle,
}

impl Render for MinimumZfsReport {
    fn text(&self) -> String {
        let mut out = format!(
            "zero forcing number = {}; witness = {}\n",
            self.zero_forcing_number, self.witness
        );
        chronicle_lines(&mut out, &self.chronicle);
        out
    }
}

impl Render for ControllabilityReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "control_set: {}", self.control_set);
        let _ = writeln!(out, "walk_rank: {}", self.walk_rank);
        let _ = writeln!(out, "kalman_controllable: {}", self.kalman_controllable);
        let _ = writeln!(out, "p_span_dim: {}", self.p_span_dim);
        let _ = writeln!(out, "lie_dim: {}", self.lie_dim);
        let _ = writeln!(out, "lie_controllable: {}", self.lie_controllable);
        let _ = writeln!(out, "zfs_status: {}", self.zfs_status);
        let _ = writeln!(out, "hypotheses.connected: {}", self.hypotheses.connected);
        let _ = writeln!(out, "hypotheses.same_sign: {}", self.hypotheses.same_sign);
        for entry in &self.consistency {
            let _ = writeln!(
                out,
                "consistency.{}: {}",
                json_name(&entry.check),
                entry.outcome
            );
        }
        out
    }
}

/// Both sweeps of one `verify` run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: SweepConfig,
    pub equivalence: SweepOutcome,
    pub zfs_implication: SweepOutcome,
    pub passed: bool,
}

impl VerifyReport {
    pub fn new(
        config: SweepConfig,
        equivalence: SweepOutcome,
        zfs_implication: SweepOutcome,
    ) -> Self {
        let passed = equivalence.passed && zfs_implication.passed;
        Self {
            config,
            equivalence,
            zfs_implication,
            passed,
        }
    }
}

fn sweep_lines(out: &mut String, name: &str, o: &SweepOutcome) {
    let _ = writeln!(out, "{name}.instances_checked: {}", o.instances_checked);
    let _ = writeln!(out, "{name}.controllable: {}", o.controllable);
    let _ = writeln!(out, "{name}.hypothesis_not_met: {}", o.hypothesis_not_met);
    let _ = writeln!(out, "{name}.violations: {}", o.violations.len());
    for v in &o.violations {
        let subset = v
            .subset
            .as_ref()
            .map_or_else(|| "-".to_string(), ToString::to_string);
        let kind = v.kind.map_or_else(|| "-".to_string(), |k| k.to_string());
        let _ = writeln!(
            out,
            "  THEOREM-VIOLATION [{}] n={} kind={kind} S={subset} edges={:?}",
            v.check, v.order, v.edges
        );
    }
    let _ = writeln!(out, "{name}.passed: {}", o.passed);
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        let c = &self.config;
        let kinds: Vec<String> = c.matrix_kinds.iter().map(ToString::to_string).collect();
        let mut out = String::new();
        let _ = writeln!(out, "config.max_order: {}", c.max_order);
        let _ = writeln!(out, "config.matrix_kinds: {}", kinds.join(","));
        let _ = writeln!(out, "config.subset_policy: {}", c.subset_policy);
        let _ = writeln!(out, "config.seed: {}", c.seed);
        sweep_lines(&mut out, "equivalence", &self.equivalence);
        sweep_lines(&mut out, "zfs_implication", &self.zfs_implication);
        let _ = writeln!(out, "passed: {}", self.passed);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExamplesReport {
    pub rows: Vec<ExampleRow>,
    pub all_match: bool,
}

impl ExamplesReport {
    pub fn new(rows: Vec<ExampleRow>) -> Self {
        let all_match = rows.iter().all(|r| r.matches);
        Self { rows, all_match }
    }
}

impl Render for ExamplesReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{} {}",
                if r.matches { "match" } else { "MISMATCH" },
                r.id
            );
            let _ = writeln!(out, "  expected: {}", r.expected);
            let _ = writeln!(out, "  computed: {}", r.computed);
        }
        let _ = writeln!(out, "all_match: {}", self.all_match);
        out
    }
}
