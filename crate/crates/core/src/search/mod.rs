//! Exhaustive searches over small hypergraphs.
//!
//! All three searches share the same reporting: a candidate count, the
//! Šoltés witnesses found (pairwise non-isomorphic), per-filter pruning
//! counts and a list of named sanity checks.

mod order;
mod size5;
mod small;
mod uniform3;

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

use crate::hypercore::{is_isomorphic, Hypergraph};

pub use order::{bounds_check, lemma_check, search_by_order, BoundsReport, LemmaReport, MAX_ORDER};
pub use size5::{search_size5, small_size_check};
pub use uniform3::check_3uniform_diam1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("{what} = {value} is outside the supported range {range}")]
    OutOfRange { what: &'static str, value: usize, range: &'static str },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prune {
    pub filter: &'static str,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub domain: String,
    pub candidates: u64,
    /// Witnesses up to isomorphism, in canonical order.
    pub witnesses: Vec<Hypergraph>,
    /// Witnesses before the isomorphism merge.
    pub labeled_witnesses: u64,
    pub pruning: Vec<Prune>,
    pub checks: Vec<NamedCheck>,
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn all_checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }

    pub fn pruned(&self, filter: &str) -> Option<u64> {
        self.pruning.iter().find(|p| p.filter == filter).map(|p| p.count)
    }

    pub fn witness_line(&self) -> String {
        match self.witnesses.len() {
            0 => "0 witnesses".to_string(),
            1 => "1 witness (unique up to isomorphism)".to_string(),
            k => format!("{k} witnesses (pairwise non-isomorphic)"),
        }
    }

    /// Plain-text rendering. Timing is left out unless asked for so that
    /// the output is reproducible.
    pub fn render_text(&self, timing: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "domain: {}", self.domain);
        let _ = writeln!(out, "candidates examined: {}", self.candidates);
        let _ = writeln!(out, "{}", self.witness_line());
        let _ = writeln!(out, "labeled witnesses: {}", self.labeled_witnesses);
        for (i, w) in self.witnesses.iter().enumerate() {
            let edges: Vec<String> = w
                .edges()
                .iter()
                .map(|e| format!("{{{}}}", e.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
                .collect();
            let _ = writeln!(out, "witness {i}: n={} m={} edges {}", w.order(), w.size(), edges.join(" "));
        }
        for p in &self.pruning {
            let _ = writeln!(out, "pruned by {}: {}", p.filter, p.count);
        }
        for c in &self.checks {
            let _ = writeln!(out, "check {}: {}", c.name, if c.passed { "ok" } else { "FAILED" });
        }
        if timing {
            let _ = writeln!(out, "elapsed: {:.3}s", self.elapsed.as_secs_f64());
        }
        out
    }

    /// One summary record followed by one record per witness.
    pub fn render_jsonl(&self, timing: bool) -> String {
        #[derive(Serialize)]
        struct Summary<'a> {
            kind: &'static str,
            domain: &'a str,
            candidates: u64,
            witnesses: usize,
            labeled_witnesses: u64,
            pruning: &'a [Prune],
            checks: &'a [NamedCheck],
            #[serde(skip_serializing_if = "Option::is_none")]
            elapsed_ms: Option<u128>,
        }
        #[derive(Serialize)]
        struct Witness<'a> {
            kind: &'static str,
            index: usize,
            order: usize,
            size: usize,
            edges: &'a [Vec<usize>],
        }
        let summary = Summary {
            kind: "summary",
            domain: &self.domain,
            candidates: self.candidates,
            witnesses: self.witnesses.len(),
            labeled_witnesses: self.labeled_witnesses,
            pruning: &self.pruning,
            checks: &self.checks,
            elapsed_ms: timing.then_some(self.elapsed.as_millis()),
        };
        let mut out = serde_json::to_string(&summary).expect("plain data serializes");
        out.push('\n');
        for (index, w) in self.witnesses.iter().enumerate() {
            let rec = Witness { kind: "witness", index, order: w.order(), size: w.size(), edges: w.edges() };
            out.push_str(&serde_json::to_string(&rec).expect("plain data serializes"));
            out.push('\n');
        }
        out
    }
}

/// Sorts labeled witnesses and keeps the first of every isomorphism class.
/// The result does not depend on the order the witnesses were found in.
pub(crate) fn merge_witnesses(mut labeled: Vec<Hypergraph>) -> Vec<Hypergraph> {
    labeled.sort();
    labeled.dedup();
    let mut classes: Vec<Hypergraph> = Vec::new();
    for h in labeled {
        if !classes.iter().any(|c| is_isomorphic(c, &h)) {
            classes.push(h);
        }
    }
    classes
}

pub(crate) fn check(name: impl Into<String>, passed: bool) -> NamedCheck {
    NamedCheck { name: name.into(), passed }
}
