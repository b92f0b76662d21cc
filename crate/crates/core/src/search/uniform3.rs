//! 3-uniform hypergraphs of diameter 1, searched by branch and bound.
//!
//! Triples are decided in lexicographic order. A node fixes the included
//! set `I` and leaves the triples after it undecided (`U`). Adding triples
//! never increases a distance, so for the final hypergraph `F` with
//! `I ⊆ F ⊆ I ∪ U` and any vertex `v`,
//! `W((I ∪ U) - v) <= W(F - v) <= W(I - v)`. A Šoltés hypergraph of
//! diameter 1 needs a complete 2-section and `W(F - v) = C(n,2)` for all
//! `v`, which gives three cuts: `I ∪ U` has an incomplete 2-section,
//! `W(I - v)` is already finite and below `C(n,2)`, or `W((I ∪ U) - v)` is
//! infinite or above it.

use std::time::Instant;

use rayon::prelude::*;

use super::order::witness_checks;
use super::small::{adjacency_of_pairs, pair_code, pairs, wiener_masks, INF};
use super::{check, merge_witnesses, Prune, SearchError, SearchReport};
use crate::families::binom;
use crate::hypercore::Hypergraph;
use crate::metrics::is_soltes;

struct Space {
    n: usize,
    triples: Vec<Vec<usize>>,
    pairs: Vec<(u32, u32)>,
    all_pairs: u32,
    /// Pair code of each triple.
    code: Vec<u32>,
    /// `suffix[v][k]`: pairs covered by triples `k..` avoiding `v`; slot
    /// `n` ignores `v`.
    suffix: Vec<Vec<u32>>,
    target: u32,
}

#[derive(Default)]
struct Stats {
    nodes: u64,
    incomplete: u64,
    too_small: u64,
    too_large: u64,
    witnesses: Vec<Vec<usize>>,
}

impl Stats {
    fn merge(mut self, o: Stats) -> Stats {
        self.nodes += o.nodes;
        self.incomplete += o.incomplete;
        self.too_small += o.too_small;
        self.too_large += o.too_large;
        self.witnesses.extend(o.witnesses);
        self
    }
}

impl Space {
    fn new(n: usize) -> Space {
        let triples: Vec<Vec<usize>> = (0..n)
            .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| vec![a, b, c])))
            .collect();
        let pairs = pairs(n);
        let code: Vec<u32> = triples
            .iter()
            .map(|t| pair_code(&pairs, t.iter().fold(0, |acc, &v| acc | 1 << v)))
            .collect();
        let suffix = (0..=n)
            .map(|v| {
                let mut s = vec![0u32; triples.len() + 1];
                for k in (0..triples.len()).rev() {
                    let keep = v == n || !triples[k].contains(&v);
                    s[k] = s[k + 1] | if keep { code[k] } else { 0 };
                }
                s
            })
            .collect();
        let all_pairs = ((1u64 << pairs.len()) - 1) as u32;
        Space { n, triples, pairs, all_pairs, code, suffix, target: binom(n, 2) as u32 }
    }

    fn wiener_without(&self, code: u32, v: usize) -> u32 {
        let alive = ((1u32 << self.n) - 1) & !(1 << v);
        wiener_masks(&adjacency_of_pairs(&self.pairs, code, self.n), alive)
    }

    /// `included[v]` holds the pairs covered by included triples avoiding
    /// `v`, with slot `n` covering all included triples.
    fn search(&self, k: usize, included: &mut [u32], chosen: &mut Vec<usize>, s: &mut Stats) {
        s.nodes += 1;
        let n = self.n;
        if included[n] | self.suffix[n][k] != self.all_pairs {
            s.incomplete += 1;
            return;
        }
        for v in 0..n {
            let low = self.wiener_without(included[v], v);
            if low != INF && low < self.target {
                s.too_small += 1;
                return;
            }
            let high = self.wiener_without(included[v] | self.suffix[v][k], v);
            if high == INF || high > self.target {
                s.too_large += 1;
                return;
            }
        }
        if k == self.triples.len() {
            // both bounds met: every deletion has W = C(n,2) = W(H)
            s.witnesses.push(chosen.clone());
            return;
        }
        let saved: Vec<u32> = included.to_vec();
        for v in 0..=n {
            if v == n || !self.triples[k].contains(&v) {
                included[v] |= self.code[k];
            }
        }
        chosen.push(k);
        self.search(k + 1, included, chosen, s);
        chosen.pop();
        included.copy_from_slice(&saved);
        self.search(k + 1, included, chosen, s);
    }

    /// Splits the tree on the first few triples and searches the subtrees
    /// in parallel; results are merged in a fixed order.
    fn run(&self) -> Stats {
        let split = self.triples.len().min(6);
        (0u32..1 << split)
            .into_par_iter()
            .map(|prefix| {
                let mut s = Stats::default();
                let mut included = vec![0u32; self.n + 1];
                let mut chosen = Vec::new();
                for k in 0..split {
                    if prefix >> (split - 1 - k) & 1 == 1 {
                        chosen.push(k);
                        for v in 0..=self.n {
                            if v == self.n || !self.triples[k].contains(&v) {
                                included[v] |= self.code[k];
                            }
                        }
                    }
                }
                self.search(split, &mut included, &mut chosen, &mut s);
                s
            })
            .reduce(Stats::default, Stats::merge)
    }

    fn hypergraph(&self, chosen: &[usize]) -> Hypergraph {
        Hypergraph::new(self.n, chosen.iter().map(|&k| self.triples[k].clone()).collect())
            .expect("triples are valid edges")
    }
}

/// Searches every 3-uniform hypergraph of diameter 1 on `3..=n_max`
/// vertices, `5 <= n_max <= 7`, for Šoltés witnesses. Candidates counts the
/// visited search-tree nodes.
pub fn check_3uniform_diam1(n_max: usize) -> Result<SearchReport, SearchError> {
    if !(5..=7).contains(&n_max) {
        return Err(SearchError::OutOfRange { what: "n_max", value: n_max, range: "5..=7" });
    }
    let start = Instant::now();
    let mut total = Stats::default();
    let mut labeled = Vec::new();
    for n in 3..=n_max {
        let space = Space::new(n);
        let mut s = space.run();
        labeled.extend(s.witnesses.drain(..).map(|c| space.hypergraph(&c)));
        total = total.merge(s);
    }
    let labeled_witnesses = labeled.len() as u64;
    let witnesses = merge_witnesses(labeled);
    let mut named = witness_checks(&witnesses);
    for n in 5..=n_max {
        let clique = Hypergraph::clique(n, 3).expect("n >= 3");
        named.push(check(format!("K{n}^(3) rejected"), !is_soltes(&clique)));
    }
    let spaces: Vec<String> = (3..=n_max).map(|n| format!("2^{}", binom(n, 3))).collect();
    Ok(SearchReport {
        domain: format!(
            "3-uniform hypergraphs of diameter 1 on 3..={n_max} vertices (edge subsets {})",
            spaces.join(" + ")
        ),
        candidates: total.nodes,
        witnesses,
        labeled_witnesses,
        pruning: vec![
            Prune { filter: "incomplete 2-section", count: total.incomplete },
            Prune { filter: "deletion total already below C(n,2)", count: total.too_small },
            Prune { filter: "deletion total cannot reach C(n,2)", count: total.too_large },
        ],
        checks: named,
        elapsed: start.elapsed(),
    })
}
