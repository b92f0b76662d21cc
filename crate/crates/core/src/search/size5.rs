//! Hypergraphs with few edges, enumerated through their incidence sets.
//!
//! A hypergraph with edges labeled `0..m` is determined by the incidence
//! set of each vertex, a subset of `[m]`. For a Šoltés hypergraph these
//! sets have size at least 2, at most `m - 2`, and form an antichain
//! ([`super::lemma_check`] tests these facts at small order), so for
//! `m = 5` it suffices to run through the antichains of 2- and 3-subsets of
//! `[5]`.

use std::time::Instant;

use super::order::{lemma_check, witness_checks};
use super::small::{wiener_masks, INF};
use super::{check, merge_witnesses, Prune, SearchReport};
use crate::families::dual_k5_3;
use crate::hypercore::{is_isomorphic, Hypergraph};
use crate::metrics::{wiener, Distance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Verdict {
    OrderTooSmall,
    EdgeTooSmall,
    DuplicateEdges,
    Disconnected,
    Disconnecting,
    NonzeroDelta,
    Soltes,
}

/// Builds the hypergraph on vertices `0..sets.len()` whose edge `i` is the
/// set of vertices with `i` in their incidence set, and tests it.
fn evaluate(sets: &[u32], m: usize, min_order: usize) -> Verdict {
    let k = sets.len();
    if k < min_order {
        return Verdict::OrderTooSmall;
    }
    let edges: Vec<u32> = (0..m)
        .map(|i| (0..k).filter(|&j| sets[j] >> i & 1 == 1).fold(0, |acc, j| acc | 1 << j))
        .collect();
    if edges.iter().any(|e| e.count_ones() < 2) {
        return Verdict::EdgeTooSmall;
    }
    if (0..m).any(|i| edges[i + 1..].contains(&edges[i])) {
        return Verdict::DuplicateEdges;
    }
    let all: u32 = if k == 32 { u32::MAX } else { (1 << k) - 1 };
    // the 2-section without the edges in `removed`
    let adjacency = |removed: u32| -> Vec<u32> {
        (0..k)
            .map(|j| {
                (0..k)
                    .filter(|&l| l != j && sets[j] & sets[l] & !removed != 0)
                    .fold(0, |acc, l| acc | 1 << l)
            })
            .collect()
    };
    let w = wiener_masks(&adjacency(0), all);
    if w == INF {
        return Verdict::Disconnected;
    }
    for v in 0..k {
        let wv = wiener_masks(&adjacency(sets[v]), all & !(1 << v));
        if wv == INF {
            return Verdict::Disconnecting;
        }
        if wv != w {
            return Verdict::NonzeroDelta;
        }
    }
    Verdict::Soltes
}

fn family_hypergraph(sets: &[u32], m: usize) -> Hypergraph {
    let edges = (0..m)
        .map(|i| (0..sets.len()).filter(|&j| sets[j] >> i & 1 == 1).collect())
        .collect();
    Hypergraph::new(sets.len(), edges).expect("evaluated family is valid")
}

#[derive(Default)]
struct Tally {
    counts: [u64; 7],
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        self.counts[v as usize] += 1;
    }

    fn prunes(&self, extra: Option<(&'static str, u64)>) -> Vec<Prune> {
        let names = [
            "order below 5",
            "dual edge with fewer than 2 vertices",
            "repeated dual edge",
            "disconnected",
            "disconnecting deletion",
            "nonzero delta",
        ];
        let mut out: Vec<Prune> = extra.into_iter().map(|(filter, count)| Prune { filter, count }).collect();
        out.extend(names.iter().zip(self.counts).map(|(&filter, count)| Prune { filter, count }));
        out
    }
}

/// All hypergraphs with exactly 5 edges whose incidence sets form an
/// antichain of 2- and 3-subsets of `[5]`, with at least 5 vertices.
pub fn search_size5() -> SearchReport {
    let start = Instant::now();
    let subsets: Vec<u32> = [2, 3]
        .iter()
        .flat_map(|&r| {
            let mut s: Vec<u32> = (0u32..32).filter(|s| s.count_ones() == r).collect();
            s.sort_by_key(|&s| (0..5).filter(|&i| s >> i & 1 == 1).collect::<Vec<u32>>());
            s
        })
        .collect();
    // for every subset, the positions of its proper subsets in the list
    let below: Vec<u32> = subsets
        .iter()
        .map(|&s| {
            subsets
                .iter()
                .enumerate()
                .filter(|(_, &t)| t != s && t & s == t)
                .fold(0, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let candidates = 1u64 << subsets.len();
    let mut tally = Tally::default();
    let mut not_antichain = 0;
    let mut labeled = Vec::new();
    let mut sets = Vec::with_capacity(subsets.len());
    for mask in 0u32..1 << subsets.len() {
        if (0..subsets.len()).any(|i| mask >> i & 1 == 1 && mask & below[i] != 0) {
            not_antichain += 1;
            continue;
        }
        sets.clear();
        sets.extend((0..subsets.len()).filter(|&i| mask >> i & 1 == 1).map(|i| subsets[i]));
        let v = evaluate(&sets, 5, 5);
        tally.add(v);
        if v == Verdict::Soltes {
            labeled.push(family_hypergraph(&sets, 5));
        }
    }
    let labeled_witnesses = labeled.len() as u64;
    let witnesses = merge_witnesses(labeled);

    let pairs: Vec<u32> = subsets.iter().copied().filter(|s| s.count_ones() == 2).collect();
    let triples: Vec<u32> = subsets.iter().copied().filter(|s| s.count_ones() == 3).collect();
    let target = dual_k5_3();
    let mut checks = witness_checks(&witnesses);
    checks.push(check(
        "unique witness is the dual of K5^(3)",
        witnesses.len() == 1 && is_isomorphic(&witnesses[0], &target),
    ));
    checks.push(check(
        "witness has W = 45",
        witnesses.iter().all(|w| wiener(w) == Distance::Finite(45)),
    ));
    checks.push(check("dual of K5 (4-uniform) examined and rejected", evaluate(&pairs, 5, 5) == Verdict::NonzeroDelta));
    checks.push(check("dual of K5^(3) examined and accepted", evaluate(&triples, 5, 5) == Verdict::Soltes));
    let premises = (3..=5).all(|n| lemma_check(n).map(|r| r.holds()).unwrap_or(false));
    checks.push(check("degree and antichain premises hold at orders 3..=5", premises));
    checks.push(check("no Šoltés hypergraph with at most 4 edges", small_size_check().witnesses.is_empty()));

    SearchReport {
        domain: "antichains of 2- and 3-subsets of [5] (2^20 subset families)".into(),
        candidates,
        witnesses,
        labeled_witnesses,
        pruning: tally.prunes(Some(("not an antichain", not_antichain))),
        checks,
        elapsed: start.elapsed(),
    }
}

/// Every hypergraph with at most 4 edges and pairwise distinct vertex
/// incidence sets, built from each family of distinct nonempty subsets of
/// `[m]`, `m <= 4`.
pub fn small_size_check() -> SearchReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    let mut candidates = 0;
    let mut labeled = Vec::new();
    for m in 1..=4usize {
        let subsets: Vec<u32> = (1u32..1 << m).collect();
        for mask in 0u32..1 << subsets.len() {
            candidates += 1;
            let sets: Vec<u32> = (0..subsets.len()).filter(|&i| mask >> i & 1 == 1).map(|i| subsets[i]).collect();
            let v = evaluate(&sets, m, 2);
            tally.add(v);
            if v == Verdict::Soltes {
                labeled.push(family_hypergraph(&sets, m));
            }
        }
    }
    let labeled_witnesses = labeled.len() as u64;
    let witnesses = merge_witnesses(labeled);
    let k4_pairs: Vec<u32> = (0u32..16).filter(|s| s.count_ones() == 2).collect();
    let mut checks = witness_checks(&witnesses);
    checks.push(check("dual of K4 examined and rejected", evaluate(&k4_pairs, 4, 2) == Verdict::NonzeroDelta));
    let mut pruning = tally.prunes(None);
    pruning[0].filter = "order below 2";
    SearchReport {
        domain: "hypergraphs with at most 4 edges and distinct incidence sets".into(),
        candidates,
        witnesses,
        labeled_witnesses,
        pruning,
        checks,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::order::c5_plus_full;
    use crate::families::{duplicated_dual_k4, hemi_dodecahedron};
    use crate::metrics::is_soltes;

    fn incidence_masks(h: &Hypergraph) -> Vec<u32> {
        h.incidence().iter().map(|s| s.iter().fold(0, |acc, &e| acc | 1 << e)).collect()
    }

    #[test]
    fn evaluate_agrees_with_generic_test() {
        for h in [dual_k5_3(), hemi_dodecahedron(), duplicated_dual_k4(), c5_plus_full()] {
            let v = evaluate(&incidence_masks(&h), h.size(), 2);
            assert_eq!(v == Verdict::Soltes, is_soltes(&h));
        }
    }

    #[test]
    fn few_edges_have_no_witness() {
        let r = small_size_check();
        assert!(r.witnesses.is_empty());
        assert!(r.all_checks_passed());
        // 2^1 + 2^3 + 2^7 + 2^15 families
        assert_eq!(r.candidates, 2 + 8 + 128 + 32768);
    }
}
