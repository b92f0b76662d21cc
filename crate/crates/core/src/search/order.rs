//! Search by order, plus two unpruned sweeps over the same space: the
//! distance bounds and the structural facts used as pruning filters.

use std::time::Instant;

use super::small::{OrderEngine, INF};
use super::{check, merge_witnesses, NamedCheck, Prune, SearchError, SearchReport};
use crate::families::{binom, cycle};
use crate::hypercore::{is_isomorphic, Hypergraph};
use crate::metrics::{delta_report, wiener, Distance};

/// Largest order the exhaustive sweeps support. Order 6 has 2^57
/// candidates and is out of reach.
pub const MAX_ORDER: usize = 5;

fn check_order(n: usize, lo: usize) -> Result<(), SearchError> {
    if (lo..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(SearchError::OutOfRange { what: "order", value: n, range: "2..=5" })
    }
}

#[derive(Default)]
struct OrderStats {
    low_degree: u64,
    size_bound: u64,
    disconnected: u64,
    disconnecting: u64,
    delta: u64,
    witnesses: Vec<u32>,
}

impl OrderStats {
    fn merge(mut self, other: OrderStats) -> OrderStats {
        self.low_degree += other.low_degree;
        self.size_bound += other.size_bound;
        self.disconnected += other.disconnected;
        self.disconnecting += other.disconnecting;
        self.delta += other.delta;
        self.witnesses.extend(other.witnesses);
        self
    }
}

/// Every hypergraph on `n` labeled vertices, `2 <= n <= 5`, tested for the
/// Šoltés property. From order 3 on, candidates with a vertex of degree
/// below 2 or with fewer than `max degree + 2` edges are skipped;
/// [`lemma_check`] confirms by brute force that no witness is lost.
pub fn search_by_order(n: usize) -> Result<SearchReport, SearchError> {
    check_order(n, 2)?;
    let start = Instant::now();
    let e = OrderEngine::new(n);
    let stats = e.sweep(
        |s: &mut OrderStats, mask| {
            if n >= 3 {
                let (mut min, mut max) = (u32::MAX, 0);
                for v in 0..n {
                    let d = e.degree(mask, v);
                    min = min.min(d);
                    max = max.max(d);
                }
                if min < 2 {
                    s.low_degree += 1;
                    return;
                }
                if mask.count_ones() < max + 2 {
                    s.size_bound += 1;
                    return;
                }
            }
            let w = e.wiener(n, mask);
            if w == INF {
                s.disconnected += 1;
                return;
            }
            for v in 0..n {
                let wv = e.wiener(v, mask);
                if wv == INF {
                    s.disconnecting += 1;
                    return;
                }
                if wv != w {
                    s.delta += 1;
                    return;
                }
            }
            s.witnesses.push(mask);
        },
        OrderStats::merge,
    );

    let labeled: Vec<Hypergraph> = stats.witnesses.iter().map(|&m| e.hypergraph(m)).collect();
    let labeled_witnesses = labeled.len() as u64;
    let witnesses = merge_witnesses(labeled);
    let mut checks = witness_checks(&witnesses);
    if n == 5 {
        let c5_full = c5_plus_full();
        checks.push(check(
            "witness is C5 plus the full hyperedge",
            witnesses.len() == 1 && is_isomorphic(&witnesses[0], &c5_full),
        ));
        let p4 = Hypergraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).expect("valid path");
        checks.push(check(
            "every deletion of the witness is P4",
            witnesses.iter().all(|w| (0..5).all(|v| is_isomorphic(&w.delete_vertex(v).expect("order 5"), &p4))),
        ));
    }
    let mut pruning = Vec::new();
    if n >= 3 {
        pruning.push(Prune { filter: "min degree below 2", count: stats.low_degree });
        pruning.push(Prune { filter: "fewer than max degree + 2 edges", count: stats.size_bound });
    }
    pruning.push(Prune { filter: "disconnected", count: stats.disconnected });
    pruning.push(Prune { filter: "disconnecting deletion", count: stats.disconnecting });
    pruning.push(Prune { filter: "nonzero delta", count: stats.delta });
    Ok(SearchReport {
        domain: format!("all hypergraphs on {n} labeled vertices ({} edge subsets)", e.candidates()),
        candidates: e.candidates(),
        witnesses,
        labeled_witnesses,
        pruning,
        checks,
        elapsed: start.elapsed(),
    })
}

pub(crate) fn c5_plus_full() -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = cycle(5).expect("order 5").edges().to_vec();
    edges.push((0..5).collect());
    Hypergraph::new(5, edges).expect("valid")
}

/// Checks every search attaches to its witnesses: the generic Šoltés test,
/// the degree and size facts, and the distance bounds.
pub(crate) fn witness_checks(witnesses: &[Hypergraph]) -> Vec<NamedCheck> {
    let soltes = witnesses.iter().all(|w| delta_report(w).verdict);
    let structure = witnesses.iter().all(|w| {
        let d = w.degrees();
        d.min >= 2 && w.size() >= d.max + 2
    });
    let bounds = witnesses.iter().all(|w| {
        let n = w.order();
        matches!(wiener(w), Distance::Finite(x) if binom(n, 2) as u64 <= x && x <= binom(n + 1, 3) as u64)
    });
    let distinct = witnesses
        .iter()
        .enumerate()
        .all(|(i, a)| witnesses[i + 1..].iter().all(|b| !is_isomorphic(a, b)));
    vec![
        check("witnesses pass the generic Šoltés test", soltes),
        check("witnesses have min degree >= 2 and m >= max degree + 2", structure),
        check("witnesses satisfy C(n,2) <= W <= C(n+1,3)", bounds),
        check("witnesses pairwise non-isomorphic", distinct),
    ]
}

/// Counts from an unpruned sweep of every hypergraph of one order.
///
/// A hypergraph is robust when it and all its vertex deletions are
/// connected. From order 3 on, robust hypergraphs should have minimum
/// degree at least 2 and incidence sets forming an antichain; Šoltés ones
/// should in addition have at least `max degree + 2` edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub order: usize,
    pub hypergraphs: u64,
    pub robust: u64,
    pub soltes: u64,
    pub robust_low_degree: u64,
    pub robust_not_antichain: u64,
    pub soltes_low_degree: u64,
    pub soltes_size_bound: u64,
    pub soltes_not_antichain: u64,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.robust_low_degree == 0
            && self.robust_not_antichain == 0
            && self.soltes_low_degree == 0
            && self.soltes_size_bound == 0
            && self.soltes_not_antichain == 0
    }

    fn merge(mut self, o: LemmaReport) -> LemmaReport {
        self.hypergraphs += o.hypergraphs;
        self.robust += o.robust;
        self.soltes += o.soltes;
        self.robust_low_degree += o.robust_low_degree;
        self.robust_not_antichain += o.robust_not_antichain;
        self.soltes_low_degree += o.soltes_low_degree;
        self.soltes_size_bound += o.soltes_size_bound;
        self.soltes_not_antichain += o.soltes_not_antichain;
        self
    }
}

pub fn lemma_check(n: usize) -> Result<LemmaReport, SearchError> {
    check_order(n, 2)?;
    let e = OrderEngine::new(n);
    let mut report = e.sweep(
        |r: &mut LemmaReport, mask| {
            r.hypergraphs += 1;
            let w = e.wiener(n, mask);
            if w == INF {
                return;
            }
            let mut robust = true;
            let mut soltes = true;
            for v in 0..n {
                let wv = e.wiener(v, mask);
                robust &= wv != INF;
                soltes &= wv == w;
            }
            if n < 3 {
                r.soltes += soltes as u64;
                return;
            }
            if !robust {
                return;
            }
            let inc: Vec<u32> = (0..n).map(|v| mask & e.contains[v]).collect();
            let min = inc.iter().map(|i| i.count_ones()).min().unwrap_or(0);
            let max = inc.iter().map(|i| i.count_ones()).max().unwrap_or(0);
            let antichain = (0..n).all(|u| (0..n).all(|v| u == v || inc[u] & !inc[v] != 0));
            r.robust += 1;
            r.robust_low_degree += (min < 2) as u64;
            r.robust_not_antichain += !antichain as u64;
            if soltes {
                r.soltes += 1;
                r.soltes_low_degree += (min < 2) as u64;
                r.soltes_size_bound += (mask.count_ones() < max + 2) as u64;
                r.soltes_not_antichain += !antichain as u64;
            }
        },
        LemmaReport::merge,
    );
    report.order = n;
    Ok(report)
}

/// Counts from an unpruned sweep checking `C(n,2) <= W <= C(n+1,3)` on
/// every connected hypergraph of order `n`, and that the upper bound is
/// attained only by paths.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundsReport {
    pub order: usize,
    pub connected: u64,
    pub below_lower: u64,
    pub above_upper: u64,
    pub upper_equality: u64,
    pub upper_equality_not_path: u64,
}

impl BoundsReport {
    pub fn holds(&self) -> bool {
        self.below_lower == 0 && self.above_upper == 0 && self.upper_equality_not_path == 0
    }

    fn merge(mut self, o: BoundsReport) -> BoundsReport {
        self.connected += o.connected;
        self.below_lower += o.below_lower;
        self.above_upper += o.above_upper;
        self.upper_equality += o.upper_equality;
        self.upper_equality_not_path += o.upper_equality_not_path;
        self
    }
}

pub fn bounds_check(n: usize) -> Result<BoundsReport, SearchError> {
    check_order(n, 2)?;
    let e = OrderEngine::new(n);
    let lower = binom(n, 2) as u32;
    let upper = binom(n + 1, 3) as u32;
    let mut report = e.sweep(
        |r: &mut BoundsReport, mask| {
            let w = e.wiener(n, mask);
            if w == INF {
                return;
            }
            r.connected += 1;
            r.below_lower += (w < lower) as u64;
            r.above_upper += (w > upper) as u64;
            if w == upper {
                r.upper_equality += 1;
                // connected, 2-uniform, n - 1 edges and max degree 2
                let path = mask & e.big_edges == 0
                    && mask.count_ones() as usize == n - 1
                    && (0..n).all(|v| e.degree(mask, v) <= 2);
                r.upper_equality_not_path += !path as u64;
            }
        },
        BoundsReport::merge,
    );
    report.order = n;
    Ok(report)
}
