//! Hop distances, Wiener index, transmission, diameter and the per-vertex
//! deletion report that decides the Šoltés property.
//!
//! Distances are computed by breadth-first search over the vertex-edge
//! incidence structure: a vertex expands into its unvisited edges, an edge
//! into its unvisited vertices, and every edge layer crossed costs one hop.
//! This never materializes the 2-section.

use std::fmt;

use rayon::prelude::*;

use crate::hypercore::{Hypergraph, HypergraphError};

/// A hop count or total that may be infinite because the hypergraph is
/// disconnected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Distances from one source to every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<Distance>,
}

/// One deletion of [`DeltaReport`]. `delta` is `W(H) - W(H - v)` and is
/// present only when both totals are finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionRow {
    pub vertex: usize,
    pub w_minus: Distance,
    pub delta: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaReport {
    pub w: Distance,
    pub rows: Vec<DeletionRow>,
    pub verdict: bool,
}

impl DeltaReport {
    /// Smallest and largest finite delta.
    pub fn delta_range(&self) -> Option<(i64, i64)> {
        let mut it = self.rows.iter().filter_map(|r| r.delta);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn zero_count(&self) -> usize {
        self.rows.iter().filter(|r| r.delta == Some(0)).count()
    }

    pub fn disconnecting_deletions(&self) -> usize {
        self.rows.iter().filter(|r| !r.w_minus.is_finite()).count()
    }
}

const UNSEEN: u32 = u32::MAX;

/// Reusable BFS buffers over a fixed hypergraph.
struct Bfs<'a> {
    h: &'a Hypergraph,
    inc: Vec<Vec<usize>>,
    dist: Vec<u32>,
    edge_seen: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Bfs<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        Bfs {
            h,
            inc: h.incidence(),
            dist: vec![UNSEEN; h.order()],
            edge_seen: vec![false; h.size()],
            queue: Vec::with_capacity(h.order()),
        }
    }

    /// Fills `self.dist` from `source`; returns the number reached.
    fn run(&mut self, source: usize) -> usize {
        self.dist.fill(UNSEEN);
        self.edge_seen.fill(false);
        self.queue.clear();
        self.dist[source] = 0;
        self.queue.push(source);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            let next = self.dist[v] + 1;
            for &ei in &self.inc[v] {
                if std::mem::replace(&mut self.edge_seen[ei], true) {
                    continue;
                }
                for &w in &self.h.edges()[ei] {
                    if self.dist[w] == UNSEEN {
                        self.dist[w] = next;
                        self.queue.push(w);
                    }
                }
            }
        }
        self.queue.len()
    }

    /// Sum and maximum of the distances from `source`, or `None` when some
    /// vertex is unreachable.
    fn sum_and_max(&mut self, source: usize) -> Option<(u64, u64)> {
        if self.run(source) < self.h.order() {
            return None;
        }
        let mut sum = 0u64;
        let mut max = 0u32;
        for &d in &self.dist {
            sum = sum.checked_add(u64::from(d)).expect("total distance overflows u64");
            max = max.max(d);
        }
        Some((sum, u64::from(max)))
    }
}

fn check_vertex(h: &Hypergraph, v: usize) -> Result<(), HypergraphError> {
    if v >= h.order() {
        Err(HypergraphError::VertexOutOfRange { vertex: v, n: h.order() })
    } else {
        Ok(())
    }
}

pub fn distances_from(h: &Hypergraph, v: usize) -> Result<DistanceRow, HypergraphError> {
    check_vertex(h, v)?;
    let mut bfs = Bfs::new(h);
    bfs.run(v);
    let dist = bfs
        .dist
        .iter()
        .map(|&d| if d == UNSEEN { Distance::Infinite } else { Distance::Finite(u64::from(d)) })
        .collect();
    Ok(DistanceRow { source: v, dist })
}

/// Wiener index and diameter in one sweep.
fn wiener_and_diameter(h: &Hypergraph) -> Option<(u64, u64)> {
    let mut bfs = Bfs::new(h);
    let mut total = 0u64;
    let mut diam = 0u64;
    for s in 0..h.order() {
        let (sum, max) = bfs.sum_and_max(s)?;
        total = total.checked_add(sum).expect("total distance overflows u64");
        diam = diam.max(max);
    }
    Some((total / 2, diam))
}

/// Sum of distances over unordered vertex pairs.
///
/// # Panics
///
/// If the total does not fit in a `u64`.
pub fn wiener(h: &Hypergraph) -> Distance {
    match wiener_and_diameter(h) {
        Some((w, _)) => Distance::Finite(w),
        None => Distance::Infinite,
    }
}

/// Sum of distances from `v` to every other vertex.
pub fn transmission(h: &Hypergraph, v: usize) -> Result<Distance, HypergraphError> {
    check_vertex(h, v)?;
    let mut bfs = Bfs::new(h);
    Ok(match bfs.sum_and_max(v) {
        Some((sum, _)) => Distance::Finite(sum),
        None => Distance::Infinite,
    })
}

pub fn diameter(h: &Hypergraph) -> Distance {
    match wiener_and_diameter(h) {
        Some((_, d)) => Distance::Finite(d),
        None => Distance::Infinite,
    }
}

/// Number of unordered pairs at each distance (index = distance), or
/// `None` if the hypergraph is disconnected.
pub fn distance_profile(h: &Hypergraph) -> Option<Vec<u64>> {
    let mut bfs = Bfs::new(h);
    let mut counts: Vec<u64> = Vec::new();
    for s in 0..h.order() {
        if bfs.run(s) < h.order() {
            return None;
        }
        for (t, &d) in bfs.dist.iter().enumerate() {
            if t > s {
                let d = d as usize;
                if counts.len() <= d {
                    counts.resize(d + 1, 0);
                }
                counts[d] += 1;
            }
        }
    }
    Some(counts)
}

/// Computes `W(H)` and, for every vertex, `W(H - v)` from scratch. The
/// deletions are evaluated in parallel; rows come back in vertex order.
pub fn delta_report(h: &Hypergraph) -> DeltaReport {
    let w = wiener(h);
    if h.order() < 2 {
        // K1 is excluded by convention
        return DeltaReport { w, rows: Vec::new(), verdict: false };
    }
    let rows: Vec<DeletionRow> = (0..h.order())
        .into_par_iter()
        .map(|v| {
            let minus = h.delete_vertex(v).expect("vertex in range, order >= 2");
            let w_minus = wiener(&minus);
            let delta = match (w, w_minus) {
                (Distance::Finite(a), Distance::Finite(b)) => Some(a as i64 - b as i64),
                _ => None,
            };
            DeletionRow { vertex: v, w_minus, delta }
        })
        .collect();
    let verdict = w.is_finite() && rows.iter().all(|r| r.delta == Some(0));
    DeltaReport { w, rows, verdict }
}

/// Connected, order at least 2, and `W(H - v) = W(H)` finite for every `v`.
pub fn is_soltes(h: &Hypergraph) -> bool {
    delta_report(h).verdict
}
