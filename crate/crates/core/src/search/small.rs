//! Bitmask machinery for graphs and hypergraphs on at most 32 vertices.
//!
//! Hypergraph distances equal the distances of the 2-section, so every
//! search here reduces a candidate to one or more 2-section adjacency masks
//! and sums BFS layers with word operations.

use std::ops::Range;

use rayon::prelude::*;

use crate::hypercore::Hypergraph;

pub(crate) const INF: u32 = u32::MAX;

/// Wiener index of the graph induced on `alive`, or [`INF`] when that graph
/// is disconnected. `adj[u]` may mention dead vertices.
pub(crate) fn wiener_masks(adj: &[u32], alive: u32) -> u32 {
    let mut total = 0;
    let mut rest = alive;
    while rest != 0 {
        let s = rest.trailing_zeros();
        rest &= rest - 1;
        let mut seen = 1u32 << s;
        let mut frontier = seen;
        let mut depth = 0;
        while frontier != 0 {
            depth += 1;
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                next |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            next &= alive & !seen;
            // count only pairs towards higher ids
            total += depth * (next & rest).count_ones();
            seen |= next;
            frontier = next;
        }
        if seen != alive {
            return INF;
        }
    }
    total
}

/// Adjacency masks of a graph given as a mask over `pairs`.
pub(crate) fn adjacency_of_pairs(pairs: &[(u32, u32)], code: u32, n: usize) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    let mut c = code;
    while c != 0 {
        let (a, b) = pairs[c.trailing_zeros() as usize];
        adj[a as usize] |= 1 << b;
        adj[b as usize] |= 1 << a;
        c &= c - 1;
    }
    adj
}

/// All pairs `a < b` of `0..n`, in lexicographic order.
pub(crate) fn pairs(n: usize) -> Vec<(u32, u32)> {
    let n = n as u32;
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Mask over `pairs(n)` of the pairs inside the vertex set `set`.
pub(crate) fn pair_code(pairs: &[(u32, u32)], set: u32) -> u32 {
    pairs
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| set >> a & 1 == 1 && set >> b & 1 == 1)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

/// Every hypergraph on `n <= 5` labeled vertices is a mask over the
/// `2^n - n - 1` possible edges. For each slot (one per deleted vertex,
/// plus slot `n` for no deletion) two half-width lookup tables give the
/// 2-section as a pair code, and a third table maps pair codes to Wiener
/// indices.
pub(crate) struct OrderEngine {
    pub n: usize,
    /// Edge universe as vertex masks, ordered by size then lexicographically.
    pub universe: Vec<u32>,
    /// Per vertex, the universe positions of the edges containing it.
    pub contains: Vec<u32>,
    /// Universe positions of edges with more than two vertices.
    pub big_edges: u32,
    low_bits: usize,
    lo: Vec<Vec<u16>>,
    hi: Vec<Vec<u16>>,
    wtab: Vec<Vec<u32>>,
}

impl OrderEngine {
    pub fn new(n: usize) -> OrderEngine {
        assert!((1..=5).contains(&n), "bitmask engine handles orders 1..=5");
        let mut universe: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() >= 2).collect();
        universe.sort_by_key(|&s| (s.count_ones(), lex_key(s)));
        let contains = (0..n)
            .map(|v| {
                universe
                    .iter()
                    .enumerate()
                    .filter(|(_, &s)| s >> v & 1 == 1)
                    .fold(0, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        let big_edges = universe
            .iter()
            .enumerate()
            .filter(|(_, s)| s.count_ones() > 2)
            .fold(0, |acc, (i, _)| acc | 1 << i);
        let pairs = pairs(n);
        let codes: Vec<u16> = universe.iter().map(|&s| pair_code(&pairs, s) as u16).collect();
        let low_bits = universe.len() / 2;
        let high_bits = universe.len() - low_bits;
        let table = |slot: usize, offset: usize, bits: usize| -> Vec<u16> {
            (0u32..1 << bits)
                .map(|m| {
                    (0..bits)
                        .filter(|&i| m >> i & 1 == 1)
                        .map(|i| i + offset)
                        .filter(|&i| slot == n || universe[i] >> slot & 1 == 0)
                        .fold(0, |acc, i| acc | codes[i])
                })
                .collect()
        };
        let lo = (0..=n).map(|slot| table(slot, 0, low_bits)).collect();
        let hi = (0..=n).map(|slot| table(slot, low_bits, high_bits)).collect();
        let all: u32 = (1 << n) - 1;
        let wtab = (0..=n)
            .map(|slot| {
                let alive = if slot == n { all } else { all & !(1 << slot) };
                (0u32..1 << pairs.len())
                    .map(|code| wiener_masks(&adjacency_of_pairs(&pairs, code, n), alive))
                    .collect()
            })
            .collect();
        OrderEngine { n, universe, contains, big_edges, low_bits, lo, hi, wtab }
    }

    pub fn candidates(&self) -> u64 {
        1 << self.universe.len()
    }

    /// `W(H)` for slot `n`, `W(H - v)` for slot `v`; [`INF`] if disconnected.
    #[inline]
    pub fn wiener(&self, slot: usize, mask: u32) -> u32 {
        let low = mask & ((1 << self.low_bits) - 1);
        let code = self.lo[slot][low as usize] | self.hi[slot][(mask >> self.low_bits) as usize];
        self.wtab[slot][code as usize]
    }

    #[inline]
    pub fn degree(&self, mask: u32, v: usize) -> u32 {
        (mask & self.contains[v]).count_ones()
    }

    pub fn hypergraph(&self, mask: u32) -> Hypergraph {
        let edges = (0..self.universe.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| (0..self.n).filter(|&v| self.universe[i] >> v & 1 == 1).collect())
            .collect();
        Hypergraph::new(self.n, edges).expect("universe edges are valid")
    }

    /// Runs `visit` over contiguous ranges of the mask space in parallel and
    /// merges the per-range accumulators. `merge` must be order-insensitive
    /// for the result to be reproducible.
    pub fn sweep<A, F, M>(&self, visit: F, merge: M) -> A
    where
        A: Default + Send,
        F: Fn(&mut A, u32) + Sync,
        M: Fn(A, A) -> A + Sync,
    {
        let total = self.candidates();
        let chunk = total.min(1 << 16);
        let ranges: Vec<Range<u64>> = (0..total / chunk).map(|c| c * chunk..(c + 1) * chunk).collect();
        ranges
            .into_par_iter()
            .map(|r| {
                let mut acc = A::default();
                for mask in r {
                    visit(&mut acc, mask as u32);
                }
                acc
            })
            .reduce(A::default, &merge)
    }
}

fn lex_key(s: u32) -> Vec<u32> {
    (0..32).filter(|&v| s >> v & 1 == 1).collect()
}
