#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use soltes::Hypergraph;

fn random_edge<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let k = if rng.gen_bool(0.6) { 2 } else { rng.gen_range(2..=n) };
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(k);
    all.sort_unstable();
    all
}

fn build(n: usize, mut edges: Vec<Vec<usize>>) -> Hypergraph {
    for e in edges.iter_mut() {
        e.sort_unstable();
        e.dedup();
    }
    edges.sort();
    edges.dedup();
    Hypergraph::new(n, edges).expect("generated edges are valid")
}

/// Any hypergraph on `n >= 2` vertices, possibly disconnected.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize) -> Hypergraph {
    let m = rng.gen_range(0..=2 * n);
    build(n, (0..m).map(|_| random_edge(rng, n)).collect())
}

/// A connected hypergraph on `n >= 2` vertices: a random spanning
/// hypertree plus a random number of extra edges. Plain trees and paths
/// come up regularly.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize) -> Hypergraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    let style = rng.gen_range(0..4);
    for i in 1..n {
        let v = order[i];
        let anchor = match style {
            0 => order[i - 1],
            _ => order[rng.gen_range(0..i)],
        };
        let mut e = vec![v, anchor];
        if style == 3 {
            for &u in &order[..i] {
                if rng.gen_bool(0.2) {
                    e.push(u);
                }
            }
        }
        edges.push(e);
    }
    let extra = if style == 0 { 0 } else { rng.gen_range(0..=n) };
    for _ in 0..extra {
        edges.push(random_edge(rng, n));
    }
    build(n, edges)
}

/// True when `h` is the path P_n as a 2-uniform hypergraph.
pub fn is_path(h: &Hypergraph) -> bool {
    let d = h.degrees();
    h.is_two_uniform() && h.size() + 1 == h.order() && d.max <= 2 && h.is_connected()
}
