use std::collections::HashSet;

use super::Hypergraph;

/// Per-vertex invariant used to restrict candidate images: degree, the
/// sorted sizes of incident edges and the sorted co-degree row.
type Signature = (usize, Vec<usize>, Vec<u32>);

struct Prepared<'a> {
    h: &'a Hypergraph,
    inc: Vec<Vec<usize>>,
    codeg: Vec<u32>,
    sig: Vec<Signature>,
}

impl<'a> Prepared<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let n = h.order();
        let inc = h.incidence();
        let mut codeg = vec![0u32; n * n];
        for e in h.edges() {
            for &a in e {
                for &b in e {
                    if a != b {
                        codeg[a * n + b] += 1;
                    }
                }
            }
        }
        let sig = (0..n)
            .map(|v| {
                let mut sizes: Vec<usize> = inc[v].iter().map(|&e| h.edges()[e].len()).collect();
                sizes.sort_unstable();
                let mut row: Vec<u32> = codeg[v * n..(v + 1) * n].to_vec();
                row.sort_unstable();
                (inc[v].len(), sizes, row)
            })
            .collect();
        Prepared { h, inc, codeg, sig }
    }

    fn codeg(&self, a: usize, b: usize) -> u32 {
        self.codeg[a * self.h.order() + b]
    }
}

/// True iff some vertex bijection maps the edge set of `a` onto that of `b`.
pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Backtracking search for a vertex map `a -> b` carrying edges to edges.
/// Candidates are pruned by degree, incident edge-size profile and
/// co-degree consistency with the vertices mapped so far.
pub fn find_isomorphism(a: &Hypergraph, b: &Hypergraph) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.size() != b.size() {
        return None;
    }
    let mut sa: Vec<usize> = a.edges().iter().map(Vec::len).collect();
    let mut sb: Vec<usize> = b.edges().iter().map(Vec::len).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let pa = Prepared::new(a);
    let pb = Prepared::new(b);
    let mut ga = pa.sig.clone();
    let mut gb = pb.sig.clone();
    ga.sort();
    gb.sort();
    if ga != gb {
        return None;
    }

    let n = a.order();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| pb.sig[w] == pa.sig[v]).collect())
        .collect();
    let order = placement_order(&pa, &candidates);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // edges of `a` that become fully mapped once order[i] is placed
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ei, e) in a.edges().iter().enumerate() {
        let last = e.iter().map(|&v| position[v]).max().unwrap_or(0);
        closing[last].push(ei);
    }
    let edge_set: HashSet<&[usize]> = b.edges().iter().map(Vec::as_slice).collect();

    let mut state = Search {
        pa: &pa,
        pb: &pb,
        order: &order,
        candidates: &candidates,
        closing: &closing,
        edge_set: &edge_set,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if state.extend(0) {
        Some(state.map)
    } else {
        None
    }
}

/// Places the most constrained vertices first, preferring vertices that
/// co-occur with many already placed ones.
fn placement_order(pa: &Prepared<'_>, candidates: &[Vec<usize>]) -> Vec<usize> {
    let n = pa.h.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), candidates[v].len(), v))
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &e in &pa.inc[next] {
            for &w in &pa.h.edges()[e] {
                links[w] += 1;
            }
        }
    }
    order
}

struct Search<'s, 'a> {
    pa: &'s Prepared<'a>,
    pb: &'s Prepared<'a>,
    order: &'s [usize],
    candidates: &'s [Vec<usize>],
    closing: &'s [Vec<usize>],
    edge_set: &'s HashSet<&'a [usize]>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_, '_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for &w in &self.candidates[v] {
            if self.used[w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.pa.codeg(v, u) == self.pb.codeg(w, self.map[u]));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.closed_edges_ok(depth) && self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn closed_edges_ok(&self, depth: usize) -> bool {
        let mut image = Vec::new();
        self.closing[depth].iter().all(|&ei| {
            image.clear();
            image.extend(self.pa.h.edges()[ei].iter().map(|&x| self.map[x]));
            image.sort_unstable();
            self.edge_set.contains(image.as_slice())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Hypergraph {
        use rand::Rng;
        let mut edges: Vec<Vec<usize>> = Vec::new();
        while edges.len() < m {
            let k = rng.gen_range(2..=n.min(4));
            let mut e: Vec<usize> = (0..n).collect::<Vec<_>>().choose_multiple(rng, k).copied().collect();
            e.sort_unstable();
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
        Hypergraph::new(n, edges).unwrap()
    }

    #[test]
    fn relabelled_copies_are_isomorphic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let h = random_hypergraph(&mut rng, 9, 8);
            let mut perm: Vec<usize> = (0..9).collect();
            perm.shuffle(&mut rng);
            let g = h.relabel(&perm).unwrap();
            let map = find_isomorphism(&h, &g).expect("relabelled copy");
            assert_eq!(h.relabel(&map).unwrap(), g);
            assert!(is_isomorphic(&g, &h));
        }
    }

    #[test]
    fn different_edge_counts() {
        let c5: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
        let mut with_full = c5.clone();
        with_full.push((0..5).collect());
        let a = Hypergraph::new(5, with_full).unwrap();
        let b = Hypergraph::new(5, c5).unwrap();
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn same_degrees_different_structure() {
        // C6 versus two disjoint triangles: both 2-regular on six vertices
        let c6 = Hypergraph::new(6, (0..6).map(|i| vec![i, (i + 1) % 6]).collect()).unwrap();
        let tt = Hypergraph::from_pairs(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&c6, &tt));
    }

    #[test]
    fn bibd_drawing_matches_dual_of_k5_3() {
        // colour classes of the 10-column incidence drawing
        let drawn = Hypergraph::new(
            10,
            vec![
                vec![0, 1, 2, 3, 4, 5],
                vec![0, 1, 2, 6, 7, 8],
                vec![2, 3, 4, 7, 8, 9],
                vec![1, 4, 5, 6, 7, 9],
                vec![0, 3, 5, 6, 8, 9],
            ],
        )
        .unwrap();
        let dual = Hypergraph::clique(5, 3).unwrap().dual().unwrap().hypergraph;
        assert!(is_isomorphic(&dual, &drawn));
    }
}
