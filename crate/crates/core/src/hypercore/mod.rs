//! Hypergraph representation and structural operations.
//!
//! A [`Hypergraph`] has dense vertex ids `0..n` and a canonically ordered
//! list of hyperedges. Every edge holds at least two vertices, its ids are
//! strictly increasing, and no edge appears twice. Those invariants are
//! enforced by [`Hypergraph::new`]; [`validate`] reports them on raw data.

mod iso;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use iso::{find_isomorphism, is_isomorphic};

/// A single violated hypergraph invariant. Edge indices refer to the
/// position in the list that was validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoVertices,
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    SingletonEdge { edge: usize, len: usize },
    UnsortedEdge { edge: usize },
    DuplicateEdge { edge: usize, first: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoVertices => write!(f, "hypergraph has no vertices"),
            Violation::VertexOutOfRange { edge, vertex, n } => {
                write!(f, "edge {edge}: vertex id {vertex} is not below n = {n}")
            }
            Violation::SingletonEdge { edge, len } => {
                write!(f, "edge {edge}: has {len} vertices, at least 2 required")
            }
            Violation::UnsortedEdge { edge } => {
                write!(f, "edge {edge}: vertex ids are not strictly increasing")
            }
            Violation::DuplicateEdge { edge, first } => {
                write!(f, "edge {edge}: duplicates edge {first}")
            }
        }
    }
}

impl Violation {
    /// The same violation attributed to edge `index` of a larger list.
    pub(crate) fn at_edge(self, index: usize) -> Violation {
        match self {
            Violation::NoVertices => Violation::NoVertices,
            Violation::VertexOutOfRange { vertex, n, .. } => {
                Violation::VertexOutOfRange { edge: index, vertex, n }
            }
            Violation::SingletonEdge { len, .. } => Violation::SingletonEdge { edge: index, len },
            Violation::UnsortedEdge { .. } => Violation::UnsortedEdge { edge: index },
            Violation::DuplicateEdge { first, .. } => Violation::DuplicateEdge { edge: index, first },
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("invalid hypergraph: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("deleting the only vertex leaves an empty hypergraph")]
    WouldBeEmpty,
    #[error("vertex {vertex} has degree {degree}; the dual needs every degree to be at least 2")]
    LowDegree { vertex: usize, degree: usize },
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("clique K_{n}^({r}) requires 2 <= r <= n")]
    CliqueParams { n: usize, r: usize },
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// Checks raw hypergraph data against every invariant and returns all
/// violations found. An empty list means the data is a valid hypergraph.
pub fn validate(n: usize, edges: &[Vec<usize>]) -> Vec<Violation> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Violation::NoVertices);
    }
    let mut seen: HashMap<&[usize], usize> = HashMap::new();
    for (i, e) in edges.iter().enumerate() {
        if let Some(&vertex) = e.iter().find(|&&x| x >= n) {
            out.push(Violation::VertexOutOfRange { edge: i, vertex, n });
        }
        if e.len() < 2 {
            out.push(Violation::SingletonEdge { edge: i, len: e.len() });
        }
        if e.windows(2).any(|w| w[0] >= w[1]) {
            out.push(Violation::UnsortedEdge { edge: i });
        }
        if let Some(&first) = seen.get(e.as_slice()) {
            out.push(Violation::DuplicateEdge { edge: i, first });
        } else {
            seen.insert(e.as_slice(), i);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Per-vertex degrees with the minimum and maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSummary {
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Uniformity {
    Uniform(usize),
    Mixed,
}

/// Result of [`Hypergraph::dual`]: the dual itself plus the number of
/// vertices whose incidence set repeated an earlier one and was merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dual {
    pub hypergraph: Hypergraph,
    pub collapsed: usize,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting the ids inside each edge and then the
    /// edge list. Repeated ids inside an edge are reported as an unsorted
    /// edge.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let mut edges = edges;
        for e in edges.iter_mut() {
            e.sort_unstable();
        }
        let violations = validate(n, &edges);
        if !violations.is_empty() {
            return Err(HypergraphError::Invalid(violations));
        }
        edges.sort();
        Ok(Hypergraph { n, edges })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self, HypergraphError> {
        Self::new(n, Vec::new())
    }

    /// Builds from pairs; convenient for 2-uniform inputs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, HypergraphError> {
        Self::new(n, pairs.iter().map(|&(a, b)| vec![a, b]).collect())
    }

    /// The complete r-uniform hypergraph on n vertices, edges in
    /// lexicographic order.
    pub fn clique(n: usize, r: usize) -> Result<Self, HypergraphError> {
        if r < 2 || r > n {
            return Err(HypergraphError::CliqueParams { n, r });
        }
        let mut edges = Vec::new();
        let mut comb: Vec<usize> = (0..r).collect();
        loop {
            edges.push(comb.clone());
            // advance to the next r-combination in lexicographic order
            let mut i = r;
            while i > 0 && comb[i - 1] == n - r + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            comb[i - 1] += 1;
            for j in i..r {
                comb[j] = comb[j - 1] + 1;
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(edge))
            .is_ok()
    }

    /// For every vertex, the indices of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn degrees(&self) -> DegreeSummary {
        let mut degrees = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                degrees[v] += 1;
            }
        }
        let min = degrees.iter().copied().min().unwrap_or(0);
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeSummary { degrees, min, max }
    }

    /// The common degree if every vertex has the same degree.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degrees();
        (d.min == d.max).then_some(d.min)
    }

    pub fn uniformity(&self) -> Result<Uniformity, HypergraphError> {
        let first = self.edges.first().ok_or(HypergraphError::NoEdges)?.len();
        if self.edges.iter().all(|e| e.len() == first) {
            Ok(Uniformity::Uniform(first))
        } else {
            Ok(Uniformity::Mixed)
        }
    }

    /// Whether every vertex is reachable from vertex 0 through alternating
    /// vertex-edge walks.
    pub fn is_connected(&self) -> bool {
        let inc = self.incidence();
        let mut seen_v = vec![false; self.n];
        let mut seen_e = vec![false; self.edges.len()];
        let mut stack = vec![0];
        seen_v[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &ei in &inc[v] {
                if std::mem::replace(&mut seen_e[ei], true) {
                    continue;
                }
                for &w in &self.edges[ei] {
                    if !std::mem::replace(&mut seen_v[w], true) {
                        reached += 1;
                        stack.push(w);
                    }
                }
            }
        }
        reached == self.n
    }

    /// Removes `v` together with every edge containing it. Higher ids shift
    /// down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Hypergraph, HypergraphError> {
        if v >= self.n {
            return Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if self.n == 1 {
            return Err(HypergraphError::WouldBeEmpty);
        }
        // relabelling is monotone, so the edge list stays sorted
        let edges = self
            .edges
            .iter()
            .filter(|e| e.binary_search(&v).is_err())
            .map(|e| e.iter().map(|&x| if x > v { x - 1 } else { x }).collect())
            .collect();
        Ok(Hypergraph { n: self.n - 1, edges })
    }

    /// The dual: one vertex per edge, one hyperedge per vertex holding the
    /// indices of its incident edges. Identical incidence sets are merged.
    pub fn dual(&self) -> Result<Dual, HypergraphError> {
        let inc = self.incidence();
        if let Some((vertex, set)) = inc.iter().enumerate().find(|(_, s)| s.len() < 2) {
            return Err(HypergraphError::LowDegree { vertex, degree: set.len() });
        }
        let mut edges = inc;
        edges.sort();
        let before = edges.len();
        edges.dedup();
        let collapsed = before - edges.len();
        Ok(Dual {
            hypergraph: Hypergraph { n: self.edges.len(), edges },
            collapsed,
        })
    }

    /// The underlying graph: every 2-subset of every edge.
    pub fn two_section(&self) -> Hypergraph {
        let mut pairs = Vec::new();
        for e in &self.edges {
            for (i, &a) in e.iter().enumerate() {
                for &b in &e[i + 1..] {
                    pairs.push(vec![a, b]);
                }
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        Hypergraph { n: self.n, edges: pairs }
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph, HypergraphError> {
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v]).collect())
            .collect();
        Hypergraph::new(self.n, edges)
    }

    pub fn is_two_uniform(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, v) in e.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5_plus_full() -> Hypergraph {
        let mut edges: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
        edges.push((0..5).collect());
        Hypergraph::new(5, edges).unwrap()
    }

    fn cycle(n: usize) -> Hypergraph {
        Hypergraph::new(n, (0..n).map(|i| vec![i, (i + 1) % n]).collect()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate(3, &[vec![0, 1, 2]]).is_empty());
        assert_eq!(
            validate(3, &[vec![0, 3]]),
            vec![Violation::VertexOutOfRange { edge: 0, vertex: 3, n: 3 }]
        );
        assert_eq!(
            validate(3, &[vec![1]]),
            vec![Violation::SingletonEdge { edge: 0, len: 1 }]
        );
        assert_eq!(validate(0, &[]), vec![Violation::NoVertices]);
        let v = validate(4, &[vec![2, 1], vec![0, 1], vec![0, 1]]);
        assert!(v.contains(&Violation::UnsortedEdge { edge: 0 }));
        assert!(v.contains(&Violation::DuplicateEdge { edge: 2, first: 1 }));
    }

    #[test]
    fn new_canonicalizes() {
        let h = Hypergraph::new(4, vec![vec![3, 2], vec![1, 0, 2]]).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![2, 3]]);
        assert!(Hypergraph::new(3, vec![vec![0, 0, 2]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 1], vec![1, 0]]).is_err());
    }

    #[test]
    fn delete_vertex_examples() {
        let k3 = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let d = k3.delete_vertex(0).unwrap();
        assert_eq!((d.order(), d.size()), (2, 0));

        let p4 = c5_plus_full().delete_vertex(0).unwrap();
        assert_eq!(p4.edges(), &[vec![0, 1], vec![1, 2], vec![2, 3]]);

        let p10 = cycle(11).delete_vertex(0).unwrap();
        let expected: Vec<Vec<usize>> = (0..9).map(|i| vec![i, i + 1]).collect();
        assert_eq!(p10.edges(), expected.as_slice());

        assert_eq!(
            k3.delete_vertex(3),
            Err(HypergraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Hypergraph::empty(1).unwrap().delete_vertex(0),
            Err(HypergraphError::WouldBeEmpty)
        );
    }

    #[test]
    fn dual_of_k4() {
        let k4 = Hypergraph::clique(4, 2).unwrap();
        let d = k4.dual().unwrap();
        assert_eq!(d.collapsed, 0);
        assert_eq!(d.hypergraph.order(), 6);
        assert_eq!(d.hypergraph.size(), 4);
        assert_eq!(d.hypergraph.uniformity(), Ok(Uniformity::Uniform(3)));
    }

    #[test]
    fn dual_of_k5_3_is_the_bibd() {
        let d = Hypergraph::clique(5, 3).unwrap().dual().unwrap().hypergraph;
        assert_eq!((d.order(), d.size()), (10, 5));
        assert_eq!(d.uniformity(), Ok(Uniformity::Uniform(6)));
        assert_eq!(d.regularity(), Some(3));
        for (i, a) in d.edges().iter().enumerate() {
            for b in &d.edges()[i + 1..] {
                let common = a.iter().filter(|x| b.contains(x)).count();
                assert_eq!(common, 3);
            }
        }
    }

    #[test]
    fn dual_rejects_low_degree_and_collapses_twins() {
        let path = Hypergraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            path.dual(),
            Err(HypergraphError::LowDegree { vertex: 0, degree: 1 })
        );
        // vertices 0 and 1 share incidence set {0, 1}
        let twins = Hypergraph::new(3, vec![vec![0, 1, 2], vec![0, 1]]).unwrap();
        assert!(twins.dual().is_err());
        let twins = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![2, 3]]).unwrap();
        let d = twins.dual().unwrap();
        assert_eq!(d.collapsed, 1);
        assert_eq!(d.hypergraph.size(), 3);
    }

    #[test]
    fn two_section_examples() {
        let t = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap().two_section();
        assert_eq!(t.edges(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        let c = cycle(7);
        assert_eq!(c.two_section(), c);
    }

    #[test]
    fn connectivity() {
        assert!(!Hypergraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Hypergraph::new(4, vec![vec![0, 1, 2, 3]]).unwrap().is_connected());
        assert!(c5_plus_full().is_connected());
        assert!(Hypergraph::empty(1).unwrap().is_connected());
        assert!(!Hypergraph::empty(2).unwrap().is_connected());
    }

    #[test]
    fn degrees_and_uniformity() {
        let k53 = Hypergraph::clique(5, 3).unwrap();
        let d = k53.degrees();
        assert!(d.degrees.iter().all(|&x| x == 6));
        assert_eq!(c5_plus_full().uniformity(), Ok(Uniformity::Mixed));
        assert_eq!(Hypergraph::clique(6, 3).unwrap().uniformity(), Ok(Uniformity::Uniform(3)));
        assert_eq!(Hypergraph::empty(3).unwrap().uniformity(), Err(HypergraphError::NoEdges));
    }

    #[test]
    fn clique_examples() {
        assert_eq!(Hypergraph::clique(4, 2).unwrap().size(), 6);
        let k53 = Hypergraph::clique(5, 3).unwrap();
        assert_eq!(k53.size(), 10);
        assert!(k53.edges().windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Hypergraph::clique(3, 3).unwrap().edges(), &[vec![0, 1, 2]]);
        assert!(Hypergraph::clique(3, 4).is_err());
        assert!(Hypergraph::clique(3, 1).is_err());
    }
}
