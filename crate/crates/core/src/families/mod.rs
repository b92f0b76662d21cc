//! Constructors for the Šoltés families and named examples, plus the dual
//! transforms used when screening graph censuses.

mod theorem;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::hypercore::{Hypergraph, HypergraphError};
use crate::metrics::is_soltes;

pub use theorem::{theorem_order_n, ATTEMPT_BUDGET};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family}: parameter {value} out of range ({expected})")]
    Param { family: Family, value: usize, expected: &'static str },
    #[error("{family} takes {expected} parameter(s), got {got}")]
    Arity { family: Family, expected: usize, got: usize },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("order {n}: no verified instance after {attempts} attempts (best attempt left {best_defect} unmet common-neighbour conditions)")]
    AttemptBudgetExhausted { n: usize, attempts: usize, best_defect: usize },
    #[error("{0}: construction failed its own verification")]
    Verification(&'static str),
    #[error("graph is not {0}")]
    NotCompatible(&'static str),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    SmallExample,
    TheoremOrderN,
    Interval,
    Steiner2413,
    HemiDodecahedron,
    DualK53,
    DuplicatedDualK4,
    TwelveVertex6Uniform,
    MultipartiteHk,
    Cycle,
    Path,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::SmallExample,
        Family::TheoremOrderN,
        Family::Interval,
        Family::Steiner2413,
        Family::HemiDodecahedron,
        Family::DualK53,
        Family::DuplicatedDualK4,
        Family::TwelveVertex6Uniform,
        Family::MultipartiteHk,
        Family::Cycle,
        Family::Path,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::SmallExample => "small-example",
            Family::TheoremOrderN => "theorem-order-n",
            Family::Interval => "interval",
            Family::Steiner2413 => "steiner-2-4-13",
            Family::HemiDodecahedron => "hemi-dodecahedron",
            Family::DualK53 => "dual-k5-3",
            Family::DuplicatedDualK4 => "duplicated-dual-k4",
            Family::TwelveVertex6Uniform => "twelve-vertex-6uniform",
            Family::MultipartiteHk => "multipartite-hk",
            Family::Cycle => "cycle",
            Family::Path => "path",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::SmallExample
            | Family::TheoremOrderN
            | Family::Interval
            | Family::MultipartiteHk
            | Family::Cycle
            | Family::Path => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.replace('_', "-").to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == wanted)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// A family name with its integer parameters. The seed only affects
/// [`Family::TheoremOrderN`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>, seed: Option<u64>) -> Result<Self, FamilyError> {
        if params.len() != family.arity() {
            return Err(FamilyError::Arity { family, expected: family.arity(), got: params.len() });
        }
        Ok(FamilySpec { family, params, seed })
    }

    pub fn build(&self) -> Result<Hypergraph, FamilyError> {
        let p = |i: usize| self.params[i];
        match self.family {
            Family::SmallExample => small_example(p(0)),
            Family::TheoremOrderN => theorem_order_n(p(0), self.seed),
            Family::Interval => interval_family(p(0)),
            Family::Steiner2413 => steiner_2_4_13(),
            Family::HemiDodecahedron => Ok(hemi_dodecahedron()),
            Family::DualK53 => Ok(dual_k5_3()),
            Family::DuplicatedDualK4 => Ok(duplicated_dual_k4()),
            Family::TwelveVertex6Uniform => Ok(twelve_vertex_6uniform()),
            Family::MultipartiteHk => multipartite_hk(p(0)),
            Family::Cycle => cycle(p(0)),
            Family::Path => path(p(0)),
        }
    }
}

pub(crate) fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The 2-uniform cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Hypergraph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::Param { family: Family::Cycle, value: n, expected: "n >= 3" });
    }
    Ok(Hypergraph::new(n, (0..n).map(|i| vec![i, (i + 1) % n]).collect())?)
}

/// The 2-uniform path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Hypergraph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::Param { family: Family::Path, value: n, expected: "n >= 2" });
    }
    Ok(Hypergraph::new(n, (0..n - 1).map(|i| vec![i, i + 1]).collect())?)
}

/// The non-uniform examples of orders 5 through 8.
///
/// * 5: the cycle C5 plus one edge holding all five vertices.
/// * 6: two triangles-as-hyperedges {0,1,2} and {3,4,5}, graph edges
///   0-5, 1-5, 2-3, 2-4, and the full vertex set.
/// * 7: vertices a=0, b=1, R=2, L=3 and twins 4, 5, 6; graph edges b-R,
///   a-L and every twin to both R and L; hyperedges {a,b,R}, {a,b,L},
///   {4,5,6} and the full vertex set. Degrees range from 4 to 6.
/// * 8: the circulant on Z8 with differences {1,2} plus the even
///   vertices, the odd vertices and the full vertex set.
pub fn small_example(n: usize) -> Result<Hypergraph, FamilyError> {
    let edges: Vec<Vec<usize>> = match n {
        5 => {
            let mut e: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
            e.push((0..5).collect());
            e
        }
        6 => vec![
            vec![0, 5],
            vec![1, 5],
            vec![2, 3],
            vec![2, 4],
            vec![0, 1, 2],
            vec![3, 4, 5],
            (0..6).collect(),
        ],
        7 => {
            let mut e = vec![vec![1, 2], vec![0, 3], vec![0, 1, 2], vec![0, 1, 3], vec![4, 5, 6]];
            for twin in 4..7 {
                e.push(vec![2, twin]);
                e.push(vec![3, twin]);
            }
            e.push((0..7).collect());
            e
        }
        8 => {
            let mut e = Vec::new();
            for i in 0..8 {
                e.push(vec![i, (i + 1) % 8]);
                e.push(vec![i, (i + 2) % 8]);
            }
            e.push(vec![0, 2, 4, 6]);
            e.push(vec![1, 3, 5, 7]);
            e.push((0..8).collect());
            e
        }
        _ => {
            return Err(FamilyError::Param {
                family: Family::SmallExample,
                value: n,
                expected: "n in 5..=8",
            })
        }
    };
    Ok(Hypergraph::new(n, edges)?)
}

/// For `m >= 4`: `k = C(m,2)`, `n = C(m+1,2) + 1`, and the n cyclic
/// windows of k consecutive vertices modulo n.
pub fn interval_family(m: usize) -> Result<Hypergraph, FamilyError> {
    if m < 4 {
        return Err(FamilyError::Param { family: Family::Interval, value: m, expected: "m >= 4" });
    }
    let k = binom(m, 2);
    let n = binom(m + 1, 2) + 1;
    let edges = (0..n).map(|i| (0..k).map(|j| (i + j) % n).collect()).collect();
    Ok(Hypergraph::new(n, edges)?)
}

/// Base block of the cyclic S(2,4,13).
pub const STEINER_BASE_BLOCK: [usize; 4] = [0, 1, 3, 9];

/// The Steiner system S(2,4,13) developed from `{0,1,3,9}` modulo 13.
pub fn steiner_2_4_13() -> Result<Hypergraph, FamilyError> {
    let n = 13;
    let edges: Vec<Vec<usize>> = (0..n)
        .map(|i| STEINER_BASE_BLOCK.iter().map(|&b| (b + i) % n).collect())
        .collect();
    let h = Hypergraph::new(n, edges)?;
    let mut cover = vec![0u8; n * n];
    for e in h.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                cover[a * n + b] += 1;
            }
        }
    }
    let every_pair_once = (0..n).all(|a| (a + 1..n).all(|b| cover[a * n + b] == 1));
    if !every_pair_once {
        return Err(FamilyError::Verification("steiner-2-4-13"));
    }
    Ok(h)
}

/// The six pentagonal faces of the hemi-dodecahedron, whose skeleton is
/// the Petersen graph.
pub fn hemi_dodecahedron() -> Hypergraph {
    Hypergraph::new(
        10,
        vec![
            vec![0, 1, 2, 3, 4],
            vec![0, 2, 5, 6, 7],
            vec![1, 3, 6, 7, 8],
            vec![2, 4, 7, 8, 9],
            vec![0, 3, 5, 8, 9],
            vec![1, 4, 5, 6, 9],
        ],
    )
    .expect("static edge list is valid")
}

/// The dual of the complete 3-uniform hypergraph on five vertices.
pub fn dual_k5_3() -> Hypergraph {
    Hypergraph::clique(5, 3)
        .and_then(|k| k.dual())
        .expect("every vertex of K5^(3) has degree 6")
        .hypergraph
}

/// Two copies of the dual of K4 on vertices `0..6` and `6..12`; each
/// 3-edge is merged with its copy, and each copy's vertex set is added as
/// an edge.
pub fn duplicated_dual_k4() -> Hypergraph {
    let base = Hypergraph::clique(4, 2)
        .and_then(|k| k.dual())
        .expect("K4 is 3-regular")
        .hypergraph;
    let mut edges: Vec<Vec<usize>> = base
        .edges()
        .iter()
        .map(|e| e.iter().copied().chain(e.iter().map(|&v| v + 6)).collect())
        .collect();
    edges.push((0..6).collect());
    edges.push((6..12).collect());
    Hypergraph::new(12, edges).expect("merged edges are distinct")
}

pub fn twelve_vertex_6uniform() -> Hypergraph {
    Hypergraph::new(
        12,
        vec![
            vec![0, 1, 2, 3, 4, 5],
            vec![0, 1, 6, 7, 8, 9],
            vec![2, 3, 6, 7, 10, 11],
            vec![4, 5, 8, 9, 10, 11],
            vec![0, 2, 4, 6, 8, 10],
            vec![1, 3, 5, 7, 9, 11],
        ],
    )
    .expect("static edge list is valid")
}

/// Complete k-partite graph with classes of size `2k+3`, minus a
/// Hamiltonian cycle, plus one hyperedge per class.
///
/// Class `c` holds vertices `c*(2k+3) .. (c+1)*(2k+3)`. The removed cycle
/// visits the classes round-robin: position t is vertex `t / k` of class
/// `t % k`, so consecutive vertices never share a class.
pub fn multipartite_hk(k: usize) -> Result<Hypergraph, FamilyError> {
    if k < 2 {
        return Err(FamilyError::Param { family: Family::MultipartiteHk, value: k, expected: "k >= 2" });
    }
    let size = 2 * k + 3;
    let n = k * size;
    let class = |v: usize| v / size;
    let round_robin = |t: usize| (t % k) * size + t / k;
    let mut removed = std::collections::HashSet::new();
    for t in 0..n {
        let (a, b) = (round_robin(t), round_robin((t + 1) % n));
        removed.insert((a.min(b), a.max(b)));
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if class(a) != class(b) && !removed.contains(&(a, b)) {
                edges.push(vec![a, b]);
            }
        }
    }
    for c in 0..k {
        edges.push((c * size..(c + 1) * size).collect());
    }
    let h = Hypergraph::new(n, edges)?;
    if !is_soltes(&h) {
        return Err(FamilyError::Verification("multipartite-hk"));
    }
    Ok(h)
}

/// The dual of a graph: one vertex per edge, one hyperedge per vertex star.
pub fn star_dual_of_graph(g: &Hypergraph) -> Result<Hypergraph, FamilyError> {
    if !g.is_two_uniform() {
        return Err(FamilyError::NotCompatible("2-uniform"));
    }
    Ok(g.dual()?.hypergraph)
}

/// Vertices are the edges of a cubic graph; hyperedges are the triples of
/// pairwise adjacent line-graph vertices, i.e. the vertex stars together
/// with the edge sets of triangles. `stars_only` drops the triangles.
pub fn triangle_dual_of_cubic(g: &Hypergraph, stars_only: bool) -> Result<Hypergraph, FamilyError> {
    if !g.is_two_uniform() || g.regularity() != Some(3) {
        return Err(FamilyError::NotCompatible("cubic"));
    }
    if !g.is_connected() {
        return Err(FamilyError::NotCompatible("connected"));
    }
    let mut edges = g.incidence();
    if !stars_only {
        let index = |a: usize, b: usize| {
            g.edges()
                .binary_search_by(|e| e.as_slice().cmp(&[a.min(b), a.max(b)][..]))
                .ok()
        };
        for (i, e) in g.edges().iter().enumerate() {
            let (a, b) = (e[0], e[1]);
            for c in b + 1..g.order() {
                if let (Some(j), Some(k)) = (index(a, c), index(b, c)) {
                    edges.push(vec![i, j, k]);
                }
            }
        }
    }
    for e in edges.iter_mut() {
        e.sort_unstable();
    }
    edges.sort();
    edges.dedup();
    Ok(Hypergraph::new(g.size(), edges)?)
}
