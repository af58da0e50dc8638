//! Finite hypergraphs on the vertex set `0..n`, the generators for the
//! families studied here, and the deletion operators.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;
pub type Edge = Vec<Vertex>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("co-degree needs two distinct vertices, got {0} twice")]
    InvalidPair(usize),
    #[error("edge {0:?} has fewer than two vertices")]
    EdgeTooSmall(Edge),
    #[error("edge {0:?} is not in the hypergraph")]
    EdgeNotFound(Edge),
    #[error("hypergraph must have at least one vertex")]
    Empty,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("edge {0:?} is not a 3-edge meeting both sides of the bipartition")]
    NotClassifiable(Edge),
    #[error("malformed hypergraph file: {0}")]
    Parse(String),
}

/// A hypergraph `H = (V, E)` with `V = {0, .., n-1}`.
///
/// Edges are kept in canonical form: each edge strictly ascending, the edge
/// list sorted lexicographically and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Builds a hypergraph from arbitrary edge lists, canonicalizing them.
    ///
    /// Repeated vertices inside an edge and repeated edges are collapsed.
    /// Edges that end up with fewer than two vertices are rejected.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = Vertex>,
    {
        if n == 0 {
            return Err(HypergraphError::Empty);
        }
        let mut set = BTreeSet::new();
        for edge in edges {
            let e: Edge = edge.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::IndexOutOfRange { vertex: v, n });
            }
            if e.len() < 2 {
                return Err(HypergraphError::EdgeTooSmall(e));
            }
            set.insert(e);
        }
        Ok(Self { n, edges: set.into_iter().collect() })
    }

    pub fn edgeless(n: usize) -> Result<Self, HypergraphError> {
        Self::new(n, Vec::<Edge>::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, edge: &[Vertex]) -> bool {
        let e = canonical_edge(edge);
        self.edges.binary_search(&e).is_ok()
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), HypergraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(HypergraphError::IndexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// True iff no edge is a proper subset of another.
    pub fn is_simple(&self) -> bool {
        let sets: Vec<BTreeSet<Vertex>> = self.edges.iter().map(|e| e.iter().copied().collect()).collect();
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    /// Connectivity of the vertex-edge incidence graph. An isolated vertex
    /// makes the hypergraph disconnected unless it is the only vertex.
    pub fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (idx, e) in self.edges.iter().enumerate() {
            for &v in e {
                incident[v].push(idx);
            }
        }
        let mut seen_vertex = vec![false; self.n];
        let mut seen_edge = vec![false; self.edges.len()];
        let mut queue = VecDeque::from([0]);
        seen_vertex[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &idx in &incident[v] {
                if std::mem::replace(&mut seen_edge[idx], true) {
                    continue;
                }
                for &w in &self.edges[idx] {
                    if !std::mem::replace(&mut seen_vertex[w], true) {
                        reached += 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        reached == self.n
    }

    /// `c_ij`: the number of edges containing both `i` and `j`.
    pub fn co_degree(&self, i: Vertex, j: Vertex) -> Result<usize, HypergraphError> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(HypergraphError::InvalidPair(i));
        }
        Ok(self.edges.iter().filter(|e| e.binary_search(&i).is_ok() && e.binary_search(&j).is_ok()).count())
    }

    /// All co-degrees at once, as a dense symmetric table with zero diagonal.
    pub fn co_degree_table(&self) -> Vec<Vec<usize>> {
        co_degrees_of(self.n, &self.edges)
    }

    /// Removes a single edge, keeping the vertex set.
    pub fn delete_hyperedge(&self, edge: &[Vertex]) -> Result<Self, HypergraphError> {
        let e = canonical_edge(edge);
        let pos = self.edges.binary_search(&e).map_err(|_| HypergraphError::EdgeNotFound(e))?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Self { n: self.n, edges })
    }

    /// Strong deletion: drop `v` and every edge incident to it. Vertices above
    /// `v` are shifted down by one.
    pub fn strong_delete_vertex(&self, v: Vertex) -> Result<Self, HypergraphError> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(HypergraphError::Empty);
        }
        let edges = self.edges.iter().filter(|e| !e.contains(&v)).map(|e| shift_down(e, v)).collect::<Vec<_>>();
        Self::new(self.n - 1, edges)
    }

    /// Drops every edge incident to `v` but keeps `v` as an isolated vertex,
    /// so the vertex labels and the matrix order are unchanged.
    pub fn isolate_vertex(&self, v: Vertex) -> Result<Self, HypergraphError> {
        self.check_vertex(v)?;
        let edges = self.edges.iter().filter(|e| !e.contains(&v)).cloned().collect();
        Ok(Self { n: self.n, edges })
    }

    /// Weak deletion: remove `v` from the vertex set and from every edge.
    ///
    /// Shrunken edges with fewer than two vertices are dropped and duplicates
    /// are merged; the raw edge multiset is kept in the returned record.
    pub fn weak_delete_vertex(&self, v: Vertex) -> Result<WeakDeletion, HypergraphError> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(HypergraphError::Empty);
        }
        let raw_edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| {
                let kept: Edge = e.iter().copied().filter(|&w| w != v).collect();
                shift_down(&kept, v)
            })
            .collect();
        let shrunk = self.degree(v);
        let dropped = raw_edges.iter().filter(|e| e.len() < 2).count();
        let surviving: Vec<Edge> = raw_edges.iter().filter(|e| e.len() >= 2).cloned().collect();
        let hypergraph = Self::new(self.n - 1, surviving.iter().cloned())?;
        let merged = surviving.len() - hypergraph.edge_count();
        Ok(WeakDeletion { hypergraph, raw_edges, shrunk, dropped, merged })
    }
}

impl fmt::Display for Hypergraph {
    /// Conventional 1-based listing, e.g. `n=4 {1,2,3} {2,3,4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for e in &self.edges {
            write!(f, " {{{}}}", e.iter().map(|v| v + 1).join(","))?;
        }
        Ok(())
    }
}

/// Outcome of a weak vertex deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakDeletion {
    pub hypergraph: Hypergraph,
    /// Every original edge with the vertex removed and labels shifted,
    /// before dropping small edges or merging duplicates.
    pub raw_edges: Vec<Edge>,
    /// Edges that contained the deleted vertex.
    pub shrunk: usize,
    /// Shrunken edges dropped for having fewer than two vertices.
    pub dropped: usize,
    /// Edges merged into an identical surviving edge.
    pub merged: usize,
}

fn shift_down(edge: &[Vertex], removed: Vertex) -> Edge {
    edge.iter().map(|&w| if w > removed { w - 1 } else { w }).collect()
}

fn canonical_edge(edge: &[Vertex]) -> Edge {
    let mut e = edge.to_vec();
    e.sort_unstable();
    e.dedup();
    e
}

/// Co-degree table of an arbitrary edge multiset (duplicates counted).
pub fn co_degrees_of(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut c = vec![vec![0usize; n]; n];
    for e in edges {
        for (a, &i) in e.iter().enumerate() {
            for &j in &e[a + 1..] {
                if i != j {
                    c[i][j] += 1;
                    c[j][i] += 1;
                }
            }
        }
    }
    c
}

/// The two sides of a bipartition of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartitionLabels {
    side_a: Vec<Vertex>,
    side_b: Vec<Vertex>,
}

impl BipartitionLabels {
    pub fn new(n: usize, mut side_a: Vec<Vertex>, mut side_b: Vec<Vertex>) -> Result<Self, HypergraphError> {
        side_a.sort_unstable();
        side_b.sort_unstable();
        if side_a.is_empty() || side_b.is_empty() {
            return Err(HypergraphError::InvalidParams("both sides must be nonempty".into()));
        }
        let mut all: Vec<Vertex> = side_a.iter().chain(&side_b).copied().collect();
        all.sort_unstable();
        if all != (0..n).collect::<Vec<_>>() {
            return Err(HypergraphError::InvalidParams(format!("sides must partition 0..{n}")));
        }
        Ok(Self { side_a, side_b })
    }

    pub fn side_a(&self) -> &[Vertex] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[Vertex] {
        &self.side_b
    }

    pub fn in_a(&self, v: Vertex) -> bool {
        self.side_a.binary_search(&v).is_ok()
    }
}

/// The two kinds of straddling 3-edge in a complete 3-uniform bipartite
/// hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeType {
    /// One vertex in the first side, two in the second.
    TypeI,
    /// Two vertices in the first side, one in the second.
    TypeII,
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeType::TypeI => "type-I",
            EdgeType::TypeII => "type-II",
        })
    }
}

pub fn classify_edge(edge: &[Vertex], labels: &BipartitionLabels) -> Result<EdgeType, HypergraphError> {
    let e = canonical_edge(edge);
    if e.len() != 3 {
        return Err(HypergraphError::NotClassifiable(e));
    }
    match e.iter().filter(|&&v| labels.in_a(v)).count() {
        1 => Ok(EdgeType::TypeI),
        2 => Ok(EdgeType::TypeII),
        _ => Err(HypergraphError::NotClassifiable(e)),
    }
}

/// `C^k_{m,n}`: every `k`-subset meeting both `V1 = 0..m` and `V2 = m..m+n`.
///
/// When no such subset exists (e.g. `k > m + n`) the result is edgeless.
pub fn gen_complete_bipartite(
    k: usize,
    m: usize,
    n: usize,
) -> Result<(Hypergraph, BipartitionLabels), HypergraphError> {
    if k < 2 || m < 1 || n < 1 {
        return Err(HypergraphError::InvalidParams(format!("need k >= 2, m >= 1, n >= 1 (got k={k}, m={m}, n={n})")));
    }
    let total = m + n;
    let edges = (0..total).combinations(k).filter(|e| e[0] < m && e[k - 1] >= m);
    let h = Hypergraph::new(total, edges)?;
    let labels = BipartitionLabels::new(total, (0..m).collect(), (m..total).collect())?;
    Ok((h, labels))
}

/// How a Turán hypergraph decides which `k`-subsets are edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TuranRule {
    /// Any `k`-subset not contained in a single part.
    #[default]
    NotWithinOnePart,
    /// Only `k`-subsets whose vertices lie in pairwise distinct parts.
    PairwiseDistinctParts,
}

/// `T(n, k, r)`: `n` vertices split into `r` near-equal parts, larger parts
/// first, labelled consecutively.
pub fn gen_turan(
    n: usize,
    k: usize,
    r: usize,
    rule: TuranRule,
) -> Result<(Hypergraph, Vec<Vec<Vertex>>), HypergraphError> {
    if r < 2 || k < 2 || n < r {
        return Err(HypergraphError::InvalidParams(format!("need r >= 2, k >= 2, n >= r (got n={n}, k={k}, r={r})")));
    }
    let (base, extra) = (n / r, n % r);
    let mut parts = Vec::with_capacity(r);
    let mut part_of = vec![0usize; n];
    let mut next = 0;
    for p in 0..r {
        let size = base + usize::from(p < extra);
        parts.push((next..next + size).collect::<Vec<_>>());
        part_of[next..next + size].fill(p);
        next += size;
    }
    let edges = (0..n).combinations(k).filter(|e| match rule {
        TuranRule::NotWithinOnePart => e.iter().any(|&v| part_of[v] != part_of[e[0]]),
        TuranRule::PairwiseDistinctParts => e.iter().map(|&v| part_of[v]).all_unique(),
    });
    Ok((Hypergraph::new(n, edges)?, parts))
}

/// A random hypergraph on `n` vertices with up to `edge_count` distinct
/// edges whose sizes are drawn uniformly from `min_size..=max_size`.
pub fn random_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    edge_count: usize,
    min_size: usize,
    max_size: usize,
) -> Result<Hypergraph, HypergraphError> {
    if min_size < 2 || min_size > max_size || max_size > n {
        return Err(HypergraphError::InvalidParams(format!("edge sizes {min_size}..={max_size} invalid for n={n}")));
    }
    let edges = (0..edge_count).map(|_| {
        let size = rng.gen_range(min_size..=max_size);
        rand::seq::index::sample(rng, n, size).into_vec()
    });
    let edges: Vec<Edge> = edges.collect();
    Hypergraph::new(n, edges)
}

/// On-disk form: 1-based labels, `{"n": .., "edges": [[..], ..]}`.
#[derive(Debug, Serialize, Deserialize)]
struct HypergraphFile {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Parses the JSON file format. Edges may be unsorted or repeated.
    pub fn from_json(text: &str) -> Result<Self, HypergraphError> {
        let file: HypergraphFile = serde_json::from_str(text).map_err(|e| HypergraphError::Parse(e.to_string()))?;
        let mut edges = Vec::with_capacity(file.edges.len());
        for e in file.edges {
            let mut zero_based = Vec::with_capacity(e.len());
            for v in e {
                if v == 0 || v > file.n {
                    return Err(HypergraphError::Parse(format!("label {v} outside 1..={}", file.n)));
                }
                zero_based.push(v - 1);
            }
            edges.push(zero_based);
        }
        Self::new(file.n, edges)
    }

    /// Canonical JSON text, one line, trailing newline.
    pub fn to_json(&self) -> String {
        let edges = self.edges.iter().map(|e| format!("[{}]", e.iter().map(|v| v + 1).join(", "))).join(", ");
        format!("{{\"n\": {}, \"edges\": [{}]}}\n", self.n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn canonicalizes_and_rejects_bad_edges() {
        let g = h(4, &[&[3, 1, 2], &[1, 2, 3], &[0, 1]]);
        assert_eq!(g.edges(), &[vec![0, 1], vec![1, 2, 3]]);
        assert!(matches!(
            Hypergraph::new(3, vec![vec![0, 3]]),
            Err(HypergraphError::IndexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(Hypergraph::new(3, vec![vec![1, 1]]), Err(HypergraphError::EdgeTooSmall(_))));
        assert_eq!(Hypergraph::edgeless(0), Err(HypergraphError::Empty));
    }

    #[test]
    fn simplicity() {
        assert!(h(4, &[&[0, 1, 2], &[0, 1, 3]]).is_simple());
        assert!(!h(3, &[&[0, 1], &[0, 1, 2]]).is_simple());
        let (c36, _) = gen_complete_bipartite(3, 3, 6).unwrap();
        assert!(c36.is_simple());
    }

    #[test]
    fn uniformity() {
        assert!(h(3, &[&[0, 1, 2]]).is_k_uniform(3));
        assert!(!h(3, &[&[0, 1], &[0, 1, 2]]).is_k_uniform(3));
        let (t, _) = gen_turan(9, 3, 2, TuranRule::NotWithinOnePart).unwrap();
        assert!(t.is_k_uniform(3));
    }

    #[test]
    fn connectivity() {
        assert!(h(5, &[&[0, 1, 2], &[2, 3, 4]]).is_connected());
        assert!(!h(4, &[&[0, 1, 2]]).is_connected());
        assert!(gen_complete_bipartite(3, 3, 3).unwrap().0.is_connected());
        assert!(Hypergraph::edgeless(1).unwrap().is_connected());
    }

    #[test]
    fn co_degrees() {
        let (c22, _) = gen_complete_bipartite(3, 2, 2).unwrap();
        assert_eq!(c22.co_degree(0, 1), Ok(2));
        for m in 2..6 {
            for n in 2..6 {
                let (c, _) = gen_complete_bipartite(3, m, n).unwrap();
                assert_eq!(c.co_degree(0, m), Ok(m + n - 2));
                assert_eq!(c.co_degree(0, 1), Ok(n));
                assert_eq!(c.co_degree(m, m + 1), Ok(m));
            }
        }
        let g = h(5, &[&[0, 1, 2]]);
        assert_eq!(g.co_degree(3, 4), Ok(0));
        assert_eq!(g.co_degree(1, 1), Err(HypergraphError::InvalidPair(1)));
        assert!(matches!(g.co_degree(0, 5), Err(HypergraphError::IndexOutOfRange { .. })));
    }

    #[test]
    fn complete_bipartite_counts() {
        assert_eq!(gen_complete_bipartite(3, 2, 2).unwrap().0.edge_count(), 4);
        assert_eq!(gen_complete_bipartite(3, 3, 6).unwrap().0.edge_count(), 63);
        // no 3-subset of two vertices exists
        assert_eq!(gen_complete_bipartite(3, 1, 1).unwrap().0.edge_count(), 0);
        assert!(gen_complete_bipartite(1, 2, 2).is_err());
        assert!(gen_complete_bipartite(3, 0, 2).is_err());
    }

    #[test]
    fn turan() {
        let (t, parts) = gen_turan(6, 3, 2, TuranRule::default()).unwrap();
        assert_eq!(parts, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(t, gen_complete_bipartite(3, 3, 3).unwrap().0);
        assert_eq!(gen_turan(4, 3, 2, TuranRule::default()).unwrap().0.edge_count(), 4);
        let (t333, _) = gen_turan(3, 3, 3, TuranRule::default()).unwrap();
        assert_eq!(t333.edges(), &[vec![0, 1, 2]]);
        // strict reading: a 3-edge needs three parts
        assert_eq!(gen_turan(6, 3, 2, TuranRule::PairwiseDistinctParts).unwrap().0.edge_count(), 0);
        let (_, parts) = gen_turan(7, 3, 3, TuranRule::default()).unwrap();
        assert_eq!(parts.iter().map(Vec::len).collect::<Vec<_>>(), vec![3, 2, 2]);
        assert!(gen_turan(2, 3, 3, TuranRule::default()).is_err());
    }

    #[test]
    fn edge_deletion() {
        let single = h(3, &[&[0, 1, 2]]);
        assert_eq!(single.delete_hyperedge(&[2, 0, 1]).unwrap().edge_count(), 0);
        let (c36, _) = gen_complete_bipartite(3, 3, 6).unwrap();
        assert_eq!(c36.delete_hyperedge(&[0, 1, 3]).unwrap().edge_count(), 62);
        assert_eq!(single.delete_hyperedge(&[0, 1]), Err(HypergraphError::EdgeNotFound(vec![0, 1])));
    }

    #[test]
    fn strong_deletion() {
        let g = h(5, &[&[0, 1, 2]]);
        let d = g.strong_delete_vertex(4).unwrap();
        assert_eq!((d.order(), d.edges()), (4, &[vec![0, 1, 2]][..]));
        let (c33, _) = gen_complete_bipartite(3, 3, 3).unwrap();
        assert_eq!(c33.strong_delete_vertex(0).unwrap(), gen_complete_bipartite(3, 2, 3).unwrap().0);
        assert_eq!(c33.strong_delete_vertex(5).unwrap(), gen_complete_bipartite(3, 3, 2).unwrap().0);
        assert!(c33.strong_delete_vertex(6).is_err());
    }

    #[test]
    fn isolation_keeps_order() {
        let g = h(4, &[&[0, 1, 2], &[1, 2, 3]]);
        let d = g.isolate_vertex(3).unwrap();
        assert_eq!(d.order(), 4);
        assert_eq!(d.edges(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn weak_deletion() {
        let d = h(3, &[&[0, 1, 2]]).weak_delete_vertex(2).unwrap();
        assert_eq!(d.hypergraph.edges(), &[vec![0, 1]]);

        let d = h(4, &[&[0, 1, 2], &[1, 2, 3]]).weak_delete_vertex(0).unwrap();
        assert_eq!(d.hypergraph.edges(), &[vec![0, 1], vec![0, 1, 2]]);
        assert!(!d.hypergraph.is_simple());

        let d = h(3, &[&[0, 1], &[0, 1, 2]]).weak_delete_vertex(2).unwrap();
        assert_eq!(d.hypergraph.edges(), &[vec![0, 1]]);
        assert_eq!((d.shrunk, d.dropped, d.merged), (1, 0, 1));

        let d = h(3, &[&[0, 1], &[1, 2]]).weak_delete_vertex(1).unwrap();
        assert_eq!(d.hypergraph.edge_count(), 0);
        assert_eq!(d.dropped, 2);
        assert_eq!(d.raw_edges, vec![vec![0], vec![1]]);
    }

    #[test]
    fn classification() {
        let (_, labels) = gen_complete_bipartite(3, 3, 6).unwrap();
        assert_eq!(classify_edge(&[0, 3, 4], &labels), Ok(EdgeType::TypeI));
        assert_eq!(classify_edge(&[0, 1, 3], &labels), Ok(EdgeType::TypeII));
        assert!(classify_edge(&[3, 4, 5], &labels).is_err());
        assert!(classify_edge(&[0, 1, 2], &labels).is_err());
        assert!(classify_edge(&[0, 3], &labels).is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = "{\"n\": 4, \"edges\": [[4, 2, 3], [1, 2]]}";
        let g = Hypergraph::from_json(text).unwrap();
        assert_eq!(g.edges(), &[vec![0, 1], vec![1, 2, 3]]);
        let out = g.to_json();
        assert_eq!(out, "{\"n\": 4, \"edges\": [[1, 2], [2, 3, 4]]}\n");
        assert_eq!(Hypergraph::from_json(&out).unwrap().to_json(), out);
        assert!(Hypergraph::from_json("{\"n\": 3, \"edges\": [[0, 1]]}").is_err());
        assert!(Hypergraph::from_json("{\"n\": 3}").is_err());
    }
}
