//! Immutable simple undirected graphs and the construction algebra used by the
//! extremal families.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A simple undirected graph on the vertices `0..n`.
///
/// Stores both a dense adjacency matrix (for O(1) edge tests) and sorted
/// neighbor lists. Graphs are never mutated after construction; the
/// `with_*` methods return new graphs.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graphs need at least one vertex".into(),
            ));
        }
        Ok(Graph {
            n,
            adj: vec![false; n * n],
            nbrs: vec![Vec::new(); n],
            m: 0,
        })
    }

    /// Builds a graph from an edge list. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            if g.adj[u * n + v] {
                return Err(Error::InvalidParameter(format!("duplicate edge ({u},{v})")));
            }
            g.adj[u * n + v] = true;
            g.adj[v * n + u] = true;
            g.m += 1;
        }
        g.rebuild_neighbors();
        Ok(g)
    }

    fn from_matrix(n: usize, adj: Vec<bool>) -> Graph {
        let mut g = Graph {
            n,
            adj,
            nbrs: Vec::new(),
            m: 0,
        };
        g.rebuild_neighbors();
        g
    }

    fn rebuild_neighbors(&mut self) {
        let n = self.n;
        self.nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| self.adj[u * n + v]).collect())
            .collect();
        self.m = self.nbrs.iter().map(Vec::len).sum::<usize>() / 2;
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("complete(0) is not a graph".into()));
        }
        let mut adj = vec![true; n * n];
        for v in 0..n {
            adj[v * n + v] = false;
        }
        Ok(Graph::from_matrix(n, adj))
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Graph {
        let (n1, n2) = (self.n, other.n);
        let n = n1 + n2;
        let mut adj = vec![false; n * n];
        for u in 0..n1 {
            for v in 0..n1 {
                adj[u * n + v] = self.adj[u * n1 + v];
            }
        }
        for u in 0..n2 {
            for v in 0..n2 {
                adj[(n1 + u) * n + n1 + v] = other.adj[u * n2 + v];
            }
        }
        if cross {
            for u in 0..n1 {
                for v in n1..n {
                    adj[u * n + v] = true;
                    adj[v * n + u] = true;
                }
            }
        }
        Graph::from_matrix(n, adj)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nbrs.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order. The position of
    /// an edge in this list is its edge index throughout the crate.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.nbrs[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Position of the edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if !self.has_edge(u, v) {
            return None;
        }
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let before: usize = (0..u)
            .map(|w| self.nbrs[w].iter().filter(|&&x| x > w).count())
            .sum();
        let within = self.nbrs[u].iter().filter(|&&x| x > u && x < v).count();
        Some(before + within)
    }

    pub fn with_edge_added(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::InvalidParameter(format!(
                "cannot add edge ({u},{v})"
            )));
        }
        let mut adj = self.adj.clone();
        adj[u * self.n + v] = true;
        adj[v * self.n + u] = true;
        Ok(Graph::from_matrix(self.n, adj))
    }

    pub fn with_edges_removed(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = self.adj.clone();
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::InvalidParameter(format!("({u},{v}) is not an edge")));
            }
            adj[u * self.n + v] = false;
            adj[v * self.n + u] = false;
        }
        Ok(Graph::from_matrix(self.n, adj))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter(
                "relabel needs a permutation of 0..n".into(),
            ));
        }
        let mut adj = vec![false; n * n];
        for (u, v) in self.edges() {
            let (pu, pv) = (perm[u], perm[v]);
            adj[pu * n + pv] = true;
            adj[pv * n + pu] = true;
        }
        Ok(Graph::from_matrix(n, adj))
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let k = vertices.len();
        let mut adj = vec![false; k * k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                adj[i * k + j] = self.has_edge(u, v);
            }
        }
        if k == 0 {
            return Err(Error::InvalidParameter("empty induced subgraph".into()));
        }
        Ok(Graph::from_matrix(k, adj))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &v in &self.nbrs[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `|N(v) \ S|`, the degree of `v` in `G - S`.
    pub fn degree_in_complement(&self, s: &VertexSet, v: usize) -> usize {
        self.nbrs[v].iter().filter(|&&w| !s.contains(w)).count()
    }

    /// `e(S)`: edges with both ends in `S`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter()
            .map(|u| {
                self.nbrs[u]
                    .iter()
                    .filter(|&&v| v > u && s.contains(v))
                    .count()
            })
            .sum()
    }

    /// `e(S,T)` for disjoint `S`, `T`.
    pub fn edges_between(&self, s: &VertexSet, t: &VertexSet) -> Result<usize> {
        if s.iter().any(|v| t.contains(v)) {
            return Err(Error::InvalidVertexSet(
                "edges_between needs disjoint sets".into(),
            ));
        }
        Ok(s.iter()
            .map(|u| self.nbrs[u].iter().filter(|&&v| t.contains(v)).count())
            .sum())
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        self.edges_within(s) == 0
    }

    /// Complement set `V \ S` as a [`VertexSet`].
    pub fn complement_of(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_sorted_unchecked(self.n, (0..self.n).filter(|&v| !s.contains(v)).collect())
    }
}

/// A subset of the vertices of a graph on `n` vertices, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<VertexSet> {
        members.sort_unstable();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidVertexSet(format!(
                "vertex {v} out of range for {n} vertices"
            )));
        }
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidVertexSet("duplicate vertex".into()));
        }
        Ok(VertexSet { n, members })
    }

    pub fn empty(n: usize) -> VertexSet {
        VertexSet {
            n,
            members: Vec::new(),
        }
    }

    pub fn all(n: usize) -> VertexSet {
        VertexSet {
            n,
            members: (0..n).collect(),
        }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, members: Vec<usize>) -> VertexSet {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { n, members }
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> VertexSet {
        VertexSet {
            n,
            members: (0..n).filter(|&v| mask >> v & 1 == 1).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

/// `H(n,a) = K_{a-1} ∇ (K_1 ∪ K_{n-a})`.
///
/// Vertex layout: `0..a-1` is the `K_{a-1}` block, `a-1` is the special
/// vertex of degree `a-1`, and `a..n` is the `K_{n-a}` block.
pub fn construct_h(n: usize, a: usize) -> Result<Graph> {
    if a < 2 || a + 1 > n {
        return Err(Error::InvalidParameter(format!(
            "H(n,a) needs 2 <= a <= n-1, got n={n}, a={a}"
        )));
    }
    let tail = Graph::complete(1)?.disjoint_union(&Graph::complete(n - a)?);
    Ok(Graph::complete(a - 1)?.join(&tail))
}

/// Index of the degree-`(a-1)` vertex of [`construct_h`].
pub fn h_special_vertex(a: usize) -> usize {
    a - 1
}

/// A graph together with a recorded vertex partition.
#[derive(Clone, Debug)]
pub struct PartitionedGraph {
    pub graph: Graph,
    pub parts: Vec<VertexSet>,
}

/// `L(n,a) = K_{4a+1} ∇ (K_2 ∪ K_{n-4a-3})` with parts `(V(K_2), V(K_{4a+1}),
/// V(K_{n-4a-3}))`.
///
/// Vertex layout: `0..4a+1` is the `K_{4a+1}` block, `4a+1, 4a+2` the `K_2`,
/// and the rest the `K_{n-4a-3}` block.
pub fn construct_l(n: usize, a: usize) -> Result<PartitionedGraph> {
    if a < 1 || n < 4 * a + 4 {
        return Err(Error::InvalidParameter(format!(
            "L(n,a) needs a >= 1 and n >= 4a+4, got n={n}, a={a}"
        )));
    }
    let hub = 4 * a + 1;
    let tail = Graph::complete(2)?.disjoint_union(&Graph::complete(n - hub - 2)?);
    let graph = Graph::complete(hub)?.join(&tail);
    let parts = vec![
        VertexSet::from_sorted_unchecked(n, vec![hub, hub + 1]),
        VertexSet::from_sorted_unchecked(n, (0..hub).collect()),
        VertexSet::from_sorted_unchecked(n, (hub + 2..n).collect()),
    ];
    Ok(PartitionedGraph { graph, parts })
}

/// Decides `g ≅ H(n,a)` for `n = |V(g)|` structurally: exactly `a-1`
/// universal vertices, and the remaining vertices induce `K_1 ∪ K_{n-a}`.
pub fn is_h_graph(g: &Graph, a: usize) -> bool {
    let n = g.n();
    if a < 2 || a + 1 > n {
        return false;
    }
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    if universal.len() != a - 1 {
        return false;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| g.degree(v) != n - 1).collect();
    let rest_set = VertexSet::from_sorted_unchecked(n, rest.clone());
    let Some(&lonely) = rest.iter().find(|&&v| g.degree(v) == a - 1) else {
        return false;
    };
    // the lonely vertex sees only universal vertices, so its degree is a-1
    // iff it has no neighbor inside `rest`
    let k = rest.len() - 1;
    g.edges_within(&rest_set) == k * k.saturating_sub(1) / 2
        && rest.iter().all(|&v| v == lonely || !g.has_edge(lonely, v))
}
