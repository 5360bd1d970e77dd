//! Seeded graph samplers and small exhaustive enumeration.

use std::collections::BTreeSet;

use rand::seq::index;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{construct_h, Graph};

/// Largest order accepted by [`enumerate_connected_graphs`].
pub const ENUMERATION_MAX: usize = 6;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The `i`-th pair `(u,v)`, `u < v`, in lexicographic order.
fn pair_at(n: usize, mut i: usize) -> (usize, usize) {
    let mut u = 0;
    while i >= n - 1 - u {
        i -= n - 1 - u;
        u += 1;
    }
    (u, u + 1 + i)
}

/// `K_n` minus `removed_edges` edges chosen uniformly without replacement.
pub fn sample_dense_graph(n: usize, removed_edges: usize, rng: &mut impl Rng) -> Result<Graph> {
    let total = pair_count(n);
    if n == 0 || removed_edges > total {
        return Err(Error::InvalidParameter(format!(
            "cannot remove {removed_edges} of the {total} edges of K_{n}"
        )));
    }
    let mut drop = vec![false; total];
    for i in index::sample(rng, total, removed_edges) {
        drop[i] = true;
    }
    let edges: Vec<_> = (0..total)
        .filter(|&i| !drop[i])
        .map(|i| pair_at(n, i))
        .collect();
    Graph::from_edges(n, &edges)
}

/// `G(n,p)`: every pair is an edge independently with probability `p`.
pub fn sample_gnp(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0,1]"
        )));
    }
    let edges: Vec<_> = (0..pair_count(n))
        .filter(|_| rng.gen_bool(p))
        .map(|i| pair_at(n, i))
        .collect();
    Graph::from_edges(n, &edges)
}

/// A uniformly labelled random recursive tree plus every other pair
/// independently with probability `p`. Always connected.
pub fn sample_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0,1]"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut adj = vec![false; n * n];
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (order[i], order[j]);
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut edges = Vec::new();
    for i in 0..pair_count(n) {
        let (u, v) = pair_at(n, i);
        if adj[u * n + v] || rng.gen_bool(p) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `H(n,a)` with `added` random non-edges inserted and `removed` random edges
/// deleted, then relabelled by a uniform permutation.
pub fn sample_near_extremal(
    n: usize,
    a: usize,
    added: usize,
    removed: usize,
    rng: &mut impl Rng,
) -> Result<Graph> {
    let h = construct_h(n, a)?;
    let edges = h.edges();
    let non_edges: Vec<_> = (0..pair_count(n))
        .map(|i| pair_at(n, i))
        .filter(|&(u, v)| !h.has_edge(u, v))
        .collect();
    if added > non_edges.len() || removed > edges.len() {
        return Err(Error::InvalidParameter(format!(
            "H({n},{a}) has {} non-edges and {} edges",
            non_edges.len(),
            edges.len()
        )));
    }
    let mut keep = vec![true; edges.len()];
    for i in index::sample(rng, edges.len(), removed) {
        keep[i] = false;
    }
    let mut out: Vec<_> = (0..edges.len())
        .filter(|&i| keep[i])
        .map(|i| edges[i])
        .collect();
    out.extend(
        index::sample(rng, non_edges.len(), added)
            .into_iter()
            .map(|i| non_edges[i]),
    );
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, &out)?.relabel(&perm)
}

/// All connected graphs of order `n` up to isomorphism, in a canonical order.
///
/// Brute force over labelled graphs with a permutation-minimal edge code, so
/// only usable for `n ≤ ENUMERATION_MAX`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_MAX {
        return Err(Error::CapExceeded {
            what: "order for exhaustive enumeration",
            actual: n,
            cap: ENUMERATION_MAX,
        });
    }
    let pairs: Vec<_> = (0..pair_count(n)).map(|i| pair_at(n, i)).collect();
    let mut index = vec![0usize; n * n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u * n + v] = i;
        index[v * n + u] = i;
    }
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        if !Graph::from_edges(n, &edges)?.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                edges
                    .iter()
                    .fold(0u32, |c, &(u, v)| c | 1 << index[p[u] * n + p[v]])
            })
            .min()
            .unwrap_or(0);
        seen.insert(canon);
    }
    seen.into_iter()
        .map(|code| {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| code >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            Graph::from_edges(n, &edges)
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=k).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    out
}
