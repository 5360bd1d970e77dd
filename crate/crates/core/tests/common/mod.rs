#![allow(dead_code)]

use fracfactor::Graph;
use proptest::prelude::*;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Uniform labelled graph of order `1..=max_n`.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let all = pairs(n);
        proptest::collection::vec(any::<bool>(), all.len()).prop_map(move |keep| {
            let edges: Vec<_> = all
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Connected graph of order `min_n..=max_n`: a random tree plus random
/// extra edges.
pub fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
        let extra = proptest::collection::vec(any::<bool>(), pairs(n).len());
        (parents, extra).prop_map(move |(parents, extra)| {
            let mut edges: Vec<_> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            for (&e, _) in pairs(n).iter().zip(&extra).filter(|(_, &k)| k) {
                if !edges.contains(&e) {
                    edges.push(e);
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Pairs `a ≤ b` with small values.
pub fn bounds_pair() -> impl Strategy<Value = (u32, u32)> {
    (1u32..=3).prop_flat_map(|a| (Just(a), a..=a + 2))
}
