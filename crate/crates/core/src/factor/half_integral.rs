//! Brute-force search over half-integral indicator functions.
//!
//! Basic solutions of `f ≤ A h ≤ g`, `0 ≤ h ≤ 1` for a graph incidence matrix
//! `A` are half-integral, so the polytope (or any face of it obtained by
//! fixing an edge to 1) is non-empty iff it contains a point of
//! `{0, 1/2, 1}^E`. This module enumerates that set directly and shares no
//! code with the structural or LP routes.

use num_rational::BigRational;

use super::{DegreeBounds, IndicatorAssignment};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `3^13 ≈ 1.6M` leaf states.
pub const DEFAULT_EDGE_CAP: usize = 13;

/// Finds some `h ∈ {0, 1/2, 1}^E` meeting `db`, with `h(forced) = 1` when
/// given. Branches that already exceed an upper bound, or can no longer reach
/// a lower bound, are cut; the search is otherwise exhaustive.
pub fn half_integral_search(
    g: &Graph,
    db: &DegreeBounds,
    forced: Option<(usize, usize)>,
    edge_cap: usize,
) -> Result<Option<IndicatorAssignment>> {
    db.check_len(g)?;
    if g.m() > edge_cap {
        return Err(Error::CapExceeded {
            what: "edge count for half-integral search",
            actual: g.m(),
            cap: edge_cap,
        });
    }
    let edges = g.edges();
    let forced_idx =
        match forced {
            None => None,
            Some((u, v)) => Some(g.edge_index(u, v).ok_or_else(|| {
                Error::InvalidParameter(format!("forced ({u},{v}) is not an edge"))
            })?),
        };
    // doubled units: weights 0, 1, 2 and bounds 2f, 2g
    let n = g.n();
    let mut search = Search {
        edges: &edges,
        forced: forced_idx,
        lower: (0..n).map(|x| 2 * db.lower(x) as i64).collect(),
        upper: (0..n).map(|x| 2 * db.upper(x) as i64).collect(),
        sum: vec![0; n],
        remaining: g.degrees().into_iter().map(|d| d as i64).collect(),
        choice: vec![0; edges.len()],
    };
    if !search.run(0) {
        return Ok(None);
    }
    let weights = search
        .choice
        .iter()
        .map(|&c| BigRational::new(c.into(), 2.into()))
        .collect();
    Ok(Some(IndicatorAssignment::new(edges, weights)?))
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    forced: Option<usize>,
    lower: Vec<i64>,
    upper: Vec<i64>,
    sum: Vec<i64>,
    /// Unassigned incident edges per vertex.
    remaining: Vec<i64>,
    choice: Vec<i64>,
}

impl Search<'_> {
    fn ok_at(&self, x: usize) -> bool {
        self.sum[x] <= self.upper[x] && self.sum[x] + 2 * self.remaining[x] >= self.lower[x]
    }

    fn run(&mut self, k: usize) -> bool {
        if k == self.edges.len() {
            return (0..self.sum.len())
                .all(|x| self.lower[x] <= self.sum[x] && self.sum[x] <= self.upper[x]);
        }
        let (u, v) = self.edges[k];
        let options: &[i64] = if self.forced == Some(k) {
            &[2]
        } else {
            &[0, 1, 2]
        };
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        for &w in options {
            self.sum[u] += w;
            self.sum[v] += w;
            self.choice[k] = w;
            if self.ok_at(u) && self.ok_at(v) && self.run(k + 1) {
                return true;
            }
            self.sum[u] -= w;
            self.sum[v] -= w;
        }
        self.remaining[u] += 1;
        self.remaining[v] += 1;
        false
    }
}
