//! The deficiency characterization, evaluated exhaustively over vertex subsets.
//!
//! For `S ⊆ V` let `T = {x ∉ S : d_{G−S}(x) ≤ a}` and
//! `δ(S,T) = b|S| − a|T| + Σ_{x∈T} d_{G−S}(x)`. A graph has a fractional
//! `[a,b]`-factor iff `δ(S,T) ≥ 0` for every `S`, and is fractional
//! `[a,b]`-covered iff `δ(S,T) ≥ ε(S)` for every `S`, where `ε(S) ∈ {0,1,2}`
//! is computed by [`epsilon`].

use serde::Serialize;

use super::{Certificate, FactorBounds, Property, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_MAX_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralOptions {
    /// Exhaustion cap; larger graphs are rejected with
    /// [`Error::CapExceeded`].
    pub max_vertices: usize,
    /// Skip subset sizes that provably cannot violate the condition. With
    /// `L_k = #{x : d_G(x) ≤ a + k}`, any `S` of size `k` has `|T| ≤ L_k`, so
    /// sizes with `L_k = 0` (then `T = ∅`) or `bk − a·L_k ≥ 2` are skipped;
    /// the scan stops once `(a+b)k ≥ an + 2`.
    pub prune: bool,
}

impl Default for StructuralOptions {
    fn default() -> Self {
        StructuralOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
            prune: true,
        }
    }
}

/// A subset `S` with its low-degree set `T`, `δ(S,T)` and `ε(S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeficiencyWitness {
    pub s: VertexSet,
    pub t: VertexSet,
    pub delta: i64,
    pub epsilon: u8,
}

impl DeficiencyWitness {
    /// `δ(S,T) ≤ ε(S) − 1`.
    pub fn is_violation(&self) -> bool {
        self.delta < i64::from(self.epsilon)
    }
}

/// `T = {x ∈ V∖S : d_{G−S}(x) ≤ a}`.
pub fn low_degree_set(g: &Graph, s: &VertexSet, a: u32) -> VertexSet {
    let members = (0..g.n())
        .filter(|&x| !s.contains(x) && g.degree_in_complement(s, x) <= a as usize)
        .collect();
    VertexSet::from_sorted_unchecked(g.n(), members)
}

/// `ε(S)`: 2 if `S` is not independent; otherwise 1 if some edge joins `S` to
/// a vertex `v ∈ T` with `d_{G−S}(v) = a`, or some edge joins `S` to
/// `V∖(S∪T)`; otherwise 0. The empty set is independent and has no edges, so
/// `ε(∅) = 0`.
pub fn epsilon(g: &Graph, s: &VertexSet, t: &VertexSet, a: u32) -> u8 {
    if !g.is_independent(s) {
        return 2;
    }
    let to_tight_t = s.iter().any(|u| {
        g.neighbors(u)
            .iter()
            .any(|&v| t.contains(v) && g.degree_in_complement(s, v) == a as usize)
    });
    let to_rest = s.iter().any(|u| {
        g.neighbors(u)
            .iter()
            .any(|&v| !s.contains(v) && !t.contains(v))
    });
    u8::from(to_tight_t || to_rest)
}

fn delta(g: &Graph, s: &VertexSet, t: &VertexSet, bounds: FactorBounds) -> i64 {
    let sum: usize = t.iter().map(|x| g.degree_in_complement(s, x)).sum();
    i64::from(bounds.b()) * s.len() as i64 - i64::from(bounds.a()) * t.len() as i64 + sum as i64
}

/// The coveredness witness for `S`.
pub fn deficiency(g: &Graph, s: &VertexSet, bounds: FactorBounds) -> DeficiencyWitness {
    let t = low_degree_set(g, s, bounds.a());
    let delta = delta(g, s, &t, bounds);
    let epsilon = epsilon(g, s, &t, bounds.a());
    DeficiencyWitness {
        s: s.clone(),
        t,
        delta,
        epsilon,
    }
}

/// The factor witness for `S` (`ε` fixed to 0).
pub fn factor_deficiency(g: &Graph, s: &VertexSet, bounds: FactorBounds) -> DeficiencyWitness {
    let t = low_degree_set(g, s, bounds.a());
    let delta = delta(g, s, &t, bounds);
    DeficiencyWitness {
        s: s.clone(),
        t,
        delta,
        epsilon: 0,
    }
}

pub fn is_covered_structural(
    g: &Graph,
    bounds: FactorBounds,
    opts: &StructuralOptions,
) -> Result<Verdict> {
    structural_verdict(g, bounds, Property::Covered, opts)
}

pub fn has_factor_structural(
    g: &Graph,
    bounds: FactorBounds,
    opts: &StructuralOptions,
) -> Result<Verdict> {
    structural_verdict(g, bounds, Property::Factor, opts)
}

fn structural_verdict(
    g: &Graph,
    bounds: FactorBounds,
    property: Property,
    opts: &StructuralOptions,
) -> Result<Verdict> {
    let n = g.n();
    let cap = opts.max_vertices.min(63);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "vertex count for subset enumeration",
            actual: n,
            cap,
        });
    }
    let (found, checked) = first_violation(g, bounds, property == Property::Covered, opts.prune);
    Ok(match found {
        Some(mask) => {
            let s = VertexSet::from_mask(n, mask);
            let w = match property {
                Property::Covered => deficiency(g, &s, bounds),
                Property::Factor => factor_deficiency(g, &s, bounds),
            };
            debug_assert!(w.is_violation());
            Verdict {
                property,
                holds: false,
                certificate: Certificate::Deficiency(w),
            }
        }
        None => Verdict {
            property,
            holds: true,
            certificate: Certificate::Exhausted {
                subsets_checked: checked,
            },
        },
    })
}

/// Lexicographic successor of a `k`-combination of `0..n`.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Scans subsets by increasing size, lexicographically within a size, and
/// returns the first violating `S` as a bitmask with the number of subsets
/// evaluated.
fn first_violation(
    g: &Graph,
    bounds: FactorBounds,
    covered: bool,
    prune: bool,
) -> (Option<u64>, u64) {
    let n = g.n();
    let (a, b) = (bounds.a() as i64, bounds.b() as i64);
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let nbr: Vec<u64> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let degrees = g.degrees();
    let mut checked = 0u64;
    for k in 0..=n {
        if prune {
            if (a + b) * k as i64 >= a * n as i64 + 2 {
                break;
            }
            // every x ∈ T has d_G(x) ≤ a + |S|, so δ ≥ b|S| − a·#{x : d_G(x) ≤ a + |S|}
            let low = degrees
                .iter()
                .filter(|&&d| d as i64 <= a + k as i64)
                .count() as i64;
            if low == 0 || b * k as i64 - a * low >= 2 {
                continue;
            }
        }
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            checked += 1;
            let s = comb.iter().fold(0u64, |m, &v| m | 1 << v);
            let outside = full & !s;
            let (mut t, mut tight, mut sum, mut t_len) = (0u64, 0u64, 0i64, 0i64);
            let mut rest = outside;
            while rest != 0 {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let d = (nbr[x] & outside).count_ones() as i64;
                if d <= a {
                    t |= 1 << x;
                    t_len += 1;
                    sum += d;
                    if d == a {
                        tight |= 1 << x;
                    }
                }
            }
            let delta = b * k as i64 - a * t_len + sum;
            let violated = if !covered {
                delta < 0
            } else if delta >= 2 {
                false
            } else {
                let others = outside & !t;
                let eps = if comb.iter().any(|&u| nbr[u] & s != 0) {
                    2
                } else if comb.iter().any(|&u| nbr[u] & (tight | others) != 0) {
                    1
                } else {
                    0
                };
                delta < eps
            };
            if violated {
                return (Some(s), checked);
            }
            if !next_combination(&mut comb, n) {
                break;
            }
        }
    }
    (None, checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct_h, h_special_vertex};
    use proptest::prelude::*;

    fn fb(a: u32, b: u32) -> FactorBounds {
        FactorBounds::new(a, b).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn low_degree_examples() {
        let h = construct_h(6, 2).unwrap();
        let empty = VertexSet::empty(6);
        assert_eq!(
            low_degree_set(&h, &empty, 2).as_slice(),
            &[h_special_vertex(2)]
        );
        assert!(low_degree_set(&Graph::complete(6).unwrap(), &empty, 2).is_empty());
        assert_eq!(low_degree_set(&cycle(4), &VertexSet::empty(4), 2).len(), 4);
    }

    #[test]
    fn epsilon_examples() {
        let h = construct_h(6, 2).unwrap();
        let empty = VertexSet::empty(6);
        let t = low_degree_set(&h, &empty, 2);
        assert_eq!(epsilon(&h, &empty, &t, 2), 0);
        let s = VertexSet::new(6, vec![2, 3]).unwrap();
        assert_eq!(epsilon(&h, &s, &low_degree_set(&h, &s, 2), 2), 2);
        // one K_4 vertex: independent, with edges into the rest of the K_4
        let s = VertexSet::new(6, vec![3]).unwrap();
        let t = low_degree_set(&h, &s, 2);
        assert_eq!(t.as_slice(), &[1]);
        assert_eq!(epsilon(&h, &s, &t, 2), 1);
    }

    #[test]
    fn epsilon_tight_clause_alone() {
        // P_3 with S = {0}: T = {1, 2} with d_{G-S}(1) = 1 = a and no rest
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let s = VertexSet::new(3, vec![0]).unwrap();
        let t = low_degree_set(&p3, &s, 1);
        assert_eq!(t.as_slice(), &[1, 2]);
        assert_eq!(epsilon(&p3, &s, &t, 1), 1);
        // with a = 2 vertex 1 is in T but not tight, and there is no rest
        let t = low_degree_set(&p3, &s, 2);
        assert_eq!(epsilon(&p3, &s, &t, 2), 0);
    }

    #[test]
    fn deficiency_examples() {
        for (n, a) in [(6, 2), (9, 3), (12, 5)] {
            let h = construct_h(n, a).unwrap();
            let w = deficiency(&h, &VertexSet::empty(n), fb(a as u32, a as u32 + 1));
            assert_eq!((w.delta, w.epsilon), (-1, 0));
            assert!(w.is_violation());
        }
        let w = deficiency(&Graph::complete(6).unwrap(), &VertexSet::empty(6), fb(2, 3));
        assert_eq!((w.delta, w.epsilon), (0, 0));
        let w = deficiency(&cycle(4), &VertexSet::empty(4), fb(2, 2));
        assert_eq!((w.delta, w.epsilon), (0, 0));
        assert!(!w.is_violation());
    }

    #[test]
    fn h_graphs_fail_with_empty_witness() {
        for a in 2..=5 {
            for n in a + 3..=12 {
                let h = construct_h(n, a).unwrap();
                let v = is_covered_structural(
                    &h,
                    fb(a as u32, a as u32),
                    &StructuralOptions::default(),
                )
                .unwrap();
                assert!(!v.holds);
                let w = v.witness().unwrap();
                assert!(w.s.is_empty());
                assert_eq!(w.t.as_slice(), &[h_special_vertex(a)]);
                assert_eq!((w.delta, w.epsilon), (-1, 0));
            }
        }
    }

    #[test]
    fn small_positive_cases() {
        let opts = StructuralOptions::default();
        assert!(
            is_covered_structural(&Graph::complete(8).unwrap(), fb(2, 3), &opts)
                .unwrap()
                .holds
        );
        assert!(
            is_covered_structural(&cycle(4), fb(2, 2), &opts)
                .unwrap()
                .holds
        );
        for a in 1..6 {
            let k = Graph::complete(a + 1).unwrap();
            assert!(
                has_factor_structural(&k, fb(a as u32, a as u32), &opts)
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn factor_failure_for_large_h() {
        let opts = StructuralOptions::default();
        for a in 2..=4 {
            for n in 2 * a + 3..=13 {
                let h = construct_h(n, a).unwrap();
                assert!(
                    !has_factor_structural(&h, fb(a as u32, a as u32), &opts)
                        .unwrap()
                        .holds
                );
            }
        }
    }

    #[test]
    fn isolated_vertex_fails_immediately() {
        let g = Graph::complete(4)
            .unwrap()
            .disjoint_union(&Graph::empty(1).unwrap());
        let v = has_factor_structural(&g, fb(1, 1), &StructuralOptions::default()).unwrap();
        let w = v.witness().unwrap();
        assert!(w.s.is_empty() && w.t.as_slice() == [4]);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::complete(21).unwrap();
        let err = is_covered_structural(&g, fb(2, 2), &StructuralOptions::default()).unwrap_err();
        assert!(matches!(
            err,
            Error::CapExceeded {
                actual: 21,
                cap: 20,
                ..
            }
        ));
    }

    #[test]
    fn combination_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    /// Reference evaluation straight from the set-based definitions.
    fn brute_force(g: &Graph, bounds: FactorBounds, covered: bool) -> Option<VertexSet> {
        let n = g.n();
        let mut all: Vec<VertexSet> = (0..1u64 << n).map(|m| VertexSet::from_mask(n, m)).collect();
        all.sort_by(|x, y| {
            x.len()
                .cmp(&y.len())
                .then_with(|| x.as_slice().cmp(y.as_slice()))
        });
        all.into_iter().find(|s| {
            let w = if covered {
                deficiency(g, s, bounds)
            } else {
                factor_deficiency(g, s, bounds)
            };
            w.is_violation()
        })
    }

    proptest! {
        #[test]
        fn pruning_preserves_first_violation(g in graph_strategy(6), a in 1u32..4, extra in 0u32..3) {
            let bounds = fb(a, a + extra);
            for covered in [true, false] {
                let pruned = first_violation(&g, bounds, covered, true).0;
                let full = first_violation(&g, bounds, covered, false).0;
                prop_assert_eq!(pruned, full);
                let reference = brute_force(&g, bounds, covered);
                prop_assert_eq!(full.map(|m| VertexSet::from_mask(g.n(), m)), reference);
            }
        }

        #[test]
        fn witnesses_recompute(g in graph_strategy(8), a in 1u32..4, extra in 0u32..3) {
            let bounds = fb(a, a + extra);
            let v = is_covered_structural(&g, bounds, &StructuralOptions::default()).unwrap();
            if let Some(w) = v.witness() {
                prop_assert_eq!(&deficiency(&g, &w.s, bounds), w);
                prop_assert!(w.is_violation());
            }
            let f = has_factor_structural(&g, bounds, &StructuralOptions::default()).unwrap();
            if !f.holds {
                prop_assert!(!v.holds, "a graph without a factor cannot be covered");
            }
        }
    }
}
