//! Degree and neighborhood-union sufficient conditions for coveredness,
//! evaluated in exact integer arithmetic.

use crate::factor::FactorBounds;
use crate::graph::Graph;

/// `(a+b)·x ≥ a(n+1)`, i.e. `x ≥ a(n+1)/(a+b)`.
fn meets_threshold(x: usize, n: usize, bounds: FactorBounds) -> bool {
    let (a, b) = (u64::from(bounds.a()), u64::from(bounds.b()));
    (a + b) * x as u64 >= a * (n as u64 + 1)
}

/// Every nonadjacent pair `x ≠ y` has `max(d(x), d(y)) ≥ a(n+1)/(a+b)`.
pub fn yuan_hao_degree_hypothesis(g: &Graph, bounds: FactorBounds) -> bool {
    let n = g.n();
    (0..n).all(|x| {
        (x + 1..n)
            .all(|y| g.has_edge(x, y) || meets_threshold(g.degree(x).max(g.degree(y)), n, bounds))
    })
}

/// Side conditions under which the degree hypothesis is known to imply
/// coveredness: `3 ≤ a ≤ b`, `δ(G) ≥ a+1`, and
/// `n ≥ ((a+b)(a+b−2)+a)/b` for `a ≥ 4`, `n ≥ ((a+b)(a+b−3/2)+a)/b` for `a = 3`.
pub fn yuan_hao_degree_side_conditions(g: &Graph, bounds: FactorBounds) -> bool {
    let (a, b, n) = (i64::from(bounds.a()), i64::from(bounds.b()), g.n() as i64);
    if a < 3 || (g.min_degree() as i64) < a + 1 {
        return false;
    }
    if a == 3 {
        2 * b * n >= (a + b) * (2 * (a + b) - 3) + 2 * a
    } else {
        b * n >= (a + b) * (a + b - 2) + a
    }
}

/// Every independent `r`-subset has `|N(x_1) ∪ … ∪ N(x_r)| ≥ a(n+1)/(a+b)`.
/// Vacuously true when no independent `r`-subset exists. Needs `n ≤ 64`.
pub fn yuan_hao_neighborhood_hypothesis(g: &Graph, bounds: FactorBounds, r: usize) -> bool {
    let n = g.n();
    assert!(n <= 64, "neighborhood hypothesis is evaluated on bitmasks");
    let nbr: Vec<u64> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    // depth-first over independent sets in increasing vertex order
    fn extend(
        start: usize,
        left: usize,
        union: u64,
        chosen: u64,
        nbr: &[u64],
        ok: &dyn Fn(u64) -> bool,
    ) -> bool {
        if left == 0 {
            return ok(union);
        }
        (start..nbr.len()).all(|v| {
            nbr[v] & chosen != 0
                || extend(v + 1, left - 1, union | nbr[v], chosen | 1 << v, nbr, ok)
        })
    }
    let ok = |union: u64| meets_threshold(union.count_ones() as usize, n, bounds);
    extend(0, r, 0, 0, &nbr, &ok)
}

/// Side conditions of the neighborhood-union form: `2 ≤ a ≤ b`, `r ≥ 2`,
/// `n > ((a+b)(r(a+b)−2)+a)/b` and `δ(G) ≥ (r−1)(a+1)²/a`.
pub fn yuan_hao_neighborhood_side_conditions(g: &Graph, bounds: FactorBounds, r: usize) -> bool {
    let (a, b, n, r) = (
        i64::from(bounds.a()),
        i64::from(bounds.b()),
        g.n() as i64,
        r as i64,
    );
    a >= 2
        && r >= 2
        && b * n > (a + b) * (r * (a + b) - 2) + a
        && a * g.min_degree() as i64 >= (r - 1) * (a + 1) * (a + 1)
}
