//! Closed-form spectral bounds and the `L(n,a)` quotient identities.

use serde::Serialize;

use super::{adjacency, largest_eigenvalue, quotient_matrix, signless_laplacian, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::{construct_l, Graph};

/// `√(2m − n + 1)`, an upper bound on `ρ(G)` for connected `G`.
pub fn hong_bound(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected("hong_bound"));
    }
    Ok(((2 * g.m() + 1 - g.n()) as f64).sqrt())
}

/// `2m/(n−1) + n − 2`, an upper bound on `q(G)` for connected `G` with `n ≥ 2`.
pub fn feng_yu_bound(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected("feng_yu_bound"));
    }
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter("feng_yu_bound needs n >= 2".into()));
    }
    Ok((2 * g.m()) as f64 / (n - 1) as f64 + n as f64 - 2.0)
}

/// Smallest `n` with `n ≥ 2 + √(32a² + 24a + 5)`, decided in integers.
pub fn rho_order_threshold(a: usize) -> usize {
    let k = 32 * a * a + 24 * a + 5;
    let mut r = (k as f64).sqrt() as usize;
    while r * r < k {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= k {
        r -= 1;
    }
    r + 2
}

pub fn satisfies_rho_order(n: usize, a: usize) -> bool {
    n >= rho_order_threshold(a)
}

/// `6a + 5`.
pub fn q_order_threshold(a: usize) -> usize {
    6 * a + 5
}

pub fn satisfies_q_order(n: usize, a: usize) -> bool {
    n >= q_order_threshold(a)
}

/// Entries of the quotient of `A(L(n,a))` for the parts
/// `(V(K_2), V(K_{4a+1}), V(K_{n-4a-3}))`.
pub fn l_quotient_entries(n: usize, a: usize) -> [[i64; 3]; 3] {
    let (n, a) = (n as i64, a as i64);
    [
        [1, 4 * a + 1, 0],
        [2, 4 * a, n - 4 * a - 3],
        [0, 4 * a + 1, n - 4 * a - 4],
    ]
}

/// `det(xI − B)` for the `L(n,a)` quotient, in exact integer arithmetic.
pub fn quotient_charpoly_at(n: usize, a: usize, x: i64) -> i64 {
    let b = l_quotient_entries(n, a);
    let m = |i: usize, j: usize| if i == j { x - b[i][j] } else { -b[i][j] };
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CharpolyMargins {
    /// `n² − 4n − 32a² − 24a − 1`
    pub at_n_minus_2: i64,
    /// `−2(4a + 1)²`
    pub at_n_minus_3: i64,
}

/// Closed forms of the `L(n,a)` quotient characteristic polynomial at `n−2`
/// and `n−3`.
pub fn quotient_charpoly_closed_forms(n: usize, a: usize) -> Result<CharpolyMargins> {
    if a < 1 || n < 4 * a + 4 {
        return Err(Error::InvalidParameter(format!(
            "need a >= 1 and n >= 4a+4, got n={n}, a={a}"
        )));
    }
    let (n, a) = (n as i64, a as i64);
    Ok(CharpolyMargins {
        at_n_minus_2: n * n - 4 * n - 32 * a * a - 24 * a - 1,
        at_n_minus_3: -2 * (4 * a + 1) * (4 * a + 1),
    })
}

/// One side (ρ or q) of the `L(n,a)` check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundSide {
    /// Largest eigenvalue of the full matrix (power iteration).
    pub full: f64,
    /// Largest eigenvalue of the equitable quotient.
    pub quotient: f64,
    pub bound: f64,
    /// `bound − full`
    pub margin: f64,
    /// `|full − quotient|`
    pub agreement: f64,
}

impl BoundSide {
    pub fn within_bound(&self, tol: f64) -> bool {
        self.full <= self.bound + tol
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LBoundCheck {
    pub n: usize,
    pub a: usize,
    /// Present when `n ≥ 2 + √(32a² + 24a + 5)`.
    pub rho: Option<BoundSide>,
    /// Present when `n ≥ 6a + 5`.
    pub q: Option<BoundSide>,
    /// Trace of the adjacency quotient.
    pub quotient_trace: f64,
    pub tol: f64,
}

impl LBoundCheck {
    /// Every applicable side is within its bound and its two eigenvalue routes
    /// agree, both up to `tol`.
    pub fn holds(&self) -> bool {
        [&self.rho, &self.q]
            .into_iter()
            .flatten()
            .all(|s| s.within_bound(self.tol) && s.agreement <= self.tol)
    }
}

/// Checks `ρ(L(n,a)) ≤ n − 2` and `q(L(n,a)) ≤ 2n − 4` where their order
/// hypotheses hold, computing each value both on the full matrix and on the
/// equitable quotient. Fails with [`Error::Hypothesis`] when neither order
/// hypothesis is met.
pub fn check_l_spectral_bounds(n: usize, a: usize, tol: f64) -> Result<LBoundCheck> {
    let rho_ok = a >= 1 && satisfies_rho_order(n, a);
    let q_ok = a >= 1 && satisfies_q_order(n, a);
    if !rho_ok && !q_ok {
        return Err(Error::Hypothesis(format!(
            "n={n} is below both order thresholds for a={a} ({} and {})",
            rho_order_threshold(a),
            q_order_threshold(a)
        )));
    }
    let l = construct_l(n, a)?;
    let side = |m: super::SymmetricMatrix, bound: f64| -> Result<BoundSide> {
        let full = largest_eigenvalue(&m, DEFAULT_TOL)?.value;
        let quotient = quotient_matrix(&m, &l.parts)?.largest_eigenvalue();
        Ok(BoundSide {
            full,
            quotient,
            bound,
            margin: bound - full,
            agreement: (full - quotient).abs(),
        })
    };
    let a_mat = adjacency(&l.graph);
    let quotient_trace = quotient_matrix(&a_mat, &l.parts)?.trace();
    let rho = rho_ok.then(|| side(a_mat, n as f64 - 2.0)).transpose()?;
    let q = q_ok
        .then(|| side(signless_laplacian(&l.graph), 2.0 * n as f64 - 4.0))
        .transpose()?;
    Ok(LBoundCheck {
        n,
        a,
        rho,
        q,
        quotient_trace,
        tol,
    })
}
