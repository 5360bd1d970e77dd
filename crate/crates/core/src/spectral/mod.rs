//! Adjacency and signless Laplacian spectra.
//!
//! The largest eigenvalue is computed by shifted power iteration, which is
//! globally convergent for the nonnegative irreducible matrices that arise from
//! connected graphs. Reducible inputs are split into irreducible diagonal
//! blocks first and the maximum over blocks is returned. A dense symmetric
//! eigendecomposition (`nalgebra`) is kept as an independent second route for
//! full spectra of small matrices.

mod bounds;
mod quotient;

pub use bounds::{
    check_l_spectral_bounds, feng_yu_bound, hong_bound, l_quotient_entries, q_order_threshold,
    quotient_charpoly_at, quotient_charpoly_closed_forms, rho_order_threshold, satisfies_q_order,
    satisfies_rho_order, BoundSide, CharpolyMargins, LBoundCheck,
};
pub use quotient::{is_equitable, quotient_matrix, QuotientMatrix};

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Dense real symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<SymmetricMatrix> {
        let order = rows.len();
        if order == 0 || rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidParameter(
                "matrix must be square and non-empty".into(),
            ));
        }
        let entries: Vec<f64> = rows.iter().flatten().copied().collect();
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter(
                "matrix entries must be finite".into(),
            ));
        }
        for i in 0..order {
            for j in 0..i {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(Error::InvalidParameter(format!("asymmetric at ({i},{j})")));
                }
            }
        }
        Ok(SymmetricMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.order)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0.0)
    }

    fn mul_vec(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    fn principal_submatrix(&self, idx: &[usize]) -> SymmetricMatrix {
        let k = idx.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                entries.push(self.get(i, j));
            }
        }
        SymmetricMatrix { order: k, entries }
    }

    /// Index sets of the irreducible diagonal blocks (connected components of
    /// the off-diagonal nonzero pattern).
    fn irreducible_blocks(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut block = vec![s];
            let mut i = 0;
            while i < block.len() {
                let u = block[i];
                i += 1;
                for (v, mark) in seen.iter_mut().enumerate() {
                    if v != u && !*mark && self.get(u, v) != 0.0 {
                        *mark = true;
                        block.push(v);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }
}

/// `A(G)`.
pub fn adjacency(g: &Graph) -> SymmetricMatrix {
    let n = g.n();
    let mut entries = vec![0.0; n * n];
    for (u, v) in g.edges() {
        entries[u * n + v] = 1.0;
        entries[v * n + u] = 1.0;
    }
    SymmetricMatrix { order: n, entries }
}

/// `Q(G) = D(G) + A(G)`.
pub fn signless_laplacian(g: &Graph) -> SymmetricMatrix {
    let mut q = adjacency(g);
    let n = g.n();
    for v in 0..n {
        q.entries[v * n + v] = g.degree(v) as f64;
    }
    q
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    Adjacency,
    SignlessLaplacian,
}

impl MatrixKind {
    pub fn of(self, g: &Graph) -> SymmetricMatrix {
        match self {
            MatrixKind::Adjacency => adjacency(g),
            MatrixKind::SignlessLaplacian => signless_laplacian(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::SignlessLaplacian => "signless-laplacian",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralResult {
    pub value: f64,
    /// `‖Mx − λx‖∞` for the returned eigenvector, normalized to `‖x‖∞ = 1`.
    pub residual: f64,
    pub iterations: usize,
    pub vector: Vec<f64>,
}

/// Largest eigenvalue of a symmetric matrix.
///
/// Converges when `‖Mx − λx‖∞ ≤ tol · max(1, ‖M‖∞)`. Nonnegative blocks are
/// shifted by the identity (making them primitive); blocks with negative
/// entries are shifted by `‖M‖∞` so that the target eigenvalue dominates.
pub fn largest_eigenvalue(m: &SymmetricMatrix, tol: f64) -> Result<SpectralResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let n = m.order();
    let blocks = m.irreducible_blocks();
    let mut best: Option<(SpectralResult, Vec<usize>)> = None;
    let mut iterations = 0;
    for block in blocks {
        let sub = m.principal_submatrix(&block);
        let res = power_iteration(&sub, tol)?;
        iterations += res.iterations;
        if best.as_ref().is_none_or(|(b, _)| res.value > b.value) {
            best = Some((res, block));
        }
    }
    let (res, block) = best.expect("matrix has at least one block");
    let mut vector = vec![0.0; n];
    for (k, &i) in block.iter().enumerate() {
        vector[i] = res.vector[k];
    }
    Ok(SpectralResult {
        value: res.value,
        residual: res.residual,
        iterations,
        vector,
    })
}

fn power_iteration(m: &SymmetricMatrix, tol: f64) -> Result<SpectralResult> {
    let n = m.order();
    if n == 1 {
        return Ok(SpectralResult {
            value: m.get(0, 0),
            residual: 0.0,
            iterations: 0,
            vector: vec![1.0],
        });
    }
    let norm = m.norm_inf();
    let shift = if m.is_nonnegative() { 1.0 } else { norm };
    let threshold = tol * norm.max(1.0);
    let mut x = vec![1.0; n];
    let mut w = vec![0.0; n];
    for it in 1..=MAX_ITERATIONS {
        m.mul_vec(&x, &mut w);
        let xx: f64 = x.iter().map(|v| v * v).sum();
        let lambda = x.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>() / xx;
        let xmax = x.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let residual = x
            .iter()
            .zip(&w)
            .map(|(xi, wi)| (wi - lambda * xi).abs())
            .fold(0.0, f64::max)
            / xmax;
        if residual <= threshold {
            let vector = x.iter().map(|v| v / xmax).collect();
            return Ok(SpectralResult {
                value: lambda,
                residual,
                iterations: it,
                vector,
            });
        }
        let mut nrm = 0.0f64;
        for (xi, wi) in x.iter_mut().zip(&w) {
            *xi = wi + shift * *xi;
            nrm = nrm.max(xi.abs());
        }
        if nrm == 0.0 {
            return Err(Error::NoConvergence(it));
        }
        for xi in x.iter_mut() {
            *xi /= nrm;
        }
    }
    Err(Error::NoConvergence(MAX_ITERATIONS))
}

/// `ρ(G)`, the adjacency spectral radius.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    Ok(largest_eigenvalue(&adjacency(g), DEFAULT_TOL)?.value)
}

/// `q(G)`, the signless Laplacian spectral radius.
pub fn signless_spectral_radius(g: &Graph) -> Result<f64> {
    Ok(largest_eigenvalue(&signless_laplacian(g), DEFAULT_TOL)?.value)
}

/// All eigenvalues, descending, by dense symmetric eigendecomposition.
pub fn eigenvalues(m: &SymmetricMatrix) -> Vec<f64> {
    let n = m.order();
    let dm = DMatrix::from_row_slice(n, n, &m.entries);
    let mut ev: Vec<f64> = dm.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}
