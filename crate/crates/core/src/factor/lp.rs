//! Exact rational LP feasibility for the degree-constrained edge polytope.
//!
//! The system `f(x) ≤ Σ_{e∋x} h(e) ≤ g(x)`, `0 ≤ h ≤ 1` is written with one
//! row per vertex, `Σ_{e∋x} h(e) − s_x + r_x = f(x)`, where `s_x ∈ [0, g−f]`
//! is a surplus variable and `r_x ≥ 0` an artificial. Phase one of a
//! bounded-variable primal simplex with Bland's rule minimizes `Σ r_x`. At an
//! optimum with positive value the phase-one duals form an
//! [`InfeasibilityCertificate`].

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::indicator::{IndicatorAssignment, InfeasibilityCertificate};
use super::{Certificate, DegreeBounds, FactorBounds, Property, Verdict};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(IndicatorAssignment),
    Infeasible(InfeasibilityCertificate),
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible(_))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    Basic,
    AtLower,
    AtUpper,
}

struct Tableau {
    rows: usize,
    cols: usize,
    /// `B⁻¹A`, row-major.
    t: Vec<BigRational>,
    /// Values of the basic variables.
    beta: Vec<BigRational>,
    /// Phase-one reduced costs.
    d: Vec<BigRational>,
    upper: Vec<Option<BigRational>>,
    status: Vec<Status>,
    basis: Vec<usize>,
}

impl Tableau {
    fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.t[i * self.cols + j]
    }

    fn value(&self, j: usize) -> BigRational {
        match self.status[j] {
            Status::AtLower => BigRational::zero(),
            Status::AtUpper => self.upper[j].clone().expect("finite upper bound"),
            Status::Basic => {
                let i = self
                    .basis
                    .iter()
                    .position(|&b| b == j)
                    .expect("basic variable in basis");
                self.beta[i].clone()
            }
        }
    }

    /// Basis change on `t` and `d`; `beta` is maintained by the caller.
    fn pivot(&mut self, r: usize, j: usize) {
        let cols = self.cols;
        let p = self.at(r, j).clone();
        for k in 0..cols {
            let v = &self.t[r * cols + k] / &p;
            self.t[r * cols + k] = v;
        }
        let pivot_row: Vec<BigRational> = self.t[r * cols..(r + 1) * cols].to_vec();
        for i in 0..self.rows {
            if i == r {
                continue;
            }
            let factor = self.at(i, j).clone();
            if factor.is_zero() {
                continue;
            }
            for (k, pk) in pivot_row.iter().enumerate() {
                if !pk.is_zero() {
                    let v = &self.t[i * cols + k] - &factor * pk;
                    self.t[i * cols + k] = v;
                }
            }
        }
        let factor = self.d[j].clone();
        if !factor.is_zero() {
            for (k, pk) in pivot_row.iter().enumerate() {
                if !pk.is_zero() {
                    self.d[k] = &self.d[k] - &factor * pk;
                }
            }
        }
    }

    /// Runs phase one to optimality.
    fn solve(&mut self) {
        loop {
            // Bland: lowest eligible index enters
            let entering = (0..self.cols).find(|&j| match self.status[j] {
                Status::AtLower => {
                    self.d[j].is_negative()
                        && self.upper[j].as_ref().is_none_or(|u| u.is_positive())
                }
                Status::AtUpper => self.d[j].is_positive(),
                Status::Basic => false,
            });
            let Some(j) = entering else { return };
            let increasing = self.status[j] == Status::AtLower;
            // basic i moves by -sigma * theta * t[i][j]
            let mut best: Option<(BigRational, Option<(usize, Status)>)> =
                self.upper[j].clone().map(|u| (u, None));
            for i in 0..self.rows {
                let alpha = if increasing {
                    self.at(i, j).clone()
                } else {
                    -self.at(i, j)
                };
                if alpha.is_zero() {
                    continue;
                }
                let bv = self.basis[i];
                let (limit, to) = if alpha.is_positive() {
                    (&self.beta[i] / &alpha, Status::AtLower)
                } else {
                    match &self.upper[bv] {
                        Some(u) => ((u - &self.beta[i]) / -&alpha, Status::AtUpper),
                        None => continue,
                    }
                };
                let better = match &best {
                    None => true,
                    Some((theta, who)) => {
                        limit < *theta
                            || (limit == *theta && who.is_some_and(|(r, _)| bv < self.basis[r]))
                    }
                };
                if better {
                    best = Some((limit, Some((i, to))));
                }
            }
            let (theta, leaving) = best.expect("phase one is bounded below");
            for i in 0..self.rows {
                let step = &theta * self.at(i, j);
                if increasing {
                    self.beta[i] -= step;
                } else {
                    self.beta[i] += step;
                }
            }
            match leaving {
                None => {
                    self.status[j] = if increasing {
                        Status::AtUpper
                    } else {
                        Status::AtLower
                    };
                }
                Some((r, to)) => {
                    let entering_value = if increasing {
                        theta
                    } else {
                        self.upper[j].clone().expect("at upper implies finite") - theta
                    };
                    let out = self.basis[r];
                    self.status[out] = to;
                    self.status[j] = Status::Basic;
                    self.basis[r] = j;
                    self.beta[r] = entering_value;
                    self.pivot(r, j);
                }
            }
        }
    }
}

/// Decides `f ≤ A h ≤ g`, `0 ≤ h ≤ 1` on `g`, optionally with `h(forced) = 1`
/// (via the reduced instance: the edge deleted and both endpoint bounds
/// lowered by one, lower bounds clamped at zero).
pub fn solve_degree_bounds(
    g: &Graph,
    db: &DegreeBounds,
    forced: Option<(usize, usize)>,
) -> Result<LpOutcome> {
    db.check_len(g)?;
    let (graph, bounds) = match forced {
        None => (g.clone(), db.clone()),
        Some((u, v)) => {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidParameter(format!(
                    "forced ({u},{v}) is not an edge"
                )));
            }
            match db.forced_residual(u, v) {
                None => {
                    return Ok(LpOutcome::Infeasible(InfeasibilityCertificate {
                        forced,
                        multipliers: vec![BigRational::zero(); g.n()],
                    }))
                }
                Some(r) => (g.with_edges_removed(&[(u, v)])?, r),
            }
        }
    };
    let h = match phase_one(&graph, &bounds) {
        Ok(h) => h,
        Err(multipliers) => {
            return Ok(LpOutcome::Infeasible(InfeasibilityCertificate {
                forced,
                multipliers,
            }))
        }
    };
    // lift back onto E(g)
    let edges = g.edges();
    let reduced_edges = graph.edges();
    let mut weights = Vec::with_capacity(edges.len());
    let mut k = 0;
    for &e in &edges {
        if Some(e) == forced.map(|(u, v)| if u < v { (u, v) } else { (v, u) }) {
            weights.push(BigRational::one());
        } else {
            debug_assert_eq!(reduced_edges[k], e);
            weights.push(h[k].clone());
            k += 1;
        }
    }
    Ok(LpOutcome::Feasible(IndicatorAssignment::new(
        edges, weights,
    )?))
}

/// Returns edge weights on success or the phase-one dual vector on failure.
fn phase_one(
    g: &Graph,
    db: &DegreeBounds,
) -> std::result::Result<Vec<BigRational>, Vec<BigRational>> {
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    let cols = m + 2 * n;
    let rows = n;
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut t = vec![zero.clone(); rows * cols];
    for (e, &(u, v)) in edges.iter().enumerate() {
        t[u * cols + e] = one.clone();
        t[v * cols + e] = one.clone();
    }
    for x in 0..n {
        t[x * cols + m + x] = -one.clone();
        t[x * cols + m + n + x] = one.clone();
    }
    let mut upper: Vec<Option<BigRational>> = vec![Some(one.clone()); m];
    upper.extend((0..n).map(|x| {
        Some(BigRational::from_integer(
            (db.upper(x) - db.lower(x)).into(),
        ))
    }));
    upper.extend((0..n).map(|_| None));
    let mut status = vec![Status::AtLower; cols];
    for s in status.iter_mut().skip(m + n) {
        *s = Status::Basic;
    }
    let beta: Vec<BigRational> = (0..n)
        .map(|x| BigRational::from_integer(db.lower(x).into()))
        .collect();
    // d_j = c_j - Σ_i c_B(i) t[i][j] with c = 1 on artificials
    let mut d = vec![zero.clone(); cols];
    for (j, dj) in d.iter_mut().enumerate() {
        let c = if j >= m + n {
            one.clone()
        } else {
            zero.clone()
        };
        let col_sum: BigRational = (0..rows).map(|i| t[i * cols + j].clone()).sum();
        *dj = c - col_sum;
    }
    let mut tab = Tableau {
        rows,
        cols,
        t,
        beta,
        d,
        upper,
        status,
        basis: (m + n..m + 2 * n).collect(),
    };
    tab.solve();
    let infeasibility: BigRational = (m + n..cols).map(|j| tab.value(j)).sum();
    if infeasibility.is_zero() {
        Ok((0..m).map(|j| tab.value(j)).collect())
    } else {
        // y_x = c_{r_x} - d_{r_x}
        Err((0..n).map(|x| &one - &tab.d[m + n + x]).collect())
    }
}

/// `G` has a fractional `[a,b]`-factor, decided by exact LP.
pub fn has_factor_lp(g: &Graph, bounds: FactorBounds) -> Result<Verdict> {
    let db = DegreeBounds::uniform(g.n(), bounds);
    Ok(match solve_degree_bounds(g, &db, None)? {
        LpOutcome::Feasible(assignment) => Verdict {
            property: Property::Factor,
            holds: true,
            certificate: Certificate::Factor { assignment },
        },
        LpOutcome::Infeasible(certificate) => Verdict {
            property: Property::Factor,
            holds: false,
            certificate: Certificate::NoFactor { certificate },
        },
    })
}

/// `G` is fractional `[a,b]`-covered, decided by one exact LP per edge.
///
/// An edgeless graph is covered only if it has a fractional factor, which
/// for `a ≥ 1` it never does; for graphs with edges the factor condition is
/// implied by any single feasible edge.
pub fn is_covered_oracle(g: &Graph, bounds: FactorBounds) -> Result<Verdict> {
    let db = DegreeBounds::uniform(g.n(), bounds);
    if g.m() == 0 {
        if let LpOutcome::Infeasible(certificate) = solve_degree_bounds(g, &db, None)? {
            return Ok(Verdict {
                property: Property::Covered,
                holds: false,
                certificate: Certificate::NoFactor { certificate },
            });
        }
    }
    let mut assignments = Vec::with_capacity(g.m());
    for edge in g.edges() {
        match solve_degree_bounds(g, &db, Some(edge))? {
            LpOutcome::Feasible(h) => assignments.push(h),
            LpOutcome::Infeasible(certificate) => {
                return Ok(Verdict {
                    property: Property::Covered,
                    holds: false,
                    certificate: Certificate::InfeasibleEdge { edge, certificate },
                })
            }
        }
    }
    Ok(Verdict {
        property: Property::Covered,
        holds: true,
        certificate: Certificate::PerEdge { assignments },
    })
}
