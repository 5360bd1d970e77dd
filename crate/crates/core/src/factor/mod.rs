//! Deciders for fractional `[a,b]`-factors and fractional `[a,b]`-coveredness.
//!
//! Three independent routes are provided:
//!
//! * [`structural`]: exhaustive evaluation of the deficiency condition over all
//!   vertex subsets, producing a [`DeficiencyWitness`] on failure;
//! * [`lp`]: an exact rational bounded-variable simplex over the edge
//!   polytope, producing an [`IndicatorAssignment`] or a Farkas-type
//!   [`InfeasibilityCertificate`];
//! * [`half_integral`]: brute-force enumeration of `{0, 1/2, 1}` edge weights.

pub mod half_integral;
pub mod indicator;
pub mod lp;
pub mod structural;

pub use half_integral::{half_integral_search, DEFAULT_EDGE_CAP};
pub use indicator::{validate_indicator, IndicatorAssignment, InfeasibilityCertificate};
pub use lp::{has_factor_lp, is_covered_oracle, solve_degree_bounds, LpOutcome};
pub use structural::{
    deficiency, epsilon, factor_deficiency, has_factor_structural, is_covered_structural,
    low_degree_set, DeficiencyWitness, StructuralOptions,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Uniform degree-sum bounds `1 ≤ a ≤ b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FactorBounds {
    a: u32,
    b: u32,
}

impl FactorBounds {
    pub fn new(a: u32, b: u32) -> Result<FactorBounds> {
        if a < 1 || a > b {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= a <= b, got a={a}, b={b}"
            )));
        }
        Ok(FactorBounds { a, b })
    }

    pub fn a(self) -> u32 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }
}

/// Per-vertex degree-sum bounds `0 ≤ f(x) ≤ g(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    lower: Vec<u32>,
    upper: Vec<u32>,
}

impl DegreeBounds {
    pub fn new(lower: Vec<u32>, upper: Vec<u32>) -> Result<DegreeBounds> {
        if lower.len() != upper.len() {
            return Err(Error::InvalidParameter(
                "bound vectors differ in length".into(),
            ));
        }
        if let Some(x) = (0..lower.len()).find(|&x| lower[x] > upper[x]) {
            return Err(Error::InvalidParameter(format!(
                "f({x}) = {} exceeds g({x}) = {}",
                lower[x], upper[x]
            )));
        }
        Ok(DegreeBounds { lower, upper })
    }

    pub fn uniform(n: usize, bounds: FactorBounds) -> DegreeBounds {
        DegreeBounds {
            lower: vec![bounds.a; n],
            upper: vec![bounds.b; n],
        }
    }

    /// Residual bounds after fixing `h(uv) = 1`: both endpoints lose one unit
    /// from each bound, lower bounds clamped at zero. `None` when an endpoint
    /// has upper bound zero, in which case no such factor exists.
    pub fn forced_residual(&self, u: usize, v: usize) -> Option<DegreeBounds> {
        let mut out = self.clone();
        for x in [u, v] {
            out.lower[x] = out.lower[x].saturating_sub(1);
            out.upper[x] = out.upper[x].checked_sub(1)?;
        }
        Some(out)
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn lower(&self, x: usize) -> u32 {
        self.lower[x]
    }

    pub fn upper(&self, x: usize) -> u32 {
        self.upper[x]
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::DomainMismatch(format!(
                "bounds cover {} vertices, graph has {}",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Which property a verdict is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Covered,
    Factor,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Structural failure: a set `S` violating the deficiency condition.
    Deficiency(DeficiencyWitness),
    /// Structural success: all subsets were checked (or provably skipped).
    Exhausted { subsets_checked: u64 },
    /// A single fractional factor.
    Factor { assignment: IndicatorAssignment },
    /// One fractional factor per edge, each with `h(e) = 1` on its edge.
    PerEdge {
        assignments: Vec<IndicatorAssignment>,
    },
    /// No fractional factor exists with `h(edge) = 1`.
    InfeasibleEdge {
        edge: (usize, usize),
        certificate: InfeasibilityCertificate,
    },
    /// No fractional factor exists at all.
    NoFactor {
        certificate: InfeasibilityCertificate,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub property: Property,
    pub holds: bool,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn witness(&self) -> Option<&DeficiencyWitness> {
        match &self.certificate {
            Certificate::Deficiency(w) => Some(w),
            _ => None,
        }
    }
}

/// Decision route for the CLI and campaigns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Structural,
    Lp,
}

pub fn decide(
    g: &Graph,
    bounds: FactorBounds,
    property: Property,
    method: Method,
) -> Result<Verdict> {
    match (property, method) {
        (Property::Covered, Method::Structural) => {
            is_covered_structural(g, bounds, &StructuralOptions::default())
        }
        (Property::Factor, Method::Structural) => {
            has_factor_structural(g, bounds, &StructuralOptions::default())
        }
        (Property::Covered, Method::Lp) => is_covered_oracle(g, bounds),
        (Property::Factor, Method::Lp) => has_factor_lp(g, bounds),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_validation() {
        assert!(FactorBounds::new(0, 1).is_err());
        assert!(FactorBounds::new(3, 2).is_err());
        assert!(FactorBounds::new(2, 2).is_ok());
        assert!(DegreeBounds::new(vec![1, 2], vec![1, 1]).is_err());
        assert!(DegreeBounds::new(vec![1], vec![1, 1]).is_err());
    }

    #[test]
    fn forced_residual_clamps() {
        let db = DegreeBounds::uniform(3, FactorBounds::new(1, 2).unwrap());
        let r = db.forced_residual(0, 2).unwrap();
        assert_eq!((r.lower(0), r.upper(0)), (0, 1));
        assert_eq!((r.lower(1), r.upper(1)), (1, 2));
        assert_eq!((r.lower(2), r.upper(2)), (0, 1));
        let zero = DegreeBounds::new(vec![0, 0], vec![0, 1]).unwrap();
        assert!(zero.forced_residual(0, 1).is_none());
    }
}
