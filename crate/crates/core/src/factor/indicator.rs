//! Exact certificates for the oracle routes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::DegreeBounds;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Formats a rational as `"p/q"` (always with an explicit denominator).
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| Error::InvalidParameter(format!("rational {s:?} lacks '/'")))?;
    let p: BigInt = p
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad numerator in {s:?}")))?;
    let q: BigInt = q
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad denominator in {s:?}")))?;
    if q.is_zero() {
        return Err(Error::InvalidParameter(format!(
            "zero denominator in {s:?}"
        )));
    }
    Ok(BigRational::new(p, q))
}

fn serialize_rationals<S: Serializer>(
    v: &[BigRational],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&rational_string(r))?;
    }
    seq.end()
}

/// Edge weights `h: E → [0,1]`, aligned with [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndicatorAssignment {
    pub edges: Vec<(usize, usize)>,
    #[serde(serialize_with = "serialize_rationals")]
    pub weights: Vec<BigRational>,
}

impl IndicatorAssignment {
    pub fn new(
        edges: Vec<(usize, usize)>,
        weights: Vec<BigRational>,
    ) -> Result<IndicatorAssignment> {
        if edges.len() != weights.len() {
            return Err(Error::DomainMismatch(
                "edge and weight counts differ".into(),
            ));
        }
        Ok(IndicatorAssignment { edges, weights })
    }

    pub fn constant(g: &Graph, value: BigRational) -> IndicatorAssignment {
        IndicatorAssignment {
            edges: g.edges(),
            weights: vec![value; g.m()],
        }
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<&BigRational> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges
            .iter()
            .position(|&e| e == key)
            .map(|i| &self.weights[i])
    }

    /// `Σ_{e ∋ x} h(e)` for every vertex.
    pub fn vertex_sums(&self, n: usize) -> Vec<BigRational> {
        let mut sums = vec![BigRational::zero(); n];
        for (&(u, v), w) in self.edges.iter().zip(&self.weights) {
            sums[u] += w;
            sums[v] += w;
        }
        sums
    }

    /// The support `F_h = {e : h(e) > 0}`.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .zip(&self.weights)
            .filter(|(_, w)| w.is_positive())
            .map(|(&e, _)| e)
            .collect()
    }
}

/// Exact check of `0 ≤ h ≤ 1` and `f(x) ≤ Σ_{e∋x} h(e) ≤ g(x)`.
///
/// Errors when `h` is not defined on exactly `E(g)` or the bounds do not
/// cover `V(g)`.
pub fn validate_indicator(g: &Graph, h: &IndicatorAssignment, db: &DegreeBounds) -> Result<bool> {
    db.check_len(g)?;
    if h.edges != g.edges() || h.weights.len() != h.edges.len() {
        return Err(Error::DomainMismatch(
            "assignment is not defined on exactly E(G)".into(),
        ));
    }
    let one = BigRational::one();
    if h.weights.iter().any(|w| w.is_negative() || *w > one) {
        return Ok(false);
    }
    let sums = h.vertex_sums(g.n());
    Ok(sums.iter().enumerate().all(|(x, s)| {
        *s >= BigRational::from_integer(db.lower(x).into())
            && *s <= BigRational::from_integer(db.upper(x).into())
    }))
}

/// Vertex multipliers `y` proving that no `h` exists.
///
/// For the instance `f ≤ A h ≤ g`, `0 ≤ h ≤ 1` (with the forced edge deleted
/// and the bounds reduced when `forced` is set), every feasible `h` and
/// `r = A h ∈ [f, g]` satisfy `y·(A h − r) = 0`. The certificate is valid when
/// the maximum of `y·(A h − r)` over the box is negative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfeasibilityCertificate {
    pub forced: Option<(usize, usize)>,
    #[serde(serialize_with = "serialize_rationals")]
    pub multipliers: Vec<BigRational>,
}

impl InfeasibilityCertificate {
    /// Re-checks the certificate from scratch against `g` and `db`.
    pub fn verify(&self, g: &Graph, db: &DegreeBounds) -> Result<bool> {
        db.check_len(g)?;
        if self.multipliers.len() != g.n() {
            return Err(Error::DomainMismatch(
                "one multiplier per vertex expected".into(),
            ));
        }
        let (graph, bounds) = match self.forced {
            None => (g.clone(), db.clone()),
            Some((u, v)) => {
                if !g.has_edge(u, v) {
                    return Err(Error::DomainMismatch(format!(
                        "forced ({u},{v}) is not an edge"
                    )));
                }
                match db.forced_residual(u, v) {
                    // an endpoint cannot absorb h = 1 at all
                    None => return Ok(true),
                    Some(r) => (g.with_edges_removed(&[(u, v)])?, r),
                }
            }
        };
        let y = &self.multipliers;
        let zero = BigRational::zero();
        let mut best = BigRational::zero();
        for (u, v) in graph.edges() {
            let c = &y[u] + &y[v];
            if c > zero {
                best += c;
            }
        }
        for (x, yx) in y.iter().enumerate() {
            let lo = -yx * BigRational::from_integer(bounds.lower(x).into());
            let hi = -yx * BigRational::from_integer(bounds.upper(x).into());
            best += if lo > hi { lo } else { hi };
        }
        Ok(best.is_negative())
    }
}
