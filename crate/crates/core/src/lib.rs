//! Exact verification toolkit for fractional `[a,b]`-factors and fractional
//! `[a,b]`-covered graphs.
//!
//! The crate is organised in four layers:
//!
//! * [`graph`] and [`graph6`]: immutable simple graphs, the join/union
//!   construction algebra, the extremal families `H(n,a)` and `L(n,a)`, and
//!   graph6 serialization.
//! * [`spectral`]: adjacency and signless Laplacian matrices, a Perron power
//!   iteration, equitable quotient matrices and the closed-form spectral bounds.
//! * [`factor`]: the deficiency characterization of coveredness and factor
//!   existence, an exact rational simplex oracle, and a brute-force
//!   half-integral oracle. Every verdict carries a re-checkable certificate.
//! * [`harness`]: parameter sweeps, oracle-equivalence campaigns and threshold
//!   scans emitting JSON-lines reports; driven by the `fracfactor` binary.

pub mod error;
pub mod factor;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod spectral;

pub use error::{Error, Result};
pub use factor::{DegreeBounds, FactorBounds};
pub use graph::{Graph, VertexSet};
