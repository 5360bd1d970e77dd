//! Campaign runner: parameter sweeps and randomized scans that emit
//! JSON-lines [`Report`]s.
//!
//! Inputs are generated sequentially from a seeded ChaCha stream, then cases
//! are evaluated on a rayon pool of `worker_count` threads. Results are
//! collected in input order, so a report depends only on its configuration
//! and never on scheduling.

mod campaigns;
mod report;
mod sample;
mod yuan_hao;

pub use campaigns::{
    bounds_campaign, oracle_equivalence_campaign, spectral_threshold_scan, verify_h_not_covered,
    verify_l_spectral_bounds, verify_spectral_ordering, yuan_hao_campaign, ScanConfig,
    AGREEMENT_TOL, NEAR_TIE_BAND, SCAN_TOL,
};
pub use report::{CaseRecord, Report, Status, Summary};
pub use sample::{
    enumerate_connected_graphs, sample_connected_graph, sample_dense_graph, sample_gnp,
    sample_near_extremal, ENUMERATION_MAX,
};
pub use yuan_hao::{
    yuan_hao_degree_hypothesis, yuan_hao_degree_side_conditions, yuan_hao_neighborhood_hypothesis,
    yuan_hao_neighborhood_side_conditions,
};

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factor::FactorBounds;
use crate::graph::Graph;
use crate::graph6::enumerate_from_file;

/// A nonempty inclusive integer interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    lo: usize,
    hi: usize,
}

impl IntRange {
    pub fn new(lo: usize, hi: usize) -> Result<IntRange> {
        if lo > hi {
            return Err(Error::InvalidParameter(format!("empty range [{lo}, {hi}]")));
        }
        Ok(IntRange { lo, hi })
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    pub fn contains(self, x: usize) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Random graph families for campaigns.
#[derive(Clone, Debug, PartialEq)]
pub enum Sampler {
    /// `K_n` minus `k` uniform edges, `k` uniform in `0..=max_removed`.
    Dense { n: usize, max_removed: usize },
    /// Connected graphs: a random recursive tree plus `G(n,p)` noise, with
    /// `n` uniform in the range and `p` uniform in `[0,1)`.
    Connected { n: IntRange },
    /// `G(n,p)` with `n` uniform in the range and `p` uniform in
    /// `[p_min, p_max)`.
    Gnp { n: IntRange, p_min: f64, p_max: f64 },
    /// `H(n,a)` plus up to `max_added` random non-edges, minus up to
    /// `max_removed` random edges, randomly relabelled.
    NearExtremal {
        n: usize,
        a: usize,
        max_added: usize,
        max_removed: usize,
    },
}

impl Sampler {
    pub fn draw(&self, rng: &mut ChaCha8Rng) -> Result<Graph> {
        match *self {
            Sampler::Dense { n, max_removed } => {
                let k = rng.gen_range(0..=max_removed);
                sample_dense_graph(n, k, rng)
            }
            Sampler::Connected { n } => {
                let n = rng.gen_range(n.iter());
                let p: f64 = rng.gen();
                sample_connected_graph(n, p, rng)
            }
            Sampler::Gnp { n, p_min, p_max } => {
                if !(0.0..=1.0).contains(&p_min) || !(p_min..=1.0).contains(&p_max) {
                    return Err(Error::InvalidParameter(format!(
                        "bad probability range [{p_min}, {p_max})"
                    )));
                }
                let n = rng.gen_range(n.iter());
                let p = p_min + (p_max - p_min) * rng.gen::<f64>();
                sample_gnp(n, p, rng)
            }
            Sampler::NearExtremal {
                n,
                a,
                max_added,
                max_removed,
            } => {
                let added = rng.gen_range(0..=max_added);
                let removed = rng.gen_range(0..=max_removed);
                sample_near_extremal(n, a, added, removed, rng)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    /// graph6 file, one graph per line.
    File(PathBuf),
    /// Every connected graph up to isomorphism with `n ≤ n_max`.
    Enumerated {
        n_max: usize,
    },
    Random {
        sampler: Sampler,
        count: usize,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CampaignConfig {
    pub a_range: IntRange,
    pub b_range: IntRange,
    pub n_range: IntRange,
    /// Explicit `(a,b)` pairs; when empty, every `a ≤ b` from the two ranges.
    pub pairs: Vec<FactorBounds>,
    pub tol: f64,
    pub graph_source: GraphSource,
    pub seed: u64,
    pub worker_count: usize,
    /// Largest edge count for the half-integral cross-check.
    pub edge_cap: usize,
}

impl CampaignConfig {
    pub fn new(graph_source: GraphSource) -> CampaignConfig {
        let r = |lo, hi| IntRange { lo, hi };
        CampaignConfig {
            a_range: r(1, 3),
            b_range: r(1, 4),
            n_range: r(1, 7),
            pairs: Vec::new(),
            tol: 1e-9,
            graph_source,
            seed: 0,
            worker_count: 1,
            edge_cap: crate::factor::DEFAULT_EDGE_CAP,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if self.worker_count == 0 {
            return Err(Error::InvalidParameter(
                "worker_count must be positive".into(),
            ));
        }
        if self.bounds_grid()?.is_empty() {
            return Err(Error::InvalidParameter(
                "no (a,b) pair with 1 <= a <= b in the ranges".into(),
            ));
        }
        Ok(())
    }

    pub fn bounds_grid(&self) -> Result<Vec<FactorBounds>> {
        if !self.pairs.is_empty() {
            return Ok(self.pairs.clone());
        }
        let mut out = Vec::new();
        for a in self.a_range.iter() {
            for b in self.b_range.iter() {
                if a >= 1 && a <= b {
                    out.push(FactorBounds::new(a as u32, b as u32)?);
                }
            }
        }
        Ok(out)
    }

    /// Materializes the graph source; random graphs are drawn sequentially
    /// from `seed`.
    pub fn load_graphs(&self) -> Result<Vec<Graph>> {
        match &self.graph_source {
            GraphSource::File(path) => enumerate_from_file(path)?.collect(),
            GraphSource::Enumerated { n_max } => {
                let mut out = Vec::new();
                for n in 1..=*n_max {
                    out.extend(enumerate_connected_graphs(n)?);
                }
                Ok(out)
            }
            GraphSource::Random { sampler, count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                (0..*count).map(|_| sampler.draw(&mut rng)).collect()
            }
        }
    }
}

/// Evaluates `f` on every item using `workers` threads and returns the
/// records in item order, numbered from zero.
pub(crate) fn run_cases<T, F>(workers: usize, items: &[T], f: F) -> Result<Vec<CaseRecord>>
where
    T: Sync,
    F: Fn(u64, &T) -> Result<CaseRecord> + Sync + Send,
{
    if workers == 0 {
        return Err(Error::InvalidParameter(
            "worker_count must be positive".into(),
        ));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot build worker pool: {e}")))?;
    pool.install(|| {
        items
            .par_iter()
            .enumerate()
            .map(|(i, item)| f(i as u64, item))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert!(IntRange::new(3, 2).is_err());
        let r = IntRange::new(2, 4).unwrap();
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![2, 3, 4]);
        assert!(r.contains(4) && !r.contains(5));
    }

    #[test]
    fn config_validation() {
        let mut c = CampaignConfig::new(GraphSource::Enumerated { n_max: 3 });
        assert!(c.validate().is_ok());
        c.tol = 0.0;
        assert!(c.validate().is_err());
        c.tol = 1e-9;
        c.worker_count = 0;
        assert!(c.validate().is_err());
        c.worker_count = 2;
        c.a_range = IntRange::new(5, 5).unwrap();
        c.b_range = IntRange::new(1, 4).unwrap();
        assert!(c.validate().is_err());
        c.pairs = vec![FactorBounds::new(2, 3).unwrap()];
        assert_eq!(c.bounds_grid().unwrap().len(), 1);
    }

    #[test]
    fn bounds_grid_product() {
        let c = CampaignConfig::new(GraphSource::Enumerated { n_max: 3 });
        let grid: Vec<_> = c
            .bounds_grid()
            .unwrap()
            .iter()
            .map(|b| (b.a(), b.b()))
            .collect();
        assert_eq!(
            grid,
            vec![
                (1, 1),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 2),
                (2, 3),
                (2, 4),
                (3, 3),
                (3, 4)
            ]
        );
    }

    #[test]
    fn random_source_is_seeded() {
        let mut c = CampaignConfig::new(GraphSource::Random {
            sampler: Sampler::Connected {
                n: IntRange::new(2, 9).unwrap(),
            },
            count: 30,
        });
        c.seed = 5;
        let first = c.load_graphs().unwrap();
        assert_eq!(first, c.load_graphs().unwrap());
        assert!(first
            .iter()
            .all(|g| g.is_connected() && (2..=9).contains(&g.n())));
        c.seed = 6;
        assert_ne!(first, c.load_graphs().unwrap());
    }

    #[test]
    fn run_cases_preserves_order() {
        let items: Vec<u64> = (0..200).collect();
        let run = |w| {
            run_cases(w, &items, |id, &x| {
                let mut r = CaseRecord::new(id);
                r.margin("x", (x * x) as f64);
                Ok(r)
            })
            .unwrap()
        };
        let one = run(1);
        assert_eq!(one, run(4));
        assert!(one.iter().enumerate().all(|(i, r)| r.case_id == i as u64));
    }
}
