use nalgebra::DMatrix;

use super::SymmetricMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Block-average quotient of a symmetric matrix with respect to a vertex
/// partition: `b[i][j]` is the average over rows in block `i` of the row sum
/// restricted to block `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<f64>,
    partition: Vec<VertexSet>,
    equitable: bool,
}

fn validate_partition(n: usize, partition: &[VertexSet]) -> Result<()> {
    let mut owner = vec![false; n];
    for block in partition {
        if block.universe() != n {
            return Err(Error::InvalidVertexSet(
                "block belongs to a different vertex universe".into(),
            ));
        }
        if block.is_empty() {
            return Err(Error::InvalidVertexSet("empty block".into()));
        }
        for v in block.iter() {
            if std::mem::replace(&mut owner[v], true) {
                return Err(Error::InvalidVertexSet(format!(
                    "vertex {v} lies in two blocks"
                )));
            }
        }
    }
    if let Some(v) = owner.iter().position(|&o| !o) {
        return Err(Error::InvalidVertexSet(format!(
            "vertex {v} is not covered"
        )));
    }
    Ok(())
}

/// Whether every vertex of block `i` has the same number of neighbors in
/// block `j`, for all `i, j`.
pub fn is_equitable(g: &Graph, partition: &[VertexSet]) -> Result<bool> {
    validate_partition(g.n(), partition)?;
    for xi in partition {
        for xj in partition {
            let mut counts = xi
                .iter()
                .map(|u| g.neighbors(u).iter().filter(|&&v| xj.contains(v)).count());
            let first = counts.next();
            if counts.any(|c| Some(c) != first) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn quotient_matrix(m: &SymmetricMatrix, partition: &[VertexSet]) -> Result<QuotientMatrix> {
    validate_partition(m.order(), partition)?;
    let k = partition.len();
    let mut entries = vec![0.0; k * k];
    let mut equitable = true;
    for (i, xi) in partition.iter().enumerate() {
        for (j, xj) in partition.iter().enumerate() {
            let sums: Vec<f64> = xi
                .iter()
                .map(|u| xj.iter().map(|v| m.get(u, v)).sum())
                .collect();
            let scale = sums.iter().fold(1.0f64, |a, s| a.max(s.abs()));
            if sums.iter().any(|s| (s - sums[0]).abs() > 1e-12 * scale) {
                equitable = false;
            }
            entries[i * k + j] = sums.iter().sum::<f64>() / xi.len() as f64;
        }
    }
    Ok(QuotientMatrix {
        order: k,
        entries,
        partition: partition.to_vec(),
        equitable,
    })
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.order)
            .map(<[f64]>::to_vec)
            .collect()
    }

    pub fn partition(&self) -> &[VertexSet] {
        &self.partition
    }

    /// Whether every block of the source matrix had constant row sums.
    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Eigenvalues, descending.
    ///
    /// `B` itself is not symmetric, but `|X_i| b_ij = |X_j| b_ji` because the
    /// source matrix is, so `D^{1/2} B D^{-1/2}` with `D = diag(|X_i|)` is a
    /// symmetric matrix similar to `B`.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let k = self.order;
        let sizes: Vec<f64> = self
            .partition
            .iter()
            .map(|x| (x.len() as f64).sqrt())
            .collect();
        let sym = DMatrix::from_fn(k, k, |i, j| self.get(i, j) * sizes[i] / sizes[j]);
        // average the two triangles to remove rounding asymmetry
        let sym = (&sym + sym.transpose()) * 0.5;
        let mut ev: Vec<f64> = sym.symmetric_eigen().eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        ev
    }

    pub fn largest_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct_l;
    use crate::spectral::{adjacency, eigenvalues, signless_laplacian};

    #[test]
    fn l_graph_partition_is_equitable() {
        let l = construct_l(20, 2).unwrap();
        assert!(is_equitable(&l.graph, &l.parts).unwrap());
        let b = quotient_matrix(&adjacency(&l.graph), &l.parts).unwrap();
        assert!(b.is_equitable());
        assert_eq!(
            b.rows(),
            vec![
                vec![1.0, 9.0, 0.0],
                vec![2.0, 8.0, 9.0],
                vec![0.0, 9.0, 8.0]
            ]
        );
        assert_eq!(b.trace(), 17.0);
    }

    #[test]
    fn singleton_partition_is_equitable_and_exact() {
        let l = construct_l(13, 2).unwrap();
        let n = l.graph.n();
        let singletons: Vec<_> = (0..n)
            .map(|v| VertexSet::new(n, vec![v]).unwrap())
            .collect();
        assert!(is_equitable(&l.graph, &singletons).unwrap());
        let b = quotient_matrix(&adjacency(&l.graph), &singletons).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(b.get(i, j), l.graph.has_edge(i, j) as u8 as f64);
            }
        }
    }

    #[test]
    fn path_bipartitions() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        // {leaves}, {centre}: each leaf has one neighbor in the centre block
        let split = [
            VertexSet::new(3, vec![0, 2]).unwrap(),
            VertexSet::new(3, vec![1]).unwrap(),
        ];
        assert!(is_equitable(&p3, &split).unwrap());
        let b = quotient_matrix(&adjacency(&p3), &split).unwrap();
        assert_eq!(b.rows(), vec![vec![0.0, 1.0], vec![2.0, 0.0]]);
        assert!((b.largest_eigenvalue() - 2f64.sqrt()).abs() < 1e-12);
        // {0}, {1,2}: vertex 1 sees 0 but vertex 2 does not
        let split = [
            VertexSet::new(3, vec![0]).unwrap(),
            VertexSet::new(3, vec![1, 2]).unwrap(),
        ];
        assert!(!is_equitable(&p3, &split).unwrap());
        assert!(!quotient_matrix(&adjacency(&p3), &split)
            .unwrap()
            .is_equitable());
    }

    #[test]
    fn complete_graph_quotients() {
        let k = Graph::complete(7).unwrap();
        let parts = [
            VertexSet::new(7, vec![0, 3]).unwrap(),
            VertexSet::new(7, vec![1, 2, 6]).unwrap(),
            VertexSet::new(7, vec![4, 5]).unwrap(),
        ];
        let b = quotient_matrix(&adjacency(&k), &parts).unwrap();
        for row in b.rows() {
            assert_eq!(row.iter().sum::<f64>(), 6.0);
        }
        assert!((b.largest_eigenvalue() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn quotient_spectrum_is_contained_in_full_spectrum() {
        let l = construct_l(17, 2).unwrap();
        for m in [adjacency(&l.graph), signless_laplacian(&l.graph)] {
            let full = eigenvalues(&m);
            let b = quotient_matrix(&m, &l.parts).unwrap();
            for mu in b.eigenvalues() {
                assert!(full.iter().any(|lam| (lam - mu).abs() < 1e-8), "{mu}");
            }
            assert!((b.largest_eigenvalue() - full[0]).abs() < 1e-8);
        }
    }

    #[test]
    fn invalid_partitions() {
        let g = Graph::complete(3).unwrap();
        let overlap = [
            VertexSet::new(3, vec![0, 1]).unwrap(),
            VertexSet::new(3, vec![1, 2]).unwrap(),
        ];
        assert!(is_equitable(&g, &overlap).is_err());
        let missing = [VertexSet::new(3, vec![0, 1]).unwrap()];
        assert!(quotient_matrix(&adjacency(&g), &missing).is_err());
        let empty = [VertexSet::all(3), VertexSet::empty(3)];
        assert!(is_equitable(&g, &empty).is_err());
    }
}
