//! Co-degree adjacency and Seidel matrices of hypergraphs, their spectra
//! and Seidel energy.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{co_degrees_of, Edge, Hypergraph, HypergraphError, Vertex};
use crate::linalg::{eig_symmetric, LinalgError, Spectrum, SymmetricMatrix};

/// Absolute tolerance used to decide whether two energies are equal.
pub const DEFAULT_ENERGY_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeidelError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `A(H)`: off-diagonal entry `c_ij`, zero diagonal.
pub fn adjacency_matrix(h: &Hypergraph) -> SymmetricMatrix {
    let c = h.co_degree_table();
    SymmetricMatrix::from_fn(h.order(), |i, j| c[i][j] as f64).expect("hypergraphs have at least one vertex")
}

/// `S(H) = J - I - 2A(H)`, stored exactly with a real view alongside.
#[derive(Debug, Clone, PartialEq)]
pub struct SeidelMatrix {
    order: usize,
    entries: Vec<i64>,
    real: SymmetricMatrix,
}

impl SeidelMatrix {
    pub fn of(h: &Hypergraph) -> Self {
        Self::from_co_degrees(h.order(), &h.co_degree_table())
    }

    /// Seidel matrix of an edge multiset, duplicates counted in the
    /// co-degrees. Edges of size below two contribute nothing.
    pub fn from_edge_multiset(n: usize, edges: &[Edge]) -> Self {
        Self::from_co_degrees(n, &co_degrees_of(n, edges))
    }

    fn from_co_degrees(n: usize, c: &[Vec<usize>]) -> Self {
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    entries[i * n + j] = 1 - 2 * c[i][j] as i64;
                }
            }
        }
        let real = SymmetricMatrix::new(n, entries.iter().map(|&v| v as f64).collect())
            .expect("co-degree tables are symmetric");
        Self { order: n, entries, real }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: Vertex, j: Vertex) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: Vertex) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn real(&self) -> &SymmetricMatrix {
        &self.real
    }

    /// Exact integer trace; always zero for a Seidel matrix.
    pub fn trace(&self) -> i64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Exact product `S v`.
    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        (0..self.order).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Zero diagonal and odd off-diagonal entries.
    pub fn has_seidel_shape(&self) -> bool {
        (0..self.order).all(|i| {
            (0..self.order).all(|j| {
                let v = self.get(i, j);
                if i == j {
                    v == 0
                } else {
                    v.rem_euclid(2) == 1 && v == self.get(j, i)
                }
            })
        })
    }

    /// The distinct off-diagonal values, ascending.
    pub fn distinct_off_diagonal(&self) -> Vec<i64> {
        let mut vals: Vec<i64> = (0..self.order)
            .flat_map(|i| (0..self.order).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        vals.sort_unstable();
        vals.dedup();
        vals
    }
}

impl fmt::Display for SeidelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for i in 0..self.order {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v:>width$}")).collect();
            write!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

pub fn seidel_matrix(h: &Hypergraph) -> SeidelMatrix {
    SeidelMatrix::of(h)
}

pub fn seidel_spectrum(h: &Hypergraph, tol: f64) -> Result<Spectrum, SeidelError> {
    Ok(eig_symmetric(seidel_matrix(h).real(), tol)?)
}

/// `E_S(H)`: the sum of absolute Seidel eigenvalues.
pub fn seidel_energy(h: &Hypergraph, tol: f64) -> Result<f64, SeidelError> {
    Ok(seidel_spectrum(h, tol)?.energy())
}

/// `E_S(H - e) - E_S(H)`.
pub fn energy_delta_on_edge_deletion(h: &Hypergraph, e: &[Vertex], tol: f64) -> Result<f64, SeidelError> {
    let deleted = h.delete_hyperedge(e)?;
    Ok(seidel_energy(&deleted, tol)? - seidel_energy(h, tol)?)
}

/// Direction of an energy change, decided with an explicit tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnergyChange {
    Decrease,
    Unchanged,
    Increase,
}

impl EnergyChange {
    pub fn classify(delta: f64, tol: f64) -> Self {
        if delta > tol {
            EnergyChange::Increase
        } else if delta < -tol {
            EnergyChange::Decrease
        } else {
            EnergyChange::Unchanged
        }
    }
}

impl fmt::Display for EnergyChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergyChange::Decrease => "decrease",
            EnergyChange::Unchanged => "unchanged",
            EnergyChange::Increase => "increase",
        })
    }
}

/// Energy change for every edge of `h`, in canonical edge order.
pub fn classify_edge_deletions(
    h: &Hypergraph,
    eig_tol: f64,
    energy_tol: f64,
) -> Result<Vec<(Edge, f64, EnergyChange)>, SeidelError> {
    let base = seidel_energy(h, eig_tol)?;
    h.edges()
        .iter()
        .map(|e| {
            let delta = seidel_energy(&h.delete_hyperedge(e)?, eig_tol)? - base;
            Ok((e.clone(), delta, EnergyChange::classify(delta, energy_tol)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::gen_complete_bipartite;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    fn assert_spectrum(got: &Spectrum, want: &[f64], tol: f64) {
        assert!(got.max_abs_diff(want).unwrap() <= tol, "{:?} vs {want:?}", got.values());
    }

    #[test]
    fn adjacency() {
        let a = adjacency_matrix(&Hypergraph::edgeless(3).unwrap());
        assert!(a.as_slice().iter().all(|&v| v == 0.0));
        let a = adjacency_matrix(&h(4, &[&[0, 1, 2]]));
        assert_eq!(a.get(0, 1), 1.0);
        assert_eq!(a.get(0, 3), 0.0);
        let (c22, _) = gen_complete_bipartite(3, 2, 2).unwrap();
        let a = adjacency_matrix(&c22);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.get(i, j), if i == j { 0.0 } else { 2.0 });
            }
        }
    }

    #[test]
    fn seidel_entries() {
        let s = seidel_matrix(&Hypergraph::edgeless(4).unwrap());
        assert_eq!(s.distinct_off_diagonal(), vec![1]);
        let s = seidel_matrix(&h(3, &[&[0, 1, 2]]));
        assert_eq!(s.distinct_off_diagonal(), vec![-1]);

        let (c36, _) = gen_complete_bipartite(3, 3, 6).unwrap();
        let s = seidel_matrix(&c36);
        assert_eq!(s.get(0, 1), -11);
        assert_eq!(s.get(3, 4), -5);
        assert_eq!(s.get(0, 3), -13);
        assert_eq!(s.distinct_off_diagonal(), vec![-13, -11, -5]);
        assert!(s.has_seidel_shape());
        assert_eq!(s.trace(), 0);
    }

    #[test]
    fn increase_example() {
        let g = h(6, &[&[0, 1, 2], &[0, 3, 4], &[1, 4, 5], &[2, 3, 5]]);
        assert_spectrum(&seidel_spectrum(&g, 1e-12).unwrap(), &[3.0, 3.0, -1.0, -1.0, -1.0, -3.0], 1e-10);
        assert!((seidel_energy(&g, 1e-12).unwrap() - 12.0).abs() < 1e-9);
        let r5 = 5f64.sqrt();
        for e in g.edges() {
            let d = g.delete_hyperedge(e).unwrap();
            assert_spectrum(&seidel_spectrum(&d, 1e-12).unwrap(), &[r5, r5, r5, -r5, -r5, -r5], 1e-10);
            let delta = energy_delta_on_edge_deletion(&g, e, 1e-12).unwrap();
            assert!((delta - 1.4164079).abs() < 1e-6);
        }
    }

    #[test]
    fn decrease_example() {
        let g = h(8, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 6], &[0, 6, 7]]);
        let r2 = 2f64.sqrt();
        let want = [3.0, 3.0, -1.0 + 2.0 * r2, -1.0 + 2.0 * r2, -1.0, -1.0, -1.0 - 2.0 * r2, -1.0 - 2.0 * r2];
        assert_spectrum(&seidel_spectrum(&g, 1e-12).unwrap(), &want, 1e-9);
        assert!((seidel_energy(&g, 1e-12).unwrap() - 19.3137085).abs() < 1e-6);
        let d = g.delete_hyperedge(&[0, 1, 2]).unwrap();
        assert!((seidel_energy(&d, 1e-12).unwrap() - 18.5850575).abs() < 1e-6);
    }

    #[test]
    fn single_edge_energy_unchanged() {
        for n in 3..=8 {
            let g = Hypergraph::new(n, [(0..n).collect::<Vec<_>>()]).unwrap();
            let delta = energy_delta_on_edge_deletion(&g, &(0..n).collect::<Vec<_>>(), 1e-12).unwrap();
            assert!(delta.abs() < 1e-9);
            assert_eq!(EnergyChange::classify(delta, DEFAULT_ENERGY_TOL), EnergyChange::Unchanged);
        }
    }

    #[test]
    fn complete_bipartite_edges_all_decrease() {
        let (c33, _) = gen_complete_bipartite(3, 3, 3).unwrap();
        let rows = classify_edge_deletions(&c33, 1e-12, DEFAULT_ENERGY_TOL).unwrap();
        assert_eq!(rows.len(), c33.edge_count());
        assert!(rows.iter().all(|(_, d, c)| *d < 0.0 && *c == EnergyChange::Decrease));
    }

    #[test]
    fn multiset_co_degrees() {
        let s = SeidelMatrix::from_edge_multiset(3, &[vec![0, 1], vec![0, 1], vec![2]]);
        assert_eq!(s.get(0, 1), -3);
        assert_eq!(s.get(0, 2), 1);
    }

    #[test]
    fn missing_edge_errors() {
        let g = h(3, &[&[0, 1, 2]]);
        assert!(matches!(
            energy_delta_on_edge_deletion(&g, &[0, 1], 1e-12),
            Err(SeidelError::Hypergraph(HypergraphError::EdgeNotFound(_)))
        ));
    }
}
