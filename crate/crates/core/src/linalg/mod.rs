//! Dense symmetric eigensolver, exact integer polynomials and the real-root
//! machinery used by everything downstream.

mod charpoly;
mod jacobi;
mod poly;
mod roots;

pub use charpoly::{char_poly_exact, MAX_CHAR_POLY_ORDER};
pub use jacobi::{eig_symmetric, eig_symmetric_with_budget, DEFAULT_EIG_TOL, MAX_SWEEPS};
pub use poly::IntPolynomial;
pub use roots::real_roots;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("matrix order {order} exceeds the limit of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("matrix order must be at least 1")]
    EmptyMatrix,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
}

pub(crate) fn check_tol(tol: f64) -> Result<(), LinalgError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(LinalgError::InvalidTolerance(tol))
    }
}

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// Wraps row-major data, rejecting anything not exactly symmetric.
    pub fn new(order: usize, data: Vec<f64>) -> Result<Self, LinalgError> {
        if order == 0 {
            return Err(LinalgError::EmptyMatrix);
        }
        if data.len() != order * order {
            return Err(LinalgError::Shape { expected: order * order, got: data.len() });
        }
        for i in 0..order {
            for j in i + 1..order {
                if data[i * order + j] != data[j * order + i] {
                    return Err(LinalgError::NotSymmetric(i, j));
                }
            }
        }
        Ok(Self { order, data })
    }

    /// Builds the matrix from its upper triangle; `f(i, j)` is called with `i <= j`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self, LinalgError> {
        if order == 0 {
            return Err(LinalgError::EmptyMatrix);
        }
        let mut data = vec![0.0; order * order];
        for i in 0..order {
            for j in i..order {
                let v = f(i, j);
                data[i * order + j] = v;
                data[j * order + i] = v;
            }
        }
        Ok(Self { order, data })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// `P^T M P` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.order;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[perm[i] * n + perm[j]] = self.get(i, j);
            }
        }
        Self { order: n, data }
    }
}

/// Square matrix of arbitrary-precision integers, row-major. Not necessarily
/// symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    order: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(order: usize, data: Vec<BigInt>) -> Result<Self, LinalgError> {
        if data.len() != order * order {
            return Err(LinalgError::Shape { expected: order * order, got: data.len() });
        }
        Ok(Self { order, data })
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, LinalgError> {
        let order = rows.len();
        let mut data = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(LinalgError::Shape { expected: order, got: row.len() });
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(Self { order, data })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.order + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.data.chunks(self.order.max(1))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).fold(BigInt::zero(), |acc, i| acc + self.get(i, i))
    }

    pub(crate) fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.order;
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * &other.data[k * n + j];
                }
            }
        }
        IntMatrix { order: n, data }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.chunks(self.order.max(1)).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Eigenvalues of a symmetric matrix in non-increasing order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    cluster_tol: f64,
}

impl Spectrum {
    /// Sorts `values` descending. `cluster_tol` only affects [`Spectrum::clusters`].
    pub fn new(mut values: Vec<f64>, cluster_tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values, cluster_tol }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn cluster_tol(&self) -> f64 {
        self.cluster_tol
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Sum of absolute values.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    /// Groups adjacent values closer than the cluster tolerance into
    /// `(mean, multiplicity)` pairs, still descending.
    pub fn clusters(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize, f64)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((sum, count, last)) if (*last - v).abs() <= self.cluster_tol => {
                    *sum += v;
                    *count += 1;
                    *last = v;
                }
                _ => out.push((v, 1, v)),
            }
        }
        out.into_iter().map(|(s, c, _)| (s / c as f64, c)).collect()
    }

    /// Multiset containment: each of `subset` matched to a distinct value
    /// here within `tol`.
    pub fn contains_all(&self, subset: &[f64], tol: f64) -> bool {
        let mut used = vec![false; self.values.len()];
        let mut wanted = subset.to_vec();
        wanted.sort_by(|a, b| b.total_cmp(a));
        for w in wanted {
            let best = self
                .values
                .iter()
                .enumerate()
                .filter(|(i, v)| !used[*i] && (*v - w).abs() <= tol)
                .min_by(|a, b| (a.1 - w).abs().total_cmp(&(b.1 - w).abs()));
            match best {
                Some((i, _)) => used[i] = true,
                None => return false,
            }
        }
        true
    }

    /// Largest pointwise gap against another descending list of equal length.
    pub fn max_abs_diff(&self, other: &[f64]) -> Option<f64> {
        if other.len() != self.values.len() {
            return None;
        }
        let mut sorted = other.to_vec();
        sorted.sort_by(|a, b| b.total_cmp(a));
        Some(self.values.iter().zip(&sorted).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
    }
}

/// Counts of positive, zero and negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub n_pos: usize,
    pub n_zero: usize,
    pub n_neg: usize,
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_pos, self.n_zero, self.n_neg)
    }
}

pub fn inertia_of(spectrum: &Spectrum, zero_tol: f64) -> Inertia {
    let mut inertia = Inertia { n_pos: 0, n_zero: 0, n_neg: 0 };
    for &v in spectrum.values() {
        if v > zero_tol {
            inertia.n_pos += 1;
        } else if v < -zero_tol {
            inertia.n_neg += 1;
        } else {
            inertia.n_zero += 1;
        }
    }
    inertia
}

/// Cluster tolerance for multiplicity grouping: `1e-8 * max(1, ||M||_F)`.
pub fn default_cluster_tol(m: &SymmetricMatrix) -> f64 {
    1e-8 * m.frobenius_norm().max(1.0)
}

/// Zero threshold for inertia counts: `1e-8 * ||M||_F` (floored at `1e-12`).
pub fn default_zero_tol(m: &SymmetricMatrix) -> f64 {
    (1e-8 * m.frobenius_norm()).max(1e-12)
}
