use super::{check_tol, default_cluster_tol, LinalgError, Spectrum, SymmetricMatrix};

/// Relative convergence threshold on the off-diagonal Frobenius norm.
pub const DEFAULT_EIG_TOL: f64 = 1e-12;

/// Sweep budget before giving up.
pub const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps visit the strict upper triangle row by row. Iteration stops once
/// the off-diagonal Frobenius norm drops to `tol * ||M||_F`; the zero matrix
/// is returned immediately. The result clusters with
/// [`default_cluster_tol`](super::default_cluster_tol).
pub fn eig_symmetric(m: &SymmetricMatrix, tol: f64) -> Result<Spectrum, LinalgError> {
    eig_symmetric_with_budget(m, tol, MAX_SWEEPS)
}

/// [`eig_symmetric`] with an explicit sweep budget.
pub fn eig_symmetric_with_budget(m: &SymmetricMatrix, tol: f64, max_sweeps: usize) -> Result<Spectrum, LinalgError> {
    check_tol(tol)?;
    let n = m.order();
    let norm = m.frobenius_norm();
    let threshold = tol * norm;
    let mut a = m.as_slice().to_vec();

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == max_sweeps {
            return Err(LinalgError::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }

    let values = (0..n).map(|i| a[i * n + i]).collect();
    Ok(Spectrum::new(values, default_cluster_tol(m)))
}
