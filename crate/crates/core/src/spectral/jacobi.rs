//! Cyclic-by-row Jacobi rotations for dense real symmetric matrices.

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

fn max_off_diagonal(a: &[f64], n: usize) -> f64 {
    let mut m = 0.0f64;
    for p in 0..n {
        for q in p + 1..n {
            m = m.max(a[p * n + q].abs());
        }
    }
    m
}

fn sweep(a: &mut [f64], n: usize) {
    for p in 0..n {
        for q in p + 1..n {
            let apq = a[p * n + q];
            if apq == 0.0 {
                continue;
            }
            let app = a[p * n + p];
            let aqq = a[q * n + q];
            let theta = (aqq - app) / (2.0 * apq);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
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
                let new_rp = c * arp - s * arq;
                let new_rq = s * arp + c * arq;
                a[r * n + p] = new_rp;
                a[p * n + r] = new_rp;
                a[r * n + q] = new_rq;
                a[q * n + r] = new_rq;
            }
        }
    }
}

/// Eigenvalues of the row-major symmetric `n x n` matrix `a`, in descending
/// order. The matrix is consumed as scratch space.
///
/// Iteration stops once every off-diagonal entry is below `1e-10 * n`; one
/// further sweep is then applied, which by quadratic convergence drives the
/// residual far below that threshold.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n, "matrix shape");
    let tol = 1e-10 * n as f64;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if max_off_diagonal(&a, n) < tol {
            converged = true;
            break;
        }
        sweep(&mut a, n);
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }
    sweep(&mut a, n);
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    Ok(eig)
}
