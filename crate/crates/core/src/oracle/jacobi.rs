//! Cyclic Jacobi eigenvalues for dense symmetric matrices.

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const SWEEP_CAP: usize = 100;

/// A dense symmetric matrix of doubles, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseSym {
    n: usize,
    a: Vec<f64>,
}

impl DenseSym {
    /// Rejects asymmetric input; averages away rounding-level asymmetry.
    pub fn new(n: usize, a: Vec<f64>) -> Result<Self> {
        if a.len() != n * n {
            return Err(Error::Dimension(format!("{} entries for an {n}×{n} matrix", a.len())));
        }
        let scale = a.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        let mut m = DenseSym { n, a };
        for i in 0..n {
            for j in i + 1..n {
                let (x, y) = (m.get(i, j), m.get(j, i));
                if (x - y).abs() > 1e-12 * scale {
                    return Err(Error::InvalidArgument(format!("asymmetric at ({i},{j}): {x} vs {y}")));
                }
                let avg = 0.5 * (x + y);
                m.a[i * n + j] = avg;
                m.a[j * n + i] = avg;
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix is not square".into()));
        }
        DenseSym::new(n, rows.concat())
    }

    /// `[[Re, −Im], [Im, Re]]` for a Hermitian `n×n` matrix given as real and
    /// imaginary parts; each eigenvalue appears twice.
    pub fn real_embedding(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Self> {
        let n = re.len();
        let mut rows = vec![vec![0.0; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                rows[i][j] = re[i][j];
                rows[i + n][j + n] = re[i][j];
                rows[i][j + n] = -im[i][j];
                rows[i + n][j] = im[i][j];
            }
        }
        DenseSym::from_rows(&rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `P A Pᵀ` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[perm[i] * n + perm[j]] = self.get(i, j);
            }
        }
        DenseSym { n, a }
    }

    fn frobenius(&self) -> f64 {
        self.a.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }
}

/// Eigenvalues in ascending order. Stops once the off-diagonal Frobenius norm is
/// below `tol` times the input norm.
pub fn jacobi_eigenvalues(m: &DenseSym, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let n = m.n;
    let mut a = m.a.clone();
    let target = tol * m.frobenius().max(f64::MIN_POSITIVE);
    let mut sweeps = 0;
    let off = |a: &[f64]| DenseSym { n, a: a.to_vec() }.off_norm();
    loop {
        let current = off(&a);
        if current <= target {
            break;
        }
        if sweeps == SWEEP_CAP {
            return Err(Error::NonConvergence { sweeps, off_norm: current });
        }
        // Rotations below this threshold are deferred to later sweeps.
        let threshold = if sweeps < 3 { 0.2 * current / (n * n) as f64 } else { 0.0 };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= threshold || apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
        sweeps += 1;
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}
