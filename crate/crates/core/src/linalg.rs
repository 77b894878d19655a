//! Dense least squares by one-sided Jacobi SVD.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// Thin SVD `A = U Σ Vᵀ` of a row-major `rows × cols` matrix, `rows ≥ cols`.
#[derive(Debug, Clone)]
pub struct Svd {
    /// Columns of `U`, each of length `rows`.
    pub u: Vec<Vec<f64>>,
    pub sigma: Vec<f64>,
    /// Columns of `V`, each of length `cols`.
    pub v: Vec<Vec<f64>>,
}

/// One-sided Jacobi SVD; `columns` holds the matrix column by column.
pub fn svd_columns(mut columns: Vec<Vec<f64>>) -> Result<Svd> {
    let n = columns.len();
    let rows = columns.first().map_or(0, Vec::len);
    if n == 0 || rows < n || columns.iter().any(|c| c.len() != rows) {
        return Err(Error::Domain("svd needs a nonempty matrix with rows >= cols"));
    }
    let mut v: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let frobenius2: f64 = columns.iter().map(|c| dot(c, c)).sum();
    let negligible = 1e-32 * frobenius2;
    let mut converged = false;
    for _sweep in 0..60 {
        let mut rotated = false;
        for i in 0..n {
            for j in i + 1..n {
                let alpha = dot(&columns[i], &columns[i]);
                let beta = dot(&columns[j], &columns[j]);
                let gamma = dot(&columns[i], &columns[j]);
                if alpha <= negligible
                    || beta <= negligible
                    || math::abs(gamma) <= 1e-15 * math::sqrt(alpha * beta)
                {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (math::abs(zeta) + math::sqrt(1.0 + zeta * zeta));
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / math::sqrt(1.0 + t * t);
                let s = c * t;
                let (ci, cj) = split_pair(&mut columns, i, j);
                rotate(ci, cj, c, s);
                let (vi, vj) = split_pair(&mut v, i, j);
                rotate(vi, vj, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence("jacobi svd"));
    }
    let mut sigma = Vec::with_capacity(n);
    let mut u = Vec::with_capacity(n);
    for col in columns {
        let s = math::sqrt(dot(&col, &col));
        sigma.push(s);
        u.push(if s > 0.0 { col.iter().map(|x| x / s).collect() } else { col });
    }
    Ok(Svd { u, sigma, v })
}

fn split_pair(m: &mut [Vec<f64>], i: usize, j: usize) -> (&mut Vec<f64>, &mut Vec<f64>) {
    let (lo, hi) = m.split_at_mut(j);
    (&mut lo[i], &mut hi[0])
}

fn rotate(a: &mut [f64], b: &mut [f64], c: f64, s: f64) {
    for (x, y) in a.iter_mut().zip(b.iter_mut()) {
        let (p, q) = (*x, *y);
        *x = c * p - s * q;
        *y = s * p + c * q;
    }
}

/// Least-squares solution of `A x ≈ y` with its condition number.
#[derive(Debug, Clone)]
pub struct LeastSquares {
    pub x: Vec<f64>,
    /// `σ_max / σ_min` after scaling each column to unit norm.
    pub condition: f64,
    /// Diagonal of `(AᵀA)^{−1}`.
    pub variance_factors: Vec<f64>,
    /// `‖A x − y‖₂²`.
    pub residual_sum_squares: f64,
    /// Pseudo-inverse `A⁺`, one row per unknown.
    pub pinv: Vec<Vec<f64>>,
}

/// Solves `min ‖A x − y‖₂` with `A` given by columns.
pub fn least_squares(columns: &[Vec<f64>], y: &[f64]) -> Result<LeastSquares> {
    let rows = y.len();
    if columns.iter().any(|c| c.len() != rows) {
        return Err(Error::Domain("least squares: column length differs from data length"));
    }
    let scales: Vec<f64> = columns.iter().map(|c| math::sqrt(c.iter().map(|x| x * x).sum::<f64>())).collect();
    if scales.iter().any(|&s| !(s > 0.0) || !s.is_finite()) {
        return Err(Error::Domain("least squares: zero or non-finite column"));
    }
    let scaled: Vec<Vec<f64>> = columns.iter().zip(&scales).map(|(c, s)| c.iter().map(|x| x / s).collect()).collect();
    let svd = svd_columns(scaled)?;
    let smax = svd.sigma.iter().fold(0.0f64, |a, &b| a.max(b));
    let smin = svd.sigma.iter().fold(f64::INFINITY, |a, &b| a.min(b));
    let condition = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    let n = columns.len();
    let mut x = vec![0.0; n];
    for k in 0..n {
        if svd.sigma[k] == 0.0 {
            continue;
        }
        let coef = svd.u[k].iter().zip(y).map(|(u, y)| u * y).sum::<f64>() / svd.sigma[k];
        for (xi, vi) in x.iter_mut().zip(&svd.v[k]) {
            *xi += coef * vi;
        }
    }
    for (xi, s) in x.iter_mut().zip(&scales) {
        *xi /= s;
    }
    let variance_factors = (0..n)
        .map(|i| {
            let v: f64 = (0..n)
                .map(|k| if svd.sigma[k] > 0.0 { svd.v[k][i] / svd.sigma[k] } else { f64::INFINITY })
                .map(|r| r * r)
                .sum();
            v / (scales[i] * scales[i])
        })
        .collect();
    let residual_sum_squares = (0..rows)
        .map(|r| {
            let fit: f64 = columns.iter().zip(&x).map(|(c, xi)| c[r] * xi).sum();
            (fit - y[r]) * (fit - y[r])
        })
        .sum();
    let pinv = (0..n)
        .map(|i| {
            (0..rows)
                .map(|r| {
                    (0..n)
                        .filter(|&k| svd.sigma[k] > 0.0)
                        .map(|k| svd.v[k][i] * svd.u[k][r] / svd.sigma[k])
                        .sum::<f64>()
                        / scales[i]
                })
                .collect()
        })
        .collect();
    Ok(LeastSquares { x, condition, variance_factors, residual_sum_squares, pinv })
}
