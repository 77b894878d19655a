//! The Friedrichs heat kernel of the radial model operator
//! `l_ν = −∂²_x + (ν² − 1/4)/x²` on `(0, ∞)`, and the parity profile of the
//! model edge kernel at the front face.

use alloc::vec::Vec;

use crate::bessel::bessel_i;
use crate::error::{Error, Result};
use crate::linalg::least_squares;
use crate::math::{self, PI};
use crate::phg::Parity;

/// `(1/2t) (x x̃)^{1/2} I_ν(x x̃ / 2t) e^{−(x² + x̃²)/4t}`, evaluated as
/// `(1/2t) (x x̃)^{1/2} [e^{−z} I_ν(z)] e^{−(x − x̃)²/4t}` with `z = x x̃ / 2t`.
pub fn cone_heat_kernel(nu: f64, t: f64, x: f64, xt: f64) -> Result<f64> {
    if !(t > 0.0 && x > 0.0 && xt > 0.0) || !(t.is_finite() && x.is_finite() && xt.is_finite()) {
        return Err(Error::Domain("cone_heat_kernel: t, x, x~ must be positive and finite"));
    }
    // symmetric in (x, x̃) by construction: the product and the squared
    // difference are evaluated in a fixed operand order
    let (a, b) = if x <= xt { (x, xt) } else { (xt, x) };
    let prod = a * b;
    let z = prod / (2.0 * t);
    let d = b - a;
    let gauss = math::exp(-d * d / (4.0 * t));
    if z == 0.0 {
        return Ok(0.0);
    }
    let i = bessel_i(nu, z, true)?;
    Ok(math::sqrt(prod) / (2.0 * t) * i * gauss)
}

/// Half-line Dirichlet heat kernel
/// `(4πt)^{−1/2} [e^{−(x−x̃)²/4t} − e^{−(x+x̃)²/4t}]`.
pub fn half_line_dirichlet_kernel(t: f64, x: f64, xt: f64) -> f64 {
    let d = x - xt;
    // e^{−(x−x̃)²/4t} (1 − e^{−x x̃/t})
    math::exp(-d * d / (4.0 * t)) * -math::expm1(-x * xt / t) / math::sqrt(4.0 * PI * t)
}

/// Model kernel of the rigid edge `C(F) × ℝ^b` for one radial order, in the
/// front-face chart `ρ = √t`, `ξ = x/ρ`, `ξ̃ = x̃/ρ`, `w = (y − ỹ)/ρ`, with the
/// factor `ρ^{−b−1}` removed (radial half-density convention):
/// `(1/2) (ξ ξ̃)^{1/2} e^{−(ξ−ξ̃)²/4} [e^{−z} I_ν(z)] · (4π)^{−b/2} e^{−|w|²/4}`,
/// `z = ξ ξ̃ / 2`.
pub fn model_front_face_kernel(nu: f64, b: usize, xi: f64, xi_t: f64, w: &[f64]) -> Result<f64> {
    if w.len() != b {
        return Err(Error::Domain("front-face kernel: w must have b components"));
    }
    let radial = cone_heat_kernel(nu, 1.0, xi, xi_t)?;
    let w2: f64 = w.iter().map(|v| v * v).sum();
    Ok(radial * math::pow(4.0 * PI, -(b as f64) / 2.0) * math::exp(-w2 / 4.0))
}

/// Parity in `w` of the Taylor coefficients `κ_k(w)`, `k < orders`, of
/// `ρ ↦ kappa(ρ, w)` at `ρ = 0`.
///
/// `kappa` must accept small negative `ρ` (its analytic continuation).
/// Coefficients are extracted by polynomial interpolation on `[−h, h]` and
/// compared at `±w` for each sample `w`.
pub fn ff_parity_profile<F: Fn(f64, f64) -> f64>(kappa: F, orders: u32, w_samples: &[f64]) -> Result<Vec<(u32, Parity)>> {
    const NODES: usize = 18;
    const H: f64 = 0.25;
    if orders as usize > NODES / 2 {
        return Err(Error::Domain("ff_parity_profile: too many orders requested"));
    }
    let nodes: Vec<f64> = (0..NODES).map(|i| math::cos(PI * (i as f64 + 0.5) / NODES as f64)).collect();
    let columns: Vec<Vec<f64>> =
        (0..NODES).map(|k| nodes.iter().map(|&u| math::pow(u, k as f64)).collect()).collect();
    let coefficients = |w: f64| -> Result<Vec<f64>> {
        let y: Vec<f64> = nodes.iter().map(|&u| kappa(H * u, w)).collect();
        let fit = least_squares(&columns, &y)?;
        Ok(fit.x.iter().enumerate().map(|(k, c)| c / math::pow(H, k as f64)).collect())
    };
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for &w in w_samples {
        plus.push(coefficients(w)?);
        minus.push(coefficients(-w)?);
    }
    let scale = plus
        .iter()
        .chain(&minus)
        .flat_map(|c| c.iter().take(orders as usize))
        .fold(0.0f64, |a, &c| a.max(math::abs(c)));
    let tol = 1e-7 * scale.max(f64::MIN_POSITIVE);
    let mut out = Vec::new();
    for k in 0..orders as usize {
        let pairs: Vec<(f64, f64)> = plus.iter().zip(&minus).map(|(p, m)| (p[k], m[k])).collect();
        let parity = if pairs.iter().all(|&(p, m)| math::abs(p) <= tol && math::abs(m) <= tol) {
            Parity::Zero
        } else if pairs.iter().all(|&(p, m)| math::abs(p - m) <= tol) {
            Parity::Even
        } else if pairs.iter().all(|&(p, m)| math::abs(p + m) <= tol) {
            Parity::Odd
        } else {
            Parity::Mixed
        };
        out.push((k as u32, parity));
    }
    Ok(out)
}
