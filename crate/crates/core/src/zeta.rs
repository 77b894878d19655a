//! Zeta functions near `s = 0` and analytic torsion.
//!
//! `Γ(s) ζ(s) = ∫₀^T t^{s−1} (Tr − K) dt + ∫_T^∞ t^{s−1} (Tr − K) dt` with
//! `K = dim ker`. Below the split `T` the fitted expansion is integrated in
//! closed form and the remainder `Tr − fit` by quadrature; above it the
//! exponentially decaying trace is integrated directly.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fiber::binomial;
use crate::fit::{fit_expansion_with, rational_to_f64, FitWeighting, FittedExpansion};
use crate::math::{self, EULER_GAMMA, PI};
use crate::phg::{heat_trace_structure, ExpansionTemplate, Face, Rational, TemplateTerm};
use crate::quad::{composite_kronrod, integrate};
use crate::trace::{HeatTrace, TraceSamples};

/// Coefficient of `s³` in `1/Γ(s) = s + γ s² + (γ²/2 − π²/12) s³ + …`.
const RGAMMA_S3: f64 = EULER_GAMMA * EULER_GAMMA / 2.0 - PI * PI / 12.0;

/// Settings for [`zeta_near_zero`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaOptions {
    /// Split point `T` of the Mellin integral.
    pub split: f64,
    /// Largest accepted relative fit residual.
    pub residual_limit: f64,
    /// Absolute tolerance of the quadratures.
    pub abs_tol: f64,
}

impl Default for ZetaOptions {
    fn default() -> Self {
        Self { split: 1.0, residual_limit: 1e-5, abs_tol: 1e-12 }
    }
}

/// A pole of `Γ(s) ζ(s)` with its leading Laurent coefficient `a_{−order}`
/// and residue `a_{−1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleData {
    pub location: Rational,
    pub order: u32,
    pub leading: f64,
    pub residue: f64,
}

/// Error bookkeeping of one zeta evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ZetaDiagnostics {
    pub split: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub fit_residual: f64,
    pub small_t_quadrature_error: f64,
    /// Bound on `∫₀^{t_min} (Tr − fit) dt/t`, which is not sampled.
    pub below_t_min_bound: f64,
    pub large_t_quadrature_error: f64,
    /// Bound on `∫_{t_max}^∞ (Tr − K) dt/t` from the smallest eigenvalue.
    pub large_t_tail_bound: f64,
    /// Contribution of the eigenvalue truncation of the trace.
    pub trace_tail_bound: f64,
    /// Shift of `ζ(0)` and `ζ′(0)` when the template is extended by half an
    /// order (0 if the longer fit is not available).
    pub truncation_zeta0: f64,
    pub truncation_zeta_prime0: f64,
    pub zeta0_error: f64,
    pub zeta_prime0_error: f64,
}

/// `ζ(0)`, `ζ′(0)` and pole data in one form degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaData {
    pub degree: usize,
    pub poles: Vec<PoleData>,
    /// Coefficient `c₀` of `t⁰` (finite part if `ζ` is singular at 0).
    pub zeta0: f64,
    /// `c₀ − dim ker`.
    pub zeta0_minus_kernel: f64,
    pub zeta_prime0: f64,
    pub kernel_dim: u64,
    /// No `t⁰ log t` slot, so `ζ` is regular at 0.
    pub regular_at_zero: bool,
    /// Residue of `ζ(s)` at 0 implied by the fit (`−` the `t⁰ log t` coefficient).
    pub residue_at_zero: f64,
    /// Residue at 0 estimated by refitting with a `t⁰ log t` term added.
    pub residue_estimate: f64,
    /// Uncertainty of [`ZetaData::residue_estimate`].
    pub residue_bound: f64,
    pub diagnostics: ZetaDiagnostics,
}

/// Closed-form Laurent data of the fitted part of the small-time integral at
/// `s = 0`: `a₋₂/s² + a₋₁/s + h₀ + O(s)`.
struct SmallTimeLaurent {
    a_m2: f64,
    a_m1: f64,
    h0: f64,
    c0: f64,
}

fn fitted_laurent(fit: &FittedExpansion, kernel_dim: u64, split: f64) -> SmallTimeLaurent {
    let l = math::ln(split);
    let k = kernel_dim as f64;
    let mut out = SmallTimeLaurent { a_m2: 0.0, a_m1: -k, h0: -k * l, c0: 0.0 };
    for (term, c) in fit.terms() {
        let alpha = rational_to_f64(term.exponent);
        match (term.log, term.exponent.is_zero()) {
            (false, true) => {
                out.a_m1 += c;
                out.h0 += c * l;
                out.c0 = c;
            }
            (false, false) => out.h0 += c * math::pow(split, alpha) / alpha,
            (true, true) => {
                out.a_m2 -= c;
                out.h0 += c * l * l / 2.0;
            }
            (true, false) => {
                out.h0 += c * math::pow(split, alpha) * (l / alpha - 1.0 / (alpha * alpha));
            }
        }
    }
    out
}

/// Poles of `Γ(s) ζ(s)` implied by the fit and the kernel term `−K/s`.
fn fitted_poles(fit: &FittedExpansion, kernel_dim: u64) -> Vec<PoleData> {
    let mut poles: Vec<PoleData> = Vec::new();
    for (term, c) in fit.terms() {
        let location = -term.exponent;
        let idx = match poles.iter().position(|p| p.location == location) {
            Some(i) => i,
            None => {
                poles.push(PoleData { location, order: 1, leading: 0.0, residue: 0.0 });
                poles.len() - 1
            }
        };
        let p = &mut poles[idx];
        if term.log {
            p.order = 2;
            p.leading = -c;
        } else {
            p.residue = c;
            if p.order == 1 {
                p.leading = c;
            }
        }
    }
    if kernel_dim > 0 {
        let k = kernel_dim as f64;
        match poles.iter_mut().find(|p| p.location.is_zero()) {
            Some(p) => {
                p.residue -= k;
                if p.order == 1 {
                    p.leading -= k;
                }
            }
            None => poles.push(PoleData { location: Rational::zero(), order: 1, leading: -k, residue: -k }),
        }
    }
    poles.sort_by_key(|a| a.location);
    poles
}

/// Bounds on the shifts of `ζ(0)` and `ζ′(0)` caused by the samples' tail
/// bounds, through the coefficients' data errors. Over `[t_min, T]` the fit
/// cancels against the remainder integral, so each coefficient enters `ζ′(0)`
/// through its regularised integral up to `t_min`.
struct DataPropagation {
    zeta0: f64,
    zeta_prime0: f64,
}

fn data_propagation(fit: &FittedExpansion, t_min: f64) -> DataPropagation {
    let l = math::ln(t_min);
    let mut out = DataPropagation { zeta0: 0.0, zeta_prime0: 0.0 };
    for (term, &e) in fit.template.terms.iter().zip(&fit.data_errors) {
        let alpha = rational_to_f64(term.exponent);
        let partial = match (term.log, term.exponent.is_zero()) {
            (false, true) => {
                out.zeta0 += e;
                l + EULER_GAMMA
            }
            (false, false) => math::pow(t_min, alpha) / alpha,
            (true, true) => {
                out.zeta0 += EULER_GAMMA * e;
                l * l / 2.0 - RGAMMA_S3
            }
            (true, false) => math::pow(t_min, alpha) * (l / alpha - 1.0 / (alpha * alpha)),
        };
        out.zeta_prime0 += math::abs(partial) * e;
    }
    out
}

/// Smallest nonzero `|α|` among the template exponents (1 if there is none).
fn exponent_gap(template: &ExpansionTemplate) -> f64 {
    template
        .terms
        .iter()
        .filter(|t| !t.exponent.is_zero())
        .map(|t| math::abs(rational_to_f64(t.exponent)))
        .fold(f64::INFINITY, f64::min)
        .min(1.0)
}

/// `ζ(0)` and `ζ′(0)` of one form degree from samples, their fit and the
/// trace evaluator. The error bounds include the shift under a fit with the
/// template extended by half an order.
pub fn zeta_near_zero<H: HeatTrace + ?Sized>(
    degree: usize,
    samples: &TraceSamples,
    fit: &FittedExpansion,
    trace: &H,
    kernel_dim: u64,
    options: &ZetaOptions,
) -> Result<ZetaData> {
    let mut z = zeta_from_fit(degree, samples, fit, trace, kernel_dim, options)?;
    let t = &fit.template;
    for extra in [Rational::new(1, 2), Rational::from_integer(1)] {
        let longer = heat_trace_structure(t.m, t.b, t.even, t.boundary, t.cutoff + extra)
            .and_then(|tpl| fit_expansion_with(samples, &tpl, fit.weighting))
            .and_then(|f| zeta_from_fit(degree, samples, &f, trace, kernel_dim, options));
        if let Ok(l) = longer {
            let d = &mut z.diagnostics;
            d.truncation_zeta0 = d.truncation_zeta0.max(2.0 * math::abs(l.zeta0 - z.zeta0));
            d.truncation_zeta_prime0 = d.truncation_zeta_prime0.max(2.0 * math::abs(l.zeta_prime0 - z.zeta_prime0));
        }
    }
    let d = &mut z.diagnostics;
    d.zeta0_error += d.truncation_zeta0;
    d.zeta_prime0_error += d.truncation_zeta_prime0;
    let (residue_estimate, residue_bound) = estimate_residue_at_zero(samples, fit)?;
    z.residue_estimate = residue_estimate;
    z.residue_bound = residue_bound;
    Ok(z)
}

fn zeta_from_fit<H: HeatTrace + ?Sized>(
    degree: usize,
    samples: &TraceSamples,
    fit: &FittedExpansion,
    trace: &H,
    kernel_dim: u64,
    options: &ZetaOptions,
) -> Result<ZetaData> {
    if !(fit.residual < options.residual_limit) {
        return Err(Error::FitResidualTooLarge { residual: fit.residual, limit: options.residual_limit });
    }
    let lambda_min = trace.lambda_min().ok_or(Error::DecayRateUnknown)?;
    if !(lambda_min > 0.0) || !lambda_min.is_finite() {
        return Err(Error::DecayRateUnknown);
    }
    let split = options.split;
    let t_min = samples.grid.iter().copied().fold(f64::INFINITY, f64::min);
    if !(split > 0.0) || !(t_min < split) {
        return Err(Error::Domain("Mellin split must lie above the smallest sample time"));
    }
    let k = kernel_dim as f64;
    let laurent = fitted_laurent(fit, kernel_dim, split);

    // ∫_{t_min}^T (Tr − fit) dt/t, in u = log t
    let remainder = |t: f64| trace.trace(t) - fit.evaluate(t);
    let small = integrate(|u| remainder(math::exp(u)), math::ln(t_min), math::ln(split), options.abs_tol, 0.0)?;
    let below_t_min_bound = math::abs(remainder(t_min)) * (1.0 / exponent_gap(&fit.template) + math::abs(math::ln(t_min)));

    // ∫_T^{t_max} (Tr − K) dt/t, with t_max pushed out until the decay bound
    // (Tr − K)(t_max) / (λ_min t_max) is negligible
    let scale = math::abs(laurent.h0).max(1.0);
    let mut t_max = split + 40.0 / lambda_min;
    let tail_at = |t: f64| math::abs(trace.trace(t) - k) / (lambda_min * t);
    while tail_at(t_max) > 1e-16 * scale {
        t_max = split + 2.0 * (t_max - split);
        if t_max > 1e12 * split.max(1.0 / lambda_min) {
            return Err(Error::NoConvergence("large-time trace does not decay"));
        }
    }
    let large_t_tail_bound = tail_at(t_max);
    let (lo, hi) = (math::ln(split), math::ln(t_max));
    let breaks: Vec<f64> = (0..=16).map(|i| lo + (hi - lo) * i as f64 / 16.0).collect();
    let mut large_integrand = |u: f64| {
        let t = math::exp(u);
        trace.trace(t) - k
    };
    let large = crate::quad::integrate_with_breaks(&mut large_integrand, &breaks, options.abs_tol, 0.0)?;

    let trace_tail_bound = trace.tail_bound(t_min) * (math::ln(t_max) - math::ln(t_min));

    let h0 = laurent.h0 + small.value + large.value;
    let a_m1 = laurent.a_m1;
    let a_m2 = laurent.a_m2;
    let zeta_finite = a_m1 + EULER_GAMMA * a_m2;
    let zeta_prime0 = h0 + EULER_GAMMA * a_m1 + RGAMMA_S3 * a_m2;
    let c0 = laurent.c0 + EULER_GAMMA * a_m2;

    let c0_error = fit
        .terms()
        .zip(&fit.standard_errors)
        .find(|((t, _), _)| t.exponent.is_zero() && !t.log)
        .map_or(0.0, |(_, &e)| e);
    let data = data_propagation(fit, t_min);
    let zeta0_error = c0_error + data.zeta0;
    let zeta_prime0_error = small.error
        + below_t_min_bound
        + large.error
        + large_t_tail_bound
        + trace_tail_bound
        + data.zeta_prime0
        + EULER_GAMMA * c0_error;

    Ok(ZetaData {
        degree,
        poles: fitted_poles(fit, kernel_dim),
        zeta0: c0,
        zeta0_minus_kernel: zeta_finite,
        zeta_prime0,
        kernel_dim,
        regular_at_zero: !fit.template.has_log_at(Rational::zero()),
        residue_at_zero: a_m2,
        residue_estimate: 0.0,
        residue_bound: 0.0,
        diagnostics: ZetaDiagnostics {
            split,
            t_min,
            t_max,
            fit_residual: fit.residual,
            small_t_quadrature_error: small.error,
            below_t_min_bound,
            large_t_quadrature_error: large.error,
            large_t_tail_bound,
            trace_tail_bound,
            truncation_zeta0: 0.0,
            truncation_zeta_prime0: 0.0,
            zeta0_error,
            zeta_prime0_error,
        },
    })
}

/// Residue of `ζ` at 0 and its uncertainty from a fit whose template has a
/// `t⁰ log t` slot (added if absent): `−g₀ ± 5σ(g₀)`.
fn log_zero_coefficient(samples: &TraceSamples, base: &ExpansionTemplate, weighting: FitWeighting) -> Result<(f64, f64)> {
    let zero = Rational::zero();
    let mut template = base.clone();
    if !template.has_log_at(zero) {
        let mut terms = template.terms.clone();
        if !terms.iter().any(|t| t.exponent.is_zero() && !t.log) {
            terms.push(TemplateTerm { exponent: zero, log: false, source: Face::Ff });
        }
        terms.push(TemplateTerm { exponent: zero, log: true, source: Face::Ff });
        template = ExpansionTemplate::from_terms(
            terms,
            template.m,
            template.b,
            template.even,
            template.boundary,
            template.cutoff,
        )?;
    }
    let aug = fit_expansion_with(samples, &template, weighting)?;
    let found = aug
        .terms()
        .zip(aug.standard_errors.iter().zip(&aug.data_errors))
        .find(|((t, _), _)| t.exponent.is_zero() && t.log)
        .map(|((_, c), (&e, &d))| (c, 5.0 * e + d))
        .unwrap_or((0.0, 0.0));
    Ok(found)
}

/// The `t⁰ log t` coefficient (negated: the residue of ζ at 0) with an
/// uncertainty of five standard errors, its data error, and twice its
/// largest shift when the template is extended by half or one order.
fn estimate_residue_at_zero(samples: &TraceSamples, fit: &FittedExpansion) -> Result<(f64, f64)> {
    let (g0, err) = log_zero_coefficient(samples, &fit.template, fit.weighting)?;
    let t = &fit.template;
    let mut truncation = 0.0f64;
    for extra in [Rational::new(1, 2), Rational::from_integer(1)] {
        if let Ok((g1, _)) = heat_trace_structure(t.m, t.b, t.even, t.boundary, t.cutoff + extra)
            .and_then(|tpl| log_zero_coefficient(samples, &tpl, fit.weighting))
        {
            truncation = truncation.max(2.0 * math::abs(g1 - g0));
        }
    }
    Ok((-g0, err + truncation))
}

/// The small-time Mellin integral `M(s) = ∫₀^T t^{s−1} (Tr − K) dt`,
/// continued through the fitted expansion, for complex `s`.
pub struct SmallTimeMellin<'a> {
    fit: &'a FittedExpansion,
    kernel_dim: u64,
    split: f64,
    /// `(u, w · (Tr − fit)(e^u))` on `[log t_min, log T]`.
    remainder: Vec<(f64, f64)>,
}

impl<'a> SmallTimeMellin<'a> {
    pub fn new<H: HeatTrace + ?Sized>(fit: &'a FittedExpansion, trace: &H, kernel_dim: u64, t_min: f64, split: f64) -> Result<Self> {
        if !(t_min > 0.0 && t_min < split) {
            return Err(Error::Domain("need 0 < t_min < split"));
        }
        let remainder = composite_kronrod(math::ln(t_min), math::ln(split), 24)
            .into_iter()
            .map(|(u, w)| {
                let t = math::exp(u);
                (u, w * (trace.trace(t) - fit.evaluate(t)))
            })
            .collect();
        Ok(Self { fit, kernel_dim, split, remainder })
    }

    pub fn eval(&self, s: Complex64) -> Complex64 {
        let l = math::ln(self.split);
        let pow_t = |z: Complex64| (z * l).exp();
        let mut acc = Complex64::zero();
        for (term, c) in self.fit.terms() {
            let z = s + rational_to_f64(term.exponent);
            let p = pow_t(z);
            acc += if term.log { p * (l / z - 1.0 / (z * z)) * c } else { p / z * c };
        }
        acc -= pow_t(s) / s * self.kernel_dim as f64;
        for &(u, wr) in &self.remainder {
            acc += (s * u).exp() * wr;
        }
        acc
    }

    /// `(a₋₂, a₋₁, a₀)` of the Laurent expansion at real `s0`, from the
    /// trapezoid rule on the circle `|s − s0| = radius`.
    pub fn laurent(&self, s0: f64, radius: f64, points: usize) -> [f64; 3] {
        let mut a = [Complex64::zero(); 3];
        for j in 0..points {
            let theta = 2.0 * PI * (j as f64 + 0.5) / points as f64;
            let h = Complex64::from_polar(radius, theta);
            let f = self.eval(h + s0);
            a[0] += f * h * h;
            a[1] += f * h;
            a[2] += f;
        }
        let n = points as f64;
        [a[0].re / n, a[1].re / n, a[2].re / n]
    }
}

/// Laurent coefficients of the fit at one predicted pole, compared with a
/// contour evaluation of the small-time Mellin integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaurentComparison {
    pub location: Rational,
    pub order: u32,
    pub fitted: [f64; 2],
    pub contour: [f64; 2],
}

impl LaurentComparison {
    /// Largest relative deviation of the contour coefficients from the fitted
    /// ones (absolute for coefficients below `floor`).
    pub fn deviation(&self, floor: f64) -> f64 {
        self.fitted
            .iter()
            .zip(&self.contour)
            .map(|(f, c)| math::abs(f - c) / math::abs(*f).max(floor))
            .fold(0.0, f64::max)
    }
}

/// Contour check of every pole of `Γ(s)ζ(s)` predicted by the fit.
pub fn laurent_check<H: HeatTrace + ?Sized>(
    fit: &FittedExpansion,
    trace: &H,
    kernel_dim: u64,
    t_min: f64,
    split: f64,
    radius: f64,
) -> Result<Vec<LaurentComparison>> {
    let m = SmallTimeMellin::new(fit, trace, kernel_dim, t_min, split)?;
    Ok(fitted_poles(fit, kernel_dim)
        .into_iter()
        .map(|p| {
            let [a2, a1, _] = m.laurent(rational_to_f64(p.location), radius, 64);
            let fitted2 = if p.order == 2 { p.leading } else { 0.0 };
            LaurentComparison { location: p.location, order: p.order, fitted: [fitted2, p.residue], contour: [a2, a1] }
        })
        .collect())
}

/// A closed flat factor or the point.
#[derive(Debug, Clone, PartialEq)]
pub enum Factor {
    Point,
    Circle { radius: f64 },
    Torus { periods: Vec<f64> },
}

impl Factor {
    pub fn dim(&self) -> usize {
        match self {
            Factor::Point => 0,
            Factor::Circle { .. } => 1,
            Factor::Torus { periods } => periods.len(),
        }
    }

    /// Betti numbers (flat circles and tori).
    pub fn betti(&self) -> Result<Vec<u64>> {
        match self {
            Factor::Point => Ok(vec![1]),
            Factor::Circle { .. } => Ok(vec![1, 1]),
            Factor::Torus { periods } if periods.is_empty() => Err(Error::UnknownModel("torus without periods")),
            Factor::Torus { periods } => Ok((0..=periods.len()).map(|k| binomial(periods.len(), k)).collect()),
        }
    }
}

/// The model spaces the pipeline handles.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelDescriptor {
    /// `B × C(F)` with `C(F)` truncated at `x = 1` (Dirichlet/relative
    /// conditions); `base = Point` is the bare cone.
    TruncatedCone { fiber: Factor, base: Factor },
    /// A closed flat factor on its own.
    Closed(Factor),
    /// A single radial order `ν` on `(0, 1]` (one form degree).
    SingleOrder { nu: f64 },
}

impl ModelDescriptor {
    /// Total dimension `m`.
    pub fn dimension(&self) -> usize {
        match self {
            ModelDescriptor::TruncatedCone { fiber, base } => base.dim() + fiber.dim() + 1,
            ModelDescriptor::Closed(f) => f.dim(),
            ModelDescriptor::SingleOrder { .. } => 0,
        }
    }

    /// Edge dimension `b` (the base).
    pub fn edge_dimension(&self) -> usize {
        match self {
            ModelDescriptor::TruncatedCone { base, .. } => base.dim(),
            _ => 0,
        }
    }
}

/// `dim ker Δ_k` for `k = 0..=m`.
///
/// Dirichlet eigenfunctions `√x J_ν(λx)` need `J_ν(λ) = 0` with `λ > 0`, so a
/// truncated cone has no kernel; Künneth then kills the kernel of any product
/// with it.
pub fn kernel_dimension(model: &ModelDescriptor) -> Result<Vec<u64>> {
    match model {
        ModelDescriptor::TruncatedCone { fiber, base } => {
            fiber.betti()?;
            base.betti()?;
            Ok(vec![0; model.dimension() + 1])
        }
        ModelDescriptor::Closed(f) => f.betti(),
        ModelDescriptor::SingleOrder { nu } if !(*nu >= 0.0) => Err(Error::UnknownModel("negative order")),
        ModelDescriptor::SingleOrder { .. } => Ok(vec![0]),
    }
}

/// Analytic torsion assembled from per-degree zeta data.
#[derive(Debug, Clone, PartialEq)]
pub struct TorsionReport {
    pub per_degree: Vec<ZetaData>,
    /// `½ Σ_k (−1)^k k ζ′_k(0)`.
    pub log_t: f64,
    /// Every `ζ_k` is regular at 0.
    pub per_degree_regular: bool,
    /// `½ Σ_k (−1)^k k Res_{s=0} ζ_k`.
    pub torsion_residue: f64,
    /// Residues cancel in the weighted sum within their fitted uncertainty
    /// (reported even when `per_degree_regular` holds).
    pub residue_cancellation: bool,
    /// `ζ_AT` is regular at 0: every degree regular, or residues cancel.
    pub torsion_zeta_regular: bool,
    /// `½ Σ_k (−1)^k k · error(ζ′_k(0))`, summed in absolute value.
    pub log_t_error: f64,
    pub model: ModelDescriptor,
}

/// `log T = ½ Σ_k (−1)^k k ζ′_k(0)` over degrees `0..=m`.
pub fn torsion_assemble(mut per_degree: Vec<ZetaData>, model: ModelDescriptor) -> Result<TorsionReport> {
    per_degree.sort_by_key(|z| z.degree);
    let m = model.dimension();
    for k in 0..=m {
        if per_degree.get(k).map(|z| z.degree) != Some(k) {
            return Err(Error::MissingDegree { k });
        }
    }
    if per_degree.len() != m + 1 {
        return Err(Error::Domain("degrees beyond the model dimension supplied"));
    }
    let weight = |k: usize| if k.is_multiple_of(2) { k as f64 } else { -(k as f64) };
    let log_t = 0.5 * math::neumaier_sum(per_degree.iter().map(|z| weight(z.degree) * z.zeta_prime0));
    let log_t_error =
        0.5 * per_degree.iter().map(|z| math::abs(weight(z.degree)) * z.diagnostics.zeta_prime0_error).sum::<f64>();
    let torsion_residue = 0.5 * math::neumaier_sum(per_degree.iter().map(|z| weight(z.degree) * z.residue_at_zero));
    let per_degree_regular = per_degree.iter().all(|z| z.regular_at_zero);
    let residue_scale = per_degree.iter().map(|z| math::abs(z.residue_at_zero) * z.degree as f64).fold(0.0, f64::max);
    let residue_uncertainty =
        0.5 * per_degree.iter().map(|z| math::abs(weight(z.degree)) * z.residue_bound).sum::<f64>();
    let residue_cancellation =
        math::abs(torsion_residue) <= residue_uncertainty + 1e-12 * residue_scale.max(f64::MIN_POSITIVE);
    Ok(TorsionReport {
        per_degree,
        log_t,
        per_degree_regular,
        torsion_residue,
        residue_cancellation,
        torsion_zeta_regular: per_degree_regular || residue_cancellation,
        log_t_error,
        model,
    })
}
