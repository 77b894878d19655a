//! Heat traces: Dirichlet-truncated cones (eigenvalues `j²_{ν,k}`), closed flat
//! models, Künneth products, and the McKean–Singer diagnostic.

use alloc::vec::Vec;

use crate::bessel::bessel_j_zeros;
use crate::error::{Error, Result};
use crate::fiber::{FiberSpectrum, NuSpectrum};
use crate::math::{self, NeumaierSum, PI};

/// Relative size below which a truncation tail counts as certified.
pub const TAIL_CERTIFICATION: f64 = 1e-10;

/// A heat trace `t ↦ Σ mult · e^{−tλ}` that can be evaluated at any `t > 0`.
pub trait HeatTrace {
    /// Truncated trace (all eigenvalues below the cutoff).
    fn trace(&self, t: f64) -> f64;
    /// Bound on the contribution of eigenvalues above the cutoff.
    fn tail_bound(&self, t: f64) -> f64;
    /// Smallest positive eigenvalue, if known.
    fn lambda_min(&self) -> Option<f64>;
    /// Number of zero eigenvalues included in [`HeatTrace::trace`].
    fn zero_modes(&self) -> u64 {
        0
    }
}

impl<T: HeatTrace + ?Sized> HeatTrace for &T {
    fn trace(&self, t: f64) -> f64 {
        (**self).trace(t)
    }
    fn tail_bound(&self, t: f64) -> f64 {
        (**self).tail_bound(t)
    }
    fn lambda_min(&self) -> Option<f64> {
        (**self).lambda_min()
    }
    fn zero_modes(&self) -> u64 {
        (**self).zero_modes()
    }
}

/// Envelope `N(λ) ≤ C λ^{d/2}` of the eigenvalue counting function, with `C`
/// taken as 1.25 times the largest ratio observed on the computed spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylEnvelope {
    pub constant: f64,
    pub dim: u32,
}

impl WeylEnvelope {
    /// Fits the envelope to ascending `(λ, mult)` pairs.
    pub fn fit(sorted: &[(f64, u64)], dim: u32) -> Self {
        let mut count = 0u64;
        let mut ratio = 0.0f64;
        for &(lambda, mult) in sorted {
            count += mult;
            if lambda > 0.0 {
                ratio = ratio.max(count as f64 / math::pow(lambda, dim as f64 / 2.0));
            }
        }
        Self { constant: 1.25 * ratio, dim }
    }

    /// `Σ_{λ > Λ} e^{−tλ} ≤ C t^{−d/2} Γ(d/2 + 1, tΛ)`.
    pub fn tail(&self, t: f64, cutoff: f64) -> f64 {
        if cutoff.is_infinite() {
            return 0.0;
        }
        let a = self.dim as f64 / 2.0;
        self.constant * math::pow(t, -a) * upper_gamma_half_integer(self.dim + 2, t * cutoff)
    }
}

/// `Γ(n/2, x)` for integer `n ≥ 1`, by upward recurrence from `Γ(1, x)` or
/// `Γ(1/2, x)`.
pub fn upper_gamma_half_integer(n: u32, x: f64) -> f64 {
    let (mut a, mut g) = if n.is_multiple_of(2) {
        (1.0, math::exp(-x))
    } else {
        (0.5, math::sqrt(PI) * math::erfc(math::sqrt(x)))
    };
    while a < n as f64 / 2.0 - 0.25 {
        g = a * g + math::pow(x, a) * math::exp(-x);
        a += 1.0;
    }
    g
}

/// A finite list of eigenvalues, complete below `cutoff`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSpectrum {
    /// `(λ, mult)`, ascending.
    pub eigenvalues: Vec<(f64, u64)>,
    pub cutoff: f64,
    pub envelope: WeylEnvelope,
}

impl DiscreteSpectrum {
    /// `weyl_dim` is the dimension governing eigenvalue growth.
    pub fn new(mut eigenvalues: Vec<(f64, u64)>, cutoff: f64, weyl_dim: u32) -> Result<Self> {
        if eigenvalues.iter().any(|&(l, m)| !(l >= 0.0) || !l.is_finite() || m == 0) {
            return Err(Error::Domain("eigenvalues must be finite, nonnegative, with positive multiplicity"));
        }
        eigenvalues.sort_by(|a, b| a.0.total_cmp(&b.0));
        eigenvalues.retain(|e| e.0 <= cutoff);
        let envelope = WeylEnvelope::fit(&eigenvalues, weyl_dim);
        Ok(Self { eigenvalues, cutoff, envelope })
    }

    /// Hodge Laplacian spectrum of a closed flat fibre in one degree.
    pub fn from_fiber(fiber: &FiberSpectrum, degree: usize) -> Result<Self> {
        if degree > fiber.dim_f {
            return Err(Error::InvalidDegree { p: degree, max: fiber.dim_f });
        }
        let ev = fiber.entries.iter().filter(|e| e.degree == degree).map(|e| (e.mu2, e.mult)).collect();
        Self::new(ev, fiber.mu2_cutoff, fiber.dim_f as u32)
    }

    /// All eigenvalues multiplied by `c > 0`.
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            eigenvalues: self.eigenvalues.iter().map(|&(l, m)| (c * l, m)).collect(),
            cutoff: c * self.cutoff,
            envelope: WeylEnvelope {
                constant: self.envelope.constant * math::pow(c, self.envelope.dim as f64 / 2.0),
                dim: self.envelope.dim,
            },
        }
    }
}

impl HeatTrace for DiscreteSpectrum {
    fn trace(&self, t: f64) -> f64 {
        math::neumaier_sum(self.eigenvalues.iter().map(|&(l, m)| m as f64 * math::exp(-t * l)))
    }

    fn tail_bound(&self, t: f64) -> f64 {
        self.envelope.tail(t, self.cutoff)
    }

    fn lambda_min(&self) -> Option<f64> {
        self.eigenvalues.iter().map(|e| e.0).find(|&l| l > 0.0)
    }

    fn zero_modes(&self) -> u64 {
        self.eigenvalues.iter().filter(|e| e.0 == 0.0).map(|e| e.1).sum()
    }
}

/// One radial order of the truncated cone with its Dirichlet eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeOrder {
    pub nu: f64,
    pub p: usize,
    pub mult: u64,
    /// `j_{ν,k} ≤ √Λ`, ascending.
    pub zeros: Vec<f64>,
}

/// Dirichlet spectrum of the cone truncated at `x = 1`: eigenvalues
/// `j²_{ν,k} ≤ Λ` for every order of the underlying `ν` spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeSpectrum {
    pub nu_spectrum: NuSpectrum,
    pub orders: Vec<ConeOrder>,
    pub lambda_cutoff: f64,
    pub envelope: WeylEnvelope,
}

impl ConeSpectrum {
    /// Finds the Bessel zeros for every order; `weyl_dim` is the cone
    /// dimension (`f + 1`, or 1 for a prescribed single order).
    pub fn build(nu_spectrum: &NuSpectrum, lambda_cutoff: f64, weyl_dim: u32) -> Result<Self> {
        Self::build_with(nu_spectrum, lambda_cutoff, weyl_dim, |nu| bessel_j_zeros(nu, lambda_cutoff))
    }

    /// As [`ConeSpectrum::build`], with a caller-supplied zero finder (which
    /// may, for instance, run orders concurrently from a cache).
    pub fn build_with<Z: FnMut(f64) -> Result<Vec<f64>>>(
        nu_spectrum: &NuSpectrum,
        lambda_cutoff: f64,
        weyl_dim: u32,
        mut zeros_of: Z,
    ) -> Result<Self> {
        if !(lambda_cutoff > 0.0) || !lambda_cutoff.is_finite() {
            return Err(Error::Domain("eigenvalue cutoff must be positive and finite"));
        }
        let need = math::sqrt(lambda_cutoff);
        if nu_spectrum.cutoff < need {
            return Err(Error::IncompleteSpectrum { have: nu_spectrum.cutoff, need });
        }
        let mut orders: Vec<ConeOrder> = Vec::new();
        for m in &nu_spectrum.modes {
            match orders.last_mut() {
                Some(o) if o.nu == m.nu && o.p == m.p => o.mult += m.mult,
                _ => orders.push(ConeOrder { nu: m.nu, p: m.p, mult: m.mult, zeros: Vec::new() }),
            }
        }
        let mut last: Option<(f64, Vec<f64>)> = None;
        for o in &mut orders {
            o.zeros = match &last {
                Some((nu, z)) if *nu == o.nu => z.clone(),
                _ => zeros_of(o.nu)?,
            };
            last = Some((o.nu, o.zeros.clone()));
        }
        orders.retain(|o| !o.zeros.is_empty());
        let envelope = WeylEnvelope::fit(&sorted_eigenvalues(&orders), weyl_dim);
        Ok(Self { nu_spectrum: nu_spectrum.clone(), orders, lambda_cutoff, envelope })
    }

    /// The part of the spectrum in cone degree `p`.
    pub fn restrict(&self, p: usize) -> Self {
        let orders: Vec<ConeOrder> = self.orders.iter().filter(|o| o.p == p).cloned().collect();
        let mut nu_spectrum = self.nu_spectrum.clone();
        nu_spectrum.modes.retain(|m| m.p == p);
        let envelope = WeylEnvelope::fit(&sorted_eigenvalues(&orders), self.envelope.dim);
        Self { nu_spectrum, orders, lambda_cutoff: self.lambda_cutoff, envelope }
    }

    /// `(λ, mult)` ascending.
    pub fn eigenvalues(&self) -> Vec<(f64, u64)> {
        sorted_eigenvalues(&self.orders)
    }

    /// Compensated partial sums `mult · Σ_k e^{−t j²_{ν,k}}`, one per order,
    /// in ascending `k`.
    pub fn partial_sums(&self, t: f64) -> Vec<f64> {
        self.orders.iter().map(|o| order_partial_sum(o, t)).collect()
    }

    /// Eigenvalue count `≤ λ`.
    pub fn count_below(&self, lambda: f64) -> u64 {
        self.orders.iter().map(|o| o.mult * o.zeros.iter().filter(|&&j| j * j <= lambda).count() as u64).sum()
    }
}

/// `mult · Σ_k e^{−t j²_{ν,k}}` in ascending `k`, compensated.
pub fn order_partial_sum(o: &ConeOrder, t: f64) -> f64 {
    let mut s = NeumaierSum::new();
    for &j in &o.zeros {
        s.add(math::exp(-t * j * j));
    }
    o.mult as f64 * s.value()
}

fn sorted_eigenvalues(orders: &[ConeOrder]) -> Vec<(f64, u64)> {
    let mut ev: Vec<(f64, u64)> = orders.iter().flat_map(|o| o.zeros.iter().map(move |&j| (j * j, o.mult))).collect();
    ev.sort_by(|a, b| a.0.total_cmp(&b.0));
    ev
}

impl HeatTrace for ConeSpectrum {
    fn trace(&self, t: f64) -> f64 {
        math::neumaier_sum(self.partial_sums(t))
    }

    fn tail_bound(&self, t: f64) -> f64 {
        self.envelope.tail(t, self.lambda_cutoff)
    }

    fn lambda_min(&self) -> Option<f64> {
        self.orders.iter().filter_map(|o| o.zeros.first()).map(|j| j * j).fold(None, |a: Option<f64>, l| {
            Some(a.map_or(l, |a| a.min(l)))
        })
    }
}

/// Trace values on a time grid with certified truncation bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceSamples {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub tail_bound: Vec<f64>,
}

impl TraceSamples {
    /// Checks that every tail bound is below `1e−10 ×` its value.
    pub fn certify(&self) -> Result<()> {
        for ((&t, &v), &e) in self.grid.iter().zip(&self.values).zip(&self.tail_bound) {
            if !(e <= TAIL_CERTIFICATION * math::abs(v)) {
                return Err(Error::TailNotCertified { t, tail: e, value: v });
            }
        }
        Ok(())
    }

    /// The constant trace `value` with zero tail.
    pub fn constant(grid: &[f64], value: f64) -> Self {
        Self { grid: grid.to_vec(), values: grid.iter().map(|_| value).collect(), tail_bound: grid.iter().map(|_| 0.0).collect() }
    }
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() || grid.iter().any(|&t| !(t > 0.0) || !t.is_finite()) {
        return Err(Error::Domain("time grid must be nonempty with positive finite entries"));
    }
    Ok(())
}

/// Samples any trace on a grid, without certification.
pub fn sample<H: HeatTrace + ?Sized>(trace: &H, grid: &[f64]) -> Result<TraceSamples> {
    check_grid(grid)?;
    Ok(TraceSamples {
        grid: grid.to_vec(),
        values: grid.iter().map(|&t| trace.trace(t)).collect(),
        tail_bound: grid.iter().map(|&t| trace.tail_bound(t)).collect(),
    })
}

/// Samples a trace and certifies its truncation tails.
pub fn certified_samples<H: HeatTrace + ?Sized>(trace: &H, grid: &[f64]) -> Result<TraceSamples> {
    let s = sample(trace, grid)?;
    s.certify()?;
    Ok(s)
}

/// Certified trace of the truncated cone in degree `p`.
pub fn truncated_cone_trace(spec: &ConeSpectrum, p: usize, grid: &[f64]) -> Result<TraceSamples> {
    certified_samples(&spec.restrict(p), grid)
}

/// Degree-`k` heat trace of a product `X × Y` from per-degree traces of the
/// factors: `Σ_{i+j=k} Tr_i(X) Tr_j(Y)`.
pub struct KunnethTrace<'a> {
    pub first: Vec<&'a dyn HeatTrace>,
    pub second: Vec<&'a dyn HeatTrace>,
    pub degree: usize,
}

impl KunnethTrace<'_> {
    fn pairs(&self) -> impl Iterator<Item = (&dyn HeatTrace, &dyn HeatTrace)> + '_ {
        (0..=self.degree).filter_map(move |i| {
            let j = self.degree - i;
            Some((*self.first.get(i)?, *self.second.get(j)?))
        })
    }
}

impl HeatTrace for KunnethTrace<'_> {
    fn trace(&self, t: f64) -> f64 {
        math::neumaier_sum(self.pairs().map(|(a, b)| a.trace(t) * b.trace(t)))
    }

    fn tail_bound(&self, t: f64) -> f64 {
        self.pairs()
            .map(|(a, b)| {
                let (va, ea) = (math::abs(a.trace(t)), a.tail_bound(t));
                let (vb, eb) = (math::abs(b.trace(t)), b.tail_bound(t));
                va * eb + vb * ea + ea * eb
            })
            .sum()
    }

    /// Smallest positive `λ + μ` over contributing pairs.
    fn lambda_min(&self) -> Option<f64> {
        let mut best: Option<f64> = None;
        for (a, b) in self.pairs() {
            let (la, lb) = (a.lambda_min(), b.lambda_min());
            let cands = [
                la.zip(lb).map(|(x, y)| x + y),
                if b.zero_modes() > 0 { la } else { None },
                if a.zero_modes() > 0 { lb } else { None },
            ];
            for c in cands.into_iter().flatten() {
                best = Some(best.map_or(c, |v: f64| v.min(c)));
            }
        }
        best
    }

    fn zero_modes(&self) -> u64 {
        self.pairs().map(|(a, b)| a.zero_modes() * b.zero_modes()).sum()
    }
}

/// Künneth product: `Tr_k = Σ_{i+j=k} Tr_i(first) · Tr_j(second)`, with tail
/// bounds propagated as `(a + e_a)(b + e_b) − ab`.
pub fn product_trace(first: &[TraceSamples], second: &[TraceSamples]) -> Result<Vec<TraceSamples>> {
    let grid = match first.first().or(second.first()) {
        Some(s) => s.grid.clone(),
        None => return Ok(Vec::new()),
    };
    if first.iter().chain(second).any(|s| s.grid != grid) {
        return Err(Error::MismatchedGrids);
    }
    if first.is_empty() || second.is_empty() {
        return Ok(Vec::new());
    }
    let degrees = first.len() + second.len() - 1;
    let mut out = Vec::with_capacity(degrees);
    for k in 0..degrees {
        let mut values = Vec::with_capacity(grid.len());
        let mut tails = Vec::with_capacity(grid.len());
        for n in 0..grid.len() {
            let mut v = NeumaierSum::new();
            let mut e = 0.0;
            for i in 0..=k {
                let j = k - i;
                if i >= first.len() || j >= second.len() {
                    continue;
                }
                let (a, ea) = (first[i].values[n], first[i].tail_bound[n]);
                let (b, eb) = (second[j].values[n], second[j].tail_bound[n]);
                v.add(a * b);
                e += math::abs(a) * eb + math::abs(b) * ea + ea * eb;
            }
            values.push(v.value());
            tails.push(e);
        }
        out.push(TraceSamples { grid: grid.clone(), values, tail_bound: tails });
    }
    Ok(out)
}

/// `max_t |Σ_k (−1)^k (Tr_k(t) − β_k)|`.
pub fn mckean_singer_defect(per_degree: &[TraceSamples], betti: &[u64]) -> Result<f64> {
    let Some(first) = per_degree.first() else {
        return Err(Error::Domain("no degrees supplied"));
    };
    if per_degree.iter().any(|s| s.grid != first.grid) {
        return Err(Error::MismatchedGrids);
    }
    if betti.len() != per_degree.len() {
        return Err(Error::Domain("one Betti number per degree required"));
    }
    let mut worst = 0.0f64;
    for n in 0..first.grid.len() {
        let mut s = NeumaierSum::new();
        for (k, (samples, &b)) in per_degree.iter().zip(betti).enumerate() {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            s.add(sign * samples.values[n]);
            s.add(-sign * b as f64);
        }
        worst = worst.max(math::abs(s.value()));
    }
    Ok(worst)
}
