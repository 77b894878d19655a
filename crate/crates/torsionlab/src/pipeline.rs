//! fiber → cone spectrum → traces → fits → zeta → torsion, with the
//! expensive stages spread over a rayon pool.

use std::collections::BTreeMap;

use rayon::prelude::*;
use torsionlab_core::bessel::bessel_j_zeros;
use torsionlab_core::fiber::{
    a_spectrum, circle_spectrum, required_fiber_cutoff, torus_spectrum, FiberSpectrum, NuSpectrum,
};
use torsionlab_core::fit::{fit_expansion_with, FittedExpansion};
use torsionlab_core::phg::{heat_trace_structure, ExpansionTemplate};
use torsionlab_core::trace::{
    mckean_singer_defect, ConeSpectrum, DiscreteSpectrum, HeatTrace, KunnethTrace, TraceSamples,
};
use torsionlab_core::zeta::{kernel_dimension, torsion_assemble, zeta_near_zero, TorsionReport, ZetaData, ZetaOptions};

use crate::config::{FactorSpec, ModelConfig, ModelKind, TimeGrid};
use crate::error::{CliError, CliResult};

/// Worker pool sized by `TORSIONLAB_THREADS` (all cores if unset).
pub fn thread_pool() -> CliResult<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("TORSIONLAB_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::input(format!("TORSIONLAB_THREADS must be a positive integer, got '{v}'")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::io(format!("thread pool: {e}")))
}

/// Hodge spectrum of a closed flat factor up to `μ² ≤ cutoff`.
pub fn factor_spectrum(spec: &FactorSpec, cutoff: f64) -> CliResult<FiberSpectrum> {
    Ok(match spec {
        FactorSpec::Point => return Err(CliError::input("a point has no Hodge spectrum to build")),
        FactorSpec::Circle { radius } => circle_spectrum(*radius, cutoff)?,
        FactorSpec::Torus { periods } => torus_spectrum(periods, cutoff)?,
    })
}

/// `ν` spectra of `A` per cone degree (one degree for a single order).
pub fn nu_spectra(cfg: &ModelConfig) -> CliResult<Vec<NuSpectrum>> {
    if let Some(nu) = cfg.single_nu {
        return Ok(vec![NuSpectrum::single(nu, 1, 0)?]);
    }
    let fiber = factor_spectrum(&cfg.fiber, required_fiber_cutoff(cfg.nu_max))?;
    (0..=fiber.dim_f + 1)
        .into_par_iter()
        .map(|p| a_spectrum(&fiber, p, cfg.convention, cfg.nu_max).map_err(CliError::from))
        .collect()
}

/// Dirichlet spectrum of the truncated cone over all degrees, with the Bessel
/// zeros of distinct orders found concurrently.
pub fn cone_spectrum(nus: &[NuSpectrum], lambda_max: f64, weyl_dim: u32) -> CliResult<ConeSpectrum> {
    let all = nus.iter().skip(1).fold(nus[0].clone(), |acc, s| acc.union(s));
    let mut orders: Vec<f64> = all.modes.iter().map(|m| m.nu).collect();
    orders.sort_by(f64::total_cmp);
    orders.dedup();
    let zeros: Vec<Vec<f64>> = orders
        .par_iter()
        .map(|&nu| bessel_j_zeros(nu, lambda_max))
        .collect::<Result<_, _>>()?;
    let cache: BTreeMap<u64, Vec<f64>> = orders.iter().map(|nu| nu.to_bits()).zip(zeros).collect();
    Ok(ConeSpectrum::build_with(&all, lambda_max, weyl_dim, |nu| Ok(cache[&nu.to_bits()].clone()))?)
}

/// The spectral data of a configured model.
pub struct Model {
    pub config: ModelConfig,
    pub nu_spectra: Vec<NuSpectrum>,
    /// Cone spectrum restricted to each cone degree.
    pub cone: Vec<ConeSpectrum>,
    /// Hodge spectra of the base per degree (product models only).
    pub base: Vec<DiscreteSpectrum>,
}

impl Model {
    pub fn build(cfg: &ModelConfig) -> CliResult<Self> {
        let nu_spectra = nu_spectra(cfg)?;
        let spec = cone_spectrum(&nu_spectra, cfg.lambda_max, cfg.cone_dim() as u32)?;
        let cone = (0..nu_spectra.len()).map(|p| spec.restrict(p)).collect();
        let base = match (cfg.single_nu, cfg.model) {
            (None, ModelKind::Product) => {
                let b = factor_spectrum(&cfg.base, cfg.lambda_max)?;
                (0..=b.dim_f).map(|k| DiscreteSpectrum::from_fiber(&b, k)).collect::<Result<_, _>>()?
            }
            _ => Vec::new(),
        };
        Ok(Self { config: cfg.clone(), nu_spectra, cone, base })
    }

    /// Number of form degrees `m + 1`.
    pub fn degrees(&self) -> usize {
        if self.base.is_empty() {
            self.cone.len()
        } else {
            self.cone.len() + self.base.len() - 1
        }
    }

    /// Heat trace in form degree `k`.
    pub fn trace(&self, k: usize) -> Box<dyn HeatTrace + '_> {
        if self.base.is_empty() {
            return Box::new(&self.cone[k]);
        }
        Box::new(KunnethTrace {
            first: self.base.iter().map(|d| d as &dyn HeatTrace).collect(),
            second: self.cone.iter().map(|d| d as &dyn HeatTrace).collect(),
            degree: k,
        })
    }

    /// Heat-trace template (with the artificial boundary series).
    pub fn template(&self) -> CliResult<ExpansionTemplate> {
        let c = &self.config;
        Ok(heat_trace_structure(c.dim() as i64, c.edge_dim() as i64, c.even, true, c.order)?)
    }

    /// Certified samples in every degree.
    pub fn samples(&self, grid: &TimeGrid) -> CliResult<Vec<TraceSamples>> {
        let points = grid.points();
        (0..self.degrees())
            .into_par_iter()
            .map(|k| {
                let tr = self.trace(k);
                let s = TraceSamples {
                    grid: points.clone(),
                    values: points.iter().map(|&t| tr.trace(t)).collect(),
                    tail_bound: points.iter().map(|&t| tr.tail_bound(t)).collect(),
                };
                s.certify()?;
                Ok(s)
            })
            .collect()
    }

    pub fn fits(&self, samples: &[TraceSamples]) -> CliResult<Vec<FittedExpansion>> {
        let tpl = self.template()?;
        samples
            .par_iter()
            .map(|s| fit_expansion_with(s, &tpl, self.config.weighting).map_err(CliError::from))
            .collect()
    }

    pub fn zetas(&self, samples: &[TraceSamples], fits: &[FittedExpansion]) -> CliResult<Vec<ZetaData>> {
        let kernel = kernel_dimension(&self.config.descriptor())?;
        let options = ZetaOptions { split: self.config.split, ..ZetaOptions::default() };
        (0..self.degrees())
            .into_par_iter()
            .map(|k| {
                let tr = self.trace(k);
                let dim = kernel.get(k).copied().unwrap_or(0);
                zeta_near_zero(k, &samples[k], &fits[k], tr.as_ref(), dim, &options).map_err(CliError::from)
            })
            .collect()
    }
}

/// Output of a full torsion run.
pub struct TorsionRun {
    pub report: TorsionReport,
    pub fits: Vec<FittedExpansion>,
    /// McKean–Singer defect on the zeta grid and on `t ∈ [0.05, 1]`
    /// (`None` for a single-degree model).
    pub defect: Option<f64>,
    pub defect_large_t: Option<f64>,
    pub kernel: Vec<u64>,
}

pub const DEFECT_GRID: TimeGrid = TimeGrid { t_min: 0.05, t_max: 1.0, points: 20 };

pub fn torsion(model: &Model) -> CliResult<TorsionRun> {
    let samples = model.samples(&model.config.zeta_grid)?;
    let fits = model.fits(&samples)?;
    let zetas = model.zetas(&samples, &fits)?;
    let kernel = kernel_dimension(&model.config.descriptor())?;
    let (defect, defect_large_t) = if model.degrees() > 1 {
        let late = model.samples(&DEFECT_GRID)?;
        (Some(mckean_singer_defect(&samples, &kernel)?), Some(mckean_singer_defect(&late, &kernel)?))
    } else {
        (None, None)
    };
    let report = torsion_assemble(zetas, model.config.descriptor())?;
    Ok(TorsionRun { report, fits, defect, defect_large_t, kernel })
}
