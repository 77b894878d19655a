//! Least-squares extraction of heat-trace expansion coefficients in the basis
//! `{t^α, t^α log t}` given by a template.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::least_squares;
use crate::math;
use crate::phg::{ExpansionTemplate, Rational, TemplateTerm};
use crate::trace::TraceSamples;

/// Largest accepted condition estimate of the weighted fit matrix.
pub const MAX_CONDITION: f64 = 1e12;

/// Row weighting of the fit; `α_min` is the smallest template exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FitWeighting {
    /// Rows scaled by `t^{α_min}`: small times, where the truncated
    /// expansion is most accurate, dominate.
    #[default]
    SmallTimeEmphasis,
    /// Rows scaled by `t^{−α_min}`, equalising the leading term's size.
    LeadingTerm,
    Uniform,
}

impl FitWeighting {
    pub fn as_str(self) -> &'static str {
        match self {
            FitWeighting::SmallTimeEmphasis => "small-time",
            FitWeighting::LeadingTerm => "leading-term",
            FitWeighting::Uniform => "uniform",
        }
    }

    fn weight(self, t: f64, alpha_min: f64) -> f64 {
        match self {
            FitWeighting::SmallTimeEmphasis => math::pow(t, alpha_min),
            FitWeighting::LeadingTerm => math::pow(t, -alpha_min),
            FitWeighting::Uniform => 1.0,
        }
    }
}

/// Template with fitted coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct FittedExpansion {
    pub template: ExpansionTemplate,
    /// One coefficient per template term, in template order.
    pub coefficients: Vec<f64>,
    /// Maximum relative deviation between fit and samples.
    pub residual: f64,
    pub condition: f64,
    pub weighting: FitWeighting,
    /// Least-squares standard error of each coefficient.
    pub standard_errors: Vec<f64>,
    /// Bound on each coefficient's shift from the samples' tail bounds,
    /// `Σ_r |A⁺_{ir}| w_r tail_r`.
    pub data_errors: Vec<f64>,
}

impl FittedExpansion {
    /// Coefficient of `t^α` (`log = false`) or `t^α log t`; zero for terms
    /// absent from the template.
    pub fn coefficient(&self, exponent: Rational, log: bool) -> f64 {
        self.template
            .terms
            .iter()
            .zip(&self.coefficients)
            .find(|(t, _)| t.exponent == exponent && t.log == log)
            .map_or(0.0, |(_, &c)| c)
    }

    /// `(term, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&TemplateTerm, f64)> + '_ {
        self.template.terms.iter().zip(self.coefficients.iter().copied())
    }

    /// The fitted expansion at `t`.
    pub fn evaluate(&self, t: f64) -> f64 {
        math::neumaier_sum(self.terms().map(|(term, c)| c * basis(term, t)))
    }
}

/// `t^α` or `t^α log t`.
pub fn basis(term: &TemplateTerm, t: f64) -> f64 {
    let p = math::pow(t, rational_to_f64(term.exponent));
    if term.log {
        p * math::ln(t)
    } else {
        p
    }
}

pub fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Fits with the default weighting.
pub fn fit_expansion(samples: &TraceSamples, template: &ExpansionTemplate) -> Result<FittedExpansion> {
    fit_expansion_with(samples, template, FitWeighting::default())
}

/// Weighted least squares of certified samples in the template basis.
pub fn fit_expansion_with(
    samples: &TraceSamples,
    template: &ExpansionTemplate,
    weighting: FitWeighting,
) -> Result<FittedExpansion> {
    let n = samples.grid.len();
    let k = template.terms.len();
    if samples.values.len() != n || samples.tail_bound.len() != n {
        return Err(Error::MismatchedGrids);
    }
    if k == 0 || n < 2 * k {
        return Err(Error::InsufficientSamples { samples: n, terms: k });
    }
    samples.certify()?;
    let alpha_min = template.min_exponent().map(rational_to_f64).unwrap_or(0.0);
    let weights: Vec<f64> = samples.grid.iter().map(|&t| weighting.weight(t, alpha_min)).collect();
    let columns: Vec<Vec<f64>> = template
        .terms
        .iter()
        .map(|term| samples.grid.iter().zip(&weights).map(|(&t, &w)| w * basis(term, t)).collect())
        .collect();
    let rhs: Vec<f64> = samples.values.iter().zip(&weights).map(|(v, w)| v * w).collect();
    let ls = least_squares(&columns, &rhs)?;
    if !(ls.condition <= MAX_CONDITION) {
        return Err(Error::IllConditioned { condition: ls.condition });
    }
    let dof = (n - k) as f64;
    let standard_errors =
        ls.variance_factors.iter().map(|v| math::sqrt(ls.residual_sum_squares / dof * v)).collect();
    let data_errors = ls
        .pinv
        .iter()
        .map(|row| row.iter().zip(&weights).zip(&samples.tail_bound).map(|((p, w), e)| math::abs(p * w) * e).sum())
        .collect();
    let mut fitted = FittedExpansion {
        template: template.clone(),
        coefficients: ls.x,
        residual: 0.0,
        condition: ls.condition,
        weighting,
        standard_errors,
        data_errors,
    };
    fitted.residual = samples
        .grid
        .iter()
        .zip(&samples.values)
        .map(|(&t, &v)| math::abs(fitted.evaluate(t) - v) / math::abs(v))
        .fold(0.0, f64::max);
    Ok(fitted)
}
