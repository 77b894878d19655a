//! JSON and CSV renderings of the pipeline's records.

use serde_json::{json, Value};
use torsionlab_core::fiber::{ModeOrigin, NuSpectrum};
use torsionlab_core::fit::FittedExpansion;
use torsionlab_core::phg::{ExpansionTemplate, Rational, ZetaPoleStructure};
use torsionlab_core::trace::TraceSamples;
use torsionlab_core::zeta::{Factor, ModelDescriptor, TorsionReport, ZetaData};

use crate::config::ModelConfig;
use crate::output::{fmt17, num, nums};

pub fn rational(r: Rational) -> Value {
    Value::String(if r.is_integer() { r.numer().to_string() } else { format!("{}/{}", r.numer(), r.denom()) })
}

pub fn template(t: &ExpansionTemplate) -> Value {
    json!({
        "terms": t.terms.iter().map(|term| json!({
            "exp": rational(term.exponent),
            "log": term.log,
            "source": term.source.as_str(),
        })).collect::<Vec<_>>(),
        "m": t.m,
        "b": t.b,
        "even": t.even,
        "boundary": t.boundary,
        "cutoff": rational(t.cutoff),
    })
}

pub fn pole_structure(z: &ZetaPoleStructure) -> Value {
    let poles = |ps: &[torsionlab_core::phg::Pole]| -> Vec<Value> {
        ps.iter().map(|p| json!({"location": rational(p.location), "order": p.order})).collect()
    };
    json!({
        "poles": poles(&z.poles),
        "gamma_zeta_poles": poles(&z.gamma_zeta_poles),
        "regular_at_zero": z.regular_at_zero,
        "zeta0_rule": {
            "t0_term": z.zeta0_rule.t0_term,
            "predicts_c0_zero": z.zeta0_rule.predicts_c0_zero,
            "description": z.zeta0_rule.description,
        },
    })
}

fn origin(o: &ModeOrigin) -> Value {
    match *o {
        ModeOrigin::Harmonic { fiber_degree } => json!({"block": "harmonic", "fiber_degree": fiber_degree}),
        ModeOrigin::Coupled { mu2, upper } => {
            json!({"block": "coupled", "mu2": num(mu2), "branch": if upper { "upper" } else { "lower" }})
        }
        ModeOrigin::Exact { mu2 } => json!({"block": "exact", "mu2": num(mu2)}),
        ModeOrigin::Coexact { mu2 } => json!({"block": "coexact", "mu2": num(mu2)}),
        ModeOrigin::Prescribed => json!({"block": "prescribed"}),
    }
}

/// Rounding bound of a closed-form `ν`.
fn nu_error(nu: f64) -> f64 {
    8.0 * f64::EPSILON * nu.max(1.0)
}

pub fn nu_spectrum(s: &NuSpectrum) -> Value {
    json!({
        "convention": s.convention.as_str(),
        "cutoff": num(s.cutoff),
        "modes": s.modes.iter().map(|m| {
            let (g_minus, g_plus) = m.indicial_roots();
            json!({
                "nu": num(m.nu),
                "nu_error": num(nu_error(m.nu)),
                "mult": m.mult,
                "p": m.p,
                "roots": [num(g_minus), num(g_plus)],
                "log_branch": m.log_branch(),
                "origin": origin(&m.origin),
            })
        }).collect::<Vec<_>>(),
    })
}

pub fn nu_spectrum_rows(s: &NuSpectrum) -> Vec<Vec<String>> {
    s.modes
        .iter()
        .map(|m| {
            let (a, b) = m.indicial_roots();
            vec![
                m.p.to_string(),
                fmt17(m.nu),
                fmt17(nu_error(m.nu)),
                m.mult.to_string(),
                fmt17(a),
                fmt17(b),
                m.log_branch().to_string(),
            ]
        })
        .collect()
}

pub const NU_CSV_HEADER: [&str; 7] = ["p", "nu", "nu_error", "mult", "g_minus", "g_plus", "log_branch"];

pub fn samples(degree: usize, s: &TraceSamples) -> Value {
    json!({
        "degree": degree,
        "t": nums(&s.grid),
        "value": nums(&s.values),
        "tail_bound": nums(&s.tail_bound),
    })
}

pub const TRACE_CSV_HEADER: [&str; 4] = ["degree", "t", "value", "tail_bound"];

pub fn sample_rows(degree: usize, s: &TraceSamples) -> Vec<Vec<String>> {
    (0..s.grid.len())
        .map(|i| vec![degree.to_string(), fmt17(s.grid[i]), fmt17(s.values[i]), fmt17(s.tail_bound[i])])
        .collect()
}

pub fn fit(degree: usize, f: &FittedExpansion) -> Value {
    json!({
        "degree": degree,
        "template": template(&f.template),
        "coefficients": f.terms().zip(&f.standard_errors).map(|((t, c), e)| json!({
            "exp": rational(t.exponent),
            "log": t.log,
            "value": num(c),
            "std_error": num(*e),
        })).collect::<Vec<_>>(),
        "residual": num(f.residual),
        "condition": num(f.condition),
        "weighting": f.weighting.as_str(),
    })
}

pub const FIT_CSV_HEADER: [&str; 5] = ["degree", "exp", "log", "value", "std_error"];

pub fn fit_rows(degree: usize, f: &FittedExpansion) -> Vec<Vec<String>> {
    f.terms()
        .zip(&f.standard_errors)
        .map(|((t, c), e)| {
            let exp = match rational(t.exponent) {
                Value::String(s) => s,
                _ => unreachable!(),
            };
            vec![degree.to_string(), exp, t.log.to_string(), fmt17(c), fmt17(*e)]
        })
        .collect()
}

pub fn zeta(z: &ZetaData) -> Value {
    let d = &z.diagnostics;
    json!({
        "degree": z.degree,
        "zeta0": num(z.zeta0),
        "zeta0_minus_kernel": num(z.zeta0_minus_kernel),
        "zeta0_error": num(d.zeta0_error),
        "zeta_prime0": num(z.zeta_prime0),
        "zeta_prime0_error": num(d.zeta_prime0_error),
        "kernel_dim": z.kernel_dim,
        "regular_at_zero": z.regular_at_zero,
        "residue_at_zero": num(z.residue_at_zero),
        "residue_estimate": num(z.residue_estimate),
        "residue_bound": num(z.residue_bound),
        "poles": z.poles.iter().map(|p| json!({
            "location": rational(p.location),
            "order": p.order,
            "leading": num(p.leading),
            "residue": num(p.residue),
        })).collect::<Vec<_>>(),
        "diagnostics": {
            "split": num(d.split),
            "t_min": num(d.t_min),
            "t_max": num(d.t_max),
            "fit_residual": num(d.fit_residual),
            "small_t_quadrature_error": num(d.small_t_quadrature_error),
            "below_t_min_bound": num(d.below_t_min_bound),
            "large_t_quadrature_error": num(d.large_t_quadrature_error),
            "large_t_tail_bound": num(d.large_t_tail_bound),
            "trace_tail_bound": num(d.trace_tail_bound),
            "truncation_zeta0": num(d.truncation_zeta0),
            "truncation_zeta_prime0": num(d.truncation_zeta_prime0),
        },
    })
}

pub const ZETA_CSV_HEADER: [&str; 8] = [
    "degree",
    "zeta0",
    "zeta0_error",
    "zeta_prime0",
    "zeta_prime0_error",
    "regular_at_zero",
    "residue_estimate",
    "residue_bound",
];

pub fn zeta_row(z: &ZetaData) -> Vec<String> {
    vec![
        z.degree.to_string(),
        fmt17(z.zeta0),
        fmt17(z.diagnostics.zeta0_error),
        fmt17(z.zeta_prime0),
        fmt17(z.diagnostics.zeta_prime0_error),
        z.regular_at_zero.to_string(),
        fmt17(z.residue_estimate),
        fmt17(z.residue_bound),
    ]
}

fn factor(f: &Factor) -> Value {
    match f {
        Factor::Point => json!({"kind": "point"}),
        Factor::Circle { radius } => json!({"kind": "circle", "radius": num(*radius)}),
        Factor::Torus { periods } => json!({"kind": "torus", "periods": nums(periods)}),
    }
}

pub fn descriptor(d: &ModelDescriptor) -> Value {
    match d {
        ModelDescriptor::TruncatedCone { fiber, base } => {
            json!({"kind": "truncated_cone", "fiber": factor(fiber), "base": factor(base), "m": d.dimension(), "b": d.edge_dimension()})
        }
        ModelDescriptor::Closed(f) => json!({"kind": "closed", "factor": factor(f), "m": d.dimension()}),
        ModelDescriptor::SingleOrder { nu } => json!({"kind": "single_order", "nu": num(*nu)}),
    }
}

pub fn config(c: &ModelConfig) -> Value {
    json!({
        "model": descriptor(&c.descriptor()),
        "convention": c.convention.as_str(),
        "cutoffs": {"nu_max": num(c.nu_max), "lambda_max": num(c.lambda_max)},
        "t_grid": {"t_min": num(c.t_grid.t_min), "t_max": num(c.t_grid.t_max), "points": c.t_grid.points},
        "zeta_grid": {"t_min": num(c.zeta_grid.t_min), "t_max": num(c.zeta_grid.t_max), "points": c.zeta_grid.points},
        "split": num(c.split),
        "even": c.even,
        "order": rational(c.order),
        "weighting": c.weighting.as_str(),
    })
}

pub fn torsion(r: &TorsionReport, defect: Option<f64>, defect_large_t: Option<f64>, kernel: &[u64]) -> Value {
    json!({
        "log_T": num(r.log_t),
        "log_T_error": num(r.log_t_error),
        "per_degree_regular": r.per_degree_regular,
        "torsion_residue": num(r.torsion_residue),
        "residue_cancellation": r.residue_cancellation,
        "torsion_zeta_regular": r.torsion_zeta_regular,
        "kernel_dimensions": kernel,
        "mckean_singer": match (defect, defect_large_t) {
            (Some(d), Some(l)) => json!({
                "defect": num(d),
                "defect_large_t": num(l),
                "large_t_range": [num(0.05), num(1.0)],
            }),
            _ => json!({"applicable": false}),
        },
        "per_degree": r.per_degree.iter().map(zeta).collect::<Vec<_>>(),
        "model": descriptor(&r.model),
    })
}
