//! Adaptive Gauss–Kronrod (7/15) quadrature.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{self, NeumaierSum};

const XK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Integral estimate with an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let dx = h * XK[i];
        let s = f(c - dx) + f(c + dx);
        k += WK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    (k * h, math::abs((k - g) * h))
}

/// Integrates `f` over `[a, b]` until the summed error estimate is below
/// `max(abs_tol, rel_tol · |value|)`, bisecting the worst interval.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> Result<Quadrature> {
    integrate_with_breaks(&mut f, &[a, b], abs_tol, rel_tol)
}

/// As [`integrate`], starting from the partition given by `points`
/// (ascending, at least two).
pub fn integrate_with_breaks<F: FnMut(f64) -> f64>(
    f: &mut F,
    points: &[f64],
    abs_tol: f64,
    rel_tol: f64,
) -> Result<Quadrature> {
    const MAX_INTERVALS: usize = 20_000;
    if points.len() < 2 || points.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Domain("quadrature limits must be strictly increasing"));
    }
    let mut intervals: Vec<(f64, f64, f64, f64)> = points
        .windows(2)
        .map(|w| {
            let (v, e) = gk15(f, w[0], w[1]);
            (w[0], w[1], v, e)
        })
        .collect();
    loop {
        let value = intervals.iter().map(|i| i.2).fold(NeumaierSum::new(), |mut s, v| {
            s.add(v);
            s
        });
        let value = value.value();
        let error: f64 = intervals.iter().map(|i| i.3).sum();
        let evaluations = intervals.len() * 15;
        if !value.is_finite() {
            return Err(Error::NoConvergence("quadrature integrand not finite"));
        }
        if error <= abs_tol.max(rel_tol * math::abs(value)) {
            return Ok(Quadrature { value, error, evaluations });
        }
        if intervals.len() >= MAX_INTERVALS {
            return Err(Error::NoConvergence("adaptive quadrature interval limit"));
        }
        let worst = (0..intervals.len()).max_by(|&i, &j| intervals[i].3.total_cmp(&intervals[j].3)).unwrap();
        let (a, b, _, _) = intervals.swap_remove(worst);
        let m = 0.5 * (a + b);
        if !(m > a && m < b) {
            return Err(Error::NoConvergence("adaptive quadrature interval underflow"));
        }
        let (v1, e1) = gk15(f, a, m);
        let (v2, e2) = gk15(f, m, b);
        intervals.push((a, m, v1, e1));
        intervals.push((m, b, v2, e2));
    }
}

/// Nodes and weights of the composite 15-point Kronrod rule with `panels`
/// equal panels on `[a, b]`.
pub fn composite_kronrod(a: f64, b: f64, panels: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(15 * panels);
    let width = (b - a) / panels as f64;
    for p in 0..panels {
        let c = a + (p as f64 + 0.5) * width;
        let h = 0.5 * width;
        for i in 0..7 {
            out.push((c - h * XK[i], h * WK[i]));
            out.push((c + h * XK[i], h * WK[i]));
        }
        out.push((c, h * WK[7]));
    }
    out
}
