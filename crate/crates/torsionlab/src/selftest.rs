//! The oracle suite: every acceptance criterion as a self-contained check,
//! plus the comparison of the two conventions for `A`.

use std::f64::consts::PI;
use std::time::Instant;

use torsionlab_core::bessel::{bessel_i, bessel_j_zeros};
use torsionlab_core::fiber::{
    a_block_eigenvalues, a_spectrum, circle_spectrum, required_fiber_cutoff, torus_spectrum, Convention, FiberSpectrum,
    NuSpectrum,
};
use torsionlab_core::fit::fit_expansion;
use torsionlab_core::kernel::cone_heat_kernel;
use torsionlab_core::math::log_grid;
use torsionlab_core::phg::{
    compose_index, heat_trace_structure, pushforward_trace_index, q, qi, zeta_pole_structure, Generator, IndexSet,
    IndexTerm, Rational,
};
use torsionlab_core::quad::integrate_with_breaks;
use torsionlab_core::trace::{certified_samples, mckean_singer_defect, truncated_cone_trace, ConeSpectrum};
use torsionlab_core::zeta::{zeta_near_zero, ZetaOptions};

use crate::oracle::{
    bessel_jn_zeros_bisection, brute_force_structure, dense_a_eigenvalues, explicit, explicit_extended_union,
    explicit_shift, max_logs, restrict, theorem_structure, FourierBasis,
};
use crate::pipeline::cone_spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A known discrepancy that is reported, not counted as a failure.
    ExpectedFail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ExpectedFail => "EXPECTED-FAIL",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    pub seconds: f64,
}

type Outcome = Result<(bool, String), String>;

fn timed(id: &str, name: &'static str, limit: Option<f64>, f: impl FnOnce() -> Outcome) -> Check {
    let start = Instant::now();
    let result = f();
    let seconds = start.elapsed().as_secs_f64();
    let (mut ok, mut detail) = match result {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(limit) = limit {
        if seconds >= limit {
            ok = false;
            detail = format!("{detail}; runtime {seconds:.2} s exceeds {limit} s");
        }
    }
    Check { id: id.into(), name, status: if ok { Status::Pass } else { Status::Fail }, detail, seconds }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// I_{1/2}(z) against √(2/(πz)) sinh z on 10³ points of [1e−3, 30].
pub fn bessel_closed_form() -> Check {
    timed("1", "Bessel closed form", Some(1.0), || {
        let mut worst = 0.0f64;
        for z in log_grid(1e-3, 30.0, 1000) {
            let exact = (2.0 / (PI * z)).sqrt() * z.sinh();
            let v = bessel_i(0.5, z, false).map_err(err)?;
            worst = worst.max(((v - exact) / exact).abs());
        }
        Ok((worst <= 1e-12, format!("max rel err {worst:.2e}")))
    })
}

/// The ν = 1/2 kernel against the method of images on a 10×10×10 grid.
pub fn method_of_images() -> Check {
    timed("2", "Model kernel vs method of images", Some(1.0), || {
        let ts = log_grid(1e-3, 1.0, 10);
        let xs: Vec<f64> = (0..10).map(|i| 0.1 + 1.9 * i as f64 / 9.0).collect();
        let mut worst = 0.0f64;
        for &t in &ts {
            for &x in &xs {
                for &y in &xs {
                    let images = ((-(x - y) * (x - y) / (4.0 * t)).exp() - (-(x + y) * (x + y) / (4.0 * t)).exp())
                        / (4.0 * PI * t).sqrt();
                    let k = cone_heat_kernel(0.5, t, x, y).map_err(err)?;
                    worst = worst.max(((k - images) / images).abs());
                }
            }
        }
        Ok((worst <= 1e-10, format!("max rel err {worst:.2e}")))
    })
}

/// J_{1/2} zeros against kπ, J_0 zeros against a bisection oracle.
pub fn spectral_exactness() -> Check {
    timed("3", "Bessel zeros", None, || {
        let half = bessel_j_zeros(0.5, (500.5 * PI).powi(2)).map_err(err)?;
        if half.len() != 500 {
            return Ok((false, format!("{} zeros of J_1/2 below 500.5 pi, expected 500", half.len())));
        }
        let w_half = half
            .iter()
            .enumerate()
            .map(|(k, z)| ((z - (k + 1) as f64 * PI) / ((k + 1) as f64 * PI)).abs())
            .fold(0.0, f64::max);
        let oracle = bessel_jn_zeros_bisection(0, 50);
        let lib = bessel_j_zeros(0.0, (oracle[49] + 0.5).powi(2)).map_err(err)?;
        if lib.len() < 50 {
            return Ok((false, format!("only {} zeros of J_0 found", lib.len())));
        }
        let w0 = lib.iter().zip(&oracle).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        Ok((w_half <= 1e-12 && w0 <= 1e-10, format!("J_1/2 max rel err {w_half:.2e}; J_0 max abs err {w0:.2e}")))
    })
}

fn half_order_spectrum() -> Result<ConeSpectrum, String> {
    ConeSpectrum::build(&NuSpectrum::single(0.5, 1, 0).map_err(err)?, 1e6, 1).map_err(err)
}

/// Fitted small-time coefficients of the ν = 1/2 trace.
pub fn half_order_fit() -> Check {
    timed("4", "Heat-trace fit (nu = 1/2)", Some(10.0), || {
        let spec = half_order_spectrum()?;
        let s = certified_samples(&spec, &log_grid(1e-4, 1e-1, 40)).map_err(err)?;
        let tpl = heat_trace_structure(1, 0, true, true, qi(1)).map_err(err)?;
        let fit = fit_expansion(&s, &tpl).map_err(err)?;
        let lead = (fit.coefficient(q(-1, 2), false) - 0.5 / PI.sqrt()).abs();
        let c0 = (fit.coefficient(qi(0), false) + 0.5).abs();
        Ok((lead <= 1e-6 && c0 <= 1e-5, format!("t^-1/2 err {lead:.2e}; t^0 err {c0:.2e}")))
    })
}

/// ζ(0) and ζ′(0) of the k²π² spectrum, and independence of the split point.
pub fn zeta_oracle() -> Check {
    timed("5", "Zeta oracle (determinant 2)", None, || {
        let spec = half_order_spectrum()?;
        let s = certified_samples(&spec, &log_grid(1e-4, 2e-2, 40)).map_err(err)?;
        let tpl = heat_trace_structure(1, 0, true, true, qi(1)).map_err(err)?;
        let fit = fit_expansion(&s, &tpl).map_err(err)?;
        let mut runs = Vec::new();
        for split in [1.0, 0.5, 2.0] {
            let options = ZetaOptions { split, ..ZetaOptions::default() };
            runs.push(zeta_near_zero(0, &s, &fit, &spec, 0, &options).map_err(err)?);
        }
        let z = &runs[0];
        let e0 = (z.zeta0 + 0.5).abs();
        let e1 = (z.zeta_prime0 + 2f64.ln()).abs();
        let mut split_ok = true;
        let mut spread = 0.0f64;
        for r in &runs[1..] {
            let d = (r.zeta_prime0 - z.zeta_prime0).abs();
            spread = spread.max(d);
            split_ok &= d <= r.diagnostics.zeta_prime0_error + z.diagnostics.zeta_prime0_error;
        }
        Ok((
            e0 <= 1e-6 && e1 <= 1e-5 && split_ok,
            format!(
                "zeta(0) err {e0:.2e}; zeta'(0) err {e1:.2e}; split spread {spread:.2e} (bound {:.2e})",
                z.diagnostics.zeta_prime0_error
            ),
        ))
    })
}

fn fiber_for(periods: &[f64], mu2_max: f64) -> Result<FiberSpectrum, String> {
    let cutoff = mu2_max * (1.0 + 1e-12);
    if periods.len() == 1 {
        circle_spectrum(periods[0] / (2.0 * PI), cutoff).map_err(err)
    } else {
        torus_spectrum(periods, cutoff).map_err(err)
    }
}

/// Worst deviations (closed form vs dense, dense vs doubled dense) over one
/// fibre, all cone degrees and both conventions.
pub fn dense_a_deviation(periods: &[f64], modes: usize) -> Result<(f64, f64), String> {
    let small = FourierBasis::with_modes(periods, modes);
    let large = FourierBasis::with_modes(periods, 2 * modes);
    let fiber = fiber_for(periods, small.mu2_max)?;
    let f = periods.len();
    let (mut closed_dev, mut doubling_dev) = (0.0f64, 0.0f64);
    for convention in [Convention::GeometricOracle, Convention::PaperLiteral] {
        for p in 0..=f + 1 {
            let mut closed: Vec<f64> = Vec::new();
            for b in a_block_eigenvalues(&fiber, p, convention).map_err(err)? {
                closed.extend(std::iter::repeat_n(b.nu2, b.mult as usize));
            }
            closed.sort_by(f64::total_cmp);
            let dense = dense_a_eigenvalues(&small, p, convention);
            if dense.len() != closed.len() {
                return Err(format!("p={p}: {} dense vs {} closed-form eigenvalues", dense.len(), closed.len()));
            }
            for (a, b) in dense.iter().zip(&closed) {
                closed_dev = closed_dev.max((a - b).abs() / b.abs().max(1.0));
            }
            // shells outside the small basis only produce ν² ≥ (μ − 1)² − 1
            let mu_next = small.mu2_next.sqrt();
            let floor = (mu_next - 1.0).powi(2) - 1.0 - 1e-6;
            let big = dense_a_eigenvalues(&large, p, convention);
            let lo_s: Vec<f64> = dense.iter().copied().filter(|&v| v < floor).collect();
            let lo_l: Vec<f64> = big.iter().copied().filter(|&v| v < floor).collect();
            if lo_s.len() != lo_l.len() {
                return Err(format!("p={p}: doubling changed the count below {floor}"));
            }
            for (a, b) in lo_s.iter().zip(&lo_l) {
                doubling_dev = doubling_dev.max((a - b).abs());
            }
        }
    }
    Ok((closed_dev, doubling_dev))
}

/// Closed-form block spectra of `A` against dense eigensolves (64 modes).
pub fn dense_a_oracle() -> Check {
    timed("6", "A-operator dense oracle", None, || {
        let fibres: [(&str, Vec<f64>); 3] =
            [("S1(1)", vec![2.0 * PI]), ("S1(2)", vec![4.0 * PI]), ("T2", vec![2.0 * PI, 2.0 * PI])];
        let mut ok = true;
        let mut parts = Vec::new();
        for (name, periods) in fibres {
            let (c, d) = dense_a_deviation(&periods, 64)?;
            ok &= c <= 1e-9 && d < 1e-10;
            parts.push(format!("{name}: {c:.1e}/{d:.1e}"));
        }
        Ok((ok, format!("closed-form/doubling deviation {}", parts.join(", "))))
    })
}

/// ν spectrum of the cone over the unit circle in degree 0 against `{|k|}`.
fn flat_plane_orders(convention: Convention, nu_max: f64) -> Result<(bool, Vec<f64>), String> {
    let fiber = circle_spectrum(1.0, required_fiber_cutoff(nu_max)).map_err(err)?;
    let s = a_spectrum(&fiber, 0, convention, nu_max).map_err(err)?;
    let mut expect = vec![(0.0, 1u64)];
    expect.extend((1..=nu_max.floor() as u64).map(|k| (k as f64, 2)));
    let got = s.distinct_orders();
    let lowest = got.iter().take(4).map(|o| o.0).collect();
    Ok((got == expect, lowest))
}

/// Unit-disk Weyl coefficients from the cone over S¹(1).
pub fn flat_disk() -> Check {
    timed("7", "Flat-plane calibration (unit disk)", Some(120.0), || {
        let lambda: f64 = 3.2e5;
        let nu_max = lambda.sqrt();
        let (orders_ok, _) = flat_plane_orders(Convention::GeometricOracle, nu_max)?;
        let fiber = circle_spectrum(1.0, required_fiber_cutoff(nu_max)).map_err(err)?;
        let nus = a_spectrum(&fiber, 0, Convention::GeometricOracle, nu_max).map_err(err)?;
        let spec = cone_spectrum(&[nus], lambda, 2).map_err(|e| e.message)?;
        let s = truncated_cone_trace(&spec, 0, &log_grid(1e-4, 1e-2, 40)).map_err(err)?;
        let tpl = heat_trace_structure(2, 0, true, true, q(3, 2)).map_err(err)?;
        let fit = fit_expansion(&s, &tpl).map_err(err)?;
        let a = (fit.coefficient(qi(-1), false) - 0.25).abs();
        let b = (fit.coefficient(q(-1, 2), false) + PI.sqrt() / 4.0).abs();
        Ok((
            orders_ok && a <= 1e-3 && b <= 5e-3,
            format!("nu = |k|: {orders_ok}; t^-1 err {a:.2e}; t^-1/2 err {b:.2e}"),
        ))
    })
}

fn exps_and_logs(set: &IndexSet, upto: Rational) -> (Vec<Rational>, Vec<Rational>) {
    let e = set.enumerate(upto);
    (e.keys().copied().collect(), e.iter().filter(|(_, &p)| p > 0).map(|(z, _)| *z).collect())
}

/// Pushforward and template against brute-force coincidence enumeration.
pub fn structure_theorems() -> Check {
    timed("8", "Structure theorems", None, || {
        let upto = qi(10);
        let mut cases = 0;
        let mut problems = Vec::new();
        for m in 2..=8i64 {
            for b in 0..=m - 2 {
                for even in [false, true] {
                    cases += 1;
                    let td = IndexSet::progression(qi(-m), qi(2), 0);
                    let ff = IndexSet::progression(qi(-b), qi(if even { 2 } else { 1 }), 0);
                    let corner = IndexSet::closed(&[(qi(1), 0)]);
                    let push = pushforward_trace_index(&td, &ff, &corner).map_err(err)?;
                    let (pe, pl) = exps_and_logs(&push, upto);
                    let (be, bl) = brute_force_structure(m, b, even, upto);
                    let (te, tl) = theorem_structure(m, b, even, upto);
                    let be: Vec<_> = be.into_iter().collect();
                    let bl: Vec<_> = bl.into_iter().collect();
                    if pe != be || pl != bl || te.into_iter().collect::<Vec<_>>() != be || tl.into_iter().collect::<Vec<_>>() != bl {
                        problems.push(format!("m={m} b={b} even={even}: sets differ"));
                    }
                    let tpl = heat_trace_structure(m, b, even, false, upto).map_err(err)?;
                    if tpl.exponents() != be || tpl.log_exponents() != bl {
                        problems.push(format!("m={m} b={b} even={even}: template differs"));
                    }
                    let z = zeta_pole_structure(&tpl);
                    if z.regular_at_zero != !bl.contains(&qi(0)) {
                        problems.push(format!("m={m} b={b} even={even}: regularity flag"));
                    }
                    if even && m % 2 == 1 && !z.regular_at_zero {
                        problems.push(format!("m={m} b={b}: even metric, odd m, not regular"));
                    }
                    if even && m % 2 == 1 && b % 2 == 1 && (!z.zeta0_rule.predicts_c0_zero || be.iter().any(|e| e.is_integer())) {
                        problems.push(format!("m={m} b={b}: t^0 coefficient not predicted zero"));
                    }
                }
            }
        }
        Ok((problems.is_empty(), if problems.is_empty() { format!("{cases} cases to order 10") } else { problems.join("; ") }))
    })
}

/// Nonzero spectra pair between even and odd degrees; McKean–Singer defect.
pub fn supersymmetry() -> Check {
    timed("9", "Supersymmetry / McKean-Singer", None, || {
        let build = |lambda: f64| -> Result<ConeSpectrum, String> {
            let nu_max = lambda.sqrt() + 1.0;
            let fiber = circle_spectrum(1.0, required_fiber_cutoff(nu_max)).map_err(err)?;
            let nus: Vec<NuSpectrum> = (0..=2)
                .map(|p| a_spectrum(&fiber, p, Convention::GeometricOracle, nu_max))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            cone_spectrum(&nus, lambda, 2).map_err(|e| e.message)
        };
        let spec = build(200.0)?;
        let labels = |parity: usize| {
            let mut v: Vec<(u64, usize, u64)> = Vec::new();
            for o in spec.orders.iter().filter(|o| o.p % 2 == parity) {
                for (k, j) in o.zeros.iter().enumerate().filter(|(_, j)| **j * **j <= 200.0) {
                    let _ = j;
                    v.push((o.nu.to_bits(), k + 1, o.mult));
                }
            }
            v.sort();
            let mut merged: Vec<(u64, usize, u64)> = Vec::new();
            for (nu, k, m) in v {
                match merged.last_mut() {
                    Some(l) if l.0 == nu && l.1 == k => l.2 += m,
                    _ => merged.push((nu, k, m)),
                }
            }
            merged
        };
        let (even, odd) = (labels(0), labels(1));
        let count: u64 = even.iter().map(|l| l.2).sum();
        let paired = even == odd && count > 0;
        let big = build(2000.0)?;
        let grid = log_grid(0.05, 1.0, 20);
        let per_degree: Vec<_> =
            (0..=2).map(|p| truncated_cone_trace(&big, p, &grid)).collect::<Result<_, _>>().map_err(err)?;
        let defect = mckean_singer_defect(&per_degree, &[0, 0, 0]).map_err(err)?;
        Ok((paired && defect < 1e-6, format!("{count} eigenvalues paired: {paired}; defect {defect:.2e}")))
    })
}

fn generator_options() -> Vec<Option<Generator>> {
    let mut out = vec![None];
    for e in [q(-1, 2), qi(0), q(1, 2), qi(1)] {
        for p in 0..=1 {
            out.push(Some(Generator { term: IndexTerm::new(e, p), step: Some(qi(1)) }));
        }
    }
    out
}

fn as_set(g: &Option<Generator>) -> IndexSet {
    IndexSet::from_generators(g.iter().copied())
}

/// compose_index against a pair-by-pair evaluation of the extended union.
pub fn composition_algebra() -> Check {
    timed("10", "Composition algebra", None, || {
        let upto = qi(4);
        let opts = generator_options();
        let mut cases = 0usize;
        let mut rejected = 0usize;
        let mut bad = Vec::new();
        for (l, lp) in [(0i64, 0i64), (1, 0), (0, 2), (2, 1)] {
            for a in &opts {
                for b in &opts {
                    for c in &opts {
                        for d in &opts {
                            cases += 1;
                            let (e_lf, e_rf, e_lf2, e_rf2) = (as_set(a), as_set(b), as_set(c), as_set(d));
                            let res = compose_index(l, lp, &e_lf, &e_rf, &e_lf2, &e_rf2);
                            let violates = match (a, d) {
                                (Some(x), Some(y)) => x.term.exponent + y.term.exponent <= qi(-1),
                                _ => false,
                            };
                            match (res, violates) {
                                (Err(_), true) => rejected += 1,
                                (Ok(out), false) => {
                                    let lf = explicit_extended_union(
                                        &explicit(&e_lf2, qi(10)),
                                        &explicit_shift(&explicit(&e_lf, qi(10)), qi(lp)),
                                    );
                                    let rf = explicit_extended_union(
                                        &explicit(&e_rf, qi(10)),
                                        &explicit_shift(&explicit(&e_rf2, qi(10)), qi(l)),
                                    );
                                    if max_logs(&restrict(&lf, upto)) != out.p_lf.enumerate(upto)
                                        || max_logs(&restrict(&rf, upto)) != out.p_rf.enumerate(upto)
                                        || out.ff_order != l + lp
                                    {
                                        bad.push(format!("l={l} l'={lp} {a:?} {b:?} {c:?} {d:?}"));
                                    }
                                }
                                (r, v) => bad.push(format!("integrability: expected violation {v}, got {:?}", r.is_err())),
                            }
                        }
                    }
                }
            }
        }
        let detail = if bad.is_empty() {
            format!("{cases} cases ({rejected} integrability rejections)")
        } else {
            format!("{} mismatches, first: {}", bad.len(), bad[0])
        };
        Ok((bad.is_empty() && cases >= 100, detail))
    })
}

/// Deterministic quasi-random tuples `(ν, t₁, t₂, x, x̃)`.
pub fn semigroup_tuples(n: usize) -> Vec<[f64; 5]> {
    let g = 1.324_717_957_244_746f64;
    let alpha: Vec<f64> = (1..=5).map(|i| 1.0 / g.powi(i)).collect();
    (1..=n)
        .map(|i| {
            let u: Vec<f64> = alpha.iter().map(|a| (0.5 + a * i as f64).fract()).collect();
            [5.0 * u[0], 0.01 + 0.99 * u[1], 0.01 + 0.99 * u[2], 0.1 + 2.9 * u[3], 0.1 + 2.9 * u[4]]
        })
        .collect()
}

/// ∫ K(t₁, x, r) K(t₂, r, x̃) dr = K(t₁ + t₂, x, x̃) by adaptive quadrature.
pub fn semigroup() -> Check {
    timed("11", "Semigroup property", None, || {
        let mut worst = 0.0f64;
        for [nu, t1, t2, x, y] in semigroup_tuples(20) {
            let hi = x.max(y) + 40.0 * t1.max(t2).sqrt();
            let mut f = |r: f64| {
                if r <= 0.0 {
                    return 0.0;
                }
                cone_heat_kernel(nu, t1, x, r).unwrap_or(f64::NAN) * cone_heat_kernel(nu, t2, r, y).unwrap_or(f64::NAN)
            };
            let mut pts = vec![0.0, x.min(y), x.max(y), hi];
            pts.dedup();
            let qd = integrate_with_breaks(&mut f, &pts, 1e-14, 1e-12).map_err(err)?;
            let direct = cone_heat_kernel(nu, t1 + t2, x, y).map_err(err)?;
            worst = worst.max(((qd.value - direct) / direct).abs());
        }
        Ok((worst <= 1e-8, format!("20 tuples, max rel err {worst:.2e}")))
    })
}

/// The flat-plane oracle `ν = |k|` under the selected convention; a miss
/// under the printed constants is the documented discrepancy.
pub fn convention_comparison(convention: Convention) -> Check {
    let mut c = timed("conv", "Convention comparison (flat plane)", None, || {
        let (ok, lowest) = flat_plane_orders(convention, 20.0)?;
        let shown: Vec<String> = lowest.iter().map(|v| format!("{v:.4}")).collect();
        Ok((ok, format!("{}: lowest orders [{}], expected [0, 1, 2, 3]", convention.as_str(), shown.join(", "))))
    });
    if convention == Convention::PaperLiteral && c.status == Status::Fail {
        c.status = Status::ExpectedFail;
        c.detail = format!("{} (nu shifted by the printed constants)", c.detail);
    }
    c
}

/// A criterion id and its check.
pub type Criterion = (&'static str, fn() -> Check);

/// The acceptance criteria in order.
pub fn criteria() -> Vec<Criterion> {
    vec![
        ("1", bessel_closed_form as fn() -> Check),
        ("2", method_of_images),
        ("3", spectral_exactness),
        ("4", half_order_fit),
        ("5", zeta_oracle),
        ("6", dense_a_oracle),
        ("7", flat_disk),
        ("8", structure_theorems),
        ("9", supersymmetry),
        ("10", composition_algebra),
        ("11", semigroup),
    ]
}

/// Criteria left out of `--quick`.
pub const SLOW: &[&str] = &["7"];

pub fn run(quick: bool, convention: Convention) -> Vec<Check> {
    let mut out: Vec<Check> =
        criteria().into_iter().filter(|(id, _)| !(quick && SLOW.contains(id))).map(|(_, f)| f()).collect();
    out.push(convention_comparison(convention));
    out
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}

pub fn table(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        s.push_str(&format!(
            "{:<4} {:<38} {:<13} {:>8.3}s  {}\n",
            c.id,
            c.name,
            c.status.as_str(),
            c.seconds,
            c.detail
        ));
    }
    s
}
