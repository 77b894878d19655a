//! Bessel functions for the cone heat kernel and the Dirichlet spectrum of the
//! truncated cone.
//!
//! `I_ν` uses three regimes: the ascending series (small argument relative to
//! order), the large-argument Hankel expansion (small orders) and the Debye
//! uniform large-order expansion. `J_ν` uses Steed's continued-fraction method
//! with Temme's series for small arguments; zeros are bracketed on a grid finer
//! than the minimal zero spacing and polished by safeguarded Newton steps.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{self, PI};

/// Order below which the Hankel expansion (rather than Debye) covers large `z`.
const DEBYE_MIN_ORDER: f64 = 15.0;

/// Argument above which an unscaled `I_ν` is refused.
const UNSCALED_MAX_Z: f64 = 50.0;

/// Mantissa/binary-exponent pair for products that leave the `f64` range.
#[derive(Debug, Clone, Copy)]
struct Wide {
    m: f64,
    e: i32,
}

impl Wide {
    fn new(x: f64) -> Self {
        let (m, e) = math::frexp(x);
        Self { m, e }
    }

    fn mul(self, x: f64) -> Self {
        let (m, e) = math::frexp(self.m * x);
        Self { m, e: self.e + e }
    }


    fn to_f64(self) -> f64 {
        if self.e > 1100 {
            f64::INFINITY
        } else if self.e < -1100 {
            0.0
        } else {
            math::ldexp(self.m, self.e)
        }
    }
}

/// Which expansion [`bessel_i`] uses at `(ν, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IRegime {
    Series,
    Hankel,
    Debye,
}

/// Regime boundaries: series for `z ≤ max(35, ν²)` when `ν < 15` and for
/// `z ≤ max(35, ν)` when `ν ≥ 15`.
pub fn i_regime(nu: f64, z: f64) -> IRegime {
    if nu < DEBYE_MIN_ORDER {
        if z <= series_limit(nu) {
            IRegime::Series
        } else {
            IRegime::Hankel
        }
    } else if z <= series_limit(nu) {
        IRegime::Series
    } else {
        IRegime::Debye
    }
}

/// Largest `z` handled by the ascending series at order `ν`.
pub fn series_limit(nu: f64) -> f64 {
    if nu < DEBYE_MIN_ORDER {
        (nu * nu).max(35.0)
    } else {
        nu.max(35.0)
    }
}

/// Modified Bessel function `I_ν(z)`, or `e^{−z} I_ν(z)` when `scaled`.
///
/// Requires `ν ≥ 0`, `z > 0`; unscaled values are only returned for `z ≤ 50`.
pub fn bessel_i(nu: f64, z: f64, scaled: bool) -> Result<f64> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::Domain("bessel_i: order must be finite and nonnegative"));
    }
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain("bessel_i: argument must be finite and positive"));
    }
    if !scaled && z > UNSCALED_MAX_Z {
        return Err(Error::ScalingRequired { z });
    }
    let v = match i_regime(nu, z) {
        IRegime::Series => return Ok(i_series(nu, z, scaled)),
        IRegime::Hankel => i_hankel_scaled(nu, z),
        IRegime::Debye => i_debye_scaled(nu, z),
    };
    Ok(if scaled { v } else { v * math::exp(z) })
}

/// `(z/2)^ν / Γ(ν + 1)` in wide form.
fn series_prefactor(nu: f64, half_z: f64) -> Wide {
    let n = math::floor(nu);
    let frac = nu - n;
    let mut w = Wide::new(math::pow(half_z, frac) / math::tgamma(frac + 1.0));
    for j in 1..=(n as u64) {
        w = w.mul(half_z / (frac + j as f64));
    }
    w
}

/// Ascending series `Σ (z²/4)^k / (k! Γ(ν + k + 1))`, all terms positive.
pub fn i_series(nu: f64, z: f64, scaled: bool) -> f64 {
    let half_z = 0.5 * z;
    let q = half_z * half_z;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut rescale = 0i32;
    let mut k = 0.0f64;
    loop {
        k += 1.0;
        let ratio = q / (k * (nu + k));
        term *= ratio;
        sum += term;
        if sum > 1e280 {
            sum = math::ldexp(sum, -900);
            term = math::ldexp(term, -900);
            rescale += 900;
        }
        if ratio < 1.0 && term <= 1e-17 * sum {
            break;
        }
    }
    let mut w = series_prefactor(nu, half_z).mul(sum);
    w.e += rescale;
    if scaled {
        // e^{-z} in pieces small enough not to underflow
        let pieces = (z / 600.0).ceil_exact();
        let f = math::exp(-z / pieces as f64);
        for _ in 0..pieces {
            w = w.mul(f);
        }
    }
    w.to_f64()
}

trait CeilExact {
    fn ceil_exact(self) -> u32;
}

impl CeilExact for f64 {
    fn ceil_exact(self) -> u32 {
        (math::ceil(self) as u32).max(1)
    }
}

/// Large-argument expansion of `e^{−z} I_ν(z)`; the exponentially small
/// `e^{−2z}` companion series is omitted (it is below `1e−30` for `z ≥ 35`).
pub fn i_hankel_scaled(nu: f64, z: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let kk = k as f64;
        let odd = 2.0 * kk - 1.0;
        term *= -(mu - odd * odd) / (8.0 * kk * z);
        let a = math::abs(term);
        if a > prev {
            break;
        }
        sum += term;
        if a <= 1e-17 * math::abs(sum) {
            break;
        }
        prev = a;
    }
    sum / math::sqrt(2.0 * PI * z)
}

/// Debye polynomials: `U_k(p) = p^k Σ_j c_{k,j} p^{2j}`.
const DEBYE_U: [&[f64]; 14] = [
    &[1.0],
    &[0.125, -0.20833333333333334],
    &[0.0703125, -0.4010416666666667, 0.3342013888888889],
    &[0.0732421875, -0.8912109375, 1.8464626736111112, -1.0258125964506173],
    &[0.112152099609375, -2.3640869140625, 8.78912353515625, -11.207002616222994, 4.669584423426247],
    &[0.22710800170898438, -7.368794359479632, 42.53499874538846, -91.81824154324002, 84.63621767460073, -28.212072558200244],
    &[0.5725014209747314, -26.491430486951554, 218.1905117442116, -699.5796273761325, 1059.9904525279999, -765.2524681411817, 212.57013003921713],
    &[1.7277275025844574, -108.09091978839466, 1200.9029132163525, -5305.646978613403, 11655.393336864534, -13586.550006434138, 8061.722181737309, -1919.457662318407],
    &[6.074042001273483, -493.915304773088, 7109.514302489364, -41192.65496889755, 122200.46498301746, -203400.17728041555, 192547.00123253153, -96980.59838863752, 20204.29133096615],
    &[24.380529699556064, -2499.8304818112097, 45218.76898136273, -331645.1724845636, 1268365.2733216248, -2813563.226586534, 3763271.297656404, -2998015.9185381066, 1311763.6146629772, -242919.18790055133],
    &[110.01714026924674, -13886.08975371704, 308186.4046126624, -2785618.1280864547, 13288767.166421818, -37567176.66076335, 66344512.27472903, -74105148.21153265, 50952602.49266464, -19706819.118432228, 3284469.853072038],
    &[551.3358961220206, -84005.43360302408, 2243768.1779224495, -24474062.72573873, 142062907.7975331, -495889784.2750303, 1106842816.8230145, -1621080552.1083372, 1553596899.57058, -939462359.6815784, 325573074.18576574, -49329253.66450996],
    &[3038.090510922384, -549842.3275722887, 17395107.553978164, -225105661.88941526, 1559279864.8792574, -6563293792.619285, 17954213731.1556, -33026599749.800724, 41280185579.753975, -34632043388.158775, 18688207509.295826, -5866481492.051847, 814789096.1183121],
    &[18257.755474293175, -3871833.442572613, 143157876.71888897, -2167164983.223795, 17634730606.83497, -87867072178.02327, 287900649906.1506, -645364869245.3765, 1008158106865.3821, -1098375156081.2233, 819218669548.5773, -399096175224.4665, 114498237732.0258, -14679261247.695616],
];

/// Uniform large-order expansion of `e^{−z} I_ν(z)`.
pub fn i_debye_scaled(nu: f64, z: f64) -> f64 {
    let w = z / nu;
    let s = math::sqrt(1.0 + w * w);
    let p = 1.0 / s;
    let p2 = p * p;
    // ν η − z with η = s + ln(w / (1 + s)), arranged to avoid cancellation
    let exponent = nu / (s + w) + nu * math::ln(w / (1.0 + s));
    let mut sum = 0.0f64;
    let mut pk = 1.0f64;
    let mut nuk = 1.0f64;
    for coeffs in DEBYE_U.iter() {
        let mut poly = 0.0;
        for c in coeffs.iter().rev() {
            poly = poly * p2 + c;
        }
        let term = pk * poly / nuk;
        sum += term;
        if math::abs(term) <= 1e-17 * math::abs(sum) {
            break;
        }
        pk *= p;
        nuk *= nu;
    }
    math::exp(exponent) / math::sqrt(2.0 * PI * nu * s) * sum
}

/// `1/Γ(x)` Taylor coefficients about 0 (coefficient of `x^k` at index `k`).
const RGAMMA_TAYLOR: [f64; 27] = [
    0.0,
    1.0,
    0.577_215_664_901_532_9,
    -0.655_878_071_520_253_9,
    -0.042_002_635_034_095_24,
    0.166_538_611_382_291_5,
    -0.042_197_734_555_544_34,
    -0.009_621_971_527_876_974,
    0.007_218_943_246_663_1,
    -0.001_165_167_591_859_065,
    -0.000_215_241_674_114_951,
    0.000_128_050_282_388_116_2,
    -0.000_020_134_854_780_788_24,
    -1.250_493_482_142_671e-6,
    1.133_027_231_981_696e-6,
    -2.056_338_416_977_607e-7,
    6.116_095_104_481_416e-9,
    5.002_007_644_469_223e-9,
    -1.181_274_570_487_02e-9,
    1.043_426_711_691_100_5e-10,
    7.782_263_439_905_071e-12,
    -3.696_805_618_642_206e-12,
    5.100_370_287_454_476e-13,
    -2.058_326_053_566_507e-14,
    -5.348_122_539_423_018e-15,
    1.226_778_628_238_260_8e-15,
    -1.181_259_301_697_458_7e-16,
];

/// `(γ₁, γ₂, 1/Γ(1+μ), 1/Γ(1−μ))` for Temme's series, `|μ| ≤ 1/2`, where
/// `γ₁ = (1/Γ(1−μ) − 1/Γ(1+μ)) / 2μ` and `γ₂ = (1/Γ(1−μ) + 1/Γ(1+μ)) / 2`.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let m2 = mu * mu;
    // 1/Γ(1+x) = Σ_k RGAMMA_TAYLOR[k+1] x^k; split into even and odd parts
    let mut even = 0.0;
    let mut odd = 0.0;
    let n = RGAMMA_TAYLOR.len();
    let mut k = n - 1;
    while k >= 1 {
        // coefficient of x^{k-1}
        if (k - 1).is_multiple_of(2) {
            even = even * m2 + RGAMMA_TAYLOR[k];
        } else {
            odd = odd * m2 + RGAMMA_TAYLOR[k];
        }
        k -= 1;
    }
    // even = Σ c_{2j+1} μ^{2j}, odd = Σ c_{2j+2} μ^{2j}
    let gam1 = -odd;
    let gam2 = even;
    (gam1, gam2, gam2 - mu * gam1, gam2 + mu * gam1)
}

/// `J_ν`, `J′_ν`, `Y_ν`, `Y′_ν` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselJY {
    pub j: f64,
    pub jp: f64,
    pub y: f64,
    pub yp: f64,
}

/// Bessel functions of the first and second kind by Steed's method
/// (continued fractions `f_ν = J′/J` and `p + iq`, normalised by the
/// Wronskian), with Temme's series for `x < 2`.
pub fn bessel_jy(nu: f64, x: f64) -> Result<BesselJY> {
    const MAXIT: usize = 1_000_000;
    const EPS: f64 = 1e-16;
    const FPMIN: f64 = f64::MIN_POSITIVE / EPS;
    const XMIN: f64 = 2.0;
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::Domain("bessel_jy: order must be finite and nonnegative"));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain("bessel_jy: argument must be finite and positive"));
    }
    let nl: usize = if x < XMIN {
        (nu + 0.5) as usize
    } else {
        let v = nu - x + 1.5;
        if v > 0.0 {
            v as usize
        } else {
            0
        }
    };
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1 for J'_ν / J_ν
    let mut isign = 1.0f64;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0f64;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if math::abs(d) < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if math::abs(c) < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if math::abs(del - 1.0) <= EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence("bessel_jy continued fraction"));
    }

    // downward recurrence from ν to μ = ν − nl
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, mut rymu, mut ry1);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if math::abs(pimu) < EPS { 1.0 } else { pimu / math::sin(pimu) };
        let d = -math::ln(x2);
        let e = xmu * d;
        let fact2 = if math::abs(e) < EPS { 1.0 } else { math::sinh(e) / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = 2.0 / PI * fact * (gam1 * math::cosh(e) + gam2 * fact2 * d);
        let e = math::exp(e);
        let mut p = e / (gampl * PI);
        let mut q = 1.0 / (e * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fact3 = if math::abs(pimu2) < EPS { 1.0 } else { math::sin(pimu2) / pimu2 };
        let r = PI * pimu2 * fact3 * fact3;
        let mut c = 1.0;
        let d = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        let mut i = 0.0f64;
        loop {
            i += 1.0;
            ff = (i * ff + p + q) / (i * i - xmu2);
            c *= d / i;
            p /= i - xmu;
            q /= i + xmu;
            let del = c * (ff + r * q);
            sum += del;
            let del1 = c * p - i * del;
            sum1 += del1;
            if math::abs(del) < (1.0 + math::abs(sum)) * EPS {
                break;
            }
            if i > MAXIT as f64 {
                return Err(Error::NoConvergence("bessel_jy Temme series"));
            }
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        let rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        let mut a = 0.25 - xmu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fact = a * xi / (p * p + q * q);
        let mut cr = br + q * fact;
        let mut ci = bi + p * fact;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        let mut converged = false;
        for i in 2..MAXIT {
            a += 2.0 * (i as f64 - 1.0);
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if math::abs(dr) + math::abs(di) < FPMIN {
                dr = FPMIN;
            }
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if math::abs(cr) + math::abs(ci) < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di = -di / den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if math::abs(dlr - 1.0) + math::abs(dli) <= EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence("bessel_jy continued fraction 2"));
        }
        let gam = (p - f) / q;
        let mag = math::sqrt(w / ((p - f) * gam + q));
        rjmu = if rjl < 0.0 { -mag } else { mag };
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }
    let fact = rjmu / rjl;
    let j = rjl1 * fact;
    let jp = rjp1 * fact;
    for i in 1..=nl {
        let rytemp = (xmu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    let y = rymu;
    let yp = nu * xi * rymu - ry1;
    if !j.is_finite() || !jp.is_finite() {
        return Err(Error::NoConvergence("bessel_jy: J out of range"));
    }
    Ok(BesselJY { j, jp, y, yp })
}

/// `J_ν(x)` for `ν ≥ 0`, `x ≥ 0`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    Ok(bessel_jy(nu, x)?.j)
}

/// McMahon's large-zero approximation of `j_{ν,k}`.
pub fn mcmahon_zero(nu: f64, k: usize) -> f64 {
    let mu = 4.0 * nu * nu;
    let beta = (k as f64 + 0.5 * nu - 0.25) * PI;
    let e = 8.0 * beta;
    let e2 = e * e;
    beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e2)
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * e * e2 * e2)
}

/// Grid spacing for sign-change bracketing; below π/2 and below the minimal
/// gap between consecutive zeros of any `J_ν`, `ν ≥ 0`.
const BRACKET_STEP: f64 = 1.4;

/// All positive zeros `j_{ν,k} ≤ √Λ` in increasing order.
///
/// A cutoff below the first zero yields an empty list.
pub fn bessel_j_zeros(nu: f64, lambda_cutoff: f64) -> Result<Vec<f64>> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::Domain("bessel_j_zeros: order must be finite and nonnegative"));
    }
    if !(lambda_cutoff >= 0.0) {
        return Err(Error::Domain("bessel_j_zeros: cutoff must be nonnegative"));
    }
    let zmax = math::sqrt(lambda_cutoff);
    let mut zeros = Vec::new();
    // j_{ν,1} > max(ν, 2.4)
    let mut a = nu.max(2.0);
    if a >= zmax {
        return Ok(zeros);
    }
    let mut fa = bessel_j(nu, a)?;
    while a < zmax {
        let b = (a + BRACKET_STEP).min(zmax);
        let fb = bessel_j(nu, b)?;
        if fb == 0.0 {
            zeros.push(b);
        } else if fa != 0.0 && (fa < 0.0) != (fb < 0.0) {
            let guess = mcmahon_zero(nu, zeros.len() + 1);
            zeros.push(polish_zero(nu, a, b, fa, guess)?);
        }
        a = b;
        fa = fb;
    }
    Ok(zeros)
}

/// Safeguarded Newton iteration inside the bracket `[lo, hi]`.
fn polish_zero(nu: f64, mut lo: f64, mut hi: f64, flo: f64, guess: f64) -> Result<f64> {
    let lo_negative = flo < 0.0;
    let mut x = if guess > lo && guess < hi { guess } else { 0.5 * (lo + hi) };
    for _ in 0..200 {
        let jy = bessel_jy(nu, x)?;
        if jy.j == 0.0 {
            return Ok(x);
        }
        if (jy.j < 0.0) == lo_negative {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - jy.j / jy.jp;
        let next = if newton > lo && newton < hi && jy.jp != 0.0 { newton } else { 0.5 * (lo + hi) };
        if math::abs(next - x) <= 4.0 * f64::EPSILON * x || hi - lo <= 4.0 * f64::EPSILON * x {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::NoConvergence("bessel zero polishing"))
}
