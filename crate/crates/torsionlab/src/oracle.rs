//! Independent reference computations used by `selftest` and the acceptance
//! suite: dense eigensolves of `A`, a quadrature-based `J_n`, and brute-force
//! enumeration of index sets.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use torsionlab_core::fiber::Convention;
use torsionlab_core::phg::{qi, Generator, IndexSet, Rational};

/// A truncated Fourier basis of a flat torus `ℝ^f / ⊕ L_i ℤ`: all wavevectors
/// `ξ = 2π n / L` in complete shells `|ξ|² ≤ mu2_max`.
#[derive(Debug, Clone)]
pub struct FourierBasis {
    pub periods: Vec<f64>,
    pub modes: Vec<Vec<f64>>,
    /// Largest `|ξ|²` in the basis.
    pub mu2_max: f64,
    /// Smallest `|ξ|²` left out.
    pub mu2_next: f64,
}

impl FourierBasis {
    /// The smallest union of complete shells holding at least `min_modes`
    /// scalar modes.
    pub fn with_modes(periods: &[f64], min_modes: usize) -> Self {
        let f = periods.len();
        let freq: Vec<f64> = periods.iter().map(|l| 2.0 * PI / l).collect();
        // a box this large contains the first min_modes + one shell in any dimension
        let reach = (min_modes as f64).powf(1.0 / f as f64).ceil() as i64 + 2;
        let r2 = freq.iter().map(|w| (reach as f64 * w).powi(2)).fold(f64::INFINITY, f64::min);
        let mut all: Vec<(f64, Vec<f64>)> = Vec::new();
        let mut n = vec![-reach; f];
        'outer: loop {
            let xi: Vec<f64> = n.iter().zip(&freq).map(|(&k, w)| k as f64 * w).collect();
            let mu2: f64 = xi.iter().map(|x| x * x).sum();
            if mu2 < r2 {
                all.push((mu2, xi));
            }
            for i in 0..f {
                if n[i] < reach {
                    n[i] += 1;
                    continue 'outer;
                }
                n[i] = -reach;
            }
            break;
        }
        all.sort_by(|a, b| a.0.total_cmp(&b.0));
        let same = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.max(1.0);
        let mut end = min_modes.min(all.len());
        while end < all.len() && same(all[end].0, all[end - 1].0) {
            end += 1;
        }
        assert!(end < all.len(), "Fourier box too small");
        Self {
            periods: periods.to_vec(),
            mu2_max: all[end - 1].0,
            mu2_next: all[end].0,
            modes: all.into_iter().take(end).map(|(_, xi)| xi).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.periods.len()
    }
}

/// Subsets of `{0..f}` with `k` elements, as sorted index lists.
fn subsets(f: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << f)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..f).filter(|i| s & (1 << i) != 0).collect())
        .collect()
}

/// Matrix of `d : Λ^ℓ → Λ^{ℓ+1}` on the basis `e^{iξ·x} dx^I`.
fn exterior_derivative(basis: &FourierBasis, ell: usize) -> DMatrix<Complex<f64>> {
    let f = basis.dim();
    let src = subsets(f, ell);
    let dst = subsets(f, ell + 1);
    let n = basis.modes.len();
    let mut d = DMatrix::zeros(n * dst.len(), n * src.len());
    for (a, xi) in basis.modes.iter().enumerate() {
        for (ci, set) in src.iter().enumerate() {
            for j in (0..f).filter(|j| !set.contains(j)) {
                // dx_j ∧ dx^I = (−1)^{#{i ∈ I : i < j}} dx^{I ∪ {j}}
                let sign = if set.iter().filter(|&&i| i < j).count() % 2 == 0 { 1.0 } else { -1.0 };
                let mut target = set.clone();
                target.push(j);
                target.sort_unstable();
                let ri = dst.iter().position(|s| *s == target).expect("subset present");
                d[(a * dst.len() + ri, a * src.len() + ci)] = Complex::new(0.0, sign * xi[j]);
            }
        }
    }
    d
}

/// Dense matrix of `A` in cone degree `p` over the truncated basis.
pub fn dense_a_matrix(basis: &FourierBasis, p: usize, convention: Convention) -> DMatrix<Complex<f64>> {
    let f = basis.dim();
    assert!(p <= f + 1, "cone degree out of range");
    let n = basis.modes.len();
    let size = |ell: usize| if ell <= f { n * subsets(f, ell).len() } else { 0 };
    let laplacian = |ell: usize| -> DMatrix<Complex<f64>> {
        let mut l = DMatrix::zeros(size(ell), size(ell));
        if ell < f {
            let d = exterior_derivative(basis, ell);
            l += d.adjoint() * &d;
        }
        if ell >= 1 {
            let d = exterior_derivative(basis, ell - 1);
            l += &d * d.adjoint();
        }
        l
    };
    let (c1, c2) = convention.constants(p, f);
    let lo = if p >= 1 { size(p - 1) } else { 0 };
    let hi = size(p);
    let mut a = DMatrix::zeros(lo + hi, lo + hi);
    let shift = |m: &mut DMatrix<Complex<f64>>, c: f64| {
        for i in 0..m.nrows() {
            m[(i, i)] += Complex::new(c * c, 0.0);
        }
    };
    if p >= 1 {
        let mut top = laplacian(p - 1);
        shift(&mut top, c1);
        a.view_mut((0, 0), (lo, lo)).copy_from(&top);
    }
    if p <= f {
        let mut bottom = laplacian(p);
        shift(&mut bottom, c2);
        a.view_mut((lo, lo), (hi, hi)).copy_from(&bottom);
    }
    if p >= 1 && p <= f {
        let sign = if p.is_multiple_of(2) { 2.0 } else { -2.0 };
        let d = exterior_derivative(basis, p - 1) * Complex::new(sign, 0.0);
        a.view_mut((lo, 0), (hi, lo)).copy_from(&d);
        a.view_mut((0, lo), (lo, hi)).copy_from(&d.adjoint());
    }
    a
}

/// Ascending eigenvalues of a Hermitian matrix.
pub fn hermitian_eigenvalues(m: DMatrix<Complex<f64>>) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Dense eigenvalues `ν²` of `A` in cone degree `p`.
pub fn dense_a_eigenvalues(basis: &FourierBasis, p: usize, convention: Convention) -> Vec<f64> {
    hermitian_eigenvalues(dense_a_matrix(basis, p, convention))
}

/// `J_n(z) = (1/π) ∫₀^π cos(nθ − z sin θ) dθ` by the trapezoid rule, which
/// converges geometrically for this periodic integrand.
pub fn bessel_jn_trapezoid(n: u32, z: f64) -> f64 {
    let m = (z.abs() + n as f64 + 40.0).ceil() as usize * 2;
    let h = PI / m as f64;
    let mut s = 0.0;
    for i in 0..=m {
        let th = i as f64 * h;
        let w = if i == 0 || i == m { 0.5 } else { 1.0 };
        s += w * (n as f64 * th - z * th.sin()).cos();
    }
    s * h / PI
}

/// First `count` positive zeros of `J_n` by a sign-change scan (step 0.1)
/// and bisection.
pub fn bessel_jn_zeros_bisection(n: u32, count: usize) -> Vec<f64> {
    let f = |z: f64| bessel_jn_trapezoid(n, z);
    let mut out = Vec::with_capacity(count);
    let mut a = 1e-3;
    let mut fa = f(a);
    while out.len() < count {
        let b = a + 0.1;
        let fb = f(b);
        if fa == 0.0 || fa.signum() != fb.signum() {
            let (mut lo, mut hi, mut flo) = (a, b, fa);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let fm = f(mid);
                if fm.signum() == flo.signum() && fm != 0.0 {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.push(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    out
}

/// An index set as the explicit set of pairs `(z, p)` with `z ≤ upto`,
/// closed downward in `p`.
pub type PairSet = BTreeSet<(Rational, u32)>;

/// Explicit pairs of a single generator up to `upto`.
pub fn explicit_generator(g: &Generator, upto: Rational) -> PairSet {
    let mut out = PairSet::new();
    let mut z = g.term.exponent;
    loop {
        if z > upto {
            break;
        }
        for p in 0..=g.term.logpower {
            out.insert((z, p));
        }
        match g.step {
            Some(s) => z += s,
            None => break,
        }
    }
    out
}

pub fn explicit(set: &IndexSet, upto: Rational) -> PairSet {
    set.generators().iter().flat_map(|g| explicit_generator(g, upto)).collect()
}

pub fn explicit_shift(set: &PairSet, c: Rational) -> PairSet {
    set.iter().map(|&(z, p)| (z + c, p)).collect()
}

/// `E ∪ F ∪ {(z, p + q + 1) : (z, p) ∈ E, (z, q) ∈ F}`, pair by pair.
pub fn explicit_extended_union(e: &PairSet, f: &PairSet) -> PairSet {
    let mut out: PairSet = e.union(f).copied().collect();
    for &(z, p) in e {
        for &(w, q) in f {
            if z == w {
                out.insert((z, p + q + 1));
            }
        }
    }
    out
}

pub fn restrict(set: &PairSet, upto: Rational) -> PairSet {
    set.iter().filter(|(z, _)| *z <= upto).copied().collect()
}

/// Maximal log power per exponent.
pub fn max_logs(set: &PairSet) -> BTreeMap<Rational, u32> {
    let mut out = BTreeMap::new();
    for &(z, p) in set {
        let e = out.entry(z).or_insert(p);
        *e = (*e).max(p);
    }
    out
}

/// Heat-trace exponents and log exponents up to `upto` by listing the halved
/// td and ff exponents and intersecting them:
/// td `(−m + 2j)/2`, ff `(−b + j)/2` (even: `(−b + 2j)/2`), `j ≥ 0`.
pub fn brute_force_structure(m: i64, b: i64, even: bool, upto: Rational) -> (BTreeSet<Rational>, BTreeSet<Rational>) {
    let half = |n: i64| Rational::new(n, 2);
    let mut td = BTreeSet::new();
    let mut ff = BTreeSet::new();
    for j in 0.. {
        let z = half(-m + 2 * j);
        if z > upto {
            break;
        }
        td.insert(z);
    }
    let step = if even { 2 } else { 1 };
    for j in 0.. {
        let z = half(-b + step * j);
        if z > upto {
            break;
        }
        ff.insert(z);
    }
    let exps = td.union(&ff).copied().collect();
    let logs = td.intersection(&ff).copied().collect();
    (exps, logs)
}

/// The exponent and log sets as the theorem lists them:
/// powers `ℓ − m/2` and `(ℓ − b)/2` (even: `ℓ − b/2`), logs at `(ℓ − b)/2`
/// for `ℓ + m − b` even (even: at `ℓ − b/2` when `m − b` is even, none otherwise).
pub fn theorem_structure(m: i64, b: i64, even: bool, upto: Rational) -> (BTreeSet<Rational>, BTreeSet<Rational>) {
    let mut exps = BTreeSet::new();
    let mut logs = BTreeSet::new();
    for l in 0..=(4 * (upto.to_integer() + m + b + 2)) {
        let interior = qi(l) - Rational::new(m, 2);
        if interior <= upto {
            exps.insert(interior);
        }
        let edge = if even { qi(l) - Rational::new(b, 2) } else { Rational::new(l - b, 2) };
        if edge <= upto {
            exps.insert(edge);
            let logged = if even { (m - b) % 2 == 0 } else { (l + m - b) % 2 == 0 };
            if logged {
                logs.insert(edge);
            }
        }
    }
    (exps, logs)
}
