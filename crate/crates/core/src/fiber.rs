//! Hodge spectra of flat model fibres and the block diagonalisation of the
//! fibre operator
//!
//! ```text
//! A = [ Δ + c₁²        2(−1)^ℓ δ ]
//!     [ 2(−1)^ℓ d      Δ + c₂²   ]   on Λ^{ℓ−1}(F) ⊕ Λ^ℓ(F)
//! ```
//!
//! whose eigenvalues `ν²` give the Bessel orders of the radial problems on the
//! cone `C(F)` in form degree `ℓ = p`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{self, PI};

/// Hodge type of a fibre eigenform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormType {
    Harmonic,
    Exact,
    Coexact,
}

impl FormType {
    pub fn as_str(self) -> &'static str {
        match self {
            FormType::Harmonic => "harmonic",
            FormType::Exact => "exact",
            FormType::Coexact => "coexact",
        }
    }
}

/// One eigenspace of the fibre Hodge Laplacian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiberEntry {
    pub degree: usize,
    pub mu2: f64,
    pub mult: u64,
    pub kind: FormType,
}

/// Hodge spectrum of a closed flat fibre, complete for `μ² ≤ mu2_cutoff`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberSpectrum {
    pub dim_f: usize,
    pub entries: Vec<FiberEntry>,
    pub mu2_cutoff: f64,
}

impl FiberSpectrum {
    /// Entries of one degree and type.
    pub fn select(&self, degree: usize, kind: FormType) -> impl Iterator<Item = &FiberEntry> + '_ {
        self.entries.iter().filter(move |e| e.degree == degree && e.kind == kind)
    }

    /// Total multiplicity of eigenvalues `≤ mu2` in one degree.
    pub fn count_below(&self, degree: usize, mu2: f64) -> u64 {
        self.entries.iter().filter(|e| e.degree == degree && e.mu2 <= mu2).map(|e| e.mult).sum()
    }
}

/// Hodge spectrum of the circle of radius `a`, up to `μ² ≤ cutoff`.
pub fn circle_spectrum(a: f64, cutoff: f64) -> Result<FiberSpectrum> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain("circle radius must be positive"));
    }
    if !(cutoff >= 0.0) {
        return Err(Error::Domain("fibre cutoff must be nonnegative"));
    }
    let mut entries = vec![
        FiberEntry { degree: 0, mu2: 0.0, mult: 1, kind: FormType::Harmonic },
        FiberEntry { degree: 1, mu2: 0.0, mult: 1, kind: FormType::Harmonic },
    ];
    let mut k = 1u64;
    loop {
        let mu2 = (k as f64 / a) * (k as f64 / a);
        if mu2 > cutoff {
            break;
        }
        entries.push(FiberEntry { degree: 0, mu2, mult: 2, kind: FormType::Coexact });
        entries.push(FiberEntry { degree: 1, mu2, mult: 2, kind: FormType::Exact });
        k += 1;
    }
    entries.sort_by(entry_order);
    Ok(FiberSpectrum { dim_f: 1, entries, mu2_cutoff: cutoff })
}

fn entry_order(a: &FiberEntry, b: &FiberEntry) -> core::cmp::Ordering {
    a.degree.cmp(&b.degree).then(a.mu2.total_cmp(&b.mu2)).then(a.kind.cmp(&b.kind))
}

/// Binomial coefficient.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

/// Subsets of `{0..f}` of size `k` as bitmasks, in increasing order.
fn subsets(f: usize, k: usize) -> Vec<u32> {
    (0u32..(1u32 << f)).filter(|s| s.count_ones() as usize == k).collect()
}

/// Rank of `ξ ∧ · : Λ^{ℓ−1}(ℝ^f) → Λ^ℓ(ℝ^f)`, by Gaussian elimination.
pub fn wedge_rank(xi: &[f64], ell: usize) -> usize {
    let f = xi.len();
    if ell == 0 || ell > f {
        return 0;
    }
    let rows = subsets(f, ell);
    let cols = subsets(f, ell - 1);
    let mut m: Vec<Vec<f64>> = vec![vec![0.0; cols.len()]; rows.len()];
    for (c, &set) in cols.iter().enumerate() {
        for (i, &x) in xi.iter().enumerate() {
            if set & (1 << i) != 0 {
                continue;
            }
            let below = (set & ((1u32 << i) - 1)).count_ones();
            let sign = if below.is_multiple_of(2) { 1.0 } else { -1.0 };
            let r = rows.iter().position(|&s| s == set | (1 << i)).unwrap();
            m[r][c] = sign * x;
        }
    }
    matrix_rank(m)
}

fn matrix_rank(mut m: Vec<Vec<f64>>) -> usize {
    let scale = m.iter().flatten().fold(0.0f64, |a, &x| a.max(math::abs(x)));
    if scale == 0.0 {
        return 0;
    }
    let tol = 1e-12 * scale;
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let pivot = (rank..m.len()).max_by(|&a, &b| math::abs(m[a][c]).total_cmp(&math::abs(m[b][c])));
        let Some(p) = pivot else { break };
        if math::abs(m[p][c]) <= tol {
            continue;
        }
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            let factor = m[r][c] / m[rank][c];
            if factor != 0.0 {
                for cc in c..ncols {
                    m[r][cc] -= factor * m[rank][cc];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Hodge spectrum of the flat torus `ℝ^f / ⊕ L_i ℤ`, up to `μ² ≤ cutoff`.
///
/// The exact part of each eigenspace is the rank of `d`, computed per
/// wavevector; the coexact part is its complement.
pub fn torus_spectrum(periods: &[f64], cutoff: f64) -> Result<FiberSpectrum> {
    if periods.is_empty() {
        return Err(Error::Domain("torus needs at least one period"));
    }
    if periods.iter().any(|&l| !(l > 0.0) || !l.is_finite()) {
        return Err(Error::Domain("torus periods must be positive"));
    }
    if !(cutoff >= 0.0) || !cutoff.is_finite() {
        return Err(Error::Domain("fibre cutoff must be finite and nonnegative"));
    }
    let f = periods.len();
    let freq: Vec<f64> = periods.iter().map(|&l| 2.0 * PI / l).collect();
    let bounds: Vec<i64> = freq.iter().map(|&w| math::floor(math::sqrt(cutoff) / w) as i64).collect();

    // (μ², degree, exact count, coexact count) per wavevector
    let mut raw: Vec<(f64, usize, u64, u64)> = Vec::new();
    let mut n: Vec<i64> = bounds.iter().map(|&b| -b).collect();
    'outer: loop {
        let xi: Vec<f64> = n.iter().zip(&freq).map(|(&k, &w)| k as f64 * w).collect();
        let mu2: f64 = xi.iter().map(|x| x * x).sum();
        if mu2 > 0.0 && mu2 <= cutoff {
            for ell in 0..=f {
                let exact = wedge_rank(&xi, ell) as u64;
                let coexact = binomial(f, ell) - exact;
                raw.push((mu2, ell, exact, coexact));
            }
        }
        for i in 0..f {
            if n[i] < bounds[i] {
                n[i] += 1;
                continue 'outer;
            }
            n[i] = -bounds[i];
        }
        break;
    }
    raw.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.total_cmp(&b.0)));

    let mut entries: Vec<FiberEntry> = (0..=f)
        .map(|ell| FiberEntry { degree: ell, mu2: 0.0, mult: binomial(f, ell), kind: FormType::Harmonic })
        .collect();
    let mut i = 0;
    while i < raw.len() {
        let (mu2, ell, _, _) = raw[i];
        let (mut exact, mut coexact) = (0u64, 0u64);
        let mut j = i;
        while j < raw.len() && raw[j].1 == ell && raw[j].0 - mu2 <= 1e-12 * mu2 {
            exact += raw[j].2;
            coexact += raw[j].3;
            j += 1;
        }
        if exact > 0 {
            entries.push(FiberEntry { degree: ell, mu2, mult: exact, kind: FormType::Exact });
        }
        if coexact > 0 {
            entries.push(FiberEntry { degree: ell, mu2, mult: coexact, kind: FormType::Coexact });
        }
        i = j;
    }
    entries.sort_by(entry_order);
    Ok(FiberSpectrum { dim_f: f, entries, mu2_cutoff: cutoff })
}

/// Choice of the constants `c₁, c₂` in the diagonal of `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// `c₁ = ℓ − (f+3)/2`, `c₂ = ℓ − (f+1)/2`, as printed.
    PaperLiteral,
    /// `c₁ = ℓ − (f+3)/2`, `c₂ = ℓ − (f−1)/2`: the constants for which the
    /// cone over the unit circle is the flat plane (`ν = |k|` on functions).
    #[default]
    GeometricOracle,
}

impl Convention {
    pub fn as_str(self) -> &'static str {
        match self {
            Convention::PaperLiteral => "paper-literal",
            Convention::GeometricOracle => "geometric-oracle",
        }
    }

    /// `(c₁, c₂)` for cone degree `ℓ` over a fibre of dimension `f`.
    pub fn constants(self, ell: usize, f: usize) -> (f64, f64) {
        let l = ell as f64;
        let f = f as f64;
        match self {
            Convention::PaperLiteral => (l - (f + 3.0) / 2.0, l - (f + 1.0) / 2.0),
            Convention::GeometricOracle => (l - (f + 3.0) / 2.0, l - (f - 1.0) / 2.0),
        }
    }
}

/// Which invariant subspace of `A` a mode comes from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModeOrigin {
    /// Fibre-harmonic form of the given fibre degree (`p−1` or `p`).
    Harmonic { fiber_degree: usize },
    /// Lower (`upper = false`) or upper eigenvalue of the 2×2 block spanned by
    /// a coexact `φ ∈ Λ^{p−1}` with eigenvalue `μ²` and `dφ/μ`.
    Coupled { mu2: f64, upper: bool },
    /// Exact form in `Λ^{p−1}`.
    Exact { mu2: f64 },
    /// Coexact form in `Λ^p`.
    Coexact { mu2: f64 },
    /// Prescribed order, not derived from a fibre.
    Prescribed,
}

/// One eigenvalue `ν²` of `A` (with `ν ≥ 0`) and its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuMode {
    pub nu: f64,
    pub mult: u64,
    pub p: usize,
    pub origin: ModeOrigin,
}

impl NuMode {
    /// Indicial roots `(1/2 − ν, 1/2 + ν)`.
    pub fn indicial_roots(&self) -> (f64, f64) {
        (0.5 - self.nu, 0.5 + self.nu)
    }

    /// `ν = 0`: the second solution is `x^{1/2} log x`.
    pub fn log_branch(&self) -> bool {
        self.nu == 0.0
    }
}

/// Spectrum of `A` in one cone degree, complete for `ν ≤ cutoff`.
#[derive(Debug, Clone, PartialEq)]
pub struct NuSpectrum {
    pub convention: Convention,
    pub cutoff: f64,
    pub modes: Vec<NuMode>,
}

impl NuSpectrum {
    /// A spectrum consisting of a single order.
    pub fn single(nu: f64, mult: u64, p: usize) -> Result<Self> {
        if !(nu >= 0.0) || !nu.is_finite() || mult == 0 {
            return Err(Error::Domain("single mode needs nu >= 0 and positive multiplicity"));
        }
        Ok(Self {
            convention: Convention::GeometricOracle,
            cutoff: f64::INFINITY,
            modes: vec![NuMode { nu, mult, p, origin: ModeOrigin::Prescribed }],
        })
    }

    /// Union of spectra (e.g. over several degrees), with the smaller cutoff.
    pub fn union(&self, other: &NuSpectrum) -> NuSpectrum {
        let mut modes = self.modes.clone();
        modes.extend_from_slice(&other.modes);
        sort_modes(&mut modes);
        NuSpectrum { convention: self.convention, cutoff: self.cutoff.min(other.cutoff), modes }
    }

    /// Total multiplicity of modes with `ν ≤ x`.
    pub fn count_below(&self, x: f64) -> u64 {
        self.modes.iter().filter(|m| m.nu <= x).map(|m| m.mult).sum()
    }

    /// `(ν, multiplicity)` with equal orders merged, ascending.
    pub fn distinct_orders(&self) -> Vec<(f64, u64)> {
        let mut out: Vec<(f64, u64)> = Vec::new();
        for m in &self.modes {
            match out.last_mut() {
                Some(last) if last.0 == m.nu => last.1 += m.mult,
                _ => out.push((m.nu, m.mult)),
            }
        }
        out
    }
}

fn sort_modes(modes: &mut [NuMode]) {
    modes.sort_by(|a, b| a.nu.total_cmp(&b.nu).then(a.p.cmp(&b.p)));
}

/// Raw eigenvalue `ν²` of one invariant block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockEigenvalue {
    pub nu2: f64,
    pub mult: u64,
    pub origin: ModeOrigin,
}

/// Eigenvalues of the symmetric block `[[a, b], [b, c]]`, `(lower, upper)`.
fn sym2_eigen(a: f64, b: f64, c: f64) -> (f64, f64) {
    let mean = 0.5 * (a + c);
    let r = math::sqrt(0.25 * (a - c) * (a - c) + b * b);
    let upper = mean + r;
    let det = a * c - b * b;
    let lower = if upper != 0.0 { det / upper } else { mean - r };
    (lower, upper)
}

/// Fibre eigenvalue cutoff needed for the `ν` spectrum to be complete below
/// `nu_cutoff`: every block eigenvalue satisfies `ν ≥ μ − 2`.
pub fn required_fiber_cutoff(nu_cutoff: f64) -> f64 {
    (nu_cutoff + 2.0) * (nu_cutoff + 2.0)
}

/// All block eigenvalues `ν²` of `A` in cone degree `p` built from the given
/// fibre spectrum, without sign checks or cutoff.
pub fn a_block_eigenvalues(fiber: &FiberSpectrum, p: usize, convention: Convention) -> Result<Vec<BlockEigenvalue>> {
    let f = fiber.dim_f;
    if p > f + 1 {
        return Err(Error::InvalidDegree { p, max: f + 1 });
    }
    let (c1, c2) = convention.constants(p, f);
    let mut out = Vec::new();
    let push = |out: &mut Vec<BlockEigenvalue>, nu2, mult, origin| out.push(BlockEigenvalue { nu2, mult, origin });
    if p >= 1 {
        let lo = p - 1;
        for e in fiber.select(lo, FormType::Harmonic) {
            push(&mut out, c1 * c1, e.mult, ModeOrigin::Harmonic { fiber_degree: lo });
        }
        for e in fiber.select(lo, FormType::Exact) {
            push(&mut out, e.mu2 + c1 * c1, e.mult, ModeOrigin::Exact { mu2: e.mu2 });
        }
        for e in fiber.select(lo, FormType::Coexact) {
            let mu = math::sqrt(e.mu2);
            let sign = if p.is_multiple_of(2) { 1.0 } else { -1.0 };
            let (lower, upper) = match convention {
                Convention::GeometricOracle => {
                    // eigenvalues (√(μ² + c²) ± 1)², c = (c₁ + c₂)/2
                    let c = 0.5 * (c1 + c2);
                    let s = math::sqrt(e.mu2 + c * c);
                    ((s - 1.0) * (s - 1.0), (s + 1.0) * (s + 1.0))
                }
                Convention::PaperLiteral => sym2_eigen(e.mu2 + c1 * c1, 2.0 * sign * mu, e.mu2 + c2 * c2),
            };
            push(&mut out, lower, e.mult, ModeOrigin::Coupled { mu2: e.mu2, upper: false });
            push(&mut out, upper, e.mult, ModeOrigin::Coupled { mu2: e.mu2, upper: true });
        }
    }
    if p <= f {
        for e in fiber.select(p, FormType::Harmonic) {
            push(&mut out, c2 * c2, e.mult, ModeOrigin::Harmonic { fiber_degree: p });
        }
        for e in fiber.select(p, FormType::Coexact) {
            push(&mut out, e.mu2 + c2 * c2, e.mult, ModeOrigin::Coexact { mu2: e.mu2 });
        }
    }
    Ok(out)
}

/// `ν` for a block eigenvalue; the lower coupled branch under the geometric
/// constants is evaluated as `|√(μ² + c²) − 1|` to avoid cancellation.
fn block_nu(b: &BlockEigenvalue, p: usize, f: usize, convention: Convention) -> f64 {
    match (convention, b.origin) {
        (Convention::GeometricOracle, ModeOrigin::Coupled { mu2, upper }) => {
            let (c1, c2) = convention.constants(p, f);
            let c = 0.5 * (c1 + c2);
            let s = math::sqrt(mu2 + c * c);
            if upper {
                s + 1.0
            } else {
                math::abs(s - 1.0)
            }
        }
        _ => math::sqrt(b.nu2),
    }
}

/// The `ν` spectrum of `A` in cone degree `p`, complete for `ν ≤ nu_cutoff`.
pub fn a_spectrum(fiber: &FiberSpectrum, p: usize, convention: Convention, nu_cutoff: f64) -> Result<NuSpectrum> {
    if !(nu_cutoff >= 0.0) || !nu_cutoff.is_finite() {
        return Err(Error::Domain("nu cutoff must be finite and nonnegative"));
    }
    let need = required_fiber_cutoff(nu_cutoff);
    if fiber.mu2_cutoff < need {
        return Err(Error::InsufficientFiberCutoff { have: fiber.mu2_cutoff, need });
    }
    let f = fiber.dim_f;
    let mut modes = Vec::new();
    for b in a_block_eigenvalues(fiber, p, convention)? {
        if b.nu2 < 0.0 {
            return Err(Error::NegativeBlockEigenvalue { p, nu2: b.nu2 });
        }
        let nu = block_nu(&b, p, f, convention);
        if nu <= nu_cutoff {
            modes.push(NuMode { nu, mult: b.mult, p, origin: b.origin });
        }
    }
    sort_modes(&mut modes);
    Ok(NuSpectrum { convention, cutoff: nu_cutoff, modes })
}

/// Whether a self-adjoint `P` with `(P + 1/2)² = A₊` and `(P − 1/2)² = A₋`
/// is consistent with the two spectra below their common cutoff: each `ν₊`
/// must pair with a `ν₋ ∈ {ν₊ + 1, |ν₊ − 1|}` (within `tol`).
///
/// Modes within 1 of the cutoff may stay unpaired, since their partners can
/// lie above it.
pub fn gauss_bonnet_consistency(plus: &NuSpectrum, minus: &NuSpectrum, tol: f64) -> Result<bool> {
    let cutoff = plus.cutoff.min(minus.cutoff);
    let expand = |s: &NuSpectrum| -> Vec<f64> {
        s.modes
            .iter()
            .filter(|m| m.nu <= cutoff)
            .flat_map(|m| core::iter::repeat_n(m.nu, m.mult as usize))
            .collect()
    };
    let left = expand(plus);
    let right = expand(minus);
    let count = left.len().min(right.len());
    if count < 10 {
        return Err(Error::TooFewModes { count });
    }
    let compatible = |a: f64, b: f64| math::abs(b - (a + 1.0)) <= tol || math::abs(b - math::abs(a - 1.0)) <= tol;
    let adj: Vec<Vec<usize>> =
        left.iter().map(|&a| (0..right.len()).filter(|&j| compatible(a, right[j])).collect()).collect();
    let mut radj: Vec<Vec<usize>> = vec![Vec::new(); right.len()];
    for (i, row) in adj.iter().enumerate() {
        for &j in row {
            radj[j].push(i);
        }
    }
    let required = |x: f64| x <= cutoff - 1.0 - tol;
    // A matching covering the required vertices on each side separately
    // implies one covering both (Mendelsohn–Dulmage).
    Ok(saturates(&adj, right.len(), left.iter().map(|&x| required(x)))
        && saturates(&radj, left.len(), right.iter().map(|&x| required(x))))
}

/// Whether some matching covers every required left vertex (Kuhn's algorithm).
fn saturates(adj: &[Vec<usize>], n_right: usize, required: impl Iterator<Item = bool>) -> bool {
    let mut match_right: Vec<Option<usize>> = vec![None; n_right];
    for (u, req) in required.enumerate() {
        if !req {
            continue;
        }
        let mut seen = vec![false; n_right];
        if !augment(u, adj, &mut match_right, &mut seen) {
            return false;
        }
    }
    true
}

fn augment(u: usize, adj: &[Vec<usize>], match_right: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        let free = match match_right[v] {
            None => true,
            Some(w) => augment(w, adj, match_right, seen),
        };
        if free {
            match_right[v] = Some(u);
            return true;
        }
    }
    false
}
