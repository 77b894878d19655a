//! Exact index-set calculus for polyhomogeneous expansions.
//!
//! An index set is a set of pairs `(γ, p)` with `γ` an exponent and `p` a
//! log power, read as the terms `ρ^γ (log ρ)^k`, `k ≤ p`, allowed in an
//! expansion. Sets are stored as finite lists of [`Generator`]s: a base term
//! together with an optional lattice step, so `(γ₀, p₀)` with step `1` stands
//! for `{(γ₀ + n, p) : n ∈ ℕ₀, p ≤ p₀}`. Membership is decided arithmetically;
//! sets are never enumerated except on request up to a finite order.
//!
//! All exponents are exact rationals. Coincidences of exponents (which create
//! log terms under the extended union) are detected by exact equality only.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational exponent.
pub type Rational = num_rational::Ratio<i64>;

/// Shorthand for `Rational::new(n, d)`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Integer as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// A single pair `(exponent, logpower)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTerm {
    pub exponent: Rational,
    pub logpower: u32,
}

impl IndexTerm {
    pub fn new(exponent: Rational, logpower: u32) -> Self {
        Self { exponent, logpower }
    }
}

impl fmt::Display for IndexTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.exponent, self.logpower)
    }
}

/// A term together with the arithmetic progression of exponents it generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub term: IndexTerm,
    /// Positive lattice step, or `None` for a lone exponent.
    pub step: Option<Rational>,
}

impl Generator {
    fn contains_exponent(&self, gamma: Rational) -> bool {
        let d = gamma - self.term.exponent;
        match self.step {
            None => d.is_zero(),
            Some(step) => {
                if d.is_negative() {
                    return false;
                }
                (d / step).is_integer()
            }
        }
    }

    fn contains(&self, gamma: Rational, p: u32) -> bool {
        p <= self.term.logpower && self.contains_exponent(gamma)
    }

    /// Exponents of this generator that are `≤ upto`, in increasing order.
    fn exponents_upto(&self, upto: Rational) -> impl Iterator<Item = Rational> + '_ {
        let base = self.term.exponent;
        let step = self.step;
        (0i64..)
            .map(move |n| match step {
                None if n == 0 => Some(base),
                None => None,
                Some(s) => Some(base + s * Rational::from_integer(n)),
            })
            .take_while(move |g| matches!(g, Some(g) if *g <= upto))
            .flatten()
    }
}

/// Index set given by generator-closure semantics.
///
/// The empty set is valid and denotes infinite-order vanishing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IndexSet {
    generators: Vec<Generator>,
}

impl IndexSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Finite set: exactly the listed exponents, no `ℕ₀`-closure.
    pub fn finite(terms: &[(Rational, u32)]) -> Self {
        let mut out = Self::empty();
        for &(e, p) in terms {
            out.push(Generator { term: IndexTerm::new(e, p), step: None });
        }
        out
    }

    /// The `ℕ₀`-closure of the listed terms: `(γ, p) ↦ (γ + n, p)`.
    pub fn closed(terms: &[(Rational, u32)]) -> Self {
        let mut out = Self::empty();
        for &(e, p) in terms {
            out.push(Generator { term: IndexTerm::new(e, p), step: Some(Rational::one()) });
        }
        out
    }

    /// `start + step·ℕ₀` with log power `logpower`.
    pub fn progression(start: Rational, step: Rational, logpower: u32) -> Self {
        assert!(step.is_positive(), "progression step must be positive");
        let mut out = Self::empty();
        out.push(Generator { term: IndexTerm::new(start, logpower), step: Some(step) });
        out
    }

    pub fn from_generators(generators: impl IntoIterator<Item = Generator>) -> Self {
        let mut out = Self::empty();
        for g in generators {
            if let Some(s) = g.step {
                assert!(s.is_positive(), "generator step must be positive");
            }
            out.push(g);
        }
        out
    }

    fn push(&mut self, g: Generator) {
        if !self.generators.contains(&g) {
            self.generators.push(g);
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when every generator is closed under `exponent + 1`.
    pub fn is_closed(&self) -> bool {
        self.generators.iter().all(|g| match g.step {
            Some(s) => (s.recip()).is_integer(),
            None => false,
        })
    }

    pub fn contains(&self, exponent: Rational, logpower: u32) -> bool {
        self.generators.iter().any(|g| g.contains(exponent, logpower))
    }

    /// Highest log power carried at `exponent`, if the exponent occurs.
    pub fn max_logpower_at(&self, exponent: Rational) -> Option<u32> {
        self.generators
            .iter()
            .filter(|g| g.contains_exponent(exponent))
            .map(|g| g.term.logpower)
            .max()
    }

    pub fn min_exponent(&self) -> Option<Rational> {
        self.generators.iter().map(|g| g.term.exponent).min()
    }

    /// All exponents `≤ upto` with their maximal log power.
    pub fn enumerate(&self, upto: Rational) -> BTreeMap<Rational, u32> {
        let mut out = BTreeMap::new();
        for g in &self.generators {
            for e in g.exponents_upto(upto) {
                let slot = out.entry(e).or_insert(g.term.logpower);
                if *slot < g.term.logpower {
                    *slot = g.term.logpower;
                }
            }
        }
        out
    }

    /// Semantic equality of the parts of both sets with exponent `≤ upto`.
    pub fn equivalent_upto(&self, other: &Self, upto: Rational) -> bool {
        self.enumerate(upto) == other.enumerate(upto)
    }

    /// Every exponent increased by `c`; log powers unchanged.
    pub fn shift(&self, c: Rational) -> Self {
        Self::from_generators(self.generators.iter().map(|g| Generator {
            term: IndexTerm::new(g.term.exponent + c, g.term.logpower),
            step: g.step,
        }))
    }

    /// Every exponent (and step) multiplied by a positive factor.
    pub fn scale(&self, factor: Rational) -> Self {
        assert!(factor.is_positive(), "scale factor must be positive");
        Self::from_generators(self.generators.iter().map(|g| Generator {
            term: IndexTerm::new(g.term.exponent * factor, g.term.logpower),
            step: g.step.map(|s| s * factor),
        }))
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for g in &other.generators {
            out.push(*g);
        }
        out
    }

    /// `E ∪ F ∪ {(z, p + q + 1) : (z, p) ∈ E, (z, q) ∈ F}`.
    pub fn extended_union(&self, other: &Self) -> Self {
        let mut out = self.union(other);
        for a in &self.generators {
            for b in &other.generators {
                if let Some(g) = coincidence(a, b) {
                    out.push(g);
                }
            }
        }
        out
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "∅");
        }
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            match g.step {
                None => write!(f, "{{{}}}", g.term)?,
                Some(s) => write!(f, "{{{} + {}ℕ₀}}", g.term, s)?,
            }
        }
        Ok(())
    }
}

fn denom_lcm(values: &[Rational]) -> i128 {
    values.iter().fold(1i128, |acc, v| acc.lcm(&(*v.denom() as i128)))
}

fn to_rational(num: i128, den: i128) -> Rational {
    let g = num.gcd(&den);
    let (n, d) = (num / g, den / g);
    Rational::new(
        i64::try_from(n).expect("index arithmetic overflow"),
        i64::try_from(d).expect("index arithmetic overflow"),
    )
}

/// Generator of the common exponents of `a` and `b`, carrying log power
/// `p_a + p_b + 1`; `None` when the two never coincide.
fn coincidence(a: &Generator, b: &Generator) -> Option<Generator> {
    let logpower = a.term.logpower + b.term.logpower + 1;
    let lone = |e: Rational| Generator { term: IndexTerm::new(e, logpower), step: None };
    match (a.step, b.step) {
        (None, _) => b.contains_exponent(a.term.exponent).then(|| lone(a.term.exponent)),
        (_, None) => a.contains_exponent(b.term.exponent).then(|| lone(b.term.exponent)),
        (Some(sa), Some(sb)) => {
            let (a0, b0) = (a.term.exponent, b.term.exponent);
            let den = denom_lcm(&[a0, b0, sa, sb]);
            let scale = |r: Rational| (*r.numer() as i128) * (den / *r.denom() as i128);
            let (x0, y0, ma, mb) = (scale(a0), scale(b0), scale(sa), scale(sb));
            // x ≡ x0 (mod ma), x ≡ y0 (mod mb)
            let ext = ma.extended_gcd(&mb);
            let g = ext.gcd;
            if (y0 - x0).rem_euclid(g) != 0 {
                return None;
            }
            let l = ma / g * mb;
            let mbg = mb / g;
            let k = ((y0 - x0) / g % mbg * (ext.x % mbg)).rem_euclid(mbg);
            let mut x = (x0 + ma * k).rem_euclid(l);
            let lo = x0.max(y0);
            // smallest member of the residue class that is >= lo
            x += (lo - x).div_euclid(l) * l;
            if x < lo {
                x += l;
            }
            Some(Generator {
                term: IndexTerm::new(to_rational(x, den), logpower),
                step: Some(to_rational(l, den)),
            })
        }
    }
}

/// Extended union of two index sets.
pub fn extended_union(e: &IndexSet, f: &IndexSet) -> IndexSet {
    e.extended_union(f)
}

/// `E + c`.
pub fn shift(e: &IndexSet, c: Rational) -> IndexSet {
    e.shift(c)
}

/// Index family of a composition in the heat calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposedIndex {
    pub p_lf: IndexSet,
    pub p_rf: IndexSet,
    pub ff_order: i64,
}

/// Index sets of `A ∘ B` for `A` of front-face order `ℓ` with sets
/// `(E_lf, E_rf)` and `B` of order `ℓ′` with `(E′_lf, E′_rf)`:
/// `P_lf = E′_lf ∪̄ (E_lf + ℓ′)`, `P_rf = E_rf ∪̄ (E′_rf + ℓ)`,
/// front-face order `ℓ + ℓ′`.
///
/// Requires `min E_lf + min E′_rf > −1`; an empty set imposes no constraint.
pub fn compose_index(
    l: i64,
    l_prime: i64,
    e_lf: &IndexSet,
    e_rf: &IndexSet,
    e_lf_prime: &IndexSet,
    e_rf_prime: &IndexSet,
) -> Result<ComposedIndex> {
    if let (Some(a), Some(b)) = (e_lf.min_exponent(), e_rf_prime.min_exponent()) {
        let sum = a + b;
        if sum <= qi(-1) {
            return Err(Error::IntegrabilityViolation { sum: format!("{sum}") });
        }
    }
    Ok(ComposedIndex {
        p_lf: e_lf_prime.extended_union(&e_lf.shift(qi(l_prime))),
        p_rf: e_rf.extended_union(&e_rf_prime.shift(qi(l))),
        ff_order: l + l_prime,
    })
}

/// Index set of the trace `t ↦ Tr H(t)` obtained by pushing forward a density
/// with index sets `G_td`, `G_ff` along `t = ρ_ff² ρ_td²`: both sets are halved
/// and joined by the extended union.
///
/// `corner` is the index set at the face integrated out; every exponent there
/// must be strictly positive or the fibre integrals diverge.
pub fn pushforward_trace_index(
    g_td: &IndexSet,
    g_ff: &IndexSet,
    corner: &IndexSet,
) -> Result<IndexSet> {
    if let Some(min) = corner.min_exponent() {
        if min <= Rational::zero() {
            return Err(Error::IntegrabilityViolation { sum: format!("corner exponent {min}") });
        }
    }
    let half = q(1, 2);
    Ok(g_td.scale(half).extended_union(&g_ff.scale(half)))
}

/// Which face a template term is attributed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Face {
    /// Temporal diagonal (interior local heat invariants).
    Td,
    /// Front face (edge contributions, including td/ff coincidences).
    Ff,
    /// Artificial smooth boundary `x = 1` of the truncated models.
    Boundary,
}

impl Face {
    pub fn as_str(self) -> &'static str {
        match self {
            Face::Td => "td",
            Face::Ff => "ff",
            Face::Boundary => "bdry",
        }
    }
}

/// One slot `t^α` or `t^α log t` of a heat-trace expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TemplateTerm {
    pub exponent: Rational,
    pub log: bool,
    pub source: Face,
}

/// Predicted small-time shape of a heat trace, truncated at an order cutoff.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTemplate {
    pub terms: Vec<TemplateTerm>,
    pub m: i64,
    pub b: i64,
    pub even: bool,
    pub boundary: bool,
    pub cutoff: Rational,
}

impl ExpansionTemplate {
    /// Template made of the given terms; sorts and validates them.
    pub fn from_terms(
        mut terms: Vec<TemplateTerm>,
        m: i64,
        b: i64,
        even: bool,
        boundary: bool,
        cutoff: Rational,
    ) -> Result<Self> {
        terms.sort_by_key(|x| (x.exponent, x.log));
        for w in terms.windows(2) {
            if (w[0].exponent, w[0].log) == (w[1].exponent, w[1].log) {
                return Err(Error::Domain("duplicate template term"));
            }
        }
        for t in terms.iter().filter(|t| t.log) {
            if !terms.iter().any(|u| !u.log && u.exponent == t.exponent) {
                return Err(Error::Domain("log term without matching power term"));
            }
        }
        Ok(Self { terms, m, b, even, boundary, cutoff })
    }

    pub fn log_exponents(&self) -> Vec<Rational> {
        self.terms.iter().filter(|t| t.log).map(|t| t.exponent).collect()
    }

    pub fn exponents(&self) -> Vec<Rational> {
        self.terms.iter().filter(|t| !t.log).map(|t| t.exponent).collect()
    }

    pub fn has_log_at(&self, exponent: Rational) -> bool {
        self.terms.iter().any(|t| t.log && t.exponent == exponent)
    }

    pub fn min_exponent(&self) -> Option<Rational> {
        self.terms.iter().map(|t| t.exponent).min()
    }

    /// Same template with every term above `cutoff` dropped.
    pub fn truncated(&self, cutoff: Rational) -> Self {
        let mut out = self.clone();
        out.terms.retain(|t| t.exponent <= cutoff);
        out.cutoff = cutoff;
        out
    }
}

/// Default order cutoff for templates.
pub fn default_cutoff() -> Rational {
    qi(3)
}

fn check_dimensions(m: i64, b: i64, boundary: bool) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidDimensions { m, b, reason: "m must be positive" });
    }
    if b < 0 {
        return Err(Error::InvalidDimensions { m, b, reason: "b must be nonnegative" });
    }
    // b = m - 1 is the point-fibre model (a half-line times R^b), only
    // meaningful with the artificial boundary.
    if b > m - 2 && !(boundary && b == m - 1) {
        return Err(Error::InvalidDimensions { m, b, reason: "b must satisfy b ≤ m−2" });
    }
    Ok(())
}

/// Heat-trace template of a compact simple edge space of dimension `m` with
/// edge of dimension `b`.
///
/// Interior terms `t^{ℓ − m/2}` come from `G_td = −m + 2ℕ₀`; edge terms from
/// `G_ff = −b + ℕ₀` (or `−b + 2ℕ₀` for even metrics), both after the
/// `b`-density factor. With `boundary`, the smooth Dirichlet series
/// `t^{(ℓ + 1 − m)/2}` of the artificial outer boundary is merged in without
/// creating logs.
pub fn heat_trace_structure(
    m: i64,
    b: i64,
    even: bool,
    boundary: bool,
    cutoff: Rational,
) -> Result<ExpansionTemplate> {
    check_dimensions(m, b, boundary)?;
    let g_td = IndexSet::progression(qi(-m), qi(2), 0);
    let g_ff = IndexSet::progression(qi(-b), if even { qi(2) } else { qi(1) }, 0);
    let corner = IndexSet::closed(&[(qi(1), 0)]);
    let trace = pushforward_trace_index(&g_td, &g_ff, &corner)?;

    let td_half = g_td.scale(q(1, 2));
    let mut terms = Vec::new();
    let mut seen = BTreeMap::new();
    for (e, p) in trace.enumerate(cutoff) {
        let source = if td_half.max_logpower_at(e).is_some() { Face::Td } else { Face::Ff };
        terms.push(TemplateTerm { exponent: e, log: false, source });
        if p > 0 {
            terms.push(TemplateTerm { exponent: e, log: true, source: Face::Ff });
        }
        seen.insert(e, ());
    }
    if boundary {
        let bdry = IndexSet::progression(q(1 - m, 2), q(1, 2), 0);
        for e in bdry.enumerate(cutoff).into_keys() {
            if !seen.contains_key(&e) {
                terms.push(TemplateTerm { exponent: e, log: false, source: Face::Boundary });
            }
        }
    }
    ExpansionTemplate::from_terms(terms, m, b, even, boundary, cutoff)
}

/// A pole of `Γ(s)ζ(s)` or `ζ(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pole {
    pub location: Rational,
    pub order: u32,
}

/// How `ζ(0)` is read off the expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zeta0Rule {
    /// A pure `t⁰` term is present in the template.
    pub t0_term: bool,
    /// The template has no `t⁰` slot, so the predicted `t⁰` coefficient is 0.
    pub predicts_c0_zero: bool,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaPoleStructure {
    /// Poles of `ζ(s)` after the zeros of `1/Γ(s)` at `0, −1, −2, …` cancel one order.
    pub poles: Vec<Pole>,
    /// Poles of `Γ(s)ζ(s)` (excluding the kernel term `−dim ker / s`).
    pub gamma_zeta_poles: Vec<Pole>,
    pub regular_at_zero: bool,
    pub zeta0_rule: Zeta0Rule,
}

/// Pole structure of the zeta function implied by a heat-trace template:
/// `t^α` gives a simple pole of `Γ(s)ζ(s)` at `s = −α`, `t^α log t` a double one.
pub fn zeta_pole_structure(tpl: &ExpansionTemplate) -> ZetaPoleStructure {
    let mut orders: BTreeMap<Rational, u32> = BTreeMap::new();
    for t in &tpl.terms {
        let o = orders.entry(-t.exponent).or_insert(0);
        *o = (*o).max(if t.log { 2 } else { 1 });
    }
    let gamma_zeta_poles: Vec<Pole> =
        orders.iter().map(|(&location, &order)| Pole { location, order }).collect();
    let poles = gamma_zeta_poles
        .iter()
        .filter_map(|p| {
            let cancels = p.location.is_integer() && p.location <= Rational::zero();
            let order = if cancels { p.order - 1 } else { p.order };
            (order > 0).then_some(Pole { location: p.location, order })
        })
        .collect();
    let zero = Rational::zero();
    let regular_at_zero = !tpl.has_log_at(zero);
    let t0_term = tpl.terms.iter().any(|t| !t.log && t.exponent.is_zero());
    let description = if !regular_at_zero {
        String::from("pole at s=0: t^0 log t term present; finite part only")
    } else if t0_term {
        String::from("zeta(0) = c0 - dim ker, c0 the coefficient of t^0")
    } else {
        String::from("no t^0 term: c0 = 0, zeta(0) = -dim ker")
    };
    ZetaPoleStructure {
        poles,
        gamma_zeta_poles,
        regular_at_zero,
        zeta0_rule: Zeta0Rule { t0_term, predicts_c0_zero: !t0_term, description },
    }
}

/// Parity of a front-face coefficient under `w ↦ −w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    /// Identically zero (both even and odd).
    Zero,
    /// Neither even nor odd.
    Mixed,
}

/// True iff the coefficient at every supplied order `k` has parity `(−1)^k`.
pub fn even_parity_check(coefficients: &[(u32, Parity)]) -> bool {
    coefficients.iter().all(|&(k, parity)| match parity {
        Parity::Zero => true,
        Parity::Even => k % 2 == 0,
        Parity::Odd => k % 2 == 1,
        Parity::Mixed => false,
    })
}
