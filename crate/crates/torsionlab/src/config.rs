//! Model configuration: a TOML file and command-line flags, flags winning.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;
use torsionlab_core::fiber::Convention;
use torsionlab_core::fit::FitWeighting;
use torsionlab_core::phg::{q, Rational};
use torsionlab_core::zeta::{Factor, ModelDescriptor};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Cone,
    Product,
}

impl FromStr for ModelKind {
    type Err = CliError;
    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "cone" => Ok(ModelKind::Cone),
            "product" => Ok(ModelKind::Product),
            _ => Err(CliError::input(format!("unknown model '{s}' (expected cone or product)"))),
        }
    }
}

/// A closed flat factor as written in a config file or on the command line
/// (`point`, `circle:<radius>`, `torus:<L1>,<L2>,…`).
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FactorSpec {
    Point,
    Circle { radius: f64 },
    Torus { periods: Vec<f64> },
}

impl FactorSpec {
    pub fn to_factor(&self) -> Factor {
        match self {
            FactorSpec::Point => Factor::Point,
            FactorSpec::Circle { radius } => Factor::Circle { radius: *radius },
            FactorSpec::Torus { periods } => Factor::Torus { periods: periods.clone() },
        }
    }

    pub fn dim(&self) -> usize {
        self.to_factor().dim()
    }

    fn validate(&self, what: &str) -> CliResult<()> {
        let ok = match self {
            FactorSpec::Point => true,
            FactorSpec::Circle { radius } => *radius > 0.0 && radius.is_finite(),
            FactorSpec::Torus { periods } => !periods.is_empty() && periods.iter().all(|l| *l > 0.0 && l.is_finite()),
        };
        if ok {
            Ok(())
        } else {
            Err(CliError::input(format!("{what}: radius and periods must be positive and finite")))
        }
    }
}

impl FromStr for FactorSpec {
    type Err = CliError;
    fn from_str(s: &str) -> CliResult<Self> {
        let bad = || CliError::input(format!("cannot parse factor '{s}' (expected point, circle:R or torus:L1,L2,...)"));
        let (kind, args) = s.split_once(':').unwrap_or((s, ""));
        let values = || -> CliResult<Vec<f64>> {
            args.split(',').map(|v| v.trim().parse::<f64>().map_err(|_| bad())).collect()
        };
        match kind {
            "point" if args.is_empty() => Ok(FactorSpec::Point),
            "circle" => match values()?.as_slice() {
                [r] => Ok(FactorSpec::Circle { radius: *r }),
                _ => Err(bad()),
            },
            "torus" => Ok(FactorSpec::Torus { periods: values()? }),
            _ => Err(bad()),
        }
    }
}

pub fn parse_convention(s: &str) -> CliResult<Convention> {
    match s {
        "paper-literal" | "PaperLiteral" => Ok(Convention::PaperLiteral),
        "geometric-oracle" | "GeometricOracle" => Ok(Convention::GeometricOracle),
        _ => Err(CliError::input(format!("unknown convention '{s}' (expected paper-literal or geometric-oracle)"))),
    }
}

pub fn parse_weighting(s: &str) -> CliResult<FitWeighting> {
    match s {
        "small-time" => Ok(FitWeighting::SmallTimeEmphasis),
        "leading-term" => Ok(FitWeighting::LeadingTerm),
        "uniform" => Ok(FitWeighting::Uniform),
        _ => Err(CliError::input(format!("unknown weighting '{s}' (expected small-time, leading-term or uniform)"))),
    }
}

/// A positive rational such as `3/2` or `1`.
pub fn parse_order(s: &str) -> CliResult<Rational> {
    let bad = || CliError::input(format!("cannot parse order '{s}' (expected p/q)"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: i64 = n.trim().parse().map_err(|_| bad())?;
    let d: i64 = d.trim().parse().map_err(|_| bad())?;
    if d <= 0 {
        return Err(bad());
    }
    Ok(q(n, d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = CliError;
    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(CliError::input(format!("unknown format '{s}' (expected json or csv)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub t_min: f64,
    pub t_max: f64,
    pub points: usize,
}

impl TimeGrid {
    pub fn points(&self) -> Vec<f64> {
        torsionlab_core::math::log_grid(self.t_min, self.t_max, self.points)
    }

    fn validate(&self, what: &str) -> CliResult<()> {
        if !(self.t_min > 0.0 && self.t_min < self.t_max && self.t_max.is_finite()) {
            return Err(CliError::input(format!("{what}: need 0 < t_min < t_max")));
        }
        if self.points < 2 {
            return Err(CliError::input(format!("{what}: need at least 2 points")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputSpec {
    pub path: Option<PathBuf>,
    pub format: Format,
}

/// Fully resolved configuration of a pipeline run.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelConfig {
    pub model: ModelKind,
    pub fiber: FactorSpec,
    pub base: FactorSpec,
    pub convention: Convention,
    pub nu_max: f64,
    pub lambda_max: f64,
    /// Sampling grid of `trace` and `fit`.
    pub t_grid: TimeGrid,
    /// Fit grid of `zeta` and `torsion`.
    pub zeta_grid: TimeGrid,
    pub split: f64,
    pub even: bool,
    /// Replaces the fibre by a single radial order `ν` (one form degree).
    pub single_nu: Option<f64>,
    /// Template order cutoff.
    pub order: Rational,
    pub weighting: FitWeighting,
    pub output: OutputSpec,
}

impl Default for ModelConfig {
    fn default() -> Self {
        Self {
            model: ModelKind::Cone,
            fiber: FactorSpec::Circle { radius: 1.0 },
            base: FactorSpec::Point,
            convention: Convention::GeometricOracle,
            nu_max: 0.0,
            lambda_max: 3.2e5,
            t_grid: TimeGrid { t_min: 1e-4, t_max: 1e-1, points: 40 },
            zeta_grid: TimeGrid { t_min: 1e-4, t_max: 2e-2, points: 40 },
            split: 1.0,
            even: true,
            single_nu: None,
            order: q(3, 2),
            weighting: FitWeighting::SmallTimeEmphasis,
            output: OutputSpec { path: None, format: Format::Json },
        }
    }
}

impl ModelConfig {
    /// Cone dimension `f + 1` (1 for a single radial order).
    pub fn cone_dim(&self) -> usize {
        match self.single_nu {
            Some(_) => 1,
            None => self.fiber.dim() + 1,
        }
    }

    /// Edge dimension `b`.
    pub fn edge_dim(&self) -> usize {
        match (self.single_nu, self.model) {
            (Some(_), _) | (None, ModelKind::Cone) => 0,
            (None, ModelKind::Product) => self.base.dim(),
        }
    }

    /// Total dimension `m = b + f + 1`.
    pub fn dim(&self) -> usize {
        self.edge_dim() + self.cone_dim()
    }

    pub fn descriptor(&self) -> ModelDescriptor {
        match self.single_nu {
            Some(nu) => ModelDescriptor::SingleOrder { nu },
            None => ModelDescriptor::TruncatedCone {
                fiber: self.fiber.to_factor(),
                base: match self.model {
                    ModelKind::Cone => Factor::Point,
                    ModelKind::Product => self.base.to_factor(),
                },
            },
        }
    }

    pub fn validate(&self) -> CliResult<()> {
        if !(self.lambda_max > 0.0 && self.lambda_max.is_finite()) {
            return Err(CliError::input("cutoffs must be positive: lambda_max"));
        }
        if !(self.nu_max > 0.0 && self.nu_max.is_finite()) {
            return Err(CliError::input("cutoffs must be positive: nu_max"));
        }
        if self.nu_max < self.lambda_max.sqrt() {
            return Err(CliError::input(format!(
                "nu_max {} below sqrt(lambda_max) = {}: the cone spectrum would be incomplete",
                self.nu_max,
                self.lambda_max.sqrt()
            )));
        }
        self.t_grid.validate("t_grid")?;
        self.zeta_grid.validate("zeta grid")?;
        if !(self.split > self.zeta_grid.t_min && self.split.is_finite()) {
            return Err(CliError::input("split must exceed the smallest zeta sample time"));
        }
        if self.order <= q(-1, 1) {
            return Err(CliError::input("order must exceed -1"));
        }
        if let Some(nu) = self.single_nu {
            if !(nu >= 0.0 && nu.is_finite()) {
                return Err(CliError::input("single_nu must be a nonnegative order"));
            }
            return Ok(());
        }
        self.fiber.validate("fiber")?;
        self.base.validate("base")?;
        if self.fiber == FactorSpec::Point {
            return Err(CliError::input("fiber must be a circle or a torus"));
        }
        match self.model {
            ModelKind::Cone if self.base != FactorSpec::Point => {
                Err(CliError::input("model cone takes no base; use model product"))
            }
            ModelKind::Product if self.base == FactorSpec::Point => {
                Err(CliError::input("model product needs a circle or torus base"))
            }
            _ => Ok(()),
        }
    }
}

/// Contents of a TOML config file; every key is optional.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub model: Option<ModelKind>,
    pub fiber: Option<FactorSpec>,
    pub base: Option<FactorSpec>,
    pub convention: Option<String>,
    pub even: Option<bool>,
    pub single_nu: Option<f64>,
    pub order: Option<String>,
    pub weighting: Option<String>,
    pub cutoffs: Option<FileCutoffs>,
    pub t_grid: Option<FileGrid>,
    pub zeta: Option<FileZeta>,
    pub output: Option<FileOutput>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileCutoffs {
    pub nu_max: Option<f64>,
    pub lambda_max: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileGrid {
    pub t_min: Option<f64>,
    pub t_max: Option<f64>,
    pub points: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileZeta {
    pub t_min: Option<f64>,
    pub t_max: Option<f64>,
    pub points: Option<usize>,
    pub split: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileOutput {
    pub path: Option<PathBuf>,
    pub format: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        toml::from_str(text).map_err(|e| CliError::input(format!("config: {e}")))
    }
}

/// Command-line overrides, all optional.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub model: Option<ModelKind>,
    pub fiber: Option<FactorSpec>,
    pub base: Option<FactorSpec>,
    pub convention: Option<Convention>,
    pub nu_max: Option<f64>,
    pub lambda_max: Option<f64>,
    pub t_min: Option<f64>,
    pub t_max: Option<f64>,
    pub points: Option<usize>,
    pub zeta_t_min: Option<f64>,
    pub zeta_t_max: Option<f64>,
    pub zeta_points: Option<usize>,
    pub split: Option<f64>,
    pub even: Option<bool>,
    pub single_nu: Option<f64>,
    pub order: Option<Rational>,
    pub weighting: Option<FitWeighting>,
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
}

/// Defaults, then the file, then the flags.
pub fn resolve(file: &FileConfig, flags: &Overrides) -> CliResult<ModelConfig> {
    let mut c = ModelConfig::default();
    let mut nu_max = None;

    if let Some(v) = file.model {
        c.model = v;
    }
    if let Some(v) = &file.fiber {
        c.fiber = v.clone();
    }
    if let Some(v) = &file.base {
        c.base = v.clone();
    }
    if let Some(v) = &file.convention {
        c.convention = parse_convention(v)?;
    }
    if let Some(v) = file.even {
        c.even = v;
    }
    if let Some(v) = file.single_nu {
        c.single_nu = Some(v);
    }
    if let Some(v) = &file.order {
        c.order = parse_order(v)?;
    }
    if let Some(v) = &file.weighting {
        c.weighting = parse_weighting(v)?;
    }
    if let Some(cut) = &file.cutoffs {
        nu_max = cut.nu_max.or(nu_max);
        c.lambda_max = cut.lambda_max.unwrap_or(c.lambda_max);
    }
    if let Some(g) = &file.t_grid {
        c.t_grid.t_min = g.t_min.unwrap_or(c.t_grid.t_min);
        c.t_grid.t_max = g.t_max.unwrap_or(c.t_grid.t_max);
        c.t_grid.points = g.points.unwrap_or(c.t_grid.points);
    }
    if let Some(z) = &file.zeta {
        c.zeta_grid.t_min = z.t_min.unwrap_or(c.zeta_grid.t_min);
        c.zeta_grid.t_max = z.t_max.unwrap_or(c.zeta_grid.t_max);
        c.zeta_grid.points = z.points.unwrap_or(c.zeta_grid.points);
        c.split = z.split.unwrap_or(c.split);
    }
    if let Some(o) = &file.output {
        c.output.path = o.path.clone().or(c.output.path);
        if let Some(f) = &o.format {
            c.output.format = f.parse()?;
        }
    }

    let f = flags;
    c.model = f.model.unwrap_or(c.model);
    c.fiber = f.fiber.clone().unwrap_or(c.fiber);
    c.base = f.base.clone().unwrap_or(c.base);
    c.convention = f.convention.unwrap_or(c.convention);
    nu_max = f.nu_max.or(nu_max);
    c.lambda_max = f.lambda_max.unwrap_or(c.lambda_max);
    c.t_grid.t_min = f.t_min.unwrap_or(c.t_grid.t_min);
    c.t_grid.t_max = f.t_max.unwrap_or(c.t_grid.t_max);
    c.t_grid.points = f.points.unwrap_or(c.t_grid.points);
    c.zeta_grid.t_min = f.zeta_t_min.unwrap_or(c.zeta_grid.t_min);
    c.zeta_grid.t_max = f.zeta_t_max.unwrap_or(c.zeta_grid.t_max);
    c.zeta_grid.points = f.zeta_points.unwrap_or(c.zeta_grid.points);
    c.split = f.split.unwrap_or(c.split);
    c.even = f.even.unwrap_or(c.even);
    c.single_nu = f.single_nu.or(c.single_nu);
    c.order = f.order.unwrap_or(c.order);
    c.weighting = f.weighting.unwrap_or(c.weighting);
    c.output.path = f.output.clone().or(c.output.path);
    c.output.format = f.format.unwrap_or(c.output.format);

    // the ν cutoff defaults to the smallest complete one
    c.nu_max = nu_max.unwrap_or_else(|| c.lambda_max.sqrt());
    c.validate()?;
    Ok(c)
}
