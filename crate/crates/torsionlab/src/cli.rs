//! Argument parsing and the seven commands.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use torsionlab_core::phg::{heat_trace_structure, zeta_pole_structure};

use crate::config::{
    parse_convention, parse_order, parse_weighting, resolve, FactorSpec, FileConfig, Format, ModelConfig, ModelKind,
    Overrides,
};
use crate::error::{CliError, CliResult};
use crate::output::{atomic_write, csv_string, document, fmt17, to_json_string};
use crate::pipeline::{self, Model};
use crate::report;
use crate::selftest;

#[derive(Parser, Debug)]
#[command(name = "torsionlab", version, about = "Spectral data, heat-trace asymptotics, zeta functions and analytic torsion of model edge spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Predicted heat-trace expansion and zeta poles for dimensions (m, b).
    Structure(StructureArgs),
    /// ν spectra of the fibre operator per cone degree.
    Spectrum(ModelArgs),
    /// Certified heat-trace samples per form degree.
    Trace(ModelArgs),
    /// Fitted small-time coefficients per form degree.
    Fit(ModelArgs),
    /// ζ(0) and ζ′(0) per form degree.
    Zeta(ModelArgs),
    /// Analytic torsion with regularity and McKean–Singer diagnostics.
    Torsion(ModelArgs),
    /// The oracle suite.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct StructureArgs {
    #[arg(long)]
    m: i64,
    #[arg(long)]
    b: i64,
    /// Even metric (only every other term in each series).
    #[arg(long)]
    even: bool,
    /// Include the artificial boundary series t^{j/2}.
    #[arg(long)]
    boundary: bool,
    /// Highest exponent kept, e.g. 3 or 5/2.
    #[arg(long, default_value = "3")]
    cutoff: String,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    /// Skip the slow checks.
    #[arg(long)]
    quick: bool,
    #[arg(long, default_value = "geometric-oracle")]
    convention: String,
}

#[derive(Args, Debug, Default)]
struct ModelArgs {
    /// TOML config file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// cone or product
    #[arg(long)]
    model: Option<String>,
    /// circle:<radius> or torus:<L1>,<L2>,...
    #[arg(long)]
    fiber: Option<String>,
    /// point, circle:<radius> or torus:<L1>,...
    #[arg(long)]
    base: Option<String>,
    /// geometric-oracle or paper-literal
    #[arg(long)]
    convention: Option<String>,
    #[arg(long)]
    nu_max: Option<f64>,
    #[arg(long)]
    lambda_max: Option<f64>,
    #[arg(long)]
    t_min: Option<f64>,
    #[arg(long)]
    t_max: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long)]
    zeta_t_min: Option<f64>,
    #[arg(long)]
    zeta_t_max: Option<f64>,
    #[arg(long)]
    zeta_points: Option<usize>,
    /// Split point of the Mellin integral.
    #[arg(long)]
    split: Option<f64>,
    /// Treat the metric as even.
    #[arg(long, conflicts_with = "not_even")]
    even: bool,
    /// Treat the metric as not even.
    #[arg(long)]
    not_even: bool,
    /// Replace the fibre by a single Bessel order ν.
    #[arg(long)]
    single_nu: Option<f64>,
    /// Highest exponent in the fit template, e.g. 3/2.
    #[arg(long)]
    order: Option<String>,
    /// small-time, leading-term or uniform
    #[arg(long)]
    weighting: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// json or csv
    #[arg(long)]
    format: Option<String>,
}

impl ModelArgs {
    fn overrides(&self) -> CliResult<Overrides> {
        Ok(Overrides {
            model: self.model.as_deref().map(str::parse::<ModelKind>).transpose()?,
            fiber: self.fiber.as_deref().map(str::parse::<FactorSpec>).transpose()?,
            base: self.base.as_deref().map(str::parse::<FactorSpec>).transpose()?,
            convention: self.convention.as_deref().map(parse_convention).transpose()?,
            nu_max: self.nu_max,
            lambda_max: self.lambda_max,
            t_min: self.t_min,
            t_max: self.t_max,
            points: self.points,
            zeta_t_min: self.zeta_t_min,
            zeta_t_max: self.zeta_t_max,
            zeta_points: self.zeta_points,
            split: self.split,
            even: if self.even {
                Some(true)
            } else if self.not_even {
                Some(false)
            } else {
                None
            },
            single_nu: self.single_nu,
            order: self.order.as_deref().map(parse_order).transpose()?,
            weighting: self.weighting.as_deref().map(parse_weighting).transpose()?,
            output: self.output.clone(),
            format: self.format.as_deref().map(str::parse::<Format>).transpose()?,
        })
    }

    fn resolve(&self) -> CliResult<ModelConfig> {
        let file = match &self.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        resolve(&file, &self.overrides()?)
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = e.print();
            } else {
                report_error(&CliError::input(e.to_string().trim_end().to_string()));
            }
            return code;
        }
    };
    let result = pipeline::thread_pool().and_then(|pool| pool.install(|| dispatch(cli.command)));
    match result {
        Ok(code) => code,
        Err(e) => {
            report_error(&e);
            e.exit_code()
        }
    }
}

fn report_error(e: &CliError) {
    let _ = std::io::stderr().write_all(to_json_string(&e.to_json()).as_bytes());
}

/// Fails fast on a missing output directory, before any computation.
fn checked(a: &ModelArgs) -> CliResult<ModelConfig> {
    let cfg = a.resolve()?;
    if let Some(dir) = cfg.output.path.as_deref().and_then(Path::parent) {
        if !dir.as_os_str().is_empty() && !dir.is_dir() {
            return Err(CliError::io(format!("output directory {} does not exist", dir.display())));
        }
    }
    Ok(cfg)
}

fn dispatch(cmd: Command) -> CliResult<i32> {
    match cmd {
        Command::Structure(a) => structure(&a),
        Command::Spectrum(a) => spectrum(&checked(&a)?),
        Command::Trace(a) => trace(&checked(&a)?),
        Command::Fit(a) => fit(&checked(&a)?),
        Command::Zeta(a) => zeta(&checked(&a)?),
        Command::Torsion(a) => torsion(&checked(&a)?),
        Command::Selftest(a) => {
            let checks = selftest::run(a.quick, parse_convention(&a.convention)?);
            print!("{}", selftest::table(&checks));
            Ok(if selftest::all_passed(&checks) { 0 } else { 1 })
        }
    }
}

fn print_stdout(text: &str) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

/// Writes the rendered output to the configured path, or to stdout.
fn emit(cfg: &ModelConfig, json: Value, header: &[&str], rows: &[Vec<String>]) -> CliResult<()> {
    let text = match cfg.output.format {
        Format::Json => to_json_string(&json),
        Format::Csv => csv_string(header, rows)?,
    };
    match &cfg.output.path {
        Some(p) => atomic_write(p, text.as_bytes()),
        None => print_stdout(&text),
    }
}

fn structure(a: &StructureArgs) -> CliResult<i32> {
    let cutoff = parse_order(&a.cutoff)?;
    let tpl = heat_trace_structure(a.m, a.b, a.even, a.boundary, cutoff)?;
    let poles = zeta_pole_structure(&tpl);
    let payload = json!({
        "exponents": tpl.exponents().into_iter().map(report::rational).collect::<Vec<_>>(),
        "log_exponents": tpl.log_exponents().into_iter().map(report::rational).collect::<Vec<_>>(),
        "template": report::template(&tpl),
        "zeta": report::pole_structure(&poles),
    });
    print_stdout(&to_json_string(&document("structure", payload)))?;
    Ok(0)
}

fn spectrum(cfg: &ModelConfig) -> CliResult<i32> {
    let nus = pipeline::nu_spectra(cfg)?;
    let payload = json!({
        "config": report::config(cfg),
        "degrees": nus.iter().map(report::nu_spectrum).collect::<Vec<_>>(),
    });
    let rows: Vec<Vec<String>> = nus.iter().flat_map(report::nu_spectrum_rows).collect();
    emit(cfg, document("spectrum", payload), &report::NU_CSV_HEADER, &rows)?;
    Ok(0)
}

fn trace(cfg: &ModelConfig) -> CliResult<i32> {
    let model = Model::build(cfg)?;
    let samples = model.samples(&cfg.t_grid)?;
    let payload = json!({
        "config": report::config(cfg),
        "degrees": samples.iter().enumerate().map(|(k, s)| report::samples(k, s)).collect::<Vec<_>>(),
    });
    let rows: Vec<Vec<String>> = samples.iter().enumerate().flat_map(|(k, s)| report::sample_rows(k, s)).collect();
    emit(cfg, document("trace", payload), &report::TRACE_CSV_HEADER, &rows)?;
    Ok(0)
}

fn fit(cfg: &ModelConfig) -> CliResult<i32> {
    let model = Model::build(cfg)?;
    let samples = model.samples(&cfg.t_grid)?;
    let fits = model.fits(&samples)?;
    let payload = json!({
        "config": report::config(cfg),
        "degrees": fits.iter().enumerate().map(|(k, f)| report::fit(k, f)).collect::<Vec<_>>(),
    });
    let rows: Vec<Vec<String>> = fits.iter().enumerate().flat_map(|(k, f)| report::fit_rows(k, f)).collect();
    emit(cfg, document("fit", payload), &report::FIT_CSV_HEADER, &rows)?;
    Ok(0)
}

fn zeta(cfg: &ModelConfig) -> CliResult<i32> {
    let model = Model::build(cfg)?;
    let samples = model.samples(&cfg.zeta_grid)?;
    let fits = model.fits(&samples)?;
    let zetas = model.zetas(&samples, &fits)?;
    let payload = json!({
        "config": report::config(cfg),
        "degrees": zetas.iter().map(report::zeta).collect::<Vec<_>>(),
    });
    let rows: Vec<Vec<String>> = zetas.iter().map(report::zeta_row).collect();
    emit(cfg, document("zeta", payload), &report::ZETA_CSV_HEADER, &rows)?;
    Ok(0)
}

fn csv_sibling(path: &Path) -> PathBuf {
    path.with_extension("csv")
}

fn torsion(cfg: &ModelConfig) -> CliResult<i32> {
    let model = Model::build(cfg)?;
    let run = pipeline::torsion(&model)?;
    let r = &run.report;
    let mut payload = report::torsion(r, run.defect, run.defect_large_t, &run.kernel);
    payload["config"] = report::config(cfg);
    let doc = document("torsion", payload);
    let rows: Vec<Vec<String>> = r.per_degree.iter().map(report::zeta_row).collect();
    let summary = format!(
        "log_T = {} ± {}\nper_degree_regular = {}\nresidue_cancellation = {}\ntorsion_zeta_regular = {}\nmckean_singer_defect = {}\n",
        fmt17(r.log_t),
        fmt17(r.log_t_error),
        r.per_degree_regular,
        r.residue_cancellation,
        r.torsion_zeta_regular,
        run.defect_large_t.map(fmt17).unwrap_or_else(|| "n/a (single degree)".into()),
    );
    match &cfg.output.path {
        Some(p) => {
            match cfg.output.format {
                Format::Json => {
                    atomic_write(p, to_json_string(&doc).as_bytes())?;
                    let csv = csv_string(&report::ZETA_CSV_HEADER, &rows)?;
                    let sibling = csv_sibling(p);
                    if sibling != *p {
                        atomic_write(&sibling, csv.as_bytes())?;
                    }
                }
                Format::Csv => atomic_write(p, csv_string(&report::ZETA_CSV_HEADER, &rows)?.as_bytes())?,
            }
            print_stdout(&summary)?;
        }
        None => match cfg.output.format {
            Format::Json => print_stdout(&to_json_string(&doc))?,
            Format::Csv => print_stdout(&csv_string(&report::ZETA_CSV_HEADER, &rows)?)?,
        },
    }
    Ok(0)
}
