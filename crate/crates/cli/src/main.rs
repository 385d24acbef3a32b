//! `coxlip`: verification runs over JSON inputs.
//!
//! Results go to standard output as JSON, a one-line summary to standard
//! error. Exit status is 0 when the checked property holds, 1 when it is
//! violated, and 2 on usage or input errors.

mod commands;
mod gallery;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coxlip::coxeter::DEFAULT_MAX_ORDER;
use coxlip::lipschitz::{LipschitzCondition, DEFAULT_SEARCH_BOUND};
use coxlip::spectral::Tolerances;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "coxlip", version, about = "Lipschitz self-maps of Coxeter groups and spectral selection on SU(n)")]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct ConfigArgs {
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Spectrum and commutator tolerance.
    #[arg(long, global = true)]
    pub tol_spec: Option<f64>,
    /// Projector tolerance.
    #[arg(long, global = true)]
    pub tol_proj: Option<f64>,
    /// Largest group order the map searches accept.
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_BOUND)]
    pub search_bound: usize,
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl ConfigArgs {
    pub fn tolerances(&self) -> Result<Tolerances> {
        let mut tol = Tolerances::default();
        for (value, slot, name) in
            [(self.tol_spec, &mut tol.spec, "--tol-spec"), (self.tol_proj, &mut tol.proj, "--tol-proj")]
        {
            if let Some(v) = value {
                if !(v.is_finite() && v > 0.0) {
                    bail!("{name} must be a positive number, got {v}");
                }
                *slot = v;
            }
        }
        Ok(tol)
    }

    fn to_json(&self, tol: &Tolerances) -> Value {
        json!({
            "seed": self.seed,
            "search_bound": self.search_bound,
            "max_order": DEFAULT_MAX_ORDER,
            "tolerances": tol,
        })
    }
}

#[derive(Args, Clone, Debug)]
pub struct MatrixArg {
    /// Coxeter matrix file: {"rank": r, "m": [[...]]}.
    #[arg(long)]
    pub matrix: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Condition {
    /// Every reflection at every element.
    Full,
    /// The simple generators at every element.
    Simple,
}

impl Condition {
    pub fn to_condition(self) -> LipschitzCondition {
        match self {
            Condition::Full => LipschitzCondition::FullReflectionSet,
            Condition::Simple => LipschitzCondition::SimpleGenerators,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Condition::Full => "full",
            Condition::Simple => "simple",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Facts about a finite Coxeter system.
    System {
        #[command(subcommand)]
        command: SystemCommand,
    },
    /// Every self-map satisfying a Lipschitz condition.
    Enumerate {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, value_enum, default_value_t = Condition::Full)]
        condition: Condition,
    },
    /// Checks one self-map against a Lipschitz condition.
    CheckMap {
        #[command(flatten)]
        matrix: MatrixArg,
        /// Map file: {"table": [ids]} or {"map": {"word": "word"}}.
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_enum, default_value_t = Condition::Full)]
        condition: Condition,
    },
    /// The folding map that deletes one generator.
    Fold {
        #[command(flatten)]
        matrix: MatrixArg,
        /// Generator label, 1-based.
        #[arg(long)]
        generator: usize,
    },
    /// Compares two elements in Bruhat order.
    Bruhat {
        #[command(flatten)]
        matrix: MatrixArg,
        /// Word of the lower element, e.g. "1 2".
        u: String,
        /// Word of the upper element.
        w: String,
    },
    /// Spectra and torus maps.
    Spectral {
        #[command(subcommand)]
        command: SpectralCommand,
    },
    /// Worked examples.
    Gallery {
        #[command(subcommand)]
        command: GalleryCommand,
    },
}

#[derive(Subcommand)]
enum SystemCommand {
    Info(MatrixArg),
}

#[derive(Subcommand)]
enum SpectralCommand {
    /// Morton coordinates of a spectrum file or a special unitary matrix file.
    Select {
        #[arg(long)]
        input: PathBuf,
    },
    /// Conjugation or reordering verdict for a torus sample table.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum GalleryCommand {
    /// S3 map passing the generator-only condition but not the cyclic one.
    JustN1,
    /// Hybrid reordering of real diagonal 3x3 matrices.
    HermHybrid,
    /// SU(2) map preserving commuting spectra without a global form.
    Su2 {
        #[arg(long, default_value_t = 1000)]
        pairs: usize,
    },
    /// Candidate T-Lipschitz map on the infinite dihedral group.
    InfDihedral {
        #[arg(long, default_value_t = 12)]
        radius: usize,
    },
    /// Cyclic-condition maps of S_n are constants or right translations.
    Chartaus {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// T-Lipschitz maps of a finite Coxeter group form the canonical family.
    CoxlipTheorem(MatrixArg),
}

/// A finished run: the JSON body, whether the checked property holds, and a
/// summary line.
pub struct Report {
    pub body: Value,
    pub holds: bool,
    pub summary: String,
}

fn run(cli: &Cli, tol: &Tolerances) -> Result<Report> {
    let cfg = &cli.config;
    match &cli.command {
        Command::System { command: SystemCommand::Info(m) } => commands::system_info(m),
        Command::Enumerate { matrix, condition } => commands::enumerate(matrix, *condition, cfg),
        Command::CheckMap { matrix, map, condition } => commands::check_map(matrix, map, *condition),
        Command::Fold { matrix, generator } => commands::fold(matrix, *generator),
        Command::Bruhat { matrix, u, w } => commands::bruhat(matrix, u, w),
        Command::Spectral { command: SpectralCommand::Select { input } } => commands::spectral_select(input, tol),
        Command::Spectral { command: SpectralCommand::Classify { input } } => commands::spectral_classify(input),
        Command::Gallery { command } => match command {
            GalleryCommand::JustN1 => gallery::just_n1(),
            GalleryCommand::HermHybrid => gallery::herm_hybrid(),
            GalleryCommand::Su2 { pairs } => gallery::su2(*pairs, cfg.seed, tol),
            GalleryCommand::InfDihedral { radius } => gallery::inf_dihedral(*radius),
            GalleryCommand::Chartaus { n } => gallery::cyclic_maps(*n),
            GalleryCommand::CoxlipTheorem(m) => gallery::canonical_family_check(m, cfg),
        },
    }
}

fn emit(cli: &Cli, tol: &Tolerances, report: Report) -> Result<()> {
    let mut body = report.body;
    if let Value::Object(map) = &mut body {
        map.insert("config".into(), cli.config.to_json(tol));
    }
    let text = serde_json::to_string_pretty(&body)? + "\n";
    match &cli.config.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = cli.config.tolerances().and_then(|tol| {
        let report = run(&cli, &tol)?;
        let holds = report.holds;
        eprintln!("{}", report.summary);
        emit(&cli, &tol, report)?;
        Ok(holds)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
