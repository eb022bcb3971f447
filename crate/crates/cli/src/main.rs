use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hilbert_concepts::suite::InjectedFault;
use hilbert_concepts_cli::commands::{self, FigureKind, Format};
use hilbert_concepts_cli::config::Config;
use hilbert_concepts_cli::CliError;

#[derive(Parser)]
#[command(
    name = "qconcepts",
    version,
    about = "Born-rule concept classification on Gaussian wavefunctions"
)]
struct Cli {
    /// Concept configuration (JSON). Defaults to the built-in car/boat config.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,

    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Override the object center.
    #[arg(long, global = true, allow_hyphen_values = true)]
    object_mu: Option<f64>,

    /// Override the object width.
    #[arg(long, global = true, allow_hyphen_values = true)]
    object_sigma: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Raw Born scores and normalized probabilities for the object.
    Classify {
        /// Integrate on the grid instead of using the closed form.
        #[arg(long)]
        quadrature: bool,
    },
    /// CSV data for wavefunction or density plots.
    EmitFigure {
        #[arg(long, value_enum, default_value_t = FigureArg::Densities)]
        which: FigureArg,
    },
    /// Seeded metric-axiom and fuzzy-axiom property suites.
    MetricCheck {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Born scores next to triangular memberships at x.
    CompareFuzzy {
        /// Feature value for the memberships; defaults to the object center.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<f64>,
    },
    /// Scores of the object against a + b and a + e^{i phase} b.
    Interference {
        /// Relative phase in radians; defaults to pi.
        #[arg(long, allow_hyphen_values = true)]
        phase: Option<f64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FigureArg {
    Wavefunctions,
    Densities,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    Identity,
    Km1,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let format = match cli.format {
        FormatArg::Table => Format::Table,
        FormatArg::Json => Format::Json,
    };
    let load = || Config::load(cli.config.as_deref())?.with_object(cli.object_mu, cli.object_sigma);
    let mut code = ExitCode::SUCCESS;
    let text = match &cli.command {
        Command::Classify { quadrature } => commands::classify(&load()?, *quadrature, format)?,
        Command::EmitFigure { which } => {
            let kind = match which {
                FigureArg::Wavefunctions => FigureKind::Wavefunctions,
                FigureArg::Densities => FigureKind::Densities,
            };
            commands::emit_figure(&load()?, kind)?
        }
        Command::MetricCheck {
            trials,
            inject_fault,
        } => {
            let fault = inject_fault.map(|f| match f {
                FaultArg::Identity => InjectedFault::Identity,
                FaultArg::Km1 => InjectedFault::Km1,
            });
            let report = commands::metric_check(*trials, cli.seed, fault)?;
            if !report.all_passed() {
                code = ExitCode::from(1);
            }
            commands::render_metric_check(&report, format)?
        }
        Command::CompareFuzzy { x } => commands::compare_fuzzy(&load()?, *x, format)?,
        Command::Interference { phase } => commands::interference(&load()?, *phase, format)?,
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            CliError::Compute(format!("{}: cannot write output: {e}", path.display()))
        })?,
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            other => other?,
        },
    }
    Ok(code)
}
