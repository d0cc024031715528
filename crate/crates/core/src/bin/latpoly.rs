use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use latpoly::report::{self, Command, Options};
use latpoly::{Error, Polytope};

/// Exact computations on lattice polytopes. Results are printed as JSON.
#[derive(Parser)]
#[command(name = "latpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Source {
    /// Polytope document (JSON with "dim" and "vertices" or "inequalities").
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Builtin polytope such as simplex:2:3, box:2:1, hirzebruch:1.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
    /// Translate the unique interior lattice point to the origin first.
    #[arg(long)]
    center: bool,
    /// Largest dilation enumerated (default: dimension + 3).
    #[arg(long, value_name = "K")]
    max_dilation: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Lattice point counts and sums of mP for m = 0..K.
    Points(Source),
    /// Ehrhart polynomial.
    Ehrhart(Source),
    /// Vector-valued Ehrhart polynomial.
    VectorEhrhart(Source),
    /// Scalar and vector reciprocity at m = 1..K.
    Reciprocity(Source),
    /// Polar dual.
    Dual(Source),
    /// Reflexivity by the Hibi criterion and by dual integrality.
    Reflexive(Source),
    /// Delzant smoothness with per-vertex edge data.
    Delzant(Source),
    /// Volume and barycenter.
    Barycenter(Source),
    /// Ono's identity P^x(m) = m P(m) b.
    Ono(Source),
    /// Search for an affine unimodular map between two polytopes.
    Equiv {
        #[command(flatten)]
        source: Source,
        /// Second polytope document.
        #[arg(long, value_name = "FILE")]
        other_input: Option<PathBuf>,
        /// Second polytope as a builtin.
        #[arg(long, value_name = "NAME")]
        other_builtin: Option<String>,
    },
    /// Classify a smooth polytope Ehrhart equivalent to a dilated simplex.
    Classify(Source),
    /// Check invariants under seeded random unimodular maps.
    Invariance {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// List builtin names and the fixture corpus.
    BuiltinList,
}

fn load(input: Option<&PathBuf>, builtin: Option<&str>) -> Result<Polytope, Error> {
    let text = input
        .map(|path| {
            std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
        })
        .transpose()?;
    report::load(text.as_deref(), builtin)
}

fn execute(cmd: Cmd) -> Result<serde_json::Value, Error> {
    let mut other = None;
    let (mut seed, mut trials) = (0, Options::default().trials);
    let (command, source) = match cmd {
        Cmd::BuiltinList => return Ok(report::builtin_list()),
        Cmd::Equiv { source, other_input, other_builtin } => {
            other = Some(load(other_input.as_ref(), other_builtin.as_deref())?);
            (Command::Equiv, source)
        }
        Cmd::Invariance { source, seed: s, trials: t } => {
            (seed, trials) = (s, t);
            (Command::Invariance, source)
        }
        Cmd::Points(s) => (Command::Points, s),
        Cmd::Ehrhart(s) => (Command::Ehrhart, s),
        Cmd::VectorEhrhart(s) => (Command::VectorEhrhart, s),
        Cmd::Reciprocity(s) => (Command::Reciprocity, s),
        Cmd::Dual(s) => (Command::Dual, s),
        Cmd::Reflexive(s) => (Command::Reflexive, s),
        Cmd::Delzant(s) => (Command::Delzant, s),
        Cmd::Barycenter(s) => (Command::Barycenter, s),
        Cmd::Ono(s) => (Command::Ono, s),
        Cmd::Classify(s) => (Command::Classify, s),
    };
    let opts = Options { max_dilation: source.max_dilation, center: source.center, seed, trials };
    let p = load(source.input.as_ref(), source.builtin.as_deref())?;
    report::run(command, &p, other.as_ref(), &opts)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors count as invalid input.
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli.command) {
        Ok(v) => {
            print!("{}", report::to_line(&v));
            ExitCode::SUCCESS
        }
        Err(e) => {
            print!("{}", report::to_line(&report::error_json(&e)));
            eprintln!("latpoly: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
