use clap::{Parser, Subcommand, ValueEnum};
use garside_cli::{
    parse_braid, run_centralizer, run_experiment_verb, run_inv, run_nf, run_sc, run_uss,
    ExperimentArgs, Format, RunOutput, EXIT_INPUT,
};
use garside_core::uss::DEFAULT_VERTEX_CAP;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

/// Garside-theoretic braid computations: normal forms, sliding circuits,
/// summit graphs, centralizer generating sets, and sampling experiments.
///
/// Braid words are written as "n: i1 i2 ..." where n is the strand count and
/// each token is a nonzero generator index (negative for an inverse), "D"
/// for the half twist, or "D^k" for a power of it.
#[derive(Debug, Parser)]
#[command(name = "garside", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write the verb's file artifact (graph JSON, experiment CSV) here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Vertex cap for summit-graph construction.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_CAP)]
    cap: usize,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Left normal form of a braid word.
    Nf { word: String },
    /// Left normal form of the inverse.
    Inv { word: String },
    /// Slide to a sliding circuit: representative and conjugator.
    Sc { word: String },
    /// Build the summit graph and report vertices / orbits / minimality.
    Uss { word: String },
    /// Generating set for the centralizer.
    Centralizer { word: String },
    /// Run the sampling experiment grid and emit CSV (or JSON).
    Experiment {
        /// Strand count.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Comma-separated canonical lengths.
        #[arg(long, value_delimiter = ',', default_value = "4,8,16,24")]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: Format = cli.format.into();
    let parse = |w: &str| parse_braid(w).map_err(|m| (EXIT_INPUT, m));
    let result: Result<RunOutput, (i32, String)> = match &cli.verb {
        Verb::Nf { word } => parse(word).and_then(|w| run_nf(&w, format)),
        Verb::Inv { word } => parse(word).and_then(|w| run_inv(&w, format)),
        Verb::Sc { word } => parse(word).and_then(|w| run_sc(&w, format)),
        Verb::Uss { word } => {
            parse(word).and_then(|w| run_uss(&w, format, cli.cap, cli.out.is_some()))
        }
        Verb::Centralizer { word } => {
            parse(word).and_then(|w| run_centralizer(&w, format, cli.cap))
        }
        Verb::Experiment {
            n,
            lengths,
            trials,
            seed,
        } => run_experiment_verb(
            &ExperimentArgs {
                n: *n,
                lengths: lengths.clone(),
                trials: *trials,
                seed: *seed,
            },
            format,
            cli.out.is_some(),
        ),
    };
    match result {
        Ok(out) => {
            if let (Some(path), Some(body)) = (&cli.out, &out.file) {
                if let Err(e) = std::fs::write(path, body) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_INPUT as u8);
                }
            }
            println!("{}", out.stdout);
            ExitCode::SUCCESS
        }
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
