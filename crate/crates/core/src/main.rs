use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use social_attitudes::config::Config;
use social_attitudes::corpus::{parse_corpus, write_corpus, Vocabulary};
use social_attitudes::pipeline::mine_corpus;
use social_attitudes::seqmine::{parse_patterns, write_patterns};
use social_attitudes::sim::{
    compare_traces, parse_reference, read_trace_points, run_simulation, write_trace, Input,
    Scenario,
};
use social_attitudes::synth::{synthetic_corpus, SynthConfig};
use social_attitudes::Result;

#[derive(Parser)]
#[command(name = "social-attitudes", version, about = "Recruiter attitude simulation and signal sequence mining")]
struct Cli {
    /// TOML configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mine signal sequences preceding attitude variations.
    Mine {
        /// Corpus file, or a directory of `.corpus` files.
        corpus: PathBuf,
        #[arg(long)]
        min_support: Option<f64>,
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run an interview scenario.
    Simulate {
        scenario: PathBuf,
        #[arg(long)]
        patterns: PathBuf,
        /// CSV trace output.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Read detected affects for every turn from standard input.
        #[arg(long)]
        interactive: bool,
    },
    /// Sign agreement of a trace with an annotated reference.
    Compare { trace: PathBuf, reference: PathBuf },
    /// Write a seeded synthetic corpus.
    Synth {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        interactions: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)
        .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?)
}

fn run(cli: Cli) -> Result<()> {
    let mut config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Mine {
            corpus,
            min_support,
            max_length,
            out,
        } => {
            if let Some(s) = min_support {
                config.miner.min_support = s;
            }
            if let Some(l) = max_length {
                config.miner.max_pattern_length = l;
            }
            config.validate()?;
            let interactions = parse_corpus(&corpus, &Vocabulary::default())?;
            let (set, summary) = mine_corpus(&interactions, &config.corpus, &config.miner)?;
            fs::write(&out, write_patterns(&set))?;
            eprintln!(
                "{} interactions, {} variation events, {} pattern records written to {}",
                interactions.len(),
                summary.events,
                set.stats.len(),
                out.display()
            );
        }
        Command::Simulate {
            scenario,
            patterns,
            trace,
            interactive,
        } => {
            let scenario = Scenario::load(&scenario)?;
            let patterns = parse_patterns(&read(&patterns)?, &patterns.display().to_string())?;
            let stdin = io::stdin();
            let mut reader = stdin.lock();
            let mut prompt = io::stderr();
            let input = Input::Console {
                reader: &mut reader,
                prompt: &mut prompt,
                every_turn: interactive,
            };
            let turns = run_simulation(&scenario, &patterns, &config, input)?;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for t in &turns {
                let shown = if t.sequence.is_empty() {
                    "-".to_string()
                } else {
                    t.sequence.to_string()
                };
                writeln!(out, "turn {} {} point {} sequence {}", t.turn, t.question, t.point, shown)?;
            }
            if let Some(path) = trace {
                write_trace(BufWriter::new(File::create(&path)?), &turns)?;
            }
        }
        Command::Compare { trace, reference } => {
            let points = read_trace_points(File::open(&trace)?, &trace.display().to_string())?;
            let reference = parse_reference(&read(&reference)?, &reference.display().to_string())?;
            print!("{}", compare_traces(&points, &reference)?);
        }
        Command::Synth {
            seed,
            interactions,
            out,
        } => {
            let cfg = SynthConfig {
                seed,
                interactions,
                ..Default::default()
            };
            fs::write(&out, write_corpus(&synthetic_corpus(&cfg)?))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
