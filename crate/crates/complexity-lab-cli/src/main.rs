//! `complexity-lab`: measures and experiments from the command line.
//!
//! Exit codes: 0 on success, 2 on validation errors (bad flags, bad
//! input files, inputs out of range), 3 when a runtime budget is
//! exhausted. `COMPLEXITY_LAB_THREADS` caps the worker pool.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use complexity_lab::assembly::{self, ExactConfig, HeuristicMethod};
use complexity_lab::bdm::{self, Estimator};
use complexity_lab::ctm::{ctm_build, CtmTable};
use complexity_lab::entropy;
use complexity_lab::error::Error;
use complexity_lab::experiment::{
    run_growing, run_molecular, run_zbc_permutations, GrowingConfig, GrowingKind, MolecularConfig,
    ZbcConfig, ENTROPY_WINDOW,
};
use complexity_lab::lz;
use complexity_lab::seq::Sequence;

#[derive(Parser)]
#[command(name = "complexity-lab", version, about = "Complexity measures and experiment harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute measures for one sequence.
    Measure(MeasureArgs),
    /// CTM output-frequency tables.
    Ctm {
        #[command(subcommand)]
        action: CtmAction,
    },
    /// Seeded experiment suites writing JSON + CSV reports.
    Experiment {
        #[command(subcommand)]
        which: ExperimentCmd,
    },
    /// Molecular pipeline over a CSV dataset.
    Molecular(MolecularArgs),
}

#[derive(Args)]
struct MeasureArgs {
    /// Text to measure (alphabet = distinct characters).
    #[arg(long, conflicts_with = "file")]
    text: Option<String>,
    /// File whose contents are measured (trailing newline ignored).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Comma-separated list out of: ai, ai-exact, lzw, entropy, bdm.
    #[arg(long, value_delimiter = ',', default_value = "ai,lzw,entropy,bdm")]
    measures: Vec<String>,
    /// CTM table (TSV) backing the bdm measure.
    #[arg(long)]
    ctm_table: Option<PathBuf>,
    /// Emit JSON instead of aligned text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum CtmAction {
    /// Enumerate a machine space and write the output-frequency table.
    Build {
        #[arg(long, default_value_t = 2)]
        states: u8,
        #[arg(long, default_value_t = 2)]
        symbols: u8,
        #[arg(long, default_value_t = 500)]
        cutoff: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum ExperimentCmd {
    /// Fixed-length draws from the ZBC multiset.
    Zbc {
        #[arg(long, default_value_t = 15)]
        length: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Omit runtime metadata so identical configs give identical bytes.
        #[arg(long)]
        stable: bool,
    },
    /// Growing sequences with trajectory correlations and log-ratio
    /// asymptotics.
    Growing {
        #[arg(long, value_parser = parse_kind)]
        kind: GrowingKind,
        #[arg(long, default_value_t = 3000)]
        max_length: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        stable: bool,
    },
}

#[derive(Args)]
struct MolecularArgs {
    #[arg(long)]
    csv: PathBuf,
    /// Logical-to-actual column bindings, e.g.
    /// id=name,inchi=inchi,ma=ma,ms2=peaks,group=class
    #[arg(long, default_value = "id=id,inchi=inchi,ma=ma,ms2=ms2_peaks,group=group")]
    columns: String,
    /// Quantiles for the MS2 regressions.
    #[arg(long, value_delimiter = ',', default_value = "0.05,0.14,0.5,0.95")]
    quantiles: Vec<f64>,
    /// Threshold on the ingested assembly values for the living rule.
    #[arg(long, default_value_t = 15.0)]
    ma_threshold: f64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    stable: bool,
}

fn parse_kind(s: &str) -> Result<GrowingKind, String> {
    GrowingKind::parse(s).ok_or_else(|| format!("unknown kind {s:?}; use random|pattern5|pattern10|zbc"))
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("COMPLEXITY_LAB_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("COMPLEXITY_LAB_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExhausted { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> complexity_lab::Result<()> {
    match cli.command {
        Command::Measure(args) => measure(args),
        Command::Ctm {
            action: CtmAction::Build {
                states,
                symbols,
                cutoff,
                out,
            },
        } => {
            let table = ctm_build(states, symbols, cutoff)?;
            table.write_tsv(&out)?;
            println!(
                "wrote {} ({} halting machines, {} outputs)",
                out.display(),
                table.total_halting,
                table.entries().len()
            );
            Ok(())
        }
        Command::Experiment { which } => match which {
            ExperimentCmd::Zbc {
                length,
                trials,
                seed,
                out,
                stable,
            } => {
                let report = run_zbc_permutations(&ZbcConfig::new(length, trials, seed), stable)?;
                let files = report.write_outputs(&out)?;
                for f in files {
                    println!("wrote {}", f.display());
                }
                Ok(())
            }
            ExperimentCmd::Growing {
                kind,
                max_length,
                trials,
                seed,
                out,
                stable,
            } => {
                let report =
                    run_growing(&GrowingConfig::new(kind, max_length, trials, seed), stable)?;
                let files = report.write_outputs(&out)?;
                for f in files {
                    println!("wrote {}", f.display());
                }
                Ok(())
            }
        },
        Command::Molecular(args) => {
            let cfg = MolecularConfig::new(
                args.csv.display().to_string(),
                args.columns,
                args.quantiles,
                args.ma_threshold,
            );
            let report = run_molecular(&cfg, args.stable)?;
            let files = report.write_outputs(&args.out)?;
            for f in files {
                println!("wrote {}", f.display());
            }
            Ok(())
        }
    }
}

fn measure(args: MeasureArgs) -> complexity_lab::Result<()> {
    let text = match (&args.text, &args.file) {
        (Some(t), None) => t.clone(),
        (None, Some(path)) => {
            let raw = std::fs::read_to_string(path)?;
            raw.trim_end_matches(['\n', '\r']).to_string()
        }
        _ => {
            return Err(Error::Degenerate(
                "exactly one of --text or --file is required".into(),
            ))
        }
    };
    let x = Sequence::from_text(&text)?;
    let table = args
        .ctm_table
        .as_deref()
        .map(CtmTable::read_tsv)
        .transpose()?;

    let mut values: BTreeMap<String, f64> = BTreeMap::new();
    for m in &args.measures {
        let value = match m.as_str() {
            "lzw" => lz::lzw_encode(&x)?.codeword_count as f64,
            "ai" => assembly::heuristic_index(&x, HeuristicMethod::BestOf)?.index as f64,
            "ai-exact" => assembly::exact_index(&x, &ExactConfig::default())?.index as f64,
            "entropy" => entropy::entropy_rate(&x, ENTROPY_WINDOW)?.0,
            "bdm" => match &table {
                Some(t) if x.alphabet_size() <= t.symbols as usize => bdm::bdm(
                    &x,
                    3.min(x.len()),
                    Estimator::Ctm {
                        table: t,
                        fallback: true,
                    },
                )?,
                _ => bdm::bdm(&x, 4.min(x.len()), Estimator::LzwBits)?,
            },
            other => {
                return Err(Error::Degenerate(format!(
                    "unknown measure {other:?}; use ai, ai-exact, lzw, entropy, bdm"
                )))
            }
        };
        values.insert(m.clone(), value);
    }

    if args.json {
        let payload = serde_json::json!({
            "length": x.len(),
            "alphabet_size": x.alphabet_size(),
            "measures": values,
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
    } else {
        println!("length {} over alphabet {}", x.len(), x.alphabet_size());
        for (name, value) in &values {
            if value.fract() == 0.0 && value.abs() < 1e15 {
                println!("{name:10} {}", *value as i64);
            } else {
                println!("{name:10} {value:.6}");
            }
        }
    }
    Ok(())
}
