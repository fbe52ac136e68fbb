use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use icphi::format::{parse_group, parse_manifest, print_manifest};
use icphi::{build_corpus, Corpus, GroupRecipe, GroupSummary, RunOptions, StatementId};

const DEFAULT_MAX_ORDER: usize = 64;

/// Verify statements about ICΦ-subgroups over a corpus of small groups.
#[derive(Parser)]
#[command(name = "icphi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the corpus members.
    List(CorpusArgs),
    /// Describe one group, given as a group file or a recipe such as "Q8".
    Analyze {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run statement verifiers over the corpus.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Statement to run (repeatable); all when absent.
        #[arg(long = "statement", value_name = "ID")]
        statements: Vec<StatementId>,
        /// Groups verified in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include per-statement wall times.
        #[arg(long)]
        timings: bool,
    },
    /// Write the corpus manifest.
    Export {
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CorpusArgs {
    /// Largest group order in the built-in corpus.
    #[arg(long)]
    max_order: Option<usize>,
    /// Read the corpus from a manifest instead of building it.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn load_corpus(args: &CorpusArgs) -> Result<(Corpus, String)> {
    match &args.corpus {
        Some(path) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let mut corpus =
                parse_manifest(&text).with_context(|| format!("parsing {}", path.display()))?;
            if let Some(m) = args.max_order {
                corpus.groups.retain(|e| e.group.order() <= m);
                corpus.max_order = corpus.max_order.min(m);
            }
            Ok((corpus, path.display().to_string()))
        }
        None => {
            let m = args.max_order.unwrap_or(DEFAULT_MAX_ORDER);
            Ok((build_corpus(m)?, "builtin".to_string()))
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_group(input: &str) -> Result<icphi::FiniteGroup> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        return parse_group(&text).with_context(|| format!("parsing {input}"));
    }
    let recipe: GroupRecipe = input
        .parse()
        .with_context(|| format!("{input:?} is neither a group file nor a recipe"))?;
    Ok(recipe.materialize()?)
}

/// Every error is a usage or input error, exit code 2.
fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::List(args) => {
            let (corpus, _) = load_corpus(&args)?;
            let text = match args.format {
                Format::Json => print_manifest(&corpus) + "\n",
                Format::Text => {
                    let mut s = String::new();
                    for e in corpus.iter() {
                        let recipe = e.recipe.as_ref().map_or("-".to_string(), |r| r.to_string());
                        s.push_str(&format!(
                            "{:>4}  {:<28} {}\n",
                            e.group.order(),
                            e.name(),
                            recipe
                        ));
                    }
                    s
                }
            };
            emit(args.out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { input, format } => {
            let g = load_group(&input)?;
            let summary = GroupSummary::of(Arc::new(g))?;
            let text = match format {
                Format::Text => summary.to_text(),
                Format::Json => summary.to_json(),
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            corpus,
            statements,
            jobs,
            timings,
        } => {
            let (c, source) = load_corpus(&corpus)?;
            let opts = RunOptions {
                statements: if statements.is_empty() {
                    StatementId::ALL.to_vec()
                } else {
                    statements
                },
                jobs,
                timings,
                corpus_source: source,
            };
            let report = icphi::run_verify(&c, &opts)?;
            let text = match corpus.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            emit(corpus.out.as_deref(), &text)?;
            Ok(if report.violations() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Export { max_order, out } => {
            let corpus = build_corpus(max_order)?;
            emit(out.as_deref(), &(print_manifest(&corpus) + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
