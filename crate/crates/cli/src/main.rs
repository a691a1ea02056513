use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use quandle_order::search::{Property, SearchConfig, Tier};
use quandle_order_cli::run::{parse_property, parse_tier, run_and_write, InputSource};
use quandle_order_cli::{Command, RunConfig};

/// Decide and enumerate invariant circular and linear orderings of finite
/// quandles.
#[derive(Parser)]
#[command(name = "qorder", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the quandle has an invariant ordering.
    Check(QuandleArgs),
    /// List every invariant ordering.
    Enumerate(QuandleArgs),
    /// Print one invariant ordering, if any.
    Witness(QuandleArgs),
    /// Tabulate all quandles up to a given order.
    Census {
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run the built-in checks of the worked examples and lemmas.
    VerifyPaper {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct QuandleArgs {
    /// right-circular, left-circular, bi-circular, right-order or left-order
    #[arg(long, value_parser = property)]
    property: Option<Property>,
    /// Quandle JSON file.
    #[arg(long, conflicts_with = "builtin")]
    input: Option<PathBuf>,
    /// Built-in family, e.g. dihedral:5 or conj:S3.
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long)]
    fail_on_no: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Largest carrier for which orderings are enumerated.
    #[arg(long)]
    max_enum: Option<usize>,
    /// Largest group produced when closing translations.
    #[arg(long)]
    max_closure: Option<usize>,
    /// fast, exhaustive or both
    #[arg(long, value_parser = tier, default_value = "both")]
    tier: Tier,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Human-readable text instead of JSON.
    #[arg(long)]
    pretty: bool,
}

fn property(s: &str) -> Result<Property, String> {
    parse_property(s).ok_or_else(|| format!("unknown property `{s}`"))
}

fn tier(s: &str) -> Result<Tier, String> {
    parse_tier(s).ok_or_else(|| format!("unknown tier `{s}`"))
}

fn apply(common: Common, cfg: &mut RunConfig) {
    let mut search = SearchConfig::default().with_tier(common.tier);
    if let Some(n) = common.max_enum {
        search.max_circular_n = n;
        search.max_linear_n = n;
    }
    if let Some(k) = common.max_closure {
        search.closure_limit = k;
    }
    cfg.search = search;
    cfg.threads = common.threads;
    cfg.output = common.output;
    cfg.pretty = common.pretty;
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cfg = match cli.command {
        Cmd::Check(a) => quandle_config(Command::Check, a),
        Cmd::Enumerate(a) => quandle_config(Command::Enumerate, a),
        Cmd::Witness(a) => quandle_config(Command::Witness, a),
        Cmd::Census { max_order, common } => {
            let mut cfg = RunConfig::new(Command::Census);
            cfg.max_order = max_order;
            apply(common, &mut cfg);
            cfg
        }
        Cmd::VerifyPaper { common } => {
            let mut cfg = RunConfig::new(Command::VerifyPaper);
            apply(common, &mut cfg);
            cfg
        }
    };
    ExitCode::from(run_and_write(&cfg) as u8)
}

fn quandle_config(command: Command, a: QuandleArgs) -> RunConfig {
    let mut cfg = RunConfig::new(command);
    cfg.property = a.property;
    cfg.fail_on_no = a.fail_on_no;
    cfg.input = match (a.input, a.builtin) {
        (Some(p), _) => Some(InputSource::File(p)),
        (None, Some(b)) => Some(InputSource::Builtin(b)),
        (None, None) => None,
    };
    apply(a.common, &mut cfg);
    cfg
}
