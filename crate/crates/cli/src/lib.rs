//! Command-line front end for `flagherm`.

pub mod commands;
pub mod config;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flagherm::Result;

use commands::{Outcome, Table};
use config::{parse_epsilon, parse_index_list, parse_lambda, CertifyLevel, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "flagherm", version, about = "Exact invariant almost Hermitian geometry of flag manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Roots, R(Theta), summand classes and dimensions.
    Build,
    /// Gray-Hervella classes of one invariant structure.
    Classify,
    /// Run one of the verification harnesses.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Certificate for one sub-flag and one structure.
    Subflag,
    /// Dump a table of constants.
    EmitTable {
        #[arg(value_enum)]
        table: TableArg,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum Verify {
    /// Codifferential of the Kähler form vanishes on every flag (sweep).
    Ask,
    /// SK passes to sub-flags (sweep over ranks, Theta and Theta').
    Sk,
    /// Sub-flags are totally geodesic and minimal.
    Tg,
    /// Weyl-basis identities.
    Basis,
    /// The worked SU(8) example.
    Example,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum TableArg {
    N,
    R,
    Summands,
}

#[derive(Args, Debug, Default)]
pub struct Opts {
    /// JSON run configuration; flags given on the command line win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub family: Option<String>,
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// 1-based simple-root indices, e.g. "1,2,5"; "" for the maximal flag.
    #[arg(long, global = true)]
    pub theta: Option<String>,
    #[arg(long, global = true)]
    pub theta_prime: Option<String>,
    /// One value per summand class, "random" or "killing".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// "+,-,+", "all" or "canonical".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub epsilon: Option<String>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true)]
    pub max_rank: Option<usize>,
    /// Sweep every Theta as well as every Theta'.
    #[arg(long, global = true)]
    pub sweep: bool,
    /// core or full.
    #[arg(long, global = true)]
    pub certify: Option<String>,
    #[arg(long, global = true)]
    pub json: bool,
    /// Add decimal values next to exact ones (display only).
    #[arg(long, global = true)]
    pub approx: bool,
}

impl Opts {
    /// Layers the flags over the config file (or the defaults).
    pub fn resolve(&self) -> Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(p) => RunConfig::from_file(p)?,
            None => RunConfig::default(),
        };
        if let Some(f) = &self.family {
            cfg.family = f.parse()?;
        }
        if let Some(r) = self.rank {
            cfg.rank = r;
        }
        if let Some(t) = &self.theta {
            cfg.theta = parse_index_list(t)?;
        }
        if let Some(t) = &self.theta_prime {
            cfg.theta_prime = Some(parse_index_list(t)?);
        }
        if let Some(l) = &self.lambda {
            cfg.lambda = parse_lambda(l)?;
        }
        if let Some(e) = &self.epsilon {
            cfg.epsilon = parse_epsilon(e)?;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if self.samples.is_some() {
            cfg.samples = self.samples;
        }
        if let Some(m) = self.max_rank {
            cfg.max_rank = m;
        }
        if let Some(c) = &self.certify {
            cfg.certify = Some(c.parse::<CertifyLevel>()?);
        }
        cfg.sweep |= self.sweep;
        cfg.json |= self.json;
        cfg.approx |= self.approx;
        Ok(cfg)
    }
}

pub fn execute(command: &Command, cfg: &RunConfig) -> Result<Outcome> {
    match command {
        Command::Build => commands::build(cfg),
        Command::Classify => commands::classify(cfg),
        Command::Subflag => commands::subflag(cfg),
        Command::Verify { what } => match what {
            Verify::Ask => commands::verify_ask(cfg),
            Verify::Sk => commands::verify_sk(cfg),
            Verify::Tg => commands::verify_tg(cfg),
            Verify::Basis => commands::verify_basis(cfg),
            Verify::Example => commands::verify_example(cfg),
        },
        Command::EmitTable { table } => commands::emit_table(
            cfg,
            match table {
                TableArg::N => Table::N,
                TableArg::R => Table::R,
                TableArg::Summands => Table::Summands,
            },
        ),
    }
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

/// Parses `args`, runs the command and returns (stdout, stderr, exit code).
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_PASS };
            return (String::new(), e.to_string(), code);
        }
    };
    let result = cli.opts.resolve().and_then(|cfg| Ok((execute(&cli.command, &cfg)?, cfg)));
    match result {
        Ok((out, cfg)) => {
            let body = if cfg.json {
                let mut s = serde_json::to_string_pretty(&out.json).expect("json value");
                s.push('\n');
                s
            } else {
                out.text
            };
            (body, String::new(), if out.passed { EXIT_PASS } else { EXIT_FAILED })
        }
        Err(e) => (String::new(), format!("error: {e}\n"), EXIT_INVALID),
    }
}
