use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use robba_cli::{cmd_classify, cmd_gseries, cmd_limit, exit_code, parse_l, ClassifyArgs, CliError, Format, GseriesArgs, Report, RunConfig};
use trianguline_limits::LValue;

#[derive(Parser)]
#[command(name = "robba", version, about = "G-series congruences, limits of crystalline sequences and mod p reductions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    p: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Exit with status 1 when a verification fails.
    #[arg(long)]
    check: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Partial sums of G and their congruences.
    Gseries {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        r: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        /// Last cyclotomic factor kept; defaults to n_max + 2.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        depth: Option<u32>,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        prec: u32,
        /// Also check the gamma residues at this T-precision.
        #[arg(long)]
        t_prec: Option<usize>,
    },
    /// The sequence (k_n, a_n), its blow-up points and their limit.
    Limit {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: u32,
        #[arg(long = "L")]
        l: String,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
    },
    /// Mod p reduction of V_{k,L}.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: u32,
        #[arg(long = "L")]
        l: String,
        /// Use the full Galois group description where available.
        #[arg(long)]
        full: bool,
        /// One row per weight 3..=k.
        #[arg(long)]
        table: bool,
    },
}

fn config(c: &Common, k: u32, l: LValue) -> RunConfig {
    RunConfig { p: c.p, k, l, prec: 10, t_prec: 200, depth: 1, n_max: 1, format: c.format }
}

fn run(cli: Cli) -> Result<(Report, Format, bool), CliError> {
    match cli.cmd {
        Cmd::Gseries { common, r, n_max, depth, prec, t_prec } => {
            let cfg = RunConfig { prec, t_prec: t_prec.unwrap_or(200), depth: depth.unwrap_or(n_max + 2), n_max, ..config(&common, 3, LValue::Infinity) };
            let args = GseriesArgs { r, check: common.check, gamma: t_prec.is_some() };
            Ok((cmd_gseries(&cfg, &args)?, common.format, common.check))
        }
        Cmd::Limit { common, k, l, n_max } => {
            let cfg = RunConfig { n_max, ..config(&common, k, parse_l(&l, common.p)?) };
            Ok((cmd_limit(&cfg)?, common.format, common.check))
        }
        Cmd::Classify { common, k, l, full, table } => {
            let cfg = config(&common, k, parse_l(&l, common.p)?);
            Ok((cmd_classify(&cfg, &ClassifyArgs { full, table })?, common.format, common.check))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((report, format, checked)) => {
            // a closed pipe is not an error for a report
            let _ = writeln!(std::io::stdout(), "{}", report.render(format));
            ExitCode::from(exit_code(&report, checked) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 3 })
        }
    }
}
