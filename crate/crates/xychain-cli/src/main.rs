//! Command-line driver for ground-state pair-entanglement sweeps.

use std::fs::File;
use std::io::{self, BufWriter};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use xychain::{Boundary, ChainSpec, ProfileParams};
use xychain_cli::presets::{default_output_name, preset_config, PRESET_NAMES};
use xychain_cli::sweep::{
    default_pairs, dump_profile_csv, parse_lambda_grid, rows_to_csv, run_oracle_sweep, run_sweep,
    write_document, SweepConfig, VaryParam,
};

/// Ground-state pair entanglement of an anisotropic spin-1/2 chain with
/// impurity-shaped couplings and fields.
#[derive(Parser)]
#[command(name = "xychain", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the coupling grid through the free-fermion pipeline, emit CSV
    Sweep(SweepArgs),
    /// Same sweep through the brute-force dense solver (at most 14 sites)
    Oracle(SweepArgs),
    /// Print the per-site impurity profiles and couplings of one chain
    DumpProfile(DumpArgs),
    /// Run a named figure-reproduction preset
    Preset(PresetArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundaryArg {
    Open,
    Periodic,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistArg {
    /// No impurity: uniform couplings and fields
    Pure,
    /// Single Gaussian bump (weight 1, width 0.1)
    Gaussian,
    /// Two overlapping Gaussians (equal weight, width 0.1)
    DoubleGaussian,
    /// Two narrow spikes (equal weight, width 10)
    Bimodal,
}

#[derive(Args)]
struct PhysicsArgs {
    /// Number of sites
    #[arg(long, default_value_t = 101)]
    n: usize,
    /// Anisotropy in [0, 1]; 1 couples only the x components
    #[arg(long, default_value_t = 1.0)]
    gamma: f64,
    /// Chain topology
    #[arg(long, value_enum, default_value_t = BoundaryArg::Open)]
    boundary: BoundaryArg,
    /// Impurity shape for both the coupling and field profiles
    #[arg(long, value_enum, default_value_t = DistArg::Pure)]
    dist: DistArg,
    /// First coupling-impurity strength (ignored for --dist pure)
    #[arg(long, default_value_t = 0.0)]
    zeta1: f64,
    /// Second coupling-impurity strength
    #[arg(long, default_value_t = 0.0)]
    zeta2: f64,
    /// First field-impurity strength (ignored for --dist pure)
    #[arg(long, default_value_t = 0.0)]
    xi1: f64,
    /// Second field-impurity strength
    #[arg(long, default_value_t = 0.0)]
    xi2: f64,
    /// Override the Gaussian width of the impurity shape
    #[arg(long)]
    epsilon: Option<f64>,
    /// Override the weight of the first impurity bump
    #[arg(long)]
    p: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    physics: PhysicsArgs,
    /// Coupling grid as start:stop:step
    #[arg(long, default_value = "0:4:0.02", value_name = "START:STOP:STEP")]
    lambda: String,
    /// Site pair to evaluate, 1-based; repeatable (default: central bonds)
    #[arg(long = "pair", value_name = "L,M")]
    pairs: Vec<String>,
    /// Impurity parameter varied across curves, e.g. zeta2=0.3,0.6,1
    /// (parameters: zeta2, xi2, zeta_all, xi_all, epsilon, none)
    #[arg(long, value_name = "PARAM=V1,V2,...")]
    vary: Option<String>,
    /// Output CSV path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DumpArgs {
    #[command(flatten)]
    physics: PhysicsArgs,
    /// Reduced coupling used for the J column
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    /// Output CSV path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PresetArgs {
    /// Preset name
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(PRESET_NAMES))]
    name: String,
    /// Output CSV path (default: <name>.csv in the working directory)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn chain_spec(args: &PhysicsArgs, lambda: f64) -> ChainSpec {
    let (mut alpha, mut beta) = match args.dist {
        DistArg::Pure => (ProfileParams::pure(), ProfileParams::pure()),
        DistArg::Gaussian => (
            ProfileParams::gaussian(args.zeta1),
            ProfileParams::gaussian(args.xi1),
        ),
        DistArg::DoubleGaussian => (
            ProfileParams::double_gaussian(args.zeta1, args.zeta2),
            ProfileParams::double_gaussian(args.xi1, args.xi2),
        ),
        DistArg::Bimodal => (
            ProfileParams::bimodal(args.zeta1, args.zeta2),
            ProfileParams::bimodal(args.xi1, args.xi2),
        ),
    };
    if let Some(eps) = args.epsilon {
        alpha.width = eps;
        beta.width = eps;
    }
    if let Some(p) = args.p {
        alpha.weight = p;
        beta.weight = p;
    }
    let mut spec = ChainSpec::pure(
        args.n,
        args.gamma,
        lambda,
        match args.boundary {
            BoundaryArg::Open => Boundary::Open,
            BoundaryArg::Periodic => Boundary::Periodic,
        },
    );
    spec.alpha = alpha;
    spec.beta = beta;
    spec
}

fn parse_pair(text: &str) -> Result<(usize, usize)> {
    let (l, m) = text
        .split_once(',')
        .ok_or_else(|| anyhow!("pair must be l,m, got {text:?}"))?;
    let l = l.trim().parse::<usize>().context("bad left site in pair")?;
    let m = m.trim().parse::<usize>().context("bad right site in pair")?;
    Ok((l, m))
}

fn parse_vary(text: &str) -> Result<(VaryParam, Vec<f64>)> {
    let (name, values) = match text.split_once('=') {
        Some((name, values)) => (name.trim(), Some(values)),
        None => (text.trim(), None),
    };
    let param = VaryParam::parse(name).ok_or_else(|| {
        anyhow!("unknown vary parameter {name:?} (use zeta2, xi2, zeta_all, xi_all, epsilon or none)")
    })?;
    match (param, values) {
        (VaryParam::None, None) => Ok((param, Vec::new())),
        (VaryParam::None, Some(_)) => bail!("vary parameter none takes no values"),
        (_, None) => bail!("vary parameter {name} requires =v1,v2,..."),
        (_, Some(list)) => {
            let values = list
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<f64>()
                        .with_context(|| format!("bad vary value {v:?}"))
                })
                .collect::<Result<Vec<f64>>>()?;
            if values.is_empty() {
                bail!("vary parameter {name} requires at least one value");
            }
            Ok((param, values))
        }
    }
}

fn sweep_config(args: &SweepArgs) -> Result<SweepConfig> {
    let lambda_grid = parse_lambda_grid(&args.lambda).map_err(|e| anyhow!(e))?;
    let base = chain_spec(&args.physics, lambda_grid[0]);
    let pairs = if args.pairs.is_empty() {
        default_pairs(args.physics.n)
    } else {
        args.pairs
            .iter()
            .map(|p| parse_pair(p))
            .collect::<Result<Vec<_>>>()?
    };
    let (vary, vary_values) = match &args.vary {
        None => (VaryParam::None, Vec::new()),
        Some(text) => parse_vary(text)?,
    };
    Ok(SweepConfig {
        base,
        lambda_grid,
        vary,
        vary_values,
        pairs,
    })
}

fn emit(doc: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            let mut w = BufWriter::new(file);
            write_document(doc, &mut w)
                .with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            let stdout = io::stdout();
            write_document(doc, &mut stdout.lock()).context("cannot write to stdout")
        }
    }
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Sweep(args) => {
            let config = sweep_config(&args)?;
            let rows = run_sweep(&config)?;
            emit(&rows_to_csv(&rows), args.out.as_deref())
        }
        Command::Oracle(args) => {
            let config = sweep_config(&args)?;
            let rows = run_oracle_sweep(&config)?;
            emit(&rows_to_csv(&rows), args.out.as_deref())
        }
        Command::DumpProfile(args) => {
            let spec = chain_spec(&args.physics, args.lambda);
            let doc = dump_profile_csv(&spec)?;
            emit(&doc, args.out.as_deref())
        }
        Command::Preset(args) => {
            let config = preset_config(&args.name)
                .ok_or_else(|| anyhow!("unknown preset {}", args.name))?;
            let rows = run_sweep(&config)?;
            let path = args
                .out
                .clone()
                .unwrap_or_else(|| PathBuf::from(default_output_name(&args.name)));
            emit(&rows_to_csv(&rows), Some(&path))?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
    }
}
