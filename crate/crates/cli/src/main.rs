//! `mzl`: command-line frontend for the motivic zeta lab.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "mzl", version, about = "Exact Hodge-realized motivic zeta computations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Zeta-function coefficients and Hankel determinants.
    #[command(subcommand)]
    Zeta(ZetaCommand),
    /// Certificates, reconstruction and the implication-chain probe.
    #[command(subcommand)]
    Rationality(RationalityCommand),
    /// Determinant expansion and genus separation.
    #[command(subcommand)]
    Claim(ClaimCommand),
    /// Genus-separation witness for a surface with P_g >= 2.
    Witness(WitnessArgs),
    /// Genus polynomial, E-polynomial and stable invariance of a diamond.
    Genus(GenusArgs),
}

#[derive(Subcommand, Debug)]
enum ZetaCommand {
    /// Coefficients [Sym^n X] for n < terms.
    Coeffs(SeriesArgs),
    /// Hankel determinants of one window size over the zeta prefix.
    Hankel {
        #[command(flatten)]
        series: SeriesArgs,
        /// Window size s (s x s determinants).
        #[arg(long)]
        window: usize,
    },
}

#[derive(Subcommand, Debug)]
enum RationalityCommand {
    /// Minimal certificate h/g over Q with deg g <= max-deg.
    Reconstruct {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "max-deg")]
        max_deg: usize,
    },
    /// Check a certificate g*f = h against a series prefix.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Certificate JSON: {"g": [...], "h": [...], "verified_to": k}.
        #[arg(long)]
        cert: String,
    },
    /// Seeded global => determinantal => pointwise probe over Z[u,v].
    Probe {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ClaimCommand {
    /// Compare every term's genus product with the identity term's.
    Verify {
        #[arg(long)]
        pg: u64,
        #[arg(long)]
        n: usize,
        /// Inclusive range a:b.
        #[arg(long, value_parser = commands::parse_range)]
        m: (u64, u64),
    },
    /// List the signed terms of the determinant expansion.
    Expand {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u64,
        /// Also attach genus products for this P_g.
        #[arg(long)]
        pg: Option<u64>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SeriesArgs {
    /// Hodge diamond JSON file.
    #[arg(long)]
    pub diamond: String,
    /// Number of coefficients a_0..a_{terms-1}.
    #[arg(long, default_value_t = mzl_core::zeta::DEFAULT_ORDER + 1)]
    pub terms: usize,
    /// Multiply every coefficient by L^{-N}.
    #[arg(long = "invert-L")]
    pub invert_l: Option<i64>,
    /// Specialize at u=U, v=V.
    #[arg(long, value_parser = commands::parse_point, allow_hyphen_values = true)]
    pub eval: Option<(i64, i64)>,
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Series JSON file ({"ring": ..., "coeffs": [...]}).
    #[arg(long, conflicts_with = "diamond")]
    pub series: Option<String>,
    #[arg(long)]
    pub diamond: Option<String>,
    #[arg(long, default_value_t = mzl_core::zeta::DEFAULT_ORDER + 1)]
    pub terms: usize,
    #[arg(long = "invert-L")]
    pub invert_l: Option<i64>,
    #[arg(long, value_parser = commands::parse_point, allow_hyphen_values = true)]
    pub eval: Option<(i64, i64)>,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[arg(long)]
    diamond: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = commands::parse_range)]
    m: (u64, u64),
    /// Extra power of L to stabilize by (0, 1 and 5 are always checked).
    #[arg(long = "invert-L")]
    invert_l: Option<usize>,
}

#[derive(Args, Debug)]
struct GenusArgs {
    #[arg(long)]
    diamond: String,
    /// n for the X x P^n invariance check.
    #[arg(long, default_value_t = 1)]
    stable: usize,
}

fn configure_threads() {
    if let Some(n) = std::env::var("MZL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            // Only fails if a global pool already exists.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let fmt = cli.format;
    let result = match cli.command {
        Command::Zeta(ZetaCommand::Coeffs(args)) => commands::zeta_coeffs(&args, fmt),
        Command::Zeta(ZetaCommand::Hankel { series, window }) => commands::zeta_hankel(&series, window, fmt),
        Command::Rationality(RationalityCommand::Reconstruct { input, max_deg }) => {
            commands::reconstruct(&input, max_deg, fmt)
        }
        Command::Rationality(RationalityCommand::Check { input, cert }) => commands::check(&input, &cert, fmt),
        Command::Rationality(RationalityCommand::Probe { seed, samples }) => commands::probe(seed, samples, fmt),
        Command::Claim(ClaimCommand::Verify { pg, n, m }) => commands::claim_verify(pg, n, m, fmt),
        Command::Claim(ClaimCommand::Expand { n, m, pg }) => commands::claim_expand(n, m, pg, fmt),
        Command::Witness(w) => commands::witness(&w.diamond, w.n, w.m, w.invert_l, fmt),
        Command::Genus(g) => commands::genus(&g.diamond, g.stable, fmt),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
