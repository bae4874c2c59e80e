use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::cache::CACHE_DIR_ENV;

#[derive(Debug, Parser)]
#[command(name = "hurwitz", version, about = "Exact Hurwitz numbers of the sphere")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build (or export) the character table of S(d).
    Chartable(ChartableArgs),
    /// Evaluate a single Hurwitz number.
    Number(NumberArgs),
    /// Spectral coefficients b(m) (connected) or b*(m) (disconnected).
    Spectrum(SpectrumArgs),
    /// Check the structure statements for the leading coefficients.
    Verify(CommonArgs),
    /// Relative remainder after the three leading large-genus terms.
    Asym(AsymArgs),
    /// Brute-force count over permutation tuples.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Degree of the covering.
    #[arg(long = "d")]
    pub d: usize,

    /// Fixed profiles, e.g. "3,1,1;2,2,1". Empty means none.
    #[arg(long, default_value = "")]
    pub profiles: String,

    /// Output format (defaults depend on the subcommand).
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Character table cache directory.
    #[arg(long, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,

    /// Also print decimal approximations (text format only).
    #[arg(long)]
    pub decimal: bool,
}

#[derive(Debug, Args)]
#[group(id = "flavor", multiple = false)]
pub struct FlavorArgs {
    /// Count connected covers (the default).
    #[arg(long, group = "flavor")]
    pub connected: bool,
    /// Count all covers, connected or not.
    #[arg(long, group = "flavor")]
    pub disconnected: bool,
}

impl FlavorArgs {
    pub fn is_connected(&self) -> bool {
        !self.disconnected
    }
}

#[derive(Debug, Args)]
pub struct ChartableArgs {
    #[arg(long = "d")]
    pub d: usize,

    #[arg(long, value_enum)]
    pub format: Option<Format>,

    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,

    /// Largest degree accepted.
    #[arg(long, default_value_t = 12)]
    pub max_degree: usize,
}

#[derive(Debug, Args)]
#[group(id = "count", required = true, multiple = false)]
pub struct CountArgs {
    /// Genus of the cover (connected only).
    #[arg(long = "g", group = "count")]
    pub g: Option<usize>,

    /// Number of simple branch points.
    #[arg(long = "k", group = "count")]
    pub k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct NumberArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub flavor: FlavorArgs,
    #[command(flatten)]
    pub count: CountArgs,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub flavor: FlavorArgs,

    /// Disconnected only: pick the parity class of this transposition count
    /// (default: the class where the numbers are nonzero).
    #[arg(long = "k")]
    pub k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AsymArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    #[arg(long = "g")]
    pub g: usize,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub flavor: FlavorArgs,

    #[arg(long = "k")]
    pub k: usize,

    /// Largest degree enumerated without restriction; one more is allowed
    /// with at most 6 transpositions.
    #[arg(long, default_value_t = 4)]
    pub max_bruteforce: usize,
}
