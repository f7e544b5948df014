use std::path::PathBuf;

use bbw_tilt::{Weight, DEFAULT_CUTOFF};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bbw-tilt",
    version,
    about = "Bott-algorithm cohomology and tilting checks on cotangent bundles of Grassmannians"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads (default: BBW_TILT_THREADS, else all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct GrassmannArgs {
    /// Rank of the tautological subbundle.
    #[arg(long)]
    pub k: usize,
    /// Dimension of the ambient vector space.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cohomology of O(delta) on the full flag variety.
    Bott {
        #[arg(required = true, allow_negative_numbers = true, num_args = 1..)]
        delta: Vec<i64>,
    },
    /// Littlewood-Richardson expansion of two partitions.
    Lr {
        #[arg(value_parser = parse_entries)]
        lambda: Entries,
        #[arg(value_parser = parse_entries)]
        mu: Entries,
        #[arg(long)]
        rank: usize,
    },
    /// Hom^i(S^alpha U, S^beta U ⊗ Sym^d T) on G(k, n) for a single d.
    HomGrassmann {
        #[command(flatten)]
        ctx: GrassmannArgs,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        alpha: Weight,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        beta: Weight,
        #[arg(long)]
        sym_degree: u32,
    },
    /// Graded Hom profile on T*G(k, n) for symmetric degrees 0..=cutoff.
    HomTotal {
        #[command(flatten)]
        ctx: GrassmannArgs,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        alpha: Weight,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        beta: Weight,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: u32,
        /// Exit with status 2 if any entry has cohomological degree >= this.
        #[arg(long)]
        vanish_from: Option<usize>,
    },
    /// Hom^i between all members of a collection, i != 0.
    CheckTilting {
        #[command(flatten)]
        ctx: GrassmannArgs,
        /// Semicolon-separated weights, e.g. "0 0; 1 1" or "0,0;1,1".
        #[arg(long, value_parser = parse_collection, allow_hyphen_values = true)]
        collection: Collection,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: u32,
    },
    /// H^i(T*G, O(j)) = 0 for i > 0 and 0 <= j <= jmax.
    CheckVanishing {
        #[command(flatten)]
        ctx: GrassmannArgs,
        #[arg(long)]
        jmax: u32,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: u32,
    },
    /// Reproduce one of the worked examples.
    #[command(subcommand)]
    Reproduce(Reproduce),
    /// Run the oracle suites.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Reproduce {
    /// Case table for Hom^i(O, O(-j)) on T*G(2,4), j = 1, 2, 3.
    G24 {
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: u32,
    },
    /// Ext table of O, O(-1), ..., O(-n) on P^n.
    Beilinson { n: usize },
    /// Tilting check for O, O(-1), ..., O(-n) pulled back to T*P^n.
    Tpn {
        n: usize,
        #[arg(long, default_value_t = 20)]
        cutoff: u32,
    },
}

#[derive(Debug, Clone)]
pub struct Entries(pub Vec<i64>);

#[derive(Debug, Clone)]
pub struct Collection(pub Vec<Weight>);

/// Integers separated by commas and/or whitespace.
pub fn parse_entries(s: &str) -> Result<Entries, String> {
    split_entries(s).map(Entries)
}

fn split_entries(s: &str) -> Result<Vec<i64>, String> {
    let entries: Vec<i64> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    if entries.is_empty() {
        return Err("expected at least one integer".into());
    }
    Ok(entries)
}

pub fn parse_weight(s: &str) -> Result<Weight, String> {
    Weight::new(split_entries(s)?).map_err(|e| e.to_string())
}

pub fn parse_collection(s: &str) -> Result<Collection, String> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(parse_weight)
        .collect::<Result<_, _>>()
        .map(Collection)
}
