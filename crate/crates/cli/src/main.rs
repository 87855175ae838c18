//! `cayley-db`: distance-balance profiles, verification sweeps and censuses
//! for Cayley graphs.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or input
//! error, 3 a resource limit was hit.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cayley-db",
    version,
    about = "Distance-balance analysis of Cayley graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format (default: csv for census, text otherwise)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Worker threads
    #[arg(long, global = true, env = "CAYLEY_DB_THREADS",
          value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    /// Unbalanced pairs recorded per distance
    #[arg(long, global = true, default_value_t = 16)]
    pub witness_cap: usize,

    /// Record every unbalanced pair
    #[arg(long, global = true, conflicts_with = "witness_cap")]
    pub all_witnesses: bool,

    /// Accept non-generating sets and report the disconnected graph
    #[arg(long, global = true)]
    pub permissive: bool,

    /// Include wall-clock times in verify output
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every distance of one Cayley graph
    Profile(ProfileArgs),
    /// Run the exhaustive verification sweeps
    Verify(VerifyArgs),
    /// Enumerate a dihedral family and profile each member
    Census(CensusArgs),
    /// Profile the built-in example graphs
    Examples,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("group").required(true)
    .args(["dihedral", "cyclic", "perm", "table"])))]
pub struct ProfileArgs {
    /// Dihedral group D_N of order 2N
    #[arg(long, value_name = "N")]
    pub dihedral: Option<usize>,

    /// Cyclic group Z_N
    #[arg(long, value_name = "N")]
    pub cyclic: Option<usize>,

    /// Permutation group generated by 1-based cycles, e.g. "(1 2 3), (1 2)(3 4)"
    #[arg(long, value_name = "CYCLES")]
    pub perm: Option<String>,

    /// Degree of the permutation group (default: largest moved point)
    #[arg(long, requires = "perm")]
    pub degree: Option<usize>,

    /// Group given by a JSON multiplication table `{"table": [[..]], "labels": [..]}`
    #[arg(long, value_name = "FILE")]
    pub table: Option<PathBuf>,

    /// Connection set, comma separated (defaults to the --perm generators)
    #[arg(long, value_name = "ELEMENTS")]
    pub gens: Option<String>,

    /// Also write the graph itself to FILE
    #[arg(long, value_name = "FILE")]
    pub export: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = ExportFormat::Edges, requires = "export")]
    pub export_format: ExportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Edges,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest n for the dihedral sweeps
    #[arg(long, default_value_t = 64)]
    pub max_n: usize,

    /// Run a single check
    #[arg(long, value_name = "CHECK")]
    pub only: Option<String>,

    /// Seed for the sampled circulant check
    #[arg(long, default_value_t = 0x5EED)]
    pub seed: u64,

    /// Number of sampled circulants
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    S1,
    S2,
    Half,
    Refl3,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DedupeArg {
    None,
    Shift,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,

    /// Range of n: `A..B`, `A..=B` (both inclusive) or a single value
    #[arg(long, value_name = "RANGE", value_parser = parse_range)]
    pub n: std::ops::RangeInclusive<usize>,

    /// Largest connection set for the general family
    #[arg(long, default_value_t = 3)]
    pub max_size: usize,

    #[arg(long, value_enum, default_value_t = DedupeArg::None)]
    pub dedupe: DedupeArg,
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("'{t}' is not a non-negative integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(commands::exit_code_for(&err))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..20"), Ok(4..=20));
        assert_eq!(parse_range("4..=20"), Ok(4..=20));
        assert_eq!(parse_range("7"), Ok(7..=7));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("x..3").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
