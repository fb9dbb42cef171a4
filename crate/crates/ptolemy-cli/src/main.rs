//! Command-line surface for the ptolemy library: counting tables,
//! enumeration streams, orbit counts, cyclic sieving verification, and
//! generating-function cross-checks.
//!
//! Polygon size is always given as `--n-gon <VERTICES>`, the human-facing
//! vertex count; the library indexes polygons by `N = VERTICES - 1`.  Data
//! goes to standard output, diagnostics to standard error.  Exit codes:
//! 0 success, 1 a verification check failed, 2 usage or validation error.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "ptolemy",
    version,
    about = "Exact counting, enumeration and cyclic sieving checks for Ptolemy diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form diagram counts per region class
    Count(CountArgs),
    /// Stream diagrams as canonical encodings
    Enum(EnumArgs),
    /// Rotation orbit counts per region class
    Orbits(OrbitsArgs),
    /// Verify the cyclic sieving identities
    Csp(CspArgs),
    /// Cross-check generating-function coefficients against the formulas
    SeriesCheck(SeriesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    TextTable,
    Csv,
    Json,
    Ndjson,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Formula,
    Enumeration,
    Both,
}

fn parse_class(text: &str) -> Result<(u32, u32, u32), String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err("expected three comma-separated counts: triangles,cliques,empty-cells".into());
    }
    let nums: Result<Vec<u32>, _> = parts.iter().map(|p| p.trim().parse()).collect();
    let nums = nums.map_err(|e| format!("bad class component: {e}"))?;
    Ok((nums[0], nums[1], nums[2]))
}

/// Class selection shared by the table-producing subcommands.
#[derive(Args)]
struct ClassFilter {
    /// Exact class as `triangles,cliques,empty-cells`
    #[arg(long, value_parser = parse_class, conflicts_with_all = ["triangles", "cliques", "empty_cells"])]
    stats: Option<(u32, u32, u32)>,
    /// Keep only classes with this many triangles
    #[arg(long)]
    triangles: Option<u32>,
    /// Keep only classes with this many cliques of size at least four
    #[arg(long)]
    cliques: Option<u32>,
    /// Keep only classes with this many empty cells of size at least four
    #[arg(long, value_name = "EMPTY_CELLS")]
    empty_cells: Option<u32>,
}

impl ClassFilter {
    fn admits(&self, class: (u32, u32, u32)) -> bool {
        if let Some(stats) = self.stats {
            return class == stats;
        }
        self.triangles.is_none_or(|t| class.0 == t)
            && self.cliques.is_none_or(|c| class.1 == c)
            && self.empty_cells.is_none_or(|e| class.2 == e)
    }
}

#[derive(Args)]
struct CountArgs {
    /// Number of polygon vertices (the library's N + 1)
    #[arg(long = "n-gon", value_name = "VERTICES")]
    n_gon: u32,
    #[command(flatten)]
    class: ClassFilter,
    /// Count only diagrams fixed by the rotation of this order
    #[arg(long, value_name = "ORDER", conflicts_with = "perp")]
    rotation_order: Option<u32>,
    /// Count only diagrams fixed by this power of the perpendicular map
    #[arg(long, value_name = "POWER")]
    perp: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::TextTable)]
    format: Format,
}

#[derive(Args)]
struct EnumArgs {
    /// Number of polygon vertices (the library's N + 1)
    #[arg(long = "n-gon", value_name = "VERTICES")]
    n_gon: u32,
    #[command(flatten)]
    class: ClassFilter,
    /// Emit only diagrams fixed by the rotation of this order
    #[arg(long, value_name = "ORDER", conflicts_with = "perp")]
    rotation_order: Option<u32>,
    /// Emit only diagrams fixed by this power of the perpendicular map
    #[arg(long, value_name = "POWER")]
    perp: Option<u32>,
    /// Stop after this many diagrams (truncation is noted on stderr)
    #[arg(long, value_name = "COUNT")]
    limit: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::TextTable)]
    format: Format,
}

#[derive(Args)]
struct OrbitsArgs {
    /// Number of polygon vertices (the library's N + 1)
    #[arg(long = "n-gon", value_name = "VERTICES")]
    n_gon: u32,
    #[command(flatten)]
    class: ClassFilter,
    /// Recompute each orbit count by enumeration and compare
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value_t = Format::TextTable)]
    format: Format,
}

#[derive(Args)]
struct CspArgs {
    /// Number of polygon vertices (the library's N + 1)
    #[arg(long = "n-gon", value_name = "VERTICES")]
    n_gon: u32,
    /// Exact class as `triangles,cliques,empty-cells`; default all classes
    #[arg(long, value_parser = parse_class)]
    stats: Option<(u32, u32, u32)>,
    /// What the root-of-unity values are compared against
    #[arg(long, value_enum, default_value_t = Mode::Formula)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::TextTable)]
    format: Format,
}

#[derive(Args)]
struct SeriesArgs {
    /// Largest z-degree (library N) to check
    #[arg(long)]
    degree: u32,
    /// Check the fixed-diagram series for this rotation order instead
    #[arg(long, value_name = "ORDER")]
    invariant: Option<u32>,
    /// Dump the checked coefficients as CSV on standard output
    #[arg(long)]
    dump_coefficients: bool,
}

/// Vertex cap for subcommands that enumerate diagrams; the work grows
/// roughly eightfold per vertex, so this guards against accidents.
fn enum_vertex_limit() -> anyhow::Result<u32> {
    match std::env::var("PTOLEMY_ENUM_LIMIT") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|e| anyhow::anyhow!("PTOLEMY_ENUM_LIMIT: {e}")),
        Err(std::env::VarError::NotPresent) => Ok(12),
        Err(e) => Err(anyhow::anyhow!("PTOLEMY_ENUM_LIMIT: {e}")),
    }
}

fn require_within_limit(n_vertices: u32) -> anyhow::Result<()> {
    let limit = enum_vertex_limit()?;
    if n_vertices > limit {
        anyhow::bail!(
            "{n_vertices} vertices exceeds the enumeration limit of {limit} \
             (override with PTOLEMY_ENUM_LIMIT)"
        );
    }
    Ok(())
}

fn polygon_index(n_gon: u32) -> anyhow::Result<u32> {
    if n_gon < 2 {
        anyhow::bail!("--n-gon must be at least 2, got {n_gon}");
    }
    Ok(n_gon - 1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(args) => commands::count(args),
        Command::Enum(args) => commands::enumerate(args),
        Command::Orbits(args) => commands::orbits(args),
        Command::Csp(args) => commands::csp(args),
        Command::SeriesCheck(args) => commands::series_check(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
