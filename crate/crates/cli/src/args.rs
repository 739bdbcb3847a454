use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "cfgsg", version, about = "Combinatorial configurations and their numerical semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants and gaps of the semigroup generated by the given integers
    Semigroup {
        #[arg(long, value_delimiter = ',', required = true)]
        generators: Vec<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Check whether a semigroup admits a linear pattern such as X1+X2-1
    Pattern {
        #[arg(long, value_delimiter = ',', required = true)]
        generators: Vec<u64>,
        #[arg(long)]
        pattern: String,
        /// Let 0 take part in the tuples
        #[arg(long)]
        include_zero: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build a configuration and print it as incidence JSON
    Construct {
        #[command(subcommand)]
        kind: Construct,
        /// Write to this file instead of stdout
        #[arg(short = 'o', long, global = true)]
        output: Option<PathBuf>,
    },
    /// Validate incidence JSON as an (r,k)-configuration; exit 0 iff valid
    Validate {
        /// Read from this file instead of stdin
        #[arg(long)]
        input: Option<PathBuf>,
        /// Overrides the file's r
        #[arg(long = "r")]
        r: Option<usize>,
        /// Overrides the file's k
        #[arg(long = "k")]
        k: Option<usize>,
    },
    /// Constructible associated integers up to a limit
    Closure {
        #[arg(long = "r")]
        r: usize,
        #[arg(long = "k")]
        k: usize,
        #[arg(long)]
        limit: u64,
        /// Include a construction recipe for every member
        #[arg(long)]
        recipes: bool,
    },
    /// Shortest Golomb ruler of an order
    Golomb {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 127)]
        max_length: u32,
    },
    /// Regenerate the bound tables
    Bounds {
        #[command(subcommand)]
        table: Table,
    },
    /// Exhaustive existence search for a (v,b,r,k)-configuration
    Exists {
        #[arg(long = "v")]
        v: usize,
        #[arg(long = "b")]
        b: usize,
        #[arg(long = "r")]
        r: usize,
        #[arg(long = "k")]
        k: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// r parallel classes of AG(2,q) restricted to k lines of another class
    Affine {
        #[arg(long = "r")]
        r: usize,
        #[arg(long = "k")]
        k: usize,
        #[arg(long = "q")]
        q: u64,
    },
    /// Translates of a Golomb ruler modulo v
    Cyclic {
        #[arg(long, value_delimiter = ',', required = true)]
        ruler: Vec<u32>,
        #[arg(long = "v")]
        v: usize,
    },
    /// The projective plane PG(2,q)
    Projective {
        #[arg(long = "q")]
        q: u64,
    },
    /// The affine plane AG(2,q), with its parallel classes
    Plane {
        #[arg(long = "q")]
        q: u64,
    },
    /// Glue two (r,k)-configurations, giving associated integer d_A + d_B - n
    Glue {
        #[arg(long = "a")]
        a: PathBuf,
        #[arg(long = "b")]
        b: PathBuf,
        #[arg(long = "r")]
        r: usize,
        #[arg(long = "k")]
        k: usize,
        #[arg(long = "n")]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Table {
    /// Balanced (r,r) bounds
    Table1 {
        #[arg(long, default_value_t = 9)]
        rmax: u64,
        /// Search rulers up to this order, use the bundled table beyond
        #[arg(long, default_value_t = cfgsg_core::golomb::CERTIFIED_ORDER)]
        search_up_to: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Coprime (r,k) bounds
    Table2 {
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct Format {
    #[arg(long)]
    pub csv: bool,
    #[arg(long)]
    pub json: bool,
}
