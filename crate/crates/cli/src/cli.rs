use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_SEED: u64 = 0x5e0e;

#[derive(Parser, Debug)]
#[command(name = "seor", version, about = "Exact computations in the super extended Ovsienko-Roger algebra")]
pub struct Cli {
    /// Seed for randomized probes.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Mode window for identity checks and cohomology.
    #[arg(long, global = true)]
    pub window: Option<i64>,
    /// Level bound for induced modules, e.g. 2 or 3/2.
    #[arg(long, global = true)]
    pub weight_bound: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bracket of two vectors, e.g. `--x L:2 --y L:-2` or `--x "1/2*L:1 + W:0"`.
    Bracket {
        #[arg(long, default_value = "S")]
        alg: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Super skew-symmetry and super Jacobi on a window (default 8).
    JacobiCheck {
        #[arg(long, default_value = "S")]
        alg: String,
    },
    /// Annihilation superalgebra of a conformal algebra, relabelled onto a mode algebra.
    Annihilation {
        #[arg(long, default_value = "S")]
        alg: String,
        /// Also print the relabelled table.
        #[arg(long)]
        table: bool,
    },
    /// The embedding Sbar(1/2) -> Sbar(0) over Q(sqrt 2) (default window 5).
    PhiCheck,
    /// Second cohomology of Sbar(eps) on a window (default 8).
    H2 {
        #[arg(long)]
        epsilon: String,
        /// Also check the explicit cocycles and their independence.
        #[arg(long)]
        explicit: bool,
    },
    /// Verma module M(h1, h2, c1).
    Verma {
        #[command(flatten)]
        params: Params,
        /// Highest level, e.g. 2 or 3/2.
        #[arg(long)]
        max_level: Option<String>,
        /// Print only the level dimensions.
        #[arg(long)]
        dims: bool,
    },
    /// Singular vectors of M(h1, h2, c1) at one level.
    Singular {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value = "1/2")]
        level: String,
    },
    /// Induce a finite-dimensional q^(d,t)-module given as JSON (a path or `-`).
    Induce {
        #[arg(long)]
        module: PathBuf,
        #[arg(long, default_value_t = 0)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        t: u32,
    },
    /// Build a Whittaker module and check its conditions.
    Whittaker {
        #[command(flatten)]
        params: Params,
    },
    /// Degree reduction of a vector down to the coefficient space, or the simplicity probe with `--samples`.
    Claim1 {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Joint annihilator N(a,b,c), or an exhaustive search with `--search`.
    TopSpace {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        a: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        b: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 2)]
        c: i64,
        #[arg(long)]
        search: bool,
    },
    /// Least (r1, r2, r3) with S^(r1,r2,r3) v = 0.
    RestrictedProbe {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word: String,
        /// Probe this many random vectors instead of `--word`.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Derived series of q^(d,t).
    DerivedSeries {
        #[arg(long, default_value_t = 0)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        t: u32,
    },
}

/// Parameters of the modules: `M(h1, h2, c1)` for Verma, `(k, ψ, c1, c2)` for Whittaker.
#[derive(Args, Debug, Clone)]
pub struct Params {
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub h1: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub h2: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub c1: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub c2: String,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Character values `GEN=VALUE`, repeatable, e.g. `--psi W:1=1`.
    #[arg(long = "psi", allow_hyphen_values = true)]
    pub psi: Vec<String>,
    /// Make the Whittaker generating vector odd.
    #[arg(long)]
    pub odd: bool,
    /// Longest word kept in the Whittaker coefficient space.
    #[arg(long, default_value_t = 2)]
    pub inner_len: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Verma,
    Whittaker,
}

#[derive(Args, Debug, Clone)]
pub struct ModuleArgs {
    #[arg(long, value_enum, default_value_t = Kind::Whittaker)]
    pub kind: Kind,
    #[command(flatten)]
    pub params: Params,
}
