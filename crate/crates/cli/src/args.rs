use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Over {
    R,
    K,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    #[default]
    Plain,
    DiffAffine,
    Additive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SigmaAction {
    Build,
    Tame,
    Diffaffine,
    Ht,
    Witness,
}

#[derive(Debug, Parser)]
#[command(name = "autotame", version, about = "Automorphisms of F_p[t][x,y] and F_p(t)[x,y]")]
pub struct Cli {
    /// Characteristic: a prime, or 0 for rational sanity checks.
    #[arg(long, global = true, default_value_t = 2)]
    pub p: u64,
    /// Coefficient ring; inferred per command when omitted.
    #[arg(long, global = true, value_enum, ignore_case = true)]
    pub over: Option<Over>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Search horizon for set containment on infinite sets.
    #[arg(long, global = true, default_value_t = 200)]
    pub bound: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Membership flags for the affine-like classes.
    Classify { auto: String },
    /// The product: first the left map, then the right.
    Compose { left: String, right: String },
    /// Inverse over the chosen ring; over R the inverse must be integral.
    Invert { auto: String },
    /// Jacobian matrix and its determinant.
    Jacobian { auto: String },
    /// Reduced (Aff, BA)-word and reduction trace.
    Decompose {
        auto: String,
        #[arg(long, value_enum, default_value_t = Mode::Plain)]
        mode: Mode,
    },
    /// Number of letters in a reduced word; 0 on Aff ∩ BA.
    Length { auto: String },
    /// Equivalence of two words modulo Aff ∩ BA.
    Equivalent { left: String, right: String },
    /// p-stability of an exponent set.
    Pstable { set: String },
    /// Containment of exponent sets, i.e. of the groups A^I ⊆ A^J.
    Order {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
    },
    /// Membership of a triangular map in A^I with its factorization.
    InAi {
        auto: String,
        #[arg(long = "I")]
        i: String,
    },
    /// Nagata-type σ(a,P,Q).
    Sigma {
        #[arg(value_enum)]
        action: SigmaAction,
        #[arg(long)]
        a: String,
        #[arg(long = "P")]
        big_p: String,
        #[arg(long = "Q")]
        big_q: String,
        /// Exponent set for `witness`; defaults to pmult.
        #[arg(long = "I", default_value = "pmult")]
        i: String,
    },
    /// Non-normality witness for A^I inside A^J.
    Witness {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
        #[arg(long)]
        a: String,
    },
    /// Reads one command per line from stdin.
    Batch,
}
