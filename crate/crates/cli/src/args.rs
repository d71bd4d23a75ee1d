use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fellow_core::DEFAULT_BUDGET;

#[derive(Parser, Debug)]
#[command(
    name = "fellow",
    version,
    about = "Normal forms, Cayley-graph balls and fellow-traveler divergence"
)]
pub struct Cli {
    /// Maximum number of group elements a ball may hold.
    #[arg(long, global = true, env = "FELLOW_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Size of the radius-R ball, or its sphere sizes as CSV.
    Ball {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, short)]
        radius: u32,
        /// Print `r,count` rows instead of the total.
        #[arg(long)]
        spheres: bool,
    },
    /// Normal form of the element a word evaluates to.
    Nf {
        #[command(flatten)]
        provider: ProviderArgs,
        #[arg(long, short, allow_hyphen_values = true)]
        word: String,
    },
    /// The divergence curve s_R(n) as CSV.
    Scurve {
        #[command(flatten)]
        provider: ProviderArgs,
        #[arg(long, short)]
        radius: u32,
        /// Starting radius of the distance ball (grown on demand).
        #[arg(long, default_value_t = 2)]
        distance_radius: u32,
        /// Also pair g with g·a⁻¹.
        #[arg(long)]
        include_inverses: bool,
        /// Write the CSV here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Report the least C with s(n) ≤ C·f(n) + C on stderr
        /// (const, log, sqrt, pow(α), identity).
        #[arg(long)]
        fit: Option<String>,
    },
    /// Check a property of the normal form on a ball; exit 1 on a violation.
    Check {
        #[command(flatten)]
        provider: ProviderArgs,
        /// prefix-closed, quasigeodesic:C, quasiregular:c or
        /// quasiprefix-closed:C.
        #[arg(long, short)]
        mode: String,
        /// Constant for a mode given without one.
        #[arg(long)]
        constant: Option<String>,
        #[arg(long, short)]
        radius: u32,
    },
    /// Normal forms of a transformed provider over a ball, as CSV.
    Transform {
        kind: TransformKind,
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        options: TransformOptions,
        #[arg(long, short, default_value_t = 2)]
        radius: u32,
    },
    /// Sharpness families with their divergence probes.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Baumslag–Solitar normal forms.
    Bs {
        #[command(subcommand)]
        command: BsCommand,
    },
    /// Lamplighter normal forms and the spiral.
    Lamp {
        #[command(subcommand)]
        command: LampCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum FamilyCommand {
    /// w = a^{mq²} against nf(π(w)·t), probed at n = mq.
    Bs {
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        params: BsArgs,
    },
    /// g_m = ({τ(m)}, origin) against g_m·c, probed at n = m + 1.
    Lamp {
        #[arg(long)]
        m: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum BsCommand {
    /// Normal form of a word.
    Nf {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        params: BsArgs,
    },
    /// Product of a normal form with one generator.
    Mul {
        normal_form: String,
        generator: String,
        #[command(flatten)]
        params: BsArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum LampCommand {
    /// Normal form of (lamps, position).
    Nf {
        /// Lit lamps as `x1,y1;x2,y2;…`.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        lamps: String,
        /// Lamplighter position as `x,y`.
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        pos: String,
    },
    /// Coordinates of the k-th spiral point.
    Spiral { k: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupName {
    Z,
    Z2,
    Bs,
    Lamp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    FirstWay,
    SecondWay,
    QpcClosure,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BsArgs {
    #[arg(long, default_value_t = 1)]
    pub p: u32,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    #[arg(long, short, value_enum)]
    pub group: GroupName,
    #[command(flatten)]
    pub params: BsArgs,
}

#[derive(Args, Debug, Clone, Default)]
pub struct TransformOptions {
    /// Loop word for first-way and second-way.
    #[arg(long = "loop")]
    pub loop_word: Option<String>,
    /// Completion constant for qpc-closure.
    #[arg(long)]
    pub c: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct ProviderArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Rewrite the group's normal form before use.
    #[arg(long, value_enum)]
    pub transform: Option<TransformKind>,
    #[command(flatten)]
    pub options: TransformOptions,
}
