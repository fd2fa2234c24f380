//! `interpcat`: command-line front end. Every command prints one line of
//! JSON on success; errors go to stderr with exit code 1 (domain) or 2
//! (usage, including malformed payloads).

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use interpcat::diagrams::Flavor;
use interpcat::symfun::LieFlavor;

use input::CliError;

#[derive(Parser)]
#[command(name = "interpcat", version, about = "Exact computations in the interpolation categories Rep(S_t), Rep(GL_t), Rep(O_t)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Two morphism (or diagram) payloads.
#[derive(Args)]
pub struct Pair {
    /// Outer operand: inline JSON or a file path.
    #[arg(short = 'P')]
    pub p: String,
    /// Inner operand: inline JSON or a file path.
    #[arg(short = 'Q')]
    pub q: String,
}

/// A Hom space `Hom(l, m)`.
#[derive(Args)]
pub struct HomArgs {
    #[arg(long, default_value = "S")]
    pub flavor: Flavor,
    /// Source object: `m` for S/O, `r,s` for GL.
    #[arg(short = 'l')]
    pub source: String,
    /// Target object.
    #[arg(short = 'm')]
    pub target: String,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compose P ∘ Q (Q acts first).
    Compose {
        #[arg(long)]
        flavor: Option<Flavor>,
        #[command(flatten)]
        pair: Pair,
    },
    /// Tensor product P ⊗ Q.
    Tensor {
        #[arg(long)]
        flavor: Option<Flavor>,
        #[command(flatten)]
        pair: Pair,
    },
    /// Categorical trace of an endomorphism, optionally evaluated at t.
    Trace {
        #[arg(short = 'P')]
        p: String,
        #[arg(long = "t")]
        t0: Option<String>,
        /// Report the Sp_t trace (O flavor only).
        #[arg(long)]
        sp: bool,
    },
    /// Dimension of an object `[m]` or `[r, s]`.
    Dim {
        #[arg(long, default_value = "S")]
        flavor: Flavor,
        #[arg(short = 'm')]
        object: String,
        /// Report the Sp_t dimension (O flavor only).
        #[arg(long)]
        sp: bool,
    },
    /// Rewrite an S morphism in the e or δ basis.
    BasisChange {
        #[arg(short = 'P')]
        p: String,
        #[arg(long, value_parser = ["e", "delta"])]
        to: String,
    },
    /// Test f ∘ f = f.
    IdemCheck {
        #[arg(short = 'P')]
        p: String,
    },
    /// Young symmetrizer (or its walled variant for GL).
    Young {
        #[arg(long, default_value = "S")]
        flavor: Flavor,
        /// Partition array, or {"black":[..],"white":[..]} for GL.
        #[arg(long)]
        lambda: String,
    },
    /// Promote an idempotent one size up.
    Promote {
        #[arg(short = 'P')]
        p: String,
        /// Use the t = 0 promotion maps.
        #[arg(long)]
        t_zero: bool,
    },
    /// Dimension of the simple object L(λ).
    SimpleDim {
        #[arg(long, default_value = "S")]
        flavor: Flavor,
        #[arg(long)]
        lambda: String,
    },
    /// Multiplicities of simples in a Karoubi object.
    Decompose {
        #[arg(long, default_value = "S")]
        flavor: Flavor,
        /// Idempotent payload.
        #[arg(short = 'P', conflicts_with = "young")]
        p: Option<String>,
        /// Shortcut: decompose the Young symmetrizer of this label.
        #[arg(long)]
        young: Option<String>,
    },
    /// Gram matrix of the trace pairing on Hom(l, m).
    Gram {
        #[command(flatten)]
        hom: HomArgs,
        #[arg(long = "t", required_unless_present = "symbolic")]
        t0: Option<String>,
        #[arg(long)]
        symbolic: bool,
    },
    /// Negligibility of a morphism, or a basis of negligible morphisms.
    Negligible {
        #[arg(short = 'P', required_unless_present = "source")]
        p: Option<String>,
        #[arg(long = "t")]
        t0: String,
        #[arg(long, default_value = "S")]
        flavor: Flavor,
        #[arg(short = 'l', requires = "target")]
        source: Option<String>,
        #[arg(short = 'm')]
        target: Option<String>,
    },
    /// Dimension of Hom(l, m) modulo negligible morphisms at t = n.
    QuotientDim {
        #[command(flatten)]
        hom: HomArgs,
        #[arg(short = 'n')]
        n: u64,
    },
    /// Verify diagram structure constants against explicit matrices at t = n.
    OracleCheck {
        #[arg(long, default_value = "S")]
        flavor: Flavor,
        #[arg(short = 'a')]
        a: String,
        #[arg(short = 'b')]
        b: String,
        #[arg(short = 'c')]
        c: String,
        #[arg(short = 'n')]
        n: u64,
        /// Include every checked pair in the report.
        #[arg(long)]
        verbose: bool,
    },
    /// Rank of an idempotent's matrix at t = n.
    FunctorRank {
        #[arg(short = 'P')]
        p: String,
        #[arg(short = 'n')]
        n: u64,
    },
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Hall pairing of skew Schur functions (s_{λ/ν}, s_{μ/ν̄}).
    Pairing {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu_bar: String,
    },
    /// Stable multiplicity of V_(ν,ν̄) in V_λ ⊗ V_μ^* for gl.
    MultGl {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        nu_bar: String,
    },
    /// Stable multiplicity of V_ν in V_λ ⊗ V_μ for orthogonal groups.
    MultOsp {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Encode λ as [α, β, γ] or decode a triple.
    Triple {
        #[arg(long, required_unless_present = "decode")]
        lambda: Option<String>,
        #[arg(short = 'k', default_value_t = 0)]
        k: usize,
        #[arg(short = 'l', default_value_t = 0)]
        l: usize,
        /// Triple payload {"alpha","beta","gamma","k","l"}.
        #[arg(long, conflicts_with = "lambda")]
        decode: Option<String>,
    },
    /// Stable Harish-Chandra multiplicity for shift data.
    HcStable {
        #[arg(long)]
        flavor: LieFlavor,
        /// {"a":[..],"b":[..],"gamma":[..],"delta":[..]}
        #[arg(long)]
        shift: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        nu_bar: Option<String>,
        /// Also compute the direct value at this n.
        #[arg(long)]
        check_n: Option<usize>,
    },
    /// Moments of a central-character difference.
    CharMoments {
        #[arg(long, default_value = "gl")]
        flavor: LieFlavor,
        #[arg(long, required_unless_present = "mu")]
        b: Option<String>,
        #[arg(long)]
        c: Option<String>,
        /// Weight μ; with --up/--down gives the moments of λ − μ moves.
        #[arg(long, conflicts_with = "b")]
        mu: Option<String>,
        /// 1-based positions raised by one.
        #[arg(long, requires = "mu")]
        up: Option<String>,
        /// 1-based positions lowered by one.
        #[arg(long, requires = "mu")]
        down: Option<String>,
        #[arg(short = 'K')]
        k: u32,
    },
    /// Search integer (b, c) reproducing given moments.
    CharSearch {
        #[arg(long)]
        moments: String,
        #[arg(short = 'r')]
        r: usize,
        #[arg(short = 's', default_value_t = 0)]
        s: usize,
        #[arg(long, default_value_t = 5)]
        bound: i64,
    },
    /// Run the built-in invariant suites.
    Selftest {
        #[arg(value_parser = ["quick", "full"], default_value = "quick")]
        level: String,
        /// Seed; falls back to INTERPCAT_SEED, then to a fixed default.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
