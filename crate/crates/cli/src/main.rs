mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Graded modules, quotient-category Hom groups and sheaves on projective space.
#[derive(Debug, Parser)]
#[command(name = "cohsheaf", version)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Characteristic of the base field (default 32003).
    #[arg(long = "p", global = true)]
    pub p: Option<u64>,
    /// Number of variables of S (default 2, unless an input file says otherwise).
    #[arg(long = "nvars", global = true)]
    pub nvars: Option<usize>,
    /// Dimension of the projective space; S gets n + 1 variables.
    #[arg(long = "n", global = true)]
    pub n: Option<usize>,
    #[arg(long = "format", value_enum, default_value = "text", global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct ModuleArg {
    /// Module presentation in JSON.
    #[arg(long = "M", value_name = "PATH")]
    pub m: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[arg(long = "M", value_name = "PATH")]
    pub m: PathBuf,
    #[arg(id = "target", long = "N", value_name = "PATH")]
    pub n: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct WindowArgs {
    #[arg(long = "M", value_name = "PATH")]
    pub m: PathBuf,
    /// Degree window `a..b` (inclusive); defaults to `-5..reg+3`.
    #[arg(long = "range", value_name = "A..B", allow_hyphen_values = true)]
    pub range: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Gröbner basis of the relations.
    Gb(ModuleArg),
    /// Normal form of an element modulo the relations.
    Nf {
        #[command(flatten)]
        module: ModuleArg,
        /// Element as comma-separated components, one per generator.
        #[arg(long = "v", value_name = "POLYS", allow_hyphen_values = true)]
        v: String,
    },
    /// Saturation of the relations by the irrelevant ideal.
    Saturate(ModuleArg),
    /// Torsion submodule, torsion-free quotient and torsion top degree.
    Torsion(ModuleArg),
    /// Minimal presentation of the truncation `M_{≥d}`.
    Truncate {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long = "d", allow_hyphen_values = true)]
        d: i64,
    },
    /// Minimal graded free resolution.
    Resolve {
        #[command(flatten)]
        module: ModuleArg,
        /// Maximal number of differentials.
        #[arg(long = "cap")]
        cap: Option<usize>,
    },
    /// Castelnuovo–Mumford regularity.
    Reg(ModuleArg),
    /// Hilbert function on a window, Hilbert polynomial and stability bound.
    Hilbert(WindowArgs),
    /// Degree-zero homomorphisms of graded modules.
    Hom(PairArgs),
    /// Hom in the quotient category by torsion modules.
    Qhom {
        #[command(flatten)]
        pair: PairArgs,
        /// Use the cofinal system of submodules `m^j M` instead of truncations.
        #[arg(long = "alt")]
        alt: bool,
    },
    /// Dimensions of global sections of the twists of the associated sheaf.
    Sections(WindowArgs),
    /// Euler characteristics of the twists of the associated sheaf.
    Chi(WindowArgs),
    /// Sections of a point on P^1 in negative twists.
    DemoSkyscraper {
        #[arg(long = "N", default_value_t = 3)]
        count: usize,
    },
    /// The forgetful functor on C_2-representations is not full on its image.
    DemoForgetful,
    /// Conservative images for a local algebra and a collapsing functor.
    DemoConimg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
