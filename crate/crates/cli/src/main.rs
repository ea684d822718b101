use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ratgrowth::commands::{self, Emit};
use ratgrowth::{GrowthConfig, HarnessError, Result};
use ratgrowth_core::classify::ClassifyBounds;
use ratgrowth_core::decompose::LiftSide;
use ratgrowth_core::geometry::CurveVariant;

#[derive(Parser)]
#[command(name = "ratgrowth", version, about = "Special forms and image growth of bivariate rational functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    C1,
    C2,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Csv,
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Search for an additive, multiplicative or tangent form.
    Classify {
        f: String,
        #[arg(long, default_value = "real")]
        mode: String,
        /// deg g, deg l[, cap on deg f]
        #[arg(long)]
        bounds: Option<String>,
    },
    /// Decompositions of a univariate function in x.
    Decompose { f: String },
    /// Common left component of maximal degree.
    Dominate { f1: String, f2: String },
    /// Solve f = g ∘ h (--outer-g) or f = h(g(x1), x2) (--inner-g) for h.
    Lift {
        f: String,
        #[arg(long, conflicts_with = "inner_g", required_unless_present = "inner_g")]
        outer_g: Option<String>,
        #[arg(long)]
        inner_g: Option<String>,
    },
    /// Curves from coincidences f(b1, a) = f(b2, a') (c1) or f(a, b1) = f(a', b2) (c2).
    Curves {
        f: String,
        #[arg(long, value_enum, default_value = "c1")]
        variant: VariantArg,
        /// a,b pairs; repeat the flag or separate with ';'
        #[arg(long, required = true)]
        pairs: Vec<String>,
    },
    /// Image size, quadruple count and Cauchy-Schwarz bound over a grid.
    Count {
        h: String,
        #[arg(long)]
        set1: String,
        #[arg(long)]
        set2: String,
    },
    /// Image sizes over a sweep of set sizes.
    Grow {
        f: String,
        #[arg(long)]
        family1: String,
        #[arg(long)]
        family2: String,
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "csv")]
        emit: EmitArg,
        /// Write the rows here and print the table on standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Reduced Gröbner basis of the ideal in a file.
    Groebner {
        file: PathBuf,
        /// Also print the elimination ideal without the first K variables.
        #[arg(long)]
        eliminate: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Classify { f, mode, bounds } => {
            let bounds = match bounds {
                Some(b) => commands::parse_bounds(&b)?,
                None => ClassifyBounds::default(),
            };
            commands::classify(&f, commands::parse_mode(&mode)?, &bounds)
        }
        Command::Decompose { f } => commands::decompose(&f),
        Command::Dominate { f1, f2 } => commands::dominate(&f1, &f2),
        Command::Lift { f, outer_g, inner_g } => match (outer_g, inner_g) {
            (Some(g), _) => commands::lift(&f, &g, LiftSide::Outer),
            (None, Some(g)) => commands::lift(&f, &g, LiftSide::Inner),
            (None, None) => Err(HarnessError::Input("one of --outer-g, --inner-g is required".into())),
        },
        Command::Curves { f, variant, pairs } => {
            let variant = match variant {
                VariantArg::C1 => CurveVariant::C1,
                VariantArg::C2 => CurveVariant::C2,
            };
            commands::curves(&f, variant, &commands::parse_pairs(&pairs)?)
        }
        Command::Count { h, set1, set2 } => commands::count(&h, &set1, &set2),
        Command::Grow { f, family1, family2, sizes, seed, emit, out, workers } => {
            let cfg = GrowthConfig {
                family1: family1.parse()?,
                family2: family2.parse()?,
                sizes: commands::parse_sizes(&sizes)?,
                seed,
                workers,
            };
            let emit = match emit {
                EmitArg::Csv => Emit::Csv,
                EmitArg::Json => Emit::Json,
                EmitArg::Table => Emit::Table,
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, commands::grow(&f, &cfg, emit)?)?;
                    commands::grow(&f, &cfg, Emit::Table)
                }
                None => commands::grow(&f, &cfg, emit),
            }
        }
        Command::Groebner { file, eliminate } => commands::groebner(&std::fs::read_to_string(file)?, eliminate),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::new().filter_level(log::LevelFilter::Warn).init();
    // clap reports usage errors with status 2, which is reserved for exceeded caps
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
