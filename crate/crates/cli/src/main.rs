//! Command-line front end: parse an ideal file, run the requested
//! computation, emit one JSON object (or a plain basis listing) on
//! stdout. Errors go to stderr as a structured object; exit codes are
//! 0 success, 2 parse/validation, 3 resource cap, 4 inconsistent runs.

use std::io::Read;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use segre_core::{
    buchberger, chern_fulton, dim_degree, segre_degrees, verify_bezout_identity, Caps, Ideal,
    PolynomialRing, SaturationStrategy, SegreConfig,
};

use segre_cli::error::CliError;
use segre_cli::generate;
use segre_cli::parse::{
    build_ideal, parse_ideal_file, render_ideal_file, require_homogeneous, IdealFile,
};
use segre_cli::report::{DimDegReport, InputEcho, RunReport, Timings};

#[derive(Parser)]
#[command(
    name = "segre",
    version,
    about = "Segre class degrees of subschemes of projective space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degrees of the Segre classes of the scheme cut out by the input ideal
    Segre(RunArgs),
    /// Segre degrees plus Chern-Fulton degrees and the Euler characteristic
    ChernFulton(RunArgs),
    /// Same report as chern-fulton; the Euler characteristic is the headline
    Euler(RunArgs),
    /// Projective dimension and degree of the input scheme
    DimDeg(BaseArgs),
    /// Reduced monic basis of the input ideal, one element per line
    Gb(BaseArgs),
    /// Print an ideal file from the example family
    Generate(GenerateArgs),
    /// Run the example family end to end and print timings
    Bench(BenchArgs),
}

#[derive(Args)]
struct BaseArgs {
    /// Input ideal file; `-` reads standard input
    file: String,
    /// Override the characteristic declared in the file
    #[arg(long = "char")]
    characteristic: Option<u64>,
    /// Resource cap profile
    #[arg(long, value_enum, default_value_t)]
    caps: CapsProfile,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    base: BaseArgs,
    /// Random seed; defaults to OS entropy (echoed in the report)
    #[arg(long)]
    seed: Option<u64>,
    /// Residual saturation strategy
    #[arg(long, value_enum, default_value_t)]
    strategy: StrategyArg,
    /// Rerun with derived seeds and require agreement
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    repeats: u32,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    example: ExampleCmd,
}

#[derive(Args)]
struct BenchArgs {
    /// Seed shared by all family members
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t)]
    caps: CapsProfile,
}

#[derive(Subcommand)]
enum ExampleCmd {
    /// Rational normal curve of degree k in P^k (2x2 minors)
    Rnc {
        k: usize,
        #[arg(long = "char", default_value_t = segre_core::DEFAULT_PRIME)]
        characteristic: u64,
    },
    /// Segre embedding of P^a x P^b (2x2 minors of the coordinate matrix)
    Segre {
        a: usize,
        b: usize,
        #[arg(long = "char", default_value_t = segre_core::DEFAULT_PRIME)]
        characteristic: u64,
    },
    /// r x r minors of a rows x cols matrix of random linear forms
    GenericMinors {
        r: usize,
        rows: usize,
        cols: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long = "char", default_value_t = segre_core::DEFAULT_PRIME)]
        characteristic: u64,
    },
    /// The degree-3 point scheme (x^2, y^2, xy) in P^2
    PointScheme {
        #[arg(long = "char", default_value_t = segre_core::DEFAULT_PRIME)]
        characteristic: u64,
    },
    /// Two lines with an embedded point: (x^2 y, x y^2) in P^2
    CuspLines {
        #[arg(long = "char", default_value_t = segre_core::DEFAULT_PRIME)]
        characteristic: u64,
    },
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum CapsProfile {
    Tiny,
    #[default]
    Default,
    Large,
    Unlimited,
}

impl From<CapsProfile> for Caps {
    fn from(p: CapsProfile) -> Caps {
        match p {
            CapsProfile::Tiny => Caps::tiny(),
            CapsProfile::Default => Caps::default(),
            CapsProfile::Large => Caps::large(),
            CapsProfile::Unlimited => Caps::unlimited(),
        }
    }
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum StrategyArg {
    #[default]
    Single,
    Full,
}

impl From<StrategyArg> for SaturationStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Single => SaturationStrategy::SingleElement,
            StrategyArg::Full => SaturationStrategy::FullIdeal,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("{}", serde_json::to_string_pretty(&e.to_json()).unwrap());
            std::process::exit(e.exit_code());
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))
    }
}

fn load(base: &BaseArgs) -> Result<(IdealFile, Arc<PolynomialRing>, Ideal), CliError> {
    let text = read_input(&base.file)?;
    let file = parse_ideal_file(&text)?;
    let (ring, ideal) = build_ideal(&file, base.characteristic)?;
    Ok((file, ring, ideal))
}

fn echo(ring: &Arc<PolynomialRing>, ideal: &Ideal) -> InputEcho {
    InputEcho {
        ring: ring.variables().to_vec(),
        characteristic: ring.field().modulus(),
        generators: ideal.generators().len(),
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Segre(args) => run_segre(args, false),
        Command::ChernFulton(args) | Command::Euler(args) => run_segre(args, true),
        Command::DimDeg(base) => {
            let (file, ring, ideal) = load(&base)?;
            require_homogeneous(&file, &ideal)?;
            let start = Instant::now();
            let (proj_dim, degree) = dim_degree(&ideal, &base.caps.into())?;
            let report = DimDegReport {
                input: echo(&ring, &ideal),
                k: ring.num_vars() as i64 - 1,
                proj_dim,
                degree,
                timings: Timings {
                    per_d_ms: Vec::new(),
                    total_ms: start.elapsed().as_millis() as u64,
                },
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(())
        }
        Command::Gb(base) => {
            let (_, _, ideal) = load(&base)?;
            let gb = buchberger(&ideal, &base.caps.into())?;
            for element in gb.elements() {
                println!("{element}");
            }
            Ok(())
        }
        Command::Generate(args) => {
            let ideal = match args.example {
                ExampleCmd::Rnc { k, characteristic } => {
                    generate::rational_normal_curve(k, characteristic)?
                }
                ExampleCmd::Segre {
                    a,
                    b,
                    characteristic,
                } => generate::segre_embedding(a, b, characteristic)?,
                ExampleCmd::GenericMinors {
                    r,
                    rows,
                    cols,
                    seed,
                    characteristic,
                } => generate::generic_minors(r, rows, cols, characteristic, seed)?,
                ExampleCmd::PointScheme { characteristic } => {
                    generate::point_scheme(characteristic)?
                }
                ExampleCmd::CuspLines { characteristic } => generate::cusp_lines(characteristic)?,
            };
            print!(
                "{}",
                render_ideal_file(
                    ideal.ring().variables(),
                    ideal.ring().field().modulus(),
                    ideal.generators()
                )
            );
            Ok(())
        }
        Command::Bench(args) => run_bench(args),
    }
}

fn run_segre(args: RunArgs, with_chern: bool) -> Result<(), CliError> {
    let (file, ring, ideal) = load(&args.base)?;
    require_homogeneous(&file, &ideal)?;
    let cfg = SegreConfig {
        seed: args.seed.unwrap_or_else(rand::random),
        strategy: args.strategy.into(),
        repeats: args.repeats,
        caps: args.base.caps.into(),
    };
    let start = Instant::now();
    let run = segre_degrees(&ideal, &cfg)?;
    let total_ms = start.elapsed().as_millis() as u64;
    let chern = if with_chern {
        Some(chern_fulton(&run.result)?)
    } else {
        None
    };
    debug_assert!(verify_bezout_identity(&run.result));
    let report = RunReport::new(echo(&ring, &ideal), &run, chern.as_ref(), total_ms);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}

fn run_bench(args: BenchArgs) -> Result<(), CliError> {
    let p = segre_core::DEFAULT_PRIME;
    let family: Vec<(&str, Ideal)> = vec![
        ("point-scheme", generate::point_scheme(p)?),
        ("cusp-lines", generate::cusp_lines(p)?),
        ("rnc 3", generate::rational_normal_curve(3, p)?),
        ("rnc 4", generate::rational_normal_curve(4, p)?),
        ("rnc 5", generate::rational_normal_curve(5, p)?),
        ("segre 1 1", generate::segre_embedding(1, 1, p)?),
        ("segre 1 2", generate::segre_embedding(1, 2, p)?),
        (
            "generic-minors 2 3 3",
            generate::generic_minors(2, 3, 3, p, args.seed)?,
        ),
    ];
    println!(
        "{:<22} {:>3} {:>3} {:>3}  {:<22} {:>9}",
        "input", "k", "n", "m", "segre", "ms"
    );
    for (name, ideal) in &family {
        let cfg = SegreConfig {
            seed: args.seed,
            strategy: SaturationStrategy::SingleElement,
            repeats: 1,
            caps: args.caps.into(),
        };
        let start = Instant::now();
        match segre_degrees(ideal, &cfg) {
            Ok(run) => {
                let ms = start.elapsed().as_millis();
                println!(
                    "{:<22} {:>3} {:>3} {:>3}  {:<22} {:>9}",
                    name,
                    run.result.k,
                    run.result.n,
                    run.result.m,
                    format!("{:?}", run.result.segre_degrees),
                    ms
                );
            }
            Err(e) => println!("{name:<22} failed: {e}"),
        }
    }
    Ok(())
}
