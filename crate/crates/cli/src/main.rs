//! `vfpoly`: build, analyze and enumerate abstract regular polyhedra.
//!
//! Exit codes: 0 success, 1 verification mismatch or invalid polyhedron,
//! 2 usage error, 3 coset enumeration limit reached.

mod failure;
mod render;

use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vfpoly::enumerate::{enumerate_vertex_faithful, read_census, write_census, EnumerateOptions, Strategy};
use vfpoly::families::{
    flat_family_catalog, flat_orientable_predicate, lambda_oracle, toroidal_44, universal_check, universal_order,
    LambdaParams, TorusVector, UniversalRow,
};
use vfpoly::fp::{realize, Presentation, Word, COSET_LIMIT_ENV};
use vfpoly::manifest::RunManifest;
use vfpoly::operators::{dual, petrial, petrial_dual_torus, vertex_faithful_quotient};
use vfpoly::perm::{split_generator_list, Permutation};
use vfpoly::verify::{diff_census, run_suite, Suite, VerifyOptions};
use vfpoly::Polyhedron;

use failure::Failure;

#[derive(Parser)]
#[command(name = "vfpoly", version, about = "Abstract regular polyhedra as string C-groups")]
struct Cli {
    /// Maximum number of live cosets in any coset enumeration.
    #[arg(long, global = true, env = COSET_LIMIT_ENV, default_value_t = vfpoly::fp::DEFAULT_COSET_LIMIT)]
    coset_limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of one polyhedron given by relations or by generators.
    Analyze(AnalyzeArgs),
    /// Census of vertex-faithful regular polyhedra with a given vertex count.
    Enumerate(EnumerateArgs),
    /// Recompute a published result and report every check.
    Verify(VerifyArgs),
    /// Compare a census file with the bundled tables.
    DiffCensus {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Λ(p,q)_{i,j}: the arithmetic flatness test and the group itself.
    Lambda {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Flat regular polyhedra with 4, b, 2b or b² vertices (b prime).
    FlatCatalog {
        #[arg(long)]
        vertices: u64,
        #[arg(long)]
        q_cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The toroidal map {4,4}_(s,0) or {4,4}_(s,s).
    Torus {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        diagonal: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The dual of the Petrial of {4,4}_(s,0).
    PetrialDualTorus {
        #[arg(long)]
        s: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Whether a group is determined by its type and its z1, h, z2 lengths.
    Universal {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        order: u64,
        #[arg(long)]
        z1: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        z2: u64,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long, requires = "q", conflicts_with_all = ["gens", "presentation"])]
    p: Option<u32>,
    #[arg(long, requires = "p")]
    q: Option<u32>,
    /// Extra relator, e.g. "(0121)^2 2"; repeatable.
    #[arg(long, requires = "p")]
    rel: Vec<String>,
    /// Whole presentation, e.g. "p=3 q=4 rel=(012)^3".
    #[arg(long, conflicts_with = "gens")]
    presentation: Option<String>,
    /// Three involutions in 1-indexed cycle notation, comma separated.
    #[arg(long)]
    gens: Option<String>,
    /// Operators applied in order before reporting.
    #[arg(long, value_enum)]
    transform: Vec<Transform>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    vertices: usize,
    /// Worker threads (default: all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Census file; a manifest is written next to it.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = StrategyArg::CosetSearch)]
    strategy: StrategyArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// table1, table2, prime, twice-prime, b-squared or flat-oracle.
    suite: String,
    /// Restrict a prime-based suite to one prime.
    #[arg(long)]
    b: Option<u64>,
    /// Largest p and q for flat-oracle.
    #[arg(long, default_value_t = 12)]
    max: u64,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = StrategyArg::CosetSearch)]
    strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Transform {
    Dual,
    Petrial,
    VfQuotient,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    CosetSearch,
    PairReps,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::CosetSearch => Strategy::CosetSearch,
            StrategyArg::PairReps => Strategy::PairReps,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let limit = cli.coset_limit;
    match cli.command {
        Command::Analyze(args) => analyze(args, limit),
        Command::Enumerate(args) => enumerate(args),
        Command::Verify(args) => verify(args, limit),
        Command::DiffCensus { file, format } => diff(file, format),
        Command::Lambda { p, q, i, j, format } => {
            if p < 2 || q < 2 {
                return Err(Failure::usage("p and q must be at least 2"));
            }
            let params = LambdaParams::new(p, q, i, j);
            let verdict = flat_orientable_predicate(params);
            let poly = lambda_oracle(params, limit)?;
            let value = serde_json::json!({
                "params": params,
                "presentation": params.presentation().to_string(),
                "predicate": verdict,
                "oracle": poly.is_some(),
                "polyhedron": poly.as_ref().map(Polyhedron::record),
            });
            render::value(&value, format);
            Ok(if verdict.is_flat_polyhedron == poly.is_some() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::FlatCatalog { vertices, q_cap, format } => {
            let entries = flat_family_catalog(vertices, q_cap, limit)?;
            let rows: Vec<serde_json::Value> = entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "family": e.family,
                        "presentation": e.presentation.to_string(),
                        "record": e.polyhedron.record(),
                    })
                })
                .collect();
            render::value(&serde_json::Value::Array(rows), format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Torus { s, diagonal, format } => {
            let vector = if diagonal { TorusVector::Diagonal } else { TorusVector::Axis };
            render::polyhedron(&toroidal_44(s, vector)?, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::PetrialDualTorus { s, format } => {
            render::polyhedron(&petrial_dual_torus(s)?, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Universal { p, q, order, z1, h, z2 } => {
            let row = UniversalRow { p, q, order, z1, h, z2 };
            let universal = universal_check(&row, limit)?;
            let order_found = universal_order(&row, limit).ok();
            let value = serde_json::json!({ "row": row, "universal": universal, "universal_order": order_found });
            render::value(&value, Format::Json);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn analyze(args: AnalyzeArgs, limit: usize) -> Result<ExitCode, Failure> {
    let mut poly = if let Some(gens) = &args.gens {
        from_generators(gens)?
    } else {
        let pres = match (&args.presentation, args.p, args.q) {
            (Some(text), _, _) => Presentation::parse(text)?,
            (None, Some(p), Some(q)) => {
                let mut pres = Presentation::new(p, q);
                for r in &args.rel {
                    pres = pres.with_relator(Word::parse(r)?);
                }
                pres
            }
            _ => return Err(Failure::usage("give --p and --q, --presentation, or --gens")),
        };
        Polyhedron::from_group(&realize(&pres, limit)?)?
    };
    for t in &args.transform {
        poly = match t {
            Transform::Dual => dual(&poly),
            Transform::Petrial => petrial(&poly)?,
            Transform::VfQuotient => vertex_faithful_quotient(&poly)?.0,
        };
    }
    render::polyhedron(&poly, args.format);
    Ok(ExitCode::SUCCESS)
}

fn from_generators(text: &str) -> Result<Polyhedron, Failure> {
    let parts = split_generator_list(text);
    if parts.len() != 3 {
        return Err(Failure::usage(format!("expected 3 generators, found {}", parts.len())));
    }
    let loose: Vec<Permutation> = parts.iter().map(|s| Permutation::parse_cycles(s, None)).collect::<Result<_, _>>()?;
    let degree = loose.iter().map(Permutation::degree).max().unwrap_or(0);
    let gens: Vec<Permutation> =
        parts.iter().map(|s| Permutation::parse_cycles(s, Some(degree))).collect::<Result<_, _>>()?;
    let [r0, r1, r2]: [Permutation; 3] = gens.try_into().expect("three generators");
    Ok(Polyhedron::try_new(r0, r1, r2)?)
}

fn enumerate(args: EnumerateArgs) -> Result<ExitCode, Failure> {
    let start = Instant::now();
    let options = EnumerateOptions { strategy: args.strategy.into(), jobs: args.jobs };
    let records = enumerate_vertex_faithful(args.vertices, &options)?;
    let mut bytes = Vec::new();
    write_census(&mut bytes, &records).map_err(Failure::io)?;
    match &args.out {
        Some(path) => {
            std::fs::write(path, &bytes).map_err(Failure::io)?;
            let manifest = RunManifest::new(std::env::args().collect(), start.elapsed())
                .with_input("vertices", args.vertices.to_string().as_bytes())
                .with_output(path, &bytes);
            manifest.write(&RunManifest::path_for(path)).map_err(Failure::io)?;
            eprintln!("{} records written to {}", records.len(), path.display());
        }
        None => std::io::stdout().write_all(&bytes).map_err(Failure::io)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs, limit: usize) -> Result<ExitCode, Failure> {
    let suite: Suite = args.suite.parse()?;
    let options = VerifyOptions {
        b: args.b,
        max: args.max,
        enumerate: EnumerateOptions { strategy: args.strategy.into(), jobs: args.jobs },
        coset_limit: limit,
    };
    let report = run_suite(suite, &options)?;
    match args.format {
        Format::Json => render::value(&serde_json::to_value(&report).expect("serializable"), Format::Json),
        Format::Table => render::report(&report),
    }
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn diff(file: PathBuf, format: Format) -> Result<ExitCode, Failure> {
    let input = std::fs::File::open(&file).map_err(Failure::input)?;
    let records = read_census(BufReader::new(input))?;
    let mut counts: Vec<u64> = records.iter().map(|r| r.v).collect();
    counts.sort_unstable();
    counts.dedup();
    let mismatches = diff_census(&records, &counts);
    match format {
        Format::Json => render::value(&serde_json::to_value(&mismatches).expect("serializable"), Format::Json),
        Format::Table => {
            for m in &mismatches {
                println!("{}", serde_json::to_string(m).expect("serializable"));
            }
            println!("{} records, {} mismatches", records.len(), mismatches.len());
        }
    }
    Ok(if mismatches.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
