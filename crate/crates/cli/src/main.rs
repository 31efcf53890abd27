use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use nilchar::harness::{
    algebra_report, explore, fixture, rootsys_report, run_suite, AlgebraFile, Compute, HarnessError, Options, Report,
    RootCheck, SUITES,
};
use nilchar::rootsys::{Family, RootType};

#[derive(Parser)]
#[command(name = "nilchar", version, about = "Characteristic ideals of nilpotent Lie algebras over Q")]
struct Cli {
    /// Print the machine-readable report on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on oracle evaluations.
    #[arg(long, global = true, default_value_t = nilchar::absub::DEFAULT_BUDGET)]
    budget: u64,
    /// Largest root-system rank visited by suites.
    #[arg(long, global = true, default_value_t = 8)]
    max_rank: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, highest root and combinatorial checks for one type.
    Rootsys {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        /// `two-alpha-beta` and/or `z2-set`.
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
    },
    /// Invariants of a builtin or a structure-constant file.
    #[command(group(ArgGroup::new("source").required(true).args(["builtin", "file"])))]
    Algebra {
        #[arg(long)]
        builtin: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Any of ucs, center, class, a, b, z2-in-a.
        #[arg(long, value_delimiter = ',', default_value = "ucs,a,b")]
        compute: Vec<String>,
        /// Print the algebra as a structure-constant file instead.
        #[arg(long)]
        export: bool,
    },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
    /// Gather evidence over every builtin.
    Explore,
}

fn emit(report: &Report, json: bool) -> u8 {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    report.exit_status as u8
}

fn run(cli: Cli) -> Result<u8, HarnessError> {
    let opts = Options { max_rank: cli.max_rank, budget: cli.budget };
    match cli.command {
        Command::Rootsys { family, rank, check } => {
            let family: Family = family.parse()?;
            let t = RootType::new(family, rank)?;
            let checks = check.iter().map(|c| c.parse()).collect::<Result<Vec<RootCheck>, _>>()?;
            Ok(emit(&rootsys_report(t, &checks), cli.json))
        }
        Command::Algebra { builtin, file, compute, export } => {
            let computes = compute.iter().map(|c| c.parse()).collect::<Result<Vec<Compute>, _>>()?;
            let (name, g, graded) = match (builtin, file) {
                (Some(b), _) => {
                    let f = fixture(&b)?;
                    (f.name, f.algebra, f.graded)
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)?;
                    (path.display().to_string(), AlgebraFile::parse(&text)?.to_algebra()?, None)
                }
                (None, None) => unreachable!("clap requires a source"),
            };
            if export {
                let f = match &graded {
                    Some(gb) => AlgebraFile::from_graded(gb),
                    None => AlgebraFile::from_algebra(&g),
                };
                println!("{}", f.to_json());
                return Ok(0);
            }
            Ok(emit(&algebra_report(&name, &g, &computes), cli.json))
        }
        Command::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut worst = 0;
            for s in names {
                worst = worst.max(emit(&run_suite(s, &opts)?, cli.json));
            }
            Ok(worst)
        }
        Command::Explore => Ok(emit(&explore(&opts)?, cli.json)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
