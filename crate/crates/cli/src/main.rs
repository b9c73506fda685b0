//! `loopseries` command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or hypothesis error.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use loopseries::combinatorics::binomial_gf_check;
use loopseries::{
    collapse_report, loop_series_oracle, main_theorem, parse_space, Catalog, Error,
    PairInclusion, SpaceProfile,
};

use report::{coeff_list, Format};

#[derive(Parser)]
#[command(name = "loopseries", version, about = "Exact mod 2 Poincaré series of loop spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct PairArgs {
    /// Subspace A, as a space expression (e.g. `S^1`).
    #[arg(long = "A", value_name = "EXPR")]
    sub: String,
    /// Ambient space Y, as a space expression (e.g. `S^1 v S^2`).
    #[arg(long = "Y", value_name = "EXPR")]
    ambient: String,
    /// JSON catalog of named spaces.
    #[arg(long, value_name = "FILE")]
    catalog: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form series of Ω((A∧RP^∞) ∪ (Y∧RP¹)) and its coefficients.
    Compute {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 20)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Compares the closed form against the multiindex enumeration.
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 20)]
        degree: usize,
    },
    /// Compares the Euler series of the E^1 and E^∞ terms.
    Collapse {
        #[command(flatten)]
        pair: PairArgs,
        /// Assert that H̃_*(A) → H̃_*(Y) is injective.
        #[arg(long)]
        mono: bool,
    },
    /// Checks Σ_{n≥m} C(n,k) t^n = t^k/(1-t)^(k+1) for all 0 ≤ m ≤ k ≤ kmax.
    Identity {
        #[arg(long)]
        kmax: u32,
        #[arg(long, default_value_t = 20)]
        degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Plain,
    Json,
    Csv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Plain => Format::Plain,
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
        }
    }
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

enum Failure {
    Mismatch(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn resolve(text: &str, flag: &str, catalog: &Catalog) -> Result<SpaceProfile, Failure> {
    let located = |e: Error| match &e {
        Error::Parse { offset, .. } | Error::UnknownName { offset, .. } => Failure::Usage(format!(
            "--{flag}: {e}\n  {text}\n  {caret:>width$}",
            caret = "^",
            width = offset + 1
        )),
        _ => Failure::Usage(format!("--{flag}: {e}")),
    };
    let expr = parse_space(text, catalog).map_err(located)?;
    expr.evaluate(catalog).map_err(located)
}

fn load_pair(args: &PairArgs, mono: bool) -> Result<PairInclusion, Failure> {
    let catalog = match &args.catalog {
        Some(path) => Catalog::load(path)?,
        None => Catalog::new(),
    };
    let sub = resolve(&args.sub, "A", &catalog)?;
    let ambient = resolve(&args.ambient, "Y", &catalog)?;
    Ok(PairInclusion::new(sub, ambient, mono))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute { pair, degree, format } => {
            let pair = load_pair(&pair, false)?;
            let series = main_theorem(&pair)?;
            print!("{}", report::render_compute(&series, degree, format.into()));
            Ok(())
        }
        Command::Verify { pair, degree } => {
            let pair = load_pair(&pair, false)?;
            let closed = main_theorem(&pair)?.expand(degree);
            let oracle = loop_series_oracle(&pair, degree)?;
            println!("closed-form: {closed}");
            println!("oracle:      {oracle}");
            println!("degree,closed_form,oracle,diff");
            for q in 0..=degree {
                let (c, o) = (closed.coeff(q), oracle.coeff(q));
                println!("{q},{c},{o},{}", &o - &c);
            }
            match closed.first_difference(&oracle) {
                None => {
                    println!("match through degree {degree}");
                    Ok(())
                }
                Some(q) => Err(Failure::Mismatch(format!(
                    "mismatch: first differing degree {q} (closed form {}, oracle {})",
                    closed.coeff(q),
                    oracle.coeff(q)
                ))),
            }
        }
        Command::Collapse { pair, mono } => {
            let pair = load_pair(&pair, mono)?;
            let r = collapse_report(&pair)?;
            println!("chi(E1):   {}", r.e1);
            println!(
                "  num: {} den: {}",
                coeff_list(r.e1.numerator()),
                coeff_list(r.e1.denominator())
            );
            println!("chi(Einf): {}", r.einf);
            println!(
                "  num: {} den: {}",
                coeff_list(r.einf.numerator()),
                coeff_list(r.einf.denominator())
            );
            if r.equal() {
                println!("equal");
                Ok(())
            } else {
                println!("unequal");
                Err(Failure::Mismatch("Euler series differ".into()))
            }
        }
        Command::Identity { kmax, degree } => {
            let mut failed = Vec::new();
            let mut checked = 0;
            for k in 0..=kmax {
                for m in 0..=k {
                    checked += 1;
                    if !binomial_gf_check(k, m, degree)? {
                        failed.push((k, m));
                    }
                }
            }
            for (k, m) in &failed {
                println!("FAIL k={k} m={m}");
            }
            println!(
                "{} of {checked} identities hold through degree {degree}",
                checked - failed.len()
            );
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Mismatch(format!("{} identities failed", failed.len())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
