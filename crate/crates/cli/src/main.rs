use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tqa::algebras::{build_uq_gl, build_uqp_o, build_uqp_sp_ext};
use tqa::nc::{Algebra, Gen};
use tqa::suites::{run_suite, SuiteParams, SUITES};
use tqa::{report, Error};

#[derive(Parser)]
#[command(
    name = "tqa",
    version,
    about = "Exact verification harness for twisted quantized enveloping algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect an algebra presentation.
    Algebra {
        #[command(subcommand)]
        action: AlgebraCmd,
    },
    /// Run a verification suite and print a JSON report.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Print the oriented rewrite rules, one per line.
    Dump {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Gl,
    O,
    Sp,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Budget {
    #[default]
    Default,
    Big,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of the suite names; see `--help`.
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    suite_name: String,
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    set: Option<String>,
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Budget::Default)]
    budget: Budget,
    /// Smallest sizes only.
    #[arg(long)]
    smoke: bool,
    #[arg(long = "extend-2143")]
    extend_2143: bool,
    /// Record per-check wall-clock time (output is then not reproducible).
    #[arg(long)]
    timings: bool,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::O => "o",
            Family::Sp => "sp",
        }
    }
}

fn build(family: Family, n: usize) -> tqa::Result<Algebra> {
    let bad = |lo: usize, hi: usize| Error::Usage(format!("--n must be in {lo}..={hi} for {}", family.name()));
    match family {
        Family::Gl if (1..=6).contains(&n) => build_uq_gl(n),
        Family::O if (2..=8).contains(&n) => build_uqp_o(n),
        Family::Sp if (1..=3).contains(&n) => build_uqp_sp_ext(n),
        Family::Gl => Err(bad(1, 6)),
        Family::O => Err(bad(2, 8)),
        Family::Sp => Err(bad(1, 3)),
    }
}

fn dump(family: Family, n: usize) -> tqa::Result<String> {
    let alg = build(family, n)?;
    let mut out = String::new();
    for (g, h, rhs) in alg.rules() {
        out.push_str(&format!("{g}*{h} -> {rhs}\n"));
    }
    for (d, (kind, i, j), c) in alg.diagonal_exponents() {
        let x = Gen::new(kind, i as usize, j as usize);
        out.push_str(&format!("{d}*{x} -> q^{c} {x}*{d}\n"));
    }
    Ok(out)
}

fn verify(a: VerifyArgs) -> tqa::Result<(String, bool)> {
    report::set_timings(a.timings);
    let params = SuiteParams {
        family: a.family.map(|f| f.name().to_string()),
        n: a.n,
        set: a.set,
        suite: a.suite,
        seed: a.seed,
        big_budget: matches!(a.budget, Budget::Big),
        smoke: a.smoke,
        extend_2143: a.extend_2143,
    };
    let rep = run_suite(&a.suite_name, &params)?;
    let mut json = rep.to_json();
    json.push('\n');
    if let Some(path) = a.out {
        fs::write(&path, &json).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
        eprint!("{rep}");
        return Ok((String::new(), rep.passed()));
    }
    Ok((json, rep.passed()))
}

fn exit_for(e: &Error) -> ExitCode {
    eprintln!("tqa: {e}");
    match e {
        Error::Usage(_) | Error::Parse { .. } => ExitCode::from(2),
        Error::NonTermination { .. } => ExitCode::from(3),
        _ => ExitCode::from(1),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Algebra {
            action: AlgebraCmd::Dump { family, n },
        } => dump(family, n).map(|s| (s, true)),
        Command::Verify(args) => verify(args),
    };
    match result {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => exit_for(&e),
    }
}
