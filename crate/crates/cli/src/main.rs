use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gcenter_cli::compute::compute;
use gcenter_cli::config::{Category, Degrees, RunConfig};
use gcenter_cli::dump::CenterDump;
use gcenter_cli::mult::{mult, ElementId};
use gcenter_cli::verify::{run_suite, Suite};
use gcenter_cli::CliError;

/// Graded centers of triangulated categories of serial algebras.
#[derive(Parser)]
#[command(name = "gcenter", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the window center and write a JSON dump.
    Compute {
        #[arg(long, value_enum)]
        category: Category,
        #[arg(long)]
        n: usize,
        /// q, f2, f5, f101 or f<p> for a prime p.
        #[arg(long, default_value = "f101")]
        field: String,
        /// Window size bound (maximal length); ignored for stable-serial.
        #[arg(long)]
        window: Option<usize>,
        /// Inclusive range a..b.
        #[arg(long, allow_hyphen_values = true)]
        degrees: Degrees,
        /// Impose η_{ΣX} = (-1)^t Σ(η_X).
        #[arg(long)]
        signed: bool,
        /// Output path for the JSON dump; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a degree,dimension table.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run a named suite of checks.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Print the product of two basis elements stored in a dump.
    Mult {
        #[arg(long = "in")]
        input: PathBuf,
        /// Left factor as degree:index.
        #[arg(allow_hyphen_values = true)]
        left: ElementId,
        /// Right factor as degree:index.
        #[arg(allow_hyphen_values = true)]
        right: ElementId,
    },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Compute { category, n, field, window, degrees, signed, out, csv } => {
            let cfg = RunConfig::new(category, n, &field, window, degrees, signed);
            let dump = compute(&cfg)?;
            match out {
                Some(path) => std::fs::write(path, dump.to_json())?,
                None => print!("{}", dump.to_json()),
            }
            if let Some(path) = csv {
                std::fs::write(path, dump.to_csv())?;
            }
            eprintln!("dims {:?} over degrees {degrees}", dump.dimensions());
            Ok(true)
        }
        Command::Verify { suite } => {
            let checks = run_suite(suite)?;
            for c in &checks {
                println!("{c}");
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            println!("{suite}: {} passed, {failed} failed", checks.len() - failed);
            Ok(failed == 0)
        }
        Command::Mult { input, left, right } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", input.display())))?;
            let dump = CenterDump::from_json(&text)?;
            let r = mult(&dump, left, right)?;
            println!("degree {}: [{}]", r.degree, r.product.join(", "));
            println!("graded commutativity: {}", if r.commutes { "holds" } else { "FAILS" });
            Ok(r.commutes)
        }
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("GCENTER_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) => gcenter_core::exec::limit_threads(t),
            Err(_) => {
                eprintln!("error: GCENTER_THREADS must be a positive integer, got {threads:?}");
                return ExitCode::from(2);
            }
        }
    }
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
