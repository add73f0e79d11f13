use std::process::ExitCode;

use clap::{Parser, Subcommand};
use umbral::Polynomial;
use umbral_cli::convert::{convert, SeqKind};
use umbral_cli::verify::{self, Context, Suite};
use umbral_cli::{parse, CliError, Format, Report};

const DEFAULT_ORDER: usize = 12;
const COSTLY_ORDER: usize = 24;

#[derive(Parser)]
#[command(name = "umbra", version, about = "Exact umbral calculus on moment sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate moments, cumulants and factorial moments of an expression.
    Report {
        expr: String,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check the umbral identities on exact and seeded random inputs.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Convert a sequence between moments, cumulants and factorial moments.
    Convert {
        #[arg(long, value_enum)]
        from: SeqKind,
        #[arg(long, value_enum)]
        to: SeqKind,
        /// JSON list starting with 1, e.g. '[1, "x", "x^2 + x"]'.
        #[arg(long)]
        values: String,
    },
}

fn resolve_order(flag: Option<usize>) -> Result<usize, CliError> {
    let order = match flag {
        Some(n) => n,
        None => match std::env::var("UMBRA_DEFAULT_ORDER") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("UMBRA_DEFAULT_ORDER must be a nonnegative integer, got {v:?}")))?,
            Err(_) => DEFAULT_ORDER,
        },
    };
    if order > COSTLY_ORDER {
        eprintln!("warning: order {order} is above {COSTLY_ORDER}; partition counts make this slow");
    }
    Ok(order)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Report { expr, order, format } => {
            let order = resolve_order(order)?;
            let e = parse(&expr)?;
            print!("{}", Report::new(&e, order)?.render(format));
        }
        Command::Verify { suite, order, seed } => {
            let order = resolve_order(order)?;
            if order == 0 {
                return Err(CliError::Usage("verify needs order >= 1".into()));
            }
            let ctx = Context::new(order, seed);
            let results = verify::run(suite, &ctx);
            print!("{}", verify::render(suite, &ctx, &results));
            let failed = results.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                return Err(CliError::Verification { failed, total: results.len() });
            }
        }
        Command::Convert { from, to, values } => {
            let values: Vec<Polynomial> = serde_json::from_str(&values)
                .map_err(|e| CliError::Usage(format!("--values is not a JSON list of polynomials: {e}")))?;
            let out = convert(from, to, values)?;
            println!("{}", serde_json::to_string(&out).expect("polynomials serialize"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
