use std::io::Write;
use std::path::{Path, PathBuf};

use circuit_core::bounds::{propagate, singleton_k4_baseline, theorem2_bound, BoundTable};
use circuit_core::{
    construct7, has_spread, is_isometric, klee_padding, max_spread, naive_insertion, CircuitCode,
    ConstructionReport, NaiveOffset, SpreadVerdict,
};
use clap::{Parser, Subcommand};

use crate::codefile::{parse_code_file, serialize_code};
use crate::corpus::{corpus, lookup};
use crate::error::CliError;
use crate::export::{export_table, TableFormat};
use crate::table::{materialize, seeded_table, TableRange};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "circuit",
    version,
    about = "Verify, construct and bound hypercube circuit codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a code file for a given spread (defaults to the claimed one).
    Verify {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Print the largest spread of a code.
    Spread { file: PathBuf },
    /// Raise the spread by one, adding new coordinates.
    Construct7 {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Pad the length to a multiple of 2(k+1) with one new coordinate.
    Pad {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Insert a new coordinate after every k+1 transitions at a fixed phase.
    Naive {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
        offset: u8,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit the seeded bound table.
    SeedTable(TableArgs),
    /// Emit the bound table after propagation to a fixpoint.
    Propagate(TableArgs),
    /// Show how the propagated bound on K(n,k) was derived.
    Explain {
        n: usize,
        k: usize,
        /// Print the full tree with intermediate parameters.
        #[arg(long)]
        tree: bool,
        /// Rebuild and verify the code when the derivation is explicit.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_name = "FILE")]
        table_range: Option<PathBuf>,
    },
    /// Compare the two spread-4 lower bounds at dimension n.
    BoundK4 { n: usize },
    /// List embedded codes, or print one as a code file.
    Corpus { id: Option<String> },
}

#[derive(Debug, clap::Args)]
struct TableArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    /// TOML file with `n = [min, max]` and `k = [min, max]`.
    #[arg(long, value_name = "FILE")]
    table_range: Option<PathBuf>,
}

/// Runs the command line and returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return status;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_code(path: &Path) -> Result<CircuitCode, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_code_file(&text)
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn range(path: Option<&Path>) -> Result<TableRange, CliError> {
    path.map_or_else(|| Ok(TableRange::default()), TableRange::load)
}

fn propagated(range: &TableRange) -> Result<BoundTable, CliError> {
    Ok(propagate(&seeded_table(range))?.0)
}

fn write_verdict(code: &CircuitCode, k: usize, verdict: &SpreadVerdict, out: &mut dyn Write) {
    if verdict.holds {
        let _ = writeln!(out, "spread {k}: HOLDS");
        return;
    }
    let _ = writeln!(out, "spread {k}: VIOLATED");
    if let Some(w) = verdict.witness {
        let v = code.vertices();
        let _ = writeln!(
            out,
            "witness: x{} = {} and x{} = {}, cycle distance {}, hypercube distance {}",
            w.first + 1,
            v[w.first],
            w.second + 1,
            v[w.second],
            w.cycle_distance,
            w.hypercube_distance
        );
    }
}

fn write_report(report: &ConstructionReport, err: &mut dyn Write) {
    let _ = writeln!(
        err,
        "{} -> {}  q = {}, r = {}, insertions per half = {}",
        report.input_params,
        report.output_params,
        report.q,
        report.r,
        report.insertions_per_half()
    );
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Verify { file, k } => {
            let code = read_code(&file)?;
            let k = k.unwrap_or(code.spread());
            let verdict = has_spread(&code, k);
            write_verdict(&code, k, &verdict, out);
            Ok(if verdict.holds {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::Spread { file } => {
            let code = read_code(&file)?;
            let spread = max_spread(&code);
            if spread == code.len() / 2 && is_isometric(&code) {
                let _ = writeln!(out, "{spread} (isometric: every spread holds)");
            } else {
                let _ = writeln!(out, "{spread}");
            }
            Ok(EXIT_OK)
        }
        Command::Construct7 { file, output } => {
            let report = construct7(&read_code(&file)?)?;
            write_report(&report, err);
            emit(&serialize_code(&report.output), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Pad { file, output } => {
            let report = klee_padding(&read_code(&file)?)?;
            write_report(&report, err);
            emit(&serialize_code(&report.output), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Naive {
            file,
            offset,
            output,
        } => {
            let code = read_code(&file)?;
            let offset =
                NaiveOffset::from_index(offset as usize).expect("clap restricts the range");
            let seq = naive_insertion(&code, offset)?;
            let candidate = CircuitCode::new(code.dimension() + 1, code.spread() + 1, seq)?;
            emit(&serialize_code(&candidate), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::SeedTable(args) => {
            let table = seeded_table(&range(args.table_range.as_deref())?);
            emit(&export_table(&table, args.format), None, out)?;
            Ok(EXIT_OK)
        }
        Command::Propagate(args) => {
            let table = propagated(&range(args.table_range.as_deref())?)?;
            emit(&export_table(&table, args.format), None, out)?;
            Ok(EXIT_OK)
        }
        Command::Explain {
            n,
            k,
            tree,
            verify,
            table_range,
        } => {
            let table = propagated(&range(table_range.as_deref())?)?;
            let entry = table
                .get(n, k)
                .ok_or(circuit_core::bounds::BoundError::NoEntry { n, k })?;
            let _ = writeln!(out, "K({n},{k}) >= {}", entry.value);
            if tree {
                let _ = write!(out, "{}", entry.tree());
            } else {
                let _ = writeln!(out, "{}", entry.chain());
            }
            if verify {
                match materialize(entry) {
                    None => {
                        let _ =
                            writeln!(out, "not materializable: derivation uses length-only rules");
                    }
                    Some(code) => {
                        let code = code?;
                        let verdict = has_spread(&code, k);
                        write_verdict(&code, k, &verdict, out);
                        let _ = writeln!(out, "materialized length {}", code.len());
                        if !verdict.holds || (code.len() as u64) < entry.value {
                            return Ok(EXIT_VIOLATION);
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::BoundK4 { n } => {
            let theorem = theorem2_bound(n);
            let baseline = singleton_k4_baseline(n).ok();
            let show = |v: &Option<num_bigint::BigUint>| {
                v.as_ref().map_or("none".to_string(), |v| v.to_string())
            };
            let _ = writeln!(out, "k4 bound {}", show(&theorem));
            let _ = writeln!(out, "baseline {}", show(&baseline));
            if let (Some(t), Some(b)) = (&theorem, &baseline) {
                let _ = writeln!(
                    out,
                    "{}",
                    if t > b {
                        "k4 bound exceeds baseline"
                    } else {
                        "baseline not exceeded"
                    }
                );
            }
            Ok(EXIT_OK)
        }
        Command::Corpus { id } => {
            match id {
                Some(id) => emit(&serialize_code(&lookup(&id)?.code), None, out)?,
                None => {
                    for entry in corpus() {
                        let c = &entry.code;
                        let _ = writeln!(
                            out,
                            "{}\t({},{},{})\t{}",
                            entry.id,
                            c.dimension(),
                            c.spread(),
                            c.len(),
                            entry.source
                        );
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}
