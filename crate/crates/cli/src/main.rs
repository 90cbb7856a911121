use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hexaflex::geometry::DEFAULT_PRINTABLE_LIMIT;
use hexaflex::labeling::{pattern_for, Side};
use hexaflex::render::{render_strip, render_table, CountTable, DEFAULT_SCALE};
use hexaflex::sequences::{enumerate_classes_with, EnumerateOptions, DEFAULT_ENUMERATION_LIMIT};
use hexaflex::{hexaflexagon_count, lay_strip, strip_labels, Execution, SignSequence};

mod verify;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVALID_SIGNS: u8 = 3;

#[derive(Parser)]
#[command(name = "hexaflex", version, about = "Count, enumerate and draw hexaflexagons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of hexaflexagon classes with n faces.
    Count {
        #[arg(long)]
        n: u32,
    },
    /// Print a CSV table of class counts.
    Table {
        #[arg(long)]
        min: u32,
        #[arg(long)]
        max: u32,
        /// Also count printable classes (needs exhaustive enumeration).
        #[arg(long)]
        printable: bool,
        #[arg(long, default_value_t = DEFAULT_PRINTABLE_LIMIT)]
        limit: usize,
    },
    /// Stream every class with n faces as JSON lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
        #[arg(long)]
        with_labels: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// Write the SVG net of one side of a hexaflexagon strip.
    Net {
        /// Sign sequence as '+'/'-' characters or comma-separated 1/-1.
        #[arg(long, conflicts_with_all = ["n", "index"], allow_hyphen_values = true)]
        signs: Option<String>,
        #[arg(long, requires = "index")]
        n: Option<usize>,
        /// Position in the sorted enumeration of classes with n faces.
        #[arg(long, requires = "n")]
        index: Option<usize>,
        #[arg(long, value_enum, default_value_t = SideArg::Front)]
        side: SideArg,
        /// Add the extra triangle used to glue the strip closed.
        #[arg(long, action = clap::ArgAction::Set, default_value_t = true)]
        glue: bool,
        #[arg(long, default_value_t = DEFAULT_SCALE)]
        scale: f64,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// Check every closed form against brute force.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Use the bracelet formula exactly as commonly printed.
        #[arg(long, hide = true)]
        paper_bracelet: bool,
        #[arg(long, default_value_t = DEFAULT_PRINTABLE_LIMIT)]
        limit: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Front,
    Back,
}

#[derive(Serialize)]
struct RecordLine<'a> {
    n: usize,
    signs: String,
    sum: i32,
    printable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<&'a [u32]>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }

    fn signs(message: impl ToString) -> Self {
        Failure { code: EXIT_INVALID_SIGNS, message: message.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("HEXAFLEX_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t > 0 => {
                if let Err(e) = hexaflex::configure_threads(t) {
                    eprintln!("warning: {e}");
                }
            }
            _ => eprintln!("warning: ignoring HEXAFLEX_THREADS={threads:?}"),
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |e: io::Error| Failure { code: EXIT_MISMATCH, message: e.to_string() };
    match command {
        Command::Count { n } => {
            let h = hexaflexagon_count(n).map_err(Failure::usage)?;
            writeln!(out, "{h}").map_err(io_err)?;
        }
        Command::Table { min, max, printable, limit } => {
            if min < 3 || min > max {
                return Err(Failure::usage(format!("need 3 <= min <= max, got min={min} max={max}")));
            }
            let table = CountTable::build(min, max, printable.then_some((limit, Execution::Parallel)))
                .map_err(Failure::usage)?;
            let csv = render_table(&table).map_err(Failure::usage)?;
            out.write_all(csv.as_bytes()).map_err(io_err)?;
        }
        Command::Enumerate { n, format: Format::Jsonl, with_labels, limit } => {
            let options = EnumerateOptions { limit, printability: true, labels: with_labels, ..Default::default() };
            let records = enumerate_classes_with(n, &options).map_err(Failure::usage)?;
            for r in &records {
                let line = RecordLine {
                    n,
                    signs: r.sequence.to_string(),
                    sum: r.sum,
                    printable: r.printable.unwrap_or(false),
                    labels: r.labels.as_deref(),
                };
                let json = serde_json::to_string(&line).expect("plain data serialises");
                writeln!(out, "{json}").map_err(io_err)?;
            }
        }
        Command::Net { signs, n, index, side, glue, scale, out: path, limit } => {
            if !(scale.is_finite() && scale > 0.0) {
                return Err(Failure::usage("--scale must be positive"));
            }
            let signs = match (signs, n, index) {
                (Some(text), _, _) => text.parse::<SignSequence>().map_err(Failure::signs)?,
                (None, Some(n), Some(index)) => {
                    let options = EnumerateOptions { limit, ..Default::default() };
                    let records = enumerate_classes_with(n, &options).map_err(Failure::usage)?;
                    let count = records.len();
                    records
                        .into_iter()
                        .nth(index)
                        .ok_or_else(|| Failure::usage(format!("index {index} out of range: {count} classes with n={n}")))?
                        .sequence
                        .into_inner()
                }
                _ => return Err(Failure::usage("give either --signs or both --n and --index")),
            };
            let side = match side {
                SideArg::Front => Side::Front,
                SideArg::Back => Side::Back,
            };
            let svg = net_svg(&signs, side, glue, scale)?;
            match path {
                Some(p) => fs::write(&p, svg).map_err(io_err)?,
                None => out.write_all(svg.as_bytes()).map_err(io_err)?,
            }
        }
        Command::Verify { max_n, paper_bracelet, limit } => {
            if max_n < 3 || max_n > limit {
                return Err(Failure::usage(format!("--max-n must be in 3..={limit}")));
            }
            let ok = verify::run(max_n, paper_bracelet, &mut out).map_err(io_err)?;
            if !ok {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(0)
}

/// Picks the first starting face whose strip lays flat, falling back to the
/// unrotated strip (with a warning) when none does.
fn net_svg(signs: &SignSequence, side: Side, glue: bool, scale: f64) -> Result<String, Failure> {
    signs.validate().map_err(Failure::signs)?;
    let pattern = pattern_for(signs).map_err(Failure::signs)?;
    let flat = (0..signs.len()).find(|&r| {
        let s = pattern.rotated(r).signs().expect("rotation keeps length");
        !lay_strip(&s, false).expect("valid").overlaps()
    });
    if flat.is_none() {
        eprintln!("warning: {signs} is not printable; the net overlaps itself");
    }
    let pattern = pattern.rotated(flat.unwrap_or(0));
    let rotated_signs = pattern.signs().expect("rotation keeps length");
    let strip = lay_strip(&rotated_signs, glue).map_err(Failure::signs)?;
    let labels = strip_labels(&pattern, glue);
    render_strip(&strip, &labels, side, scale).map_err(Failure::usage)
}
