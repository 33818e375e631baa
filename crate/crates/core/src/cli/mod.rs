//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a parse or precondition error, 2 when an
//! internal invariant is violated (including a failing `verify` suite).

mod parse;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

pub use parse::{parse_axis, parse_operator, parse_state, render_operator};

use crate::error::{Error, Result};
use crate::opsets::{
    anticommutator_norm, classify_operator, commutator_norm, find_common_axis, Axis,
};
use crate::protocols::{
    demo_cnot_reverse, demo_cp_capacity, demo_cp_entanglement, header, ramsey_curve, ramsey_grid,
    to_records, write_structured, Mode, Promise, ProtocolConfig, ProtocolKind, ProtocolOutcome,
};
use crate::verify;

/// Seed for the `verify` suites.
pub const VERIFY_SEED: u64 = 20_240_917;

#[derive(Debug, Parser)]
#[command(
    name = "qremote",
    version,
    about = "Remote single-qubit operations with shared entanglement and classical bits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a protocol and print its branches.
    Run(RunArgs),
    /// Classify an operator against an axis (default z).
    Classify {
        #[arg(long)]
        u: String,
        #[arg(long)]
        axis: Option<String>,
    },
    /// Find a common axis for the operators listed in a file, one per line.
    Axis {
        #[arg(long)]
        set: PathBuf,
    },
    /// Controlled-Pauli and reverse-CNOT demonstrations.
    Demo {
        #[arg(value_enum)]
        which: Demo,
    },
    /// Ramsey sweep as CSV.
    Ramsey {
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every invariant suite.
    Verify,
}

#[derive(Debug, clap::Args)]
struct RunArgs {
    #[arg(long)]
    protocol: String,
    #[arg(long)]
    u: String,
    #[arg(long)]
    psi: String,
    #[arg(long)]
    promise: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Structured)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Demo {
    CpEntanglement,
    CpCapacity,
    CnotReverse,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) => 2,
        _ => 1,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Run(args) => run(args, out).map(|_| 0),
        Command::Classify { u, axis } => classify(&u, axis.as_deref(), out).map(|_| 0),
        Command::Axis { set } => common_axis(&set, out).map(|_| 0),
        Command::Demo { which } => demo(which, out).map(|_| 0),
        Command::Ramsey { steps, out: path } => ramsey(steps, path.as_deref(), out).map(|_| 0),
        Command::Verify => verify_all(out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

/// Writes to `path` if given, otherwise to `out`.
fn with_sink(
    path: Option<&Path>,
    out: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> Result<()>,
) -> Result<()> {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p).map_err(io)?);
            f(&mut w)?;
            w.flush().map_err(io)
        }
        None => f(out),
    }
}

fn run(args: RunArgs, out: &mut dyn Write) -> Result<()> {
    let kind: ProtocolKind = args.protocol.parse()?;
    let u = parse_operator(&args.u)?;
    let psi = parse_state(&args.psi)?;
    let mode = match (args.mode, args.seed) {
        (ModeArg::Exact, _) => Mode::Exhaustive,
        (ModeArg::Sampled, Some(seed)) => Mode::Sampled { seed },
        (ModeArg::Sampled, None) => {
            return Err(Error::Precondition("sampled mode requires --seed".into()))
        }
    };
    if args.format == Format::Csv {
        return Err(Error::Precondition(
            "csv output is only available for `ramsey`".into(),
        ));
    }
    let mut cfg = ProtocolConfig::new(u, psi).with_mode(mode);
    if let Some(p) = args.promise {
        cfg = cfg.with_promise(p.parse::<Promise>()?);
    }
    let outcomes = kind.run(&cfg)?;
    with_sink(args.out.as_deref(), out, |w| match args.format {
        Format::Human => write_human(kind, &outcomes, w),
        _ => write_structured(kind, &outcomes, w),
    })
}

fn write_human(kind: ProtocolKind, outcomes: &[ProtocolOutcome], w: &mut dyn Write) -> Result<()> {
    let h = header(kind, outcomes);
    writeln!(w, "protocol: {}", h.protocol).map_err(io)?;
    writeln!(w, "branches: {}", h.branches).map_err(io)?;
    writeln!(w, "total probability: {}", h.total_probability).map_err(io)?;
    writeln!(w, "success probability: {}", h.success_probability).map_err(io)?;
    for r in to_records(outcomes) {
        let record: Vec<_> = r
            .measurement_record
            .iter()
            .map(|m| format!("{}:{}", m.party, m.outcome))
            .collect();
        writeln!(
            w,
            "#{:<3} {:<28} p={:<12.6e} F={:.12} {} ledger=({},{},{})",
            r.branch_id,
            record.join(" "),
            r.probability,
            r.fidelity,
            if r.succeeded { "ok" } else { "FAIL" },
            r.ledger.ebits,
            r.ledger.cbits_ab,
            r.ledger.cbits_ba
        )
        .map_err(io)?;
    }
    Ok(())
}

fn classify(u: &str, axis: Option<&str>, out: &mut dyn Write) -> Result<()> {
    let u = parse_operator(u)?;
    let axis = axis.map(parse_axis).transpose()?.unwrap_or(Axis::Z);
    let class = classify_operator(&u, &axis);
    let tag = serde_json::to_value(class.tag()).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "operator: {}", render_operator(&u)).map_err(io)?;
    writeln!(out, "axis: {axis}").map_err(io)?;
    writeln!(out, "class: {}", tag.as_str().unwrap_or_default()).map_err(io)?;
    writeln!(out, "commutator_norm: {:e}", commutator_norm(&u, &axis)).map_err(io)?;
    writeln!(
        out,
        "anticommutator_norm: {:e}",
        anticommutator_norm(&u, &axis)
    )
    .map_err(io)?;
    Ok(())
}

fn common_axis(path: &Path, out: &mut dyn Write) -> Result<()> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut set = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or_default().trim();
        if line.is_empty() {
            continue;
        }
        set.push(parse_operator(line).map_err(|e| match e {
            Error::Parse { column, message } => Error::Parse {
                column,
                message: format!("line {}: {message}", k + 1),
            },
            other => other,
        })?);
    }
    match find_common_axis(&set)? {
        Some(a) => writeln!(out, "axis: {a}").map_err(io),
        None => writeln!(out, "axis: none").map_err(io),
    }
}

fn demo(which: Demo, out: &mut dyn Write) -> Result<()> {
    match which {
        Demo::CpEntanglement => {
            let (_, entropy) = demo_cp_entanglement()?;
            writeln!(out, "entropy: {entropy:.12}").map_err(io)
        }
        Demo::CpCapacity => {
            for message in 0..4u8 {
                let decoded = demo_cp_capacity(message)?;
                if decoded != message {
                    return Err(Error::Invariant(format!(
                        "message {message:02b} decoded as {decoded:02b}"
                    )));
                }
                writeln!(out, "message {message:02b} -> decoded {decoded:02b}").map_err(io)?;
            }
            Ok(())
        }
        Demo::CnotReverse => {
            for bit in 0..2u8 {
                let read = demo_cnot_reverse(bit, Mode::Exhaustive)?;
                if read != bit {
                    return Err(Error::Invariant(format!(
                        "bob sent {bit}, alice read {read}"
                    )));
                }
                writeln!(out, "bob bit {bit} -> alice reads {read}").map_err(io)?;
            }
            Ok(())
        }
    }
}

fn ramsey(steps: usize, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    if steps == 0 {
        return Err(Error::Precondition("--steps must be at least 1".into()));
    }
    let rows = ramsey_curve(&ramsey_grid(steps))?;
    with_sink(path, out, |w| {
        writeln!(w, "theta,p_plus").map_err(io)?;
        for (theta, p) in rows {
            writeln!(w, "{theta},{p}").map_err(io)?;
        }
        Ok(())
    })
}

fn verify_all(out: &mut dyn Write) -> Result<i32> {
    let results = verify::run_all(VERIFY_SEED);
    let mut failed = 0;
    for r in &results {
        let status = if r.ok() { "pass" } else { "FAIL" };
        write!(
            out,
            "[{status}] {}::{} {}/{}",
            r.suite, r.name, r.passed, r.total
        )
        .map_err(io)?;
        match &r.detail {
            Some(d) => writeln!(out, " ({d})").map_err(io)?,
            None => writeln!(out).map_err(io)?,
        }
        failed += usize::from(!r.ok());
    }
    writeln!(
        out,
        "{} checks, {} passed, {} failed",
        results.len(),
        results.len() - failed,
        failed
    )
    .map_err(io)?;
    Ok(if failed == 0 { 0 } else { 2 })
}
