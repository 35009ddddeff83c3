use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use qpairs::bench::{self, BenchConfig, GateKind, OutputFormat, QubitRange, Workload};

/// Time gate sweeps and benchmark circuits, writing a CSV or JSON report.
#[derive(Debug, Parser)]
#[command(name = "qpairs-bench", version)]
struct Args {
    #[arg(long, value_enum, default_value_t = Workload::GateSweep)]
    workload: Workload,
    /// Gate for gate-sweep: x, y, z, h, p, rx, ry, rz or u.
    #[arg(long, default_value = "h")]
    gate: GateKind,
    /// Inclusive qubit range, LO..HI.
    #[arg(long, default_value = "5..22")]
    qubits: QubitRange,
    #[arg(long, default_value_t = 10)]
    iters: usize,
    /// Rotation layers for qcbm.
    #[arg(long, default_value_t = bench::DEFAULT_LAYERS)]
    layers: usize,
    /// Encoded value for value-encoding.
    #[arg(long, default_value_t = 2.4)]
    value: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Report destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest state allocation in bytes; defaults to 75% of physical memory.
    #[arg(long)]
    max_memory: Option<u64>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    qpairs::state::set_memory_ceiling(args.max_memory);
    let config = BenchConfig {
        workload: args.workload,
        gate: args.gate,
        qubits: args.qubits,
        iterations: args.iters,
        layers: args.layers,
        value: args.value,
        seed: args.seed,
    };
    let report = match bench::run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &args.out {
        Some(path) => bench::emit_report(&report, args.format, path),
        None => bench::write_report(&report, args.format, std::io::stdout().lock()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    for failure in &report.failures {
        eprintln!("failed at {} qubits: {}", failure.qubits, failure.error);
    }
    let _ = std::io::stderr().flush();
    if report.is_complete() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
