//! Time a small gate sweep from code and render the report as CSV.

use qpairs::bench::{self, BenchConfig, GateKind, OutputFormat, QubitRange};

pub fn run_example() -> qpairs::Result<String> {
    let config = BenchConfig {
        gate: GateKind::Rx,
        qubits: QubitRange { lo: 4, hi: 10 },
        iterations: 5,
        ..BenchConfig::default()
    };
    let report = bench::run(&config)?;
    let mut out = Vec::new();
    bench::write_report(&report, OutputFormat::Csv, &mut out)?;
    Ok(String::from_utf8(out).expect("csv is utf-8"))
}

fn main() -> qpairs::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
