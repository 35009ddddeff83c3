//! Benchmark workloads and timing reports.
//!
//! Three workloads are timed over a range of qubit counts:
//!
//! - `gate-sweep`: one gate applied to every qubit of a state, once per iteration.
//! - `value-encoding`: the phase-encoding circuit built by [`build_value_encoding`].
//! - `qcbm`: the layered rotation/CNOT-ring circuit built by [`build_qcbm`].
//!
//! Only gate application is timed. State allocation, circuit construction and angle draws
//! happen outside the measured region, and one warm-up iteration per point is discarded.

use std::f64::consts::PI;
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::circuit::QuantumCircuit;
use crate::error::{Error, Result};
use crate::gates::{apply_unchecked, Gate};
use crate::precision::{Precision, Real, PRECISION};
use crate::state::StateVector;

/// CSV header of [`emit_report`].
pub const CSV_HEADER: [&str; 7] = [
    "workload",
    "gate",
    "qubits",
    "iterations",
    "mean_ns",
    "std_ns",
    "precision",
];

pub const DEFAULT_QUBITS: (usize, usize) = (5, 22);
pub const DEFAULT_LAYERS: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Workload {
    GateSweep,
    ValueEncoding,
    Qcbm,
}

impl fmt::Display for Workload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Workload::GateSweep => "gate-sweep",
            Workload::ValueEncoding => "value-encoding",
            Workload::Qcbm => "qcbm",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Gate selected by name for a sweep. Parameterized gates get angles drawn from the seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GateKind {
    X,
    Y,
    Z,
    H,
    P,
    Rx,
    Ry,
    Rz,
    U,
}

impl GateKind {
    pub const ALL: [GateKind; 9] = [
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::H,
        GateKind::P,
        GateKind::Rx,
        GateKind::Ry,
        GateKind::Rz,
        GateKind::U,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GateKind::X => "x",
            GateKind::Y => "y",
            GateKind::Z => "z",
            GateKind::H => "h",
            GateKind::P => "p",
            GateKind::Rx => "rx",
            GateKind::Ry => "ry",
            GateKind::Rz => "rz",
            GateKind::U => "u",
        }
    }

    /// Concrete gate, drawing any angles uniformly from `[0, 2π)`.
    pub fn instantiate(self, rng: &mut impl Rng) -> Gate {
        let mut angle = || rng.random_range(0.0..2.0 * PI);
        match self {
            GateKind::X => Gate::X,
            GateKind::Y => Gate::Y,
            GateKind::Z => Gate::Z,
            GateKind::H => Gate::H,
            GateKind::P => Gate::P(angle()),
            GateKind::Rx => Gate::Rx(angle()),
            GateKind::Ry => Gate::Ry(angle()),
            GateKind::Rz => Gate::Rz(angle()),
            GateKind::U => Gate::U(angle(), angle(), angle()),
        }
    }
}

impl FromStr for GateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GateKind::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Config(format!("unknown gate '{s}'")))
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Inclusive qubit range, written `LO..HI` (or a single `N`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QubitRange {
    pub lo: usize,
    pub hi: usize,
}

impl QubitRange {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for QubitRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("qubit range must look like LO..HI, got '{s}'"));
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
            None => (s, s),
        };
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        Ok(QubitRange { lo, hi })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub workload: Workload,
    /// Used by `gate-sweep` only.
    pub gate: GateKind,
    pub qubits: QubitRange,
    pub iterations: usize,
    /// Used by `qcbm` only.
    pub layers: usize,
    /// Used by `value-encoding` only.
    pub value: f64,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            workload: Workload::GateSweep,
            gate: GateKind::H,
            qubits: QubitRange {
                lo: DEFAULT_QUBITS.0,
                hi: DEFAULT_QUBITS.1,
            },
            iterations: 10,
            layers: DEFAULT_LAYERS,
            value: 2.4,
            seed: 0,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let QubitRange { lo, hi } = self.qubits;
        let min = if self.workload == Workload::Qcbm {
            2
        } else {
            1
        };
        if lo < min {
            return Err(Error::Config(format!(
                "{} needs at least {min} qubits",
                self.workload
            )));
        }
        if hi < lo {
            return Err(Error::Config(format!("empty qubit range {lo}..{hi}")));
        }
        if hi > crate::state::MAX_QUBITS {
            return Err(Error::TooManyQubits(hi));
        }
        if self.iterations == 0 {
            return Err(Error::Config("iterations must be at least 1".into()));
        }
        if self.layers == 0 {
            return Err(Error::Config("layers must be at least 1".into()));
        }
        Ok(())
    }
}

/// One timed point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub workload: Workload,
    /// Gate name for sweeps, empty for circuit workloads.
    pub gate: String,
    pub qubits: usize,
    pub iterations: usize,
    pub mean_ns: f64,
    pub std_ns: f64,
    pub precision: Precision,
}

/// A point that could not be run, typically because the state does not fit in memory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowFailure {
    pub qubits: usize,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BuildInfo {
    pub crate_version: String,
    pub precision: Precision,
    pub profile: String,
    pub target_arch: String,
    pub target_os: String,
}

impl BuildInfo {
    pub fn current(precision: Precision) -> Self {
        Self {
            crate_version: env!("CARGO_PKG_VERSION").to_string(),
            precision,
            profile: if cfg!(debug_assertions) {
                "debug"
            } else {
                "optimized"
            }
            .to_string(),
            target_arch: std::env::consts::ARCH.to_string(),
            target_os: std::env::consts::OS.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub metadata: BuildInfo,
    /// Sorted by qubit count.
    pub rows: Vec<BenchRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<RowFailure>,
}

impl BenchReport {
    pub fn new(precision: Precision) -> Self {
        Self {
            metadata: BuildInfo::current(precision),
            rows: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Mean and population standard deviation.
fn summarize(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Nanoseconds, clamped to at least 1 so that reported times stay positive.
fn elapsed_ns(start: Instant) -> f64 {
    (start.elapsed().as_nanos() as f64).max(1.0)
}

/// Run the configured workload at the build-time precision.
pub fn run(config: &BenchConfig) -> Result<BenchReport> {
    match config.workload {
        Workload::GateSweep => run_gate_sweep::<crate::Float>(config),
        Workload::ValueEncoding => run_value_encoding(config),
        Workload::Qcbm => run_qcbm(config),
    }
}

/// Time `config.gate` applied to every qubit, for each qubit count in the range.
pub fn run_gate_sweep<F: Real>(config: &BenchConfig) -> Result<BenchReport> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let gate = config.gate.instantiate(&mut rng);
    let mut report = BenchReport::new(F::PRECISION);
    for n in config.qubits.iter() {
        let mut state = match StateVector::<F>::new(n) {
            Ok(s) => s,
            Err(e) => {
                report.failures.push(RowFailure {
                    qubits: n,
                    error: e.to_string(),
                });
                continue;
            }
        };
        let sweep = |state: &mut StateVector<F>| {
            for t in 0..n {
                apply_unchecked(gate, state, t);
            }
        };
        sweep(&mut state);
        let mut times = Vec::with_capacity(config.iterations);
        for _ in 0..config.iterations {
            let start = Instant::now();
            sweep(&mut state);
            times.push(elapsed_ns(start));
        }
        std::hint::black_box(&state);
        let (mean_ns, std_ns) = summarize(&times);
        report.rows.push(BenchRow {
            workload: Workload::GateSweep,
            gate: config.gate.name().to_string(),
            qubits: n,
            iterations: config.iterations,
            mean_ns,
            std_ns,
            precision: F::PRECISION,
        });
    }
    Ok(report)
}

fn run_circuits(
    config: &BenchConfig,
    mut build: impl FnMut(usize) -> Result<QuantumCircuit>,
) -> Result<BenchReport> {
    config.validate()?;
    let mut report = BenchReport::new(PRECISION);
    'points: for n in config.qubits.iter() {
        let mut times = Vec::with_capacity(config.iterations);
        // First run is the warm-up.
        for i in 0..=config.iterations {
            let mut qc = match build(n) {
                Ok(qc) => qc,
                Err(e) => {
                    report.failures.push(RowFailure {
                        qubits: n,
                        error: e.to_string(),
                    });
                    continue 'points;
                }
            };
            let start = Instant::now();
            qc.execute();
            let ns = elapsed_ns(start);
            std::hint::black_box(qc.state());
            if i > 0 {
                times.push(ns);
            }
        }
        let (mean_ns, std_ns) = summarize(&times);
        report.rows.push(BenchRow {
            workload: config.workload,
            gate: String::new(),
            qubits: n,
            iterations: config.iterations,
            mean_ns,
            std_ns,
            precision: PRECISION,
        });
    }
    Ok(report)
}

pub fn run_value_encoding(config: &BenchConfig) -> Result<BenchReport> {
    let value = config.value;
    run_circuits(config, |n| build_value_encoding(n, value))
}

pub fn run_qcbm(config: &BenchConfig) -> Result<BenchReport> {
    let (layers, seed) = (config.layers, config.seed);
    run_circuits(config, |n| build_qcbm(n, layers, seed))
}

/// Encode `value` as a phase gradient over the uniform superposition and decode it with the
/// inverse QFT.
///
/// Qubit `j` receives `P(2π·value / 2^(j+1))` and the inverse QFT runs over `[n-1, ..., 0]`.
/// For integer `value` the final state is `|value mod 2^n>`; otherwise probability
/// concentrates around `round(value)`.
pub fn build_value_encoding(n: usize, value: f64) -> Result<QuantumCircuit> {
    let mut qc = QuantumCircuit::with_qubits(n)?;
    for j in 0..n {
        qc.h(j)?;
    }
    for j in 0..n {
        qc.p(2.0 * PI * value / (1u64 << (j + 1)) as f64, j)?;
    }
    let targets: Vec<usize> = (0..n).rev().collect();
    qc.iqft(&targets)?;
    Ok(qc)
}

/// Layered parameterized circuit.
///
/// Rx, Rz on every qubit; then `layers - 1` times a CNOT ring followed by Rz, Rx, Rz on every
/// qubit; then a final CNOT ring and Rx, Rz on every qubit. The ring is `CNOT(i -> i+1 mod n)`
/// for `i = 0..n`. Angles are drawn uniformly from `[0, 2π)` by a ChaCha8 stream seeded with
/// `seed`.
pub fn build_qcbm(n: usize, layers: usize, seed: u64) -> Result<QuantumCircuit> {
    if n < 2 {
        return Err(Error::Config(format!(
            "qcbm needs at least 2 qubits, got {n}"
        )));
    }
    if layers == 0 {
        return Err(Error::Config("qcbm needs at least 1 layer".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut angle = move || rng.random_range(0.0..2.0 * PI);
    let mut qc = QuantumCircuit::with_qubits(n)?;
    let ring = |qc: &mut QuantumCircuit| -> Result<()> {
        for i in 0..n {
            qc.cx(i, (i + 1) % n)?;
        }
        Ok(())
    };

    for q in 0..n {
        qc.rx(angle(), q)?.rz(angle(), q)?;
    }
    for _ in 1..layers {
        ring(&mut qc)?;
        for q in 0..n {
            qc.rz(angle(), q)?.rx(angle(), q)?.rz(angle(), q)?;
        }
    }
    ring(&mut qc)?;
    for q in 0..n {
        qc.rx(angle(), q)?.rz(angle(), q)?;
    }
    Ok(qc)
}

/// Serialize a report as CSV (header plus one line per row) or JSON.
pub fn write_report<W: Write>(report: &BenchReport, format: OutputFormat, out: W) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            let mut wtr = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(out);
            wtr.write_record(CSV_HEADER)?;
            for row in &report.rows {
                wtr.serialize(row)?;
            }
            wtr.flush()?;
        }
        OutputFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Write a report to `path`.
pub fn emit_report(report: &BenchReport, format: OutputFormat, path: &Path) -> Result<()> {
    let file = std::fs::File::create(path)?;
    let mut buf = std::io::BufWriter::new(file);
    write_report(report, format, &mut buf)?;
    buf.flush()?;
    Ok(())
}

/// Parse rows back from CSV written by [`write_report`].
pub fn read_csv_rows(input: impl std::io::Read) -> Result<Vec<BenchRow>> {
    let mut rdr = csv::Reader::from_reader(input);
    let rows = rdr
        .deserialize()
        .collect::<std::result::Result<Vec<BenchRow>, _>>()?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{Float, Real};

    fn row(n: usize) -> BenchRow {
        BenchRow {
            workload: Workload::GateSweep,
            gate: "h".into(),
            qubits: n,
            iterations: 3,
            mean_ns: 1234.5,
            std_ns: 6.25,
            precision: Precision::Double,
        }
    }

    #[test]
    fn qubit_range_parsing() {
        assert_eq!(
            "5..18".parse::<QubitRange>().unwrap(),
            QubitRange { lo: 5, hi: 18 }
        );
        assert_eq!(
            "5..=18".parse::<QubitRange>().unwrap(),
            QubitRange { lo: 5, hi: 18 }
        );
        assert_eq!(
            "7".parse::<QubitRange>().unwrap(),
            QubitRange { lo: 7, hi: 7 }
        );
        assert!("a..b".parse::<QubitRange>().is_err());
    }

    #[test]
    fn gate_names() {
        for g in GateKind::ALL {
            assert_eq!(g.name().parse::<GateKind>().unwrap(), g);
        }
        assert_eq!("RX".parse::<GateKind>().unwrap(), GateKind::Rx);
        assert!("swap".parse::<GateKind>().is_err());
    }

    #[test]
    fn config_validation() {
        let ok = BenchConfig::default();
        assert!(ok.validate().is_ok());
        let bad = |f: fn(&mut BenchConfig)| {
            let mut c = BenchConfig::default();
            f(&mut c);
            c.validate().is_err()
        };
        assert!(bad(|c| c.qubits.lo = 0));
        assert!(bad(|c| c.qubits = QubitRange { lo: 9, hi: 8 }));
        assert!(bad(|c| c.qubits.hi = 64));
        assert!(bad(|c| c.iterations = 0));
        assert!(bad(|c| c.layers = 0));
        assert!(bad(|c| {
            c.workload = Workload::Qcbm;
            c.qubits.lo = 1;
        }));
    }

    #[test]
    fn single_point_sweep() {
        let config = BenchConfig {
            gate: GateKind::X,
            qubits: QubitRange { lo: 5, hi: 5 },
            iterations: 1,
            ..Default::default()
        };
        let report = run_gate_sweep::<f64>(&config).unwrap();
        assert_eq!(report.rows.len(), 1);
        assert!(report.rows[0].mean_ns > 0.0);
        assert_eq!(report.rows[0].std_ns, 0.0);
        assert!(report.is_complete());
    }

    #[test]
    fn sweep_rows_sorted_and_shaped() {
        let config = BenchConfig {
            gate: GateKind::U,
            qubits: QubitRange { lo: 3, hi: 8 },
            iterations: 2,
            ..Default::default()
        };
        let report = run_gate_sweep::<f32>(&config).unwrap();
        let ns: Vec<usize> = report.rows.iter().map(|r| r.qubits).collect();
        assert_eq!(ns, (3..=8).collect::<Vec<_>>());
        assert!(report
            .rows
            .iter()
            .all(|r| r.precision == Precision::Single && r.mean_ns > 0.0));
    }

    #[test]
    fn infeasible_rows_reported_individually() {
        let config = BenchConfig {
            gate: GateKind::H,
            qubits: QubitRange { lo: 3, hi: 63 },
            iterations: 1,
            ..Default::default()
        };
        // Stop well before the memory ceiling: only check that huge points fail per row.
        let report = run_gate_sweep::<f64>(&BenchConfig {
            qubits: QubitRange { lo: 61, hi: 63 },
            ..config.clone()
        })
        .unwrap();
        assert!(report.rows.is_empty());
        assert_eq!(report.failures.len(), 3);
        assert!(!report.is_complete());
        assert_eq!(report.failures[0].qubits, 61);
    }

    #[test]
    fn circuit_workloads_run() {
        let config = BenchConfig {
            workload: Workload::ValueEncoding,
            qubits: QubitRange { lo: 2, hi: 4 },
            iterations: 2,
            ..Default::default()
        };
        let report = run(&config).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert!(report.rows.iter().all(|r| r.gate.is_empty()));
        let report = run(&BenchConfig {
            workload: Workload::Qcbm,
            layers: 2,
            ..config
        })
        .unwrap();
        assert_eq!(report.rows.len(), 3);
        assert_eq!(report.rows[0].workload, Workload::Qcbm);
    }

    #[test]
    fn qcbm_structure() {
        let qc = build_qcbm(4, 1, 7).unwrap();
        // 4*2 rotations, ring of 4, 4*2 rotations.
        assert_eq!(qc.transformations().len(), 20);
        let qc = build_qcbm(4, 3, 7).unwrap();
        assert_eq!(qc.transformations().len(), 8 + 2 * (4 + 12) + 4 + 8);
        let again = build_qcbm(4, 3, 7).unwrap();
        assert_eq!(qc.transformations(), again.transformations());
        assert_ne!(
            qc.transformations(),
            build_qcbm(4, 3, 8).unwrap().transformations()
        );
        assert!(build_qcbm(1, 1, 0).is_err());
        assert!(build_qcbm(3, 0, 0).is_err());
    }

    #[test]
    fn qcbm_preserves_norm() {
        let mut qc = build_qcbm(4, 1, 7).unwrap();
        qc.execute();
        assert!((qc.state().total_norm() - 1.0).abs() <= Float::NORM_TOLERANCE);
    }

    #[test]
    fn value_encoding_trivial_case() {
        let mut qc = build_value_encoding(1, 0.0).unwrap();
        qc.execute();
        assert!((qc.state().probability(0).unwrap() - 1.0).abs() <= Float::NORM_TOLERANCE);
    }

    #[test]
    fn csv_one_row() {
        let mut report = BenchReport::new(Precision::Double);
        report.rows.push(row(5));
        let mut buf = Vec::new();
        write_report(&report, OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(
            lines[0],
            "workload,gate,qubits,iterations,mean_ns,std_ns,precision"
        );
        assert_eq!(lines[1], "gate-sweep,h,5,3,1234.5,6.25,double");
        assert_eq!(read_csv_rows(text.as_bytes()).unwrap(), report.rows);
    }

    #[test]
    fn csv_empty_report_is_header_only() {
        let report = BenchReport::new(Precision::Single);
        let mut buf = Vec::new();
        write_report(&report, OutputFormat::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "workload,gate,qubits,iterations,mean_ns,std_ns,precision\n"
        );
    }

    #[test]
    fn json_round_trip() {
        let mut report = BenchReport::new(Precision::Double);
        report.rows.extend([row(5), row(6)]);
        let mut buf = Vec::new();
        write_report(&report, OutputFormat::Json, &mut buf).unwrap();
        let back: BenchReport = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, report);
        let value: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert!(value["metadata"]["precision"].is_string());
        assert_eq!(value["rows"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn emit_to_unwritable_path_fails() {
        let report = BenchReport::new(Precision::Double);
        let err = emit_report(
            &report,
            OutputFormat::Csv,
            Path::new("/nonexistent-dir/x/report.csv"),
        );
        assert!(matches!(err, Err(Error::Io(_))));
    }
}
