use qpairs::bench::{self, BenchConfig, GateKind, QubitRange, Workload};

#[test]
fn h_sweep_grows_with_the_state() {
    let config = BenchConfig {
        gate: GateKind::H,
        qubits: QubitRange { lo: 5, hi: 16 },
        iterations: 10,
        ..BenchConfig::default()
    };
    let report = bench::run(&config).unwrap();
    assert_eq!(report.rows.len(), 12);
    assert!(report
        .rows
        .iter()
        .all(|r| r.mean_ns > 0.0 && r.std_ns >= 0.0));
    // Each extra qubit doubles the data and adds a pass, so growth is far above timer noise
    // once the state no longer fits in the first cache levels.
    for pair in report.rows.windows(2).filter(|w| w[0].qubits >= 12) {
        assert!(pair[1].mean_ns >= pair[0].mean_ns, "{pair:?}");
    }
}

#[test]
fn reports_are_structurally_deterministic() {
    for workload in [Workload::GateSweep, Workload::ValueEncoding, Workload::Qcbm] {
        let config = BenchConfig {
            workload,
            qubits: QubitRange { lo: 3, hi: 6 },
            iterations: 2,
            layers: 2,
            ..BenchConfig::default()
        };
        let shape = |r: &bench::BenchReport| {
            r.rows
                .iter()
                .map(|row| (row.workload, row.gate.clone(), row.qubits, row.iterations))
                .collect::<Vec<_>>()
        };
        let (a, b) = (bench::run(&config).unwrap(), bench::run(&config).unwrap());
        assert_eq!(shape(&a), shape(&b));
        assert_eq!(a.rows.len(), 4);
    }
}
