//! Draw measurement outcomes from a state. Seeds make the draws reproducible.

use std::collections::BTreeMap;

use qpairs::{get_samples, QuantumCircuit};

pub fn run_example(shots: usize, seed: u64) -> qpairs::Result<BTreeMap<usize, usize>> {
    // Bell pair: half |00>, half |11>.
    let mut qc = QuantumCircuit::with_qubits(2)?;
    qc.h(0)?.cx(0, 1)?;
    qc.execute();
    Ok(get_samples(qc.state(), shots, seed)?.counts())
}

fn main() -> qpairs::Result<()> {
    for (outcome, count) in run_example(1000, 7)? {
        println!("{outcome:02b}: {count}");
    }
    Ok(())
}
