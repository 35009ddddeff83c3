//! The same value encoding, queued on a circuit with a named register and executed at once.

use std::f64::consts::PI;

use qpairs::{QuantumCircuit, State};

pub fn run_example(value: f64) -> qpairs::Result<State> {
    let (mut qc, regs) = QuantumCircuit::new(&[4])?;
    let q = &regs[0];
    for j in q.iter() {
        qc.h(j)?;
    }
    for (j, target) in q.iter().enumerate() {
        qc.p(2.0 * PI * value / (1 << (j + 1)) as f64, target)?;
    }
    let reversed: Vec<usize> = q.iter().rev().collect();
    qc.iqft(&reversed)?;
    qc.execute();
    Ok(qc.into_state())
}

fn main() -> qpairs::Result<()> {
    for value in [3.0, 7.5, 11.2] {
        let probs = run_example(value)?.probabilities();
        let (best, p) = probs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap();
        println!("value {value:>4}: most likely outcome {best:>2} (p = {p:.3})");
    }
    Ok(())
}
