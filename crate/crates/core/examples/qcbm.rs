//! A layered parameterized circuit of rotations and CNOT rings, executed and sampled.

use qpairs::bench::build_qcbm;
use qpairs::{get_samples, State};

pub fn run_example(n: usize, layers: usize, seed: u64) -> qpairs::Result<State> {
    let mut qc = build_qcbm(n, layers, seed)?;
    println!(
        "{} transformations on {n} qubits",
        qc.transformations().len()
    );
    qc.execute();
    Ok(qc.into_state())
}

fn main() -> qpairs::Result<()> {
    let state = run_example(6, 4, 42)?;
    let samples = get_samples(&state, 10_000, 1)?;
    let mut top: Vec<_> = samples.counts().into_iter().collect();
    top.sort_by_key(|&(_, count)| std::cmp::Reverse(count));
    for (outcome, count) in top.into_iter().take(5) {
        println!(
            "{outcome:06b}: {count:>5}  (exact {:.4})",
            state.probability(outcome)?
        );
    }
    Ok(())
}
