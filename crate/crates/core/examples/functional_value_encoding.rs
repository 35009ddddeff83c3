//! Encode a real value as a phase gradient and read it back with the inverse QFT, calling the
//! gate functions directly on a state.

use std::f64::consts::PI;

use qpairs::{apply_h, apply_p, iqft, State};

pub fn run_example() -> qpairs::Result<State> {
    let (n, v) = (3, 2.4);
    let mut state = State::new(n)?;
    for j in 0..n {
        apply_h(&mut state, j)?;
    }
    for j in 0..n {
        apply_p(&mut state, j, 2.0 * PI * v / (1 << (j + 1)) as f64)?;
    }
    iqft(&mut state, &[2, 1, 0])?;
    Ok(state)
}

fn main() -> qpairs::Result<()> {
    let state = run_example()?;
    for (i, p) in state.probabilities().iter().enumerate() {
        println!(
            "|{i:03b}>  {p:.4}  {}",
            "#".repeat((p * 50.0).round() as usize)
        );
    }
    Ok(())
}
