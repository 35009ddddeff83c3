//! Controlled and multi-controlled gates: a GHZ state, then a Toffoli that only fires on |11x>.

use qpairs::{apply_h, c_apply, mc_apply, Gate, State};

pub fn run_example() -> qpairs::Result<(State, State)> {
    let mut ghz = State::new(3)?;
    apply_h(&mut ghz, 0)?;
    c_apply(Gate::X, &mut ghz, 0, 1)?;
    c_apply(Gate::X, &mut ghz, 1, 2)?;

    // |011> -> |111>
    let mut toffoli = State::new(3)?;
    qpairs::apply_x(&mut toffoli, 0)?;
    qpairs::apply_x(&mut toffoli, 1)?;
    mc_apply(Gate::X, &mut toffoli, &[0, 1], 2)?;
    Ok((ghz, toffoli))
}

fn main() -> qpairs::Result<()> {
    let (ghz, toffoli) = run_example()?;
    println!("GHZ probabilities: {:?}", ghz.probabilities());
    println!("Toffoli on |011>: {:?}", toffoli.probabilities());
    Ok(())
}
