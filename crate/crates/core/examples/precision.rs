//! Run the same circuit in single and double precision and compare the amplitudes.
//!
//! The kernels are generic over the float type; `State` itself follows the `single` feature.

use qpairs::bench::build_qcbm;
use qpairs::{apply_controlled, StateVector};

pub fn run_example(n: usize) -> qpairs::Result<f64> {
    let qc = build_qcbm(n, 5, 3)?;
    let mut single = StateVector::<f32>::new(n)?;
    let mut double = StateVector::<f64>::new(n)?;
    for tr in qc.transformations() {
        apply_controlled(tr, &mut single)?;
        apply_controlled(tr, &mut double)?;
    }
    let worst = single
        .reals()
        .iter()
        .zip(double.reals())
        .chain(single.imags().iter().zip(double.imags()))
        .map(|(&s, &d)| (s as f64 - d).abs())
        .fold(0.0, f64::max);
    Ok(worst)
}

fn main() -> qpairs::Result<()> {
    println!("build precision: {}", qpairs::PRECISION);
    for n in [4, 8, 12] {
        println!("{n:>2} qubits: max |f32 - f64| = {:.2e}", run_example(n)?);
    }
    Ok(())
}
