//! A single-threaded state-vector quantum simulator.
//!
//! A single-qubit gate on target qubit `t` mixes only the two amplitudes of outcomes that
//! differ in bit `t`, and it preserves their combined probability. Every gate application is
//! therefore a walk over index pairs ([`pairs`]) with a small per-pair update ([`gates`]),
//! specialized per gate so that, for example, `X` performs no arithmetic and `Z` touches only
//! half of the state.
//!
//! Gates can be applied directly to a [`State`], or queued on a [`QuantumCircuit`] and run with
//! [`QuantumCircuit::execute`]. Measurement is simulated by [`get_samples`].
//!
//! ```
//! use qpairs::{QuantumCircuit, get_samples};
//! use std::f64::consts::PI;
//!
//! let n = 3;
//! let mut qc = QuantumCircuit::with_qubits(n)?;
//! for j in 0..n {
//!     qc.h(j)?;
//! }
//! for j in 0..n {
//!     qc.p(2.0 * PI * 2.4 / (1 << (j + 1)) as f64, j)?;
//! }
//! qc.iqft(&[2, 1, 0])?;
//! qc.execute();
//!
//! let probs = qc.state().probabilities();
//! let peak = (0..8).max_by(|&a, &b| probs[a].total_cmp(&probs[b])).unwrap();
//! assert_eq!(peak, 2);
//!
//! let samples = get_samples(qc.state(), 1000, 7)?;
//! assert_eq!(samples.outcomes.len(), 1000);
//! # Ok::<(), qpairs::Error>(())
//! ```
//!
//! Amplitudes are `f64` by default; the `single` feature switches [`Float`] to `f32`.

pub mod bench;
pub mod circuit;
pub mod error;
pub mod gates;
mod kernels;
pub mod measurement;
pub mod pairs;
pub mod precision;
pub mod state;

pub use circuit::{iqft, qft, QuantumCircuit, QuantumRegister};
pub use error::{Error, Result};
pub use gates::{
    apply, apply_controlled, apply_general, apply_generic, apply_h, apply_p, apply_rz, apply_x,
    apply_y, apply_z, c_apply, mc_apply, Gate, QuantumTransformation,
};
pub use measurement::{get_samples, SampleSet};
pub use precision::{Float, Precision, Real, PRECISION};
pub use state::{State, StateVector};
