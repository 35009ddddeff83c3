//! Single-qubit gates and their application to a state.
//!
//! [`apply`] dispatches each gate to a kernel that exploits its matrix structure:
//!
//! | gate          | pair traversal                         | update                         |
//! |---------------|----------------------------------------|--------------------------------|
//! | X             | prefix/suffix blocks, stride 2 at t=0   | swap, no arithmetic            |
//! | Y             | prefix/suffix blocks                   | swap with sign/component flips |
//! | Z             | one side of each block                 | negate                         |
//! | H             | prefix/suffix blocks, stride 2 at t=0   | pre-scaled sum and difference  |
//! | P             | one side of each block                 | phase multiply                 |
//! | Rz            | chunk pairs                            | constant phase per chunk       |
//! | Rx, Ry, U     | prefix/suffix blocks, stride 2 at t=0   | full complex matrix product    |
//!
//! Controlled transformations run the same per-gate arithmetic over
//! [`pairs::controlled`].

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels;
use crate::pairs;
use crate::precision::Real;
use crate::state::StateVector;

/// Row-major `[g00, g01, g10, g11]`, each as `(re, im)`.
pub type Coefficients<F> = [(F, F); 4];

/// A single-qubit gate. Angles are in radians and are not reduced modulo 2π.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Gate {
    X,
    Y,
    Z,
    H,
    /// Phase `diag(1, e^{iφ})`.
    P(f64),
    Rx(f64),
    Ry(f64),
    /// `diag(e^{-iλ/2}, e^{iλ/2})`
    Rz(f64),
    /// `U(θ, φ, λ) = [[cos(θ/2), -e^{iλ} sin(θ/2)], [e^{iφ} sin(θ/2), e^{i(φ+λ)} cos(θ/2)]]`
    U(f64, f64, f64),
}

impl Gate {
    /// The gate's 2x2 matrix in the flat layout.
    pub fn coefficients<F: Real>(&self) -> Coefficients<F> {
        let m: [(f64, f64); 4] = match *self {
            Gate::X => [(0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.0, 0.0)],
            Gate::Y => [(0.0, 0.0), (0.0, -1.0), (0.0, 1.0), (0.0, 0.0)],
            Gate::Z => [(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-1.0, 0.0)],
            Gate::H => {
                let s = FRAC_1_SQRT_2;
                [(s, 0.0), (s, 0.0), (s, 0.0), (-s, 0.0)]
            }
            Gate::P(phi) => [(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (phi.cos(), phi.sin())],
            Gate::Rx(theta) => {
                let (s, c) = (theta / 2.0).sin_cos();
                [(c, 0.0), (0.0, -s), (0.0, -s), (c, 0.0)]
            }
            Gate::Ry(theta) => {
                let (s, c) = (theta / 2.0).sin_cos();
                [(c, 0.0), (-s, 0.0), (s, 0.0), (c, 0.0)]
            }
            Gate::Rz(lambda) => {
                let (s, c) = (lambda / 2.0).sin_cos();
                [(c, -s), (0.0, 0.0), (0.0, 0.0), (c, s)]
            }
            Gate::U(theta, phi, lambda) => {
                let (s, c) = (theta / 2.0).sin_cos();
                [
                    (c, 0.0),
                    (-lambda.cos() * s, -lambda.sin() * s),
                    (phi.cos() * s, phi.sin() * s),
                    ((phi + lambda).cos() * c, (phi + lambda).sin() * c),
                ]
            }
        };
        m.map(|(re, im)| (F::from_f64(re), F::from_f64(im)))
    }

    /// The adjoint gate.
    pub fn inverse(&self) -> Gate {
        match *self {
            g @ (Gate::X | Gate::Y | Gate::Z | Gate::H) => g,
            Gate::P(phi) => Gate::P(-phi),
            Gate::Rx(theta) => Gate::Rx(-theta),
            Gate::Ry(theta) => Gate::Ry(-theta),
            Gate::Rz(lambda) => Gate::Rz(-lambda),
            Gate::U(theta, phi, lambda) => Gate::U(-theta, -lambda, -phi),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::X => "x",
            Gate::Y => "y",
            Gate::Z => "z",
            Gate::H => "h",
            Gate::P(_) => "p",
            Gate::Rx(_) => "rx",
            Gate::Ry(_) => "ry",
            Gate::Rz(_) => "rz",
            Gate::U(..) => "u",
        }
    }
}

/// A gate with its target qubit and (possibly empty) set of control qubits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantumTransformation {
    pub gate: Gate,
    pub target: usize,
    pub controls: Vec<usize>,
}

impl QuantumTransformation {
    /// Rejects a target listed among the controls and repeated controls.
    pub fn new(gate: Gate, target: usize, controls: Vec<usize>) -> Result<Self> {
        for (i, &c) in controls.iter().enumerate() {
            if c == target {
                return Err(Error::TargetIsControl(c));
            }
            if controls[..i].contains(&c) {
                return Err(Error::DuplicateControl(c));
            }
        }
        Ok(Self {
            gate,
            target,
            controls,
        })
    }

    pub fn single(gate: Gate, target: usize) -> Self {
        Self {
            gate,
            target,
            controls: Vec::new(),
        }
    }

    /// Check every index against an `n`-qubit state.
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.target >= n {
            return Err(Error::QubitOutOfRange {
                qubit: self.target,
                n,
            });
        }
        if let Some(&c) = self.controls.iter().find(|&&c| c >= n) {
            return Err(Error::QubitOutOfRange { qubit: c, n });
        }
        Self::new(self.gate, self.target, self.controls.clone()).map(|_| ())
    }
}

/// Apply `gate` to `target`, using the gate's specialized kernel.
pub fn apply<F: Real>(gate: Gate, state: &mut StateVector<F>, target: usize) -> Result<()> {
    state.check_qubit(target)?;
    apply_unchecked(gate, state, target);
    Ok(())
}

pub(crate) fn apply_unchecked<F: Real>(gate: Gate, state: &mut StateVector<F>, target: usize) {
    let n = state.n;
    let (re, im) = (&mut state.reals[..], &mut state.imags[..]);
    match gate {
        Gate::X => kernels::x(re, im, target),
        Gate::Y => kernels::y(re, im, target),
        Gate::Z => kernels::z(re, im, target),
        Gate::H => kernels::h(re, im, target),
        Gate::P(phi) => kernels::phase(re, im, target, phi),
        Gate::Rz(lambda) => kernels::rz(re, im, n, target, lambda),
        Gate::Rx(_) | Gate::Ry(_) | Gate::U(..) => {
            kernels::matrix(re, im, target, &gate.coefficients())
        }
    }
}

/// Swap the two sides of every pair.
pub fn apply_x<F: Real>(state: &mut StateVector<F>, target: usize) -> Result<()> {
    apply(Gate::X, state, target)
}

pub fn apply_y<F: Real>(state: &mut StateVector<F>, target: usize) -> Result<()> {
    apply(Gate::Y, state, target)
}

/// Negate the one side of every pair; the zero side is never touched.
pub fn apply_z<F: Real>(state: &mut StateVector<F>, target: usize) -> Result<()> {
    apply(Gate::Z, state, target)
}

pub fn apply_h<F: Real>(state: &mut StateVector<F>, target: usize) -> Result<()> {
    apply(Gate::H, state, target)
}

/// Multiply the one side of every pair by `e^{iφ}`; the zero side is never touched.
pub fn apply_p<F: Real>(state: &mut StateVector<F>, target: usize, phi: f64) -> Result<()> {
    apply(Gate::P(phi), state, target)
}

pub fn apply_rz<F: Real>(state: &mut StateVector<F>, target: usize, lambda: f64) -> Result<()> {
    apply(Gate::Rz(lambda), state, target)
}

/// Full complex matrix-vector product per pair. This is the kernel used for Rx, Ry and U, but
/// it accepts any gate.
pub fn apply_general<F: Real>(state: &mut StateVector<F>, target: usize, gate: Gate) -> Result<()> {
    state.check_qubit(target)?;
    kernels::matrix(
        &mut state.reals,
        &mut state.imags,
        target,
        &gate.coefficients(),
    );
    Ok(())
}

/// Reference update: the gate's coefficient matrix applied pair by pair over the closed-form
/// insertion stream, with no per-gate specialization.
pub fn apply_generic<F: Real>(gate: Gate, state: &mut StateVector<F>, target: usize) -> Result<()> {
    let pairs = pairs::insert(state.n, target)?;
    kernels::matrix_on_pairs(
        &mut state.reals,
        &mut state.imags,
        pairs,
        &gate.coefficients(),
    );
    Ok(())
}

/// Apply a transformation, restricting it to pairs whose control bits are all 1.
pub fn apply_controlled<F: Real>(
    transformation: &QuantumTransformation,
    state: &mut StateVector<F>,
) -> Result<()> {
    transformation.validate(state.n)?;
    apply_transformation_unchecked(transformation, state);
    Ok(())
}

pub(crate) fn apply_transformation_unchecked<F: Real>(
    transformation: &QuantumTransformation,
    state: &mut StateVector<F>,
) {
    let QuantumTransformation {
        gate,
        target,
        controls,
    } = transformation;
    if controls.is_empty() {
        apply_unchecked(*gate, state, *target);
        return;
    }
    let pairs = pairs::controlled(state.n, *target, controls).expect("transformation validated");
    kernels::on_pairs(*gate, &mut state.reals, &mut state.imags, pairs);
}

/// Apply `gate` to `target` conditioned on a single control.
pub fn c_apply<F: Real>(
    gate: Gate,
    state: &mut StateVector<F>,
    control: usize,
    target: usize,
) -> Result<()> {
    apply_controlled(
        &QuantumTransformation::new(gate, target, vec![control])?,
        state,
    )
}

/// Apply `gate` to `target` conditioned on several controls.
pub fn mc_apply<F: Real>(
    gate: Gate,
    state: &mut StateVector<F>,
    controls: &[usize],
    target: usize,
) -> Result<()> {
    apply_controlled(
        &QuantumTransformation::new(gate, target, controls.to_vec())?,
        state,
    )
}
