//! Deferred-execution circuits.
//!
//! A [`QuantumCircuit`] owns one state sized to the sum of its registers and a queue of
//! transformations. Adding a gate only validates and queues it; the state changes when
//! [`QuantumCircuit::execute`] runs the queue in insertion order.
//!
//! The queue is the natural place for reordering or fusing transformations before execution;
//! no such pass is performed.

use std::f64::consts::PI;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::gates::{apply_transformation_unchecked, Gate, QuantumTransformation};
use crate::precision::Real;
use crate::state::{State, StateVector};

/// Indices of a contiguous window of qubits within a circuit's state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumRegister(Vec<usize>);

impl QuantumRegister {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl Index<usize> for QuantumRegister {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

/// Transformations of the inverse QFT over `targets`, with no final swap layer.
///
/// Qubits are processed from the last target to the first: a Hadamard on `targets[j]`, then
/// controlled phases `P(-π / 2^(j-k))` from `targets[j]` onto each earlier `targets[k]`.
/// Passing the qubits most-significant first, `[n-1, ..., 0]`, maps the Fourier state whose
/// qubit `j` carries phase `2πv / 2^(j+1)` to `|v>`.
pub fn iqft_transformations(targets: &[usize]) -> Result<Vec<QuantumTransformation>> {
    check_distinct(targets)?;
    let mut out = Vec::with_capacity(targets.len() * (targets.len() + 1) / 2);
    for j in (0..targets.len()).rev() {
        out.push(QuantumTransformation::single(Gate::H, targets[j]));
        for k in (0..j).rev() {
            let angle = -PI / (1u64 << (j - k)) as f64;
            out.push(QuantumTransformation::new(
                Gate::P(angle),
                targets[k],
                vec![targets[j]],
            )?);
        }
    }
    Ok(out)
}

/// Transformations of the QFT over `targets`: the exact adjoint of [`iqft_transformations`].
pub fn qft_transformations(targets: &[usize]) -> Result<Vec<QuantumTransformation>> {
    let mut out = iqft_transformations(targets)?;
    out.reverse();
    for tr in &mut out {
        tr.gate = tr.gate.inverse();
    }
    Ok(out)
}

fn check_distinct(targets: &[usize]) -> Result<()> {
    for (i, t) in targets.iter().enumerate() {
        if targets[..i].contains(t) {
            return Err(Error::DuplicateTarget(*t));
        }
    }
    Ok(())
}

fn apply_all<F: Real>(
    state: &mut StateVector<F>,
    transformations: &[QuantumTransformation],
) -> Result<()> {
    for tr in transformations {
        tr.validate(state.num_qubits())?;
    }
    for tr in transformations {
        apply_transformation_unchecked(tr, state);
    }
    Ok(())
}

/// Apply the inverse QFT to a state immediately.
pub fn iqft<F: Real>(state: &mut StateVector<F>, targets: &[usize]) -> Result<()> {
    apply_all(state, &iqft_transformations(targets)?)
}

/// Apply the QFT to a state immediately.
pub fn qft<F: Real>(state: &mut StateVector<F>, targets: &[usize]) -> Result<()> {
    apply_all(state, &qft_transformations(targets)?)
}

/// A state plus a queue of transformations that have not been applied yet.
#[derive(Debug, Clone)]
pub struct QuantumCircuit {
    transformations: Vec<QuantumTransformation>,
    state: State,
    widths: Vec<usize>,
}

impl QuantumCircuit {
    /// One register per width, assigned consecutive qubit windows starting at qubit 0, over a
    /// single `|0...0>` state.
    pub fn new(widths: &[usize]) -> Result<(Self, Vec<QuantumRegister>)> {
        let total: usize = widths.iter().sum();
        let state = State::new(total)?;
        let mut start = 0;
        let registers = widths
            .iter()
            .map(|&w| {
                let reg = QuantumRegister((start..start + w).collect());
                start += w;
                reg
            })
            .collect();
        let circuit = Self {
            transformations: Vec::new(),
            state,
            widths: widths.to_vec(),
        };
        Ok((circuit, registers))
    }

    /// Circuit over a single register of `n` qubits.
    pub fn with_qubits(n: usize) -> Result<Self> {
        Self::new(&[n]).map(|(qc, _)| qc)
    }

    pub fn num_qubits(&self) -> usize {
        self.state.num_qubits()
    }

    pub fn register_widths(&self) -> &[usize] {
        &self.widths
    }

    /// Queued transformations, in the order they will be applied.
    pub fn transformations(&self) -> &[QuantumTransformation] {
        &self.transformations
    }

    pub fn state(&self) -> &State {
        &self.state
    }

    pub fn into_state(self) -> State {
        self.state
    }

    /// Queue a transformation after checking it against the circuit's qubit count.
    pub fn add(&mut self, transformation: QuantumTransformation) -> Result<&mut Self> {
        transformation.validate(self.num_qubits())?;
        self.transformations.push(transformation);
        Ok(self)
    }

    pub fn extend(
        &mut self,
        transformations: impl IntoIterator<Item = QuantumTransformation>,
    ) -> Result<&mut Self> {
        for tr in transformations {
            self.add(tr)?;
        }
        Ok(self)
    }

    /// Queue `gate` on `target`.
    pub fn gate(&mut self, gate: Gate, target: usize) -> Result<&mut Self> {
        self.add(QuantumTransformation::single(gate, target))
    }

    /// Queue `gate` on `target` conditioned on all `controls` being 1.
    pub fn controlled(
        &mut self,
        gate: Gate,
        controls: &[usize],
        target: usize,
    ) -> Result<&mut Self> {
        self.add(QuantumTransformation::new(gate, target, controls.to_vec())?)
    }

    pub fn x(&mut self, target: usize) -> Result<&mut Self> {
        self.gate(Gate::X, target)
    }

    pub fn y(&mut self, target: usize) -> Result<&mut Self> {
        self.gate(Gate::Y, target)
    }

    pub fn z(&mut self, target: usize) -> Result<&mut Self> {
        self.gate(Gate::Z, target)
    }

    pub fn h(&mut self, target: usize) -> Result<&mut Self> {
        self.gate(Gate::H, target)
    }

    pub fn p(&mut self, angle: f64, target: usize) -> Result<&mut Self> {
        self.gate(Gate::P(angle), target)
    }

    pub fn rx(&mut self, angle: f64, target: usize) -> Result<&mut Self> {
        self.gate(Gate::Rx(angle), target)
    }

    pub fn ry(&mut self, angle: f64, target: usize) -> Result<&mut Self> {
        self.gate(Gate::Ry(angle), target)
    }

    pub fn rz(&mut self, angle: f64, target: usize) -> Result<&mut Self> {
        self.gate(Gate::Rz(angle), target)
    }

    pub fn u(&mut self, theta: f64, phi: f64, lambda: f64, target: usize) -> Result<&mut Self> {
        self.gate(Gate::U(theta, phi, lambda), target)
    }

    pub fn cx(&mut self, control: usize, target: usize) -> Result<&mut Self> {
        self.controlled(Gate::X, &[control], target)
    }

    pub fn cy(&mut self, control: usize, target: usize) -> Result<&mut Self> {
        self.controlled(Gate::Y, &[control], target)
    }

    pub fn cz(&mut self, control: usize, target: usize) -> Result<&mut Self> {
        self.controlled(Gate::Z, &[control], target)
    }

    pub fn ch(&mut self, control: usize, target: usize) -> Result<&mut Self> {
        self.controlled(Gate::H, &[control], target)
    }

    pub fn cp(&mut self, angle: f64, control: usize, target: usize) -> Result<&mut Self> {
        self.controlled(Gate::P(angle), &[control], target)
    }

    pub fn crx(&mut self, angle: f64, control: usize, target: usize) -> Result<&mut Self> {
        self.controlled(Gate::Rx(angle), &[control], target)
    }

    pub fn cry(&mut self, angle: f64, control: usize, target: usize) -> Result<&mut Self> {
        self.controlled(Gate::Ry(angle), &[control], target)
    }

    pub fn crz(&mut self, angle: f64, control: usize, target: usize) -> Result<&mut Self> {
        self.controlled(Gate::Rz(angle), &[control], target)
    }

    pub fn cu(
        &mut self,
        theta: f64,
        phi: f64,
        lambda: f64,
        control: usize,
        target: usize,
    ) -> Result<&mut Self> {
        self.controlled(Gate::U(theta, phi, lambda), &[control], target)
    }

    /// Toffoli.
    pub fn ccx(&mut self, control0: usize, control1: usize, target: usize) -> Result<&mut Self> {
        self.controlled(Gate::X, &[control0, control1], target)
    }

    pub fn mcx(&mut self, controls: &[usize], target: usize) -> Result<&mut Self> {
        self.controlled(Gate::X, controls, target)
    }

    pub fn mcp(&mut self, angle: f64, controls: &[usize], target: usize) -> Result<&mut Self> {
        self.controlled(Gate::P(angle), controls, target)
    }

    /// Queue the inverse QFT over `targets`. See [`iqft_transformations`].
    pub fn iqft(&mut self, targets: &[usize]) -> Result<&mut Self> {
        let trs = iqft_transformations(targets)?;
        self.extend_checked(trs)
    }

    /// Queue the QFT over `targets`.
    pub fn qft(&mut self, targets: &[usize]) -> Result<&mut Self> {
        let trs = qft_transformations(targets)?;
        self.extend_checked(trs)
    }

    /// All-or-nothing append.
    fn extend_checked(&mut self, trs: Vec<QuantumTransformation>) -> Result<&mut Self> {
        for tr in &trs {
            tr.validate(self.num_qubits())?;
        }
        self.transformations.extend(trs);
        Ok(self)
    }

    /// Apply and drain the queue. Executing again without new transformations is a no-op.
    pub fn execute(&mut self) {
        for tr in self.transformations.drain(..) {
            apply_transformation_unchecked(&tr, &mut self.state);
        }
    }
}
