use thiserror::Error;

/// Errors surfaced by state construction, gate application, circuits, sampling and benchmarking.
#[derive(Debug, Error)]
pub enum Error {
    #[error("a state needs at least one qubit")]
    NoQubits,
    #[error("{0} qubits exceeds the supported maximum of 63")]
    TooManyQubits(usize),
    #[error("state of {qubits} qubits needs {requested} bytes, above the memory ceiling of {ceiling} bytes")]
    Capacity {
        qubits: usize,
        requested: u128,
        ceiling: u64,
    },
    #[error("allocation of {0} bytes for the state vector failed")]
    Allocation(u128),
    #[error(
        "amplitude arrays must have equal power-of-two lengths >= 2 (got {reals} and {imags})"
    )]
    Shape { reals: usize, imags: usize },
    #[error("qubit {qubit} is out of range for a {n}-qubit state")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("outcome {outcome} is out of range for a state of {len} amplitudes")]
    OutcomeOutOfRange { outcome: usize, len: usize },
    #[error("qubit {0} is used as both target and control")]
    TargetIsControl(usize),
    #[error("control qubit {0} is listed more than once")]
    DuplicateControl(usize),
    #[error("qubit {0} appears more than once in the target list")]
    DuplicateTarget(usize),
    #[error("at least one shot is required")]
    NoShots,
    #[error("state is not normalized (total probability {0})")]
    Unnormalized(f64),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
