//! State-vector storage.
//!
//! A state of `n` qubits holds `2^n` complex amplitudes as two parallel arrays, one for the real
//! components and one for the imaginary components. Amplitude `i` belongs to the outcome whose
//! `n`-bit binary expansion is `i`, with qubit 0 as the least significant bit.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::precision::{Float, Real};

/// Largest supported qubit count; outcome indices must fit in 64 bits.
pub const MAX_QUBITS: usize = 63;

/// 0 means "not configured": fall back to [`default_memory_ceiling`].
static MEMORY_CEILING: AtomicU64 = AtomicU64::new(0);

/// Override the process-wide amplitude memory ceiling. `None` restores the default.
pub fn set_memory_ceiling(bytes: Option<u64>) {
    MEMORY_CEILING.store(bytes.unwrap_or(0), Ordering::Relaxed);
}

/// Current amplitude memory ceiling in bytes.
pub fn memory_ceiling() -> u64 {
    match MEMORY_CEILING.load(Ordering::Relaxed) {
        0 => default_memory_ceiling(),
        bytes => bytes,
    }
}

/// 75% of physical memory, or unbounded if physical memory cannot be determined.
pub fn default_memory_ceiling() -> u64 {
    static DEFAULT: OnceLock<u64> = OnceLock::new();
    *DEFAULT.get_or_init(|| match physical_memory() {
        Some(total) => total / 4 * 3,
        None => u64::MAX,
    })
}

fn physical_memory() -> Option<u64> {
    let meminfo = std::fs::read_to_string("/proc/meminfo").ok()?;
    let line = meminfo.lines().find(|l| l.starts_with("MemTotal:"))?;
    let kib: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    kib.checked_mul(1024)
}

/// Bytes of amplitude storage for `n` qubits at precision `F`.
pub fn amplitude_bytes<F: Real>(n: usize) -> u128 {
    (1u128 << n) * 2 * F::PRECISION.bytes() as u128
}

/// An `n`-qubit quantum state stored as split real/imaginary arrays.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<F: Real> {
    pub(crate) reals: Vec<F>,
    pub(crate) imags: Vec<F>,
    pub(crate) n: usize,
}

/// State vector at the build-time precision.
pub type State = StateVector<Float>;

impl<F: Real> StateVector<F> {
    /// The all-zeros state `|0...0>` on `n` qubits, subject to the process memory ceiling.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_ceiling(n, memory_ceiling())
    }

    /// The all-zeros state with an explicit memory ceiling in bytes.
    pub fn with_ceiling(n: usize, ceiling: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoQubits);
        }
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits(n));
        }
        let requested = amplitude_bytes::<F>(n);
        if requested > ceiling as u128 {
            return Err(Error::Capacity {
                qubits: n,
                requested,
                ceiling,
            });
        }
        let len = 1usize << n;
        let mut reals = zeroed(len, requested)?;
        let imags = zeroed(len, requested)?;
        reals[0] = F::ONE;
        Ok(Self { reals, imags, n })
    }

    /// Build a state from explicit amplitude arrays. No normalization is enforced.
    pub fn from_parts(reals: Vec<F>, imags: Vec<F>) -> Result<Self> {
        let len = reals.len();
        if len != imags.len() || len < 2 || !len.is_power_of_two() {
            return Err(Error::Shape {
                reals: len,
                imags: imags.len(),
            });
        }
        Ok(Self {
            n: len.trailing_zeros() as usize,
            reals,
            imags,
        })
    }

    pub fn into_parts(self) -> (Vec<F>, Vec<F>) {
        (self.reals, self.imags)
    }

    /// Number of qubits.
    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Number of amplitudes, always `2^n`.
    #[allow(clippy::len_without_is_empty)]
    #[inline]
    pub fn len(&self) -> usize {
        self.reals.len()
    }

    #[inline]
    pub fn reals(&self) -> &[F] {
        &self.reals
    }

    #[inline]
    pub fn imags(&self) -> &[F] {
        &self.imags
    }

    /// Amplitude of outcome `i` as `(re, im)`.
    pub fn amplitude(&self, i: usize) -> Result<(F, F)> {
        self.check_outcome(i)?;
        Ok((self.reals[i], self.imags[i]))
    }

    /// `|a_i|^2`
    pub fn probability(&self, i: usize) -> Result<f64> {
        self.check_outcome(i)?;
        Ok(norm_sqr(self.reals[i], self.imags[i]))
    }

    /// Probabilities of every outcome, in outcome order.
    pub fn probabilities(&self) -> Vec<f64> {
        self.reals
            .iter()
            .zip(&self.imags)
            .map(|(&re, &im)| norm_sqr(re, im))
            .collect()
    }

    /// Sum of all outcome probabilities. Diagnostic only.
    pub fn total_norm(&self) -> f64 {
        self.reals
            .iter()
            .zip(&self.imags)
            .map(|(&re, &im)| norm_sqr(re, im))
            .sum()
    }

    pub(crate) fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.n {
            return Err(Error::QubitOutOfRange { qubit, n: self.n });
        }
        Ok(())
    }

    fn check_outcome(&self, i: usize) -> Result<()> {
        if i >= self.len() {
            return Err(Error::OutcomeOutOfRange {
                outcome: i,
                len: self.len(),
            });
        }
        Ok(())
    }
}

#[inline(always)]
pub(crate) fn norm_sqr<F: Real>(re: F, im: F) -> f64 {
    let (re, im) = (re.to_f64(), im.to_f64());
    re * re + im * im
}

fn zeroed<F: Real>(len: usize, requested: u128) -> Result<Vec<F>> {
    let mut v = Vec::new();
    v.try_reserve_exact(len)
        .map_err(|_| Error::Allocation(requested))?;
    v.resize(len, F::ZERO);
    Ok(v)
}
