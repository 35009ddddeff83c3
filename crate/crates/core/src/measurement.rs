//! Sampling measurement outcomes by weighted reservoir sampling.
//!
//! Every shot keeps its own single-item reservoir. One pass over the amplitudes accumulates the
//! running weight `W`; outcome `i` with weight `w_i = |a_i|^2` replaces the current holder of
//! each shot independently with probability `w_i / W`. After the pass each shot holds outcome
//! `i` with probability `w_i / sum(w)`, so shots are i.i.d. draws from the state's distribution.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::precision::Real;
use crate::state::{norm_sqr, StateVector};

/// Outcomes of repeated measurement in the computational basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSet {
    pub shots: usize,
    pub outcomes: Vec<usize>,
    /// Seed of the ChaCha8 stream used to draw the samples.
    pub seed: u64,
}

impl SampleSet {
    /// Number of times each observed outcome occurred.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &o in &self.outcomes {
            *counts.entry(o).or_insert(0) += 1;
        }
        counts
    }

    /// Dense counts for outcomes `0..len`.
    pub fn histogram(&self, len: usize) -> Vec<usize> {
        let mut hist = vec![0; len];
        for &o in &self.outcomes {
            hist[o] += 1;
        }
        hist
    }
}

/// Draw `shots` outcomes from `state` in a single pass over its amplitudes.
///
/// Fails if the total probability deviates from 1 by more than the precision's tolerance
/// (`1e-6` for `f64`, `1e-4` for `f32`).
pub fn get_samples<F: Real>(state: &StateVector<F>, shots: usize, seed: u64) -> Result<SampleSet> {
    if shots == 0 {
        return Err(Error::NoShots);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcomes = vec![0usize; shots];
    let mut running = 0.0f64;
    for (i, (&re, &im)) in state.reals().iter().zip(state.imags()).enumerate() {
        let w = norm_sqr(re, im);
        if w <= 0.0 {
            continue;
        }
        running += w;
        let p = w / running;
        for holder in outcomes.iter_mut() {
            if rng.random::<f64>() < p {
                *holder = i;
            }
        }
    }
    // The running total is the state's norm; checking it here keeps this a single pass.
    // Written so that a NaN total is rejected too.
    let normalized = (running - 1.0).abs() <= F::NORM_TOLERANCE;
    if !normalized {
        return Err(Error::Unnormalized(running));
    }
    Ok(SampleSet {
        shots,
        outcomes,
        seed,
    })
}
