//! Dense-matrix reference model for checking the pair kernels.
//!
//! Everything here works on full `2^n x 2^n` complex matrices built from Kronecker products and
//! projectors, with gate matrices written out from their textbook definitions. None of it calls
//! into the simulator's kernels or coefficient tables.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64 as C;
use qpairs::{Gate, QuantumTransformation, StateVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

fn expi(theta: f64) -> C {
    C::from_polar(1.0, theta)
}

/// Row-major square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Dense {
    pub dim: usize,
    pub data: Vec<C>,
}

impl Dense {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![c(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = c(1.0, 0.0);
        }
        Self { dim, data }
    }

    pub fn from_2x2(m: [[C; 2]; 2]) -> Self {
        Self {
            dim: 2,
            data: vec![m[0][0], m[0][1], m[1][0], m[1][1]],
        }
    }

    pub fn at(&self, r: usize, col: usize) -> C {
        self.data[r * self.dim + col]
    }

    /// `self ⊗ other`
    pub fn kron(&self, other: &Dense) -> Dense {
        let dim = self.dim * other.dim;
        let mut data = vec![c(0.0, 0.0); dim * dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.at(i, j);
                if a == c(0.0, 0.0) {
                    continue;
                }
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        data[(i * other.dim + k) * dim + j * other.dim + l] = a * other.at(k, l);
                    }
                }
            }
        }
        Dense { dim, data }
    }

    pub fn matmul(&self, other: &Dense) -> Dense {
        let dim = self.dim;
        let mut data = vec![c(0.0, 0.0); dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let a = self.at(i, k);
                if a == c(0.0, 0.0) {
                    continue;
                }
                for j in 0..dim {
                    data[i * dim + j] += a * other.at(k, j);
                }
            }
        }
        Dense { dim, data }
    }

    pub fn matvec(&self, v: &[C]) -> Vec<C> {
        self.data
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn adjoint(&self) -> Dense {
        let dim = self.dim;
        let mut data = vec![c(0.0, 0.0); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                data[j * dim + i] = self.at(i, j).conj();
            }
        }
        Dense { dim, data }
    }

    pub fn max_diff(&self, other: &Dense) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Textbook 2x2 matrix of each gate.
pub fn gate_matrix(gate: Gate) -> [[C; 2]; 2] {
    let zero = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    match gate {
        Gate::X => [[zero, one], [one, zero]],
        Gate::Y => [[zero, -i], [i, zero]],
        Gate::Z => [[one, zero], [zero, -one]],
        Gate::H => {
            let s = c(1.0 / 2f64.sqrt(), 0.0);
            [[s, s], [s, -s]]
        }
        Gate::P(phi) => [[one, zero], [zero, expi(phi)]],
        // exp(-iθX/2) = cos(θ/2) I - i sin(θ/2) X
        Gate::Rx(theta) => {
            let (cs, sn) = ((theta / 2.0).cos(), (theta / 2.0).sin());
            [[c(cs, 0.0), -i * sn], [-i * sn, c(cs, 0.0)]]
        }
        Gate::Ry(theta) => {
            let (cs, sn) = ((theta / 2.0).cos(), (theta / 2.0).sin());
            [[c(cs, 0.0), c(-sn, 0.0)], [c(sn, 0.0), c(cs, 0.0)]]
        }
        Gate::Rz(lambda) => [[expi(-lambda / 2.0), zero], [zero, expi(lambda / 2.0)]],
        Gate::U(theta, phi, lambda) => {
            let (cs, sn) = ((theta / 2.0).cos(), (theta / 2.0).sin());
            [
                [c(cs, 0.0), -expi(lambda) * sn],
                [expi(phi) * sn, expi(phi + lambda) * cs],
            ]
        }
    }
}

/// `I ⊗ ... ⊗ g ⊗ ... ⊗ I` with `g` at qubit `t`; qubit 0 is the rightmost factor.
pub fn embed(n: usize, t: usize, g: [[C; 2]; 2]) -> Dense {
    let mut m = Dense::identity(1);
    for q in (0..n).rev() {
        let factor = if q == t {
            Dense::from_2x2(g)
        } else {
            Dense::identity(2)
        };
        m = m.kron(&factor);
    }
    m
}

/// `(I - P) + P·G`, with `P` the projector onto outcomes whose control bits are all 1.
pub fn controlled_unitary(n: usize, t: usize, controls: &[usize], g: [[C; 2]; 2]) -> Dense {
    let full = embed(n, t, g);
    let dim = 1 << n;
    let mut projector = Dense::identity(dim);
    for x in 0..dim {
        if !controls.iter().all(|&ctl| (x >> ctl) & 1 == 1) {
            projector.data[x * dim + x] = c(0.0, 0.0);
        }
    }
    let pg = projector.matmul(&full);
    let mut out = Dense::identity(dim);
    for k in 0..dim * dim {
        out.data[k] = out.data[k] - projector.data[k] + pg.data[k];
    }
    out
}

pub fn transformation_unitary(n: usize, tr: &QuantumTransformation) -> Dense {
    controlled_unitary(n, tr.target, &tr.controls, gate_matrix(tr.gate))
}

/// Apply a list of transformations to a dense vector, one dense matrix at a time.
pub fn run_dense(n: usize, trs: &[QuantumTransformation], mut v: Vec<C>) -> Vec<C> {
    for tr in trs {
        v = transformation_unitary(n, tr).matvec(&v);
    }
    v
}

pub fn product_unitary(n: usize, trs: &[QuantumTransformation]) -> Dense {
    let mut u = Dense::identity(1 << n);
    for tr in trs {
        u = transformation_unitary(n, tr).matmul(&u);
    }
    u
}

fn bit_reverse(x: usize, n: usize) -> usize {
    (0..n).fold(0, |acc, b| acc | (((x >> b) & 1) << (n - 1 - b)))
}

/// Inverse DFT composed with bit reversal of the input index:
/// `<y|U|x> = exp(-2πi · y · rev(x) / N) / √N`.
pub fn reversed_input_idft(n: usize) -> Dense {
    let dim = 1 << n;
    let norm = 1.0 / (dim as f64).sqrt();
    let mut data = vec![c(0.0, 0.0); dim * dim];
    for y in 0..dim {
        for x in 0..dim {
            let k = (y * bit_reverse(x, n)) % dim;
            data[y * dim + x] = expi(-2.0 * PI * k as f64 / dim as f64) * norm;
        }
    }
    Dense { dim, data }
}

pub fn random_vector(n: usize, rng: &mut Rng64) -> Vec<C> {
    let mut v: Vec<C> = (0..1 << n)
        .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|a| *a /= norm);
    v
}

pub fn to_state(v: &[C]) -> StateVector<f64> {
    StateVector::from_parts(
        v.iter().map(|a| a.re).collect(),
        v.iter().map(|a| a.im).collect(),
    )
    .unwrap()
}

pub fn to_state_f32(v: &[C]) -> StateVector<f32> {
    StateVector::from_parts(
        v.iter().map(|a| a.re as f32).collect(),
        v.iter().map(|a| a.im as f32).collect(),
    )
    .unwrap()
}

pub fn to_vector(s: &StateVector<f64>) -> Vec<C> {
    s.reals()
        .iter()
        .zip(s.imags())
        .map(|(&re, &im)| c(re, im))
        .collect()
}

/// Largest componentwise (re or im) difference.
pub fn max_diff(s: &StateVector<f64>, v: &[C]) -> f64 {
    s.reals()
        .iter()
        .zip(s.imags())
        .zip(v)
        .map(|((re, im), a)| (re - a.re).abs().max((im - a.im).abs()))
        .fold(0.0, f64::max)
}

pub fn max_state_diff(a: &StateVector<f64>, b: &StateVector<f64>) -> f64 {
    a.reals()
        .iter()
        .zip(b.reals())
        .chain(a.imags().iter().zip(b.imags()))
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn random_angle(rng: &mut Rng64) -> f64 {
    rng.random_range(-2.0 * PI..2.0 * PI)
}

/// One instance of every gate variant, with random angles.
pub fn all_variants(rng: &mut Rng64) -> [Gate; 9] {
    [
        Gate::X,
        Gate::Y,
        Gate::Z,
        Gate::H,
        Gate::P(random_angle(rng)),
        Gate::Rx(random_angle(rng)),
        Gate::Ry(random_angle(rng)),
        Gate::Rz(random_angle(rng)),
        Gate::U(random_angle(rng), random_angle(rng), random_angle(rng)),
    ]
}

pub fn random_gate(rng: &mut Rng64) -> Gate {
    let variants = all_variants(rng);
    variants[rng.random_range(0..variants.len())]
}

/// Uniform draws pushed through the cumulative distribution with binary search.
pub fn cdf_samples(probs: &[f64], shots: usize, rng: &mut Rng64) -> Vec<usize> {
    let mut cdf = Vec::with_capacity(probs.len());
    let mut acc = 0.0;
    for p in probs {
        acc += p;
        cdf.push(acc);
    }
    (0..shots)
        .map(|_| {
            let u = rng.random::<f64>() * acc;
            cdf.partition_point(|&x| x <= u).min(probs.len() - 1)
        })
        .collect()
}

/// Pearson statistic and p-value against `probs`, skipping zero-probability outcomes.
/// Panics if an impossible outcome was observed.
pub fn chi_square(counts: &[usize], probs: &[f64]) -> (f64, f64) {
    use statrs::distribution::{ChiSquared, ContinuousCDF};
    let shots: usize = counts.iter().sum();
    let mut stat = 0.0;
    let mut bins = 0;
    for (&k, &p) in counts.iter().zip(probs) {
        if p <= 0.0 {
            assert_eq!(k, 0, "sampled an outcome of probability zero");
            continue;
        }
        let expected = p * shots as f64;
        stat += (k as f64 - expected).powi(2) / expected;
        bins += 1;
    }
    if bins < 2 {
        return (stat, 1.0);
    }
    let dist = ChiSquared::new((bins - 1) as f64).unwrap();
    (stat, 1.0 - dist.cdf(stat))
}
