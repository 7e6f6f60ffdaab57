//! Simulation of independent single-qubit circuits.
//!
//! Every circuit used here acts on one qubit at a time, so a register is a
//! list of two-amplitude states and never a `2^N` statevector. Each qubit is
//! initialized to `amp0|0⟩ + amp1|1⟩`, optionally passed through `S`, then
//! through `H`, and measured in the computational basis.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use serde::Serialize;

use crate::error::{Error, Result};

const STATE_NORM_TOL: f64 = 1e-12;

/// A normalized single-qubit state `amp0|0⟩ + amp1|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitInit {
    amp0: Complex64,
    amp1: Complex64,
}

impl QubitInit {
    pub fn new(amp0: Complex64, amp1: Complex64) -> Result<Self> {
        let norm = amp0.norm_sqr() + amp1.norm_sqr();
        if !norm.is_finite() || (norm - 1.0).abs() > STATE_NORM_TOL {
            return Err(Error::InvalidQubitState(norm));
        }
        Ok(Self { amp0, amp1 })
    }

    /// `α e^{iφ}|0⟩ + β e^{iϕ}|1⟩`.
    pub fn from_polar(alpha: f64, phi: f64, beta: f64, varphi: f64) -> Result<Self> {
        Self::new(Complex64::from_polar(alpha, phi), Complex64::from_polar(beta, varphi))
    }

    pub fn amp0(&self) -> Complex64 {
        self.amp0
    }

    pub fn amp1(&self) -> Complex64 {
        self.amp1
    }

    pub fn swapped(&self) -> Self {
        Self { amp0: self.amp1, amp1: self.amp0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    /// `diag(1, i)`
    S,
    /// `(1/√2)[[1, 1], [1, −1]]`
    H,
}

impl Gate {
    pub fn apply(self, [a0, a1]: [Complex64; 2]) -> [Complex64; 2] {
        match self {
            Gate::S => [a0, a1 * Complex64::i()],
            Gate::H => [(a0 + a1) * FRAC_1_SQRT_2, (a0 - a1) * FRAC_1_SQRT_2],
        }
    }
}

/// Which of the two measurement circuits a qubit runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CircuitKind {
    /// `H` only; `P(0) = ½(1 + 2αβ cos(φ − ϕ))`.
    Cos,
    /// `S` then `H`; `P(0) = ½(1 + 2αβ sin(φ − ϕ))`.
    Sin,
}

impl CircuitKind {
    pub fn gates(self) -> &'static [Gate] {
        match self {
            CircuitKind::Cos => &[Gate::H],
            CircuitKind::Sin => &[Gate::S, Gate::H],
        }
    }
}

/// Symmetric readout error: each measured bit flips with probability
/// `readout_flip`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NoiseModel {
    readout_flip: f64,
}

impl NoiseModel {
    pub fn new(readout_flip: f64) -> Result<Self> {
        if !(0.0..0.5).contains(&readout_flip) {
            return Err(Error::InvalidNoise(readout_flip));
        }
        Ok(Self { readout_flip })
    }

    pub fn readout_flip(&self) -> f64 {
        self.readout_flip
    }

    /// Expected observed `P(0)` given the true one.
    pub fn corrupt(&self, p0: f64) -> f64 {
        let f = self.readout_flip;
        p0 * (1.0 - f) + (1.0 - p0) * f
    }
}

/// Outcome probabilities of one qubit, either exact (`shots == 0`) or
/// estimated from counts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbEstimate {
    pub p0: f64,
    pub p1: f64,
    pub shots: u64,
    pub stderr: f64,
}

impl ProbEstimate {
    pub fn exact(p0: f64) -> Self {
        let p0 = p0.clamp(0.0, 1.0);
        Self { p0, p1: 1.0 - p0, shots: 0, stderr: 0.0 }
    }

    pub fn from_counts(count0: u64, shots: u64) -> Self {
        debug_assert!(shots > 0 && count0 <= shots);
        let p0 = count0 as f64 / shots as f64;
        let p1 = (shots - count0) as f64 / shots as f64;
        Self { p0, p1, shots, stderr: (p0 * p1 / shots as f64).sqrt() }
    }

    pub fn is_exact(&self) -> bool {
        self.shots == 0
    }

    /// `2·P(0) − 1`, the interference term recovered from the measurement.
    pub fn bias(&self) -> f64 {
        2.0 * self.p0 - 1.0
    }
}

/// How a register is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Shots { shots: u64, seed: u64 },
}

/// Runs the circuit on the two-amplitude state and returns the final state.
pub fn final_state(init: &QubitInit, kind: CircuitKind) -> [Complex64; 2] {
    kind.gates().iter().fold([init.amp0, init.amp1], |state, gate| gate.apply(state))
}

pub fn exact_probability(init: &QubitInit, kind: CircuitKind) -> ProbEstimate {
    let [a0, a1] = final_state(init, kind);
    let (p0, p1) = (a0.norm_sqr(), a1.norm_sqr());
    // renormalize away the last-ulp drift so p0 + p1 == 1
    ProbEstimate::exact(p0 / (p0 + p1))
}

/// Draws `shots` measurements. Outcomes are counted with a binomial draw
/// from a ChaCha8 stream seeded by `seed`; with a noise model the zero and
/// one counts are then each thinned by independent flip draws.
pub fn sample(
    init: &QubitInit,
    kind: CircuitKind,
    shots: u64,
    seed: u64,
    noise: Option<&NoiseModel>,
) -> Result<ProbEstimate> {
    if shots == 0 {
        return Err(Error::InvalidShots);
    }
    let p0 = exact_probability(init, kind).p0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut count0 = binomial(&mut rng, shots, p0);
    if let Some(noise) = noise {
        let f = noise.readout_flip;
        let zero_to_one = binomial(&mut rng, count0, f);
        let one_to_zero = binomial(&mut rng, shots - count0, f);
        count0 = count0 - zero_to_one + one_to_zero;
    }
    Ok(ProbEstimate::from_counts(count0, shots))
}

fn binomial(rng: &mut ChaCha8Rng, n: u64, p: f64) -> u64 {
    if n == 0 || p <= 0.0 {
        return 0;
    }
    if p >= 1.0 {
        return n;
    }
    Binomial::new(n, p).expect("p checked to lie in (0, 1)").sample(rng)
}

/// Inverts the symmetric readout flip: `p0 = (raw − f)/(1 − 2f)`, clamped.
pub fn mitigate_readout(raw: &ProbEstimate, noise: &NoiseModel) -> ProbEstimate {
    let f = noise.readout_flip;
    let scale = 1.0 - 2.0 * f;
    let p0 = ((raw.p0 - f) / scale).clamp(0.0, 1.0);
    ProbEstimate { p0, p1: 1.0 - p0, shots: raw.shots, stderr: raw.stderr / scale }
}

/// SplitMix64 output function applied to a single input.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed used for logical qubit `qubit` of a run seeded with `seed`.
pub fn qubit_seed(seed: u64, qubit: u64) -> u64 {
    seed ^ splitmix64(qubit)
}

/// One qubit of a register, addressed by its logical index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitJob {
    pub qubit: u64,
    pub init: QubitInit,
    pub kind: CircuitKind,
}

/// Evaluates a single qubit under `mode`. In exact mode a noise model
/// shifts the probabilities to their expected noisy values.
pub fn run_qubit(job: &QubitJob, mode: Mode, noise: Option<&NoiseModel>) -> Result<ProbEstimate> {
    match mode {
        Mode::Exact => {
            let exact = exact_probability(&job.init, job.kind);
            Ok(match noise {
                Some(n) => ProbEstimate::exact(n.corrupt(exact.p0)),
                None => exact,
            })
        }
        Mode::Shots { shots, seed } => sample(&job.init, job.kind, shots, qubit_seed(seed, job.qubit), noise),
    }
}

/// Evaluates qubits with explicit logical indices. Results do not depend on
/// the order of `jobs`.
pub fn run_jobs(jobs: &[QubitJob], mode: Mode, noise: Option<&NoiseModel>) -> Result<Vec<ProbEstimate>> {
    jobs.iter().map(|job| run_qubit(job, mode, noise)).collect()
}

/// Evaluates a register where qubit `k` is `inits[k]` run through `kinds[k]`.
pub fn run_register(
    inits: &[QubitInit],
    kinds: &[CircuitKind],
    mode: Mode,
    noise: Option<&NoiseModel>,
) -> Result<Vec<ProbEstimate>> {
    crate::embedding::check_dims(inits.len(), kinds.len())?;
    let jobs: Vec<QubitJob> = inits
        .iter()
        .zip(kinds)
        .enumerate()
        .map(|(k, (&init, &kind))| QubitJob { qubit: k as u64, init, kind })
        .collect();
    run_jobs(&jobs, mode, noise)
}
