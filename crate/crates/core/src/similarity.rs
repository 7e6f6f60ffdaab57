//! Complex cosine similarity: the classical value and its reconstruction
//! from circuit measurements.
//!
//! For unit vectors `a = [a_i e^{iφ_i}]` and `b = [b_i e^{iϕ_i}]`,
//!
//! ```text
//! S_C = Σ a_i b_i e^{i(ϕ_i − φ_i)}
//!     = ½ Σ c_i² (2·P_cos,i(0) − 1)  −  i·½ Σ c_i² (2·P_sin,i(0) − 1)
//! ```
//!
//! where dimension `i` is encoded as the qubit `α_i e^{iφ_i}|0⟩ + β_i e^{iϕ_i}|1⟩`
//! with `a_i = c_i α_i`, `b_i = c_i β_i`. The minus sign on the imaginary part
//! comes from the S-circuit measuring `sin(φ − ϕ) = −sin(ϕ − φ)`.
//!
//! Logical qubit `2i` is the cosine circuit of dimension `i` and `2i + 1` the
//! sine circuit. Degenerate dimensions (`c_i = 0`) get no qubits but keep
//! their indices.

use num_complex::Complex64;
use serde::Serialize;

use crate::embedding::{self, ComplexEmbedding, EncodedDimension, RealEmbedding};
use crate::error::{Error, Result};
use crate::qsim::{self, CircuitKind, Mode, NoiseModel, ProbEstimate, QubitInit, QubitJob};

/// How a [`SimilarityResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Method {
    ClassicalOracle,
    QuantumExact,
    QuantumSampled { shots: u64, seed: u64 },
}

impl From<Mode> for Method {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Exact => Method::QuantumExact,
            Mode::Shots { shots, seed } => Method::QuantumSampled { shots, seed },
        }
    }
}

/// Readout handling for the quantum estimators.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Readout {
    #[default]
    Ideal,
    /// Measurements pass through the noise model.
    Noisy(NoiseModel),
    /// Measurements pass through the noise model and are then inverted.
    Mitigated(NoiseModel),
}

impl Readout {
    fn noise(&self) -> Option<&NoiseModel> {
        match self {
            Readout::Ideal => None,
            Readout::Noisy(n) | Readout::Mitigated(n) => Some(n),
        }
    }

    fn finish(&self, raw: ProbEstimate) -> ProbEstimate {
        match self {
            Readout::Mitigated(n) => qsim::mitigate_readout(&raw, n),
            _ => raw,
        }
    }
}

/// A measured qubit and the dimension it encodes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QubitReading {
    pub qubit: u64,
    pub dim: usize,
    pub kind: CircuitKind,
    pub estimate: ProbEstimate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityResult {
    pub value: Complex64,
    pub magnitude: f64,
    pub per_dim: Vec<Complex64>,
    pub method: Method,
    pub stderr_real: f64,
    pub stderr_imag: f64,
    /// Qubit measurements, in logical-qubit order. Empty for the classical oracle.
    pub readings: Vec<QubitReading>,
}

impl SimilarityResult {
    fn from_parts(per_dim: Vec<Complex64>, method: Method) -> Self {
        let value: Complex64 = per_dim.iter().sum();
        Self {
            value,
            magnitude: value.norm(),
            per_dim,
            method,
            stderr_real: 0.0,
            stderr_imag: 0.0,
            readings: Vec::new(),
        }
    }
}

/// `|S_C| = sqrt(Re² + Im²)`.
pub fn magnitude(result: &SimilarityResult) -> f64 {
    result.value.re.hypot(result.value.im)
}

/// `aᴴb / (‖a‖‖b‖)`, summed directly over components.
pub fn classical_similarity(a: &ComplexEmbedding, b: &ComplexEmbedding) -> Result<SimilarityResult> {
    embedding::check_dims(a.dim(), b.dim())?;
    let scale = a.norm() * b.norm();
    if scale == 0.0 {
        return Err(Error::ZeroVector);
    }
    let per_dim = a.components().zip(b.components()).map(|(x, y)| x.conj() * y / scale).collect();
    Ok(SimilarityResult::from_parts(per_dim, Method::ClassicalOracle))
}

/// Real cosine similarity `a·b / (‖a‖‖b‖)`; the imaginary part is exactly 0.
pub fn classical_similarity_real(a: &RealEmbedding, b: &RealEmbedding) -> Result<SimilarityResult> {
    embedding::check_dims(a.dim(), b.dim())?;
    let scale = a.norm() * b.norm();
    if scale == 0.0 {
        return Err(Error::ZeroVector);
    }
    let per_dim =
        a.values().iter().zip(b.values()).map(|(x, y)| Complex64::new(x * y / scale, 0.0)).collect();
    Ok(SimilarityResult::from_parts(per_dim, Method::ClassicalOracle))
}

fn require_unit_pair(dim_a: usize, norm_a: f64, dim_b: usize, norm_b: f64) -> Result<()> {
    embedding::check_dims(dim_a, dim_b)?;
    for norm in [norm_a, norm_b] {
        if norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        if (norm - 1.0).abs() > embedding::UNIT_NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
    }
    Ok(())
}

/// Builds the cosine and sine qubit for every non-degenerate dimension.
pub fn build_register(encoded: &[EncodedDimension]) -> Result<Vec<QubitJob>> {
    let mut jobs = Vec::with_capacity(2 * encoded.len());
    for d in encoded.iter().filter(|d| !d.is_degenerate()) {
        let init = QubitInit::from_polar(d.alpha, d.phi_a, d.beta, d.phi_b)?;
        let base = 2 * d.index as u64;
        jobs.push(QubitJob { qubit: base, init, kind: CircuitKind::Cos });
        jobs.push(QubitJob { qubit: base + 1, init, kind: CircuitKind::Sin });
    }
    Ok(jobs)
}

/// Estimates `S_C` from the cosine and sine circuits of every dimension.
///
/// Inputs must already be unit-normalized.
pub fn quantum_similarity(
    a: &ComplexEmbedding,
    b: &ComplexEmbedding,
    mode: Mode,
    readout: Readout,
) -> Result<SimilarityResult> {
    require_unit_pair(a.dim(), a.norm(), b.dim(), b.norm())?;
    let encoded = embedding::encode_pair(a, b)?;
    let jobs = build_register(&encoded)?;
    let estimates = qsim::run_jobs(&jobs, mode, readout.noise())?;

    let mut per_dim = vec![Complex64::new(0.0, 0.0); encoded.len()];
    let (mut var_re, mut var_im) = (0.0, 0.0);
    let mut readings = Vec::with_capacity(jobs.len());
    for (job, raw) in jobs.iter().zip(estimates) {
        let estimate = readout.finish(raw);
        let dim = (job.qubit / 2) as usize;
        let weight = encoded[dim].weight();
        let term = 0.5 * weight * estimate.bias();
        let var = (weight * estimate.stderr).powi(2);
        match job.kind {
            CircuitKind::Cos => {
                per_dim[dim].re = term;
                var_re += var;
            }
            CircuitKind::Sin => {
                per_dim[dim].im = -term;
                var_im += var;
            }
        }
        readings.push(QubitReading { qubit: job.qubit, dim, kind: job.kind, estimate });
    }

    let mut result = SimilarityResult::from_parts(per_dim, mode.into());
    result.stderr_real = var_re.sqrt();
    result.stderr_imag = var_im.sqrt();
    result.readings = readings;
    Ok(result)
}

/// Real-valued variant: only cosine circuits are built, one per dimension,
/// on logical qubit `i`. Components keep their sign in the qubit amplitudes.
pub fn quantum_similarity_real(
    a: &RealEmbedding,
    b: &RealEmbedding,
    mode: Mode,
    readout: Readout,
) -> Result<SimilarityResult> {
    require_unit_pair(a.dim(), a.norm(), b.dim(), b.norm())?;
    let mut weights = vec![0.0; a.dim()];
    let mut jobs = Vec::with_capacity(a.dim());
    for (i, (&x, &y)) in a.values().iter().zip(b.values()).enumerate() {
        let c = x.hypot(y);
        weights[i] = c * c;
        if c == 0.0 {
            continue;
        }
        let init = QubitInit::new(Complex64::new(x / c, 0.0), Complex64::new(y / c, 0.0))?;
        jobs.push(QubitJob { qubit: i as u64, init, kind: CircuitKind::Cos });
    }
    let estimates = qsim::run_jobs(&jobs, mode, readout.noise())?;

    let mut per_dim = vec![Complex64::new(0.0, 0.0); a.dim()];
    let mut var = 0.0;
    let mut readings = Vec::with_capacity(jobs.len());
    for (job, raw) in jobs.iter().zip(estimates) {
        let estimate = readout.finish(raw);
        let dim = job.qubit as usize;
        per_dim[dim].re = 0.5 * weights[dim] * estimate.bias();
        var += (weights[dim] * estimate.stderr).powi(2);
        readings.push(QubitReading { qubit: job.qubit, dim, kind: job.kind, estimate });
    }

    let mut result = SimilarityResult::from_parts(per_dim, mode.into());
    result.stderr_real = var.sqrt();
    result.readings = readings;
    Ok(result)
}

/// `S_C(a, b) = e^{i·global_phase} · S̃_C(reduced_a, reduced_b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseFactored {
    pub global_phase: f64,
    pub reduced_a: ComplexEmbedding,
    pub reduced_b: ComplexEmbedding,
}

/// Pulls the leading dimension's relative phase `ϕ₁ − φ₁` out of the pair so
/// that the first term of the reduced similarity is real.
pub fn phase_factor(a: &ComplexEmbedding, b: &ComplexEmbedding) -> Result<PhaseFactored> {
    embedding::check_dims(a.dim(), b.dim())?;
    if a.magnitudes()[0] == 0.0 || b.magnitudes()[0] == 0.0 {
        return Err(Error::DegenerateLeadingDimension);
    }
    let global_phase = b.phases()[0] - a.phases()[0];
    Ok(PhaseFactored { global_phase, reduced_a: a.clone(), reduced_b: b.rotate(global_phase) })
}
