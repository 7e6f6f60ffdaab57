//! Density-matrix view of the reconstruction.
//!
//! The weights `c_i²/2` form a diagonal matrix `ρ_c` with unit trace for unit
//! inputs, and the similarity is `ρ_c·P_c − i·ρ_c·P_s` where `P_c`, `P_s` hold
//! the `2·P(0) − 1` terms of the cosine and sine circuits.

use num_complex::Complex64;
use serde::Serialize;

use crate::embedding::{check_dims, ComplexEmbedding};
use crate::error::Result;
use crate::qsim::ProbEstimate;

/// Diagonal density matrix, stored as its diagonal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityMatrix {
    diagonal: Vec<f64>,
}

impl DensityMatrix {
    pub fn from_diagonal(diagonal: Vec<f64>) -> Self {
        debug_assert!(diagonal.iter().all(|d| *d >= 0.0));
        Self { diagonal }
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    pub fn trace(&self) -> f64 {
        self.diagonal.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eigenpair {
    pub eigenvalue: f64,
    /// The basis axis (embedding dimension) carrying this eigenvalue.
    pub index: usize,
}

/// `ρ_c = diag((a_i² + b_i²)/2)`.
pub fn density_matrix(a: &ComplexEmbedding, b: &ComplexEmbedding) -> Result<DensityMatrix> {
    check_dims(a.dim(), b.dim())?;
    let diagonal = a.magnitudes().iter().zip(b.magnitudes()).map(|(x, y)| 0.5 * (x * x + y * y)).collect();
    Ok(DensityMatrix { diagonal })
}

/// Eigenvalues in descending order; ties keep ascending index order.
pub fn spectrum(rho: &DensityMatrix) -> Vec<Eigenpair> {
    let mut pairs: Vec<Eigenpair> =
        rho.diagonal.iter().enumerate().map(|(index, &eigenvalue)| Eigenpair { eigenvalue, index }).collect();
    pairs.sort_by(|x, y| y.eigenvalue.total_cmp(&x.eigenvalue));
    pairs
}

/// `Σ ρ_ii (2·P_cos,i(0) − 1) − i Σ ρ_ii (2·P_sin,i(0) − 1)`.
pub fn expectation(
    rho: &DensityMatrix,
    probs_cos: &[ProbEstimate],
    probs_sin: &[ProbEstimate],
) -> Result<Complex64> {
    check_dims(rho.dim(), probs_cos.len())?;
    check_dims(rho.dim(), probs_sin.len())?;
    let re = rho.diagonal.iter().zip(probs_cos).map(|(w, p)| w * p.bias()).sum::<f64>();
    let im = rho.diagonal.iter().zip(probs_sin).map(|(w, p)| w * p.bias()).sum::<f64>();
    Ok(Complex64::new(re, -im))
}
