//! Real and complex embedding vectors.
//!
//! A [`ComplexEmbedding`] stores each component in polar form, `e_i e^{iφ_i}`,
//! with `e_i ≥ 0` and the phase canonicalized to `(−π, π]` on construction.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance used when checking that a vector is unit-normalized.
pub const UNIT_NORM_TOL: f64 = 1e-9;

/// Maps an angle into `(−π, π]`.
pub fn canonical_phase(phase: f64) -> f64 {
    if phase > -PI && phase <= PI {
        return phase;
    }
    let wrapped = (phase + PI).rem_euclid(2.0 * PI) - PI;
    if wrapped <= -PI {
        PI
    } else {
        wrapped
    }
}

fn l2_norm(values: impl Iterator<Item = f64>) -> f64 {
    values.map(|v| v * v).sum::<f64>().sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealEmbedding {
    values: Vec<f64>,
}

impl RealEmbedding {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::BadDimension { requested: 0, available: 0 });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidComponent { index, reason: "not a finite number" });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn norm(&self) -> f64 {
        l2_norm(self.values.iter().copied())
    }

    pub fn is_unit(&self) -> bool {
        (self.norm() - 1.0).abs() <= UNIT_NORM_TOL
    }

    /// Returns `self / ‖self‖`.
    pub fn normalize(&self) -> Result<Self> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self { values: self.values.iter().map(|v| v / norm).collect() })
    }

    /// Keeps the first `k` components and renormalizes.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        check_truncation(k, self.dim())?;
        Self { values: self.values[..k].to_vec() }.normalize()
    }

    /// Real dot product.
    pub fn dot(&self, other: &Self) -> Result<f64> {
        check_dims(self.dim(), other.dim())?;
        Ok(self.values.iter().zip(&other.values).map(|(x, y)| x * y).sum())
    }

    /// The same vector as a complex embedding with every phase at zero.
    ///
    /// Negative components become magnitude `|e|` with phase `π`.
    pub fn to_complex(&self) -> ComplexEmbedding {
        let (magnitudes, phases) =
            self.values.iter().map(|&v| if v < 0.0 { (-v, PI) } else { (v, 0.0) }).unzip();
        ComplexEmbedding { magnitudes, phases }
    }

    /// Packs consecutive pairs `(a_{2i-1}, a_{2i})` into one complex component
    /// `α_i e^{iφ_i}`.
    ///
    /// `φ_i = ±arccos(a_{2i-1}/α_i)` with the sign of `a_{2i}`; this is the
    /// principal argument, evaluated with `atan2` for accuracy near the axes.
    /// Pairs with `α_i = 0` get `φ_i = 0`.
    pub fn pack_to_complex(&self) -> Result<ComplexEmbedding> {
        if !self.dim().is_multiple_of(2) {
            return Err(Error::OddDimension(self.dim()));
        }
        let (magnitudes, phases) = self
            .values
            .chunks_exact(2)
            .map(|pair| {
                let (re, im) = (pair[0], pair[1]);
                let magnitude = re.hypot(im);
                if magnitude == 0.0 {
                    return (0.0, 0.0);
                }
                // -0.0 counts as non-negative, so (−1, −0) maps to +π.
                let im = if im == 0.0 { 0.0 } else { im };
                (magnitude, im.atan2(re))
            })
            .unzip();
        Ok(ComplexEmbedding { magnitudes, phases })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexEmbedding {
    magnitudes: Vec<f64>,
    phases: Vec<f64>,
}

impl ComplexEmbedding {
    /// Builds a complex embedding from polar components. Phases are
    /// canonicalized to `(−π, π]`.
    pub fn new(magnitudes: Vec<f64>, phases: Vec<f64>) -> Result<Self> {
        check_dims(magnitudes.len(), phases.len())?;
        if magnitudes.is_empty() {
            return Err(Error::BadDimension { requested: 0, available: 0 });
        }
        for (index, (&m, &p)) in magnitudes.iter().zip(&phases).enumerate() {
            if !m.is_finite() || !p.is_finite() {
                return Err(Error::InvalidComponent { index, reason: "not a finite number" });
            }
            if m < 0.0 {
                return Err(Error::InvalidComponent { index, reason: "negative magnitude" });
            }
        }
        let phases = phases.into_iter().map(canonical_phase).collect();
        Ok(Self { magnitudes, phases })
    }

    /// Builds from `(magnitude, phase)` pairs.
    pub fn from_polar_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        let (m, p) = pairs.iter().copied().unzip();
        Self::new(m, p)
    }

    pub fn magnitudes(&self) -> &[f64] {
        &self.magnitudes
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn dim(&self) -> usize {
        self.magnitudes.len()
    }

    pub fn norm(&self) -> f64 {
        l2_norm(self.magnitudes.iter().copied())
    }

    pub fn is_unit(&self) -> bool {
        (self.norm() - 1.0).abs() <= UNIT_NORM_TOL
    }

    /// True when every phase is exactly zero.
    pub fn is_real(&self) -> bool {
        self.phases.iter().all(|&p| p == 0.0)
    }

    pub fn component(&self, i: usize) -> Complex64 {
        Complex64::from_polar(self.magnitudes[i], self.phases[i])
    }

    pub fn components(&self) -> impl Iterator<Item = Complex64> + '_ {
        (0..self.dim()).map(|i| self.component(i))
    }

    /// Returns `self / ‖self‖`; phases are untouched.
    pub fn normalize(&self) -> Result<Self> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            magnitudes: self.magnitudes.iter().map(|m| m / norm).collect(),
            phases: self.phases.clone(),
        })
    }

    /// Keeps the first `k` components and renormalizes.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        check_truncation(k, self.dim())?;
        Self { magnitudes: self.magnitudes[..k].to_vec(), phases: self.phases[..k].to_vec() }.normalize()
    }

    /// Shifts every phase by `-offset`, re-canonicalizing.
    pub fn rotate(&self, offset: f64) -> Self {
        Self {
            magnitudes: self.magnitudes.clone(),
            phases: self.phases.iter().map(|p| canonical_phase(p - offset)).collect(),
        }
    }

    /// Interleaves `(α_i cos φ_i, α_i sin φ_i)` into a real vector of length `2N`.
    pub fn unpack_to_real(&self) -> RealEmbedding {
        let values = self
            .magnitudes
            .iter()
            .zip(&self.phases)
            .flat_map(|(&m, &p)| {
                let (sin, cos) = p.sin_cos();
                [m * cos, m * sin]
            })
            .collect();
        RealEmbedding { values }
    }
}

/// Per-dimension qubit payload for a pair of vectors.
///
/// `a_i = c·alpha`, `b_i = c·beta`, with `c² = a_i² + b_i²`. When both
/// components are zero the dimension is degenerate: `c = alpha = beta = 0`
/// and no qubit is built for it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EncodedDimension {
    pub index: usize,
    pub alpha: f64,
    pub beta: f64,
    pub phi_a: f64,
    pub phi_b: f64,
    pub c: f64,
}

impl EncodedDimension {
    pub fn is_degenerate(&self) -> bool {
        self.c == 0.0
    }

    /// `c²`, i.e. `a_i² + b_i²`.
    pub fn weight(&self) -> f64 {
        self.c * self.c
    }

    /// The exact contribution `a_i b_i e^{i(ϕ_i − φ_i)}`.
    pub fn contribution(&self) -> Complex64 {
        let ab = self.weight() * self.alpha * self.beta;
        Complex64::from_polar(ab, self.phi_b - self.phi_a)
    }
}

/// Splits each dimension pair into a scaling factor and qubit amplitudes.
pub fn encode_pair(a: &ComplexEmbedding, b: &ComplexEmbedding) -> Result<Vec<EncodedDimension>> {
    check_dims(a.dim(), b.dim())?;
    Ok((0..a.dim())
        .map(|i| {
            let (ai, bi) = (a.magnitudes[i], b.magnitudes[i]);
            let c = ai.hypot(bi);
            let (alpha, beta) = if c > 0.0 { (ai / c, bi / c) } else { (0.0, 0.0) };
            EncodedDimension { index: i, alpha, beta, phi_a: a.phases[i], phi_b: b.phases[i], c }
        })
        .collect())
}

pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

fn check_truncation(k: usize, available: usize) -> Result<()> {
    if k == 0 || k > available {
        return Err(Error::BadDimension { requested: k, available });
    }
    Ok(())
}
