//! Interchangeable similarity estimators, looked up by name.
//!
//! The built-in registry holds:
//!
//! | name        | method                                        |
//! |-------------|-----------------------------------------------|
//! | `classical` | direct `aᴴb / (‖a‖‖b‖)`                        |
//! | `exact`     | circuit probabilities evaluated analytically  |
//! | `shots`     | circuit probabilities estimated from shots    |

use std::collections::BTreeMap;

use crate::embedding::{ComplexEmbedding, RealEmbedding};
use crate::error::{Error, Result};
use crate::qsim::{Mode, NoiseModel};
use crate::similarity::{self, Readout, SimilarityResult};

/// Settings shared by every estimator. Each estimator reads only the fields
/// it needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimatorConfig {
    pub shots: u64,
    pub seed: u64,
    pub noise: Option<NoiseModel>,
    pub mitigate: bool,
}

impl Default for EstimatorConfig {
    fn default() -> Self {
        Self { shots: 4096, seed: 0, noise: None, mitigate: false }
    }
}

impl EstimatorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.shots == 0 {
            return Err(Error::InvalidShots);
        }
        if self.mitigate && self.noise.is_none() {
            return Err(Error::InvalidConfig(
                "readout mitigation needs a nonzero readout flip probability".into(),
            ));
        }
        Ok(())
    }

    pub fn readout(&self) -> Readout {
        match (self.noise, self.mitigate) {
            (None, _) => Readout::Ideal,
            (Some(n), false) => Readout::Noisy(n),
            (Some(n), true) => Readout::Mitigated(n),
        }
    }
}

pub trait SimilarityEstimator: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn estimate(
        &self,
        a: &ComplexEmbedding,
        b: &ComplexEmbedding,
        cfg: &EstimatorConfig,
    ) -> Result<SimilarityResult>;

    /// Estimate for real inputs. Defaults to lifting both to complex form.
    fn estimate_real(
        &self,
        a: &RealEmbedding,
        b: &RealEmbedding,
        cfg: &EstimatorConfig,
    ) -> Result<SimilarityResult> {
        self.estimate(&a.to_complex(), &b.to_complex(), cfg)
    }
}

pub struct ClassicalEstimator;

impl SimilarityEstimator for ClassicalEstimator {
    fn name(&self) -> &'static str {
        "classical"
    }

    fn description(&self) -> &'static str {
        "direct inner product of the normalized vectors"
    }

    fn estimate(
        &self,
        a: &ComplexEmbedding,
        b: &ComplexEmbedding,
        _cfg: &EstimatorConfig,
    ) -> Result<SimilarityResult> {
        similarity::classical_similarity(a, b)
    }

    fn estimate_real(
        &self,
        a: &RealEmbedding,
        b: &RealEmbedding,
        _cfg: &EstimatorConfig,
    ) -> Result<SimilarityResult> {
        similarity::classical_similarity_real(a, b)
    }
}

pub struct ExactCircuitEstimator;

impl SimilarityEstimator for ExactCircuitEstimator {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn description(&self) -> &'static str {
        "interference circuits with analytic measurement probabilities"
    }

    fn estimate(
        &self,
        a: &ComplexEmbedding,
        b: &ComplexEmbedding,
        cfg: &EstimatorConfig,
    ) -> Result<SimilarityResult> {
        similarity::quantum_similarity(a, b, Mode::Exact, cfg.readout())
    }

    fn estimate_real(
        &self,
        a: &RealEmbedding,
        b: &RealEmbedding,
        cfg: &EstimatorConfig,
    ) -> Result<SimilarityResult> {
        similarity::quantum_similarity_real(a, b, Mode::Exact, cfg.readout())
    }
}

pub struct SampledCircuitEstimator;

impl SampledCircuitEstimator {
    fn mode(cfg: &EstimatorConfig) -> Result<Mode> {
        cfg.validate()?;
        Ok(Mode::Shots { shots: cfg.shots, seed: cfg.seed })
    }
}

impl SimilarityEstimator for SampledCircuitEstimator {
    fn name(&self) -> &'static str {
        "shots"
    }

    fn description(&self) -> &'static str {
        "interference circuits sampled with a seeded shot budget"
    }

    fn estimate(
        &self,
        a: &ComplexEmbedding,
        b: &ComplexEmbedding,
        cfg: &EstimatorConfig,
    ) -> Result<SimilarityResult> {
        similarity::quantum_similarity(a, b, Self::mode(cfg)?, cfg.readout())
    }

    fn estimate_real(
        &self,
        a: &RealEmbedding,
        b: &RealEmbedding,
        cfg: &EstimatorConfig,
    ) -> Result<SimilarityResult> {
        similarity::quantum_similarity_real(a, b, Self::mode(cfg)?, cfg.readout())
    }
}

#[derive(Default)]
pub struct EstimatorRegistry {
    entries: BTreeMap<&'static str, Box<dyn SimilarityEstimator>>,
}

impl EstimatorRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registry with `classical`, `exact` and `shots`.
    pub fn with_builtins() -> Self {
        let mut registry = Self::new();
        registry.register(Box::new(ClassicalEstimator));
        registry.register(Box::new(ExactCircuitEstimator));
        registry.register(Box::new(SampledCircuitEstimator));
        registry
    }

    /// Adds an estimator, replacing any previous one with the same name.
    pub fn register(
        &mut self,
        estimator: Box<dyn SimilarityEstimator>,
    ) -> Option<Box<dyn SimilarityEstimator>> {
        self.entries.insert(estimator.name(), estimator)
    }

    pub fn get(&self, name: &str) -> Result<&dyn SimilarityEstimator> {
        self.entries.get(name).map(|e| e.as_ref()).ok_or_else(|| Error::UnknownEstimator(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }
}
