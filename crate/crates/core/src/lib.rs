//! Complex cosine similarity between embedding vectors, computed classically
//! and by simulating the single-qubit interference circuits that encode each
//! dimension pair as a qubit (initialize, optional S, H, measure).
//!
//! The crate is organised bottom-up:
//!
//! - [`embedding`]: real and complex vectors, normalization, truncation,
//!   real/complex packing and the per-dimension qubit encoding.
//! - [`format`]: the JSON embedding file format.
//! - [`qsim`]: exact and shot-sampled evaluation of the independent
//!   single-qubit circuits, with a readout bit-flip model and its inverse.
//! - [`similarity`]: the classical oracle and the reconstruction of the
//!   similarity from measured probabilities.
//! - [`estimator`]: a name-keyed registry of interchangeable estimators.
//! - [`analysis`]: the diagonal density-matrix view of the reconstruction.
//! - [`interference`]: the double-slit intensity law and its circuit analogue.

pub mod analysis;
pub mod embedding;
pub mod error;
pub mod estimator;
pub mod format;
pub mod interference;
pub mod qsim;
pub mod similarity;
pub mod synthetic;

pub use error::{Error, Result};

pub use num_complex::Complex64;
