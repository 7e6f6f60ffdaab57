//! Seeded synthetic embedding pairs, standing in for model-generated vectors
//! in the desk-scale tests and fixtures.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::embedding::RealEmbedding;
use crate::error::Result;

/// Seed of the shipped `fixtures/synth128_{a,b}.json` pair.
pub const FIXTURE_SEED: u64 = 20_250_128;

/// Dimension of the shipped synthetic pair.
pub const FIXTURE_DIM: usize = 128;

/// Weight of the shared direction in the second vector; gives a cosine
/// similarity in the high 0.8s for large dimensions.
const SHARED_WEIGHT: f64 = 1.8;

/// Two unit vectors `a = normalize(g)`, `b = normalize(w·a·√dim + h)` with
/// `g`, `h` i.i.d. standard normal draws from a ChaCha8 stream.
pub fn real_unit_pair(dim: usize, seed: u64) -> Result<(RealEmbedding, RealEmbedding)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |n: usize| -> Vec<f64> { (0..n).map(|_| StandardNormal.sample(&mut rng)).collect() };
    let a = RealEmbedding::new(draw(dim))?.normalize()?;
    let scale = SHARED_WEIGHT * (dim as f64).sqrt();
    let noise = draw(dim);
    let b = a.values().iter().zip(noise).map(|(x, n)| scale * x + n).collect();
    let b = RealEmbedding::new(b)?.normalize()?;
    Ok((a, b))
}
