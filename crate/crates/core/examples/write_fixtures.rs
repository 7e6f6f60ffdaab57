//! Regenerates the synthetic 128-dimensional fixture pair.
//!
//! ```text
//! cargo run -p qcosine --example write_fixtures -- fixtures
//! ```

use std::path::PathBuf;

use qcosine::format::Embedding;
use qcosine::synthetic::{real_unit_pair, FIXTURE_DIM, FIXTURE_SEED};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    let (a, b) = real_unit_pair(FIXTURE_DIM, FIXTURE_SEED)?;
    std::fs::write(dir.join("synth128_a.json"), Embedding::from(a).to_json() + "\n")?;
    std::fs::write(dir.join("synth128_b.json"), Embedding::from(b).to_json() + "\n")?;
    Ok(())
}
