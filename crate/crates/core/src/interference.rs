//! Two-slit interference and its single-qubit analogue.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qsim::{exact_probability, CircuitKind, QubitInit};

/// Two waves `ψ₁ = A e^{iφ}` and `ψ₂ = B e^{iϕ}` meeting on the screen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlitConfig {
    pub amp_a: f64,
    pub amp_b: f64,
    pub phase_a: f64,
    pub phase_b: f64,
}

impl SlitConfig {
    pub fn new(amp_a: f64, amp_b: f64, phase_a: f64, phase_b: f64) -> Result<Self> {
        if !(amp_a >= 0.0 && amp_b >= 0.0 && amp_a.is_finite() && amp_b.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "slit amplitudes must be finite and non-negative (got {amp_a}, {amp_b})"
            )));
        }
        Ok(Self { amp_a, amp_b, phase_a, phase_b })
    }

    /// The qubit `A e^{iφ}|0⟩ + B e^{iϕ}|1⟩` with `(A, B)` rescaled to unit
    /// length.
    pub fn qubit(&self) -> Result<QubitInit> {
        let norm = self.amp_a.hypot(self.amp_b);
        if norm == 0.0 {
            return Err(Error::InvalidConfig("both slit amplitudes are zero".into()));
        }
        QubitInit::from_polar(self.amp_a / norm, self.phase_a, self.amp_b / norm, self.phase_b)
    }
}

/// `|ψ₁ + ψ₂|² = A² + B² + 2AB cos(φ − ϕ)`.
pub fn intensity(cfg: &SlitConfig) -> f64 {
    let (a, b) = (cfg.amp_a, cfg.amp_b);
    (a * a + b * b + 2.0 * a * b * (cfg.phase_a - cfg.phase_b).cos()).max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanRow {
    pub delta_phase: f64,
    pub intensity: f64,
    pub p0: f64,
    pub p1: f64,
}

/// Sweeps `φ − ϕ` over `[−π, π]` in `steps` evenly spaced points.
///
/// The circuit columns come from the cosine circuit on the rescaled qubit, so
/// `p0 = intensity/2` exactly when `A² + B² = 1`.
pub fn phase_scan(cfg_base: &SlitConfig, steps: usize) -> Result<Vec<ScanRow>> {
    if steps < 2 {
        return Err(Error::BadDimension { requested: steps, available: 2 });
    }
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|k| {
            let delta_phase = -PI + 2.0 * PI * k as f64 / last;
            let cfg = SlitConfig { phase_a: cfg_base.phase_b + delta_phase, ..*cfg_base };
            let p = exact_probability(&cfg.qubit()?, CircuitKind::Cos);
            Ok(ScanRow { delta_phase, intensity: intensity(&cfg), p0: p.p0, p1: p.p1 })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn intensity_examples() {
        let cfg = SlitConfig::new(1.0, 1.0, 0.4, 0.4).unwrap();
        assert_abs_diff_eq!(intensity(&cfg), 4.0, epsilon = 1e-15);
        let cfg = SlitConfig::new(1.0, 1.0, PI, 0.0).unwrap();
        assert_abs_diff_eq!(intensity(&cfg), 0.0, epsilon = 1e-15);
        let cfg = SlitConfig::new(0.6, 0.8, PI / 3.0, 0.0).unwrap();
        assert_abs_diff_eq!(intensity(&cfg), 1.48, epsilon = 1e-12);
    }

    #[test]
    fn rejects_negative_amplitude() {
        assert!(SlitConfig::new(-0.1, 1.0, 0.0, 0.0).is_err());
        let zero = SlitConfig::new(0.0, 0.0, 0.0, 0.0).unwrap();
        assert!(phase_scan(&zero, 3).is_err());
    }

    #[test]
    fn scan_points() {
        let cfg = SlitConfig::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0, 0.0).unwrap();
        let rows = phase_scan(&cfg, 5).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[0].delta_phase, -PI);
        assert_eq!(rows[2].delta_phase, 0.0);
        assert_eq!(rows[4].delta_phase, PI);
        assert_abs_diff_eq!(rows[2].intensity, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rows[2].p0, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rows[2].p1, 0.0, epsilon = 1e-12);
        // δ = π/2
        assert_abs_diff_eq!(rows[3].intensity, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rows[3].p0, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(rows[0].p0, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn scan_needs_two_steps() {
        let cfg = SlitConfig::new(0.6, 0.8, 0.0, 0.0).unwrap();
        assert!(matches!(phase_scan(&cfg, 1), Err(Error::BadDimension { .. })));
    }

    #[test]
    fn full_scan_is_cosine_shaped() {
        let cfg = SlitConfig::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0, 0.0).unwrap();
        let rows = phase_scan(&cfg, 101).unwrap();
        let peak = rows.iter().max_by(|x, y| x.p0.total_cmp(&y.p0)).unwrap();
        assert_eq!(peak.delta_phase, 0.0);
        for r in &rows {
            assert_abs_diff_eq!(r.p0 + r.p1, 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(r.p0, 0.5 * (1.0 + r.delta_phase.cos()), epsilon = 1e-12);
        }
        assert!(rows.windows(2).all(|w| w[0].delta_phase < w[1].delta_phase));
    }

    proptest! {
        #[test]
        fn circuit_matches_half_intensity(theta in 0.0f64..=PI / 2.0, pa in -PI..PI, pb in -PI..PI) {
            let cfg = SlitConfig::new(theta.cos(), theta.sin(), pa, pb).unwrap();
            let p = exact_probability(&cfg.qubit().unwrap(), CircuitKind::Cos);
            let i = intensity(&cfg);
            prop_assert!(i >= 0.0);
            prop_assert!((p.p0 - i / 2.0).abs() <= 1e-12);
            let mirrored = SlitConfig { phase_a: pb, phase_b: pa, ..cfg };
            prop_assert!((intensity(&mirrored) - i).abs() <= 1e-12);
        }
    }
}
