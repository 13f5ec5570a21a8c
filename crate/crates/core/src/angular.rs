//! Effective angular quantum numbers from the polar equation.
//!
//! Each potential's polar equation
//! `Θ'' − [M·V(θ) + (m² − 1/4)/sin²θ] Θ + ℓ² Θ = 0`
//! is of Pöschl–Teller type, so ℓ is known in closed form. All values are
//! returned in one convention: ℓ enters the radial equation through
//! `Λ = ℓ² − 1/4`.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::potentials::{PotentialKind, PotentialParams, QuantumNumbers};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EffectiveL {
    pub value: f64,
    /// Set when `Mβ + m² = M|γ| > 0`: one Pöschl–Teller exponent sits at zero.
    pub boundary: bool,
}

impl EffectiveL {
    /// `ℓ²`, the eigenvalue of the polar operator.
    pub fn squared(&self) -> f64 {
        self.value * self.value
    }
}

pub fn l_eff(
    kind: PotentialKind,
    mass: f64,
    beta: f64,
    gamma: f64,
    m: i32,
    s: u32,
) -> Result<EffectiveL> {
    let m2 = f64::from(m) * f64::from(m);
    let s = f64::from(s);
    let c = mass * beta + m2;
    let d = mass * gamma;
    let complex = |what: String| domain(format!("complex angular eigenvalue: {what}"));

    match kind {
        PotentialKind::Makarov | PotentialKind::ModifiedNonCentral => {
            if c < d.abs() {
                return Err(complex(format!(
                    "M*beta + m^2 = {c} < M|gamma| = {}",
                    d.abs()
                )));
            }
            let disc = ((c - d) * (c + d)).max(0.0).sqrt();
            let value = (0.5 * (c + disc)).sqrt() + s + 0.5;
            Ok(EffectiveL {
                value,
                boundary: d != 0.0 && c == d.abs(),
            })
        }
        PotentialKind::ModKratzerRing => {
            if c < 0.0 {
                return Err(complex(format!("M*beta + m^2 = {c} < 0")));
            }
            let shifted = c.sqrt() + s + 0.5;
            let sq = shifted * shifted - mass * beta;
            if sq < 0.0 {
                return Err(complex(format!("l^2 = {sq} < 0")));
            }
            Ok(EffectiveL {
                value: sq.sqrt(),
                boundary: false,
            })
        }
        PotentialKind::DoubleRingKratzer => {
            if c < 0.0 {
                return Err(complex(format!("M*beta + m^2 = {c} < 0")));
            }
            if d < -0.25 {
                return Err(complex(format!("M*gamma = {d} < -1/4")));
            }
            let value = c.sqrt() + (0.25 + d).sqrt() + 2.0 * s + 1.0;
            Ok(EffectiveL {
                value,
                boundary: false,
            })
        }
        PotentialKind::RingOscillator => {
            if c < 0.0 {
                return Err(complex(format!("M*beta + m^2 = {c} < 0")));
            }
            Ok(EffectiveL {
                value: c.sqrt() + s + 0.5,
                boundary: false,
            })
        }
    }
}

/// [`l_eff`] with the ring parameters taken from `p`.
pub fn l_eff_for(p: &PotentialParams, mass: f64, qn: QuantumNumbers) -> Result<EffectiveL> {
    let (beta, gamma) = p.ring();
    l_eff(p.kind(), mass, beta, gamma, qn.m, qn.s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const K: PotentialKind = PotentialKind::Makarov;

    #[test]
    fn makarov_examples() {
        assert_eq!(l_eff(K, 1.0, 0.0, 0.0, 2, 1).unwrap().value, 3.5);
        assert_eq!(l_eff(K, 1.0, 3.0, 0.0, 1, 0).unwrap().value, 2.5);
        let l = l_eff(K, 1.0, 1.0, 1.0, 0, 0).unwrap();
        assert!((l.value - (0.5f64.sqrt() + 0.5)).abs() < 1e-15);
        assert!((l.squared() - 1.457_106_781).abs() < 1e-9);
        assert!(l.boundary);
    }

    #[test]
    fn minimal_value_is_one_half() {
        for kind in [
            PotentialKind::Makarov,
            PotentialKind::ModifiedNonCentral,
            PotentialKind::ModKratzerRing,
            PotentialKind::RingOscillator,
        ] {
            assert_eq!(l_eff(kind, 1.0, 0.0, 0.0, 0, 0).unwrap().value, 0.5);
        }
        // The double-ring ℓ counts both Pöschl–Teller exponents plus one.
        assert_eq!(
            l_eff(PotentialKind::DoubleRingKratzer, 1.0, 0.0, 0.0, 0, 0)
                .unwrap()
                .value,
            1.5
        );
    }

    #[test]
    fn ring_kratzer_closed_form() {
        let l = l_eff(PotentialKind::ModKratzerRing, 1.0, 1.0, 0.0, 1, 0).unwrap();
        let expected = (2f64.sqrt() + 0.5).powi(2) - 1.0;
        assert!((l.squared() - expected).abs() < 1e-14);
        assert!((l.squared() - 2.664_213_562).abs() < 1e-9);
    }

    #[test]
    fn reality_conditions() {
        assert!(l_eff(K, 1.0, 0.0, 1.0, 0, 0).is_err());
        assert!(l_eff(PotentialKind::DoubleRingKratzer, 1.0, 0.0, -0.3, 0, 0).is_err());
        assert!(l_eff(PotentialKind::RingOscillator, 1.0, -2.0, 0.0, 1, 0).is_err());
        assert!(l_eff(PotentialKind::ModKratzerRing, 1.0, -2.0, 0.0, 1, 0).is_err());
    }

    #[test]
    fn mass_scales_ring_parameters() {
        let a = l_eff(K, 4.0, 0.5, 0.25, 1, 2).unwrap();
        let b = l_eff(K, 1.0, 2.0, 1.0, 1, 2).unwrap();
        assert_eq!(a, b);
    }

    proptest! {
        #[test]
        fn two_makarov_forms_agree(c in 0.0f64..50.0, frac in -1.0f64..1.0) {
            let d = c * frac;
            let lhs = (0.5 * (c + (c * c - d * d).sqrt())).sqrt();
            let rhs = 0.5 * ((c + d).sqrt() + (c - d).sqrt());
            prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.max(1.0));
            let l = l_eff(K, 1.0, c, d, 0, 0).unwrap().value;
            prop_assert!((l - 0.5 - rhs).abs() <= 1e-12 * l);
        }

        #[test]
        fn gamma_zero_matches_ring_oscillator(beta in 0.0f64..20.0, m in -4i32..=4, s in 0u32..5, mass in 0.1f64..10.0) {
            let mk = l_eff(K, mass, beta, 0.0, m, s).unwrap().value;
            let ro = l_eff(PotentialKind::RingOscillator, mass, beta, 0.0, m, s).unwrap().value;
            prop_assert_eq!(mk, ro);
            prop_assert!((mk - ((mass * beta + f64::from(m * m)).sqrt() + f64::from(s) + 0.5)).abs() < 1e-12);
        }

        #[test]
        fn increases_in_s_and_even_in_m(beta in 0.0f64..5.0, gamma in 0.0f64..0.9, m in 0i32..4, s in 0u32..5) {
            for kind in PotentialKind::ALL {
                let g = gamma * (beta + f64::from(m * m));
                let lo = l_eff(kind, 1.0, beta, g, m, s).unwrap().value;
                let hi = l_eff(kind, 1.0, beta, g, m, s + 1).unwrap().value;
                prop_assert!(hi - lo >= 1.0 - 1e-12, "{kind:?}: {lo} -> {hi}");
                prop_assert_eq!(lo, l_eff(kind, 1.0, beta, g, -m, s).unwrap().value);
            }
        }
    }
}
