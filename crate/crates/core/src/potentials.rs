//! The five non-central potentials and their reduction to one radial problem.
//!
//! After separation in spherical coordinates every potential here leaves a
//! radial equation of one of two shapes:
//!
//! * Coulomb-like: `R'' + [M(E − E0) − M·A/r − Λ/r²] R = 0`
//! * oscillator-like: `R'' + [M·E − M·κ·r² − Λ/r²] R = 0`
//!
//! where `Λ = ℓ² − 1/4 + (inverse-square part of V(r))·M` carries the
//! effective angular quantum number ℓ from the polar equation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Radial `n`, polar `s` and azimuthal `m` quantum numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub s: u32,
    pub m: i32,
}

impl QuantumNumbers {
    pub const fn new(n: u32, s: u32, m: i32) -> Self {
        Self { n, s, m }
    }

    /// `m²` as a float; only the square of `m` enters any formula.
    pub fn m_squared(&self) -> f64 {
        let m = f64::from(self.m);
        m * m
    }
}

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, s={}, m={})", self.n, self.s, self.m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PotentialKind {
    Makarov,
    ModKratzerRing,
    DoubleRingKratzer,
    ModifiedNonCentral,
    RingOscillator,
}

impl PotentialKind {
    pub const ALL: [PotentialKind; 5] = [
        PotentialKind::Makarov,
        PotentialKind::ModKratzerRing,
        PotentialKind::DoubleRingKratzer,
        PotentialKind::ModifiedNonCentral,
        PotentialKind::RingOscillator,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PotentialKind::Makarov => "makarov",
            PotentialKind::ModKratzerRing => "mod-kratzer-ring",
            PotentialKind::DoubleRingKratzer => "double-ring-kratzer",
            PotentialKind::ModifiedNonCentral => "modified-non-central",
            PotentialKind::RingOscillator => "ring-oscillator",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Upper end of the polar domain: `π/2` when a `1/cos²θ` wall splits the sphere.
    pub fn polar_extent(&self) -> f64 {
        match self {
            PotentialKind::DoubleRingKratzer => std::f64::consts::FRAC_PI_2,
            _ => std::f64::consts::PI,
        }
    }
}

impl fmt::Display for PotentialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Physical parameters of one of the supported potentials.
///
/// Field names follow the usual notation; `D0`/`D` are association
/// energies and `r0`/`a` equilibrium distances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "potential", rename_all = "kebab-case", deny_unknown_fields)]
pub enum PotentialParams {
    /// `α/r + (β + γ cosθ)/(r² sin²θ)`
    Makarov { alpha: f64, beta: f64, gamma: f64 },
    /// `D0 (1 − r0/r)² + β cot²θ / r²`
    ModKratzerRing {
        #[serde(rename = "D0", alias = "d0")]
        d0: f64,
        r0: f64,
        beta: f64,
    },
    /// `−2 D0 (r0/r − r0²/2r²) + (β/sin²θ + γ/cos²θ)/r²`
    DoubleRingKratzer {
        #[serde(rename = "D0", alias = "d0")]
        d0: f64,
        r0: f64,
        beta: f64,
        gamma: f64,
    },
    /// `D (1 − a/r)² + (β + γ cosθ)/(r² sin²θ)`
    ModifiedNonCentral {
        #[serde(rename = "D", alias = "d")]
        d: f64,
        a: f64,
        beta: f64,
        gamma: f64,
    },
    /// `κ r² + ω/r² + β/(r² sin²θ)`
    RingOscillator { kappa: f64, omega: f64, beta: f64 },
}

impl PotentialParams {
    pub fn kind(&self) -> PotentialKind {
        match self {
            PotentialParams::Makarov { .. } => PotentialKind::Makarov,
            PotentialParams::ModKratzerRing { .. } => PotentialKind::ModKratzerRing,
            PotentialParams::DoubleRingKratzer { .. } => PotentialKind::DoubleRingKratzer,
            PotentialParams::ModifiedNonCentral { .. } => PotentialKind::ModifiedNonCentral,
            PotentialParams::RingOscillator { .. } => PotentialKind::RingOscillator,
        }
    }

    /// Ring parameters `(β, γ)`; `γ` is zero for kinds without one.
    pub fn ring(&self) -> (f64, f64) {
        match *self {
            PotentialParams::Makarov { beta, gamma, .. }
            | PotentialParams::DoubleRingKratzer { beta, gamma, .. }
            | PotentialParams::ModifiedNonCentral { beta, gamma, .. } => (beta, gamma),
            PotentialParams::ModKratzerRing { beta, .. }
            | PotentialParams::RingOscillator { beta, .. } => (beta, 0.0),
        }
    }

    /// Checks the parameter invariants that do not depend on quantum numbers.
    pub fn validate(&self) -> Result<()> {
        let finite = |name: &str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(domain(format!("{name} must be finite, got {v}")))
            }
        };
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(domain(format!("{name} must be positive, got {v}")))
            }
        };
        match *self {
            PotentialParams::Makarov { alpha, beta, gamma } => {
                finite("alpha", alpha)?;
                finite("beta", beta)?;
                finite("gamma", gamma)
            }
            PotentialParams::ModKratzerRing { d0, r0, beta } => {
                positive("D0", d0)?;
                positive("r0", r0)?;
                finite("beta", beta)
            }
            PotentialParams::DoubleRingKratzer {
                d0,
                r0,
                beta,
                gamma,
            } => {
                positive("D0", d0)?;
                positive("r0", r0)?;
                finite("beta", beta)?;
                finite("gamma", gamma)
            }
            PotentialParams::ModifiedNonCentral { d, a, beta, gamma } => {
                positive("D", d)?;
                positive("a", a)?;
                finite("beta", beta)?;
                finite("gamma", gamma)
            }
            PotentialParams::RingOscillator { kappa, omega, beta } => {
                positive("kappa", kappa)?;
                if !(omega >= 0.0) || !omega.is_finite() {
                    return Err(domain(format!("omega must be non-negative, got {omega}")));
                }
                if !(beta >= 0.0) || !beta.is_finite() {
                    return Err(domain(format!("beta must be non-negative, got {beta}")));
                }
                Ok(())
            }
        }
    }

    /// Central part `V(r)` in its physical (unexpanded) form.
    pub fn radial_part(&self, r: f64) -> f64 {
        match *self {
            PotentialParams::Makarov { alpha, .. } => alpha / r,
            PotentialParams::ModKratzerRing { d0, r0, .. } => {
                let x = 1.0 - r0 / r;
                d0 * x * x
            }
            PotentialParams::DoubleRingKratzer { d0, r0, .. } => {
                -2.0 * d0 * (r0 / r - 0.5 * (r0 * r0) / (r * r))
            }
            PotentialParams::ModifiedNonCentral { d, a, .. } => {
                let x = 1.0 - a / r;
                d * x * x
            }
            PotentialParams::RingOscillator { kappa, omega, .. } => kappa * r * r + omega / (r * r),
        }
    }

    /// Polar function `V(θ)`; the full potential divides it by `r²`.
    pub fn angular_part(&self, theta: f64) -> f64 {
        let (beta, gamma) = self.ring();
        angular_part(self.kind(), beta, gamma, theta)
    }

    /// Full `V(r, θ)`.
    pub fn value(&self, r: f64, theta: f64) -> f64 {
        self.radial_part(r) + self.angular_part(theta) / (r * r)
    }
}

/// Polar function `V(θ)` of a potential kind with ring parameters `β`, `γ`.
pub fn angular_part(kind: PotentialKind, beta: f64, gamma: f64, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    match kind {
        PotentialKind::Makarov | PotentialKind::ModifiedNonCentral => (beta + gamma * c) / (s * s),
        PotentialKind::ModKratzerRing => beta * (c * c) / (s * s),
        PotentialKind::DoubleRingKratzer => beta / (s * s) + gamma / (c * c),
        PotentialKind::RingOscillator => beta / (s * s),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    CoulombLike,
    OscillatorLike,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::CoulombLike => "coulomb-like",
            Family::OscillatorLike => "oscillator-like",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Reduced radial equation shared by all five potentials.
///
/// Coulomb-like: `R'' + [M(E − e0) − M·a/r − lambda/r²] R = 0`.
/// Oscillator-like: `R'' + [M·E − M·kappa·r² − lambda/r²] R = 0`, with
/// `e0 = a = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialProblem {
    pub family: Family,
    pub e0: f64,
    pub a: f64,
    pub lambda: f64,
    pub kappa: f64,
}

impl RadialProblem {
    pub fn coulomb_like(e0: f64, a: f64, lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(Self {
            family: Family::CoulombLike,
            e0,
            a,
            lambda,
            kappa: 0.0,
        })
    }

    pub fn oscillator_like(kappa: f64, lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(Self {
            family: Family::OscillatorLike,
            e0: 0.0,
            a: 0.0,
            lambda,
            kappa,
        })
    }

    /// `μ₃ = √(Λ + 1/4)`, the exponent that fixes `R ~ r^{μ₃+1/2}` at the origin.
    pub fn mu3(&self) -> f64 {
        (self.lambda + 0.25).max(0.0).sqrt()
    }

    /// `M·V_eff(r)`: everything in the reduced equation except the energy term.
    pub fn scaled_effective_potential(&self, mass: f64, r: f64) -> f64 {
        let centrifugal = self.lambda / (r * r);
        match self.family {
            Family::CoulombLike => mass * self.a / r + centrifugal,
            Family::OscillatorLike => mass * self.kappa * r * r + centrifugal,
        }
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda.is_nan() || lambda < -0.25 {
        Err(domain(format!(
            "sub-critical inverse-square coupling: Lambda = {lambda} < -1/4"
        )))
    } else {
        Ok(())
    }
}

/// Reduces a potential to its radial problem for effective angular number `l_eff`.
pub fn decompose(p: &PotentialParams, mass: f64, l_eff: f64) -> Result<RadialProblem> {
    if !(l_eff >= 0.0) {
        return Err(domain(format!(
            "effective angular number must be >= 0, got {l_eff}"
        )));
    }
    let centrifugal = l_eff * l_eff - 0.25;
    match *p {
        PotentialParams::Makarov { alpha, .. } => {
            RadialProblem::coulomb_like(0.0, alpha, centrifugal)
        }
        PotentialParams::ModKratzerRing { d0, r0, .. } => {
            RadialProblem::coulomb_like(d0, -2.0 * d0 * r0, centrifugal + mass * d0 * r0 * r0)
        }
        PotentialParams::DoubleRingKratzer { d0, r0, .. } => {
            RadialProblem::coulomb_like(0.0, -2.0 * d0 * r0, centrifugal + mass * d0 * r0 * r0)
        }
        PotentialParams::ModifiedNonCentral { d, a, .. } => {
            RadialProblem::coulomb_like(d, -2.0 * d * a, centrifugal + mass * d * a * a)
        }
        PotentialParams::RingOscillator { kappa, omega, .. } => {
            RadialProblem::oscillator_like(kappa, centrifugal + mass * omega)
        }
    }
}
