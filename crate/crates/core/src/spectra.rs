//! Closed-form bound-state energies.
//!
//! Both radial families terminate their Laplace-space series when an exponent
//! equals a non-negative integer `n`:
//!
//! * Coulomb-like: `μ₂²/(2μ₁) + (2μ₃ + 1)/2 = −n` with `μ₁² = M(E0 − E)`,
//!   `μ₂² = M·A`, `μ₃ = √(Λ + 1/4)`, giving
//!   `E = E0 − M·A² / (4(n + 1/2 + μ₃)²)`.
//! * oscillator-like: `μ₂²/(4μ₁) − (τ + 3/2)/2 = n` with `μ₁ = √(Mκ)`,
//!   `μ₂² = M·E`, `τ = μ₃ − 1/2`, giving `E = 2√(κ/M)(2n + 1 + μ₃)`.

use serde::Serialize;

use crate::angular::{l_eff_for, EffectiveL};
use crate::error::{domain, Error, Result};
use crate::potentials::{
    decompose, Family, PotentialKind, PotentialParams, QuantumNumbers, RadialProblem,
};

/// One level of a radial problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialLevel {
    pub family: Family,
    pub n: u32,
    pub energy: f64,
    /// Decay constant: `√(M(E0 − E))` per length (Coulomb-like) or `√(Mκ)`
    /// per length² acting on `u = r²` (oscillator-like).
    pub mu1: f64,
    /// `μ₃ = √(Λ + 1/4)`; the oscillator's `τ` is `μ₃ − 1/2`.
    pub mu3: f64,
}

impl RadialLevel {
    pub fn tau(&self) -> f64 {
        self.mu3 - 0.5
    }
}

/// Energy and diagnostics of one bound state of a potential.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub potential: PotentialKind,
    pub qn: QuantumNumbers,
    pub l_eff: EffectiveL,
    pub level: RadialLevel,
}

impl SpectrumResult {
    pub fn energy(&self) -> f64 {
        self.level.energy
    }
}

pub fn coulomb_like_energy(mass: f64, prob: &RadialProblem, n: u32) -> Result<RadialLevel> {
    if prob.family != Family::CoulombLike {
        return Err(Error::Contract(
            "coulomb_like_energy needs a Coulomb-like problem".into(),
        ));
    }
    if !(prob.a < 0.0) {
        return Err(Error::NoBoundStates(format!(
            "repulsive or free tail: 1/r coefficient A = {} must be negative",
            prob.a
        )));
    }
    if prob.lambda < -0.25 {
        return Err(domain(format!(
            "sub-critical inverse-square coupling Lambda = {}",
            prob.lambda
        )));
    }
    let mu3 = prob.mu3();
    let denom = f64::from(n) + 0.5 + mu3;
    let mu1 = -mass * prob.a / (2.0 * denom);
    let energy = prob.e0 - mass * prob.a * prob.a / (4.0 * denom * denom);
    Ok(RadialLevel {
        family: Family::CoulombLike,
        n,
        energy,
        mu1,
        mu3,
    })
}

pub fn oscillator_like_energy(mass: f64, prob: &RadialProblem, n: u32) -> Result<RadialLevel> {
    if prob.family != Family::OscillatorLike {
        return Err(Error::Contract(
            "oscillator_like_energy needs an oscillator-like problem".into(),
        ));
    }
    if !(prob.kappa > 0.0) {
        return Err(domain(format!(
            "oscillator strength kappa = {} must be positive",
            prob.kappa
        )));
    }
    if prob.lambda < -0.25 {
        return Err(domain(format!(
            "sub-critical inverse-square coupling Lambda = {}",
            prob.lambda
        )));
    }
    let mu3 = prob.mu3();
    let energy = 2.0 * (prob.kappa / mass).sqrt() * (2.0 * f64::from(n) + 1.0 + mu3);
    Ok(RadialLevel {
        family: Family::OscillatorLike,
        n,
        energy,
        mu1: (mass * prob.kappa).sqrt(),
        mu3,
    })
}

/// Solves either family.
pub fn level(mass: f64, prob: &RadialProblem, n: u32) -> Result<RadialLevel> {
    match prob.family {
        Family::CoulombLike => coulomb_like_energy(mass, prob, n),
        Family::OscillatorLike => oscillator_like_energy(mass, prob, n),
    }
}

/// Residual of the series-termination condition; zero for an exact level.
///
/// Recomputes `μ₁` from the energy, so it also checks the energy formula.
pub fn quantization_residual(mass: f64, prob: &RadialProblem, level: &RadialLevel) -> f64 {
    let n = f64::from(level.n);
    let mu3 = prob.mu3();
    match prob.family {
        Family::CoulombLike => {
            let mu1 = (mass * (prob.e0 - level.energy)).sqrt();
            let mu2_sq = mass * prob.a;
            mu2_sq / (2.0 * mu1) + (2.0 * mu3 + 1.0) / 2.0 + n
        }
        Family::OscillatorLike => {
            let mu1 = (mass * prob.kappa).sqrt();
            let mu2_sq = mass * level.energy;
            let tau = mu3 - 0.5;
            mu2_sq / (4.0 * mu1) - 0.5 * (tau + 1.5) - n
        }
    }
}

/// Bound-state energy of `p` for quantum numbers `qn`.
pub fn energy(p: &PotentialParams, mass: f64, qn: QuantumNumbers) -> Result<SpectrumResult> {
    p.validate()?;
    if let PotentialParams::Makarov { alpha, .. } = *p {
        if !(alpha < 0.0) {
            return Err(Error::NoBoundStates(format!(
                "alpha = {alpha} must be negative (attractive 1/r term)"
            )));
        }
    }
    let l = l_eff_for(p, mass, qn)?;
    let prob = decompose(p, mass, l.value)?;
    let level = level(mass, &prob, qn.n)?;
    Ok(SpectrumResult {
        potential: p.kind(),
        qn,
        l_eff: l,
        level,
    })
}

/// Limits with one ring or inverse-square parameter removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialCase {
    /// Makarov with `γ = 0`.
    Hartmann,
    /// Modified Kratzer plus ring with `β = 0`.
    ModifiedKratzer,
    /// Ring oscillator with `ω = 0`.
    RingOscillatorPure,
}

/// Energy of a special case from its own textbook closed form.
pub fn special_case_energy(
    case: SpecialCase,
    p: &PotentialParams,
    mass: f64,
    qn: QuantumNumbers,
) -> Result<f64> {
    p.validate()?;
    let n = f64::from(qn.n);
    let s = f64::from(qn.s);
    let m2 = qn.m_squared();
    match (case, *p) {
        (SpecialCase::Hartmann, PotentialParams::Makarov { alpha, beta, gamma }) => {
            if gamma != 0.0 {
                return Err(Error::Precondition(format!(
                    "Hartmann limit needs gamma = 0, got {gamma}"
                )));
            }
            if !(alpha < 0.0) {
                return Err(Error::NoBoundStates(format!(
                    "alpha = {alpha} must be negative"
                )));
            }
            let c = mass * beta + m2;
            if c < 0.0 {
                return Err(domain(format!(
                    "complex angular eigenvalue: M*beta + m^2 = {c}"
                )));
            }
            let l_prime = 2.0 * c.sqrt() + 2.0 * s + 1.0;
            let denom = 2.0 * n + l_prime + 1.0;
            Ok(-mass * alpha * alpha / (denom * denom))
        }
        (SpecialCase::ModifiedKratzer, PotentialParams::ModKratzerRing { d0, r0, beta }) => {
            if beta != 0.0 {
                return Err(Error::Precondition(format!(
                    "modified Kratzer limit needs beta = 0, got {beta}"
                )));
            }
            // Integer orbital number with L(L+1) = ℓ² − 1/4 at β = 0.
            let orbital = f64::from(qn.m.unsigned_abs()) + s;
            let root = (4.0 * mass * d0 * r0 * r0 + 4.0 * orbital * (orbital + 1.0) + 1.0).sqrt();
            let x = 2.0 * mass.sqrt() * d0 * r0 / (2.0 * n + 1.0 + root);
            Ok(d0 - x * x)
        }
        (
            SpecialCase::RingOscillatorPure,
            PotentialParams::RingOscillator { kappa, omega, beta },
        ) => {
            if omega != 0.0 {
                return Err(Error::Precondition(format!(
                    "pure ring oscillator needs omega = 0, got {omega}"
                )));
            }
            let c = mass * beta + m2;
            let l = c.sqrt() + 0.5 + s;
            let l_half = l / 2.0;
            Ok((16.0 * kappa / mass).sqrt() * (n + l_half + 0.5))
        }
        (case, p) => Err(Error::Contract(format!(
            "special case {case:?} does not apply to {}",
            p.kind()
        ))),
    }
}

/// Kratzer-ring energy in the uncorrected bracket form
/// `E = D0 − (2M·D0·r0)² / (2n + 1 + √(M·D0·r0² + ℓ²))²`.
///
/// It differs from [`energy`] (a factor `M` in the numerator and a factor 2 on
/// the square root); reported next to the canonical value for comparison.
pub fn kratzer_bracket_form(p: &PotentialParams, mass: f64, qn: QuantumNumbers) -> Option<f64> {
    match *p {
        PotentialParams::ModKratzerRing { d0, r0, .. } => {
            let l = l_eff_for(p, mass, qn).ok()?;
            let num = 2.0 * mass * d0 * r0;
            let den = 2.0 * f64::from(qn.n) + 1.0 + (mass * d0 * r0 * r0 + l.squared()).sqrt();
            Some(d0 - (num / den).powi(2))
        }
        _ => None,
    }
}
