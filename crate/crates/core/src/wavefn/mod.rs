//! Normalized radial eigenfunctions.
//!
//! Coulomb-like states: `R(r) = N r^{μ₃+1/2} e^{−μ₁ r} ₁F₁(−n; 2μ₃+1; 2μ₁ r)`.
//! Oscillator-like states, with `u = r²` and `τ = μ₃ − 1/2`:
//! `R = N e^{−μ₁ u/2} u^{(τ+1)/2} ₁F₁(−n; τ + 3/2; μ₁ u)`.
//!
//! The normalization `∫₀^∞ R² dr = 1` is computed numerically. Values are
//! carried in log form so that stiff molecular states (μ₃ in the hundreds)
//! neither overflow nor underflow.

mod kummer;
pub mod laplace;

use serde::Serialize;

pub use kummer::kummer_poly;
use kummer::{kummer_abs_coefficient_sum, kummer_unchecked};

use crate::error::{Error, Result};
use crate::potentials::{decompose, Family, PotentialParams, QuantumNumbers, RadialProblem};
use crate::quad;
use crate::spectra::{self, RadialLevel, SpectrumResult};

/// Relative size of the neglected tail beyond [`RadialWavefunction::extent`].
const TAIL_FRACTION: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialWavefunction {
    pub family: Family,
    pub n: u32,
    pub mu1: f64,
    pub mu3: f64,
    pub energy: f64,
    pub mass: f64,
    pub problem: RadialProblem,
    /// `ln N`.
    pub ln_norm: f64,
    /// Radius past which the neglected norm is below `1e-12`.
    pub extent: f64,
}

impl RadialWavefunction {
    /// Builds and normalizes the eigenfunction of `level` in `prob`.
    pub fn new(mass: f64, prob: &RadialProblem, level: &RadialLevel) -> Result<Self> {
        if level.family != prob.family {
            return Err(Error::Contract(
                "level and problem belong to different families".into(),
            ));
        }
        let b = match prob.family {
            Family::CoulombLike => 2.0 * level.mu3 + 1.0,
            Family::OscillatorLike => level.mu3 + 1.0,
        };
        kummer::check_b(b)?;
        let mut w = Self {
            family: prob.family,
            n: level.n,
            mu1: level.mu1,
            mu3: level.mu3,
            energy: level.energy,
            mass,
            problem: *prob,
            ln_norm: 0.0,
            extent: 0.0,
        };
        w.normalize();
        Ok(w)
    }

    /// `N`, the normalization constant; may overflow for stiff states, see `ln_norm`.
    pub fn norm(&self) -> f64 {
        self.ln_norm.exp()
    }

    fn exponent(&self) -> f64 {
        self.mu3 + 0.5
    }

    fn kummer_b(&self) -> f64 {
        match self.family {
            Family::CoulombLike => 2.0 * self.mu3 + 1.0,
            Family::OscillatorLike => self.mu3 + 1.0,
        }
    }

    fn kummer_arg(&self, r: f64) -> f64 {
        match self.family {
            Family::CoulombLike => 2.0 * self.mu1 * r,
            Family::OscillatorLike => self.mu1 * r * r,
        }
    }

    fn r_from_arg(&self, z: f64) -> f64 {
        match self.family {
            Family::CoulombLike => z / (2.0 * self.mu1),
            Family::OscillatorLike => (z / self.mu1).sqrt(),
        }
    }

    /// `ln` of the unnormalized envelope `r^{μ₃+1/2} e^{−μ₁ r}` (or `e^{−μ₁ r²/2}`).
    fn ln_envelope(&self, r: f64) -> f64 {
        let p = self.exponent();
        match self.family {
            Family::CoulombLike => p * r.ln() - self.mu1 * r,
            Family::OscillatorLike => p * r.ln() - 0.5 * self.mu1 * r * r,
        }
    }

    /// Radius where the envelope `r^{μ₃+1/2}e^{−μ₁r}` (or its Gaussian analogue) peaks.
    pub fn envelope_peak(&self) -> f64 {
        let p = self.exponent();
        match self.family {
            Family::CoulombLike => p / self.mu1,
            Family::OscillatorLike => (p / self.mu1).sqrt(),
        }
    }

    /// Width of the envelope around its peak (Gaussian approximation).
    pub fn width(&self) -> f64 {
        match self.family {
            Family::CoulombLike => self.envelope_peak() / self.exponent().sqrt(),
            Family::OscillatorLike => 1.0 / (2.0 * self.mu1).sqrt(),
        }
    }

    /// Upper bound on every zero of the polynomial factor, in `z`.
    fn zero_bound(&self) -> f64 {
        2.0 * (2.0 * f64::from(self.n) + self.kummer_b()) + 1.0
    }

    fn normalize(&mut self) {
        let shift = self.ln_envelope(self.envelope_peak());
        let b = self.kummer_b();
        let n = self.n;
        let shape = |r: f64| {
            if r <= 0.0 {
                return 0.0;
            }
            let f = kummer_unchecked(n, b, self.kummer_arg(r));
            (2.0 * (self.ln_envelope(r) - shift)).exp() * f * f
        };

        let coeff = kummer_abs_coefficient_sum(n, b).ln();
        let nf = f64::from(n);
        let p = self.exponent();
        // ln of an upper bound on shape(r), and its slope, valid once z(r) ≥ 1.
        let tail = |r: f64| -> Option<f64> {
            let z = self.kummer_arg(r);
            if z < 1.0 {
                return None;
            }
            let g = 2.0 * (self.ln_envelope(r) - shift) + 2.0 * coeff + 2.0 * nf * z.ln();
            let slope = match self.family {
                Family::CoulombLike => 2.0 * (p + nf) / r - 2.0 * self.mu1,
                Family::OscillatorLike => 2.0 * (p + 2.0 * nf) / r - 2.0 * self.mu1 * r,
            };
            (slope < 0.0).then(|| g.exp() / -slope)
        };

        let sigma = self.width();
        let mut r_c = self.envelope_peak().max(self.r_from_arg(self.zero_bound())) + 10.0 * sigma;
        // The shifted integrand is O(1) at the peak, so the integral is at least
        // of order σ; this floor stops tail panels from chasing relative error in
        // values that are already negligible.
        let floor = 1e-16 * sigma;
        let mut integral = quad::integrate_panels(shape, 0.0, r_c, sigma, floor, 1e-14).0;
        loop {
            if let Some(t) = tail(r_c) {
                if t <= TAIL_FRACTION * integral {
                    break;
                }
            }
            let next = r_c + 5.0 * sigma;
            integral += quad::integrate_panels(shape, r_c, next, sigma, floor, 1e-14).0;
            r_c = next;
        }
        self.extent = r_c;
        self.ln_norm = -shift - 0.5 * integral.ln();
    }

    /// `R(r)`; zero for `r ≤ 0`.
    pub fn eval(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let f = kummer_unchecked(self.n, self.kummer_b(), self.kummer_arg(r));
        if f == 0.0 {
            return 0.0;
        }
        f * (self.ln_norm + self.ln_envelope(r)).exp()
    }

    /// Zeros of `R` on `(0, ∞)` in increasing order.
    pub fn nodes(&self) -> Vec<f64> {
        let b = self.kummer_b();
        let n = self.n;
        let f = |z: f64| kummer_unchecked(n, b, z);
        let z_max = self.zero_bound();
        let steps = 1000 * (n as usize + 1);
        let dz = z_max / steps as f64;
        let mut roots = Vec::new();
        let mut z0 = 0.0;
        let mut f0 = f(z0);
        for i in 1..=steps {
            let z1 = dz * i as f64;
            let f1 = f(z1);
            if f1 == 0.0 {
                roots.push(z1);
            } else if f0 != 0.0 && f0.signum() != f1.signum() {
                roots.push(bisect(&f, z0, z1));
            }
            z0 = z1;
            f0 = f1;
        }
        roots.into_iter().map(|z| self.r_from_arg(z)).collect()
    }

    pub fn node_count(&self) -> usize {
        self.nodes().len()
    }

    /// Central second difference of `R` with step `h`.
    pub fn second_derivative_fd(&self, r: f64, h: f64) -> f64 {
        (self.eval(r + h) - 2.0 * self.eval(r) + self.eval(r - h)) / (h * h)
    }

    /// Residual of the reduced radial equation at `r`, with `R''` by central differences.
    pub fn ode_residual(&self, r: f64, h: f64) -> f64 {
        let prob = &self.problem;
        let scaled_energy = match self.family {
            Family::CoulombLike => self.mass * (self.energy - prob.e0),
            Family::OscillatorLike => self.mass * self.energy,
        };
        let k2 = scaled_energy - prob.scaled_effective_potential(self.mass, r);
        self.second_derivative_fd(r, h) + k2 * self.eval(r)
    }

    /// `∫₀^∞ R_self R_other dr`.
    pub fn overlap(&self, other: &RadialWavefunction) -> f64 {
        let upper = self.extent.max(other.extent);
        let panel = self.width().min(other.width());
        let f = |r: f64| self.eval(r) * other.eval(r);
        quad::integrate_panels(f, 0.0, upper, panel, 1e-15, 1e-13).0
    }
}

fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Eigenfunction of `p` for `qn`, checked against a previously computed spectrum.
pub fn radial_wavefunction(
    p: &PotentialParams,
    mass: f64,
    qn: QuantumNumbers,
    spectrum: &SpectrumResult,
) -> Result<RadialWavefunction> {
    if spectrum.potential != p.kind() || spectrum.qn != qn {
        return Err(Error::Contract(format!(
            "spectrum for {} {} does not match {} {}",
            spectrum.potential,
            spectrum.qn,
            p.kind(),
            qn
        )));
    }
    let fresh = spectra::energy(p, mass, qn)?;
    let e = fresh.energy();
    if (e - spectrum.energy()).abs() > 1e-12 * e.abs().max(1e-300) {
        return Err(Error::Contract(format!(
            "spectrum energy {} differs from {} for these parameters",
            spectrum.energy(),
            e
        )));
    }
    let prob = decompose(p, mass, fresh.l_eff.value)?;
    RadialWavefunction::new(mass, &prob, &fresh.level)
}
