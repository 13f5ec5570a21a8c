//! Laplace-space picture of the Coulomb-like states.
//!
//! With the origin and asymptotic behaviour factored out of `R`, the
//! remaining function `g(r)` has a Laplace transform
//! `f(t) = ∫₀^∞ e^{−tr} g(r) dr` that obeys the first-order equation
//! `(t² − μ₁²) f' + ((2μ₃ + 1) t + μ₂²) f = 0`. At a bound level the
//! solution is the finite product `(t − μ₁)^n (t + μ₁)^{−(2μ₃+1)−n}`, and its
//! inverse transform is `g(r) = r^{2μ₃} e^{−μ₁ r} ₁F₁(−n; 2μ₃+1; 2μ₁ r)`
//! up to the constant `Γ(2μ₃ + 1)`.

use crate::error::{Error, Result};
use crate::potentials::Family;
use crate::spectra::RadialLevel;

use super::kummer::kummer_unchecked;

fn require_coulomb(level: &RadialLevel) -> Result<()> {
    match level.family {
        Family::CoulombLike => Ok(()),
        Family::OscillatorLike => Err(Error::Contract(
            "Laplace image is defined for Coulomb-like levels".into(),
        )),
    }
}

/// `g(r) = r^{2μ₃} e^{−μ₁ r} ₁F₁(−n; 2μ₃+1; 2μ₁ r)`.
pub fn reduced_solution(level: &RadialLevel, r: f64) -> Result<f64> {
    require_coulomb(level)?;
    if r <= 0.0 {
        return Ok(0.0);
    }
    let b = 2.0 * level.mu3 + 1.0;
    let f = kummer_unchecked(level.n, b, 2.0 * level.mu1 * r);
    Ok(f * (2.0 * level.mu3 * r.ln() - level.mu1 * r).exp())
}

/// Closed-form image `(t − μ₁)^n (t + μ₁)^{−(2μ₃+1)−n}` for `t > μ₁`.
pub fn image(level: &RadialLevel, t: f64) -> Result<f64> {
    require_coulomb(level)?;
    let (mu1, mu3, n) = (level.mu1, level.mu3, level.n);
    if !(t > mu1) {
        return Err(Error::Domain(format!(
            "Laplace variable t = {t} must exceed mu1 = {mu1}"
        )));
    }
    let nf = f64::from(n);
    Ok((nf * (t - mu1).ln() - (2.0 * mu3 + 1.0 + nf) * (t + mu1).ln()).exp())
}

/// The same image expanded as the terminating binomial series
/// `Σ_k (−1)^k C(n,k) (2μ₁)^k (t + μ₁)^{−(2μ₃+1)−k}`.
pub fn image_series(level: &RadialLevel, t: f64) -> Result<f64> {
    require_coulomb(level)?;
    let (mu1, mu3, n) = (level.mu1, level.mu3, level.n);
    let sigma = 2.0 * mu3 + 1.0;
    let mut binom = 1.0;
    let mut total = 0.0;
    for k in 0..=n {
        if k > 0 {
            binom *= f64::from(n - k + 1) / f64::from(k);
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let kf = f64::from(k);
        total += sign * binom * (kf * (2.0 * mu1).ln() - (sigma + kf) * (t + mu1).ln()).exp();
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potentials::RadialProblem;
    use crate::spectra;

    #[test]
    fn series_equals_product() {
        let prob = RadialProblem::coulomb_like(0.0, -2.0, 1.3).unwrap();
        for n in 0..5 {
            let level = spectra::level(1.0, &prob, n).unwrap();
            for k in [1.5, 2.0, 3.0, 7.0] {
                let t = k * level.mu1;
                let a = image(&level, t).unwrap();
                let b = image_series(&level, t).unwrap();
                assert!(
                    (a - b).abs() <= 1e-12 * a.abs().max(1e-300) + 1e-15 * b.abs(),
                    "{n} {t}: {a} {b}"
                );
            }
        }
    }

    #[test]
    fn image_solves_first_order_equation() {
        // (t² − μ₁²) f' + ((2μ₃ + 1) t + μ₂²) f = 0 with μ₂² = M·A.
        let prob = RadialProblem::coulomb_like(0.0, -3.0, 2.0).unwrap();
        let mass = 1.0;
        for n in 0..4 {
            let level = spectra::level(mass, &prob, n).unwrap();
            let mu2_sq = mass * prob.a;
            for k in [1.5, 2.5, 4.0] {
                let t = k * level.mu1;
                let h = 1e-5 * t;
                let f = image(&level, t).unwrap();
                let df =
                    (image(&level, t + h).unwrap() - image(&level, t - h).unwrap()) / (2.0 * h);
                let lhs = (t * t - level.mu1 * level.mu1) * df;
                let rhs = ((2.0 * level.mu3 + 1.0) * t + mu2_sq) * f;
                let scale = ((2.0 * level.mu3 + 1.0) * t).abs() * f.abs() + mu2_sq.abs() * f.abs();
                assert!((lhs + rhs).abs() <= 1e-8 * scale, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn rejects_oscillator_and_small_t() {
        let prob = RadialProblem::oscillator_like(1.0, 0.0).unwrap();
        let level = spectra::level(1.0, &prob, 0).unwrap();
        assert!(image(&level, 3.0).is_err());
        let prob = RadialProblem::coulomb_like(0.0, -2.0, 0.0).unwrap();
        let level = spectra::level(1.0, &prob, 0).unwrap();
        assert!(image(&level, 0.5).is_err());
    }
}
