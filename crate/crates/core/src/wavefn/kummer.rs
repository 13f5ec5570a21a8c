use crate::error::{domain, Result};

/// Terminating confluent hypergeometric series `₁F₁(−n; b; z)`.
///
/// Summed with the running term ratio
/// `t_{k+1}/t_k = (k − n)·z / ((k + 1)(b + k))`, so no gamma functions appear.
pub fn kummer_poly(n: u32, b: f64, z: f64) -> Result<f64> {
    check_b(b)?;
    Ok(kummer_unchecked(n, b, z))
}

pub(crate) fn check_b(b: f64) -> Result<()> {
    if b.is_nan() || (b <= 0.0 && b.fract() == 0.0) {
        Err(domain(format!(
            "Kummer parameter b = {b} is a non-positive integer"
        )))
    } else {
        Ok(())
    }
}

pub(crate) fn kummer_unchecked(n: u32, b: f64, z: f64) -> f64 {
    let nf = f64::from(n);
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let kf = f64::from(k);
        term *= (kf - nf) * z / ((kf + 1.0) * (b + kf));
        sum += term;
    }
    sum
}

/// `Σ|c_k|` over the power-series coefficients, so `|₁F₁(−n; b; z)| ≤ C·z^n` for `z ≥ 1`.
/// `Σ|c_k|` over the power-series coefficients, so `|₁F₁(−n; b; z)| ≤ C·z^n` for `z ≥ 1`.
pub(crate) fn kummer_abs_coefficient_sum(n: u32, b: f64) -> f64 {
    let nf = f64::from(n);
    let mut term = 1.0f64;
    let mut sum = 1.0;
    for k in 0..n {
        let kf = f64::from(k);
        term *= ((nf - kf) / ((kf + 1.0) * (b + kf))).abs();
        sum += term;
    }
    sum
}
