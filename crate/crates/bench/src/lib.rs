//! Shared fixtures for the criterion benchmarks.

use ncpspec::{mass_parameter, PotentialParams, QuantumNumbers, UnitSystem};

/// Nitrogen parameters of the modified non-central potential with no ring terms.
pub fn nitrogen() -> (PotentialParams, f64) {
    let mass = mass_parameter(7.003_35, UnitSystem::Molecular).expect("positive mass");
    (
        PotentialParams::ModifiedNonCentral {
            d: 11.9384,
            a: 1.0940,
            beta: 0.0,
            gamma: 0.0,
        },
        mass,
    )
}

/// `(n, s, m)` triples with `n, s ≤ 3` and `|m| ≤ s`.
pub fn ladder() -> Vec<QuantumNumbers> {
    let mut out = Vec::new();
    for n in 0..=3 {
        for s in 0..=3u32 {
            for m in -(s as i32)..=(s as i32) {
                out.push(QuantumNumbers::new(n, s, m));
            }
        }
    }
    out
}
