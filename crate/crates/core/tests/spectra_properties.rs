//! Structural properties of the closed-form spectra.

use ncpspec::spectra::{level, quantization_residual};
use ncpspec::{
    decompose, energy, l_eff_for, mass_parameter, special_case_energy, PotentialParams,
    QuantumNumbers, RadialProblem, SpecialCase, UnitSystem,
};
use proptest::prelude::*;

fn qn_grid(max_n: u32, max_s: u32, max_m: i32) -> impl Iterator<Item = QuantumNumbers> {
    (0..=max_n).flat_map(move |n| {
        (0..=max_s).flat_map(move |s| (-max_m..=max_m).map(move |m| QuantumNumbers::new(n, s, m)))
    })
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn coulomb_potentials() -> Vec<(PotentialParams, f64)> {
    let n2 = mass_parameter(7.003_35, UnitSystem::Molecular).unwrap();
    vec![
        (
            PotentialParams::Makarov {
                alpha: -2.0,
                beta: 0.0,
                gamma: 0.0,
            },
            1.0,
        ),
        (
            PotentialParams::Makarov {
                alpha: -1.3,
                beta: 1.5,
                gamma: 0.7,
            },
            1.0,
        ),
        (
            PotentialParams::ModKratzerRing {
                d0: 1.0,
                r0: 1.0,
                beta: 0.5,
            },
            1.0,
        ),
        (
            PotentialParams::DoubleRingKratzer {
                d0: 2.0,
                r0: 0.8,
                beta: 0.3,
                gamma: 0.2,
            },
            1.5,
        ),
        (
            PotentialParams::ModifiedNonCentral {
                d: 11.9384,
                a: 1.0940,
                beta: 0.0,
                gamma: 0.0,
            },
            n2,
        ),
        (
            PotentialParams::ModifiedNonCentral {
                d: 1.0,
                a: 1.5,
                beta: 2.0,
                gamma: 1.0,
            },
            1.0,
        ),
    ]
}

#[test]
fn quantization_residual_vanishes() {
    let mut checked = 0;
    for (p, mass) in coulomb_potentials() {
        for qn in qn_grid(6, 2, 2) {
            let s = energy(&p, mass, qn).unwrap();
            let prob = decompose(&p, mass, s.l_eff.value).unwrap();
            let r = quantization_residual(mass, &prob, &s.level);
            assert!(r.abs() <= 1e-10, "{p:?} {qn}: residual {r}");
            checked += 1;
        }
    }
    let osc = PotentialParams::RingOscillator {
        kappa: 0.7,
        omega: 1.2,
        beta: 0.4,
    };
    for qn in qn_grid(6, 2, 2) {
        let s = energy(&osc, 2.0, qn).unwrap();
        let prob = decompose(&osc, 2.0, s.l_eff.value).unwrap();
        assert!(quantization_residual(2.0, &prob, &s.level).abs() <= 1e-10);
    }
    assert!(checked >= 100);
}

#[test]
fn energies_increase_with_n() {
    for (p, mass) in coulomb_potentials() {
        let qn0 = QuantumNumbers::new(0, 1, 1);
        let e0 = decompose(&p, mass, l_eff_for(&p, mass, qn0).unwrap().value)
            .unwrap()
            .e0;
        let ladder: Vec<f64> = (0..12)
            .map(|n| {
                energy(&p, mass, QuantumNumbers::new(n, 1, 1))
                    .unwrap()
                    .energy()
            })
            .collect();
        for w in ladder.windows(2) {
            assert!(w[1] > w[0], "{p:?}: {ladder:?}");
        }
        assert!(ladder.iter().all(|&e| e < e0));
    }

    let (kappa, mass) = (0.9, 1.7);
    let osc = PotentialParams::RingOscillator {
        kappa,
        omega: 0.5,
        beta: 1.0,
    };
    let slope = 4.0 * (kappa / mass).sqrt();
    let ladder: Vec<f64> = (0..10)
        .map(|n| {
            energy(&osc, mass, QuantumNumbers::new(n, 0, 2))
                .unwrap()
                .energy()
        })
        .collect();
    for w in ladder.windows(2) {
        assert!(rel(w[1] - w[0], slope) < 1e-12, "{ladder:?}");
    }
}

proptest! {
    #[test]
    fn coulomb_scaling_law(a in -5.0f64..-0.01, lambda in -0.25f64..20.0, c in 0.05f64..20.0, n in 0u32..8, mass in 0.1f64..10.0) {
        let base = RadialProblem::coulomb_like(0.0, a, lambda).unwrap();
        let scaled = RadialProblem::coulomb_like(0.0, c * a, lambda).unwrap();
        let e = level(mass, &base, n).unwrap().energy;
        let ec = level(mass, &scaled, n).unwrap().energy;
        prop_assert!(rel(ec, c * c * e) < 1e-12);
    }
}

#[test]
fn hydrogen_ladder() {
    for alpha in [-2.0, -1.0, -0.6] {
        let p = PotentialParams::Makarov {
            alpha,
            beta: 0.0,
            gamma: 0.0,
        };
        for qn in qn_grid(5, 5, 5) {
            let big_n = qn.n + qn.s + qn.m.unsigned_abs() + 1;
            if big_n > 6 {
                continue;
            }
            let expected = -alpha * alpha / (4.0 * f64::from(big_n * big_n));
            let e = energy(&p, 1.0, qn).unwrap().energy();
            assert!(
                (e - expected).abs() <= 1e-12,
                "alpha={alpha} {qn}: {e} vs {expected}"
            );
        }
    }
}

#[test]
fn isotropic_oscillator_ladder() {
    let p = PotentialParams::RingOscillator {
        kappa: 0.25,
        omega: 0.0,
        beta: 0.0,
    };
    for qn in qn_grid(6, 4, 4) {
        let expected = f64::from(2 * qn.n + qn.m.unsigned_abs() + qn.s) + 1.5;
        let e = energy(&p, 1.0, qn).unwrap().energy();
        assert!((e - expected).abs() <= 1e-12, "{qn}: {e} vs {expected}");
    }
}

#[test]
fn special_case_identities() {
    let n2 = mass_parameter(7.003_35, UnitSystem::Molecular).unwrap();
    let mut cases: Vec<(SpecialCase, PotentialParams, f64)> = Vec::new();
    for alpha in [-2.0, -0.7] {
        for beta in [0.0, 0.5, 3.0] {
            for mass in [1.0, 2.5] {
                cases.push((
                    SpecialCase::Hartmann,
                    PotentialParams::Makarov {
                        alpha,
                        beta,
                        gamma: 0.0,
                    },
                    mass,
                ));
            }
        }
    }
    for (d0, r0, mass) in [(1.0, 1.0, 1.0), (3.0, 0.5, 2.0), (11.9384, 1.0940, n2)] {
        cases.push((
            SpecialCase::ModifiedKratzer,
            PotentialParams::ModKratzerRing { d0, r0, beta: 0.0 },
            mass,
        ));
    }
    for omega in [1.0, 2.0] {
        for beta in [0.0, 1.5] {
            let kappa = omega * omega / 4.0;
            let p = PotentialParams::RingOscillator {
                kappa,
                omega: 0.0,
                beta,
            };
            cases.push((SpecialCase::RingOscillatorPure, p, 1.0));
        }
    }

    let mut checked = 0;
    for (case, p, mass) in &cases {
        for qn in qn_grid(4, 2, 2) {
            let general = energy(p, *mass, qn).unwrap().energy();
            let special = special_case_energy(*case, p, *mass, qn).unwrap();
            assert!(
                rel(special, general) <= 1e-12,
                "{case:?} {p:?} {qn}: {special} vs {general}"
            );
            checked += 1;
        }
    }
    assert!(checked > 1000);
}
