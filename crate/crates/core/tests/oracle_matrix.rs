//! Closed forms against the finite-difference eigensolvers over a seeded
//! parameter matrix covering every potential kind.

use ncpspec::oracle::{angular_eigenvalue, radial_eigenvalue, verify, AngularGrid, GridSpec};
use ncpspec::{
    decompose, energy, l_eff, PotentialKind, PotentialParams, QuantumNumbers, RadialProblem,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_case(rng: &mut ChaCha8Rng, kind: PotentialKind) -> (PotentialParams, QuantumNumbers) {
    let qn = QuantumNumbers::new(
        rng.gen_range(0..=3),
        rng.gen_range(0..=2),
        rng.gen_range(-2..=2),
    );
    let m2 = f64::from(qn.m * qn.m);
    let beta = rng.gen_range(0.0..2.0);
    let ring_gamma = |rng: &mut ChaCha8Rng| 0.9 * (beta + m2) * rng.gen_range(-1.0..1.0);
    let p = match kind {
        PotentialKind::Makarov => PotentialParams::Makarov {
            alpha: rng.gen_range(-3.0..-0.5),
            beta,
            gamma: ring_gamma(rng),
        },
        PotentialKind::ModKratzerRing => PotentialParams::ModKratzerRing {
            d0: rng.gen_range(0.5..3.0),
            r0: rng.gen_range(0.5..2.0),
            beta,
        },
        PotentialKind::DoubleRingKratzer => PotentialParams::DoubleRingKratzer {
            d0: rng.gen_range(0.5..3.0),
            r0: rng.gen_range(0.5..2.0),
            beta,
            gamma: rng.gen_range(-0.2..2.0),
        },
        PotentialKind::ModifiedNonCentral => PotentialParams::ModifiedNonCentral {
            d: rng.gen_range(0.5..3.0),
            a: rng.gen_range(0.5..2.0),
            beta,
            gamma: ring_gamma(rng),
        },
        PotentialKind::RingOscillator => PotentialParams::RingOscillator {
            kappa: rng.gen_range(0.2..2.0),
            omega: rng.gen_range(0.0..2.0),
            beta,
        },
    };
    (p, qn)
}

fn matrix() -> Vec<(PotentialParams, QuantumNumbers)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let mut out = Vec::new();
    for _ in 0..5 {
        for kind in PotentialKind::ALL {
            out.push(random_case(&mut rng, kind));
        }
    }
    out
}

#[test]
fn seeded_matrix_passes_verification() {
    let cases = matrix();
    assert!(cases.len() >= 20);
    for (p, qn) in cases {
        let report = verify(&p, 1.0, qn, None, &AngularGrid::default()).unwrap();
        assert!(report.pass, "{p:?} {qn}: {report:#?}");
    }
}

#[test]
fn healthy_runs_converge_at_second_order() {
    let cases = [
        (
            PotentialParams::Makarov {
                alpha: -2.0,
                beta: 0.3,
                gamma: 0.1,
            },
            QuantumNumbers::new(2, 1, 1),
        ),
        (
            PotentialParams::RingOscillator {
                kappa: 1.0,
                omega: 1.0,
                beta: 2.0,
            },
            QuantumNumbers::new(2, 1, 1),
        ),
        (
            PotentialParams::ModifiedNonCentral {
                d: 1.0,
                a: 1.0,
                beta: 0.0,
                gamma: 0.0,
            },
            QuantumNumbers::new(1, 1, 0),
        ),
    ];
    for (p, qn) in cases {
        let s = energy(&p, 1.0, qn).unwrap();
        let prob = decompose(&p, 1.0, s.l_eff.value).unwrap();
        let grid = GridSpec::auto(1.0, &prob, s.energy())
            .with_points(1000, 3)
            .unwrap();
        let ext = radial_eigenvalue(1.0, &prob, qn.n, &grid).unwrap();
        let order = ext.order.expect("resolvable differences");
        assert!((1.5..=2.5).contains(&order), "{p:?}: order {order}");

        let (beta, gamma) = p.ring();
        let ang = angular_eigenvalue(
            1.0,
            p.kind(),
            beta,
            gamma,
            qn.m,
            qn.s,
            &AngularGrid::new(250, 3).unwrap(),
        )
        .unwrap();
        let order = ang.order.expect("resolvable differences");
        assert!((1.5..=2.5).contains(&order), "{p:?}: angular order {order}");
    }
}

#[test]
fn doubling_the_box_leaves_bound_levels_unchanged() {
    let prob = RadialProblem::coulomb_like(0.0, -2.0, 1.0).unwrap();
    for k in 0..3 {
        let small = GridSpec::new(80.0, 4000, 3).unwrap();
        let large = GridSpec::new(160.0, 8000, 3).unwrap();
        let a = radial_eigenvalue(1.0, &prob, k, &small).unwrap().value;
        let b = radial_eigenvalue(1.0, &prob, k, &large).unwrap().value;
        assert!((a - b).abs() / a.abs() < 1e-8, "k={k}: {a} vs {b}");
    }
    let prob = RadialProblem::oscillator_like(0.7, 2.0).unwrap();
    let a = radial_eigenvalue(1.0, &prob, 2, &GridSpec::new(12.0, 4000, 3).unwrap())
        .unwrap()
        .value;
    let b = radial_eigenvalue(1.0, &prob, 2, &GridSpec::new(24.0, 8000, 3).unwrap())
        .unwrap()
        .value;
    assert!((a - b).abs() / a.abs() < 1e-8, "{a} vs {b}");
}

#[test]
fn radial_levels_strictly_increase() {
    let prob = RadialProblem::coulomb_like(0.5, -1.5, 2.3).unwrap();
    let grid = GridSpec::new(150.0, 4000, 2).unwrap();
    let levels: Vec<f64> = (0..5)
        .map(|k| radial_eigenvalue(1.0, &prob, k, &grid).unwrap().value)
        .collect();
    assert!(levels.windows(2).all(|w| w[0] < w[1]), "{levels:?}");
    assert!(levels.iter().all(|&e| e < 0.5));
}

#[test]
fn angular_oracle_matches_effective_l_over_grid() {
    let grid = AngularGrid::default();
    for kind in PotentialKind::ALL {
        for (beta, gamma) in [(0.0, 0.0), (0.5, 0.2), (2.0, 1.0)] {
            for m in 0..=2 {
                for s in 0..=2 {
                    let closed = match l_eff(kind, 1.0, beta, gamma, m, s) {
                        Ok(l) => l.squared(),
                        Err(_) => {
                            // The oracle must reject the same parameters.
                            assert!(
                                angular_eigenvalue(1.0, kind, beta, gamma, m, s, &grid).is_err()
                            );
                            continue;
                        }
                    };
                    let fd = angular_eigenvalue(1.0, kind, beta, gamma, m, s, &grid)
                        .unwrap()
                        .value;
                    assert!(
                        (fd - closed).abs() / closed < 1e-6,
                        "{kind:?} beta={beta} gamma={gamma} m={m} s={s}: {fd} vs {closed}"
                    );
                }
            }
        }
    }
}

#[test]
fn oracle_confirms_spectrum_examples() {
    let grid = GridSpec::new(60.0, 4000, 3).unwrap();
    let prob = RadialProblem::coulomb_like(0.0, -2.0, 1.0).unwrap();
    let fd = radial_eigenvalue(1.0, &prob, 0, &grid).unwrap().value;
    assert!((fd + 1.0 / (0.5 + 5f64.sqrt() / 2.0).powi(2)).abs() < 1e-6);

    let prob = RadialProblem::oscillator_like(1.0, 3.75).unwrap();
    let fd = radial_eigenvalue(1.0, &prob, 1, &GridSpec::new(10.0, 4000, 3).unwrap())
        .unwrap()
        .value;
    assert!((fd - 10.0).abs() < 1e-5, "{fd}");
}

#[test]
fn verify_examples_pass() {
    let cases = [
        (
            PotentialParams::ModifiedNonCentral {
                d: 1.0,
                a: 1.0,
                beta: 0.0,
                gamma: 0.0,
            },
            QuantumNumbers::new(0, 0, 0),
        ),
        (
            PotentialParams::RingOscillator {
                kappa: 1.0,
                omega: 1.0,
                beta: 2.0,
            },
            QuantumNumbers::new(2, 1, 1),
        ),
        (
            PotentialParams::DoubleRingKratzer {
                d0: 1.0,
                r0: 1.0,
                beta: 0.0,
                gamma: 0.0,
            },
            QuantumNumbers::new(0, 0, 0),
        ),
    ];
    for (p, qn) in cases {
        let r = verify(&p, 1.0, qn, None, &AngularGrid::default()).unwrap();
        assert!(r.pass, "{r:#?}");
    }
}
