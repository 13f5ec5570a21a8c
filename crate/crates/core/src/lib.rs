//! Exact bound states of non-central potentials.
//!
//! Five ring-shaped potentials (Makarov, Kratzer-type and oscillator-type)
//! separate into a polar equation, whose Pöschl–Teller form fixes an
//! effective angular quantum number, and a radial equation that reduces to a
//! Coulomb-like or oscillator-like problem with closed-form spectrum and
//! Kummer-polynomial eigenfunctions. The [`oracle`] module re-derives every
//! closed form with finite-difference eigensolvers.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angular;
pub mod error;
pub mod oracle;
pub mod potentials;
pub mod quad;
pub mod spectra;
pub mod units;
pub mod wavefn;

pub use angular::{l_eff, l_eff_for, EffectiveL};
pub use error::{Error, Result};
pub use oracle::{verify, AngularGrid, GridSpec, OracleReport};
pub use potentials::{
    decompose, Family, PotentialKind, PotentialParams, QuantumNumbers, RadialProblem,
};
pub use spectra::{energy, special_case_energy, RadialLevel, SpecialCase, SpectrumResult};
pub use units::{mass_parameter, UnitSystem};
pub use wavefn::{kummer_poly, radial_wavefunction, RadialWavefunction};
