//! Bound-state spectra and thermodynamics of diatomic molecules (H2, HCl, LiH)
//! in an improved screened Kratzer potential, optionally threaded by an
//! Aharonov-Bohm flux line and a uniform magnetic field.
//!
//! The closed-form spectrum comes from a functional-analysis solution of the
//! radial equation under the Greene-Aldrich approximation to 1/r. Everything
//! downstream (partition functions, free energy, entropy, heat capacity,
//! magnetization, susceptibility) is built on that spectrum and is
//! cross-checked by brute-force oracles in [`validation`]:
//! a finite-difference eigensolver and a compensated high-precision summation.
//!
//! Energies are in eV, lengths in Angstrom, temperatures enter as beta = 1/(k_B T)
//! in 1/eV. `k` below always means the combination 2*mu/hbar^2 in 1/(eV*A^2).

pub mod error;
pub mod molecules;
pub mod potential;
pub mod special;
pub mod spectrum;
pub mod thermo;
pub mod validation;

pub use error::IskpError;
pub use molecules::{Molecule, MoleculeDb};
pub use potential::{GreeneAldrichForm, PotentialParams};
pub use spectrum::{BoundWindow, DeltaMode, FieldConfig, LevelContext, SpectrumParams};
pub use thermo::{EndpointMode, SpectrumRecast, ThermoPoint};
