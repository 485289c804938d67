//! Models for trapped-ion state detection with coherent Raman repumping.
//!
//! The crate covers four layers that build on each other:
//!
//! * [`angular`] — Wigner 3-j/6-j symbols and selection rules.
//! * [`atom`] — hyperfine level structure, Zeeman shifts, dipole
//!   amplitudes and spontaneous-decay branching for ¹³⁷Ba⁺.
//! * [`pumping`] — population rate equations for the 24-state metastable
//!   manifold under configurable laser beams and Raman pairs, dark-state
//!   analysis, and seeded Monte Carlo photon counting.
//! * [`stats`] — analytic bright/dark photon-count distributions, a
//!   telegraph-process sampler, maximum-likelihood histogram fitting and
//!   threshold discrimination.
//! * [`transfer`] — two-color Raman shelving transfer with thermal
//!   motional dephasing.
//!
//! All quantities are SI internally; frequencies are angular (rad/s)
//! unless a name says otherwise.

pub mod angular;
pub mod atom;
pub mod constants;
pub mod error;
pub mod pumping;
pub mod rng;
pub mod stats;
pub mod transfer;

pub use error::{Error, Result};
