//! Physical constants (SI, CODATA 2018).

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Bohr magneton, J/T.
pub const MU_B: f64 = 9.274_010_078_3e-24;

/// Atomic mass unit, kg.
pub const AMU: f64 = 1.660_539_066_60e-27;

/// ¹³⁷Ba atomic mass, kg.
pub const MASS_BA137: f64 = 136.905_827 * AMU;

/// Electron spin g-factor, taken as exactly 2 in the Landé composition.
pub const G_S: f64 = 2.0;
