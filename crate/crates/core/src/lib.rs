//! Reciprocal-symmetric kinematics.
//!
//! Velocities and slownesses (`v* = c²/v`) are treated as images of one
//! another, with composition laws that commute with the reciprocation:
//!
//! - [`scalar`]: velocity/slowness addition `⊕`/`⊕*`, the compatible scaling
//!   laws `⊗`/`⊗*`, and bounded energy-transfer rates.
//! - [`symdiff`]: the reflection-symmetric central difference and the exact
//!   decay/oscillator solution families it admits, with the associated
//!   energy-level formulas.
//! - [`radiation`]: average oscillator energies under Planck, bounded, and
//!   Fermi-type statistics, plus spectral intensity sweeps.
//! - [`vector`]: the complex 3-vector composition law, reciprocity-space
//!   rotation, and the reciprocal-vector construction.
//! - [`verify`]: a seeded fuzzing harness checking every identity above and
//!   emitting a deterministic report.

pub mod error;
pub mod radiation;
pub mod scalar;
pub mod symdiff;
pub mod vector;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{LightSpeed, Slowness, TransferRate, Velocity};
