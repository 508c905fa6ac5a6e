//! Circuit-level stabilizer simulation and matching decoders for subsystem
//! codes on the heavy-hex lattice.
//!
//! The crate builds two code families mapped to a degree-3 ("heavy")
//! hexagonal qubit layout, the rotated subsystem surface code (RSSC) and the
//! heavy-hexagon code (HHC), together with everything needed to estimate
//! their logical error rates under independent, non-identical noise:
//!
//! - [`pauli`] / [`tableau`] / [`frame`]: Pauli algebra, a stabilizer
//!   tableau for reference sampling, and fast Pauli-frame propagation.
//! - [`codes`]: lattice and code construction, validation, and brute-force
//!   distance checks.
//! - [`circuits`]: scheduled syndrome-extraction circuits, full memory
//!   experiments with schedule-induced gauge fixing, and detector
//!   definitions.
//! - [`noise`]: uniform, folded-normal, reciprocal-normal and
//!   location-specific ("bad site") error-rate assignments.
//! - [`engine`]: Monte Carlo sampling of faulty circuits.
//! - [`decoder`]: detector-graph construction, Dijkstra path weights and
//!   exact minimum-weight perfect matching, in rate-aware and rate-naive
//!   modes.
//! - [`analytics`]: closed-form and quadrature oracles used to cross-check
//!   the Monte Carlo.
//! - [`harness`]: the configuration-driven experiment runner behind the
//!   `hexqec` CLI.

// pub mod analytics;
pub mod bits;
pub mod circuits;
pub mod codes;
pub mod decoder;
pub mod engine;
pub mod frame;
// pub mod harness;
pub mod noise;
pub mod pauli;
pub mod rng;
pub mod tableau;

pub use codes::{build_heavy_hex, build_hhc, build_rssc, CodeKind, SubsystemCode};
pub use pauli::{Pauli, PauliOperator, Phase};
