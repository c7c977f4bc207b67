//! memslab: a numerical toolkit for two-qubit mixed states as quantum
//! teleportation resources.
//!
//! The crate computes entanglement, purity, Bell-nonlocality and
//! optimal-teleportation-fidelity functionals of two-qubit density matrices,
//! constructs the named maximally-entangled-mixed-state (MEMS) families, and
//! generates reproducible rank-resolved random MEMS ensembles with
//! nonlocality-region classification.
//!
//! Modules:
//! * [`qcore`] — complex matrices, Jacobi eigensolver, validated state types
//! * [`measures`] — scalar functionals (entropy, concurrence, fidelity, Bell)
//! * [`families`] — named parametric families and their analytic closed forms
//! * [`ensemble`] — seeded random MEMS generation and region classification
//! * [`telesim`] — teleportation-protocol oracle for the fidelity formula
//! * [`pipeline`] — CSV/JSON emission behind the `memslab` CLI
//! * [`verify`] — the self-contained verification suite (`memslab verify`)
//!
//! All numerical code is pure and thread-safe. With the default `parallel`
//! feature, ensemble generation fans out over rayon; results are identical
//! to the sequential fallback because every record derives its own random
//! stream from `(seed, rank, index)`.

pub mod ensemble;
pub mod families;
pub mod measures;
pub mod pipeline;
pub mod qcore;
pub mod rng;
mod sampling;
pub mod telesim;
pub mod verify;
