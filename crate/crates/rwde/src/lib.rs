//! Random walks in dynamic random environments.
//!
//! This crate simulates uniformly elliptic random walks whose jump laws are
//! re-drawn at every time step (discrete time) or evolve along a càdlàg path
//! of jump rates (continuous time), computes the quenched point-to-point
//! passage functions exactly, and estimates the level-1 large-deviation rate
//! function together with the finite-scale checks that back it up:
//! subadditivity of passage functions, reach-set geometry, gauge-norm bounds,
//! kernel comparisons against the simple random walk, shape-theorem
//! convergence, convexity and Lipschitz continuity of the rate, and the
//! open/closed large-deviation inequalities.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! lattice  -> env        -> dp / ctime       -> analysis   -> runner
//! geometry    seeded        exact quenched      rate curves   experiments,
//! of jump     environment   solvers (log-DP,    and checks    artifacts,
//! ranges      fields        uniformization,                   verdicts
//!                           Feynman-Kac MC)
//! ```
//!
//! Every module is deterministic given the experiment seed: environments are
//! counter-based (a cell's law is a pure function of `(seed, time, site)`),
//! parallel loops use fixed reduction orders, and Monte Carlo runs are
//! chunked so results are bit-identical across thread counts.
//!
//! See the `examples/` directory for one runnable example per capability and
//! the `rwde` binary for the declarative experiment runner.

pub mod analysis;
pub mod cache;
pub mod config;
pub mod ctime;
pub mod dp;
pub mod env;
pub mod error;
pub mod lattice;
pub mod report;
pub mod rng;
pub mod runner;

pub use error::Error;

/// Bumped whenever a change invalidates cached solver artifacts.
pub const MODULE_VERSION: u32 = 1;
