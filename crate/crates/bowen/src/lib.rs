//! Numerical estimation of the Hausdorff dimension of radial Julia sets for
//! random exponential dynamics `f_eta(z) = eta * exp(z)`.
//!
//! The engine iterates a weighted transfer operator on a truncated half-plane
//! grid, averages per-step normalization logs into an expected pressure, and
//! locates the Bowen zero `EP(h) = 0` whose root is the dimension estimate.
//! Around that core live a seeded sampler for the random parameter law, an
//! independent preimage-tree evaluator used as a cross-check oracle, a numeric
//! audit of the standing hyperbolicity/distortion hypotheses, and a backward-
//! orbit sampler that renders pieces of the fiber Julia sets.
//!
//! Everything downstream of a seed is deterministic, including under changing
//! worker-pool sizes: parallel reductions are ordered, and no artifact embeds
//! wall-clock state.

pub mod config;
pub mod expfamily;
pub mod julia;
pub mod numeric;
pub mod operator;
pub mod oracle;
pub mod pressure;
pub mod randomdriver;
pub mod verify;

pub use config::EngineConfig;
pub use expfamily::{ExpParameter, HalfPlaneDomain, Potential};
pub use operator::{BasePointFunctional, GridFunction, NormalizedIterationState};
pub use pressure::{DimensionResult, PressureEstimate};
pub use randomdriver::{FiberSequence, ParameterLaw};
