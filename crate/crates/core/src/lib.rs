//! Building blocks for comparing grid-scale electricity scenarios.
//!
//! The crate covers the full study loop for a capacity-planning question such
//! as "what does storage buy a 2050 power system?":
//!
//! 1. [`doe`] — central composite designs over the capacity factors.
//! 2. [`scenario`] — technology economics, fuels and hourly profiles.
//! 3. [`dispatch`] — a deterministic 8760-hour merit-order simulator that
//!    turns one capacity vector into annual cost, CO₂, curtailed excess
//!    (CEEP) and import.
//! 4. [`surrogate`] — SVR, gradient-boosted trees and an MLP, trained from
//!    scratch on the simulated designs, with k-fold cross-validation.
//! 5. [`hpo`] — tree-structured Parzen estimator tuning of each model family.
//! 6. [`moga`] — NSGA-II style multi-objective minimization over the fitted
//!    surrogates, plus a weighted-sum mode and compromise selection.
//! 7. [`explain`] — exact and sampled Shapley attributions with beeswarm,
//!    waterfall and response-grid data emitters.
//!
//! Everything is deterministic for fixed seeds: identical inputs reproduce
//! identical artifacts byte for byte.

pub mod dispatch;
pub mod doe;
pub mod error;
pub mod explain;
pub mod hpo;
pub mod moga;
pub mod scenario;
pub mod surrogate;

pub(crate) mod rng;

pub use error::{Error, Result};
