//! Fractional-order P-I-Q (susceptible-infected-quarantined) epidemic model
//! under Atangana-Baleanu-Caputo (ABC) derivatives.
//!
//! The crate provides two independent solution routes for the same
//! initial-value problem plus the analysis tooling around it:
//!
//! - [`ladm`] — closed-form series solutions built by the Laplace-Adomian
//!   decomposition recurrence, with every iterate held exactly as a
//!   generalized polynomial in `t^(m+n*theta)` ([`theta_poly`]).
//! - [`ivp`] — a product-trapezoidal Volterra solver for the equivalent
//!   integral form, used both as a long-horizon simulator and as the
//!   cross-check oracle for the series route.
//! - [`model`] — the P-I-Q vector field, parameter set and basic
//!   reproduction number.
//! - [`analysis`] — normalized forward sensitivity indices of R0 and the
//!   computable contraction / Ulam-Hyers stability conditions.
//! - [`calibrate`] — derivative-free least-squares fitting of model
//!   parameters against observed infected-count time series.
//! - [`special`] — the Gamma and two-parameter Mittag-Leffler functions
//!   everything above relies on.
//!
//! The `piq` binary (see [`cli`]) exposes all of this behind subcommands
//! (`r0`, `sensitivity`, `series`, `simulate`, `check`, `fit`, `ml`)
//! driven by flat `key = value` scenario files ([`config`]).

pub mod analysis;
pub mod calibrate;
pub mod cli;
pub mod config;
mod fmt;
pub mod ivp;
pub mod ladm;
pub mod model;
pub mod special;
pub mod theta_poly;

pub use model::{FractionalOrder, ModelParams, State};
pub use theta_poly::ThetaPolynomial;
