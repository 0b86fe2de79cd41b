//! Generalized Chebyshev functions on angularly trimmed windows.
//!
//! A pair of parameters `(β, γ)` with `0 ≤ β, γ < 2`, `β + γ < 2` trims the
//! angular range `[0, π]` of the classical Chebyshev construction to
//! `[γπ/2, (2-β)π/2]`. The crate provides:
//!
//! * exact rational parameter handling ([`params`]),
//! * evaluation of the resulting functions and their companions
//!   ([`functions`]),
//! * the attached node families — zeros, endpoint-including sets, extrema,
//!   and their equispaced pre-images under a sine map ([`points`]),
//! * exact detection of the parameter choices for which the functions
//!   collapse to classical polynomials ([`polycases`]),
//! * the weighted inner product under which the family is orthogonal
//!   ([`ortho`]),
//! * Lebesgue functions/constants of the node families, parameter sweeps,
//!   and empirical optimal-parameter searches ([`lebesgue`]),
//! * plot-ready data bundles for the standard curves, overlays, and
//!   sweep tables ([`figures`]).
//!
//! The `bgcheb` binary exposes all of it on the command line.

pub mod error;
pub mod figures;
pub mod functions;
pub mod io;
pub mod lebesgue;
pub mod ortho;
pub mod params;
pub mod points;
pub mod polycases;
pub mod tol;

pub use error::{Error, Result};
pub use functions::{lobatto_companion, symmetry_reflect, BgChebyshev};
pub use params::{Interval, ParamPair, ParamValue, Rational};
pub use points::{first_kind_as_lobatto, kte_map, PointKind, PointSet};
