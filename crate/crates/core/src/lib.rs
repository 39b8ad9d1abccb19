//! Construction and evaluation of one-dimensional sets (unions of segments,
//! circles and arcs) inside convex planar domains, so that every line
//! crosses them a number of times close to proportional to its chord length.
//!
//! The proportionality factor comes from the Cauchy-Crofton formula:
//! a set of length `L` in a domain of area `A` is compared against the
//! target `(2/pi) (L/A) H1(line ∩ domain)`, and the quality measure is the
//! essential supremum of the deviation over the kinematic measure on lines.
//!
//! Modules:
//! - [`geom`]: lines, primitives, convex domains, intersection counting.
//! - [`construct`]: concentric-circle sets in the disk and clipped
//!   Steinhaus line grids, with exact length accounting.
//! - [`discrepancy`]: per-line deviation, supremum evaluators (breakpoint
//!   scan and Monte Carlo), Crofton integral checks, scaling studies.
//! - [`harmonic`]: equally-spaced `|sin|` sums, their Fourier series and
//!   the classical longimeter relative-error extremes.
//! - [`search`]: heuristic local search for low-discrepancy segment sets.
//!
//! Everything is generic over the floating-point scalar through
//! [`scalar::Scalar`]; the aliases below fix `f64`, which is what the CLI
//! and the test suites use.

pub mod construct;
pub mod discrepancy;
pub mod error;
pub mod geom;
pub mod harmonic;
pub mod scalar;
pub mod search;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Crate version, echoed into reports and manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `f64` instantiations of the core types.
pub type Point = geom::Point<f64>;
pub type Line = geom::LineCoords<f64>;
pub type Primitive = geom::Primitive<f64>;
pub type ConvexDomain = geom::ConvexDomain<f64>;
pub type RectifiableSet = construct::RectifiableSet<f64>;
pub type SteinhausParams = construct::SteinhausParams<f64>;
pub type DeviationTarget = discrepancy::DeviationTarget<f64>;
pub type DiscrepancyReport = discrepancy::DiscrepancyReport<f64>;
