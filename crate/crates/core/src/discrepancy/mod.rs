//! Deviation of a set's line-crossing counts from the Cauchy-Crofton
//! target, and supremum evaluators over line space.
//!
//! For a set of length `L` inside a domain of area `A`, the target crossing
//! count of a line is `(2/pi) (L/A) H1(line ∩ domain)`; the per-line
//! deviation is the absolute difference against the transversal crossing
//! count, and the quality of a set is the supremum of that deviation over
//! the kinematic measure (degenerate lines form a null set and are skipped).
//!
//! Two evaluators are provided. The breakpoint scan sweeps a uniform angle
//! grid and maximizes exactly in the offset (the count is piecewise constant
//! with computable breakpoints), reporting a finite certified gap from an
//! angle-Lipschitz estimate. Monte Carlo samples lines uniformly and yields
//! a lower bound with its witness.

mod integrals;
mod mc;
mod scan;

pub use integrals::{crofton_integrals, CroftonIntegrals};
pub use mc::sup_discrepancy_mc;
pub use scan::{sup_discrepancy_scan, sup_discrepancy_scan_with, ScanConfig};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::construct::{steinhaus_for_length, RectifiableSet};
use crate::error::{Error, Result};
use crate::geom::{count_intersections, ConvexDomain, LineCoords};
use crate::scalar::Scalar;

/// The Cauchy-Crofton-scaled target a set is measured against.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeviationTarget<S> {
    /// `(2/pi) * L_realized / area(domain)`, unless overridden.
    pub factor: S,
    pub domain: ConvexDomain<S>,
    pub l_realized: S,
}

impl<S: Scalar> DeviationTarget<S> {
    /// Target for a set, using its realized length.
    pub fn for_set(domain: &ConvexDomain<S>, set: &RectifiableSet<S>) -> Self {
        Self::with_length(domain, set.total_length)
    }

    /// Target for a prescribed length.
    pub fn with_length(domain: &ConvexDomain<S>, l_realized: S) -> Self {
        DeviationTarget {
            factor: S::two() / S::PI() * l_realized / domain.area(),
            domain: domain.clone(),
            l_realized,
        }
    }

    /// Target with an explicit proportionality factor `c`.
    pub fn with_factor(domain: &ConvexDomain<S>, factor: S, l_realized: S) -> Self {
        DeviationTarget {
            factor,
            domain: domain.clone(),
            l_realized,
        }
    }
}

/// How a supremum was evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupMethod {
    BreakpointScan,
    MonteCarlo,
}

/// Result of a supremum evaluation.
///
/// `sup_value` is always a certified lower bound on the true supremum,
/// witnessed by the non-degenerate line `witness` (re-checkable through
/// [`deviation`]). For the breakpoint scan, the true supremum additionally
/// cannot exceed `sup_value + certified_gap`; Monte Carlo reports no upper
/// bound (`certified_gap` is `None`).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiscrepancyReport<S> {
    pub sup_value: S,
    pub witness: LineCoords<S>,
    pub method: SupMethod,
    pub theta_samples: usize,
    pub mc_samples: usize,
    pub certified_gap: Option<S>,
    pub degenerate_lines_skipped: usize,
    pub factor: S,
    pub realized_length: S,
    pub version: String,
    pub config: Value,
}

impl<S: Scalar> DiscrepancyReport<S> {
    pub fn to_json(&self) -> Result<String>
    where
        S: Serialize,
    {
        serde_json::to_string_pretty(self).map_err(|e| Error::Serialization(e.to_string()))
    }
}

/// Absolute deviation of one line: `|#(line ∩ set) - factor * chord|`.
///
/// Degenerate lines (tangencies, collinearities, endpoint hits) are a
/// kinematic null set; evaluating one is an error so the caller explicitly
/// perturbs or skips.
pub fn deviation<S: Scalar>(
    line: &LineCoords<S>,
    set: &RectifiableSet<S>,
    target: &DeviationTarget<S>,
) -> Result<S> {
    let r = count_intersections(line, &set.primitives);
    if r.degenerate {
        return Err(Error::DegenerateLine {
            theta: line.theta().as_f64(),
            offset: line.offset().as_f64(),
        });
    }
    let chord = target.domain.chord_length(line);
    Ok((S::of(r.count as f64) - target.factor * chord).abs())
}

/// Outcome of the Cauchy-Crofton scaling check: whether
/// `|c - (2/pi) L / area| <= (2 diam / area) X` holds, and by how much.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct PropositionCheck<S> {
    pub holds: bool,
    pub lhs: S,
    pub rhs: S,
    /// `rhs - lhs`; nonnegative when the inequality holds.
    pub margin: S,
}

/// Check the scaling inequality for a measured deviation bound `x`
/// (a verified supremum of `|count - c * chord|` over lines).
pub fn proposition_bound_check<S: Scalar>(
    set: &RectifiableSet<S>,
    domain: &ConvexDomain<S>,
    c: S,
    x: S,
) -> Result<PropositionCheck<S>> {
    if !x.is_finite() || x < S::zero() {
        return Err(Error::invalid(
            "deviation bound X must be a finite nonnegative certificate",
        ));
    }
    if !c.is_finite() {
        return Err(Error::invalid("factor c must be finite"));
    }
    let lhs = (c - S::two() / S::PI() * set.total_length / domain.area()).abs();
    let rhs = S::two() * domain.diameter() / domain.area() * x;
    Ok(PropositionCheck {
        holds: lhs <= rhs,
        lhs,
        rhs,
        margin: rhs - lhs,
    })
}

/// Evaluator selection for parameter sweeps.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "evaluator")]
pub enum EvaluatorConfig {
    Scan { theta_count: usize },
    Mc { samples: usize, seed: u64 },
}

/// One row of a length sweep.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ScalingRow<S> {
    pub l_target: S,
    pub n: u32,
    pub epsilon: S,
    pub realized_length: S,
    pub sup_value: S,
}

/// A length sweep with its log-log fit.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScalingStudy<S> {
    pub rows: Vec<ScalingRow<S>>,
    /// Least-squares slope of `log sup` against `log L`; `None` for fewer
    /// than two rows (a degenerate fit is refused, the rows still come back).
    pub slope: Option<S>,
    pub intercept: Option<S>,
    pub residuals: Vec<S>,
    /// `sup / L^(1/3)` per row; bounded when the cube-root envelope holds.
    pub sup_over_cbrt: Vec<S>,
}

/// Build the length-parameterized Steinhaus set for every `L`, measure its
/// supremum deviation, and fit the growth exponent.
pub fn scaling_study<S: Scalar + rand::distributions::uniform::SampleUniform>(
    domain: &ConvexDomain<S>,
    l_list: &[S],
    evaluator: EvaluatorConfig,
) -> Result<ScalingStudy<S>> {
    if l_list.is_empty() {
        return Err(Error::invalid("scaling study needs at least one length"));
    }
    let mut rows = Vec::with_capacity(l_list.len());
    for &l in l_list {
        let (params, set) = steinhaus_for_length(l, domain)?;
        let report = match evaluator {
            EvaluatorConfig::Scan { theta_count } => {
                sup_discrepancy_scan(&set, domain, theta_count)?
            }
            EvaluatorConfig::Mc { samples, seed } => {
                sup_discrepancy_mc(&set, domain, samples, seed)?
            }
        };
        rows.push(ScalingRow {
            l_target: l,
            n: params.n,
            epsilon: params.epsilon,
            realized_length: set.total_length,
            sup_value: report.sup_value,
        });
    }

    let sup_over_cbrt = rows
        .iter()
        .map(|r| r.sup_value / r.l_target.powf(S::one() / S::of(3.0)))
        .collect();

    if rows.len() < 2 {
        return Ok(ScalingStudy {
            rows,
            slope: None,
            intercept: None,
            residuals: Vec::new(),
            sup_over_cbrt,
        });
    }

    let xs: Vec<S> = rows.iter().map(|r| r.l_target.ln()).collect();
    let ys: Vec<S> = rows.iter().map(|r| r.sup_value.ln()).collect();
    let m = S::of(rows.len() as f64);
    let mean_x = xs.iter().fold(S::zero(), |a, &b| a + b) / m;
    let mean_y = ys.iter().fold(S::zero(), |a, &b| a + b) / m;
    let mut sxx = S::zero();
    let mut sxy = S::zero();
    for (&x, &y) in xs.iter().zip(&ys) {
        sxx = sxx + (x - mean_x) * (x - mean_x);
        sxy = sxy + (x - mean_x) * (y - mean_y);
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residuals = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| y - (slope * x + intercept))
        .collect();
    Ok(ScalingStudy {
        rows,
        slope: Some(slope),
        intercept: Some(intercept),
        residuals,
        sup_over_cbrt,
    })
}
