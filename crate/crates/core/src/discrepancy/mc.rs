//! Monte Carlo supremum estimation: uniform line sampling under the
//! kinematic measure restricted to lines meeting a bounding ball.

use rand::distributions::uniform::SampleUniform;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::construct::RectifiableSet;
use crate::error::{Error, Result};
use crate::geom::{count_intersections, ConvexDomain, LineCoords};
use crate::scalar::Scalar;

use super::{DeviationTarget, DiscrepancyReport, SupMethod};

/// Draw `samples` lines uniformly from `[0, pi) x [-R, R]` (with `R` the
/// circumradius of domain and set about the origin), skip degenerate ones,
/// and report the largest deviation seen with its witness.
///
/// Deterministic for a fixed `(seed, samples)` pair; the result is a lower
/// bound on the supremum, so `certified_gap` is unbounded (`None`).
pub fn sup_discrepancy_mc<S: Scalar + SampleUniform>(
    set: &RectifiableSet<S>,
    domain: &ConvexDomain<S>,
    samples: usize,
    seed: u64,
) -> Result<DiscrepancyReport<S>> {
    if samples < 1 {
        return Err(Error::invalid("monte carlo needs at least one sample"));
    }
    let target = DeviationTarget::for_set(domain, set);
    let radius = domain.circumradius().max(set.circumradius());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut skipped = 0usize;
    let mut best: Option<(S, LineCoords<S>)> = None;
    for _ in 0..samples {
        let theta = rng.gen_range(S::zero()..S::PI());
        let offset = rng.gen_range(-radius..radius);
        let line = LineCoords::new(theta, offset)?;
        let r = count_intersections(&line, &set.primitives);
        if r.degenerate {
            skipped += 1;
            continue;
        }
        let chord = target.domain.chord_length(&line);
        let value = (S::of(r.count as f64) - target.factor * chord).abs();
        if best.as_ref().is_none_or(|(v, _)| value > *v) {
            best = Some((value, line));
        }
    }
    let (sup_value, witness) = best.ok_or_else(|| {
        Error::invalid("all sampled lines were degenerate; nothing to evaluate")
    })?;
    Ok(DiscrepancyReport {
        sup_value,
        witness,
        method: SupMethod::MonteCarlo,
        theta_samples: 0,
        mc_samples: samples,
        certified_gap: None,
        degenerate_lines_skipped: skipped,
        factor: target.factor,
        realized_length: set.total_length,
        version: crate::VERSION.to_string(),
        config: json!({
            "samples": samples,
            "seed": seed,
            "offset_radius": radius.as_f64(),
        }),
    })
}
