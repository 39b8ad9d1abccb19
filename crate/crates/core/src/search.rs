//! Heuristic local search for low-discrepancy segment sets.
//!
//! Starts from random segments of prescribed total length inside a domain
//! and perturbs one segment at a time, keeping the length budget exact and
//! every segment inside the domain. The search objective defaults to a
//! fixed, seeded set of sampled lines (common random numbers, so proposals
//! are compared on identical lines); final certification always re-runs the
//! breakpoint scan.

use rand::distributions::uniform::SampleUniform;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::construct::RectifiableSet;
use crate::discrepancy::{sup_discrepancy_scan, DiscrepancyReport};
use crate::error::{Error, Result};
use crate::geom::{ConvexDomain, LineCoords, Point, Primitive};
use crate::scalar::{tau_deg, Scalar};

/// Objective evaluator used inside the proposal loop.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Evaluator {
    /// Fixed seeded line sample, shared by all proposals.
    Mc { samples: usize },
    /// Full breakpoint scan per proposal (slow; small runs only).
    Scan { theta_count: usize },
}

/// Acceptance schedule.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Schedule {
    Greedy,
    SimulatedAnnealing { t0: f64, cooling: f64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchConfig<S> {
    pub segment_count: usize,
    pub length_budget: S,
    pub iterations: usize,
    pub proposal_scale: S,
    pub seed: u64,
    pub evaluator: Evaluator,
    pub schedule: Schedule,
    /// Angle nodes for the final certification scan.
    pub certify_theta_count: usize,
}

impl<S: Scalar> Default for SearchConfig<S> {
    fn default() -> Self {
        SearchConfig {
            segment_count: 100,
            length_budget: S::of(50.0),
            iterations: 1000,
            proposal_scale: S::of(0.05),
            seed: 0,
            evaluator: Evaluator::Mc { samples: 4096 },
            schedule: Schedule::Greedy,
            certify_theta_count: 1024,
        }
    }
}

/// One line of the optimization trace.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct HistoryEntry<S> {
    pub iteration: usize,
    pub objective: S,
    pub accepted: bool,
}

/// Search result: best set seen, its certification, and the trace.
#[derive(Clone, Debug)]
pub struct SearchOutcome<S> {
    pub set: RectifiableSet<S>,
    pub report: DiscrepancyReport<S>,
    pub history: Vec<HistoryEntry<S>>,
    pub initial_objective: S,
    pub final_objective: S,
}

struct Segment<S> {
    a: Point<S>,
    b: Point<S>,
    length: S,
}

/// Local search over segment configurations.
pub fn optimize<S>(domain: &ConvexDomain<S>, config: &SearchConfig<S>) -> Result<SearchOutcome<S>>
where
    S: Scalar + SampleUniform,
    StandardNormal: Distribution<S>,
{
    if config.segment_count < 1 || config.length_budget <= S::zero() {
        return Err(Error::invalid(
            "search needs segment_count >= 1 and a positive length budget",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    // Per-segment lengths: random weights scaled to sum exactly to the
    // budget. They stay fixed for the whole run, which keeps the budget
    // conserved without global renormalization after each proposal.
    let weights: Vec<S> = (0..config.segment_count)
        .map(|_| rng.gen_range(S::half()..S::of(1.5)))
        .collect();
    let wsum = weights.iter().fold(S::zero(), |a, &b| a + b);
    let mut lengths: Vec<S> = weights
        .iter()
        .map(|&w| w / wsum * config.length_budget)
        .collect();
    // Absorb scaling rounding in the last entry.
    let lsum = lengths.iter().fold(S::zero(), |a, &b| a + b);
    if let Some(last) = lengths.last_mut() {
        *last = *last + (config.length_budget - lsum);
    }
    if lengths
        .iter()
        .any(|&l| l >= domain.diameter() || l <= S::zero())
    {
        return Err(Error::invalid(
            "length budget does not fit: a segment would exceed the domain diameter",
        ));
    }

    let mut segments: Vec<Segment<S>> = Vec::with_capacity(config.segment_count);
    for &len in &lengths {
        segments.push(place_random_segment(domain, len, &mut rng)?);
    }

    // Objective state.
    let mut lines: Vec<(LineCoords<S>, S)> = Vec::new();
    let mut counts: Vec<i64> = Vec::new();
    let factor = S::two() / S::PI() * config.length_budget / domain.area();
    if let Evaluator::Mc { samples } = config.evaluator {
        if samples < 1 {
            return Err(Error::invalid("mc evaluator needs samples >= 1"));
        }
        let radius = domain.circumradius();
        lines.reserve(samples);
        for _ in 0..samples {
            let theta = rng.gen_range(S::zero()..S::PI());
            let offset = rng.gen_range(-radius..radius);
            let line = LineCoords::new(theta, offset)?;
            let chord = domain.chord_length(&line);
            lines.push((line, chord));
        }
        counts = vec![0; samples];
        for seg in &segments {
            for (j, (line, _)) in lines.iter().enumerate() {
                counts[j] += crosses(line, seg) as i64;
            }
        }
    }

    let evaluate = |segments: &[Segment<S>], counts: &[i64], lines: &[(LineCoords<S>, S)]| -> Result<S> {
        match config.evaluator {
            Evaluator::Mc { .. } => Ok(lines
                .iter()
                .zip(counts)
                .map(|((_, chord), &c)| (S::of(c as f64) - factor * *chord).abs())
                .fold(S::zero(), |a, b| a.max(b))),
            Evaluator::Scan { theta_count } => {
                let set = to_set(segments, config.length_budget)?;
                Ok(sup_discrepancy_scan(&set, domain, theta_count)?.sup_value)
            }
        }
    };

    let mut objective = evaluate(&segments, &counts, &lines)?;
    let initial_objective = objective;
    let mut best_objective = objective;
    let mut best_segments: Vec<(Point<S>, Point<S>)> =
        segments.iter().map(|s| (s.a, s.b)).collect();
    let mut history = Vec::with_capacity(config.iterations);
    let mut deltas: Vec<i8> = vec![0; lines.len()];

    for iteration in 0..config.iterations {
        let idx = rng.gen_range(0..segments.len());
        let proposal = perturb(domain, &segments[idx], config.proposal_scale, &mut rng);
        let mut accepted = false;
        if let Some(candidate) = proposal {
            let new_objective = match config.evaluator {
                Evaluator::Mc { .. } => {
                    let mut worst = S::zero();
                    for (j, (line, chord)) in lines.iter().enumerate() {
                        let d = crosses(line, &candidate) as i8 - crosses(line, &segments[idx]) as i8;
                        deltas[j] = d;
                        let c = counts[j] + d as i64;
                        worst = worst.max((S::of(c as f64) - factor * *chord).abs());
                    }
                    worst
                }
                Evaluator::Scan { theta_count } => {
                    let mut trial: Vec<(Point<S>, Point<S>)> =
                        segments.iter().map(|s| (s.a, s.b)).collect();
                    trial[idx] = (candidate.a, candidate.b);
                    let set = to_set_pairs(&trial, &lengths, config.length_budget)?;
                    sup_discrepancy_scan(&set, domain, theta_count)?.sup_value
                }
            };
            accepted = match config.schedule {
                Schedule::Greedy => new_objective <= objective,
                Schedule::SimulatedAnnealing { t0, cooling } => {
                    let temp = S::of(t0) * S::of(cooling).powi(iteration as i32);
                    new_objective <= objective || {
                        let u: S = rng.gen_range(S::zero()..S::one());
                        temp > S::zero() && u < (-(new_objective - objective) / temp).exp()
                    }
                }
            };
            if accepted {
                if matches!(config.evaluator, Evaluator::Mc { .. }) {
                    for (c, &d) in counts.iter_mut().zip(&deltas) {
                        *c += d as i64;
                    }
                }
                segments[idx] = candidate;
                objective = new_objective;
                if new_objective < best_objective {
                    best_objective = new_objective;
                    best_segments = segments.iter().map(|s| (s.a, s.b)).collect();
                }
            }
        }
        history.push(HistoryEntry {
            iteration,
            objective,
            accepted,
        });
    }

    let set = to_set_pairs(&best_segments, &lengths, config.length_budget)?;
    let report = sup_discrepancy_scan(&set, domain, config.certify_theta_count)?;
    Ok(SearchOutcome {
        set,
        report,
        history,
        initial_objective,
        final_objective: best_objective,
    })
}

/// Strict transversal crossing test used by the sampled objective;
/// tolerance-degenerate contacts count as no crossing.
fn crosses<S: Scalar>(line: &LineCoords<S>, seg: &Segment<S>) -> bool {
    let tau = tau_deg::<S>();
    let s0 = line.signed_distance(seg.a);
    let s1 = line.signed_distance(seg.b);
    s0.abs() > tau && s1.abs() > tau && s0 * s1 < S::zero()
}

fn place_random_segment<S>(
    domain: &ConvexDomain<S>,
    length: S,
    rng: &mut ChaCha8Rng,
) -> Result<Segment<S>>
where
    S: Scalar + SampleUniform,
{
    let radius = domain.circumradius();
    for _ in 0..100_000 {
        let mid = Point::new(
            rng.gen_range(-radius..radius),
            rng.gen_range(-radius..radius),
        );
        if !domain.contains(mid, S::zero()) {
            continue;
        }
        let dir = Point::unit(rng.gen_range(S::zero()..S::PI()));
        let half = dir * (length * S::half());
        let (a, b) = (mid - half, mid + half);
        if domain.contains(a, S::zero()) && domain.contains(b, S::zero()) {
            return Ok(Segment { a, b, length });
        }
    }
    Err(Error::invalid(
        "could not place a segment of the requested length inside the domain",
    ))
}

/// Gaussian-perturb both endpoints, then restore the segment's exact length
/// about the perturbed midpoint; `None` when the result leaves the domain.
fn perturb<S>(
    domain: &ConvexDomain<S>,
    seg: &Segment<S>,
    scale: S,
    rng: &mut ChaCha8Rng,
) -> Option<Segment<S>>
where
    S: Scalar,
    StandardNormal: Distribution<S>,
{
    let mut jitter = || {
        let g: S = StandardNormal.sample(rng);
        g * scale
    };
    let a = seg.a + Point::new(jitter(), jitter());
    let b = seg.b + Point::new(jitter(), jitter());
    let diff = b - a;
    let norm = diff.norm();
    if norm <= tau_deg::<S>() {
        return None;
    }
    let dir = diff * (S::one() / norm);
    let mid = (a + b) * S::half();
    let half = dir * (seg.length * S::half());
    let (a, b) = (mid - half, mid + half);
    if domain.contains(a, S::zero()) && domain.contains(b, S::zero()) {
        Some(Segment {
            a,
            b,
            length: seg.length,
        })
    } else {
        None
    }
}

fn to_set<S: Scalar>(segments: &[Segment<S>], budget: S) -> Result<RectifiableSet<S>> {
    let pairs: Vec<(Point<S>, Point<S>)> = segments.iter().map(|s| (s.a, s.b)).collect();
    let lengths: Vec<S> = segments.iter().map(|s| s.length).collect();
    to_set_pairs(&pairs, &lengths, budget)
}

fn to_set_pairs<S: Scalar>(
    pairs: &[(Point<S>, Point<S>)],
    lengths: &[S],
    budget: S,
) -> Result<RectifiableSet<S>> {
    let prims = pairs
        .iter()
        .map(|&(a, b)| Primitive::segment(a, b))
        .collect::<Result<Vec<_>>>()?;
    let mut set = RectifiableSet::new(prims)?;
    // Endpoints are reconstructed as midpoint ± length/2, so the float sum
    // can sit a few ulps off the exact budget; pin the cached value.
    debug_assert!((set.total_length - budget).abs() <= S::of(1e-12) * budget.max(S::one()));
    debug_assert_eq!(lengths.len(), pairs.len());
    set.total_length = budget;
    Ok(set)
}
