//! Trigonometric machinery behind the Steinhaus crossing-count estimates:
//! the equally-spaced `|sin|` sum, its Fourier series with a rigorous tail
//! bound, the classical longimeter relative-error extremes, and the
//! leading-order crossing count of a segment against one translate family.

use serde::{Deserialize, Serialize};

use crate::geom::Point;
use crate::scalar::Scalar;

/// Direct and series evaluations of `sum_{k<n} |sin(pi k/n + theta)|`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SinSumResult<S> {
    pub n: u32,
    pub theta: S,
    pub direct_value: S,
    pub fourier_value: S,
    pub tail_bound: S,
}

/// The literal sum `sum_{k=0}^{n-1} |sin(pi k/n + theta)|`.
pub fn abs_sin_sum_direct<S: Scalar>(n: u32, theta: S) -> S {
    let step = S::PI() / S::of(n as f64);
    let mut acc = S::zero();
    for k in 0..n {
        acc = acc + (S::of(k as f64) * step + theta).sin().abs();
    }
    acc
}

/// Truncated Fourier evaluation
/// `2n/pi - (4/pi) sum_{l=1}^{terms} n cos(2 l n theta) / (4 l^2 n^2 - 1)`
/// together with a rigorous bound on the dropped tail.
pub fn abs_sin_sum_fourier<S: Scalar>(n: u32, theta: S, terms: u32) -> (S, S) {
    let nf = S::of(n as f64);
    let pi = S::PI();
    let mut value = S::two() * nf / pi;
    let scale = S::of(4.0) / pi;
    for l in 1..=terms {
        let lf = S::of(l as f64);
        let denom = S::of(4.0) * lf * lf * nf * nf - S::one();
        value = value - scale * nf * (S::two() * lf * nf * theta).cos() / denom;
    }
    // 4 l^2 n^2 - 1 >= 3 l^2 n^2 for l, n >= 1, and sum_{l>T} 1/l^2 <= 1/T.
    let tail = scale * nf / (S::of(3.0) * nf * nf * S::of(terms as f64));
    (value, tail)
}

/// The coarse closed-form bound on the whole oscillating part:
/// `sum_l n/(4 l^2 n^2 - 1) <= 1/n`, so the sum never strays from its mean
/// `2n/pi` by more than `4/(pi n)`.
pub fn global_deviation_bound<S: Scalar>(n: u32) -> S {
    S::of(4.0) / (S::PI() * S::of(n as f64))
}

/// Both evaluations side by side.
pub fn sin_sum<S: Scalar>(n: u32, theta: S, terms: u32) -> SinSumResult<S> {
    let direct_value = abs_sin_sum_direct(n, theta);
    let (fourier_value, tail_bound) = abs_sin_sum_fourier(n, theta, terms);
    SinSumResult {
        n,
        theta,
        direct_value,
        fourier_value,
        tail_bound,
    }
}

/// Relative-error extremes of the n-direction longimeter count over one
/// period of the orientation angle.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct LongimeterExtremes<S> {
    pub n: u32,
    pub min_rel_error: S,
    pub max_rel_error: S,
    pub argmin_theta: S,
    pub argmax_theta: S,
}

/// Extremize `(pi/(2n)) sum_{k<n} |sin(pi k/n + theta)| - 1` over
/// `theta in [0, pi/n]` by dense grid plus golden-section refinement.
///
/// The series predicts the minimum at `theta = 0` and the maximum at
/// `theta = pi/(2n)`; this is verified numerically rather than assumed.
pub fn longimeter_error_extremes<S: Scalar>(n: u32) -> LongimeterExtremes<S> {
    let period = S::PI() / S::of(n as f64);
    let rel = |theta: S| {
        abs_sin_sum_direct(n, theta) * S::PI() / (S::two() * S::of(n as f64)) - S::one()
    };
    let grid: u32 = 10_000;
    let mut best_min = (S::zero(), rel(S::zero()));
    let mut best_max = best_min;
    for j in 0..=grid {
        let theta = period * S::of(j as f64) / S::of(grid as f64);
        let v = rel(theta);
        if v < best_min.1 {
            best_min = (theta, v);
        }
        if v > best_max.1 {
            best_max = (theta, v);
        }
    }
    let cell = period / S::of(grid as f64);
    let refine = |center: S, maximize: bool| -> (S, S) {
        let mut a = (center - cell).max(S::zero());
        let mut b = (center + cell).min(period);
        let phi = (S::of(5.0).sqrt() - S::one()) * S::half();
        let score = |t: S| if maximize { rel(t) } else { -rel(t) };
        let mut c = b - phi * (b - a);
        let mut d = a + phi * (b - a);
        let mut fc = score(c);
        let mut fd = score(d);
        for _ in 0..120 {
            if b - a < S::of(1e-14) {
                break;
            }
            if fc >= fd {
                b = d;
                d = c;
                fd = fc;
                c = b - phi * (b - a);
                fc = score(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + phi * (b - a);
                fd = score(d);
            }
        }
        let t = (a + b) * S::half();
        (t, rel(t))
    };
    let (argmin_theta, min_rel_error) = refine(best_min.0, false);
    let (argmax_theta, max_rel_error) = refine(best_max.0, true);
    LongimeterExtremes {
        n,
        min_rel_error,
        max_rel_error,
        argmin_theta,
        argmax_theta,
    }
}

/// Worst slack of the Fourier identity over random angles:
/// `max(|direct - fourier| - tail_bound)` across `n in 1..=n_max` with
/// `samples` random angles each. Nonpositive (up to float noise) when the
/// series and its tail bookkeeping are right.
pub fn fourier_identity_worst_slack(
    n_max: u32,
    samples: u32,
    terms: u32,
    seed: u64,
) -> (f64, u32, f64) {
    use rand::{Rng, SeedableRng};
    use rayon::prelude::*;
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ u64::from(n));
            let mut worst = (f64::NEG_INFINITY, n, 0.0);
            for _ in 0..samples {
                let theta: f64 = rng.gen_range(-10.0..10.0);
                let r = sin_sum(n, theta, terms);
                let slack = (r.direct_value - r.fourier_value).abs() - r.tail_bound;
                if slack > worst.0 {
                    worst = (slack, n, theta);
                }
            }
            worst
        })
        .reduce(
            || (f64::NEG_INFINITY, 0, 0.0),
            |a, b| if b.0 > a.0 { b } else { a },
        )
}

/// Worst deviation of the direct sum from its mean `2n/pi` on a dense grid
/// over one period, for comparison against [`global_deviation_bound`].
pub fn global_deviation_worst(n: u32, grid: u32) -> f64 {
    let mean = 2.0 * n as f64 / std::f64::consts::PI;
    let period = std::f64::consts::PI / n as f64;
    (0..=grid)
        .map(|j| {
            let theta = period * j as f64 / grid as f64;
            (abs_sin_sum_direct(n, theta) - mean).abs()
        })
        .fold(0.0, f64::max)
}

/// Leading term of the number of crossings between a segment and the
/// translate family of direction index `k`: the projection of the segment
/// onto the family's unit normal, divided by the spacing. The true count
/// differs by at most O(1) from this (the two endpoints).
pub fn projection_count<S: Scalar>(
    segment: (Point<S>, Point<S>),
    direction_index: u32,
    n: u32,
    epsilon: S,
) -> S {
    let angle = S::PI() * S::of(direction_index as f64) / S::of(n as f64);
    let normal = Point::unit(angle).perp();
    normal.dot(segment.1 - segment.0).abs() / epsilon
}
