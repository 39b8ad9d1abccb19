//! Crofton integral checks over the double cover of line space.
//!
//! Over `theta in [0, 2 pi)` and `offset in [-R, R]` the crossing count
//! integrates to `4 L` and the chord length to `2 pi area(domain)`; both are
//! verified here by quadrature that is exact in the offset (the count is
//! piecewise constant between breakpoints, the chord piecewise analytic)
//! and composite midpoint in the angle, with cells split at the integrand's
//! known kink angles.

use serde::{Deserialize, Serialize};

use crate::construct::RectifiableSet;
use crate::error::{Error, Result};
use crate::geom::{
    intersect_line_primitive, ConvexDomain, DomainShape, LineCoords, Point, Primitive,
};
use crate::scalar::{tau_deg, Scalar};

/// The two Crofton integrals over the double cover.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CroftonIntegrals<S> {
    /// Integral of the crossing count; equals `4 * total_length`.
    pub count_integral: S,
    /// Integral of the chord length; equals `2 pi * area`.
    pub chord_integral: S,
}

/// Numerically integrate crossing count and chord length over the double
/// cover of lines meeting `B(0, R)`. Both the set and the domain must fit
/// inside that ball.
pub fn crofton_integrals<S: Scalar>(
    set: &RectifiableSet<S>,
    domain: &ConvexDomain<S>,
    radius: S,
    theta_resolution: usize,
) -> Result<CroftonIntegrals<S>> {
    if theta_resolution < 4 {
        return Err(Error::invalid("crofton quadrature needs >= 4 angle nodes"));
    }
    let tol = tau_deg::<S>();
    if set.circumradius() > radius + tol || domain.circumradius() > radius + tol {
        return Err(Error::invalid(format!(
            "set and domain must lie in B(0, {radius}): set R={}, domain R={}",
            set.circumradius().as_f64(),
            domain.circumradius().as_f64()
        )));
    }

    // Angles where the per-angle count integral has kinks: a segment's
    // projection measure is |cos(theta - alpha)|-shaped, an arc's measure
    // kinks when an endpoint tangent aligns with the line direction.
    let two_pi = S::two() * S::PI();
    let wrap = |x: S| {
        let r = x % two_pi;
        if r < S::zero() {
            r + two_pi
        } else {
            r
        }
    };
    let mut kinks: Vec<S> = Vec::new();
    for prim in &set.primitives {
        match *prim {
            Primitive::Segment { p0, p1 } => {
                let alpha = (p1 - p0).angle();
                kinks.push(wrap(alpha + S::FRAC_PI_2()));
                kinks.push(wrap(alpha - S::FRAC_PI_2()));
            }
            Primitive::Circle { .. } => {}
            Primitive::Arc {
                angle_start,
                angle_span,
                ..
            } => {
                for a in [angle_start, angle_start + angle_span] {
                    kinks.push(wrap(a));
                    kinks.push(wrap(a + S::PI()));
                }
            }
        }
    }
    kinks.sort_by(|a, b| a.partial_cmp(b).expect("finite angles"));

    let cell = two_pi / S::of(theta_resolution as f64);
    let mut count_integral = S::zero();
    let mut chord_integral = S::zero();
    let mut splits: Vec<S> = Vec::new();
    for j in 0..theta_resolution {
        let a = cell * S::of(j as f64);
        let b = a + cell;
        splits.clear();
        splits.push(a);
        for &k in &kinks {
            if k > a && k < b {
                splits.push(k);
            }
        }
        splits.push(b);
        for w in 0..splits.len() - 1 {
            let (lo, hi) = (splits[w], splits[w + 1]);
            let width = hi - lo;
            if width <= S::zero() {
                continue;
            }
            let mid = (lo + hi) * S::half();
            count_integral = count_integral + width * count_offset_integral(set, mid, radius);
            chord_integral = chord_integral + width * chord_offset_integral(domain, mid);
        }
    }
    Ok(CroftonIntegrals {
        count_integral,
        chord_integral,
    })
}

/// Exact integral over the offset of the crossing count at one angle:
/// sweep the piecewise-constant count between breakpoints.
fn count_offset_integral<S: Scalar>(set: &RectifiableSet<S>, theta: S, radius: S) -> S {
    let normal = Point::unit(theta);
    let mut events: Vec<(S, i32)> = Vec::with_capacity(2 * set.primitives.len());
    let mut arcs: Vec<&Primitive<S>> = Vec::new();
    for prim in &set.primitives {
        match *prim {
            Primitive::Segment { p0, p1 } => {
                let a = normal.dot(p0);
                let b = normal.dot(p1);
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                if hi > lo {
                    events.push((lo, 1));
                    events.push((hi, -1));
                }
            }
            Primitive::Circle { center, radius: r } => {
                let m = normal.dot(center);
                events.push((m - r, 2));
                events.push((m + r, -2));
            }
            Primitive::Arc {
                center,
                radius: r,
                angle_start,
                angle_span,
            } => {
                let m = normal.dot(center);
                events.push((m - r, 0));
                events.push((m + r, 0));
                for a in [angle_start, angle_start + angle_span] {
                    events.push((normal.dot(center + Point::unit(a) * r), 0));
                }
                arcs.push(prim);
            }
        }
    }
    if events.is_empty() {
        return S::zero();
    }
    events.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite breakpoints"));
    let mut acc = S::zero();
    let mut count: i64 = 0;
    for i in 0..events.len() - 1 {
        count += events[i].1 as i64;
        let lo = events[i].0.max(-radius);
        let hi = events[i + 1].0.min(radius);
        if hi <= lo {
            continue;
        }
        let mut interval_count = count;
        if !arcs.is_empty() {
            let line = LineCoords::new(theta, (lo + hi) * S::half()).expect("finite line");
            interval_count += arcs
                .iter()
                .map(|arc| intersect_line_primitive(&line, arc).count as i64)
                .sum::<i64>();
        }
        acc = acc + S::of(interval_count as f64) * (hi - lo);
    }
    acc
}

/// Integral over the offset of the chord length at one angle: analytic for
/// the disk, exact trapezoids on the piecewise-linear polygon profile,
/// adaptive Simpson between corner projections for the Reuleaux triangle.
fn chord_offset_integral<S: Scalar>(domain: &ConvexDomain<S>, theta: S) -> S {
    match domain.shape() {
        DomainShape::Disk { radius, .. } => S::PI() * *radius * *radius,
        DomainShape::ConvexPolygon { vertices } => {
            let normal = Point::unit(theta);
            let mut cuts: Vec<S> = vertices.iter().map(|&v| normal.dot(v)).collect();
            cuts.sort_by(|a, b| a.partial_cmp(b).expect("finite cuts"));
            let chord =
                |p: S| domain.chord_length(&LineCoords::new(theta, p).expect("finite line"));
            let mut acc = S::zero();
            for w in cuts.windows(2) {
                // Linear between consecutive vertex projections; evaluate
                // just inside to dodge the kink itself.
                let (lo, hi) = (w[0], w[1]);
                if hi <= lo {
                    continue;
                }
                let eps = (hi - lo) * S::of(1e-12);
                acc = acc + (chord(lo + eps) + chord(hi - eps)) * S::half() * (hi - lo);
            }
            acc
        }
        DomainShape::Reuleaux { corners } => {
            let normal = Point::unit(theta);
            let (lo, hi) = domain.support_interval(theta);
            let mut cuts: Vec<S> = corners.iter().map(|&c| normal.dot(c)).collect();
            cuts.push(lo);
            cuts.push(hi);
            cuts.sort_by(|a, b| a.partial_cmp(b).expect("finite cuts"));
            let chord =
                |p: S| domain.chord_length(&LineCoords::new(theta, p).expect("finite line"));
            let mut acc = S::zero();
            for w in cuts.windows(2) {
                if w[1] <= w[0].max(lo) || w[0] >= hi {
                    continue;
                }
                let (a, b) = (w[0].max(lo), w[1].min(hi));
                acc = acc + adaptive_simpson(&chord, a, b, S::of(1e-11));
            }
            acc
        }
    }
}

fn adaptive_simpson<S: Scalar>(f: &impl Fn(S) -> S, a: S, b: S, eps: S) -> S {
    fn simpson<S: Scalar>(f: &impl Fn(S) -> S, a: S, b: S) -> S {
        let c = (a + b) * S::half();
        (b - a) / S::of(6.0) * (f(a) + S::of(4.0) * f(c) + f(b))
    }
    fn recurse<S: Scalar>(
        f: &impl Fn(S) -> S,
        a: S,
        b: S,
        eps: S,
        whole: S,
        depth: u32,
    ) -> S {
        let c = (a + b) * S::half();
        let left = simpson(f, a, c);
        let right = simpson(f, c, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= S::of(15.0) * eps {
            left + right + delta / S::of(15.0)
        } else {
            recurse(f, a, c, eps * S::half(), left, depth - 1)
                + recurse(f, c, b, eps * S::half(), right, depth - 1)
        }
    }
    recurse(f, a, b, eps, simpson(f, a, b), 28)
}
