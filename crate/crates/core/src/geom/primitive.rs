//! Building blocks of one-dimensional sets: segments, circles and arcs,
//! plus transversal intersection counting against lines.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{LineCoords, Point};
use crate::scalar::{tau_deg, Scalar};

/// A one-dimensional primitive.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Primitive<S> {
    Segment {
        p0: Point<S>,
        p1: Point<S>,
    },
    Circle {
        center: Point<S>,
        radius: S,
    },
    Arc {
        center: Point<S>,
        radius: S,
        angle_start: S,
        angle_span: S,
    },
}

/// Transversal intersection count of a line against a primitive or set.
///
/// `degenerate` is set when the line is tangent to a circle or arc,
/// collinear with a segment, or passes through a segment or arc endpoint
/// within the degeneracy tolerance; `count` then reports the
/// transversal-only count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionResult {
    pub count: usize,
    pub degenerate: bool,
}

impl<S: Scalar> Primitive<S> {
    pub fn segment(p0: Point<S>, p1: Point<S>) -> Result<Self> {
        if !p0.is_finite() || !p1.is_finite() {
            return Err(Error::invalid("segment endpoints must be finite"));
        }
        if p0 == p1 {
            return Err(Error::invalid("segment endpoints must be distinct"));
        }
        Ok(Primitive::Segment { p0, p1 })
    }

    pub fn circle(center: Point<S>, radius: S) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() || radius <= S::zero() {
            return Err(Error::invalid("circle needs a finite positive radius"));
        }
        Ok(Primitive::Circle { center, radius })
    }

    /// An arc of `angle_span` radians starting at `angle_start`; a full
    /// span of `2 pi` normalizes to a circle.
    pub fn arc(center: Point<S>, radius: S, angle_start: S, angle_span: S) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() || radius <= S::zero() {
            return Err(Error::invalid("arc needs a finite positive radius"));
        }
        if !angle_start.is_finite() || !angle_span.is_finite() {
            return Err(Error::invalid("arc angles must be finite"));
        }
        let two_pi = S::two() * S::PI();
        if angle_span <= S::zero() || angle_span > two_pi {
            return Err(Error::invalid("arc span must lie in (0, 2 pi]"));
        }
        if angle_span == two_pi {
            return Ok(Primitive::Circle { center, radius });
        }
        Ok(Primitive::Arc {
            center,
            radius,
            angle_start,
            angle_span,
        })
    }

    /// Check this primitive's invariants (used when deserializing untrusted data).
    pub fn validate(&self) -> Result<()> {
        match *self {
            Primitive::Segment { p0, p1 } => {
                Self::segment(p0, p1).map(|_| ())
            }
            Primitive::Circle { center, radius } => Self::circle(center, radius).map(|_| ()),
            Primitive::Arc {
                center,
                radius,
                angle_start,
                angle_span,
            } => Self::arc(center, radius, angle_start, angle_span).map(|_| ()),
        }
    }

    /// One-dimensional Hausdorff length.
    pub fn length(&self) -> S {
        match *self {
            Primitive::Segment { p0, p1 } => p0.distance(p1),
            Primitive::Circle { radius, .. } => S::two() * S::PI() * radius,
            Primitive::Arc {
                radius, angle_span, ..
            } => radius * angle_span,
        }
    }

    /// Largest distance of a point of the primitive from the origin.
    pub fn circumradius(&self) -> S {
        match *self {
            Primitive::Segment { p0, p1 } => p0.norm().max(p1.norm()),
            Primitive::Circle { center, radius } => center.norm() + radius,
            Primitive::Arc {
                center,
                radius,
                angle_start,
                angle_span,
            } => {
                let mut best = arc_point(center, radius, angle_start)
                    .norm()
                    .max(arc_point(center, radius, angle_start + angle_span).norm());
                // Interior extremum: the point on the ray from the origin
                // through the center, if that angle falls inside the span.
                if center.norm() > S::zero() {
                    if angle_in_span(center.angle(), angle_start, angle_span, S::zero()) {
                        best = best.max(center.norm() + radius);
                    }
                } else {
                    best = radius;
                }
                best
            }
        }
    }

    pub fn apply_motion(&self, rotation: S, translation: Point<S>) -> Self {
        let mv = |p: Point<S>| p.rotated(rotation) + translation;
        match *self {
            Primitive::Segment { p0, p1 } => Primitive::Segment {
                p0: mv(p0),
                p1: mv(p1),
            },
            Primitive::Circle { center, radius } => Primitive::Circle {
                center: mv(center),
                radius,
            },
            Primitive::Arc {
                center,
                radius,
                angle_start,
                angle_span,
            } => Primitive::Arc {
                center: mv(center),
                radius,
                angle_start: angle_start + rotation,
                angle_span,
            },
        }
    }
}

fn arc_point<S: Scalar>(center: Point<S>, radius: S, angle: S) -> Point<S> {
    center + Point::unit(angle) * radius
}

/// Whether `angle` lies in the closed span `[start, start + span]`, widened
/// by `margin` on both sides (negative margin shrinks the span).
fn angle_in_span<S: Scalar>(angle: S, start: S, span: S, margin: S) -> bool {
    let two_pi = S::two() * S::PI();
    let mut rel = (angle - start) % two_pi;
    if rel < S::zero() {
        rel = rel + two_pi;
    }
    if rel >= -margin && rel <= span + margin {
        return true;
    }
    // The wrap-around copy of the lower edge.
    rel - two_pi >= -margin
}

/// Count transversal intersections of a line with a primitive.
pub fn intersect_line_primitive<S: Scalar>(
    line: &LineCoords<S>,
    prim: &Primitive<S>,
) -> IntersectionResult {
    let tau = tau_deg::<S>();
    match *prim {
        Primitive::Segment { p0, p1 } => {
            let s0 = line.signed_distance(p0);
            let s1 = line.signed_distance(p1);
            if s0.abs() <= tau || s1.abs() <= tau {
                // Endpoint on the line, or fully collinear.
                IntersectionResult {
                    count: 0,
                    degenerate: true,
                }
            } else if s0 * s1 < S::zero() {
                IntersectionResult {
                    count: 1,
                    degenerate: false,
                }
            } else {
                IntersectionResult {
                    count: 0,
                    degenerate: false,
                }
            }
        }
        Primitive::Circle { center, radius } => {
            let d = line.signed_distance(center).abs();
            if (d - radius).abs() <= tau {
                IntersectionResult {
                    count: 0,
                    degenerate: true,
                }
            } else if d < radius {
                IntersectionResult {
                    count: 2,
                    degenerate: false,
                }
            } else {
                IntersectionResult {
                    count: 0,
                    degenerate: false,
                }
            }
        }
        Primitive::Arc {
            center,
            radius,
            angle_start,
            angle_span,
        } => intersect_line_arc(line, center, radius, angle_start, angle_span, tau),
    }
}

fn intersect_line_arc<S: Scalar>(
    line: &LineCoords<S>,
    center: Point<S>,
    radius: S,
    angle_start: S,
    angle_span: S,
    tau: S,
) -> IntersectionResult {
    let delta = line.signed_distance(center);
    let d = delta.abs();
    // Angular tolerance equivalent to the arclength tolerance tau.
    let tau_ang = tau / radius;
    if (d - radius).abs() <= tau {
        // Tangent to the supporting circle; degenerate only if the tangency
        // point lies on (or next to) the arc.
        let tangency = center - line.normal() * delta;
        let deg = angle_in_span((tangency - center).angle(), angle_start, angle_span, tau_ang);
        return IntersectionResult {
            count: 0,
            degenerate: deg,
        };
    }
    if d > radius {
        return IntersectionResult {
            count: 0,
            degenerate: false,
        };
    }
    let half = (radius * radius - delta * delta).sqrt();
    let t_center = line.direction().dot(center - line.foot());
    let mut out = IntersectionResult::default();
    for t in [t_center - half, t_center + half] {
        let hit = line.point_at(t);
        let ang = (hit - center).angle();
        let strictly_inside = angle_in_span(ang, angle_start, angle_span, -tau_ang);
        let loosely_inside = angle_in_span(ang, angle_start, angle_span, tau_ang);
        if strictly_inside {
            out.count += 1;
        } else if loosely_inside {
            // Within tolerance of an arc endpoint.
            out.degenerate = true;
        }
    }
    out
}
