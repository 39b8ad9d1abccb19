//! Convex domains: disks, convex polygons and Reuleaux triangles, with
//! cached metrics and chord computations.
//!
//! A Reuleaux triangle is represented by the three corners of an equilateral
//! triangle; the body is the intersection of the three disks of radius equal
//! to the side length centered at the corners.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{LineCoords, Point};
use crate::scalar::{tau_deg, Scalar};

/// Shape variants of a convex domain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum DomainShape<S> {
    Disk { center: Point<S>, radius: S },
    ConvexPolygon { vertices: Vec<Point<S>> },
    Reuleaux { corners: [Point<S>; 3] },
}

/// A bounded convex domain with cached area, diameter and circumradius
/// about the origin.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexDomain<S> {
    shape: DomainShape<S>,
    area: S,
    diameter: S,
    circumradius: S,
}

impl<S: Scalar> ConvexDomain<S> {
    pub fn disk(center: Point<S>, radius: S) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() || radius <= S::zero() {
            return Err(Error::invalid("disk needs a finite positive radius"));
        }
        Ok(ConvexDomain {
            area: S::PI() * radius * radius,
            diameter: S::two() * radius,
            circumradius: center.norm() + radius,
            shape: DomainShape::Disk { center, radius },
        })
    }

    pub fn unit_disk() -> Self {
        Self::disk(Point::origin(), S::one()).expect("unit disk is valid")
    }

    /// Strictly convex polygon from counterclockwise vertices.
    pub fn polygon(vertices: Vec<Point<S>>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::invalid("polygon needs at least 3 vertices"));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("polygon vertices must be finite"));
        }
        let n = vertices.len();
        let mut area2 = S::zero();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if (b - a).cross(c - b) <= S::zero() {
                return Err(Error::invalid(
                    "polygon must be strictly convex and counterclockwise",
                ));
            }
            area2 = area2 + a.cross(b);
        }
        let mut diameter = S::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                diameter = diameter.max(vertices[i].distance(vertices[j]));
            }
        }
        let circumradius = vertices
            .iter()
            .map(|v| v.norm())
            .fold(S::zero(), |a, b| a.max(b));
        Ok(ConvexDomain {
            area: area2 * S::half(),
            diameter,
            circumradius,
            shape: DomainShape::ConvexPolygon { vertices },
        })
    }

    /// Axis-aligned square `[x0, x0+side] x [y0, y0+side]`.
    pub fn square(corner: Point<S>, side: S) -> Result<Self> {
        if side <= S::zero() {
            return Err(Error::invalid("square side must be positive"));
        }
        let s = side;
        Self::polygon(vec![
            corner,
            corner + Point::new(s, S::zero()),
            corner + Point::new(s, s),
            corner + Point::new(S::zero(), s),
        ])
    }

    /// Reuleaux triangle from the three corners of an equilateral triangle.
    pub fn reuleaux(corners: [Point<S>; 3]) -> Result<Self> {
        let sides = [
            corners[0].distance(corners[1]),
            corners[1].distance(corners[2]),
            corners[2].distance(corners[0]),
        ];
        let width = (sides[0] + sides[1] + sides[2]) / S::of(3.0);
        if width <= S::zero() || !width.is_finite() {
            return Err(Error::invalid("reuleaux corners must be distinct"));
        }
        let tol = S::of(1e-9) * width;
        if sides.iter().any(|&s| (s - width).abs() > tol) {
            return Err(Error::invalid("reuleaux corners must be equilateral"));
        }
        // Make the corner order counterclockwise.
        let mut corners = corners;
        if (corners[1] - corners[0]).cross(corners[2] - corners[0]) < S::zero() {
            corners.swap(1, 2);
        }
        let area = (S::PI() - S::of(3.0).sqrt()) * width * width * S::half();
        let mut circumradius = corners
            .iter()
            .map(|c| c.norm())
            .fold(S::zero(), |a, b| a.max(b));
        for i in 0..3 {
            let (c, start, span) = reuleaux_arc(&corners, i);
            if c.norm() == S::zero() {
                circumradius = circumradius.max(width);
            } else if angle_within(c.angle(), start, span) {
                circumradius = circumradius.max(c.norm() + width);
            }
        }
        Ok(ConvexDomain {
            area,
            diameter: width,
            circumradius,
            shape: DomainShape::Reuleaux { corners },
        })
    }

    /// Reuleaux triangle of the given width, centroid at `centroid`, first
    /// corner toward angle `rotation + pi/2`.
    pub fn reuleaux_width(width: S, centroid: Point<S>, rotation: S) -> Result<Self> {
        if width <= S::zero() || !width.is_finite() {
            return Err(Error::invalid("reuleaux width must be positive"));
        }
        // Circumradius of the equilateral triangle with side `width`.
        let rc = width / S::of(3.0).sqrt();
        let mut corners = [Point::origin(); 3];
        for (i, corner) in corners.iter_mut().enumerate() {
            let ang = rotation + S::FRAC_PI_2() + S::of(i as f64) * S::two() * S::PI() / S::of(3.0);
            *corner = centroid + Point::unit(ang) * rc;
        }
        Self::reuleaux(corners)
    }

    pub fn shape(&self) -> &DomainShape<S> {
        &self.shape
    }

    pub fn area(&self) -> S {
        self.area
    }

    pub fn diameter(&self) -> S {
        self.diameter
    }

    /// Radius of the smallest origin-centered ball containing the domain.
    pub fn circumradius(&self) -> S {
        self.circumradius
    }

    /// `(area, diameter, circumradius)` in one call.
    pub fn metrics(&self) -> (S, S, S) {
        (self.area, self.diameter, self.circumradius)
    }

    pub fn apply_motion(&self, rotation: S, translation: Point<S>) -> Self {
        let mv = |p: Point<S>| p.rotated(rotation) + translation;
        match &self.shape {
            DomainShape::Disk { center, radius } => {
                Self::disk(mv(*center), *radius).expect("moved disk stays valid")
            }
            DomainShape::ConvexPolygon { vertices } => {
                Self::polygon(vertices.iter().map(|&v| mv(v)).collect())
                    .expect("moved polygon stays valid")
            }
            DomainShape::Reuleaux { corners } => {
                Self::reuleaux([mv(corners[0]), mv(corners[1]), mv(corners[2])])
                    .expect("moved reuleaux stays valid")
            }
        }
    }

    /// Whether the point lies in the closed domain, within `tol`.
    pub fn contains(&self, p: Point<S>, tol: S) -> bool {
        match &self.shape {
            DomainShape::Disk { center, radius } => p.distance(*center) <= *radius + tol,
            DomainShape::ConvexPolygon { vertices } => {
                let n = vertices.len();
                (0..n).all(|i| {
                    let a = vertices[i];
                    let e = vertices[(i + 1) % n] - a;
                    let inward = e.perp();
                    inward.dot(p - a) >= -tol * e.norm()
                })
            }
            DomainShape::Reuleaux { corners } => {
                let width = corners[0].distance(corners[1]);
                corners.iter().all(|&c| p.distance(c) <= width + tol)
            }
        }
    }

    /// Distance from a point to the domain boundary.
    pub fn boundary_distance(&self, p: Point<S>) -> S {
        match &self.shape {
            DomainShape::Disk { center, radius } => (p.distance(*center) - *radius).abs(),
            DomainShape::ConvexPolygon { vertices } => {
                let n = vertices.len();
                (0..n)
                    .map(|i| distance_to_segment(p, vertices[i], vertices[(i + 1) % n]))
                    .fold(S::infinity(), |a, b| a.min(b))
            }
            DomainShape::Reuleaux { corners } => {
                let width = corners[0].distance(corners[1]);
                if self.contains(p, S::zero()) {
                    // Inside: nearest boundary circle.
                    corners
                        .iter()
                        .map(|&c| (p.distance(c) - width).abs())
                        .fold(S::infinity(), |a, b| a.min(b))
                } else {
                    // Outside: distance to the nearest in-span arc point or corner.
                    let mut best = corners
                        .iter()
                        .map(|&c| p.distance(c))
                        .fold(S::infinity(), |a, b| a.min(b));
                    for i in 0..3 {
                        let (c, start, span) = reuleaux_arc(corners, i);
                        if p.distance(c) > S::zero()
                            && angle_within((p - c).angle(), start, span)
                        {
                            best = best.min((p.distance(c) - width).abs());
                        }
                    }
                    best
                }
            }
        }
    }

    /// Offsets `p` for which the line `(theta, p)` meets the domain:
    /// `[-h(-n), h(n)]` with `h` the support function.
    pub fn support_interval(&self, theta: S) -> (S, S) {
        let n = Point::unit(theta);
        (-self.support(-n), self.support(n))
    }

    fn support(&self, n: Point<S>) -> S {
        match &self.shape {
            DomainShape::Disk { center, radius } => n.dot(*center) + *radius,
            DomainShape::ConvexPolygon { vertices } => vertices
                .iter()
                .map(|&v| n.dot(v))
                .fold(S::neg_infinity(), |a, b| a.max(b)),
            DomainShape::Reuleaux { corners } => {
                let width = corners[0].distance(corners[1]);
                let mut h = corners
                    .iter()
                    .map(|&v| n.dot(v))
                    .fold(S::neg_infinity(), |a, b| a.max(b));
                for i in 0..3 {
                    let (c, start, span) = reuleaux_arc(corners, i);
                    if angle_within(n.angle(), start, span) {
                        h = h.max(n.dot(c) + width);
                    }
                }
                h
            }
        }
    }

    /// The open parameter interval (arclength along the line, measured from
    /// the foot point) where the line runs inside the domain.
    pub fn chord_interval(&self, line: &LineCoords<S>) -> Option<(S, S)> {
        match &self.shape {
            DomainShape::Disk { center, radius } => {
                disk_chord_interval(line, *center, *radius)
            }
            DomainShape::ConvexPolygon { vertices } => {
                let dir = line.direction();
                let base = line.foot();
                let mut lo = S::neg_infinity();
                let mut hi = S::infinity();
                let n = vertices.len();
                for i in 0..n {
                    let a = vertices[i];
                    let e = vertices[(i + 1) % n] - a;
                    let inward = e.perp();
                    let denom = inward.dot(dir);
                    let rhs = inward.dot(a - base);
                    if denom.abs() <= S::of(1e-300) {
                        if rhs > S::zero() {
                            return None; // parallel and outside
                        }
                        continue;
                    }
                    let t = rhs / denom;
                    if denom > S::zero() {
                        lo = lo.max(t);
                    } else {
                        hi = hi.min(t);
                    }
                }
                (lo < hi).then_some((lo, hi))
            }
            DomainShape::Reuleaux { corners } => {
                let width = corners[0].distance(corners[1]);
                let mut lo = S::neg_infinity();
                let mut hi = S::infinity();
                for &c in corners.iter() {
                    let (a, b) = disk_chord_interval(line, c, width)?;
                    lo = lo.max(a);
                    hi = hi.min(b);
                }
                (lo < hi).then_some((lo, hi))
            }
        }
    }

    /// Endpoints of the chord cut by the line, if any.
    pub fn chord_endpoints(&self, line: &LineCoords<S>) -> Option<(Point<S>, Point<S>)> {
        let (lo, hi) = self.chord_interval(line)?;
        Some((line.point_at(lo), line.point_at(hi)))
    }

    /// Length of the intersection of the line with the domain
    /// (`0` when the line misses it).
    pub fn chord_length(&self, line: &LineCoords<S>) -> S {
        match &self.shape {
            DomainShape::Disk { center, radius } => {
                let d = line.signed_distance(*center).abs();
                if d >= *radius {
                    S::zero()
                } else {
                    S::two() * (*radius * *radius - d * d).sqrt()
                }
            }
            _ => self
                .chord_interval(line)
                .map_or(S::zero(), |(lo, hi)| hi - lo),
        }
    }

    /// Offset maximizing the chord length at fixed angle, with the maximum.
    pub fn argmax_chord(&self, theta: S) -> (S, S) {
        let n = Point::unit(theta);
        match &self.shape {
            DomainShape::Disk { center, radius } => (n.dot(*center), S::two() * *radius),
            DomainShape::ConvexPolygon { vertices } => {
                let mut best = (S::zero(), S::neg_infinity());
                for &v in vertices {
                    let p = n.dot(v);
                    let len = self.chord_length(&LineCoords::new(theta, p).expect("finite"));
                    if len > best.1 {
                        best = (p, len);
                    }
                }
                best
            }
            DomainShape::Reuleaux { .. } => {
                // Golden-section on the concave chord profile.
                let (mut a, mut b) = self.support_interval(theta);
                let chord = |p: S| self.chord_length(&LineCoords::new(theta, p).expect("finite"));
                let phi = (S::of(5.0).sqrt() - S::one()) * S::half();
                let mut c = b - phi * (b - a);
                let mut d = a + phi * (b - a);
                let mut fc = chord(c);
                let mut fd = chord(d);
                for _ in 0..200 {
                    if b - a < S::of(1e-13) {
                        break;
                    }
                    if fc >= fd {
                        b = d;
                        d = c;
                        fd = fc;
                        c = b - phi * (b - a);
                        fc = chord(c);
                    } else {
                        a = c;
                        c = d;
                        fc = fd;
                        d = a + phi * (b - a);
                        fd = chord(d);
                    }
                }
                let p = (a + b) * S::half();
                (p, chord(p))
            }
        }
    }

    /// Offsets at which the per-angle chord profile has kinks; used to cut
    /// scan intervals so the chord is smooth between consecutive cuts.
    pub fn profile_breakpoints(&self, theta: S) -> Vec<S> {
        let n = Point::unit(theta);
        let mut cuts = Vec::new();
        match &self.shape {
            DomainShape::Disk { .. } => {}
            DomainShape::ConvexPolygon { vertices } => {
                cuts.extend(vertices.iter().map(|&v| n.dot(v)));
            }
            DomainShape::Reuleaux { corners } => {
                cuts.extend(corners.iter().map(|&c| n.dot(c)));
            }
        }
        let (lo, hi) = self.support_interval(theta);
        cuts.push(lo);
        cuts.push(hi);
        cuts
    }

    /// Boundary residual of `p`: how far it is from lying exactly on the
    /// domain boundary, bounded by `tau_deg` for clipped chord endpoints.
    pub fn on_boundary(&self, p: Point<S>) -> bool {
        self.boundary_distance(p) <= tau_deg::<S>()
    }
}

fn disk_chord_interval<S: Scalar>(
    line: &LineCoords<S>,
    center: Point<S>,
    radius: S,
) -> Option<(S, S)> {
    let delta = line.signed_distance(center);
    if delta.abs() >= radius {
        return None;
    }
    let half = (radius * radius - delta * delta).sqrt();
    let t_center = line.direction().dot(center - line.foot());
    Some((t_center - half, t_center + half))
}

/// The three boundary arcs of a Reuleaux triangle as
/// `(center, start_angle, span)`, in counterclockwise traversal order.
pub fn reuleaux_boundary_arcs<S: Scalar>(corners: &[Point<S>; 3]) -> [(Point<S>, S, S); 3] {
    [
        reuleaux_arc(corners, 0),
        reuleaux_arc(corners, 1),
        reuleaux_arc(corners, 2),
    ]
}

/// Boundary arc of a Reuleaux triangle opposite corner `i`: centered at
/// corner `i`, running counterclockwise from corner `i+1` to corner `i+2`.
fn reuleaux_arc<S: Scalar>(corners: &[Point<S>; 3], i: usize) -> (Point<S>, S, S) {
    let c = corners[i];
    let a = (corners[(i + 1) % 3] - c).angle();
    let b = (corners[(i + 2) % 3] - c).angle();
    let two_pi = S::two() * S::PI();
    let mut span = (b - a) % two_pi;
    if span < S::zero() {
        span = span + two_pi;
    }
    (c, a, span)
}

fn angle_within<S: Scalar>(angle: S, start: S, span: S) -> bool {
    let two_pi = S::two() * S::PI();
    let mut rel = (angle - start) % two_pi;
    if rel < S::zero() {
        rel = rel + two_pi;
    }
    rel <= span
}

fn distance_to_segment<S: Scalar>(p: Point<S>, a: Point<S>, b: Point<S>) -> S {
    let ab = b - a;
    let t = (ab.dot(p - a) / ab.dot(ab)).max(S::zero()).min(S::one());
    p.distance(a + ab * t)
}
