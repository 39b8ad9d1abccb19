//! Lines in (angle, signed offset) coordinates.
//!
//! A line is `{ (x, y) : x cos(theta) + y sin(theta) = offset }` with
//! `theta` normalized into `[0, pi)`. The pairs `(theta, offset)` and
//! `(theta + pi, -offset)` describe the same line and normalize identically.
//! The kinematic measure on line space is `d(offset) d(theta)` in these
//! coordinates, which is invariant under rigid motions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::scalar::Scalar;

/// A line in normalized (angle, signed offset) coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineCoords<S> {
    theta: S,
    offset: S,
}

impl<S: Scalar> LineCoords<S> {
    /// Normalize `(theta, offset)` into the canonical single cover
    /// `theta in [0, pi)`, flipping the offset sign once per half turn.
    pub fn new(theta: S, offset: S) -> Result<Self> {
        if !theta.is_finite() || !offset.is_finite() {
            return Err(Error::invalid(format!(
                "line coordinates must be finite, got theta={theta}, offset={offset}"
            )));
        }
        Ok(Self::normalized(theta, offset))
    }

    fn normalized(theta: S, offset: S) -> Self {
        let pi = S::PI();
        let k = (theta / pi).floor();
        let mut t = theta - k * pi;
        // Parity of k decides the offset sign; k is an exact float integer.
        let mut flip = k - (k / S::two()).floor() * S::two() != S::zero();
        if t >= pi {
            t = t - pi;
            flip = !flip;
        }
        if t < S::zero() {
            t = S::zero();
        }
        LineCoords {
            theta: t,
            offset: if flip { -offset } else { offset },
        }
    }

    pub fn theta(&self) -> S {
        self.theta
    }

    pub fn offset(&self) -> S {
        self.offset
    }

    /// Unit normal of the line, `(cos theta, sin theta)`.
    pub fn normal(&self) -> Point<S> {
        Point::unit(self.theta)
    }

    /// Unit direction along the line, `(-sin theta, cos theta)`.
    pub fn direction(&self) -> Point<S> {
        self.normal().perp()
    }

    /// A point of the line: the foot of the perpendicular from the origin.
    pub fn foot(&self) -> Point<S> {
        self.normal() * self.offset
    }

    /// Point of the line at signed arclength `t` from the foot.
    pub fn point_at(&self, t: S) -> Point<S> {
        self.foot() + self.direction() * t
    }

    /// Signed distance from the line to a point (positive on the normal side).
    pub fn signed_distance(&self, p: Point<S>) -> S {
        self.normal().dot(p) - self.offset
    }

    /// Image of the line under rotation by `rotation` about the origin
    /// followed by translation by `translation`.
    pub fn apply_motion(&self, rotation: S, translation: Point<S>) -> Self {
        let theta = self.theta + rotation;
        let normal = Point::unit(theta);
        Self::normalized(theta, self.offset + normal.dot(translation))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(theta: f64, offset: f64) -> LineCoords<f64> {
        LineCoords::new(theta, offset).unwrap()
    }

    #[test]
    fn flipped_cover_normalizes() {
        let l = line(3.0 * std::f64::consts::FRAC_PI_2, 0.5);
        assert!((l.theta() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert_eq!(l.offset(), -0.5);
    }

    #[test]
    fn identity_case() {
        let l = line(0.0, 1.0);
        assert_eq!(l.theta(), 0.0);
        assert_eq!(l.offset(), 1.0);
    }

    #[test]
    fn theta_pi_aliases_zero() {
        let l = line(std::f64::consts::PI, 0.3);
        assert_eq!(l.theta(), 0.0);
        assert_eq!(l.offset(), -0.3);
    }

    #[test]
    fn normalization_idempotent() {
        for &(t, p) in &[(17.3, -2.0), (-4.0, 0.25), (6.2998, 1.0), (1e6, 3.0)] {
            let a = line(t, p);
            let b = line(a.theta(), a.offset());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn non_finite_rejected() {
        assert!(LineCoords::new(f64::NAN, 0.0).is_err());
        assert!(LineCoords::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn rotation_of_normal() {
        let l = line(0.0, 1.0).apply_motion(std::f64::consts::FRAC_PI_2, Point::origin());
        assert!((l.theta() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!((l.offset() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn motion_roundtrip() {
        let l = line(0.7, -0.4);
        let v = Point::new(0.3, -1.2);
        let back = l.apply_motion(1.1, v).apply_motion(-1.1, (-v).rotated(-1.1));
        assert!((back.theta() - l.theta()).abs() < 1e-12);
        assert!((back.offset() - l.offset()).abs() < 1e-12);
    }
}
