//! Plain 2-vector used for endpoints, centers and translations.

use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Deserializer;
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// A point (or vector) in the plane. Serializes as `[x, y]`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point {
            x: S::zero(),
            y: S::zero(),
        }
    }

    /// Unit vector at the given angle from the x-axis.
    pub fn unit(angle: S) -> Self {
        Point {
            x: angle.cos(),
            y: angle.sin(),
        }
    }

    pub fn dot(self, other: Self) -> S {
        self.x * other.x + self.y * other.y
    }

    /// Z-component of the cross product `self x other`.
    pub fn cross(self, other: Self) -> S {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> S {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> S {
        (self - other).norm()
    }

    /// Counterclockwise rotation by `angle` about the origin.
    pub fn rotated(self, angle: S) -> Self {
        let (s, c) = angle.sin_cos();
        Point {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }

    /// Perpendicular vector (counterclockwise quarter turn).
    pub fn perp(self) -> Self {
        Point {
            x: -self.y,
            y: self.x,
        }
    }

    /// Angle of the vector from the positive x-axis, in (-pi, pi].
    pub fn angle(self) -> S {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl<S: Scalar> Add for Point<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Point {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

impl<S: Scalar> Sub for Point<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Point {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
        }
    }
}

impl<S: Scalar> Mul<S> for Point<S> {
    type Output = Self;
    fn mul(self, rhs: S) -> Self {
        Point {
            x: self.x * rhs,
            y: self.y * rhs,
        }
    }
}

impl<S: Scalar> Neg for Point<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Point {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl<S: Serialize> Serialize for Point<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut tup = serializer.serialize_tuple(2)?;
        tup.serialize_element(&self.x)?;
        tup.serialize_element(&self.y)?;
        tup.end()
    }
}

impl<'de, S: Deserialize<'de>> Deserialize<'de> for Point<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [x, y]: [S; 2] = Deserialize::deserialize(deserializer)?;
        Ok(Point { x, y })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_preserves_norm() {
        let p = Point::new(3.0f64, 4.0);
        let q = p.rotated(1.234);
        assert!((q.norm() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn serializes_as_array() {
        let p = Point::new(1.5, -2.0);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1.5,-2.0]");
        let q: Point<f64> = serde_json::from_str("[1.5,-2.0]").unwrap();
        assert_eq!(p, q);
    }
}
