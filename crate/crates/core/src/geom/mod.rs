//! Exact planar geometry: line parametrization, intersection counting
//! against primitives, chord lengths of convex domains, rigid motions.
//!
//! All types are immutable after construction and all operations are pure,
//! so everything here is safe for unrestricted parallel use.

mod domain;
mod line;
mod point;
mod primitive;

pub use domain::{reuleaux_boundary_arcs, ConvexDomain, DomainShape};
pub use line::LineCoords;
pub use point::Point;
pub use primitive::{intersect_line_primitive, IntersectionResult, Primitive};

use crate::scalar::Scalar;

/// Normalize raw `(theta, offset)` coordinates into canonical form.
pub fn normalize_line<S: Scalar>(theta: S, offset: S) -> crate::error::Result<LineCoords<S>> {
    LineCoords::new(theta, offset)
}

/// Transversal intersection count of a line against a list of primitives.
/// Additive over the list; the degenerate flag is the OR over primitives.
pub fn count_intersections<'a, S: Scalar, I>(line: &LineCoords<S>, primitives: I) -> IntersectionResult
where
    I: IntoIterator<Item = &'a Primitive<S>>,
{
    let mut out = IntersectionResult::default();
    for prim in primitives {
        let r = intersect_line_primitive(line, prim);
        out.count += r.count;
        out.degenerate |= r.degenerate;
    }
    out
}

/// Length of the intersection of a line with a convex domain.
pub fn chord_length<S: Scalar>(line: &LineCoords<S>, domain: &ConvexDomain<S>) -> S {
    domain.chord_length(line)
}

/// `(area, diameter, circumradius about the origin)` of a domain.
pub fn domain_metrics<S: Scalar>(domain: &ConvexDomain<S>) -> (S, S, S) {
    domain.metrics()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(theta: f64, offset: f64) -> LineCoords<f64> {
        LineCoords::new(theta, offset).unwrap()
    }

    #[test]
    fn empty_set_counts_zero() {
        let r = count_intersections(&line(0.2, 0.4), &[]);
        assert_eq!(r.count, 0);
        assert!(!r.degenerate);
    }

    #[test]
    fn concentric_circle_pair() {
        // Only the outer circle (r = 0.8) reaches offset 0.5.
        let set = [
            Primitive::circle(Point::origin(), 0.3).unwrap(),
            Primitive::circle(Point::origin(), 0.8).unwrap(),
        ];
        let r = count_intersections(&line(1.0, 0.5), &set);
        assert_eq!(r.count, 2);
    }

    #[test]
    fn grid_of_horizontal_chords() {
        // 11 horizontal lines spaced 0.1 apart, clipped to the unit square.
        let set: Vec<Primitive<f64>> = (0..=10)
            .map(|i| {
                let y = 0.1 * i as f64;
                Primitive::segment(Point::new(0.0, y), Point::new(1.0, y)).unwrap()
            })
            .collect();
        // Vertical line through the interior.
        let r = count_intersections(&line(0.0, 0.37), &set);
        assert_eq!(r.count, 11);
        assert!(!r.degenerate);
    }

    #[test]
    fn count_is_additive_over_unions() {
        let a = [
            Primitive::circle(Point::origin(), 0.9).unwrap(),
            Primitive::segment(Point::new(-1.0, -1.0), Point::new(1.0, 0.5)).unwrap(),
        ];
        let b = [Primitive::circle(Point::new(0.2, 0.1), 0.4).unwrap()];
        let l = line(0.83, 0.17);
        let ra = count_intersections(&l, &a);
        let rb = count_intersections(&l, &b);
        let rab = count_intersections(&l, a.iter().chain(b.iter()));
        assert_eq!(rab.count, ra.count + rb.count);
    }

    #[test]
    fn rigid_motion_equivariance() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let domain = ConvexDomain::square(Point::new(-0.5, -0.5), 1.0).unwrap();
        for _ in 0..200 {
            let prim = if rng.gen_bool(0.5) {
                Primitive::segment(
                    Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                    Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                )
                .unwrap()
            } else {
                Primitive::circle(
                    Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                    rng.gen_range(0.05..1.0),
                )
                .unwrap()
            };
            let l = line(rng.gen_range(0.0..3.1), rng.gen_range(-1.5..1.5));
            let rot = rng.gen_range(-6.0..6.0);
            let tr = Point::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let before = intersect_line_primitive(&l, &prim);
            let after = intersect_line_primitive(
                &l.apply_motion(rot, tr),
                &prim.apply_motion(rot, tr),
            );
            if !before.degenerate && !after.degenerate {
                assert_eq!(before.count, after.count);
            }
            let c0 = chord_length(&l, &domain);
            let c1 = chord_length(&l.apply_motion(rot, tr), &domain.apply_motion(rot, tr));
            assert!((c0 - c1).abs() < 1e-9, "chords {c0} vs {c1}");
        }
    }
}
