//! Property tests for the geometric kernels.

use proptest::prelude::*;
use std::f64::consts::PI;

use crofton::construct::RectifiableSet;
use crofton::geom::count_intersections;
use crofton::{ConvexDomain, Line, Point, Primitive};

fn finite_angle() -> impl Strategy<Value = f64> {
    -50.0..50.0f64
}

fn finite_offset() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

fn primitive() -> impl Strategy<Value = Primitive> {
    prop_oneof![
        ((-1.0..1.0f64), (-1.0..1.0f64), (-1.0..1.0f64), (-1.0..1.0f64)).prop_filter_map(
            "distinct endpoints",
            |(x0, y0, x1, y1)| {
                let (p0, p1) = (Point::new(x0, y0), Point::new(x1, y1));
                (p0.distance(p1) > 1e-6).then(|| Primitive::segment(p0, p1).unwrap())
            }
        ),
        ((-1.0..1.0f64), (-1.0..1.0f64), (0.05..1.0f64))
            .prop_map(|(x, y, r)| Primitive::circle(Point::new(x, y), r).unwrap()),
        (
            (-1.0..1.0f64),
            (-1.0..1.0f64),
            (0.05..1.0f64),
            (0.0..std::f64::consts::TAU),
            (0.3..6.2f64)
        )
            .prop_map(|(x, y, r, a, s)| Primitive::arc(Point::new(x, y), r, a, s).unwrap()),
    ]
}

proptest! {
    #[test]
    fn normalization_is_idempotent(theta in finite_angle(), offset in finite_offset()) {
        let a = Line::new(theta, offset).unwrap();
        let b = Line::new(a.theta(), a.offset()).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(a.theta() >= 0.0 && a.theta() < PI);
    }

    #[test]
    fn half_turn_is_the_same_line(theta in finite_angle(), offset in finite_offset()) {
        let a = Line::new(theta, offset).unwrap();
        let b = Line::new(theta + PI, -offset).unwrap();
        prop_assert!((a.theta() - b.theta()).abs() < 1e-9);
        prop_assert!((a.offset() - b.offset()).abs() < 1e-9);
    }

    #[test]
    fn count_is_additive(prims in prop::collection::vec(primitive(), 1..8),
                         split in 0usize..8,
                         theta in 0.0..PI,
                         offset in -2.0..2.0f64) {
        let line = Line::new(theta, offset).unwrap();
        let k = split.min(prims.len());
        let whole = count_intersections(&line, &prims);
        let left = count_intersections(&line, &prims[..k]);
        let right = count_intersections(&line, &prims[k..]);
        prop_assert_eq!(whole.count, left.count + right.count);
        prop_assert_eq!(whole.degenerate, left.degenerate || right.degenerate);
    }

    #[test]
    fn set_json_round_trips(prims in prop::collection::vec(primitive(), 0..6)) {
        let set = RectifiableSet::new(prims).unwrap();
        let text = set.to_json().unwrap();
        let back = RectifiableSet::from_json(&text).unwrap();
        prop_assert_eq!(&set, &back);
        prop_assert_eq!(text, back.to_json().unwrap());
    }

    #[test]
    fn disk_chord_closed_form_matches_endpoints(theta in 0.0..PI, offset in -0.999..0.999f64) {
        let domain = ConvexDomain::unit_disk();
        let line = Line::new(theta, offset).unwrap();
        let closed = domain.chord_length(&line);
        match domain.chord_endpoints(&line) {
            Some((a, b)) => prop_assert!((a.distance(b) - closed).abs() < 1e-12),
            None => prop_assert_eq!(closed, 0.0),
        }
    }
}
