//! Pose sensitivity of the clipped Steinhaus sets: when the origin (where
//! all n line families meet) sits on the domain boundary, lines grazing
//! that point pick up order-n extra crossings against a short chord, so the
//! measured supremum is at least of order n ~ L^(1/3).

use crofton::construct::steinhaus_for_length;
use crofton::discrepancy::{deviation, sup_discrepancy_scan, DeviationTarget};
use crofton::{ConvexDomain, Line, Point};

#[test]
fn boundary_pencil_forces_order_n_deviation() {
    // Unit disk tangent to the y-axis at the origin: the origin pencil of
    // the Steinhaus set lies on the boundary.
    let domain = ConvexDomain::disk(Point::new(1.0, 0.0), 1.0).unwrap();
    let (params, set) = steinhaus_for_length(1000.0, &domain).unwrap();
    assert_eq!(params.n, 10);
    let target = DeviationTarget::for_set(&domain, &set);

    // Direct witnesses: lines grazing the origin almost tangentially (the
    // tangent there is vertical, normal angle 0). They cross one chord of
    // every non-parallel pencil family right next to the origin, while
    // their own chord length is only O(sqrt(offset)).
    let mut witness_dev = 0.0f64;
    for &delta in &[1e-7, 1e-6, 1e-5] {
        for &theta in &[0.0, 7e-4, 1.9e-3] {
            let line = Line::new(theta, delta).unwrap();
            if let Ok(d) = deviation(&line, &set, &target) {
                witness_dev = witness_dev.max(d);
            }
        }
    }
    assert!(
        witness_dev >= 0.4 * params.n as f64,
        "near-pencil witnesses only reached {witness_dev} for n = {}",
        params.n
    );

    let report = sup_discrepancy_scan(&set, &domain, 2048).unwrap();
    assert!(
        report.sup_value + report.certified_gap.unwrap() >= witness_dev,
        "scan sup {} + gap {} below a checked witness {witness_dev}",
        report.sup_value,
        report.certified_gap.unwrap()
    );
    assert!(
        report.sup_value >= params.n as f64 * 0.4,
        "boundary-pose sup {} too small",
        report.sup_value
    );
}
