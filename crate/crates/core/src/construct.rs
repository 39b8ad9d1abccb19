//! Set construction: clipped Steinhaus line grids, the concentric-circle
//! set in the unit disk, and generic assembly with exact length accounting.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::geom::{ConvexDomain, LineCoords, Point, Primitive};
use crate::scalar::{tau_deg, Scalar};

/// Default cap on the number of primitives a single construction may emit.
pub const DEFAULT_PRIMITIVE_CAP: usize = 10_000_000;

/// A finite union of primitives with cached total length.
///
/// Serializes as `{"primitives": [...], "total_length": L, "metadata": {...}}`
/// and round-trips through JSON bit-stably (serde emits shortest-round-trip
/// float literals).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RectifiableSet<S> {
    pub primitives: Vec<Primitive<S>>,
    pub total_length: S,
    #[serde(default)]
    pub metadata: Map<String, Value>,
}

impl<S: Scalar> RectifiableSet<S> {
    /// Assemble a set, validating each primitive and caching the length.
    pub fn new(primitives: Vec<Primitive<S>>) -> Result<Self> {
        for p in &primitives {
            p.validate()?;
        }
        let total_length = primitives
            .iter()
            .fold(S::zero(), |acc, p| acc + p.length());
        Ok(RectifiableSet {
            primitives,
            total_length,
            metadata: Map::new(),
        })
    }

    pub fn empty() -> Self {
        RectifiableSet {
            primitives: Vec::new(),
            total_length: S::zero(),
            metadata: Map::new(),
        }
    }

    /// Cached total length `H1(S)`.
    pub fn length(&self) -> S {
        self.total_length
    }

    /// Recompute the length from the primitives (consistency check).
    pub fn recompute_length(&self) -> S {
        self.primitives
            .iter()
            .fold(S::zero(), |acc, p| acc + p.length())
    }

    /// Largest distance of a point of the set from the origin.
    pub fn circumradius(&self) -> S {
        self.primitives
            .iter()
            .map(|p| p.circumradius())
            .fold(S::zero(), |a, b| a.max(b))
    }

    /// Whether every primitive lies inside the domain (within `tol`).
    pub fn contained_in(&self, domain: &ConvexDomain<S>, tol: S) -> bool {
        self.primitives.iter().all(|p| match *p {
            Primitive::Segment { p0, p1 } => domain.contains(p0, tol) && domain.contains(p1, tol),
            Primitive::Circle { center, radius } => {
                // Sample the circle; convexity makes 64 probes plenty for
                // the origin-centered construction circles.
                (0..64).all(|i| {
                    let ang = S::two() * S::PI() * S::of(i as f64) / S::of(64.0);
                    domain.contains(center + Point::unit(ang) * radius, tol)
                })
            }
            Primitive::Arc {
                center,
                radius,
                angle_start,
                angle_span,
            } => (0..=64).all(|i| {
                let ang = angle_start + angle_span * S::of(i as f64) / S::of(64.0);
                domain.contains(center + Point::unit(ang) * radius, tol)
            }),
        })
    }

    pub fn apply_motion(&self, rotation: S, translation: Point<S>) -> Self {
        RectifiableSet {
            primitives: self
                .primitives
                .iter()
                .map(|p| p.apply_motion(rotation, translation))
                .collect(),
            total_length: self.total_length,
            metadata: self.metadata.clone(),
        }
    }

    pub fn to_json(&self) -> Result<String>
    where
        S: Serialize,
    {
        serde_json::to_string_pretty(self).map_err(|e| Error::Serialization(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self>
    where
        S: for<'de> Deserialize<'de>,
    {
        let set: RectifiableSet<S> =
            serde_json::from_str(text).map_err(|e| Error::Serialization(e.to_string()))?;
        for p in &set.primitives {
            p.validate()?;
        }
        let recomputed = set.recompute_length();
        let tol = S::of(1e-9) * recomputed.max(S::one());
        if (recomputed - set.total_length).abs() > tol {
            return Err(Error::invalid(format!(
                "cached total_length {} disagrees with primitives ({})",
                set.total_length, recomputed
            )));
        }
        Ok(set)
    }
}

/// Cached length of a set (recomputable from its primitives).
pub fn set_length<S: Scalar>(set: &RectifiableSet<S>) -> S {
    set.length()
}

/// Parameters of the Steinhaus family `S_{n, eps}`: `n` equally-angled line
/// directions through the origin together with all translates spaced `eps`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SteinhausParams<S> {
    pub n: u32,
    pub epsilon: S,
}

impl<S: Scalar> SteinhausParams<S> {
    pub fn new(n: u32, epsilon: S) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid("steinhaus needs n >= 1"));
        }
        if epsilon <= S::zero() || !epsilon.is_finite() {
            return Err(Error::invalid("steinhaus needs epsilon > 0"));
        }
        Ok(SteinhausParams { n, epsilon })
    }
}

/// Clip the Steinhaus set `S_{n, eps}` to a convex domain.
///
/// Direction `k` contributes the lines with unit direction
/// `(cos(pi k/n), sin(pi k/n))` offset by integer multiples of `eps` along
/// the orthogonal direction; every nonempty chord becomes one segment.
/// The domain is used in whatever pose the caller supplies; translates run
/// over `|s * eps| <= circumradius(domain)` about the origin.
pub fn steinhaus_clip<S: Scalar>(
    params: SteinhausParams<S>,
    domain: &ConvexDomain<S>,
) -> Result<RectifiableSet<S>> {
    steinhaus_clip_capped(params, domain, DEFAULT_PRIMITIVE_CAP)
}

/// As [`steinhaus_clip`], with an explicit cap on the emitted primitive count.
pub fn steinhaus_clip_capped<S: Scalar>(
    params: SteinhausParams<S>,
    domain: &ConvexDomain<S>,
    cap: usize,
) -> Result<RectifiableSet<S>> {
    let radius = domain.circumradius();
    let per_direction = (radius / params.epsilon).floor().as_f64() as u64;
    let candidates = (params.n as u64).saturating_mul(2 * per_direction + 1);
    if candidates > cap as u64 {
        return Err(Error::resource(format!(
            "steinhaus n={} eps={} would enumerate {} lines (cap {})",
            params.n, params.epsilon, candidates, cap
        )));
    }

    let mut primitives = Vec::new();
    let tau = tau_deg::<S>();
    for k in 0..params.n {
        // The family direction is pi k / n; the line's normal angle follows
        // a quarter turn later.
        let dir_angle = S::PI() * S::of(k as f64) / S::of(params.n as f64);
        let theta = dir_angle + S::FRAC_PI_2();
        let s_max = per_direction as i64;
        for s in -s_max..=s_max {
            let offset = params.epsilon * S::of(s as f64);
            let line = LineCoords::new(theta, offset)?;
            if let Some((a, b)) = domain.chord_endpoints(&line) {
                if a.distance(b) > tau {
                    primitives.push(Primitive::Segment { p0: a, p1: b });
                }
            }
        }
    }
    let mut set = RectifiableSet::new(primitives)?;
    set.metadata.insert(
        "steinhaus".into(),
        json!({"n": params.n, "epsilon": params.epsilon.as_f64()}),
    );
    Ok(set)
}

/// Choose Steinhaus parameters for a target length `L`:
/// `n = round(L^(1/3))` and `eps = 1 / round(L^(2/3))`, so the spacing is an
/// exact reciprocal integer. The realized length of the clipped set scales
/// like `L` times the domain area; reports always carry the realized value.
pub fn steinhaus_for_length<S: Scalar>(
    length: S,
    domain: &ConvexDomain<S>,
) -> Result<(SteinhausParams<S>, RectifiableSet<S>)> {
    if length <= S::zero() || !length.is_finite() {
        return Err(Error::invalid("target length must be positive"));
    }
    let n = length.powf(S::one() / S::of(3.0)).round();
    let m = length.powf(S::two() / S::of(3.0)).round();
    if n < S::one() || m < S::one() {
        return Err(Error::invalid(format!(
            "target length {length} too small for steinhaus parameter rounding"
        )));
    }
    let params = SteinhausParams::new(n.as_f64() as u32, S::one() / m)?;
    let set = steinhaus_clip(params, domain)?;
    Ok((params, set))
}

/// Radii of the concentric-circle construction for target length `L`:
/// `r_i = sqrt(1 - i^2 pi^4 / (4 L^2))` for integers `1 <= i < 2L/pi^2`,
/// strictly decreasing, all in `(0, 1)`.
pub fn disk_circle_radii<S: Scalar>(length: S) -> Vec<S> {
    let pi = S::PI();
    let bound = S::two() * length / (pi * pi);
    let mut radii = Vec::new();
    let mut i = S::one();
    while i < bound {
        let q = i * pi * pi / (S::two() * length);
        let r2 = S::one() - q * q;
        if r2 > S::zero() {
            radii.push(r2.sqrt());
        }
        i = i + S::one();
    }
    radii
}

/// Concentric circles in the closed unit disk with total length exactly `L`.
///
/// Starts from [`disk_circle_radii`]; the remaining length mismatch (at most
/// `8 pi` before adjustment) is fixed by adding one fractional-radius circle,
/// split into several circles of radius below one when a single one would
/// not fit in the open disk. Adjustment circles keep away from existing
/// radii so the set stays a union of distinct circles; the adjustment is
/// recorded in the set metadata.
pub fn disk_construction<S: Scalar>(length: S) -> Result<RectifiableSet<S>> {
    if length <= S::zero() || !length.is_finite() {
        return Err(Error::invalid("target length must be positive"));
    }
    let two_pi = S::two() * S::PI();
    let mut radii = disk_circle_radii(length);
    let base_length = radii.iter().fold(S::zero(), |a, &r| a + two_pi * r);
    let mut removed = 0usize;

    // The formula radii always undershoot (the radius profile is decreasing),
    // so the deficit is nonnegative; the removal branch guards against
    // pathological rounding only.
    let mut deficit = length - base_length;
    while deficit < S::zero() {
        match radii.pop() {
            Some(r) => {
                deficit = deficit + two_pi * r;
                removed += 1;
            }
            None => break,
        }
    }

    // Split the remaining deficit over as few circles as possible, all with
    // radius at most r_cap < 1 so they stay strictly inside the disk.
    let r_cap = S::of(0.95);
    let mut added: Vec<S> = Vec::new();
    if deficit > tau_deg::<S>() {
        let total = deficit / two_pi;
        let mut pieces = (total / r_cap).ceil().as_f64().max(1.0) as usize;
        let clash = |candidates: &[S], existing: &[S]| {
            candidates.iter().enumerate().any(|(i, &r)| {
                existing
                    .iter()
                    .chain(candidates[..i].iter())
                    .any(|&er| (er - r).abs() <= S::two() * tau_deg::<S>())
            })
        };
        // Pairwise skews keep the candidate radii distinct while their sum
        // stays exactly `total`; growing the skew (or the piece count, when
        // a lone circle lands on a construction radius) resolves clashes.
        'outer: for attempt in 0..16 {
            if attempt == 8 && pieces == 1 {
                pieces = 2;
            }
            let base = total / S::of(pieces as f64);
            let skew = base * S::of(1e-3) * S::of((attempt % 8 + 1) as f64);
            let mut candidates = Vec::with_capacity(pieces);
            for j in 0..pieces {
                let sign = if j % 2 == 0 { S::one() } else { -S::one() };
                let off = if pieces % 2 == 1 && j == pieces - 1 {
                    S::zero()
                } else {
                    sign * skew
                };
                candidates.push(base + off);
            }
            if !clash(&candidates, &radii) {
                added = candidates;
                break 'outer;
            }
        }
        if added.is_empty() {
            return Err(Error::invalid(
                "adjustment circles collide with construction radii",
            ));
        }
        // Exactness: absorb the accumulated rounding in the last circle.
        let sum: S = added.iter().fold(S::zero(), |a, &b| a + b);
        if let Some(last) = added.last_mut() {
            *last = *last + (total - sum);
        }
    }

    let mut primitives: Vec<Primitive<S>> = radii
        .iter()
        .map(|&r| Primitive::Circle {
            center: Point::origin(),
            radius: r,
        })
        .collect();
    primitives.extend(added.iter().map(|&r| Primitive::Circle {
        center: Point::origin(),
        radius: r,
    }));

    let mut set = RectifiableSet::new(primitives)?;
    // The radii sum to length/(2 pi) analytically; pin the cached value to
    // the target so only float summation noise separates the two.
    debug_assert!((set.total_length - length).abs() <= S::of(1e-12) * length.max(S::one()));
    set.total_length = length;
    set.metadata.insert(
        "disk_construction".into(),
        json!({
            "target_length": length.as_f64(),
            "formula_circles": radii.len(),
            "removed_circles": removed,
            "added_radii": added.iter().map(|r| r.as_f64()).collect::<Vec<_>>(),
            "pre_adjustment_length": base_length.as_f64(),
        }),
    );
    Ok(set)
}

/// Pre-adjustment length of the formula radii, `2 pi sum r_i` (exposed for
/// the length-bound checks).
pub fn disk_pre_adjustment_length<S: Scalar>(length: S) -> S {
    let two_pi = S::two() * S::PI();
    disk_circle_radii(length)
        .iter()
        .fold(S::zero(), |a, &r| a + two_pi * r)
}

/// Worst gap of the counting identity for the formula radii:
/// `max_r |#{i: r_i >= r} - (2L/pi^2) sqrt(1 - r^2)|` over a uniform grid
/// of `grid` radii plus a neighborhood of every breakpoint. Stays at most 1
/// by construction.
pub fn counting_bound_worst_gap(length: f64, grid: usize) -> f64 {
    let radii = disk_circle_radii(length);
    let factor = 2.0 * length / (std::f64::consts::PI * std::f64::consts::PI);
    // radii are sorted descending; count of r_i >= r by binary search.
    let count_ge = |r: f64| radii.partition_point(|&ri| ri >= r) as f64;
    let gap = |r: f64| (count_ge(r) - factor * (1.0 - r * r).sqrt()).abs();
    let mut worst = 0.0f64;
    for j in 0..grid {
        let r = j as f64 / grid as f64;
        worst = worst.max(gap(r));
    }
    for &ri in &radii {
        for r in [ri - 1e-12, ri, ri + 1e-12] {
            if (0.0..1.0).contains(&r) {
                worst = worst.max(gap(r));
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn set_length_accumulates() {
        let circle = Primitive::circle(Point::origin(), 1.0).unwrap();
        let seg = Primitive::segment(Point::new(0.0, 0.0), Point::new(3.0, 4.0)).unwrap();
        let s1 = RectifiableSet::new(vec![circle.clone()]).unwrap();
        assert!((set_length(&s1) - 2.0 * PI).abs() < 1e-15);
        let s2 = RectifiableSet::new(vec![seg.clone()]).unwrap();
        assert_eq!(set_length(&s2), 5.0);
        let s3 = RectifiableSet::new(vec![circle, seg]).unwrap();
        assert!((set_length(&s3) - (2.0 * PI + 5.0)).abs() < 1e-15);
    }

    #[test]
    fn steinhaus_horizontal_family() {
        // n = 1: lines parallel to the x-axis.
        let params = SteinhausParams::new(1, 0.25f64).unwrap();
        let set = steinhaus_clip(params, &ConvexDomain::unit_disk()).unwrap();
        // Heights 0, ±0.25, ±0.5, ±0.75 give chords; ±1.0 are tangent and empty.
        assert_eq!(set.primitives.len(), 7);
        for p in &set.primitives {
            if let Primitive::Segment { p0, p1 } = p {
                assert!((p0.y - p1.y).abs() < 1e-12, "chords must be horizontal");
            } else {
                panic!("expected segments");
            }
        }
    }

    #[test]
    fn steinhaus_grid_length() {
        // n = 2, eps = 0.5 in the unit disk: offsets 0, ±0.5 per axis.
        let params = SteinhausParams::new(2, 0.5).unwrap();
        let set = steinhaus_clip(params, &ConvexDomain::unit_disk()).unwrap();
        let expected = 2.0 * (2.0 + 2.0 * 2.0 * 0.75f64.sqrt());
        assert!((set.total_length - expected).abs() < 1e-12);
        assert!((expected - 10.928).abs() < 1e-3);
    }

    #[test]
    fn steinhaus_chord_endpoints_on_boundary() {
        let domains = [
            ConvexDomain::<f64>::unit_disk(),
            ConvexDomain::square(Point::new(-0.2, 0.1), 1.3).unwrap(),
            ConvexDomain::reuleaux_width(1.0, Point::new(0.1, -0.05), 0.4).unwrap(),
        ];
        for domain in &domains {
            let set = steinhaus_clip(SteinhausParams::new(5, 0.11).unwrap(), domain).unwrap();
            assert!(!set.primitives.is_empty());
            for p in &set.primitives {
                if let Primitive::Segment { p0, p1 } = p {
                    assert!(domain.on_boundary(*p0), "residual {}", domain.boundary_distance(*p0));
                    assert!(domain.on_boundary(*p1), "residual {}", domain.boundary_distance(*p1));
                }
            }
        }
    }

    #[test]
    fn steinhaus_respects_cap() {
        let params = SteinhausParams::new(10, 1e-7).unwrap();
        let err = steinhaus_clip(params, &ConvexDomain::unit_disk()).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }

    #[test]
    fn steinhaus_parameter_rounding() {
        let d = ConvexDomain::<f64>::unit_disk();
        let (p, _) = steinhaus_for_length(1000.0, &d).unwrap();
        assert_eq!(p.n, 10);
        assert!((p.epsilon - 0.01).abs() < 1e-15);
        let (p, _) = steinhaus_for_length(8.0, &d).unwrap();
        assert_eq!(p.n, 2);
        assert!((p.epsilon - 0.25).abs() < 1e-15);
        assert!(steinhaus_for_length(-1.0, &d).is_err());
    }

    #[test]
    fn steinhaus_realized_length_matches_enumeration() {
        // Independent oracle: sum the disk chord formula over all line
        // offsets of every direction.
        let d = ConvexDomain::<f64>::unit_disk();
        let (p, set) = steinhaus_for_length(1000.0, &d).unwrap();
        let mut expected = 0.0;
        for _k in 0..p.n {
            let mut s = -(1.0 / p.epsilon).floor() as i64;
            while (s as f64) * p.epsilon <= 1.0 {
                let off: f64 = s as f64 * p.epsilon;
                if off.abs() < 1.0 {
                    expected += 2.0 * (1.0 - off * off).sqrt();
                }
                s += 1;
            }
        }
        assert!(
            (set.total_length - expected).abs() < 1e-9 * expected,
            "realized {} vs enumerated {}",
            set.total_length,
            expected
        );
        // Realized length scales like area * L for the unit disk.
        assert!(set.total_length > 1000.0 && set.total_length < 2.0 * PI * 1000.0);
    }

    #[test]
    fn steinhaus_length_scaling_ratio_stabilizes() {
        // total_length / (n / eps) approaches the domain area.
        let d = ConvexDomain::<f64>::square(Point::new(-0.5, -0.5), 1.0).unwrap();
        let mut ratios = Vec::new();
        for &(n, eps) in &[(5u32, 0.02), (10, 0.01), (20, 0.005)] {
            let set = steinhaus_clip(SteinhausParams::new(n, eps).unwrap(), &d).unwrap();
            ratios.push(set.total_length / (n as f64 / eps));
        }
        for w in ratios.windows(2) {
            assert!(
                (w[1] - w[0]).abs() / w[0] < 0.05,
                "ratios not stable: {ratios:?}"
            );
        }
    }

    #[test]
    fn radii_formula_small_cases() {
        // 2L/pi^2 = 1: no integer i < 1.
        let r = disk_circle_radii(PI * PI / 2.0);
        assert!(r.is_empty());
        // 2L/pi^2 = 2: single radius sqrt(3)/2.
        let r = disk_circle_radii(PI * PI);
        assert_eq!(r.len(), 1);
        assert!((r[0] - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn radii_formula_l500() {
        let r = disk_circle_radii(500.0f64);
        assert_eq!(r.len(), 101);
        assert!((r[0] - 0.999951).abs() < 1e-6);
        assert!(r.windows(2).all(|w| w[0] > w[1]), "strictly decreasing");
        assert!(r.iter().all(|&x| x > 0.0 && x < 1.0));
    }

    #[test]
    fn construction_hits_length_exactly() {
        for &l in &[0.5, PI * PI, 10.0, 100.0, 500.0, 1234.5] {
            let set = disk_construction(l).unwrap();
            assert!(
                (set.total_length - l).abs() <= 1e-9 * l,
                "L={l}: got {}",
                set.total_length
            );
            let recomputed = set.recompute_length();
            assert!((recomputed - l).abs() <= 1e-9 * l.max(1.0));
            for p in &set.primitives {
                if let Primitive::Circle { radius, .. } = p {
                    assert!(*radius < 1.0, "radius {radius} must stay inside the disk");
                } else {
                    panic!("expected circles");
                }
            }
        }
    }

    #[test]
    fn construction_circle_count_l500() {
        let set = disk_construction(500.0).unwrap();
        assert!(
            (101..=105).contains(&set.primitives.len()),
            "got {} circles",
            set.primitives.len()
        );
    }

    #[test]
    fn construction_small_case_arithmetic() {
        // L = pi^2: one formula circle of radius sqrt(3)/2, then a deficit
        // of pi^2 - pi sqrt(3) ~ 4.429 fixed by the adjustment.
        let l = PI * PI;
        let pre = disk_pre_adjustment_length(l);
        assert!((pre - PI * 3f64.sqrt()).abs() < 1e-12);
        assert!((l - pre - 4.429).abs() < 1e-3);
        let set = disk_construction(l).unwrap();
        assert!((set.total_length - l).abs() <= 1e-9 * l);
    }

    #[test]
    fn pre_adjustment_bound_over_sweep() {
        // |2 pi sum r_i - L| <= 8 pi across a log-spaced sweep.
        let mut l = 1.0f64;
        while l <= 3.0e4 {
            let gap = (disk_pre_adjustment_length(l) - l).abs();
            assert!(gap <= 8.0 * PI + 1e-9, "L={l}: gap {gap}");
            l *= 1.37;
        }
    }

    #[test]
    fn counting_bound_for_radii() {
        // |#{i: r_i >= r} - (2L/pi^2) sqrt(1-r^2)| <= 1 on a grid plus all
        // breakpoints.
        for &l in &[37.0, 500.0, 4321.0] {
            let radii = disk_circle_radii(l);
            let factor = 2.0 * l / (PI * PI);
            let check = |r: f64| {
                if !(0.0..1.0).contains(&r) {
                    return;
                }
                let count = radii.iter().filter(|&&ri| ri >= r).count() as f64;
                let target = factor * (1.0 - r * r).sqrt();
                assert!(
                    (count - target).abs() <= 1.0 + 1e-9,
                    "L={l} r={r}: count {count} target {target}"
                );
            };
            for j in 0..2000 {
                check(j as f64 / 2000.0);
            }
            for &ri in &radii {
                check(ri - 1e-12);
                check(ri + 1e-12);
            }
        }
    }

    #[test]
    fn set_motion_round_trip_is_identity() {
        let set = steinhaus_clip(
            SteinhausParams::new(3, 0.3).unwrap(),
            &ConvexDomain::<f64>::unit_disk(),
        )
        .unwrap();
        let v = Point::new(0.7, -1.1);
        let back = set
            .apply_motion(0.9, v)
            .apply_motion(-0.9, (-v).rotated(-0.9));
        assert_eq!(back.primitives.len(), set.primitives.len());
        for (a, b) in set.primitives.iter().zip(&back.primitives) {
            match (a, b) {
                (
                    Primitive::Segment { p0: a0, p1: a1 },
                    Primitive::Segment { p0: b0, p1: b1 },
                ) => {
                    assert!(a0.distance(*b0) < 1e-12);
                    assert!(a1.distance(*b1) < 1e-12);
                }
                _ => panic!("expected segments"),
            }
        }
        assert_eq!(back.total_length, set.total_length);
    }

    #[test]
    fn json_round_trip_is_stable() {
        let set = disk_construction(123.456).unwrap();
        let text = set.to_json().unwrap();
        let back: RectifiableSet<f64> = RectifiableSet::from_json(&text).unwrap();
        assert_eq!(set, back);
        // Second serialization is byte-identical.
        assert_eq!(text, back.to_json().unwrap());
    }

    #[test]
    fn json_rejects_corrupt_length() {
        let set = disk_construction(50.0).unwrap();
        let mut v: Value = serde_json::from_str(&set.to_json().unwrap()).unwrap();
        v["total_length"] = json!(999.0);
        assert!(RectifiableSet::<f64>::from_json(&v.to_string()).is_err());
    }
}
