//! Deterministic SVG rendering: domain boundary, set primitives, and an
//! optional highlighted witness line. Identical inputs produce identical
//! bytes (fixed float formatting, no timestamps).

use std::fmt::Write as _;

use crofton::geom::{reuleaux_boundary_arcs, DomainShape};
use crofton::{ConvexDomain, Line, Point, RectifiableSet};

#[derive(Clone, Copy, Debug)]
pub struct Style {
    pub width_px: f64,
    pub stroke_width: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            width_px: 800.0,
            stroke_width: 1.0,
        }
    }
}

struct Frame {
    min: Point,
    scale: f64,
    height: f64,
}

impl Frame {
    fn map(&self, p: Point) -> (f64, f64) {
        (
            (p.x - self.min.x) * self.scale,
            self.height - (p.y - self.min.y) * self.scale,
        )
    }
}

fn fmt(v: f64) -> String {
    // Fixed precision keeps the output byte-stable; -0.0000 would not.
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

pub fn render_svg(
    set: &RectifiableSet,
    domain: &ConvexDomain,
    witness: Option<Line>,
    style: Style,
) -> String {
    // Frame the domain with an 8% margin; the set is inside it by contract
    // (out-of-domain primitives still render, just possibly clipped away).
    let (xmin, xmax) = axis_extent(domain, 0.0);
    let (ymin, ymax) = axis_extent(domain, std::f64::consts::FRAC_PI_2);
    let margin = 0.08 * (xmax - xmin).max(ymax - ymin);
    let min = Point::new(xmin - margin, ymin - margin);
    let max = Point::new(xmax + margin, ymax + margin);
    let scale = style.width_px / (max.x - min.x);
    let height = (max.y - min.y) * scale;
    let frame = Frame { min, scale, height };

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}">"#,
        fmt(style.width_px),
        fmt(height)
    );

    let _ = writeln!(
        out,
        r##"<g fill="none" stroke="#303030" stroke-width="{}">"##,
        fmt(2.0 * style.stroke_width)
    );
    out.push_str(&domain_path(domain, &frame));
    let _ = writeln!(out, "</g>");

    let _ = writeln!(
        out,
        r##"<g fill="none" stroke="#1f77b4" stroke-width="{}">"##,
        fmt(style.stroke_width)
    );
    for prim in &set.primitives {
        out.push_str(&primitive_path(prim, &frame));
    }
    let _ = writeln!(out, "</g>");

    if let Some(line) = witness {
        if let Some((a, b)) = clip_line_to_box(line, min, max) {
            let (x1, y1) = frame.map(a);
            let (x2, y2) = frame.map(b);
            let _ = writeln!(
                out,
                r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#d62728" stroke-width="{}"/>"##,
                fmt(x1),
                fmt(y1),
                fmt(x2),
                fmt(y2),
                fmt(2.0 * style.stroke_width)
            );
        }
    }
    let _ = writeln!(out, "</svg>");
    out
}

fn axis_extent(domain: &ConvexDomain, theta: f64) -> (f64, f64) {
    domain.support_interval(theta)
}

fn domain_path(domain: &ConvexDomain, frame: &Frame) -> String {
    match domain.shape() {
        DomainShape::Disk { center, radius } => {
            let (cx, cy) = frame.map(*center);
            format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n",
                fmt(cx),
                fmt(cy),
                fmt(radius * frame.scale)
            )
        }
        DomainShape::ConvexPolygon { vertices } => {
            let mut d = String::new();
            for (i, &v) in vertices.iter().enumerate() {
                let (x, y) = frame.map(v);
                let _ = write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, fmt(x), fmt(y));
            }
            format!("<path d=\"{d} Z\"/>\n")
        }
        DomainShape::Reuleaux { corners } => {
            let arcs = reuleaux_boundary_arcs(corners);
            let start = arcs[0].0 + Point::unit(arcs[0].1) * domain.diameter();
            let (sx, sy) = frame.map(start);
            let mut d = format!("M{} {}", fmt(sx), fmt(sy));
            for (center, a0, span) in arcs {
                let end = center + Point::unit(a0 + span) * domain.diameter();
                let (ex, ey) = frame.map(end);
                let r = fmt(domain.diameter() * frame.scale);
                // Counterclockwise in math coordinates is sweep 0 after the
                // vertical flip; spans here are pi/3, so large-arc is 0.
                let _ = write!(d, " A{r} {r} 0 0 0 {} {}", fmt(ex), fmt(ey));
            }
            format!("<path d=\"{d} Z\"/>\n")
        }
    }
}

fn primitive_path(prim: &crofton::Primitive, frame: &Frame) -> String {
    use crofton::geom::Primitive as P;
    match *prim {
        P::Segment { p0, p1 } => {
            let (x1, y1) = frame.map(p0);
            let (x2, y2) = frame.map(p1);
            format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                fmt(x1),
                fmt(y1),
                fmt(x2),
                fmt(y2)
            )
        }
        P::Circle { center, radius } => {
            let (cx, cy) = frame.map(center);
            format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n",
                fmt(cx),
                fmt(cy),
                fmt(radius * frame.scale)
            )
        }
        P::Arc {
            center,
            radius,
            angle_start,
            angle_span,
        } => {
            // Split spans above pi so every piece is a minor arc.
            let pieces = if angle_span > std::f64::consts::PI { 2 } else { 1 };
            let step = angle_span / pieces as f64;
            let start = center + Point::unit(angle_start) * radius;
            let (sx, sy) = frame.map(start);
            let mut d = format!("M{} {}", fmt(sx), fmt(sy));
            for k in 0..pieces {
                let end = center + Point::unit(angle_start + step * (k + 1) as f64) * radius;
                let (ex, ey) = frame.map(end);
                let r = fmt(radius * frame.scale);
                let _ = write!(d, " A{r} {r} 0 0 0 {} {}", fmt(ex), fmt(ey));
            }
            format!("<path d=\"{d}\"/>\n")
        }
    }
}

/// Clip an infinite line to an axis-aligned box; `None` when it misses.
fn clip_line_to_box(line: Line, min: Point, max: Point) -> Option<(Point, Point)> {
    let dir = line.direction();
    let base = line.foot();
    let mut t0 = f64::NEG_INFINITY;
    let mut t1 = f64::INFINITY;
    for (b, d, lo, hi) in [
        (base.x, dir.x, min.x, max.x),
        (base.y, dir.y, min.y, max.y),
    ] {
        if d.abs() < 1e-15 {
            if b < lo || b > hi {
                return None;
            }
            continue;
        }
        let (a, c) = ((lo - b) / d, (hi - b) / d);
        let (a, c) = if a <= c { (a, c) } else { (c, a) };
        t0 = t0.max(a);
        t1 = t1.min(c);
    }
    (t0 < t1).then(|| (line.point_at(t0), line.point_at(t1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crofton::construct::disk_construction;

    #[test]
    fn empty_set_renders_domain_outline_only() {
        let set = RectifiableSet::empty();
        let svg = render_svg(&set, &ConvexDomain::unit_disk(), None, Style::default());
        assert!(svg.contains("<circle"));
        assert!(!svg.contains("<line"));
        assert!(svg.starts_with("<?xml"));
    }

    #[test]
    fn rendering_is_reproducible() {
        let set = disk_construction(100.0).unwrap();
        let domain = ConvexDomain::unit_disk();
        let witness = Line::new(0.3, 0.4).unwrap();
        let a = render_svg(&set, &domain, Some(witness), Style::default());
        let b = render_svg(&set, &domain, Some(witness), Style::default());
        assert_eq!(a, b);
        assert!(a.contains("#d62728"));
    }

    #[test]
    fn reuleaux_outline_is_three_arcs() {
        let set = RectifiableSet::empty();
        let domain = ConvexDomain::reuleaux_width(1.0, Point::origin(), 0.0).unwrap();
        let svg = render_svg(&set, &domain, None, Style::default());
        let arcs = svg.matches(" A").count();
        assert_eq!(arcs, 3);
    }
}
