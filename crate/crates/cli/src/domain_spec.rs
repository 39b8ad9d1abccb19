//! Domain specification grammar shared by all subcommands:
//!
//! - `disk[:r[:cx,cy]]` — disk of radius `r` (default 1) centered at
//!   `(cx, cy)` (default origin)
//! - `square:side[:cx,cy]` — axis-aligned square; anchored with its lower
//!   left corner at the origin unless a center is given
//! - `polygon:x1,y1;x2,y2;...` — strictly convex counterclockwise polygon
//! - `reuleaux:width[:cx,cy[,rot]]` — Reuleaux triangle of the given width,
//!   centroid at `(cx, cy)` (default origin), rotated by `rot` radians
//!
//! Poses are explicit because the evaluator never recenters: where the
//! domain sits relative to the origin changes the clipped Steinhaus sets.

use anyhow::{anyhow, bail, Context, Result};
use crofton::{ConvexDomain, Point};

pub fn parse_domain(spec: &str) -> Result<ConvexDomain> {
    let mut parts = spec.split(':');
    let kind = parts.next().unwrap_or_default();
    let rest: Vec<&str> = parts.collect();
    match kind {
        "disk" => {
            let radius = match rest.first() {
                Some(s) => parse_num(s)?,
                None => 1.0,
            };
            let center = match rest.get(1) {
                Some(s) => parse_point(s)?,
                None => Point::origin(),
            };
            if rest.len() > 2 {
                bail!("disk spec takes at most disk:r:cx,cy");
            }
            Ok(ConvexDomain::disk(center, radius)?)
        }
        "square" => {
            let side = parse_num(
                rest.first()
                    .ok_or_else(|| anyhow!("square spec needs a side: square:side"))?,
            )?;
            let corner = match rest.get(1) {
                Some(s) => {
                    let c = parse_point(s)?;
                    c - Point::new(side / 2.0, side / 2.0)
                }
                None => Point::origin(),
            };
            if rest.len() > 2 {
                bail!("square spec takes at most square:side:cx,cy");
            }
            Ok(ConvexDomain::square(corner, side)?)
        }
        "polygon" => {
            let body = rest
                .first()
                .ok_or_else(|| anyhow!("polygon spec needs vertices: polygon:x1,y1;x2,y2;..."))?;
            let vertices = body
                .split(';')
                .map(parse_point)
                .collect::<Result<Vec<_>>>()?;
            Ok(ConvexDomain::polygon(vertices)?)
        }
        "reuleaux" => {
            let width = parse_num(
                rest.first()
                    .ok_or_else(|| anyhow!("reuleaux spec needs a width: reuleaux:width"))?,
            )?;
            let (centroid, rotation) = match rest.get(1) {
                Some(s) => {
                    let nums = parse_nums(s)?;
                    match nums.as_slice() {
                        [cx, cy] => (Point::new(*cx, *cy), 0.0),
                        [cx, cy, rot] => (Point::new(*cx, *cy), *rot),
                        _ => bail!("reuleaux pose must be cx,cy or cx,cy,rot"),
                    }
                }
                None => (Point::origin(), 0.0),
            };
            Ok(ConvexDomain::reuleaux_width(width, centroid, rotation)?)
        }
        other => bail!(
            "unknown domain kind {other:?}; expected disk, square, polygon or reuleaux"
        ),
    }
}

fn parse_num(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .with_context(|| format!("invalid number {s:?}"))
}

fn parse_nums(s: &str) -> Result<Vec<f64>> {
    s.split(',').map(parse_num).collect()
}

fn parse_point(s: &str) -> Result<Point> {
    match parse_nums(s)?.as_slice() {
        [x, y] => Ok(Point::new(*x, *y)),
        _ => bail!("expected a point as x,y in {s:?}"),
    }
}

/// Comma-separated list of lengths, supporting scientific notation.
pub fn parse_length_list(s: &str) -> Result<Vec<f64>> {
    let list = parse_nums(s)?;
    if list.is_empty() {
        bail!("empty length list");
    }
    Ok(list)
}
