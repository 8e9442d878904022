//! SVG drawings of cylinder approximations and, optionally, the rays from a
//! viewpoint that bracket each cylinder.

use std::f64::consts::TAU;
use std::fmt::Write;

use ssvis_core::ifs::FloatMap;
use ssvis_core::{Error, Ifs, Point};

/// Target size of the longer side, in SVG user units.
const CANVAS: f64 = 800.0;
const MARGIN: f64 = 20.0;

struct Frame {
    min: Point,
    max: Point,
    scale: f64,
}

impl Frame {
    fn new(mut min: Point, mut max: Point) -> Self {
        let span = (max[0] - min[0]).max(max[1] - min[1]).max(f64::MIN_POSITIVE);
        let pad = span * 0.02;
        for k in 0..2 {
            min[k] -= pad;
            max[k] += pad;
        }
        let span = (max[0] - min[0]).max(max[1] - min[1]);
        Frame { min, max, scale: CANVAS / span }
    }

    fn x(&self, p: Point) -> f64 {
        MARGIN + (p[0] - self.min[0]) * self.scale
    }

    /// SVG's y axis points down.
    fn y(&self, p: Point) -> f64 {
        MARGIN + (self.max[1] - p[1]) * self.scale
    }

    fn width(&self) -> f64 {
        2.0 * MARGIN + (self.max[0] - self.min[0]) * self.scale
    }

    fn height(&self) -> f64 {
        2.0 * MARGIN + (self.max[1] - self.min[1]) * self.scale
    }
}

fn corners(lo: Point, hi: Point) -> [Point; 4] {
    [[lo[0], lo[1]], [hi[0], lo[1]], [hi[0], hi[1]], [lo[0], hi[1]]]
}

/// Maps of all words of length `depth`, in lexicographic order.
fn level_maps(ifs: &Ifs, depth: usize) -> Result<Vec<FloatMap>, Error> {
    let m = ifs.len();
    let budget = ifs.limits().max_cylinders;
    let count = (m as u128).checked_pow(depth as u32).unwrap_or(u128::MAX);
    if count > budget as u128 {
        return Err(Error::Budget { limit: budget, depth_reached: 0 });
    }
    let mut maps = vec![FloatMap::IDENTITY];
    for _ in 0..depth {
        maps = maps.iter().flat_map(|f| (0..m as u8).map(move |i| f.compose(ifs.float_map(i)))).collect();
    }
    Ok(maps)
}

/// Angular extent `(start, end)` of `points` seen from `a`, going
/// counter-clockwise from `start`.
fn bracket(a: Point, points: &[Point]) -> (f64, f64) {
    let angle = |p: Point| (p[1] - a[1]).atan2(p[0] - a[0]);
    let c: Point = [
        points.iter().map(|p| p[0]).sum::<f64>() / points.len() as f64,
        points.iter().map(|p| p[1]).sum::<f64>() / points.len() as f64,
    ];
    let base = angle(c);
    let offsets = points.iter().map(|&p| {
        let d = (angle(p) - base).rem_euclid(TAU);
        if d > TAU / 2.0 {
            d - TAU
        } else {
            d
        }
    });
    let (lo, hi) = offsets.fold((0.0f64, 0.0f64), |(lo, hi), d| (lo.min(d), hi.max(d)));
    (base + lo, base + hi)
}

/// Level-`depth` cylinders as images of the attractor's bounding box, plus
/// the viewpoint and bracketing rays when `viewpoint` is given.
pub fn render_svg(ifs: &Ifs, depth: usize, viewpoint: Option<Point>) -> Result<String, Error> {
    let (lo, hi) = ifs.diameter().bounding_box();
    let maps = level_maps(ifs, depth)?;
    let (mut min, mut max) = (lo, hi);
    if let Some(a) = viewpoint {
        for k in 0..2 {
            min[k] = min[k].min(a[k]);
            max[k] = max[k].max(a[k]);
        }
    }
    let frame = Frame::new(min, max);
    let box_corners = corners(lo, hi);

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.3}" height="{h:.3}" viewBox="0 0 {w:.3} {h:.3}">"#,
        w = frame.width(),
        h = frame.height()
    )
    .unwrap();
    writeln!(
        out,
        r#"<rect class="background" x="0" y="0" width="{:.3}" height="{:.3}" fill="white"/>"#,
        frame.width(),
        frame.height()
    )
    .unwrap();
    writeln!(out, r##"<g class="cylinders" fill="#222" fill-opacity="0.85" stroke="none">"##).unwrap();
    let mut images = Vec::with_capacity(maps.len());
    for f in &maps {
        let pts = box_corners.map(|p| f.apply(p));
        let axis_aligned = f.lin[0][1] == 0.0 && f.lin[1][0] == 0.0;
        if axis_aligned {
            let xs = pts.map(|p| frame.x(p));
            let ys = pts.map(|p| frame.y(p));
            let x0 = xs.iter().copied().fold(f64::INFINITY, f64::min);
            let x1 = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let y0 = ys.iter().copied().fold(f64::INFINITY, f64::min);
            let y1 = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            writeln!(
                out,
                r#"<rect class="cylinder" x="{x0:.3}" y="{y0:.3}" width="{:.3}" height="{:.3}"/>"#,
                x1 - x0,
                y1 - y0
            )
            .unwrap();
        } else {
            let mut d = String::new();
            for (k, p) in pts.iter().enumerate() {
                write!(d, "{}{:.3},{:.3} ", if k == 0 { "M" } else { "L" }, frame.x(*p), frame.y(*p)).unwrap();
            }
            d.push('Z');
            writeln!(out, r#"<path class="cylinder" d="{d}"/>"#).unwrap();
        }
        images.push(pts);
    }
    writeln!(out, "</g>").unwrap();

    if let Some(a) = viewpoint {
        let reach = 2.0 * ((max[0] - min[0]).hypot(max[1] - min[1]));
        writeln!(out, r##"<g class="rays" stroke="#c33" stroke-width="0.5" stroke-opacity="0.6">"##).unwrap();
        for pts in &images {
            let (s, e) = bracket(a, pts);
            for t in [s, e] {
                let end = [a[0] + reach * t.cos(), a[1] + reach * t.sin()];
                writeln!(
                    out,
                    r#"<line class="ray" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
                    frame.x(a),
                    frame.y(a),
                    frame.x(end),
                    frame.y(end)
                )
                .unwrap();
            }
        }
        writeln!(out, "</g>").unwrap();
        writeln!(
            out,
            r##"<circle class="viewpoint" cx="{:.3}" cy="{:.3}" r="4" fill="#c33"/>"##,
            frame.x(a),
            frame.y(a)
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
