//! Staircase plots for `d = 2`.
//!
//! The polyhedron is clipped to a square window and shaded; when the
//! complement is bounded it gets its own fill. Coordinates are printed with
//! two decimals, so the output is byte-identical across runs.

use std::fmt::Write;

use newtonpoly::geometry::{check_cofinite, format_point};
use newtonpoly::{Error, Polyhedron, Rational};
use num_traits::ToPrimitive;

const UNIT: f64 = 40.0;
const MARGIN: f64 = 40.0;

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().expect("finite coordinates")
}

pub fn render(p: &Polyhedron) -> Result<String, Error> {
    if p.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            dim: p.dim(),
            operation: "SVG plots",
        });
    }
    let verts: Vec<(f64, f64)> = p.vertices().iter().map(|v| (to_f64(&v[0]), to_f64(&v[1]))).collect();
    let top = verts.iter().fold(0.0f64, |m, (x, y)| m.max(*x).max(*y)).ceil() + 1.0;
    let size = top * UNIT + 2.0 * MARGIN;
    let px = |x: f64| MARGIN + x * UNIT;
    let py = |y: f64| size - MARGIN - y * UNIT;
    let pt = |(x, y): (f64, f64)| format!("{:.2},{:.2}", px(x), py(y));

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}" font-family="sans-serif" font-size="11">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    let (first, last) = (verts[0], verts[verts.len() - 1]);
    let mut region = vec![(first.0, top), first];
    region.extend(verts.iter().skip(1).copied());
    region.extend([(top, last.1), (top, top)]);
    let region: Vec<String> = region.into_iter().map(pt).collect();
    writeln!(s, r##"<polygon points="{}" fill="#9ecae1" stroke="none"/>"##, region.join(" ")).unwrap();

    if check_cofinite(p).is_ok() {
        let mut hole = vec![(0.0, 0.0)];
        hole.extend(verts.iter().copied());
        let hole: Vec<String> = hole.into_iter().map(pt).collect();
        writeln!(s, r##"<polygon points="{}" fill="#fdd0a2" stroke="none"/>"##, hole.join(" ")).unwrap();
    }

    let boundary: Vec<String> = std::iter::once((first.0, top))
        .chain(verts.iter().copied())
        .chain(std::iter::once((top, last.1)))
        .map(pt)
        .collect();
    writeln!(
        s,
        r##"<polyline points="{}" fill="none" stroke="#08519c" stroke-width="2"/>"##,
        boundary.join(" ")
    )
    .unwrap();

    writeln!(
        s,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/>"#,
        px(0.0),
        py(0.0),
        px(top),
        py(0.0)
    )
    .unwrap();
    writeln!(
        s,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/>"#,
        px(0.0),
        py(0.0),
        px(0.0),
        py(top)
    )
    .unwrap();
    for k in 1..=(top as u32) {
        let k = k as f64;
        writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{k}</text>"#, px(k), py(0.0) + 14.0).unwrap();
        writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{k}</text>"#, px(0.0) - 6.0, py(k) + 4.0).unwrap();
    }
    for (v, q) in verts.iter().zip(p.vertices()) {
        writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="black"/>"#, px(v.0), py(v.1)).unwrap();
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            px(v.0) + 5.0,
            py(v.1) - 5.0,
            format_point(q)
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}
