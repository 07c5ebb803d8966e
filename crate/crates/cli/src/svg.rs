//! Static figures of fans. Output depends only on the fan.

use std::f64::consts::PI;
use std::fmt::Write as _;

use gitq::gitfan::GITFan;
use gitq::Cone;

const SIZE: f64 = 400.0;
const HALF: f64 = 180.0;
const PALETTE: [&str; 8] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
];

fn px(x: f64, y: f64) -> String {
    format!("{:.2},{:.2}", SIZE / 2.0 + x, SIZE / 2.0 - y)
}

fn to_f(v: &[i64]) -> (f64, f64) {
    (v[0] as f64, v[1] as f64)
}

/// Where the ray through `d` leaves the viewport square.
fn boundary(d: (f64, f64)) -> (f64, f64) {
    let t = HALF / d.0.abs().max(d.1.abs());
    (d.0 * t, d.1 * t)
}

fn angle(d: (f64, f64)) -> f64 {
    d.1.atan2(d.0).rem_euclid(2.0 * PI)
}

fn cross(a: (f64, f64), b: (f64, f64)) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

/// Polygon of the sector from `a` counterclockwise to `b`, clipped to the
/// viewport; `full` covers the whole square.
fn sector(a: (f64, f64), b: (f64, f64), full: bool) -> Vec<(f64, f64)> {
    let corners = [(HALF, HALF), (-HALF, HALF), (-HALF, -HALF), (HALF, -HALF)];
    if full {
        return corners.to_vec();
    }
    let start = angle(a);
    let mut span = (angle(b) - start).rem_euclid(2.0 * PI);
    if span == 0.0 {
        span = 2.0 * PI;
    }
    let mut inner: Vec<(f64, (f64, f64))> = corners
        .iter()
        .map(|&c| ((angle(c) - start).rem_euclid(2.0 * PI), c))
        .filter(|&(t, _)| t > 0.0 && t < span)
        .collect();
    inner.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut pts = vec![(0.0, 0.0), boundary(a)];
    pts.extend(inner.into_iter().map(|(_, c)| c));
    pts.push(boundary(b));
    pts
}

fn chamber_polygon(c: &Cone) -> Vec<(f64, f64)> {
    match (c.lineality().len(), c.rays()) {
        (2, _) => sector((1.0, 0.0), (1.0, 0.0), true),
        (1, [r]) => {
            let l = to_f(&c.lineality()[0]);
            let r = to_f(r);
            let s = if cross(l, r) > 0.0 { l } else { (-l.0, -l.1) };
            sector(s, (-s.0, -s.1), false)
        }
        (0, [r1, r2]) => {
            let (a, b) = (to_f(r1), to_f(r2));
            if cross(a, b) > 0.0 {
                sector(a, b, false)
            } else {
                sector(b, a, false)
            }
        }
        _ => Vec::new(),
    }
}

fn label(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn header(out: &mut String) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r##"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>"##);
}

fn polygon(out: &mut String, pts: &[String], i: usize) {
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="{}" fill-opacity="0.8" stroke="none"/>"##,
        pts.join(" "),
        PALETTE[i % PALETTE.len()]
    );
}

fn segment(out: &mut String, a: &str, b: &str) {
    let (x1, y1) = a.split_once(',').expect("formatted pair");
    let (x2, y2) = b.split_once(',').expect("formatted pair");
    let _ = writeln!(
        out,
        r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#000000" stroke-width="1.5"/>"##
    );
}

fn text(out: &mut String, at: &str, s: &str) {
    let (x, y) = at.split_once(',').expect("formatted pair");
    let _ = writeln!(
        out,
        r##"<text x="{x}" y="{y}" font-family="monospace" font-size="11" text-anchor="middle">{s}</text>"##
    );
}

/// Chambers shaded in canonical order, one-dimensional cones drawn to the
/// viewport edge and labeled by their primitive generators.
pub fn fan_2d(fan: &GITFan) -> String {
    let mut out = String::new();
    header(&mut out);
    for (i, c) in fan.chambers().iter().enumerate() {
        let pts: Vec<String> = chamber_polygon(c).into_iter().map(|(x, y)| px(x, y)).collect();
        polygon(&mut out, &pts, i);
    }
    let one_dim = fan.cones().filter(|c| c.dim() == 1);
    for c in one_dim {
        let dirs: Vec<Vec<i64>> = match c.rays() {
            [r] => vec![r.clone()],
            _ => {
                let l = &c.lineality()[0];
                vec![l.clone(), l.iter().map(|x| -x).collect()]
            }
        };
        for d in dirs {
            let (x, y) = boundary(to_f(&d));
            segment(&mut out, &px(0.0, 0.0), &px(x, y));
            text(&mut out, &px(x * 0.9, y * 0.9 + 4.0), &label(&d));
        }
    }
    out.push_str("</svg>\n");
    out
}

fn dotf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Orthonormal basis of the plane orthogonal to `a` in three dimensions.
fn plane_basis(a: &[f64]) -> [Vec<f64>; 2] {
    let norm = dotf(a, a).sqrt();
    let n: Vec<f64> = a.iter().map(|x| x / norm).collect();
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for i in 0..3 {
        let mut v = vec![0.0; 3];
        v[i] = 1.0;
        for b in std::iter::once(&n).chain(basis.iter()) {
            let t = dotf(&v, b);
            for k in 0..3 {
                v[k] -= t * b[k];
            }
        }
        let len = dotf(&v, &v).sqrt();
        if len > 1e-9 && basis.len() < 2 {
            basis.push(v.iter().map(|x| x / len).collect());
        }
    }
    [basis[0].clone(), basis[1].clone()]
}

/// The fan cut by the affine plane `a·x = b`, which every ray must meet.
pub fn fan_sliced(fan: &GITFan, a: &[f64], b: f64) -> Result<String, String> {
    if !fan.support().lineality().is_empty() {
        return Err("a slice needs a pointed support".into());
    }
    let [u, v] = plane_basis(a);
    let meet = |r: &[i64]| -> Result<(f64, f64), String> {
        let rf: Vec<f64> = r.iter().map(|&x| x as f64).collect();
        let t = dotf(a, &rf);
        if t <= 0.0 || b <= 0.0 {
            return Err(format!("the ray {} does not meet the slice", label(r)));
        }
        let p: Vec<f64> = rf.iter().map(|x| x * b / t).collect();
        Ok((dotf(&p, &u), dotf(&p, &v)))
    };
    let mut all = Vec::new();
    for r in fan.support().rays() {
        all.push(meet(r)?);
    }
    let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
    for p in &all {
        lo = (lo.0.min(p.0), lo.1.min(p.1));
        hi = (hi.0.max(p.0), hi.1.max(p.1));
    }
    let scale = 2.0 * HALF / (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9);
    let mid = ((lo.0 + hi.0) / 2.0, (lo.1 + hi.1) / 2.0);
    let place = |p: (f64, f64)| px((p.0 - mid.0) * scale, (p.1 - mid.1) * scale);
    let mut out = String::new();
    header(&mut out);
    for (i, c) in fan.chambers().iter().enumerate() {
        let mut pts = c.rays().iter().map(|r| meet(r)).collect::<Result<Vec<_>, _>>()?;
        let n = pts.len() as f64;
        let centre = (pts.iter().map(|p| p.0).sum::<f64>() / n, pts.iter().map(|p| p.1).sum::<f64>() / n);
        pts.sort_by(|p, q| {
            let ap = (p.1 - centre.1).atan2(p.0 - centre.0);
            let aq = (q.1 - centre.1).atan2(q.0 - centre.0);
            ap.total_cmp(&aq)
        });
        let pts: Vec<String> = pts.into_iter().map(place).collect();
        polygon(&mut out, &pts, i);
    }
    for w in fan.cones().filter(|c| c.dim() == 2) {
        if let [r1, r2] = w.rays() {
            segment(&mut out, &place(meet(r1)?), &place(meet(r2)?));
        }
    }
    for r in fan.cones().filter(|c| c.dim() == 1) {
        let p = place(meet(&r.rays()[0])?);
        let (x, y) = p.split_once(',').expect("formatted pair");
        let _ = writeln!(out, r##"<circle cx="{x}" cy="{y}" r="2.5" fill="#000000"/>"##);
        let y_label: f64 = y.parse::<f64>().expect("formatted number") - 6.0;
        text(&mut out, &format!("{x},{y_label:.2}"), &label(&r.rays()[0]));
    }
    out.push_str("</svg>\n");
    Ok(out)
}
