//! Static SVG plot rendered from the CSV text alone.

use std::fmt::Write;

use super::table::{read_csv, Row};

const WIDTH: f64 = 840.0;
const HEIGHT: f64 = 520.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;

struct Frame {
    x0: f64,
    x1: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        LEFT + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - y.clamp(0.0, 1.0) * (HEIGHT - TOP - BOTTOM)
    }
}

fn polyline(out: &mut String, frame: &Frame, pts: &[(f64, f64)], color: &str, width: f64) {
    if pts.is_empty() {
        return;
    }
    let coords: Vec<String> = pts
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", frame.px(x), frame.py(y)))
        .collect();
    let _ = writeln!(
        out,
        r#"<polyline fill="none" stroke="{color}" stroke-width="{width}" points="{}"/>"#,
        coords.join(" ")
    );
}

/// Empirical IDS and closed form as polylines over the non-rational rows,
/// rational points as markers at their closed-form value.
pub fn render_svg(csv_text: &str) -> csv::Result<String> {
    let rows = read_csv(csv_text)?;
    let x0 = rows.iter().map(|r| r.x).fold(f64::INFINITY, f64::min).min(0.0);
    let x1 = rows.iter().map(|r| r.x).fold(f64::NEG_INFINITY, f64::max).max(4.0);
    let frame = Frame { x0, x1 };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    // axes and ticks
    let (bx, by) = (frame.py(0.0), frame.px(x0));
    let _ = writeln!(
        s,
        r#"<line x1="{by:.2}" y1="{bx:.2}" x2="{:.2}" y2="{bx:.2}" stroke="black"/>"#,
        frame.px(x1)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{by:.2}" y1="{bx:.2}" x2="{by:.2}" y2="{:.2}" stroke="black"/>"#,
        frame.py(1.0)
    );
    let mut tick = x0.ceil();
    while tick <= x1 {
        let px = frame.px(tick);
        let _ = writeln!(
            s,
            r#"<line x1="{px:.2}" y1="{bx:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/><text x="{px:.2}" y="{:.2}" font-size="13" text-anchor="middle">{tick}</text>"#,
            bx + 6.0,
            bx + 22.0
        );
        tick += 1.0;
    }
    for i in 0..=4 {
        let y = f64::from(i) * 0.25;
        let py = frame.py(y);
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{by:.2}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" font-size="13" text-anchor="end">{y}</text>"#,
            by - 6.0,
            by - 10.0,
            py + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-size="14" text-anchor="middle">x</text>"#,
        0.5 * (frame.px(x0) + frame.px(x1)),
        HEIGHT - 15.0
    );

    let curve = |f: fn(&Row) -> Option<f64>| -> Vec<(f64, f64)> {
        rows.iter()
            .filter(|r| !r.is_rational_point)
            .filter_map(|r| f(r).map(|y| (r.x, y)))
            .collect()
    };
    polyline(&mut s, &frame, &curve(|r| r.ids_closed), "#d95f02", 1.5);
    polyline(&mut s, &frame, &curve(|r| r.ids_empirical), "#1b9e77", 1.5);
    for r in rows.iter().filter(|r| r.is_rational_point) {
        if let Some(y) = r.ids_closed.or(r.ids_empirical) {
            let _ = writeln!(
                s,
                r##"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="#7570b3"/>"##,
                frame.px(r.x),
                frame.py(y)
            );
        }
    }

    let legend = [
        ("#1b9e77", "empirical IDS"),
        ("#d95f02", "closed form"),
        ("#7570b3", "rational points"),
    ];
    for (i, (color, label)) in legend.iter().enumerate() {
        let y = TOP + 10.0 + 18.0 * i as f64;
        let _ = writeln!(
            s,
            r#"<rect x="{:.2}" y="{:.2}" width="12" height="12" fill="{color}"/><text x="{:.2}" y="{:.2}" font-size="13">{label}</text>"#,
            LEFT + 15.0,
            y - 10.0,
            LEFT + 33.0,
            y
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::table::to_csv_string;

    #[test]
    fn svg_is_a_function_of_csv() {
        let rows = vec![
            Row {
                x: 0.5,
                ids_empirical: Some(0.1),
                ids_closed: Some(0.09),
                is_rational_point: false,
            },
            Row {
                x: 2.0,
                ids_empirical: Some(0.41),
                ids_closed: Some(0.41),
                is_rational_point: true,
            },
            Row {
                x: 3.5,
                ids_empirical: Some(0.6),
                ids_closed: Some(0.62),
                is_rational_point: false,
            },
        ];
        let csv = to_csv_string(&rows);
        let a = render_svg(&csv).unwrap();
        let b = render_svg(&csv).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert_eq!(a.matches("<polyline").count(), 2);
        assert_eq!(a.matches("<circle").count(), 1);
    }
}
