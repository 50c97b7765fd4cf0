//! SVG rendering of rank-2 alternating tilings: member sets become
//! vertices at `Σ_{i∈S} v_i` with `v_i` on the upper unit semicircle, and
//! tile-graph edges connect sets differing in one element. Floating point
//! is used here only for picture coordinates, never for decisions.

use omsep_core::separation::Collection;
use omsep_core::signed_set::bits;
use std::fmt::Write;

const CANVAS: f64 = 800.0;
const MARGIN: f64 = 40.0;

pub fn render_tiling(n: usize, collection: &Collection) -> String {
    let dirs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let theta = std::f64::consts::PI * (n - i) as f64 / (n + 1) as f64;
            (theta.cos(), theta.sin())
        })
        .collect();
    let points: Vec<(f64, f64)> = collection
        .sets
        .iter()
        .map(|&s| {
            bits(s).fold((0.0, 0.0), |(x, y), i| (x + dirs[i].0, y + dirs[i].1))
        })
        .collect();
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &points {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let scale = (CANVAS - 2.0 * MARGIN) / span;
    // Integer-scaled coordinates for diff-stable output.
    let place = |x: f64, y: f64| -> (i64, i64) {
        (
            (MARGIN + (x - min_x) * scale).round() as i64,
            (CANVAS - MARGIN - (y - min_y) * scale).round() as i64,
        )
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    for (a, &x) in collection.sets.iter().enumerate() {
        for (b, &y) in collection.sets.iter().enumerate().skip(a + 1) {
            if (x ^ y).count_ones() == 1 {
                let (x1, y1) = place(points[a].0, points[a].1);
                let (x2, y2) = place(points[b].0, points[b].1);
                let _ = writeln!(
                    out,
                    r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="1"/>"#
                );
            }
        }
    }
    for (i, &(px, py)) in points.iter().enumerate() {
        let (cx, cy) = place(px, py);
        let _ = writeln!(
            out,
            r#"  <circle cx="{cx}" cy="{cy}" r="4" fill="white" stroke="black"/>"#
        );
        let labels: Vec<String> = bits(collection.sets[i]).map(|e| (e + 1).to_string()).collect();
        let text = if labels.is_empty() {
            "∅".to_string()
        } else {
            labels.join("")
        };
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="11" font-family="monospace">{text}</text>"#,
            cx + 6,
            cy - 6
        );
    }
    out.push_str("</svg>\n");
    out
}
