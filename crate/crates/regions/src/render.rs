use std::collections::BTreeSet;
use std::fmt::Write;

use crate::region::{covering_points, covering_points_in_strip, Cell, Point, Region};

fn points_for(r: &Region, strip: Option<i64>) -> BTreeSet<Point> {
    match strip {
        Some(n) => covering_points_in_strip(r, n),
        None => covering_points(r),
    }
}

fn frame(r: &Region, strip: Option<i64>) -> (i64, i64, i64, i64) {
    let (x0, y0, x1, y1) = r.bounds().unwrap_or_else(|| {
        let (x, y) = r.anchor().unwrap_or((0, 0));
        (x, y, x - 1, y - 1)
    });
    let mut lo = y0.min(0);
    let mut hi = (y1 + 1).max(0);
    if let Some(n) = strip {
        lo = lo.min(0);
        hi = hi.max(n);
    }
    (x0.min(x1 + 1) - 1, lo, x1.max(x0 - 1) + 2, hi)
}

/// Text picture at doubled resolution: `#` cells (white class) and `%` cells (black class),
/// `o` covering points, `.` other lattice points, `-` along `y = 0` and `=` along `y = n`.
pub fn ascii(r: &Region, strip: Option<i64>) -> String {
    let pts = points_for(r, strip);
    let (xl, yl, xh, yh) = frame(r, strip);
    let mut out = String::new();
    for row in (2 * yl..=2 * yh).rev() {
        let mut line = String::new();
        for col in 2 * xl..=2 * xh {
            let ch = match (col.rem_euclid(2), row.rem_euclid(2)) {
                (1, 1) => {
                    let c = Cell::new((col - 1) / 2, (row - 1) / 2);
                    if !r.contains(c) {
                        ' '
                    } else if (c.x + c.y).rem_euclid(2) == 0 {
                        '#'
                    } else {
                        '%'
                    }
                }
                (0, 0) => {
                    let p = (col / 2, row / 2);
                    if pts.contains(&p) {
                        'o'
                    } else if Some(p.1) == strip {
                        '='
                    } else if p.1 == 0 {
                        '-'
                    } else {
                        '.'
                    }
                }
                _ if Some(row / 2) == strip && row % 2 == 0 => '=',
                _ if row == 0 => '-',
                _ => ' ',
            };
            line.push(ch);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// SVG picture: cells shaded by checkerboard class, covering points as dots, and the lines
/// `y = 0` and `y = n` as guides.
pub fn svg(r: &Region, strip: Option<i64>) -> String {
    const S: i64 = 20;
    let pts = points_for(r, strip);
    let (xl, yl, xh, yh) = frame(r, strip);
    let (w, h) = ((xh - xl) * S, (yh - yl) * S);
    let sx = |x: i64| (x - xl) * S;
    let sy = |y: i64| (yh - y) * S;
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    for c in r.cells() {
        let fill = if (c.x + c.y).rem_euclid(2) == 0 { "#f4f4f4" } else { "#9aa7b8" };
        let _ = writeln!(
            out,
            r##"<rect x="{}" y="{}" width="{S}" height="{S}" fill="{fill}" stroke="#333" stroke-width="1"/>"##,
            sx(c.x),
            sy(c.y + 1)
        );
    }
    let mut guide = |y: i64, color: &str| {
        let _ = writeln!(out, r#"<line x1="0" y1="{0}" x2="{w}" y2="{0}" stroke="{color}" stroke-width="2"/>"#, sy(y));
    };
    guide(0, "#c0392b");
    if let Some(n) = strip {
        guide(n, "#2980b9");
    }
    for &(x, y) in &pts {
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="3" fill="black"/>"#, sx(x), sy(y));
    }
    out.push_str("</svg>\n");
    out
}
