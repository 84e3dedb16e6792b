//! Deterministic SVG drawings of colored point sets and straight-line
//! edges.

use std::fmt::Write;

use double_chain::chains::Color;
use double_chain::Point;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    pub radius: f64,
    pub black_fill: String,
    pub white_fill: String,
    pub outline: String,
    pub edge_stroke: String,
    pub edge_width: f64,
    /// Drawing area, margins excluded.
    pub width: f64,
    pub height: f64,
    pub margin: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            radius: 4.0,
            black_fill: "#000000".into(),
            white_fill: "#ffffff".into(),
            outline: "#000000".into(),
            edge_stroke: "#4060a0".into(),
            edge_width: 1.0,
            width: 800.0,
            height: 600.0,
            margin: 20.0,
        }
    }
}

/// Maps point coordinates into the viewport. Axes are scaled separately
/// (double-chains are far taller than wide) and `y` is negated because SVG
/// counts downward, so the picture keeps its orientation.
#[derive(Debug, Clone, Copy)]
struct Viewport {
    min_x: f64,
    max_y: f64,
    sx: f64,
    sy: f64,
    margin: f64,
}

impl Viewport {
    fn fit(points: &[Point], style: &RenderStyle) -> Self {
        let xs = points.iter().map(|p| p.x() as f64);
        let ys = points.iter().map(|p| p.y() as f64);
        let (min_x, max_x) = xs.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), x| (a.min(x), b.max(x)));
        let (min_y, max_y) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), y| (a.min(y), b.max(y)));
        let span = |lo: f64, hi: f64| if hi > lo { hi - lo } else { 1.0 };
        Viewport {
            min_x: if min_x.is_finite() { min_x } else { 0.0 },
            max_y: if max_y.is_finite() { max_y } else { 0.0 },
            sx: style.width / span(min_x, max_x),
            sy: style.height / span(min_y, max_y),
            margin: style.margin,
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (
            self.margin + (p.x() as f64 - self.min_x) * self.sx,
            self.margin + (self.max_y - p.y() as f64) * self.sy,
        )
    }
}

/// Renders edges first, then one circle per point. `edges` index into
/// `points`.
pub fn render_svg(points: &[Point], colors: &[Color], edges: &[(usize, usize)], style: &RenderStyle) -> String {
    let vp = Viewport::fit(points, style);
    let (w, h) = (style.width + 2.0 * style.margin, style.height + 2.0 * style.margin);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#f8f8f8"/>"##);
    for &(a, b) in edges {
        let (x1, y1) = vp.map(points[a]);
        let (x2, y2) = vp.map(points[b]);
        let _ = writeln!(
            out,
            r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{}" stroke-width="{}"/>"#,
            style.edge_stroke, style.edge_width
        );
    }
    for (p, c) in points.iter().zip(colors) {
        let (x, y) = vp.map(*p);
        let fill = match c {
            Color::Black => &style.black_fill,
            Color::White => &style.white_fill,
        };
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="{}" fill="{fill}" stroke="{}"/>"#,
            style.radius, style.outline
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Consecutive pairs of a vertex sequence, as edges.
pub fn path_edges(order: &[usize]) -> Vec<(usize, usize)> {
    order.windows(2).map(|w| (w[0], w[1])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_is_kept() {
        let pts = [Point::new(0, 0).unwrap(), Point::new(10, 0).unwrap(), Point::new(0, 10).unwrap()];
        let vp = Viewport::fit(&pts, &RenderStyle::default());
        let m: Vec<_> = pts.iter().map(|&p| vp.map(p)).collect();
        // Counter-clockwise in the plane is clockwise in screen coordinates.
        let cross = (m[1].0 - m[0].0) * (m[2].1 - m[0].1) - (m[1].1 - m[0].1) * (m[2].0 - m[0].0);
        assert!(cross < 0.0);
    }

    #[test]
    fn single_point_does_not_divide_by_zero() {
        let s = render_svg(&[Point::new(5, 5).unwrap()], &[Color::Black], &[], &RenderStyle::default());
        assert!(s.contains(r#"<circle cx="20.000" cy="20.000""#), "{s}");
    }
}
