//! Deterministic SVG emission for grid diagrams, knot diagrams, flat
//! ribbons, and folded-ribbon layouts.
//!
//! Element order is fixed (grid lines, under-ribbons, over-ribbons, dots),
//! floats are formatted with a fixed rule, and nothing depends on ambient
//! state, so identical inputs produce byte-identical documents.

use crate::fold::{FoldedRibbonLayout, FOLD_EDGES};
use crate::grid::{GridDiagram, KnotDiagram, Orientation};
use std::fmt::Write as _;

/// Visual parameters. `dot_radius` and `crossing_gap` are in cell units;
/// invariants: `crossing_gap < 1`, `dot_radius < 0.5`.
#[derive(Clone, Debug)]
pub struct RenderStyle {
    /// Output pixels per grid cell.
    pub cell_px: f64,
    /// Dot radius in cell units.
    pub dot_radius: f64,
    pub ribbon_fill: String,
    pub ribbon_outline: String,
    /// Width of the gap cut into the under-strand at each crossing, in
    /// cell units.
    pub crossing_gap: f64,
    /// Draw over-strand ribbons after under-strand ribbons.
    pub over_on_top: bool,
    /// Draw all dots filled alike instead of black/white.
    pub monochrome_dots: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            cell_px: 40.0,
            dot_radius: 0.16,
            ribbon_fill: "#d8d8d8".into(),
            ribbon_outline: "#333333".into(),
            crossing_gap: 0.3,
            over_on_top: true,
            monochrome_dots: false,
        }
    }
}

/// A finished vector document.
#[derive(Clone, Debug, PartialEq)]
pub struct SvgDocument {
    pub width: f64,
    pub height: f64,
    body: String,
}

impl SvgDocument {
    pub fn to_svg_string(&self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n{}</svg>\n",
            fx(self.width),
            fx(self.height),
            fx(self.width),
            fx(self.height),
            self.body
        )
    }
}

/// Fixed-rule float formatting: six decimals, trailing zeros trimmed.
fn fx(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

struct Canvas {
    body: String,
    scale: f64,
    /// model-space offsets applied before scaling
    off_x: f64,
    off_y: f64,
    /// model y at the TOP of the canvas (y increases upward in the model,
    /// downward in SVG)
    top_y: f64,
}

impl Canvas {
    fn map(&self, p: (f64, f64)) -> (f64, f64) {
        (
            (p.0 + self.off_x) * self.scale,
            (self.top_y - p.1 + self.off_y) * self.scale,
        )
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), class: &str, stroke: &str, width: f64) {
        let (x1, y1) = self.map(a);
        let (x2, y2) = self.map(b);
        writeln!(
            self.body,
            "  <line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" stroke-width=\"{}\"/>",
            fx(x1), fx(y1), fx(x2), fx(y2), fx(width)
        )
        .unwrap();
    }

    fn circle(&mut self, c: (f64, f64), r: f64, class: &str, fill: &str, stroke: &str) {
        let (cx, cy) = self.map(c);
        writeln!(
            self.body,
            "  <circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\" stroke=\"{stroke}\"/>",
            fx(cx), fx(cy), fx(r)
        )
        .unwrap();
    }

    fn rect_model(&mut self, lo: (f64, f64), hi: (f64, f64), class: &str, fill: &str, stroke: &str) {
        let (x1, y1) = self.map((lo.0, hi.1));
        let (x2, y2) = self.map((hi.0, lo.1));
        writeln!(
            self.body,
            "  <rect class=\"{class}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{fill}\" stroke=\"{stroke}\"/>",
            fx(x1), fx(y1), fx(x2 - x1), fx(y2 - y1)
        )
        .unwrap();
    }

    fn text(&mut self, p: (f64, f64), content: &str, class: &str) {
        let (x, y) = self.map(p);
        writeln!(
            self.body,
            "  <text class=\"{class}\" x=\"{}\" y=\"{}\" font-size=\"{}\">{content}</text>",
            fx(x),
            fx(y),
            fx(self.scale * 0.3)
        )
        .unwrap();
    }
}

fn grid_canvas(size: usize, style: &RenderStyle) -> Canvas {
    Canvas {
        body: String::new(),
        scale: style.cell_px,
        off_x: 0.0,
        off_y: 0.0,
        top_y: size as f64,
    }
}

fn draw_lattice(canvas: &mut Canvas, size: usize) {
    let n = size as f64;
    for i in 0..=size {
        let t = i as f64;
        canvas.line((0.0, t), (n, t), "grid-line", "#bbbbbb", 1.0);
    }
    for i in 0..=size {
        let t = i as f64;
        canvas.line((t, 0.0), (t, n), "grid-line", "#bbbbbb", 1.0);
    }
}

fn draw_dots(canvas: &mut Canvas, d: &GridDiagram, style: &RenderStyle) {
    let r = style.dot_radius * style.cell_px;
    for (row, &col) in d.black().iter().enumerate() {
        let c = (col as f64 + 0.5, row as f64 + 0.5);
        canvas.circle(c, r, "dot dot-black", "#000000", "#000000");
    }
    for (row, &col) in d.white().iter().enumerate() {
        let c = (col as f64 + 0.5, row as f64 + 0.5);
        if style.monochrome_dots {
            canvas.circle(c, r, "dot dot-white", "#000000", "#000000");
        } else {
            canvas.circle(c, r, "dot dot-white", "#ffffff", "#000000");
        }
    }
}

/// Lattice plus dots: black dots filled, white dots hollow (unless
/// monochrome), one at each occupied cell center.
pub fn render_grid(d: &GridDiagram, style: &RenderStyle) -> SvgDocument {
    let mut canvas = grid_canvas(d.size(), style);
    draw_lattice(&mut canvas, d.size());
    draw_dots(&mut canvas, d, style);
    let side = d.size() as f64 * style.cell_px;
    SvgDocument {
        width: side,
        height: side,
        body: canvas.body,
    }
}

/// The traced curve with a gap cut into the horizontal (under) strand at
/// every crossing; vertical strands run unbroken.
pub fn render_knot(k: &KnotDiagram, style: &RenderStyle) -> SvgDocument {
    let size = k.segments.iter().map(|s| s.hi() + 1).max().unwrap_or(2);
    let mut canvas = grid_canvas(size, style);
    let stroke_w = style.cell_px * 0.08;
    for (si, seg) in k.segments.iter().enumerate() {
        match seg.orientation {
            Orientation::Vertical => {
                canvas.line(seg.start_point(), seg.end_point(), "strand-v", "#000000", stroke_w);
            }
            Orientation::Horizontal => {
                let y = seg.line as f64 + 0.5;
                let (lo, hi) = (seg.lo() as f64 + 0.5, seg.hi() as f64 + 0.5);
                let mut cuts: Vec<f64> = k
                    .crossings
                    .iter()
                    .filter(|c| c.under_segment == si)
                    .map(|c| c.col as f64 + 0.5)
                    .collect();
                cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
                let half = style.crossing_gap / 2.0;
                let mut x = lo;
                for cut in cuts {
                    canvas.line((x, y), (cut - half, y), "strand-h", "#000000", stroke_w);
                    x = cut + half;
                }
                canvas.line((x, y), (hi, y), "strand-h", "#000000", stroke_w);
            }
        }
    }
    let side = size as f64 * style.cell_px;
    SvgDocument {
        width: side,
        height: side,
        body: canvas.body,
    }
}

/// Width-1 ribbon along the traced curve: a rectangle per segment (under
/// strands first, then over strands), a 45-degree fold crease at every dot,
/// dots on top.
pub fn render_ribbon(d: &GridDiagram, k: &KnotDiagram, style: &RenderStyle) -> SvgDocument {
    let mut canvas = grid_canvas(d.size(), style);
    draw_lattice(&mut canvas, d.size());
    let layers: [Orientation; 2] = if style.over_on_top {
        [Orientation::Horizontal, Orientation::Vertical]
    } else {
        [Orientation::Vertical, Orientation::Horizontal]
    };
    for (li, layer) in layers.iter().enumerate() {
        let class = if li == 0 { "ribbon-under" } else { "ribbon-over" };
        for seg in k.segments.iter().filter(|s| s.orientation == *layer) {
            let (a, b) = (seg.start_point(), seg.end_point());
            let (lo, hi) = (
                (a.0.min(b.0), a.1.min(b.1)),
                (a.0.max(b.0), a.1.max(b.1)),
            );
            match seg.orientation {
                Orientation::Horizontal => canvas.rect_model(
                    (lo.0, lo.1 - 0.5),
                    (hi.0, hi.1 + 0.5),
                    class,
                    &style.ribbon_fill,
                    &style.ribbon_outline,
                ),
                Orientation::Vertical => canvas.rect_model(
                    (lo.0 - 0.5, lo.1),
                    (hi.0 + 0.5, hi.1),
                    class,
                    &style.ribbon_fill,
                    &style.ribbon_outline,
                ),
            }
        }
    }
    // fold creases: at each corner dot the crease is the diagonal of the
    // unit square bisecting the incoming and outgoing directions
    let m = k.segments.len();
    for i in 0..m {
        let cur = &k.segments[i];
        let next = &k.segments[(i + 1) % m];
        let p = cur.end_point();
        let din = direction(cur);
        let dout = direction(next);
        let u = ((din.0 + dout.0) / 2.0, (din.1 + dout.1) / 2.0);
        canvas.line(
            (p.0 - u.0, p.1 - u.1),
            (p.0 + u.0, p.1 + u.1),
            "fold-crease",
            &style.ribbon_outline,
            style.cell_px * 0.03,
        );
    }
    draw_dots(&mut canvas, d, style);
    let side = d.size() as f64 * style.cell_px;
    SvgDocument {
        width: side,
        height: side,
        body: canvas.body,
    }
}

fn direction(seg: &crate::grid::Segment) -> (f64, f64) {
    let sign = if seg.to > seg.from { 1.0 } else { -1.0 };
    match seg.orientation {
        Orientation::Horizontal => (sign, 0.0),
        Orientation::Vertical => (0.0, sign),
    }
}

/// The folded-ribbon layout: every named point, the fold edges, and the
/// center-line path with the twist block annotated by its repetition count.
pub fn render_fold(layout: &FoldedRibbonLayout, style: &RenderStyle) -> SvgDocument {
    let points = layout.named_points();
    let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
    let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for (_, (x, y)) in &points {
        min_x = min_x.min(*x);
        min_y = min_y.min(*y);
        max_x = max_x.max(*x);
        max_y = max_y.max(*y);
    }
    let margin = 0.5 * layout.width;
    let mut canvas = Canvas {
        body: String::new(),
        scale: style.cell_px / layout.width,
        off_x: margin - min_x,
        off_y: 0.0,
        top_y: max_y + margin,
    };

    for (a, b) in FOLD_EDGES {
        let pa = layout.corner(a).unwrap();
        let pb = layout.corner(b).unwrap();
        canvas.line(pa, pb, "fold-edge", "#777777", style.cell_px * 0.04);
    }

    let path = crate::fold::fold_path(layout.half_twists).expect("layout counts are even");
    for pair in path.labels.windows(2) {
        let a = layout.waypoint_by_label(pair[0]).unwrap();
        let b = layout.waypoint_by_label(pair[1]).unwrap();
        canvas.line(a, b, "centerline", "#c03030", style.cell_px * 0.05);
    }
    if layout.half_twists >= 4 {
        let x4 = layout.waypoint(4);
        let x5 = layout.waypoint(5);
        let mid = ((x4.0 + x5.0) / 2.0, (x4.1 + x5.1) / 2.0);
        canvas.text(
            mid,
            &format!("x4x5 x{}", layout.half_twists - 3),
            "twist-count",
        );
    }

    let r = style.dot_radius * style.cell_px * 0.6;
    for (name, p) in &points {
        canvas.circle(*p, r, "layout-point", "#000000", "#000000");
        canvas.text((p.0 + 0.06 * layout.width, p.1 + 0.06 * layout.width), name, "point-label");
    }

    let width = (max_x - min_x + 2.0 * margin) * canvas.scale;
    let height = (max_y - min_y + 2.0 * margin) * canvas.scale;
    SvgDocument {
        width,
        height,
        body: canvas.body,
    }
}
