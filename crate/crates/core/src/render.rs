//! SVG drawings of decompositions.
//!
//! Row 0 is at the top and column 0 at the left. An edge that wraps around
//! the torus is drawn as two short stubs leaving the grid on opposite sides.

use std::fmt::Write as _;

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{Edge, Orientation, TorusDims, Vertex};
use crate::validate::validate;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrokeStyle {
    pub color: &'static str,
    pub dasharray: Option<&'static str>,
}

const fn style(color: &'static str, dasharray: Option<&'static str>) -> StrokeStyle {
    StrokeStyle { color, dasharray }
}

pub const RED: StrokeStyle = style("#d62728", Some("6,4"));
pub const YELLOW: StrokeStyle = style("#f0a202", None);
pub const BLUE: StrokeStyle = style("#1f4e9c", Some("1.5,3"));

/// Styles for classes beyond the first three, used cyclically.
pub const EXTRA_STYLES: [StrokeStyle; 12] = [
    style("#2ca02c", None),
    style("#9467bd", Some("6,4")),
    style("#8c564b", Some("1.5,3")),
    style("#e377c2", None),
    style("#7f7f7f", Some("6,4")),
    style("#17becf", Some("1.5,3")),
    style("#bcbd22", None),
    style("#ff7f0e", Some("6,4")),
    style("#393b79", Some("1.5,3")),
    style("#637939", None),
    style("#843c39", Some("6,4")),
    style("#7b4173", Some("1.5,3")),
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderStyle {
    pub cell_size: f64,
    pub stroke_width: f64,
    pub vertex_radius: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle::with_cell_size(40.0)
    }
}

impl RenderStyle {
    pub fn with_cell_size(cell_size: f64) -> Self {
        RenderStyle {
            cell_size,
            stroke_width: cell_size / 12.0,
            vertex_radius: cell_size / 10.0,
        }
    }
}

/// Style for class `index`; a `red`, `yellow` or `blue` label wins over position.
pub fn class_style(index: usize, label: Option<&str>) -> StrokeStyle {
    match label {
        Some("red") => return RED,
        Some("yellow") => return YELLOW,
        Some("blue") => return BLUE,
        _ => {}
    }
    match index {
        0 => RED,
        1 => YELLOW,
        2 => BLUE,
        k => EXTRA_STYLES[(k - 3) % EXTRA_STYLES.len()].clone(),
    }
}

type Segment = ((f64, f64), (f64, f64));

fn point(v: Vertex, s: &RenderStyle) -> (f64, f64) {
    let margin = s.cell_size;
    (
        margin + v.j as f64 * s.cell_size,
        margin + v.i as f64 * s.cell_size,
    )
}

/// One segment for an interior edge, two stubs for a wrapping edge.
pub fn edge_segments(dims: TorusDims, e: Edge, s: &RenderStyle) -> Vec<Segment> {
    let (a, b) = (point(e.u, s), point(e.v, s));
    if !dims.is_wrap(e) {
        return vec![(a, b)];
    }
    let stub = 0.4 * s.cell_size;
    match e.orientation {
        // u is in the last column, v in the first.
        Orientation::Horizontal => vec![(a, (a.0 + stub, a.1)), (b, (b.0 - stub, b.1))],
        Orientation::Vertical => vec![(a, (a.0, a.1 + stub)), (b, (b.0, b.1 - stub))],
    }
}

fn fmt_num(x: f64) -> String {
    let s = format!("{x:.2}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Draw a valid decomposition; invalid ones are refused.
pub fn render_svg(d: &Decomposition, s: &RenderStyle) -> Result<String> {
    let report = validate(d);
    if let Some(reason) = report.first_failure() {
        return Err(Error::Precondition(format!(
            "refusing to draw an invalid decomposition: {reason}"
        )));
    }
    let dims = d.dims();
    let width = 2.0 * s.cell_size + (dims.n() - 1) as f64 * s.cell_size;
    let height = 2.0 * s.cell_size + (dims.m() - 1) as f64 * s.cell_size;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = fmt_num(width),
        h = fmt_num(height)
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (k, c) in d.classes().iter().enumerate() {
        let st = class_style(k, d.label(k));
        let _ = write!(
            out,
            r#"<g class="cycle" data-index="{k}" stroke="{}" stroke-width="{}" stroke-linecap="round" fill="none""#,
            st.color,
            fmt_num(s.stroke_width)
        );
        if let Some(dash) = st.dasharray {
            let _ = write!(out, r#" stroke-dasharray="{dash}""#);
        }
        if let Some(label) = d.label(k) {
            let _ = write!(out, r#" data-label="{}""#, escape(label));
        }
        out.push_str(">\n");
        for e in c.edges() {
            for ((x1, y1), (x2, y2)) in edge_segments(dims, e, s) {
                let _ = writeln!(
                    out,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    fmt_num(x1),
                    fmt_num(y1),
                    fmt_num(x2),
                    fmt_num(y2)
                );
            }
        }
        out.push_str("</g>\n");
    }
    out.push_str("<g class=\"vertices\" fill=\"white\" stroke=\"black\">\n");
    for v in dims.vertices() {
        let (x, y) = point(v, s);
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{}"/>"#,
            fmt_num(x),
            fmt_num(y),
            fmt_num(s.vertex_radius)
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
