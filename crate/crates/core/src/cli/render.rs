//! Standalone SVG output for drawings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::constructors::Drawing;
use crate::error::{invalid, Result};
use crate::planegraph::VertexId;
use crate::schnyder::{Color, SchnyderWood};

const MARGIN: f64 = 20.0;
const RADIUS: f64 = 4.0;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    /// Pixels per unit of the drawing.
    pub scale: f64,
    pub labels: bool,
    /// Stroke colors of wood colors 1, 2, 3.
    pub colors: [String; 3],
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            scale: 40.0,
            labels: true,
            colors: ["#d62728".into(), "#2ca02c".into(), "#1f77b4".into()],
        }
    }
}

/// What ends up on the page, already in drawing units.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scene {
    pub points: Vec<(f64, f64)>,
    pub labels: Vec<String>,
    /// Segments with an optional wood color.
    pub edges: Vec<(VertexId, VertexId, Option<Color>)>,
}

impl Scene {
    pub fn from_drawing(
        d: &Drawing,
        labels: &BTreeMap<VertexId, String>,
        wood: Option<&SchnyderWood>,
    ) -> Scene {
        Scene {
            points: d.points().iter().map(|p| p.to_f64()).collect(),
            labels: d
                .graph()
                .vertices()
                .map(|v| labels.get(&v).cloned().unwrap_or_else(|| v.to_string()))
                .collect(),
            edges: d
                .graph()
                .edges()
                .into_iter()
                .map(|(u, v)| (u, v, wood.and_then(|w| w.get(u, v)).map(|e| e.color)))
                .collect(),
        }
    }
}

pub fn render_svg(scene: &Scene, spec: &RenderSpec) -> Result<String> {
    if !(spec.scale.is_finite() && spec.scale > 0.0) {
        return Err(invalid(format!("render scale {} must be positive", spec.scale)));
    }
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(&(x, y)) = scene.points.first() {
        (x0, x1, y0, y1) = (x, x, y, y);
    }
    for &(x, y) in &scene.points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let s = spec.scale;
    let screen = |(x, y): (f64, f64)| (MARGIN + (x - x0) * s, MARGIN + (y1 - y) * s);
    let width = 2.0 * MARGIN + (x1 - x0) * s;
    let height = 2.0 * MARGIN + (y1 - y0) * s;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    writeln!(out, r#"<g stroke-width="1.5" stroke-linecap="round">"#).unwrap();
    for &(u, v, color) in &scene.edges {
        let (ax, ay) = screen(scene.points[u]);
        let (bx, by) = screen(scene.points[v]);
        let stroke = color.map_or("#555555", |c| spec.colors[c.index() as usize - 1].as_str());
        writeln!(
            out,
            r#"<line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}" stroke="{stroke}"/>"#
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r##"<g fill="#000000">"##).unwrap();
    for (v, &p) in scene.points.iter().enumerate() {
        let (cx, cy) = screen(p);
        writeln!(out, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{RADIUS}"/>"#).unwrap();
        if spec.labels {
            writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11">{}</text>"#,
                cx + RADIUS + 1.0,
                cy - RADIUS - 1.0,
                escape(&scene.labels[v])
            )
            .unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
