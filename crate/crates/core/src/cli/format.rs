//! Line-oriented text format shared by graphs, drawings and woods.
//!
//! ```text
//! # comments and blank lines are ignored
//! <V> <E>
//! <v>: <neighbors of v in clockwise order>     one line per vertex, v = 0..V-1
//! outer: <clockwise outer walk>
//! label <v> <name>                             optional, any number
//! wood <u> <v> <color 1|2|3> <-> or <->         optional; "->" orients u to v, "<-" v to u
//! DRAWING <n>                                  optional drawing section
//! <v> <x> <y>                                  n lines; rationals as p/q or p
//! ```
//!
//! The writer emits records in a canonical order and each rotation starts
//! at its smallest neighbor, so a written file parses and writes back byte
//! for byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::constructors::Drawing;
use crate::error::{Error, Result};
use crate::geometry::{Point, Rational};
use crate::planegraph::{PlaneGraph, VertexId};
use crate::schnyder::{Color, SchnyderWood};

/// Everything a file can hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub graph: PlaneGraph,
    pub labels: BTreeMap<VertexId, String>,
    pub wood: Option<SchnyderWood>,
    pub points: Option<Vec<Point>>,
}

impl Document {
    pub fn graph(graph: PlaneGraph) -> Self {
        Document {
            graph,
            labels: BTreeMap::new(),
            wood: None,
            points: None,
        }
    }

    pub fn drawing(d: &Drawing) -> Self {
        Document {
            points: Some(d.points().to_vec()),
            ..Document::graph(d.graph().clone())
        }
    }

    pub fn with_labels(mut self, labels: BTreeMap<VertexId, String>) -> Self {
        self.labels = labels;
        self
    }

    pub fn with_wood(mut self, wood: SchnyderWood) -> Self {
        self.wood = Some(wood);
        self
    }

    /// The drawing section combined with the graph.
    pub fn to_drawing(&self) -> Result<Drawing> {
        let pts = self.points.clone().ok_or_else(|| Error::Parse {
            line: 0,
            msg: "file has no DRAWING section".into(),
        })?;
        Drawing::new(self.graph.clone(), pts)
    }
}

pub fn write_document(doc: &Document) -> String {
    let g = &doc.graph;
    let mut s = String::new();
    writeln!(s, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for v in g.vertices() {
        write!(s, "{v}:").unwrap();
        for w in g.neighbors(v) {
            write!(s, " {w}").unwrap();
        }
        s.push('\n');
    }
    s.push_str("outer:");
    for v in g.outer_face() {
        write!(s, " {v}").unwrap();
    }
    s.push('\n');
    for (v, name) in &doc.labels {
        writeln!(s, "label {v} {name}").unwrap();
    }
    if let Some(w) = &doc.wood {
        for e in w.edges() {
            let (u, v, arrow) = if e.tail < e.head {
                (e.tail, e.head, "->")
            } else {
                (e.head, e.tail, "<-")
            };
            writeln!(s, "wood {u} {v} {} {arrow}", e.color).unwrap();
        }
    }
    if let Some(pts) = &doc.points {
        writeln!(s, "DRAWING {}", pts.len()).unwrap();
        for (v, p) in pts.iter().enumerate() {
            writeln!(s, "{v} {} {}", p.x, p.y).unwrap();
        }
    }
    s
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| perr(line, format!("cannot parse {tok:?}")))
}

pub fn parse_document(text: &str) -> Result<Document> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines.next().ok_or_else(|| perr(0, "empty file"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [v_tok, e_tok] = head[..] else {
        return Err(perr(ln, "expected header `V E`"));
    };
    let n: usize = num(ln, v_tok)?;
    let e: usize = num(ln, e_tok)?;

    let mut rotation = Vec::with_capacity(n);
    for v in 0..n {
        let (ln, l) = lines.next().ok_or_else(|| perr(0, format!("missing rotation of vertex {v}")))?;
        let (id, rest) = l
            .split_once(':')
            .ok_or_else(|| perr(ln, "expected `v: neighbors`"))?;
        if num::<usize>(ln, id.trim())? != v {
            return Err(perr(ln, format!("expected rotation of vertex {v}")));
        }
        let nbrs = rest
            .split_whitespace()
            .map(|t| num(ln, t))
            .collect::<Result<Vec<usize>>>()?;
        rotation.push(nbrs);
    }
    let (ln, l) = lines.next().ok_or_else(|| perr(0, "missing outer face"))?;
    let walk = l
        .strip_prefix("outer:")
        .ok_or_else(|| perr(ln, "expected `outer: walk`"))?;
    let outer = walk
        .split_whitespace()
        .map(|t| num(ln, t))
        .collect::<Result<Vec<usize>>>()?;
    let graph = PlaneGraph::new(rotation, outer).map_err(|err| perr(ln, err.to_string()))?;
    if graph.edge_count() != e {
        return Err(perr(ln, format!("header declares {e} edges, rotation has {}", graph.edge_count())));
    }

    let mut doc = Document::graph(graph);
    while let Some((ln, l)) = lines.next() {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks[0] {
            "label" => {
                let [_, v, name] = toks[..] else {
                    return Err(perr(ln, "expected `label v name`"));
                };
                let v: usize = num(ln, v)?;
                if v >= n {
                    return Err(perr(ln, format!("no vertex {v}")));
                }
                doc.labels.insert(v, name.to_string());
            }
            "wood" => {
                let [_, u, v, c, arrow] = toks[..] else {
                    return Err(perr(ln, "expected `wood u v color ->|<-`"));
                };
                let (u, v): (usize, usize) = (num(ln, u)?, num(ln, v)?);
                let color = Color::from_index(num(ln, c)?)
                    .ok_or_else(|| perr(ln, "color must be 1, 2 or 3"))?;
                if !doc.graph.has_edge(u, v) {
                    return Err(perr(ln, format!("{u}-{v} is not an edge")));
                }
                let (tail, head) = match arrow {
                    "->" => (u, v),
                    "<-" => (v, u),
                    _ => return Err(perr(ln, "direction must be -> or <-")),
                };
                doc.wood.get_or_insert_with(SchnyderWood::new).insert(tail, head, color);
            }
            "DRAWING" => {
                let [_, k] = toks[..] else {
                    return Err(perr(ln, "expected `DRAWING n`"));
                };
                if num::<usize>(ln, k)? != n {
                    return Err(perr(ln, format!("drawing must have {n} points")));
                }
                let mut pts = Vec::with_capacity(n);
                for v in 0..n {
                    let (ln, l) = lines.next().ok_or_else(|| perr(0, format!("missing point {v}")))?;
                    let toks: Vec<&str> = l.split_whitespace().collect();
                    let [id, x, y] = toks[..] else {
                        return Err(perr(ln, "expected `v x y`"));
                    };
                    if num::<usize>(ln, id)? != v {
                        return Err(perr(ln, format!("expected point of vertex {v}")));
                    }
                    pts.push(Point::new(num::<Rational>(ln, x)?, num::<Rational>(ln, y)?));
                }
                doc.points = Some(pts);
                if let Some((ln, _)) = lines.next() {
                    return Err(perr(ln, "unexpected content after the drawing"));
                }
            }
            other => return Err(perr(ln, format!("unknown record {other:?}"))),
        }
    }
    Ok(doc)
}
