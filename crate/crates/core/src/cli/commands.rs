use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, FRAC_PI_8, PI};
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use super::format::{parse_document, write_document, Document};
use super::render::{render_svg, RenderSpec, Scene};
use super::{Algorithm, Command, Family};
use crate::constructors::{draw_cao, draw_cao_convex, draw_halin, draw_wheel, Drawing};
use crate::error::{invalid, Error, Result};
use crate::planegraph::{gen_glued, CaoGraph, HalinGraph, NestedLabel, NestedTriangulation, PlaneGraph, VertexId};
use crate::routing::{route, traces_all, Policy};
use crate::schnyder::{
    audit_area, check_alpha, check_wood, default_witness_scale, wood_of_nested,
    witness_drawing_with_scale,
};
use crate::verify::{
    check_angle_monotone, check_convex, check_convex_strict, check_embedding, check_grid,
    check_greedy, check_planar, VerifierReport,
};

/// Text produced by a command, where it goes, and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub target: Option<PathBuf>,
    pub status: i32,
}

impl Output {
    fn new(text: String, target: &Option<PathBuf>, status: i32) -> Self {
        Output {
            text,
            target: target.clone(),
            status,
        }
    }

    pub fn emit(&self) -> std::io::Result<()> {
        match &self.target {
            Some(path) => std::fs::write(path, &self.text),
            None => std::io::stdout().lock().write_all(self.text.as_bytes()),
        }
    }
}

/// Property failures exit with 1, everything else with 2.
pub(crate) fn exit_code(e: &Error) -> i32 {
    match e {
        Error::AlphaViolation(_) | Error::NonPlanar(_) => 1,
        _ => 2,
    }
}

/// Parses an angle in radians: a number, or a multiple of pi such as
/// `pi`, `pi/6`, `2pi/9` or `0.5pi`.
pub fn parse_angle(s: &str) -> Result<f64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    let bad = || invalid(format!("cannot parse angle {s:?}"));
    let value = match t.split_once("pi") {
        None => t.parse::<f64>().map_err(|_| bad())?,
        Some((k, rest)) => {
            let k = match k.trim_end_matches('*') {
                "" => 1.0,
                k => k.parse::<f64>().map_err(|_| bad())?,
            };
            let d = match rest {
                "" => 1.0,
                r => r
                    .strip_prefix('/')
                    .and_then(|d| d.parse::<f64>().ok())
                    .filter(|d| *d != 0.0)
                    .ok_or_else(bad)?,
            };
            snap(k * PI / d)
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

/// `PI / 3.0` is one ulp below `FRAC_PI_3`; without snapping `pi/3` would
/// slip inside the open domain of the audit.
fn snap(x: f64) -> f64 {
    [PI, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, FRAC_PI_8]
        .into_iter()
        .find(|c| (x - c).abs() <= 4.0 * f64::EPSILON * c)
        .unwrap_or(x)
}

fn read(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text)
}

fn required<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| invalid(format!("--{flag} is required")))
}

pub fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Generate {
            family,
            i,
            m,
            n,
            seed,
            out,
        } => Ok(Output::new(write_document(&generate(*family, *i, *m, *n, *seed)?), out, 0)),
        Command::Draw {
            algorithm,
            input,
            alpha,
            scale,
            normalize,
            out,
        } => {
            let doc = draw(*algorithm, &read(input)?, alpha.as_deref(), *scale, *normalize)?;
            Ok(Output::new(write_document(&doc), out, 0))
        }
        Command::Verify {
            input,
            checks,
            alpha,
            width,
            height,
        } => {
            let (text, ok) = verify(&read(input)?, checks, alpha.as_deref(), *width, *height)?;
            Ok(Output::new(text, &None, if ok { 0 } else { 1 }))
        }
        Command::Render {
            input,
            scale,
            no_labels,
            colors,
            out,
        } => {
            let doc = read(input)?;
            let mut spec = RenderSpec {
                scale: *scale,
                labels: !no_labels,
                ..RenderSpec::default()
            };
            if let Some(c) = colors {
                let parts: Vec<String> = c.split(',').map(|s| s.trim().to_string()).collect();
                spec.colors = parts
                    .try_into()
                    .map_err(|_| invalid("--colors takes three comma-separated colors"))?;
            }
            let scene = Scene::from_drawing(&doc.to_drawing()?, &doc.labels, doc.wood.as_ref());
            Ok(Output::new(render_svg(&scene, &spec)?, out, 0))
        }
        Command::Audit {
            input,
            m,
            alpha,
            scale,
            out,
        } => {
            let (text, ok) = audit(input.as_deref(), *m, &parse_angle(alpha)?, *scale)?;
            Ok(Output::new(text, out, if ok { 0 } else { 1 }))
        }
        Command::Route {
            input,
            policy,
            from,
            to,
            out,
        } => {
            let d = read(input)?.to_drawing()?;
            let policy: Policy = policy.parse()?;
            let (text, ok) = routes(&d, policy, from.zip(*to))?;
            Ok(Output::new(text, out, if ok { 0 } else { 1 }))
        }
    }
}

fn generate(family: Family, i: Option<usize>, m: Option<usize>, n: Option<usize>, seed: u64) -> Result<Document> {
    Ok(match family {
        Family::Cao | Family::CaoPlus => {
            let g = CaoGraph::generate(required(i, "i")?, family == Family::CaoPlus)?;
            let labels = g.graph().vertices().map(|v| (v, g.label(v).to_string())).collect();
            Document::graph(g.graph().clone()).with_labels(labels)
        }
        Family::Nested => {
            let g = NestedTriangulation::generate(required(m, "m")?)?;
            let labels = g.graph().vertices().map(|v| (v, g.label(v).to_string())).collect();
            let doc = Document::graph(g.graph().clone()).with_labels(labels);
            if g.m() >= 2 {
                doc.with_wood(wood_of_nested(&g)?)
            } else {
                doc
            }
        }
        Family::Glued => Document::graph(gen_glued(required(m, "m")?)?),
        Family::HalinRandom => Document::graph(HalinGraph::random(required(n, "n")?, seed)?.graph().clone()),
        Family::Wheel => {
            let n = required(n, "n")?;
            if n < 4 {
                return Err(invalid("a wheel needs n >= 4"));
            }
            Document::graph(HalinGraph::wheel(n - 1)?.graph().clone())
        }
    })
}

fn draw(
    algorithm: Algorithm,
    doc: &Document,
    alpha: Option<&str>,
    scale: Option<f64>,
    normalize: bool,
) -> Result<Document> {
    let (d, labels, wood) = match algorithm {
        Algorithm::Cao | Algorithm::CaoConvex => {
            let g = CaoGraph::from_labeled(&doc.graph, &doc.labels)?;
            let d = if algorithm == Algorithm::Cao {
                draw_cao(&g)?
            } else {
                draw_cao_convex(&g)?
            };
            let labels = g.graph().vertices().map(|v| (v, g.label(v).to_string())).collect();
            (d, labels, None)
        }
        Algorithm::Halin => {
            let h = HalinGraph::from_plane_graph(doc.graph.clone())?;
            (draw_halin(&h)?, doc.labels.clone(), None)
        }
        Algorithm::Wheel => {
            let h = HalinGraph::from_plane_graph(doc.graph.clone())?;
            if h.wheel_hub().is_none() {
                return Err(Error::FamilyMismatch("wheel"));
            }
            (draw_wheel(&h)?, doc.labels.clone(), None)
        }
        Algorithm::Witness => {
            let g = NestedTriangulation::from_labeled(&doc.graph, &doc.labels)?;
            let alpha = parse_angle(alpha.ok_or_else(|| invalid("--alpha is required"))?)?;
            let scale = match scale {
                Some(s) => s,
                None => default_witness_scale(alpha)?,
            };
            let d = witness_drawing_with_scale(g.m(), alpha, scale)?;
            let labels = g.graph().vertices().map(|v| (v, g.label(v).to_string())).collect();
            (d, labels, Some(wood_of_nested(&g)?))
        }
    };
    let d = if normalize { d.normalized() } else { d };
    let mut out = Document::drawing(&d).with_labels(labels);
    out.wood = wood;
    Ok(out)
}

fn verify(
    doc: &Document,
    checks: &str,
    alpha: Option<&str>,
    width: Option<u64>,
    height: Option<u64>,
) -> Result<(String, bool)> {
    let d = doc.to_drawing()?;
    let mut text = String::new();
    let mut all = true;
    for check in checks.split(',').map(str::trim).filter(|c| !c.is_empty()) {
        let line = match check {
            "planar" => check_planar(&d).to_string(),
            "embedding" => check_embedding(&d).to_string(),
            "convex" => or_nonplanar(check_convex(&d))?,
            "strict-convex" => or_nonplanar(check_convex_strict(&d))?,
            "angle-monotone" => check_angle_monotone(&d).to_string(),
            "greedy" => check_greedy(&d).to_string(),
            "grid" => check_grid(&d, required(width, "width")?, required(height, "height")?).to_string(),
            "wood" => {
                let w = doc.wood.as_ref().ok_or_else(|| invalid("file has no wood records"))?;
                check_wood(&doc.graph, w)?.to_string()
            }
            "alpha" => {
                let w = doc.wood.as_ref().ok_or_else(|| invalid("file has no wood records"))?;
                let a = parse_angle(alpha.ok_or_else(|| invalid("--alpha is required"))?)?;
                let r = check_alpha(&d, w, a)?;
                match r.offending.first() {
                    None => format!("pass (smallest conforming alpha {:.9})", r.minimal_alpha),
                    Some(o) => format!(
                        "FAIL: edge {} -> {} of color {} deviates {:.9} rad from its axis",
                        o.tail, o.head, o.color, o.deviation
                    ),
                }
            }
            other => return Err(invalid(format!("unknown check {other:?}"))),
        };
        all &= line.starts_with("pass");
        writeln!(text, "{check}: {line}").unwrap();
    }
    if text.is_empty() {
        return Err(invalid("no checks requested"));
    }
    Ok((text, all))
}

fn or_nonplanar(r: Result<VerifierReport>) -> Result<String> {
    match r {
        Ok(r) => Ok(r.to_string()),
        Err(e @ Error::NonPlanar(_)) => Ok(format!("FAIL: {e}")),
        Err(e) => Err(e),
    }
}

fn audit(input: Option<&Path>, m: Option<usize>, alpha: &f64, scale: Option<f64>) -> Result<(String, bool)> {
    let alpha = *alpha;
    if !(alpha > 0.0 && alpha < FRAC_PI_3) {
        return Err(invalid(format!(
            "alpha = {alpha} must lie in (0, pi/3) so that epsilon = pi/3 - alpha is positive"
        )));
    }
    let (d, g) = match input {
        Some(path) => {
            let doc = read(path)?;
            let g = NestedTriangulation::from_labeled(&doc.graph, &doc.labels)?;
            if m.is_some_and(|m| m != g.m()) {
                return Err(invalid(format!("file holds G_{}, not G_{}", g.m(), m.unwrap())));
            }
            let d = doc.to_drawing()?;
            let map: Vec<VertexId> = doc
                .labels
                .values()
                .map(|name| {
                    let l: NestedLabel = name.parse()?;
                    Ok(NestedTriangulation::id(l.role, l.level))
                })
                .collect::<Result<_>>()?;
            (reorder(&d, g.graph(), &map)?, g)
        }
        None => {
            let m = required(m, "m")?;
            let scale = match scale {
                Some(s) => s,
                None => default_witness_scale(alpha)?,
            };
            (witness_drawing_with_scale(m, alpha, scale)?, NestedTriangulation::generate(m)?)
        }
    };
    let a = audit_area(&d, &g, FRAC_PI_3 - alpha)?;
    let mut s = String::new();
    let verdict = |b: bool| if b { "pass" } else { "FAIL" };
    writeln!(
        s,
        "m {}  alpha {:.9}  epsilon {:.9}  k_eps {:.9}",
        a.m, alpha, a.epsilon, a.k_epsilon
    )
    .unwrap();
    writeln!(s, "level  ratio  bound  verdict").unwrap();
    for r in &a.ratios {
        writeln!(s, "{}  {:.9}  {:.9}  {}", r.level, r.ratio, a.k_epsilon, verdict(r.verdict)).unwrap();
    }
    writeln!(
        s,
        "compound ln(A_{}/A_1) {:.9}  bound (m-2) ln k_eps {:.9}  {}",
        a.m.saturating_sub(1),
        a.compound_log_ratio,
        a.compound_log_bound,
        verdict(a.compound_verdict)
    )
    .unwrap();
    writeln!(
        s,
        "resolution floor {}  ln area lower bound {:.9}",
        a.resolution_floor, a.log_area_lower_bound
    )
    .unwrap();
    writeln!(s, "verdict: {}", verdict(a.verdict)).unwrap();
    Ok((s, a.verdict))
}

/// Moves the points of `d` (whose vertex `v` is `map[v]` in `target`) onto
/// the ids of `target`.
fn reorder(d: &Drawing, target: &PlaneGraph, map: &[VertexId]) -> Result<Drawing> {
    let mut pts = vec![None; d.vertex_count()];
    for (v, &w) in map.iter().enumerate() {
        pts[w] = Some(d.point(v).clone());
    }
    let pts = pts
        .into_iter()
        .map(|p| p.ok_or_else(|| invalid("labels do not cover every vertex")))
        .collect::<Result<Vec<_>>>()?;
    Drawing::new(target.clone(), pts)
}

fn routes(d: &Drawing, policy: Policy, pair: Option<(usize, usize)>) -> Result<(String, bool)> {
    let mut s = String::new();
    if let Some((u, v)) = pair {
        let n = d.vertex_count();
        if u >= n || v >= n {
            return Err(invalid(format!("vertices must be below {n}")));
        }
        let t = route(d, u, v, policy);
        writeln!(s, "{t}").unwrap();
        return Ok((s, t.delivered()));
    }
    let (traces, sum) = traces_all(d, policy);
    for t in &traces {
        writeln!(s, "{t}").unwrap();
    }
    writeln!(
        s,
        "# policy {}  pairs {}  delivered {}  rate {:.6}  max-hops {}  mean-hops {:.6}",
        sum.policy, sum.pairs, sum.delivered, sum.delivery_rate, sum.max_hops, sum.mean_hops
    )
    .unwrap();
    Ok((s, sum.delivered == sum.pairs))
}
