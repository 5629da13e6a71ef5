//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the verdict lines always print; exits nonzero if any criterion fails.

mod common;

use std::f64::consts::{FRAC_PI_3, PI};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use greedy_grid::cli::format::{parse_document, write_document, Document};
use greedy_grid::constructors::{draw_cao, draw_cao_convex, draw_halin, draw_wheel, Drawing};
use greedy_grid::geometry::Point;
use greedy_grid::planegraph::{CaoGraph, CaoRole, HalinGraph, NestedTriangulation};
use greedy_grid::routing::{route_all, Policy};
use greedy_grid::schnyder::{audit_area, check_alpha, check_wood, k_epsilon, witness_drawing, wood_of_nested};
use greedy_grid::verify::{
    check_angle_monotone, check_convex, check_greedy, check_grid, check_planar, oracle_angle_monotone,
};
use rand::Rng;

/// Relative tolerance on floating-point area ratios.
const AREA_REL_TOL: f64 = 1e-6;
/// Absolute tolerance on `k_eps(pi/6) = 2`.
const K_TOL: f64 = 1e-12;

const CAO_MAX_I: usize = 50;
const HALIN_SAMPLES: u64 = 200;
const HALIN_MAX_N: usize = 200;
const AUDIT_MAX_M: usize = 30;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cao_drawings() -> Vec<Drawing> {
    (1..=CAO_MAX_I)
        .map(|i| draw_cao(&CaoGraph::generate(i, false).unwrap()).unwrap())
        .collect()
}

fn cao_convex_drawings() -> Vec<Drawing> {
    (1..=CAO_MAX_I)
        .map(|i| draw_cao_convex(&CaoGraph::generate(i, false).unwrap()).unwrap())
        .collect()
}

fn cao_plus_drawings() -> Vec<Drawing> {
    (1..=CAO_MAX_I)
        .map(|i| draw_cao(&CaoGraph::generate(i, true).unwrap()).unwrap())
        .collect()
}

fn halin_sizes() -> impl Iterator<Item = (u64, usize)> {
    (0..HALIN_SAMPLES).map(|seed| (seed, 4 + (seed as usize * 37) % (HALIN_MAX_N - 3)))
}

fn wheel_sizes() -> std::ops::RangeInclusive<usize> {
    3..=40
}

fn c1_cao() -> Outcome {
    for (k, d) in cao_drawings().iter().enumerate() {
        let i = k + 1;
        let side = 2 * i + 3;
        ensure(check_planar(d).verdict, || format!("i={i} not planar"))?;
        ensure(check_angle_monotone(d).verdict, || format!("i={i}: {}", check_angle_monotone(d)))?;
        ensure(d.width() == side && d.height() == side, || {
            format!("i={i}: {}x{} grid, want {side}x{side}", d.width(), d.height())
        })?;
    }
    Ok(format!("i=1..{CAO_MAX_I} planar, angle-monotone, width = height = 2i+3"))
}

fn c2_base_points() -> Outcome {
    use CaoRole::*;
    let g = CaoGraph::generate(1, false).unwrap();
    let d = draw_cao(&g).unwrap();
    let want = [
        (X, 0, (0, 0)),
        (X, 1, (0, 1)),
        (Y, 1, (1, -1)),
        (Z, 1, (-1, -1)),
        (X, 2, (-2, -2)),
        (Y, 2, (0, 2)),
        (Z, 2, (2, -2)),
    ];
    for (role, level, (x, y)) in want {
        let v = g.vertex(role, level);
        ensure(d.point(v) == &Point::int(x, y), || {
            format!("{} at {}, want ({x}, {y})", g.label(v), d.point(v))
        })?;
    }
    Ok("seven points verbatim with x0 at the origin".into())
}

fn c3_convex() -> Outcome {
    for (k, d) in cao_convex_drawings().iter().enumerate() {
        let i = k + 1;
        let side = 2 * i as u64 + 3;
        ensure(check_convex(d).unwrap().verdict, || format!("convex i={i}: {}", check_convex(d).unwrap()))?;
        ensure(check_angle_monotone(d).verdict, || format!("convex i={i} not angle-monotone"))?;
        ensure(check_grid(d, side, side).verdict, || format!("convex i={i} exceeds the grid"))?;
    }
    for (k, d) in cao_plus_drawings().iter().enumerate() {
        let i = k + 1;
        ensure(check_planar(d).verdict, || format!("plus i={i} not planar"))?;
        ensure(check_angle_monotone(d).verdict, || format!("plus i={i} not angle-monotone"))?;
        ensure(check_convex(d).unwrap().verdict, || format!("plus i={i}: {}", check_convex(d).unwrap()))?;
    }
    Ok(format!("convex and plus variants, i=1..{CAO_MAX_I}"))
}

fn halin_drawings() -> Vec<(HalinGraph, Drawing)> {
    halin_sizes()
        .map(|(seed, n)| {
            let h = HalinGraph::random(n, seed).unwrap();
            let d = draw_halin(&h).unwrap();
            (h, d)
        })
        .collect()
}

fn wheel_drawings() -> Vec<Drawing> {
    wheel_sizes()
        .map(|k| draw_wheel(&HalinGraph::wheel(k).unwrap()).unwrap())
        .collect()
}

fn c4_halin() -> Outcome {
    let mut wheels = 0;
    for (h, d) in halin_drawings() {
        let n = h.graph().vertex_count();
        ensure(check_planar(&d).verdict, || format!("n={n} not planar"))?;
        ensure(check_convex(&d).unwrap().verdict, || format!("n={n}: {}", check_convex(&d).unwrap()))?;
        ensure(check_angle_monotone(&d).verdict, || format!("n={n} not angle-monotone"))?;
        match h.split() {
            Ok(sp) => {
                let (lt, ls) = (sp.t.leaf_count(), sp.s.leaf_count());
                let (w, ht) = ((2 * lt - 1).max(2 * ls - 1), lt + ls);
                ensure(d.width() == w && d.height() == ht, || {
                    format!("n={n}: {}x{}, want {w}x{ht}", d.width(), d.height())
                })?;
            }
            Err(_) => {
                wheels += 1;
                ensure(check_grid(&d, n as u64 - 1, 3).verdict, || format!("wheel n={n} off grid"))?;
            }
        }
    }
    for d in wheel_drawings() {
        let n = d.vertex_count();
        ensure(check_planar(&d).verdict, || format!("wheel n={n} not planar"))?;
        ensure(check_convex(&d).unwrap().verdict, || format!("wheel n={n} not convex"))?;
        ensure(check_angle_monotone(&d).verdict, || format!("wheel n={n} not angle-monotone"))?;
        ensure(check_grid(&d, n as u64 - 1, 3).verdict, || format!("wheel n={n} off the 3x(n-1) grid"))?;
    }
    Ok(format!(
        "{HALIN_SAMPLES} random Halin graphs (n<={HALIN_MAX_N}, {wheels} wheels among them), wheels k={}..{}",
        wheel_sizes().start(),
        wheel_sizes().end()
    ))
}

fn c5_greedy() -> Outcome {
    let mut all: Vec<Drawing> = Vec::new();
    all.extend(cao_drawings());
    all.extend(cao_convex_drawings());
    all.extend(cao_plus_drawings());
    all.extend(halin_drawings().into_iter().map(|(_, d)| d));
    all.extend(wheel_drawings());
    for d in &all {
        let n = d.vertex_count();
        ensure(check_greedy(d).verdict, || format!("n={n}: {}", check_greedy(d)))?;
        for p in Policy::ALL {
            let s = route_all(d, p);
            ensure(s.delivery_rate == 1.0, || format!("n={n}: {p} delivers {}", s.delivery_rate))?;
        }
    }
    Ok(format!("{} drawings greedy, delivery rate 1.0 under both policies", all.len()))
}

fn c6_soundness() -> Outcome {
    let mut r = common::rng(2024);
    let random: Vec<Drawing> = (0..100)
        .map(|_| {
            let n = r.gen_range(2..=10);
            common::random_plane_drawing(&mut r, n, 7)
        })
        .collect();
    let mut pairs = 0;
    for d in &random {
        let n = d.vertex_count();
        let mut all = true;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    all &= oracle_angle_monotone(d, u, v).unwrap();
                    pairs += 1;
                }
            }
        }
        ensure(check_angle_monotone(d).verdict == all, || {
            format!("angle-monotone disagrees with the path search: {}", check_angle_monotone(d))
        })?;
    }
    let mut perturbed = Vec::new();
    for k in 0..100usize {
        let base = if k % 2 == 0 {
            draw_cao(&CaoGraph::generate(1 + k % 6, k % 4 == 0).unwrap()).unwrap()
        } else {
            draw_halin(&HalinGraph::random(5 + k % 25, k as u64).unwrap()).unwrap()
        };
        perturbed.push(common::perturb(&base, &mut r, 3));
    }
    for d in random.iter().chain(&perturbed) {
        let greedy = check_greedy(d).verdict;
        for p in Policy::ALL {
            ensure(greedy == (route_all(d, p).delivery_rate == 1.0), || {
                format!("greedy verdict {greedy} disagrees with {p} routing")
            })?;
        }
    }
    Ok(format!("{pairs} ordered pairs on 100 random drawings, 200 greedy comparisons"))
}

fn c7_woods() -> Outcome {
    for m in 2..=12 {
        let g = NestedTriangulation::generate(m).unwrap();
        let w = wood_of_nested(&g).unwrap();
        let r = check_wood(g.graph(), &w).unwrap();
        ensure(r.verdict, || format!("m={m}: {r}"))?;
    }
    for m in 2..=3 {
        let g = NestedTriangulation::generate(m).unwrap();
        let woods = common::enumerate_woods(g.graph());
        ensure(woods.len() == 1, || format!("G_{m} has {} woods", woods.len()))?;
        ensure(woods[0] == wood_of_nested(&g).unwrap(), || format!("G_{m}: enumerated wood differs"))?;
    }
    Ok("closed form valid for m=2..12; unique wood on G_2 and G_3".into())
}

fn c8_audit() -> Outcome {
    let mut min_margin = f64::INFINITY;
    for alpha in [PI / 18.0, PI / 9.0, PI / 6.0] {
        let eps = FRAC_PI_3 - alpha;
        let k = k_epsilon(eps).unwrap();
        for m in 2..=AUDIT_MAX_M {
            let g = NestedTriangulation::generate(m).unwrap();
            let d = witness_drawing(m, alpha).map_err(|e| format!("alpha={alpha:.4} m={m}: {e}"))?;
            let rep = check_alpha(&d, &wood_of_nested(&g).unwrap(), alpha).unwrap();
            ensure(rep.conforms, || format!("alpha={alpha:.4} m={m} not alpha-Schnyder"))?;
            let a = audit_area(&d, &g, eps).map_err(|e| e.to_string())?;
            for lr in &a.ratios {
                ensure(lr.ratio >= k * (1.0 - AREA_REL_TOL), || {
                    format!("alpha={alpha:.4} m={m}: A_{}/A_{} = {} < {k}", lr.level, lr.level - 1, lr.ratio)
                })?;
                min_margin = min_margin.min(lr.ratio / k);
            }
            ensure(a.compound_log_ratio >= a.compound_log_bound + (1.0 - AREA_REL_TOL).ln(), || {
                format!("alpha={alpha:.4} m={m}: compound growth below k^(m-2)")
            })?;
            ensure(a.verdict, || format!("alpha={alpha:.4} m={m}: audit failed"))?;
        }
    }
    Ok(format!(
        "alpha in {{pi/18, pi/9, pi/6}}, m=2..{AUDIT_MAX_M}; smallest ratio / k_eps = {min_margin:.3}"
    ))
}

fn c9_k_epsilon() -> Outcome {
    let k = k_epsilon(PI / 6.0).unwrap();
    ensure((k - 2.0).abs() <= K_TOL, || format!("k(pi/6) = {k}"))?;
    let mut last = 1.0;
    for j in 1..=1000 {
        let eps = FRAC_PI_3 * j as f64 / 1001.0;
        let k = k_epsilon(eps).unwrap();
        ensure(k > last, || format!("not increasing at eps={eps}"))?;
        last = k;
    }
    Ok(format!("k(pi/6) - 2 = {:.1e}; increasing and > 1 on 1000 points", k - 2.0))
}

fn c10_roundtrip() -> Outcome {
    let mut docs = Vec::new();
    for i in [1, 7, 20] {
        let g = CaoGraph::generate(i, i == 7).unwrap();
        let labels = g.graph().vertices().map(|v| (v, g.label(v).to_string())).collect();
        docs.push(Document::drawing(&draw_cao(&g).unwrap()).with_labels(labels));
    }
    for seed in 0..20 {
        docs.push(Document::graph(HalinGraph::random(10 + seed as usize * 7, seed).unwrap().graph().clone()));
    }
    let g = NestedTriangulation::generate(6).unwrap();
    docs.push(Document::drawing(&witness_drawing(6, PI / 9.0).unwrap()).with_wood(wood_of_nested(&g).unwrap()));
    for doc in &docs {
        let text = write_document(doc);
        let back = parse_document(&text).map_err(|e| e.to_string())?;
        ensure(&back == doc && write_document(&back) == text, || "round trip changed a file".into())?;
    }
    let bin = env!("CARGO_BIN_EXE_greedy-grid");
    let dir = tempfile::TempDir::new().unwrap();
    let mut files = Vec::new();
    for k in 0..2 {
        let g = dir.path().join(format!("g{k}"));
        let d = dir.path().join(format!("d{k}"));
        let ok = |args: &[&std::ffi::OsStr]| Command::new(bin).args(args).status().unwrap().success();
        ensure(
            ok(&["generate".as_ref(), "halin-random".as_ref(), "--n".as_ref(), "150".as_ref(), "--seed".as_ref(), "99".as_ref(), "--out".as_ref(), g.as_os_str()]),
            || "generate failed".into(),
        )?;
        ensure(
            ok(&["draw".as_ref(), "halin".as_ref(), g.as_os_str(), "--out".as_ref(), d.as_os_str()]),
            || "draw failed".into(),
        )?;
        files.push((std::fs::read(&g).unwrap(), std::fs::read(&d).unwrap()));
    }
    ensure(files[0] == files[1], || "seeded runs differ".into())?;
    Ok(format!("{} documents bit-exact; seeded CLI runs identical", docs.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 hexagon family drawings", c1_cao),
        ("2 base-case coordinates", c2_base_points),
        ("3 convex and closed variants", c3_convex),
        ("4 Halin graphs and wheels", c4_halin),
        ("5 greediness and delivery", c5_greedy),
        ("6 verifier soundness", c6_soundness),
        ("7 nested Schnyder wood", c7_woods),
        ("8 area growth audit", c8_audit),
        ("9 k_eps sanity", c9_k_epsilon),
        ("10 round trip and determinism", c10_roundtrip),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, f) in criteria {
        if !filter.is_empty() && !filter.iter().any(|x| name.contains(x.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} ({secs:.1}s)");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
