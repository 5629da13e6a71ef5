use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, LN_2, PI};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{check_wood, roots, wood_of_nested, Color, SchnyderWood};
use crate::constructors::Drawing;
use crate::error::{invalid, Error, Result};
use crate::geometry::{polygon_area2, Point, Rational};
use crate::planegraph::{NestedTriangulation, VertexId};

/// Angular slack (radians) at the wedge boundaries of [`check_alpha`].
pub const ALPHA_TOLERANCE: f64 = 1e-9;

/// Relative slack on floating-point area ratios in [`audit_area`].
pub const AUDIT_REL_TOL: f64 = 1e-6;

/// Direction (radians) of the axis that outgoing edges of color `c` follow.
pub fn axis(c: Color) -> f64 {
    match c {
        Color::One => FRAC_PI_2,
        Color::Two => 11.0 * PI / 6.0,
        Color::Three => 7.0 * PI / 6.0,
    }
}

/// Unsigned angle between two directions, in `[0, pi]`.
fn angle_between(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaOffense {
    pub tail: VertexId,
    pub head: VertexId,
    pub color: Color,
    /// Angle between the edge and its axis, in radians.
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaReport {
    pub alpha: f64,
    pub conforms: bool,
    /// Twice the largest deviation of an outgoing edge from its axis; the
    /// drawing conforms exactly for `alpha >= minimal_alpha` (up to the tolerance).
    pub minimal_alpha: f64,
    /// Outgoing edges outside their wedge, largest deviation first.
    pub offending: Vec<AlphaOffense>,
}

/// Checks that at every inner vertex the outgoing edge of color 1, 2, 3
/// points within `alpha / 2` of `pi/2`, `11pi/6`, `7pi/6` respectively.
pub fn check_alpha(d: &Drawing, w: &SchnyderWood, alpha: f64) -> Result<AlphaReport> {
    check_alpha_with_tolerance(d, w, alpha, ALPHA_TOLERANCE)
}

pub fn check_alpha_with_tolerance(
    d: &Drawing,
    w: &SchnyderWood,
    alpha: f64,
    tolerance: f64,
) -> Result<AlphaReport> {
    if !(alpha > 0.0 && alpha <= FRAC_PI_3) {
        return Err(invalid(format!("alpha = {alpha} is outside (0, pi/3]")));
    }
    let wood = check_wood(d.graph(), w)?;
    if let Some(witness) = wood.witness {
        return Err(Error::InvalidWood(witness.to_string()));
    }
    let roots = roots(d.graph()).expect("triangulation");
    let mut out: BTreeMap<(VertexId, Color), VertexId> = BTreeMap::new();
    for e in w.edges() {
        out.insert((e.tail, e.color), e.head);
    }
    let mut worst = 0.0f64;
    let mut offending = Vec::new();
    for v in d.graph().vertices().filter(|v| !roots.contains(v)) {
        for c in Color::ALL {
            let head = out[&(v, c)];
            let deviation = angle_between(direction(d.point(v), d.point(head)), axis(c));
            worst = worst.max(deviation);
            if deviation > alpha / 2.0 + tolerance {
                offending.push(AlphaOffense {
                    tail: v,
                    head,
                    color: c,
                    deviation,
                });
            }
        }
    }
    offending.sort_by(|a, b| b.deviation.total_cmp(&a.deviation));
    Ok(AlphaReport {
        alpha,
        conforms: offending.is_empty(),
        minimal_alpha: 2.0 * worst,
        offending,
    })
}

/// Angle of `to - from`; the difference is formed exactly before rounding.
fn direction(from: &Point, to: &Point) -> f64 {
    let dx = ratio_to_f64(&(&to.x - &from.x));
    let dy = ratio_to_f64(&(&to.y - &from.y));
    dy.atan2(dx)
}

/// Float value of a rational that may have huge numerator and denominator.
fn ratio_to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    sign * (ln_big(&r.numer().abs()) - ln_big(r.denom())).exp()
}

/// Natural logarithm of a positive integer of any size.
fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_f64().expect("fits").ln();
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    top.to_f64().expect("fits").ln() + shift as f64 * LN_2
}

fn ln_rational(r: &Rational) -> f64 {
    ln_big(r.numer()) - ln_big(r.denom())
}

/// Per-level area amplification `1 + 2 sin(eps) / sin(2pi/3 - eps)` forced in
/// `(pi/3 - eps)`-Schnyder drawings of the nested triangulation.
pub fn k_epsilon(eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < FRAC_PI_3) {
        return Err(invalid(format!("epsilon = {eps} is outside (0, pi/3)")));
    }
    Ok(1.0 + 2.0 * eps.sin() / (2.0 * FRAC_PI_3 - eps).sin())
}

#[derive(Debug, Clone, PartialEq)]
pub struct LevelRatio {
    /// Level `i` of the ratio `A_i / A_{i-1}`.
    pub level: usize,
    pub ratio: f64,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditOptions {
    pub rel_tol: f64,
    pub alpha_tolerance: f64,
    /// Smallest admissible area of the innermost triangle. Defaults to 1/2
    /// for integer drawings and to the innermost triangle's own area otherwise.
    pub resolution_floor: Option<Rational>,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            rel_tol: AUDIT_REL_TOL,
            alpha_tolerance: ALPHA_TOLERANCE,
            resolution_floor: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AreaAudit {
    pub m: usize,
    pub epsilon: f64,
    pub k_epsilon: f64,
    /// Twice the area of triangle `(a_i, b_i, c_i)` for `i = 1..m-1`.
    pub doubled_areas: Vec<Rational>,
    /// `A_i / A_{i-1}` for `i = 2..m-1`.
    pub ratios: Vec<LevelRatio>,
    /// `ln(A_{m-1} / A_1)`, zero when `m < 3`.
    pub compound_log_ratio: f64,
    /// `(m-2) ln k_eps`, zero when `m < 3`.
    pub compound_log_bound: f64,
    pub compound_verdict: bool,
    pub resolution_floor: Rational,
    /// `ln` of the guaranteed area of triangle `m-1`: floor times `k_eps^(m-2)`.
    pub log_area_lower_bound: f64,
    pub verdict: bool,
}

/// [`audit_area_with`] using default options.
pub fn audit_area(d: &Drawing, g: &NestedTriangulation, eps: f64) -> Result<AreaAudit> {
    audit_area_with(d, g, eps, &AuditOptions::default())
}

/// Measures how fast the nested triangles grow in a drawing of `G_m` that is
/// `(pi/3 - eps)`-Schnyder for the nested wood: each ratio `A_i / A_{i-1}`
/// for `i = 2..m-1` is compared against `k_eps`, and `A_{m-1} / A_1` against
/// `k_eps^(m-2)` in log space.
pub fn audit_area_with(
    d: &Drawing,
    g: &NestedTriangulation,
    eps: f64,
    opts: &AuditOptions,
) -> Result<AreaAudit> {
    let k = k_epsilon(eps)?;
    if d.graph() != g.graph() {
        return Err(Error::FamilyMismatch("nested triangulation"));
    }
    let m = g.m();
    if m >= 2 {
        let wood = wood_of_nested(g)?;
        let report = check_alpha_with_tolerance(d, &wood, FRAC_PI_3 - eps, opts.alpha_tolerance)?;
        if let Some(o) = report.offending.first() {
            return Err(Error::AlphaViolation(format!(
                "edge {} -> {} of color {} deviates {:.6} rad from its axis, limit {:.6}",
                o.tail,
                o.head,
                o.color,
                o.deviation,
                (FRAC_PI_3 - eps) / 2.0
            )));
        }
    }
    let doubled_areas = (1..m)
        .map(|i| {
            let pts: Vec<Point> = g.level(i).iter().map(|&v| d.point(v).clone()).collect();
            polygon_area2(&pts).map(|a| a.abs())
        })
        .collect::<Result<Vec<_>>>()?;
    if doubled_areas.iter().any(Zero::is_zero) {
        return Err(Error::Degenerate("a nested triangle has zero area".into()));
    }
    let threshold = k * (1.0 - opts.rel_tol);
    let ratios: Vec<LevelRatio> = (2..m)
        .map(|i| {
            let ratio = ratio_to_f64(&(&doubled_areas[i - 1] / &doubled_areas[i - 2]));
            LevelRatio {
                level: i,
                ratio,
                verdict: ratio >= threshold,
            }
        })
        .collect();
    let (compound_log_ratio, compound_log_bound) = if m >= 3 {
        (
            ln_rational(&(&doubled_areas[m - 2] / &doubled_areas[0])),
            (m - 2) as f64 * k.ln(),
        )
    } else {
        (0.0, 0.0)
    };
    let compound_verdict = compound_log_ratio >= compound_log_bound + (1.0 - opts.rel_tol).ln();
    let half = Rational::new(1.into(), 2.into());
    let resolution_floor = match &opts.resolution_floor {
        Some(f) => f.clone(),
        None if d.is_integral() => half,
        None => doubled_areas.first().map(|a| a * &half).unwrap_or(half),
    };
    let log_area_lower_bound = ln_rational(&resolution_floor) + compound_log_bound;
    let verdict = compound_verdict && ratios.iter().all(|r| r.verdict);
    Ok(AreaAudit {
        m,
        epsilon: eps,
        k_epsilon: k,
        doubled_areas,
        ratios,
        compound_log_ratio,
        compound_log_bound,
        compound_verdict,
        resolution_floor,
        log_area_lower_bound,
        verdict,
    })
}
