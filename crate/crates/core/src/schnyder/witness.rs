use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

use super::{check_alpha, wood_of_nested};
use crate::constructors::Drawing;
use crate::error::{invalid, Error, Result};
use crate::geometry::{Point, Rational};
use crate::planegraph::{NestedRole, NestedTriangulation};
use crate::verify::check_planar;

/// Fraction of `alpha` used as the deviation of the edges inside one level,
/// leaving a margin of `0.11 alpha` to each wedge boundary.
const SHAPE_FRACTION: f64 = 0.39;

/// Relative headroom added to the smallest admissible scale.
const SCALE_HEADROOM: f64 = 1e-3;

/// Shape of one level of the witness: `a` at distance 1 straight up from the
/// common center, `b` at distance `t_b` toward `-pi/6`, `c` at distance
/// `t_c` toward `7pi/6`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessShape {
    pub beta: f64,
    pub t_b: f64,
    pub t_c: f64,
    /// Smallest level-to-level scale that keeps the edges between levels
    /// inside their wedges.
    pub min_scale: f64,
}

impl WitnessShape {
    /// `t_b` puts `b -> a` exactly `beta` off vertical; `t_c = q t_b` with `q`
    /// chosen so that `c -> b` is `beta` off its axis as well.
    pub fn for_alpha(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < FRAC_PI_3) {
            return Err(invalid(format!("alpha = {alpha} is outside (0, pi/3)")));
        }
        let beta = SHAPE_FRACTION * alpha;
        let sqrt3 = 3f64.sqrt();
        let tau = sqrt3 * (FRAC_PI_6 - beta).tan();
        let q = (1.0 - tau) / (1.0 + tau);
        let t_b = beta.tan() / (sqrt3 / 2.0 - beta.tan() / 2.0);
        let t_c = q * t_b;
        let up_reach = 1.0 / (t_c * (sqrt3 / 2.0 * (FRAC_PI_6 + beta).tan() - 0.5));
        let min_scale = up_reach.max(1.0 / (q * q));
        Ok(WitnessShape {
            beta,
            t_b,
            t_c,
            min_scale,
        })
    }

    fn offsets(&self) -> [(f64, f64); 3] {
        let (s, c) = (-FRAC_PI_6).sin_cos();
        let (s2, c2) = (7.0 * FRAC_PI_6).sin_cos();
        [
            (0.0, 1.0),
            (self.t_b * c, self.t_b * s),
            (self.t_c * c2, self.t_c * s2),
        ]
    }
}

/// The scale used by [`witness_drawing`].
pub fn default_witness_scale(alpha: f64) -> Result<f64> {
    Ok(WitnessShape::for_alpha(alpha)?.min_scale * (1.0 + SCALE_HEADROOM))
}

/// An α-Schnyder drawing of `G_m` made of concentric similar triangles, each
/// level `scale` times the previous one.
pub fn witness_drawing(m: usize, alpha: f64) -> Result<Drawing> {
    witness_drawing_with_scale(m, alpha, default_witness_scale(alpha)?)
}

/// As [`witness_drawing`] with an explicit scale. Coordinates are exact
/// rationals: the level shape is rounded to doubles once and then scaled
/// exactly, so consecutive areas differ by exactly `scale^2`.
pub fn witness_drawing_with_scale(m: usize, alpha: f64, scale: f64) -> Result<Drawing> {
    if m < 2 {
        return Err(invalid("the witness needs m >= 2"));
    }
    if !(scale.is_finite() && scale > 1.0) {
        return Err(invalid(format!("scale {scale} must exceed 1")));
    }
    let shape = WitnessShape::for_alpha(alpha)?;
    let g = NestedTriangulation::generate(m)?;
    let s = Rational::from_float(scale).expect("finite");
    let base: Vec<Point> = shape
        .offsets()
        .iter()
        .map(|&(x, y)| Point::from_f64(x, y).expect("finite"))
        .collect();
    let mut coords = vec![Point::int(0, 0); 3 * m];
    let mut factor = Rational::from_integer(1.into());
    for k in 1..=m {
        for (role, p) in [NestedRole::A, NestedRole::B, NestedRole::C].into_iter().zip(&base) {
            coords[NestedTriangulation::id(role, k)] = Point::new(&p.x * &factor, &p.y * &factor);
        }
        factor *= &s;
    }
    let d = Drawing::new(g.graph().clone(), coords)?;
    let wood = wood_of_nested(&g)?;
    let report = check_alpha(&d, &wood, alpha)?;
    if let Some(o) = report.offending.first() {
        return Err(Error::AlphaViolation(format!(
            "scale {scale}: edge {} -> {} leaves the color-{} wedge (deviation {:.6} rad, limit {:.6})",
            o.tail,
            o.head,
            o.color,
            o.deviation,
            alpha / 2.0
        )));
    }
    if let Some(w) = check_planar(&d).witness {
        return Err(Error::NonPlanar(w.to_string()));
    }
    Ok(d)
}
