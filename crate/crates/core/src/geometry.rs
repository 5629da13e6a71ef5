//! Exact planar predicates.
//!
//! Public entry points work on [`Point`]s with arbitrary-precision rational
//! coordinates. The verifiers rescale a drawing to integer coordinates once and
//! then run the generic predicates in [`exact`] over `i128` (or `BigInt` when the
//! coordinates are too large), so no floating point enters a verdict.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed>(v: &T) -> Sign {
        if v.is_zero() {
            Sign::Zero
        } else if v.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point {
            x: Rational::from_integer(x.into()),
            y: Rational::from_integer(y.into()),
        }
    }

    /// Exact conversion of a finite float pair.
    pub fn from_f64(x: f64, y: f64) -> Option<Self> {
        Some(Point {
            x: Rational::from_float(x)?,
            y: Rational::from_float(y)?,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Point {
        Point {
            x: &self.x + dx,
            y: &self.y + dy,
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn minus(&self, other: &Point) -> [Rational; 2] {
        [&self.x - &other.x, &self.y - &other.y]
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A nonzero direction vector. Two directions are equal when one is a positive
/// multiple of the other.
#[derive(Clone)]
pub struct Direction {
    pub dx: Rational,
    pub dy: Rational,
}

impl Direction {
    pub fn new(dx: Rational, dy: Rational) -> Result<Self> {
        if dx.is_zero() && dy.is_zero() {
            return Err(Error::Degenerate("zero direction".into()));
        }
        Ok(Direction { dx, dy })
    }

    pub fn int(dx: i64, dy: i64) -> Result<Self> {
        Direction::new(
            Rational::from_integer(dx.into()),
            Rational::from_integer(dy.into()),
        )
    }

    pub fn between(from: &Point, to: &Point) -> Result<Self> {
        let [dx, dy] = to.minus(from);
        Direction::new(dx, dy)
    }

    /// The direction with slope `k * pi/4`, for `k` taken mod 8.
    pub fn octant(k: u8) -> Direction {
        const UNIT: [(i64, i64); 8] = [
            (1, 0),
            (1, 1),
            (0, 1),
            (-1, 1),
            (-1, 0),
            (-1, -1),
            (0, -1),
            (1, -1),
        ];
        let (dx, dy) = UNIT[(k % 8) as usize];
        Direction::int(dx, dy).expect("octant directions are nonzero")
    }

    /// Counterclockwise quarter turn: `(dx, dy) -> (-dy, dx)`.
    pub fn rot90(&self) -> Direction {
        Direction {
            dx: -self.dy.clone(),
            dy: self.dx.clone(),
        }
    }

    fn as_array(&self) -> [Rational; 2] {
        [self.dx.clone(), self.dy.clone()]
    }
}

impl PartialEq for Direction {
    fn eq(&self, other: &Self) -> bool {
        let a = self.as_array();
        let b = other.as_array();
        exact::cross(&a, &b).is_zero() && exact::dot(&a, &b).is_positive()
    }
}

impl Eq for Direction {}

impl fmt::Debug for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.dx, self.dy)
    }
}

/// Closed quarter-turn wedge `[low, rot90(low)]`, swept counterclockwise from `low`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wedge {
    pub low: Direction,
}

impl Wedge {
    pub fn new(low: Direction) -> Self {
        Wedge { low }
    }

    /// The quarter-turn wedge bisected by the direction with slope `k * pi/4`.
    pub fn bisected_by_octant(k: u8) -> Self {
        Wedge {
            low: Direction::octant((k + 7) % 8),
        }
    }
}

/// Sign of `cross(b - a, c - a)`: positive for a counterclockwise turn.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Sign {
    exact::orient(&[a.x.clone(), a.y.clone()], &[b.x.clone(), b.y.clone()], &[c.x.clone(), c.y.clone()])
}

/// True iff the closed segments `p1p2` and `q1q2` share a point other than a
/// common endpoint. Overlaps and an endpoint touching the other segment's
/// interior count as crossings.
pub fn segments_cross(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> Result<bool> {
    if p1 == p2 || q1 == q2 {
        return Err(Error::Degenerate("segment with coincident endpoints".into()));
    }
    let arr = |p: &Point| [p.x.clone(), p.y.clone()];
    Ok(exact::segments_cross(&arr(p1), &arr(p2), &arr(q1), &arr(q2)))
}

pub fn in_wedge(e: &Direction, w: &Wedge) -> bool {
    exact::in_quarter_wedge(&e.as_array(), &w.low.as_array())
}

/// Twice the signed area of the polygon (positive when counterclockwise).
pub fn polygon_area2(pts: &[Point]) -> Result<Rational> {
    if pts.len() < 3 {
        return Err(Error::Degenerate(format!(
            "polygon needs at least 3 points, got {}",
            pts.len()
        )));
    }
    let mut acc = Rational::zero();
    for (i, p) in pts.iter().enumerate() {
        let q = &pts[(i + 1) % pts.len()];
        acc += &p.x * &q.y - &q.x * &p.y;
    }
    Ok(acc)
}

/// Rescales a point set by the least common multiple of all denominators,
/// returning integer coordinates. Every predicate in this module is invariant
/// under the positive scaling.
pub fn integer_frame(pts: &[Point]) -> Vec<[BigInt; 2]> {
    let mut l = BigInt::one();
    for p in pts {
        l = num_integer::lcm(l, p.x.denom().clone());
        l = num_integer::lcm(l, p.y.denom().clone());
    }
    pts.iter()
        .map(|p| {
            [
                p.x.numer() * (&l / p.x.denom()),
                p.y.numer() * (&l / p.y.denom()),
            ]
        })
        .collect()
}

/// Narrows an integer frame to `i128` if every coordinate fits comfortably:
/// differences and products of two differences must not overflow.
pub fn narrow_frame(frame: &[[BigInt; 2]]) -> Option<Vec<[i128; 2]>> {
    let bound = BigInt::from_i64(1 << 60).expect("constant fits");
    frame
        .iter()
        .map(|[x, y]| {
            if x.abs() >= bound || y.abs() >= bound {
                None
            } else {
                Some([x.to_i128()?, y.to_i128()?])
            }
        })
        .collect()
}

/// Generic exact predicates over any signed, totally ordered ring.
pub mod exact {
    use super::*;

    pub trait Coord: Clone + Ord + Signed + fmt::Debug {}
    impl<T: Clone + Ord + Signed + fmt::Debug> Coord for T {}

    pub fn sub<T: Coord>(a: &[T; 2], b: &[T; 2]) -> [T; 2] {
        [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone()]
    }

    pub fn cross<T: Coord>(a: &[T; 2], b: &[T; 2]) -> T {
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
    }

    pub fn dot<T: Coord>(a: &[T; 2], b: &[T; 2]) -> T {
        a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone()
    }

    pub fn norm2<T: Coord>(a: &[T; 2]) -> T {
        dot(a, a)
    }

    pub fn orient<T: Coord>(a: &[T; 2], b: &[T; 2], c: &[T; 2]) -> Sign {
        Sign::of(&cross(&sub(b, a), &sub(c, a)))
    }

    /// `p` lies on the closed segment `ab`, given that the three are collinear.
    fn on_collinear_segment<T: Coord>(a: &[T; 2], b: &[T; 2], p: &[T; 2]) -> bool {
        let lo_x = a[0].clone().min(b[0].clone());
        let hi_x = a[0].clone().max(b[0].clone());
        let lo_y = a[1].clone().min(b[1].clone());
        let hi_y = a[1].clone().max(b[1].clone());
        lo_x <= p[0] && p[0] <= hi_x && lo_y <= p[1] && p[1] <= hi_y
    }

    pub fn segments_cross<T: Coord>(p1: &[T; 2], p2: &[T; 2], q1: &[T; 2], q2: &[T; 2]) -> bool {
        let o1 = orient(p1, p2, q1);
        let o2 = orient(p1, p2, q2);
        let o3 = orient(q1, q2, p1);
        let o4 = orient(q1, q2, p2);
        let shared = |pt: &[T; 2]| (pt == p1 || pt == p2) && (pt == q1 || pt == q2);

        if o1 == Sign::Zero && o2 == Sign::Zero {
            // Collinear: intersect the two parameter intervals along p.
            let d = sub(p2, p1);
            let len = dot(&d, &d);
            let t = |pt: &[T; 2]| dot(&sub(pt, p1), &d);
            let (mut a, mut b) = (t(q1), t(q2));
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            let lo = a.max(T::zero());
            let hi = b.min(len);
            return match lo.cmp(&hi) {
                Ordering::Greater => false,
                Ordering::Less => true,
                Ordering::Equal => {
                    // Single touching point: one endpoint of each segment.
                    let touch = if lo.is_zero() { p1.clone() } else { p2.clone() };
                    !shared(&touch)
                }
            };
        }

        if o1 != Sign::Zero
            && o2 != Sign::Zero
            && o3 != Sign::Zero
            && o4 != Sign::Zero
        {
            return o1 != o2 && o3 != o4;
        }

        // Exactly one touching configuration is possible: at most one common point.
        let touches = [
            (o1, q1, p1, p2),
            (o2, q2, p1, p2),
            (o3, p1, q1, q2),
            (o4, p2, q1, q2),
        ];
        for (o, pt, a, b) in touches {
            if o == Sign::Zero && on_collinear_segment(a, b, pt) {
                return !shared(pt);
            }
        }
        false
    }

    pub fn in_quarter_wedge<T: Coord>(e: &[T; 2], low: &[T; 2]) -> bool {
        let high = [-low[1].clone(), low[0].clone()];
        let bisector = [low[0].clone() + high[0].clone(), low[1].clone() + high[1].clone()];
        !cross(low, e).is_negative()
            && !cross(e, &high).is_negative()
            && dot(e, &bisector).is_positive()
    }

    fn half<T: Coord>(v: &[T; 2]) -> u8 {
        if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
            0
        } else {
            1
        }
    }

    /// Counterclockwise angular order starting at slope 0; parallel vectors compare equal.
    pub fn angle_cmp<T: Coord>(a: &[T; 2], b: &[T; 2]) -> Ordering {
        half(a).cmp(&half(b)).then_with(|| {
            let c = cross(a, b);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    }
}
