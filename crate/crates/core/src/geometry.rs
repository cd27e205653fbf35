//! Moment regions of toric domains.
//!
//! A [`ToricRegion`] is a polygonal region Ω in the closed positive quadrant,
//! bounded by the two axis segments and a chain ∂₊Ω from `(a(Ω), 0)` to
//! `(0, b(Ω))`. Convex regions have a chain that is the graph of a concave
//! non-increasing function (optionally ending in a vertical segment at
//! `x = a(Ω)`); concave regions have a chain that is the graph of a convex,
//! strictly decreasing function.
//!
//! Everything here is exact. A region is only ever seen by the rest of the
//! crate through its support values ([`ToricRegion::support`] for convex
//! regions, [`ToricRegion::bracket`] for concave ones) and through closed
//! containment tests.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Convex,
    Concave,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Convex => "convex",
            Flavor::Concave => "concave",
        })
    }
}

/// A primitive nonnegative integer vector `(a, b)`, the label of a torus of
/// Reeb orbits and of the edges of lattice paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(u64, u64)", into = "(u64, u64)")]
pub struct Direction {
    a: u64,
    b: u64,
}

impl Direction {
    pub const E10: Direction = Direction { a: 1, b: 0 };
    pub const E01: Direction = Direction { a: 0, b: 1 };
    pub const DIAGONAL: Direction = Direction { a: 1, b: 1 };

    pub fn new(a: u64, b: u64) -> Result<Self> {
        if (a, b) == (0, 0) || a.gcd(&b) != 1 {
            return Err(Error::InvalidDirection { a, b });
        }
        Ok(Direction { a, b })
    }

    /// Divides out the gcd; `None` for `(0, 0)`.
    pub fn reduced(a: u64, b: u64) -> Option<Self> {
        if (a, b) == (0, 0) {
            return None;
        }
        let g = a.gcd(&b);
        Some(Direction { a: a / g, b: b / g })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// True for `(1,0)` and `(0,1)`.
    pub fn is_axis(&self) -> bool {
        self.a == 0 || self.b == 0
    }

    pub fn transpose(&self) -> Self {
        Direction { a: self.b, b: self.a }
    }

    pub fn eval(&self, p: &Point) -> Rational {
        p.x.mul_int(self.a) + p.y.mul_int(self.b)
    }

    /// Compares the ratios `a/b` (with `b = 0` as +∞).
    pub fn cmp_ratio(&self, other: &Direction) -> Ordering {
        (self.a as u128 * other.b as u128).cmp(&(other.a as u128 * self.b as u128))
    }

    fn from_rational_vector(x: &Rational, y: &Rational) -> Result<Self> {
        let l = x.denom().lcm(y.denom());
        let ix = (x * Rational::from(l.clone())).numer().clone();
        let iy = (y * Rational::from(l)).numer().clone();
        let g = ix.gcd(&iy);
        if g.is_zero() {
            return Err(Error::InvalidRegion("degenerate edge".into()));
        }
        let too_big = || Error::InvalidRegion("edge normal does not fit in 64 bits".into());
        let a = (&ix / &g).to_u64().ok_or_else(too_big)?;
        let b = (&iy / &g).to_u64().ok_or_else(too_big)?;
        Direction::new(a, b)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl TryFrom<(u64, u64)> for Direction {
    type Error = Error;
    fn try_from((a, b): (u64, u64)) -> Result<Self> {
        Direction::new(a, b)
    }
}

impl From<Direction> for (u64, u64) {
    fn from(d: Direction) -> Self {
        (d.a, d.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(Rational, Rational)", into = "(Rational, Rational)")]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(x.into(), y.into())
    }

    pub fn sum(&self) -> Rational {
        &self.x + &self.y
    }
}

impl From<(Rational, Rational)> for Point {
    fn from((x, y): (Rational, Rational)) -> Self {
        Point { x, y }
    }
}

impl From<Point> for (Rational, Rational) {
    fn from(p: Point) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A polygonal moment region Ω.
///
/// `boundary` lists the vertices of ∂₊Ω from `(a(Ω), 0)` to `(0, b(Ω))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRegion")]
pub struct ToricRegion {
    flavor: Flavor,
    boundary: Vec<Point>,
}

#[derive(Deserialize)]
struct RawRegion {
    flavor: Flavor,
    boundary: Vec<Point>,
}

impl TryFrom<RawRegion> for ToricRegion {
    type Error = Error;
    fn try_from(raw: RawRegion) -> Result<Self> {
        ToricRegion::new(raw.flavor, raw.boundary)
    }
}

fn cross(u: (&Rational, &Rational), v: (&Rational, &Rational)) -> Rational {
    u.0 * v.1 - u.1 * v.0
}

impl ToricRegion {
    pub fn new(flavor: Flavor, boundary: Vec<Point>) -> Result<Self> {
        let region = ToricRegion { flavor, boundary };
        region.validate()?;
        Ok(region)
    }

    /// The ball `B⁴(r)`: triangle with legs `r`, `r`.
    pub fn ball(r: Rational) -> Result<Self> {
        Self::ellipsoid(r.clone(), r)
    }

    /// The ellipsoid `E(a, b)`: triangle with legs `a` on the x-axis and `b`
    /// on the y-axis.
    pub fn ellipsoid(a: Rational, b: Rational) -> Result<Self> {
        Self::new(
            Flavor::Convex,
            vec![Point::new(a, Rational::zero()), Point::new(Rational::zero(), b)],
        )
    }

    /// The polydisk `P(a, b)`: rectangle `[0,a] × [0,b]`.
    pub fn polydisk(a: Rational, b: Rational) -> Result<Self> {
        Self::new(
            Flavor::Convex,
            vec![
                Point::new(a.clone(), Rational::zero()),
                Point::new(a, b.clone()),
                Point::new(Rational::zero(), b),
            ],
        )
    }

    /// The triangle with legs `a`, `b`, read as a concave region.
    pub fn concave_triangle(a: Rational, b: Rational) -> Result<Self> {
        Self::new(
            Flavor::Concave,
            vec![Point::new(a, Rational::zero()), Point::new(Rational::zero(), b)],
        )
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidRegion(msg));
        let pts = &self.boundary;
        if pts.len() < 2 {
            return bad("boundary needs at least two vertices".into());
        }
        let first = &pts[0];
        let last = &pts[pts.len() - 1];
        if !(first.y.is_zero() && first.x.is_positive()) {
            return bad(format!("first vertex {first} must lie on the positive x-axis"));
        }
        if !(last.x.is_zero() && last.y.is_positive()) {
            return bad(format!("last vertex {last} must lie on the positive y-axis"));
        }
        for p in &pts[1..pts.len() - 1] {
            if !(p.x.is_positive() && p.y.is_positive()) {
                return bad(format!("interior vertex {p} must lie off the axes"));
            }
        }
        let edges: Vec<(Rational, Rational)> = self
            .chain()
            .collect::<Vec<_>>()
            .windows(2)
            .map(|w| (&w[1].x - &w[0].x, &w[1].y - &w[0].y))
            .collect();
        let n = edges.len();
        for (i, (dx, dy)) in edges.iter().enumerate() {
            if dx.is_zero() && dy.is_zero() {
                return bad("consecutive vertices coincide".into());
            }
            match self.flavor {
                Flavor::Convex => {
                    if dx.is_negative() || dy.is_positive() {
                        return bad("convex boundary must be non-increasing from (0,b) to (a,0)".into());
                    }
                    if dy.is_zero() && i != 0 {
                        return bad("only the first edge at (0,b) may be horizontal".into());
                    }
                    if dx.is_zero() && i != n - 1 {
                        return bad("only the last edge at x = a may be vertical".into());
                    }
                }
                Flavor::Concave => {
                    if !(dx.is_positive() && dy.is_negative()) {
                        return bad("concave boundary must be strictly decreasing with no horizontal or vertical edges".into());
                    }
                }
            }
        }
        for w in edges.windows(2) {
            let turn = cross((&w[0].0, &w[0].1), (&w[1].0, &w[1].1));
            let ok = match self.flavor {
                Flavor::Convex => turn.is_negative(),
                Flavor::Concave => turn.is_positive(),
            };
            if !ok {
                return bad(format!(
                    "edge slopes must be strictly {} along the boundary",
                    match self.flavor {
                        Flavor::Convex => "decreasing",
                        Flavor::Concave => "increasing",
                    }
                ));
            }
        }
        Ok(())
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Vertices of ∂₊Ω from `(a, 0)` to `(0, b)`.
    pub fn boundary(&self) -> &[Point] {
        &self.boundary
    }

    /// Vertices of ∂₊Ω from `(0, b)` to `(a, 0)`.
    pub fn chain(&self) -> impl DoubleEndedIterator<Item = &Point> + Clone {
        self.boundary.iter().rev()
    }

    pub fn axis_caps(&self) -> (Rational, Rational) {
        (self.a(), self.b())
    }

    pub fn a(&self) -> Rational {
        self.boundary[0].x.clone()
    }

    pub fn b(&self) -> Rational {
        self.boundary[self.boundary.len() - 1].y.clone()
    }

    fn require(&self, flavor: Flavor, op: &'static str) -> Result<()> {
        if self.flavor == flavor {
            Ok(())
        } else {
            Err(Error::FlavorMismatch { op, expected: flavor })
        }
    }

    /// `max { a·x + b·y : (x, y) ∈ Ω }`.
    pub fn support(&self, d: Direction) -> Result<Rational> {
        self.require(Flavor::Convex, "support")?;
        Ok(self.boundary.iter().map(|p| d.eval(p)).max().expect("nonempty boundary"))
    }

    /// `min { a·x + b·y : (x, y) ∈ ∂₊Ω }`.
    pub fn bracket(&self, d: Direction) -> Result<Rational> {
        self.require(Flavor::Concave, "bracket")?;
        Ok(self.boundary.iter().map(|p| d.eval(p)).min().expect("nonempty boundary"))
    }

    /// Support for convex regions, bracket for concave ones.
    pub fn action_of(&self, d: Direction) -> Rational {
        match self.flavor {
            Flavor::Convex => self.support(d),
            Flavor::Concave => self.bracket(d),
        }
        .expect("flavor matched")
    }

    /// Primitive outward normals of the edges of ∂₊Ω, in chain order.
    pub fn edge_normals(&self) -> Vec<Direction> {
        let pts: Vec<&Point> = self.chain().collect();
        pts.windows(2)
            .map(|w| {
                let dx = &w[1].x - &w[0].x;
                let dy = &w[1].y - &w[0].y;
                Direction::from_rational_vector(&(-dy), &dx).expect("validated region")
            })
            .collect()
    }

    /// Height of the upper boundary over `x`: the largest `y` with
    /// `(x, y) ∈ Ω`, or `None` when `x ∉ [0, a]`.
    pub fn height_at(&self, x: &Rational) -> Option<Rational> {
        if x.is_negative() || *x > self.a() {
            return None;
        }
        let pts: Vec<&Point> = self.chain().collect();
        let mut best: Option<Rational> = None;
        for w in pts.windows(2) {
            let (p, r) = (w[0], w[1]);
            if x < &p.x || x > &r.x {
                continue;
            }
            let y = if p.x == r.x {
                p.y.clone().max(r.y.clone())
            } else {
                &p.y + (&r.y - &p.y) * (x - &p.x) / (&r.x - &p.x)
            };
            best = Some(match best {
                Some(b) => b.max(y),
                None => y,
            });
        }
        best
    }

    /// Closed containment of a point.
    pub fn contains_point(&self, p: &Point) -> bool {
        if p.x.is_negative() || p.y.is_negative() {
            return false;
        }
        match self.height_at(&p.x) {
            Some(h) => p.y <= h,
            None => false,
        }
    }

    /// Open interior in ℝ²: `x > 0`, `y > 0`, strictly below ∂₊Ω.
    pub fn interior_contains_point(&self, p: &Point) -> bool {
        if !(p.x.is_positive() && p.y.is_positive()) || p.x >= self.a() {
            return false;
        }
        match self.height_at(&p.x) {
            Some(h) => p.y < h,
            None => false,
        }
    }

    /// The `(1,1)`-support value and a maximizing vertex of ∂₊Ω. When an
    /// edge of slope −1 maximizes, its lower-right vertex is returned.
    pub fn slope_minus_one_support(&self) -> Result<(Point, Rational)> {
        self.require(Flavor::Convex, "slope_minus_one_support")?;
        let best = self
            .boundary
            .iter()
            .max_by(|p, r| p.sum().cmp(&r.sum()).then_with(|| p.x.cmp(&r.x)))
            .expect("nonempty boundary");
        Ok((best.clone(), best.sum()))
    }

    /// Index of the vertex returned by [`slope_minus_one_support`] in
    /// `boundary()`.
    ///
    /// [`slope_minus_one_support`]: ToricRegion::slope_minus_one_support
    pub(crate) fn tangency_index(&self) -> usize {
        let (pt, _) = self.slope_minus_one_support().expect("convex");
        self.boundary.iter().position(|p| *p == pt).expect("vertex")
    }

    /// Does the closed segment `[p, q]` meet the open interior of a convex
    /// region?
    pub fn segment_meets_interior(&self, p: &Point, q: &Point) -> Result<bool> {
        self.require(Flavor::Convex, "segment_meets_interior")?;
        // Open interior = {x > 0} ∩ {y > 0} ∩ {n·z < c_n over edges}.
        let mut constraints: Vec<(Rational, Rational, Rational)> = vec![
            (Rational::from(-1i64), Rational::zero(), Rational::zero()),
            (Rational::zero(), Rational::from(-1i64), Rational::zero()),
        ];
        let pts: Vec<&Point> = self.chain().collect();
        for (n, w) in self.edge_normals().into_iter().zip(pts.windows(2)) {
            constraints.push((Rational::from(n.a()), Rational::from(n.b()), n.eval(w[0])));
        }
        let dx = &q.x - &p.x;
        let dy = &q.y - &p.y;
        // Feasible t-set: [0,1] intersected with open half-lines.
        let mut lo = (Rational::zero(), true);
        let mut hi = (Rational::one(), true);
        for (ax, ay, c) in constraints {
            let u = &ax * &p.x + &ay * &p.y;
            let w = &ax * &dx + &ay * &dy;
            if w.is_zero() {
                if u >= c {
                    return Ok(false);
                }
                continue;
            }
            let t = (&c - &u) / &w;
            if w.is_positive() {
                if t <= hi.0 {
                    hi = (t, false);
                }
            } else if t >= lo.0 {
                lo = (t, false);
            }
        }
        Ok(lo.0 < hi.0 || (lo.0 == hi.0 && lo.1 && hi.1))
    }

    /// Reflection across the diagonal.
    pub fn transpose(&self) -> Self {
        let boundary = self
            .boundary
            .iter()
            .rev()
            .map(|p| Point::new(p.y.clone(), p.x.clone()))
            .collect();
        ToricRegion { flavor: self.flavor, boundary }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        assert!(k.is_positive());
        let boundary =
            self.boundary.iter().map(|p| Point::new(&p.x * k, &p.y * k)).collect();
        ToricRegion { flavor: self.flavor, boundary }
    }

    /// `Some((a, b))` when the region is the rectangle `[0,a] × [0,b]`.
    pub fn as_polydisk(&self) -> Option<(Rational, Rational)> {
        match self.boundary.as_slice() {
            [p, c, r] if self.flavor == Flavor::Convex && c.x == p.x && c.y == r.y => {
                Some((p.x.clone(), r.y.clone()))
            }
            _ => None,
        }
    }

    fn breakpoints(&self) -> impl Iterator<Item = &Rational> {
        self.boundary.iter().map(|p| &p.x)
    }
}

fn same_flavor(inner: &ToricRegion, outer: &ToricRegion, op: &'static str) -> Result<Flavor> {
    if inner.flavor != outer.flavor {
        return Err(Error::MixedFlavors { op });
    }
    Ok(inner.flavor)
}

/// Compares the upper boundary functions on `[0, a(inner)]` at every
/// breakpoint of either chain. Both are piecewise linear and continuous on
/// that interval, so breakpoints suffice.
fn compare_heights(inner: &ToricRegion, outer: &ToricRegion, strict: bool) -> bool {
    let a_in = inner.a();
    let a_out = outer.a();
    if a_in > a_out || (strict && a_in == a_out) {
        return false;
    }
    let mut xs: Vec<&Rational> =
        inner.breakpoints().chain(outer.breakpoints().filter(|x| **x <= a_in)).collect();
    xs.sort();
    xs.dedup();
    xs.into_iter().all(|x| {
        let hi = inner.height_at(x).expect("x within inner range");
        let ho = outer.height_at(x).expect("x within outer range");
        if strict {
            hi < ho
        } else {
            hi <= ho
        }
    })
}

/// Closed containment `inner ⊂ outer`. Flavors may differ.
pub fn region_contains(inner: &ToricRegion, outer: &ToricRegion) -> bool {
    compare_heights(inner, outer, false)
}

/// `inner ⊂ int(outer)`, interior taken relative to the closed quadrant.
pub fn region_contains_strictly(inner: &ToricRegion, outer: &ToricRegion) -> bool {
    compare_heights(inner, outer, true)
}

/// The union of both regions' edge normals with `(1,0)` and `(0,1)`,
/// sorted and deduplicated.
pub fn candidate_normals(inner: &ToricRegion, outer: &ToricRegion) -> Vec<Direction> {
    let mut dirs = inner.edge_normals();
    dirs.extend(outer.edge_normals());
    dirs.push(Direction::E10);
    dirs.push(Direction::E01);
    dirs.sort_by(|x, y| x.cmp_ratio(y));
    dirs.dedup();
    dirs
}

/// A direction `d` with `inner.action_of(d) > outer.action_of(d)`, together
/// with both values. The first such direction in `a/b` order is returned.
pub fn violated_direction(
    inner: &ToricRegion,
    outer: &ToricRegion,
) -> Result<Option<(Direction, Rational, Rational)>> {
    same_flavor(inner, outer, "violated_direction")?;
    Ok(candidate_normals(inner, outer).into_iter().find_map(|d| {
        let vi = inner.action_of(d);
        let vo = outer.action_of(d);
        (vi > vo).then_some((d, vi, vo))
    }))
}

/// Support (convex) or bracket (concave) comparison over the finite
/// candidate normal set. Agrees with [`region_contains`].
pub fn support_dominates(inner: &ToricRegion, outer: &ToricRegion) -> Result<bool> {
    Ok(violated_direction(inner, outer)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn support_examples() {
        let ball = ToricRegion::ball(r(5)).unwrap();
        assert_eq!(ball.support(Direction::DIAGONAL).unwrap(), r(5));
        let poly = ToricRegion::polydisk(q(7, 2), r(1)).unwrap();
        assert_eq!(poly.support(Direction::DIAGONAL).unwrap(), q(9, 2));
        let e = ToricRegion::ellipsoid(r(11), r(7)).unwrap();
        assert_eq!(e.support(Direction::E10).unwrap(), r(11));
        assert_eq!(e.support(Direction::E01).unwrap(), r(7));
    }

    #[test]
    fn support_rejects_concave() {
        let c = ToricRegion::concave_triangle(r(1), r(2)).unwrap();
        let err = c.support(Direction::DIAGONAL).unwrap_err();
        assert_eq!(err.to_string(), "support requires convex flavor");
        assert!(ToricRegion::ball(r(1)).unwrap().bracket(Direction::DIAGONAL).is_err());
    }

    #[test]
    fn bracket_examples() {
        let c = ToricRegion::concave_triangle(r(1), q(3, 2)).unwrap();
        assert_eq!(c.bracket(Direction::DIAGONAL).unwrap(), r(1));
        assert_eq!(c.bracket(Direction::E10).unwrap(), r(0));
        let c2 = ToricRegion::concave_triangle(r(1), r(2)).unwrap();
        assert_eq!(c2.bracket(Direction::new(2, 1).unwrap()).unwrap(), r(2));
    }

    #[test]
    fn axis_caps_examples() {
        assert_eq!(ToricRegion::polydisk(r(8), r(2)).unwrap().axis_caps(), (r(8), r(2)));
        assert_eq!(ToricRegion::ellipsoid(r(11), r(7)).unwrap().axis_caps(), (r(11), r(7)));
        assert_eq!(ToricRegion::ball(q(3, 4)).unwrap().axis_caps(), (q(3, 4), q(3, 4)));
    }

    #[test]
    fn contains_point_examples() {
        let e = ToricRegion::ellipsoid(r(11), r(7)).unwrap();
        assert!(!e.contains_point(&Point::int(8, 2)));
        assert!(e.contains_point(&Point::int(0, 0)));
        let p = ToricRegion::polydisk(r(8), r(2)).unwrap();
        assert!(p.contains_point(&Point::int(8, 2)));
        assert!(!p.contains_point(&Point::new(r(8), q(201, 100))));
        assert!(!p.contains_point(&Point::int(-1, 0)));
    }

    #[test]
    fn region_contains_examples() {
        let p = ToricRegion::polydisk(r(8), r(2)).unwrap();
        let e = ToricRegion::ellipsoid(r(11), r(7)).unwrap();
        assert!(!region_contains(&p, &e));
        assert!(region_contains(&e, &e));
        assert!(!region_contains_strictly(&e, &e));
        let b1 = ToricRegion::ball(r(1)).unwrap();
        let b2 = ToricRegion::ball(r(2)).unwrap();
        assert!(region_contains(&b1, &b2));
        assert!(region_contains_strictly(&b1, &b2));
        assert!(!region_contains(&b2, &b1));
    }

    #[test]
    fn concave_containment_checks_edges() {
        // Outer chain bends inward; inner triangle's hypotenuse crosses it
        // between vertices even though both endpoints are inside.
        let outer = ToricRegion::new(
            Flavor::Concave,
            vec![Point::int(4, 0), Point::int(1, 1), Point::int(0, 4)],
        )
        .unwrap();
        let inner = ToricRegion::concave_triangle(r(3), r(3)).unwrap();
        assert!(!region_contains(&inner, &outer));
        assert!(!support_dominates(&inner, &outer).unwrap());
        let small = ToricRegion::concave_triangle(r(1), r(1)).unwrap();
        assert!(region_contains(&small, &outer));
        assert!(support_dominates(&small, &outer).unwrap());
    }

    #[test]
    fn slope_minus_one_examples() {
        let p = ToricRegion::polydisk(r(3), r(1)).unwrap();
        assert_eq!(p.slope_minus_one_support().unwrap(), (Point::int(3, 1), r(4)));
        let b = ToricRegion::ball(r(2)).unwrap();
        assert_eq!(b.slope_minus_one_support().unwrap(), (Point::int(2, 0), r(2)));
        let e = ToricRegion::ellipsoid(r(2), r(5)).unwrap();
        assert_eq!(e.slope_minus_one_support().unwrap(), (Point::int(0, 5), r(5)));
    }

    #[test]
    fn support_dominates_examples() {
        let p = ToricRegion::polydisk(r(8), r(2)).unwrap();
        let e = ToricRegion::ellipsoid(r(11), r(7)).unwrap();
        let v = violated_direction(&p, &e).unwrap().unwrap();
        assert_eq!(v, (Direction::new(7, 11).unwrap(), r(78), r(77)));
        assert!(support_dominates(&e, &e).unwrap());
        let b1 = ToricRegion::ball(r(1)).unwrap();
        let b2 = ToricRegion::ball(r(2)).unwrap();
        assert!(support_dominates(&b1, &b2).unwrap());
        let c = ToricRegion::concave_triangle(r(1), r(1)).unwrap();
        assert!(support_dominates(&b1, &c).is_err());
    }

    #[test]
    fn validation_rejects_bad_chains() {
        let bad = |pts: Vec<Point>, f| ToricRegion::new(f, pts).is_err();
        // not starting on the x-axis
        assert!(bad(vec![Point::int(1, 1), Point::int(0, 1)], Flavor::Convex));
        // reflex vertex for convex flavor
        assert!(bad(
            vec![Point::int(4, 0), Point::int(1, 1), Point::int(0, 4)],
            Flavor::Convex
        ));
        // collinear triple
        assert!(bad(
            vec![Point::int(2, 0), Point::int(1, 1), Point::int(0, 2)],
            Flavor::Convex
        ));
        // concave region with a vertical edge
        assert!(bad(
            vec![Point::int(2, 0), Point::int(2, 1), Point::int(0, 2)],
            Flavor::Concave
        ));
        // bulging chain for concave flavor
        assert!(bad(
            vec![Point::int(2, 0), Point::int(2, 2), Point::int(0, 2)],
            Flavor::Concave
        ));
        // zero-area
        assert!(ToricRegion::ball(r(0)).is_err());
        assert!(bad(vec![Point::int(1, 0)], Flavor::Convex));
    }

    #[test]
    fn normals_of_polydisk() {
        let p = ToricRegion::polydisk(r(3), r(2)).unwrap();
        assert_eq!(p.edge_normals(), vec![Direction::E01, Direction::E10]);
        let e = ToricRegion::ellipsoid(r(11), r(7)).unwrap();
        assert_eq!(e.edge_normals(), vec![Direction::new(7, 11).unwrap()]);
    }

    #[test]
    fn segment_interior_test() {
        let b = ToricRegion::ball(r(1)).unwrap();
        let (o, t) = (Point::int(0, 0), Point::int(1, 1));
        assert!(b.segment_meets_interior(&o, &t).unwrap());
        // along the hypotenuse: boundary only
        assert!(!b.segment_meets_interior(&Point::int(0, 1), &Point::int(1, 0)).unwrap());
        // along an axis
        assert!(!b.segment_meets_interior(&Point::int(0, 0), &Point::int(1, 0)).unwrap());
        // entirely outside
        assert!(!b.segment_meets_interior(&Point::int(2, 0), &Point::int(0, 2)).unwrap());
        // a single interior point
        let c = Point::new(q(1, 4), q(1, 4));
        assert!(b.segment_meets_interior(&c, &c).unwrap());
    }

    #[test]
    fn transpose_swaps_caps() {
        let p = ToricRegion::polydisk(r(3), r(2)).unwrap();
        let t = p.transpose();
        assert_eq!(t.axis_caps(), (r(2), r(3)));
        assert!(ToricRegion::new(t.flavor(), t.boundary().to_vec()).is_ok());
    }
}
