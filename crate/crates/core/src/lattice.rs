//! Convex and concave generators: labeled lattice paths.
//!
//! An edge with direction `(a, b)` and multiplicity `m` contributes the
//! vector `m·(b, −a)` to a path that starts on the y-axis and ends on the
//! x-axis, so `X = Σ m·b` and `Y = Σ m·a`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Direction, Flavor, ToricRegion};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    E,
    H,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::E => "e",
            Label::H => "h",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub direction: Direction,
    pub multiplicity: u64,
    pub label: Label,
}

impl EdgeSpec {
    pub fn new(direction: Direction, multiplicity: u64, label: Label) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::InvalidGenerator("multiplicity must be positive".into()));
        }
        if label == Label::H && direction.is_axis() {
            return Err(Error::InvalidGenerator(format!(
                "axis direction {direction} must be labeled e"
            )));
        }
        Ok(EdgeSpec { direction, multiplicity, label })
    }

    pub fn e(a: u64, b: u64, m: u64) -> Result<Self> {
        Self::new(Direction::new(a, b)?, m, Label::E)
    }

    pub fn h(a: u64, b: u64, m: u64) -> Result<Self> {
        Self::new(Direction::new(a, b)?, m, Label::H)
    }

    fn key(&self) -> (u64, u64, u64, Label) {
        (self.direction.a(), self.direction.b(), self.multiplicity, self.label)
    }
}

impl fmt::Display for EdgeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{},{}x{}",
            self.label,
            self.direction.a(),
            self.direction.b(),
            self.multiplicity
        )
    }
}

impl FromStr for EdgeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad edge {s:?}; expected e:a,bxm or h:a,bxm"));
        let (label, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let label = match label {
            "e" | "E" => Label::E,
            "h" | "H" => Label::H,
            _ => return Err(bad()),
        };
        let (ab, m) = rest.split_once('x').ok_or_else(bad)?;
        let (a, b) = ab.split_once(',').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        EdgeSpec::new(Direction::new(num(a)?, num(b)?)?, num(m)?, label)
    }
}

/// Order along the path: `a/b` ascending for convex, descending for concave.
fn path_order(flavor: Flavor, d: &Direction, e: &Direction) -> Ordering {
    match flavor {
        Flavor::Convex => d.cmp_ratio(e),
        Flavor::Concave => e.cmp_ratio(d),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathGenerator {
    flavor: Flavor,
    edges: Vec<EdgeSpec>,
}

impl PathGenerator {
    /// Edges must already be in path order.
    pub fn new(flavor: Flavor, edges: Vec<EdgeSpec>) -> Result<Self> {
        for e in &edges {
            EdgeSpec::new(e.direction, e.multiplicity, e.label)?;
            if flavor == Flavor::Concave && e.direction.is_axis() {
                return Err(Error::InvalidGenerator(format!(
                    "concave edges need a, b >= 1, got {}",
                    e.direction
                )));
            }
        }
        if flavor == Flavor::Concave && edges.is_empty() {
            return Err(Error::InvalidGenerator("concave generators are nonempty".into()));
        }
        for w in edges.windows(2) {
            match path_order(flavor, &w[0].direction, &w[1].direction) {
                Ordering::Less => {}
                Ordering::Equal => {
                    return Err(Error::InvalidGenerator(format!(
                        "direction {} repeated",
                        w[0].direction
                    )))
                }
                Ordering::Greater => {
                    return Err(Error::InvalidGenerator(format!(
                        "edges out of path order at {}",
                        w[1].direction
                    )))
                }
            }
        }
        Ok(PathGenerator { flavor, edges })
    }

    /// Sorts the edges into path order first.
    pub fn from_unordered(flavor: Flavor, mut edges: Vec<EdgeSpec>) -> Result<Self> {
        edges.sort_by(|x, y| path_order(flavor, &x.direction, &y.direction));
        Self::new(flavor, edges)
    }

    pub fn empty() -> Self {
        PathGenerator { flavor: Flavor::Convex, edges: Vec::new() }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn edges(&self) -> &[EdgeSpec] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn all_e(&self) -> bool {
        self.edges.iter().all(|e| e.label == Label::E)
    }

    pub fn extents(&self) -> (u64, u64) {
        self.edges.iter().fold((0, 0), |(x, y), e| {
            (x + e.multiplicity * e.direction.b(), y + e.multiplicity * e.direction.a())
        })
    }

    /// Number of H-labeled edges.
    pub fn h_count(&self) -> u64 {
        self.edges.iter().filter(|e| e.label == Label::H).count() as u64
    }

    /// Edges labeled E, plus H edges of multiplicity greater than one.
    pub fn e_count(&self) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.label == Label::E || e.multiplicity > 1)
            .count() as u64
    }

    /// Path vertices from `(0, Y)` to `(X, 0)`.
    pub fn vertices(&self) -> Vec<(u64, u64)> {
        let (_, y) = self.extents();
        let mut p = (0, y);
        let mut out = vec![p];
        for e in &self.edges {
            p = (p.0 + e.multiplicity * e.direction.b(), p.1 - e.multiplicity * e.direction.a());
            out.push(p);
        }
        out
    }

    /// Reflection across the diagonal.
    pub fn transpose(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .rev()
            .map(|e| EdgeSpec { direction: e.direction.transpose(), ..*e })
            .collect();
        PathGenerator { flavor: self.flavor, edges }
    }

    /// Calls `f(y0, a, t, b)` once per column `x = 0..=X`; the path height
    /// over that column is `y0 − a·t/b`.
    fn columns(&self, mut f: impl FnMut(u64, u64, u64, u64)) {
        let (_, mut y) = self.extents();
        for e in &self.edges {
            let (a, b) = (e.direction.a(), e.direction.b());
            if b == 0 {
                break; // vertical edge: only possible last
            }
            for t in 0..e.multiplicity * b {
                f(y, a, t, b);
            }
            y -= e.multiplicity * a;
        }
        f(y, 0, 0, 1);
    }

    /// `L̂`: lattice points in the closed region under the path.
    pub fn lattice_count_convex(&self) -> Result<u64> {
        self.require(Flavor::Convex, "lattice_count_convex")?;
        let mut n = 0;
        self.columns(|y0, a, t, b| n += y0 - (a * t).div_ceil(b) + 1);
        Ok(n)
    }

    /// `Ľ`: as `L̂` but excluding every lattice point on the path itself.
    pub fn lattice_count_concave(&self) -> Result<u64> {
        self.require(Flavor::Concave, "lattice_count_concave")?;
        let mut n = 0;
        self.columns(|y0, a, t, b| n += y0 - (a * t) / b);
        Ok(n)
    }

    pub fn index_convex(&self) -> Result<i64> {
        let l = self.lattice_count_convex()? as i64;
        Ok(2 * (l - 1) - self.h_count() as i64)
    }

    pub fn j0_convex(&self) -> Result<i64> {
        let (x, y) = self.extents();
        Ok(self.index_convex()? - 2 * (x + y) as i64 - self.e_count() as i64)
    }

    pub fn index_concave(&self) -> Result<i64> {
        let l = self.lattice_count_concave()? as i64;
        Ok(2 * (l - 1) + self.h_count() as i64)
    }

    pub fn j0_concave(&self) -> Result<i64> {
        let (x, y) = self.extents();
        Ok(self.index_concave()? - 2 * (x + y) as i64 + self.e_count() as i64)
    }

    /// `Î` or `Ǐ` according to flavor.
    pub fn index(&self) -> i64 {
        match self.flavor {
            Flavor::Convex => self.index_convex(),
            Flavor::Concave => self.index_concave(),
        }
        .expect("flavor matched")
    }

    /// `Ĵ₀` or `J̌₀` according to flavor.
    pub fn j0(&self) -> i64 {
        match self.flavor {
            Flavor::Convex => self.j0_convex(),
            Flavor::Concave => self.j0_concave(),
        }
        .expect("flavor matched")
    }

    pub fn action(&self, region: &ToricRegion) -> Result<Rational> {
        if region.flavor() != self.flavor {
            return Err(Error::MixedFlavors { op: "action" });
        }
        Ok(self
            .edges
            .iter()
            .map(|e| region.action_of(e.direction).mul_int(e.multiplicity))
            .sum())
    }

    fn require(&self, flavor: Flavor, op: &'static str) -> Result<()> {
        if self.flavor == flavor {
            Ok(())
        } else {
            Err(Error::FlavorMismatch { op, expected: flavor })
        }
    }

    /// Lexicographic comparison on `(a, b, m, label)` sequences.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.edges.iter().map(EdgeSpec::key).cmp(other.edges.iter().map(EdgeSpec::key))
    }

    pub fn parse(flavor: Flavor, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "empty" || s.is_empty() {
            return match flavor {
                Flavor::Convex => Ok(Self::empty()),
                Flavor::Concave => {
                    Err(Error::InvalidGenerator("concave generators are nonempty".into()))
                }
            };
        }
        let edges = s.split('+').map(str::parse).collect::<Result<Vec<EdgeSpec>>>()?;
        Self::from_unordered(flavor, edges)
    }
}

/// Text encoding: edges joined by `+` in path order, or `empty`.
impl fmt::Display for PathGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return f.write_str("empty");
        }
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Coprime directions valid for `flavor` with `a + b ≤ max_sum`, sorted in
/// path order.
fn directions(flavor: Flavor, max_sum: u64, keep: impl Fn(&Direction) -> bool) -> Vec<Direction> {
    let min = match flavor {
        Flavor::Convex => 0,
        Flavor::Concave => 1,
    };
    let mut out = Vec::new();
    for a in min..=max_sum {
        for b in min..=max_sum - a {
            if let Ok(d) = Direction::new(a, b) {
                if keep(&d) {
                    out.push(d);
                }
            }
        }
    }
    out.sort_by(|x, y| path_order(flavor, x, y));
    out
}

/// Depth-first walk over multisets of `dirs` (each used at most once, with
/// some multiplicity). `step` extends a cost by `m` copies of a direction and
/// returns `None` once the budget is exceeded; it must be monotone in `m`.
fn walk<C, F>(
    dirs: &[Direction],
    start: usize,
    cost: &C,
    step: &F,
    stack: &mut Vec<(Direction, u64)>,
    out: &mut Vec<Vec<(Direction, u64)>>,
) where
    F: Fn(&C, Direction, u64) -> Option<C>,
{
    out.push(stack.clone());
    for (i, &d) in dirs.iter().enumerate().skip(start) {
        let mut m = 1;
        while let Some(next) = step(cost, d, m) {
            stack.push((d, m));
            walk(dirs, i + 1, &next, step, stack, out);
            stack.pop();
            m += 1;
        }
    }
}

/// All labelings of an unlabeled path with exactly `h` H labels (or any
/// number when `h` is `None`).
fn labelings(
    flavor: Flavor,
    shape: &[(Direction, u64)],
    h: Option<usize>,
    out: &mut Vec<PathGenerator>,
) {
    let free: Vec<usize> =
        (0..shape.len()).filter(|&i| !shape[i].0.is_axis()).collect();
    for mask in 0u64..1 << free.len() {
        if let Some(h) = h {
            if mask.count_ones() as usize != h {
                continue;
            }
        }
        let mut edges: Vec<EdgeSpec> = shape
            .iter()
            .map(|&(d, m)| EdgeSpec { direction: d, multiplicity: m, label: Label::E })
            .collect();
        for (bit, &i) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                edges[i].label = Label::H;
            }
        }
        out.push(PathGenerator { flavor, edges });
    }
}

fn unlabeled_shapes(
    flavor: Flavor,
    dirs: &[Direction],
    fits: impl Fn(u64, u64) -> bool,
) -> Vec<Vec<(Direction, u64)>> {
    let step = |&(x, y): &(u64, u64), d: Direction, m: u64| {
        let next = (x + m * d.b(), y + m * d.a());
        fits(next.0, next.1).then_some(next)
    };
    let mut out = Vec::new();
    walk(dirs, 0, &(0, 0), &step, &mut Vec::new(), &mut out);
    if flavor == Flavor::Concave {
        out.retain(|s| !s.is_empty());
    }
    out
}

/// Every generator with `X ≤ max_x` and `Y ≤ max_y`, all labelings, in
/// lexicographic order.
pub fn enumerate_by_extents(flavor: Flavor, max_x: u64, max_y: u64) -> Vec<PathGenerator> {
    let dirs = directions(flavor, max_x + max_y, |d| d.b() <= max_x && d.a() <= max_y);
    let mut out = Vec::new();
    for shape in unlabeled_shapes(flavor, &dirs, |x, y| x <= max_x && y <= max_y) {
        labelings(flavor, &shape, None, &mut out);
    }
    out.sort_by(PathGenerator::cmp_lex);
    out
}

/// Largest `X + Y` of a generator of index `i`.
///
/// Convex: `L̂ ≥ X + Y + 1` (the axis points) and `h ≤ #edges ≤ X + Y`, so
/// `Î ≥ X + Y`. Concave: every column but the last holds a point below the
/// path and column 0 holds `Y` of them, so `Ľ ≥ X + Y − 1` and
/// `Ǐ ≥ 2(X + Y) − 4`.
pub fn extent_bound(flavor: Flavor, i: u64) -> u64 {
    match flavor {
        Flavor::Convex => i,
        Flavor::Concave => i / 2 + 2,
    }
}

/// Complete list of generators with combinatorial index exactly `i`, in
/// lexicographic order.
pub fn enumerate_by_index(flavor: Flavor, i: u64) -> Vec<PathGenerator> {
    let s = extent_bound(flavor, i);
    let dirs = directions(flavor, s, |_| true);
    let mut out = Vec::new();
    for shape in unlabeled_shapes(flavor, &dirs, |x, y| x + y <= s) {
        let base = PathGenerator {
            flavor,
            edges: shape
                .iter()
                .map(|&(d, m)| EdgeSpec { direction: d, multiplicity: m, label: Label::E })
                .collect(),
        };
        let base_index = base.index();
        let h = match flavor {
            Flavor::Convex => base_index - i as i64,
            Flavor::Concave => i as i64 - base_index,
        };
        if h >= 0 {
            labelings(flavor, &shape, Some(h as usize), &mut out);
        }
    }
    out.sort_by(PathGenerator::cmp_lex);
    out
}

/// Sorts by action, then lexicographically.
pub fn sort_canonical(gens: &mut [PathGenerator], region: &ToricRegion) {
    let mut keyed: Vec<(Rational, PathGenerator)> = gens
        .iter()
        .map(|g| (g.action(region).expect("flavor checked"), g.clone()))
        .collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp_lex(&y.1)));
    for (slot, (_, g)) in gens.iter_mut().zip(keyed) {
        *slot = g;
    }
}

/// Every generator with `Ω`-action `< l`, in canonical order.
///
/// Concave regions have infinitely many such generators (the bracket of
/// `(1, b)` stays at `a(Ω)` as `b` grows), so for them the census is also
/// cut at `Ǐ < l`, the same window in which generators correspond to orbit
/// sets.
pub fn enumerate_by_action(region: &ToricRegion, l: &Rational) -> Result<Vec<PathGenerator>> {
    if !l.is_positive() {
        return Err(Error::Precondition("action bound must be positive".into()));
    }
    let flavor = region.flavor();
    let (dirs, max_sum) = match flavor {
        Flavor::Convex => {
            let (ra, rb) = region.axis_caps();
            // support(d) ≥ a·a(Ω) and ≥ b·b(Ω)
            let amax = (l / &ra).ceil();
            let bmax = (l / &rb).ceil();
            let amax: u64 = amax.try_into().unwrap_or(u64::MAX);
            let bmax: u64 = bmax.try_into().unwrap_or(u64::MAX);
            let dirs = directions(flavor, amax + bmax, |d| {
                d.a() < amax.max(1) && d.b() < bmax.max(1) && region.action_of(*d) < *l
            });
            (dirs, u64::MAX)
        }
        Flavor::Concave => {
            let imax: u64 = (l.ceil() - 1u32).try_into().unwrap_or(0);
            let s = extent_bound(flavor, imax);
            (directions(flavor, s, |d| region.action_of(*d) < *l), s)
        }
    };
    let step = |(x, y, act): &(u64, u64, Rational), d: Direction, m: u64| {
        let next = (x + m * d.b(), y + m * d.a(), act + region.action_of(d).mul_int(m));
        (next.0 + next.1 <= max_sum && next.2 < *l).then_some(next)
    };
    let mut shapes = Vec::new();
    walk(&dirs, 0, &(0, 0, Rational::zero()), &step, &mut Vec::new(), &mut shapes);
    let mut out = Vec::new();
    for shape in shapes {
        if flavor == Flavor::Concave && shape.is_empty() {
            continue;
        }
        labelings(flavor, &shape, None, &mut out);
    }
    if flavor == Flavor::Concave {
        out.retain(|g| Rational::from(g.index()) < *l);
    }
    sort_canonical(&mut out, region);
    Ok(out)
}

/// Does `g` strictly minimize (convex) or maximize (concave) the action
/// among all-E generators of the same index?
pub fn is_extremal(g: &PathGenerator, region: &ToricRegion) -> Result<bool> {
    if !g.all_e() {
        return Err(Error::Precondition("is_extremal needs an all-e generator".into()));
    }
    let i = g.index();
    if i < 0 {
        return Err(Error::Precondition("negative index".into()));
    }
    let own = g.action(region)?;
    for other in enumerate_by_index(g.flavor(), i as u64) {
        if !other.all_e() || other == *g {
            continue;
        }
        let act = other.action(region)?;
        let beaten = match g.flavor() {
            Flavor::Convex => act <= own,
            Flavor::Concave => act >= own,
        };
        if beaten {
            return Ok(false);
        }
    }
    Ok(true)
}
