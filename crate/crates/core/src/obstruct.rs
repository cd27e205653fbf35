//! Decision procedures for anchored and 2-anchored embedding problems.
//!
//! Every procedure returns an [`ObstructionReport`]. An `Obstructed` verdict
//! always carries a [`Certificate`] whose inequality can be re-checked from
//! its own fields with [`Certificate::holds`]. One-directional criteria
//! answer `Inconclusive` when they say nothing.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{region_contains, region_contains_strictly, violated_direction};
use crate::geometry::{Direction, Flavor, Point, ToricRegion};
use crate::lattice::{enumerate_by_index, EdgeSpec, PathGenerator};
use crate::orbits::{iota, linking_degrees};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Obstructed,
    NotObstructed,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    Inclusion,
    PolydiskBall,
    Convex1,
    #[serde(rename = "2anchored")]
    TwoAnchored,
    CrossAnchor,
}

/// Which distinguished orbits of the source must be joined by an anchor.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Anchors {
    pub e10: bool,
    pub e01: bool,
}

impl Anchors {
    pub const NONE: Anchors = Anchors { e10: false, e01: false };
    pub const E10: Anchors = Anchors { e10: true, e01: false };
    pub const BOTH: Anchors = Anchors { e10: true, e01: true };
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub generator: String,
    pub action: Rational,
    pub linking_degrees: (u64, u64),
    pub admitted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinActionCensus {
    pub target_class: Direction,
    pub anchors: Anchors,
    pub index: i64,
    pub bound: Rational,
    pub entries: Vec<CensusEntry>,
    /// False outside the instances covered by a proof: class `(1,1)` with
    /// the `e_{1,0}` anchor, or both anchors.
    pub proven: bool,
}

/// A polyline from `(0, b(Ω′))` to `(a(Ω), 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPath {
    pub points: Vec<Point>,
}

impl WitnessPath {
    /// `x + y` strictly decreases on every segment.
    pub fn is_monotone(&self) -> bool {
        self.points.windows(2).all(|w| w[1].sum() < w[0].sum())
    }

    /// All three witness conditions, checked exactly.
    pub fn validate(&self, inner: &ToricRegion, outer: &ToricRegion) -> Result<bool> {
        if self.points.len() < 2 || !self.is_monotone() {
            return Ok(false);
        }
        if !self.points.iter().all(|p| outer.contains_point(p)) {
            return Ok(false);
        }
        for w in self.points.windows(2) {
            if inner.segment_meets_interior(&w[0], &w[1])? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    None,
    /// `a(inner) ≥ a(outer)`: the anchor would have nonpositive area.
    Area { inner_a: Rational, outer_a: Rational },
    /// `inner_value > outer_value` for the functional `direction`.
    ViolatedDirection { direction: Direction, inner_value: Rational, outer_value: Rational },
    /// The annulus `lower ≤ π|z₁|² ≤ upper, z₂ = 0`.
    Annulus { lower: Rational, upper: Rational },
    /// `bound ≥ c`: every admissible generator is too expensive.
    MinAction { bound: Rational, c: Rational, census: MinActionCensus },
    /// `b(outer) ≤ s0 = x₀ + y₀`.
    CrossAnchor { b_outer: Rational, s0: Rational, tangency: Point },
    Witness { path: WitnessPath },
}

impl Certificate {
    /// Re-checks the certificate's own inequality.
    pub fn holds(&self) -> bool {
        match self {
            Certificate::None | Certificate::Witness { .. } => true,
            Certificate::Area { inner_a, outer_a } => inner_a >= outer_a,
            Certificate::ViolatedDirection { inner_value, outer_value, .. } => {
                inner_value > outer_value
            }
            Certificate::Annulus { lower, upper } => lower.is_positive() && lower < upper,
            Certificate::MinAction { bound, c, census } => bound >= c && census.bound == *bound,
            Certificate::CrossAnchor { b_outer, s0, tangency } => {
                b_outer <= s0 && tangency.sum() == *s0
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub theorem: TheoremId,
    pub certificate: Certificate,
    pub notes: Vec<String>,
}

impl ObstructionReport {
    fn new(theorem: TheoremId, verdict: Verdict, certificate: Certificate) -> Self {
        ObstructionReport { verdict, theorem, certificate, notes: Vec::new() }
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Existence {
    Yes,
    Unknown,
}

fn require_convex(r: &ToricRegion, op: &'static str) -> Result<()> {
    if r.flavor() == Flavor::Convex {
        Ok(())
    } else {
        Err(Error::FlavorMismatch { op, expected: Flavor::Convex })
    }
}

fn require_same(inner: &ToricRegion, outer: &ToricRegion, op: &'static str) -> Result<()> {
    if inner.flavor() == outer.flavor() {
        Ok(())
    } else {
        Err(Error::MixedFlavors { op })
    }
}

fn violation(inner: &ToricRegion, outer: &ToricRegion) -> Result<Certificate> {
    let (direction, inner_value, outer_value) = violated_direction(inner, outer)?
        .expect("containment fails, so some candidate normal separates");
    Ok(Certificate::ViolatedDirection { direction, inner_value, outer_value })
}

/// Inclusion of `inner` into the interior of `outer`, anchored by an
/// annulus in the `z₁`-plane.
pub fn check_inclusion_anchor(
    inner: &ToricRegion,
    outer: &ToricRegion,
) -> Result<ObstructionReport> {
    require_same(inner, outer, "check_inclusion_anchor")?;
    let id = TheoremId::Inclusion;
    if region_contains_strictly(inner, outer) {
        Ok(ObstructionReport::new(
            id,
            Verdict::NotObstructed,
            Certificate::Annulus { lower: inner.a(), upper: outer.a() },
        ))
    } else {
        Ok(ObstructionReport::new(id, Verdict::Inconclusive, Certificate::None)
            .note("inner region is not contained in the interior of the outer one"))
    }
}

/// The minimum source action over generators of index `Î(e_{a,b})` that
/// survive the anchor linking filters, with the full census.
pub fn min_action_census(
    source: &ToricRegion,
    target_class: Direction,
    anchors: Anchors,
) -> Result<MinActionCensus> {
    require_convex(source, "min_action_bound")?;
    let class = PathGenerator::new(Flavor::Convex, vec![EdgeSpec::e(
        target_class.a(),
        target_class.b(),
        1,
    )?])?;
    let index = class.index();
    let mut entries = Vec::new();
    let mut bound: Option<Rational> = None;
    for g in enumerate_by_index(Flavor::Convex, index as u64) {
        let deg = linking_degrees(&iota(&g));
        let admitted = !(anchors.e10 && deg.0 > target_class.b())
            && !(anchors.e01 && deg.1 > target_class.a());
        let action = g.action(source)?;
        if admitted && bound.as_ref().is_none_or(|b| action < *b) {
            bound = Some(action.clone());
        }
        entries.push(CensusEntry { generator: g.to_string(), action, linking_degrees: deg, admitted });
    }
    entries.sort_by(|x, y| x.action.cmp(&y.action).then_with(|| x.generator.cmp(&y.generator)));
    let proven = anchors == Anchors::BOTH
        || (target_class == Direction::DIAGONAL && anchors == Anchors::E10);
    Ok(MinActionCensus {
        target_class,
        anchors,
        index,
        // e_{a,b} itself always passes both filters
        bound: bound.expect("the class generator is admitted"),
        entries,
        proven,
    })
}

/// Necessary condition for an anchored embedding of `source` into a convex
/// target `Ω′`: `support(Ω′, target_class)` is at least this value.
pub fn min_action_bound(
    source: &ToricRegion,
    target_class: Direction,
    anchors: Anchors,
) -> Result<Rational> {
    Ok(min_action_census(source, target_class, anchors)?.bound)
}

pub const ENGINE_NOTE: &str = "engine generalization; not covered by a proven instance";

/// Anchored embeddings `(P(a,1), e_{1,0}) → (B⁴(c), e_{1,0})` exist iff
/// `c > a + 1`.
pub fn check_polydisk_ball(a: &Rational, c: &Rational) -> Result<ObstructionReport> {
    if *a <= Rational::one() {
        return Err(Error::Hypothesis("a>1".into()));
    }
    if !c.is_positive() {
        return Err(Error::Precondition("c must be positive".into()));
    }
    let id = TheoremId::PolydiskBall;
    let limit = a + Rational::one();
    if *c > limit {
        return Ok(ObstructionReport::new(
            id,
            Verdict::NotObstructed,
            Certificate::Annulus { lower: a.clone(), upper: c.clone() },
        )
        .note(format!("P({a},1) lies in the interior of B4({c}) since {c} > {limit}")));
    }
    let source = ToricRegion::polydisk(a.clone(), Rational::one())?;
    let census = min_action_census(&source, Direction::DIAGONAL, Anchors::E10)?;
    let mut report = ObstructionReport::new(
        id,
        Verdict::Obstructed,
        Certificate::MinAction { bound: census.bound.clone(), c: c.clone(), census },
    );
    if folding_embedding_exists(a, c)? == Existence::Yes {
        report = report.note(format!(
            "a plain symplectic embedding exists by folding since {c} > 2 + a/2"
        ));
    }
    Ok(report)
}

/// Known constructions of plain embeddings `P(a,1) → B⁴(c)`: inclusion and
/// single folding.
pub fn folding_embedding_exists(a: &Rational, c: &Rational) -> Result<Existence> {
    if *a < Rational::one() {
        return Err(Error::Precondition("a >= 1 required".into()));
    }
    let two = Rational::from(2i64);
    let inclusion = *c > a + Rational::one();
    let folding = *a > two && *c > &two + a / &two;
    Ok(if inclusion || folding { Existence::Yes } else { Existence::Unknown })
}

/// `P(A,B)` with `A > 2B` folds into a neighborhood of `P(A/2, 2B)`.
fn folding_note(inner: &ToricRegion, outer: &ToricRegion) -> Option<String> {
    let (a, b) = inner.as_polydisk()?;
    let two = Rational::from(2i64);
    if a <= &b * &two {
        return None;
    }
    let corner = Point::new(&a / &two, &b * &two);
    outer.interior_contains_point(&corner).then(|| {
        format!(
            "a plain symplectic embedding exists by folding: P({a},{b}) folds into \
             P({}+e,{}+e), which fits in the target",
            corner.x, corner.y
        )
    })
}

/// `(X_Ω, e_{1,0}) → (X_Ω′, e_{1,0})` with `a(Ω) > b(Ω′)` forces `Ω ⊂ Ω′`.
pub fn check_convex1(inner: &ToricRegion, outer: &ToricRegion) -> Result<ObstructionReport> {
    require_convex(inner, "check_convex1")?;
    require_convex(outer, "check_convex1")?;
    let id = TheoremId::Convex1;
    let (a_in, a_out, b_out) = (inner.a(), outer.a(), outer.b());
    let mut report = if a_in >= a_out {
        ObstructionReport::new(
            id,
            Verdict::Obstructed,
            Certificate::Area { inner_a: a_in, outer_a: a_out },
        )
        .note("the anchor cylinder would have nonpositive area")
    } else if a_in > b_out && !region_contains(inner, outer) {
        ObstructionReport::new(id, Verdict::Obstructed, violation(inner, outer)?)
    } else if a_in <= b_out {
        ObstructionReport::new(id, Verdict::Inconclusive, Certificate::None)
            .note(format!("hypothesis a(inner) > b(outer) fails: {a_in} <= {b_out}"))
    } else {
        ObstructionReport::new(id, Verdict::Inconclusive, Certificate::None)
            .note("inner region is contained in the outer one")
    };
    if report.verdict == Verdict::Obstructed {
        if let Some(n) = folding_note(inner, outer) {
            report = report.note(n);
        }
    }
    Ok(report)
}

/// A 2-anchored embedding forces `Ω ⊂ Ω′` (either flavor).
pub fn check_2anchored(inner: &ToricRegion, outer: &ToricRegion) -> Result<ObstructionReport> {
    require_same(inner, outer, "check_2anchored")?;
    let id = TheoremId::TwoAnchored;
    if region_contains(inner, outer) {
        Ok(ObstructionReport::new(id, Verdict::Inconclusive, Certificate::None)
            .note("inner region is contained in the outer one"))
    } else {
        Ok(ObstructionReport::new(id, Verdict::Obstructed, violation(inner, outer)?))
    }
}

/// Anchors from `e_{1,0}` of the source to `e_{0,1}` of the target, for
/// `Ω ⊂ Ω′`: possible iff `b(Ω′) > x₀ + y₀`.
pub fn check_cross_anchor(inner: &ToricRegion, outer: &ToricRegion) -> Result<ObstructionReport> {
    require_convex(inner, "check_cross_anchor")?;
    require_convex(outer, "check_cross_anchor")?;
    if !region_contains(inner, outer) {
        return Err(Error::Precondition("inner region must lie in the outer one".into()));
    }
    let id = TheoremId::CrossAnchor;
    let (tangency, s0) = inner.slope_minus_one_support()?;
    let b_out = outer.b();
    if b_out > s0 {
        let delta = (&b_out - &s0) / Rational::from(4i64);
        let path = witness_eta(inner, outer, &delta)?;
        Ok(ObstructionReport::new(id, Verdict::NotObstructed, Certificate::Witness { path }))
    } else {
        Ok(ObstructionReport::new(
            id,
            Verdict::Obstructed,
            Certificate::CrossAnchor { b_outer: b_out, s0, tangency },
        ))
    }
}

const HALVINGS: usize = 32;

fn eta_candidate(inner: &ToricRegion, outer: &ToricRegion, delta: &Rational) -> WitnessPath {
    let push = |p: &Point| Point::new(&p.x + delta, &p.y + delta);
    let k = inner.tangency_index();
    let boundary = inner.boundary();
    let mut points = vec![Point::new(Rational::zero(), outer.b())];
    // From the tangency vertex down the steep side to (a(inner), 0).
    points.extend(boundary[1..=k].iter().rev().map(push));
    if k == 0 {
        points.push(push(&boundary[0]));
    }
    points.push(boundary[0].clone());
    points.dedup();
    WitnessPath { points }
}

/// A validated path in `Ω′ ∖ int(Ω)` from `(0, b(Ω′))` to `(a(Ω), 0)` along
/// which `x + y` strictly decreases.
///
/// The steep side of `∂₊Ω` is pushed off by `(δ, δ)`. If the pushed path
/// leaves `Ω′`, `δ` is halved; as a last resort the path runs along `∂₊Ω`
/// itself.
pub fn witness_eta(
    inner: &ToricRegion,
    outer: &ToricRegion,
    delta: &Rational,
) -> Result<WitnessPath> {
    require_convex(inner, "witness_eta")?;
    require_convex(outer, "witness_eta")?;
    if !region_contains(inner, outer) {
        return Err(Error::Precondition("inner region must lie in the outer one".into()));
    }
    let (_, s0) = inner.slope_minus_one_support()?;
    if outer.b() <= s0 {
        return Err(Error::Precondition(format!(
            "b(outer) = {} must exceed support(inner,(1,1)) = {s0}",
            outer.b()
        )));
    }
    if delta.is_negative() {
        return Err(Error::Precondition("delta must be nonnegative".into()));
    }
    let mut d = delta.clone();
    for _ in 0..HALVINGS {
        if d.is_zero() {
            break;
        }
        let path = eta_candidate(inner, outer, &d);
        if path.validate(inner, outer)? {
            return Ok(path);
        }
        d = d / Rational::from(2i64);
    }
    let path = eta_candidate(inner, outer, &Rational::zero());
    if path.validate(inner, outer)? {
        Ok(path)
    } else {
        Err(Error::WitnessFailed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn ball(n: i64, d: i64) -> ToricRegion {
        ToricRegion::ball(q(n, d)).unwrap()
    }

    #[test]
    fn inclusion_anchor() {
        let rep = check_inclusion_anchor(&ball(1, 1), &ball(2, 1)).unwrap();
        assert_eq!(rep.verdict, Verdict::NotObstructed);
        assert_eq!(rep.certificate, Certificate::Annulus { lower: r(1), upper: r(2) });
        let p = ToricRegion::polydisk(r(8), r(2)).unwrap();
        let e = ToricRegion::ellipsoid(r(11), r(7)).unwrap();
        assert_eq!(check_inclusion_anchor(&p, &e).unwrap().verdict, Verdict::Inconclusive);
        assert_eq!(check_inclusion_anchor(&e, &e).unwrap().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn polydisk_ball() {
        assert_eq!(check_polydisk_ball(&r(2), &r(3)).unwrap().verdict, Verdict::Obstructed);
        assert_eq!(
            check_polydisk_ball(&r(2), &q(31, 10)).unwrap().verdict,
            Verdict::NotObstructed
        );
        let rep = check_polydisk_ball(&r(8), &r(6)).unwrap();
        assert_eq!(rep.verdict, Verdict::Obstructed);
        assert!(rep.certificate.holds());
        assert_eq!(
            check_polydisk_ball(&r(1), &r(3)).unwrap_err().to_string(),
            "theorem hypothesis a>1 violated"
        );
    }

    #[test]
    fn min_action_examples() {
        for a in [q(3, 2), r(2), r(8)] {
            let p = ToricRegion::polydisk(a.clone(), r(1)).unwrap();
            let c = min_action_census(&p, Direction::DIAGONAL, Anchors::E10).unwrap();
            assert_eq!(c.bound, &a + Rational::one());
            assert!(c.proven);
            let excluded: Vec<&str> =
                c.entries.iter().filter(|e| !e.admitted).map(|e| e.generator.as_str()).collect();
            assert_eq!(excluded, ["e:0,1x2"]);
        }
        assert_eq!(min_action_bound(&ball(1, 1), Direction::DIAGONAL, Anchors::E10).unwrap(), r(1));
        let e = ToricRegion::ellipsoid(r(3), r(5)).unwrap();
        let c = min_action_census(&e, Direction::E10, Anchors::NONE).unwrap();
        assert_eq!(c.bound, r(3));
        assert!(!c.proven);
    }

    #[test]
    fn folding() {
        assert_eq!(folding_embedding_exists(&r(8), &q(13, 2)).unwrap(), Existence::Yes);
        assert_eq!(folding_embedding_exists(&r(8), &r(6)).unwrap(), Existence::Unknown);
        assert_eq!(folding_embedding_exists(&q(3, 2), &r(3)).unwrap(), Existence::Yes);
    }

    #[test]
    fn convex1() {
        let p = ToricRegion::polydisk(r(8), r(2)).unwrap();
        let e = ToricRegion::ellipsoid(r(11), r(7)).unwrap();
        let rep = check_convex1(&p, &e).unwrap();
        assert_eq!(rep.verdict, Verdict::Obstructed);
        assert_eq!(
            rep.certificate,
            Certificate::ViolatedDirection {
                direction: Direction::new(7, 11).unwrap(),
                inner_value: r(78),
                outer_value: r(77),
            }
        );
        assert!(rep.notes.iter().any(|n| n.contains("folding")));
        let small = ToricRegion::polydisk(r(2), r(1)).unwrap();
        assert_eq!(check_convex1(&small, &ball(4, 1)).unwrap().verdict, Verdict::Inconclusive);
        let rep = check_convex1(&ball(2, 1), &ball(1, 1)).unwrap();
        assert_eq!(rep.verdict, Verdict::Obstructed);
        assert!(matches!(rep.certificate, Certificate::Area { .. }));
    }

    #[test]
    fn two_anchored() {
        let p = ToricRegion::polydisk(r(8), r(2)).unwrap();
        let e = ToricRegion::ellipsoid(r(11), r(7)).unwrap();
        assert_eq!(check_2anchored(&p, &e).unwrap().verdict, Verdict::Obstructed);
        assert_eq!(check_2anchored(&e, &e).unwrap().verdict, Verdict::Inconclusive);
        let c1 = ToricRegion::concave_triangle(r(1), r(2)).unwrap();
        let c2 = ToricRegion::concave_triangle(r(2), r(3)).unwrap();
        assert_eq!(check_2anchored(&c1, &c2).unwrap().verdict, Verdict::Inconclusive);
        assert_eq!(check_2anchored(&c2, &c1).unwrap().verdict, Verdict::Obstructed);
        assert!(check_2anchored(&c1, &e).is_err());
    }

    #[test]
    fn cross_anchor() {
        let rep = check_cross_anchor(&ball(1, 1), &ball(3, 2)).unwrap();
        assert_eq!(rep.verdict, Verdict::NotObstructed);
        let p = ToricRegion::polydisk(r(2), r(1)).unwrap();
        let outer = ToricRegion::polydisk(r(3), r(3)).unwrap();
        let rep = check_cross_anchor(&p, &outer).unwrap();
        assert_eq!(rep.verdict, Verdict::Obstructed);
        assert!(rep.certificate.holds());
        let e = ToricRegion::ellipsoid(r(10), r(4)).unwrap();
        assert_eq!(check_cross_anchor(&p, &e).unwrap().verdict, Verdict::NotObstructed);
        assert!(check_cross_anchor(&ball(2, 1), &ball(1, 1)).is_err());
    }

    #[test]
    fn eta_paths() {
        let path = witness_eta(&ball(1, 1), &ball(2, 1), &q(1, 8)).unwrap();
        let sums: Vec<Rational> = path.points.iter().map(Point::sum).collect();
        assert_eq!(sums, [r(2), q(5, 4), r(1)]);
        assert!(path.validate(&ball(1, 1), &ball(2, 1)).unwrap());

        let p = ToricRegion::polydisk(r(2), r(1)).unwrap();
        let e = ToricRegion::ellipsoid(r(10), r(4)).unwrap();
        let path = witness_eta(&p, &e, &q(1, 10)).unwrap();
        assert_eq!(path.points[0], Point::int(0, 4));
        assert_eq!(path.points[1], Point::new(q(21, 10), q(11, 10)));
        assert_eq!(*path.points.last().unwrap(), Point::int(2, 0));
        assert!(path.validate(&p, &e).unwrap());

        let b = ball(1, 1);
        assert!(witness_eta(&b, &b, &q(1, 8)).is_err());
    }

    #[test]
    fn eta_shrinks_delta_near_the_outer_boundary() {
        // Tangency vertex (2,1) sits right against the outer polydisk's wall.
        let p = ToricRegion::polydisk(r(2), r(1)).unwrap();
        let outer = ToricRegion::polydisk(r(2), r(4)).unwrap();
        let path = witness_eta(&p, &outer, &q(1, 2)).unwrap();
        assert!(path.validate(&p, &outer).unwrap());
        assert_eq!(path.points[1], Point::int(2, 1));
    }
}
