//! Built-in consistency checks, run by `toric-ech selftest`.
//!
//! Expected values are literals, so a change to any index or action formula
//! shows up as a failing row.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::domain::DomainSpec;
use crate::geometry::{region_contains, support_dominates, Flavor, Point, ToricRegion};
use crate::lattice::{enumerate_by_extents, enumerate_by_index, is_extremal, PathGenerator};
use crate::obstruct::{
    check_convex1, check_cross_anchor, check_polydisk_ball, folding_embedding_exists,
    min_action_bound, Anchors, Certificate, Existence, Verdict,
};
use crate::orbits::{ech_index, iota, j0_index};
use crate::rational::Rational;
use crate::{geometry::Direction, sample};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

const SEED: u64 = 0x7031_c0de;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn names(gens: &[PathGenerator]) -> String {
    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
}

fn verdict(v: Verdict) -> String {
    format!("{v:?}")
}

/// Exact height of the path over `x`, by interpolation between vertices.
fn path_height(g: &PathGenerator, x: i64) -> Rational {
    let vs = g.vertices();
    let mut best = Rational::zero();
    for w in vs.windows(2) {
        let (x0, y0) = (w[0].0 as i64, w[0].1 as i64);
        let (x1, y1) = (w[1].0 as i64, w[1].1 as i64);
        if x < x0 || x > x1 {
            continue;
        }
        let h = if x0 == x1 {
            Rational::from(y0.max(y1))
        } else {
            Rational::from(y0) + q((y1 - y0) * (x - x0), x1 - x0)
        };
        best = best.max(h);
    }
    if vs.len() == 1 && x == 0 {
        best = Rational::from(vs[0].1);
    }
    best
}

/// Double loop over the bounding box.
pub fn brute_lattice_count(g: &PathGenerator) -> u64 {
    let (xm, ym) = g.extents();
    let mut n = 0;
    for x in 0..=xm as i64 {
        let h = path_height(g, x);
        for y in 0..=ym as i64 {
            let y = Rational::from(y);
            let inside = match g.flavor() {
                Flavor::Convex => y <= h,
                Flavor::Concave => y < h,
            };
            n += inside as u64;
        }
    }
    n
}

pub fn run() -> Vec<Check> {
    let mut out = Vec::new();
    let mut push = |name, expected: &str, actual: String| {
        out.push(Check { name, expected: expected.to_string(), actual })
    };

    let census = enumerate_by_index(Flavor::Convex, 4);
    push("index-4 census", "e:0,1x2 e:1,0x2 e:1,1x1", names(&census));
    push(
        "index-4 J0 values",
        "-1 -1 -1",
        census.iter().map(|g| g.j0().to_string()).collect::<Vec<_>>().join(" "),
    );
    push("index-2 census", "e:0,1x1 e:1,0x1", names(&enumerate_by_index(Flavor::Convex, 2)));
    push("concave index-0 census", "e:1,1x1", names(&enumerate_by_index(Flavor::Concave, 0)));

    let v = |a, c| verdict(check_polydisk_ball(&a, &c).expect("valid input").verdict);
    push(
        "polydisk-ball a=2 at c=3, 31/10",
        "Obstructed NotObstructed",
        format!("{} {}", v(q(2, 1), q(3, 1)), v(q(2, 1), q(31, 10))),
    );
    let p81 = ToricRegion::polydisk(q(8, 1), q(1, 1)).expect("valid");
    push(
        "min action P(8,1) class (1,1) anchor e10",
        "9",
        min_action_bound(&p81, Direction::DIAGONAL, Anchors::E10).expect("convex").to_string(),
    );

    let grid: Vec<Rational> = (20..=40).map(|k| q(k, 4)).collect();
    let gap: Vec<&Rational> = grid
        .iter()
        .filter(|c| {
            folding_embedding_exists(&q(8, 1), c).expect("a >= 1") == Existence::Yes
                && check_polydisk_ball(&q(8, 1), c).expect("a > 1").verdict == Verdict::Obstructed
        })
        .collect();
    push(
        "folding gap a=8 on quarter grid",
        "25/4..9",
        match (gap.first(), gap.last()) {
            (Some(lo), Some(hi)) => format!("{lo}..{hi}"),
            _ => "empty".into(),
        },
    );

    let p82 = ToricRegion::polydisk(q(8, 1), q(2, 1)).expect("valid");
    let e117 = ToricRegion::ellipsoid(q(11, 1), q(7, 1)).expect("valid");
    let rep = check_convex1(&p82, &e117).expect("convex");
    let cert = match &rep.certificate {
        Certificate::ViolatedDirection { direction, inner_value, outer_value } => {
            format!("{direction} {inner_value}>{outer_value}")
        }
        other => format!("{other:?}"),
    };
    push("convex1 P(8,2) vs E(11,7)", "Obstructed (7,11) 78>77", format!("{:?} {cert}", rep.verdict));

    let gens = enumerate_by_extents(Flavor::Convex, 5, 5);
    let bad = gens
        .iter()
        .filter(|g| {
            let a = iota(g);
            ech_index(&a).ok() != Some(g.index()) || j0_index(&a).ok() != Some(g.j0())
        })
        .count();
    push("orbit-layer indices, X,Y <= 5", "0 mismatches", format!("{bad} mismatches"));

    let mut bad = 0;
    for flavor in [Flavor::Convex, Flavor::Concave] {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..150 {
            let (a, b) = sample::pair(&mut rng, flavor, 4);
            if support_dominates(&a, &b).expect("same flavor") != region_contains(&a, &b) {
                bad += 1;
            }
        }
    }
    push("support comparison = containment (300 pairs)", "0 discrepancies", format!("{bad} discrepancies"));

    let b1 = ToricRegion::ball(q(1, 1)).expect("valid");
    let b32 = ToricRegion::ball(q(3, 2)).expect("valid");
    let rep = check_cross_anchor(&b1, &b32).expect("nested");
    let ok = match &rep.certificate {
        Certificate::Witness { path } => path.validate(&b1, &b32).expect("convex"),
        _ => false,
    };
    push("cross-anchor B(1) in B(3/2)", "NotObstructed valid", format!("{:?} {}", rep.verdict, if ok { "valid" } else { "invalid" }));

    let mut bad = 0;
    for flavor in [Flavor::Convex, Flavor::Concave] {
        for g in enumerate_by_extents(flavor, 6, 6) {
            let fast = match flavor {
                Flavor::Convex => g.lattice_count_convex(),
                Flavor::Concave => g.lattice_count_concave(),
            }
            .expect("flavor");
            bad += (fast != brute_lattice_count(&g)) as usize;
        }
    }
    push("lattice counts vs brute force, X,Y <= 6", "0 mismatches", format!("{bad} mismatches"));

    let e11 = PathGenerator::parse(Flavor::Convex, "e:1,1x1").expect("valid");
    let ext = |r: &ToricRegion| is_extremal(&e11, r).expect("all e");
    let e = ToricRegion::ellipsoid(q(1, 1), q(10, 7)).expect("valid");
    push("e11 minimal on E(1,10/7), not on P(8,2)", "true false", format!("{} {}", ext(&e), ext(&p82)));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut bad = 0;
    for _ in 0..50 {
        let spec = DomainSpec::from_region(&sample::region(&mut rng, Flavor::Convex, 4));
        let back = DomainSpec::from_json(&spec.to_json()).ok();
        bad += (back.as_ref() != Some(&spec)) as usize;
    }
    push("domain spec JSON round trip (50 specs)", "0 failures", format!("{bad} failures"));

    let p = Point::new(q(8, 1), q(2, 1));
    push("E(11,7) excludes (8,2)", "false", e117.contains_point(&p).to_string());
    out
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

/// One row per check plus a summary line.
pub fn table(checks: &[Check]) -> String {
    let w = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for c in checks {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        s.push_str(&format!(
            "{status}  {:<w$}  expected: {}  actual: {}\n",
            c.name, c.expected, c.actual
        ));
    }
    let n = checks.iter().filter(|c| c.passed()).count();
    s.push_str(&format!("{n}/{} checks passed\n", checks.len()));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes_and_is_stable() {
        let a = run();
        assert!(all_passed(&a), "{}", table(&a));
        assert_eq!(table(&a), table(&run()));
    }
}
