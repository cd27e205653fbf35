use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toric_ech::geometry::{region_contains, support_dominates};
use toric_ech::lattice::{enumerate_by_action, enumerate_by_extents, extent_bound};
use toric_ech::obstruct::{
    check_2anchored, check_polydisk_ball, folding_embedding_exists, min_action_bound, witness_eta,
    Anchors, Existence, Verdict,
};
use toric_ech::orbits::{iota, iota_inv, linking, q_tau, OrbitSet};
use toric_ech::{sample, Direction, EdgeSpec, Flavor, Label, PathGenerator, Point, Rational, ToricRegion};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn convex_region() -> impl Strategy<Value = ToricRegion> {
    any::<u64>().prop_map(|s| sample::region(&mut rng(s), Flavor::Convex, 5))
}

fn concave_region() -> impl Strategy<Value = ToricRegion> {
    any::<u64>().prop_map(|s| sample::region(&mut rng(s), Flavor::Concave, 5))
}

fn direction() -> impl Strategy<Value = Direction> {
    (0u64..12, 0u64..12).prop_filter_map("coprime", |(a, b)| Direction::new(a, b).ok())
}

fn small_direction() -> impl Strategy<Value = Direction> {
    (0u64..4, 0u64..4).prop_filter_map("coprime, a + b <= 4", |(a, b)| {
        Direction::new(a, b).ok().filter(|_| a + b <= 4)
    })
}

fn small_generators(flavor: Flavor) -> Vec<PathGenerator> {
    enumerate_by_extents(flavor, 5, 5)
}

fn generator(flavor: Flavor) -> impl Strategy<Value = PathGenerator> {
    let all = small_generators(flavor);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn support_is_homogeneous(r in convex_region(), d in direction(), k in 1u64..6) {
        let scaled = r.boundary().iter().map(|p| p.x.mul_int(k * d.a()) + p.y.mul_int(k * d.b())).max().unwrap();
        prop_assert_eq!(scaled, r.support(d).unwrap().mul_int(k));
    }

    #[test]
    fn axis_supports(r in convex_region()) {
        prop_assert_eq!(r.support(Direction::E10).unwrap(), r.a());
        prop_assert_eq!(r.support(Direction::E01).unwrap(), r.b());
        let s = r.support(Direction::DIAGONAL).unwrap();
        prop_assert!(s >= r.a() && s >= r.b());
    }

    #[test]
    fn support_monotone_under_containment(seed in any::<u64>(), d in direction()) {
        let (a, b) = sample::pair(&mut rng(seed), Flavor::Convex, 4);
        if region_contains(&a, &b) {
            prop_assert!(a.support(d).unwrap() <= b.support(d).unwrap());
        }
        let (a, b) = sample::pair(&mut rng(seed), Flavor::Concave, 4);
        if region_contains(&a, &b) && d.a() > 0 && d.b() > 0 {
            prop_assert!(a.bracket(d).unwrap() <= b.bracket(d).unwrap());
        }
    }

    #[test]
    fn support_comparison_matches_containment(seed in any::<u64>()) {
        for flavor in [Flavor::Convex, Flavor::Concave] {
            let (a, b) = sample::pair(&mut rng(seed), flavor, 5);
            prop_assert_eq!(support_dominates(&a, &b).unwrap(), region_contains(&a, &b));
        }
    }

    #[test]
    fn support_and_bracket_match_sampling(r in convex_region(), c in concave_region(), d in direction()) {
        // Dense sampling of each edge: exact at vertices, bounded between.
        for (region, is_max) in [(&r, true), (&c, false)] {
            let value = region.action_of(d);
            let pts: Vec<&Point> = region.chain().collect();
            let mut hit = false;
            for w in pts.windows(2) {
                for k in 0..=16 {
                    let t = Rational::new(k, 16);
                    let p = Point::new(&w[0].x + (&w[1].x - &w[0].x) * &t, &w[0].y + (&w[1].y - &w[0].y) * &t);
                    let v = d.eval(&p);
                    let ok = if is_max { v <= value } else { v >= value };
                    prop_assert!(ok);
                    hit |= v == value;
                }
            }
            prop_assert!(hit);
        }
    }

    #[test]
    fn transposition_symmetry(g in generator(Flavor::Convex), h in generator(Flavor::Concave), r in convex_region()) {
        for g in [g, h] {
            let t = g.transpose();
            prop_assert_eq!(PathGenerator::new(t.flavor(), t.edges().to_vec()).unwrap(), t.clone());
            let (x, y) = g.extents();
            prop_assert_eq!(t.extents(), (y, x));
            prop_assert_eq!(t.index(), g.index());
            prop_assert_eq!(t.j0(), g.j0());
            prop_assert_eq!((t.h_count(), t.e_count()), (g.h_count(), g.e_count()));
            prop_assert_eq!(t.transpose(), g.clone());
            if g.flavor() == Flavor::Convex {
                prop_assert_eq!(t.action(&r.transpose()).unwrap(), g.action(&r).unwrap());
            }
        }
    }

    #[test]
    fn convex_index_dominates_extent(g in generator(Flavor::Convex)) {
        let (x, y) = g.extents();
        prop_assert!(g.index() >= (x + y) as i64);
    }

    #[test]
    fn label_flips(g in generator(Flavor::Convex), h in generator(Flavor::Concave), r in convex_region()) {
        for g in [g, h] {
            for (i, e) in g.edges().iter().enumerate() {
                if e.label == Label::H || e.direction.is_axis() {
                    continue;
                }
                let mut edges = g.edges().to_vec();
                edges[i] = EdgeSpec { label: Label::H, ..*e };
                let flipped = PathGenerator::new(g.flavor(), edges).unwrap();
                let step = match g.flavor() { Flavor::Convex => -1, Flavor::Concave => 1 };
                prop_assert_eq!(flipped.index(), g.index() + step);
                if g.flavor() == Flavor::Convex {
                    prop_assert_eq!(flipped.action(&r).unwrap(), g.action(&r).unwrap());
                }
            }
        }
    }

    #[test]
    fn action_census_is_closed_and_monotone(r in convex_region(), n in 1i64..12) {
        let l = Rational::new(n, 2);
        let small = enumerate_by_action(&r, &l).unwrap();
        let big = enumerate_by_action(&r, &(&l + Rational::new(1, 2))).unwrap();
        prop_assert!(small.len() <= big.len());
        let set: std::collections::HashSet<_> = small.iter().cloned().collect();
        prop_assert_eq!(set.len(), small.len());
        for g in &small {
            prop_assert!(big.contains(g));
            let weakened = PathGenerator::new(g.flavor(), g.edges().iter().map(|e| EdgeSpec { label: Label::E, ..*e }).collect()).unwrap();
            prop_assert!(set.contains(&weakened));
        }
    }

    #[test]
    fn iota_round_trips(g in generator(Flavor::Convex), h in generator(Flavor::Concave)) {
        for g in [g, h] {
            let a = iota(&g);
            prop_assert_eq!(iota_inv(&a).unwrap(), g.clone());
            prop_assert_eq!(iota(&iota_inv(&a).unwrap()), a);
        }
    }

    #[test]
    fn q_tau_ignores_entry_order(g in generator(Flavor::Convex), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let a = iota(&g);
        let mut entries = a.entries().to_vec();
        entries.shuffle(&mut rng(seed));
        let b = OrbitSet::new(Flavor::Convex, entries).unwrap();
        prop_assert_eq!(q_tau(&a).unwrap(), q_tau(&b).unwrap());
    }

    #[test]
    fn linking_is_symmetric(g in generator(Flavor::Convex)) {
        let a = iota(&g);
        for (x, _) in a.entries() {
            for (y, _) in a.entries() {
                if x != y {
                    for f in [Flavor::Convex, Flavor::Concave] {
                        prop_assert_eq!(linking(x, y, f).unwrap(), linking(y, x, f).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn action_transports_through_iota(g in generator(Flavor::Convex), r in convex_region()) {
        prop_assert_eq!(iota(&g).action(&r).unwrap(), g.action(&r).unwrap());
    }

    #[test]
    fn witnesses_validate(seed in any::<u64>()) {
        let (inner, outer) = sample::pair(&mut rng(seed), Flavor::Convex, 4);
        let (_, s0) = inner.slope_minus_one_support().unwrap();
        if region_contains(&inner, &outer) && outer.b() > s0 {
            let w = witness_eta(&inner, &outer, &Rational::new(1, 4)).unwrap();
            prop_assert!(w.validate(&inner, &outer).unwrap());
            prop_assert_eq!(w.points.first().unwrap(), &Point::new(Rational::zero(), outer.b()));
            prop_assert_eq!(w.points.last().unwrap(), &Point::new(inner.a(), Rational::zero()));
        }
    }

    #[test]
    fn two_anchored_monotone(seed in any::<u64>(), k in 1i64..8) {
        let (inner, outer) = sample::pair(&mut rng(seed), Flavor::Convex, 4);
        let shrink = Rational::new(k, 8);
        if check_2anchored(&inner, &outer).unwrap().verdict == Verdict::Obstructed {
            // a smaller target stays obstructed
            prop_assert_eq!(check_2anchored(&inner, &outer.scale(&shrink)).unwrap().verdict, Verdict::Obstructed);
        } else {
            prop_assert_eq!(check_2anchored(&inner.scale(&shrink), &outer).unwrap().verdict, Verdict::Inconclusive);
        }
    }

    #[test]
    fn min_action_monotone(seed in any::<u64>(), d in small_direction()) {
        let big = sample::region(&mut rng(seed), Flavor::Convex, 4);
        let small = big.scale(&Rational::new(1, 2));
        for anchors in [Anchors::NONE, Anchors::E10, Anchors::BOTH] {
            prop_assert!(min_action_bound(&small, d, anchors).unwrap() <= min_action_bound(&big, d, anchors).unwrap());
        }
        let none = min_action_bound(&big, d, Anchors::NONE).unwrap();
        let one = min_action_bound(&big, d, Anchors::E10).unwrap();
        let both = min_action_bound(&big, d, Anchors::BOTH).unwrap();
        prop_assert!(none <= one && one <= both);
    }

    #[test]
    fn polydisk_ball_matches_engine(an in 5i64..40, cn in 1i64..60) {
        let a = Rational::new(an, 4);
        let c = Rational::new(cn, 4);
        let p = ToricRegion::polydisk(a.clone(), Rational::one()).unwrap();
        let bound = min_action_bound(&p, Direction::DIAGONAL, Anchors::E10).unwrap();
        let obstructed = check_polydisk_ball(&a, &c).unwrap().verdict == Verdict::Obstructed;
        prop_assert_eq!(obstructed, bound >= c);
        if a > Rational::from(2i64) && c > Rational::from(2i64) + &a / Rational::from(2i64) && c <= &a + Rational::one() {
            prop_assert_eq!(folding_embedding_exists(&a, &c).unwrap(), Existence::Yes);
            prop_assert!(obstructed);
        }
    }
}

#[test]
fn extent_bounds_hold_on_a_sweep() {
    for flavor in [Flavor::Convex, Flavor::Concave] {
        for g in enumerate_by_extents(flavor, 9, 9) {
            let (x, y) = g.extents();
            assert!(x + y <= extent_bound(flavor, g.index() as u64), "{g} {flavor}");
        }
    }
}
