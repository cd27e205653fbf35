//! Seeded random regions for property tests and the self-test.

use rand::Rng;

use crate::geometry::{Flavor, Point, ToricRegion};
use crate::rational::Rational;

/// A positive rational `p/q` with `1 ≤ p ≤ max_num`, `1 ≤ q ≤ max_den`.
pub fn rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

/// A random valid region with up to `max_edges` sloped edges. Convex
/// regions sometimes get a horizontal first edge or a vertical last edge.
pub fn region<R: Rng>(rng: &mut R, flavor: Flavor, max_edges: usize) -> ToricRegion {
    loop {
        let n = rng.gen_range(1..=max_edges.max(1));
        let mut edges: Vec<(Rational, Rational)> =
            (0..n).map(|_| (rational(rng, 6, 3), -rational(rng, 6, 3))).collect();
        let slope = |e: &(Rational, Rational)| &e.1 / &e.0;
        edges.sort_by(|u, v| match flavor {
            Flavor::Convex => slope(v).cmp(&slope(u)),
            Flavor::Concave => slope(u).cmp(&slope(v)),
        });
        edges.dedup_by(|u, v| slope(u) == slope(v));
        if flavor == Flavor::Convex {
            if rng.gen_bool(0.25) {
                edges.insert(0, (rational(rng, 4, 2), Rational::zero()));
            }
            if rng.gen_bool(0.25) {
                edges.push((Rational::zero(), -rational(rng, 4, 2)));
            }
        }
        let height: Rational = edges.iter().map(|e| -e.1.clone()).sum();
        let mut p = Point::new(Rational::zero(), height);
        let mut chain = vec![p.clone()];
        for (dx, dy) in &edges {
            p = Point::new(&p.x + dx, &p.y + dy);
            chain.push(p.clone());
        }
        chain.reverse();
        if let Ok(r) = ToricRegion::new(flavor, chain) {
            return r;
        }
    }
}

/// A pair of regions that is contained in about half of the draws.
pub fn pair<R: Rng>(rng: &mut R, flavor: Flavor, max_edges: usize) -> (ToricRegion, ToricRegion) {
    let outer = region(rng, flavor, max_edges);
    let inner = match rng.gen_range(0..3) {
        0 => outer.scale(&Rational::new(rng.gen_range(1..=8), 8)),
        1 => outer.scale(&Rational::new(rng.gen_range(7..=10), rng.gen_range(8..=9))),
        _ => region(rng, flavor, max_edges),
    };
    (inner, outer)
}
