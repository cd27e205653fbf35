//! Orbit sets on a nice perturbation of a toric boundary, and the
//! orbit-layer index computation.
//!
//! Each torus of Reeb orbits with normal `(a, b)` breaks into an elliptic
//! orbit `e_{a,b}` and, when `a, b ≥ 1`, a positive hyperbolic orbit
//! `h_{a,b}`. [`iota`] sends a lattice path to its orbit set; the indices
//! computed here from the trivialization tables agree with the lattice-point
//! formulas in [`crate::lattice`] for convex domains.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Direction, Flavor, ToricRegion};
use crate::lattice::{EdgeSpec, Label, PathGenerator};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrbitKind {
    Elliptic,
    Hyperbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub kind: OrbitKind,
    pub direction: Direction,
}

impl OrbitLabel {
    pub fn new(kind: OrbitKind, direction: Direction) -> Result<Self> {
        if kind == OrbitKind::Hyperbolic && direction.is_axis() {
            return Err(Error::InvalidOrbitSet(format!(
                "no hyperbolic orbit on the axis torus {direction}"
            )));
        }
        Ok(OrbitLabel { kind, direction })
    }

    pub fn e(a: u64, b: u64) -> Result<Self> {
        Self::new(OrbitKind::Elliptic, Direction::new(a, b)?)
    }

    pub fn h(a: u64, b: u64) -> Result<Self> {
        Self::new(OrbitKind::Hyperbolic, Direction::new(a, b)?)
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            OrbitKind::Elliptic => 'e',
            OrbitKind::Hyperbolic => 'h',
        };
        write!(f, "{k}{}", self.direction)
    }
}

/// A finite set of distinct orbits with positive multiplicities, kept
/// sorted by label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitSet {
    flavor: Flavor,
    entries: Vec<(OrbitLabel, u64)>,
}

impl OrbitSet {
    pub fn new(flavor: Flavor, mut entries: Vec<(OrbitLabel, u64)>) -> Result<Self> {
        entries.sort();
        for w in entries.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidOrbitSet(format!("{} listed twice", w[0].0)));
            }
        }
        for (label, m) in &entries {
            OrbitLabel::new(label.kind, label.direction)?;
            if *m == 0 {
                return Err(Error::InvalidOrbitSet("multiplicities must be positive".into()));
            }
            if label.kind == OrbitKind::Hyperbolic && *m != 1 {
                return Err(Error::InvalidOrbitSet(format!(
                    "hyperbolic orbit {label} must have multiplicity 1"
                )));
            }
            if flavor == Flavor::Concave && label.direction.is_axis() {
                return Err(Error::InvalidOrbitSet(format!(
                    "{label} lies outside the concave action window"
                )));
            }
        }
        Ok(OrbitSet { flavor, entries })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn entries(&self) -> &[(OrbitLabel, u64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn require_convex(&self) -> Result<()> {
        match self.flavor {
            Flavor::Convex => Ok(()),
            Flavor::Concave => Err(Error::ConcaveOrbitIndex),
        }
    }

    /// `Σ m·action(direction)` over the entries.
    pub fn action(&self, region: &ToricRegion) -> Result<Rational> {
        if region.flavor() != self.flavor {
            return Err(Error::MixedFlavors { op: "action" });
        }
        Ok(self
            .entries
            .iter()
            .map(|(l, m)| region.action_of(l.direction).mul_int(*m))
            .sum())
    }
}

impl fmt::Display for OrbitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("empty");
        }
        for (i, (l, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

/// E-edge `(a,b)×m` becomes `e_{a,b}^m`; H-edge `(a,b)×m` becomes
/// `e_{a,b}^{m−1} h_{a,b}`.
pub fn iota(g: &PathGenerator) -> OrbitSet {
    let mut entries = Vec::new();
    for e in g.edges() {
        let elliptic = OrbitLabel { kind: OrbitKind::Elliptic, direction: e.direction };
        match e.label {
            Label::E => entries.push((elliptic, e.multiplicity)),
            Label::H => {
                if e.multiplicity > 1 {
                    entries.push((elliptic, e.multiplicity - 1));
                }
                entries.push((
                    OrbitLabel { kind: OrbitKind::Hyperbolic, direction: e.direction },
                    1,
                ));
            }
        }
    }
    OrbitSet::new(g.flavor(), entries).expect("image of a valid generator")
}

pub fn iota_inv(alpha: &OrbitSet) -> Result<PathGenerator> {
    let mut edges: Vec<EdgeSpec> = Vec::new();
    // Entries are sorted by kind first, so elliptic ones come first.
    for (l, m) in &alpha.entries {
        match l.kind {
            OrbitKind::Elliptic => edges.push(EdgeSpec::new(l.direction, *m, Label::E)?),
            OrbitKind::Hyperbolic => match edges.iter_mut().find(|e| e.direction == l.direction) {
                Some(e) => {
                    e.multiplicity += 1;
                    e.label = Label::H;
                }
                None => edges.push(EdgeSpec::new(l.direction, 1, Label::H)?),
            },
        }
    }
    match alpha.flavor {
        Flavor::Convex if edges.is_empty() => Ok(PathGenerator::empty()),
        flavor => PathGenerator::from_unordered(flavor, edges),
    }
}

/// Linking number of two distinct simple orbits.
pub fn linking(x: &OrbitLabel, y: &OrbitLabel, flavor: Flavor) -> Result<u64> {
    if x == y {
        return Err(Error::SelfLinking);
    }
    let p = x.direction.a() * y.direction.b();
    let r = y.direction.a() * x.direction.b();
    Ok(match flavor {
        Flavor::Convex => p.max(r),
        Flavor::Concave => p.min(r),
    })
}

pub fn c_tau(alpha: &OrbitSet) -> Result<i64> {
    alpha.require_convex()?;
    Ok(alpha
        .entries
        .iter()
        .map(|(l, m)| (m * (l.direction.a() + l.direction.b())) as i64)
        .sum())
}

/// Diagonal terms `m²·ab` plus linking over ordered pairs of distinct
/// entries.
pub fn q_tau(alpha: &OrbitSet) -> Result<i64> {
    alpha.require_convex()?;
    let mut q = 0i64;
    for (i, (x, m)) in alpha.entries.iter().enumerate() {
        q += (m * m * x.direction.a() * x.direction.b()) as i64;
        for (j, (y, n)) in alpha.entries.iter().enumerate() {
            if i != j {
                q += (m * n * linking(x, y, Flavor::Convex)?) as i64;
            }
        }
    }
    Ok(q)
}

/// Sum of Conley–Zehnder indices over all iterates: 1 for each iterate of
/// an elliptic orbit, 0 for hyperbolic ones.
pub fn cz_total(alpha: &OrbitSet) -> Result<i64> {
    alpha.require_convex()?;
    Ok(alpha
        .entries
        .iter()
        .filter(|(l, _)| l.kind == OrbitKind::Elliptic)
        .map(|(_, m)| *m as i64)
        .sum())
}

pub fn ech_index(alpha: &OrbitSet) -> Result<i64> {
    Ok(c_tau(alpha)? + q_tau(alpha)? + cz_total(alpha)?)
}

/// `I − 2c_τ − Σ CZ(α_i^{m_i})`, one term per distinct orbit.
pub fn j0_index(alpha: &OrbitSet) -> Result<i64> {
    let top: i64 = alpha
        .entries
        .iter()
        .filter(|(l, _)| l.kind == OrbitKind::Elliptic)
        .count() as i64;
    Ok(ech_index(alpha)? - 2 * c_tau(alpha)? - top)
}

/// Total linking with `e_{1,0}` and with `e_{0,1}`.
pub fn linking_degrees(alpha: &OrbitSet) -> (u64, u64) {
    let mut deg = (0, 0);
    for (l, m) in &alpha.entries {
        if l.direction != Direction::E10 {
            deg.0 += m * l.direction.b();
        }
        if l.direction != Direction::E01 {
            deg.1 += m * l.direction.a();
        }
    }
    deg
}
