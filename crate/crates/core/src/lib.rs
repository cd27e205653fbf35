//! Combinatorial ECH data of four-dimensional toric domains, and
//! obstructions to anchored symplectic embeddings between them.
//!
//! A toric domain is described by its moment region, a [`ToricRegion`].
//! ECH generators are modeled as labeled lattice paths ([`PathGenerator`])
//! whose indices come from lattice-point counts and whose actions come from
//! the region's support function. On top of that, [`obstruct`] decides when
//! anchored embeddings are impossible and builds witnesses when they are
//! not.
//!
//! ```
//! use toric_ech::{lattice, Flavor, PathGenerator};
//!
//! let census: Vec<String> = lattice::enumerate_by_index(Flavor::Convex, 4)
//!     .iter()
//!     .map(PathGenerator::to_string)
//!     .collect();
//! assert_eq!(census, ["e:0,1x2", "e:1,0x2", "e:1,1x1"]);
//! ```
//!
//! All arithmetic is exact, over [`Rational`].

pub mod domain;
pub mod error;
pub mod geometry;
pub mod lattice;
pub mod obstruct;
pub mod orbits;
pub mod rational;
pub mod render;
pub mod report;
pub mod sample;
pub mod selftest;

pub use error::{Error, Result};
pub use geometry::{Direction, Flavor, Point, ToricRegion};
pub use lattice::{EdgeSpec, Label, PathGenerator};
pub use obstruct::{ObstructionReport, Verdict, WitnessPath};
pub use orbits::{OrbitLabel, OrbitSet};
pub use rational::Rational;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

// The book chapters run as doc-tests, one module per chapter so a failure
// points at its file.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod book_introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/regions.md")]
pub mod book_regions {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/generators.md")]
pub mod book_generators {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/orbits.md")]
pub mod book_orbits {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/obstructions.md")]
pub mod book_obstructions {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub mod book_cli {}
