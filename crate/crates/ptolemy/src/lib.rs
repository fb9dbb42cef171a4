//! Exact combinatorics of Ptolemy diagrams on convex polygons.
//!
//! A Ptolemy diagram is a set of pairwise distinct proper diagonals `A` of a
//! convex polygon that equals `nc(nc(A))`, where `nc` collects the diagonals
//! crossing nothing in `A`. The crate models these diagrams exactly (no
//! floating point anywhere):
//!
//! - [`diagram`]: the diagram type with crossing tests, region dissection,
//!   rotation and the perpendicular map.
//! - [`enumerate`]: lazy recursive generators, symmetry-constrained
//!   generators and a brute-force oracle over all diagonal subsets.
//! - [`count`]: closed-form counts by region class in arbitrary precision,
//!   including rotation-invariant, perpendicular-invariant and orbit counts.
//! - [`series`]: truncated multivariate power series solving the generating
//!   function fixed point, an independent oracle for the counts.
//! - [`qpoly`]: integer polynomial q-analogues, cyclotomic evaluation at
//!   roots of unity, and cyclic sieving verification reports.
//!
//! With the default `parallel` feature the heavy tallies fan out with rayon;
//! the sequential code paths remain available (and are the only ones compiled
//! when the feature is disabled).

pub mod count;
pub mod diagram;
pub mod enumerate;
mod error;
pub mod qpoly;
pub mod series;

pub use diagram::{all_proper_diagonals, Diagonal, Diagram, Region, RegionKind, RegionStats};
pub use error::{Error, Result};
