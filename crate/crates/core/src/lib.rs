//! Exact-arithmetic engine for the 24 Peres rays in four real dimensions.
//!
//! The crate reconstructs the rays and their 24 bases from integer
//! components, derives the polytope structures that organise them (the two
//! dual 24-cells, their Reye lines, Hexagons, Tridents and Squares), and
//! enumerates, constructs and classifies all 512 parity proofs of the
//! Kochen-Specker theorem the bases contain. A separate module works the
//! Peres-Mermin square built from the same two-qubit observables.
//!
//! Everything is integer or GF(2) arithmetic; nothing here touches floating
//! point.

pub mod coloring;
pub mod error;
pub mod geometry;
pub mod mermin;
pub mod pauli;
pub mod proofs;
pub mod sets;

pub use error::{Error, Result};
pub use geometry::{peres, BasisId, Cell, PeresSystem, RayId};
pub use sets::{BasisSet, RaySet};
