//! Workbench for soft set algebra and soft topologies over finite grounds,
//! with exact symbolic handling of three anchored families over a countably
//! infinite universe.
//!
//! The pieces:
//!
//! - [`ground`], [`set`], [`func`]: soft sets over a fixed `E x Z` cell
//!   grid, Boolean algebra, soft points, stability, and soft functions.
//! - [`topology`]: validated soft topologies, generation, lattice meet and
//!   join, subspaces, interior/closure, s-extensions, bases.
//! - [`props`]: connectedness, compactness, separation axioms,
//!   submaximality, stability, and soft-map properties.
//! - [`maximal`]: Gamma-maximality by brute enumeration, s-extension
//!   reduction, and the closed-equals-compact characterization.
//! - [`enumerate`]: exhaustive topology enumeration on tiny grounds, the
//!   complete lattice, and DOT export.
//! - [`claims`]: exhaustive verification of the maximality claims with
//!   replayable counterexample witnesses.
//! - [`symbolic`]: the Fort-type, particular-point, and excluded-point
//!   families over the naturals, with truncation-model oracles.
//! - [`parse`], [`cli`]: the textual formats and the command-line surface.
//!
//! All values are immutable after construction and safe to share across
//! threads.

mod bits;

pub mod claims;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod func;
pub mod ground;
pub mod maximal;
pub mod parse;
pub mod props;
pub mod set;
pub mod symbolic;
pub mod topology;

pub use error::{Error, Result};
pub use func::SoftFunction;
pub use ground::Ground;
pub use set::{SoftPoint, SoftSet};
pub use topology::SoftTopology;
