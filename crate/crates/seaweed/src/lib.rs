//! Structural invariants of seaweed subalgebras of `gl(N)` and `sl(N)`.
//!
//! A seaweed algebra is cut out of `gl(N)` by a pair of compositions of `N`:
//! the top composition contributes lower-triangular blocks, the bottom one
//! upper-triangular blocks. This crate computes its index, center dimension,
//! nilradical index, and breadth from three combinatorial gadgets:
//!
//! * the meander graph ([`meander`]), whose cycles and paths give the index
//!   of the seaweed itself;
//! * the edge-weighted meander ([`weighted`]), whose total weight gives the
//!   index of the nilpotent part of the nilradical;
//! * the block diagram and its induced poset ([`poset`]), which realize the
//!   nilradical as a nilpotent Lie poset algebra plus the center.
//!
//! Every formula can be cross-checked against [`oracle`], an exact
//! matrix-level computation over a large prime field that knows nothing
//! about meanders. [`verify`] drives those cross-checks in bulk.

pub mod invariants;
pub mod meander;
pub mod notation;
pub mod oracle;
pub mod poset;
pub mod render;
pub mod verify;
pub mod weighted;

pub use invariants::InvariantReport;
pub use notation::{Composition, Flavor, SeaweedSpec};
