//! Exact computation of Hodge-type invariants of convex polytopes: the spaces
//! `D^k` built from the fan over a polytope, the flag system for `D^2`, the
//! nerve spectral sequence, and graded deformations of Gorenstein toric cones.
//!
//! ```
//! let p = polyhodge::zoo::cuboctahedron();
//! assert_eq!(polyhodge::dinv::d_profile(&p).unwrap().dims, vec![0, 1, 3, 0]);
//! ```

pub mod cli;
pub mod complexes;
pub mod d2sys;
pub mod dinv;
pub mod error;
pub mod exactla;
pub mod io;
pub mod nerve;
pub mod polytope;
pub mod toricdef;
pub mod zoo;

pub use error::{Error, Result};
