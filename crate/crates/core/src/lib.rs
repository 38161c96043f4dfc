//! Combinatorial curves on surfaces, certified curve-graph distance
//! intervals, curve lifting under finite covers, and the explicit
//! constants that bound how much covers can detangle curves.
//!
//! The crate is organized around a fixed polygonal model of each surface
//! ([`cellulation::Cellulation`]). Curves are cyclic sequences of edge
//! crossings with exact rational positions, so intersection counts,
//! Dehn twists, and lifts to finite covers are all exact combinatorial
//! operations.

pub mod cellulation;
pub mod constants;
pub mod covers;
pub mod cubes;
pub mod curves;
pub mod distance;
pub mod error;
pub mod fibered;
pub mod files;
pub mod geom;
pub mod surface;
pub mod sweepout;
pub mod words;

pub use error::Error;
pub use surface::SurfaceSig;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
