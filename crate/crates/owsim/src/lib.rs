//! Line-of-sight blockage simulator for indoor optical wireless rooms.
//!
//! The model is a rectangular room with ceiling-mounted access points and a
//! grid of receiver locations on a raised communication floor. An opaque
//! horizontal disc, positioned relative to each receiver, occludes straight
//! receiver-to-AP beams. A user may hold several links at once (a serving
//! link plus protection links); a location counts as blocked only when every
//! allocated link is occluded. The headline metric is the percentage of
//! blocked grid locations, swept over one disc parameter at a time.
//!
//! * [`geometry`] — points, segments, discs, and the occlusion predicate
//! * [`scene`] — room, AP layout, receiver grid, disc placement
//! * [`allocation`] — explicit AP sets, named presets, max–min separation
//! * [`blockage`] — per-link / per-receiver verdicts and the grid percentage
//! * [`sweep`] — one-parameter sweeps and built-in scenarios
//! * [`cli`] — JSON config, table/chart output, end-to-end execution

pub mod allocation;
pub mod blockage;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod scene;
pub mod sweep;

pub use error::{Error, Result};
