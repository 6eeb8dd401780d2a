//! The blockage metric: per-link and per-receiver occlusion under an
//! allocation, and percentage blockage over the receiver grid.
//!
//! A multi-link user counts as blocked only when *every* allocated link is
//! occluded — a single clear protection link keeps the location served.
//! Grid evaluation is embarrassingly parallel: per-point verdicts are pure
//! and get merged back in grid order, so results are identical whether or
//! not threads are used.

use rayon::prelude::*;

use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::geometry::{segment_disc_intersection, Disc, Point3, Segment};
use crate::scene::{instantiate_disc, DiscSpec, Scene};

/// Whether grid evaluation fans out across threads. Results are bitwise
/// identical either way; `Sequential` exists so determinism can be checked
/// and reproduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

/// Blocked locations over total locations, kept as exact integer counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PercentBlockage {
    blocked: usize,
    total: usize,
}

impl PercentBlockage {
    pub fn new(blocked: usize, total: usize) -> Self {
        debug_assert!(total > 0 && blocked <= total);
        Self { blocked, total }
    }

    pub fn blocked_count(&self) -> usize {
        self.blocked
    }

    pub fn total_count(&self) -> usize {
        self.total
    }

    /// The percentage in [0, 100]: `100 * blocked / total`.
    pub fn value(&self) -> f64 {
        100.0 * self.blocked as f64 / self.total as f64
    }
}

/// Per-receiver verdicts in grid order.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockageMap {
    entries: Vec<(Point3, bool)>,
}

impl BlockageMap {
    pub fn entries(&self) -> &[(Point3, bool)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn blocked_count(&self) -> usize {
        self.entries.iter().filter(|(_, blocked)| *blocked).count()
    }

    pub fn percentage(&self) -> PercentBlockage {
        PercentBlockage::new(self.blocked_count(), self.len())
    }
}

/// True when the straight beam from `receiver` to `ap` passes through
/// `disc`. Errors if the two points coincide.
pub fn link_blocked(receiver: Point3, ap: Point3, disc: &Disc) -> Result<bool> {
    let seg = Segment::new(receiver, ap)?;
    Ok(segment_disc_intersection(&seg, disc).blocked)
}

/// True when every allocated link of this receiver is occluded by the disc
/// placed for it.
pub fn receiver_blocked(
    receiver: Point3,
    alloc: &Allocation,
    spec: &DiscSpec,
    scene: &Scene,
) -> Result<bool> {
    let disc = instantiate_disc(spec, receiver);
    for &index in alloc.ap_indices() {
        let ap = scene.aps.position(index).ok_or_else(|| {
            Error::InvalidAllocation(format!(
                "allocation '{}' references AP {index}, but the scene has {} APs",
                alloc.label(),
                scene.aps.len()
            ))
        })?;
        if !link_blocked(receiver, ap, &disc)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates every grid receiver under `alloc`, returning verdicts in grid
/// order.
pub fn blockage_map(
    scene: &Scene,
    alloc: &Allocation,
    spec: &DiscSpec,
    parallelism: Parallelism,
) -> Result<BlockageMap> {
    alloc.validate_against(&scene.aps)?;
    let points = scene.grid.points();
    let verdicts: Vec<bool> = match parallelism {
        Parallelism::Sequential => points
            .iter()
            .map(|p| receiver_blocked(*p, alloc, spec, scene))
            .collect::<Result<_>>()?,
        Parallelism::Parallel => points
            .par_iter()
            .map(|p| receiver_blocked(*p, alloc, spec, scene))
            .collect::<Result<_>>()?,
    };
    Ok(BlockageMap {
        entries: points.iter().copied().zip(verdicts).collect(),
    })
}

/// Percentage of grid locations whose every allocated link is occluded.
pub fn percentage_blockage(
    scene: &Scene,
    alloc: &Allocation,
    spec: &DiscSpec,
) -> Result<PercentBlockage> {
    Ok(blockage_map(scene, alloc, spec, Parallelism::Parallel)?.percentage())
}
