//! Independent oracles for the integration suites.
//!
//! Nothing here calls into the crate's intersection or counting code paths.
//! The blocked/clear decision is recomputed two different ways — by dense
//! sampling along the segment, and analytically from the AP end with the
//! parameterization reversed — and grid counting re-derives the receiver
//! lattice from first principles.

#![allow(dead_code)]

use owsim::geometry::Point3;

/// 10⁻⁵ t-steps per segment.
pub const DENSE_STEPS: usize = 100_000;

/// Max xy-speed of a segment in the default room is √(4²+8²) < 9 m per unit
/// t, so midpoint sampling pins the crossing offset to better than
/// 9/(2·10⁵) < 5·10⁻⁵ m. Verdicts may differ from an exact method only when
/// the offset is within this band of the radius.
pub const DENSE_TOLERANCE: f64 = 1e-4;

/// Decides blocked/clear by marching `DENSE_STEPS` midpoint samples along
/// the receiver→AP segment and testing the sample that lands in the disc's
/// z-slab. Endpoint rules are applied exactly: a disc plane through the AP
/// never blocks, a horizontal segment is never blocked.
pub fn dense_sampling_blocked(receiver: Point3, ap: Point3, center: Point3, radius: f64) -> bool {
    let dz = ap.z - receiver.z;
    if dz == 0.0 || center.z == ap.z {
        return false;
    }
    let n = DENSE_STEPS as f64;
    let half_slab = (dz / (2.0 * n)).abs();
    for i in 0..DENSE_STEPS {
        let t = (i as f64 + 0.5) / n;
        let z = receiver.z + t * dz;
        if (z - center.z).abs() <= half_slab {
            let x = receiver.x + t * (ap.x - receiver.x);
            let y = receiver.y + t * (ap.y - receiver.y);
            return f64::hypot(x - center.x, y - center.y) <= radius;
        }
        // z moves monotonically; once past the plane, stop scanning.
        if (z - center.z).signum() == dz.signum() {
            break;
        }
    }
    false
}

/// Analytic verdict computed from the AP end: s ∈ (0, 1] walks AP→receiver,
/// so the receiver endpoint is included and the AP endpoint excluded.
pub fn reverse_blocked(receiver: Point3, ap: Point3, center: Point3, radius: f64) -> bool {
    let dz = receiver.z - ap.z;
    if dz == 0.0 {
        return false;
    }
    let s = (center.z - ap.z) / dz;
    if !(s > 0.0 && s <= 1.0) {
        return false;
    }
    let x = ap.x + s * (receiver.x - ap.x);
    let y = ap.y + s * (receiver.y - ap.y);
    f64::hypot(x - center.x, y - center.y) <= radius
}

/// Horizontal distance between the disc center and the point where the
/// segment crosses the disc plane, if it crosses with t in [0, 1).
pub fn crossing_offset(receiver: Point3, ap: Point3, center: Point3) -> Option<f64> {
    let dz = ap.z - receiver.z;
    if dz == 0.0 {
        return None;
    }
    let t = (center.z - receiver.z) / dz;
    if !(0.0..1.0).contains(&t) {
        return None;
    }
    let x = receiver.x + t * (ap.x - receiver.x);
    let y = receiver.y + t * (ap.y - receiver.y);
    Some(f64::hypot(x - center.x, y - center.y))
}

/// The default ceiling layout, written out by hand.
pub const ORACLE_APS: [(f64, f64, f64); 8] = [
    (1.0, 1.0, 3.0),
    (1.0, 3.0, 3.0),
    (1.0, 5.0, 3.0),
    (1.0, 7.0, 3.0),
    (3.0, 1.0, 3.0),
    (3.0, 3.0, 3.0),
    (3.0, 5.0, 3.0),
    (3.0, 7.0, 3.0),
];

pub const ORACLE_GRID_NX: usize = 16;
pub const ORACLE_GRID_NY: usize = 32;

/// Rebuilds the default 16×32 receiver lattice from its construction rule
/// and counts the receivers whose every allocated link is blocked, deciding
/// each link with [`reverse_blocked`]. `ap_indices` are 1-based.
pub fn brute_force_blocked_count(
    radius: f64,
    height: f64,
    y_offset: f64,
    ap_indices: &[usize],
) -> usize {
    let mut blocked = 0;
    for ix in 0..ORACLE_GRID_NX {
        for iy in 0..ORACLE_GRID_NY {
            let receiver = Point3::new(0.125 + 0.25 * ix as f64, 0.125 + 0.25 * iy as f64, 1.0);
            let center = Point3::new(receiver.x, receiver.y + y_offset, receiver.z + height);
            let all_cut = ap_indices.iter().all(|&i| {
                let (ax, ay, az) = ORACLE_APS[i - 1];
                reverse_blocked(receiver, Point3::new(ax, ay, az), center, radius)
            });
            if all_cut {
                blocked += 1;
            }
        }
    }
    blocked
}

/// 1↔5, 2↔6, 3↔7, 4↔8 — the AP that sits at the mirrored x position.
pub fn mirror_ap_index(index: usize) -> usize {
    if index <= 4 {
        index + 4
    } else {
        index - 4
    }
}
