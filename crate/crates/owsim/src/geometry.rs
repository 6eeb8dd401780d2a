//! Points, line-of-sight segments, and horizontal disc occluders.
//!
//! The one geometric question the simulator asks is whether the straight
//! segment from a receiver up to an access point passes through an opaque
//! horizontal disc. Everything here is plain `f64` arithmetic with no
//! epsilon applied inside the predicate; callers that want tolerances layer
//! them on top.

use std::fmt;

use crate::error::{Error, Result};

/// A position in room coordinates, in meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// True when every coordinate is a finite number.
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Euclidean distance ignoring z.
    pub fn xy_distance(&self, other: &Point3) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt()
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// A line-of-sight segment from a receiver endpoint `a` to an AP endpoint
/// `b`. Endpoints are distinct by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    a: Point3,
    b: Point3,
}

impl Segment {
    /// Errors when the endpoints coincide or any coordinate is non-finite.
    pub fn new(a: Point3, b: Point3) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidInput(format!(
                "segment endpoints must be finite, got {a} and {b}"
            )));
        }
        if a == b {
            return Err(Error::InvalidInput(format!(
                "degenerate segment: endpoints coincide at {a}"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> Point3 {
        self.a
    }

    pub fn b(&self) -> Point3 {
        self.b
    }

    /// Point at parameter `t`, where `t = 0` is `a` and `t = 1` is `b`.
    pub fn point_at(&self, t: f64) -> Point3 {
        Point3::new(
            self.a.x + t * (self.b.x - self.a.x),
            self.a.y + t * (self.b.y - self.a.y),
            self.a.z + t * (self.b.z - self.a.z),
        )
    }
}

/// An opaque disc lying in a horizontal plane (normal +z). The orientation
/// is implicit and not configurable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disc {
    pub center: Point3,
    pub radius: f64,
}

impl Disc {
    /// Errors when the radius is negative or anything is non-finite.
    pub fn new(center: Point3, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(Error::InvalidInput(format!(
                "disc must be finite, got center {center}, radius {radius}"
            )));
        }
        if radius < 0.0 {
            return Err(Error::InvalidInput(format!(
                "disc radius must be >= 0, got {radius}"
            )));
        }
        Ok(Self { center, radius })
    }
}

/// Verdict of one segment/disc occlusion test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Occlusion {
    pub blocked: bool,
    /// Where the segment crosses the disc plane, when `blocked`.
    pub hit_point: Option<Point3>,
}

impl Occlusion {
    pub const CLEAR: Occlusion = Occlusion {
        blocked: false,
        hit_point: None,
    };
}

/// Tests whether `seg` passes through `disc`.
///
/// The segment is parameterized as `P(t) = a + t(b - a)`. It is blocked iff
/// the disc plane is crossed at some `t` in `[0, 1)` and the crossing point
/// lies within `radius` (inclusive) of the disc center in the horizontal
/// plane. Consequences of the half-open interval:
///
/// * a disc whose plane contains the receiver endpoint can block
///   (`t = 0` is included);
/// * a disc flush with the AP endpoint never blocks (`t = 1` is excluded);
/// * a horizontal segment lying inside the disc plane counts as clear.
///
/// Tangency (offset exactly equal to the radius) blocks.
pub fn segment_disc_intersection(seg: &Segment, disc: &Disc) -> Occlusion {
    let (a, b) = (seg.a(), seg.b());
    let dz = b.z - a.z;
    if dz == 0.0 {
        // Horizontal segment: either misses the disc plane entirely or is
        // coplanar with it; both count as clear.
        return Occlusion::CLEAR;
    }
    let t = (disc.center.z - a.z) / dz;
    if !(0.0..1.0).contains(&t) {
        return Occlusion::CLEAR;
    }
    let hit = seg.point_at(t);
    let dx = hit.x - disc.center.x;
    let dy = hit.y - disc.center.y;
    if (dx * dx + dy * dy).sqrt() <= disc.radius {
        Occlusion {
            blocked: true,
            hit_point: Some(hit),
        }
    } else {
        Occlusion::CLEAR
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a: (f64, f64, f64), b: (f64, f64, f64)) -> Segment {
        Segment::new(Point3::new(a.0, a.1, a.2), Point3::new(b.0, b.1, b.2)).unwrap()
    }

    fn disc(c: (f64, f64, f64), r: f64) -> Disc {
        Disc::new(Point3::new(c.0, c.1, c.2), r).unwrap()
    }

    #[test]
    fn vertical_segment_through_small_disc() {
        let s = seg((1.0, 1.0, 1.0), (1.0, 1.0, 3.0));
        let v = segment_disc_intersection(&s, &disc((1.0, 1.0, 1.1), 0.1));
        assert!(v.blocked);
        let hit = v.hit_point.unwrap();
        assert_eq!(hit, Point3::new(1.0, 1.0, 1.1));
    }

    #[test]
    fn disc_plane_above_segment_range_is_clear() {
        let s = seg((1.0, 1.0, 1.0), (1.0, 1.0, 3.0));
        // Huge radius, but the plane z = 3.5 is never reached.
        let v = segment_disc_intersection(&s, &disc((1.0, 1.0, 3.5), 5.0));
        assert!(!v.blocked);
        assert_eq!(v.hit_point, None);
    }

    #[test]
    fn oblique_crossing_sits_on_radius_threshold() {
        // Crossing at t = 0.25, hit (2.25, 4.25, 1.5); the horizontal offset
        // from the disc center (2, 4.5) is sqrt(0.125) ~ 0.353553.
        let s = seg((2.0, 4.0, 1.0), (3.0, 5.0, 3.0));
        let offset = 0.125f64.sqrt();

        let v = segment_disc_intersection(&s, &disc((2.0, 4.5, 1.5), 0.4));
        assert!(v.blocked, "radius 0.4 > offset {offset} should block");
        assert_eq!(v.hit_point.unwrap(), Point3::new(2.25, 4.25, 1.5));

        let v = segment_disc_intersection(&s, &disc((2.0, 4.5, 1.5), 0.3));
        assert!(!v.blocked, "radius 0.3 < offset {offset} should be clear");
    }

    #[test]
    fn receiver_endpoint_inside_disc_blocks() {
        // Disc plane contains the receiver endpoint: t = 0 is included.
        let s = seg((2.0, 4.0, 1.0), (3.0, 5.0, 3.0));
        let v = segment_disc_intersection(&s, &disc((2.0, 4.0, 1.0), 0.5));
        assert!(v.blocked);
        assert_eq!(v.hit_point.unwrap(), Point3::new(2.0, 4.0, 1.0));
    }

    #[test]
    fn ap_endpoint_plane_never_blocks() {
        // Disc plane contains the AP endpoint: t = 1 is excluded.
        let s = seg((2.0, 4.0, 1.0), (2.0, 4.0, 3.0));
        let v = segment_disc_intersection(&s, &disc((2.0, 4.0, 3.0), 10.0));
        assert!(!v.blocked);
    }

    #[test]
    fn coplanar_horizontal_segment_is_clear() {
        let s = seg((0.0, 0.0, 1.5), (3.0, 0.0, 1.5));
        let v = segment_disc_intersection(&s, &disc((1.5, 0.0, 1.5), 2.0));
        assert!(!v.blocked);
    }

    #[test]
    fn tangent_offset_blocks() {
        // Offset exactly equal to the radius (0.5) counts as blocked.
        let s = seg((0.0, 0.0, 0.0), (0.0, 0.0, 2.0));
        let v = segment_disc_intersection(&s, &disc((0.5, 0.0, 1.0), 0.5));
        assert!(v.blocked);
    }

    #[test]
    fn radius_monotonicity_on_a_fixed_crossing() {
        let s = seg((2.0, 4.0, 1.0), (3.0, 5.0, 3.0));
        let mut blocked_seen = false;
        for i in 0..=20 {
            let r = 0.05 * i as f64;
            let b = segment_disc_intersection(&s, &disc((2.0, 4.5, 1.5), r)).blocked;
            if blocked_seen {
                assert!(b, "verdict must stay blocked once radius {r} is reached");
            }
            blocked_seen |= b;
        }
        assert!(blocked_seen);
    }

    #[test]
    fn degenerate_segment_is_rejected() {
        let p = Point3::new(1.0, 2.0, 3.0);
        let err = Segment::new(p, p).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)), "got {err:?}");
        assert!(err.to_string().contains("degenerate segment"));
    }

    #[test]
    fn non_finite_and_negative_inputs_are_rejected() {
        let p = Point3::new(0.0, 0.0, 0.0);
        assert!(Segment::new(p, Point3::new(f64::NAN, 0.0, 1.0)).is_err());
        assert!(Disc::new(Point3::new(0.0, f64::INFINITY, 0.0), 1.0).is_err());
        assert!(Disc::new(p, -0.1).is_err());
        assert!(Disc::new(p, f64::NAN).is_err());
    }

    #[test]
    fn translation_preserves_the_verdict() {
        let cases = [
            ((0.5, 0.25, 0.0), (3.5, 7.75, 3.0), (1.0, 2.0, 1.25), 0.4),
            ((2.0, 4.0, 1.0), (3.0, 5.0, 3.0), (2.0, 4.5, 1.5), 0.35),
            ((1.0, 1.0, 1.0), (1.0, 1.0, 3.0), (1.2, 1.0, 2.0), 0.1),
        ];
        let shift = Point3::new(10.5, -3.25, 4.0);
        for (a, b, c, r) in cases {
            let before = segment_disc_intersection(&seg(a, b), &disc(c, r)).blocked;
            let moved = |p: (f64, f64, f64)| (p.0 + shift.x, p.1 + shift.y, p.2 + shift.z);
            let after =
                segment_disc_intersection(&seg(moved(a), moved(b)), &disc(moved(c), r)).blocked;
            assert_eq!(before, after);
        }
    }
}
