//! The room model: dimensions, ceiling AP layout, receiver grid on the
//! communication floor, and placement of the receiver-relative disc.
//!
//! Defaults describe the reference deployment used throughout the tests: a
//! 4 x 8 x 3 m room, eight ceiling APs in two rows of four, and receivers
//! spaced 0.25 m apart on a communication floor 1 m above the ground
//! (desk height), which makes a 16 x 32 grid of 512 locations.

use crate::error::{config_err, Result};
use crate::geometry::{Disc, Point3};

/// Rectangular room extents in meters. The origin sits in one corner; x
/// spans the width, y the length, z the height.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Room {
    pub width_x: f64,
    pub length_y: f64,
    pub height_z: f64,
}

impl Room {
    /// Errors unless all extents are finite and positive.
    pub fn new(width_x: f64, length_y: f64, height_z: f64) -> Result<Self> {
        for (key, v) in [
            ("room.width_x", width_x),
            ("room.length_y", length_y),
            ("room.height_z", height_z),
        ] {
            if !v.is_finite() || v <= 0.0 {
                return Err(config_err(key, format!("must be finite and > 0, got {v}")));
            }
        }
        Ok(Self {
            width_x,
            length_y,
            height_z,
        })
    }
}

impl Default for Room {
    fn default() -> Self {
        Room {
            width_x: 4.0,
            length_y: 8.0,
            height_z: 3.0,
        }
    }
}

/// The default ceiling layout: two rows of four APs, one meter in from the
/// long walls, two meters apart along the room.
pub const DEFAULT_AP_POSITIONS: [Point3; 8] = [
    Point3::new(1.0, 1.0, 3.0),
    Point3::new(1.0, 3.0, 3.0),
    Point3::new(1.0, 5.0, 3.0),
    Point3::new(1.0, 7.0, 3.0),
    Point3::new(3.0, 1.0, 3.0),
    Point3::new(3.0, 3.0, 3.0),
    Point3::new(3.0, 5.0, 3.0),
    Point3::new(3.0, 7.0, 3.0),
];

/// Ceiling-mounted access points, addressed by 1-based index in listing
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct ApLayout {
    positions: Vec<Point3>,
}

impl ApLayout {
    /// Validates that every AP sits inside the room footprint at ceiling
    /// height.
    pub fn new(positions: Vec<Point3>, room: &Room) -> Result<Self> {
        if positions.is_empty() {
            return Err(config_err("aps", "at least one access point is required"));
        }
        for (i, p) in positions.iter().enumerate() {
            let key = format!("aps[{i}]");
            if !p.is_finite() {
                return Err(config_err(&key, format!("must be finite, got {p}")));
            }
            if p.x < 0.0 || p.x > room.width_x || p.y < 0.0 || p.y > room.length_y {
                return Err(config_err(
                    &key,
                    format!(
                        "{p} lies outside the {} x {} m room footprint",
                        room.width_x, room.length_y
                    ),
                ));
            }
            if p.z != room.height_z {
                return Err(config_err(
                    &key,
                    format!("z ({}) must equal the room height ({})", p.z, room.height_z),
                ));
            }
        }
        Ok(Self { positions })
    }

    pub fn default_eight() -> Self {
        Self {
            positions: DEFAULT_AP_POSITIONS.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Position of the AP with the given 1-based index.
    pub fn position(&self, index: usize) -> Option<Point3> {
        if index == 0 {
            return None;
        }
        self.positions.get(index - 1).copied()
    }

    pub fn positions(&self) -> &[Point3] {
        &self.positions
    }

    /// Iterates `(index, position)` pairs with 1-based indices.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Point3)> + '_ {
        self.positions.iter().enumerate().map(|(i, p)| (i + 1, *p))
    }

    /// True when this layout is exactly the default eight-AP layout, which
    /// is what the named allocation presets are defined on.
    pub fn is_default(&self) -> bool {
        self.positions == DEFAULT_AP_POSITIONS
    }
}

/// Receiver locations on the communication floor.
///
/// Points are cell-centered — `spacing/2 + i*spacing` along each axis — and
/// ordered row-major with y varying fastest, then x.
#[derive(Debug, Clone, PartialEq)]
pub struct ReceiverGrid {
    cf_height: f64,
    spacing: f64,
    points: Vec<Point3>,
}

impl ReceiverGrid {
    pub fn cf_height(&self) -> f64 {
        self.cf_height
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn points(&self) -> &[Point3] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Number of whole grid cells along one room axis, or an error naming the
/// axis when the spacing does not divide it (within 1e-9 relative).
fn axis_cells(extent: f64, spacing: f64, axis: &str) -> Result<usize> {
    let ratio = extent / spacing;
    let n = ratio.round();
    if n < 1.0 || (ratio - n).abs() > 1e-9 * ratio.max(1.0) {
        return Err(config_err(
            axis,
            format!("room extent {extent} is not an integer multiple of grid spacing {spacing}"),
        ));
    }
    Ok(n as usize)
}

/// Builds the cell-centered receiver grid at height `cf_height`.
///
/// The spacing must divide both footprint extents; otherwise the offending
/// axis is named in the error.
pub fn generate_grid(room: &Room, cf_height: f64, spacing: f64) -> Result<ReceiverGrid> {
    if !spacing.is_finite() || spacing <= 0.0 {
        return Err(config_err(
            "spacing",
            format!("must be finite and > 0, got {spacing}"),
        ));
    }
    if !cf_height.is_finite() {
        return Err(config_err(
            "cf_height",
            format!("must be finite, got {cf_height}"),
        ));
    }
    let nx = axis_cells(room.width_x, spacing, "width_x")?;
    let ny = axis_cells(room.length_y, spacing, "length_y")?;
    let mut points = Vec::with_capacity(nx * ny);
    for i in 0..nx {
        let x = spacing / 2.0 + i as f64 * spacing;
        for j in 0..ny {
            let y = spacing / 2.0 + j as f64 * spacing;
            points.push(Point3::new(x, y, cf_height));
        }
    }
    Ok(ReceiverGrid {
        cf_height,
        spacing,
        points,
    })
}

/// The occluding disc described relative to a receiver: its radius, the
/// height of its plane above the communication floor, and its offset from
/// the receiver in the +y direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscSpec {
    pub radius: f64,
    pub height: f64,
    pub y_offset: f64,
}

impl DiscSpec {
    /// Errors unless all three parameters are finite and non-negative.
    pub fn new(radius: f64, height: f64, y_offset: f64) -> Result<Self> {
        for (key, v) in [
            ("radius", radius),
            ("height", height),
            ("y_offset", y_offset),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(config_err(key, format!("must be finite and >= 0, got {v}")));
            }
        }
        Ok(Self {
            radius,
            height,
            y_offset,
        })
    }
}

/// A complete evaluation scene.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub room: Room,
    pub aps: ApLayout,
    pub grid: ReceiverGrid,
}

impl Scene {
    pub fn new(room: Room, aps: ApLayout, grid: ReceiverGrid) -> Self {
        Self { room, aps, grid }
    }
}

/// The reference scene: default room, default eight-AP ceiling layout, and
/// the 512-point receiver grid 1 m above the ground at 0.25 m spacing.
pub fn build_default_scene() -> Scene {
    let room = Room::default();
    let grid = generate_grid(&room, 1.0, 0.25).expect("default grid parameters are valid");
    Scene::new(room, ApLayout::default_eight(), grid)
}

/// Places the disc for one receiver: the center sits `y_offset` toward +y
/// and `height` above the receiver. The disc is re-instantiated per
/// receiver and may overhang the room walls; no clamping is applied.
pub fn instantiate_disc(spec: &DiscSpec, receiver: Point3) -> Disc {
    Disc {
        center: Point3::new(
            receiver.x,
            receiver.y + spec.y_offset,
            receiver.z + spec.height,
        ),
        radius: spec.radius,
    }
}
