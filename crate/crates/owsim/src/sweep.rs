//! One-parameter sweeps: fix two disc parameters, vary the third, and
//! tabulate percentage blockage per allocation.

use rayon::prelude::*;

use crate::allocation::Allocation;
use crate::blockage::{blockage_map, Parallelism, PercentBlockage};
use crate::error::{config_err, Result};
use crate::scene::{DiscSpec, Scene};

/// Which disc parameter a sweep varies, together with the two fixed values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepAxis {
    Radius { height: f64, y_offset: f64 },
    Height { radius: f64, y_offset: f64 },
    Distance { radius: f64, height: f64 },
}

impl SweepAxis {
    pub fn param_name(&self) -> &'static str {
        match self {
            SweepAxis::Radius { .. } => "radius",
            SweepAxis::Height { .. } => "height",
            SweepAxis::Distance { .. } => "distance",
        }
    }

    /// The two fixed parameters as `(config key, value)` pairs.
    pub fn fixed(&self) -> [(&'static str, f64); 2] {
        match *self {
            SweepAxis::Radius { height, y_offset } => [("height", height), ("y_offset", y_offset)],
            SweepAxis::Height { radius, y_offset } => [("radius", radius), ("y_offset", y_offset)],
            SweepAxis::Distance { radius, height } => [("radius", radius), ("height", height)],
        }
    }

    /// The disc for one swept value.
    pub fn disc_spec(&self, value: f64) -> DiscSpec {
        let (radius, height, y_offset) = match *self {
            SweepAxis::Radius { height, y_offset } => (value, height, y_offset),
            SweepAxis::Height { radius, y_offset } => (radius, value, y_offset),
            SweepAxis::Distance { radius, height } => (radius, height, value),
        };
        DiscSpec {
            radius,
            height,
            y_offset,
        }
    }
}

/// A validated sweep over `start + i*step` for `i` in `0..len`.
///
/// Values come from the index formula, not cumulative addition, so long
/// sweeps do not accumulate rounding drift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    axis: SweepAxis,
    start: f64,
    stop: f64,
    step: f64,
}

impl SweepSpec {
    pub fn new(axis: SweepAxis, start: f64, stop: f64, step: f64) -> Result<Self> {
        for (key, v) in [
            ("sweep.start", start),
            ("sweep.stop", stop),
            ("sweep.step", step),
        ] {
            if !v.is_finite() {
                return Err(config_err(key, format!("must be finite, got {v}")));
            }
        }
        if step <= 0.0 {
            return Err(config_err("sweep.step", format!("must be > 0, got {step}")));
        }
        if start < 0.0 {
            return Err(config_err(
                "sweep.start",
                format!("must be >= 0, got {start}"),
            ));
        }
        if stop < start {
            return Err(config_err(
                "sweep.stop",
                format!("stop ({stop}) must not be less than start ({start})"),
            ));
        }
        for (key, v) in axis.fixed() {
            if !v.is_finite() || v < 0.0 {
                return Err(config_err(
                    &format!("sweep.{key}"),
                    format!("must be finite and >= 0, got {v}"),
                ));
            }
        }
        Ok(Self {
            axis,
            start,
            stop,
            step,
        })
    }

    pub fn axis(&self) -> SweepAxis {
        self.axis
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn stop(&self) -> f64 {
        self.stop
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Number of swept values: `floor((stop - start) / step + 1)`, with a
    /// tiny slack so that e.g. 0..1 by 0.05 lands on 21 points despite
    /// binary rounding.
    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + 1.0 + 1e-9).floor() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.len())
            .map(|i| self.start + i as f64 * self.step)
            .collect()
    }
}

/// A named, ready-to-run sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioPreset {
    pub name: &'static str,
    pub sweep: SweepSpec,
}

/// The four built-in scenarios:
///
/// * `close-overhead-radius` — a disc 10 cm directly above the receiver,
///   radius swept 0..1 m;
/// * `distance-sweep` — a fixed small disc walked away from the receiver
///   along +y, 0..2 m;
/// * `height-sweep` — the same disc raised from the floor plane to the
///   ceiling, 0..2 m;
/// * `radius-at-distance` — a disc half a meter up and half a meter away,
///   radius swept 0..1 m.
pub fn scenario_presets() -> Vec<ScenarioPreset> {
    let specs = [
        (
            "close-overhead-radius",
            SweepAxis::Radius {
                height: 0.1,
                y_offset: 0.0,
            },
            0.0,
            1.0,
            0.05,
        ),
        (
            "distance-sweep",
            SweepAxis::Distance {
                radius: 0.2,
                height: 0.1,
            },
            0.0,
            2.0,
            0.1,
        ),
        (
            "height-sweep",
            SweepAxis::Height {
                radius: 0.2,
                y_offset: 0.0,
            },
            0.0,
            2.0,
            0.1,
        ),
        (
            "radius-at-distance",
            SweepAxis::Radius {
                height: 0.5,
                y_offset: 0.5,
            },
            0.0,
            1.0,
            0.05,
        ),
    ];
    specs
        .into_iter()
        .map(|(name, axis, start, stop, step)| ScenarioPreset {
            name,
            sweep: SweepSpec::new(axis, start, stop, step).expect("presets are valid"),
        })
        .collect()
}

/// Looks a scenario preset up by name.
pub fn scenario_preset(name: &str) -> Option<ScenarioPreset> {
    scenario_presets().into_iter().find(|p| p.name == name)
}

/// One sweep row: the parameter value and one percentage per allocation, in
/// allocation order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub param_value: f64,
    pub cells: Vec<PercentBlockage>,
}

/// A finished sweep table.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub param_name: String,
    pub allocation_labels: Vec<String>,
    pub rows: Vec<SweepRow>,
}

/// Runs the sweep for every allocation. Rows come back ordered by parameter
/// value; the table is identical whether or not threads are used.
pub fn run_sweep(
    scene: &Scene,
    allocations: &[Allocation],
    sweep: &SweepSpec,
    parallelism: Parallelism,
) -> Result<SweepResult> {
    if allocations.is_empty() {
        return Err(config_err("allocations", "no allocations specified"));
    }
    for alloc in allocations {
        alloc.validate_against(&scene.aps)?;
    }
    let values = sweep.values();
    let eval_row = |value: &f64| -> Result<SweepRow> {
        let spec = sweep.axis().disc_spec(*value);
        let cells = allocations
            .iter()
            .map(|alloc| blockage_map(scene, alloc, &spec, parallelism).map(|m| m.percentage()))
            .collect::<Result<Vec<_>>>()?;
        Ok(SweepRow {
            param_value: *value,
            cells,
        })
    };
    let rows: Vec<SweepRow> = match parallelism {
        Parallelism::Sequential => values.iter().map(eval_row).collect::<Result<_>>()?,
        Parallelism::Parallel => values.par_iter().map(eval_row).collect::<Result<_>>()?,
    };
    Ok(SweepResult {
        param_name: sweep.axis().param_name().to_string(),
        allocation_labels: allocations.iter().map(|a| a.label().to_string()).collect(),
        rows,
    })
}
