//! JSON run configuration: parsing, validation, and canonical
//! re-serialization.
//!
//! Parsing is strict: unknown keys are rejected everywhere, and validation
//! errors name the offending key path. A missing `scene` block means the
//! default scene; `allocations` and `sweep` are required.

use std::path::PathBuf;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use crate::allocation::{resolve_preset, Allocation, StrategyPreset};
use crate::blockage::Parallelism;
use crate::error::{config_err, Error, Result};
use crate::geometry::Point3;
use crate::scene::{generate_grid, ApLayout, Room, Scene};
use crate::sweep::{scenario_preset, scenario_presets, SweepAxis, SweepSpec};

/// Output table formats. CSV is always written; JSON is opt-in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    fn parse(name: &str) -> Option<Self> {
        match name {
            "csv" => Some(OutputFormat::Csv),
            "json" => Some(OutputFormat::Json),
            _ => None,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// Parses and normalizes a format list: names must be `csv` or `json`,
/// duplicates collapse, and CSV is always included.
pub fn parse_formats(names: &[String]) -> Result<Vec<OutputFormat>> {
    let mut formats = vec![OutputFormat::Csv];
    for name in names {
        let format = OutputFormat::parse(name).ok_or_else(|| {
            config_err(
                "output.formats",
                format!("unknown format '{name}' (expected csv or json)"),
            )
        })?;
        if !formats.contains(&format) {
            formats.push(format);
        }
    }
    Ok(formats)
}

/// Where and how result tables are written.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputConfig {
    pub dir: PathBuf,
    /// File stem for `<basename>.csv` / `.json` / `.svg`.
    pub basename: String,
    pub formats: Vec<OutputFormat>,
    pub svg: bool,
}

/// A fully validated run: scene, allocations, sweep, and output plan.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub scene: Scene,
    pub allocations: Vec<Allocation>,
    pub sweep: SweepSpec,
    pub output: OutputConfig,
    pub parallelism: Parallelism,
}

// ---------------------------------------------------------------------------
// Raw (serde) layer
// ---------------------------------------------------------------------------

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    scene: Option<RawScene>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    allocations: Option<Vec<RawAllocation>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sweep: Option<RawSweep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<RawOutput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parallel: Option<bool>,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    room: Option<RawRoom>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cf_height: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    spacing: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    aps: Option<Vec<[f64; 3]>>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawRoom {
    width_x: f64,
    length_y: f64,
    height_z: f64,
}

/// An allocation entry: either a preset name or `{label?, aps}`.
#[derive(Debug, Serialize)]
#[serde(untagged)]
enum RawAllocation {
    Preset(String),
    Explicit {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
        aps: Vec<usize>,
    },
}

// Hand-rolled so that malformed entries get a precise message instead of
// serde's generic "did not match any variant".
impl<'de> Deserialize<'de> for RawAllocation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        match value {
            serde_json::Value::String(name) => Ok(RawAllocation::Preset(name)),
            serde_json::Value::Object(map) => {
                let mut label = None;
                let mut aps = None;
                for (key, v) in map {
                    match key.as_str() {
                        "label" => {
                            label = Some(
                                v.as_str()
                                    .ok_or_else(|| {
                                        D::Error::custom("allocation label must be a string")
                                    })?
                                    .to_string(),
                            );
                        }
                        "aps" => {
                            let list = v.as_array().ok_or_else(|| {
                                D::Error::custom("allocation 'aps' must be an array of AP indices")
                            })?;
                            let mut indices = Vec::with_capacity(list.len());
                            for item in list {
                                let idx = item.as_u64().ok_or_else(|| {
                                    D::Error::custom(format!(
                                        "AP indices must be positive integers, got {item}"
                                    ))
                                })?;
                                indices.push(idx as usize);
                            }
                            aps = Some(indices);
                        }
                        other => {
                            return Err(D::Error::custom(format!(
                                "unknown key '{other}' in allocation object (expected 'label', 'aps')"
                            )));
                        }
                    }
                }
                let aps =
                    aps.ok_or_else(|| D::Error::custom("allocation object is missing 'aps'"))?;
                Ok(RawAllocation::Explicit { label, aps })
            }
            other => Err(D::Error::custom(format!(
                "allocations entries must be preset names or objects, got {other}"
            ))),
        }
    }
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    scenario: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vary: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    start: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    stop: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    step: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    height: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y_offset: Option<f64>,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basename: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    formats: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    svg: Option<bool>,
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// Parses a JSON config document into a validated [`RunConfig`].
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let raw: RawConfig = serde_json::from_str(text)?;
    validate(raw)
}

fn build_scene(raw: Option<RawScene>) -> Result<Scene> {
    let raw = raw.unwrap_or_default();
    let room = match raw.room {
        Some(r) => {
            Room::new(r.width_x, r.length_y, r.height_z).map_err(|e| prefix_key(e, "scene."))?
        }
        None => Room::default(),
    };
    let cf_height = raw.cf_height.unwrap_or(1.0);
    if !cf_height.is_finite() || cf_height <= 0.0 || cf_height >= room.height_z {
        return Err(config_err(
            "scene.cf_height",
            format!(
                "must lie strictly between 0 and the room height ({}), got {cf_height}",
                room.height_z
            ),
        ));
    }
    let spacing = raw.spacing.unwrap_or(0.25);
    let grid = generate_grid(&room, cf_height, spacing).map_err(|e| prefix_key(e, "scene."))?;
    let positions = match raw.aps {
        Some(list) => list
            .into_iter()
            .map(|[x, y, z]| Point3::new(x, y, z))
            .collect(),
        None => crate::scene::DEFAULT_AP_POSITIONS.to_vec(),
    };
    let layout = ApLayout::new(positions, &room).map_err(|e| prefix_key(e, "scene."))?;
    Ok(Scene::new(room, layout, grid))
}

/// Re-keys an `InvalidConfig` error under a parent path, e.g. `spacing` ->
/// `scene.spacing`.
fn prefix_key(err: Error, prefix: &str) -> Error {
    match err {
        Error::InvalidConfig { key, message } => Error::InvalidConfig {
            key: format!("{prefix}{key}"),
            message,
        },
        other => other,
    }
}

fn build_allocations(raw: Option<Vec<RawAllocation>>, scene: &Scene) -> Result<Vec<Allocation>> {
    let entries = raw.unwrap_or_default();
    if entries.is_empty() {
        return Err(config_err("allocations", "no allocations specified"));
    }
    let mut allocations = Vec::with_capacity(entries.len());
    for (i, entry) in entries.into_iter().enumerate() {
        let key = format!("allocations[{i}]");
        let alloc = match entry {
            RawAllocation::Preset(name) => {
                let preset = StrategyPreset::parse(&name).ok_or_else(|| {
                    config_err(&key, format!("unknown allocation preset '{name}'"))
                })?;
                resolve_preset(&preset, &scene.aps)?
            }
            RawAllocation::Explicit { label, aps } => {
                let label = label.unwrap_or_else(|| {
                    aps.iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join("+")
                });
                let alloc = Allocation::new(label, aps)?;
                alloc.validate_against(&scene.aps)?;
                alloc
            }
        };
        let label = alloc.label();
        if label.contains([',', '"', '\n', '\r']) {
            return Err(config_err(
                &format!("{key}.label"),
                format!("label '{label}' must not contain commas, quotes, or newlines"),
            ));
        }
        allocations.push(alloc);
    }
    for i in 1..allocations.len() {
        let label = allocations[i].label();
        if allocations[..i].iter().any(|a| a.label() == label) {
            return Err(config_err(
                "allocations",
                format!("duplicate label '{label}'"),
            ));
        }
    }
    Ok(allocations)
}

/// The sweep plus the basename it implies when the config does not set one.
fn build_sweep(raw: Option<RawSweep>) -> Result<(SweepSpec, String)> {
    let raw = raw.ok_or_else(|| config_err("sweep", "no sweep specified"))?;

    if let Some(name) = &raw.scenario {
        let inline_keys = [
            ("vary", raw.vary.is_some()),
            ("start", raw.start.is_some()),
            ("stop", raw.stop.is_some()),
            ("step", raw.step.is_some()),
            ("radius", raw.radius.is_some()),
            ("height", raw.height.is_some()),
            ("y_offset", raw.y_offset.is_some()),
        ];
        if let Some((key, _)) = inline_keys.iter().find(|(_, present)| *present) {
            return Err(config_err(
                &format!("sweep.{key}"),
                "cannot be combined with 'scenario'",
            ));
        }
        let preset = scenario_preset(name).ok_or_else(|| {
            let names: Vec<&str> = scenario_presets().iter().map(|p| p.name).collect();
            config_err(
                "sweep.scenario",
                format!(
                    "unknown scenario '{name}' (available: {})",
                    names.join(", ")
                ),
            )
        })?;
        return Ok((preset.sweep, preset.name.to_string()));
    }

    let vary = raw.vary.as_deref().ok_or_else(|| {
        config_err(
            "sweep.vary",
            "required (radius, height, or distance) unless 'scenario' is set",
        )
    })?;

    let require = |key: &str, v: Option<f64>| {
        v.ok_or_else(|| {
            config_err(
                &format!("sweep.{key}"),
                format!("required when vary = {vary}"),
            )
        })
    };
    let forbid = |key: &str, v: Option<f64>| match v {
        Some(_) => Err(config_err(
            &format!("sweep.{key}"),
            format!("cannot fix the swept parameter (vary = {vary})"),
        )),
        None => Ok(()),
    };

    let axis = match vary {
        "radius" => {
            forbid("radius", raw.radius)?;
            SweepAxis::Radius {
                height: require("height", raw.height)?,
                y_offset: require("y_offset", raw.y_offset)?,
            }
        }
        "height" => {
            forbid("height", raw.height)?;
            SweepAxis::Height {
                radius: require("radius", raw.radius)?,
                y_offset: require("y_offset", raw.y_offset)?,
            }
        }
        "distance" => {
            forbid("y_offset", raw.y_offset)?;
            SweepAxis::Distance {
                radius: require("radius", raw.radius)?,
                height: require("height", raw.height)?,
            }
        }
        other => {
            return Err(config_err(
                "sweep.vary",
                format!("must be radius, height, or distance, got '{other}'"),
            ));
        }
    };
    let start = require("start", raw.start)?;
    let stop = require("stop", raw.stop)?;
    let step = require("step", raw.step)?;
    let sweep = SweepSpec::new(axis, start, stop, step)?;
    Ok((sweep, format!("sweep-{}", axis.param_name())))
}

fn build_output(raw: Option<RawOutput>, default_basename: String) -> Result<OutputConfig> {
    let raw = raw.unwrap_or_default();
    let basename = raw.basename.unwrap_or(default_basename);
    if basename.is_empty()
        || !basename
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.'))
    {
        return Err(config_err(
            "output.basename",
            format!("'{basename}' must be a plain file stem (alphanumeric, '-', '_', '.')"),
        ));
    }
    let formats = match raw.formats {
        Some(names) => parse_formats(&names)?,
        None => vec![OutputFormat::Csv],
    };
    Ok(OutputConfig {
        dir: PathBuf::from(raw.path.unwrap_or_else(|| ".".to_string())),
        basename,
        formats,
        svg: raw.svg.unwrap_or(false),
    })
}

fn validate(raw: RawConfig) -> Result<RunConfig> {
    let scene = build_scene(raw.scene)?;
    let allocations = build_allocations(raw.allocations, &scene)?;
    let (sweep, default_basename) = build_sweep(raw.sweep)?;
    let output = build_output(raw.output, default_basename)?;
    let parallelism = match raw.parallel.unwrap_or(true) {
        true => Parallelism::Parallel,
        false => Parallelism::Sequential,
    };
    Ok(RunConfig {
        scene,
        allocations,
        sweep,
        output,
        parallelism,
    })
}

// ---------------------------------------------------------------------------
// Canonical serialization
// ---------------------------------------------------------------------------

impl RunConfig {
    /// Serializes the validated config back to JSON. Parsing the result
    /// reproduces `self` exactly — scenario sugar and omitted defaults come
    /// back in expanded form.
    pub fn to_json(&self) -> String {
        let mut json =
            serde_json::to_string_pretty(&self.to_raw()).expect("config serialization is total");
        json.push('\n');
        json
    }

    fn to_raw(&self) -> RawConfig {
        let grid = &self.scene.grid;
        let fixed = self.sweep.axis().fixed();
        let lookup = |key: &str| fixed.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
        RawConfig {
            scene: Some(RawScene {
                room: Some(RawRoom {
                    width_x: self.scene.room.width_x,
                    length_y: self.scene.room.length_y,
                    height_z: self.scene.room.height_z,
                }),
                cf_height: Some(grid.cf_height()),
                spacing: Some(grid.spacing()),
                aps: Some(
                    self.scene
                        .aps
                        .positions()
                        .iter()
                        .map(|p| [p.x, p.y, p.z])
                        .collect(),
                ),
            }),
            allocations: Some(
                self.allocations
                    .iter()
                    .map(|a| RawAllocation::Explicit {
                        label: Some(a.label().to_string()),
                        aps: a.ap_indices().to_vec(),
                    })
                    .collect(),
            ),
            sweep: Some(RawSweep {
                scenario: None,
                vary: Some(self.sweep.axis().param_name().to_string()),
                start: Some(self.sweep.start()),
                stop: Some(self.sweep.stop()),
                step: Some(self.sweep.step()),
                radius: lookup("radius"),
                height: lookup("height"),
                y_offset: lookup("y_offset"),
            }),
            output: Some(RawOutput {
                path: Some(self.output.dir.display().to_string()),
                basename: Some(self.output.basename.clone()),
                formats: Some(
                    self.output
                        .formats
                        .iter()
                        .map(|f| f.name().to_string())
                        .collect(),
                ),
                svg: Some(self.output.svg),
            }),
            parallel: Some(self.parallelism == Parallelism::Parallel),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<RunConfig> {
        parse_config(text)
    }

    fn key_of(err: Error) -> String {
        match err {
            Error::InvalidConfig { key, .. } => key,
            other => panic!("expected InvalidConfig, got {other:?}"),
        }
    }

    #[test]
    fn empty_object_needs_allocations_first() {
        let err = parse("{}").unwrap_err();
        assert_eq!(key_of(err), "allocations");
    }

    #[test]
    fn minimal_scenario_config_parses_with_defaults() {
        let cfg =
            parse(r#"{"allocations": ["all"], "sweep": {"scenario": "close-overhead-radius"}}"#)
                .unwrap();
        assert_eq!(cfg.scene.grid.len(), 512);
        assert_eq!(cfg.allocations.len(), 1);
        assert_eq!(cfg.allocations[0].label(), "all");
        assert_eq!(cfg.sweep.len(), 21);
        assert_eq!(cfg.output.basename, "close-overhead-radius");
        assert_eq!(cfg.output.formats, vec![OutputFormat::Csv]);
        assert_eq!(cfg.output.dir, PathBuf::from("."));
        assert!(!cfg.output.svg);
        assert_eq!(cfg.parallelism, Parallelism::Parallel);
    }

    #[test]
    fn inline_sweep_and_explicit_allocations() {
        let cfg = parse(
            r#"{
                "allocations": ["single(2)", {"aps": [2, 7]}, {"label": "west", "aps": [1, 2, 3, 4]}],
                "sweep": {"vary": "distance", "start": 0.0, "stop": 2.0, "step": 0.1,
                          "radius": 0.2, "height": 0.1},
                "output": {"path": "results", "formats": ["csv", "json"], "svg": true},
                "parallel": false
            }"#,
        )
        .unwrap();
        assert_eq!(cfg.allocations[1].label(), "2+7");
        assert_eq!(cfg.allocations[2].label(), "west");
        assert_eq!(cfg.sweep.axis().param_name(), "distance");
        assert_eq!(cfg.output.basename, "sweep-distance");
        assert_eq!(
            cfg.output.formats,
            vec![OutputFormat::Csv, OutputFormat::Json]
        );
        assert!(cfg.output.svg);
        assert_eq!(cfg.parallelism, Parallelism::Sequential);
    }

    #[test]
    fn unknown_keys_are_rejected_at_every_level() {
        assert!(parse(r#"{"bogus": 1}"#).is_err());
        assert!(parse(r#"{"allocations": ["all"], "sweep": {"scenario": "height-sweep"}, "scene": {"nope": 2}}"#).is_err());
        assert!(parse(
            r#"{"allocations": ["all"], "sweep": {"scenario": "height-sweep", "zig": 1}}"#
        )
        .is_err());
        assert!(parse(r#"{"allocations": ["all"], "sweep": {"scenario": "height-sweep"}, "output": {"zag": 1}}"#).is_err());
        let err = parse(r#"{"allocations": [{"aps": [1], "extra": true}], "sweep": {"scenario": "height-sweep"}}"#)
            .unwrap_err();
        assert!(err.to_string().contains("unknown key 'extra'"), "{err}");
    }

    #[test]
    fn sweep_validation_points_at_the_key() {
        let text = r#"{"allocations": ["all"], "sweep": {"vary": "radius", "start": 1.0, "stop": 0.5, "step": 0.1, "height": 0.1, "y_offset": 0.0}}"#;
        assert_eq!(key_of(parse(text).unwrap_err()), "sweep.stop");

        let text = r#"{"allocations": ["all"], "sweep": {"vary": "radius", "start": 0.0, "stop": 1.0, "step": 0.1, "height": 0.1, "y_offset": -0.5}}"#;
        assert_eq!(key_of(parse(text).unwrap_err()), "sweep.y_offset");

        let text = r#"{"allocations": ["all"], "sweep": {"vary": "radius", "start": 0.0, "stop": 1.0, "step": 0.1, "radius": 0.2, "height": 0.1, "y_offset": 0.0}}"#;
        assert_eq!(key_of(parse(text).unwrap_err()), "sweep.radius");

        let text = r#"{"allocations": ["all"], "sweep": {"vary": "radius", "start": 0.0, "stop": 1.0, "step": 0.1, "height": 0.1}}"#;
        assert_eq!(key_of(parse(text).unwrap_err()), "sweep.y_offset");

        let text = r#"{"allocations": ["all"], "sweep": {"vary": "tilt", "start": 0.0, "stop": 1.0, "step": 0.1}}"#;
        assert_eq!(key_of(parse(text).unwrap_err()), "sweep.vary");

        let text =
            r#"{"allocations": ["all"], "sweep": {"scenario": "height-sweep", "step": 0.1}}"#;
        assert_eq!(key_of(parse(text).unwrap_err()), "sweep.step");

        let text = r#"{"allocations": ["all"]}"#;
        assert_eq!(key_of(parse(text).unwrap_err()), "sweep");

        let text = r#"{"allocations": ["all"], "sweep": {"scenario": "warp"}}"#;
        assert_eq!(key_of(parse(text).unwrap_err()), "sweep.scenario");
    }

    #[test]
    fn scene_validation_points_at_the_key() {
        let text = r#"{"scene": {"spacing": 0.3}, "allocations": ["all"], "sweep": {"scenario": "height-sweep"}}"#;
        assert_eq!(key_of(parse(text).unwrap_err()), "scene.width_x");

        let text = r#"{"scene": {"cf_height": 3.5}, "allocations": ["all"], "sweep": {"scenario": "height-sweep"}}"#;
        assert_eq!(key_of(parse(text).unwrap_err()), "scene.cf_height");

        let text = r#"{"scene": {"room": {"width_x": 0, "length_y": 8, "height_z": 3}}, "allocations": ["all"], "sweep": {"scenario": "height-sweep"}}"#;
        assert_eq!(key_of(parse(text).unwrap_err()), "scene.room.width_x");
    }

    #[test]
    fn presets_on_custom_layouts_are_unsupported() {
        let text = r#"{
            "scene": {"aps": [[1,1,3],[3,7,3]]},
            "allocations": ["max_separated_pair"],
            "sweep": {"scenario": "height-sweep"}
        }"#;
        let err = parse(text).unwrap_err();
        assert!(matches!(err, Error::UnsupportedPreset(_)), "got {err:?}");

        // Explicit indices still work on custom layouts.
        let text = r#"{
            "scene": {"aps": [[1,1,3],[3,7,3]]},
            "allocations": [{"aps": [1, 2]}],
            "sweep": {"scenario": "height-sweep"}
        }"#;
        assert!(parse(text).is_ok());
    }

    #[test]
    fn allocation_mistakes_are_named() {
        let err = parse(r#"{"allocations": ["warp"], "sweep": {"scenario": "height-sweep"}}"#)
            .unwrap_err();
        assert!(err.to_string().contains("unknown allocation preset 'warp'"));

        let err =
            parse(r#"{"allocations": [{"aps": [1, 9]}], "sweep": {"scenario": "height-sweep"}}"#)
                .unwrap_err();
        assert!(matches!(err, Error::InvalidAllocation(_)), "got {err:?}");

        let err = parse(r#"{"allocations": [{"aps": []}], "sweep": {"scenario": "height-sweep"}}"#)
            .unwrap_err();
        assert!(matches!(err, Error::InvalidAllocation(_)), "got {err:?}");

        let err = parse(
            r#"{"allocations": ["all", {"label": "all", "aps": [1]}], "sweep": {"scenario": "height-sweep"}}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("duplicate label 'all'"));

        let err = parse(
            r#"{"allocations": [{"label": "a,b", "aps": [1]}], "sweep": {"scenario": "height-sweep"}}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("must not contain commas"));
    }

    #[test]
    fn output_validation() {
        let err = parse(
            r#"{"allocations": ["all"], "sweep": {"scenario": "height-sweep"}, "output": {"formats": ["xml"]}}"#,
        )
        .unwrap_err();
        assert_eq!(key_of(err), "output.formats");

        let err = parse(
            r#"{"allocations": ["all"], "sweep": {"scenario": "height-sweep"}, "output": {"basename": "a/b"}}"#,
        )
        .unwrap_err();
        assert_eq!(key_of(err), "output.basename");

        // CSV is always included, json deduped.
        let cfg = parse(
            r#"{"allocations": ["all"], "sweep": {"scenario": "height-sweep"}, "output": {"formats": ["json", "json"]}}"#,
        )
        .unwrap();
        assert_eq!(
            cfg.output.formats,
            vec![OutputFormat::Csv, OutputFormat::Json]
        );
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        let err = parse("{not json").unwrap_err();
        assert!(matches!(err, Error::Parse(_)), "got {err:?}");
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn round_trip_reproduces_the_config() {
        let text = r#"{
            "scene": {"room": {"width_x": 4.0, "length_y": 8.0, "height_z": 3.0}, "spacing": 0.5},
            "allocations": ["single(1)", "max_separated_pair", {"label": "west", "aps": [1, 2]}],
            "sweep": {"vary": "height", "start": 0.0, "stop": 2.0, "step": 0.25,
                      "radius": 0.3, "y_offset": 0.1},
            "output": {"path": "out/tables", "formats": ["csv", "json"], "svg": true},
            "parallel": false
        }"#;
        let cfg = parse(text).unwrap();
        let reparsed = parse(&cfg.to_json()).unwrap();
        assert_eq!(cfg, reparsed);

        // Scenario sugar expands but still round-trips.
        let cfg =
            parse(r#"{"allocations": ["all"], "sweep": {"scenario": "distance-sweep"}}"#).unwrap();
        let reparsed = parse(&cfg.to_json()).unwrap();
        assert_eq!(cfg, reparsed);
    }
}
