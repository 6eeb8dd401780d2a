//! Command-line front end: config loading, sweep execution, and file output.

pub mod config;
pub mod output;

use std::fs;
use std::path::PathBuf;

use crate::allocation::{resolve_preset, StrategyPreset};
use crate::error::Result;
use crate::scene::{ApLayout, Scene};
use crate::sweep::{run_sweep, scenario_presets, SweepResult};

pub use config::{parse_config, parse_formats, OutputConfig, OutputFormat, RunConfig};

/// What a run produced: the result table, the files written, and one summary
/// line per allocation.
#[derive(Debug)]
pub struct ExecOutcome {
    pub result: SweepResult,
    pub files: Vec<PathBuf>,
}

impl ExecOutcome {
    /// One line per allocation: label plus its min/max blockage across the
    /// sweep.
    pub fn summary_lines(&self) -> Vec<String> {
        self.result
            .allocation_labels
            .iter()
            .enumerate()
            .map(|(i, label)| {
                let mut min = f64::INFINITY;
                let mut max = f64::NEG_INFINITY;
                for row in &self.result.rows {
                    let v = row.cells[i].value();
                    min = min.min(v);
                    max = max.max(v);
                }
                format!("{label}: min {min:.4}% max {max:.4}%")
            })
            .collect()
    }
}

/// Runs the sweep described by `cfg` and writes the requested files.
/// Returns the in-memory result alongside the paths written.
pub fn execute(cfg: &RunConfig) -> Result<ExecOutcome> {
    let result = run_sweep(&cfg.scene, &cfg.allocations, &cfg.sweep, cfg.parallelism)?;
    fs::create_dir_all(&cfg.output.dir)?;
    let mut files = Vec::new();
    // join() rather than set_extension: basenames may contain dots.
    for format in &cfg.output.formats {
        let (ext, body) = match format {
            OutputFormat::Csv => ("csv", output::csv_string(&result)),
            OutputFormat::Json => ("json", output::json_string(&result)),
        };
        let path = cfg
            .output
            .dir
            .join(format!("{}.{ext}", cfg.output.basename));
        fs::write(&path, body)?;
        files.push(path);
    }
    if cfg.output.svg {
        let path = cfg.output.dir.join(format!("{}.svg", cfg.output.basename));
        fs::write(&path, output::svg_string(&result)?)?;
        files.push(path);
    }
    Ok(ExecOutcome { result, files })
}

/// Human-readable list of the built-in sweep scenarios and allocation
/// presets (the latter resolved to their AP index sets on the default
/// layout).
pub fn presets_text() -> String {
    let mut out = String::from("Built-in sweep scenarios:\n");
    for preset in scenario_presets() {
        let sweep = &preset.sweep;
        let axis = sweep.axis();
        let fixed = axis.fixed();
        out.push_str(&format!(
            "  {:<24} vary {} from {} to {} step {} ({} fixed at {}, {} at {})\n",
            preset.name,
            axis.param_name(),
            sweep.start(),
            sweep.stop(),
            sweep.step(),
            fixed[0].0,
            fixed[0].1,
            fixed[1].0,
            fixed[1].1,
        ));
    }
    out.push_str("\nAllocation presets (AP indices on the default layout):\n");
    let layout = ApLayout::default_eight();
    for preset in StrategyPreset::enumerate_default() {
        let alloc = resolve_preset(&preset, &layout).expect("default presets resolve");
        let indices: Vec<String> = alloc.ap_indices().iter().map(usize::to_string).collect();
        out.push_str(&format!(
            "  {:<24} {{{}}}\n",
            preset.name(),
            indices.join(", "),
        ));
    }
    out
}

/// Receiver grid as CSV (`x,y,z` header, six decimals), in grid order.
pub fn grid_csv(scene: &Scene) -> String {
    let mut out = String::from("x,y,z\n");
    for p in scene.grid.points() {
        out.push_str(&format!("{:.6},{:.6},{:.6}\n", p.x, p.y, p.z));
    }
    out
}
