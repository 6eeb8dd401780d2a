//! Renders a sweep result as CSV, JSON, or a standalone SVG chart.
//!
//! All three renderers are pure string builders so they can be compared
//! byte-for-byte in tests. CSV and JSON always end with a trailing newline
//! and use `\n` endings regardless of platform.

use serde::Serialize;

use crate::error::{config_err, Result};
use crate::sweep::SweepResult;

/// CSV table: header `param,<label>,...`, one row per swept value.
/// The first column is always called `param` (the swept quantity is named
/// in the JSON/SVG outputs); values print with six decimals, percentages
/// with four.
pub fn csv_string(result: &SweepResult) -> String {
    let mut out = String::new();
    out.push_str("param");
    for label in &result.allocation_labels {
        out.push(',');
        out.push_str(label);
    }
    out.push('\n');
    for row in &result.rows {
        out.push_str(&format!("{:.6}", row.param_value));
        for cell in &row.cells {
            out.push_str(&format!(",{:.4}", cell.value()));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    param_name: &'a str,
    allocation_labels: &'a [String],
    rows: Vec<JsonRow>,
}

#[derive(Serialize)]
struct JsonRow {
    param_value: f64,
    percentages: Vec<f64>,
}

/// JSON document mirroring the CSV, with percentages as raw numbers.
pub fn json_string(result: &SweepResult) -> String {
    let doc = JsonDoc {
        param_name: &result.param_name,
        allocation_labels: &result.allocation_labels,
        rows: result
            .rows
            .iter()
            .map(|row| JsonRow {
                param_value: row.param_value,
                percentages: row.cells.iter().map(|c| c.value()).collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("result serialization is total");
    out.push('\n');
    out
}

const SVG_WIDTH: f64 = 800.0;
const SVG_HEIGHT: f64 = 520.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 170.0; // legend column
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 56.0;

/// Series colors, reused cyclically past eight allocations.
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Line chart of percentage blockage (fixed 0–100 y-axis) against the swept
/// parameter, one polyline per allocation. Pure geometry — no scripts, no
/// external references — so the file is self-contained and deterministic.
pub fn svg_string(result: &SweepResult) -> Result<String> {
    if result.rows.is_empty() {
        return Err(config_err("sweep", "cannot plot an empty sweep"));
    }
    let plot_w = SVG_WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = SVG_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let x_min = result.rows.first().expect("nonempty").param_value;
    let x_max = result.rows.last().expect("nonempty").param_value;
    let x_span = x_max - x_min;
    let x_of = |v: f64| {
        if x_span == 0.0 {
            // Single-point sweep: park the point mid-plot.
            MARGIN_LEFT + plot_w / 2.0
        } else {
            MARGIN_LEFT + (v - x_min) / x_span * plot_w
        }
    };
    let y_of = |pct: f64| MARGIN_TOP + (100.0 - pct) / 100.0 * plot_h;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SVG_WIDTH}\" height=\"{SVG_HEIGHT}\" \
         viewBox=\"0 0 {SVG_WIDTH} {SVG_HEIGHT}\" font-family=\"sans-serif\" font-size=\"13\">\n"
    ));
    svg.push_str(&format!(
        "  <rect width=\"{SVG_WIDTH}\" height=\"{SVG_HEIGHT}\" fill=\"white\"/>\n"
    ));

    // Horizontal gridlines with y-axis labels every 25%.
    for pct in [0.0, 25.0, 50.0, 75.0, 100.0] {
        let y = y_of(pct);
        svg.push_str(&format!(
            "  <line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"#dddddd\"/>\n",
            MARGIN_LEFT,
            MARGIN_LEFT + plot_w,
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{pct:.0}</text>\n",
            MARGIN_LEFT - 8.0,
            y + 4.0,
        ));
    }

    // Axes drawn as <line> elements so each <polyline> is a data series.
    svg.push_str(&format!(
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        MARGIN_LEFT,
        MARGIN_TOP,
        MARGIN_LEFT,
        MARGIN_TOP + plot_h,
    ));
    svg.push_str(&format!(
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        MARGIN_LEFT,
        MARGIN_TOP + plot_h,
        MARGIN_LEFT + plot_w,
        MARGIN_TOP + plot_h,
    ));

    // X tick labels: first, middle, last swept value.
    let mut tick_indices = vec![0];
    if result.rows.len() > 2 {
        tick_indices.push(result.rows.len() / 2);
    }
    if result.rows.len() > 1 {
        tick_indices.push(result.rows.len() - 1);
    }
    for &i in &tick_indices {
        let v = result.rows[i].param_value;
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{v:.2}</text>\n",
            x_of(v),
            MARGIN_TOP + plot_h + 20.0,
        ));
    }

    // Axis titles.
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        SVG_HEIGHT - 12.0,
        xml_escape(&result.param_name),
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.2})\">blockage (%)</text>\n",
        18.0,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
    ));

    // One polyline + point markers per allocation, colors cycling.
    for (series, label) in result.allocation_labels.iter().enumerate() {
        let color = PALETTE[series % PALETTE.len()];
        let points: Vec<String> = result
            .rows
            .iter()
            .map(|row| {
                format!(
                    "{:.2},{:.2}",
                    x_of(row.param_value),
                    y_of(row.cells[series].value())
                )
            })
            .collect();
        svg.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            points.join(" "),
        ));
        for row in &result.rows {
            svg.push_str(&format!(
                "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{color}\"/>\n",
                x_of(row.param_value),
                y_of(row.cells[series].value()),
            ));
        }
        // Legend swatch + label.
        let legend_x = MARGIN_LEFT + plot_w + 16.0;
        let legend_y = MARGIN_TOP + 10.0 + series as f64 * 20.0;
        svg.push_str(&format!(
            "  <rect x=\"{legend_x:.2}\" y=\"{:.2}\" width=\"12\" height=\"12\" fill=\"{color}\"/>\n",
            legend_y - 10.0,
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{legend_y:.2}\">{}</text>\n",
            legend_x + 18.0,
            xml_escape(label),
        ));
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
