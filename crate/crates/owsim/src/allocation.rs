//! AP allocations: the set of links a user holds at once.
//!
//! An allocation is one serving link plus any number of protection links,
//! stored as 1-based AP indices. Named presets cover the standard single,
//! pair, and quad strategies on the default eight-AP layout; arbitrary sets
//! can be given explicitly. `max_separation_subset` picks the most spread
//! out k-subset of APs by exhaustive search.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::scene::ApLayout;

/// An ordered, duplicate-free set of 1-based AP indices, with a short label
/// used as the column name in output tables.
#[derive(Debug, Clone, PartialEq)]
pub struct Allocation {
    label: String,
    ap_indices: Vec<usize>,
}

impl Allocation {
    /// Errors when the set is empty, contains index 0, or repeats an index.
    pub fn new(label: impl Into<String>, ap_indices: Vec<usize>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::InvalidAllocation(
                "allocation label must not be empty".into(),
            ));
        }
        if ap_indices.is_empty() {
            return Err(Error::InvalidAllocation(format!(
                "allocation '{label}' must list at least one AP"
            )));
        }
        let mut seen = ap_indices.clone();
        seen.sort_unstable();
        for pair in seen.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidAllocation(format!(
                    "allocation '{label}' repeats AP index {}",
                    pair[0]
                )));
            }
        }
        if ap_indices.contains(&0) {
            return Err(Error::InvalidAllocation(format!(
                "allocation '{label}' uses index 0; AP indices are 1-based"
            )));
        }
        Ok(Self { label, ap_indices })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ap_indices(&self) -> &[usize] {
        &self.ap_indices
    }

    pub fn len(&self) -> usize {
        self.ap_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ap_indices.is_empty()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Errors unless every index exists in `layout`.
    pub fn validate_against(&self, layout: &ApLayout) -> Result<()> {
        for &index in &self.ap_indices {
            if layout.position(index).is_none() {
                return Err(Error::InvalidAllocation(format!(
                    "allocation '{}' references AP {index}, but the scene has {} APs",
                    self.label,
                    layout.len()
                )));
            }
        }
        Ok(())
    }
}

/// Named allocation strategies, defined on the default eight-AP layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyPreset {
    /// One serving link, no protection.
    Single(usize),
    /// Two APs on the same side, next to each other.
    AdjacentPair,
    /// The most separated pair (opposite corners).
    MaxSeparatedPair,
    /// One mid-room AP plus one near the opposite corner.
    MiddlePlusCorner,
    /// All four APs along one side.
    QuadOneSide,
    /// The four APs nearest the room center.
    QuadCentre,
    /// Two center APs plus two opposite corners.
    QuadCentreCorner,
    /// Every AP in the layout.
    All,
}

impl StrategyPreset {
    /// Parses a preset name as written in config files, e.g. `single(3)` or
    /// `max_separated_pair`.
    pub fn parse(name: &str) -> Option<Self> {
        if let Some(rest) = name.strip_prefix("single(") {
            let idx: usize = rest.strip_suffix(')')?.parse().ok()?;
            return Some(StrategyPreset::Single(idx));
        }
        match name {
            "adjacent_pair" => Some(StrategyPreset::AdjacentPair),
            "max_separated_pair" => Some(StrategyPreset::MaxSeparatedPair),
            "middle_plus_corner" => Some(StrategyPreset::MiddlePlusCorner),
            "quad_one_side" => Some(StrategyPreset::QuadOneSide),
            "quad_centre" => Some(StrategyPreset::QuadCentre),
            "quad_centre_corner" => Some(StrategyPreset::QuadCentreCorner),
            "all" => Some(StrategyPreset::All),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            StrategyPreset::Single(i) => format!("single({i})"),
            StrategyPreset::AdjacentPair => "adjacent_pair".into(),
            StrategyPreset::MaxSeparatedPair => "max_separated_pair".into(),
            StrategyPreset::MiddlePlusCorner => "middle_plus_corner".into(),
            StrategyPreset::QuadOneSide => "quad_one_side".into(),
            StrategyPreset::QuadCentre => "quad_centre".into(),
            StrategyPreset::QuadCentreCorner => "quad_centre_corner".into(),
            StrategyPreset::All => "all".into(),
        }
    }

    /// Every preset that resolves on the default layout: the eight singles
    /// followed by the named multi-link strategies.
    pub fn enumerate_default() -> Vec<StrategyPreset> {
        let mut presets: Vec<StrategyPreset> = (1..=8).map(StrategyPreset::Single).collect();
        presets.extend([
            StrategyPreset::AdjacentPair,
            StrategyPreset::MaxSeparatedPair,
            StrategyPreset::MiddlePlusCorner,
            StrategyPreset::QuadOneSide,
            StrategyPreset::QuadCentre,
            StrategyPreset::QuadCentreCorner,
            StrategyPreset::All,
        ]);
        presets
    }
}

/// Resolves a preset to a concrete allocation. Presets are defined only for
/// the default eight-AP layout; any other layout is rejected.
pub fn resolve_preset(preset: &StrategyPreset, layout: &ApLayout) -> Result<Allocation> {
    if !layout.is_default() {
        return Err(Error::UnsupportedPreset(format!(
            "'{}' is defined only for the default eight-AP layout",
            preset.name()
        )));
    }
    let name = preset.name();
    let indices = match preset {
        StrategyPreset::Single(i) => {
            if !(1..=8).contains(i) {
                return Err(Error::UnsupportedPreset(format!(
                    "'{name}': AP index must be between 1 and 8"
                )));
            }
            vec![*i]
        }
        StrategyPreset::AdjacentPair => vec![1, 2],
        StrategyPreset::MaxSeparatedPair => {
            return Ok(max_separation_subset(2, layout)?.with_label(name));
        }
        StrategyPreset::MiddlePlusCorner => vec![3, 5],
        StrategyPreset::QuadOneSide => vec![1, 2, 3, 4],
        StrategyPreset::QuadCentre => vec![2, 3, 6, 7],
        StrategyPreset::QuadCentreCorner => vec![1, 4, 6, 7],
        StrategyPreset::All => (1..=8).collect(),
    };
    Allocation::new(name, indices)
}

/// Minimum and total pairwise horizontal distance within a candidate
/// subset. Distances are sorted before summing so that subsets with equal
/// distance multisets compare exactly equal.
fn separation_stats(indices: &[usize], layout: &ApLayout) -> (f64, f64) {
    if indices.len() < 2 {
        return (f64::INFINITY, 0.0);
    }
    let mut dists = Vec::with_capacity(indices.len() * (indices.len() - 1) / 2);
    for (i, &a) in indices.iter().enumerate() {
        for &b in &indices[i + 1..] {
            let pa = layout.position(a).expect("validated index");
            let pb = layout.position(b).expect("validated index");
            dists.push(pa.xy_distance(&pb));
        }
    }
    dists.sort_by(|a, b| a.partial_cmp(b).unwrap());
    (dists[0], dists.iter().sum())
}

/// Picks the `k`-subset of APs that maximizes the minimum pairwise
/// horizontal distance, by exhaustive enumeration of all C(N, k) subsets.
///
/// Ties prefer the larger total pairwise distance, then the
/// lexicographically smallest index list. The result is deterministic for a
/// given layout.
pub fn max_separation_subset(k: usize, layout: &ApLayout) -> Result<Allocation> {
    let n = layout.len();
    if k == 0 || k > n {
        return Err(Error::InvalidInput(format!(
            "subset size must be between 1 and {n}, got {k}"
        )));
    }
    let mut best: Option<(f64, f64, Vec<usize>)> = None;
    // Combinations come out in lexicographic order, so on exact ties the
    // first candidate seen is the lexicographically smallest.
    for combo in (1..=n).combinations(k) {
        let (min_d, sum_d) = separation_stats(&combo, layout);
        let better = match &best {
            None => true,
            Some((best_min, best_sum, _)) => {
                min_d > *best_min || (min_d == *best_min && sum_d > *best_sum)
            }
        };
        if better {
            best = Some((min_d, sum_d, combo));
        }
    }
    let (_, _, indices) = best.expect("k >= 1 guarantees at least one subset");
    Allocation::new(format!("max_sep({k})"), indices)
}
