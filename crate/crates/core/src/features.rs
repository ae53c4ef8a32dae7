//! Classification features and the frequency-based selection strategies.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::concepts::{ConceptAnnotations, ConceptOccurrence};
use crate::error::{Error, Result};

/// Feature-selection strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Every distinct concept becomes a feature.
    All,
    /// Drop concepts whose semantic type is generic.
    GenericFiltered,
    /// Keep concepts whose sentence frequency reaches a threshold.
    FreqThreshold,
    /// Keep concepts whose meaningfulness exceeds a level.
    Helmholtz,
    /// Frequent itemsets of correlated concepts become features.
    Itemset,
}

impl Strategy {
    pub fn as_str(&self) -> &'static str {
        match self {
            Strategy::All => "all",
            Strategy::GenericFiltered => "generic",
            Strategy::FreqThreshold => "freq_threshold",
            Strategy::Helmholtz => "helmholtz",
            Strategy::Itemset => "itemset",
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Strategy::All),
            "generic" => Ok(Strategy::GenericFiltered),
            "freq_threshold" => Ok(Strategy::FreqThreshold),
            "helmholtz" => Ok(Strategy::Helmholtz),
            "itemset" => Ok(Strategy::Itemset),
            other => Err(Error::Parameter {
                name: "strategy",
                message: format!(
                    "unknown strategy {other:?} (expected all|generic|freq_threshold|helmholtz|itemset)"
                ),
            }),
        }
    }
}

/// The three frequency thresholds: mean, mean plus one standard deviation,
/// mean plus two standard deviations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdKind {
    Theta1,
    Theta2,
    Theta3,
}

impl ThresholdKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ThresholdKind::Theta1 => "theta1",
            ThresholdKind::Theta2 => "theta2",
            ThresholdKind::Theta3 => "theta3",
        }
    }
}

impl std::str::FromStr for ThresholdKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta1" => Ok(ThresholdKind::Theta1),
            "theta2" => Ok(ThresholdKind::Theta2),
            "theta3" => Ok(ThresholdKind::Theta3),
            other => Err(Error::Parameter {
                name: "threshold_kind",
                message: format!("unknown threshold {other:?} (expected theta1|theta2|theta3)"),
            }),
        }
    }
}

/// One classification feature: a set of one or more concepts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Feature {
    pub id: usize,
    /// Sorted, nonempty concept ids. Singleton for strategies 1-4.
    pub concepts: Vec<String>,
    /// Supporting-sentence count: the concept's sentence count for singleton
    /// features, the itemset's supporting-sentence count otherwise.
    pub freq: usize,
    /// Meaning value (strategy 4) or support fraction (strategy 5).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub score: Option<f64>,
}

/// Parameters that produced a feature set; only the relevant ones are set.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct FeatureParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold_kind: Option<ThresholdKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<f64>,
}

/// The selected classification features, in a stable order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureSet {
    pub strategy: Strategy,
    pub parameters: FeatureParams,
    pub features: Vec<Feature>,
}

impl FeatureSet {
    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }

    pub fn len(&self) -> usize {
        self.features.len()
    }

    /// Concept-id sets of all features, useful for inclusion checks.
    pub fn concept_sets(&self) -> BTreeSet<Vec<String>> {
        self.features.iter().map(|f| f.concepts.clone()).collect()
    }
}

/// Build singleton features sorted by descending frequency, ties by concept
/// id, with ids assigned by position.
pub(crate) fn singleton_features(
    mut rows: Vec<(String, usize, Option<f64>)>,
    strategy: Strategy,
    parameters: FeatureParams,
) -> FeatureSet {
    rows.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let features = rows
        .into_iter()
        .enumerate()
        .map(|(id, (concept, freq, score))| Feature {
            id,
            concepts: vec![concept],
            freq,
            score,
        })
        .collect();
    FeatureSet {
        strategy,
        parameters,
        features,
    }
}

/// Strategy 1: one singleton feature per distinct concept.
pub fn select_all(ann: &ConceptAnnotations) -> FeatureSet {
    let rows = ann
        .stats()
        .iter()
        .map(|(id, s)| (id.clone(), s.sentence_count, None))
        .collect();
    singleton_features(rows, Strategy::All, FeatureParams::default())
}

/// Strategy 2 filter: drop occurrences whose semantic type is in the
/// stoplist and recompute all counts. Semantic types compare
/// case-insensitively.
pub fn filter_generic(ann: &ConceptAnnotations, stoplist: &BTreeSet<String>) -> ConceptAnnotations {
    let kept: Vec<ConceptOccurrence> = ann
        .occurrences
        .iter()
        .filter(|occ| !stoplist.contains(&occ.semantic_type.to_lowercase()))
        .cloned()
        .collect();
    ConceptAnnotations::from_occurrences(kept, ann.sentence_count, ann.paragraph_count)
}

/// Strategy 2 as a feature set: all concepts that survive generic filtering.
pub fn generic_filtered_features(
    ann: &ConceptAnnotations,
    stoplist: &BTreeSet<String>,
) -> FeatureSet {
    let pool = filter_generic(ann, stoplist);
    let rows = pool
        .stats()
        .iter()
        .map(|(id, s)| (id.clone(), s.sentence_count, None))
        .collect();
    singleton_features(rows, Strategy::GenericFiltered, FeatureParams::default())
}

/// Compute a frequency threshold over the candidate pool's frequencies.
/// The standard deviation is the population one (divide by n).
pub fn threshold_value(freqs: &[usize], kind: ThresholdKind) -> Result<f64> {
    if freqs.is_empty() {
        return Err(Error::Parameter {
            name: "freqs",
            message: "cannot compute a threshold over an empty pool".to_string(),
        });
    }
    let n = freqs.len() as f64;
    let mean = freqs.iter().map(|&f| f as f64).sum::<f64>() / n;
    let variance = freqs
        .iter()
        .map(|&f| {
            let diff = f as f64 - mean;
            diff * diff
        })
        .sum::<f64>()
        / n;
    let sd = variance.sqrt();
    Ok(match kind {
        ThresholdKind::Theta1 => mean,
        ThresholdKind::Theta2 => mean + sd,
        ThresholdKind::Theta3 => mean + 2.0 * sd,
    })
}

/// Strategy 3: keep concepts whose sentence frequency is at least the
/// threshold (a frequency below the threshold is removed; equality keeps).
pub fn filter_by_frequency(pool: &ConceptAnnotations, threshold: f64) -> FeatureSet {
    let rows = pool
        .stats()
        .iter()
        .filter(|(_, s)| s.sentence_count as f64 >= threshold)
        .map(|(id, s)| (id.clone(), s.sentence_count, None))
        .collect();
    singleton_features(
        rows,
        Strategy::FreqThreshold,
        FeatureParams {
            threshold: Some(threshold),
            ..FeatureParams::default()
        },
    )
}
