//! Meaningfulness scoring of concepts from their concentration in
//! paragraphs, and the feature-selection strategy built on it.
//!
//! A concept occurring m times in a paragraph and k times in the document
//! has a number of false alarms C(k, m) / N^(m-1), where N is the ratio of
//! document to paragraph concept mass. Its meaning is the per-occurrence
//! negative log of that quantity; concentrated concepts score high.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::concepts::ConceptAnnotations;
use crate::error::{Error, Result};
use crate::features::{singleton_features, FeatureParams, FeatureSet, Strategy};

/// Natural log of the binomial coefficient C(k, m) via log-gamma.
fn ln_binomial(k: usize, m: usize) -> f64 {
    ln_gamma(k as f64 + 1.0) - ln_gamma(m as f64 + 1.0) - ln_gamma((k - m) as f64 + 1.0)
}

/// Natural log of the number of false alarms:
/// `ln C(k, m) - (m - 1) ln N`.
///
/// `k` is the concept's occurrence count in the document, `m` its count in
/// the paragraph, `n` the document-to-paragraph mass ratio.
pub fn ln_nfa(k: usize, m: usize, n: usize) -> Result<f64> {
    if m == 0 || m > k {
        return Err(Error::Domain(format!(
            "ln_nfa requires 1 <= m <= k, got k={k}, m={m}"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("ln_nfa requires N >= 1".to_string()));
    }
    Ok(ln_binomial(k, m) - (m as f64 - 1.0) * (n as f64).ln())
}

/// Meaningfulness value: `-(1/m) ln NFA`, natural log.
pub fn meaning(k: usize, m: usize, n: usize) -> Result<f64> {
    Ok(-ln_nfa(k, m, n)? / m as f64)
}

/// Meaning values of one concept across paragraphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConceptMeaning {
    /// Paragraph index to meaning value, for paragraphs where the concept
    /// occurs.
    pub per_paragraph: BTreeMap<usize, f64>,
    /// Maximum over all paragraphs.
    pub doc_meaning: f64,
}

/// Per-concept meaning values over a candidate pool.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MeaningReport {
    pub concepts: BTreeMap<String, ConceptMeaning>,
}

/// Compute meaning values for every concept of the pool. The pool should
/// already be generic-filtered; its total occurrence mass defines L and the
/// per-paragraph masses define B.
pub fn meaning_report(pool: &ConceptAnnotations) -> Result<MeaningReport> {
    let total = pool.total_occurrences();
    if total == 0 {
        return Ok(MeaningReport::default());
    }
    let paragraph_totals = pool.paragraph_occurrence_totals();
    let mut concepts = BTreeMap::new();
    for (concept_id, stats) in pool.stats() {
        let mut per_paragraph = BTreeMap::new();
        let mut doc_meaning = f64::NEG_INFINITY;
        for (&paragraph, &m) in &stats.per_paragraph_counts {
            let mass = paragraph_totals[paragraph];
            debug_assert!(mass > 0, "concept occurs in a paragraph with zero mass");
            let n = total / mass;
            let value = meaning(stats.occurrence_count, m, n)?;
            doc_meaning = doc_meaning.max(value);
            per_paragraph.insert(paragraph, value);
        }
        concepts.insert(
            concept_id.clone(),
            ConceptMeaning {
                per_paragraph,
                doc_meaning,
            },
        );
    }
    Ok(MeaningReport { concepts })
}

/// Strategy 4: keep concepts whose document meaning exceeds `epsilon`
/// (strictly). Feature frequency stays the concept's sentence count.
pub fn meaningful_features(pool: &ConceptAnnotations, epsilon: f64) -> Result<FeatureSet> {
    let report = meaning_report(pool)?;
    let rows = report
        .concepts
        .iter()
        .filter(|(_, m)| m.doc_meaning > epsilon)
        .map(|(id, m)| {
            let freq = pool.concept_stats(id).map(|s| s.sentence_count).unwrap_or(0);
            (id.clone(), freq, Some(m.doc_meaning))
        })
        .collect();
    Ok(singleton_features(
        rows,
        Strategy::Helmholtz,
        FeatureParams {
            epsilon: Some(epsilon),
            ..FeatureParams::default()
        },
    ))
}
