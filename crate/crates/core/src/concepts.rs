//! Concept extraction and per-concept frequency statistics.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::document::{Document, Sentence};
use crate::lexicon::Lexicon;

/// One concept mention in one sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptOccurrence {
    pub sentence_index: usize,
    pub paragraph_index: usize,
    pub concept_id: String,
    pub semantic_type: String,
    /// Half-open `(start, end)` range into the sentence's tokens.
    pub token_span: (usize, usize),
}

/// Aggregated counts for one concept.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptStats {
    /// Number of distinct sentences containing the concept. This is the
    /// "frequency" used for feature selection and the classifier coefficients.
    pub sentence_count: usize,
    /// Total mentions, counting repeats within a sentence.
    pub occurrence_count: usize,
    pub per_paragraph_counts: BTreeMap<usize, usize>,
}

/// All concept occurrences of a document plus derived statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptAnnotations {
    pub occurrences: Vec<ConceptOccurrence>,
    /// Number of sentences in the annotated sequence (not just those with
    /// occurrences).
    pub sentence_count: usize,
    pub paragraph_count: usize,
    stats: BTreeMap<String, ConceptStats>,
}

/// A row of the frequency table, ordered by descending sentence count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrequencyRow {
    pub concept_id: String,
    pub sentence_count: usize,
    pub occurrence_count: usize,
}

/// Anything that can turn a document into concept annotations. The built-in
/// implementation is [`LexiconMatcher`]; external annotators can plug in
/// behind the same interface.
pub trait ConceptExtractor {
    fn extract(&self, doc: &Document) -> ConceptAnnotations;
}

/// Greedy longest-match annotator over a [`Lexicon`].
pub struct LexiconMatcher<'a> {
    lexicon: &'a Lexicon,
}

impl<'a> LexiconMatcher<'a> {
    pub fn new(lexicon: &'a Lexicon) -> Self {
        LexiconMatcher { lexicon }
    }

    fn annotate_sentence(
        &self,
        sentence: &Sentence,
        paragraph_index: usize,
        out: &mut Vec<ConceptOccurrence>,
    ) {
        let tokens = &sentence.tokens;
        let max_len = self.lexicon.max_phrase_tokens();
        let mut pos = 0;
        while pos < tokens.len() {
            let mut advanced = false;
            let longest = max_len.min(tokens.len() - pos);
            // Longest match wins; matched tokens are consumed.
            for len in (1..=longest).rev() {
                if let Some(entries) = self.lexicon.concepts_for(&tokens[pos..pos + len]) {
                    for entry in entries {
                        out.push(ConceptOccurrence {
                            sentence_index: sentence.index,
                            paragraph_index,
                            concept_id: entry.concept_id.clone(),
                            semantic_type: entry.semantic_type.clone(),
                            token_span: (pos, pos + len),
                        });
                    }
                    pos += len;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                pos += 1;
            }
        }
    }
}

impl ConceptExtractor for LexiconMatcher<'_> {
    fn extract(&self, doc: &Document) -> ConceptAnnotations {
        let mut occurrences = Vec::new();
        for sentence in &doc.body_sentences {
            let paragraph = doc.paragraph_of(sentence.index).unwrap_or(0);
            self.annotate_sentence(sentence, paragraph, &mut occurrences);
        }
        ConceptAnnotations::from_occurrences(
            occurrences,
            doc.body_sentences.len(),
            doc.paragraphs.len(),
        )
    }
}

/// Annotate a document's body with lexicon concepts.
pub fn extract_concepts(doc: &Document, lexicon: &Lexicon) -> ConceptAnnotations {
    LexiconMatcher::new(lexicon).extract(doc)
}

/// Annotate a document's abstract (treated as one paragraph). Returns
/// annotations over zero sentences when the document has no abstract.
pub fn extract_abstract_concepts(doc: &Document, lexicon: &Lexicon) -> ConceptAnnotations {
    let matcher = LexiconMatcher::new(lexicon);
    let mut occurrences = Vec::new();
    let sentences = doc.abstract_sentences.as_deref().unwrap_or(&[]);
    for sentence in sentences {
        matcher.annotate_sentence(sentence, 0, &mut occurrences);
    }
    ConceptAnnotations::from_occurrences(occurrences, sentences.len(), 1)
}

impl ConceptAnnotations {
    pub fn from_occurrences(
        occurrences: Vec<ConceptOccurrence>,
        sentence_count: usize,
        paragraph_count: usize,
    ) -> Self {
        let mut stats: BTreeMap<String, ConceptStats> = BTreeMap::new();
        let mut seen_sentences: BTreeSet<(usize, &str)> = BTreeSet::new();
        for occ in &occurrences {
            let entry = stats.entry(occ.concept_id.clone()).or_default();
            entry.occurrence_count += 1;
            *entry.per_paragraph_counts.entry(occ.paragraph_index).or_insert(0) += 1;
        }
        for occ in &occurrences {
            if seen_sentences.insert((occ.sentence_index, occ.concept_id.as_str())) {
                stats.get_mut(&occ.concept_id).unwrap().sentence_count += 1;
            }
        }
        ConceptAnnotations {
            occurrences,
            sentence_count,
            paragraph_count,
            stats,
        }
    }

    pub fn stats(&self) -> &BTreeMap<String, ConceptStats> {
        &self.stats
    }

    pub fn concept_stats(&self, concept_id: &str) -> Option<&ConceptStats> {
        self.stats.get(concept_id)
    }

    /// Number of distinct concepts.
    pub fn distinct_concepts(&self) -> usize {
        self.stats.len()
    }

    /// Total mentions across all concepts.
    pub fn total_occurrences(&self) -> usize {
        self.stats.values().map(|s| s.occurrence_count).sum()
    }

    /// Total mentions per paragraph, indexed by paragraph.
    pub fn paragraph_occurrence_totals(&self) -> Vec<usize> {
        let mut totals = vec![0usize; self.paragraph_count];
        for occ in &self.occurrences {
            if occ.paragraph_index < totals.len() {
                totals[occ.paragraph_index] += 1;
            }
        }
        totals
    }

    /// Concepts present in each sentence, keyed by sentence index. Sentences
    /// without occurrences are absent.
    pub fn sentence_concepts(&self) -> BTreeMap<usize, BTreeSet<&str>> {
        let mut map: BTreeMap<usize, BTreeSet<&str>> = BTreeMap::new();
        for occ in &self.occurrences {
            map.entry(occ.sentence_index)
                .or_default()
                .insert(occ.concept_id.as_str());
        }
        map
    }

    /// Per-concept counts sorted by descending sentence count, ties broken by
    /// ascending concept id.
    pub fn frequency_table(&self) -> Vec<FrequencyRow> {
        let mut rows: Vec<FrequencyRow> = self
            .stats
            .iter()
            .map(|(id, s)| FrequencyRow {
                concept_id: id.clone(),
                sentence_count: s.sentence_count,
                occurrence_count: s.occurrence_count,
            })
            .collect();
        rows.sort_by(|a, b| {
            b.sentence_count
                .cmp(&a.sentence_count)
                .then_with(|| a.concept_id.cmp(&b.concept_id))
        });
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::{parse_document, DocumentFormat};
    use crate::lexicon::ConceptEntry;

    fn entry(id: &str, sem: &str) -> ConceptEntry {
        ConceptEntry {
            concept_id: id.to_string(),
            concept_name: id.to_string(),
            semantic_type: sem.to_string(),
        }
    }

    fn demo_lexicon() -> Lexicon {
        let mut lex = Lexicon::new();
        lex.insert("autism", entry("C1", "Mental or Behavioral Dysfunction")).unwrap();
        lex.insert("schizophrenia", entry("C2", "Mental or Behavioral Dysfunction")).unwrap();
        lex.insert("bipolar", entry("C3", "Mental or Behavioral Dysfunction")).unwrap();
        lex.insert("bipolar disorder", entry("C4", "Mental or Behavioral Dysfunction")).unwrap();
        lex.insert("bipolar disorder", entry("C5", "Disease or Syndrome")).unwrap();
        lex
    }

    #[test]
    fn matches_and_counts() {
        let doc = parse_document(b"Autism and schizophrenia overlap.", DocumentFormat::Plain).unwrap();
        let ann = extract_concepts(&doc, &demo_lexicon());
        assert_eq!(ann.distinct_concepts(), 2);
        assert_eq!(ann.concept_stats("C1").unwrap().sentence_count, 1);
        assert_eq!(ann.concept_stats("C2").unwrap().sentence_count, 1);
    }

    #[test]
    fn longest_match_consumes_tokens() {
        let doc = parse_document(b"Bipolar disorder was studied.", DocumentFormat::Plain).unwrap();
        let ann = extract_concepts(&doc, &demo_lexicon());
        // The two-token phrase wins; the bare "bipolar" concept never fires.
        assert!(ann.concept_stats("C3").is_none());
        // All-mappings: both rows for the phrase are emitted at the same span.
        assert_eq!(ann.concept_stats("C4").unwrap().occurrence_count, 1);
        assert_eq!(ann.concept_stats("C5").unwrap().occurrence_count, 1);
        assert_eq!(ann.occurrences.len(), 2);
        assert_eq!(ann.occurrences[0].token_span, ann.occurrences[1].token_span);
    }

    #[test]
    fn no_hits_yields_empty_annotations() {
        let doc = parse_document(b"Nothing matches here.", DocumentFormat::Plain).unwrap();
        let ann = extract_concepts(&doc, &demo_lexicon());
        assert!(ann.occurrences.is_empty());
        assert_eq!(ann.distinct_concepts(), 0);
        assert_eq!(ann.sentence_count, 1);
    }

    #[test]
    fn repeated_mention_counts_once_per_sentence() {
        let doc = parse_document(
            b"Autism resembles autism.\n\nAutism again.",
            DocumentFormat::Plain,
        )
        .unwrap();
        let ann = extract_concepts(&doc, &demo_lexicon());
        let stats = ann.concept_stats("C1").unwrap();
        assert_eq!(stats.sentence_count, 2);
        assert_eq!(stats.occurrence_count, 3);
        assert_eq!(stats.per_paragraph_counts.get(&0), Some(&2));
        assert_eq!(stats.per_paragraph_counts.get(&1), Some(&1));
        assert_eq!(ann.total_occurrences(), 3);
        assert_eq!(ann.paragraph_occurrence_totals(), vec![2, 1]);
    }

    #[test]
    fn frequency_table_ordering() {
        let doc = parse_document(
            b"Autism and schizophrenia. Schizophrenia again. Autism and bipolar.",
            DocumentFormat::Plain,
        )
        .unwrap();
        let ann = extract_concepts(&doc, &demo_lexicon());
        let table = ann.frequency_table();
        let ids: Vec<&str> = table.iter().map(|r| r.concept_id.as_str()).collect();
        // C1 and C2 both appear in two sentences; tie broken by id.
        assert_eq!(ids, vec!["C1", "C2", "C3"]);
        for row in &table {
            assert!(row.sentence_count >= 1);
            assert!(row.sentence_count <= row.occurrence_count);
        }
    }

    #[test]
    fn token_spans_lie_inside_sentences() {
        let doc = parse_document(
            b"Autism and schizophrenia overlap in bipolar disorder cases.",
            DocumentFormat::Plain,
        )
        .unwrap();
        let ann = extract_concepts(&doc, &demo_lexicon());
        for occ in &ann.occurrences {
            let sentence = &doc.body_sentences[occ.sentence_index];
            assert!(occ.token_span.0 < occ.token_span.1);
            assert!(occ.token_span.1 <= sentence.tokens.len());
        }
    }
}
