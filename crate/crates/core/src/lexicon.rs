//! Concept lexicon: normalized surface phrases mapped to concepts.

use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::tokenize;

/// The default stoplist of generic semantic types. Concepts of these types
/// are broad and appear in most documents regardless of topic.
pub const DEFAULT_GENERIC_TYPES: [&str; 9] = [
    "functional concept",
    "qualitative concept",
    "quantitative concept",
    "temporal concept",
    "spatial concept",
    "mental process",
    "language",
    "idea or concept",
    "intellectual product",
];

/// One concept a surface phrase maps to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptEntry {
    pub concept_id: String,
    pub concept_name: String,
    pub semantic_type: String,
}

/// Maps normalized surface phrases to concepts. A phrase may map to several
/// concepts; the extractor emits all of them (all-mappings behavior).
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    /// Key: phrase tokens joined by a single space, lowercase.
    entries: BTreeMap<String, Vec<ConceptEntry>>,
    /// Lowercased semantic types treated as generic.
    pub generic_semantic_types: BTreeSet<String>,
    max_phrase_tokens: usize,
}

impl Lexicon {
    /// Empty lexicon carrying the default generic-type stoplist.
    pub fn new() -> Self {
        Lexicon {
            entries: BTreeMap::new(),
            generic_semantic_types: default_generic_types(),
            max_phrase_tokens: 0,
        }
    }

    /// Insert a surface phrase. The phrase is normalized with the shared
    /// tokenizer; phrases that tokenize to nothing are rejected.
    pub fn insert(&mut self, surface: &str, entry: ConceptEntry) -> Result<()> {
        let tokens = tokenize(surface);
        if tokens.is_empty() {
            return Err(Error::InvalidInput(format!(
                "surface phrase {surface:?} contains no tokens"
            )));
        }
        self.max_phrase_tokens = self.max_phrase_tokens.max(tokens.len());
        self.entries.entry(tokens.join(" ")).or_default().push(entry);
        Ok(())
    }

    /// Concepts for an exact normalized token sequence, if any.
    pub fn concepts_for(&self, tokens: &[String]) -> Option<&[ConceptEntry]> {
        self.entries.get(&tokens.join(" ")).map(Vec::as_slice)
    }

    /// Longest phrase length in tokens; 0 for an empty lexicon.
    pub fn max_phrase_tokens(&self) -> usize {
        self.max_phrase_tokens
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Load from TSV with columns surface_form, concept_id, concept_name,
    /// semantic_type. Lines starting with `#` and blank lines are ignored.
    pub fn from_tsv(reader: impl BufRead) -> Result<Self> {
        let mut lexicon = Lexicon::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(Error::InvalidInput(format!(
                    "lexicon line {}: expected 4 tab-separated columns, found {}",
                    lineno + 1,
                    fields.len()
                )));
            }
            lexicon.insert(
                fields[0],
                ConceptEntry {
                    concept_id: fields[1].trim().to_string(),
                    concept_name: fields[2].trim().to_string(),
                    semantic_type: fields[3].trim().to_string(),
                },
            )?;
        }
        Ok(lexicon)
    }

    pub fn load_tsv(path: impl AsRef<Path>) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_tsv(std::io::BufReader::new(file))
    }
}

/// The nine default generic semantic types, lowercased.
pub fn default_generic_types() -> BTreeSet<String> {
    DEFAULT_GENERIC_TYPES.iter().map(|s| s.to_string()).collect()
}

/// Load a stoplist file: one semantic type per line, `#` comments allowed.
/// Entries are lowercased.
pub fn load_stoplist(path: impl AsRef<Path>) -> Result<BTreeSet<String>> {
    let content = std::fs::read_to_string(path)?;
    Ok(content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.to_lowercase())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_parsing_and_all_mappings() {
        let tsv = "\
# comment line
autism\tC0004352\tAutistic Disorder\tMental or Behavioral Dysfunction
bipolar disorder\tC0005586\tBipolar Disorder\tMental or Behavioral Dysfunction
bipolar disorder\tC0005587\tBipolar Depression\tMental or Behavioral Dysfunction

further\tC0205146\tFurther\tSpatial Concept
";
        let lex = Lexicon::from_tsv(tsv.as_bytes()).unwrap();
        assert_eq!(lex.len(), 3);
        assert_eq!(lex.max_phrase_tokens(), 2);
        let rows = lex
            .concepts_for(&["bipolar".to_string(), "disorder".to_string()])
            .unwrap();
        assert_eq!(rows.len(), 2);
    }

    #[test]
    fn malformed_tsv_is_rejected() {
        let err = Lexicon::from_tsv("only two\tcolumns\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn default_stoplist_has_nine_types() {
        let defaults = default_generic_types();
        assert_eq!(defaults.len(), 9);
        assert!(defaults.contains("functional concept"));
        assert!(defaults.contains("intellectual product"));
        assert_eq!(Lexicon::new().generic_semantic_types, defaults);
    }

    #[test]
    fn surface_normalization_matches_tokenizer() {
        let mut lex = Lexicon::new();
        lex.insert(
            "  Bipolar-Disorder ",
            ConceptEntry {
                concept_id: "C1".into(),
                concept_name: "Bipolar Disorder".into(),
                semantic_type: "Mental or Behavioral Dysfunction".into(),
            },
        )
        .unwrap();
        assert!(lex
            .concepts_for(&["bipolar".to_string(), "disorder".to_string()])
            .is_some());
        assert!(lex.insert("?!", ConceptEntry {
            concept_id: "C2".into(),
            concept_name: "x".into(),
            semantic_type: "t".into(),
        }).is_err());
    }
}
