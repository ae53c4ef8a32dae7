//! Input documents: parsing, segmentation into paragraphs and sentences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{segment_sentences, tokenize};

/// A single sentence with its pre-computed tokens.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    /// 0-based position within its sequence (body or abstract).
    pub index: usize,
    pub text: String,
    /// Lowercase alphanumeric tokens; never empty.
    pub tokens: Vec<String>,
}

/// A parsed document: ordered body sentences grouped into paragraphs, plus an
/// optional reference abstract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub title: Option<String>,
    /// Reference summary sentences, when the input provides an abstract.
    pub abstract_sentences: Option<Vec<Sentence>>,
    pub body_sentences: Vec<Sentence>,
    /// Half-open `(start, end)` sentence-index ranges; they partition
    /// `0..body_sentences.len()` with no gaps or overlaps.
    pub paragraphs: Vec<(usize, usize)>,
}

/// Supported input formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentFormat {
    Json,
    Plain,
}

#[derive(Deserialize)]
struct JsonDocument {
    id: String,
    #[serde(default)]
    title: Option<String>,
    #[serde(default, rename = "abstract")]
    abstract_text: Option<String>,
    sections: Vec<JsonSection>,
}

#[derive(Deserialize)]
struct JsonSection {
    #[serde(default)]
    #[allow(dead_code)] // headings are carried by the schema but not summarized
    heading: Option<String>,
    paragraphs: Vec<String>,
}

/// Parse raw bytes into a [`Document`].
///
/// Plain-text inputs may carry an abstract block terminated by a line that is
/// exactly `---`; body paragraphs are separated by blank lines. JSON inputs
/// follow the documented schema. Sentences that contain no tokens are
/// dropped; a document with no body sentences is an error.
pub fn parse_document(raw: &[u8], format: DocumentFormat) -> Result<Document> {
    let text = std::str::from_utf8(raw).map_err(|e| Error::Parse {
        offset: e.valid_up_to(),
        line: 0,
        column: 0,
        message: "input is not valid UTF-8".to_string(),
    })?;
    match format {
        DocumentFormat::Json => parse_json(text),
        DocumentFormat::Plain => parse_plain(text),
    }
}

fn parse_json(text: &str) -> Result<Document> {
    let parsed: JsonDocument = serde_json::from_str(text).map_err(|e| {
        let (line, column) = (e.line(), e.column());
        Error::Parse {
            offset: line_col_to_offset(text, line, column),
            line,
            column,
            message: e.to_string(),
        }
    })?;

    let paragraph_texts: Vec<&str> = parsed
        .sections
        .iter()
        .flat_map(|s| s.paragraphs.iter().map(String::as_str))
        .collect();
    let (body_sentences, paragraphs) = build_body(&paragraph_texts)?;
    Ok(Document {
        id: parsed.id,
        title: parsed.title,
        abstract_sentences: parsed.abstract_text.as_deref().map(build_sentences),
        body_sentences,
        paragraphs,
    })
}

fn parse_plain(text: &str) -> Result<Document> {
    let mut abstract_block: Option<String> = None;
    let mut body = text;
    for (pos, line) in text.lines().scan(0usize, |off, line| {
        let start = *off;
        *off = start + line.len() + 1;
        Some((start, line))
    }) {
        if line.trim() == "---" {
            abstract_block = Some(text[..pos].to_string());
            let after = pos + line.len();
            body = text.get(after..).unwrap_or("");
            break;
        }
    }

    let blocks = split_blank_line_blocks(body);
    let (body_sentences, paragraphs) = build_body(&blocks.iter().map(String::as_str).collect::<Vec<_>>())?;
    Ok(Document {
        id: String::new(),
        title: None,
        abstract_sentences: abstract_block.as_deref().map(build_sentences),
        body_sentences,
        paragraphs,
    })
}

/// Split text into blank-line-delimited blocks.
fn split_blank_line_blocks(text: &str) -> Vec<String> {
    let mut blocks = Vec::new();
    let mut current = String::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            if !current.trim().is_empty() {
                blocks.push(std::mem::take(&mut current));
            } else {
                current.clear();
            }
        } else {
            if !current.is_empty() {
                current.push('\n');
            }
            current.push_str(line);
        }
    }
    if !current.trim().is_empty() {
        blocks.push(current);
    }
    blocks
}

/// Segment paragraph texts into globally indexed sentences plus ranges.
fn build_body(paragraph_texts: &[&str]) -> Result<(Vec<Sentence>, Vec<(usize, usize)>)> {
    let mut sentences = Vec::new();
    let mut paragraphs = Vec::new();
    for block in paragraph_texts {
        let start = sentences.len();
        for text in segment_sentences(block) {
            let tokens = tokenize(&text);
            if tokens.is_empty() {
                continue;
            }
            sentences.push(Sentence {
                index: sentences.len(),
                text,
                tokens,
            });
        }
        if sentences.len() > start {
            paragraphs.push((start, sentences.len()));
        }
    }
    if sentences.is_empty() {
        return Err(Error::EmptyDocument);
    }
    Ok((sentences, paragraphs))
}

/// Segment free text (an abstract) into locally indexed sentences.
fn build_sentences(text: &str) -> Vec<Sentence> {
    split_blank_line_blocks(text)
        .iter()
        .flat_map(|block| segment_sentences(block))
        .filter_map(|text| {
            let tokens = tokenize(&text);
            (!tokens.is_empty()).then_some((text, tokens))
        })
        .enumerate()
        .map(|(index, (text, tokens))| Sentence { index, text, tokens })
        .collect()
}

fn line_col_to_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let mut offset = 0;
    for (i, l) in text.split('\n').enumerate() {
        if i + 1 == line {
            return offset + column.saturating_sub(1).min(l.len());
        }
        offset += l.len() + 1;
    }
    text.len()
}

impl Document {
    /// Tokens of the abstract, concatenated in order. Empty when there is no
    /// abstract.
    pub fn abstract_tokens(&self) -> Vec<String> {
        self.abstract_sentences
            .iter()
            .flatten()
            .flat_map(|s| s.tokens.iter().cloned())
            .collect()
    }

    /// Paragraph index for a body sentence index.
    pub fn paragraph_of(&self, sentence_index: usize) -> Option<usize> {
        self.paragraphs
            .iter()
            .position(|&(start, end)| sentence_index >= start && sentence_index < end)
    }
}
