//! Tokenization and sentence segmentation.
//!
//! Both are deliberately simple, deterministic conventions: tokens are
//! lowercased Unicode alphanumeric runs (hyphens and punctuation split), and
//! sentences end at `.`, `!` or `?` followed by whitespace and a capital
//! letter, guarded by a small abbreviation list. Decimal numbers never split
//! because the inner dot is not followed by whitespace.

/// Terminator characters that may end a sentence.
const TERMINATORS: [char; 3] = ['.', '!', '?'];

/// Words (lowercased, final dot stripped) that do not end a sentence even
/// when followed by whitespace and a capital. "et al." is covered by "al".
const ABBREVIATIONS: [&str; 14] = [
    "al", "approx", "cf", "dr", "e.g", "eq", "eqs", "fig", "figs", "i.e", "prof", "ref", "refs",
    "vs",
];

/// Split text into lowercase alphanumeric tokens.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for ch in text.chars() {
        if ch.is_alphanumeric() {
            for low in ch.to_lowercase() {
                current.push(low);
            }
        } else if !current.is_empty() {
            tokens.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

/// Split a paragraph into sentences.
///
/// The concatenation of the returned sentences equals the input modulo
/// whitespace. Whitespace-only input yields an empty list.
pub fn segment_sentences(paragraph: &str) -> Vec<String> {
    let chars: Vec<(usize, char)> = paragraph.char_indices().collect();
    let mut sentences = Vec::new();
    let mut start = 0usize; // byte offset of the current sentence start
    let mut i = 0usize;

    while i < chars.len() {
        let (_, ch) = chars[i];
        if !TERMINATORS.contains(&ch) {
            i += 1;
            continue;
        }
        // Extend over a run of terminators ("?!", "...").
        let mut run_end = i;
        while run_end + 1 < chars.len() && TERMINATORS.contains(&chars[run_end + 1].1) {
            run_end += 1;
        }
        if is_boundary(paragraph, &chars, i, run_end) {
            let end_byte = byte_end(paragraph, &chars, run_end);
            let sentence = paragraph[start..end_byte].trim();
            if !sentence.is_empty() {
                sentences.push(sentence.to_string());
            }
            start = end_byte;
        }
        i = run_end + 1;
    }

    let tail = paragraph[start..].trim();
    if !tail.is_empty() {
        sentences.push(tail.to_string());
    }
    sentences
}

/// Byte offset one past the character at `idx`.
fn byte_end(text: &str, chars: &[(usize, char)], idx: usize) -> usize {
    chars
        .get(idx + 1)
        .map(|&(b, _)| b)
        .unwrap_or_else(|| text.len())
}

fn is_boundary(text: &str, chars: &[(usize, char)], term_start: usize, run_end: usize) -> bool {
    // Find the next non-whitespace character after the terminator run.
    let mut j = run_end + 1;
    let mut saw_whitespace = false;
    while j < chars.len() && chars[j].1.is_whitespace() {
        saw_whitespace = true;
        j += 1;
    }
    if j >= chars.len() {
        // End of text always closes the sentence.
        return true;
    }
    if !saw_whitespace || !chars[j].1.is_uppercase() {
        // "0.3" (no whitespace) or a lowercase continuation.
        return false;
    }
    if chars[term_start].1 == '.' && preceding_word_is_abbreviation(text, chars, term_start) {
        return false;
    }
    true
}

/// Check whether the word immediately before the dot at `term_idx` is a
/// known abbreviation.
fn preceding_word_is_abbreviation(text: &str, chars: &[(usize, char)], term_idx: usize) -> bool {
    let mut w = term_idx;
    while w > 0 && !chars[w - 1].1.is_whitespace() {
        w -= 1;
    }
    if w == term_idx {
        return false;
    }
    let word = &text[chars[w].0..chars[term_idx].0];
    let lowered = word.to_lowercase();
    ABBREVIATIONS.contains(&lowered.as_str())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenize_lowercases_and_splits_hyphens() {
        assert_eq!(tokenize("Bipolar-Disorder risk"), vec!["bipolar", "disorder", "risk"]);
        assert_eq!(tokenize("Risk is 0.3."), vec!["risk", "is", "0", "3"]);
        assert_eq!(tokenize(""), Vec::<String>::new());
        assert_eq!(tokenize("  ...  "), Vec::<String>::new());
    }

    #[test]
    fn segments_guarding_decimals_and_abbreviations() {
        let out = segment_sentences("Risk is 0.3. See Fig. 2 for details.");
        assert_eq!(out, vec!["Risk is 0.3.", "See Fig. 2 for details."]);
    }

    #[test]
    fn segments_empty_and_plain() {
        assert_eq!(segment_sentences(""), Vec::<String>::new());
        assert_eq!(segment_sentences("   \t "), Vec::<String>::new());
        assert_eq!(segment_sentences("Hello world"), vec!["Hello world"]);
    }

    #[test]
    fn et_al_does_not_split() {
        let out = segment_sentences("Reported by Smith et al. The effect was large.");
        assert_eq!(out, vec!["Reported by Smith et al. The effect was large."]);
    }

    #[test]
    fn terminator_runs_stay_together() {
        let out = segment_sentences("Really?! Yes. Indeed.");
        assert_eq!(out, vec!["Really?!", "Yes.", "Indeed."]);
    }

    #[test]
    fn concatenation_preserves_content() {
        let inputs = [
            "A b. C d. E f!",
            "Values of 1.5 and 2.5 were seen. Next one.",
            "No split here",
            "Ends mid",
        ];
        for input in inputs {
            let joined: String = segment_sentences(input).concat();
            let squash = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
            assert_eq!(squash(&joined), squash(input), "content changed for {input:?}");
        }
    }
}
