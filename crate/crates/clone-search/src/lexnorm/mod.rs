//! Normalization of source code and prose into flat keyword lists.
//!
//! Two pipelines share the splitting, stemming and deduplication stages:
//!
//! - [`extract_identifiers`] turns a Java method body into its keyword list:
//!   lex, keep identifier tokens, split camelCase/snake_case, drop single
//!   characters, stem, deduplicate preserving first occurrence.
//! - [`extract_words`] turns English prose into a word list: split on
//!   non-alphanumerics, drop stopwords and single characters, stem,
//!   deduplicate preserving first occurrence.

mod lexer;
mod stemmer;

use std::collections::HashSet;
use std::path::Path;

use crate::error::{Error, Result};

pub use lexer::{lex_java, LexOutput, Token, TokenKind, JAVA_KEYWORDS};
pub use stemmer::stem;

/// Ordered, duplicate-free sequence of stemmed terms for one method or
/// annotation. Every term is lowercase, alphanumeric and at least two
/// characters long.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TokenDocument {
    pub terms: Vec<String>,
}

impl TokenDocument {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }
}

/// Stopword set applied to prose word extraction, never to identifiers.
#[derive(Debug, Clone, Default)]
pub struct StopwordList {
    words: HashSet<String>,
}

impl StopwordList {
    /// The list embedded in the binary. Guaranteed to contain the common
    /// English function words and to exclude `with` and `new`.
    pub fn default_list() -> Self {
        Self::parse(include_str!("../../assets/stopwords.txt"))
    }

    /// An empty list; every word survives.
    pub fn empty() -> Self {
        Self::default()
    }

    /// One lowercase word per line, `#` comments and blank lines ignored.
    pub fn parse(text: &str) -> Self {
        let words = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_lowercase)
            .collect();
        Self { words }
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::ReadFile {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(Self::parse(&text))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Split one identifier lexeme into lowercase words.
///
/// Splits at underscores and other non-alphanumeric characters, at
/// lowercase/digit to uppercase boundaries, and before the last letter of an
/// uppercase run followed by a lowercase letter (`XMLFile` -> `xml`, `file`).
/// Letter-digit boundaries stay attached (`e1` -> `e1`).
pub fn split_identifier(ident: &str) -> Vec<String> {
    let chars: Vec<char> = ident.chars().collect();
    let mut words = Vec::new();
    let mut current = String::new();

    for i in 0..chars.len() {
        let c = chars[i];
        if !c.is_alphanumeric() {
            flush(&mut current, &mut words);
            continue;
        }
        if !current.is_empty() {
            let prev = chars[i - 1];
            let case_boundary = c.is_uppercase() && (prev.is_lowercase() || prev.is_ascii_digit());
            let acronym_end = c.is_lowercase()
                && prev.is_uppercase()
                && i >= 2
                && chars[i - 2].is_uppercase()
                && current.chars().count() >= 2;
            if case_boundary {
                flush(&mut current, &mut words);
            } else if acronym_end {
                // the run's final uppercase letter starts the next word
                let head = current.pop().expect("nonempty fragment");
                flush(&mut current, &mut words);
                current.push(head);
            }
        }
        current.push(c);
    }
    flush(&mut current, &mut words);
    words
}

fn flush(current: &mut String, words: &mut Vec<String>) {
    if !current.is_empty() {
        words.push(current.to_lowercase());
        current.clear();
    }
}

/// Full identifier pipeline for one method body.
pub fn extract_identifiers(source: &str) -> TokenDocument {
    let lexed = lex_java(source);
    let mut seen = HashSet::new();
    let mut terms = Vec::new();
    for token in lexed
        .tokens
        .iter()
        .filter(|t| t.kind == TokenKind::Identifier)
    {
        for fragment in split_identifier(&token.text) {
            push_term(fragment, &mut seen, &mut terms);
        }
    }
    TokenDocument { terms }
}

/// Word extraction for prose: annotations and natural language queries.
pub fn extract_words(prose: &str, stopwords: &StopwordList) -> Vec<String> {
    let mut seen = HashSet::new();
    let mut words = Vec::new();
    for raw in prose
        .split(|c: char| !c.is_alphanumeric())
        .filter(|s| !s.is_empty())
    {
        let lower = raw.to_lowercase();
        if stopwords.contains(&lower) {
            continue;
        }
        push_term(lower, &mut seen, &mut words);
    }
    words
}

/// Shared tail of both pipelines: drop single characters, stem, dedup.
fn push_term(lower: String, seen: &mut HashSet<String>, out: &mut Vec<String>) {
    if lower.chars().count() < 2 {
        return;
    }
    let stemmed = stem(&lower);
    if stemmed.chars().count() < 2 {
        return;
    }
    if seen.insert(stemmed.clone()) {
        out.push(stemmed);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const COPY_FILE_METHOD: &str = r#"public static void copyFile(File src, File dest) throws IOException {
    FileInputStream fis = new FileInputStream(src);
    FileOutputStream fos = new FileOutputStream(dest);
    java.nio.channels.FileChannel channelSrc = fis.getChannel();
    java.nio.channels.FileChannel channelDest = fos.getChannel();
    channelSrc.transferTo(0, channelSrc.size(), channelDest);
    fis.close();
    fos.close();
}"#;

    const COPY_FILE_KEYWORDS: &str = "copi file src dest io except input stream fis output fos \
                                      java nio channel get transfer to size close";

    #[test]
    fn split_acronym_boundary() {
        assert_eq!(split_identifier("IOException"), ["io", "exception"]);
        assert_eq!(split_identifier("parseXMLFile"), ["parse", "xml", "file"]);
    }

    #[test]
    fn split_keeps_digits_attached() {
        assert_eq!(split_identifier("e1"), ["e1"]);
        assert_eq!(split_identifier("utf8Name"), ["utf8", "name"]);
    }

    #[test]
    fn split_mixed_snake_and_camel() {
        assert_eq!(
            split_identifier("getHTTPStatus_code"),
            ["get", "http", "status", "code"]
        );
    }

    #[test]
    fn split_drops_empty_fragments() {
        assert_eq!(split_identifier("__a_b__"), ["a", "b"]);
        assert_eq!(split_identifier("$value"), ["value"]);
        assert_eq!(split_identifier("_"), Vec::<String>::new());
    }

    #[test]
    fn split_single_upper_then_lower() {
        assert_eq!(split_identifier("File"), ["file"]);
        assert_eq!(split_identifier("ABc"), ["a", "bc"]);
        assert_eq!(split_identifier("AB"), ["ab"]);
    }

    #[test]
    fn identifier_pipeline_matches_worked_example() {
        let doc = extract_identifiers(COPY_FILE_METHOD);
        assert_eq!(doc.terms.join(" "), COPY_FILE_KEYWORDS);
    }

    #[test]
    fn single_character_method_name_vanishes() {
        let doc = extract_identifiers("void f() {}");
        assert!(doc.is_empty());
    }

    #[test]
    fn keyword_token_removed_but_fragment_survives() {
        let doc = extract_identifiers("public void newInstance(Object e1) { e1.call(); }");
        assert_eq!(doc.terms.join(" "), "new instanc object e1 call");
    }

    #[test]
    fn keyword_only_body_yields_empty_document() {
        let doc = extract_identifiers("if (true) { return null; } else { break; }");
        assert!(doc.is_empty());
    }

    #[test]
    fn word_extraction_drops_stopwords_and_stems() {
        let stopwords = StopwordList::default_list();
        assert_eq!(
            extract_words("Copy a file from source to destination", &stopwords),
            ["copi", "file", "sourc", "destin"]
        );
    }

    #[test]
    fn word_extraction_keeps_with_and_new() {
        let stopwords = StopwordList::default_list();
        assert_eq!(
            extract_words(
                "With Java reflection how to instantiate a new object, then call a method on it?",
                &stopwords
            ),
            ["with", "java", "reflect", "instanti", "new", "object", "call", "method"]
        );
    }

    #[test]
    fn word_extraction_of_noise_is_empty() {
        let stopwords = StopwordList::default_list();
        assert!(extract_words("A I ?", &stopwords).is_empty());
        assert!(extract_words("", &stopwords).is_empty());
    }

    #[test]
    fn stopwords_matched_before_stemming() {
        // "sources" stems to "sourc" but is not itself a stopword
        let stopwords = StopwordList::default_list();
        assert_eq!(extract_words("sources", &stopwords), ["sourc"]);
        assert!(extract_words("is", &stopwords).is_empty());
    }

    #[test]
    fn required_stopword_contents() {
        let stopwords = StopwordList::default_list();
        for word in [
            "a", "an", "the", "from", "to", "of", "on", "in", "at", "by", "for", "how", "then",
            "it", "is",
        ] {
            assert!(stopwords.contains(word), "missing {word}");
        }
        assert!(!stopwords.contains("with"));
        assert!(!stopwords.contains("new"));
    }

    #[test]
    fn stopword_file_parsing_ignores_comments() {
        let list = StopwordList::parse("# heading\nfoo\n\n  bar  \n");
        assert!(list.contains("foo"));
        assert!(list.contains("bar"));
        assert_eq!(list.len(), 2);
    }

    #[test]
    fn reserialized_document_is_stable() {
        let doc = extract_identifiers(COPY_FILE_METHOD);
        let joined = doc.terms.join(" ");
        let again = extract_words(&joined, &StopwordList::empty());
        assert_eq!(again, doc.terms);
    }

    #[test]
    fn extraction_is_deterministic() {
        let a = extract_identifiers(COPY_FILE_METHOD);
        let b = extract_identifiers(COPY_FILE_METHOD);
        assert_eq!(a, b);
    }
}
