//! English stemming for normalized keywords.
//!
//! Backed by the Snowball English (Porter) stemmer from `rust-stemmers`.
//! Note the s-removal rule: a plural `s` is only stripped when the stem has
//! a vowel that is not immediately before it, so short tokens like `fis` or
//! `fos` survive unchanged. Words of one or two characters and tokens with
//! digits such as `e1` or `md5` pass through.

use std::sync::OnceLock;

use rust_stemmers::{Algorithm, Stemmer};

fn english() -> &'static Stemmer {
    static STEMMER: OnceLock<Stemmer> = OnceLock::new();
    STEMMER.get_or_init(|| Stemmer::create(Algorithm::English))
}

/// Stem a single lowercase word.
pub fn stem(word: &str) -> String {
    english().stem(word).into_owned()
}
