//! Per-clone-class annotation words.
//!
//! Three strategies:
//!
//! - Baseline: no annotation; documents carry identifier keywords only.
//! - Manual: the class's curated description run through word extraction.
//! - Automatic: the top-k most recurrent keywords across the class's method
//!   documents, counted naively. Because documents are duplicate-free, a
//!   term's count equals the number of methods in the class containing it.

use std::collections::BTreeMap;

use crate::dataset::CloneClass;
use crate::error::{Error, Result};
use crate::lexnorm::{extract_words, StopwordList, TokenDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnotationStrategy {
    Baseline,
    Manual,
    Automatic { top_k: u32 },
}

impl AnnotationStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            AnnotationStrategy::Baseline => "baseline",
            AnnotationStrategy::Manual => "manual",
            AnnotationStrategy::Automatic { .. } => "automatic",
        }
    }

    pub fn top_k(&self) -> Option<u32> {
        match self {
            AnnotationStrategy::Automatic { top_k } => Some(*top_k),
            _ => None,
        }
    }
}

/// Default keyword count for the automatic strategy.
pub const DEFAULT_AUTOMATIC_K: u32 = 10;

/// Ordered, duplicate-free annotation words for one clone class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotationSet {
    pub class_id: u32,
    pub words: Vec<String>,
}

impl AnnotationSet {
    /// The baseline annotation: always empty.
    pub fn empty(class_id: u32) -> Self {
        Self {
            class_id,
            words: Vec::new(),
        }
    }
}

/// Word-extract the class's curated description.
pub fn annotate_manual(class: &CloneClass, stopwords: &StopwordList) -> Result<AnnotationSet> {
    let description = class
        .description
        .as_deref()
        .ok_or(Error::MissingAnnotation {
            class_id: class.class_id,
        })?;
    Ok(AnnotationSet {
        class_id: class.class_id,
        words: extract_words(description, stopwords),
    })
}

/// Select the k most recurrent terms across the class's method documents.
///
/// Ties break by lexicographic term order; the result is ordered by
/// (count descending, term ascending). Fewer than k distinct terms returns
/// them all. No stopword filtering is applied.
pub fn annotate_automatic(class_id: u32, class_docs: &[TokenDocument], k: u32) -> AnnotationSet {
    let words = term_counts(class_docs)
        .into_iter()
        .take(k as usize)
        .map(|(term, _)| term)
        .collect();
    AnnotationSet { class_id, words }
}

/// Full ordered count table behind the automatic strategy:
/// (count descending, term ascending).
pub fn term_counts(class_docs: &[TokenDocument]) -> Vec<(String, u32)> {
    let mut counts: BTreeMap<&str, u32> = BTreeMap::new();
    for doc in class_docs {
        for term in &doc.terms {
            *counts.entry(term).or_insert(0) += 1;
        }
    }
    let mut table: Vec<(String, u32)> = counts
        .into_iter()
        .map(|(term, count)| (term.to_string(), count))
        .collect();
    table.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    table
}
