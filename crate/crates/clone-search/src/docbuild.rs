//! Assembly of the per-method natural language documents stored in the index.

use std::collections::HashSet;

use crate::annotate::AnnotationSet;
use crate::lexnorm::TokenDocument;

/// The metadata document for one clone method: its class's annotation words
/// followed by its identifier keywords, deduplicated across the seam.
/// A term present in both lists appears once, at its annotation position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalLanguageDocument {
    pub doc_id: u32,
    pub class_id: u32,
    pub terms: Vec<String>,
}

impl NaturalLanguageDocument {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Augment a method's identifier keywords with its class annotation.
pub fn build_document(
    doc_id: u32,
    class_id: u32,
    annotation: &AnnotationSet,
    idents: &TokenDocument,
) -> NaturalLanguageDocument {
    let mut seen = HashSet::new();
    let mut terms = Vec::with_capacity(annotation.words.len() + idents.terms.len());
    for term in annotation.words.iter().chain(idents.terms.iter()) {
        if seen.insert(term.as_str()) {
            terms.push(term.clone());
        }
    }
    NaturalLanguageDocument {
        doc_id,
        class_id,
        terms,
    }
}
