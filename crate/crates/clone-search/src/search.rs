//! Query preparation and ranked retrieval.
//!
//! A query is either a code fragment (run through the identifier pipeline)
//! or natural language (run through word extraction). Retrieval scores every
//! document by the dot product of normalized TF-IDF vectors, i.e. cosine
//! similarity, drops zero scores, and breaks ties by ascending doc id.

use crate::dataset::CloneMethodRef;
use crate::index::{vectorize, IndexedCorpus};
use crate::lexnorm::{extract_identifiers, extract_words, StopwordList};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryMode {
    Code,
    Text,
}

/// A prepared search query: the raw input and its extracted terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub mode: QueryMode,
    pub raw: String,
    pub terms: Vec<String>,
}

/// Route the raw query through the pipeline matching its mode. An empty term
/// list is legal; searching with it simply finds nothing.
pub fn prepare_query(raw: &str, mode: QueryMode, stopwords: &StopwordList) -> Query {
    let terms = match mode {
        QueryMode::Code => extract_identifiers(raw).terms,
        QueryMode::Text => extract_words(raw, stopwords),
    };
    Query {
        mode,
        raw: raw.to_string(),
        terms,
    }
}

/// One ranked hit. Ranks are 1-based and consecutive; scores lie in [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub rank: u32,
    pub doc_id: u32,
    pub reference: CloneMethodRef,
    pub score: f64,
}

impl SearchResult {
    /// Machine-readable emission:
    /// `rank<TAB>score(6 decimals)<TAB>class_id<TAB>path<TAB>start<TAB>end`.
    pub fn to_tsv_row(&self) -> String {
        format!(
            "{}\t{:.6}\t{}\t{}\t{}\t{}",
            self.rank,
            self.score,
            self.reference.class_id,
            self.reference.path,
            self.reference.start_line,
            self.reference.end_line
        )
    }
}

/// Rank the corpus against a prepared query.
///
/// Documents scoring zero are never returned, even to pad `top_k`.
pub fn search(index: &IndexedCorpus, query: &Query, top_k: usize) -> Vec<SearchResult> {
    search_terms(index, &query.terms, top_k)
}

/// Ranking core shared by user search and evaluation runs.
pub fn search_terms(index: &IndexedCorpus, terms: &[String], top_k: usize) -> Vec<SearchResult> {
    let query_vector = vectorize(index, terms);
    if query_vector.is_zero() {
        return Vec::new();
    }
    let mut scored: Vec<(u32, f64)> = index
        .doc_vectors()
        .filter_map(|(doc, vector)| {
            let score = query_vector.dot(vector);
            (score > 0.0).then_some((doc.doc_id(), score))
        })
        .collect();
    scored.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .expect("scores are finite")
            .then_with(|| a.0.cmp(&b.0))
    });
    scored.truncate(top_k);
    scored
        .into_iter()
        .enumerate()
        .map(|(i, (doc_id, score))| SearchResult {
            rank: i as u32 + 1,
            doc_id,
            reference: index
                .document(doc_id)
                .expect("scored documents are retained")
                .reference
                .clone(),
            score,
        })
        .collect()
}
