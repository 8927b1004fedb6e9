//! TF-IDF vector space over natural language documents.
//!
//! Weighting is `(1 + ln tf) * ln(J / df)` with the natural logarithm, where
//! `J` is the number of retained documents and `df` the number of documents
//! containing the term. Document and query vectors are L2-normalized, so a
//! dot product is a cosine similarity. Because the document pipeline
//! deduplicates terms, in-document tf is always 1; the general formula is
//! still implemented for queries that carry repeated terms.
//!
//! The persisted form is a single JSON document with a trailing `sha256` of
//! the canonical serialization of all prior fields. Term weights are not
//! stored; they are recomputed from the term lists at load.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::annotate::AnnotationStrategy;
use crate::dataset::CloneMethodRef;
use crate::docbuild::NaturalLanguageDocument;
use crate::error::{Error, Result};

/// On-disk format revision.
pub const INDEX_FORMAT_VERSION: u32 = 1;

/// Reason recorded for documents left out of the vector space.
pub const EMPTY_DOC_REASON: &str = "empty after normalization";

/// TF-IDF weight: `(1 + ln tf) * ln(doc_count / df)`.
///
/// `tf = 0` means the term is absent and its weight is 0 by definition, not
/// via this formula; passing it is an invariant violation, as is a document
/// frequency outside `1..=doc_count`.
pub fn tfidf_weight(tf: u32, df: u32, doc_count: u32) -> Result<f64> {
    if tf == 0 {
        return Err(Error::Weight("tf = 0 denotes an absent term".to_string()));
    }
    if df == 0 || df > doc_count {
        return Err(Error::Weight(format!("df = {df} outside 1..={doc_count}")));
    }
    Ok((1.0 + f64::from(tf).ln()) * (f64::from(doc_count) / f64::from(df)).ln())
}

/// Lexicographically sorted terms with their document frequencies.
/// A term's id is its position in the ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    terms: Vec<String>,
    df: Vec<u32>,
}

impl Vocabulary {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, term_id: u32) -> &str {
        &self.terms[term_id as usize]
    }

    pub fn df(&self, term_id: u32) -> u32 {
        self.df[term_id as usize]
    }

    pub fn term_id(&self, term: &str) -> Option<u32> {
        self.terms
            .binary_search_by(|t| t.as_str().cmp(term))
            .ok()
            .map(|i| i as u32)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.terms
            .iter()
            .map(String::as_str)
            .zip(self.df.iter().copied())
    }
}

/// One retained document: its method reference and sorted term ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedDocument {
    pub reference: CloneMethodRef,
    pub term_ids: Vec<u32>,
}

impl IndexedDocument {
    pub fn doc_id(&self) -> u32 {
        self.reference.doc_id
    }

    pub fn class_id(&self) -> u32 {
        self.reference.class_id
    }
}

/// A document dropped from the vector space, with provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcludedDocument {
    pub doc_id: u32,
    pub reason: String,
}

/// Sparse L2-normalized weight vector: (term id, weight) pairs sorted by
/// term id. Zero-weight components are dropped, so an all-zero vector is
/// simply empty.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedVector {
    components: Vec<(u32, f64)>,
}

impl WeightedVector {
    pub fn components(&self) -> &[(u32, f64)] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.components
            .iter()
            .map(|(_, w)| w * w)
            .sum::<f64>()
            .sqrt()
    }

    /// Dot product by merging the two sorted component lists.
    pub fn dot(&self, other: &WeightedVector) -> f64 {
        let mut sum = 0.0;
        let (mut i, mut j) = (0, 0);
        while i < self.components.len() && j < other.components.len() {
            let (a, wa) = self.components[i];
            let (b, wb) = other.components[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Equal => {
                    sum += wa * wb;
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        sum
    }

    fn from_weights(mut components: Vec<(u32, f64)>) -> Self {
        components.retain(|(_, w)| *w != 0.0);
        let norm = components.iter().map(|(_, w)| w * w).sum::<f64>().sqrt();
        if norm > 0.0 {
            for (_, w) in &mut components {
                *w /= norm;
            }
        }
        Self { components }
    }
}

/// Immutable TF-IDF index over a clone method corpus.
#[derive(Debug, Clone)]
pub struct IndexedCorpus {
    strategy: AnnotationStrategy,
    vocabulary: Vocabulary,
    docs: Vec<IndexedDocument>,
    excluded: Vec<ExcludedDocument>,
    doc_vectors: Vec<WeightedVector>,
}

impl IndexedCorpus {
    /// Number of retained documents (the `J` of the weighting formula).
    pub fn doc_count(&self) -> u32 {
        self.docs.len() as u32
    }

    pub fn strategy(&self) -> AnnotationStrategy {
        self.strategy
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocabulary
    }

    /// Retained documents, sorted by doc id.
    pub fn documents(&self) -> &[IndexedDocument] {
        &self.docs
    }

    pub fn excluded(&self) -> &[ExcludedDocument] {
        &self.excluded
    }

    pub fn document(&self, doc_id: u32) -> Option<&IndexedDocument> {
        self.docs
            .binary_search_by_key(&doc_id, |d| d.doc_id())
            .ok()
            .map(|i| &self.docs[i])
    }

    pub fn is_excluded(&self, doc_id: u32) -> bool {
        self.excluded.iter().any(|e| e.doc_id == doc_id)
    }

    /// The precomputed normalized vector of a retained document.
    pub fn document_vector(&self, doc_id: u32) -> Option<&WeightedVector> {
        self.docs
            .binary_search_by_key(&doc_id, |d| d.doc_id())
            .ok()
            .map(|i| &self.doc_vectors[i])
    }

    pub fn doc_vectors(&self) -> impl Iterator<Item = (&IndexedDocument, &WeightedVector)> {
        self.docs.iter().zip(self.doc_vectors.iter())
    }

    /// The terms of a retained document, resolved from its term ids.
    pub fn document_terms(&self, doc_id: u32) -> Option<Vec<&str>> {
        self.document(doc_id).map(|d| {
            d.term_ids
                .iter()
                .map(|&id| self.vocabulary.term(id))
                .collect()
        })
    }

    fn finalize(
        strategy: AnnotationStrategy,
        vocabulary: Vocabulary,
        docs: Vec<IndexedDocument>,
        excluded: Vec<ExcludedDocument>,
    ) -> Self {
        let doc_count = docs.len() as u32;
        let doc_vectors = docs
            .iter()
            .map(|doc| {
                let weights = doc
                    .term_ids
                    .iter()
                    .map(|&id| {
                        let w = tfidf_weight(1, vocabulary.df(id), doc_count)
                            .expect("df within corpus bounds by construction");
                        (id, w)
                    })
                    .collect();
                WeightedVector::from_weights(weights)
            })
            .collect();
        Self {
            strategy,
            vocabulary,
            docs,
            excluded,
            doc_vectors,
        }
    }
}

/// Build the vector space from assembled documents.
///
/// `documents` and `refs` are parallel; doc ids must be dense `0..n` and
/// agree between the two. Empty documents are excluded with provenance
/// rather than failing the build; a corpus with zero retained documents is
/// an error.
pub fn build_index(
    documents: &[NaturalLanguageDocument],
    refs: &[CloneMethodRef],
    strategy: AnnotationStrategy,
) -> Result<IndexedCorpus> {
    if documents.len() != refs.len() {
        return Err(Error::Build(format!(
            "{} documents but {} references",
            documents.len(),
            refs.len()
        )));
    }
    let mut order: Vec<usize> = (0..documents.len()).collect();
    order.sort_by_key(|&i| documents[i].doc_id);
    for (expected, &i) in order.iter().enumerate() {
        let doc = &documents[i];
        let reference = &refs[i];
        if doc.doc_id != expected as u32 {
            return Err(Error::Build(format!(
                "doc ids are not dense: expected {expected}, found {}",
                doc.doc_id
            )));
        }
        if reference.doc_id != doc.doc_id || reference.class_id != doc.class_id {
            return Err(Error::Build(format!(
                "document {} disagrees with its reference",
                doc.doc_id
            )));
        }
    }

    let mut retained: Vec<(&NaturalLanguageDocument, &CloneMethodRef)> = Vec::new();
    let mut excluded = Vec::new();
    for &i in &order {
        if documents[i].is_empty() {
            excluded.push(ExcludedDocument {
                doc_id: documents[i].doc_id,
                reason: EMPTY_DOC_REASON.to_string(),
            });
        } else {
            retained.push((&documents[i], &refs[i]));
        }
    }
    if retained.is_empty() {
        return Err(Error::Build(
            "zero retained documents after normalization".to_string(),
        ));
    }

    let mut df: BTreeMap<&str, u32> = BTreeMap::new();
    for (doc, _) in &retained {
        for term in &doc.terms {
            *df.entry(term).or_insert(0) += 1;
        }
    }
    let terms: Vec<String> = df.keys().map(|t| t.to_string()).collect();
    let df: Vec<u32> = df.values().copied().collect();
    let vocabulary = Vocabulary { terms, df };

    let docs = retained
        .iter()
        .map(|(doc, reference)| {
            let mut term_ids: Vec<u32> = doc
                .terms
                .iter()
                .map(|t| {
                    vocabulary
                        .term_id(t)
                        .expect("vocabulary covers all document terms")
                })
                .collect();
            term_ids.sort_unstable();
            IndexedDocument {
                reference: (*reference).clone(),
                term_ids,
            }
        })
        .collect();

    Ok(IndexedCorpus::finalize(
        strategy, vocabulary, docs, excluded,
    ))
}

/// Normalized TF-IDF vector for an arbitrary term sequence.
///
/// Terms outside the vocabulary are ignored; tf is the occurrence count in
/// `terms`. The result is empty (all-zero) when nothing overlaps the
/// vocabulary or every matched term occurs in all documents.
pub fn vectorize(index: &IndexedCorpus, terms: &[String]) -> WeightedVector {
    let mut tf: HashMap<u32, u32> = HashMap::new();
    for term in terms {
        if let Some(id) = index.vocabulary.term_id(term) {
            *tf.entry(id).or_insert(0) += 1;
        }
    }
    let mut ids: Vec<u32> = tf.keys().copied().collect();
    ids.sort_unstable();
    let weights = ids
        .into_iter()
        .map(|id| {
            let w = tfidf_weight(tf[&id], index.vocabulary.df(id), index.doc_count())
                .expect("df within corpus bounds by construction");
            (id, w)
        })
        .collect();
    WeightedVector::from_weights(weights)
}

// ---------------------------------------------------------------------------
// persistence
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct IndexPayload {
    version: u32,
    strategy: String,
    k: Option<u32>,
    #[serde(rename = "J")]
    doc_count: u32,
    vocabulary: Vec<VocabularyEntry>,
    docs: Vec<DocEntry>,
    excluded: Vec<ExcludedEntry>,
}

#[derive(Serialize, Deserialize)]
struct VocabularyEntry {
    term: String,
    df: u32,
}

#[derive(Serialize, Deserialize)]
struct DocEntry {
    doc_id: u32,
    class_id: u32,
    path: String,
    start: u32,
    end: u32,
    term_ids: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct ExcludedEntry {
    doc_id: u32,
    reason: String,
}

fn payload_of(index: &IndexedCorpus) -> IndexPayload {
    IndexPayload {
        version: INDEX_FORMAT_VERSION,
        strategy: index.strategy.name().to_string(),
        k: index.strategy.top_k(),
        doc_count: index.doc_count(),
        vocabulary: index
            .vocabulary
            .iter()
            .map(|(term, df)| VocabularyEntry {
                term: term.to_string(),
                df,
            })
            .collect(),
        docs: index
            .docs
            .iter()
            .map(|d| DocEntry {
                doc_id: d.reference.doc_id,
                class_id: d.reference.class_id,
                path: d.reference.path.clone(),
                start: d.reference.start_line,
                end: d.reference.end_line,
                term_ids: d.term_ids.clone(),
            })
            .collect(),
        excluded: index
            .excluded
            .iter()
            .map(|e| ExcludedEntry {
                doc_id: e.doc_id,
                reason: e.reason.clone(),
            })
            .collect(),
    }
}

fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Serialized index bytes: canonical JSON payload plus trailing checksum.
pub fn index_to_bytes(index: &IndexedCorpus) -> Result<Vec<u8>> {
    let mut body = serde_json::to_string(&payload_of(index))?;
    let digest = sha256_hex(&body);
    debug_assert!(body.ends_with('}'));
    body.truncate(body.len() - 1);
    body.push_str(&format!(",\"sha256\":\"{digest}\"}}"));
    Ok(body.into_bytes())
}

/// Write the index atomically: a partial file is never left at `path`.
pub fn save_index(index: &IndexedCorpus, path: &Path) -> Result<()> {
    let bytes = index_to_bytes(index)?;
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    if let Err(e) = std::fs::write(&tmp, &bytes) {
        let _ = std::fs::remove_file(&tmp);
        return Err(e.into());
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

/// Load and verify an index written by [`save_index`].
pub fn load_index(path: &Path) -> Result<IndexedCorpus> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::ReadFile {
        path: path.to_path_buf(),
        source,
    })?;
    index_from_str(&text).map_err(|message| Error::IndexFile {
        path: path.to_path_buf(),
        message,
    })
}

fn index_from_str(text: &str) -> std::result::Result<IndexedCorpus, String> {
    const MARKER: &str = ",\"sha256\":\"";
    let pos = text
        .rfind(MARKER)
        .ok_or_else(|| "missing sha256 trailer".to_string())?;
    let tail = text[pos + MARKER.len()..].trim_end();
    let stored = tail
        .strip_suffix("\"}")
        .ok_or_else(|| "malformed sha256 trailer".to_string())?;
    let body = format!("{}{}", &text[..pos], "}");
    if sha256_hex(&body) != stored {
        return Err("checksum mismatch".to_string());
    }
    let payload: IndexPayload =
        serde_json::from_str(&body).map_err(|e| format!("malformed payload: {e}"))?;
    if payload.version != INDEX_FORMAT_VERSION {
        return Err(format!(
            "unsupported version {} (expected {INDEX_FORMAT_VERSION})",
            payload.version
        ));
    }
    let strategy = match (payload.strategy.as_str(), payload.k) {
        ("baseline", None) => AnnotationStrategy::Baseline,
        ("manual", None) => AnnotationStrategy::Manual,
        ("automatic", Some(top_k)) => AnnotationStrategy::Automatic { top_k },
        (name, k) => {
            return Err(format!("invalid strategy/k combination: {name:?}, {k:?}"));
        }
    };
    if payload.doc_count as usize != payload.docs.len() {
        return Err(format!(
            "J = {} but {} documents stored",
            payload.doc_count,
            payload.docs.len()
        ));
    }

    let mut terms = Vec::with_capacity(payload.vocabulary.len());
    let mut df = Vec::with_capacity(payload.vocabulary.len());
    for entry in payload.vocabulary {
        if let Some(last) = terms.last() {
            if *last >= entry.term {
                return Err("vocabulary terms not strictly sorted".to_string());
            }
        }
        if entry.df == 0 || entry.df > payload.doc_count {
            return Err(format!("df {} outside 1..={}", entry.df, payload.doc_count));
        }
        terms.push(entry.term);
        df.push(entry.df);
    }
    let vocabulary = Vocabulary { terms, df };

    let mut docs = Vec::with_capacity(payload.docs.len());
    let mut recomputed_df = vec![0u32; vocabulary.len()];
    for entry in payload.docs {
        if let Some(last) = docs.last().map(|d: &IndexedDocument| d.doc_id()) {
            if last >= entry.doc_id {
                return Err("documents not sorted by doc id".to_string());
            }
        }
        let mut seen_prev: Option<u32> = None;
        for &id in &entry.term_ids {
            if id as usize >= vocabulary.len() {
                return Err(format!("term id {id} outside vocabulary"));
            }
            if seen_prev.is_some_and(|p| p >= id) {
                return Err("document term ids not strictly sorted".to_string());
            }
            seen_prev = Some(id);
            recomputed_df[id as usize] += 1;
        }
        docs.push(IndexedDocument {
            reference: CloneMethodRef {
                doc_id: entry.doc_id,
                class_id: entry.class_id,
                path: entry.path,
                start_line: entry.start,
                end_line: entry.end,
            },
            term_ids: entry.term_ids,
        });
    }
    if recomputed_df != vocabulary.df {
        return Err("df table inconsistent with documents".to_string());
    }

    let excluded = payload
        .excluded
        .into_iter()
        .map(|e| ExcludedDocument {
            doc_id: e.doc_id,
            reason: e.reason,
        })
        .collect();

    Ok(IndexedCorpus::finalize(
        strategy, vocabulary, docs, excluded,
    ))
}
