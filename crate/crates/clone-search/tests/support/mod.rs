//! Shared test support: an independent dense brute-force oracle for TF-IDF
//! cosine ranking and for the evaluation metrics.
//!
//! Nothing here calls into the library's vectorizer, index or search paths;
//! the oracle recomputes document frequencies, weights, rankings and metrics
//! from plain term lists with dense vectors and flat loops.

use std::collections::BTreeSet;

/// Dense TF-IDF ranking oracle over duplicate-free documents.
pub struct DenseOracle {
    vocabulary: Vec<String>,
    df: Vec<f64>,
    doc_ids: Vec<u32>,
    doc_vectors: Vec<Vec<f64>>,
}

#[allow(dead_code)]
impl DenseOracle {
    /// `docs` are (doc_id, terms) pairs; term lists must be duplicate-free.
    pub fn build(docs: &[(u32, Vec<String>)]) -> Self {
        let vocabulary: Vec<String> = docs
            .iter()
            .flat_map(|(_, terms)| terms.iter().cloned())
            .collect::<BTreeSet<String>>()
            .into_iter()
            .collect();
        let doc_count = docs.len() as f64;

        // brute-force document frequency: scan every document per term
        let df: Vec<f64> = vocabulary
            .iter()
            .map(|term| {
                docs.iter()
                    .filter(|(_, terms)| terms.contains(term))
                    .count() as f64
            })
            .collect();

        let doc_vectors = docs
            .iter()
            .map(|(_, terms)| {
                let mut dense = vec![0.0; vocabulary.len()];
                for (i, term) in vocabulary.iter().enumerate() {
                    if terms.contains(term) {
                        dense[i] = (doc_count / df[i]).ln();
                    }
                }
                normalize(dense)
            })
            .collect();

        Self {
            vocabulary,
            df,
            doc_ids: docs.iter().map(|(id, _)| *id).collect(),
            doc_vectors,
        }
    }

    fn query_vector(&self, query: &[String]) -> Vec<f64> {
        let doc_count = self.doc_ids.len() as f64;
        let mut dense = vec![0.0; self.vocabulary.len()];
        for (i, term) in self.vocabulary.iter().enumerate() {
            let tf = query.iter().filter(|t| *t == term).count() as f64;
            if tf > 0.0 {
                dense[i] = (1.0 + tf.ln()) * (doc_count / self.df[i]).ln();
            }
        }
        normalize(dense)
    }

    /// Full ranking: positive scores only, score descending, doc id
    /// ascending, truncated to `top_k`.
    pub fn rank(&self, query: &[String], top_k: usize) -> Vec<(u32, f64)> {
        let q = self.query_vector(query);
        let mut scored: Vec<(u32, f64)> = self
            .doc_vectors
            .iter()
            .zip(&self.doc_ids)
            .map(|(d, &id)| (id, dot(&q, d)))
            .filter(|(_, s)| *s > 0.0)
            .collect();
        scored.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
        scored.truncate(top_k);
        scored
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(mut v: Vec<f64>) -> Vec<f64> {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in &mut v {
            *x /= norm;
        }
    }
    v
}

/// Spreadsheet-style recall: issue every document's query terms against the
/// oracle ranking, collect unordered candidate pairs, intersect with labels.
/// Returns (found, total) per pair-type label in the order given.
#[allow(dead_code)]
pub fn oracle_recall(
    oracle: &DenseOracle,
    queries: &[(u32, Vec<String>)],
    labeled: &[(u32, u32, &'static str)],
    types_in_order: &[&'static str],
    top_k: usize,
) -> Vec<(&'static str, usize, usize)> {
    let mut candidate_pairs: Vec<(u32, u32)> = Vec::new();
    for (doc_id, terms) in queries {
        for (hit, _) in oracle.rank(terms, top_k) {
            if hit != *doc_id {
                let pair = (*doc_id.min(&hit), *doc_id.max(&hit));
                if !candidate_pairs.contains(&pair) {
                    candidate_pairs.push(pair);
                }
            }
        }
    }
    types_in_order
        .iter()
        .map(|ptype| {
            let truth: Vec<(u32, u32)> = labeled
                .iter()
                .filter(|(_, _, t)| t == ptype)
                .map(|(a, b, _)| (*a.min(b), *a.max(b)))
                .collect();
            let found = truth
                .iter()
                .filter(|pair| candidate_pairs.contains(pair))
                .count();
            (*ptype, found, truth.len())
        })
        .collect()
}

/// Reciprocal rank of the first hit whose class matches, 0 when none does.
#[allow(dead_code)]
pub fn oracle_reciprocal_rank(ranked_classes: &[u32], truth: u32) -> f64 {
    for (position, class_id) in ranked_classes.iter().enumerate() {
        if *class_id == truth {
            return 1.0 / (position as f64 + 1.0);
        }
    }
    0.0
}

/// Fraction of the top `k` slots holding the truth class; short lists count
/// the missing slots as non-relevant.
#[allow(dead_code)]
pub fn oracle_precision_at_k(ranked_classes: &[u32], truth: u32, k: usize) -> f64 {
    let hits = ranked_classes
        .iter()
        .take(k)
        .filter(|c| **c == truth)
        .count();
    hits as f64 / k as f64
}
