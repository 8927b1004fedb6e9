//! Measurement harness: pair-based recall for code-to-code search and
//! MRR / Precision@k for natural language queries.
//!
//! Recall follows the clone-benchmark convention: every indexed method is
//! issued as a code query, each retrieved method forms a candidate pair with
//! the query method, and per-type recall is the fraction of labeled pairs of
//! that type recovered by the union of all candidate pairs. Pairs are
//! unordered and self-pairs never count.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::index::IndexedCorpus;
use crate::lexnorm::{StopwordList, TokenDocument};
use crate::search::{prepare_query, search, search_terms, QueryMode, SearchResult};

/// Retrieval depth used for recall evaluation.
pub const DEFAULT_RECALL_TOP_K: usize = 900;

/// Precision cutoffs reported for natural language queries.
pub const DEFAULT_K_VALUES: [usize; 3] = [1, 5, 10];

/// Clone pair categories. T1/T2 are labeled categorically; the type-3/4
/// spectrum is bucketed by syntactic similarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairType {
    T1,
    T2,
    Vst3,
    St3,
    Mt3,
    Wt34,
}

impl PairType {
    pub const ALL: [PairType; 6] = [
        PairType::T1,
        PairType::T2,
        PairType::Vst3,
        PairType::St3,
        PairType::Mt3,
        PairType::Wt34,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PairType::T1 => "T1",
            PairType::T2 => "T2",
            PairType::Vst3 => "VST3",
            PairType::St3 => "ST3",
            PairType::Mt3 => "MT3",
            PairType::Wt34 => "WT3_4",
        }
    }
}

impl fmt::Display for PairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PairType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "T1" => Ok(PairType::T1),
            "T2" => Ok(PairType::T2),
            "VST3" => Ok(PairType::Vst3),
            "ST3" => Ok(PairType::St3),
            "MT3" => Ok(PairType::Mt3),
            "WT3_4" => Ok(PairType::Wt34),
            other => Err(format!("unknown pair type `{other}`")),
        }
    }
}

/// Map a syntactic similarity in [0, 1) to its type-3/4 bucket; lower bounds
/// inclusive: VST3 [0.9, 1), ST3 [0.7, 0.9), MT3 [0.5, 0.7), WT3/4 [0, 0.5).
pub fn bucket_type(similarity: f64) -> Result<PairType> {
    if !(0.0..1.0).contains(&similarity) {
        return Err(Error::SimilarityRange(similarity));
    }
    Ok(if similarity >= 0.9 {
        PairType::Vst3
    } else if similarity >= 0.7 {
        PairType::St3
    } else if similarity >= 0.5 {
        PairType::Mt3
    } else {
        PairType::Wt34
    })
}

/// A labeled true clone pair; `doc_a`/`doc_b` are unordered.
#[derive(Debug, Clone, PartialEq)]
pub struct ClonePairLabel {
    pub doc_a: u32,
    pub doc_b: u32,
    pub pair_type: PairType,
    pub similarity: Option<f64>,
}

impl ClonePairLabel {
    pub fn new(
        doc_a: u32,
        doc_b: u32,
        pair_type: PairType,
        similarity: Option<f64>,
    ) -> Result<Self> {
        if doc_a == doc_b {
            return Err(Error::Config(format!(
                "pair ({doc_a}, {doc_b}) is a self-pair"
            )));
        }
        if let Some(s) = similarity {
            if !(0.0..=1.0).contains(&s) {
                return Err(Error::SimilarityRange(s));
            }
            if matches!(
                pair_type,
                PairType::Vst3 | PairType::St3 | PairType::Mt3 | PairType::Wt34
            ) && bucket_type(s)? != pair_type
            {
                return Err(Error::Config(format!(
                    "similarity {s} does not fall in the {pair_type} bucket"
                )));
            }
        }
        Ok(Self {
            doc_a,
            doc_b,
            pair_type,
            similarity,
        })
    }

    fn key(&self) -> (u32, u32) {
        unordered(self.doc_a, self.doc_b)
    }
}

fn unordered(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

/// Load a pairs file: `doc_a<TAB>doc_b<TAB>ptype[<TAB>similarity]`.
pub fn load_pairs(path: &Path) -> Result<Vec<ClonePairLabel>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::ReadFile {
        path: path.to_path_buf(),
        source,
    })?;
    let mut pairs = Vec::new();
    for (number, line) in data_lines(&text) {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 && fields.len() != 4 {
            return Err(parse_error(path, number, "expected 3 or 4 fields"));
        }
        let doc_a = parse_u32(fields[0], path, number)?;
        let doc_b = parse_u32(fields[1], path, number)?;
        let pair_type: PairType = fields[2]
            .trim()
            .parse()
            .map_err(|e: String| parse_error(path, number, e))?;
        let similarity = match fields.get(3) {
            Some(f) => Some(f.trim().parse::<f64>().map_err(|_| {
                parse_error(path, number, format!("similarity `{f}` is not a number"))
            })?),
            None => None,
        };
        pairs.push(
            ClonePairLabel::new(doc_a, doc_b, pair_type, similarity)
                .map_err(|e| parse_error(path, number, e.to_string()))?,
        );
    }
    Ok(pairs)
}

/// A natural language benchmark query with its ground-truth clone class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NlQueryCase {
    pub query_id: String,
    pub class_id: u32,
    pub text: String,
}

/// Load a query file: `query_id<TAB>class_id<TAB>text`.
pub fn load_query_cases(path: &Path) -> Result<Vec<NlQueryCase>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::ReadFile {
        path: path.to_path_buf(),
        source,
    })?;
    let mut cases = Vec::new();
    for (number, line) in data_lines(&text) {
        let fields: Vec<&str> = line.splitn(3, '\t').collect();
        if fields.len() != 3 {
            return Err(parse_error(
                path,
                number,
                "expected `query_id<TAB>class_id<TAB>text`",
            ));
        }
        cases.push(NlQueryCase {
            query_id: fields[0].trim().to_string(),
            class_id: parse_u32(fields[1], path, number)?,
            text: fields[2].to_string(),
        });
    }
    Ok(cases)
}

/// Per-type recall over the labeled pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct RecallRow {
    pub pair_type: PairType,
    pub found: usize,
    pub total: usize,
    pub recall: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecallReport {
    /// Rows in type order; types with zero labeled pairs are absent.
    pub rows: Vec<RecallRow>,
    /// Labeled pairs touching an excluded document: these can never be found
    /// and are counted as missed.
    pub unreachable_pairs: Vec<ClonePairLabel>,
}

impl RecallReport {
    /// CSV form: `ptype,found,total,recall` with recall at 4 decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("ptype,found,total,recall\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{:.4}\n",
                row.pair_type, row.found, row.total, row.recall
            ));
        }
        out
    }
}

/// Issue every indexed method as a code query and measure per-type recall.
///
/// `identifier_docs` maps every retained doc id to the method's identifier
/// keyword list; the index stores augmented documents, so queries are
/// supplied separately. Every labeled pair must reference a doc id that is
/// either retained or excluded.
pub fn eval_recall(
    index: &IndexedCorpus,
    identifier_docs: &BTreeMap<u32, TokenDocument>,
    pairs: &[ClonePairLabel],
    top_k: usize,
) -> Result<RecallReport> {
    for pair in pairs {
        for doc_id in [pair.doc_a, pair.doc_b] {
            if index.document(doc_id).is_none() && !index.is_excluded(doc_id) {
                return Err(Error::UnknownDoc(doc_id));
            }
        }
    }
    for doc in index.documents() {
        if !identifier_docs.contains_key(&doc.doc_id()) {
            return Err(Error::Config(format!(
                "no identifier document for doc {}",
                doc.doc_id()
            )));
        }
    }

    let mut found_pairs: HashSet<(u32, u32)> = HashSet::new();
    for doc in index.documents() {
        let query = &identifier_docs[&doc.doc_id()];
        for result in search_terms(index, &query.terms, top_k) {
            if result.doc_id != doc.doc_id() {
                found_pairs.insert(unordered(doc.doc_id(), result.doc_id));
            }
        }
    }

    let mut labeled: BTreeMap<PairType, HashSet<(u32, u32)>> = BTreeMap::new();
    let mut unreachable = Vec::new();
    for pair in pairs {
        labeled
            .entry(pair.pair_type)
            .or_default()
            .insert(pair.key());
        if index.is_excluded(pair.doc_a) || index.is_excluded(pair.doc_b) {
            unreachable.push(pair.clone());
        }
    }

    let rows = PairType::ALL
        .iter()
        .filter_map(|&pair_type| {
            let truth = labeled.get(&pair_type)?;
            let found = truth.intersection(&found_pairs).count();
            Some(RecallRow {
                pair_type,
                found,
                total: truth.len(),
                recall: found as f64 / truth.len() as f64,
            })
        })
        .collect();

    Ok(RecallReport {
        rows,
        unreachable_pairs: unreachable,
    })
}

/// Mean over queries of the fraction of the top k results that are relevant.
/// Short result lists pad the denominator, never the numerator.
pub fn precision_at_k(
    results_per_query: &[Vec<SearchResult>],
    truths: &[u32],
    k: usize,
) -> Result<f64> {
    if k == 0 {
        return Err(Error::Config("precision cutoff k must be >= 1".to_string()));
    }
    if results_per_query.is_empty() || results_per_query.len() != truths.len() {
        return Err(Error::EmptyQuerySet);
    }
    let sum: f64 = results_per_query
        .iter()
        .zip(truths)
        .map(|(results, &truth)| {
            let relevant = results
                .iter()
                .take(k)
                .filter(|r| r.reference.class_id == truth)
                .count();
            relevant as f64 / k as f64
        })
        .sum();
    Ok(sum / results_per_query.len() as f64)
}

/// Mean reciprocal rank of the first relevant result; queries with no
/// relevant result contribute 0.
pub fn mrr(results_per_query: &[Vec<SearchResult>], truths: &[u32]) -> Result<f64> {
    if results_per_query.is_empty() || results_per_query.len() != truths.len() {
        return Err(Error::EmptyQuerySet);
    }
    let sum: f64 = results_per_query
        .iter()
        .zip(truths)
        .map(|(results, &truth)| reciprocal_rank(results, truth))
        .sum();
    Ok(sum / results_per_query.len() as f64)
}

fn reciprocal_rank(results: &[SearchResult], truth: u32) -> f64 {
    results
        .iter()
        .find(|r| r.reference.class_id == truth)
        .map_or(0.0, |r| 1.0 / f64::from(r.rank))
}

/// One evaluated query: its reciprocal rank and precision at each cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct NlqRow {
    pub query_id: String,
    pub reciprocal_rank: f64,
    pub precisions: Vec<f64>,
}

/// Per-query rows plus their averages, in benchmark-report shape.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub k_values: Vec<usize>,
    pub rows: Vec<NlqRow>,
    pub mean_reciprocal_rank: f64,
    pub mean_precisions: Vec<f64>,
}

impl EvalReport {
    /// CSV form: `query_id,mrr,p1,p5,p10` rows plus a final `average` row,
    /// metrics at 4 decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("query_id,mrr");
        for k in &self.k_values {
            out.push_str(&format!(",p{k}"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!("{},{:.4}", row.query_id, row.reciprocal_rank));
            for p in &row.precisions {
                out.push_str(&format!(",{p:.4}"));
            }
            out.push('\n');
        }
        out.push_str(&format!("average,{:.4}", self.mean_reciprocal_rank));
        for p in &self.mean_precisions {
            out.push_str(&format!(",{p:.4}"));
        }
        out.push('\n');
        out
    }
}

/// Run the natural language query benchmark.
///
/// Each case's class must exist in the index; this is checked before any
/// search runs. Retrieval depth is the largest precision cutoff.
pub fn eval_nlq(
    index: &IndexedCorpus,
    cases: &[NlQueryCase],
    stopwords: &StopwordList,
    k_values: &[usize],
) -> Result<EvalReport> {
    if cases.is_empty() {
        return Err(Error::EmptyQuerySet);
    }
    if k_values.is_empty() || k_values.contains(&0) {
        return Err(Error::Config(
            "precision cutoffs must be a nonempty list of positive integers".to_string(),
        ));
    }
    let known_classes: HashSet<u32> = index.documents().iter().map(|d| d.class_id()).collect();
    for case in cases {
        if !known_classes.contains(&case.class_id) {
            return Err(Error::UnknownClass(case.class_id));
        }
    }

    let top_k = *k_values.iter().max().expect("nonempty k list");
    let mut rows = Vec::with_capacity(cases.len());
    for case in cases {
        let query = prepare_query(&case.text, QueryMode::Text, stopwords);
        let results = search(index, &query, top_k);
        let precisions = k_values
            .iter()
            .map(|&k| {
                let relevant = results
                    .iter()
                    .take(k)
                    .filter(|r| r.reference.class_id == case.class_id)
                    .count();
                relevant as f64 / k as f64
            })
            .collect();
        rows.push(NlqRow {
            query_id: case.query_id.clone(),
            reciprocal_rank: reciprocal_rank(&results, case.class_id),
            precisions,
        });
    }

    let n = rows.len() as f64;
    let mean_reciprocal_rank = rows.iter().map(|r| r.reciprocal_rank).sum::<f64>() / n;
    let mean_precisions = (0..k_values.len())
        .map(|i| rows.iter().map(|r| r.precisions[i]).sum::<f64>() / n)
        .collect();
    Ok(EvalReport {
        k_values: k_values.to_vec(),
        rows,
        mean_reciprocal_rank,
        mean_precisions,
    })
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line))
        .filter(|(_, line)| !line.trim().is_empty() && !line.trim_start().starts_with('#'))
}

fn parse_u32(field: &str, path: &Path, line: usize) -> Result<u32> {
    field
        .trim()
        .parse()
        .map_err(|_| parse_error(path, line, format!("`{field}` is not an integer")))
}

fn parse_error(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}
