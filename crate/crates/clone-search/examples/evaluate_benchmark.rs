//! Run the evaluation harness on the fixture benchmark: per-clone-type pair
//! recall for code-to-code queries, and MRR / Precision@k for natural
//! language queries, comparing annotation strategies.
//!
//! Run with: cargo run --example evaluate_benchmark

use std::collections::BTreeMap;
use std::path::Path;

use clone_search::annotate::{annotate_automatic, annotate_manual, AnnotationSet};
use clone_search::dataset::{load_manifest, trace, CloneClass, CloneMethodRef};
use clone_search::docbuild::build_document;
use clone_search::eval::{eval_nlq, eval_recall, load_pairs, load_query_cases, DEFAULT_K_VALUES};
use clone_search::index::{build_index, IndexedCorpus};
use clone_search::lexnorm::{extract_identifiers, TokenDocument};
use clone_search::{AnnotationStrategy, StopwordList};

fn build(
    classes: &[CloneClass],
    refs: &[CloneMethodRef],
    idents: &BTreeMap<u32, TokenDocument>,
    strategy: AnnotationStrategy,
    stopwords: &StopwordList,
) -> clone_search::Result<IndexedCorpus> {
    let mut annotations = BTreeMap::new();
    for class in classes {
        let class_docs: Vec<TokenDocument> = refs
            .iter()
            .filter(|r| r.class_id == class.class_id)
            .map(|r| idents[&r.doc_id].clone())
            .collect();
        if class_docs.is_empty() {
            continue;
        }
        let set = match strategy {
            AnnotationStrategy::Baseline => AnnotationSet::empty(class.class_id),
            AnnotationStrategy::Manual => annotate_manual(class, stopwords)?,
            AnnotationStrategy::Automatic { top_k } => {
                annotate_automatic(class.class_id, &class_docs, top_k)
            }
        };
        annotations.insert(class.class_id, set);
    }
    let documents: Vec<_> = refs
        .iter()
        .map(|r| {
            build_document(
                r.doc_id,
                r.class_id,
                &annotations[&r.class_id],
                &idents[&r.doc_id],
            )
        })
        .collect();
    build_index(&documents, refs, strategy)
}

fn main() -> clone_search::Result<()> {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let (classes, refs) = load_manifest(
        &fixtures.join("manifest.tsv"),
        Some(&fixtures.join("annotations.tsv")),
    )?;
    let stopwords = StopwordList::default_list();
    let pairs = load_pairs(&fixtures.join("pairs.tsv"))?;
    let cases = load_query_cases(&fixtures.join("queries.tsv"))?;

    let mut idents = BTreeMap::new();
    for reference in &refs {
        let method = trace(reference, &fixtures)?;
        idents.insert(reference.doc_id, extract_identifiers(&method.source));
    }

    for strategy in [
        AnnotationStrategy::Baseline,
        AnnotationStrategy::Manual,
        AnnotationStrategy::Automatic { top_k: 10 },
    ] {
        let index = build(&classes, &refs, &idents, strategy, &stopwords)?;
        println!("=== strategy: {} ===", strategy.name());

        let recall = eval_recall(&index, &idents, &pairs, 3)?;
        print!("{}", recall.to_csv());

        let report = eval_nlq(&index, &cases, &stopwords, &DEFAULT_K_VALUES)?;
        print!("{}", report.to_csv());
        println!();
    }
    Ok(())
}
