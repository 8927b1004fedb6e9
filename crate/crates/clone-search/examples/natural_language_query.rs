//! Answer a natural language question with clone methods, using manually
//! annotated documents.
//!
//! Run with: cargo run --example natural_language_query

use std::collections::BTreeMap;
use std::path::Path;

use clone_search::annotate::annotate_manual;
use clone_search::dataset::{load_manifest, trace};
use clone_search::docbuild::build_document;
use clone_search::index::build_index;
use clone_search::lexnorm::extract_identifiers;
use clone_search::search::{prepare_query, search, QueryMode};
use clone_search::{AnnotationStrategy, StopwordList};

const QUESTION: &str =
    "With Java reflection how to instantiate a new object, then call a method on it?";

fn main() -> clone_search::Result<()> {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let (classes, refs) = load_manifest(
        &fixtures.join("manifest.tsv"),
        Some(&fixtures.join("annotations.tsv")),
    )?;
    let stopwords = StopwordList::default_list();

    let mut annotations = BTreeMap::new();
    for class in &classes {
        if refs.iter().any(|r| r.class_id == class.class_id) {
            annotations.insert(class.class_id, annotate_manual(class, &stopwords)?);
        }
    }

    let mut documents = Vec::new();
    for reference in &refs {
        let method = trace(reference, &fixtures)?;
        documents.push(build_document(
            reference.doc_id,
            reference.class_id,
            &annotations[&reference.class_id],
            &extract_identifiers(&method.source),
        ));
    }
    let index = build_index(&documents, &refs, AnnotationStrategy::Manual)?;

    let query = prepare_query(QUESTION, QueryMode::Text, &stopwords);
    println!("question : {QUESTION}");
    println!("extracted: {}\n", query.terms.join(" "));
    for result in search(&index, &query, 3) {
        println!(
            "#{} score {:.4}  class {}  {}:{}..{}",
            result.rank,
            result.score,
            result.reference.class_id,
            result.reference.path,
            result.reference.start_line,
            result.reference.end_line
        );
        let method = trace(&result.reference, &fixtures)?;
        let document = index
            .document_terms(result.doc_id)
            .expect("retained document");
        println!("document: {}", document.join(" "));
        println!("{}\n", method.source);
    }
    Ok(())
}
