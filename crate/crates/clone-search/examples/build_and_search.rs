//! Build an index over the fixture corpus, persist it, and run a
//! code-to-code query with one of the indexed methods.
//!
//! Run with: cargo run --example build_and_search

use std::collections::BTreeMap;
use std::path::Path;

use clone_search::annotate::AnnotationSet;
use clone_search::dataset::{load_manifest, trace};
use clone_search::docbuild::build_document;
use clone_search::index::{build_index, load_index, save_index};
use clone_search::lexnorm::extract_identifiers;
use clone_search::search::{prepare_query, search, QueryMode};
use clone_search::{AnnotationStrategy, StopwordList};

fn main() -> clone_search::Result<()> {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let (_, refs) = load_manifest(&fixtures.join("manifest.tsv"), None)?;

    // baseline strategy: documents are the identifier keyword lists
    let mut idents = BTreeMap::new();
    for reference in &refs {
        let method = trace(reference, &fixtures)?;
        idents.insert(reference.doc_id, extract_identifiers(&method.source));
    }
    let documents: Vec<_> = refs
        .iter()
        .map(|r| {
            build_document(
                r.doc_id,
                r.class_id,
                &AnnotationSet::empty(r.class_id),
                &idents[&r.doc_id],
            )
        })
        .collect();
    let index = build_index(&documents, &refs, AnnotationStrategy::Baseline)?;
    println!(
        "indexed {} methods, vocabulary of {} terms",
        index.doc_count(),
        index.vocabulary().len()
    );

    let path = std::env::temp_dir().join("clone-search-example.idx.json");
    save_index(&index, &path)?;
    let index = load_index(&path)?;
    println!("round-tripped index through {}\n", path.display());

    // query with the text of an indexed method: it comes back at rank 1
    let query_method = trace(&refs[0], &fixtures)?;
    let query = prepare_query(
        &query_method.source,
        QueryMode::Code,
        &StopwordList::default_list(),
    );
    println!("query terms: {}\n", query.terms.join(" "));
    for result in search(&index, &query, 5) {
        println!("{}", result.to_tsv_row());
    }
    Ok(())
}
