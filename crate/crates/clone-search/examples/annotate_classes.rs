//! Produce per-class annotation words under the manual and automatic
//! strategies, from the bundled fixture dataset.
//!
//! Run with: cargo run --example annotate_classes

use std::collections::BTreeMap;
use std::path::Path;

use clone_search::annotate::{annotate_automatic, annotate_manual, term_counts};
use clone_search::dataset::{load_manifest, trace};
use clone_search::lexnorm::{extract_identifiers, StopwordList, TokenDocument};

fn main() -> clone_search::Result<()> {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let (classes, refs) = load_manifest(
        &fixtures.join("manifest.tsv"),
        Some(&fixtures.join("annotations.tsv")),
    )?;
    let stopwords = StopwordList::default_list();

    let mut per_class: BTreeMap<u32, Vec<TokenDocument>> = BTreeMap::new();
    for reference in &refs {
        let method = trace(reference, &fixtures)?;
        per_class
            .entry(reference.class_id)
            .or_default()
            .push(extract_identifiers(&method.source));
    }

    for (class_id, docs) in &per_class {
        let class = classes
            .iter()
            .find(|c| c.class_id == *class_id)
            .expect("manifest class is declared");
        println!("class {class_id} ({} methods)", docs.len());
        println!(
            "  description: {}",
            class.description.as_deref().unwrap_or("-")
        );
        let manual = annotate_manual(class, &stopwords)?;
        println!("  manual    : {}", manual.words.join(" "));
        let automatic = annotate_automatic(*class_id, docs, 10);
        println!("  automatic : {}", automatic.words.join(" "));
        let table: Vec<String> = term_counts(docs)
            .into_iter()
            .take(5)
            .map(|(term, count)| format!("{term}:{count}"))
            .collect();
        println!("  top counts: {}\n", table.join(" "));
    }
    Ok(())
}
