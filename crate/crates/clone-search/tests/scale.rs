//! Corpus-scale exercise: hundreds of generated Java methods through the
//! full pipeline (files on disk, manifest, tracing, annotation, index,
//! retrieval, evaluation at the default depth).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use clone_search::annotate::{annotate_automatic, annotate_manual, AnnotationSet};
use clone_search::dataset::{load_manifest, trace};
use clone_search::docbuild::build_document;
use clone_search::eval::{
    eval_nlq, eval_recall, ClonePairLabel, NlQueryCase, PairType, DEFAULT_K_VALUES,
    DEFAULT_RECALL_TOP_K,
};
use clone_search::index::{build_index, index_to_bytes};
use clone_search::lexnorm::{extract_identifiers, StopwordList, TokenDocument};
use clone_search::search::search_terms;
use clone_search::{AnnotationStrategy, IndexedCorpus};

const CLASSES: usize = 30;
const METHODS_PER_CLASS: usize = 10;

/// Deterministic synthetic corpus: every class has three distinctive
/// identifier stems that each of its methods uses, plus shared plumbing.
fn write_corpus(root: &Path) -> (String, String) {
    let mut manifest = String::new();
    let mut annotations = String::new();
    std::fs::create_dir(root.join("src")).unwrap();
    for class in 0..CLASSES {
        let class_id = class + 1;
        let theme = [
            format!("theme{class_id}Alpha"),
            format!("theme{class_id}Beta"),
            format!("theme{class_id}Gamma"),
        ];
        // prose words must stay separated: word extraction does not split
        // camelCase, so "theme5Alpha" would never match the fragments
        writeln!(
            annotations,
            "{class_id}\tProcess theme{class_id} records with alpha beta gamma helpers"
        )
        .unwrap();
        for method in 0..METHODS_PER_CLASS {
            let name = format!("src/c{class_id}_m{method}.java");
            // helperValue{method} keeps sibling methods distinguishable;
            // identical identifier sets would tie at cosine 1.0
            let body = format!(
                "public class C{class_id}M{method} {{\n\
                 public static int process{}(int seed) {{\n\
                 \tint {} = seed + {method};\n\
                 \tint {} = {} * 2;\n\
                 \tint shared = helperValue{method}(seed);\n\
                 \treturn {} + shared + {method};\n\
                 }}\n\
                 }}\n",
                theme[0], theme[1], theme[2], theme[1], theme[2]
            );
            std::fs::write(root.join(&name), &body).unwrap();
            writeln!(manifest, "{class_id}\t{name}\t2\t7").unwrap();
        }
    }
    let manifest_path = root.join("manifest.tsv");
    let annotations_path = root.join("annotations.tsv");
    std::fs::write(&manifest_path, manifest).unwrap();
    std::fs::write(&annotations_path, annotations).unwrap();
    (
        manifest_path.to_str().unwrap().to_string(),
        annotations_path.to_str().unwrap().to_string(),
    )
}

fn assemble(
    root: &Path,
    manifest: &str,
    annotations: &str,
    strategy: AnnotationStrategy,
) -> (IndexedCorpus, BTreeMap<u32, TokenDocument>) {
    let (classes, refs) = load_manifest(Path::new(manifest), Some(Path::new(annotations))).unwrap();
    let stopwords = StopwordList::default_list();
    let mut idents = BTreeMap::new();
    for reference in &refs {
        let method = trace(reference, root).unwrap();
        idents.insert(reference.doc_id, extract_identifiers(&method.source));
    }
    let mut sets = BTreeMap::new();
    for class in &classes {
        let class_docs: Vec<TokenDocument> = refs
            .iter()
            .filter(|r| r.class_id == class.class_id)
            .map(|r| idents[&r.doc_id].clone())
            .collect();
        let set = match strategy {
            AnnotationStrategy::Baseline => AnnotationSet::empty(class.class_id),
            AnnotationStrategy::Manual => annotate_manual(class, &stopwords).unwrap(),
            AnnotationStrategy::Automatic { top_k } => {
                annotate_automatic(class.class_id, &class_docs, top_k)
            }
        };
        sets.insert(class.class_id, set);
    }
    let documents: Vec<_> = refs
        .iter()
        .map(|r| build_document(r.doc_id, r.class_id, &sets[&r.class_id], &idents[&r.doc_id]))
        .collect();
    (build_index(&documents, &refs, strategy).unwrap(), idents)
}

#[test]
fn three_hundred_method_corpus_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let (manifest, annotations) = write_corpus(dir.path());

    let (baseline, idents) = assemble(
        dir.path(),
        &manifest,
        &annotations,
        AnnotationStrategy::Baseline,
    );
    assert_eq!(baseline.doc_count(), (CLASSES * METHODS_PER_CLASS) as u32);
    assert!(baseline.excluded().is_empty());

    // every method retrieves itself first with cosine 1
    for doc in baseline.documents().iter().step_by(17) {
        let query = &idents[&doc.doc_id()];
        let results = search_terms(&baseline, &query.terms, 3);
        assert_eq!(results[0].doc_id, doc.doc_id());
        assert!((results[0].score - 1.0).abs() < 1e-9);
    }

    // label every within-class pair of the first five classes; at the
    // default retrieval depth the whole corpus is visible, so every pair
    // sharing a theme term is recovered
    let mut pairs = Vec::new();
    for class_id in 1..=5u32 {
        let ids: Vec<u32> = baseline
            .documents()
            .iter()
            .filter(|d| d.class_id() == class_id)
            .map(|d| d.doc_id())
            .collect();
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                pairs.push(ClonePairLabel::new(a, b, PairType::T2, None).unwrap());
            }
        }
    }
    let report = eval_recall(&baseline, &idents, &pairs, DEFAULT_RECALL_TOP_K).unwrap();
    assert_eq!(report.rows.len(), 1);
    assert_eq!(report.rows[0].pair_type, PairType::T2);
    assert_eq!(report.rows[0].recall, 1.0);

    // shallow retrieval can only lose pairs
    let shallow = eval_recall(&baseline, &idents, &pairs, 3).unwrap();
    assert!(shallow.rows[0].recall <= report.rows[0].recall);

    // the manual annotations repeat each class's theme words, so the query
    // benchmark cannot get worse than baseline
    let (manual, _) = assemble(
        dir.path(),
        &manifest,
        &annotations,
        AnnotationStrategy::Manual,
    );
    let cases: Vec<NlQueryCase> = (1..=CLASSES as u32)
        .map(|class_id| NlQueryCase {
            query_id: format!("q{class_id}"),
            class_id,
            text: format!("how to process theme{class_id} records"),
        })
        .collect();
    let stopwords = StopwordList::default_list();
    let base_report = eval_nlq(&baseline, &cases, &stopwords, &DEFAULT_K_VALUES).unwrap();
    let manual_report = eval_nlq(&manual, &cases, &stopwords, &DEFAULT_K_VALUES).unwrap();
    assert!(manual_report.mean_reciprocal_rank >= base_report.mean_reciprocal_rank);
    assert!(
        base_report.mean_reciprocal_rank > 0.99,
        "theme words separate classes"
    );

    // determinism holds at this scale too
    let (again, _) = assemble(
        dir.path(),
        &manifest,
        &annotations,
        AnnotationStrategy::Baseline,
    );
    assert_eq!(
        index_to_bytes(&baseline).unwrap(),
        index_to_bytes(&again).unwrap()
    );

    let (automatic, _) = assemble(
        dir.path(),
        &manifest,
        &annotations,
        AnnotationStrategy::Automatic { top_k: 10 },
    );
    assert_eq!(automatic.doc_count(), baseline.doc_count());
}
