//! Command-line entry points: `build`, `annotate-dump`, `search`, `eval`.
//!
//! The binary in `src/main.rs` is a thin shim over [`run`]; all command
//! logic lives here so the pipeline stays scriptable from library code.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::annotate::{
    annotate_automatic, annotate_manual, term_counts, AnnotationSet, AnnotationStrategy,
    DEFAULT_AUTOMATIC_K,
};
use crate::dataset::{load_manifest, trace, CloneClass, CloneMethodRef};
use crate::docbuild::build_document;
use crate::error::{Error, Result};
use crate::eval::{
    eval_nlq, eval_recall, load_pairs, load_query_cases, DEFAULT_K_VALUES, DEFAULT_RECALL_TOP_K,
};
use crate::index::{build_index, load_index, save_index, IndexedCorpus};
use crate::lexnorm::{extract_identifiers, StopwordList, TokenDocument};
use crate::search::{prepare_query, search, QueryMode};

#[derive(Debug, Parser)]
#[command(
    name = "clone-search",
    about = "TF-IDF search over code clone corpora",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build an index from a manifest and a source tree.
    Build(BuildArgs),
    /// Print the per-class annotation words a build would use.
    AnnotateDump(AnnotateDumpArgs),
    /// Query an index and print ranked results as TSV.
    Search(SearchArgs),
    /// Run recall or natural-language-query evaluation against an index.
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Baseline,
    Manual,
    Auto,
}

#[derive(Debug, Args)]
struct BuildArgs {
    /// Manifest file: class_id<TAB>path<TAB>start<TAB>end per row.
    #[arg(long)]
    manifest: PathBuf,
    /// Root directory the manifest paths are relative to.
    #[arg(long)]
    sources: PathBuf,
    /// Annotations file: class_id<TAB>description per row.
    #[arg(long)]
    annotations: Option<PathBuf>,
    #[arg(long, value_enum)]
    strategy: StrategyArg,
    /// Keyword count for the automatic strategy.
    #[arg(long)]
    k: Option<u32>,
    /// Stopword list overriding the embedded default.
    #[arg(long)]
    stopwords: Option<PathBuf>,
    /// Output path for the index file.
    #[arg(long)]
    index: PathBuf,
}

#[derive(Debug, Args)]
struct AnnotateDumpArgs {
    #[arg(long)]
    manifest: PathBuf,
    #[arg(long)]
    sources: PathBuf,
    #[arg(long)]
    annotations: Option<PathBuf>,
    #[arg(long, value_enum)]
    strategy: StrategyArg,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    stopwords: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchModeArg {
    Code,
    Text,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    index: PathBuf,
    #[arg(long, value_enum)]
    mode: SearchModeArg,
    /// Inline query text; mutually exclusive with --query-file.
    query: Option<String>,
    /// Read the query from a file instead.
    #[arg(long)]
    query_file: Option<PathBuf>,
    /// Number of results to return.
    #[arg(long, default_value_t = 10)]
    top: usize,
    #[arg(long)]
    stopwords: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalModeArg {
    Recall,
    Nlq,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long)]
    index: PathBuf,
    #[arg(long, value_enum)]
    mode: EvalModeArg,
    /// Pairs file for recall mode: doc_a<TAB>doc_b<TAB>ptype[<TAB>similarity].
    #[arg(long)]
    pairs: Option<PathBuf>,
    /// Query file for nlq mode: query_id<TAB>class_id<TAB>text.
    #[arg(long)]
    queries: Option<PathBuf>,
    /// Source root, required in recall mode to re-derive code queries.
    #[arg(long)]
    sources: Option<PathBuf>,
    /// Retrieval depth; defaults to 900 for recall and 10 for nlq.
    #[arg(long)]
    top: Option<usize>,
    #[arg(long)]
    stopwords: Option<PathBuf>,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

/// Parse arguments, dispatch, and map errors to a nonzero exit status.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Build(args) => cmd_build(&args),
        Command::AnnotateDump(args) => cmd_annotate_dump(&args),
        Command::Search(args) => cmd_search(&args),
        Command::Eval(args) => cmd_eval(&args),
    };
    match outcome {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn load_stopwords(path: &Option<PathBuf>) -> Result<StopwordList> {
    match path {
        Some(p) => StopwordList::from_file(p),
        None => Ok(StopwordList::default_list()),
    }
}

fn resolve_strategy(
    strategy: StrategyArg,
    k: Option<u32>,
    annotations: &Option<PathBuf>,
) -> Result<AnnotationStrategy> {
    if k.is_some() && strategy != StrategyArg::Auto {
        return Err(Error::Config(
            "--k is only accepted with --strategy auto".to_string(),
        ));
    }
    if let Some(0) = k {
        return Err(Error::Config("--k must be at least 1".to_string()));
    }
    match strategy {
        StrategyArg::Baseline => Ok(AnnotationStrategy::Baseline),
        StrategyArg::Manual => {
            if annotations.is_none() {
                return Err(Error::Config(
                    "--strategy manual requires --annotations".to_string(),
                ));
            }
            Ok(AnnotationStrategy::Manual)
        }
        StrategyArg::Auto => Ok(AnnotationStrategy::Automatic {
            top_k: k.unwrap_or(DEFAULT_AUTOMATIC_K),
        }),
    }
}

/// Trace every manifest reference and run the identifier pipeline on it.
fn extract_all(refs: &[CloneMethodRef], sources: &Path) -> Result<BTreeMap<u32, TokenDocument>> {
    let mut docs = BTreeMap::new();
    for reference in refs {
        let method = trace(reference, sources)?;
        docs.insert(reference.doc_id, extract_identifiers(&method.source));
    }
    Ok(docs)
}

/// Annotation sets for every class that has at least one method.
fn compute_annotations(
    classes: &[CloneClass],
    refs: &[CloneMethodRef],
    ident_docs: &BTreeMap<u32, TokenDocument>,
    strategy: AnnotationStrategy,
    stopwords: &StopwordList,
) -> Result<BTreeMap<u32, AnnotationSet>> {
    let mut populated: BTreeMap<u32, Vec<TokenDocument>> = BTreeMap::new();
    for reference in refs {
        populated
            .entry(reference.class_id)
            .or_default()
            .push(ident_docs[&reference.doc_id].clone());
    }
    let mut annotations = BTreeMap::new();
    for (&class_id, class_docs) in &populated {
        let set = match strategy {
            AnnotationStrategy::Baseline => AnnotationSet::empty(class_id),
            AnnotationStrategy::Manual => {
                let class = classes
                    .iter()
                    .find(|c| c.class_id == class_id)
                    .expect("manifest classes are declared");
                annotate_manual(class, stopwords)?
            }
            AnnotationStrategy::Automatic { top_k } => {
                annotate_automatic(class_id, class_docs, top_k)
            }
        };
        annotations.insert(class_id, set);
    }
    Ok(annotations)
}

fn build_corpus(
    manifest: &Path,
    sources: &Path,
    annotations_path: &Option<PathBuf>,
    strategy: AnnotationStrategy,
    stopwords: &StopwordList,
) -> Result<IndexedCorpus> {
    let (classes, refs) = load_manifest(manifest, annotations_path.as_deref())?;
    let ident_docs = extract_all(&refs, sources)?;
    let annotations = compute_annotations(&classes, &refs, &ident_docs, strategy, stopwords)?;
    let documents: Vec<_> = refs
        .iter()
        .map(|r| {
            build_document(
                r.doc_id,
                r.class_id,
                &annotations[&r.class_id],
                &ident_docs[&r.doc_id],
            )
        })
        .collect();
    build_index(&documents, &refs, strategy)
}

fn cmd_build(args: &BuildArgs) -> Result<()> {
    let strategy = resolve_strategy(args.strategy, args.k, &args.annotations)?;
    let stopwords = load_stopwords(&args.stopwords)?;
    let index = build_corpus(
        &args.manifest,
        &args.sources,
        &args.annotations,
        strategy,
        &stopwords,
    )?;
    save_index(&index, &args.index)?;
    println!("indexed documents: {}", index.doc_count());
    println!("vocabulary terms: {}", index.vocabulary().len());
    println!("excluded documents: {}", index.excluded().len());
    Ok(())
}

fn cmd_annotate_dump(args: &AnnotateDumpArgs) -> Result<()> {
    let strategy = resolve_strategy(args.strategy, args.k, &args.annotations)?;
    let stopwords = load_stopwords(&args.stopwords)?;
    let (classes, refs) = load_manifest(&args.manifest, args.annotations.as_deref())?;
    let ident_docs = extract_all(&refs, &args.sources)?;
    let annotations = compute_annotations(&classes, &refs, &ident_docs, strategy, &stopwords)?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for (class_id, set) in &annotations {
        write!(out, "{}\t{}", class_id, set.words.join(" "))?;
        if matches!(strategy, AnnotationStrategy::Automatic { .. }) {
            // full ordered count table, so the top-k cut is inspectable
            let class_docs: Vec<TokenDocument> = refs
                .iter()
                .filter(|r| r.class_id == *class_id)
                .map(|r| ident_docs[&r.doc_id].clone())
                .collect();
            let table: Vec<String> = term_counts(&class_docs)
                .into_iter()
                .map(|(term, count)| format!("{term}:{count}"))
                .collect();
            write!(out, "\t{}", table.join(" "))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn cmd_search(args: &SearchArgs) -> Result<()> {
    let raw = match (&args.query, &args.query_file) {
        (Some(q), None) => q.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|source| Error::ReadFile {
            path: path.clone(),
            source,
        })?,
        (Some(_), Some(_)) => {
            return Err(Error::Config(
                "give either an inline query or --query-file, not both".to_string(),
            ))
        }
        (None, None) => {
            return Err(Error::Config(
                "missing query: pass inline text or --query-file".to_string(),
            ))
        }
    };
    let index = load_index(&args.index)?;
    let stopwords = load_stopwords(&args.stopwords)?;
    let mode = match args.mode {
        SearchModeArg::Code => QueryMode::Code,
        SearchModeArg::Text => QueryMode::Text,
    };
    let query = prepare_query(&raw, mode, &stopwords);
    let results = search(&index, &query, args.top);
    if results.is_empty() {
        eprintln!("no matches");
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for result in &results {
        writeln!(out, "{}", result.to_tsv_row())?;
    }
    Ok(())
}

fn cmd_eval(args: &EvalArgs) -> Result<()> {
    let index = load_index(&args.index)?;
    let csv = match args.mode {
        EvalModeArg::Recall => {
            let pairs_path = args
                .pairs
                .as_ref()
                .ok_or_else(|| Error::Config("recall mode requires --pairs".to_string()))?;
            let sources = args
                .sources
                .as_ref()
                .ok_or_else(|| Error::Config("recall mode requires --sources".to_string()))?;
            let pairs = load_pairs(pairs_path)?;
            let mut identifier_docs = BTreeMap::new();
            for doc in index.documents() {
                let method = trace(&doc.reference, sources)?;
                identifier_docs.insert(doc.doc_id(), extract_identifiers(&method.source));
            }
            let top_k = args.top.unwrap_or(DEFAULT_RECALL_TOP_K);
            let report = eval_recall(&index, &identifier_docs, &pairs, top_k)?;
            for pair in &report.unreachable_pairs {
                eprintln!(
                    "warning: pair ({}, {}) references an excluded document and counts as missed",
                    pair.doc_a, pair.doc_b
                );
            }
            report.to_csv()
        }
        EvalModeArg::Nlq => {
            let queries_path = args
                .queries
                .as_ref()
                .ok_or_else(|| Error::Config("nlq mode requires --queries".to_string()))?;
            if args.top.is_some() {
                return Err(Error::Config(
                    "--top applies to recall mode only; nlq retrieval depth is the largest \
                     precision cutoff"
                        .to_string(),
                ));
            }
            let cases = load_query_cases(queries_path)?;
            let stopwords = load_stopwords(&args.stopwords)?;
            eval_nlq(&index, &cases, &stopwords, &DEFAULT_K_VALUES)?.to_csv()
        }
    };
    std::fs::write(&args.out, csv).map_err(|source| Error::WriteFile {
        path: args.out.clone(),
        source,
    })?;
    Ok(())
}
