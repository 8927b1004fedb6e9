//! Clone method search over TF-IDF vector spaces.
//!
//! Each method referenced by a clone benchmark manifest is turned into a
//! natural language document: its normalized identifier keywords, optionally
//! prefixed by per-clone-class annotation words (curated descriptions or the
//! most recurrent keywords of the class). Documents are indexed as
//! L2-normalized TF-IDF vectors and retrieved by cosine similarity, for both
//! code-to-code and natural language queries. An evaluation harness measures
//! per-clone-type pair recall, MRR and Precision@k.
//!
//! The `examples/` directory holds one runnable example per capability;
//! `clone-search` is the command-line front end (`build`, `annotate-dump`,
//! `search`, `eval`).

pub mod annotate;
pub mod cli;
pub mod dataset;
pub mod docbuild;
pub mod error;
pub mod eval;
pub mod index;
pub mod lexnorm;
pub mod search;

pub use annotate::{AnnotationSet, AnnotationStrategy};
pub use dataset::{CloneClass, CloneMethodRef, RawMethod};
pub use docbuild::NaturalLanguageDocument;
pub use error::{Error, Result};
pub use index::{IndexedCorpus, WeightedVector};
pub use lexnorm::{StopwordList, TokenDocument};
pub use search::{Query, QueryMode, SearchResult};
