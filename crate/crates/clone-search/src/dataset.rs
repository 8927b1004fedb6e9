//! Clone-reference manifests and method tracing.
//!
//! A dataset is described by two tab-separated text files:
//!
//! - manifest: `class_id<TAB>path<TAB>start_line<TAB>end_line`, one method per
//!   row, `#` comments ignored; doc ids are assigned densely in row order.
//! - annotations (optional): `class_id<TAB>description`, one curated
//!   description per clone class.
//!
//! Line ranges are 1-based and inclusive on both ends. Source files are
//! decoded as UTF-8 with invalid bytes replaced, and both LF and CRLF line
//! endings are accepted; slices are re-joined with LF.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A group of methods implementing one functionality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CloneClass {
    pub class_id: u32,
    pub description: Option<String>,
}

/// Pointer into a source tree: clone class, file and inclusive line range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CloneMethodRef {
    pub doc_id: u32,
    pub class_id: u32,
    pub path: String,
    pub start_line: u32,
    pub end_line: u32,
}

/// A traced method: the reference plus the exact line slice it points at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawMethod {
    pub reference: CloneMethodRef,
    pub source: String,
}

/// Load a manifest and, when given, an annotations file.
///
/// Returns the declared clone classes (sorted by id) and the method
/// references with doc ids `0..n` in row order.
pub fn load_manifest(
    manifest_path: &Path,
    annotations_path: Option<&Path>,
) -> Result<(Vec<CloneClass>, Vec<CloneMethodRef>)> {
    let text = read_file(manifest_path)?;
    let mut refs = Vec::new();
    let mut classes: BTreeMap<u32, Option<String>> = BTreeMap::new();

    for (number, line) in data_lines(&text) {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(parse_error(
                manifest_path,
                number,
                format!("expected 4 tab-separated fields, found {}", fields.len()),
            ));
        }
        let class_id = parse_positive(fields[0], "class id", manifest_path, number)?;
        let start_line = parse_positive(fields[2], "start line", manifest_path, number)?;
        let end_line = parse_positive(fields[3], "end line", manifest_path, number)?;
        if start_line > end_line {
            return Err(parse_error(manifest_path, number, "inverted line range"));
        }
        classes.entry(class_id).or_insert(None);
        refs.push(CloneMethodRef {
            doc_id: refs.len() as u32,
            class_id,
            path: fields[1].to_string(),
            start_line,
            end_line,
        });
    }

    if let Some(path) = annotations_path {
        let text = read_file(path)?;
        let mut described: BTreeMap<u32, usize> = BTreeMap::new();
        for (number, line) in data_lines(&text) {
            let (id_field, description) = line
                .split_once('\t')
                .ok_or_else(|| parse_error(path, number, "expected `class_id<TAB>description`"))?;
            let class_id = parse_positive(id_field, "class id", path, number)?;
            if described.insert(class_id, number).is_some() {
                return Err(parse_error(
                    path,
                    number,
                    format!("duplicate class id {class_id}"),
                ));
            }
            let description = description.trim();
            if description.is_empty() {
                return Err(parse_error(path, number, "empty description"));
            }
            classes.insert(class_id, Some(description.to_string()));
        }
    }

    let classes = classes
        .into_iter()
        .map(|(class_id, description)| CloneClass {
            class_id,
            description,
        })
        .collect();
    Ok((classes, refs))
}

/// Slice the referenced lines out of the file under `source_root`.
///
/// Pure function of the file bytes and the range: no trimming, no reflow,
/// lines re-joined with LF.
pub fn trace(reference: &CloneMethodRef, source_root: &Path) -> Result<RawMethod> {
    let path = source_root.join(&reference.path);
    let describe = |message: String| Error::Trace {
        path: path.clone(),
        message: format!(
            "doc {} (class {}): {}",
            reference.doc_id, reference.class_id, message
        ),
    };

    if reference.start_line == 0 || reference.start_line > reference.end_line {
        return Err(describe(format!(
            "invalid line range {}..{}",
            reference.start_line, reference.end_line
        )));
    }
    let bytes = std::fs::read(&path).map_err(|e| describe(e.to_string()))?;
    let text = String::from_utf8_lossy(&bytes);
    let lines: Vec<&str> = text.lines().collect();
    if reference.end_line as usize > lines.len() {
        return Err(describe(format!(
            "line range {}..{} exceeds file with {} lines",
            reference.start_line,
            reference.end_line,
            lines.len()
        )));
    }
    let slice = &lines[reference.start_line as usize - 1..reference.end_line as usize];
    Ok(RawMethod {
        reference: reference.clone(),
        source: slice.join("\n"),
    })
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::ReadFile {
        path: path.to_path_buf(),
        source,
    })
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line))
        .filter(|(_, line)| !line.trim().is_empty() && !line.trim_start().starts_with('#'))
}

fn parse_positive(field: &str, what: &str, path: &Path, line: usize) -> Result<u32> {
    let value: u32 = field
        .trim()
        .parse()
        .map_err(|_| parse_error(path, line, format!("{what} `{field}` is not an integer")))?;
    if value == 0 {
        return Err(parse_error(path, line, format!("{what} must be positive")));
    }
    Ok(value)
}

fn parse_error(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn write(dir: &Path, name: &str, content: &str) -> std::path::PathBuf {
        let path = dir.join(name);
        fs::write(&path, content).unwrap();
        path
    }

    #[test]
    fn manifest_assigns_dense_doc_ids_in_row_order() {
        let dir = tempfile::tempdir().unwrap();
        let manifest = write(
            dir.path(),
            "manifest.tsv",
            "2\ta.java\t1\t3\n# comment\n2\tb.java\t4\t9\n\n5\tc.java\t2\t2\n",
        );
        let (classes, refs) = load_manifest(&manifest, None).unwrap();
        assert_eq!(
            refs.iter().map(|r| r.doc_id).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert_eq!(refs[1].path, "b.java");
        assert_eq!(refs[2].class_id, 5);
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.description.is_none()));
    }

    #[test]
    fn annotations_attach_descriptions() {
        let dir = tempfile::tempdir().unwrap();
        let manifest = write(dir.path(), "m.tsv", "4\ta.java\t1\t1\n");
        let annotations = write(
            dir.path(),
            "a.tsv",
            "4\tCopy file from source to destination\n",
        );
        let (classes, _) = load_manifest(&manifest, Some(&annotations)).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(
            classes[0].description.as_deref(),
            Some("Copy file from source to destination")
        );
    }

    #[test]
    fn duplicate_annotation_class_id_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let manifest = write(dir.path(), "m.tsv", "4\ta.java\t1\t1\n");
        let annotations = write(dir.path(), "a.tsv", "4\tfirst\n4\tsecond\n");
        let err = load_manifest(&manifest, Some(&annotations)).unwrap_err();
        assert!(err.to_string().contains("duplicate class id 4"), "{err}");
    }

    #[test]
    fn inverted_range_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let manifest = write(dir.path(), "m.tsv", "1\ta.java\t20\t10\n");
        let err = load_manifest(&manifest, None).unwrap_err();
        assert!(err.to_string().contains("inverted line range"), "{err}");
    }

    #[test]
    fn malformed_row_names_its_line_number() {
        let dir = tempfile::tempdir().unwrap();
        let manifest = write(dir.path(), "m.tsv", "1\ta.java\t1\t2\n1\tb.java\t3\n");
        let err = load_manifest(&manifest, None).unwrap_err();
        let text = err.to_string();
        assert!(text.contains(":2:"), "{text}");
        assert!(text.contains("expected 4 tab-separated fields"), "{text}");
    }

    fn make_ref(path: &str, start: u32, end: u32) -> CloneMethodRef {
        CloneMethodRef {
            doc_id: 0,
            class_id: 1,
            path: path.to_string(),
            start_line: start,
            end_line: end,
        }
    }

    #[test]
    fn trace_single_line_file() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "one.java", "int x;");
        let traced = trace(&make_ref("one.java", 1, 1), dir.path()).unwrap();
        assert_eq!(traced.source, "int x;");
    }

    #[test]
    fn trace_inner_slice_matches_independent_slicing() {
        let dir = tempfile::tempdir().unwrap();
        let content = "l1\nl2\nl3\nl4\nl5\n";
        write(dir.path(), "five.java", content);
        let traced = trace(&make_ref("five.java", 2, 4), dir.path()).unwrap();
        // independent oracle: plain split, no trace() machinery
        let expected: Vec<&str> = content.split('\n').skip(1).take(3).collect();
        assert_eq!(traced.source, expected.join("\n"));
        assert_eq!(traced.source, "l2\nl3\nl4");
    }

    #[test]
    fn trace_out_of_bounds_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "five.java", "a\nb\nc\nd\ne\n");
        let err = trace(&make_ref("five.java", 3, 9), dir.path()).unwrap_err();
        assert!(
            err.to_string().contains("exceeds file with 5 lines"),
            "{err}"
        );
    }

    #[test]
    fn trace_missing_file_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        assert!(trace(&make_ref("absent.java", 1, 1), dir.path()).is_err());
    }

    #[test]
    fn trace_accepts_crlf_and_rejoins_with_lf() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "crlf.java", "a\r\nb\r\nc\r\n");
        let traced = trace(&make_ref("crlf.java", 1, 3), dir.path()).unwrap();
        assert_eq!(traced.source, "a\nb\nc");
    }

    #[test]
    fn trace_full_range_reproduces_line_content() {
        let dir = tempfile::tempdir().unwrap();
        let content = "alpha\nbeta\ngamma";
        write(dir.path(), "full.java", content);
        let traced = trace(&make_ref("full.java", 1, 3), dir.path()).unwrap();
        assert_eq!(traced.source, content);
    }

    #[test]
    fn trace_is_pure() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "p.java", "x\ny\nz\n");
        let r = make_ref("p.java", 1, 2);
        assert_eq!(
            trace(&r, dir.path()).unwrap(),
            trace(&r, dir.path()).unwrap()
        );
    }

    #[test]
    fn invalid_utf8_is_replaced_not_fatal() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("latin1.java");
        fs::write(&path, b"int caf\xe9;\nint x;\n").unwrap();
        let traced = trace(&make_ref("latin1.java", 1, 2), dir.path()).unwrap();
        assert!(traced.source.contains('\u{FFFD}'));
        assert!(traced.source.ends_with("int x;"));
    }
}
