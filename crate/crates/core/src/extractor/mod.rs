//! Source-file parsing and feature-vector extraction.
//!
//! `parse_file` turns source text into construct observations; aggregation
//! produces one 264-component feature vector per scope (file scope always,
//! plus one per function and class definition). `scan_repository` walks a
//! repository clone, extracts every file whose extension maps to a requested
//! language, and reports skipped files with reasons.
//!
//! Parsing is a pure function of `(source_text, language)`: no global state,
//! deterministic output order (span start, wider spans first).

pub mod cfamily;
pub mod emit;
pub mod lexer;
pub mod python;
pub mod stats;

use std::collections::BTreeSet;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::ExtractError;
use crate::taxonomy::{ConstructKind, Language, FEATURE_WIDTH, KIND_COUNT};

pub use emit::{ConstructObservation, ScopeId, ScopeInfo, ScopeKind};
pub use stats::{aggregate_stats, ScopeSelector, StatBlock};

/// Observations plus the function/class scope table of one file.
#[derive(Debug, Clone, Default)]
pub struct ParseOutput {
    pub observations: Vec<ConstructObservation>,
    pub scopes: Vec<ScopeInfo>,
}

/// Parses source text into construct observations.
pub fn parse_file(source: &str, language: Language) -> Result<ParseOutput, ExtractError> {
    let chars: Vec<char> = source.chars().collect();
    let result = match language {
        Language::C | Language::Cpp | Language::Java => cfamily::parse_cfamily(&chars, language),
        Language::Python => python::parse_python(&chars),
    };
    result.map_err(|detail| ExtractError::ParseFailure { path: String::new(), detail })
}

/// The scope a feature vector aggregates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    File,
    Class,
    Function,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::File => "file",
            Scope::Class => "class",
            Scope::Function => "function",
        }
    }

    pub fn from_name(s: &str) -> Option<Scope> {
        match s {
            "file" => Some(Scope::File),
            "class" => Some(Scope::Class),
            "function" => Some(Scope::Function),
            _ => None,
        }
    }
}

/// One extracted feature vector: per-kind statistic blocks plus metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    pub file_id: u64,
    pub path: String,
    pub language: Language,
    pub scope: Scope,
    pub scope_id: u32,
    pub file_length_lines: u64,
    pub file_length_chars: u64,
    pub stats: Vec<StatBlock>,
}

impl FeatureVector {
    /// Flattens the stat blocks into the fixed 264-component layout.
    pub fn flatten(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(FEATURE_WIDTH);
        for block in &self.stats {
            out.extend_from_slice(&block.to_array());
        }
        debug_assert_eq!(out.len(), FEATURE_WIDTH);
        out
    }

    pub fn from_flat(
        file_id: u64,
        path: String,
        language: Language,
        scope: Scope,
        scope_id: u32,
        lines: u64,
        chars: u64,
        values: &[f64],
    ) -> FeatureVector {
        debug_assert_eq!(values.len(), FEATURE_WIDTH);
        let stats = values.chunks(12).map(StatBlock::from_array).collect();
        FeatureVector {
            file_id,
            path,
            language,
            scope,
            scope_id,
            file_length_lines: lines,
            file_length_chars: chars,
            stats,
        }
    }
}

/// Line count convention: newline count + 1. Empty files record 1 so later
/// length normalization stays well-defined.
pub fn line_count(source: &str) -> u64 {
    source.chars().filter(|&c| c == '\n').count() as u64 + 1
}

/// Builds all feature vectors (file scope first, then declaration scopes in
/// scope-id order) for one source text.
pub fn build_feature_vectors(
    source: &str,
    path: &str,
    language: Language,
    file_id: u64,
) -> Result<Vec<FeatureVector>, ExtractError> {
    let parsed = parse_file(source, language).map_err(|e| match e {
        ExtractError::ParseFailure { detail, .. } => {
            ExtractError::ParseFailure { path: path.to_string(), detail }
        }
        other => other,
    })?;
    let lines = line_count(source);
    let chars = (source.chars().count() as u64).max(1);

    let mut vectors = Vec::with_capacity(1 + parsed.scopes.len());

    // File scope: count statistics over top-level declaration regions.
    let mut top_decls: Vec<(usize, usize)> = parsed
        .scopes
        .iter()
        .filter(|s| s.enclosing_function.is_none() && s.enclosing_class.is_none())
        .map(|s| (s.start, s.end))
        .collect();
    top_decls.sort_unstable();
    vectors.push(FeatureVector {
        file_id,
        path: path.to_string(),
        language,
        scope: Scope::File,
        scope_id: 0,
        file_length_lines: lines,
        file_length_chars: chars,
        stats: aggregate_stats(
            &parsed.observations,
            ScopeSelector::File { top_level_decls: &top_decls },
        ),
    });

    for scope in &parsed.scopes {
        let in_scope: Vec<ConstructObservation> = parsed
            .observations
            .iter()
            .filter(|o| match scope.kind {
                ScopeKind::Function => o.enclosing_function == Some(scope.id),
                ScopeKind::Class => o.enclosing_class == Some(scope.id),
            })
            .cloned()
            .collect();
        vectors.push(FeatureVector {
            file_id,
            path: path.to_string(),
            language,
            scope: match scope.kind {
                ScopeKind::Function => Scope::Function,
                ScopeKind::Class => Scope::Class,
            },
            scope_id: scope.id,
            file_length_lines: lines,
            file_length_chars: chars,
            stats: aggregate_stats(&in_scope, ScopeSelector::Declaration),
        });
    }
    Ok(vectors)
}

/// Reads one file (invalid UTF-8 bytes replaced) and extracts its vectors.
pub fn extract_features(
    path: &Path,
    language: Language,
    file_id: u64,
) -> Result<Vec<FeatureVector>, ExtractError> {
    let display = path.display().to_string();
    let bytes = std::fs::read(path)
        .map_err(|source| ExtractError::Io { path: display.clone(), source })?;
    let source = String::from_utf8_lossy(&bytes);
    build_feature_vectors(&source, &display, language, file_id)
}

/// One skipped file with the reason it was skipped.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SkipEntry {
    pub path: String,
    pub reason: String,
}

/// Extraction output of one repository walk.
#[derive(Debug, Clone, Default)]
pub struct ScanReport {
    pub vectors: Vec<FeatureVector>,
    pub skipped: Vec<SkipEntry>,
}

/// Walks `root`, extracting every regular file whose extension maps to one of
/// the requested languages. Stored paths are `<root-dir-name>/<relative>`
/// with forward slashes. Output is keyed by path (sorted), so file ids do not
/// depend on traversal or worker order; `next_file_id` seeds the id sequence.
pub fn scan_repository(
    root: &Path,
    languages: &BTreeSet<Language>,
    next_file_id: u64,
) -> Result<ScanReport, ExtractError> {
    if !root.is_dir() {
        return Err(ExtractError::Io {
            path: root.display().to_string(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "repository root not found"),
        });
    }
    let repo_name = root
        .file_name()
        .map(|n| n.to_string_lossy().to_string())
        .unwrap_or_else(|| "repo".to_string());

    let mut files: Vec<(String, std::path::PathBuf, Language)> = Vec::new();
    for entry in walkdir::WalkDir::new(root).follow_links(false) {
        let entry = match entry {
            Ok(e) => e,
            Err(_) => continue,
        };
        if !entry.file_type().is_file() {
            continue;
        }
        let ext = match entry.path().extension().and_then(|e| e.to_str()) {
            Some(e) => e.to_ascii_lowercase(),
            None => continue,
        };
        let Some(lang) = Language::from_extension(&ext) else { continue };
        if !languages.contains(&lang) {
            continue;
        }
        let rel = entry
            .path()
            .strip_prefix(root)
            .expect("walkdir entries live under root");
        let rel_str: Vec<String> = rel
            .components()
            .map(|c| c.as_os_str().to_string_lossy().to_string())
            .collect();
        let stored = format!("{}/{}", repo_name, rel_str.join("/"));
        files.push((stored, entry.path().to_path_buf(), lang));
    }
    files.sort_by(|a, b| a.0.cmp(&b.0));

    let parsed: Vec<(String, Language, Result<(String, u64, u64), String>)> = files
        .par_iter()
        .map(|(stored, abs, lang)| {
            let outcome = match std::fs::read(abs) {
                Ok(bytes) => {
                    let text = String::from_utf8_lossy(&bytes).into_owned();
                    let lines = line_count(&text);
                    let chars = (text.chars().count() as u64).max(1);
                    Ok((text, lines, chars))
                }
                Err(e) => Err(format!("io: {e}")),
            };
            (stored.clone(), *lang, outcome)
        })
        .collect();

    let mut report = ScanReport::default();
    let mut file_id = next_file_id;
    for (stored, lang, outcome) in parsed {
        match outcome {
            Err(reason) => report.skipped.push(SkipEntry { path: stored, reason }),
            Ok((text, _, _)) => match build_feature_vectors(&text, &stored, lang, file_id) {
                Ok(vectors) => {
                    report.vectors.extend(vectors);
                    file_id += 1;
                }
                Err(ExtractError::ParseFailure { detail, .. }) => {
                    report.skipped.push(SkipEntry {
                        path: stored,
                        reason: format!("parse-failure: {detail}"),
                    });
                }
                Err(other) => {
                    report.skipped.push(SkipEntry { path: stored, reason: other.to_string() });
                }
            },
        }
    }
    Ok(report)
}

/// Kind-by-kind occurrence totals of a vector, used by invariant tests.
pub fn occurrence_totals(observations: &[ConstructObservation]) -> [usize; KIND_COUNT] {
    let mut totals = [0usize; KIND_COUNT];
    for o in observations {
        totals[o.kind.id() as usize] += 1;
    }
    totals
}

/// All kinds that can never occur for a language, for documentation and
/// sanity tests (e.g. `class-definition` never occurs in C).
pub fn impossible_kinds(language: Language) -> &'static [ConstructKind] {
    match language {
        Language::C => &[
            ConstructKind::ClassDefinition,
            ConstructKind::TryBlock,
            ConstructKind::CatchClause,
        ],
        Language::Cpp => &[],
        Language::Java => &[],
        Language::Python => &[ConstructKind::SwitchStatement, ConstructKind::DoWhileLoop],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_yields_empty_observations() {
        let out = parse_file("", Language::C).unwrap();
        assert!(out.observations.is_empty());
        assert!(out.scopes.is_empty());
    }

    #[test]
    fn empty_file_vector_is_all_zero_with_length_one() {
        let vs = build_feature_vectors("", "empty.c", Language::C, 7).unwrap();
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].scope, Scope::File);
        assert_eq!(vs[0].file_length_lines, 1);
        assert_eq!(vs[0].file_length_chars, 1);
        assert!(vs[0].flatten().iter().all(|&x| x == 0.0));
    }

    #[test]
    fn two_functions_give_two_function_vectors() {
        let src = "int f(){ return 1; }\nint g(){ return 2; }\n";
        let vs = build_feature_vectors(src, "two.c", Language::C, 0).unwrap();
        let files = vs.iter().filter(|v| v.scope == Scope::File).count();
        let funcs = vs.iter().filter(|v| v.scope == Scope::Function).count();
        let classes = vs.iter().filter(|v| v.scope == Scope::Class).count();
        assert_eq!((files, funcs, classes), (1, 2, 0));
    }

    #[test]
    fn parse_is_deterministic() {
        let src = "def f(a):\n    if a:\n        return a\n    return 0\n";
        let a = parse_file(src, Language::Python).unwrap();
        let b = parse_file(src, Language::Python).unwrap();
        assert_eq!(a.observations, b.observations);
    }

    #[test]
    fn byte_identical_files_same_stats() {
        let src = "int f(){ if(x){ y = 1; } }";
        let a = build_feature_vectors(src, "a/p.c", Language::C, 1).unwrap();
        let b = build_feature_vectors(src, "b/q.c", Language::C, 2).unwrap();
        assert_eq!(a.len(), b.len());
        for (va, vb) in a.iter().zip(&b) {
            assert_eq!(va.flatten(), vb.flatten());
            assert_ne!(va.file_id, vb.file_id);
        }
    }

    #[test]
    fn function_totals_bounded_by_file_totals() {
        let src = "int f(){ if(a){ x=1; } }\nint g(){ if(b){ if(c){ y=2; } } }\n";
        let parsed = parse_file(src, Language::C).unwrap();
        let file_totals = occurrence_totals(&parsed.observations);
        for scope in parsed.scopes.iter().filter(|s| s.kind == ScopeKind::Function) {
            let in_scope: Vec<_> = parsed
                .observations
                .iter()
                .filter(|o| o.enclosing_function == Some(scope.id))
                .cloned()
                .collect();
            let totals = occurrence_totals(&in_scope);
            for k in 0..KIND_COUNT {
                assert!(totals[k] <= file_totals[k]);
            }
        }
    }

    #[test]
    fn nesting_depth_strictly_increases_on_containment() {
        let srcs: [(&str, Language); 3] = [
            ("int f(){ if(x){ if(y){ g(1); } } }", Language::C),
            (
                "class A { void m() { for(;;) { if(x) y = f(z); } } }",
                Language::Java,
            ),
            (
                "def f(a):\n    for i in a:\n        if i:\n            return i\n",
                Language::Python,
            ),
        ];
        for (src, lang) in srcs {
            let out = parse_file(src, lang).unwrap();
            for (i, a) in out.observations.iter().enumerate() {
                for (j, b) in out.observations.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let proper_inside = a.start >= b.start
                        && a.end() <= b.end()
                        && (a.start > b.start || a.end() < b.end());
                    if proper_inside {
                        assert!(
                            a.depth > b.depth,
                            "{lang:?}: {a:?} inside {b:?} must be deeper"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn length_bounded_by_file_chars() {
        let src = "int f(){ return \"abc\"; }";
        let total = src.chars().count();
        let out = parse_file(src, Language::C).unwrap();
        for o in &out.observations {
            assert!(o.length <= total);
        }
    }
}
