//! Ingestion, deduplication, filtering and function extraction over a
//! directory of repositories, with per-language statistics.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use walkdir::WalkDir;

use crate::error::{Error, Result};
use crate::frontend::{extract_functions, parse, SyntaxTree};
use crate::pipeline::lexical_token_count;
use crate::unit::{Language, SourceUnit};

/// File extension → language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageMap(BTreeMap<String, Language>);

impl Default for LanguageMap {
    fn default() -> Self {
        let exts = [
            "c", "h", "cc", "cpp", "cxx", "c++", "hh", "hpp", "hxx", "C", "H", "f90", "f95", "f03",
            "f08", "F90", "F95", "F03", "F08",
        ];
        LanguageMap(
            exts.iter()
                .filter_map(|e| Language::from_extension(e).map(|l| (e.to_string(), l)))
                .collect(),
        )
    }
}

impl LanguageMap {
    /// Keeps only the given languages.
    pub fn restrict(mut self, languages: &[Language]) -> Self {
        self.0.retain(|_, l| languages.contains(l));
        self
    }

    pub fn language_of(&self, path: &Path) -> Option<Language> {
        let ext = path.extension()?.to_str()?;
        self.0.get(ext).copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DedupMode {
    #[default]
    ExactHash,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterConfig {
    pub min_tokens: usize,
    pub max_bytes: u64,
    pub require_parse: bool,
    pub dedup: DedupMode,
}

impl Default for FilterConfig {
    fn default() -> Self {
        FilterConfig {
            min_tokens: 100,
            max_bytes: 1_048_576,
            require_parse: true,
            dedup: DedupMode::ExactHash,
        }
    }
}

impl FilterConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_bytes == 0 {
            return Err(Error::InvalidArgument("max_bytes must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DropReason {
    /// Unreadable or binary file.
    Undecodable,
    Duplicate,
    Size,
    Parse,
    MinTokens,
}

impl fmt::Display for DropReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DropReason::Undecodable => "undecodable",
            DropReason::Duplicate => "duplicate",
            DropReason::Size => "size",
            DropReason::Parse => "parse",
            DropReason::MinTokens => "min_tokens",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterDecision {
    Keep,
    Drop(DropReason),
}

#[derive(Debug, Clone, Default)]
pub struct Ingested {
    pub units: Vec<SourceUnit>,
    /// Paths that matched the language map but could not be used.
    pub skipped: Vec<(PathBuf, String)>,
}

/// Walks `root` in path order. Unit ids and origins are paths relative to
/// `root` with `/` separators; the first component names the repository.
pub fn ingest(root: &Path, languages: &LanguageMap) -> Result<Ingested> {
    if !root.is_dir() {
        return Err(Error::RootNotFound(root.to_path_buf()));
    }
    let mut out = Ingested::default();
    for entry in WalkDir::new(root).sort_by_file_name() {
        let entry = match entry {
            Ok(e) => e,
            Err(e) => {
                let path = e.path().map(Path::to_path_buf).unwrap_or_else(|| root.to_path_buf());
                log::warn!("skipping {}: {e}", path.display());
                out.skipped.push((path, e.to_string()));
                continue;
            }
        };
        if !entry.file_type().is_file() {
            continue;
        }
        let path = entry.path();
        let Some(language) = languages.language_of(path) else { continue };
        let rel = relative_id(root, path);
        match std::fs::read(path) {
            Ok(bytes) if bytes.contains(&0) => {
                log::warn!("skipping binary file {rel}");
                out.skipped.push((path.to_path_buf(), "binary content".into()));
            }
            Ok(bytes) => out.units.push(SourceUnit::from_bytes(rel.clone(), language, rel, &bytes)),
            Err(e) => {
                log::warn!("skipping {rel}: {e}");
                out.skipped.push((path.to_path_buf(), e.to_string()));
            }
        }
    }
    Ok(out)
}

fn relative_id(root: &Path, path: &Path) -> String {
    let rel = path.strip_prefix(root).unwrap_or(path);
    rel.components()
        .map(|c| c.as_os_str().to_string_lossy())
        .collect::<Vec<_>>()
        .join("/")
}

/// Repository a unit belongs to: the first component of its origin.
pub fn repo_of(unit: &SourceUnit) -> &str {
    match unit.origin.split_once('/') {
        Some((repo, _)) => repo,
        None => ".",
    }
}

/// SHA-256 over the language name and the text with whitespace runs
/// collapsed to one space and trimmed.
pub fn content_hash(unit: &SourceUnit) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(unit.language.name().as_bytes());
    h.update([0]);
    for (i, word) in unit.text.split_whitespace().enumerate() {
        if i > 0 {
            h.update(b" ");
        }
        h.update(word.as_bytes());
    }
    h.finalize().into()
}

/// Keeps the first unit of each content hash; returns kept units and the
/// number dropped.
pub fn deduplicate(units: Vec<SourceUnit>) -> (Vec<SourceUnit>, usize) {
    let hashes: Vec<[u8; 32]> = units.par_iter().map(content_hash).collect();
    let mut seen = HashSet::with_capacity(units.len());
    let mut kept = Vec::with_capacity(units.len());
    let mut dropped = 0;
    for (unit, hash) in units.into_iter().zip(hashes) {
        if seen.insert(hash) {
            kept.push(unit);
        } else {
            dropped += 1;
        }
    }
    (kept, dropped)
}

/// Size, parse and token-count rules, in that order.
pub fn filter(unit: &SourceUnit, cfg: &FilterConfig) -> FilterDecision {
    evaluate(unit, cfg).0
}

fn evaluate(unit: &SourceUnit, cfg: &FilterConfig) -> (FilterDecision, Option<SyntaxTree>) {
    if unit.byte_len() as u64 >= cfg.max_bytes {
        return (FilterDecision::Drop(DropReason::Size), None);
    }
    let tree = match parse(unit) {
        Ok(t) => t,
        Err(_) => return (FilterDecision::Drop(DropReason::Parse), None),
    };
    if cfg.require_parse && tree.error_count() > 0 {
        return (FilterDecision::Drop(DropReason::Parse), Some(tree));
    }
    match lexical_token_count(unit, &tree) {
        Ok(n) if n > cfg.min_tokens => (FilterDecision::Keep, Some(tree)),
        Ok(_) => (FilterDecision::Drop(DropReason::MinTokens), Some(tree)),
        Err(_) => (FilterDecision::Drop(DropReason::Parse), Some(tree)),
    }
}

fn token_filter(unit: &SourceUnit, cfg: &FilterConfig) -> FilterDecision {
    let count = parse(unit).and_then(|t| lexical_token_count(unit, &t));
    match count {
        Ok(n) if n > cfg.min_tokens => FilterDecision::Keep,
        _ => FilterDecision::Drop(DropReason::MinTokens),
    }
}

/// Functions of the given files, each re-checked against `min_tokens`.
/// Returns kept blocks and the number dropped.
pub fn extract_blocks(units: &[SourceUnit], cfg: &FilterConfig) -> (Vec<SourceUnit>, usize) {
    let per_file: Vec<(Vec<SourceUnit>, usize)> = units
        .par_iter()
        .map(|u| match parse(u) {
            Ok(tree) => filter_blocks(extract_functions(&tree, u), cfg),
            Err(_) => (Vec::new(), 0),
        })
        .collect();
    merge_blocks(per_file)
}

fn filter_blocks(blocks: Vec<SourceUnit>, cfg: &FilterConfig) -> (Vec<SourceUnit>, usize) {
    let total = blocks.len();
    let kept: Vec<SourceUnit> = blocks
        .into_iter()
        .filter(|b| token_filter(b, cfg) == FilterDecision::Keep)
        .collect();
    let dropped = total - kept.len();
    (kept, dropped)
}

fn merge_blocks(per_file: Vec<(Vec<SourceUnit>, usize)>) -> (Vec<SourceUnit>, usize) {
    let mut kept = Vec::new();
    let mut dropped = 0;
    for (blocks, d) in per_file {
        kept.extend(blocks);
        dropped += d;
    }
    (kept, dropped)
}

/// Per-stage counts. Files and blocks each satisfy
/// `in = kept + sum(dropped)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterLedger {
    pub files_in: usize,
    pub files_kept: usize,
    pub files_dropped: BTreeMap<DropReason, usize>,
    pub blocks_in: usize,
    pub blocks_kept: usize,
    pub blocks_dropped: BTreeMap<DropReason, usize>,
}

impl FilterLedger {
    pub fn conserved(&self) -> bool {
        self.files_in == self.files_kept + self.files_dropped.values().sum::<usize>()
            && self.blocks_in == self.blocks_kept + self.blocks_dropped.values().sum::<usize>()
    }
}

/// One row of the report, in the column shape of a published corpus table.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LanguageStats {
    pub repos: usize,
    pub size_bytes: u64,
    pub files: usize,
    pub functions: usize,
}

/// Example row: `{"repos": 3683, "size_bytes": 680000000, "files": 138552,
/// "functions": 359272}` for a full-scale Fortran corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub languages: BTreeMap<String, LanguageStats>,
    pub filter_ledger: FilterLedger,
}

/// Counts over kept files and kept function blocks. Every language appears,
/// with zeros when absent.
pub fn stats(files: &[SourceUnit], blocks: &[SourceUnit], ledger: FilterLedger) -> CorpusStats {
    let mut languages: BTreeMap<String, LanguageStats> = Language::ALL
        .iter()
        .map(|l| (l.name().to_string(), LanguageStats::default()))
        .collect();
    let mut repos: BTreeMap<Language, BTreeSet<&str>> = BTreeMap::new();
    for f in files {
        let row = languages.get_mut(f.language.name()).expect("all languages present");
        row.files += 1;
        row.size_bytes += f.byte_len() as u64;
        repos.entry(f.language).or_default().insert(repo_of(f));
    }
    for b in blocks {
        languages.get_mut(b.language.name()).expect("all languages present").functions += 1;
    }
    for (lang, set) in repos {
        languages.get_mut(lang.name()).expect("all languages present").repos = set.len();
    }
    CorpusStats {
        languages,
        filter_ledger: ledger,
    }
}

#[derive(Debug, Clone)]
pub struct CorpusRun {
    pub files: Vec<SourceUnit>,
    pub blocks: Vec<SourceUnit>,
    pub stats: CorpusStats,
    pub skipped: Vec<(PathBuf, String)>,
}

/// ingest → deduplicate → filter → extract → stats.
pub fn run(root: &Path, languages: &LanguageMap, cfg: &FilterConfig) -> Result<CorpusRun> {
    cfg.validate()?;
    let ingested = ingest(root, languages)?;
    let mut ledger = FilterLedger {
        files_in: ingested.units.len() + ingested.skipped.len(),
        ..FilterLedger::default()
    };
    if !ingested.skipped.is_empty() {
        ledger.files_dropped.insert(DropReason::Undecodable, ingested.skipped.len());
    }
    let (unique, dups) = deduplicate(ingested.units);
    if dups > 0 {
        ledger.files_dropped.insert(DropReason::Duplicate, dups);
    }

    // decision, and for kept files: kept blocks, dropped count, total found
    type Evaluated = (FilterDecision, Option<(Vec<SourceUnit>, usize, usize)>);
    let evaluated: Vec<Evaluated> = unique
        .par_iter()
        .map(|u| {
            let (decision, tree) = evaluate(u, cfg);
            let blocks = match (decision, tree) {
                (FilterDecision::Keep, Some(tree)) => {
                    let found = extract_functions(&tree, u);
                    let total = found.len();
                    let (kept, dropped) = filter_blocks(found, cfg);
                    Some((kept, dropped, total))
                }
                _ => None,
            };
            (decision, blocks)
        })
        .collect();

    let mut files = Vec::new();
    let mut blocks = Vec::new();
    for (unit, (decision, extracted)) in unique.into_iter().zip(evaluated) {
        match decision {
            FilterDecision::Keep => {
                files.push(unit);
                let (kept, dropped, total) = extracted.expect("kept files are extracted");
                ledger.blocks_in += total;
                if dropped > 0 {
                    *ledger.blocks_dropped.entry(DropReason::MinTokens).or_default() += dropped;
                }
                blocks.extend(kept);
            }
            FilterDecision::Drop(reason) => *ledger.files_dropped.entry(reason).or_default() += 1,
        }
    }
    ledger.files_kept = files.len();
    ledger.blocks_kept = blocks.len();
    let stats = stats(&files, &blocks, ledger);
    Ok(CorpusRun {
        files,
        blocks,
        stats,
        skipped: ingested.skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(id: &str, lang: Language, text: &str) -> SourceUnit {
        SourceUnit::new(id, lang, id, text)
    }

    #[test]
    fn ingest_sorted_with_repos() {
        let dir = tempfile::tempdir().unwrap();
        let root = dir.path();
        std::fs::create_dir_all(root.join("repo_b/src")).unwrap();
        std::fs::create_dir_all(root.join("repo_a")).unwrap();
        std::fs::write(root.join("repo_b/src/x.f90"), "x = 1\n").unwrap();
        std::fs::write(root.join("repo_a/y.f90"), "y = 2\n").unwrap();
        std::fs::write(root.join("repo_a/z.c"), "int z;\n").unwrap();
        std::fs::write(root.join("repo_a/README.md"), "# hi\n").unwrap();
        std::fs::write(root.join("repo_a/blob.c"), b"\0\x01").unwrap();
        let got = ingest(root, &LanguageMap::default()).unwrap();
        let ids: Vec<&str> = got.units.iter().map(|u| u.id.as_str()).collect();
        assert_eq!(ids, vec!["repo_a/y.f90", "repo_a/z.c", "repo_b/src/x.f90"]);
        assert_eq!(got.skipped.len(), 1);
        assert_eq!(repo_of(&got.units[2]), "repo_b");

        let empty = tempfile::tempdir().unwrap();
        assert!(ingest(empty.path(), &LanguageMap::default()).unwrap().units.is_empty());
        assert!(matches!(ingest(&root.join("nope"), &LanguageMap::default()), Err(Error::RootNotFound(_))));
    }

    #[test]
    fn dedup_ignores_whitespace_layout() {
        let units = vec![
            unit("a.c", Language::C, "int x;\n"),
            unit("b.c", Language::C, "int x;\n"),
            unit("c.c", Language::C, "int x;\n\n\n"),
            unit("d.c", Language::C, "int   x;"),
            unit("e.cpp", Language::Cpp, "int x;\n"),
            unit("f.c", Language::C, "int y;\n"),
        ];
        let (kept, dropped) = deduplicate(units);
        let ids: Vec<&str> = kept.iter().map(|u| u.id.as_str()).collect();
        assert_eq!(ids, vec!["a.c", "e.cpp", "f.c"]);
        assert_eq!(dropped, 3);
        let (again, none) = deduplicate(kept.clone());
        assert_eq!(again, kept);
        assert_eq!(none, 0);
    }

    #[test]
    fn filter_rules() {
        let cfg = FilterConfig::default();
        let big = unit("big.c", Language::C, &"int x;\n".repeat(300_000));
        assert_eq!(filter(&big, &cfg), FilterDecision::Drop(DropReason::Size));
        let tiny = unit("t.c", Language::C, "int main() { int r[2800 + 1]; }");
        assert_eq!(filter(&tiny, &cfg), FilterDecision::Drop(DropReason::MinTokens));
        let broken = unit("b.c", Language::C, "int f( {");
        assert_eq!(filter(&broken, &cfg), FilterDecision::Drop(DropReason::Parse));
        let lenient = FilterConfig { min_tokens: 0, require_parse: false, ..cfg };
        assert_eq!(filter(&broken, &lenient), FilterDecision::Keep);
    }

    #[test]
    fn blocks_are_refiltered() {
        let body = (0..30).map(|i| format!("  s = s + a[{i}];\n")).collect::<String>();
        let src = format!(
            "double big1(double *a) {{\n  double s = 0;\n{body}  return s;\n}}\n\
             double big2(double *a) {{\n  double s = 1;\n{body}  return s;\n}}\n\
             int tiny(void) {{ return 0; }}\n"
        );
        let file = unit("r/f.c", Language::C, &src);
        let (kept, dropped) = extract_blocks(std::slice::from_ref(&file), &FilterConfig::default());
        assert_eq!(kept.len(), 2);
        assert_eq!(dropped, 1);
        let sample = unit("r/sample.c", Language::C, "int main() { int r[2800 + 1]; }");
        let open = FilterConfig { min_tokens: 0, ..FilterConfig::default() };
        assert_eq!(extract_blocks(&[sample], &open).0.len(), 1);
    }

    #[test]
    fn empty_stats_are_zero() {
        let s = stats(&[], &[], FilterLedger::default());
        assert_eq!(s.languages.len(), 3);
        assert!(s.languages.values().all(|r| *r == LanguageStats::default()));
        let json = serde_json::to_value(&s).unwrap();
        let row = &json["languages"]["Fortran"];
        for key in ["repos", "size_bytes", "files", "functions"] {
            assert!(row.get(key).is_some(), "{key}");
        }
        assert!(json.get("filter_ledger").is_some());
    }
}
