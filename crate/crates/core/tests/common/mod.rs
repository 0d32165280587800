#![allow(dead_code)]

use std::path::{Path, PathBuf};

use tokompiler::corpus::{self, CorpusRun, FilterConfig, LanguageMap};
use tokompiler::Language;

pub fn corpus_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

pub fn vendored_run() -> CorpusRun {
    corpus::run(&corpus_root(), &LanguageMap::default(), &FilterConfig::default()).unwrap()
}

pub const EXAMPLE: &str = "int main() { int r[2800 + 1]; }";

/// Lexemes of `text` with comments removed, from a scanner that shares no
/// code with the library.
pub fn oracle_lexemes(language: Language, text: &str) -> Vec<String> {
    match language {
        Language::C | Language::Cpp => c_lexemes(text),
        Language::Fortran => fortran_lexemes(text),
    }
}

const C_PUNCT: &[&str] = &[
    ">>=", "<<=", "...", "->*", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "::", ".*", "##",
];

fn c_lexemes(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let n = chars.len();
    let mut out = Vec::new();
    let mut i = 0;
    let slice = |a: usize, b: usize| chars[a..b].iter().collect::<String>();
    while i < n {
        let c = chars[i];
        if c == '\\' && i + 1 < n && chars[i + 1] == '\n' {
            i += 2;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '/' && i + 1 < n && chars[i + 1] == '/' {
            while i < n && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c == '/' && i + 1 < n && chars[i + 1] == '*' {
            i += 2;
            while i + 1 < n && !(chars[i] == '*' && chars[i + 1] == '/') {
                i += 1;
            }
            i += 2;
            continue;
        }
        if c == '#' && !(i + 1 < n && chars[i + 1] == '#') {
            let mut j = i + 1;
            while j < n && (chars[j] == ' ' || chars[j] == '\t') {
                j += 1;
            }
            let k0 = j;
            while j < n && chars[j].is_alphanumeric() {
                j += 1;
            }
            let name = slice(k0, j);
            out.push(format!("#{name}"));
            i = j;
            if name == "include" {
                while i < n && (chars[i] == ' ' || chars[i] == '\t') {
                    i += 1;
                }
                if i < n && chars[i] == '<' {
                    let mut j = i;
                    while j < n && chars[j] != '>' && chars[j] != '\n' {
                        j += 1;
                    }
                    out.push(slice(i, j + 1));
                    i = j + 1;
                }
            }
            continue;
        }
        // String and character literals, with an optional encoding prefix.
        let mut p = i;
        while p < n && p - i < 2 && matches!(chars[p], 'L' | 'u' | 'U' | '8') {
            p += 1;
        }
        if p < n && (chars[p] == '"' || chars[p] == '\'') && (p == i || !chars[i].is_ascii_digit()) {
            let q = chars[p];
            let mut j = p + 1;
            while j < n && chars[j] != q {
                if chars[j] == '\\' {
                    j += 1;
                }
                j += 1;
            }
            out.push(slice(i, j + 1));
            i = j + 1;
            continue;
        }
        if c.is_ascii_digit() || (c == '.' && i + 1 < n && chars[i + 1].is_ascii_digit()) {
            let mut j = i + 1;
            while j < n {
                let d = chars[j];
                let exponent_sign = matches!(d, '+' | '-') && matches!(chars[j - 1], 'e' | 'E' | 'p' | 'P');
                if !(exponent_sign || d.is_alphanumeric() || d == '.' || d == '_' || d == '\'') {
                    break;
                }
                j += 1;
            }
            out.push(slice(i, j));
            i = j;
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut j = i;
            while j < n && (chars[j].is_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            out.push(slice(i, j));
            i = j;
            continue;
        }
        let rest = slice(i, (i + 3).min(n));
        let len = C_PUNCT
            .iter()
            .find(|p| rest.starts_with(**p))
            .map_or(1, |p| p.chars().count());
        out.push(slice(i, i + len));
        i += len;
    }
    out
}

const F_PUNCT: &[&str] = &["**", "//", "==", "/=", "<=", ">=", "=>", "::"];

fn fortran_lexemes(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let n = chars.len();
    let mut out = Vec::new();
    let mut i = 0;
    let slice = |a: usize, b: usize| chars[a..b].iter().collect::<String>();
    while i < n {
        let c = chars[i];
        if c.is_whitespace() || c == '&' {
            i += 1;
            continue;
        }
        if c == '!' {
            while i < n && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c == '\'' || c == '"' {
            let mut j = i + 1;
            while j < n {
                if chars[j] == c {
                    if j + 1 < n && chars[j + 1] == c {
                        j += 2;
                        continue;
                    }
                    break;
                }
                j += 1;
            }
            out.push(slice(i, j + 1));
            i = j + 1;
            continue;
        }
        if c == '.' {
            let mut j = i + 1;
            while j < n && chars[j].is_ascii_alphabetic() {
                j += 1;
            }
            if j > i + 1 && j < n && chars[j] == '.' {
                out.push(slice(i, j + 1));
                i = j + 1;
                continue;
            }
        }
        if c.is_ascii_digit() || (c == '.' && i + 1 < n && chars[i + 1].is_ascii_digit()) {
            let mut j = i;
            while j < n && chars[j].is_ascii_digit() {
                j += 1;
            }
            if j < n && chars[j] == '.' {
                let mut k = j + 1;
                while k < n && chars[k].is_ascii_alphabetic() {
                    k += 1;
                }
                let dot_op = k > j + 1 && k < n && chars[k] == '.';
                if !dot_op {
                    j += 1;
                    while j < n && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                }
            }
            if j + 1 < n && "eEdD".contains(chars[j]) {
                let mut k = j + 1;
                if chars[k] == '+' || chars[k] == '-' {
                    k += 1;
                }
                if k < n && chars[k].is_ascii_digit() {
                    j = k;
                    while j < n && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                }
            }
            if j + 1 < n && chars[j] == '_' && chars[j + 1].is_ascii_alphanumeric() {
                j += 1;
                while j < n && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
            }
            out.push(slice(i, j));
            i = j;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < n && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            out.push(slice(i, j));
            i = j;
            continue;
        }
        let rest = slice(i, (i + 2).min(n));
        let len = if F_PUNCT.contains(&rest.as_str()) { 2 } else { 1 };
        out.push(slice(i, i + len));
        i += len;
    }
    out
}

/// The 50 golden snippets, in file name order.
pub fn golden_units() -> Vec<tokompiler::SourceUnit> {
    let mut paths: Vec<_> = std::fs::read_dir(data_dir().join("golden"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            let text = std::fs::read_to_string(&p).unwrap();
            tokompiler::SourceUnit::new(name.clone(), Language::from_path(&p).unwrap(), name, text)
        })
        .collect()
}

/// Oracle lexemes of the unit and of its tokenize → restore image.
pub fn round_trip(pipeline: &tokompiler::Pipeline, unit: &tokompiler::SourceUnit) -> (Vec<String>, Vec<String>) {
    let out = pipeline.tokenize(unit).unwrap_or_else(|e| panic!("{}: {e}", unit.id));
    let mut restored = Vec::new();
    for t in &out {
        let text = tokompiler::anonymizer::restore(&t.stream, &t.anonymized.dictionary).unwrap();
        restored.extend(oracle_lexemes(unit.language, &text));
    }
    (oracle_lexemes(unit.language, &unit.text), restored)
}

/// The baseline as `tokompiler bpe-train corpus` builds it: every ingested
/// file, default target size, sample fraction and seed.
pub fn vendored_bpe() -> tokompiler::bpe::BpeModel {
    use tokompiler::bpe::{train_bpe, DEFAULT_SAMPLE_FRACTION, DEFAULT_TARGET_SIZE};
    let ingested = corpus::ingest(&corpus_root(), &LanguageMap::default()).unwrap();
    let docs: Vec<&str> = ingested.units.iter().map(|u| u.text.as_str()).collect();
    train_bpe(&docs, DEFAULT_TARGET_SIZE, DEFAULT_SAMPLE_FRACTION, tokompiler::anonymizer::DEFAULT_SEED).unwrap()
}

pub fn streams(pipeline: &tokompiler::Pipeline, units: &[tokompiler::SourceUnit]) -> Vec<tokompiler::lexicalizer::TokenStream> {
    units
        .iter()
        .flat_map(|u| pipeline.tokenize(u).unwrap())
        .map(|t| t.stream)
        .collect()
}

/// Train and held-out halves of the vendored functions.
pub fn split(units: &[tokompiler::SourceUnit]) -> (Vec<tokompiler::SourceUnit>, Vec<tokompiler::SourceUnit>) {
    let (held, train): (Vec<_>, Vec<_>) = units
        .iter()
        .cloned()
        .enumerate()
        .partition(|(i, _)| tokompiler::eval::is_held_out(*i));
    (train.into_iter().map(|p| p.1).collect(), held.into_iter().map(|p| p.1).collect())
}
