//! Frozen values. Set TOKOMPILER_BLESS=1 to rewrite the files under
//! tests/data after an intended change.

mod common;

use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use tokompiler::bpe::train_bpe;
use tokompiler::cli;
use tokompiler::eval::{compare_token_counts, perplexity_comparison};
use tokompiler::lexicalizer::encode;
use tokompiler::vocabulary::{oov_rate, VocabConfig, Vocabulary};
use tokompiler::{Language, Pipeline};

use common::*;

fn blessing() -> bool {
    std::env::var_os("TOKOMPILER_BLESS").is_some()
}

fn check_text(path: &Path, actual: &str) {
    if blessing() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{} differs", path.display());
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

fn assert_json_close(actual: &Value, expected: &Value, at: &str) {
    match (actual, expected) {
        (Value::Number(a), Value::Number(b)) => {
            assert!(close(a.as_f64().unwrap(), b.as_f64().unwrap()), "{at}: {a} vs {b}")
        }
        (Value::Object(a), Value::Object(b)) => {
            assert_eq!(a.keys().collect::<Vec<_>>(), b.keys().collect::<Vec<_>>(), "{at}");
            for (k, v) in a {
                assert_json_close(v, &b[k], &format!("{at}.{k}"));
            }
        }
        (Value::Array(a), Value::Array(b)) => {
            assert_eq!(a.len(), b.len(), "{at}");
            for (i, (x, y)) in a.iter().zip(b).enumerate() {
                assert_json_close(x, y, &format!("{at}[{i}]"));
            }
        }
        _ => assert_eq!(actual, expected, "{at}"),
    }
}

#[test]
fn bpe_matches_reference_trainer() {
    // Expected merges come from tools/bpe_oracle.py over the golden snippets.
    let docs: Vec<String> = golden_units().into_iter().map(|u| u.text).collect();
    let model = train_bpe(&docs, 657, 1.0, 0).unwrap();
    let expected = fs::read_to_string(data_dir().join("bpe_oracle_merges.txt")).unwrap();
    let expected: Vec<&str> = expected.lines().collect();
    let actual: Vec<String> = model
        .merges()
        .iter()
        .map(|&(l, r)| {
            format!("{} {}", hex::encode(model.token_bytes(l).unwrap()), hex::encode(model.token_bytes(r).unwrap()))
        })
        .collect();
    assert_eq!(actual.len(), expected.len());
    for (k, (a, e)) in actual.iter().zip(&expected).enumerate() {
        assert_eq!(a, e, "merge {k}");
    }
}

#[test]
fn bpe_counts_match_reference_encoder() {
    // Counts from `tools/bpe_oracle.py encode` with the model written by
    // `tokompiler bpe-train corpus`.
    let bpe = vendored_bpe();
    assert_eq!(bpe.encode(EXAMPLE).len(), 16);
    let loops = fs::read_to_string(data_dir().join("golden/g22_loops.f90")).unwrap();
    assert_eq!(bpe.encode(&loops).len(), 124);
}

#[test]
fn example_tokenize_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("example.c");
    fs::write(&src, format!("{EXAMPLE}\n")).unwrap();
    let out = dir.path().join("out");
    let code = cli::run(["tokompiler", "tokenize", src.to_str().unwrap(), "--seed", "42", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let golden = data_dir().join("example");
    check_text(&golden.join("tokens.jsonl"), &fs::read_to_string(out.join("tokens.jsonl")).unwrap());
    check_text(&golden.join("dict.json"), &fs::read_to_string(out.join("dicts/000000.json")).unwrap());
}

#[test]
fn corpus_stats_report() {
    let dir = tempfile::tempdir().unwrap();
    let root = corpus_root();
    let code = cli::run(["tokompiler", "corpus", root.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    check_text(&data_dir().join("corpus_stats.json"), &fs::read_to_string(dir.path().join("stats.json")).unwrap());
}

#[test]
fn golden_anonymized_outputs() {
    let pipeline = Pipeline::default();
    let mut out = String::new();
    for unit in golden_units() {
        let t = &pipeline.tokenize(&unit).unwrap()[0];
        out.push_str(&serde_json::to_string(&json!({ "unit_id": unit.id, "normalized": t.normalized })).unwrap());
        out.push('\n');
    }
    check_text(&data_dir().join("golden_anonymized.jsonl"), &out);
}

/// Every number the acceptance criteria report, recomputed.
fn measurements() -> Value {
    let run = vendored_run();
    let pipeline = Pipeline::default();
    let bpe = vendored_bpe();

    let fortran: Vec<_> = run.blocks.iter().filter(|b| b.language == Language::Fortran).cloned().collect();
    let fortran_vocab = Vocabulary::build(&streams(&pipeline, &fortran), &VocabConfig::default()).unwrap();

    let (train, held) = split(&run.blocks);
    let vocab = Vocabulary::build(&streams(&pipeline, &train), &VocabConfig::default()).unwrap();
    let oov = oov_rate(&vocab, &streams(&pipeline, &held)).unwrap();

    let golden = streams(&pipeline, &golden_units());
    let golden_unk: usize = golden.iter().map(|s| encode(s, &fortran_vocab).oov_count()).sum();
    let golden_total: usize = golden.iter().map(|s| s.len()).sum();

    let report = compare_token_counts(&run.blocks, &pipeline, &bpe, None);
    let ppl = perplexity_comparison(&run.blocks, &pipeline, &bpe, 3, 0.01).unwrap();

    json!({
        "vendored_bpe_merges": bpe.merges().len(),
        "vendored_bpe_sha256": hex::encode(Sha256::digest(bpe.to_text().as_bytes())),
        "fortran_vocab_size": fortran_vocab.len(),
        "vocab_size": vocab.len(),
        "held_out_oov": { "oov": oov.oov, "total": oov.total },
        "golden_oov_under_fortran_vocab": { "oov": golden_unk, "total": golden_total },
        "token_totals": {
            "tokompiler": report.tokenizers["tokompiler"].total_tokens,
            "bpe": report.tokenizers["bpe"].total_tokens,
        },
        "perplexity": serde_json::to_value(&ppl).unwrap(),
    })
}

#[test]
fn frozen_measurements() {
    let actual = measurements();
    let path = data_dir().join("frozen.json");
    if blessing() {
        fs::write(&path, serde_json::to_string_pretty(&actual).unwrap() + "\n").unwrap();
        return;
    }
    let expected: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_json_close(&actual, &expected, "frozen");
}
