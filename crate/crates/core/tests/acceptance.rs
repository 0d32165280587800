//! Runs acceptance criteria 1-9 and prints one PASS/FAIL line for each.
//!
//! Criteria listed in `EXPECTED_RED` are reported but do not fail the test;
//! the README explains why each one is red. Any other failure fails the
//! test, and so does an expected-red criterion that starts passing (so the
//! list cannot go stale).

mod common;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use sha2::{Digest, Sha256};
use tokompiler::bpe::{train_bpe, DEFAULT_TARGET_SIZE};
use tokompiler::corpus::{deduplicate, DropReason};
use tokompiler::eval::{compare_token_counts, normalized_perplexity, perplexity_comparison, train_ngram, Normalizer};
use tokompiler::vocabulary::{oov_rate, VocabConfig, Vocabulary};
use tokompiler::{cli, Language, Pipeline};

use common::*;

const EXPECTED_RED: &[u32] = &[5];

struct Outcome {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let run = vendored_run();
    let pipeline = Pipeline::default();
    let failures: Vec<&str> = run
        .blocks
        .iter()
        .filter(|b| {
            let (original, restored) = round_trip(&pipeline, b);
            original != restored
        })
        .map(|b| b.id.as_str())
        .collect();
    let secs = start.elapsed().as_secs_f64();
    let n = run.blocks.len();
    Outcome {
        id: 1,
        name: "round-trip fidelity",
        pass: n >= 1000 && failures.is_empty() && secs < 120.0,
        detail: format!("{} of {n} functions restored, {} failures, {secs:.1} s", n - failures.len(), failures.len()),
    }
}

fn criterion_2() -> Outcome {
    let unit = tokompiler::SourceUnit::new("example.c", Language::C, "example.c", EXAMPLE);
    let out = &Pipeline::default().tokenize(&unit).unwrap()[0];
    let shape = regex::Regex::new(r"^int func_\d+ \( \) \{ int arr_\d+ \[ num_\d+ \+ num_\d+ \] ; \}$").unwrap();
    let t = &out.stream.tokens;
    let prefix_ok = t.len() > 7
        && t[0] == "int"
        && t[1] == "func"
        && t[2].bytes().all(|b| b.is_ascii_digit())
        && t[3..7] == ["(", ")", "{", "int"];
    Outcome {
        id: 2,
        name: "example snippet",
        pass: shape.is_match(&out.normalized) && prefix_ok,
        detail: format!("{:?}; stream starts {:?}", out.normalized, &t[..7.min(t.len())]),
    }
}

fn criterion_3() -> Outcome {
    let run = vendored_run();
    let pipeline = Pipeline::default();
    let fortran: Vec<_> = run.blocks.iter().filter(|b| b.language == Language::Fortran).cloned().collect();
    let vocab = Vocabulary::build(&streams(&pipeline, &fortran), &VocabConfig::default()).unwrap();
    let bpe = vendored_bpe();
    Outcome {
        id: 3,
        name: "vocabulary size",
        pass: vocab.len() <= 2000 && bpe.target_size() == DEFAULT_TARGET_SIZE && vocab.len() < bpe.vocab_size(),
        detail: format!(
            "Fortran vocabulary {} tokens over {} functions; BPE target {}, learned {} before running out of pairs",
            vocab.len(),
            fortran.len(),
            bpe.target_size(),
            bpe.vocab_size()
        ),
    }
}

fn criterion_4() -> Outcome {
    let run = vendored_run();
    let pipeline = Pipeline::default();
    let (train, held) = split(&run.blocks);
    let vocab = Vocabulary::build(&streams(&pipeline, &train), &VocabConfig::default()).unwrap();
    let rate = oov_rate(&vocab, &streams(&pipeline, &held)).unwrap();
    Outcome {
        id: 4,
        name: "OOV rate",
        pass: rate.fraction() < 0.01,
        detail: format!("held-out {} ({} train / {} held-out functions)", rate, train.len(), held.len()),
    }
}

fn criterion_5() -> Outcome {
    let run = vendored_run();
    let pipeline = Pipeline::default();
    let bpe = vendored_bpe();
    let report = compare_token_counts(&run.blocks, &pipeline, &bpe, None);
    let ratio = report.reduction_ratio.unwrap();
    let unit = tokompiler::SourceUnit::new("example.c", Language::C, "example.c", EXAMPLE);
    let ex_tok = pipeline.tokenize(&unit).unwrap()[0].stream.len();
    let ex_bpe = bpe.encode(EXAMPLE).len();
    Outcome {
        id: 5,
        name: "token-count reduction",
        pass: ratio < 1.0 && ex_tok < ex_bpe,
        detail: format!(
            "aggregate ratio {ratio:.4} ({} vs {} tokens, {}); example snippet {ex_tok} vs {ex_bpe} BPE tokens ({})",
            report.tokenizers["tokompiler"].total_tokens,
            report.tokenizers["bpe"].total_tokens,
            if ratio < 1.0 { "ok" } else { "not below 1" },
            if ex_tok < ex_bpe { "ok" } else { "not fewer" },
        ),
    }
}

fn files_under(root: &Path) -> BTreeMap<PathBuf, Vec<u8>> {
    walkdir::WalkDir::new(root)
        .sort_by_file_name()
        .into_iter()
        .map(Result::unwrap)
        .filter(|e| e.file_type().is_file())
        .map(|e| (e.path().strip_prefix(root).unwrap().to_path_buf(), fs::read(e.path()).unwrap()))
        .collect()
}

fn cli_session(out: &Path, jobs: &str, seed: &str) -> Vec<i32> {
    let root = corpus_root();
    let root = root.to_str().unwrap();
    let p = |rel: &str| out.join(rel).to_str().unwrap().to_string();
    let blocks = p("corpus/blocks.jsonl");
    let commands: Vec<Vec<String>> = vec![
        vec!["corpus", root, "--out", &p("corpus"), "--jobs", jobs],
        vec!["bpe-train", root, "--out", &p("bpe.txt"), "--seed", seed, "--jobs", jobs],
        vec!["vocab", &blocks, "--out", &p("vocab.txt"), "--seed", seed, "--jobs", jobs],
        vec!["tokenize", &blocks, "--vocab", &p("vocab.txt"), "--out", &p("tok"), "--seed", seed, "--jobs", jobs],
        vec!["tokenize", root, "--scope", "function", "--out", &p("tok_fn"), "--seed", seed, "--jobs", jobs],
        vec!["restore", &p("tok/tokens.jsonl"), "--out", &p("restored.jsonl")],
        vec![
            "compare", &blocks, "--bpe", &p("bpe.txt"), "--vocab", &p("vocab.txt"), "--perplexity", "--out",
            &p("cmp"), "--seed", seed, "--jobs", jobs,
        ],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(str::to_string).collect())
    .collect();
    commands
        .into_iter()
        .map(|args| cli::run(std::iter::once("tokompiler".to_string()).chain(args)))
        .collect()
}

fn criterion_6() -> Outcome {
    let before: Vec<u8> = Sha256::digest(format!("{:?}", files_under(&corpus_root()))).to_vec();
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let codes_a = cli_session(&a, "1", "42");
    let codes_b = cli_session(&b, "4", "42");
    let fa = files_under(&a);
    let fb = files_under(&b);
    let identical = fa == fb;
    let untouched = before == Sha256::digest(format!("{:?}", files_under(&corpus_root()))).to_vec();

    // Different seeds on units with several identifiers.
    let run = vendored_run();
    let mut units: Vec<_> = golden_units();
    units.extend(run.blocks.iter().cloned());
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut multi = 0;
    let mut differ = 0;
    for trial in 0..1000 {
        let unit = &units[trial % units.len()];
        let s1: u64 = rng.random();
        let s2: u64 = rng.random();
        let d1 = &Pipeline { seed: s1, ..Pipeline::default() }.tokenize(unit).unwrap()[0].anonymized.dictionary;
        if d1.len() < 2 {
            continue;
        }
        let d2 = &Pipeline { seed: s2, ..Pipeline::default() }.tokenize(unit).unwrap()[0].anonymized.dictionary;
        multi += 1;
        let r1: Vec<_> = d1.entries().iter().map(|e| &e.replacement).collect();
        let r2: Vec<_> = d2.entries().iter().map(|e| &e.replacement).collect();
        if r1 != r2 {
            differ += 1;
        }
    }
    let share = differ as f64 / multi as f64;
    let codes_ok = codes_a.iter().chain(&codes_b).all(|&c| c == 0);
    Outcome {
        id: 6,
        name: "determinism",
        pass: codes_ok && identical && untouched && !fa.is_empty() && multi >= 990 && share >= 0.99,
        detail: format!(
            "{} artifacts byte-identical across --jobs 1/4: {identical}; inputs untouched: {untouched}; exit codes {:?}; \
             seeds differ on {differ}/{multi} multi-identifier trials ({:.1}%)",
            fa.len(),
            codes_a,
            share * 100.0
        ),
    }
}

fn criterion_7() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for v in [2u32, 8, 32, 64] {
        let mut draw = |n: usize| -> Vec<String> { (0..n).map(|_| rng.random_range(0..v).to_string()).collect() };
        let train = draw(10_000);
        let test = draw(10_000);
        let model = train_ngram(&[train], 1, 0.01).unwrap();
        let p = normalized_perplexity(&model, &[(test, 1)], Normalizer::PerToken).unwrap();
        let good = (p / v as f64 - 1.0).abs() < 0.05;
        ok &= good;
        notes.push(format!("V={v}: {p:.2}"));
    }

    let run = vendored_run();
    let pipeline = Pipeline::default();
    let bpe = vendored_bpe();
    let ppl = perplexity_comparison(&run.blocks, &pipeline, &bpe, 3, 0.01).unwrap();
    let all_at_least_one = ppl.values().all(|p| p.per_token >= 1.0 && p.per_source_char >= 1.0);
    ok &= all_at_least_one;

    let frozen: Value = serde_json::from_str(&fs::read_to_string(data_dir().join("frozen.json")).unwrap()).unwrap();
    let matches_frozen = ppl.iter().all(|(name, p)| {
        let f = &frozen["perplexity"][name];
        let close = |a: f64, b: &Value| (a - b.as_f64().unwrap()).abs() <= 1e-9 * a.max(1.0);
        close(p.per_token, &f["per_token"]) && close(p.per_source_char, &f["per_source_char"])
    });
    ok &= matches_frozen;

    Outcome {
        id: 7,
        name: "n-gram perplexity proxy",
        pass: ok,
        detail: format!(
            "uniform {}; all >= 1: {all_at_least_one}; per-source-char tokompiler {:.4} vs bpe {:.4}, matches frozen: {matches_frozen}",
            notes.join(", "),
            ppl["tokompiler"].per_source_char,
            ppl["bpe"].per_source_char
        ),
    }
}

fn criterion_8() -> Outcome {
    let run = vendored_run();
    let docs: Vec<&str> = run.files.iter().map(|u| u.text.as_str()).collect();
    let model = train_bpe(&docs, 3000, 0.2, 8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut lossless = 0;
    for _ in 0..10_000 {
        let len = rng.random_range(0..96);
        let bytes: Vec<u8> = (0..len).map(|_| rng.random()).collect();
        if model.decode(&model.encode_bytes(&bytes)).unwrap() == bytes {
            lossless += 1;
        }
    }

    let merged = |m: &tokompiler::bpe::BpeModel| -> Vec<String> {
        (0..m.merges().len())
            .map(|k| String::from_utf8_lossy(m.token_bytes(257 + k as u32 - 1).unwrap()).into_owned())
            .collect()
    };
    let hand = [
        merged(&train_bpe(&["aaaa"], 260, 1.0, 0).unwrap()).first() == Some(&"aa".to_string()),
        merged(&train_bpe(&["abab abab"], 1000, 1.0, 0).unwrap()) == ["ab", "abab"],
        // tie between (c,d), (d,a) and (a,b): smallest bytes first
        merged(&train_bpe(&["cdab", "cdab"], 1000, 1.0, 0).unwrap()).first() == Some(&"ab".to_string()),
    ];
    let hand_ok = hand.iter().all(|&b| b);
    Outcome {
        id: 8,
        name: "BPE correctness",
        pass: lossless == 10_000 && hand_ok,
        detail: format!("{lossless}/10000 random byte strings lossless; hand-simulated merge tables {hand:?}"),
    }
}

fn criterion_9() -> Outcome {
    let run = vendored_run();
    let l = &run.stats.filter_ledger;
    let dropped_files: usize = l.files_dropped.values().sum();
    let dropped_blocks: usize = l.blocks_dropped.values().sum();
    let conserved = l.conserved()
        && l.files_in == l.files_kept + dropped_files
        && l.blocks_in == l.blocks_kept + dropped_blocks;
    let (again, removed) = deduplicate(run.files.clone());
    let idempotent = removed == 0 && again == run.files;
    let json = serde_json::to_value(&run.stats).unwrap();
    let schema = ["C", "C++", "Fortran"].iter().all(|lang| {
        json["languages"][lang]
            .as_object()
            .is_some_and(|o| o.keys().map(String::as_str).collect::<Vec<_>>() == ["files", "functions", "repos", "size_bytes"])
    });
    let reasons = [DropReason::Undecodable, DropReason::Duplicate, DropReason::Parse, DropReason::MinTokens]
        .iter()
        .filter(|r| l.files_dropped.contains_key(r))
        .count();
    Outcome {
        id: 9,
        name: "corpus pipeline",
        pass: conserved && idempotent && schema,
        detail: format!(
            "files {} = {} kept + {dropped_files} dropped ({reasons} reasons seen), blocks {} = {} + {dropped_blocks}; \
             dedup idempotent: {idempotent}; schema per language: {schema}",
            l.files_in, l.files_kept, l.blocks_in, l.blocks_kept
        ),
    }
}

fn main() {
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ];
    let mut unexpected = Vec::new();
    for o in &outcomes {
        let red = EXPECTED_RED.contains(&o.id);
        let note = if red && !o.pass { " (expected, see README)" } else { "" };
        println!("criterion {}: {} [{}] {}{note}", o.id, if o.pass { "PASS" } else { "FAIL" }, o.name, o.detail);
        if o.pass == red {
            unexpected.push(o.id);
        }
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("acceptance: {passed} of {} criteria pass, expected red {EXPECTED_RED:?}", outcomes.len());
    if !unexpected.is_empty() {
        eprintln!("criteria with an unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}
