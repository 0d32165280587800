//! Token-count comparison against the BPE baseline and an n-gram
//! perplexity proxy.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bpe::BpeModel;
use crate::error::{Error, Result};
use crate::pipeline::Pipeline;
use crate::unit::SourceUnit;
use crate::vocabulary::{oov_rate, Vocabulary};

pub const TOKOMPILER: &str = "tokompiler";
pub const BPE: &str = "bpe";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TokenizerSummary {
    pub vocab_size: usize,
    pub total_tokens: u64,
    pub mean_tokens_per_unit: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oov_rate: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitRow {
    pub unit_id: String,
    pub tokompiler_count: usize,
    pub bpe_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub tokenizers: BTreeMap<String, TokenizerSummary>,
    pub rows: Vec<UnitRow>,
    /// Total tokompiler tokens over total BPE tokens.
    pub reduction_ratio: Option<f64>,
    /// Units the tokompiler pipeline could not process; left out of `rows`.
    pub failed_units: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized_ppl: Option<BTreeMap<String, PerplexityPair>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerplexityPair {
    pub per_token: f64,
    pub per_source_char: f64,
}

/// Per-unit and total token counts under both tokenizers. With a vocabulary,
/// the tokompiler OOV rate over the same units is reported too.
pub fn compare_token_counts(
    units: &[SourceUnit],
    pipeline: &Pipeline,
    bpe: &BpeModel,
    vocab: Option<&Vocabulary>,
) -> ComparisonReport {
    let results: Vec<(String, Result<Vec<String>>, usize)> = units
        .par_iter()
        .map(|u| {
            let tokens = pipeline
                .tokenize(u)
                .map(|out| out.into_iter().flat_map(|t| t.stream.tokens).collect());
            (u.id.clone(), tokens, bpe.encode(&u.text).len())
        })
        .collect();

    let mut rows = Vec::new();
    let mut failed_units = Vec::new();
    let mut streams = Vec::new();
    for (unit_id, tokens, bpe_count) in results {
        match tokens {
            Ok(tokens) => {
                rows.push(UnitRow {
                    unit_id: unit_id.clone(),
                    tokompiler_count: tokens.len(),
                    bpe_count,
                });
                streams.push(crate::lexicalizer::TokenStream::new(unit_id, tokens));
            }
            Err(e) => {
                log::warn!("{unit_id}: {e}");
                failed_units.push(unit_id);
            }
        }
    }

    let tok_total: u64 = rows.iter().map(|r| r.tokompiler_count as u64).sum();
    let bpe_total: u64 = rows.iter().map(|r| r.bpe_count as u64).sum();
    let mean = |total: u64| if rows.is_empty() { 0.0 } else { total as f64 / rows.len() as f64 };
    let oov = vocab.and_then(|v| oov_rate(v, &streams).ok()).map(|r| r.fraction());

    let mut tokenizers = BTreeMap::new();
    tokenizers.insert(
        TOKOMPILER.to_string(),
        TokenizerSummary {
            vocab_size: vocab.map_or(0, Vocabulary::len),
            total_tokens: tok_total,
            mean_tokens_per_unit: mean(tok_total),
            oov_rate: oov,
        },
    );
    tokenizers.insert(
        BPE.to_string(),
        TokenizerSummary {
            vocab_size: bpe.vocab_size(),
            total_tokens: bpe_total,
            mean_tokens_per_unit: mean(bpe_total),
            oov_rate: Some(0.0),
        },
    );
    ComparisonReport {
        tokenizers,
        reduction_ratio: (bpe_total > 0).then(|| tok_total as f64 / bpe_total as f64),
        rows,
        failed_units,
        normalized_ppl: None,
    }
}

impl ComparisonReport {
    /// Aligned plain-text rendering of the summary and per-unit rows.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<12} {:>10} {:>14} {:>12} {:>10}",
            "tokenizer", "vocab", "total_tokens", "mean/unit", "oov"
        );
        for (name, s) in &self.tokenizers {
            let oov = s.oov_rate.map_or("-".to_string(), |r| format!("{r:.6}"));
            let _ = writeln!(
                out,
                "{:<12} {:>10} {:>14} {:>12.2} {:>10}",
                name, s.vocab_size, s.total_tokens, s.mean_tokens_per_unit, oov
            );
        }
        if let Some(r) = self.reduction_ratio {
            let _ = writeln!(out, "ratio tokompiler/bpe: {r:.4}");
        }
        if let Some(ppl) = &self.normalized_ppl {
            for (name, p) in ppl {
                let _ = writeln!(
                    out,
                    "perplexity {name}: per_token {:.4}, per_source_char {:.4}",
                    p.per_token, p.per_source_char
                );
            }
        }
        let width = self.rows.iter().map(|r| r.unit_id.len()).max().unwrap_or(4).max(4);
        let _ = writeln!(out);
        let _ = writeln!(out, "{:<width$} {:>10} {:>10}", "unit", TOKOMPILER, BPE);
        for r in &self.rows {
            let _ = writeln!(out, "{:<width$} {:>10} {:>10}", r.unit_id, r.tokompiler_count, r.bpe_count);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Normalizer {
    PerToken,
    PerSourceChar,
}

const BOS: u32 = u32::MAX;
const UNK_SYMBOL: u32 = 0;

/// Add-k smoothed n-gram model. The vocabulary is every training token plus
/// one unknown symbol; streams are padded on the left with `n - 1` BOS
/// symbols.
#[derive(Debug, Clone)]
pub struct NgramModel {
    n: usize,
    k: f64,
    symbols: HashMap<String, u32>,
    counts: HashMap<Vec<u32>, HashMap<u32, u64>>,
    totals: HashMap<Vec<u32>, u64>,
}

impl NgramModel {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Vocabulary size including the unknown symbol.
    pub fn vocab_size(&self) -> usize {
        self.symbols.len() + 1
    }

    fn symbol(&self, token: &str) -> u32 {
        self.symbols.get(token).copied().unwrap_or(UNK_SYMBOL)
    }

    /// The last `n - 1` symbols of a BOS-padded history.
    fn context_of<'h>(&self, history: &'h [u32]) -> &'h [u32] {
        &history[history.len() + 1 - self.n..]
    }

    /// Probability of symbol `next` after `context` (exactly `n - 1` symbols).
    fn prob(&self, context: &[u32], next: u32) -> f64 {
        let v = self.vocab_size() as f64;
        let total = self.totals.get(context).copied().unwrap_or(0) as f64;
        let c = self
            .counts
            .get(context)
            .and_then(|m| m.get(&next))
            .copied()
            .unwrap_or(0) as f64;
        (c + self.k) / (total + self.k * v)
    }

    /// Probability of `next` after the given token history.
    pub fn probability(&self, history: &[&str], next: &str) -> f64 {
        let mut padded = vec![BOS; self.n - 1];
        padded.extend(history.iter().map(|t| self.symbol(t)));
        self.prob(self.context_of(&padded), self.symbol(next))
    }

    /// Natural-log likelihood of a whole stream, negated.
    pub fn negative_log_likelihood(&self, tokens: &[String]) -> f64 {
        let mut history = vec![BOS; self.n - 1];
        let mut nll = 0.0;
        for t in tokens {
            let s = self.symbol(t);
            nll -= self.prob(self.context_of(&history), s).ln();
            history.push(s);
        }
        nll
    }
}

pub fn train_ngram(streams: &[Vec<String>], n: usize, k: f64) -> Result<NgramModel> {
    if n == 0 {
        return Err(Error::InvalidArgument("n-gram order must be at least 1".into()));
    }
    if k.is_nan() || k <= 0.0 {
        return Err(Error::InvalidArgument("smoothing k must be positive".into()));
    }
    if streams.iter().all(Vec::is_empty) {
        return Err(Error::EmptyCorpus);
    }
    let mut model = NgramModel {
        n,
        k,
        symbols: HashMap::new(),
        counts: HashMap::new(),
        totals: HashMap::new(),
    };
    let mut sorted: Vec<&String> = streams.iter().flatten().collect();
    sorted.sort_unstable();
    sorted.dedup();
    for (i, t) in sorted.into_iter().enumerate() {
        model.symbols.insert(t.clone(), i as u32 + 1);
    }
    for stream in streams {
        let mut history = vec![BOS; n - 1];
        for t in stream {
            let s = model.symbol(t);
            let context = history[history.len() + 1 - n..].to_vec();
            *model.counts.entry(context.clone()).or_default().entry(s).or_default() += 1;
            *model.totals.entry(context).or_default() += 1;
            history.push(s);
        }
    }
    Ok(model)
}

/// `exp(total NLL / normalizer)`, where the normalizer is the number of
/// tokens or the number of characters of the original sources.
pub fn normalized_perplexity(
    model: &NgramModel,
    held_out: &[(Vec<String>, usize)],
    normalizer: Normalizer,
) -> Result<f64> {
    if held_out.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let nll: f64 = held_out.iter().map(|(t, _)| model.negative_log_likelihood(t)).sum();
    let denom: usize = match normalizer {
        Normalizer::PerToken => held_out.iter().map(|(t, _)| t.len()).sum(),
        Normalizer::PerSourceChar => held_out.iter().map(|(_, c)| *c).sum(),
    };
    if denom == 0 {
        return Err(Error::ZeroNormalizer);
    }
    Ok((nll / denom as f64).exp())
}

/// Every fifth unit (index 4, 9, ...) is held out; the rest train.
pub fn is_held_out(index: usize) -> bool {
    index % 5 == 4
}

/// Trains one n-gram model per tokenizer on the training units and scores the
/// held-out units under both normalizers. Units the tokompiler pipeline
/// rejects are left out of both sides.
pub fn perplexity_comparison(
    units: &[SourceUnit],
    pipeline: &Pipeline,
    bpe: &BpeModel,
    order: usize,
    k: f64,
) -> Result<BTreeMap<String, PerplexityPair>> {
    // tokompiler tokens, BPE ids as words, source chars
    type Streams = (Vec<String>, Vec<String>, usize);
    let streams: Vec<Option<Streams>> = units
        .par_iter()
        .map(|u| {
            let tok: Vec<String> = pipeline
                .tokenize(u)
                .ok()?
                .into_iter()
                .flat_map(|t| t.stream.tokens)
                .collect();
            let ids = bpe.encode(&u.text).into_iter().map(|i| i.to_string()).collect();
            Some((tok, ids, u.text.chars().count()))
        })
        .collect();
    let mut train = (Vec::new(), Vec::new());
    let mut held = (Vec::new(), Vec::new());
    for (i, (tok, ids, chars)) in streams.into_iter().flatten().enumerate() {
        if is_held_out(i) {
            held.0.push((tok, chars));
            held.1.push((ids, chars));
        } else {
            train.0.push(tok);
            train.1.push(ids);
        }
    }
    let mut out = BTreeMap::new();
    for (name, train, held) in [(TOKOMPILER, train.0, held.0), (BPE, train.1, held.1)] {
        let model = train_ngram(&train, order, k)?;
        out.insert(
            name.to_string(),
            PerplexityPair {
                per_token: normalized_perplexity(&model, &held, Normalizer::PerToken)?,
                per_source_char: normalized_perplexity(&model, &held, Normalizer::PerSourceChar)?,
            },
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn toks(s: &str) -> Vec<String> {
        s.split(' ').map(str::to_string).collect()
    }

    #[test]
    fn probabilities_sum_to_one() {
        let m = train_ngram(&[toks("a b a b c"), toks("b c a")], 2, 0.5).unwrap();
        for history in [vec![], vec!["a"], vec!["c"], vec!["zzz"]] {
            let mut sum: f64 = ["a", "b", "c"].iter().map(|t| m.probability(&history, t)).sum();
            sum += m.probability(&history, "<never seen>");
            assert!((sum - 1.0).abs() < 1e-12, "{history:?}: {sum}");
        }
    }

    #[test]
    fn context_is_the_previous_tokens() {
        let m = train_ngram(&[toks("a b a b a b")], 2, 0.01).unwrap();
        assert!(m.probability(&["a"], "b") > 0.9);
        assert!(m.probability(&["b"], "a") > 0.9);
        assert!(m.probability(&[], "a") > 0.9);
        let m = train_ngram(&[toks("a b c a b d")], 3, 0.01).unwrap();
        assert!(m.probability(&["c", "a"], "b") > 0.9);
    }

    #[test]
    fn deterministic_stream_approaches_one() {
        let stream = vec!["x".to_string(); 500];
        let m = train_ngram(std::slice::from_ref(&stream), 1, 1e-9).unwrap();
        let p = normalized_perplexity(&m, &[(stream, 500)], Normalizer::PerToken).unwrap();
        assert!((1.0..1.0001).contains(&p), "{p}");
    }

    #[test]
    fn uniform_stream_gives_vocab_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut draw = |len: usize| -> Vec<String> { (0..len).map(|_| rng.random_range(0..32u32).to_string()).collect() };
        let train = draw(10_000);
        let test = draw(10_000);
        let m = train_ngram(&[train], 1, 0.01).unwrap();
        let p = normalized_perplexity(&m, &[(test, 1)], Normalizer::PerToken).unwrap();
        assert!((p / 32.0 - 1.0).abs() < 0.05, "{p}");
    }

    #[test]
    fn errors() {
        assert!(matches!(train_ngram(&[], 3, 0.01), Err(Error::EmptyCorpus)));
        assert!(train_ngram(&[toks("a")], 0, 0.01).is_err());
        let m = train_ngram(&[toks("a b")], 2, 0.01).unwrap();
        assert!(matches!(normalized_perplexity(&m, &[], Normalizer::PerToken), Err(Error::EmptyCorpus)));
        assert!(matches!(
            normalized_perplexity(&m, &[(vec![], 0)], Normalizer::PerSourceChar),
            Err(Error::ZeroNormalizer)
        ));
    }

    #[test]
    fn per_char_normalizer_ignores_granularity() {
        let m = train_ngram(&[toks("a b c")], 1, 0.01).unwrap();
        let held = vec![(toks("a b"), 10)];
        let nll = m.negative_log_likelihood(&held[0].0);
        let p = normalized_perplexity(&m, &held, Normalizer::PerSourceChar).unwrap();
        assert!((p - (nll / 10.0).exp()).abs() < 1e-12);
    }
}
