//! Byte-level BPE baseline: trainer, encoder, decoder and model file.
//!
//! Text is first cut into chunks (letter runs, digit runs, punctuation runs
//! and whitespace, a single space sticking to the chunk after it), so merges
//! never cross chunk boundaries. Pairs are counted with overlaps inside each
//! chunk; ties on count go to the pair whose left then right bytes sort
//! first. Training stops at the target size or when no pair occurs twice.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub const END_OF_TEXT: &str = "<|endoftext|>";
pub const DEFAULT_TARGET_SIZE: usize = 50_000;
pub const DEFAULT_SAMPLE_FRACTION: f64 = 0.05;
const BASE: usize = 256;
const HEADER: &str = "tokompiler-bpe v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Letter,
    Digit,
    Space,
    Other,
}

fn class(c: char) -> Class {
    if c.is_alphabetic() {
        Class::Letter
    } else if c.is_numeric() {
        Class::Digit
    } else if c.is_whitespace() {
        Class::Space
    } else {
        Class::Other
    }
}

/// Splits text into the chunks merges are confined to. Concatenating the
/// chunks gives back the input.
pub fn pretokenize(text: &str) -> Vec<&str> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let start = chars[i].0;
        let c = class(chars[i].1);
        let mut j = i + 1;
        if c == Class::Space {
            while j < chars.len() && class(chars[j].1) == Class::Space {
                j += 1;
            }
            // A trailing ' ' before a non-space belongs to the next chunk.
            if j < chars.len() && chars[j - 1].1 == ' ' {
                if j - 1 > i {
                    out.push(&text[start..chars[j - 1].0]);
                }
                let lead = chars[j - 1].0;
                let next = class(chars[j].1);
                let mut k = j + 1;
                while k < chars.len() && class(chars[k].1) == next {
                    k += 1;
                }
                let end = chars.get(k).map_or(text.len(), |p| p.0);
                out.push(&text[lead..end]);
                i = k;
                continue;
            }
        } else {
            while j < chars.len() && class(chars[j].1) == c {
                j += 1;
            }
        }
        let end = chars.get(j).map_or(text.len(), |p| p.0);
        out.push(&text[start..end]);
        i = j;
    }
    out
}

#[derive(Debug, Clone)]
pub struct BpeModel {
    target_size: usize,
    seed: u64,
    sample_fraction: f64,
    merges: Vec<(u32, u32)>,
    /// Bytes of every symbol: 256 single bytes, then one per merge.
    symbols: Vec<Vec<u8>>,
    ranks: HashMap<(u32, u32), u32>,
}

impl PartialEq for BpeModel {
    fn eq(&self, other: &Self) -> bool {
        self.target_size == other.target_size
            && self.seed == other.seed
            && self.sample_fraction.to_bits() == other.sample_fraction.to_bits()
            && self.merges == other.merges
    }
}

impl BpeModel {
    fn from_merges(target_size: usize, seed: u64, sample_fraction: f64, merges: Vec<(u32, u32)>) -> Result<Self> {
        let mut symbols: Vec<Vec<u8>> = (0..=255u8).map(|b| vec![b]).collect();
        let mut ranks = HashMap::with_capacity(merges.len());
        for (rank, &(l, r)) in merges.iter().enumerate() {
            let known = symbols.len() as u32;
            if l >= known || r >= known {
                return Err(Error::MalformedModelFile(format!("merge {rank} refers to an unknown symbol")));
            }
            let mut bytes = symbols[l as usize].clone();
            bytes.extend_from_slice(&symbols[r as usize]);
            symbols.push(bytes);
            ranks.entry((l, r)).or_insert(rank as u32);
        }
        Ok(BpeModel {
            target_size,
            seed,
            sample_fraction,
            merges,
            symbols,
            ranks,
        })
    }

    pub fn merges(&self) -> &[(u32, u32)] {
        &self.merges
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Byte symbols, merged symbols and the end-of-text special.
    pub fn vocab_size(&self) -> usize {
        self.symbols.len() + 1
    }

    pub fn end_of_text_id(&self) -> u32 {
        self.symbols.len() as u32
    }

    pub fn token_bytes(&self, id: u32) -> Option<&[u8]> {
        self.symbols.get(id as usize).map(Vec::as_slice)
    }

    /// Keeps only the first `n` merges.
    pub fn truncated(&self, n: usize) -> BpeModel {
        let n = n.min(self.merges.len());
        BpeModel::from_merges(BASE + n + 1, self.seed, self.sample_fraction, self.merges[..n].to_vec())
            .expect("a prefix of valid merges is valid")
    }

    fn encode_chunk(&self, chunk: &[u8], out: &mut Vec<u32>) {
        let mut syms: Vec<u32> = chunk.iter().map(|&b| b as u32).collect();
        loop {
            let best = syms
                .windows(2)
                .filter_map(|w| self.ranks.get(&(w[0], w[1])).map(|&r| (r, (w[0], w[1]))))
                .min();
            let Some((rank, pair)) = best else { break };
            let merged = BASE as u32 + rank;
            let mut next = Vec::with_capacity(syms.len());
            let mut i = 0;
            while i < syms.len() {
                if i + 1 < syms.len() && (syms[i], syms[i + 1]) == pair {
                    next.push(merged);
                    i += 2;
                } else {
                    next.push(syms[i]);
                    i += 1;
                }
            }
            syms = next;
        }
        out.extend(syms);
    }

    pub fn encode(&self, text: &str) -> Vec<u32> {
        let mut out = Vec::new();
        let mut cache: HashMap<&str, std::ops::Range<usize>> = HashMap::new();
        for chunk in pretokenize(text) {
            if let Some(r) = cache.get(chunk) {
                out.extend_from_within(r.clone());
                continue;
            }
            let start = out.len();
            self.encode_chunk(chunk.as_bytes(), &mut out);
            cache.insert(chunk, start..out.len());
        }
        out
    }

    /// Encodes arbitrary bytes: valid UTF-8 stretches as in `encode`, each
    /// invalid stretch as one chunk of its own.
    pub fn encode_bytes(&self, bytes: &[u8]) -> Vec<u32> {
        let mut out = Vec::new();
        for piece in bytes.utf8_chunks() {
            out.extend(self.encode(piece.valid()));
            if !piece.invalid().is_empty() {
                self.encode_chunk(piece.invalid(), &mut out);
            }
        }
        out
    }

    pub fn decode(&self, ids: &[u32]) -> Result<Vec<u8>> {
        let mut out = Vec::new();
        for &id in ids {
            if id == self.end_of_text_id() {
                out.extend_from_slice(END_OF_TEXT.as_bytes());
                continue;
            }
            let bytes = self
                .token_bytes(id)
                .ok_or(Error::IdOutOfRange { id, size: self.vocab_size() })?;
            out.extend_from_slice(bytes);
        }
        Ok(out)
    }

    /// Header lines, then one merge per line: left id, right id, merged bytes
    /// in hex.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{HEADER}");
        let _ = writeln!(out, "target_size {}", self.target_size);
        let _ = writeln!(out, "seed {}", self.seed);
        let _ = writeln!(out, "sample_fraction {}", self.sample_fraction);
        let _ = writeln!(out, "merges {}", self.merges.len());
        for (k, &(l, r)) in self.merges.iter().enumerate() {
            let _ = writeln!(out, "{l} {r} {}", hex::encode(&self.symbols[BASE + k]));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::MalformedModelFile(m.to_string());
        let mut lines = text.lines();
        if lines.next() != Some(HEADER) {
            return Err(bad("missing header"));
        }
        let mut field = |name: &str| -> Result<String> {
            let line = lines.next().ok_or_else(|| bad(&format!("missing `{name}`")))?;
            line.strip_prefix(name)
                .and_then(|v| v.strip_prefix(' '))
                .map(str::to_string)
                .ok_or_else(|| bad(&format!("expected `{name}`, got `{line}`")))
        };
        let target_size: usize = field("target_size")?.parse().map_err(|_| bad("target_size"))?;
        let seed: u64 = field("seed")?.parse().map_err(|_| bad("seed"))?;
        let sample_fraction: f64 = field("sample_fraction")?.parse().map_err(|_| bad("sample_fraction"))?;
        let count: usize = field("merges")?.parse().map_err(|_| bad("merges"))?;
        let mut merges = Vec::with_capacity(count);
        let mut hexes = Vec::with_capacity(count);
        for line in lines.by_ref().take(count) {
            let mut parts = line.split(' ');
            let (Some(l), Some(r), Some(h), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
                return Err(bad(&format!("bad merge line `{line}`")));
            };
            let l: u32 = l.parse().map_err(|_| bad(line))?;
            let r: u32 = r.parse().map_err(|_| bad(line))?;
            merges.push((l, r));
            hexes.push(hex::decode(h).map_err(|_| bad(line))?);
        }
        if merges.len() != count || lines.next().is_some() {
            return Err(bad("merge count does not match the header"));
        }
        let model = BpeModel::from_merges(target_size, seed, sample_fraction, merges)?;
        for (k, h) in hexes.iter().enumerate() {
            if &model.symbols[BASE + k] != h {
                return Err(bad(&format!("merge {k} bytes do not match its pair")));
            }
        }
        Ok(model)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        crate::fsutil::write_atomic(path, self.to_text().as_bytes())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        BpeModel::from_text(&text)
    }
}

/// Documents kept for training: each is kept with probability
/// `sample_fraction`; if none survives, one is drawn at random.
pub fn sample_documents<'a>(docs: &[&'a str], sample_fraction: f64, seed: u64) -> Vec<&'a str> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kept: Vec<&str> = docs
        .iter()
        .copied()
        .filter(|_| rng.random::<f64>() < sample_fraction)
        .collect();
    if kept.is_empty() && !docs.is_empty() {
        kept.push(docs[rng.random_range(0..docs.len())]);
    }
    kept
}

/// Heap entry: highest count first, then the smallest (left, right) bytes.
#[derive(PartialEq, Eq)]
struct Candidate {
    count: i64,
    key: Reverse<(Vec<u8>, Vec<u8>)>,
    pair: (u32, u32),
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.count, &self.key).cmp(&(other.count, &other.key))
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Trainer {
    words: Vec<Vec<u32>>,
    freqs: Vec<i64>,
    symbols: Vec<Vec<u8>>,
    counts: HashMap<(u32, u32), i64>,
    locations: HashMap<(u32, u32), HashSet<usize>>,
    heap: BinaryHeap<Candidate>,
}

impl Trainer {
    fn candidate(&self, pair: (u32, u32), count: i64) -> Candidate {
        Candidate {
            count,
            key: Reverse((self.symbols[pair.0 as usize].clone(), self.symbols[pair.1 as usize].clone())),
            pair,
        }
    }

    fn add_word_pairs(&mut self, w: usize, sign: i64, touched: &mut HashSet<(u32, u32)>) {
        let freq = self.freqs[w] * sign;
        for k in 0..self.words[w].len().saturating_sub(1) {
            let pair = (self.words[w][k], self.words[w][k + 1]);
            *self.counts.entry(pair).or_default() += freq;
            if sign > 0 {
                self.locations.entry(pair).or_default().insert(w);
            }
            touched.insert(pair);
        }
    }

    fn merge(&mut self, pair: (u32, u32), new_id: u32) {
        let words: Vec<usize> = {
            let mut v: Vec<usize> = self.locations.remove(&pair).unwrap_or_default().into_iter().collect();
            v.sort_unstable();
            v
        };
        let mut touched = HashSet::new();
        for w in words {
            if !self.words[w].windows(2).any(|p| (p[0], p[1]) == pair) {
                continue;
            }
            self.add_word_pairs(w, -1, &mut touched);
            let old = std::mem::take(&mut self.words[w]);
            let mut next = Vec::with_capacity(old.len());
            let mut i = 0;
            while i < old.len() {
                if i + 1 < old.len() && (old[i], old[i + 1]) == pair {
                    next.push(new_id);
                    i += 2;
                } else {
                    next.push(old[i]);
                    i += 1;
                }
            }
            self.words[w] = next;
            self.add_word_pairs(w, 1, &mut touched);
        }
        self.counts.remove(&pair);
        let mut touched: Vec<(u32, u32)> = touched.into_iter().filter(|p| *p != pair).collect();
        touched.sort_unstable();
        for p in touched {
            let c = self.counts.get(&p).copied().unwrap_or(0);
            if c > 0 {
                let cand = self.candidate(p, c);
                self.heap.push(cand);
            }
        }
    }
}

/// Trains on a seeded sample of `corpus`.
pub fn train_bpe<S: AsRef<str>>(corpus: &[S], target_size: usize, sample_fraction: f64, seed: u64) -> Result<BpeModel> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    if !(sample_fraction > 0.0 && sample_fraction <= 1.0) {
        return Err(Error::InvalidArgument(format!("sample_fraction {sample_fraction} is not in (0, 1]")));
    }
    if target_size < BASE + 1 {
        return Err(Error::InvalidArgument(format!("target_size must be at least {}", BASE + 1)));
    }
    let docs: Vec<&str> = corpus.iter().map(AsRef::as_ref).collect();
    let sample = sample_documents(&docs, sample_fraction, seed);

    let mut freq: HashMap<&str, i64> = HashMap::new();
    for doc in &sample {
        for chunk in pretokenize(doc) {
            *freq.entry(chunk).or_default() += 1;
        }
    }
    let mut chunks: Vec<(&str, i64)> = freq.into_iter().collect();
    chunks.sort_unstable();

    let mut t = Trainer {
        words: chunks.iter().map(|(c, _)| c.bytes().map(u32::from).collect()).collect(),
        freqs: chunks.iter().map(|(_, f)| *f).collect(),
        symbols: (0..=255u8).map(|b| vec![b]).collect(),
        counts: HashMap::new(),
        locations: HashMap::new(),
        heap: BinaryHeap::new(),
    };
    let mut touched = HashSet::new();
    for w in 0..t.words.len() {
        t.add_word_pairs(w, 1, &mut touched);
    }
    let mut initial: Vec<((u32, u32), i64)> = t.counts.iter().map(|(p, c)| (*p, *c)).collect();
    initial.sort_unstable();
    for (p, c) in initial {
        let cand = t.candidate(p, c);
        t.heap.push(cand);
    }

    let max_merges = target_size - BASE - 1;
    let mut merges = Vec::new();
    while merges.len() < max_merges {
        let Some(top) = t.heap.pop() else { break };
        let current = t.counts.get(&top.pair).copied().unwrap_or(0);
        if current != top.count {
            if current > 0 {
                let cand = t.candidate(top.pair, current);
                t.heap.push(cand);
            }
            continue;
        }
        if current < 2 {
            break;
        }
        let new_id = t.symbols.len() as u32;
        let mut bytes = t.symbols[top.pair.0 as usize].clone();
        bytes.extend_from_slice(&t.symbols[top.pair.1 as usize]);
        t.symbols.push(bytes);
        merges.push(top.pair);
        t.merge(top.pair, new_id);
    }
    BpeModel::from_merges(target_size, seed, sample_fraction, merges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn merged(model: &BpeModel) -> Vec<String> {
        (0..model.merges().len())
            .map(|k| String::from_utf8_lossy(model.token_bytes((BASE + k) as u32).unwrap()).into_owned())
            .collect()
    }

    #[test]
    fn chunks_cover_input() {
        let text = "int  x = foo_bar(42);\n\tif (x) return;  ";
        let chunks = pretokenize(text);
        assert_eq!(chunks.concat(), text);
        assert_eq!(&chunks[..4], &["int", " ", " x", " ="]);
        assert!(chunks.contains(&" foo"));
        assert!(chunks.contains(&"_"));
        assert!(chunks.contains(&"42"));
        assert!(pretokenize("").is_empty());
    }

    #[test]
    fn repeated_letter() {
        let m = train_bpe(&["aaaa"], 260, 1.0, 0).unwrap();
        assert_eq!(m.merges()[0], (b'a' as u32, b'a' as u32));
        assert_eq!(merged(&m), vec!["aa"]);
    }

    #[test]
    fn hand_simulated_merge_order() {
        // "abab" and " abab": (a,b) occurs 4 times, then (ab,ab) twice.
        let m = train_bpe(&["abab abab"], 1000, 1.0, 0).unwrap();
        assert_eq!(merged(&m), vec!["ab", "abab"]);
        // Ties go to the smaller pair: (a,b), (c,d) and (d,a) all occur twice.
        let m = train_bpe(&["cdab", "cdab"], 1000, 1.0, 0).unwrap();
        assert_eq!(merged(&m)[0], "ab");
    }

    #[test]
    fn respects_target_size() {
        let text = "the quick brown fox jumps over the lazy dog ".repeat(20);
        let m = train_bpe(&[text.as_str()], 270, 1.0, 0).unwrap();
        assert_eq!(m.vocab_size(), 270);
        assert!(train_bpe(&[text.as_str()], 100, 1.0, 0).is_err());
    }

    #[test]
    fn encode_decode() {
        let text = "for (i = 0; i < n; i++) y[i] += a * x[i];\n".repeat(10);
        let m = train_bpe(&[text.as_str()], 400, 1.0, 0).unwrap();
        let ids = m.encode(&text);
        assert!(ids.len() < text.len());
        assert_eq!(m.decode(&ids).unwrap(), text.as_bytes());
        assert!(m.encode("").is_empty());
        assert!(m.encode("ab").len() <= 2);
        let whole = String::from_utf8(m.token_bytes(BASE as u32).unwrap().to_vec()).unwrap();
        assert_eq!(m.encode(&whole).len(), 1);
    }

    #[test]
    fn model_file_round_trip() {
        let text = "subroutine saxpy(n, a, x, y)\n  y = a * x + y\nend subroutine\n".repeat(5);
        let m = train_bpe(&[text.as_str()], 500, 1.0, 9).unwrap();
        let file = m.to_text();
        let back = BpeModel::from_text(&file).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.to_text(), file);
        assert!(BpeModel::from_text("nope\n").is_err());
        let tampered = file.replacen("merges ", "merges 9", 1);
        assert!(BpeModel::from_text(&tampered).is_err());
    }

    #[test]
    fn empty_and_invalid_inputs() {
        let none: [&str; 0] = [];
        assert!(matches!(train_bpe(&none, 300, 1.0, 0), Err(Error::EmptyCorpus)));
        assert!(train_bpe(&["a"], 300, 0.0, 0).is_err());
        assert!(train_bpe(&["a"], 300, 1.5, 0).is_err());
    }

    #[test]
    fn sampling_is_seeded() {
        let docs: Vec<String> = (0..1000).map(|i| format!("doc {i}")).collect();
        let refs: Vec<&str> = docs.iter().map(String::as_str).collect();
        let a = sample_documents(&refs, 0.05, 3);
        assert_eq!(a, sample_documents(&refs, 0.05, 3));
        assert_ne!(a, sample_documents(&refs, 0.05, 4));
        assert!((20..80).contains(&a.len()));
        assert_eq!(sample_documents(&refs[..1], 0.0001, 3).len(), 1);
    }
}
