//! Closed token vocabulary with fixed specials and OOV accounting.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frontend::Category;
use crate::lexicalizer::TokenStream;

pub const UNK: &str = "<unk>";
pub const PAD: &str = "<pad>";
pub const EOS: &str = "<eos>";
pub const SPECIALS: [&str; 3] = [UNK, PAD, EOS];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    Built,
    Loaded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VocabConfig {
    /// Add every number word of `[range_lo, range_hi]`, seen or not.
    pub include_number_range: bool,
    pub range_lo: u64,
    pub range_hi: u64,
    /// Add the five category words, seen or not.
    pub include_category_words: bool,
}

impl Default for VocabConfig {
    fn default() -> Self {
        VocabConfig {
            include_number_range: true,
            range_lo: 1,
            range_hi: 1000,
            include_category_words: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Vocabulary {
    tokens: Vec<String>,
    id_of: HashMap<String, u32>,
    provenance: Provenance,
}

impl PartialEq for Vocabulary {
    fn eq(&self, other: &Self) -> bool {
        self.tokens == other.tokens
    }
}

impl Eq for Vocabulary {}

impl Vocabulary {
    fn from_tokens(tokens: Vec<String>, provenance: Provenance) -> Self {
        let id_of = tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i as u32))
            .collect();
        Vocabulary {
            tokens,
            id_of,
            provenance,
        }
    }

    /// Specials, then every other token in byte order. The input order does
    /// not matter.
    pub fn build<'a>(streams: impl IntoIterator<Item = &'a TokenStream>, config: &VocabConfig) -> Result<Self> {
        let mut seen: BTreeSet<String> = BTreeSet::new();
        let mut total = 0usize;
        for stream in streams {
            total += stream.len();
            seen.extend(stream.tokens.iter().cloned());
        }
        if total == 0 {
            return Err(Error::EmptyCorpus);
        }
        if config.include_number_range {
            if config.range_hi < config.range_lo {
                return Err(Error::EmptyRange {
                    lo: config.range_lo,
                    hi: config.range_hi,
                });
            }
            seen.extend((config.range_lo..=config.range_hi).map(|n| n.to_string()));
        }
        if config.include_category_words {
            seen.extend(Category::ALL.iter().map(|c| c.word().to_string()));
        }
        let mut tokens: Vec<String> = SPECIALS.iter().map(|s| s.to_string()).collect();
        tokens.extend(seen.into_iter().filter(|t| !SPECIALS.contains(&t.as_str())));
        Ok(Vocabulary::from_tokens(tokens, Provenance::Built))
    }

    pub fn id(&self, token: &str) -> Option<u32> {
        self.id_of.get(token).copied()
    }

    pub fn token(&self, id: u32) -> Option<&str> {
        self.tokens.get(id as usize).map(String::as_str)
    }

    pub fn contains(&self, token: &str) -> bool {
        self.id_of.contains_key(token)
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn unk_id(&self) -> u32 {
        0
    }

    pub fn pad_id(&self) -> u32 {
        1
    }

    pub fn eos_id(&self) -> u32 {
        2
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// One token per line, LF endings; line number minus one is the ID.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.tokens.iter().map(|t| t.len() + 1).sum());
        for t in &self.tokens {
            out.push_str(t);
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let body = text
            .strip_suffix('\n')
            .ok_or_else(|| Error::MalformedVocabFile("missing final newline".into()))?;
        let tokens: Vec<String> = body.split('\n').map(str::to_string).collect();
        if tokens.len() < SPECIALS.len() || tokens[..3] != SPECIALS {
            return Err(Error::MalformedVocabFile("the first three lines must be <unk>, <pad>, <eos>".into()));
        }
        let mut seen = BTreeSet::new();
        for (i, t) in tokens.iter().enumerate() {
            if t.is_empty() || t.contains(char::is_whitespace) {
                return Err(Error::MalformedVocabFile(format!("line {}: empty or whitespace token", i + 1)));
            }
            if !seen.insert(t.as_str()) {
                return Err(Error::MalformedVocabFile(format!("line {}: duplicate token `{t}`", i + 1)));
            }
        }
        Ok(Vocabulary::from_tokens(tokens, Provenance::Loaded))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        crate::fsutil::write_atomic(path, self.to_text().as_bytes())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Vocabulary::from_text(&text)
    }
}

/// Exact OOV count over a held-out set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OovRate {
    pub oov: u64,
    pub total: u64,
}

impl OovRate {
    pub fn fraction(&self) -> f64 {
        self.oov as f64 / self.total as f64
    }
}

impl fmt::Display for OovRate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} = {:.6}", self.oov, self.total, self.fraction())
    }
}

pub fn oov_rate<'a>(vocab: &Vocabulary, held_out: impl IntoIterator<Item = &'a TokenStream>) -> Result<OovRate> {
    let mut rate = OovRate { oov: 0, total: 0 };
    for stream in held_out {
        rate.total += stream.len() as u64;
        rate.oov += stream.tokens.iter().filter(|t| !vocab.contains(t)).count() as u64;
    }
    if rate.total == 0 {
        return Err(Error::EmptyCorpus);
    }
    Ok(rate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicalizer::lexicalize;

    fn example() -> TokenStream {
        lexicalize("example", "int func_252 ( ) { int arr_88 [ num_34 + num_842 ] ; }")
    }

    fn bare() -> VocabConfig {
        VocabConfig {
            include_number_range: false,
            include_category_words: false,
            ..VocabConfig::default()
        }
    }

    #[test]
    fn example_vocabulary() {
        let v = Vocabulary::build([&example()], &bare()).unwrap();
        let expected: BTreeSet<&str> = [
            "int", "func", "(", ")", "{", "arr", "[", "num", "+", "]", ";", "}", "252", "88", "34", "842",
        ]
        .into_iter()
        .collect();
        assert_eq!(&v.tokens()[..3], &SPECIALS);
        assert_eq!(v.tokens()[3..].iter().map(String::as_str).collect::<BTreeSet<_>>(), expected);
        assert_eq!(v.len(), 3 + expected.len());

        let full = Vocabulary::build([&example()], &VocabConfig::default()).unwrap();
        // 12 non-number tokens, 1000 number words, var and str.
        assert_eq!(full.len(), 3 + 12 + 1000 + 2);
    }

    #[test]
    fn build_is_order_insensitive() {
        let a = lexicalize("a", "x = y ;");
        let b = lexicalize("b", "call foo ( z )");
        let v1 = Vocabulary::build([&a, &b], &bare()).unwrap();
        let v2 = Vocabulary::build([&b, &a], &bare()).unwrap();
        assert_eq!(v1.to_text(), v2.to_text());
    }

    #[test]
    fn empty_corpus() {
        assert!(matches!(Vocabulary::build([], &bare()), Err(Error::EmptyCorpus)));
        let empty = TokenStream::new("e", vec![]);
        assert!(matches!(Vocabulary::build([&empty], &bare()), Err(Error::EmptyCorpus)));
    }

    #[test]
    fn text_round_trip() {
        let v = Vocabulary::build([&example()], &VocabConfig::default()).unwrap();
        let text = v.to_text();
        let back = Vocabulary::from_text(&text).unwrap();
        assert_eq!(back, v);
        assert_eq!(back.provenance(), Provenance::Loaded);
        assert_eq!(back.to_text(), text);
        assert_eq!(Vocabulary::from_text("<unk>\n<pad>\n<eos>\n").unwrap().len(), 3);
    }

    #[test]
    fn malformed_files() {
        for bad in ["<unk>\n<pad>\n", "<unk>\n<pad>\n<eos>", "<pad>\n<unk>\n<eos>\n", "<unk>\n<pad>\n<eos>\na\na\n", "<unk>\n<pad>\n<eos>\n\n"] {
            assert!(matches!(Vocabulary::from_text(bad), Err(Error::MalformedVocabFile(_))), "{bad:?}");
        }
    }

    #[test]
    fn oov_arithmetic() {
        let v = Vocabulary::build([&example()], &bare()).unwrap();
        assert_eq!(oov_rate(&v, [&example()]).unwrap().oov, 0);
        let mut toks = vec!["int".to_string(); 999];
        toks.push("mystery".into());
        let held = TokenStream::new("h", toks);
        let r = oov_rate(&v, [&held]).unwrap();
        assert_eq!((r.oov, r.total), (1, 1000));
        assert_eq!(r.to_string(), "1/1000 = 0.001000");
        assert!(matches!(oov_rate(&v, []), Err(Error::EmptyCorpus)));
    }
}
