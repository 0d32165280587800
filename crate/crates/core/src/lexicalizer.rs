//! Single-line regeneration, replacement-token splitting, and ID encoding.

use serde::{Deserialize, Serialize};

use crate::anonymizer::{parse_replacement, AnonymizedUnit};
use crate::error::{Error, Result};
use crate::frontend::parse;
use crate::unit::{Language, SourceUnit};
use crate::vocabulary::Vocabulary;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TokenStream {
    pub unit_id: String,
    pub tokens: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ids: Option<Vec<u32>>,
    #[serde(skip)]
    pub oov_mask: Option<Vec<bool>>,
}

impl TokenStream {
    pub fn new(unit_id: impl Into<String>, tokens: Vec<String>) -> Self {
        TokenStream {
            unit_id: unit_id.into(),
            tokens,
            ids: None,
            oov_mask: None,
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn oov_count(&self) -> usize {
        self.oov_mask
            .as_ref()
            .map_or(0, |m| m.iter().filter(|&&b| b).count())
    }
}

/// Code tokens of the anonymized unit, comments and layout dropped, joined
/// by single spaces on one line.
pub fn regenerate(anonymized: &AnonymizedUnit) -> Result<String> {
    regenerate_text(anonymized.language, &anonymized.unit_id, &anonymized.text)
}

pub fn regenerate_text(language: Language, unit_id: &str, text: &str) -> Result<String> {
    let unit = SourceUnit::new(unit_id, language, unit_id, text);
    let tree = parse(&unit)?;
    Ok(tree.token_texts(text).join(" "))
}

/// Whitespace split, then `cat_n` → `cat`, `n`.
pub fn lexicalize(unit_id: &str, normalized: &str) -> TokenStream {
    let mut tokens = Vec::new();
    for word in normalized.split_whitespace() {
        match parse_replacement(word) {
            Some(_) => {
                let (cat, n) = word.split_once('_').expect("replacement has an underscore");
                tokens.push(cat.to_string());
                tokens.push(n.to_string());
            }
            None => tokens.push(word.to_string()),
        }
    }
    TokenStream::new(unit_id, tokens)
}

/// Fills `ids` and `oov_mask`; unknown tokens map to the UNK id.
pub fn encode(stream: &TokenStream, vocab: &Vocabulary) -> TokenStream {
    let mut ids = Vec::with_capacity(stream.len());
    let mut mask = Vec::with_capacity(stream.len());
    for tok in &stream.tokens {
        match vocab.id(tok) {
            Some(id) => {
                ids.push(id);
                mask.push(false);
            }
            None => {
                ids.push(vocab.unk_id());
                mask.push(true);
            }
        }
    }
    TokenStream {
        unit_id: stream.unit_id.clone(),
        tokens: stream.tokens.clone(),
        ids: Some(ids),
        oov_mask: Some(mask),
    }
}

pub fn decode(ids: &[u32], vocab: &Vocabulary) -> Result<Vec<String>> {
    ids.iter()
        .map(|&id| {
            vocab
                .token(id)
                .map(str::to_string)
                .ok_or(Error::IdOutOfRange { id, size: vocab.len() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vocabulary::{VocabConfig, UNK};

    fn words(s: &str) -> Vec<String> {
        s.split(' ').filter(|w| !w.is_empty()).map(str::to_string).collect()
    }

    #[test]
    fn splits_replacements_only() {
        assert_eq!(lexicalize("u", "int func_252 ( )").tokens, words("int func 252 ( )"));
        assert_eq!(lexicalize("u", "arr_88 [ num_34 ]").tokens, words("arr 88 [ num 34 ]"));
        assert_eq!(lexicalize("u", "num_threads var_ x_1").tokens, words("num_threads var_ x_1"));
        assert!(lexicalize("u", "").is_empty());
    }

    #[test]
    fn comments_and_layout_disappear() {
        let got = regenerate_text(Language::C, "u", "var_3 =\n    num_9; // hi\n").unwrap();
        assert_eq!(got, "var_3 = num_9 ;");
        let got = regenerate_text(Language::Fortran, "u", "var_3 = num_9 ! hi\n").unwrap();
        assert_eq!(got, "var_3 = num_9");
    }

    #[test]
    fn encode_marks_unknown_tokens() {
        let stream = lexicalize("u", "int func_252 ( ) __builtin_foo");
        let train = lexicalize("v", "int func_1 ( )");
        let vocab = Vocabulary::build([&train], &VocabConfig::default()).unwrap();
        let enc = encode(&stream, &vocab);
        assert_eq!(enc.ids.as_ref().unwrap().len(), stream.len());
        assert_eq!(enc.oov_mask.as_ref().unwrap(), &vec![false, false, false, false, false, true]);
        let back = decode(enc.ids.as_ref().unwrap(), &vocab).unwrap();
        assert_eq!(back[..5], stream.tokens[..5]);
        assert_eq!(back[5], UNK);
        assert!(matches!(decode(&[99_999], &vocab), Err(Error::IdOutOfRange { id: 99_999, .. })));
        assert!(decode(&[], &vocab).unwrap().is_empty());
    }

    #[test]
    fn jsonl_shape() {
        let mut s = TokenStream::new("u", words("int x"));
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"unit_id":"u","tokens":["int","x"]}"#);
        s.ids = Some(vec![3, 4]);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"unit_id":"u","tokens":["int","x"],"ids":[3,4]}"#);
    }
}
