//! Replacement of identifiers and literals by `<category>_<n>` tokens, and
//! the way back.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::LazyLock;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regex::Regex;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::frontend::{Category, IdentifierOccurrence, SyntaxTree};
use crate::lexicalizer::TokenStream;
use crate::unit::{Language, SourceUnit};

/// Seed used when neither a flag nor `TOKOMPILER_SEED` gives one.
pub const DEFAULT_SEED: u64 = 42;

static REPLACEMENT: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"\b(func|var|arr|num|str)_([0-9]+)\b").expect("static regex"));

/// Splits `var_17` into its category and number.
pub fn parse_replacement(token: &str) -> Option<(Category, u64)> {
    let (word, digits) = token.split_once('_')?;
    let category = Category::from_word(word)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some((category, digits.parse().ok()?))
}

pub fn replacement_token(category: Category, n: u64) -> String {
    format!("{}_{n}", category.word())
}

/// Per-unit seed: the first eight bytes of SHA-256 over the global seed
/// (little endian) followed by the unit id.
pub fn unit_seed(global: u64, unit_id: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(global.to_le_bytes());
    h.update(unit_id.as_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("digest has 32 bytes"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    /// One dictionary per input file.
    #[default]
    File,
    /// One dictionary per extracted function.
    Function,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnonymizerConfig {
    pub range_lo: u64,
    pub range_hi: u64,
    pub scope: Scope,
}

impl Default for AnonymizerConfig {
    fn default() -> Self {
        AnonymizerConfig {
            range_lo: 1,
            range_hi: 1000,
            scope: Scope::File,
        }
    }
}

/// IDs drawn for each category, in draw order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdAssignment {
    pub ids: BTreeMap<Category, Vec<u64>>,
    pub warnings: Vec<String>,
}

/// Draws `counts[c]` distinct IDs per category from `[lo, hi]`, uniformly and
/// without replacement. Categories are drawn in `Category::ALL` order from a
/// single ChaCha8 stream seeded with `seed`. A category that does not fit is
/// drawn from a range ten times wider (repeatedly if needed).
pub fn assign_ids(counts: &BTreeMap<Category, usize>, seed: u64, lo: u64, hi: u64) -> Result<IdAssignment> {
    assign_ids_excluding(counts, seed, lo, hi, &HashSet::new())
}

fn assign_ids_excluding(
    counts: &BTreeMap<Category, usize>,
    seed: u64,
    lo: u64,
    hi: u64,
    exclude: &HashSet<(Category, u64)>,
) -> Result<IdAssignment> {
    if hi < lo {
        return Err(Error::EmptyRange { lo, hi });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = IdAssignment::default();
    for category in Category::ALL {
        let count = counts.get(&category).copied().unwrap_or(0);
        if count == 0 {
            continue;
        }
        let mut size = hi - lo + 1;
        let blocked = |size: u64| {
            exclude
                .iter()
                .filter(|(c, n)| *c == category && *n >= lo && *n - lo < size)
                .count() as u64
        };
        while (count as u64) > size - blocked(size) {
            size = size.saturating_mul(10);
            let msg = format!(
                "{count} distinct {category} names do not fit the id range; widening to [{lo}, {}]",
                lo + size - 1
            );
            log::warn!("{msg}");
            out.warnings.push(msg);
        }
        let skip = blocked(size) as usize;
        let drawn: Vec<u64> = index::sample(&mut rng, size as usize, count + skip)
            .into_iter()
            .map(|i| lo + i as u64)
            .filter(|n| !exclude.contains(&(category, *n)))
            .take(count)
            .collect();
        out.ids.insert(category, drawn);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DictEntry {
    pub replacement: String,
    pub original: String,
    pub category: Category,
}

/// Bijection between replacement tokens and original lexemes for one unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDictionary", into = "RawDictionary")]
pub struct ChangeDictionary {
    unit_id: String,
    seed: u64,
    entries: Vec<DictEntry>,
    by_replacement: HashMap<String, usize>,
    by_original: HashMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct RawDictionary {
    unit_id: String,
    seed: u64,
    entries: Vec<DictEntry>,
}

impl TryFrom<RawDictionary> for ChangeDictionary {
    type Error = Error;

    fn try_from(raw: RawDictionary) -> Result<Self> {
        ChangeDictionary::new(raw.unit_id, raw.seed, raw.entries)
    }
}

impl From<ChangeDictionary> for RawDictionary {
    fn from(d: ChangeDictionary) -> Self {
        RawDictionary {
            unit_id: d.unit_id,
            seed: d.seed,
            entries: d.entries,
        }
    }
}

impl ChangeDictionary {
    /// Validates that `entries` is one-to-one and well formed.
    pub fn new(unit_id: impl Into<String>, seed: u64, entries: Vec<DictEntry>) -> Result<Self> {
        let mut by_replacement = HashMap::with_capacity(entries.len());
        let mut by_original = HashMap::with_capacity(entries.len());
        for (i, e) in entries.iter().enumerate() {
            match parse_replacement(&e.replacement) {
                Some((c, _)) if c == e.category => {}
                _ => {
                    return Err(Error::MalformedDictionary(format!(
                        "`{}` is not a {} replacement",
                        e.replacement, e.category
                    )))
                }
            }
            if by_replacement.insert(e.replacement.clone(), i).is_some() {
                return Err(Error::MalformedDictionary(format!("duplicate replacement `{}`", e.replacement)));
            }
            if by_original.insert(e.original.clone(), i).is_some() {
                return Err(Error::MalformedDictionary(format!("duplicate original `{}`", e.original)));
            }
        }
        Ok(ChangeDictionary {
            unit_id: unit_id.into(),
            seed,
            entries,
            by_replacement,
            by_original,
        })
    }

    pub fn unit_id(&self) -> &str {
        &self.unit_id
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn entries(&self) -> &[DictEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn original(&self, replacement: &str) -> Option<&str> {
        self.by_replacement
            .get(replacement)
            .map(|&i| self.entries[i].original.as_str())
    }

    pub fn replacement(&self, original: &str) -> Option<&str> {
        self.by_original
            .get(original)
            .map(|&i| self.entries[i].replacement.as_str())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::MalformedDictionary(e.to_string()))
    }
}

/// A unit after identifier and literal replacement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnonymizedUnit {
    pub unit_id: String,
    pub language: Language,
    pub text: String,
    pub dictionary: ChangeDictionary,
    /// Distinct originals per category.
    pub category_counts: BTreeMap<Category, usize>,
    pub warnings: Vec<String>,
}

/// Rewrites every occurrence by span substitution. Equal lexemes get equal
/// replacements; IDs are drawn with `seed` from `config`'s range.
pub fn anonymize(
    unit: &SourceUnit,
    tree: &SyntaxTree,
    occurrences: &[IdentifierOccurrence],
    seed: u64,
    config: &AnonymizerConfig,
) -> Result<AnonymizedUnit> {
    for pair in occurrences.windows(2) {
        if pair[1].span.start < pair[0].span.end {
            return Err(Error::OverlappingSpans(pair[1].span.start));
        }
    }

    let mut first_seen: Vec<(&str, Category)> = Vec::new();
    let mut seen: HashSet<&str> = HashSet::new();
    for occ in occurrences {
        if seen.insert(&occ.lexeme) {
            first_seen.push((&occ.lexeme, occ.category));
        }
    }
    let mut counts: BTreeMap<Category, usize> = BTreeMap::new();
    for (_, c) in &first_seen {
        *counts.entry(*c).or_default() += 1;
    }

    // Tokens left as they are must not collide with a replacement.
    let replaced: HashSet<usize> = occurrences.iter().map(|o| o.span.start).collect();
    let exclude: HashSet<(Category, u64)> = tree
        .tokens(&unit.text)
        .into_iter()
        .filter(|t| !replaced.contains(&t.span.start))
        .filter_map(|t| parse_replacement(&unit.text[t.span]))
        .collect();

    let assignment = assign_ids_excluding(&counts, seed, config.range_lo, config.range_hi, &exclude)?;
    let mut cursor: BTreeMap<Category, usize> = BTreeMap::new();
    let mut entries = Vec::with_capacity(first_seen.len());
    let mut mapping: HashMap<&str, usize> = HashMap::with_capacity(first_seen.len());
    for (lexeme, category) in first_seen {
        let k = cursor.entry(category).or_default();
        let n = assignment.ids[&category][*k];
        *k += 1;
        mapping.insert(lexeme, entries.len());
        entries.push(DictEntry {
            replacement: replacement_token(category, n),
            original: lexeme.to_string(),
            category,
        });
    }

    let mut text = String::with_capacity(unit.text.len());
    let mut last = 0;
    let is_word = |c: char| c.is_alphanumeric() || c == '_';
    for occ in occurrences {
        text.push_str(&unit.text[last..occ.span.start]);
        // Adjacent tokens such as `1.0e-6d0` must not fuse into one word.
        if text.ends_with(is_word) {
            text.push(' ');
        }
        text.push_str(&entries[mapping[occ.lexeme.as_str()]].replacement);
        if unit.text[occ.span.end..].starts_with(is_word) {
            text.push(' ');
        }
        last = occ.span.end;
    }
    text.push_str(&unit.text[last..]);

    Ok(AnonymizedUnit {
        unit_id: unit.id.clone(),
        language: unit.language,
        text,
        dictionary: ChangeDictionary::new(unit.id.clone(), seed, entries)?,
        category_counts: counts,
        warnings: assignment.warnings,
    })
}

/// Substitutes every `<category>_<n>` word in `text` by its original.
pub fn restore_text(text: &str, dictionary: &ChangeDictionary) -> Result<String> {
    let mut out = String::with_capacity(text.len());
    let mut last = 0;
    for m in REPLACEMENT.find_iter(text) {
        let original = dictionary
            .original(m.as_str())
            .ok_or_else(|| Error::UnknownReplacementToken(m.as_str().to_string()))?;
        out.push_str(&text[last..m.start()]);
        out.push_str(original);
        last = m.end();
    }
    out.push_str(&text[last..]);
    Ok(out)
}

/// Restores a lexicalized token list: a category word followed by a number
/// word is joined back and looked up; whole replacement tokens are accepted
/// too. Other tokens pass through.
pub fn restore_tokens(tokens: &[String], dictionary: &ChangeDictionary) -> Result<Vec<String>> {
    let mut out = Vec::with_capacity(tokens.len());
    let mut i = 0;
    while i < tokens.len() {
        let tok = tokens[i].as_str();
        let joined = match tokens.get(i + 1) {
            Some(next) if Category::from_word(tok).is_some() && is_number_word(next) => {
                i += 1;
                Some(format!("{tok}_{next}"))
            }
            _ if parse_replacement(tok).is_some() => Some(tok.to_string()),
            _ => None,
        };
        match joined {
            Some(r) => {
                let original = dictionary
                    .original(&r)
                    .ok_or(Error::UnknownReplacementToken(r.clone()))?;
                out.push(original.to_string());
            }
            None => out.push(tok.to_string()),
        }
        i += 1;
    }
    Ok(out)
}

/// Restores a token stream to space-joined source text.
pub fn restore(stream: &TokenStream, dictionary: &ChangeDictionary) -> Result<String> {
    Ok(restore_tokens(&stream.tokens, dictionary)?.join(" "))
}

fn is_number_word(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::{classify_occurrences, parse};

    fn run(lang: Language, src: &str, seed: u64) -> AnonymizedUnit {
        let unit = SourceUnit::new("u", lang, "u", src);
        let tree = parse(&unit).unwrap();
        let occ = classify_occurrences(&tree, &unit);
        anonymize(&unit, &tree, &occ, seed, &AnonymizerConfig::default()).unwrap()
    }

    #[test]
    fn adjacent_replacements_stay_apart() {
        let a = run(Language::Fortran, "x = 1.0e-6d0\n", 3);
        let words: Vec<&str> = a.text.split_whitespace().collect();
        assert_eq!(words.len(), 4, "{}", a.text);
        assert_eq!(restore_text(&a.text, &a.dictionary).unwrap(), "x = 1.0e-6 d0\n");
    }

    #[test]
    fn replacement_tokens_parse() {
        assert_eq!(parse_replacement("var_17"), Some((Category::Var, 17)));
        assert_eq!(parse_replacement("num_"), None);
        assert_eq!(parse_replacement("vars_1"), None);
        assert_eq!(parse_replacement("arr_1x"), None);
    }

    #[test]
    fn single_id_within_range() {
        let counts = BTreeMap::from([(Category::Var, 1)]);
        let a = assign_ids(&counts, 7, 1, 1000).unwrap();
        let id = a.ids[&Category::Var][0];
        assert!((1..=1000).contains(&id));
        assert!(a.warnings.is_empty());
    }

    #[test]
    fn widening_on_exhaustion() {
        let counts = BTreeMap::from([(Category::Var, 1001)]);
        let a = assign_ids(&counts, 7, 1, 1000).unwrap();
        let ids = &a.ids[&Category::Var];
        assert_eq!(ids.iter().collect::<HashSet<_>>().len(), 1001);
        assert!(ids.iter().all(|n| (1..=10_000).contains(n)));
        assert_eq!(a.warnings.len(), 1);
    }

    #[test]
    fn empty_range_is_rejected() {
        let counts = BTreeMap::from([(Category::Var, 1)]);
        assert!(matches!(assign_ids(&counts, 1, 5, 4), Err(Error::EmptyRange { lo: 5, hi: 4 })));
    }

    #[test]
    fn consistent_replacement() {
        let a = run(Language::C, "int x; x = x;", 3);
        assert_eq!(a.dictionary.len(), 1);
        let r = a.dictionary.replacement("x").unwrap();
        assert_eq!(a.text, format!("int {r}; {r} = {r};"));
    }

    #[test]
    fn collisions_with_kept_tokens_are_avoided() {
        // `var_1` is a type name here, so it is kept and must not be reused.
        let counts = BTreeMap::from([(Category::Var, 1)]);
        let exclude = HashSet::from([(Category::Var, 1)]);
        for seed in 0..200 {
            let a = assign_ids_excluding(&counts, seed, 1, 2, &exclude).unwrap();
            assert_eq!(a.ids[&Category::Var], vec![2]);
        }
    }

    #[test]
    fn restore_inverts_text() {
        let src = "int main() { int r[2800 + 1]; }";
        let a = run(Language::C, src, 42);
        assert_eq!(restore_text(&a.text, &a.dictionary).unwrap(), src);
    }

    #[test]
    fn restore_tokens_joins_split_words() {
        let dict = ChangeDictionary::new(
            "u",
            1,
            vec![DictEntry {
                replacement: "var_3".into(),
                original: "x".into(),
                category: Category::Var,
            }],
        )
        .unwrap();
        let toks: Vec<String> = ["var", "3", "=", "var_3"].iter().map(|s| s.to_string()).collect();
        assert_eq!(restore_tokens(&toks, &dict).unwrap(), vec!["x", "=", "x"]);
        let bad: Vec<String> = ["num", "9"].iter().map(|s| s.to_string()).collect();
        assert!(matches!(restore_tokens(&bad, &dict), Err(Error::UnknownReplacementToken(t)) if t == "num_9"));
        assert!(restore_tokens(&[], &dict).unwrap().is_empty());
    }

    #[test]
    fn dictionary_json_round_trip() {
        let a = run(Language::C, "int f(int a) { return a * 3 + f(2); }", u64::MAX - 5);
        let json = a.dictionary.to_json().unwrap();
        let back = ChangeDictionary::from_json(&json).unwrap();
        assert_eq!(back, a.dictionary);
        assert_eq!(back.to_json().unwrap(), json);
        assert_eq!(back.seed(), u64::MAX - 5);
    }

    #[test]
    fn malformed_dictionaries_are_rejected() {
        let dup = r#"{"unit_id":"u","seed":1,"entries":[
            {"replacement":"var_1","original":"a","category":"var"},
            {"replacement":"var_1","original":"b","category":"var"}]}"#;
        assert!(matches!(ChangeDictionary::from_json(dup), Err(Error::MalformedDictionary(_))));
        let wrong = r#"{"unit_id":"u","seed":1,"entries":[
            {"replacement":"num_1","original":"a","category":"var"}]}"#;
        assert!(ChangeDictionary::from_json(wrong).is_err());
    }

    #[test]
    fn unit_seeds_differ_by_id() {
        assert_ne!(unit_seed(42, "a.c"), unit_seed(42, "b.c"));
        assert_eq!(unit_seed(42, "a.c"), unit_seed(42, "a.c"));
    }

    #[test]
    fn overlapping_spans_are_rejected() {
        let unit = SourceUnit::new("u", Language::C, "u", "int ab;");
        let tree = parse(&unit).unwrap();
        let occ = vec![
            IdentifierOccurrence { span: 4..6, lexeme: "ab".into(), category: Category::Var, decl_site: true },
            IdentifierOccurrence { span: 5..6, lexeme: "b".into(), category: Category::Var, decl_site: false },
        ];
        let r = anonymize(&unit, &tree, &occ, 1, &AnonymizerConfig::default());
        assert!(matches!(r, Err(Error::OverlappingSpans(5))));
    }
}
