//! parse → classify → anonymize → regenerate → lexicalize, for one unit.

use crate::anonymizer::{anonymize, unit_seed, AnonymizedUnit, AnonymizerConfig, Scope, DEFAULT_SEED};
use crate::error::Result;
use crate::frontend::{classify_occurrences, extract_functions, parse, SyntaxTree};
use crate::lexicalizer::{lexicalize, regenerate, TokenStream};
use crate::unit::SourceUnit;

#[derive(Debug, Clone)]
pub struct TokenizedUnit {
    /// The unit that was tokenized: the input file, or one of its functions.
    pub unit: SourceUnit,
    pub anonymized: AnonymizedUnit,
    /// Single-line regenerated text, replacement tokens unsplit.
    pub normalized: String,
    pub stream: TokenStream,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pipeline {
    /// Global seed; each unit draws from a seed derived from it and the unit id.
    pub seed: u64,
    pub config: AnonymizerConfig,
}

impl Default for Pipeline {
    fn default() -> Self {
        Pipeline::new(DEFAULT_SEED, AnonymizerConfig::default())
    }
}

impl Pipeline {
    pub fn new(seed: u64, config: AnonymizerConfig) -> Self {
        Pipeline { seed, config }
    }

    /// Tokenizes `unit` as a whole, or each of its functions when the scope
    /// is per function.
    pub fn tokenize(&self, unit: &SourceUnit) -> Result<Vec<TokenizedUnit>> {
        let tree = parse(unit)?;
        match self.config.scope {
            Scope::File => Ok(vec![self.tokenize_parsed(unit, &tree)?]),
            Scope::Function => extract_functions(&tree, unit)
                .iter()
                .map(|f| self.tokenize_parsed(f, &parse(f)?))
                .collect(),
        }
    }

    /// Tokenizes one unit whose tree is already at hand.
    pub fn tokenize_parsed(&self, unit: &SourceUnit, tree: &SyntaxTree) -> Result<TokenizedUnit> {
        let occurrences = classify_occurrences(tree, unit);
        let anonymized = anonymize(unit, tree, &occurrences, unit_seed(self.seed, &unit.id), &self.config)?;
        let normalized = regenerate(&anonymized)?;
        let stream = lexicalize(&unit.id, &normalized);
        Ok(TokenizedUnit {
            unit: unit.clone(),
            anonymized,
            normalized,
            stream,
        })
    }
}

/// Number of lexicalized tokens the unit produces. The count does not depend
/// on the seed.
pub fn lexical_token_count(unit: &SourceUnit, tree: &SyntaxTree) -> Result<usize> {
    Ok(Pipeline::default().tokenize_parsed(unit, tree)?.stream.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anonymizer::restore_text;
    use crate::unit::Language;

    const EXAMPLE: &str = "int main() { int r[2800 + 1]; }";

    #[test]
    fn example_end_to_end() {
        let unit = SourceUnit::new("example.c", Language::C, "example.c", EXAMPLE);
        let out = &Pipeline::default().tokenize(&unit).unwrap()[0];
        let shape = regex::Regex::new(
            r"^int func_\d+ \( \) \{ int arr_\d+ \[ num_\d+ \+ num_\d+ \] ; \}$",
        )
        .unwrap();
        assert!(shape.is_match(&out.normalized), "{}", out.normalized);
        assert_eq!(&out.stream.tokens[..2], &["int", "func"]);
        assert_eq!(&out.stream.tokens[3..7], &["(", ")", "{", "int"]);
        assert_eq!(out.stream.len(), 18);
        assert_eq!(
            restore_text(&out.normalized, &out.anonymized.dictionary).unwrap(),
            "int main ( ) { int r [ 2800 + 1 ] ; }"
        );
    }

    #[test]
    fn function_scope_splits_dictionaries() {
        let src = "int f(int a) { return a; }\nint g(int a) { return f(a); }\n";
        let unit = SourceUnit::new("x.c", Language::C, "x.c", src);
        let cfg = AnonymizerConfig {
            scope: Scope::Function,
            ..AnonymizerConfig::default()
        };
        let out = Pipeline::new(1, cfg).tokenize(&unit).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out[0].unit.id, "x.c#0");
        assert_eq!(out[1].anonymized.dictionary.len(), 3);
    }
}
