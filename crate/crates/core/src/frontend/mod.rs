//! Parsing, occurrence classification and function extraction.

mod cfamily;
mod classify;
mod extract;
mod fortran;
mod tree;

pub use classify::{classify_occurrences, Category, IdentifierOccurrence};
pub use extract::extract_functions;
pub use tree::{NodeId, SyntaxNode, SyntaxTree, Token, OPAQUE_FIELD};

use crate::error::{Error, Result};
use crate::unit::{Language, SourceUnit};

/// Parses a unit into a full-coverage syntax tree. Recoverable syntax errors
/// show up in `error_count`; they never abort the parse.
pub fn parse(unit: &SourceUnit) -> Result<SyntaxTree> {
    if unit.text.is_empty() {
        return Err(Error::EmptyInput(unit.id.clone()));
    }
    match unit.language {
        Language::C | Language::Cpp => cfamily::parse(unit.language, &unit.text, &unit.id),
        Language::Fortran => Ok(fortran::parse(&unit.text)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_tree() {
        let unit = SourceUnit::new("example", Language::C, "example.c", "int main() { int r[2800 + 1]; }");
        let tree = parse(&unit).unwrap();
        assert_eq!(tree.error_count(), 0);
        let count = |k: &str| tree.nodes().iter().filter(|n| n.kind == k).count();
        assert_eq!(count("function_definition"), 1);
        assert_eq!(count("declaration"), 1);
    }

    #[test]
    fn empty_text_is_rejected() {
        let unit = SourceUnit::new("e", Language::C, "e.c", "");
        assert!(matches!(parse(&unit), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn malformed_c_has_errors() {
        let unit = SourceUnit::new("m", Language::C, "m.c", "int f( {");
        assert!(parse(&unit).unwrap().error_count() >= 1);
    }
}
