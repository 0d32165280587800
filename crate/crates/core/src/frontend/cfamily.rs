//! C and C++ backend over the tree-sitter grammars.

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::ops::Range;
use std::sync::Mutex;

use tree_sitter::Parser;

use super::tree::{NodeId, SyntaxNode, SyntaxTree, OPAQUE_FIELD};
use crate::error::{Error, Result};
use crate::unit::Language;

thread_local! {
    // tree-sitter parsers are not Sync; every worker thread keeps its own.
    static C_PARSER: RefCell<Option<Parser>> = const { RefCell::new(None) };
    static CPP_PARSER: RefCell<Option<Parser>> = const { RefCell::new(None) };
}

fn grammar(language: Language) -> tree_sitter::Language {
    match language {
        Language::C => tree_sitter_c::LANGUAGE.into(),
        Language::Cpp => tree_sitter_cpp::LANGUAGE.into(),
        Language::Fortran => unreachable!("Fortran has its own front end"),
    }
}

pub(crate) fn parse(language: Language, text: &str, name: &str) -> Result<SyntaxTree> {
    let slot = match language {
        Language::C => &C_PARSER,
        Language::Cpp => &CPP_PARSER,
        Language::Fortran => return Err(Error::UnsupportedLanguage(language.to_string())),
    };
    let tree = slot.with(|cell| {
        let mut cell = cell.borrow_mut();
        if cell.is_none() {
            let mut parser = Parser::new();
            parser
                .set_language(&grammar(language))
                .map_err(|e| Error::UnsupportedLanguage(format!("{language}: {e}")))?;
            *cell = Some(parser);
        }
        let parser = cell.as_mut().expect("parser initialised above");
        parser
            .parse(text, None)
            .ok_or_else(|| Error::CatastrophicParseFailure(name.to_string()))
    })?;
    Ok(snapshot(language, &tree, text))
}

fn snapshot(language: Language, tree: &tree_sitter::Tree, text: &str) -> SyntaxTree {
    let mut nodes: Vec<SyntaxNode> = Vec::new();
    let mut parents: Vec<NodeId> = Vec::new();
    let mut cursor = tree.walk();
    loop {
        let node = cursor.node();
        let id = nodes.len();
        let parent = parents.last().copied();
        nodes.push(SyntaxNode {
            kind: if node.is_error() { "ERROR" } else { intern(node.kind()) },
            named: node.is_named(),
            field: cursor.field_name().map(intern),
            span: node.byte_range(),
            parent,
            children: Vec::new(),
            is_error: node.is_error(),
            is_missing: node.is_missing(),
        });
        if let Some(p) = parent {
            nodes[p].children.push(id);
        }

        if node.kind() == "preproc_arg" {
            split_opaque(&mut nodes, id, node.byte_range(), text);
        } else if cursor.goto_first_child() {
            parents.push(id);
            continue;
        }

        loop {
            if cursor.goto_next_sibling() {
                break;
            }
            if !cursor.goto_parent() {
                return SyntaxTree::from_nodes(language, nodes, text.len());
            }
            parents.pop();
        }
    }
}

/// Field names come from a fixed grammar, so leaking each one once is bounded.
fn intern(name: &str) -> &'static str {
    static NAMES: Mutex<BTreeSet<&'static str>> = Mutex::new(BTreeSet::new());
    let mut names = NAMES.lock().expect("field name table poisoned");
    if let Some(&known) = names.get(name) {
        return known;
    }
    let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
    names.insert(leaked);
    leaked
}

/// Splits the raw text of a preprocessor argument into token leaves.
fn split_opaque(nodes: &mut Vec<SyntaxNode>, parent: NodeId, span: Range<usize>, text: &str) {
    for (kind, range) in lex_opaque(&text[span.clone()]) {
        let id = nodes.len();
        nodes.push(SyntaxNode {
            kind,
            named: true,
            field: Some(OPAQUE_FIELD),
            span: span.start + range.start..span.start + range.end,
            parent: Some(parent),
            children: Vec::new(),
            is_error: false,
            is_missing: false,
        });
        nodes[parent].children.push(id);
    }
}

const PUNCTUATORS: &[&str] = &[
    "...", "<<=", ">>=", "->*", "<=>", "##", "::", "->", "++", "--", "<<", ">>", "<=", ">=", "==",
    "!=", "&&", "||", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", ".*",
];

/// Minimal C lexer for macro bodies and pragma arguments.
pub(crate) fn lex_opaque(src: &str) -> Vec<(&'static str, Range<usize>)> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'\\' && matches!(bytes.get(i + 1), Some(b'\n') | Some(b'\r')) {
            i += 1;
            continue;
        }
        if src[i..].starts_with("//") {
            i = src[i..].find('\n').map_or(bytes.len(), |n| i + n);
            out.push(("comment", start..i));
            continue;
        }
        if src[i..].starts_with("/*") {
            i = src[i + 2..].find("*/").map_or(bytes.len(), |n| i + 2 + n + 2);
            out.push(("comment", start..i));
            continue;
        }
        let prefix = literal_prefix(&src[i..]);
        if let Some(&q) = bytes.get(i + prefix) {
            if q == b'"' || q == b'\'' {
                i = scan_quoted(bytes, i + prefix, q);
                let kind = if q == b'"' { "string_literal" } else { "char_literal" };
                out.push((kind, start..i));
                continue;
            }
        }
        if c.is_ascii_alphabetic() || c == b'_' || c == b'$' || c >= 0x80 {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || matches!(bytes[i], b'_' | b'$') || bytes[i] >= 0x80) {
                i += 1;
            }
            out.push(("identifier", start..i));
            continue;
        }
        if c.is_ascii_digit() || (c == b'.' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)) {
            i += 1;
            while i < bytes.len() {
                let b = bytes[i];
                let exponent_sign = matches!(b, b'+' | b'-') && matches!(bytes[i - 1], b'e' | b'E' | b'p' | b'P');
                if !(exponent_sign || b.is_ascii_alphanumeric() || b == b'.' || b == b'_' || b == b'\'') {
                    break;
                }
                i += 1;
            }
            out.push(("number_literal", start..i));
            continue;
        }
        let len = PUNCTUATORS
            .iter()
            .find(|p| src[i..].starts_with(**p))
            .map_or_else(|| src[i..].chars().next().map_or(1, char::len_utf8), |p| p.len());
        i += len;
        out.push(("punctuation", start..i));
    }
    out
}

fn literal_prefix(rest: &str) -> usize {
    for p in ["u8", "u", "U", "L"] {
        if rest.starts_with(p) && matches!(rest.as_bytes().get(p.len()), Some(b'"') | Some(b'\'')) {
            return p.len();
        }
    }
    0
}

fn scan_quoted(bytes: &[u8], open: usize, quote: u8) -> usize {
    let mut i = open + 1;
    while i < bytes.len() {
        match bytes[i] {
            b'\\' => i += 2,
            b'\n' => return i,
            b if b == quote => return i + 1,
            _ => i += 1,
        }
    }
    bytes.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<(&'static str, &str)> {
        lex_opaque(src).into_iter().map(|(k, r)| (k, &src[r])).collect()
    }

    #[test]
    fn lexes_pragma_arguments() {
        assert_eq!(
            kinds("omp parallel for schedule(static, 4)"),
            vec![
                ("identifier", "omp"),
                ("identifier", "parallel"),
                ("identifier", "for"),
                ("identifier", "schedule"),
                ("punctuation", "("),
                ("identifier", "static"),
                ("punctuation", ","),
                ("number_literal", "4"),
                ("punctuation", ")"),
            ]
        );
    }

    #[test]
    fn lexes_macro_bodies() {
        assert_eq!(
            kinds("((a)>>=1.5e-3f) /* x */ L\"a b\" \\\n 'c'"),
            vec![
                ("punctuation", "("),
                ("punctuation", "("),
                ("identifier", "a"),
                ("punctuation", ")"),
                ("punctuation", ">>="),
                ("number_literal", "1.5e-3f"),
                ("punctuation", ")"),
                ("comment", "/* x */"),
                ("string_literal", "L\"a b\""),
                ("char_literal", "'c'"),
            ]
        );
    }

    #[test]
    fn snapshot_keeps_preorder_and_spans() {
        let src = "#define N 10\nint main() { int r[N + 1]; }\n";
        let tree = parse(Language::C, src, "t").unwrap();
        assert_eq!(tree.error_count(), 0);
        for (id, node) in tree.nodes().iter().enumerate() {
            for &c in &node.children {
                assert!(c > id);
                let child = tree.node(c);
                assert!(child.span.start >= node.span.start && child.span.end <= node.span.end);
            }
            for pair in node.children.windows(2) {
                assert!(tree.node(pair[0]).span.end <= tree.node(pair[1]).span.start);
            }
        }
        let arg = tree.nodes().iter().position(|n| n.kind == "preproc_arg").unwrap();
        let child = tree.node(arg).children[0];
        assert_eq!(tree.text(child, src), "10");
        assert_eq!(tree.node(child).field, Some(OPAQUE_FIELD));
    }
}
