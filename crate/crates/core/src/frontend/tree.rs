use std::collections::BTreeMap;
use std::ops::Range;

use crate::unit::Language;

pub type NodeId = usize;

/// Field label given to tokens split out of opaque preprocessor text.
pub const OPAQUE_FIELD: &str = "opaque";

/// One node of an immutable syntax-tree snapshot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxNode {
    pub kind: &'static str,
    pub named: bool,
    /// Field name of this node inside its parent, when the grammar has one.
    pub field: Option<&'static str>,
    pub span: Range<usize>,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    pub is_error: bool,
    pub is_missing: bool,
}

impl SyntaxNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

/// A lexical token read off the tree in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub node: NodeId,
    pub span: Range<usize>,
}

/// Parse-tree snapshot shared by every language backend.
///
/// Nodes are stored in pre-order, so a node's id is smaller than the ids of
/// all its descendants and children appear in source order.
#[derive(Debug, Clone)]
pub struct SyntaxTree {
    language: Language,
    nodes: Vec<SyntaxNode>,
    error_count: usize,
    source_len: usize,
}

/// Kinds emitted as a single token even though the grammar gives them children.
const ATOMIC_KINDS: &[&str] = &[
    "string_literal",
    "char_literal",
    "raw_string_literal",
    "user_defined_literal",
    "system_lib_string",
];

/// Kinds that anonymization may rewrite; tree-shape comparisons collapse them.
const REWRITABLE_KINDS: &[&str] = &[
    "identifier",
    "field_identifier",
    "statement_identifier",
    "number_literal",
    "string_literal",
    "char_literal",
    "raw_string_literal",
    "concatenated_string",
    "user_defined_literal",
];

pub(crate) fn is_trivia(kind: &str) -> bool {
    kind == "comment" || kind == "continuation"
}

impl SyntaxTree {
    pub(crate) fn from_nodes(language: Language, nodes: Vec<SyntaxNode>, source_len: usize) -> Self {
        let error_count = nodes.iter().filter(|n| n.is_error || n.is_missing).count();
        SyntaxTree {
            language,
            nodes,
            error_count,
            source_len,
        }
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn node(&self, id: NodeId) -> &SyntaxNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[SyntaxNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn error_count(&self) -> usize {
        self.error_count
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    pub fn text<'a>(&self, id: NodeId, source: &'a str) -> &'a str {
        &source[self.nodes[id].span.clone()]
    }

    /// Child of `id` stored under the given grammar field.
    pub fn child_by_field(&self, id: NodeId, field: &str) -> Option<NodeId> {
        self.nodes[id]
            .children
            .iter()
            .copied()
            .find(|&c| self.nodes[c].field == Some(field))
    }

    pub fn ancestors(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        std::iter::successors(self.nodes[id].parent, move |&p| self.nodes[p].parent)
    }

    /// Error and missing nodes lying inside `span`.
    pub fn errors_within(&self, span: &Range<usize>) -> usize {
        self.nodes
            .iter()
            .filter(|n| (n.is_error || n.is_missing) && n.span.start >= span.start && n.span.end <= span.end)
            .count()
    }

    /// Leaves in source order, including comments and zero-width nodes.
    pub fn leaves(&self) -> Vec<NodeId> {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].is_leaf()).collect()
    }

    /// Code tokens in source order: comments and layout are dropped, literal
    /// nodes count as one token, and any leaf whose text still contains
    /// whitespace (for example `#  include`) is split on it.
    pub fn tokens(&self, source: &str) -> Vec<Token> {
        let mut out = Vec::new();
        let mut stack = vec![self.root()];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            if is_trivia(node.kind) || node.span.is_empty() {
                continue;
            }
            if node.is_leaf() || ATOMIC_KINDS.contains(&node.kind) {
                push_split(&mut out, id, node.span.clone(), source, ATOMIC_KINDS.contains(&node.kind));
                continue;
            }
            stack.extend(node.children.iter().rev());
        }
        out
    }

    /// Token texts, in order.
    pub fn token_texts<'a>(&self, source: &'a str) -> Vec<&'a str> {
        self.tokens(source)
            .into_iter()
            .map(|t| &source[t.span])
            .collect()
    }

    pub fn has_preprocessor(&self) -> bool {
        self.nodes
            .iter()
            .any(|n| n.kind.starts_with("preproc_"))
    }

    /// Multiset of node kinds, with every node anonymization may rewrite
    /// collapsed into a single `ATOM` entry.
    pub fn shape_signature(&self) -> BTreeMap<&'static str, usize> {
        let mut shape = BTreeMap::new();
        let mut stack = vec![self.root()];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            if is_trivia(node.kind) || node.is_missing {
                continue;
            }
            if REWRITABLE_KINDS.contains(&node.kind) {
                *shape.entry("ATOM").or_insert(0) += 1;
                continue;
            }
            *shape.entry(node.kind).or_insert(0) += 1;
            stack.extend(node.children.iter());
        }
        shape
    }
}

fn push_split(out: &mut Vec<Token>, node: NodeId, span: Range<usize>, source: &str, atomic: bool) {
    let text = &source[span.clone()];
    if atomic || !text.contains(char::is_whitespace) {
        out.push(Token { node, span });
        return;
    }
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token { node, span: span.start + s..span.start + i });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token { node, span: span.start + s..span.end });
    }
}
