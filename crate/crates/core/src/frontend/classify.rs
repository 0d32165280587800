//! Which leaves get anonymized, and under which category.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::tree::{NodeId, SyntaxTree, OPAQUE_FIELD};
use crate::error::Error;
use crate::unit::{Language, SourceUnit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Func,
    Var,
    Arr,
    Num,
    Str,
}

impl Category {
    /// Fixed order in which IDs are drawn for each category.
    pub const ALL: [Category; 5] = [
        Category::Func,
        Category::Var,
        Category::Arr,
        Category::Num,
        Category::Str,
    ];

    pub fn word(self) -> &'static str {
        match self {
            Category::Func => "func",
            Category::Var => "var",
            Category::Arr => "arr",
            Category::Num => "num",
            Category::Str => "str",
        }
    }

    pub fn from_word(word: &str) -> Option<Category> {
        Category::ALL.into_iter().find(|c| c.word() == word)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

impl FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Category::from_word(s).ok_or_else(|| Error::InvalidArgument(format!("unknown category `{s}`")))
    }
}

/// An identifier or literal leaf that anonymization rewrites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentifierOccurrence {
    pub span: Range<usize>,
    pub lexeme: String,
    pub category: Category,
    /// The occurrence declares the name (function, array or variable declarator).
    pub decl_site: bool,
}

#[derive(Debug, Default, Clone, Copy)]
struct Flags {
    decl_func: bool,
    decl_arr: bool,
    decl_var: bool,
    called: bool,
    subscripted: bool,
    paren_applied: bool,
}

impl Flags {
    fn category(self) -> Category {
        if self.decl_func {
            Category::Func
        } else if self.decl_arr {
            Category::Arr
        } else if self.decl_var {
            Category::Var
        } else if self.called {
            Category::Func
        } else if self.subscripted {
            Category::Arr
        } else if self.paren_applied {
            Category::Func
        } else {
            Category::Var
        }
    }
}

const IDENTIFIER_KINDS: &[&str] = &["identifier", "field_identifier", "statement_identifier"];
const STRING_KINDS: &[&str] = &[
    "string_literal",
    "char_literal",
    "raw_string_literal",
    "concatenated_string",
];

enum Candidate {
    Ident { node: NodeId, opaque: bool },
    Literal { node: NodeId, category: Category },
}

/// Every identifier, numeric literal and string literal of `unit`, sorted by
/// position. All occurrences of one lexeme share a category.
pub fn classify_occurrences(tree: &SyntaxTree, unit: &SourceUnit) -> Vec<IdentifierOccurrence> {
    let src = unit.text.as_str();
    let candidates = candidates(tree, src);

    let mut flags: HashMap<&str, Flags> = HashMap::new();
    let mut decl_nodes = vec![false; tree.len()];
    match tree.language() {
        Language::C | Language::Cpp => cfamily_flags(tree, src, &mut flags, &mut decl_nodes),
        Language::Fortran => fortran_flags(tree, src, &mut flags, &mut decl_nodes),
    }

    // Names seen outside preprocessor text; only those are rewritten inside it.
    let mut known: HashMap<&str, ()> = HashMap::new();
    for c in &candidates {
        if let Candidate::Ident { node, opaque: false } = c {
            known.insert(tree.text(*node, src), ());
        }
    }

    let mut out = Vec::with_capacity(candidates.len());
    for c in candidates {
        let (node, category) = match c {
            Candidate::Literal { node, category } => (node, category),
            Candidate::Ident { node, opaque } => {
                let lexeme = tree.text(node, src);
                if opaque && !known.contains_key(lexeme) {
                    continue;
                }
                (node, flags.get(lexeme).copied().unwrap_or_default().category())
            }
        };
        let span = tree.node(node).span.clone();
        out.push(IdentifierOccurrence {
            lexeme: src[span.clone()].to_string(),
            span,
            category,
            decl_site: decl_nodes[node],
        });
    }
    out.sort_by_key(|o| o.span.start);
    out
}

fn candidates(tree: &SyntaxTree, src: &str) -> Vec<Candidate> {
    let mut out = Vec::new();
    let mut stack = vec![tree.root()];
    while let Some(id) = stack.pop() {
        let node = tree.node(id);
        if node.span.is_empty() || node.is_missing {
            continue;
        }
        let opaque = node.field == Some(OPAQUE_FIELD);
        match node.kind {
            "number_literal" => {
                out.push(Candidate::Literal { node: id, category: Category::Num });
                continue;
            }
            k if STRING_KINDS.contains(&k) => {
                out.push(Candidate::Literal { node: id, category: Category::Str });
                continue;
            }
            "user_defined_literal" => {
                let first = src[node.span.clone()].bytes().next();
                let category = if first.is_some_and(|b| b.is_ascii_digit() || b == b'.') {
                    Category::Num
                } else {
                    Category::Str
                };
                out.push(Candidate::Literal { node: id, category });
                continue;
            }
            k if IDENTIFIER_KINDS.contains(&k) && node.is_leaf() => {
                if !excluded_identifier(tree, id) {
                    out.push(Candidate::Ident { node: id, opaque });
                }
                continue;
            }
            _ => {}
        }
        stack.extend(node.children.iter().rev());
    }
    out
}

/// Identifiers that name something other than a value: destructor names and
/// `using namespace` targets.
fn excluded_identifier(tree: &SyntaxTree, id: NodeId) -> bool {
    let Some(parent) = tree.node(id).parent else {
        return false;
    };
    match tree.node(parent).kind {
        "destructor_name" => true,
        "using_declaration" => tree
            .node(parent)
            .children
            .iter()
            .any(|&c| tree.node(c).kind == "namespace"),
        _ => false,
    }
}

fn cfamily_flags<'a>(
    tree: &SyntaxTree,
    src: &'a str,
    flags: &mut HashMap<&'a str, Flags>,
    decl_nodes: &mut [bool],
) {
    for (id, node) in tree.nodes().iter().enumerate() {
        match node.kind {
            "function_declarator" => {
                if let Some(name) = tree.child_by_field(id, "declarator").and_then(|d| name_of(tree, d)) {
                    flags.entry(tree.text(name, src)).or_default().decl_func = true;
                    decl_nodes[name] = true;
                }
            }
            "array_declarator" => {
                if let Some(name) = tree.child_by_field(id, "declarator").and_then(|d| array_name(tree, d)) {
                    flags.entry(tree.text(name, src)).or_default().decl_arr = true;
                    decl_nodes[name] = true;
                }
            }
            "call_expression" => {
                if let Some(name) = tree.child_by_field(id, "function").and_then(|f| name_of(tree, f)) {
                    flags.entry(tree.text(name, src)).or_default().called = true;
                }
            }
            "subscript_expression" => {
                if let Some(name) = tree.child_by_field(id, "argument").and_then(|a| name_of(tree, a)) {
                    flags.entry(tree.text(name, src)).or_default().subscripted = true;
                }
            }
            "preproc_function_def" => {
                if let Some(name) = tree.child_by_field(id, "name") {
                    flags.entry(tree.text(name, src)).or_default().decl_func = true;
                    decl_nodes[name] = true;
                }
            }
            "identifier" | "field_identifier" => {
                let parent = node.parent.map(|p| tree.node(p).kind);
                let declares = node.field == Some("declarator")
                    || (parent == Some("preproc_def") && node.field == Some("name"))
                    || parent == Some("preproc_params");
                if declares {
                    flags.entry(tree.text(id, src)).or_default().decl_var = true;
                    decl_nodes[id] = true;
                }
            }
            _ => {}
        }
    }
}

/// Name leaf of a declarator or callee expression.
fn name_of(tree: &SyntaxTree, id: NodeId) -> Option<NodeId> {
    let node = tree.node(id);
    match node.kind {
        "identifier" | "field_identifier" => Some(id),
        "qualified_identifier" | "template_function" | "template_method" => {
            tree.child_by_field(id, "name").and_then(|n| name_of(tree, n))
        }
        "field_expression" => tree.child_by_field(id, "field").and_then(|n| name_of(tree, n)),
        _ => None,
    }
}

fn array_name(tree: &SyntaxTree, id: NodeId) -> Option<NodeId> {
    match tree.node(id).kind {
        "array_declarator" | "parenthesized_declarator" | "pointer_declarator" => {
            let inner = tree
                .child_by_field(id, "declarator")
                .or_else(|| tree.node(id).children.iter().copied().find(|&c| tree.node(c).named))?;
            array_name(tree, inner)
        }
        _ => name_of(tree, id),
    }
}

fn fortran_flags<'a>(
    tree: &SyntaxTree,
    src: &'a str,
    flags: &mut HashMap<&'a str, Flags>,
    decl_nodes: &mut [bool],
) {
    for (id, node) in tree.nodes().iter().enumerate() {
        if node.kind != "identifier" {
            continue;
        }
        let Some(role) = node.field else { continue };
        let f = flags.entry(tree.text(id, src)).or_default();
        match role {
            "func_decl" => f.decl_func = true,
            "arr_decl" => f.decl_arr = true,
            "var_decl" => f.decl_var = true,
            "call" => f.called = true,
            "paren_use" => f.paren_applied = true,
            _ => continue,
        }
        if role.ends_with("_decl") {
            decl_nodes[id] = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse;

    fn classify(lang: Language, src: &str) -> Vec<(String, Category)> {
        let unit = SourceUnit::new("t", lang, "t", src);
        let tree = parse(&unit).unwrap();
        classify_occurrences(&tree, &unit)
            .into_iter()
            .map(|o| (o.lexeme, o.category))
            .collect()
    }

    fn pairs(items: &[(&str, Category)]) -> Vec<(String, Category)> {
        items.iter().map(|(l, c)| (l.to_string(), *c)).collect()
    }

    #[test]
    fn example_categories() {
        use Category::*;
        assert_eq!(
            classify(Language::C, "int main() { int r[2800 + 1]; }"),
            pairs(&[("main", Func), ("r", Arr), ("2800", Num), ("1", Num)])
        );
    }

    #[test]
    fn call_string_and_variable() {
        use Category::*;
        assert_eq!(
            classify(Language::C, "printf(\"hi %d\", i);"),
            pairs(&[("printf", Func), ("\"hi %d\"", Str), ("i", Var)])
        );
        assert_eq!(classify(Language::C, "int x;"), pairs(&[("x", Var)]));
    }

    #[test]
    fn declaration_site_wins() {
        let occ = classify(Language::C, "void f(double *y, int n) { y[n] = 0; g(n); }");
        let cat = |l: &str| occ.iter().find(|(x, _)| x == l).unwrap().1;
        assert_eq!(cat("f"), Category::Func);
        assert_eq!(cat("y"), Category::Var);
        assert_eq!(cat("n"), Category::Var);
        assert_eq!(cat("g"), Category::Func);
        let occ = classify(Language::C, "void f(void) { a[0] = b.c[1]; }");
        assert!(occ.contains(&("a".into(), Category::Arr)));
        assert!(occ.contains(&("c".into(), Category::Arr)));
        assert!(occ.contains(&("b".into(), Category::Var)));
    }

    #[test]
    fn types_and_keywords_are_skipped() {
        let occ = classify(Language::Cpp, "std::vector<int> v; size_t n = sizeof(T); using namespace std;");
        let lexemes: Vec<&str> = occ.iter().map(|(l, _)| l.as_str()).collect();
        assert_eq!(lexemes, vec!["v", "n", "T"]);
    }

    #[test]
    fn pragma_words_stay_unless_known() {
        let src = "#define N 8\nvoid f(int *a) {\n#pragma omp parallel for num_threads(N)\n for (int i = 0; i < N; i++) a[i] = i; }\n";
        let occ = classify(Language::C, src);
        let n_count = occ.iter().filter(|(l, _)| l == "N").count();
        assert_eq!(n_count, 3);
        assert!(!occ.iter().any(|(l, _)| l == "omp" || l == "parallel" || l == "num_threads"));
        let eights = occ.iter().filter(|(l, c)| l == "8" && *c == Category::Num).count();
        assert_eq!(eights, 1);
    }

    #[test]
    fn one_category_per_lexeme() {
        let src = "int x[4]; int g(int x) { return x + h(x); } int h(int y) { return y; }";
        let occ = classify(Language::C, src);
        let mut seen: HashMap<String, Category> = HashMap::new();
        for (l, c) in occ {
            assert_eq!(*seen.entry(l).or_insert(c), c);
        }
    }

    #[test]
    fn fortran_categories() {
        use Category::*;
        let src = "subroutine scale(n, a, x)\n  integer :: n\n  real :: a, x(n)\n  x = a * x + sqrt(2.0)\n  call log_it('done')\nend subroutine scale\n";
        let occ = classify(Language::Fortran, src);
        let cat = |l: &str| occ.iter().find(|(x, _)| x == l).unwrap().1;
        assert_eq!(cat("scale"), Func);
        assert_eq!(cat("n"), Var);
        assert_eq!(cat("x"), Arr);
        assert_eq!(cat("sqrt"), Func);
        assert_eq!(cat("log_it"), Func);
        assert_eq!(cat("2.0"), Num);
        assert_eq!(cat("'done'"), Str);
        assert!(!occ.iter().any(|(l, _)| l == "integer" || l == "real" || l == "call"));
    }
}
