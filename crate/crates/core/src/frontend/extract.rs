//! Function-level units ("structured blocks") cut out of a parsed file.

use super::tree::{NodeId, SyntaxTree};
use crate::unit::{Language, SourceUnit};

/// Nodes walked through when looking for top-level C/C++ definitions.
/// Class bodies and function bodies are not on the list, so methods declared
/// inline and lambdas stay inside their enclosing unit.
const CONTAINERS: &[&str] = &[
    "translation_unit",
    "declaration_list",
    "linkage_specification",
    "namespace_definition",
    "preproc_if",
    "preproc_ifdef",
    "preproc_else",
    "preproc_elif",
    "preproc_elifdef",
    "template_declaration",
];

const FORTRAN_ENCLOSING: &[&str] = &["subroutine", "function", "interface_block"];

/// Child unit ids are `<parent id>#<k>`, numbered from zero in source order.
pub fn extract_functions(tree: &SyntaxTree, unit: &SourceUnit) -> Vec<SourceUnit> {
    let spans = match tree.language() {
        Language::C | Language::Cpp => cfamily_functions(tree),
        Language::Fortran => fortran_units(tree),
    };
    spans
        .into_iter()
        .enumerate()
        .map(|(k, id)| {
            let span = tree.node(id).span.clone();
            SourceUnit::new(
                format!("{}#{k}", unit.id),
                unit.language,
                unit.origin.clone(),
                &unit.text[span],
            )
        })
        .collect()
}

fn cfamily_functions(tree: &SyntaxTree) -> Vec<NodeId> {
    let mut out = Vec::new();
    let mut stack = vec![tree.root()];
    while let Some(id) = stack.pop() {
        let node = tree.node(id);
        if node.kind == "function_definition" {
            out.push(id);
            continue;
        }
        if node.kind == "template_declaration"
            && node.children.iter().any(|&c| tree.node(c).kind == "function_definition")
        {
            out.push(id);
            continue;
        }
        if CONTAINERS.contains(&node.kind) {
            stack.extend(node.children.iter().rev());
        }
    }
    out
}

fn fortran_units(tree: &SyntaxTree) -> Vec<NodeId> {
    (0..tree.len())
        .filter(|&id| matches!(tree.node(id).kind, "subroutine" | "function"))
        .filter(|&id| {
            !tree
                .ancestors(id)
                .any(|a| FORTRAN_ENCLOSING.contains(&tree.node(a).kind))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse;

    fn extract(lang: Language, src: &str) -> Vec<String> {
        let unit = SourceUnit::new("f", lang, "f", src);
        let tree = parse(&unit).unwrap();
        extract_functions(&tree, &unit).into_iter().map(|u| u.text).collect()
    }

    #[test]
    fn example_file() {
        let src = "// Source code\nint main() { int r[2800 + 1]; }\n";
        assert_eq!(extract(Language::C, src), vec!["int main() { int r[2800 + 1]; }"]);
    }

    #[test]
    fn declarations_only() {
        assert!(extract(Language::C, "int x; extern int f(int);\nstruct s { int a; };\n").is_empty());
    }

    #[test]
    fn lambdas_are_not_split() {
        let src = "int a() { return 1; }\nint b() { auto l = [](int x) { return x; }; return l(2); }\nnamespace ns { template <typename T> T c(T v) { return v; } }\n";
        let got = extract(Language::Cpp, src);
        assert_eq!(got.len(), 3);
        assert!(got[2].starts_with("template"));
    }

    #[test]
    fn fortran_module_procedures() {
        let src = "module m\ncontains\n  subroutine s()\n  end subroutine s\n  function f(x)\n    real :: x, f\n    f = x\n  end function f\nend module m\nprogram p\n  interface\n    subroutine ext()\n    end subroutine\n  end interface\nend program p\n";
        let got = extract(Language::Fortran, src);
        assert_eq!(got.len(), 2);
        assert!(got[0].starts_with("subroutine s()"));
        assert!(got[1].ends_with("end function f"));
    }

    #[test]
    fn child_ids() {
        let unit = SourceUnit::new("repo/x.c", Language::C, "repo/x.c", "void a(){}\nvoid b(){}\n");
        let tree = parse(&unit).unwrap();
        let ids: Vec<String> = extract_functions(&tree, &unit).into_iter().map(|u| u.id).collect();
        assert_eq!(ids, vec!["repo/x.c#0", "repo/x.c#1"]);
    }
}
