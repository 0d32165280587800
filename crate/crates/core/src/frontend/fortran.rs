//! Free-form Fortran front end.
//!
//! A lexer plus a statement-level block parser. It produces the same node
//! table as the grammar-based C/C++ backend: leaves for every token, one node
//! per statement, and one node per program unit or construct. Identifier
//! leaves carry a role label (`func_decl`, `arr_decl`, `var_decl`, `call`,
//! `paren_use`) in their `field` slot for the occurrence classifier.
//!
//! Statement labels are read as labels whether they are numbers or
//! anonymized `num_<n>` tokens, so the anonymized text keeps the same tree.

use std::ops::Range;

use super::tree::{SyntaxNode, SyntaxTree};
use crate::unit::Language;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Lx {
    Word,
    Number,
    Str,
    DotOp,
    Op,
    Comment,
    Continuation,
    Newline,
    Error,
}

#[derive(Debug, Clone)]
struct Lexeme {
    kind: Lx,
    span: Range<usize>,
}

const TWO_CHAR_OPS: &[&str] = &["**", "//", "==", "/=", "<=", ">=", "=>", "::"];
const PREPROC_OPS: &[&str] = &["&&", "||", "!=", "==", "<=", ">=", "##"];

fn lex(src: &str) -> Vec<Lexeme> {
    let b = src.as_bytes();
    let n = b.len();
    let mut out: Vec<Lexeme> = Vec::new();
    let mut i = 0;
    let mut line_start = true;
    let mut preproc = false;
    let mut continued = false;
    let push = |out: &mut Vec<Lexeme>, kind, span| out.push(Lexeme { kind, span });

    while i < n {
        let c = b[i];
        let start = i;
        if c == b'\n' {
            if preproc || !continued {
                push(&mut out, Lx::Newline, i..i + 1);
                continued = false;
            }
            preproc = false;
            line_start = true;
            i += 1;
            continue;
        }
        if c == b' ' || c == b'\t' || c == b'\r' || c == 0x0c {
            i += 1;
            continue;
        }
        if line_start && c == b'#' {
            preproc = true;
            line_start = false;
            push(&mut out, Lx::Op, i..i + 1);
            i += 1;
            continue;
        }
        line_start = false;

        if !preproc && c == b'!' {
            while i < n && b[i] != b'\n' {
                i += 1;
            }
            push(&mut out, Lx::Comment, start..i);
            continue;
        }
        if !preproc && c == b'&' {
            i += 1;
            let mut j = i;
            while j < n && matches!(b[j], b' ' | b'\t' | b'\r') {
                j += 1;
            }
            if j >= n || b[j] == b'\n' || b[j] == b'!' {
                continued = true;
            }
            push(&mut out, Lx::Continuation, start..i);
            continue;
        }
        continued = false;

        if c == b'\'' || c == b'"' {
            let mut j = i + 1;
            let mut closed = false;
            while j < n && b[j] != b'\n' {
                if b[j] == c {
                    if j + 1 < n && b[j + 1] == c {
                        j += 2;
                        continue;
                    }
                    j += 1;
                    closed = true;
                    break;
                }
                j += 1;
            }
            push(&mut out, if closed { Lx::Str } else { Lx::Error }, start..j);
            i = j;
            continue;
        }
        if c.is_ascii_digit() || (c == b'.' && i + 1 < n && b[i + 1].is_ascii_digit()) {
            i = scan_number(b, i);
            push(&mut out, Lx::Number, start..i);
            continue;
        }
        if c == b'.' {
            if let Some(end) = dot_operator(b, i) {
                push(&mut out, Lx::DotOp, start..end);
                i = end;
                continue;
            }
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < n && (b[i].is_ascii_alphanumeric() || b[i] == b'_' || b[i] == b'$') {
                i += 1;
            }
            push(&mut out, Lx::Word, start..i);
            continue;
        }
        let rest = &src[i..];
        let ops: &[&str] = if preproc { PREPROC_OPS } else { TWO_CHAR_OPS };
        if let Some(op) = ops.iter().find(|op| rest.starts_with(**op)) {
            i += op.len();
            push(&mut out, Lx::Op, start..i);
            continue;
        }
        let ch = rest.chars().next().expect("non-empty remainder");
        i += ch.len_utf8();
        let ok = preproc || "=+-*/()<>,:%[];".contains(ch);
        push(&mut out, if ok { Lx::Op } else { Lx::Error }, start..i);
    }
    out
}

fn scan_number(b: &[u8], mut i: usize) -> usize {
    let n = b.len();
    while i < n && b[i].is_ascii_digit() {
        i += 1;
    }
    if i < n && b[i] == b'.' && dot_operator(b, i).is_none() {
        i += 1;
        while i < n && b[i].is_ascii_digit() {
            i += 1;
        }
    }
    if i + 1 < n && matches!(b[i], b'e' | b'E' | b'd' | b'D' | b'q' | b'Q') {
        let mut j = i + 1;
        if matches!(b[j], b'+' | b'-') {
            j += 1;
        }
        if j < n && b[j].is_ascii_digit() {
            i = j;
            while i < n && b[i].is_ascii_digit() {
                i += 1;
            }
        }
    }
    if i + 1 < n && b[i] == b'_' && (b[i + 1].is_ascii_alphanumeric()) {
        i += 1;
        while i < n && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
            i += 1;
        }
    }
    i
}

/// End of a `.name.` operator starting at `i`, if there is one.
fn dot_operator(b: &[u8], i: usize) -> Option<usize> {
    let mut j = i + 1;
    while j < b.len() && b[j].is_ascii_alphabetic() {
        j += 1;
    }
    (j > i + 1 && j < b.len() && b[j] == b'.').then_some(j + 1)
}

const KEYWORDS: &[&str] = &[
    "abstract", "allocatable", "allocate", "assignment", "associate", "asynchronous", "backspace",
    "bind", "block", "call", "case", "character", "class", "close", "codimension", "common",
    "complex", "concurrent", "contains", "contiguous", "continue", "critical", "cycle", "deallocate",
    "default", "deferred", "dimension", "do", "double", "elemental", "else", "elseif", "elsewhere",
    "end", "endfile", "entry", "enum", "enumerator", "equivalence", "exit", "extends", "external",
    "final", "flush", "forall", "format", "function", "generic", "go", "goto", "if", "implicit",
    "import", "impure", "in", "include", "inout", "inquire", "integer", "intent", "interface",
    "intrinsic", "kind", "len", "logical", "module", "namelist", "non_intrinsic", "non_overridable",
    "none", "nopass", "nullify", "only", "open", "operator", "optional", "out", "parameter", "pass",
    "pointer", "precision", "print", "private", "procedure", "program", "protected", "public",
    "pure", "read", "real", "recursive", "result", "return", "rewind", "save", "select", "sequence",
    "stop", "submodule", "subroutine", "target", "then", "to", "type", "use", "volatile", "wait",
    "where", "while", "write",
];

const TYPE_WORDS: &[&str] = &[
    "integer", "real", "complex", "logical", "character", "double", "type", "class",
];

const UNIT_PREFIXES: &[&str] = &[
    "recursive", "pure", "elemental", "impure", "module", "non_recursive", "integer", "real",
    "complex", "logical", "character", "double", "precision", "type", "class",
];

const IO_WORDS: &[&str] = &[
    "read", "write", "open", "close", "inquire", "print", "allocate", "deallocate", "rewind",
    "backspace", "endfile", "flush", "wait",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BlockKind {
    Program,
    Module,
    Submodule,
    BlockData,
    Subroutine,
    Function,
    Interface,
    TypeDef,
    Do,
    If,
    Select,
    Where,
    Forall,
    Associate,
    Block,
    Critical,
    Enum,
}

impl BlockKind {
    fn node_kind(self) -> &'static str {
        match self {
            BlockKind::Program => "program",
            BlockKind::Module => "module",
            BlockKind::Submodule => "submodule",
            BlockKind::BlockData => "block_data",
            BlockKind::Subroutine => "subroutine",
            BlockKind::Function => "function",
            BlockKind::Interface => "interface_block",
            BlockKind::TypeDef => "derived_type_definition",
            BlockKind::Do => "do_construct",
            BlockKind::If => "if_construct",
            BlockKind::Select => "select_construct",
            BlockKind::Where => "where_construct",
            BlockKind::Forall => "forall_construct",
            BlockKind::Associate => "associate_construct",
            BlockKind::Block => "block_construct",
            BlockKind::Critical => "critical_construct",
            BlockKind::Enum => "enum_definition",
        }
    }

    fn statement_kind(self) -> &'static str {
        match self {
            BlockKind::Program => "program_statement",
            BlockKind::Module => "module_statement",
            BlockKind::Submodule => "submodule_statement",
            BlockKind::BlockData => "block_data_statement",
            BlockKind::Subroutine => "subroutine_statement",
            BlockKind::Function => "function_statement",
            BlockKind::Interface => "interface_statement",
            BlockKind::TypeDef => "derived_type_statement",
            BlockKind::Do => "do_statement",
            BlockKind::If => "if_statement",
            BlockKind::Select => "select_statement",
            BlockKind::Where => "where_statement",
            BlockKind::Forall => "forall_statement",
            BlockKind::Associate => "associate_statement",
            BlockKind::Block => "block_statement",
            BlockKind::Critical => "critical_statement",
            BlockKind::Enum => "enum_statement",
        }
    }

    fn is_program_unit(self) -> bool {
        matches!(
            self,
            BlockKind::Program
                | BlockKind::Module
                | BlockKind::Submodule
                | BlockKind::BlockData
                | BlockKind::Subroutine
                | BlockKind::Function
        )
    }

    fn from_end_word(word: &str) -> Option<BlockKind> {
        Some(match word {
            "program" => BlockKind::Program,
            "module" => BlockKind::Module,
            "submodule" => BlockKind::Submodule,
            "subroutine" => BlockKind::Subroutine,
            "function" => BlockKind::Function,
            "interface" => BlockKind::Interface,
            "type" => BlockKind::TypeDef,
            "do" => BlockKind::Do,
            "if" => BlockKind::If,
            "select" => BlockKind::Select,
            "where" => BlockKind::Where,
            "forall" => BlockKind::Forall,
            "associate" => BlockKind::Associate,
            "block" => BlockKind::Block,
            "critical" => BlockKind::Critical,
            "enum" => BlockKind::Enum,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum StmtKind {
    Open(BlockKind),
    /// `end` statement, with the construct it names when it names one.
    End(Option<BlockKind>),
    Declaration,
    Call,
    Use,
    Preproc,
    Other,
}

/// Per-lexeme leaf kind and role, filled by statement analysis.
struct Leaves {
    kind: Vec<&'static str>,
    field: Vec<Option<&'static str>>,
}

/// View of one statement's significant lexemes.
struct Stmt<'a> {
    src: &'a str,
    lex: &'a [Lexeme],
    sig: Vec<usize>,
}

impl Stmt<'_> {
    fn len(&self) -> usize {
        self.sig.len()
    }

    fn lx(&self, p: usize) -> Option<Lx> {
        self.sig.get(p).map(|&k| self.lex[k].kind)
    }

    fn text(&self, p: usize) -> &str {
        self.sig.get(p).map_or("", |&k| &self.src[self.lex[k].span.clone()])
    }

    fn word(&self, p: usize) -> Option<String> {
        (self.lx(p) == Some(Lx::Word)).then(|| self.text(p).to_ascii_lowercase())
    }

    fn is_op(&self, p: usize, op: &str) -> bool {
        self.lx(p) == Some(Lx::Op) && self.text(p) == op
    }

    /// Position of the `)` matching the `(` at `open`.
    fn close_paren(&self, open: usize) -> Option<usize> {
        let mut depth = 0i32;
        for p in open..self.len() {
            if self.is_op(p, "(") {
                depth += 1;
            } else if self.is_op(p, ")") {
                depth -= 1;
                if depth == 0 {
                    return Some(p);
                }
            }
        }
        None
    }

    fn balanced(&self) -> bool {
        let mut depth = 0i32;
        for p in 0..self.len() {
            if self.is_op(p, "(") {
                depth += 1;
            } else if self.is_op(p, ")") {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
        }
        depth == 0
    }

    /// Skips a parenthesised group at `p`, if any.
    fn skip_group(&self, p: usize) -> usize {
        if self.is_op(p, "(") {
            self.close_paren(p).map_or(self.len(), |c| c + 1)
        } else {
            p
        }
    }
}

impl Leaves {
    fn set(&mut self, stmt: &Stmt<'_>, p: usize, kind: &'static str, field: Option<&'static str>) {
        if let Some(&k) = stmt.sig.get(p) {
            self.kind[k] = kind;
            self.field[k] = field;
        }
    }

    fn keyword(&mut self, stmt: &Stmt<'_>, p: usize) {
        if stmt.lx(p) == Some(Lx::Word) {
            self.set(stmt, p, "keyword", None);
        }
    }

    fn identifier(&mut self, stmt: &Stmt<'_>, p: usize, role: Option<&'static str>) {
        if stmt.lx(p) == Some(Lx::Word) {
            self.set(stmt, p, "identifier", role);
        }
    }

    fn keywords_in(&mut self, stmt: &Stmt<'_>, range: Range<usize>) {
        for p in range {
            self.keyword(stmt, p);
        }
    }

    /// Inside a parenthesised specifier list, `name =` marks a keyword argument.
    fn specifier_keywords(&mut self, stmt: &Stmt<'_>, open: usize) {
        let close = stmt.close_paren(open).unwrap_or(stmt.len());
        for p in open + 1..close {
            if stmt.lx(p) == Some(Lx::Word) && stmt.is_op(p + 1, "=") {
                self.keyword(stmt, p);
            }
        }
    }

    /// Default classification for every word of the statement.
    fn defaults(&mut self, stmt: &Stmt<'_>) {
        for p in 0..stmt.len() {
            let Some(w) = stmt.word(p) else { continue };
            if KEYWORDS.contains(&w.as_str()) {
                self.set(stmt, p, "keyword", None);
            } else {
                let role = stmt.is_op(p + 1, "(").then_some("paren_use");
                self.set(stmt, p, "identifier", role);
            }
        }
    }

    /// Type spec at `p` (`real(8)`, `double precision`, `type(t)`,
    /// `character*10`); returns the position after it.
    fn type_spec(&mut self, stmt: &Stmt<'_>, mut p: usize) -> usize {
        let head = stmt.word(p).unwrap_or_default();
        self.keyword(stmt, p);
        p += 1;
        if head == "double" && matches!(stmt.word(p).as_deref(), Some("precision") | Some("complex")) {
            self.keyword(stmt, p);
            p += 1;
        }
        if stmt.is_op(p, "(") {
            let close = stmt.close_paren(p).unwrap_or(stmt.len());
            if head == "type" || head == "class" {
                for q in p + 1..close {
                    if stmt.lx(q) == Some(Lx::Word) {
                        self.set(stmt, q, "type_identifier", None);
                    }
                }
            } else {
                self.specifier_keywords(stmt, p);
            }
            p = close + 1;
        }
        if stmt.is_op(p, "*") {
            p += 1;
            p = if stmt.is_op(p, "(") { stmt.skip_group(p) } else { p + 1 };
        }
        p
    }

    fn analyze(&mut self, stmt: &Stmt<'_>) -> StmtKind {
        if stmt.len() == 0 {
            return StmtKind::Other;
        }
        if stmt.is_op(0, "#") {
            for p in 1..stmt.len() {
                if stmt.lx(p) == Some(Lx::Word) {
                    let kind = if p == 1 { "keyword" } else { "identifier" };
                    self.set(stmt, p, kind, None);
                }
            }
            return StmtKind::Preproc;
        }
        self.defaults(stmt);

        let mut p = 0;
        let is_label = stmt.lx(0) == Some(Lx::Number)
            || (stmt.lx(1) == Some(Lx::Word) && is_anonymized_label(stmt.text(0)));
        if is_label && stmt.len() > 1 {
            p = 1;
        }
        if stmt.lx(p) == Some(Lx::Word) && stmt.is_op(p + 1, ":") {
            self.identifier(stmt, p, None);
            p += 2;
        }
        let Some(head) = stmt.word(p) else {
            return StmtKind::Other;
        };

        // A keyword followed by `=`, `=>`, `%` or a subscript-then-`=` is an
        // assignment target, not a statement keyword.
        let after = if stmt.is_op(p + 1, "(") { stmt.skip_group(p + 1) } else { p + 1 };
        if stmt.is_op(p + 1, "%")
            || stmt.is_op(after, "=")
            || stmt.is_op(after, "=>")
        {
            let role = stmt.is_op(p + 1, "(").then_some("paren_use");
            self.identifier(stmt, p, role);
            return StmtKind::Other;
        }

        if head.starts_with("end") && head != "endfile" {
            return self.end_statement(stmt, p, &head);
        }
        if let Some(kind) = self.unit_start(stmt, p) {
            return kind;
        }
        match head.as_str() {
            "program" | "submodule" => {
                let q = if head == "submodule" { stmt.skip_group(p + 1) } else { p + 1 };
                for r in p + 1..q {
                    self.identifier(stmt, r, None);
                }
                self.identifier(stmt, q, None);
                let kind = if head == "program" { BlockKind::Program } else { BlockKind::Submodule };
                StmtKind::Open(kind)
            }
            "module" if stmt.word(p + 1).as_deref() != Some("procedure") => {
                self.identifier(stmt, p + 1, None);
                StmtKind::Open(BlockKind::Module)
            }
            "block" if stmt.word(p + 1).as_deref() == Some("data") => {
                self.keyword(stmt, p + 1);
                self.identifier(stmt, p + 2, None);
                StmtKind::Open(BlockKind::BlockData)
            }
            "block" if stmt.len() == p + 1 => StmtKind::Open(BlockKind::Block),
            "type" | "class"
                if matches!(stmt.word(p + 1).as_deref(), Some("is") | Some("default")) =>
            {
                self.keyword(stmt, p + 1);
                if stmt.is_op(p + 2, "(") {
                    let close = stmt.close_paren(p + 2).unwrap_or(stmt.len());
                    for q in p + 3..close {
                        if stmt.lx(q) == Some(Lx::Word) {
                            self.set(stmt, q, "type_identifier", None);
                        }
                    }
                }
                StmtKind::Other
            }
            "type" if !stmt.is_op(p + 1, "(") => {
                self.derived_type(stmt, p);
                StmtKind::Open(BlockKind::TypeDef)
            }
            w if TYPE_WORDS.contains(&w) || w == "enumerator" => {
                self.declaration(stmt, p);
                StmtKind::Declaration
            }
            "dimension" | "codimension" | "allocatable" | "pointer" | "target" | "contiguous" => {
                self.entities(stmt, p + 1, |has_shape| has_shape.then_some("arr_decl"));
                StmtKind::Declaration
            }
            "external" | "intrinsic" => {
                self.entities(stmt, p + 1, |_| Some("func_decl"));
                StmtKind::Declaration
            }
            "call" => {
                let q = p + 1;
                if stmt.lx(q) == Some(Lx::Word) {
                    self.identifier(stmt, q, Some("call"));
                }
                StmtKind::Call
            }
            "use" => {
                let mut q = p + 1;
                while stmt.is_op(q, ",") {
                    self.keyword(stmt, q + 1);
                    q += 2;
                }
                if stmt.is_op(q, "::") {
                    q += 1;
                }
                self.identifier(stmt, q, None);
                StmtKind::Use
            }
            "implicit" | "format" => {
                self.keywords_in(stmt, p..stmt.len());
                StmtKind::Other
            }
            w if IO_WORDS.contains(&w) => {
                if stmt.is_op(p + 1, "(") {
                    self.specifier_keywords(stmt, p + 1);
                }
                StmtKind::Other
            }
            "do" => {
                let labeled = match stmt.lx(p + 1) {
                    Some(Lx::Number) => true,
                    Some(Lx::Word) => {
                        is_anonymized_label(stmt.text(p + 1))
                            && (stmt.lx(p + 2) == Some(Lx::Word) || stmt.is_op(p + 2, ","))
                    }
                    _ => false,
                };
                if labeled {
                    StmtKind::Other
                } else {
                    StmtKind::Open(BlockKind::Do)
                }
            }
            "if" if stmt.word(stmt.len() - 1).as_deref() == Some("then") => StmtKind::Open(BlockKind::If),
            "select" | "selectcase" | "selecttype" => StmtKind::Open(BlockKind::Select),
            "where" | "forall" => {
                let whole = stmt.is_op(p + 1, "(") && stmt.close_paren(p + 1) == Some(stmt.len() - 1);
                match (whole, head.as_str()) {
                    (true, "where") => StmtKind::Open(BlockKind::Where),
                    (true, _) => StmtKind::Open(BlockKind::Forall),
                    _ => StmtKind::Other,
                }
            }
            "associate" => StmtKind::Open(BlockKind::Associate),
            "critical" if stmt.len() == p + 1 => StmtKind::Open(BlockKind::Critical),
            "interface" => StmtKind::Open(BlockKind::Interface),
            "abstract" if stmt.word(p + 1).as_deref() == Some("interface") => {
                StmtKind::Open(BlockKind::Interface)
            }
            "enum" => StmtKind::Open(BlockKind::Enum),
            _ => StmtKind::Other,
        }
    }

    fn end_statement(&mut self, stmt: &Stmt<'_>, p: usize, head: &str) -> StmtKind {
        self.keyword(stmt, p);
        let mut q = p + 1;
        let target = if head == "end" {
            match stmt.word(q) {
                Some(w) if w == "block" && stmt.word(q + 1).as_deref() == Some("data") => {
                    self.keywords_in(stmt, q..q + 2);
                    q += 2;
                    Some(BlockKind::BlockData)
                }
                Some(w) => match BlockKind::from_end_word(&w) {
                    Some(kind) => {
                        self.keyword(stmt, q);
                        q += 1;
                        Some(kind)
                    }
                    None => None,
                },
                None => None,
            }
        } else if head == "endblockdata" {
            Some(BlockKind::BlockData)
        } else {
            BlockKind::from_end_word(&head[3..])
        };
        let name_kind = if target == Some(BlockKind::TypeDef) { "type_identifier" } else { "identifier" };
        for r in q..stmt.len() {
            if stmt.lx(r) == Some(Lx::Word) {
                self.set(stmt, r, name_kind, None);
            }
        }
        StmtKind::End(target)
    }

    fn unit_start(&mut self, stmt: &Stmt<'_>, p: usize) -> Option<StmtKind> {
        let mut q = p;
        loop {
            let w = stmt.word(q)?;
            if w == "subroutine" || w == "function" {
                if stmt.lx(q + 1) != Some(Lx::Word) {
                    return None;
                }
                break;
            }
            if !UNIT_PREFIXES.contains(&w.as_str()) {
                return None;
            }
            q = if TYPE_WORDS.contains(&w.as_str()) { self.type_spec_probe(stmt, q)? } else { q + 1 };
        }
        // Confirmed: now label the prefix for real.
        let mut r = p;
        while r < q {
            let w = stmt.word(r).unwrap_or_default();
            r = if TYPE_WORDS.contains(&w.as_str()) { self.type_spec(stmt, r) } else {
                self.keyword(stmt, r);
                r + 1
            };
        }
        let kind = if stmt.word(q).as_deref() == Some("subroutine") { BlockKind::Subroutine } else { BlockKind::Function };
        self.keyword(stmt, q);
        self.identifier(stmt, q + 1, Some("func_decl"));
        let mut r = q + 2;
        if stmt.is_op(r, "(") {
            let close = stmt.close_paren(r).unwrap_or(stmt.len());
            for a in r + 1..close {
                self.identifier(stmt, a, None);
            }
            r = close + 1;
        }
        while r < stmt.len() {
            match stmt.word(r).as_deref() {
                Some("result") => {
                    self.keyword(stmt, r);
                    self.identifier(stmt, r + 2, None);
                    r = stmt.skip_group(r + 1);
                }
                Some("bind") => {
                    let end = stmt.skip_group(r + 1);
                    self.keywords_in(stmt, r..end);
                    r = end;
                }
                _ => r += 1,
            }
        }
        Some(StmtKind::Open(kind))
    }

    /// Like `type_spec` but without labelling anything.
    fn type_spec_probe(&self, stmt: &Stmt<'_>, p: usize) -> Option<usize> {
        let head = stmt.word(p)?;
        let mut q = p + 1;
        if head == "double" && matches!(stmt.word(q).as_deref(), Some("precision") | Some("complex")) {
            q += 1;
        }
        if stmt.is_op(q, "(") {
            q = stmt.close_paren(q)? + 1;
        }
        if stmt.is_op(q, "*") {
            q = if stmt.is_op(q + 1, "(") { stmt.skip_group(q + 1) } else { q + 2 };
        }
        Some(q)
    }

    fn derived_type(&mut self, stmt: &Stmt<'_>, p: usize) {
        self.keyword(stmt, p);
        let mut q = p + 1;
        while stmt.is_op(q, ",") {
            self.keyword(stmt, q + 1);
            let end = stmt.skip_group(q + 2);
            if stmt.word(q + 1).as_deref() == Some("extends") {
                for r in q + 2..end {
                    if stmt.lx(r) == Some(Lx::Word) {
                        self.set(stmt, r, "type_identifier", None);
                    }
                }
            } else {
                self.keywords_in(stmt, q + 2..end);
            }
            q = end;
        }
        if stmt.is_op(q, "::") {
            q += 1;
        }
        if stmt.lx(q) == Some(Lx::Word) {
            self.set(stmt, q, "type_identifier", None);
        }
    }

    fn declaration(&mut self, stmt: &Stmt<'_>, p: usize) {
        let mut q = if stmt.word(p).as_deref() == Some("enumerator") {
            self.keyword(stmt, p);
            p + 1
        } else {
            self.type_spec(stmt, p)
        };
        let mut all_arr = false;
        let mut all_func = false;
        while stmt.is_op(q, ",") {
            let attr = stmt.word(q + 1).unwrap_or_default();
            self.keyword(stmt, q + 1);
            match attr.as_str() {
                "dimension" | "codimension" => all_arr = true,
                "external" => all_func = true,
                "intent" | "bind" => {
                    let end = stmt.skip_group(q + 2);
                    self.keywords_in(stmt, q + 2..end);
                }
                _ => {}
            }
            q = stmt.skip_group(q + 2);
        }
        if stmt.is_op(q, "::") {
            q += 1;
        }
        self.entities(stmt, q, |has_shape| {
            if all_func {
                Some("func_decl")
            } else if has_shape || all_arr {
                Some("arr_decl")
            } else {
                Some("var_decl")
            }
        });
    }

    /// Entity list `a(10), b = 1, c*8`: labels each entity name by `role`.
    fn entities(&mut self, stmt: &Stmt<'_>, mut q: usize, role: impl Fn(bool) -> Option<&'static str>) {
        if stmt.is_op(q, "::") {
            q += 1;
        }
        while q < stmt.len() {
            if stmt.lx(q) == Some(Lx::Word) {
                let has_shape = stmt.is_op(q + 1, "(") || stmt.is_op(q + 1, "[");
                self.identifier(stmt, q, role(has_shape));
            }
            let mut depth = 0i32;
            q += 1;
            while q < stmt.len() {
                if stmt.is_op(q, "(") || stmt.is_op(q, "[") {
                    depth += 1;
                } else if stmt.is_op(q, ")") || stmt.is_op(q, "]") {
                    depth -= 1;
                } else if depth == 0 && stmt.is_op(q, ",") {
                    break;
                }
                q += 1;
            }
            q += 1;
        }
    }
}

fn is_anonymized_label(text: &str) -> bool {
    text.strip_prefix("num_")
        .is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
}

enum Item {
    Leaf(usize),
    Missing(usize),
    Node {
        kind: &'static str,
        error: bool,
        items: Vec<Item>,
    },
}

struct Frame {
    block: Option<BlockKind>,
    items: Vec<Item>,
}

fn close_frame(stack: &mut Vec<Frame>, missing_at: Option<usize>) {
    let mut frame = stack.pop().expect("frame to close");
    if let Some(at) = missing_at {
        frame.items.push(Item::Missing(at));
    }
    let kind = frame.block.map_or("translation_unit", BlockKind::node_kind);
    stack
        .last_mut()
        .expect("root frame stays")
        .items
        .push(Item::Node { kind, error: false, items: frame.items });
}

pub(crate) fn parse(text: &str) -> SyntaxTree {
    let lex = lex(text);
    let mut leaves = Leaves {
        kind: lex
            .iter()
            .map(|l| match l.kind {
                Lx::Word => "identifier",
                Lx::Number => "number_literal",
                Lx::Str => "string_literal",
                Lx::DotOp | Lx::Op => "operator",
                Lx::Comment => "comment",
                Lx::Continuation => "continuation",
                Lx::Newline => "newline",
                Lx::Error => "ERROR",
            })
            .collect(),
        field: vec![None; lex.len()],
    };

    let mut stack = vec![Frame { block: None, items: Vec::new() }];
    let mut pending: Vec<usize> = Vec::new();
    let mut k = 0;
    while k <= lex.len() {
        let terminator = lex.get(k).map(|l| (l.kind, &text[l.span.clone()]));
        let ends_statement = match terminator {
            None | Some((Lx::Newline, _)) => true,
            Some((Lx::Op, ";")) => {
                pending.push(k);
                true
            }
            Some(_) => {
                pending.push(k);
                false
            }
        };
        k += 1;
        if !ends_statement {
            continue;
        }
        let items = std::mem::take(&mut pending);
        let has_code = items.iter().any(|&i| !matches!(lex[i].kind, Lx::Comment | Lx::Continuation));
        if !has_code {
            stack.last_mut().expect("root").items.extend(items.into_iter().map(Item::Leaf));
            continue;
        }
        let sig: Vec<usize> = items
            .iter()
            .copied()
            .filter(|&i| !matches!(lex[i].kind, Lx::Comment | Lx::Continuation))
            .filter(|&i| !(lex[i].kind == Lx::Op && &text[lex[i].span.clone()] == ";"))
            .collect();
        let stmt = Stmt { src: text, lex: &lex, sig };
        let kind = leaves.analyze(&stmt);
        let balanced = stmt.balanced();
        let node_kind = match kind {
            StmtKind::Open(b) => b.statement_kind(),
            StmtKind::End(_) => "end_statement",
            StmtKind::Declaration => "type_declaration",
            StmtKind::Call => "call_statement",
            StmtKind::Use => "use_statement",
            StmtKind::Preproc => "preproc_directive",
            StmtKind::Other => "statement",
        };
        let mut node = Item::Node {
            kind: if balanced { node_kind } else { "ERROR" },
            error: !balanced,
            items: items.into_iter().map(Item::Leaf).collect(),
        };
        match kind {
            StmtKind::Open(block) => {
                stack.push(Frame { block: Some(block), items: vec![node] });
            }
            StmtKind::End(target) => {
                let wanted = |f: &Frame| match target {
                    Some(t) => f.block == Some(t),
                    None => f.block.is_some_and(BlockKind::is_program_unit),
                };
                match stack.iter().rposition(wanted) {
                    Some(pos) if pos > 0 => {
                        let at = lex[stmt.sig[0]].span.start;
                        while stack.len() > pos + 1 {
                            close_frame(&mut stack, Some(at));
                        }
                        stack.last_mut().expect("frame").items.push(node);
                        close_frame(&mut stack, None);
                    }
                    _ => {
                        // A bare `end` may close a main program that has no
                        // `program` statement; a named `end` with nothing open
                        // is an error.
                        if target.is_some() {
                            if let Item::Node { kind, error, .. } = &mut node {
                                *kind = "ERROR";
                                *error = true;
                            }
                        }
                        stack.last_mut().expect("frame").items.push(node);
                    }
                }
            }
            _ => stack.last_mut().expect("frame").items.push(node),
        }
    }
    while stack.len() > 1 {
        close_frame(&mut stack, Some(text.len()));
    }
    let root = stack.pop().expect("root frame").items;

    let mut nodes = Vec::new();
    let root_item = Item::Node { kind: "translation_unit", error: false, items: root };
    flatten(&root_item, None, None, &lex, &leaves, &mut nodes);
    nodes[0].span = 0..text.len();
    SyntaxTree::from_nodes(Language::Fortran, nodes, text.len())
}

fn flatten(
    item: &Item,
    parent: Option<usize>,
    field: Option<&'static str>,
    lex: &[Lexeme],
    leaves: &Leaves,
    nodes: &mut Vec<SyntaxNode>,
) -> usize {
    let id = nodes.len();
    let node = match item {
        Item::Leaf(k) => SyntaxNode {
            kind: leaves.kind[*k],
            named: !matches!(lex[*k].kind, Lx::Op | Lx::DotOp),
            field: leaves.field[*k].or(field),
            span: lex[*k].span.clone(),
            parent,
            children: Vec::new(),
            is_error: lex[*k].kind == Lx::Error,
            is_missing: false,
        },
        Item::Missing(at) => SyntaxNode {
            kind: "end_statement",
            named: true,
            field: None,
            span: *at..*at,
            parent,
            children: Vec::new(),
            is_error: false,
            is_missing: true,
        },
        Item::Node { kind, error, .. } => SyntaxNode {
            kind,
            named: true,
            field,
            span: 0..0,
            parent,
            children: Vec::new(),
            is_error: *error,
            is_missing: false,
        },
    };
    nodes.push(node);
    if let Item::Node { items, .. } = item {
        let mut children = Vec::with_capacity(items.len());
        for child in items {
            children.push(flatten(child, Some(id), None, lex, leaves, nodes));
        }
        let span = match (children.first(), children.last()) {
            (Some(&f), Some(&l)) => nodes[f].span.start..nodes[l].span.end,
            _ => 0..0,
        };
        nodes[id].children = children;
        nodes[id].span = span;
    }
    id
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf_kinds(src: &str) -> Vec<(&'static str, String, Option<&'static str>)> {
        let tree = parse(src);
        tree.leaves()
            .into_iter()
            .map(|id| {
                let n = tree.node(id);
                (n.kind, src[n.span.clone()].to_string(), n.field)
            })
            .collect()
    }

    fn role_of(src: &str, name: &str) -> Option<&'static str> {
        leaf_kinds(src)
            .into_iter()
            .filter(|(k, t, _)| *k == "identifier" && t == name)
            .find_map(|(_, _, f)| f)
    }

    const SAXPY: &str = "\
module blas_mod
  implicit none
contains
  ! y = a*x + y
  subroutine saxpy(n, a, x, y)
    integer, intent(in) :: n
    real(kind=8), intent(in) :: a, x(n)
    real(kind=8), dimension(n), intent(inout) :: y
    integer :: i
    !$omp parallel do
    do i = 1, n
      y(i) = a * x(i) + y(i)
    end do
  end subroutine saxpy
end module blas_mod
";

    #[test]
    fn lexes_numbers_and_dot_operators() {
        let toks: Vec<(Lx, &str)> = lex("x = 1.5d-3 + 2.0_dp .and. 3.eq.4 .or. .5e2")
            .into_iter()
            .map(|l| (l.kind, &"x = 1.5d-3 + 2.0_dp .and. 3.eq.4 .or. .5e2"[l.span]))
            .collect();
        assert_eq!(
            toks,
            vec![
                (Lx::Word, "x"),
                (Lx::Op, "="),
                (Lx::Number, "1.5d-3"),
                (Lx::Op, "+"),
                (Lx::Number, "2.0_dp"),
                (Lx::DotOp, ".and."),
                (Lx::Number, "3"),
                (Lx::DotOp, ".eq."),
                (Lx::Number, "4"),
                (Lx::DotOp, ".or."),
                (Lx::Number, ".5e2"),
            ]
        );
    }

    #[test]
    fn strings_and_comments() {
        let kinds = leaf_kinds("print *, 'it''s ! not a comment' ! comment\n");
        assert!(kinds.iter().any(|(k, t, _)| *k == "string_literal" && t == "'it''s ! not a comment'"));
        assert!(kinds.iter().any(|(k, t, _)| *k == "comment" && t == "! comment"));
    }

    #[test]
    fn module_structure_and_roles() {
        let tree = parse(SAXPY);
        assert_eq!(tree.error_count(), 0);
        let kinds: Vec<&str> = tree.nodes().iter().map(|n| n.kind).collect();
        assert!(kinds.contains(&"module"));
        assert!(kinds.contains(&"subroutine"));
        assert!(kinds.contains(&"do_construct"));
        assert_eq!(role_of(SAXPY, "saxpy"), Some("func_decl"));
        assert_eq!(role_of(SAXPY, "x"), Some("arr_decl"));
        assert_eq!(role_of(SAXPY, "y"), Some("arr_decl"));
        assert_eq!(role_of(SAXPY, "i"), Some("var_decl"));
        assert_eq!(role_of(SAXPY, "a"), Some("var_decl"));
        let kw = leaf_kinds(SAXPY);
        assert!(kw.iter().any(|(k, t, _)| *k == "keyword" && t == "intent"));
        assert!(kw.iter().any(|(k, t, _)| *k == "keyword" && t == "kind"));
        assert!(kw.iter().any(|(k, t, _)| *k == "comment" && t == "!$omp parallel do"));
    }

    #[test]
    fn continuation_lines_join_statements() {
        let src = "x = a + &\n  ! note\n  & b\ny = 2\n";
        let tree = parse(src);
        let stmts = tree.nodes().iter().filter(|n| n.kind == "statement").count();
        assert_eq!(stmts, 2);
        assert_eq!(tree.error_count(), 0);
    }

    #[test]
    fn calls_and_undeclared_references() {
        let src = "subroutine s()\n  call foo(bar(1), z)\n  w = sqrt(z)\nend subroutine\n";
        assert_eq!(role_of(src, "foo"), Some("call"));
        assert_eq!(role_of(src, "bar"), Some("paren_use"));
        assert_eq!(role_of(src, "sqrt"), Some("paren_use"));
        assert_eq!(role_of(src, "z"), None);
    }

    #[test]
    fn keyword_named_assignment_target_is_identifier() {
        let kinds = leaf_kinds("data = 1\nresult(2) = 3\n");
        assert_eq!(kinds[0].0, "identifier");
        assert!(kinds.iter().any(|(k, t, _)| *k == "identifier" && t == "result"));
    }

    #[test]
    fn mismatched_and_unclosed_blocks_are_errors() {
        assert!(parse("subroutine s(\nend subroutine\n").error_count() >= 1);
        assert!(parse("subroutine s()\n  do i = 1, 2\nend subroutine s\n").error_count() >= 1);
        assert!(parse("subroutine s()\n  x = 1\n").error_count() >= 1);
        assert!(parse("end do\n").error_count() >= 1);
        assert!(parse("x = 'open\n").error_count() >= 1);
        assert_eq!(parse("x = 1\nend\n").error_count(), 0);
    }

    #[test]
    fn labeled_do_is_not_a_block() {
        let src = "subroutine s()\n  do 10 i = 1, 3\n10 continue\nend subroutine s\n";
        assert_eq!(parse(src).error_count(), 0);
        let anon = "subroutine s()\n  do num_1 i = 1, 3\nnum_1 continue\nend subroutine s\n";
        assert_eq!(parse(anon).shape_signature(), parse(src).shape_signature());
    }

    #[test]
    fn functions_with_prefixes() {
        let src = "pure real(kind=8) function norm2(v) result(r)\n  real(8), intent(in) :: v(:)\n  r = sqrt(sum(v**2))\nend function norm2\n";
        let tree = parse(src);
        assert_eq!(tree.error_count(), 0);
        assert!(tree.nodes().iter().any(|n| n.kind == "function"));
        assert_eq!(role_of(src, "norm2"), Some("func_decl"));
        assert_eq!(role_of(src, "v"), Some("arr_decl"));
    }

    #[test]
    fn derived_types_keep_type_names() {
        let src = "type :: particle\n  real :: pos(3)\nend type particle\ntype(particle) :: p\n";
        let kinds = leaf_kinds(src);
        let particle: Vec<_> = kinds.iter().filter(|(_, t, _)| t == "particle").collect();
        assert_eq!(particle.len(), 3);
        assert!(particle.iter().all(|(k, _, _)| *k == "type_identifier"));
        assert_eq!(parse(src).error_count(), 0);
    }
}
