mod common;

use std::collections::BTreeSet;
use std::sync::LazyLock;

use proptest::prelude::*;
use tokompiler::anonymizer::parse_replacement;
use tokompiler::bpe::{train_bpe, BpeModel};
use tokompiler::frontend::parse;
use tokompiler::lexicalizer::{decode, encode, TokenStream};
use tokompiler::vocabulary::{VocabConfig, Vocabulary};
use tokompiler::{Language, Pipeline, SourceUnit};

fn ident() -> impl Strategy<Value = String> {
    prop_oneof![
        8 => "[a-z][a-z0-9]{0,4}_?[a-z0-9]{0,3}".prop_map(|s| format!("v{s}")),
        2 => prop::sample::select(vec!["i", "n", "x", "sum", "data", "tmp", "k2"]).prop_map(str::to_string),
        1 => "(func|var|arr|num|str)_[0-9]{1,3}",
    ]
}

fn number() -> impl Strategy<Value = String> {
    prop_oneof![
        "0|[1-9][0-9]{0,4}",
        "(0|[1-9][0-9]?)\\.[0-9]{1,3}",
        "0x[0-9A-F]{1,4}",
        "[1-9]e-[1-9]",
    ]
}

fn c_stmt() -> impl Strategy<Value = String> {
    (ident(), ident(), ident(), number(), "[a-z ]{0,8}", 0..7usize).prop_map(|(a, b, c, n, w, k)| match k {
        0 => format!("{a} = {b} + {n};"),
        1 => format!("{a}[{n}] = {b}({c});"),
        2 => format!("if ({a} < {n}) {{ {b} = {c} * {n}; }}"),
        3 => format!("printf(\"{w}%d\\n\", {a});"),
        4 => format!("/* {w} */ {a} += {b}; // {w}"),
        5 => format!("for ({a} = 0; {a} < {n}; {a}++) {{ {b}[{a}] = {c}; }}"),
        _ => format!("{a} = '{}';", w.chars().next().unwrap_or('q')),
    })
}

fn c_program() -> impl Strategy<Value = String> {
    (ident(), ident(), prop::collection::vec(c_stmt(), 1..12)).prop_map(|(f, p, body)| {
        format!("int {f}(int {p}) {{\n    {}\n    return {p};\n}}\n", body.join("\n    "))
    })
}

fn f_stmt() -> impl Strategy<Value = String> {
    (ident(), ident(), number(), 0..4usize).prop_map(|(a, b, n, k)| match k {
        0 => format!("{a} = {b} + {n}"),
        1 => format!("call {a}({b}, {n})"),
        2 => format!("if ({a} > {n}) {b} = {a} ! note"),
        _ => format!("do {a} = 1, {n}\n    {b} = {b} * 2\n  end do"),
    })
}

fn f_program() -> impl Strategy<Value = String> {
    (ident(), prop::collection::vec(f_stmt(), 1..10))
        .prop_map(|(s, body)| format!("subroutine {s}()\n  {}\nend subroutine {s}\n", body.join("\n  ")))
}

fn program() -> impl Strategy<Value = (Language, String)> {
    prop_oneof![
        c_program().prop_map(|p| (Language::C, p)),
        c_program().prop_map(|p| (Language::Cpp, p)),
        f_program().prop_map(|p| (Language::Fortran, p)),
    ]
}

fn unit(lang: Language, text: &str) -> SourceUnit {
    SourceUnit::new("prop", lang, "prop", text)
}

static BPE: LazyLock<BpeModel> = LazyLock::new(|| {
    let run = common::vendored_run();
    let docs: Vec<&str> = run.files.iter().map(|u| u.text.as_str()).collect();
    train_bpe(&docs, 2000, 0.1, 5).unwrap()
});

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dictionary_is_a_bijection((lang, src) in program(), seed in any::<u64>()) {
        let out = Pipeline { seed, ..Pipeline::default() }.tokenize(&unit(lang, &src)).unwrap();
        let dict = &out[0].anonymized.dictionary;
        let originals: BTreeSet<_> = dict.entries().iter().map(|e| &e.original).collect();
        let replacements: BTreeSet<_> = dict.entries().iter().map(|e| &e.replacement).collect();
        prop_assert_eq!(originals.len(), dict.len());
        prop_assert_eq!(replacements.len(), dict.len());
        for e in dict.entries() {
            let (category, _) = parse_replacement(&e.replacement).unwrap();
            prop_assert_eq!(category, e.category);
            prop_assert_eq!(dict.original(&e.replacement), Some(e.original.as_str()));
        }
    }

    #[test]
    fn same_seed_same_output((lang, src) in program(), seed in any::<u64>()) {
        let p = Pipeline { seed, ..Pipeline::default() };
        let a = p.tokenize(&unit(lang, &src)).unwrap();
        let b = p.tokenize(&unit(lang, &src)).unwrap();
        prop_assert_eq!(&a[0].normalized, &b[0].normalized);
        prop_assert_eq!(a[0].anonymized.dictionary.to_json().unwrap(), b[0].anonymized.dictionary.to_json().unwrap());
    }

    #[test]
    fn token_stream_shape_ignores_seed((lang, src) in program(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let u = unit(lang, &src);
        let a = Pipeline { seed: s1, ..Pipeline::default() }.tokenize(&u).unwrap();
        let b = Pipeline { seed: s2, ..Pipeline::default() }.tokenize(&u).unwrap();
        let shape = |t: &TokenStream| -> Vec<String> {
            t.tokens.iter().map(|x| if x.bytes().all(|c| c.is_ascii_digit()) { "#".into() } else { x.clone() }).collect()
        };
        prop_assert_eq!(shape(&a[0].stream), shape(&b[0].stream));
    }

    #[test]
    fn tokens_partition_the_text((lang, src) in program()) {
        let u = unit(lang, &src);
        let tree = parse(&u).unwrap();
        let tokens = tree.tokens(&src);
        let mut last = 0;
        for t in &tokens {
            prop_assert!(t.span.start >= last && t.span.end > t.span.start && t.span.end <= src.len());
            let gap = src[last..t.span.start].trim();
            prop_assert!(gap.is_empty() || gap.starts_with('/') || gap.starts_with('!'), "gap {:?}", gap);
            last = t.span.end;
        }
        let tail = src[last..].trim();
        prop_assert!(tail.is_empty() || tail.starts_with('/') || tail.starts_with('!'));
    }

    #[test]
    fn restore_inverts_tokenize((lang, src) in program(), seed in any::<u64>()) {
        let (original, restored) = common::round_trip(&Pipeline { seed, ..Pipeline::default() }, &unit(lang, &src));
        prop_assert_eq!(restored, original);
    }

    #[test]
    fn vocabulary_grows_monotonically(
        a in prop::collection::vec(prop::collection::vec("[a-z(){};+]{1,4}", 0..20), 1..5),
        b in prop::collection::vec(prop::collection::vec("[a-z(){};+]{1,4}", 0..20), 0..5),
    ) {
        let streams = |v: &Vec<Vec<String>>| -> Vec<TokenStream> {
            v.iter().map(|t| TokenStream::new("s", t.clone())).collect()
        };
        let cfg = VocabConfig { include_number_range: false, include_category_words: false, ..VocabConfig::default() };
        let sa = streams(&a);
        let mut sab = sa.clone();
        sab.extend(streams(&b));
        match (Vocabulary::build(&sa, &cfg), Vocabulary::build(&sab, &cfg)) {
            (Ok(va), Ok(vab)) => {
                prop_assert!(va.tokens().iter().all(|t| vab.contains(t)));
                prop_assert!(va.len() <= vab.len());
            }
            (Err(_), _) => prop_assert!(a.iter().all(Vec::is_empty)),
            (Ok(_), Err(e)) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn decode_inverts_encode(tokens in prop::collection::vec("[a-e]{1,2}", 1..40), probe in prop::collection::vec("[a-g]{1,2}", 0..40)) {
        let cfg = VocabConfig { include_number_range: false, ..VocabConfig::default() };
        let vocab = Vocabulary::build([&TokenStream::new("t", tokens.clone())], &cfg).unwrap();
        let enc = encode(&TokenStream::new("t", tokens.clone()), &vocab);
        prop_assert_eq!(decode(enc.ids.as_ref().unwrap(), &vocab).unwrap(), tokens);
        let enc = encode(&TokenStream::new("p", probe.clone()), &vocab);
        let back = decode(enc.ids.as_ref().unwrap(), &vocab).unwrap();
        for (orig, got) in probe.iter().zip(&back) {
            prop_assert!(got == orig || (got == "<unk>" && !vocab.contains(orig)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn bpe_is_lossless_on_bytes(bytes in prop::collection::vec(any::<u8>(), 0..128)) {
        let ids = BPE.encode_bytes(&bytes);
        prop_assert_eq!(BPE.decode(&ids).unwrap(), bytes);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn bpe_is_lossless_on_text(text in "\\PC{0,200}") {
        prop_assert_eq!(BPE.decode(&BPE.encode(&text)).unwrap(), text.into_bytes());
    }

    #[test]
    fn bpe_never_splits_more_than_bytes(text in "[ -~\\n]{0,200}") {
        prop_assert!(BPE.encode(&text).len() <= text.len());
    }
}
