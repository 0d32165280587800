mod common;

use common::{golden_units, oracle_lexemes, round_trip, vendored_run};
use tokompiler::{Language, Pipeline};

#[test]
fn oracle_sanity() {
    assert_eq!(
        oracle_lexemes(Language::C, "a->b[1] >>= 2; // x\n/* y */ s = \"p q\";"),
        ["a", "->", "b", "[", "1", "]", ">>=", "2", ";", "s", "=", "\"p q\"", ";"]
    );
    assert_eq!(
        oracle_lexemes(Language::C, "#include <a.h> int x = y < z; # pragma omp for"),
        ["#include", "<a.h>", "int", "x", "=", "y", "<", "z", ";", "#pragma", "omp", "for"]
    );
    assert_eq!(
        oracle_lexemes(Language::Fortran, "x = 1.5d-3 .and. y ! c\ncall f(a, &\n  'it''s')"),
        ["x", "=", "1.5d-3", ".and.", "y", "call", "f", "(", "a", ",", "'it''s'", ")"]
    );
}

#[test]
fn vendored_functions_round_trip() {
    let run = vendored_run();
    let pipeline = Pipeline::default();
    let failures: Vec<&str> = run
        .blocks
        .iter()
        .filter(|b| {
            let (original, restored) = round_trip(&pipeline, b);
            original != restored
        })
        .map(|b| b.id.as_str())
        .collect();
    assert!(failures.is_empty(), "{} failures: {:?}", failures.len(), failures);
}

#[test]
fn golden_snippets_round_trip() {
    let units = golden_units();
    assert_eq!(units.len(), 50);
    for scope_seed in [0, 42, 7777] {
        let pipeline = Pipeline { seed: scope_seed, ..Pipeline::default() };
        for unit in &units {
            let (original, restored) = round_trip(&pipeline, unit);
            assert_eq!(restored, original, "{}", unit.id);
        }
    }
}
