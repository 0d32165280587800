"""Smoke test for the `tokompiler` Python module.

Build and install first:

    pip install maturin
    maturin develop -m crates/py/Cargo.toml    # or: maturin build + pip install

Then run `python python/smoke_test.py` from the repository root.
"""

import json
import os
import re
import sys
import tempfile

import tokompiler

HERE = os.path.dirname(os.path.abspath(__file__))
CORPUS = os.path.join(HERE, "..", "corpus")

C_SOURCE = "int main() { int r[2800 + 1]; }"
FORTRAN_SOURCE = """subroutine axpy(n, a, x, y)
  integer :: n, i
  real :: a, x(n), y(n)
  do i = 1, n
    y(i) = a * x(i) + y(i)
  end do
end subroutine axpy
"""


def check(cond, what):
    if not cond:
        print(f"FAIL {what}")
        sys.exit(1)
    print(f"ok   {what}")


def main():
    tok = tokompiler.Tokenizer(seed=42)
    [unit] = tok.tokenize(C_SOURCE, "c", unit_id="example.c")
    check(
        re.fullmatch(r"int func_\d+ \( \) \{ int arr_\d+ \[ num_\d+ \+ num_\d+ \] ; \}", unit.normalized),
        f"anonymized C: {unit.normalized}",
    )
    check(unit.tokens[:2] == ["int", "func"] and unit.tokens[2].isdigit(), "replacement tokens are split")
    restored = unit.restore()
    check(restored.split() == "int main ( ) { int r [ 2800 + 1 ] ; }".split(), f"restored: {restored}")

    again = tokompiler.Tokenizer(seed=42).tokenize(C_SOURCE, "c", unit_id="example.c")[0]
    check(again.normalized == unit.normalized, "same seed, same output")

    d = tokompiler.ChangeDictionary.from_json(unit.dictionary.to_json())
    check(len(d) == 4 and d.original(d.replacement("main")) == "main", "dictionary JSON round trip")
    check(tokompiler.restore(unit.tokens, d) == restored, "module-level restore")

    funcs = tokompiler.Tokenizer(scope="function").tokenize(FORTRAN_SOURCE, "fortran", "axpy.f90")
    check(len(funcs) == 1 and funcs[0].restore().split()[:2] == ["subroutine", "axpy"], "Fortran function scope")

    vocab = tokompiler.Vocabulary.build([unit.tokens, funcs[0].tokens])
    ids = vocab.encode(unit.tokens + ["never_seen"])
    check(vocab.decode(ids)[-1] == "<unk>" and vocab.decode(ids)[:-1] == unit.tokens, f"vocabulary of {len(vocab)}")

    bpe = tokompiler.BpeModel.train([C_SOURCE, FORTRAN_SOURCE] * 3, target_size=400, sample_fraction=1.0)
    text = FORTRAN_SOURCE + "héllo ∑"
    check(bpe.decode(bpe.encode(text)) == text.encode(), f"BPE lossless ({bpe.num_merges} merges)")

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "bpe.txt")
        bpe.save(path)
        check(tokompiler.BpeModel.load(path).encode(text) == bpe.encode(text), "BPE save/load")

    if os.path.isdir(CORPUS):
        stats = json.loads(tokompiler.corpus_stats(CORPUS))
        langs = stats["languages"]
        check(set(langs) == {"C", "C++", "Fortran"}, "corpus stats: " + json.dumps(langs["Fortran"]))

    try:
        tokompiler.Tokenizer().tokenize("x", "cobol")
        check(False, "unsupported language raises")
    except ValueError:
        check(True, "unsupported language raises")

    print("all good")


if __name__ == "__main__":
    main()
