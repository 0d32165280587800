#!/usr/bin/env python3
"""Slow reference BPE, used to produce expected values for the Rust tests.

train: every document is used (no sampling); prints one merge per line as
       "<left hex> <right hex>".
encode: loads a model file written by `tokompiler bpe-train` and prints the
        number of tokens for each input file.
"""

import argparse
import sys
from collections import Counter


def char_class(c):
    if c.isalpha():
        return "L"
    if c.isnumeric():
        return "N"
    if c.isspace():
        return "S"
    return "O"


def pretokenize(text):
    out = []
    i, n = 0, len(text)
    while i < n:
        cls = char_class(text[i])
        j = i + 1
        while j < n and char_class(text[j]) == cls:
            j += 1
        if cls == "S" and j < n and text[j - 1] == " ":
            # the last space moves onto the following run
            if j - 1 > i:
                out.append(text[i:j - 1])
            nxt = char_class(text[j])
            k = j + 1
            while k < n and char_class(text[k]) == nxt:
                k += 1
            out.append(text[j - 1:k])
            i = k
            continue
        out.append(text[i:j])
        i = j
    return out


def train(docs, target):
    words = Counter()
    for d in docs:
        for chunk in pretokenize(d):
            words[tuple(bytes([b]) for b in chunk.encode())] += 1
    words = dict(words)
    merges = []
    while len(merges) < target - 257:
        counts = Counter()
        for w, f in words.items():
            for a, b in zip(w, w[1:]):
                counts[(a, b)] += f
        if not counts:
            break
        # highest count, then the smallest pair of byte strings
        top = max(counts.values())
        if top < 2:
            break
        best = min(p for p, c in counts.items() if c == top)
        merges.append(best)
        new = {}
        for w, f in words.items():
            out, i = [], 0
            while i < len(w):
                if i + 1 < len(w) and (w[i], w[i + 1]) == best:
                    out.append(w[i] + w[i + 1])
                    i += 2
                else:
                    out.append(w[i])
                    i += 1
            new[tuple(out)] = new.get(tuple(out), 0) + f
        words = new
    return merges


def load_model(path):
    lines = open(path).read().splitlines()
    symbols = [bytes([b]) for b in range(256)]
    ranks = {}
    # merged bytes alone are ambiguous, so rebuild pairs from ids
    for rank, line in enumerate(lines[5:]):
        l, r, _ = line.split()
        pair = (symbols[int(l)], symbols[int(r)])
        ranks.setdefault(pair, rank)
        symbols.append(pair[0] + pair[1])
    return ranks


def encode(text, ranks):
    total = 0
    for chunk in pretokenize(text):
        syms = [bytes([b]) for b in chunk.encode()]
        while True:
            cands = [(ranks[(a, b)], (a, b)) for a, b in zip(syms, syms[1:]) if (a, b) in ranks]
            if not cands:
                break
            _, pair = min(cands)
            out, i = [], 0
            while i < len(syms):
                if i + 1 < len(syms) and (syms[i], syms[i + 1]) == pair:
                    out.append(pair[0] + pair[1])
                    i += 2
                else:
                    out.append(syms[i])
                    i += 1
            syms = out
        total += len(syms)
    return total


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)
    t = sub.add_parser("train")
    t.add_argument("--target", type=int, required=True)
    t.add_argument("files", nargs="+")
    e = sub.add_parser("encode")
    e.add_argument("--model", required=True)
    e.add_argument("files", nargs="+")
    args = ap.parse_args()
    if args.cmd == "train":
        docs = [open(f, encoding="utf-8").read() for f in args.files]
        for a, b in train(docs, args.target):
            sys.stdout.write(f"{a.hex()} {b.hex()}\n")
    else:
        ranks = load_model(args.model)
        for f in args.files:
            print(f"{f}\t{encode(open(f, encoding='utf-8').read(), ranks)}")


if __name__ == "__main__":
    main()
