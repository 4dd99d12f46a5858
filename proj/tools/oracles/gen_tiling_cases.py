#!/usr/bin/env python3
"""Generates frozen complexes and homology for one-dimensional tilings.

Independent reference construction of the depth-N tiling complex.  Bases are
cut so that every included generator has its whole boundary inside the
previous level (no dangling terms):
  * C_0: admissible words of length <= N+1 (one marked-word orbit each),
  * C_1: generators x#1, x#2 for words of length <= N and x#1,2 for words of
    length <= N-1 (the pair generator references words two letters longer),
  * C_2: generators x#1|2, x#2|1 for words of length <= N-1,
with boundaries
  d1(x#1)   = x - sum_a ax
  d1(x#2)   = x - sum_b xb
  d1(x#1,2) = x - sum_a ax - sum_b xb + sum_{a,b} axb
  d2(x#1|2) = x#1 - x#1,2 - sum_b xb#1
  d2(x#2|1) = x#2 - x#1,2 - sum_a ax#2
(sums over letters keeping the word admissible).  Homology is computed as in
gen_homology_cases.py (rank count plus cokernel torsion).

Output: tests/data/tiling_cases.json.
"""

import json
import pathlib

import sympy
from sympy.matrices.normalforms import smith_normal_form

OUT = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data" / "tiling_cases.json"

CASES = [
    {"period": "ab", "depth": 3},
    {"period": "ab", "depth": 4},
    {"period": "ab", "depth": 5},
    {"period": "a", "depth": 3},
    {"period": "abc", "depth": 3},
]


def language(period: str, max_len: int):
    """Factors of the bi-infinite periodic word, up to max_len."""
    reps = period * (max_len // len(period) + 2)
    words = set()
    for n in range(1, max_len + 1):
        for i in range(len(period)):
            if i + n <= len(reps):
                words.add(reps[i:i + n])
    return words


def serialize(word: str) -> str:
    """Serialization of the marked word with the mark on the first letter,
    matching the library's canonical orbit representative."""
    return "t|[" + ".".join(word)


def alphabet(period: str):
    return sorted(set(period))


def build_complex(period: str, depth: int):
    n = depth
    lang = language(period, n + 3)
    sigma = alphabet(period)

    def adm(w):
        return w in lang

    c0 = sorted((w for w in lang if len(w) <= n + 1), key=serialize)
    c1_words = sorted((w for w in lang if len(w) <= n), key=serialize)
    c2_words = sorted((w for w in lang if len(w) <= n - 1), key=serialize)

    c0_index = {w: i for i, w in enumerate(c0)}
    c1_labels = []
    c1_index = {}
    for w in c1_words:
        tags = ("1", "2", "1,2") if len(w) <= n - 1 else ("1", "2")
        for tag in tags:
            c1_index[(w, tag)] = len(c1_labels)
            c1_labels.append(serialize(w) + "#" + tag)
    c2_labels = []
    for w in c2_words:
        for tag in ("1|2", "2|1"):
            c2_labels.append(serialize(w) + "#" + tag)

    d1 = sympy.zeros(len(c0), len(c1_labels))

    def bump0(col, w, c):
        assert len(w) <= n + 1, "boundary term escapes C_0"
        d1[c0_index[w], col] += c

    for w in c1_words:
        left = [a + w for a in sigma if adm(a + w)]
        right = [w + b for b in sigma if adm(w + b)]
        col = c1_index[(w, "1")]
        bump0(col, w, 1)
        for v in left:
            bump0(col, v, -1)
        col = c1_index[(w, "2")]
        bump0(col, w, 1)
        for v in right:
            bump0(col, v, -1)
        if (w, "1,2") in c1_index:
            both = [a + w + b for a in sigma for b in sigma if adm(a + w + b)]
            col = c1_index[(w, "1,2")]
            bump0(col, w, 1)
            for v in left:
                bump0(col, v, -1)
            for v in right:
                bump0(col, v, -1)
            for v in both:
                bump0(col, v, 1)

    d2 = sympy.zeros(len(c1_labels), len(c2_labels))
    col = 0
    for w in c2_words:
        # x#1|2
        d2[c1_index[(w, "1")], col] += 1
        d2[c1_index[(w, "1,2")], col] -= 1
        for b in sigma:
            if adm(w + b):
                d2[c1_index[(w + b, "1")], col] -= 1
        col += 1
        # x#2|1
        d2[c1_index[(w, "2")], col] += 1
        d2[c1_index[(w, "1,2")], col] -= 1
        for a in sigma:
            if adm(a + w):
                d2[c1_index[(a + w, "2")], col] -= 1
        col += 1

    assert (d1 * d2).is_zero_matrix, "d d != 0"
    return c0, c1_labels, c2_labels, d1, d2


def smith_diagonal(m):
    if m.rows == 0 or m.cols == 0:
        return []
    d = smith_normal_form(m, domain=sympy.ZZ)
    return [abs(int(d[i, i])) for i in range(min(d.rows, d.cols)) if d[i, i] != 0]


def hgroup(rank_k, d_k, d_k1):
    rank_dk = d_k.rank() if d_k.rows and d_k.cols else 0
    rank_dk1 = d_k1.rank() if d_k1.rows and d_k1.cols else 0
    return {
        "rank": rank_k - rank_dk - rank_dk1,
        "torsion": [x for x in smith_diagonal(d_k1) if x > 1],
    }


def rows_of(m):
    return [[int(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def main():
    out = []
    for case_desc in CASES:
        period, depth = case_desc["period"], case_desc["depth"]
        c0, c1, c2, d1, d2 = build_complex(period, depth)
        r0, r1, r2 = len(c0), len(c1), len(c2)
        h = [
            hgroup(r0, sympy.zeros(0, r0), d1),
            hgroup(r1, d1, d2),
            hgroup(r2, d2, sympy.zeros(r2, 0)),
        ]
        out.append({
            "period": period,
            "depth": depth,
            "ranks": [r0, r1, r2],
            "labels": [[serialize(w) for w in c0], c1, c2],
            "d1": rows_of(d1),
            "d2": rows_of(d2),
            "H": h,
        })
        print(f"period={period!r} depth={depth}: ranks={[r0, r1, r2]} "
              f"H0={h[0]} H1={h[1]} H2={h[2]}")

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"cases": out}, indent=1) + "\n")
    print(f"wrote {len(out)} cases to {OUT}")


if __name__ == "__main__":
    main()
