#!/usr/bin/env python3
"""Generates frozen homology test cases for random three-term complexes.

Each case is a complex  Z^r2 --d2--> Z^r1 --d1--> Z^r0  with d1 random and
d2 built from integer kernel vectors of d1 (so d1 @ d2 = 0 by construction).

Expected homology is computed by a route independent of the library's
kernel-basis algorithm:
  * free rank:  rank H_k = r_k - rank(d_k) - rank(d_{k+1})  (ranks over Q),
  * torsion:    torsion(H_k) = torsion(coker d_{k+1}), read off the Smith
    normal form of d_{k+1}; this uses the splitting of
    0 -> H_k -> coker d_{k+1} -> im d_k -> 0 (the image is free).

Smith diagonals of d1 are also recorded to pin the normal form itself.

Output: tests/data/homology_cases.json (deterministic; fixed seed).
"""

import json
import pathlib
import random

import sympy
from sympy.matrices.normalforms import smith_normal_form

SEED = 20260814
NUM_CASES = 200
MAX_RANK = 6
ENTRY_BOUND = 5

OUT = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data" / "homology_cases.json"


def smith_diagonal(m: sympy.Matrix):
    """Nonzero invariant factors of an integer matrix, ascending."""
    if m.rows == 0 or m.cols == 0:
        return []
    d = smith_normal_form(m, domain=sympy.ZZ)
    diag = [abs(int(d[i, i])) for i in range(min(d.rows, d.cols))]
    return [x for x in diag if x != 0]


def integer_kernel_basis(m: sympy.Matrix):
    """Integer vectors spanning ker(m) over Q (not necessarily saturated;
    only used to construct d2, never to verify anything)."""
    basis = []
    for v in m.nullspace():
        scale = 1
        for x in v:
            scale = sympy.ilcm(scale, sympy.fraction(x)[1])
        basis.append([int(x * scale) for x in v])
    return basis


def homology_group(rank_k: int, d_k: sympy.Matrix, d_k1: sympy.Matrix):
    """(free rank, torsion list) of ker(d_k)/im(d_k1)."""
    rank_dk = d_k.rank() if d_k.rows and d_k.cols else 0
    rank_dk1 = d_k1.rank() if d_k1.rows and d_k1.cols else 0
    free = rank_k - rank_dk - rank_dk1
    torsion = [x for x in smith_diagonal(d_k1) if x > 1]
    return {"rank": free, "torsion": torsion}


def rows_of(m: sympy.Matrix):
    return [[int(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def main():
    rng = random.Random(SEED)
    cases = []
    while len(cases) < NUM_CASES:
        r0 = rng.randint(0, MAX_RANK)
        r1 = rng.randint(0, MAX_RANK)
        d1 = sympy.zeros(r0, r1)
        for i in range(r0):
            for j in range(r1):
                if rng.random() < 0.7:
                    d1[i, j] = rng.randint(-ENTRY_BOUND, ENTRY_BOUND)

        kernel = integer_kernel_basis(d1) if r1 else []
        r2 = rng.randint(0, MAX_RANK // 2) if kernel else 0
        d2 = sympy.zeros(r1, r2)
        for j in range(r2):
            for vec in kernel:
                c = rng.randint(-2, 2)
                for i in range(r1):
                    d2[i, j] += c * vec[i]

        assert (d1 * d2).is_zero_matrix or r2 == 0 or r0 == 0

        empty_d0 = sympy.zeros(0, r0)   # no boundary out of degree 0
        empty_d3 = sympy.zeros(r2, 0)   # nothing above degree 2
        case = {
            "ranks": [r0, r1, r2],
            "d1": rows_of(d1),
            "d2": rows_of(d2),
            "H": [
                homology_group(r0, empty_d0, d1),
                homology_group(r1, d1, d2),
                homology_group(r2, d2, empty_d3),
            ],
            "snf_d1_diagonal": smith_diagonal(d1),
        }
        cases.append(case)

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"seed": SEED, "cases": cases}, indent=1) + "\n")
    print(f"wrote {len(cases)} cases to {OUT}")


if __name__ == "__main__":
    main()
