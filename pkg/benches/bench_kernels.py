#!/usr/bin/env python3
"""Benchmark: compiled elimination kernels vs the pure-Python fallback.

Run after an in-place build (pip install -e .); prints a timing table.
The two backends compute identical results (asserted here on every case).
"""

import random
import time
from fractions import Fraction

from lieyam._kernels import _pure

try:
    from lieyam._kernels import _speed
except ImportError:
    _speed = None


def rand_int_matrix(rng, rows, cols, span=9):
    return [[rng.randint(-span, span) for _ in range(cols)] for _ in range(rows)]


def rand_frac_matrix(rng, rows, cols):
    return [
        [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(cols)]
        for _ in range(rows)
    ]


def timeit(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def coboundary_case():
    """The representative workload: a sparse coboundary matrix."""
    from lieyam.reps import adjoint_rep, semidirect
    from lieyam.search import catalog_algebra
    from lieyam.yamaguti import delta_matrix

    sd = semidirect(catalog_algebra("a2"), adjoint_rep(catalog_algebra("a2")))
    return delta_matrix(sd, adjoint_rep(sd), 2, cap=4).int_scaled_rows()


def main():
    rng = random.Random(20250810)
    print(f"compiled kernel available: {_speed is not None}")
    rows = []
    cases = [
        ("rank coboundary 720x120", "rank_int_rows", coboundary_case()),
        ("rank int 40x60", "rank_int_rows", rand_int_matrix(rng, 40, 60)),
        ("rank int 90x120", "rank_int_rows", rand_int_matrix(rng, 90, 120)),
        ("rank int 150x200", "rank_int_rows", rand_int_matrix(rng, 150, 200)),
        ("rank bigint 40x60", "rank_int_rows",
         [[x * 10**25 + 1 for x in r] for r in rand_int_matrix(rng, 40, 60)]),
        ("rref frac 30x45", "rref_frac", rand_frac_matrix(rng, 30, 45)),
        ("rref frac 60x90", "rref_frac", rand_frac_matrix(rng, 60, 90)),
    ]
    for label, fname, mat in cases:
        t_pure, r_pure = timeit(getattr(_pure, fname), mat)
        if _speed is not None:
            t_fast, r_fast = timeit(getattr(_speed, fname), mat)
            assert r_pure == r_fast, f"backend disagreement on {label}"
            rows.append((label, t_pure, t_fast, t_pure / t_fast))
        else:
            rows.append((label, t_pure, float("nan"), float("nan")))
    print(f"{'case':24} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for label, tp, tf, sp in rows:
        print(f"{label:24} {tp:10.4f} {tf:13.4f} {sp:8.1f}x")


if __name__ == "__main__":
    main()
