"""Shared test utilities: naive reference implementations and exact batch products.

Everything here is deliberately independent of the library's bit-twiddling:
the naive oracles work on plain Python sets so that the two sides of every
comparison share no code.
"""

from __future__ import annotations

import numpy as np

from ar_spectra.combinatorics import SubsetMask
from ar_spectra.matrices import ExactMatrix


def as_set(s: SubsetMask) -> frozenset[int]:
    return frozenset(s.elements())


def naive_runs(elements: frozenset[int]) -> list[tuple[int, int]]:
    out = []
    for e in sorted(elements):
        if out and out[-1][1] == e - 1:
            out[-1] = (out[-1][0], e)
        else:
            out.append((e, e))
    return out


def naive_dominates(i_set: frozenset[int], j_set: frozenset[int]) -> bool:
    i_runs = naive_runs(i_set)
    for lo, hi in naive_runs(i_set & j_set):
        if not any(lo == rlo and hi <= rhi for rlo, rhi in i_runs):
            return False
    return True


def naive_admissible(e_set: frozenset[int], i_set: frozenset[int]) -> bool:
    if not e_set <= i_set:
        return False
    minima = {lo for lo, _ in naive_runs(i_set)}
    if e_set & minima:
        return False
    return all(e + 1 not in e_set for e in e_set)


def naive_arrow(i_set: frozenset[int], j_set: frozenset[int], n: int) -> bool:
    comp = frozenset(range(1, n + 1)) - i_set
    # enumerate admissible E <= I directly rather than reusing the bit form
    members = sorted(i_set)
    for picks in range(1 << len(members)):
        e_set = frozenset(m for b, m in enumerate(members) if picks >> b & 1)
        if naive_admissible(e_set, i_set) and j_set == comp | e_set:
            return True
    return False


def naive_entry_a(i_set: frozenset[int], j_set: frozenset[int]) -> int:
    if naive_dominates(i_set, j_set):
        return (-1) ** len(i_set & j_set)
    return 0


def naive_entry_b(i_set: frozenset[int], j_set: frozenset[int], n: int) -> int:
    if n in i_set - j_set:
        return 0
    return naive_entry_a(i_set, j_set)


def matvec_batch(matrix: ExactMatrix, vectors: list[list[int]]) -> list[list[int]]:
    """Exact dense products matrix @ v for many big-int vectors at once.

    Splits each vector into sign parts and base-2^24 digits so every partial
    product runs through float64 BLAS within the exact-accumulation window
    (dim * max|entry| * 2^24 < 2^53 for the matrices under test), then
    recombines. Independent of the library's product fast paths.
    """
    dim = matrix.dim
    arr = matrix.to_numpy_float()
    assert arr is not None, "matrix entries exceed the float64 window"
    bound = matrix.abs_bound()
    digit = 24
    assert dim * bound * (1 << digit) < 1 << 53, "entries too large for the guard"
    out = []
    for vec in vectors:
        assert len(vec) == dim
        total = [0] * dim
        for sign in (1, -1):
            parts = [v if v * sign > 0 else 0 for v in vec]
            parts = [abs(v) for v in parts]
            shift = 0
            while any(parts):
                lows = np.array([p & ((1 << digit) - 1) for p in parts], dtype=np.float64)
                prod = arr @ lows
                col = np.rint(prod).astype(np.int64).tolist()
                for k in range(dim):
                    total[k] += sign * (col[k] << shift)
                parts = [p >> digit for p in parts]
                shift += digit
        out.append(total)
    return out
