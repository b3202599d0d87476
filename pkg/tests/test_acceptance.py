"""Acceptance gate: nine end-to-end criteria, each printing one line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
PASS/FAIL lines. Every check is exact; there are no float tolerances
anywhere. The structural criterion sizes itself from available memory.
"""

from __future__ import annotations

import functools
import random
import time
from pathlib import Path

import psutil

from ar_spectra.combinatorics import (
    SubsetMask,
    composition_of_set,
    composition_prefix_weight,
    composition_weight,
    compositions,
    interior_run_weight,
    run_weight,
    set_of_composition,
)
from ar_spectra.matrices import (
    ExactMatrix,
    build_a_entrywise,
    build_a_recursive,
    build_b_entrywise,
    build_b_recursive,
    conjugate,
    fast_matvec_a,
    fast_matvec_b,
    mobius_matrix,
    permute_conjugate,
    zeta_matrix,
)
from ar_spectra.oracle import (
    oracle_char_poly,
    shifted_det,
    verify_anti_triangular,
    verify_antidiagonal_values,
    verify_block_form,
    verify_diagonal_blocks,
    verify_support,
)
from ar_spectra.permutation import (
    PairingTable,
    format_table,
    is_valid_pairing,
    membership_word,
    membership_word_blocks,
    pairing_table,
    pairing_table_closed,
)
from ar_spectra.spectrum import char_poly_formula_a, char_poly_formula_b

from .helpers import matvec_batch

DATA = Path(__file__).parent / "data"

# The exhaustive structural criterion holds a handful of dim-4096 matrices
# at its largest size; scale back to n <= 10 on small machines.
_HEADROOM_BYTES = int(2.5 * 2**30)
STRUCTURAL_MAX_N = 12 if psutil.virtual_memory().available >= _HEADROOM_BYTES else 10


def criterion(number: int, name: str):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {number} {name}: FAIL")
                raise
            print(f"ACCEPTANCE {number} {name}: PASS")

        return wrapper

    return deco


def _conjugated(m: ExactMatrix, n: int) -> ExactMatrix:
    return conjugate(m, zeta_matrix(n), mobius_matrix(n))


@criterion(1, "golden-fixtures")
def test_criterion_1_golden_fixtures():
    prime = _conjugated(build_a_recursive(3), 3)
    assert prime == ExactMatrix.from_text((DATA / "conjugated_a3.txt").read_text())
    blocked = permute_conjugate(prime, pairing_table(3))
    assert blocked == ExactMatrix.from_text((DATA / "blocked_a3.txt").read_text())


@criterion(2, "charpoly-formula-equals-oracle")
def test_criterion_2_charpoly_formula_equals_oracle():
    for n in range(1, 7):
        assert char_poly_formula_a(n) == oracle_char_poly(build_a_recursive(n))
        assert char_poly_formula_b(n) == oracle_char_poly(build_b_recursive(n))


@criterion(3, "charpoly-evaluation-extension")
def test_criterion_3_charpoly_evaluation_extension():
    rng = random.Random(0x5EED)
    for n in (7, 8):
        a = build_a_recursive(n)
        p = char_poly_formula_a(n)
        for _ in range(5):
            x0 = rng.getrandbits(32) - (1 << 31)
            assert p(x0) == shifted_det(a, x0)
        del a


@criterion(4, "structural-suite")
def test_criterion_4_structural_suite():
    for n in range(1, STRUCTURAL_MAX_N + 1):
        table = pairing_table(n)
        for which, build in (("A", build_a_recursive), ("B", build_b_recursive)):
            prime = _conjugated(build(n), n)
            assert verify_anti_triangular(prime).passed
            assert verify_antidiagonal_values(prime, which).passed
            assert verify_support(prime, which).passed
            blocked = permute_conjugate(prime, table)
            del prime
            assert verify_block_form(blocked).passed
            assert verify_diagonal_blocks(blocked, which, table).passed
            del blocked


@criterion(5, "pairing-suite")
def test_criterion_5_pairing_suite():
    for n in range(1, 15):
        recursive = pairing_table(n)
        assert recursive == pairing_table_closed(n)
        for j in range(1, n + 1):
            assert membership_word(n, j, recursive) == membership_word_blocks(n, j)
        if n <= 10:
            assert is_valid_pairing(recursive)
    assert format_table(pairing_table(3)) == (
        "1\t{1,3}\t{2}\n2\t{1}\t{2,3}\n3\t{1,2}\t{3}\n4\t{1,2,3}\t{}\n"
    )


@criterion(6, "build-equivalence")
def test_criterion_6_build_equivalence():
    for n in range(0, 11):
        assert build_a_recursive(n) == build_a_entrywise(n)
        assert build_b_recursive(n) == build_b_entrywise(n)


@criterion(7, "composition-identities")
def test_criterion_7_composition_identities():
    for n in range(1, 13):
        seen = set()
        for bits in range(1, 1 << n, 2):
            s = SubsetMask(n, bits)
            mu = composition_of_set(s)
            assert sum(mu) == n
            assert set_of_composition(mu, n) == s
            assert composition_weight(mu) == run_weight(s) * run_weight(s.complement())
            assert composition_prefix_weight(mu) == (
                interior_run_weight(s) * interior_run_weight(s.complement())
            )
            seen.add(mu)
        assert len(seen) == 1 << (n - 1)
        assert set(compositions(n)) == seen


@criterion(8, "fast-matvec")
def test_criterion_8_fast_matvec():
    rng = random.Random(0xFA57)
    for n in range(1, 13):
        dim = 1 << n
        vectors = [
            [rng.getrandbits(96) - (1 << 95) for _ in range(dim)] for _ in range(100)
        ]
        for build, fast in (
            (build_a_recursive, fast_matvec_a),
            (build_b_recursive, fast_matvec_b),
        ):
            m = build(n)
            expected = matvec_batch(m, vectors)
            for v, want in zip(vectors, expected):
                assert fast(n, v) == want
            del m

    # Wall-clock bar at the largest size: the recursive product must beat a
    # dense row-by-row product by at least 2x.
    n = 12
    a = build_a_recursive(n)
    v = [rng.getrandbits(96) - (1 << 95) for _ in range(1 << n)]
    t0 = time.perf_counter()
    dense_result = a.matvec(v)
    t_dense = time.perf_counter() - t0
    t_fast = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        fast_result = fast_matvec_a(n, v)
        t_fast = min(t_fast, time.perf_counter() - t0)
    assert fast_result == dense_result
    assert t_dense >= 2 * t_fast, f"dense {t_dense:.3f}s vs fast {t_fast:.3f}s"


def _with_entry(m: ExactMatrix, i: int, j: int, value: int) -> ExactMatrix:
    rows = m.rows()
    rows[i - 1][j - 1] = value
    return ExactMatrix.from_rows(rows)


@criterion(9, "negative-controls")
def test_criterion_9_negative_controls():
    n = 4
    table = pairing_table(n)
    prime = _conjugated(build_a_recursive(n), n)
    blocked = permute_conjugate(prime, table)
    dim = prime.dim

    out = verify_anti_triangular(_with_entry(prime, 1, 1, 5))
    assert not out.passed and "i=1 j=1" in out.witness

    out = verify_antidiagonal_values(_with_entry(prime, 1, dim, 7), "A")
    assert not out.passed and f"i=1 j={dim}" in out.witness

    out = verify_support(_with_entry(prime, 1, 1, 5), "A")
    assert not out.passed and "i=1 j=1" in out.witness

    out = verify_block_form(_with_entry(blocked, 1, 3, 9))
    assert not out.passed and "i=1 j=3" in out.witness

    out = verify_diagonal_blocks(_with_entry(blocked, 1, 2, 999), "A", table)
    assert not out.passed and "i=1 j=2" in out.witness

    vals = list(table.values)
    vals[0], vals[2] = vals[2], vals[0]
    assert not is_valid_pairing(PairingTable(n, tuple(vals)))
