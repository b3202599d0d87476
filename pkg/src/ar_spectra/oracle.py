"""Independent ground truth: brute-force characteristic polynomials,
fraction-free determinants, and structural verifiers with witnesses.

Nothing here reuses the composition formula under test; the two
characteristic-polynomial methods (trace recursion and fraction-free
evaluation-interpolation) are themselves independent of each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int

from .caps import SizeCapError
from .combinatorics import (
    SubsetMask,
    arrow,
    composition_prefix_weight,
    composition_weight,
    compositions,
    interior_run_weight,
    run_weight,
)
from .matrices import (
    ExactMatrix,
    build_a_entrywise,
    build_a_recursive,
    build_b_entrywise,
    build_b_recursive,
    conjugate,
    mobius_matrix,
    permute_conjugate,
    zeta_matrix,
)
from .permutation import (
    PairingTable,
    is_valid_pairing,
    membership_word,
    membership_word_blocks,
    pairing_table,
    pairing_table_closed,
)
from .spectrum import IntPolynomial, char_poly_formula_a, char_poly_formula_b

DEFAULT_ORACLE_DIM = 64

CLAIM_FAMILIES = (
    "entrywise-equal",
    "anti-triangular",
    "anti-diagonal",
    "support",
    "block-form",
    "diagonal-blocks",
    "pairing-valid",
    "pairing-closed-form",
    "membership-words",
    "zeta-inverse",
    "charpoly",
    "det-product",
)


@dataclass(frozen=True)
class VerificationOutcome:
    claim: str
    n: int
    passed: bool
    witness: str | None = None

    def __post_init__(self) -> None:
        if not self.passed and not self.witness:
            raise ValueError("a failing outcome must carry a witness")

    def line(self) -> str:
        if self.passed:
            return f"CLAIM {self.claim} n={self.n} PASS"
        return f"CLAIM {self.claim} n={self.n} FAIL witness=({self.witness})"


def _n_of_dim(dim: int) -> int:
    n = dim.bit_length() - 1
    if 1 << n != dim:
        raise ValueError(f"dim {dim} is not a power of two")
    return n


def _set_text(bits: int, n: int) -> str:
    return SubsetMask(n, bits).text()


def _index_witness(i: int, j: int, n: int, value: int, expected) -> str:
    return (
        f"i={i} j={j} I={_set_text(i - 1, n)} J={_set_text(j - 1, n)} "
        f"value={value} expected={expected}"
    )


def _matmul_mpz(a: list[list], b: list[list]) -> list[list]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def oracle_char_poly(m: ExactMatrix, *, max_dim: int = DEFAULT_ORACLE_DIM) -> IntPolynomial:
    """det(tI - M) by the trace recursion, exact at every step.

    Walks k = 1..dim with M_k = M(M_{k-1} + c_{k-1} I): the k-th coefficient
    is -trace(M_k)/k, an exact division.
    """
    dim = m.dim
    if dim > max_dim:
        raise SizeCapError(f"dim={dim} exceeds the oracle cap of {max_dim}")
    a = [[mpz(v) for v in row] for row in m.rows()]
    mk = [row[:] for row in a]
    coeffs_desc = [mpz(1)]
    for k in range(1, dim + 1):
        tr = sum(mk[i][i] for i in range(dim))
        q, r = divmod(tr, k)
        if r:
            raise ArithmeticError("trace recursion produced a non-integer")
        ck = -q
        coeffs_desc.append(ck)
        if k < dim:
            for i in range(dim):
                mk[i][i] += ck
            mk = _matmul_mpz(a, mk)
    return IntPolynomial([int(c) for c in reversed(coeffs_desc)])


def _bareiss_det(rows: list[list]) -> int:
    """Fraction-free elimination; consumes its input."""
    n = len(rows)
    sign = 1
    prev = mpz(1)
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - rik * rk[j]) // prev
            ri[k] = mpz(0)
        prev = pivot
    return int(sign * rows[n - 1][n - 1])


def oracle_det(m: ExactMatrix) -> int:
    """Exact determinant by fraction-free elimination."""
    return _bareiss_det([[mpz(v) for v in row] for row in m.rows()])


def shifted_det(m: ExactMatrix, x: int) -> int:
    """det(xI - M), exactly."""
    rows = [[mpz(-v) for v in row] for row in m.rows()]
    for i in range(m.dim):
        rows[i][i] += x
    return _bareiss_det(rows)


def char_poly_interpolated(m: ExactMatrix, *, max_dim: int = DEFAULT_ORACLE_DIM) -> IntPolynomial:
    """det(tI - M) by determinant evaluation at dim+1 points plus exact
    Lagrange interpolation; shares nothing with the trace recursion."""
    dim = m.dim
    if dim > max_dim:
        raise SizeCapError(f"dim={dim} exceeds the oracle cap of {max_dim}")
    points = list(range(dim + 1))
    values = [shifted_det(m, x) for x in points]

    # master polynomial prod (X - x) over the points, ascending coefficients
    master = [1]
    for x in points:
        nxt = [0] * (len(master) + 1)
        for k, v in enumerate(master):
            nxt[k + 1] += v
            nxt[k] -= x * v
        master = nxt

    coeffs = [Fraction(0)] * (dim + 1)
    for x, det in zip(points, values):
        # synthetic division of the master polynomial by (X - x)
        q = [0] * (len(master) - 1)
        carry = 0
        for k in range(len(master) - 1, 0, -1):
            carry = master[k] + x * carry
            q[k - 1] = carry
        q_at_x = 0
        for c in reversed(q):
            q_at_x = q_at_x * x + c
        scale = Fraction(det, q_at_x)
        for k, c in enumerate(q):
            coeffs[k] += scale * c
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolation produced non-integer coefficients")
    return IntPolynomial([int(c) for c in coeffs])


def verify_anti_triangular(m: ExactMatrix, *, claim_id: str = "anti-triangular") -> VerificationOutcome:
    """Pass iff entry (i, j) = 0 whenever i + j <= dim."""
    dim = m.dim
    n = _n_of_dim(dim)
    arr = m.to_numpy_int()
    if arr is not None:
        ii, jj = np.nonzero(arr)
        bad = ii + jj <= dim - 2
        if bad.any():
            k = int(np.argmax(bad))
            i, j = int(ii[k]) + 1, int(jj[k]) + 1
            return VerificationOutcome(
                claim_id, n, False, _index_witness(i, j, n, m.entry(i, j), 0)
            )
        return VerificationOutcome(claim_id, n, True)
    for i in range(1, dim + 1):
        for j in range(1, dim + 1 - i):
            v = m.entry(i, j)
            if v:
                return VerificationOutcome(
                    claim_id, n, False, _index_witness(i, j, n, v, 0)
                )
    return VerificationOutcome(claim_id, n, True)


def verify_antidiagonal_values(
    m: ExactMatrix, which: str, *, claim_id: str | None = None
) -> VerificationOutcome:
    """Pass iff the anti-diagonal entry of each row I equals the run weight
    of I (A family) or its interior variant (B family)."""
    claim_id = claim_id or f"anti-diagonal-{which}"
    dim = m.dim
    n = _n_of_dim(dim)
    weight = run_weight if which == "A" else interior_run_weight
    for bits in range(dim):
        i, j = bits + 1, dim - bits
        v = m.entry(i, j)
        expect = weight(SubsetMask(n, bits))
        if v != expect:
            return VerificationOutcome(
                claim_id, n, False, _index_witness(i, j, n, v, expect)
            )
    return VerificationOutcome(claim_id, n, True)


def verify_support(
    m: ExactMatrix, which: str, *, claim_id: str | None = None
) -> VerificationOutcome:
    """Pass iff every nonzero entry sits at an arrow-related index pair."""
    claim_id = claim_id or f"support-{which}"
    dim = m.dim
    n = _n_of_dim(dim)
    full = dim - 1
    arr = m.to_numpy_int()
    if arr is not None:
        ii, jj = np.nonzero(arr)
        comp = full ^ ii
        covers = (jj & comp) == comp
        extra = jj & ii
        starts = ii & ~(ii << 1)
        admiss = ((extra & starts) == 0) & ((extra & (extra >> 1)) == 0)
        bad = ~(covers & admiss)
        if bad.any():
            k = int(np.argmax(bad))
            i, j = int(ii[k]) + 1, int(jj[k]) + 1
            return VerificationOutcome(
                claim_id, n, False,
                _index_witness(i, j, n, m.entry(i, j), "0 (indices not arrow-related)"),
            )
        return VerificationOutcome(claim_id, n, True)
    for ib in range(dim):
        row = m.row(ib + 1)
        i_set = SubsetMask(n, ib)
        for jb in range(dim):
            if row[jb] and not arrow(i_set, SubsetMask(n, jb)):
                return VerificationOutcome(
                    claim_id, n, False,
                    _index_witness(ib + 1, jb + 1, n, row[jb], "0 (indices not arrow-related)"),
                )
    return VerificationOutcome(claim_id, n, True)


def verify_block_form(m: ExactMatrix, *, claim_id: str = "block-form") -> VerificationOutcome:
    """Pass iff the matrix is lower triangular in 2x2 blocks: zero at every
    (i, j) with j > i except the in-block corner (odd i, j = i + 1)."""
    dim = m.dim
    n = _n_of_dim(dim)
    arr = m.to_numpy_int()
    if arr is not None:
        ii, jj = np.nonzero(arr)
        bad = (jj > ii) & ~((ii % 2 == 0) & (jj == ii + 1))
        if bad.any():
            k = int(np.argmax(bad))
            i, j = int(ii[k]) + 1, int(jj[k]) + 1
            return VerificationOutcome(
                claim_id, n, False, _index_witness(i, j, n, m.entry(i, j), 0)
            )
        return VerificationOutcome(claim_id, n, True)
    for i in range(1, dim + 1):
        start = i + 2 if i % 2 == 1 else i + 1
        for j in range(start, dim + 1):
            v = m.entry(i, j)
            if v:
                return VerificationOutcome(
                    claim_id, n, False, _index_witness(i, j, n, v, 0)
                )
    return VerificationOutcome(claim_id, n, True)


def verify_diagonal_blocks(
    m: ExactMatrix, which: str, table: PairingTable, *, claim_id: str | None = None
) -> VerificationOutcome:
    """Pass iff block t equals [[0, w(I)], [w(comp I), 0]] with I the table
    value at position 2t-1 and w the (interior) run weight."""
    claim_id = claim_id or f"diagonal-blocks-{which}"
    dim = m.dim
    n = _n_of_dim(dim)
    weight = run_weight if which == "A" else interior_run_weight
    if len(table.values) != dim:
        return VerificationOutcome(claim_id, n, False, "table length != dim")
    for t in range(1, dim // 2 + 1):
        i_set = table.value(2 * t - 1)
        expect = (
            (2 * t - 1, 2 * t - 1, 0),
            (2 * t - 1, 2 * t, weight(i_set)),
            (2 * t, 2 * t - 1, weight(i_set.complement())),
            (2 * t, 2 * t, 0),
        )
        for i, j, want in expect:
            v = m.entry(i, j)
            if v != want:
                return VerificationOutcome(
                    claim_id, n, False,
                    f"block={t} i={i} j={j} I={i_set.text()} value={v} expected={want}",
                )
    return VerificationOutcome(claim_id, n, True)


def _first_diff(a: ExactMatrix, b: ExactMatrix, n: int) -> str:
    for i in range(1, a.dim + 1):
        ra, rb = a.row(i), b.row(i)
        if ra != rb:
            for j, (x, y) in enumerate(zip(ra, rb), start=1):
                if x != y:
                    return _index_witness(i, j, n, x, y)
    return "matrices equal"


class _Pipeline:
    """Lazy per-n builds shared by the claim runner."""

    def __init__(self, n: int, max_n: int | None, inject_fault: bool):
        self.n = n
        self.max_n = max_n
        self.inject_fault = inject_fault
        self._memo: dict[str, object] = {}

    def get(self, key: str):
        if key not in self._memo:
            self._memo[key] = self._build(key)
        return self._memo[key]

    def _build(self, key: str):
        n, max_n = self.n, self.max_n
        if key == "a":
            return build_a_recursive(n, max_n=max_n)
        if key == "b":
            return build_b_recursive(n, max_n=max_n)
        if key == "a_entrywise":
            return build_a_entrywise(n, max_n=max_n)
        if key == "b_entrywise":
            return build_b_entrywise(n, max_n=max_n)
        if key == "u":
            return zeta_matrix(n, max_n=max_n)
        if key == "u_inv":
            return mobius_matrix(n, max_n=max_n)
        if key == "table":
            return pairing_table(n, max_n=max_n)
        if key in ("a_prime", "b_prime"):
            base = self.get(key[0])
            prime = conjugate(base, self.get("u"), self.get("u_inv"))
            if key == "a_prime" and self.inject_fault:
                data = [v for i in range(1, prime.dim + 1) for v in prime.row(i)]
                data[0] += 1
                prime = ExactMatrix(prime.dim, data)
            return prime
        if key in ("a_blocked", "b_blocked"):
            return permute_conjugate(self.get(key[0] + "_prime"), self.get("table"))
        raise KeyError(key)


def run_claims(
    n_max: int,
    *,
    only: str | None = None,
    oracle_dim: int = DEFAULT_ORACLE_DIM,
    max_n: int | None = None,
    inject_fault: bool = False,
) -> list[VerificationOutcome]:
    """Run every claim for n = 1..n_max (oracle-backed ones up to the oracle
    cap), in a fixed order; optionally filter by claim id prefix."""

    def selected(cid: str) -> bool:
        return only is None or cid == only or cid.startswith(only + "-")

    outcomes: list[VerificationOutcome] = []
    for n in range(1, n_max + 1):
        pipe = _Pipeline(n, max_n, inject_fault)
        for which in ("A", "B"):
            low = which.lower()
            cid = f"entrywise-equal-{which}"
            if selected(cid):
                rec, ent = pipe.get(low), pipe.get(f"{low}_entrywise")
                ok = rec == ent
                outcomes.append(
                    VerificationOutcome(cid, n, ok, None if ok else _first_diff(rec, ent, n))
                )
            cid = f"anti-triangular-{which}"
            if selected(cid):
                outcomes.append(
                    verify_anti_triangular(pipe.get(f"{low}_prime"), claim_id=cid)
                )
            cid = f"anti-diagonal-{which}"
            if selected(cid):
                outcomes.append(
                    verify_antidiagonal_values(pipe.get(f"{low}_prime"), which, claim_id=cid)
                )
            cid = f"support-{which}"
            if selected(cid):
                outcomes.append(verify_support(pipe.get(f"{low}_prime"), which, claim_id=cid))
            cid = f"block-form-{which}"
            if selected(cid):
                outcomes.append(verify_block_form(pipe.get(f"{low}_blocked"), claim_id=cid))
            cid = f"diagonal-blocks-{which}"
            if selected(cid):
                outcomes.append(
                    verify_diagonal_blocks(
                        pipe.get(f"{low}_blocked"), which, pipe.get("table"), claim_id=cid
                    )
                )
        if selected("pairing-valid"):
            ok = is_valid_pairing(pipe.get("table"))
            outcomes.append(
                VerificationOutcome(
                    "pairing-valid", n, ok,
                    None if ok else "table violates the pairing conditions",
                )
            )
        if selected("pairing-closed-form"):
            rec = pipe.get("table")
            clo = pairing_table_closed(n, max_n=max_n)
            witness = None
            if rec != clo:
                pos = next(
                    i for i, (x, y) in enumerate(zip(rec.values, clo.values), 1) if x != y
                )
                witness = (
                    f"position={pos} recursive={rec.value(pos).text()} "
                    f"closed={clo.value(pos).text()}"
                )
            outcomes.append(VerificationOutcome("pairing-closed-form", n, rec == clo, witness))
        if selected("membership-words"):
            table = pipe.get("table")
            witness = None
            for j in range(1, n + 1):
                if membership_word(n, j, table) != membership_word_blocks(n, j):
                    witness = f"j={j} table-word != block-word"
                    break
            outcomes.append(VerificationOutcome("membership-words", n, witness is None, witness))
        if selected("zeta-inverse"):
            prod = pipe.get("u").matmul(pipe.get("u_inv"))
            eye = ExactMatrix.identity(1 << n)
            ok = prod == eye
            outcomes.append(
                VerificationOutcome(
                    "zeta-inverse", n, ok, None if ok else _first_diff(prod, eye, n)
                )
            )
        if (1 << n) <= oracle_dim:
            for which in ("A", "B"):
                low = which.lower()
                cid = f"charpoly-{which}"
                if selected(cid):
                    formula = (
                        char_poly_formula_a(n) if which == "A" else char_poly_formula_b(n)
                    )
                    brute = oracle_char_poly(pipe.get(low), max_dim=oracle_dim)
                    witness = None
                    if formula != brute:
                        k = next(
                            (
                                k
                                for k, (x, y) in enumerate(zip(formula.coeffs, brute.coeffs))
                                if x != y
                            ),
                            None,
                        )
                        if k is None:
                            witness = (
                                f"degree mismatch formula={formula.degree} "
                                f"oracle={brute.degree}"
                            )
                        else:
                            witness = (
                                f"coefficient k={k} formula={formula.coeffs[k]} "
                                f"oracle={brute.coeffs[k]}"
                            )
                    outcomes.append(VerificationOutcome(cid, n, formula == brute, witness))
                cid = f"det-product-{which}"
                if selected(cid):
                    det = abs(oracle_det(pipe.get(low)))
                    w = composition_weight if which == "A" else composition_prefix_weight
                    expect = 1
                    for mu in compositions(n):
                        expect *= w(mu)
                    ok = det == expect
                    outcomes.append(
                        VerificationOutcome(
                            cid, n, ok,
                            None if ok else f"|det|={det} product-of-radicands={expect}",
                        )
                    )
    return outcomes
