"""Exact integer matrices over the subset lattice.

Builds the mutually recursive matrix family (recursively and entrywise), the
zeta matrix of the subset lattice with its signed inverse, exact conjugation,
and a structured matrix-vector product that never materializes the matrix.

Rows and columns are indexed 1..dim; index i stands for the subset whose
rank is i (see combinatorics.from_rank).
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .caps import DEFAULT_MAX_N, SizeCapError, check_cap as _check_cap
from .combinatorics import SubsetMask, dominates, rank

__all__ = [
    "DEFAULT_MAX_N",
    "ExactMatrix",
    "SizeCapError",
    "build_a_entrywise",
    "build_a_recursive",
    "build_b_entrywise",
    "build_b_recursive",
    "conjugate",
    "entry_a",
    "entry_b",
    "fast_matvec_a",
    "fast_matvec_b",
    "mobius_matrix",
    "permute_conjugate",
    "zeta_matrix",
]

_FLOAT_EXACT = 1 << 53  # float64 integer window
_INT64_MAX = (1 << 63) - 1
_BLOCK_ROWS = 1024  # row chunk for vectorized builders, bounds temp arrays


class ExactMatrix:
    """Square matrix of arbitrary-precision integers, dense row-major.

    Treat instances as immutable; the class caches derived views.
    """

    __slots__ = ("dim", "_data", "_bound")

    def __init__(self, dim: int, data: Sequence[int]):
        if dim <= 0:
            raise ValueError("dim must be positive")
        if len(data) != dim * dim:
            raise ValueError(f"expected {dim * dim} entries, got {len(data)}")
        self.dim = dim
        self._data = list(data)
        self._bound: int | None = None

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        dim = len(rows)
        if any(len(r) != dim for r in rows):
            raise ValueError("rows must form a square matrix")
        return cls(dim, [v for r in rows for v in r])

    @classmethod
    def identity(cls, dim: int) -> "ExactMatrix":
        data = [0] * (dim * dim)
        for i in range(dim):
            data[i * dim + i] = 1
        return cls(dim, data)

    @classmethod
    def _from_numpy(cls, arr: np.ndarray) -> "ExactMatrix":
        return cls(arr.shape[0], arr.ravel().tolist())

    def entry(self, i: int, j: int) -> int:
        """1-based access."""
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise IndexError(f"({i}, {j}) outside [1, {self.dim}]^2")
        return self._data[(i - 1) * self.dim + (j - 1)]

    def row(self, i: int) -> list[int]:
        if not 1 <= i <= self.dim:
            raise IndexError(f"row {i} outside [1, {self.dim}]")
        return self._data[(i - 1) * self.dim : i * self.dim]

    def rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(1, self.dim + 1)]

    def abs_bound(self) -> int:
        """Maximum absolute entry (0 for the zero matrix)."""
        if self._bound is None:
            self._bound = max(map(abs, self._data), default=0)
        return self._bound

    def to_numpy_float(self) -> np.ndarray | None:
        """float64 view, or None when entries leave the exact window."""
        if self.abs_bound() >= _FLOAT_EXACT:
            return None
        return np.array(self._data, dtype=np.float64).reshape(self.dim, self.dim)

    def to_numpy_int(self) -> np.ndarray | None:
        """int64 view, or None when entries would overflow."""
        if self.abs_bound() > _INT64_MAX:
            return None
        return np.array(self._data, dtype=np.int64).reshape(self.dim, self.dim)

    def matvec(self, x: Sequence[int]) -> list[int]:
        """Classical dense product, pure big-int arithmetic."""
        if len(x) != self.dim:
            raise ValueError(f"vector length {len(x)} != dim {self.dim}")
        data, dim = self._data, self.dim
        out = []
        for i in range(dim):
            base = i * dim
            out.append(sum(m * v for m, v in zip(data[base : base + dim], x)))
        return out

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.dim != other.dim:
            raise ValueError(f"dim mismatch: {self.dim} vs {other.dim}")
        return _matmul_exact(self, other)

    def transpose(self) -> "ExactMatrix":
        dim = self.dim
        return ExactMatrix(dim, [self._data[j * dim + i] for i in range(dim) for j in range(dim)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.dim == other.dim and self._data == other._data

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ExactMatrix(dim={self.dim})"

    def to_text(self) -> str:
        """Round-trippable format: `dim=<d>` then d rows of d integers."""
        lines = [f"dim={self.dim}"]
        for i in range(1, self.dim + 1):
            lines.append(" ".join(str(v) for v in self.row(i)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ExactMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("dim="):
            raise ValueError("missing dim= header")
        dim = int(lines[0][4:])
        if len(lines) != dim + 1:
            raise ValueError(f"expected {dim} rows, got {len(lines) - 1}")
        data: list[int] = []
        for ln in lines[1:]:
            vals = [int(tok) for tok in ln.split()]
            if len(vals) != dim:
                raise ValueError(f"row of length {len(vals)}, expected {dim}")
            data.extend(vals)
        return cls(dim, data)


def _matmul_float(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix | None:
    # Every accumulated dot product is a sum of dim terms each bounded by
    # max|a| * max|b|; below 2^53 the float64 result is exact.
    if a.dim * a.abs_bound() * b.abs_bound() >= _FLOAT_EXACT:
        return None
    fa, fb = a.to_numpy_float(), b.to_numpy_float()
    prod = fa @ fb
    return ExactMatrix(a.dim, prod.astype(np.int64).ravel().tolist())


def _matmul_python(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    dim = a.dim
    ad, bd = a._data, b._data
    out = [0] * (dim * dim)
    for i in range(dim):
        abase = i * dim
        acc = [0] * dim
        for k in range(dim):
            av = ad[abase + k]
            if av:
                bbase = k * dim
                brow = bd[bbase : bbase + dim]
                if av == 1:
                    acc = [p + q for p, q in zip(acc, brow)]
                elif av == -1:
                    acc = [p - q for p, q in zip(acc, brow)]
                else:
                    acc = [p + av * q for p, q in zip(acc, brow)]
        out[abase : abase + dim] = acc
    return ExactMatrix(dim, out)


def _matmul_exact(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    fast = _matmul_float(a, b)
    if fast is not None:
        return fast
    return _matmul_python(a, b)


def _build_ab_numpy(n: int) -> tuple[np.ndarray, np.ndarray]:
    a = np.array([[1]], dtype=np.int8)
    b = np.array([[1]], dtype=np.int8)
    for _ in range(n):
        zero = np.zeros_like(a)
        a, b = (
            np.block([[a, a], [a, -b]]),
            np.block([[a, a], [zero, -b]]),
        )
    return a, b


def build_a_recursive(n: int, *, max_n: int | None = None) -> ExactMatrix:
    """Unfold the block recursion; top-left block holds subsets without n."""
    _check_cap(n, max_n)
    return ExactMatrix._from_numpy(_build_ab_numpy(n)[0])


def build_b_recursive(n: int, *, max_n: int | None = None) -> ExactMatrix:
    _check_cap(n, max_n)
    return ExactMatrix._from_numpy(_build_ab_numpy(n)[1])


def entry_a(i_set: SubsetMask, j_set: SubsetMask) -> int:
    """Closed-form entry: parity sign of |I ∩ J| when I dominates J, else 0."""
    if not dominates(i_set, j_set):
        return 0
    return -1 if (i_set.bits & j_set.bits).bit_count() & 1 else 1


def entry_b(i_set: SubsetMask, j_set: SubsetMask) -> int:
    """As entry_a, but additionally 0 when the top element n sits in I \\ J."""
    n = i_set.n
    if n > 0 and i_set.bits >> (n - 1) & 1 and not j_set.bits >> (n - 1) & 1:
        return 0
    return entry_a(i_set, j_set)


def _entry_block(which: str, n: int, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    i = rows[:, None]
    j = cols[None, :]
    meet = i & j
    starts_meet = meet & ~(meet << 1)
    starts_i = i & ~(i << 1)
    dom = (starts_meet & ~starts_i) == 0
    sign = 1 - 2 * (np.bitwise_count(meet).astype(np.int64) & 1)
    val = np.where(dom, sign, 0)
    if which == "B" and n > 0:
        kill = ((i >> (n - 1)) & 1).astype(bool) & ~((j >> (n - 1)) & 1).astype(bool)
        val = np.where(kill, 0, val)
    return val.astype(np.int8)


def _build_entrywise(which: str, n: int, max_n: int | None) -> ExactMatrix:
    _check_cap(n, max_n)
    dim = 1 << n
    cols = np.arange(dim, dtype=np.int64)
    data: list[int] = []
    for lo in range(0, dim, _BLOCK_ROWS):
        rows = cols[lo : lo + _BLOCK_ROWS]
        data.extend(_entry_block(which, n, rows, cols).ravel().tolist())
    return ExactMatrix(dim, data)


def build_a_entrywise(n: int, *, max_n: int | None = None) -> ExactMatrix:
    """Same matrix as build_a_recursive, from the closed-form entries."""
    return _build_entrywise("A", n, max_n)


def build_b_entrywise(n: int, *, max_n: int | None = None) -> ExactMatrix:
    return _build_entrywise("B", n, max_n)


def zeta_matrix(n: int, *, max_n: int | None = None) -> ExactMatrix:
    """Lower-triangular superset indicator: entry (I, J) = 1 iff I ⊇ J."""
    _check_cap(n, max_n)
    dim = 1 << n
    cols = np.arange(dim, dtype=np.int64)
    data: list[int] = []
    for lo in range(0, dim, _BLOCK_ROWS):
        rows = cols[lo : lo + _BLOCK_ROWS]
        block = (cols[None, :] & ~rows[:, None]) == 0
        data.extend(block.astype(np.int8).ravel().tolist())
    return ExactMatrix(dim, data)


def mobius_matrix(n: int, *, max_n: int | None = None) -> ExactMatrix:
    """Signed inverse of the zeta matrix: (-1)^|I \\ J| on pairs I ⊇ J."""
    _check_cap(n, max_n)
    dim = 1 << n
    cols = np.arange(dim, dtype=np.int64)
    col_sign = 1 - 2 * (np.bitwise_count(cols).astype(np.int64) & 1)
    data: list[int] = []
    for lo in range(0, dim, _BLOCK_ROWS):
        rows = cols[lo : lo + _BLOCK_ROWS]
        block = ((cols[None, :] & ~rows[:, None]) == 0).astype(np.int64)
        signed = col_sign[lo : lo + _BLOCK_ROWS, None] * block * col_sign[None, :]
        data.extend(signed.astype(np.int8).ravel().tolist())
    return ExactMatrix(dim, data)


def conjugate(m: ExactMatrix, c: ExactMatrix, c_inv: ExactMatrix) -> ExactMatrix:
    """Exact c @ m @ c_inv.

    The caller vouches that c_inv inverts c; that contract is checked by the
    oracle's zeta-inverse claim, not per call.
    """
    if not (m.dim == c.dim == c_inv.dim):
        raise ValueError(f"dim mismatch: {c.dim}, {m.dim}, {c_inv.dim}")
    return _matmul_exact(_matmul_exact(c, m), c_inv)


def permute_conjugate(m: ExactMatrix, table) -> ExactMatrix:
    """Simultaneous row/column relabeling: result(i, j) = m(p(i), p(j)).

    Accepts a pairing table (anything with a `values` sequence of SubsetMask)
    or a bare sequence of SubsetMask; position i maps to the rank of the i-th
    set.
    """
    values = getattr(table, "values", table)
    if len(values) != m.dim:
        raise ValueError(f"table length {len(values)} != dim {m.dim}")
    pos = [rank(s) - 1 for s in values]
    if sorted(pos) != list(range(m.dim)):
        raise ValueError("table is not a permutation of the index range")
    arr = m.to_numpy_int()
    if arr is not None:
        return ExactMatrix(m.dim, arr[np.ix_(pos, pos)].ravel().tolist())
    dim = m.dim
    data = m._data
    return ExactMatrix(dim, [data[pi * dim + pj] for pi in pos for pj in pos])


def fast_matvec_a(n: int, x: Sequence[int]) -> list[int]:
    """Product with the A-family matrix via the block recursion; never
    builds the matrix. Arithmetic cost grows like 2.618^n versus the
    dense 4^n (the shared-sum recursion has golden-ratio-squared growth)."""
    if len(x) != 1 << n:
        raise ValueError(f"vector length {len(x)} != 2^{n}")
    return _fast_a(n, list(x))


def fast_matvec_b(n: int, x: Sequence[int]) -> list[int]:
    if len(x) != 1 << n:
        raise ValueError(f"vector length {len(x)} != 2^{n}")
    return _fast_b(n, list(x))


def _fast_a(n: int, x: list[int]) -> list[int]:
    if n == 0:
        return [x[0]]
    h = 1 << (n - 1)
    x1, x2 = x[:h], x[h:]
    top = _fast_a(n - 1, [p + q for p, q in zip(x1, x2)])
    u = _fast_a(n - 1, x1)
    v = _fast_b(n - 1, x2)
    top += [p - q for p, q in zip(u, v)]
    return top


def _fast_b(n: int, x: list[int]) -> list[int]:
    if n == 0:
        return [x[0]]
    h = 1 << (n - 1)
    x1, x2 = x[:h], x[h:]
    top = _fast_a(n - 1, [p + q for p, q in zip(x1, x2)])
    top += [-q for q in _fast_b(n - 1, x2)]
    return top
