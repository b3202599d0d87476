"""The pairing permutation of the subset lattice and its word encodings.

Subsets are listed so that complements sit in adjacent (odd, even) slots and
every arrow-predecessor of a listed set appears no later than the set itself.
The canonical table comes from a chunk recursion; a parity closed form gives
each value directly, and per-element membership columns reduce to blocks of
the binary parity (digit-sum) sequence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import check_cap as _check_cap
from .combinatorics import SubsetMask, arrow, rank

__all__ = [
    "PairingTable",
    "format_table",
    "is_valid_pairing",
    "membership_word",
    "membership_word_blocks",
    "pairing_as_permutation",
    "pairing_closed_form",
    "pairing_table",
    "pairing_table_closed",
    "thue_morse",
    "thue_morse_word",
]


@dataclass(frozen=True)
class PairingTable:
    """Position i (1-based) holds the subset paired at that slot."""

    n: int
    values: tuple[SubsetMask, ...]

    def value(self, i: int) -> SubsetMask:
        if not 1 <= i <= len(self.values):
            raise IndexError(f"position {i} outside [1, {len(self.values)}]")
        return self.values[i - 1]


def _raw_tables(n: int) -> dict[int, tuple[int, ...]]:
    """Bit-level tables for sizes 1..n, built bottom-up.

    Chunk k of the size-m table (k = 0..m-2) lists, for i = 1..2^(m-k-2),
    the pair ([k+1] union (T(2i) shifted up k+1), T(2i-1) shifted up k+1)
    where T is the size-(m-k-1) table; the final pair is ([m], empty).
    """
    tables: dict[int, tuple[int, ...]] = {1: (1, 0)}
    for m in range(2, n + 1):
        vals: list[int] = []
        for k in range(m - 1):
            sub = tables[m - k - 1]
            low = (1 << (k + 1)) - 1
            for i in range(1, (1 << (m - k - 2)) + 1):
                vals.append(low | (sub[2 * i - 1] << (k + 1)))
                vals.append(sub[2 * i - 2] << (k + 1))
        vals.append((1 << m) - 1)
        vals.append(0)
        tables[m] = tuple(vals)
    return tables


def pairing_table(n: int, *, max_n: int | None = None) -> PairingTable:
    """The canonical table from the chunk recursion (size 2^n)."""
    _check_cap(n, max_n)
    if n == 0:
        return PairingTable(0, (SubsetMask(0, 0),))
    raw = _raw_tables(n)[n]
    return PairingTable(n, tuple(SubsetMask(n, bits) for bits in raw))


def pairing_closed_form(n: int, i_set: SubsetMask) -> SubsetMask:
    """Value at position rank(i_set), computed without the table.

    Element t belongs to the value iff the part of {1} union [n-t+2, n]
    missing from i_set has odd size.
    """
    if i_set.n != n:
        raise ValueError(f"ambient mismatch: {i_set.n} vs {n}")
    out = 0
    for t in range(1, n + 1):
        probe = 1 | (((1 << (t - 1)) - 1) << (n - t + 1))
        if (probe & ~i_set.bits).bit_count() & 1:
            out |= 1 << (t - 1)
    return SubsetMask(n, out)


def pairing_table_closed(n: int, *, max_n: int | None = None) -> PairingTable:
    """Same table as pairing_table, assembled from the closed form."""
    _check_cap(n, max_n)
    if n == 0:
        return PairingTable(0, (SubsetMask(0, 0),))
    return PairingTable(
        n, tuple(pairing_closed_form(n, SubsetMask(n, bits)) for bits in range(1 << n))
    )


def thue_morse(k: int) -> int:
    """Parity of the binary digit sum of k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return k.bit_count() & 1


_FLIP = str.maketrans("01", "10")


def thue_morse_word(m: int) -> str:
    """The m-th doubling word (length 2^m): each step appends the complement."""
    if m < 0:
        raise ValueError("m must be non-negative")
    word = "0"
    for _ in range(m):
        word += word.translate(_FLIP)
    return word


def membership_word(n: int, j: int, table: PairingTable | None = None) -> str:
    """Membership column of element j down the table, as a 0/1 string."""
    if not 1 <= j <= n:
        raise ValueError(f"j={j} outside [1, {n}]")
    if table is None:
        table = pairing_table(n)
    return "".join("1" if j in s else "0" for s in table.values)


def membership_word_blocks(n: int, j: int) -> str:
    """Closed form of membership_word via parity-sequence blocks.

    Concatenates, for q = 0..2^(j-1)-1, the two-letter block (t_q, 1-t_q)
    for even j or (1-t_q, t_q) for odd j, repeated 2^(n-j) times.
    """
    if not 1 <= j <= n:
        raise ValueError(f"j={j} outside [1, {n}]")
    reps = 1 << (n - j)
    parts = []
    for q in range(1 << (j - 1)):
        t = thue_morse(q)
        pair = f"{t}{1 - t}" if j % 2 == 0 else f"{1 - t}{t}"
        parts.append(pair * reps)
    return "".join(parts)


def is_valid_pairing(table: PairingTable) -> bool:
    """Check the three table conditions, exhaustively.

    1. the values are a permutation of all subsets of [n];
    2. even positions hold the complement of the preceding odd position,
       and each odd position's set contains 1;
    3. whenever value(i) arrows value(j), either value(j) is the complement
       of value(i) or j <= i.
    """
    n = table.n
    dim = 1 << n
    vals = table.values
    if len(vals) != dim or any(s.n != n for s in vals):
        return False
    if sorted(s.bits for s in vals) != list(range(dim)):
        return False
    if n == 0:
        return True
    full = dim - 1
    for t in range(0, dim, 2):
        odd, even = vals[t], vals[t + 1]
        if not odd.bits & 1:
            return False
        if odd.bits ^ even.bits != full:
            return False
    for i in range(dim):
        v_i = vals[i]
        comp = full ^ v_i.bits
        for j in range(i + 1, dim):
            if vals[j].bits != comp and arrow(v_i, vals[j]):
                return False
    return True


def pairing_as_permutation(table: PairingTable) -> tuple[int, ...]:
    """Ranks of the table values: position i maps to rank(value(i))."""
    return tuple(rank(s) for s in table.values)


def format_table(table: PairingTable) -> str:
    """Pair layout: one line per pair, `i<TAB>odd-set<TAB>even-set`."""
    if table.n == 0:
        raise ValueError("pair layout needs n >= 1")
    lines = []
    for t in range(len(table.values) // 2):
        odd, even = table.values[2 * t], table.values[2 * t + 1]
        lines.append(f"{t + 1}\t{odd.text()}\t{even.text()}")
    return "\n".join(lines) + "\n"
