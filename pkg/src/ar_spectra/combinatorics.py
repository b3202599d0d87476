"""Subsets of [n] = {1, .., n} as bitmasks: runs, relations, weights, compositions.

Element i is stored at bit i-1, so the rank of a subset (its 1-based position
in lexicographic order) is simply mask value + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator, NamedTuple

# A composition of n is a tuple of positive parts summing to n; n = 0 is ().
Composition = tuple[int, ...]


class Run(NamedTuple):
    """Maximal interval [lo, hi] contained in a subset, 1-based inclusive."""

    lo: int
    hi: int

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1


def _run_starts(bits: int) -> int:
    # bit b is set iff b starts a run: set here, clear at b-1
    return bits & ~(bits << 1)


@dataclass(frozen=True, slots=True)
class SubsetMask:
    """A subset of [n] encoded as an n-bit mask (bit i-1 = element i)."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"ambient size must be non-negative, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"mask {self.bits:#x} does not fit in [{self.n}]")

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[int]) -> "SubsetMask":
        bits = 0
        for e in elements:
            if not 1 <= e <= n:
                raise ValueError(f"element {e} outside [{n}]")
            bits |= 1 << (e - 1)
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "SubsetMask":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_text(cls, n: int, text: str) -> "SubsetMask":
        """Parse a set literal like ``{1,4,5}`` or ``{}``."""
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ValueError(f"not a set literal: {text!r}")
        inner = body[1:-1].strip()
        if not inner:
            return cls(n, 0)
        return cls.from_elements(n, (int(p) for p in inner.split(",")))

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and bool(self.bits >> (element - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements())

    def elements(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.bits >> i & 1)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def complement(self) -> "SubsetMask":
        return SubsetMask(self.n, ((1 << self.n) - 1) & ~self.bits)

    def intersect(self, other: "SubsetMask") -> "SubsetMask":
        self._check_ambient(other)
        return SubsetMask(self.n, self.bits & other.bits)

    def union(self, other: "SubsetMask") -> "SubsetMask":
        self._check_ambient(other)
        return SubsetMask(self.n, self.bits | other.bits)

    def issubset(self, other: "SubsetMask") -> bool:
        self._check_ambient(other)
        return self.bits & ~other.bits == 0

    def text(self) -> str:
        """Set literal: comma-separated ascending elements, ``{}`` when empty."""
        return "{" + ",".join(str(e) for e in self.elements()) + "}"

    def _check_ambient(self, other: "SubsetMask") -> None:
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: [{self.n}] vs [{other.n}]")

    def __str__(self) -> str:
        return self.text()


def runs(s: SubsetMask) -> tuple[Run, ...]:
    """Maximal intervals of s, ascending."""
    out = []
    bits = s.bits
    while bits:
        lo = (bits & -bits).bit_length()  # value of the lowest element
        hi = lo
        while bits >> hi & 1:  # bit hi holds element hi+1
            hi += 1
        out.append(Run(lo, hi))
        bits &= ~((1 << hi) - 1)
    return tuple(out)


def rank(s: SubsetMask) -> int:
    """Position of s in lexicographic order, in [1, 2^n]."""
    return s.bits + 1


def from_rank(i: int, n: int) -> SubsetMask:
    """Inverse of rank."""
    if not 1 <= i <= 1 << n:
        raise ValueError(f"rank {i} outside [1, 2^{n}]")
    return SubsetMask(n, i - 1)


def dominates(i_set: SubsetMask, j_set: SubsetMask) -> bool:
    """True iff every run of I ∩ J is a prefix of a run of I.

    Equivalent bit form: every run start of I ∩ J is a run start of I.
    (Since I ∩ J ⊆ I, a shared start forces the intersection run to sit
    at the bottom of the I run containing it.)
    """
    i_set._check_ambient(j_set)
    meet = i_set.bits & j_set.bits
    return _run_starts(meet) & ~_run_starts(i_set.bits) == 0


def run_weight(s: SubsetMask) -> int:
    """Product of (run length + 1) over all runs; 1 for the empty set."""
    return prod(r.length + 1 for r in runs(s))


def interior_run_weight(s: SubsetMask) -> int:
    """Like run_weight but the run containing the top element n is skipped."""
    return prod(r.length + 1 for r in runs(s) if r.hi != s.n)


def admissible(e_set: SubsetMask, i_set: SubsetMask) -> bool:
    """True iff E ⊆ I, E avoids every run minimum of I, and E has no
    two consecutive elements."""
    e_set._check_ambient(i_set)
    e, i = e_set.bits, i_set.bits
    return e & ~i == 0 and e & _run_starts(i) == 0 and e & (e >> 1) == 0


def arrow(i_set: SubsetMask, j_set: SubsetMask) -> bool:
    """True iff J is the complement of I plus an admissible subset of I."""
    i_set._check_ambient(j_set)
    comp = ((1 << i_set.n) - 1) & ~i_set.bits
    if j_set.bits & comp != comp:
        return False
    return admissible(SubsetMask(i_set.n, j_set.bits & i_set.bits), i_set)


def composition_of_set(s: SubsetMask) -> Composition:
    """Interleaved run lengths of s and its complement, starting with s.

    Requires 1 ∈ s; walking the mask upward, each maximal block of equal
    membership is one part, so the parts alternate between runs of s and
    runs of the complement. Bijection from {s : 1 ∈ s ⊆ [n]} onto the
    compositions of n.
    """
    if s.n == 0 or not s.bits & 1:
        raise ValueError(f"composition_of_set needs 1 ∈ {s}")
    parts = []
    prev, count = 1, 0
    for pos in range(s.n):
        cur = s.bits >> pos & 1
        if cur == prev:
            count += 1
        else:
            parts.append(count)
            prev, count = cur, 1
    parts.append(count)
    return tuple(parts)


def set_of_composition(parts: Composition, n: int) -> SubsetMask:
    """Inverse of composition_of_set."""
    if sum(parts) != n or any(p <= 0 for p in parts):
        raise ValueError(f"{parts} is not a composition of {n}")
    bits = 0
    pos = 0
    for k, p in enumerate(parts):
        if k % 2 == 0:  # even positions are runs of the set itself
            bits |= ((1 << p) - 1) << pos
        pos += p
    return SubsetMask(n, bits)


def compositions(n: int) -> tuple[Composition, ...]:
    """All compositions of n, one each; 2^(n-1) of them for n >= 1.

    Enumeration order follows composition_of_set over rank-ascending
    subsets containing 1.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ((),)
    return tuple(
        composition_of_set(SubsetMask(n, bits)) for bits in range(1, 1 << n, 2)
    )


def composition_weight(parts: Composition) -> int:
    """Product of (part + 1) over all parts; 1 for the empty composition."""
    return prod(p + 1 for p in parts)


def composition_prefix_weight(parts: Composition) -> int:
    """Product of (part + 1) over all parts but the last."""
    return prod(p + 1 for p in parts[:-1])
