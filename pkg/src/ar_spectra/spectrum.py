"""Characteristic polynomials and eigenvalue reports.

The characteristic polynomial of the size-2^n matrices factors as a product
of t^2 - c over 2^(n-1) integer radicands c, one per composition of n (the
full run-weight product for the A family, the prefix product for B). The
eigenvalues are the surd pairs +/-sqrt(c).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import Decimal, localcontext

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int

from .combinatorics import (
    Composition,
    SubsetMask,
    composition_of_set,
    composition_prefix_weight,
    composition_weight,
    compositions,
    interior_run_weight,
    run_weight,
)

DEFAULT_DIGITS = 12


class IntPolynomial:
    """Integer polynomial, coefficients ascending; () is the zero polynomial."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def _poly_from_radicands(radicands) -> IntPolynomial:
    """Expand the product of (t^2 - c) over the radicands.

    Folded in the substituted variable u = t^2 (one linear factor per
    radicand), then the u-coefficients are spread over the even powers of t.
    """
    coeffs = [mpz(1)]
    for c in radicands:
        c = mpz(c)
        nxt = [mpz(0)] * (len(coeffs) + 1)
        for k, v in enumerate(coeffs):
            nxt[k + 1] += v
            nxt[k] -= c * v
        coeffs = nxt
    spread = [0] * (2 * len(coeffs) - 1)
    spread[::2] = [int(v) for v in coeffs]
    return IntPolynomial(spread)


def radicands_a(n: int) -> tuple[int, ...]:
    """Squared eigenvalues of the A matrix, one per composition of n."""
    return tuple(composition_weight(mu) for mu in compositions(n))


def radicands_b(n: int) -> tuple[int, ...]:
    return tuple(composition_prefix_weight(mu) for mu in compositions(n))


def char_poly_formula_a(n: int) -> IntPolynomial:
    """det(tI - A) as the composition product; t - 1 for the 1x1 base case."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return IntPolynomial((-1, 1))
    return _poly_from_radicands(radicands_a(n))


def char_poly_formula_b(n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return IntPolynomial((-1, 1))
    return _poly_from_radicands(radicands_b(n))


def blockform_radicands(n: int, which: str) -> tuple[int, ...]:
    """Radicands enumerated over subsets containing 1: weight(I) * weight(comp)."""
    if which not in ("A", "B"):
        raise ValueError(f"which must be 'A' or 'B', got {which!r}")
    weight = run_weight if which == "A" else interior_run_weight
    out = []
    for bits in range(1, 1 << n, 2):
        s = SubsetMask(n, bits)
        out.append(weight(s) * weight(s.complement()))
    return tuple(out)


def char_poly_blockform(n: int, which: str) -> IntPolynomial:
    """Same polynomial as the formula, via the 2x2 block diagonal products."""
    if n < 1:
        raise ValueError("blockform needs n >= 1")
    return _poly_from_radicands(blockform_radicands(n, which))


@dataclass(frozen=True)
class SpectrumRecord:
    composition: Composition
    radicand: int
    approx: str  # decimal sqrt of the radicand
    pair: bool = True  # False only for the 1x1 base case (single eigenvalue 1)


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    which: str
    records: tuple[SpectrumRecord, ...] = field(repr=False)
    charpoly: IntPolynomial = field(repr=False)


def _sqrt_str(radicand: int, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(radicand).sqrt())


def spectrum(n: int, which: str, *, digits: int = DEFAULT_DIGITS) -> SpectrumReport:
    """All eigenvalue records, sorted by descending radicand then by
    lexicographically smaller composition."""
    if which not in ("A", "B"):
        raise ValueError(f"which must be 'A' or 'B', got {which!r}")
    if digits < 1:
        raise ValueError("digits must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        rec = SpectrumRecord((), 1, _sqrt_str(1, digits), pair=False)
        return SpectrumReport(0, which, (rec,), char_poly_formula_a(0))
    weight = composition_weight if which == "A" else composition_prefix_weight
    recs = [
        SpectrumRecord(mu, weight(mu), _sqrt_str(weight(mu), digits))
        for mu in compositions(n)
    ]
    recs.sort(key=lambda r: (-r.radicand, r.composition))
    poly = char_poly_formula_a(n) if which == "A" else char_poly_formula_b(n)
    return SpectrumReport(n, which, tuple(recs), poly)


def _format_composition(mu: Composition) -> str:
    return "(" + ",".join(str(p) for p in mu) + ")"


def report_plain(report: SpectrumReport) -> str:
    """One record per line: composition, radicand, approximation."""
    lines = [f"n={report.n} matrix={report.which} records={len(report.records)}"]
    for r in report.records:
        if r.pair:
            lines.append(
                f"mu={_format_composition(r.composition)} radicand={r.radicand} "
                f"approx={r.approx}"
            )
        else:
            lines.append(f"eigenvalue={r.approx}")
    return "\n".join(lines) + "\n"


def report_structured(report: SpectrumReport) -> str:
    """JSON document: n, matrix, records[], charpoly (ascending, decimal strings)."""
    doc = {
        "n": report.n,
        "matrix": report.which,
        "records": [
            {
                "composition": list(r.composition),
                "radicand": r.radicand,
                "approx": r.approx,
                "pair": r.pair,
            }
            for r in report.records
        ],
        "charpoly": [str(c) for c in report.charpoly.coeffs],
    }
    return json.dumps(doc, indent=2) + "\n"
