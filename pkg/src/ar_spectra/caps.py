"""Size caps shared by the builders: fail fast before allocating 4^n entries."""

from __future__ import annotations

DEFAULT_MAX_N = 14


class SizeCapError(Exception):
    """A requested build or computation exceeds the configured size cap."""


def check_cap(n: int, max_n: int | None, *, what: str = "n") -> None:
    if n < 0:
        raise ValueError(f"{what} must be non-negative, got {n}")
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n > cap:
        raise SizeCapError(
            f"{what}={n} exceeds the cap of {cap}; pass a higher cap to proceed"
        )
