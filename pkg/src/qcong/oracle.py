"""Combinatorial ground truth for partition counts.

Plain Python integers and knapsack recurrences only; nothing here touches the
series machinery, so agreement between the two is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError

ENUMERATION_LIMIT = 40


@dataclass(frozen=True)
class RegularDistinctSpec:
    """Parts divisible by neither ``r`` nor ``s``, each used at most once."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 2 or self.s < 2:
            raise PreconditionError(f"need r, s >= 2, got ({self.r}, {self.s})")
        if gcd(self.r, self.s) != 1:
            raise PreconditionError(f"r and s must be coprime, got ({self.r}, {self.s})")

    def allows(self, part: int) -> bool:
        return part > 0 and part % self.r != 0 and part % self.s != 0


@dataclass(frozen=True)
class CountTable:
    values: tuple[int, ...]
    kind: str

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


def count_distinct_regular(spec: RegularDistinctSpec, nmax: int) -> CountTable:
    """``a_{r,s}(n)`` for ``n = 0..nmax`` by 0/1 knapsack."""
    if nmax < 0:
        raise PreconditionError("nmax must be >= 0")
    table = [1] + [0] * nmax
    for part in range(1, nmax + 1):
        if not spec.allows(part):
            continue
        for n in range(nmax, part - 1, -1):
            table[n] += table[n - part]
    return CountTable(tuple(table), f"a_{spec.r},{spec.s}")


def enumerate_distinct_regular(spec: RegularDistinctSpec, n: int) -> list[list[int]]:
    """Every (r,s)-regular partition of ``n`` into distinct parts, largest part first.

    Partitions are listed in decreasing lexicographic order.
    """
    if n < 0 or n > ENUMERATION_LIMIT:
        raise PreconditionError(f"exhaustive enumeration needs 0 <= n <= {ENUMERATION_LIMIT}")
    out: list[list[int]] = []

    def walk(remaining: int, below: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(list(prefix))
            return
        for part in range(min(remaining, below - 1), 0, -1):
            if spec.allows(part):
                prefix.append(part)
                walk(remaining - part, part, prefix)
                prefix.pop()

    walk(n, n + 1, [])
    return out


def _unbounded(parts, nmax: int) -> list[int]:
    table = [1] + [0] * nmax
    for part in parts:
        for n in range(part, nmax + 1):
            table[n] += table[n - part]
    return table


def count_partitions(nmax: int) -> CountTable:
    """``p(n)`` for ``n = 0..nmax``."""
    if nmax < 0:
        raise PreconditionError("nmax must be >= 0")
    return CountTable(tuple(_unbounded(range(1, nmax + 1), nmax)), "p")


def count_lregular(ell: int, nmax: int) -> CountTable:
    """``b_ell(n)``: partitions of ``n`` with no part divisible by ``ell``."""
    if ell < 2:
        raise PreconditionError(f"ell must be >= 2, got {ell}")
    if nmax < 0:
        raise PreconditionError("nmax must be >= 0")
    parts = [k for k in range(1, nmax + 1) if k % ell]
    return CountTable(tuple(_unbounded(parts, nmax)), f"b_{ell}")
