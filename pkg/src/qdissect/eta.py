"""Euler products ``f_m``, eta quotients and the cubic theta function ``alpha``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
from typing import Mapping

from qdissect.series import (
    EXACT,
    Ring,
    Series,
    SeriesError,
    construct,
    divide,
    mul,
    one,
    scale,
    shift,
    substitute,
)


def pentagonal_terms(limit: int) -> list[tuple[int, int]]:
    """Nonzero terms ``(k(3k-1)/2, (-1)^k)`` of ``f_1`` with exponent <= limit, sorted."""
    terms = [(0, 1)]
    k = 1
    while True:
        sign = -1 if k % 2 else 1
        lo = k * (3 * k - 1) // 2
        if lo > limit:
            break
        terms.append((lo, sign))
        hi = k * (3 * k + 1) // 2
        if hi <= limit:
            terms.append((hi, sign))
        k += 1
    return terms


@lru_cache(maxsize=256)
def eta(m: int, order: int, ring: Ring = EXACT) -> Series:
    """``f_m = prod_{n>=1} (1 - q^{mn})`` to the given order, via the pentagonal sum."""
    if m < 1:
        raise SeriesError(f"eta scale must be positive, got {m}")
    base = construct(ring, order // m, pentagonal_terms(order // m))
    return substitute(base, m).truncate(order)


@dataclass(frozen=True)
class EtaQuotient:
    """``scalar * q^qshift * prod f_m^{e_m}``."""

    scalar: int = 1
    qshift: int = 0
    exponents: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.qshift < 0:
            raise SeriesError("qshift must be nonnegative")
        clean = {}
        for m, e in self.exponents.items():
            if m < 1:
                raise SeriesError(f"eta scale must be positive, got {m}")
            if e:
                clean[m] = e
        object.__setattr__(self, "exponents", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.scalar, self.qshift, tuple(self.exponents.items())))

    def __str__(self):
        num = [f"f{m}" + (f"^{e}" if e != 1 else "") for m, e in self.exponents.items() if e > 0]
        den = [f"f{m}" + (f"^{-e}" if e != -1 else "") for m, e in self.exponents.items() if e < 0]
        head = []
        if self.scalar != 1 or not (num or self.qshift):
            head.append(str(self.scalar))
        if self.qshift:
            head.append("q" if self.qshift == 1 else f"q^{self.qshift}")
        text = "*".join(head + num) or "1"
        if den:
            text += "/" + (den[0] if len(den) == 1 else "(" + "*".join(den) + ")")
        return text


def eta_quotient(spec: EtaQuotient, order: int, ring: Ring = EXACT) -> Series:
    # Each factor is applied as a sparse multiply or sparse division, so the
    # cost is O(order * sqrt(order)) per unit of |exponent|.
    if spec.qshift > order:
        return construct(ring, order)
    n = order - spec.qshift
    acc = one(n, ring)
    for m, e in spec.exponents.items():
        f = eta(m, n, ring)
        for _ in range(abs(e)):
            acc = mul(acc, f) if e > 0 else divide(acc, f)
    acc = scale(acc, spec.scalar)
    return shift(acc, spec.qshift)


def _theta_counts(limit: int) -> list[int]:
    # r(n) = #{(u, v) : u^2 + uv + v^2 = n}; u^2+uv+v^2 >= (u^2+v^2)/2 bounds |u|, |v|.
    bound = isqrt(4 * limit)
    if bound * bound < 4 * limit:
        bound += 1
    counts = [0] * (limit + 1)
    for u in range(-bound, bound + 1):
        for v in range(-bound, bound + 1):
            n = u * u + u * v + v * v
            if n <= limit:
                counts[n] += 1
    return counts


@lru_cache(maxsize=64)
def alpha(k: int, order: int, ring: Ring = EXACT) -> Series:
    """``alpha(q^k) = sum_{u,v} q^{k(u^2+uv+v^2)}`` by direct lattice enumeration."""
    if k < 1:
        raise SeriesError(f"substitution scale must be positive, got {k}")
    base = Series(ring, _theta_counts(order // k))
    return substitute(base, k).truncate(order)

