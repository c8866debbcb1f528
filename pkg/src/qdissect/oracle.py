"""Partition counts by knapsack dynamic programming.

Nothing here touches power-series arithmetic: these tables are the ground
truth that the eta-quotient expansions are checked against.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import combinations

from qdissect.series import EXACT, Series


class Family(str, enum.Enum):
    PARTITIONS = "partitions"
    CUBIC = "cubic"
    OVERCUBIC = "overcubic"
    LINB = "linb"
    DISTINCT_ODD_ONLY = "distinct-odd"
    POD = "pod"
    PED = "ped"
    TWO_COLOR_MULT4 = "two-color-mult4"

    @classmethod
    def parse(cls, name: str) -> "Family":
        key = name.strip().lower().replace("_", "-")
        for fam in cls:
            if key in (fam.value, fam.name.lower().replace("_", "-")):
                return fam
        raise ValueError(f"unknown family {name!r}; choose from {[f.value for f in cls]}")


def _unbounded(table: list[int], part: int, copies: int = 1) -> None:
    # each of `copies` kinds of `part` may be used any number of times
    for _ in range(copies):
        for n in range(part, len(table)):
            table[n] += table[n - part]


def _at_most_once(table: list[int], part: int) -> None:
    for n in range(len(table) - 1, part - 1, -1):
        table[n] += table[n - part]


def _overlined(table: list[int], part: int) -> None:
    # factor 1 + 2(x^t + x^2t + ...): the first copy may carry an overline
    old = table[:]
    tail = [0] * len(table)
    for n in range(part, len(table)):
        tail[n] = old[n - part] + tail[n - part]
        table[n] = old[n] + 2 * tail[n]


def _table(family: Family, limit: int) -> list[int]:
    t = [1] + [0] * limit
    parts = range(1, limit + 1)
    if family is Family.PARTITIONS:
        for p in parts:
            _unbounded(t, p)
    elif family is Family.CUBIC:
        for p in parts:
            _unbounded(t, p, 1 if p % 2 else 2)
    elif family is Family.OVERCUBIC:
        for p in parts:
            for _ in range(1 if p % 2 else 2):
                _overlined(t, p)
    elif family is Family.DISTINCT_ODD_ONLY:
        for p in range(1, limit + 1, 2):
            _at_most_once(t, p)
    elif family is Family.POD:
        for p in parts:
            if p % 2:
                _at_most_once(t, p)
            else:
                _unbounded(t, p)
    elif family is Family.PED:
        for p in parts:
            if p % 2:
                _unbounded(t, p)
            else:
                _at_most_once(t, p)
    elif family is Family.TWO_COLOR_MULT4:
        for p in range(4, limit + 1, 4):
            _unbounded(t, p, 2)
    elif family is Family.LINB:
        odd = _table(Family.DISTINCT_ODD_ONLY, limit)
        four = _table(Family.TWO_COLOR_MULT4, limit)
        t = [sum(odd[s] * four[n - s] for s in range(n + 1)) for n in range(limit + 1)]
    else:  # pragma: no cover
        raise ValueError(family)
    return t


@lru_cache(maxsize=32)
def _cached_table(family: Family, limit: int) -> tuple[int, ...]:
    return tuple(_table(family, limit))


def count_table(family: Family | str, limit: int) -> list[int]:
    """``[count(family, n) for n in 0..limit]``."""
    if isinstance(family, str):
        family = Family.parse(family)
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    return list(_cached_table(family, limit))


def count(family: Family | str, n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return count_table(family, n)[n]


def oracle_series(family: Family | str, order: int) -> Series:
    return Series(EXACT, count_table(family, order))


def linb_bruteforce(n: int) -> int:
    """Count triples (distinct odd parts, multiples of 4, multiples of 4) summing to n.

    Enumerates the first component as a subset and the other two as explicit
    multiplicity vectors; intended for n <= 30.
    """
    odds = list(range(1, n + 1, 2))
    odd_sums = [0] * (n + 1)
    for r in range(len(odds) + 1):
        for combo in combinations(odds, r):
            s = sum(combo)
            if s <= n:
                odd_sums[s] += 1

    def mult4_partitions(total: int, max_part: int) -> int:
        if total == 0:
            return 1
        return sum(
            mult4_partitions(total - p, p) for p in range(min(max_part, total), 0, -1) if p % 4 == 0
        )

    result = 0
    for s in range(n + 1):
        if not odd_sums[s]:
            continue
        rest = n - s
        pairs = sum(mult4_partitions(x, x) * mult4_partitions(rest - x, rest - x) for x in range(rest + 1))
        result += odd_sums[s] * pairs
    return result
