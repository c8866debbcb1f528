"""Dense truncated power series over the integers or over Z/mZ.

A :class:`Series` of order ``N`` carries the coefficients of ``q^0 .. q^N``
and claims nothing about higher exponents. Binary operations truncate to the
smaller operand order; ``shift`` and ``substitute`` are lossless and grow the
order instead.

Exact coefficients are Python ints. Modular arithmetic is routed through the
compiled kernels in :mod:`qdissect._kernels`, which keeps order ~10^5
expansions in Mod(3) cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from qdissect import _kernels

# Mod(m) kernels multiply two residues in int64.
MAX_MODULUS = 2**31 - 1


class SeriesError(ValueError):
    """Raised when an operation's precondition does not hold."""


class RingMismatchError(SeriesError):
    pass


class NonUnitError(SeriesError):
    pass


class ValuationError(SeriesError):
    pass


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: exact integers (``modulus is None``) or Z/mZ."""

    modulus: int | None = None

    def __post_init__(self):
        m = self.modulus
        if m is not None and not 2 <= m <= MAX_MODULUS:
            raise SeriesError(f"modulus must satisfy 2 <= m <= {MAX_MODULUS}, got {m}")

    @classmethod
    def mod(cls, m: int) -> "Ring":
        return cls(m)

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    def reduce(self, x: int) -> int:
        return x if self.modulus is None else x % self.modulus

    def is_unit(self, x: int) -> bool:
        if self.modulus is None:
            return x in (1, -1)
        from math import gcd

        return gcd(x, self.modulus) == 1

    def inv(self, x: int) -> int:
        if not self.is_unit(x):
            raise NonUnitError(f"{x} is not a unit in {self}")
        if self.modulus is None:
            return x
        return pow(x, -1, self.modulus)

    def __str__(self):
        return "exact" if self.modulus is None else f"mod {self.modulus}"


EXACT = Ring()


class Mismatch(NamedTuple):
    n: int
    lhs: int
    rhs: int


class Series:
    """Immutable truncated power series ``sum coeffs[n] q^n`` for ``n <= order``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable[int], *, _reduced: bool = False):
        cs = tuple(coeffs) if _reduced else tuple(ring.reduce(int(c)) for c in coeffs)
        if not cs:
            raise SeriesError("a series needs at least the constant coefficient")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"exponent {n} outside 0..{self.order}")
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        head = ", ".join(map(str, self.coeffs[:8]))
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"Series({self.ring}, order={self.order}, [{head}{tail}])"

    def __add__(self, other):
        return add(self, _coerce(other, self))

    def __radd__(self, other):
        return add(_coerce(other, self), self)

    def __sub__(self, other):
        return sub(self, _coerce(other, self))

    def __rsub__(self, other):
        return sub(_coerce(other, self), self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(other, self)

    def __truediv__(self, other):
        return divide(self, _coerce(other, self))

    def __pow__(self, e: int):
        return power(self, e)

    def truncate(self, n: int) -> "Series":
        if n > self.order:
            raise SeriesError(f"cannot truncate order {self.order} series to {n}")
        return Series(self.ring, self.coeffs[: n + 1], _reduced=True)

    def nonzero(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]


def _coerce(x, like: Series) -> Series:
    if isinstance(x, Series):
        return x
    if isinstance(x, int):
        return construct(like.ring, like.order, [(0, x)])
    return NotImplemented


def _check_ring(a: Series, b: Series) -> Ring:
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring} vs {b.ring}")
    return a.ring


# construction ---------------------------------------------------------------


def construct(ring: Ring, order: int, terms: Iterable[tuple[int, int]] = ()) -> Series:
    if order < 0:
        raise SeriesError("order must be nonnegative")
    coeffs = [0] * (order + 1)
    seen = set()
    for e, v in terms:
        if e in seen:
            raise SeriesError(f"duplicate exponent {e}")
        if not 0 <= e <= order:
            raise SeriesError(f"exponent {e} outside 0..{order}")
        seen.add(e)
        coeffs[e] = v
    return Series(ring, coeffs)


def from_coeffs(ring: Ring, coeffs: Sequence[int]) -> Series:
    return Series(ring, coeffs)


def zero(order: int, ring: Ring = EXACT) -> Series:
    return construct(ring, order)


def one(order: int, ring: Ring = EXACT) -> Series:
    return construct(ring, order, [(0, 1)])


def monomial(s: int, order: int, ring: Ring = EXACT, value: int = 1) -> Series:
    """``value * q^s`` at the given order (zero series when ``s > order``)."""
    if s < 0:
        raise SeriesError("monomial exponent must be nonnegative")
    return construct(ring, order, [(s, value)] if s <= order else [])


# arithmetic -----------------------------------------------------------------


def add(a: Series, b: Series) -> Series:
    ring = _check_ring(a, b)
    return Series(ring, (x + y for x, y in zip(a.coeffs, b.coeffs)))


def neg(a: Series) -> Series:
    return Series(a.ring, (-x for x in a.coeffs))


def sub(a: Series, b: Series) -> Series:
    ring = _check_ring(a, b)
    return Series(ring, (x - y for x, y in zip(a.coeffs, b.coeffs)))


def scale(a: Series, c: int) -> Series:
    return Series(a.ring, (c * x for x in a.coeffs))


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    ring = _check_ring(a, b)
    n = min(a.order, b.order)
    # iterate over the sparser operand's nonzero terms
    sa = [(i, c) for i, c in enumerate(a.coeffs[: n + 1]) if c]
    sb = [(i, c) for i, c in enumerate(b.coeffs[: n + 1]) if c]
    if len(sb) < len(sa):
        sa, b, a = sb, a, b
    dense = b.coeffs[: n + 1]
    if ring.modulus is not None:
        out = _kernels.sparse_mul_mod(sa, dense, ring.modulus)
        return Series(ring, out, _reduced=True)
    out = [0] * (n + 1)
    for i, c in sa:
        if c == 1:
            out[i:] = [x + y for x, y in zip(out[i:], dense)]
        elif c == -1:
            out[i:] = [x - y for x, y in zip(out[i:], dense)]
        else:
            out[i:] = [x + c * y for x, y in zip(out[i:], dense)]
    return Series(ring, out, _reduced=True)


def valuation(a: Series) -> int:
    """Index of the first nonzero coefficient; ``order + 1`` for the zero series."""
    for i, c in enumerate(a.coeffs):
        if c:
            return i
    return a.order + 1


def _solve(num: Sequence[int], den: Sequence[int], ring: Ring) -> list[int]:
    # d_n = c0^{-1} (a_n - sum_{i>=1} c_i d_{n-i}); len(num) == len(den)
    c0inv = ring.inv(den[0])
    taps = [(i, c) for i, c in enumerate(den) if i and c]
    if ring.modulus is not None:
        return _kernels.sparse_solve_mod(num, taps, c0inv, ring.modulus)
    d: list[int] = []
    for n, an in enumerate(num):
        s = an
        for i, c in taps:
            if i > n:
                break
            s -= c * d[n - i]
        d.append(s * c0inv)
    return d


def inverse(a: Series) -> Series:
    if not a.ring.is_unit(a.coeffs[0]):
        raise NonUnitError(f"constant term {a.coeffs[0]} is not a unit in {a.ring}")
    num = [1] + [0] * a.order
    return Series(a.ring, _solve(num, a.coeffs, a.ring), _reduced=True)


def divide(num: Series, den: Series) -> Series:
    """Quotient after cancelling the common power ``q^v``, ``v = valuation(den)``."""
    ring = _check_ring(num, den)
    v = valuation(den)
    if v > den.order:
        raise ValuationError("denominator is identically zero to its order")
    if valuation(num) < v:
        raise ValuationError(
            f"valuation of numerator ({valuation(num)}) is below that of denominator ({v})"
        )
    if not ring.is_unit(den.coeffs[v]):
        raise NonUnitError(f"leading coefficient {den.coeffs[v]} is not a unit in {ring}")
    n = min(num.order, den.order) - v
    return Series(ring, _solve(num.coeffs[v : v + n + 1], den.coeffs[v : v + n + 1], ring), _reduced=True)


def power(a: Series, e: int) -> Series:
    if e < 0:
        return power(inverse(a), -e)
    result = one(a.order, a.ring)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def shift(a: Series, s: int) -> Series:
    """Multiply by ``q^s``; the order grows by ``s``."""
    if s < 0:
        raise SeriesError("shift must be nonnegative")
    return Series(a.ring, (0,) * s + a.coeffs, _reduced=True)


def substitute(a: Series, k: int) -> Series:
    """``a(q^k)``, exact through order ``k*a.order + k - 1``."""
    if k < 1:
        raise SeriesError("substitution scale must be positive")
    out = [0] * (k * (a.order + 1))
    out[::k] = a.coeffs
    return Series(a.ring, out, _reduced=True)


def dissect(a: Series, m: int, r: int) -> Series:
    """Series whose n-th coefficient is the coefficient of ``q^(m n + r)`` in ``a``."""
    if m < 1 or not 0 <= r < m:
        raise SeriesError(f"invalid dissection modulus/residue ({m}, {r})")
    if a.order < r:
        raise SeriesError(f"order {a.order} series has no exponent {r}")
    return Series(a.ring, a.coeffs[r::m], _reduced=True)


def reduce_mod(a: Series, m: int) -> Series:
    if not a.ring.is_exact:
        raise SeriesError("reduce_mod expects an exact series")
    return Series(Ring(m), a.coeffs)


# comparison -----------------------------------------------------------------


def compare(a: Series, b: Series, n: int) -> Mismatch | None:
    """First mismatching exponent in ``0..n``, or ``None`` when the prefixes agree."""
    _check_ring(a, b)
    if n > a.order or n > b.order:
        raise SeriesError(f"comparison order {n} exceeds operand orders ({a.order}, {b.order})")
    if a.coeffs[: n + 1] == b.coeffs[: n + 1]:
        return None
    for i in range(n + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return Mismatch(i, a.coeffs[i], b.coeffs[i])
    raise AssertionError("unreachable")


def equal_upto(a: Series, b: Series, n: int) -> bool:
    return compare(a, b, n) is None
