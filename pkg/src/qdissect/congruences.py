"""Finite checks of Ramanujan-type and internal congruences for b(n) modulo 3.

Everything is expanded directly in Z/3Z. A passing report means the stated
relation holds for every ``n <= n_max``; it is not a proof.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from qdissect.dsl import Expr, evaluate, parse_expr
from qdissect.eta import EtaQuotient, eta_quotient
from qdissect.series import Ring, Series

B_SPEC = EtaQuotient(1, 0, {2: 2, 1: -1, 4: -3})
DEFAULT_ORDER_CAP = 10_000
DEFAULT_MAX_K = 2


class OrderCapError(ValueError):
    pass


@dataclass(frozen=True)
class InternalFamily:
    """b(A n + B) = sign * b(9n + 6) (mod 3) with A = 9^(k+1), B = (5A + 3)/8."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("family index must be nonnegative")
        if (5 * self.modulus_a + 3) % 8:
            raise ArithmeticError(f"offset is not integral for k={self.k}")

    @property
    def modulus_a(self) -> int:
        return 3 ** (2 * (self.k + 1))

    @property
    def offset_b(self) -> int:
        return (5 * self.modulus_a + 3) // 8

    @property
    def sign(self) -> int:
        return -1 if self.k % 2 else 1


@dataclass
class CongruenceReport:
    name: str
    relation: str
    n_max: int
    order: int
    status: str
    failures: list[tuple[int, int, int]] = field(default_factory=list)
    millis: float = 0.0
    sign: int | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "relation": self.relation,
            "modulus": 3,
            "n_max": self.n_max,
            "order": self.order,
            "status": self.status,
        }
        if self.sign is not None:
            d["sign"] = self.sign
        if self.failures:
            n, lhs, rhs = self.failures[0]
            d["first_failure"] = {"n": n, "lhs": str(lhs), "rhs": str(rhs)}
        d["millis"] = round(self.millis, 3)
        return d


def b_mod3(order: int) -> Series:
    return eta_quotient(B_SPEC, order, Ring(3))


def _check(name, relation, n_max, order, pairs, sign=None, t0=None) -> CongruenceReport:
    failures = [(n, lhs, rhs) for n, lhs, rhs in pairs if lhs != rhs]
    return CongruenceReport(
        name=name,
        relation=relation,
        n_max=n_max,
        order=order,
        status="fail" if failures else "pass",
        failures=failures,
        millis=(time.perf_counter() - t0) * 1000 if t0 else 0.0,
        sign=sign,
    )


def verify_ramanujan_17(n_max: int) -> CongruenceReport:
    """b(3n + 2) = 0 (mod 3) for n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    t0 = time.perf_counter()
    order = 3 * n_max + 2
    b = b_mod3(order)
    pairs = ((n, b[3 * n + 2], 0) for n in range(n_max + 1))
    return _check("eq1.7", "b(3n+2) = 0 (mod 3)", n_max, order, pairs, t0=t0)


def verify_family_19(
    k: int, n_max: int, order_cap: int = DEFAULT_ORDER_CAP, max_k: int = DEFAULT_MAX_K
) -> CongruenceReport:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    fam = InternalFamily(k)
    if k > max_k:
        raise OrderCapError(f"family k={k} exceeds max_k={max_k}; raise max_k explicitly")
    a, off, sign = fam.modulus_a, fam.offset_b, fam.sign
    order = max(a * n_max + off, 9 * n_max + 6)
    if order > order_cap:
        raise OrderCapError(f"k={k}, n_max={n_max} needs order {order} > cap {order_cap}")
    t0 = time.perf_counter()
    b = b_mod3(order)
    pairs = ((n, b[a * n + off], (sign * b[9 * n + 6]) % 3) for n in range(n_max + 1))
    relation = f"b({a}n+{off}) = {'-' if sign < 0 else ''}b(9n+6) (mod 3)"
    return _check(f"family19[k={k}]", relation, n_max, order, pairs, sign=sign, t0=t0)


def verify_eq_110(n_max: int) -> CongruenceReport:
    """b(81n + 24) = -b(9n + 3) (mod 3) for n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    t0 = time.perf_counter()
    order = 81 * n_max + 24
    b = b_mod3(order)
    pairs = ((n, b[81 * n + 24], (-b[9 * n + 3]) % 3) for n in range(n_max + 1))
    return _check("eq1.10", "b(81n+24) = -b(9n+3) (mod 3)", n_max, order, pairs, sign=-1, t0=t0)


def scan_progressions(expr: Expr | str, modulus: int, step: int, n_max: int) -> list[int]:
    """Residues r < step whose coefficients at step*n + r vanish mod ``modulus`` for n <= n_max.

    The result lists candidates only: a finite scan cannot establish a congruence.
    """
    if step < 1:
        raise ValueError("step must be positive")
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    if isinstance(expr, str):
        expr = parse_expr(expr)
    s = evaluate(expr, Ring(modulus), step * n_max + step - 1)
    return [r for r in range(step) if not any(s.coeffs[r::step])]
