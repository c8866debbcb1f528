"""Built-in catalogue of q-series identities and congruences, and their checker.

Each entry is written in the expression language of :mod:`qdissect.dsl`.
``B`` below is the generating function ``f2^2/(f1*f4^3)`` of b(n), the number
of partition triples (distinct odd parts, parts divisible by 4, parts divisible
by 4). Congruence entries may carry intermediate ``chain`` expressions; every
link of the chain is compared against the left-hand side.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from qdissect.dsl import Expr, parse_expr, pretty, evaluate
from qdissect.series import EXACT, Mismatch, Ring, compare

B = "f2^2/(f1*f4^3)"

# b(3n) ... b(81n+24) as nested 3-dissections of B
B_3N = f"dissect({B}, 3, 0)"
B_9N6 = f"dissect({B_3N}, 3, 2)"
B_9N3 = f"dissect({B_3N}, 3, 1)"
B_27N24 = f"dissect({B_9N6}, 3, 2)"
B_81N51 = f"dissect({B_27N24}, 3, 1)"
B_81N24 = f"dissect({B_27N24}, 3, 0)"

# recurring 3-dissection bodies
_F2SQ_OVER_F1 = "(f6*f9^2/(f3*f18) + q*f18^2/f9)"
_POD = "(f18^9/(f3^2*f9^3*f12^2*f36^3) + q*f6^2*f18^3/(f3^3*f12^3) + q^2*f6^4*f9^3*f36^3/(f3^4*f12^4*f18^3))"
_PED = "(f12*f18^4/(f3^3*f36^2) + q*f6^2*f9^3*f36/(f3^4*f18^2) + 2*q^2*f6*f18*f36/f3^3)"
_F1SQ_OVER_F2 = "(f9^2/f18 - 2*q*f3*f18^2/(f6*f9))"
_F2_DISSECTION_PAIR = "(f4^3*f6^2/(f2^2*f12) - q*f12^3/f4)"


class IdentityError(KeyError):
    pass


@dataclass(frozen=True)
class Identity:
    id: str
    lhs: Expr
    rhs: Expr
    modulus: int | None = None
    note: str = ""
    chain: tuple[Expr, ...] = ()

    @property
    def kind(self) -> str:
        return "exact" if self.modulus is None else "congruence"

    @property
    def ring(self) -> Ring:
        return EXACT if self.modulus is None else Ring(self.modulus)

    def to_dict(self) -> dict:
        d = {"id": self.id, "kind": self.kind, "lhs": pretty(self.lhs), "rhs": pretty(self.rhs)}
        if self.modulus is not None:
            d["modulus"] = self.modulus
        if self.chain:
            d["chain"] = [pretty(c) for c in self.chain]
        d["note"] = self.note
        return d


def _entry(id, lhs, rhs, note, modulus=None, chain=()):
    return Identity(id, parse_expr(lhs), parse_expr(rhs), modulus, note, tuple(parse_expr(c) for c in chain))


_EXACT = [
    ("eq1.1", "dissect(1/f1, 5, 4)", "5*f5^5/f1^6", "p(5n+4) generating function"),
    ("eq1.2", "dissect(1/(f1*f2), 3, 2)", "3*f3^3*f6^3/(f1^4*f2^4)", "cubic partitions a(3n+2)"),
    ("eq1.3", "dissect(f4/(f1^2*f2), 3, 2)", "6*f3^6*f4^3/(f1^8*f2^3)", "overcubic partitions a-bar(3n+2)"),
    ("eq1.5", f"dissect({B}, 3, 2)", "3*q*f2^6*f12^6/(f1^3*f4^11)", "b(3n+2) generating function"),
    ("eq1.6", f"dissect({B}, 3, 1)", "alpha(q^4)*f2^6*f12^3/(f1^3*f4^10)", "b(3n+1) generating function"),
    ("eq1.8", "f2^2/f1", "f6*f9^2/(f3*f18) + q*f18^2/f9", "3-dissection of f2^2/f1"),
    ("eq2.1", "f3^3/f1", "f4^3*f6^2/(f2^2*f12) + q*f12^3/f4", "2-dissection of f3^3/f1"),
    ("eq2.2", "f1/f3^3", f"f2^3*f12^3/(f4*f6^9)*{_F2_DISSECTION_PAIR}", "2-dissection of f1/f3^3"),
    (
        "eq2.3",
        "1/f1^3",
        "f9^3/f3^10*(alpha(q^3)^2 + 3*q*alpha(q^3)*f9^3/f3 + 9*q^2*f9^6/f3^2)",
        "3-dissection of 1/f1^3",
    ),
    ("eq2.4", "alpha(q)", "f2^6*f3/(f1^3*f6^2) + 3*q*f6^6*f1/(f3^3*f2^2)", "alpha as eta quotients"),
    ("eq2.5", "alpha(q^4)", "alpha(q) - 6*q*f4^2*f12^2/(f2*f6)", "alpha(q^4) from alpha(q)"),
    (
        "lemma2.1",
        "f6^8*f1/(f3^4*f2^2) + f2*f3^2*f12^3/(f1*f4*f6)",
        "2*f4^2*f12^2*f6/(f2*f3)",
        "theta function identity",
    ),
    (
        "lemma2.2",
        "alpha(q^4)*f6^2/f3 + 3*q*f2*f3^2*f12^3/(f1*f4*f6)",
        "f2^6/f1^3",
        "theta function identity",
    ),
    (
        "eq2.6",
        B,
        f"{_F2SQ_OVER_F1}*f36^3/f12^10"
        "*(alpha(q^12)^2 + 3*q^4*alpha(q^12)*f36^3/f12 + 9*q^8*f36^6/f12^2)",
        "generating function of b(n) rewritten through two 3-dissections",
    ),
    ("eq3.1", "f1^2/f2", "f9^2/f18 - 2*q*f3*f18^2/(f6*f9)", "3-dissection of f1^2/f2"),
    ("eq3.2", "f2/(f1*f4)", _POD[1:-1], "3-dissection for partitions with distinct odd parts"),
    ("eq3.3", "f4/f1", _PED[1:-1], "3-dissection for partitions with distinct even parts"),
    ("eq3.4", "f1^3/f3", "f4^3/f12 - 3*q*f2^2*f12^3/(f4*f6^2)", "2-dissection of f1^3/f3"),
    (
        "lemma3.1",
        "f2^2*f3*f12^3/(f4^4*f6^2) + f2^4*f3^5*f12^3/(f1^4*f4^4*f6^4)",
        "2*f2*f6^5/(f1^2*f3*f4^3)",
        "theta function identity",
    ),
    (
        "eq3.5",
        "f2*f12^3/(f4*f6^2)*f1^2*f3^2 + f2^3*f12^3/(f4*f6^4)*(f3^3/f1)^2",
        "2*f6^5",
        "intermediate identity behind the preceding lemma",
    ),
]

_MOD3 = [
    ("eq1.7", f"dissect({B}, 3, 2)", "0", "b(3n+2) vanishes mod 3", ()),
    (
        "quickproof",
        B,
        f"1/f12*{_F2SQ_OVER_F1}",
        "short route to b(3n+2) = 0 mod 3",
        ("f2^2/(f1*f12)",),
    ),
    (
        "eq3.6",
        B_3N,
        f"f3^2/f6*{_POD}",
        "b(3n) mod 3",
        (
            "f2*f3^2/(f1*f6)*alpha(q^4)^2*f12^3/f4^10",
            "f3^2/f6*f2/f1*f12^3/(f4*f4^9)",
            "f3^2/f6*f2/(f1*f4)",
        ),
    ),
    (
        "eq3.7/3.8",
        B_9N6,
        f"f3^2*f12^2/f6^2*{_F1SQ_OVER_F2}*{_POD}",
        "b(9n+6) mod 3",
        ("f1^2/f2*f2^4*f3^3*f12^3/(f1^4*f4^4*f6^3)", "f1/f4*f3^2*f12^2/f6^2"),
    ),
    (
        "eq3.9",
        B_27N24,
        f"-f3^2*f12^2/f6^2*{_PED}",
        "b(27n+24) mod 3",
        (
            "f1^2*f4^2/f2^2*(-2*f2*f6^5/(f1^2*f3*f4^3) + f2^4*f3^5*f12^3/(f1^4*f4^4*f6^4))",
            "f1^2*f4^2/f2^2*-(f12^3*f2^2*f3/(f4^4*f6^2))",
            "-f4/f1*f3^2*f12^2/f6^2",
        ),
    ),
    (
        "eq3.10",
        B_81N51,
        "-f1/f4*f3^2*f12^2/f6^2",
        "b(81n+51) mod 3",
        # middle link carries f12^1; with f12^2 it is off by a factor f12
        ("-f1^2*f4^2/f2^2*f2^2*f3^3*f12/(f1^4*f6^2)",),
    ),
    (
        "eq3.11",
        B_9N3,
        "f2*f6^3/(f1*f12)",
        "b(9n+3) mod 3",
        ("f1^2/f2*f2^2*f6^3/(f1^3*f4^3)",),
    ),
    (
        "eq3.12",
        B_81N24,
        "-f2*f6^3/(f1*f12)",
        "b(81n+24) mod 3",
        ("-f1^2*f4^2/f2^2*f4*f6^4/(f1^3*f12^2)",),
    ),
    ("alpha-mod3", "alpha(q^4)", "1", "alpha(q^4) = alpha(q) = 1 mod 3", ("alpha(q)",)),
]

REGISTRY: tuple[Identity, ...] = tuple(
    [_entry(i, l, r, note) for i, l, r, note in _EXACT]
    + [_entry(i, l, r, note, 3, chain) for i, l, r, note, chain in _MOD3]
)

# Deliberately wrong variants used to show the checker can fail.
FIXTURES: tuple[Identity, ...] = (
    _entry("eq1.5-broken", f"dissect({B}, 3, 2)", "3*q*f2^6*f12^6/(f1^3*f4^10)", "f4 exponent 10 instead of 11"),
)

_BY_ID = {e.id: e for e in REGISTRY + FIXTURES}


def registry() -> list[Identity]:
    return list(REGISTRY)


def lookup(id: str) -> Identity:
    try:
        return _BY_ID[id]
    except KeyError:
        raise IdentityError(f"unknown identity {id!r}") from None


@dataclass
class VerificationReport:
    id: str
    kind: str
    modulus: int | None
    order: int
    status: str
    first_mismatch: Mismatch | None = None
    millis: float = 0.0
    failed_link: str | None = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        d = {"id": self.id, "kind": self.kind}
        if self.modulus is not None:
            d["modulus"] = self.modulus
        d.update(order=self.order, status=self.status)
        if self.first_mismatch is not None:
            n, lhs, rhs = self.first_mismatch
            d["first_mismatch"] = {"n": n, "lhs": str(lhs), "rhs": str(rhs)}
        d["millis"] = round(self.millis, 3)
        return d


def verify_identity(identity: Identity | str, order: int = 500) -> VerificationReport:
    """Expand both sides of an entry and compare coefficients through ``order``."""
    entry = lookup(identity) if isinstance(identity, str) else identity
    if order < 1:
        raise ValueError("order must be at least 1")
    t0 = time.perf_counter()
    ring = entry.ring
    lhs = evaluate(entry.lhs, ring, order)
    mismatch, failed = None, None
    for link in entry.chain + (entry.rhs,):
        other = evaluate(link, ring, order)
        n = min(lhs.order, other.order)
        if n < order:
            raise ValueError(f"{entry.id}: only order {n} reachable, {order} requested")
        mismatch = compare(lhs, other, n)
        if mismatch is not None:
            failed = pretty(link)
            break
    return VerificationReport(
        id=entry.id,
        kind=entry.kind,
        modulus=entry.modulus,
        order=order,
        status="pass" if mismatch is None else "fail",
        first_mismatch=mismatch,
        millis=(time.perf_counter() - t0) * 1000,
        failed_link=failed,
    )


def verify_all(order: int = 500, workers: int = 1, entries=None) -> list[VerificationReport]:
    """Check every registry entry; reports come back in registry order."""
    entries = list(REGISTRY if entries is None else entries)
    if workers <= 1:
        return [verify_identity(e, order) for e in entries]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda e: verify_identity(e, order), entries))
