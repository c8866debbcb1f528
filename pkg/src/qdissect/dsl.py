"""Expression language for eta quotients, theta series and dissections.

Grammar (whitespace between tokens is ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-'? factor
    factor := base ('^' '-'? INT)?
    base   := INT | 'q' | 'f' INT | 'alpha(q' ('^' INT)? ')'
            | 'dissect(' expr ',' INT ',' INT ')' | '(' expr ')'

``f12`` is the Euler product f_12, ``alpha(q^4)`` the cubic theta function at
q^4, and ``dissect(e, m, r)`` the series sum_n [q^(mn+r)] e * q^n.
"""

from __future__ import annotations

import re
import threading
from collections import Counter, OrderedDict
from dataclasses import dataclass
from typing import Union

from qdissect.eta import EtaQuotient, alpha, eta, eta_quotient
from qdissect.series import (
    EXACT,
    Ring,
    Series,
    SeriesError,
    add,
    construct,
    dissect,
    divide,
    monomial,
    mul,
    neg,
    power,
    sub,
)


# AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class IntConst:
    value: int


@dataclass(frozen=True)
class Q:
    pass


@dataclass(frozen=True)
class Eta:
    m: int


@dataclass(frozen=True)
class Alpha:
    k: int = 1


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    num: "Expr"
    den: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int


@dataclass(frozen=True)
class Dissect:
    inner: "Expr"
    m: int
    r: int

    def __post_init__(self):
        if self.m < 1 or not 0 <= self.r < self.m:
            raise SeriesError(f"dissect residue {self.r} must lie in 0..{self.m - 1}")


Expr = Union[IntConst, Q, Eta, Alpha, Neg, Add, Sub, Mul, Div, Pow, Dissect]


# parsing --------------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = expected
        detail = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{message} at position {position}{detail}")


_ETA = re.compile(r"f(\d+)")
_WORD = re.compile(r"[a-z]+")
_INT = re.compile(r"\d+")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in "+-*/^(),":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        if m := _INT.match(text, pos):
            tokens.append(("INT", m.group(), pos))
        elif m := _ETA.match(text, pos):
            tokens.append(("ETA", m.group(1), pos))
        elif m := _WORD.match(text, pos):
            word = m.group()
            if word == "f":
                raise ParseError("expected scale after 'f'", pos + 1, ("INT",))
            if word not in ("q", "alpha", "dissect"):
                raise ParseError(f"unknown name {word!r}", pos)
            tokens.append((word, word, pos))
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        pos = m.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str):
        if self.tok[0] != kind:
            self.fail(kind)
        return self.advance()

    def fail(self, *expected: str):
        kind, text, pos = self.tok
        got = "end of input" if kind == "EOF" else repr(text)
        raise ParseError(f"unexpected {got}", pos, expected)

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok[0] != "EOF":
            self.fail("+", "-", "*", "/", "end of input")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.tok[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.tok[0] in ("*", "/"):
            op = self.advance()[0]
            rhs = self.unary()
            e = Mul(e, rhs) if op == "*" else Div(e, rhs)
        return e

    def unary(self) -> Expr:
        if self.tok[0] == "-":
            self.advance()
            return Neg(self.factor())
        return self.factor()

    def factor(self) -> Expr:
        base = self.base()
        if self.tok[0] == "^":
            self.advance()
            sign = 1
            if self.tok[0] == "-":
                self.advance()
                sign = -1
            base = Pow(base, sign * int(self.expect("INT")[1]))
        return base

    def base(self) -> Expr:
        kind, text, pos = self.tok
        if kind == "INT":
            self.advance()
            return IntConst(int(text))
        if kind == "q":
            self.advance()
            return Q()
        if kind == "ETA":
            self.advance()
            m = int(text)
            if m < 1:
                raise ParseError("eta scale must be positive", pos)
            return Eta(m)
        if kind == "alpha":
            self.advance()
            self.expect("(")
            self.expect("q")
            k = 1
            if self.tok[0] == "^":
                self.advance()
                k = int(self.expect("INT")[1])
                if k < 1:
                    raise ParseError("alpha scale must be positive", pos)
            self.expect(")")
            return Alpha(k)
        if kind == "dissect":
            self.advance()
            self.expect("(")
            inner = self.expr()
            self.expect(",")
            m = int(self.expect("INT")[1])
            self.expect(",")
            r_pos = self.tok[2]
            r = int(self.expect("INT")[1])
            self.expect(")")
            if m < 1 or r >= m:
                raise ParseError(f"dissect residue {r} not below modulus {m}", r_pos)
            return Dissect(inner, m, r)
        if kind == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        self.fail("INT", "q", "f<m>", "alpha(q^k)", "dissect(", "(")


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


# printing -------------------------------------------------------------------

# binding levels: 1 sum, 2 product, 3 unary minus, 4 power, 5 atom


def pretty(e: Expr) -> str:
    return _pp(e, 1)


def _wrap(s: str, level: int, ctx: int) -> str:
    return f"({s})" if ctx > level else s


def _pp(e: Expr, ctx: int) -> str:
    if isinstance(e, IntConst):
        return str(e.value) if e.value >= 0 else f"({e.value})"
    if isinstance(e, Q):
        return "q"
    if isinstance(e, Eta):
        return f"f{e.m}"
    if isinstance(e, Alpha):
        return "alpha(q)" if e.k == 1 else f"alpha(q^{e.k})"
    if isinstance(e, Dissect):
        return f"dissect({_pp(e.inner, 1)}, {e.m}, {e.r})"
    if isinstance(e, (Add, Sub)):
        op = " + " if isinstance(e, Add) else " - "
        return _wrap(_pp(e.left, 1) + op + _pp(e.right, 2), 1, ctx)
    if isinstance(e, (Mul, Div)):
        a, b = (e.left, e.right) if isinstance(e, Mul) else (e.num, e.den)
        op = "*" if isinstance(e, Mul) else "/"
        return _wrap(_pp(a, 2) + op + _pp(b, 3), 2, ctx)
    if isinstance(e, Neg):
        return _wrap("-" + _pp(e.operand, 4), 3, ctx)
    if isinstance(e, Pow):
        return _wrap(f"{_pp(e.base, 5)}^{e.exp}", 4, ctx)
    raise TypeError(f"not an expression: {e!r}")


# evaluation -----------------------------------------------------------------


class _Product:
    """A flattened monomial: scalar * q^qpow * prod f_m^e * prod other^e."""

    def __init__(self):
        self.num = 1
        self.den = 1
        self.qpow = 0
        self.etas: Counter[int] = Counter()
        self.others: Counter = Counter()

    def collect(self, e: Expr, k: int) -> None:
        if isinstance(e, IntConst):
            if k > 0:
                self.num *= e.value**k
            else:
                self.den *= e.value ** (-k)
        elif isinstance(e, Q):
            self.qpow += k
        elif isinstance(e, Eta):
            self.etas[e.m] += k
        elif isinstance(e, Mul):
            self.collect(e.left, k)
            self.collect(e.right, k)
        elif isinstance(e, Div):
            self.collect(e.num, k)
            self.collect(e.den, -k)
        elif isinstance(e, Pow):
            self.collect(e.base, k * e.exp)
        elif isinstance(e, Neg):
            if k % 2:
                self.num = -self.num
            self.collect(e.operand, k)
        else:
            self.others[e] += k


class _Cache:
    """Small LRU of large inner expansions, reused at any lower order."""

    def __init__(self, size: int = 16):
        self.size = size
        self.data: OrderedDict = OrderedDict()
        self.lock = threading.Lock()

    def get(self, key, order: int) -> Series | None:
        with self.lock:
            s = self.data.get(key)
            if s is None or s.order < order:
                return None
            self.data.move_to_end(key)
        return s.truncate(order)

    def put(self, key, s: Series) -> None:
        with self.lock:
            old = self.data.get(key)
            if old is None or old.order < s.order:
                self.data[key] = s
            self.data.move_to_end(key)
            while len(self.data) > self.size:
                self.data.popitem(last=False)

    def clear(self) -> None:
        with self.lock:
            self.data.clear()


_dissect_cache = _Cache()


def evaluate(e: Expr | str, ring: Ring = EXACT, order: int = 500) -> Series:
    """Expand ``e`` over ``ring``; the result is exact through ``order``."""
    if isinstance(e, str):
        e = parse_expr(e)
    if order < 0:
        raise SeriesError("order must be nonnegative")
    return _eval(e, ring, order)


def _eval(e: Expr, ring: Ring, n: int) -> Series:
    if isinstance(e, IntConst):
        return construct(ring, n, [(0, e.value)])
    if isinstance(e, Q):
        return monomial(1, n, ring)
    if isinstance(e, Eta):
        return eta(e.m, n, ring)
    if isinstance(e, Alpha):
        return alpha(e.k, n, ring)
    if isinstance(e, Neg) and not isinstance(e.operand, (Mul, Div, Pow)):
        return neg(_eval(e.operand, ring, n))
    if isinstance(e, Add):
        return add(_eval(e.left, ring, n), _eval(e.right, ring, n))
    if isinstance(e, Sub):
        return sub(_eval(e.left, ring, n), _eval(e.right, ring, n))
    if isinstance(e, Dissect):
        inner_order = e.m * n + e.r
        key = (e.inner, ring)
        inner = _dissect_cache.get(key, inner_order)
        if inner is None:
            inner = _eval(e.inner, ring, inner_order)
            _dissect_cache.put(key, inner)
        return dissect(inner, e.m, e.r)
    if isinstance(e, (Mul, Div, Pow, Neg)):
        prod = _Product()
        prod.collect(e, 1)
        return _eval_product(prod, ring, n)
    raise TypeError(f"not an expression: {e!r}")


def _eval_product(p: _Product, ring: Ring, n: int) -> Series:
    scalar = p.num
    if p.den != 1:
        scalar *= ring.inv(ring.reduce(p.den))
    pos_q, neg_q = max(p.qpow, 0), max(-p.qpow, 0)
    # the denominator's valuation is not known until it is expanded, so widen
    # the working order until the quotient reaches n
    work = n + neg_q
    while True:
        num = eta_quotient(EtaQuotient(scalar, pos_q, dict(p.etas)), work, ring)
        den = monomial(neg_q, work, ring)
        has_den = neg_q > 0
        for other, k in p.others.items():
            s = _eval(other, ring, work)
            if k > 0:
                num = mul(num, power(s, k))
            else:
                den = mul(den, power(s, -k)) if has_den else power(s, -k)
                has_den = True
        if not has_den:
            return num.truncate(n)
        out = divide(num, den)
        if out.order >= n:
            return out.truncate(n)
        work += n - out.order
