import hypothesis.strategies as st
import pytest
from hypothesis import settings

from qdissect.series import EXACT, Ring, Series, construct, mul, one
from qdissect.dsl import _dissect_cache

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def finite_product_eta(m, order, ring=EXACT):
    """prod_{n: mn <= order} (1 - q^{mn}) by repeated binomial multiplication."""
    acc = one(order, ring)
    for j in range(m, order + 1, m):
        acc = mul(acc, construct(ring, order, [(0, 1), (j, -1)]))
    return acc


def brute_theta(limit):
    """r(n) for n <= limit by scanning a generous square of lattice points."""
    counts = [0] * (limit + 1)
    span = limit + 1
    for u in range(-span, span + 1):
        for v in range(-span, span + 1):
            n = u * u + u * v + v * v
            if n <= limit:
                counts[n] += 1
    return counts


@st.composite
def series(draw, ring=EXACT, min_order=0, max_order=40, unit_constant=False, lo=-50, hi=50):
    order = draw(st.integers(min_order, max_order))
    coeffs = draw(st.lists(st.integers(lo, hi), min_size=order + 1, max_size=order + 1))
    if unit_constant:
        if ring.is_exact:
            coeffs[0] = draw(st.sampled_from([1, -1]))
        else:
            coeffs[0] = draw(st.sampled_from([c for c in range(1, ring.modulus) if ring.is_unit(c)]))
    return Series(ring, coeffs)


@pytest.fixture(autouse=True)
def _fresh_cache():
    _dissect_cache.clear()
    yield


# acceptance criteria record one line each; printed in the terminal summary
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
