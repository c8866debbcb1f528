"""Exit criteria for the package; each test records one PASS/FAIL line."""

import io
import time

import hypothesis.strategies as st
from hypothesis import given, settings

from qdissect.congruences import verify_eq_110, verify_family_19
from qdissect.dsl import evaluate
from qdissect.eta import EtaQuotient, eta, eta_quotient
from qdissect.identities import B, lookup, registry, verify_identity
from qdissect.oracle import Family, count_table, oracle_series
from qdissect.series import (
    EXACT, Ring, add, dissect, equal_upto, inverse, mul, one, power, reduce_mod, shift, substitute, zero,
)
from qdissect.cli import run

from conftest import ACCEPTANCE, series
from test_oracle import GENERATING_FUNCTIONS


class Criterion:
    def __init__(self, number, title):
        self.number, self.title = number, title
        self.t0 = time.perf_counter()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        secs = time.perf_counter() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        ACCEPTANCE.append(f"[{status}] {self.number}. {self.title} ({secs:.2f}s)")
        return False


EXACT_IDS = [e.id for e in registry() if e.modulus is None]
MOD3_IDS = [e.id for e in registry() if e.modulus == 3]


def test_1_exact_identities_order_500():
    with Criterion(1, f"{len(EXACT_IDS)} exact identities at order 500, < 30 s"):
        t0 = time.perf_counter()
        failed = [r.id for r in (verify_identity(i, 500) for i in EXACT_IDS) if not r.passed]
        elapsed = time.perf_counter() - t0
        assert failed == []
        assert len(EXACT_IDS) == 20
        assert elapsed < 30


def test_2_congruence_chain_order_1000():
    with Criterion(2, f"{len(MOD3_IDS)} mod-3 congruence entries at order 1000, < 10 s"):
        t0 = time.perf_counter()
        failed = [r.id for r in (verify_identity(i, 1000) for i in MOD3_IDS) if not r.passed]
        elapsed = time.perf_counter() - t0
        assert failed == []
        assert set(MOD3_IDS) == {
            "eq1.7", "quickproof", "eq3.6", "eq3.7/3.8", "eq3.9", "eq3.10", "eq3.11", "eq3.12", "alpha-mod3"
        }
        assert elapsed < 10


def test_3_b_dissections_match_oracle():
    with Criterion(3, "b(3n+1), b(3n+2) dissections match the DP oracle for n <= 60"):
        b = count_table(Family.LINB, 3 * 60 + 2)
        for r in (1, 2):
            s = evaluate(f"dissect({B}, 3, {r})", EXACT, 60)
            assert list(s.coeffs) == b[r::3][:61]
        rhs15 = evaluate(lookup("eq1.5").rhs, EXACT, 60)
        assert list(rhs15.coeffs) == b[2::3][:61]
        rhs16 = evaluate(lookup("eq1.6").rhs, EXACT, 60)
        assert list(rhs16.coeffs) == b[1::3][:61]
        assert rhs15[1] == 3 == b[5]


def test_4_internal_congruence_families():
    with Criterion(4, "internal families k=0,1,2 and b(81n+24) = -b(9n+3), < 20 s"):
        t0 = time.perf_counter()
        reports = [
            verify_family_19(0, 30),
            verify_family_19(1, 30),
            verify_family_19(2, 3),
            verify_eq_110(30),
        ]
        elapsed = time.perf_counter() - t0
        assert all(r.passed for r in reports)
        assert max(r.order for r in reports) <= 2650
        assert elapsed < 20


def test_5_oracle_generating_functions():
    with Criterion(5, "eight partition families equal their generating functions for n <= 200"):
        for family, text in GENERATING_FUNCTIONS.items():
            assert oracle_series(family, 200) == evaluate(text, EXACT, 200), family
        assert len(GENERATING_FUNCTIONS) == 8


def test_6_property_suites():
    with Criterion(6, "round-trip, inverse, Frobenius and ring-naturality properties"):
        _dissection_round_trip()
        _inverse_contract()
        n = 300
        for k in range(1, 13):
            assert power(eta(k, n, Ring(3)), 3) == eta(3 * k, n, Ring(3))
        for entry in registry():
            for e in (entry.lhs, entry.rhs, *entry.chain):
                assert reduce_mod(evaluate(e, EXACT, 80), 3) == evaluate(e, Ring(3), 80)


@settings(max_examples=200, deadline=None)
@given(series(min_order=6, max_order=120), st.integers(1, 7))
def _dissection_round_trip(s, m):
    acc = zero(s.order)
    for r in range(m):
        acc = add(acc, shift(substitute(dissect(s, m, r), m), r))
    assert equal_upto(acc, s, s.order - (m - 1))


@settings(max_examples=200, deadline=None)
@given(series(max_order=120, unit_constant=True))
def _inverse_contract(s):
    assert mul(s, inverse(s)) == one(s.order)


def test_7_mutation_sensitivity():
    with Criterion(7, "corrupted eq1.5 fixture fails with a mismatch exponent; CLI exits 1"):
        r = verify_identity("eq1.5-broken", 200)
        assert r.status == "fail" and r.first_mismatch is not None
        assert r.first_mismatch.n == 5
        assert run(["verify", "--id", "eq1.5-broken", "--order", "200"], out=io.StringIO()) == 1


def test_8_known_values():
    with Criterion(8, "p(4), p(9), p(14) from 5 f5^5/f1^6; b(0..6) from engine and oracle"):
        s = eta_quotient(EtaQuotient(5, 0, {5: 5, 1: -6}), 2)
        assert s.coeffs == (5, 30, 135)
        p = count_table(Family.PARTITIONS, 14)
        assert (p[4], p[9], p[14]) == (5, 30, 135)
        expected = [1, 1, 0, 1, 3, 3, 1]
        assert list(evaluate(B, EXACT, 6).coeffs) == expected
        assert count_table(Family.LINB, 6) == expected
