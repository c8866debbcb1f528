import pytest

from qdissect.eta import EtaQuotient, alpha, eta, eta_quotient, pentagonal_terms
from qdissect.series import EXACT, Ring, SeriesError, add, power, reduce_mod, sub, substitute, zero
from qdissect.dsl import evaluate
from qdissect.oracle import count_table

from conftest import brute_theta, finite_product_eta

MOD3 = Ring(3)


def test_eta_1_15():
    # frozen from finite_product_eta(1, 15)
    assert eta(1, 15).coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1)


def test_eta_2_5():
    assert eta(2, 5).coeffs == (1, 0, -1, 0, -1, 0)


@pytest.mark.parametrize("m", range(1, 13))
@pytest.mark.parametrize("order", [0, 1, 17, 120, 300])
def test_eta_matches_finite_product(m, order):
    assert eta(m, order) == finite_product_eta(m, order)


@pytest.mark.parametrize("m", [1, 4, 7])
def test_eta_is_substituted_f1(m):
    n = 200
    assert eta(m, n) == substitute(eta(1, n // m), m).truncate(n)


def test_eta_coefficients_in_unit_set():
    assert set(eta(1, 2000).coeffs) <= {-1, 0, 1}


def test_pentagonal_terms_sorted():
    exps = [e for e, _ in pentagonal_terms(500)]
    assert exps == sorted(exps)
    assert exps[:8] == [0, 1, 2, 5, 7, 12, 15, 22]


def test_eta_rejects_bad_scale():
    with pytest.raises(SeriesError):
        eta(0, 5)


@pytest.mark.parametrize("k", range(1, 13))
def test_frobenius_mod3(k):
    n = 300
    assert power(eta(k, n, MOD3), 3) == eta(3 * k, n, MOD3)
    assert reduce_mod(sub(power(eta(k, n), 3), eta(3 * k, n)), 3) == zero(n, MOD3)


@pytest.mark.parametrize("k", range(1, 7))
def test_frobenius_mod5(k):
    n = 300
    r5 = Ring(5)
    assert power(eta(k, n, r5), 5) == eta(5 * k, n, r5)


class TestEtaQuotient:
    def test_b_series(self):
        spec = EtaQuotient(1, 0, {2: 2, 1: -1, 4: -3})
        assert eta_quotient(spec, 6).coeffs == tuple(count_table("linb", 6))

    def test_p5n4(self):
        spec = EtaQuotient(5, 0, {5: 5, 1: -6})
        p = count_table("partitions", 14)
        assert eta_quotient(spec, 2).coeffs == (5, 30, 135) == (p[4], p[9], p[14])

    def test_empty_product(self):
        assert eta_quotient(EtaQuotient(1, 0, {}), 4).coeffs == (1, 0, 0, 0, 0)

    def test_shift_and_scalar(self):
        spec = EtaQuotient(3, 1, {2: 6, 12: 6, 1: -3, 4: -11})
        s = eta_quotient(spec, 10)
        assert s.coeffs[:2] == (0, 3)

    def test_zero_exponents_dropped(self):
        assert EtaQuotient(1, 0, {1: 0, 2: 1}).exponents == {2: 1}

    def test_str(self):
        assert str(EtaQuotient(1, 0, {2: 2, 1: -1, 4: -3})) == "f2^2/(f1*f4^3)"

    def test_shift_beyond_order(self):
        assert eta_quotient(EtaQuotient(1, 5, {1: 1}), 3) == zero(3)


class TestAlpha:
    def test_first_terms(self):
        # frozen from brute_theta(7)
        assert alpha(1, 7).coeffs == (1, 6, 0, 6, 6, 0, 0, 12)

    def test_matches_brute_force(self):
        assert list(alpha(1, 60).coeffs) == brute_theta(60)

    def test_mod3_is_one(self):
        assert alpha(1, 400, MOD3).coeffs == (1,) + (0,) * 400

    def test_substituted_support(self):
        s = alpha(4, 200)
        assert all(c == 0 for i, c in enumerate(s.coeffs) if i % 4)

    def test_divisible_by_six(self):
        assert all(c % 6 == 0 for c in alpha(1, 500).coeffs[1:])

    def test_eta_quotient_form(self):
        n = 500
        rhs = evaluate("f2^6*f3/(f1^3*f6^2) + 3*q*f6^6*f1/(f3^3*f2^2)", EXACT, n)
        assert alpha(1, n) == rhs

    def test_alpha_q4(self):
        n = 500
        rhs = evaluate("alpha(q) - 6*q*f4^2*f12^2/(f2*f6)", EXACT, n)
        assert alpha(4, n) == rhs
