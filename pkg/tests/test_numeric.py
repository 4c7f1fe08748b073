from fractions import Fraction
from math import factorial

import mpmath
import pytest

from qpowersums.errors import DomainError, TruncationNotConverged
from qpowersums.field import eval_at
from qpowersums.numeric import (
    NumericParams,
    barnes_f2,
    barnes_limit_diagnostic,
    context,
    f_star_numeric,
    gauss_legendre,
    mellin_quadrature,
    zeta_star_series,
)
from qpowersums.sums import thm3_lhs

P = NumericParams()


def test_params_validation():
    with pytest.raises(DomainError):
        NumericParams(q=Fraction(1, 2))
    with pytest.raises(DomainError):
        NumericParams(q=1)
    with pytest.raises(DomainError):
        NumericParams(precision=32)


def test_f_star_reproducible_and_domain():
    a = f_star_numeric(-1, 1, P)
    b = f_star_numeric(-1, 1, NumericParams())
    assert mpmath.isfinite(a) and abs(a - b) < mpmath.mpf(10) ** -25
    with pytest.raises(DomainError):
        f_star_numeric(0, 1, P)


def test_series_domain():
    with pytest.raises(DomainError):
        zeta_star_series(2, 1, P)
    with pytest.raises(DomainError):
        mellin_quadrature(2, 1, P)


def test_truncation_budget():
    with pytest.raises(TruncationNotConverged):
        zeta_star_series(3, 1, NumericParams(q=Fraction(11, 10), max_terms=5))


def test_gauss_legendre_is_exact_on_polynomials():
    ctx = context(256)
    nodes, weights = gauss_legendre(32, 256)
    assert abs(sum(weights) - 2) < ctx.mpf(10) ** -70
    # degree 62 is integrated exactly: int_{-1}^{1} x^62 = 2/63
    got = sum(w * x**62 for x, w in zip(nodes, weights))
    assert abs(got - ctx.mpf(2) / 63) < ctx.mpf(10) ** -70


def test_precision_contexts_are_private():
    before = mpmath.mp.prec
    context(300)
    assert mpmath.mp.prec == before


def test_barnes_f2():
    with mpmath.workdps(60):
        e = mpmath.e ** -1
        assert abs(barnes_f2(-1) - (-e / (1 - e) ** 2)) < mpmath.mpf(10) ** -30
    assert abs(barnes_f2(-1) + mpmath.mpf("0.9206735942077923")) < 1e-15
    with pytest.raises(DomainError):
        barnes_f2(0)


def test_barnes_diagnostic():
    gaps = barnes_limit_diagnostic(-1, 1, [2, Fraction(3, 2), Fraction(5, 4)])
    assert len(gaps) == 3 and all(mpmath.isfinite(g.gap) for g in gaps)
    assert barnes_limit_diagnostic(-1, 1, []) == []
    with pytest.raises(DomainError):
        barnes_limit_diagnostic(-1, 1, [1])


@pytest.mark.parametrize("k", [1, 2, 3])
def test_shift_difference_matches_plus_n_thm3(k):
    # F*(t;k) - F*(t) = sum_n n * thm3_lhs(n, k) t^n / n!, checked at q = 9/4
    p = NumericParams(q=Fraction(9, 4))
    ctx = p.ctx
    t = Fraction(-1, 2)
    lhs = f_star_numeric(t, k, p, "polynomials") - f_star_numeric(t, k, p, "numbers")
    rhs = sum(n * eval_at(thm3_lhs(n, k), Fraction(3, 2)) * t**n / factorial(n) for n in range(1, 120))
    assert abs(lhs - p.mpf(rhs)) < ctx.mpf(10) ** -25 * (1 + abs(lhs))


def test_numbers_zeta_first_term():
    # n = 0 contributes nothing; the sum starts at [1]_{q^2} q^{(k-1)(2-s)/2}
    p = NumericParams(q=Fraction(3, 2))
    full = zeta_star_series(3, 1, p)
    assert full > 1


def test_mellin_matches_series_small_q():
    p = NumericParams(q=Fraction(3, 2))
    quad = mellin_quadrature(3, 1, p)
    series = zeta_star_series(3, 1, p)
    assert abs(quad / series - 1) < 1e-8
