from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qpowersums.errors import MalformedExponent
from qpowersums.field import Poly, RatFunc, limit_at_v1
from qpowersums.qobjects import QExp, q_binomial, q_bracket, q_factorial, q_power

v = Poly([0, 1])


def test_q_power():
    assert q_power(Fraction(3, 2)) == RatFunc(v**3)
    assert q_power(-1) == RatFunc(1, v**2)
    assert q_power(0) == 1
    assert q_power("5/2") == RatFunc(v**5)


def test_malformed_exponent():
    with pytest.raises(MalformedExponent):
        QExp.of(Fraction(1, 3))
    with pytest.raises(MalformedExponent):
        QExp.of("x")


def test_q_bracket():
    assert q_bracket(0) == 0
    assert q_bracket(2) == RatFunc(v**2 + 1)
    assert q_bracket(Fraction(3, 2)) == RatFunc(v**3 - 1, v**2 - 1)
    assert q_bracket(2, 2) == RatFunc(v**4 + 1)


def test_q_binomial():
    assert q_binomial(2, 1) == RatFunc(1 + v**2)
    assert q_binomial(4, 2) == RatFunc(Poly([1, 0, 1, 0, 2, 0, 1, 0, 1]))
    assert q_binomial(3, 5) == 0
    assert q_binomial(3, -1) == 0


def test_q_factorial():
    assert q_factorial(0) == 1
    assert q_factorial(2) == RatFunc(1 + v**2)
    assert q_factorial(3) == RatFunc((1 + v**2) * (1 + v**2 + v**4))


@given(st.integers(0, 12), st.integers(0, 12))
def test_binomial_symmetry_and_limit(n, k):
    assert q_binomial(n, k) == q_binomial(n, n - k)
    expected = 0 if k > n else __import__("math").comb(n, k)
    assert limit_at_v1(q_binomial(n, k)) == expected


@given(st.integers(1, 10), st.integers(1, 9))
def test_pascal(n, k):
    # q-Pascal: C(n,k) = C(n-1,k-1) + q^k C(n-1,k)
    assert q_binomial(n, k) == q_binomial(n - 1, k - 1) + q_power(k) * q_binomial(n - 1, k)


@given(st.integers(-10, 10).map(lambda t: Fraction(t, 2)), st.integers(1, 3))
def test_bracket_limit(e, base):
    assert limit_at_v1(q_bracket(e, base)) == e


@given(st.integers(0, 10), st.integers(0, 10))
def test_bracket_additivity(a, b):
    assert q_bracket(a + b) == q_bracket(a) + q_power(a) * q_bracket(b)
