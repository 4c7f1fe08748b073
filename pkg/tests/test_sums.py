import pytest

from qpowersums.closed import kim_rhs, schlosser_rhs, warnaar_rhs
from qpowersums.errors import UnsupportedM
from qpowersums.field import Poly, RatFunc, limit_at_v1
from qpowersums.qobjects import q_binomial, q_power
from qpowersums.sums import garrett_hummel_lhs, kim_sum, schlosser_sum, thm3_lhs, warnaar_lhs

v = Poly([0, 1])
one_q_q2 = RatFunc(1 + v**2 + v**4)


def test_schlosser_examples():
    assert schlosser_sum(1, 1) == 1
    assert schlosser_sum(3, 2) == one_q_q2**2
    assert schlosser_sum(3, 2) == q_binomial(3, 2) ** 2
    assert limit_at_v1(schlosser_sum(2, 3)) == 14


def test_warnaar_examples():
    assert warnaar_lhs(1) == 1
    assert warnaar_lhs(2) == RatFunc(Poly([1, 0, 2, 0, 3, 0, 2, 0, 1]))
    assert warnaar_lhs(2) == one_q_q2**2
    assert limit_at_v1(warnaar_lhs(3)) == 36


def test_garrett_hummel_examples():
    assert garrett_hummel_lhs(0) == 0
    assert garrett_hummel_lhs(1) == 1
    assert garrett_hummel_lhs(2) == one_q_q2**2


def test_kim_examples():
    assert kim_sum(1, "linear") == 0
    assert kim_sum(2, "linear") == q_power(1)
    assert kim_sum(1, "square") == 0
    assert kim_rhs(2, "linear") == q_power(1)


def test_thm3_lhs_examples():
    assert thm3_lhs(2, 2) == RatFunc(v**3)
    assert all(thm3_lhs(n, 1) == 0 and thm3_lhs(n, 0) == 0 for n in range(1, 6))


def test_rhs_examples():
    assert warnaar_rhs(1) == 1
    assert schlosser_rhs(2, 1) == 1
    with pytest.raises(UnsupportedM):
        schlosser_rhs(1, 3)
    with pytest.raises(UnsupportedM):
        schlosser_rhs(6, 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_identities_small(n):
    assert warnaar_lhs(n) == warnaar_rhs(n)
    assert garrett_hummel_lhs(n) == warnaar_rhs(n)
    for m in (2, 3, 4, 5):
        assert schlosser_sum(m, n) == schlosser_rhs(m, n)
    for variant in ("linear", "square"):
        assert kim_sum(n, variant) == kim_rhs(n, variant)


def test_bad_arguments():
    with pytest.raises(ValueError):
        kim_sum(3, "cubic")
    with pytest.raises(ValueError):
        schlosser_sum(0, 2)
