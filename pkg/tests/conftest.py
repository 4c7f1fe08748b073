import sympy
from hypothesis import settings

from qpowersums.field import Poly, RatFunc

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

V = sympy.Symbol("v")


def to_sympy(f):
    """Independent view of a Poly/RatFunc as a sympy expression in v."""
    if isinstance(f, Poly):
        return sum(sympy.Rational(c.numerator, c.denominator) * V**e for e, c in f.coefficients.items())
    return to_sympy(f.num) / to_sympy(f.den)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
