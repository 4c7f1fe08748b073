"""q-powers, q-brackets, q-factorials and Gaussian binomials in Q(v), v^2 = q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import MalformedExponent
from .field import Poly, RatFunc

__all__ = ["QExp", "q_power", "q_bracket", "q_binomial", "q_factorial"]


@dataclass(frozen=True, order=True)
class QExp:
    """Exponent e of q, stored doubled so that q^e = v^twice_value."""

    twice_value: int

    @classmethod
    def of(cls, e: Union["QExp", int, Fraction, str]) -> "QExp":
        if isinstance(e, QExp):
            return e
        try:
            e = Fraction(e)
        except (ValueError, TypeError, ZeroDivisionError):
            raise MalformedExponent(f"cannot read {e!r} as a q-exponent") from None
        if e.denominator not in (1, 2):
            raise MalformedExponent(f"q-exponent {e} is not a half-integer")
        return cls(int(2 * e))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __add__(self, other: "QExp") -> "QExp":
        return QExp(self.twice_value + QExp.of(other).twice_value)

    def __str__(self) -> str:
        return str(self.value)


ExpLike = Union[QExp, int, Fraction, str]


def q_power(e: ExpLike) -> RatFunc:
    return RatFunc.monomial(QExp.of(e).twice_value)


def _v_minus_one(t: int) -> RatFunc:
    """v^t - 1 for any integer t."""
    if t >= 0:
        return RatFunc(Poly.monomial(t) - 1)
    return RatFunc(1 - Poly.monomial(-t), Poly.monomial(-t))


@lru_cache(maxsize=4096)
def _bracket(twice: int, base: int) -> RatFunc:
    return _v_minus_one(base * twice) / _v_minus_one(2 * base)


def q_bracket(e: ExpLike, base: int = 1) -> RatFunc:
    """[e]_{q^base} = (q^(base*e) - 1)/(q^base - 1) for half-integer e."""
    if base < 1:
        raise ValueError("base must be a positive integer")
    return _bracket(QExp.of(e).twice_value, base)


@lru_cache(maxsize=1024)
def q_binomial(n: int, k: int) -> RatFunc:
    """Gaussian binomial via the product of (1 - q^(n+1-j))/(1 - q^j), j = 1..k."""
    if k < 0 or k > n:
        return RatFunc(0)
    num = Poly.const(1)
    den = Poly.const(1)
    for j in range(1, k + 1):
        num = num * (1 - Poly.monomial(2 * (n + 1 - j)))
        den = den * (1 - Poly.monomial(2 * j))
    return RatFunc(num, den)


def q_factorial(n: int) -> RatFunc:
    if n < 0:
        raise ValueError("n must be >= 0")
    out = RatFunc(1)
    for j in range(1, n + 1):
        out = out * q_bracket(j)
    return out
