"""Term-by-term evaluation of the finite q-sums.

Nothing here uses a closed form; these are the brute-force sides that the
closed forms in :mod:`qpowersums.closed` are checked against.
"""

from __future__ import annotations

from fractions import Fraction

from .field import RatFunc
from .qobjects import q_bracket, q_power

__all__ = ["schlosser_sum", "warnaar_lhs", "garrett_hummel_lhs", "kim_sum", "thm3_lhs"]


def schlosser_sum(m: int, n: int) -> RatFunc:
    """sum_{k=1}^{n} [k]_{q^2} [k]_q^(m-1) q^((n-k)(m+1)/2)."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    out = RatFunc(0)
    for k in range(1, n + 1):
        out = out + q_bracket(k, 2) * q_bracket(k) ** (m - 1) * q_power(Fraction((n - k) * (m + 1), 2))
    return out


def warnaar_lhs(n: int) -> RatFunc:
    if n < 0:
        raise ValueError("n must be >= 0")
    one = RatFunc(1)
    out = RatFunc(0)
    for k in range(1, n + 1):
        num = (one - q_power(k)) ** 2 * (one - q_power(2 * k))
        den = (one - q_power(1)) ** 2 * (one - q_power(2))
        out = out + q_power(2 * n - 2 * k) * num / den
    return out


def garrett_hummel_lhs(n: int) -> RatFunc:
    if n < 0:
        raise ValueError("n must be >= 0")
    one = RatFunc(1)
    out = RatFunc(0)
    for k in range(1, n + 1):
        sq = ((one - q_power(k)) / (one - q_power(1))) ** 2
        tail = (one - q_power(k - 1)) / (one - q_power(2)) + (one - q_power(k + 1)) / (one - q_power(2))
        out = out + q_power(k - 1) * sq * tail
    return out


def kim_sum(n: int, variant: str) -> RatFunc:
    """linear: sum_{k<n} q^k [k]_q;  square: sum_{k<n} q^(k+1) [k]_q^2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = RatFunc(0)
    for k in range(n):
        if variant == "linear":
            out = out + q_power(k) * q_bracket(k)
        elif variant == "square":
            out = out + q_power(k + 1) * q_bracket(k) ** 2
        else:
            raise ValueError(f"unknown variant {variant!r}")
    return out


def thm3_lhs(n: int, k: int) -> RatFunc:
    """sum_{j=0}^{k-1} [j]_{q^2} [j]_q^(n-1) q^((n+1)(k-j)/2)."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    out = RatFunc(0)
    for j in range(1, k):  # j = 0 vanishes
        out = out + q_bracket(j, 2) * q_bracket(j) ** (n - 1) * q_power(Fraction((n + 1) * (k - j), 2))
    return out
