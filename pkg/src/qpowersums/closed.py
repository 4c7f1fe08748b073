"""Closed forms for the q-Barnes-Bernoulli numbers and the classical q-sum identities.

Two routes to the numbers beta*_{n,k} and polynomials beta*_{n,k}(k):

* ``beta_star_paper`` / ``beta_star_poly_paper`` evaluate the published
  closed forms exactly as printed.
* ``beta_star_reference`` / ``beta_star_poly_reference`` expand the
  generating-function coefficients by the binomial theorem and replace
  every sum_{j>=0} q^(a j) with 1/(1 - q^a).

Exponents are handled in units of v = q^(1/2), so h2 below is 2 * (n-1)/2.

Both routes can meet a zero exponent, i.e. a factor 1 - q^0.  For odd n
this happens at m = (n-1)/2 and m = (n-1)/2 + 2.  The whole expression is
then rebuilt in Q(v, z) with (n-1)/2 replaced by (n-1)/2 + eps and
q^eps -> z wherever (n-1)/2 enters a q-exponent, reduced, and evaluated at
z = 1 (:func:`~qpowersums.field.subst_z1`).  Terms at m = 0 carry a factor
m and are dropped before any division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Optional, Tuple

from .errors import SingularAtZ1, SingularUnresolved, UnsupportedM
from .field import RatFunc, RatFunc2, subst_z1
from .qobjects import q_binomial, q_bracket, q_power

__all__ = [
    "RegularizedValue",
    "beta_star_paper",
    "beta_star_poly_paper",
    "beta_star_reference",
    "beta_star_poly_reference",
    "thm3_rhs",
    "warnaar_rhs",
    "schlosser_rhs",
    "kim_rhs",
]

REGULAR, REGULARIZED, SINGULAR = "regular", "regularized", "singular"


@dataclass(frozen=True)
class RegularizedValue:
    value: Optional[RatFunc]
    status: str
    singular_terms: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.status not in (REGULAR, REGULARIZED, SINGULAR):
            raise ValueError(f"bad status {self.status!r}")
        if (self.value is None) != (self.status == SINGULAR):
            raise ValueError("value must be absent exactly when status is singular")

    def require(self) -> RatFunc:
        if self.value is None:
            raise SingularUnresolved(f"singular terms at m = {list(self.singular_terms)}")
        return self.value

    def map(self, fn: Callable[[RatFunc], RatFunc]) -> "RegularizedValue":
        if self.value is None:
            return self
        return RegularizedValue(fn(self.value), self.status, self.singular_terms)


def combine(a: RegularizedValue, b: RegularizedValue,
            fn: Callable[[RatFunc, RatFunc], RatFunc]) -> RegularizedValue:
    terms = tuple(sorted(set(a.singular_terms) | set(b.singular_terms)))
    if SINGULAR in (a.status, b.status):
        return RegularizedValue(None, SINGULAR, terms)
    status = REGULARIZED if REGULARIZED in (a.status, b.status) else REGULAR
    return RegularizedValue(fn(a.value, b.value), status, terms)


def _one_minus(ve: int, ze: int = 0) -> RatFunc2:
    return 1 - RatFunc2.monomial(ve, ze)


def _one_minus_q(ve: int) -> RatFunc:
    return 1 - RatFunc.monomial(ve)


def _finish(prefactor: RatFunc, total, deformed: bool, zeros: Iterable[int],
            strict: bool) -> RegularizedValue:
    zeros = tuple(sorted(set(zeros)))
    status = REGULARIZED if zeros else REGULAR
    if deformed:
        try:
            total = subst_z1(total)
        except SingularAtZ1:
            if strict:
                raise SingularUnresolved(f"pole at z = 1 from m = {list(zeros)}") from None
            return RegularizedValue(None, SINGULAR, zeros)
    return RegularizedValue(prefactor * total, status, zeros)


def _check_nk(n: int, k: int) -> None:
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")


def beta_star_paper(n: int, k: int, strict: bool = False) -> RegularizedValue:
    """Closed form for beta*_{n,k,q} as printed, with regularized zero exponents."""
    _check_nk(n, k)
    h2 = n - 1
    d_lo = lambda m: 2 * m - h2 - 4  # noqa: E731
    d_hi = lambda m: 2 * m - h2  # noqa: E731
    zeros = [m for m in range(n + 1) if d_lo(m) == 0 or d_hi(m) == 0]
    deformed = any(m >= 1 for m in zeros)
    prefactor = (1 / _one_minus_q(2)) ** (n - 1)
    total = RatFunc2.from_ratfunc(RatFunc(0)) if deformed else RatFunc(0)
    for m in range(1, n + 1):
        c = comb(n, m) * (-1) ** m * m
        ve = h2 * (k - 1) + 2 * k + 2 * m - 4
        if deformed:
            term = RatFunc2.monomial(ve, k - 1, c) / (_one_minus(d_lo(m), -1) * _one_minus(d_hi(m), -1))
        else:
            term = RatFunc.monomial(ve, c) / (_one_minus_q(d_lo(m)) * _one_minus_q(d_hi(m)))
        total = total + term
    return _finish(prefactor, total, deformed, zeros, strict)


def beta_star_poly_paper(n: int, k: int, strict: bool = False) -> RegularizedValue:
    """Closed form for beta*_{n,k,q}(k) as printed, prefactor 1/([2]_q (1-q)^(n-2))."""
    _check_nk(n, k)
    h2 = n - 1
    d_lo = lambda m: 2 * m - h2 - 4  # noqa: E731
    d_hi = lambda m: 2 * m - h2  # noqa: E731
    zeros = [m for m in range(n + 1) if d_lo(m) == 0 or d_hi(m) == 0]
    deformed = any(m >= 1 for m in zeros)
    prefactor = 1 / (q_bracket(2) * _one_minus_q(2) ** (n - 2))
    total = RatFunc2.from_ratfunc(RatFunc(0)) if deformed else RatFunc(0)
    for m in range(1, n + 1):
        c = comb(n, m) * (-1) ** m * m
        if deformed:
            term = (RatFunc2.monomial(2 * k * (m - 1), 0, c) / _one_minus(d_lo(m), -1)
                    - RatFunc2.monomial(2 * k * (m + 1), 0, c) / _one_minus(d_hi(m), -1))
        else:
            term = (RatFunc.monomial(2 * k * (m - 1), c) / _one_minus_q(d_lo(m))
                    - RatFunc.monomial(2 * k * (m + 1), c) / _one_minus_q(d_hi(m)))
        total = total + term
    return _finish(prefactor, total, deformed, zeros, strict)


def _reference(n: int, k: int, shifted: bool, strict: bool) -> RegularizedValue:
    # -n * coefficient sum, expanded as
    #   [j]_{q^2} [j]^(n-1)  ->  sum_m C(n-1,m) (-1)^m (q^(mj) - q^((m+2)j)) / ((1-q^2)(1-q)^(n-1))
    # and each geometric sum over j continued to 1/(1 - q^a).
    h2 = n - 1
    a_lo = lambda m: 2 * m - 2 - h2  # noqa: E731
    a_hi = lambda m: 2 * m + 2 - h2  # noqa: E731
    zeros = [m for m in range(n) if a_lo(m) == 0 or a_hi(m) == 0]
    deformed = bool(zeros)
    prefactor = RatFunc(-n) / (_one_minus_q(4) * _one_minus_q(2) ** (n - 1))
    if not shifted:
        # q^(k - j) q^((n-1)(k-j)/2): the j-free part q^(k + (n-1)k/2)
        prefactor = prefactor * RatFunc.monomial(2 * k + h2 * k)
    total = RatFunc2.from_ratfunc(RatFunc(0)) if deformed else RatFunc(0)
    for m in range(n):
        c = comb(n - 1, m) * (-1) ** m
        c_lo = RatFunc.monomial(2 * m * k, c) if shifted else RatFunc(c)
        c_hi = RatFunc.monomial(2 * (m + 2) * k, c) if shifted else RatFunc(c)
        if deformed:
            zk = 1 if shifted else RatFunc2.monomial(0, k)
            term = zk * (c_lo / _one_minus(a_lo(m), -1) - c_hi / _one_minus(a_hi(m), -1))
        else:
            term = c_lo / _one_minus_q(a_lo(m)) - c_hi / _one_minus_q(a_hi(m))
        total = total + term
    return _finish(prefactor, total, deformed, zeros, strict)


def beta_star_reference(n: int, k: int, strict: bool = False) -> RegularizedValue:
    """Geometric-continuation value of -n sum_{j>=0} q^(k-j) [j]_{q^2} [j]^(n-1) q^((n-1)(k-j)/2)."""
    _check_nk(n, k)
    return _reference(n, k, shifted=False, strict=strict)


def beta_star_poly_reference(n: int, k: int, strict: bool = False) -> RegularizedValue:
    """Geometric-continuation value of -n sum_{j>=0} q^(-j) [j+k]_{q^2} [j+k]^(n-1) q^(-(n-1)j/2)."""
    _check_nk(n, k)
    return _reference(n, k, shifted=True, strict=strict)


def thm3_rhs(n: int, k: int, source: str = "paper", strict: bool = False) -> RegularizedValue:
    """(beta*(k) - beta*) / n from the chosen pair of closed forms."""
    _check_nk(n, k)
    if source == "paper":
        poly, num = beta_star_poly_paper(n, k, strict), beta_star_paper(n, k, strict)
    elif source == "reference":
        poly, num = beta_star_poly_reference(n, k, strict), beta_star_reference(n, k, strict)
    else:
        raise ValueError(f"unknown source {source!r}")
    return combine(poly, num, lambda a, b: (a - b) * Fraction(1, n))


def warnaar_rhs(n: int) -> RatFunc:
    return q_binomial(n + 1, 2) ** 2


def schlosser_rhs(m: int, n: int) -> RatFunc:
    """Displayed closed forms of the Schlosser sums for m = 2, 3, 4, 5."""
    one = RatFunc(1)
    om = lambda e: one - q_power(e)  # noqa: E731
    half = Fraction(1, 2)
    if m == 2:
        return (q_bracket(n) * q_bracket(n + 1) * q_bracket(n + half)
                / (q_bracket(1) * q_bracket(2) * q_bracket(Fraction(3, 2))))
    if m == 3:
        return q_binomial(n + 1, 2) ** 2
    if m == 4:
        head = om(n) * om(n + 1) * om(n + half) / (om(1) * om(2) * om(Fraction(5, 2)))
        tail = om(n) * om(n + 1) / om(1) ** 2 - q_power(n) * om(half) / om(Fraction(3, 2))
        return head * tail
    if m == 5:
        head = om(n) ** 2 * om(n + 1) ** 2 / (om(1) ** 2 * om(2) * om(3))
        tail = om(n) * om(n + 1) / om(1) ** 2 - q_power(n) * om(1) / om(2)
        return head * tail
    raise UnsupportedM(f"no displayed closed form for m = {m}")


def kim_rhs(n: int, variant: str) -> RatFunc:
    base = (q_bracket(n) ** 2 - q_bracket(2 * n) / q_bracket(2)) * Fraction(1, 2)
    if variant == "linear":
        return base
    if variant == "square":
        return (q_bracket(n) ** 3 * Fraction(1, 3) - base
                - q_bracket(3 * n) / q_bracket(3) * Fraction(1, 3))
    raise ValueError(f"unknown variant {variant!r}")
