"""High-precision numerics: truncated generating functions, q-zeta series,
Mellin quadrature, and the Barnes F2 comparison.

All floating-point work goes through a private mpmath context per
precision, so nothing here touches ``mpmath.mp``.  Every series needs
q > 1: the generating functions then decay super-exponentially for t < 0
and the zeta series geometrically for s > 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, List, Sequence, Tuple, Union

import mpmath

from .closed import (
    RegularizedValue,
    beta_star_paper,
    beta_star_reference,
)
from .errors import DomainError, QuadratureNotConverged, TruncationNotConverged

__all__ = [
    "NumericParams",
    "context",
    "f_star_numeric",
    "zeta_star_series",
    "mellin_quadrature",
    "barnes_f2",
    "BarnesGap",
    "barnes_limit_diagnostic",
    "zeta_special_value",
    "gauss_legendre",
]

BigFloat = mpmath.mpf
RealLike = Union[int, Fraction, str, "mpmath.mpf"]

GL_POINTS = 32
QUAD_REL_TOL = Fraction(1, 10**12)
TAIL_CUTOFF = Fraction(1, 10**40)
MAX_INTERVALS = 1 << 12
STOP_RUN = 3


@lru_cache(maxsize=None)
def context(precision: int) -> "mpmath.ctx_mp.MPContext":
    if precision < 64:
        raise DomainError("precision must be at least 64 bits")
    ctx = mpmath.MPContext()
    ctx.prec = precision
    return ctx


@dataclass(frozen=True)
class NumericParams:
    q: Fraction = Fraction(2)
    tol: Fraction = Fraction(1, 10**30)
    max_terms: int = 100_000
    precision: int = 256

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "tol", Fraction(str(self.tol)) if isinstance(self.tol, float) else Fraction(self.tol))
        if self.q <= 1:
            raise DomainError(f"q = {self.q}: the series diverge unless q > 1")
        if not 0 < self.tol < 1:
            raise DomainError("tol must lie in (0, 1)")
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")
        if self.precision < 64:
            raise DomainError("precision must be at least 64 bits")

    @property
    def ctx(self):
        return context(self.precision)

    def mpf(self, x: RealLike):
        ctx = self.ctx
        if isinstance(x, Fraction):
            return ctx.mpf(x.numerator) / x.denominator
        return ctx.mpf(x)


def _sum_until_small(term: Callable[[int], "mpmath.mpf"], p: NumericParams, start: int = 0):
    """Partial sum, stopped once STOP_RUN consecutive terms fall below tol * |sum|."""
    ctx = p.ctx
    tol = p.mpf(p.tol)
    total = ctx.mpf(0)
    run = 0
    for j in range(start, start + p.max_terms):
        t = term(j)
        total += t
        if abs(t) < tol * abs(total):
            run += 1
            if run >= STOP_RUN:
                return total
        else:
            run = 0
    raise TruncationNotConverged(f"no convergence within {p.max_terms} terms")


class _GenFun:
    """Weights w_j and rates c_j with F*(t) = -t sum_j w_j exp(t c_j).

    numbers:     w_j = q^(k-j) [j]_{q^2},  c_j = [j]_q q^((k-j)/2)
    polynomials: w_j = q^(-j) [j+k]_{q^2}, c_j = [j+k]_q q^(-j/2)

    Coefficients are cached per instance; instances are never shared.
    """

    def __init__(self, k: int, p: NumericParams, which: str):
        if which not in ("numbers", "polynomials"):
            raise ValueError(f"unknown generating function {which!r}")
        self.k, self.p, self.which = k, p, which
        ctx = p.ctx
        self.q = p.mpf(p.q)
        self.sq = ctx.sqrt(self.q)
        self._w: List = []
        self._c: List = []

    def _bracket(self, x: int, base: int = 1):
        qb = self.q**base
        return (qb**x - 1) / (qb - 1)

    def coeffs(self, j: int) -> Tuple:
        while len(self._w) <= j:
            i = len(self._w)
            if self.which == "numbers":
                w = self.q ** (self.k - i) * self._bracket(i, 2)
                c = self._bracket(i) * self.sq ** (self.k - i)
            else:
                w = self.q ** (-i) * self._bracket(i + self.k, 2)
                c = self._bracket(i + self.k) * self.sq ** (-i)
            self._w.append(w)
            self._c.append(c)
        return self._w[j], self._c[j]

    def __call__(self, t):
        exp = self.p.ctx.exp

        def term(j):
            w, c = self.coeffs(j)
            return w * exp(t * c) if w else w

        return -t * _sum_until_small(term, self.p)


def f_star_numeric(t: RealLike, k: int, p: NumericParams, which: str = "numbers"):
    """Truncated F*(t) (numbers) or F*(t; k) (polynomials) for t < 0."""
    t = p.mpf(t)
    if t >= 0:
        raise DomainError("the generating-function series needs t < 0")
    if k < 1:
        raise DomainError("k must be >= 1")
    return _GenFun(k, p, which)(t)


def zeta_star_series(s: int, k: int, p: NumericParams, which: str = "numbers",
                     variant: str = "derived"):
    """Truncated q-zeta series.

    numbers:     sum_n [n]_{q^2} q^((k-n)(2-s)/2) / [n]_q^s
    polynomials: sum_n [n+k]_{q^2} q^(e(n)) / [n+k]_q^s with
                 e(n) = -n(s+2)/2 (variant "paper") or n(s-2)/2 (variant "derived").
    ``variant`` is ignored for the numbers series.
    """
    if not isinstance(s, int) or s < 3:
        raise DomainError("s must be an integer >= 3")
    if k < 1:
        raise DomainError("k must be >= 1")
    if variant not in ("paper", "derived"):
        raise ValueError(f"unknown variant {variant!r}")
    q = p.mpf(p.q)
    sq = p.ctx.sqrt(q)
    br = lambda x, base=1: (q ** (base * x) - 1) / (q**base - 1)  # noqa: E731

    if which == "numbers":
        def term(n):
            if n == 0:
                return p.ctx.mpf(0)
            return br(n, 2) * sq ** ((k - n) * (2 - s)) / br(n) ** s
    elif which == "polynomials":
        twice = (lambda n: -n * (s + 2)) if variant == "paper" else (lambda n: n * (s - 2))

        def term(n):
            return br(n + k, 2) * sq ** twice(n) / br(n + k) ** s
    else:
        raise ValueError(f"unknown series {which!r}")
    return _sum_until_small(term, p)


@lru_cache(maxsize=None)
def gauss_legendre(npoints: int, precision: int) -> Tuple[Tuple, Tuple]:
    """Nodes and weights on [-1, 1] by Newton iteration on P_n."""
    ctx = context(precision)
    eps = ctx.mpf(2) ** (-precision + 8)
    nodes, weights = [], []
    for i in range(npoints):
        x = ctx.cos(ctx.pi * (i + ctx.mpf(3) / 4) / (npoints + ctx.mpf(1) / 2))
        for _ in range(100):
            p0, p1 = ctx.mpf(1), x
            for m in range(2, npoints + 1):
                p0, p1 = p1, ((2 * m - 1) * x * p1 - (m - 1) * p0) / m
            dp = npoints * (x * p1 - p0) / (x * x - 1)
            dx = p1 / dp
            x -= dx
            if abs(dx) < eps:
                break
        p0, p1 = ctx.mpf(1), x
        for m in range(2, npoints + 1):
            p0, p1 = p1, ((2 * m - 1) * x * p1 - (m - 1) * p0) / m
        dp = npoints * (x * p1 - p0) / (x * x - 1)
        nodes.append(x)
        weights.append(2 / ((1 - x * x) * dp * dp))
    return tuple(nodes), tuple(weights)


def _composite(g: Callable, T, n_intervals: int, nodes, weights):
    h = T / n_intervals
    half = h / 2
    total = 0
    for i in range(n_intervals):
        mid = h * i + half
        total += sum(w * g(mid + half * x) for x, w in zip(nodes, weights))
    return total * half


def _upper_limit(g: Callable, ctx):
    """Smallest grid point 2^(i/2) past the peak where |g| < TAIL_CUTOFF * peak."""
    cutoff = ctx.mpf(TAIL_CUTOFF.numerator) / TAIL_CUTOFF.denominator
    peak = ctx.mpf(0)
    peak_i = None
    for i in range(-20, 200):
        t = ctx.mpf(2) ** (ctx.mpf(i) / 2)
        val = abs(g(t))
        if val > peak:
            peak, peak_i = val, i
        elif peak_i is not None and val < cutoff * peak:
            return t
    raise QuadratureNotConverged("integrand tail did not fall below the cutoff")


def mellin_quadrature(s: int, k: int, p: NumericParams, which: str = "numbers"):
    """(1/Gamma(s)) int_0^inf t^(s-2) F*(-t) dt by composite 32-point Gauss-Legendre."""
    if not isinstance(s, int) or s < 3:
        raise DomainError("s must be an integer >= 3")
    if k < 1:
        raise DomainError("k must be >= 1")
    ctx = p.ctx
    fstar = _GenFun(k, p, which)

    def g(t):
        return t ** (s - 2) * fstar(-t)

    T = _upper_limit(g, ctx)
    nodes, weights = gauss_legendre(GL_POINTS, p.precision)
    rel = ctx.mpf(QUAD_REL_TOL.numerator) / QUAD_REL_TOL.denominator
    n = 4
    prev = _composite(g, T, n, nodes, weights)
    while n < MAX_INTERVALS:
        n *= 2
        cur = _composite(g, T, n, nodes, weights)
        if abs(cur - prev) < rel * abs(cur):
            return cur / factorial(s - 1)
        prev = cur
    raise QuadratureNotConverged(f"no agreement to {QUAD_REL_TOL} with {MAX_INTERVALS} intervals")


def barnes_f2(t: RealLike, precision: int = 256):
    """F2(t; -1; -1, -1) = t e^t / (1 - e^t)^2."""
    ctx = context(precision)
    t = ctx.mpf(t) if not isinstance(t, Fraction) else ctx.mpf(t.numerator) / t.denominator
    if t == 0:
        raise DomainError("F2 has a pole at t = 0")
    e = ctx.exp(t)
    return t * e / (1 - e) ** 2


@dataclass(frozen=True)
class BarnesGap:
    q: Fraction
    f_star: object
    target: object
    gap: object


def barnes_limit_diagnostic(t: RealLike, k: int, q_list: Sequence[Fraction],
                            precision: int = 256, tol: Fraction = Fraction(1, 10**30),
                            max_terms: int = 100_000) -> List[BarnesGap]:
    """|F*_{k,q}(t) + F2(t)| for each q; the sequence is recorded, not judged."""
    out = []
    for q in q_list:
        p = NumericParams(q=Fraction(q), tol=tol, max_terms=max_terms, precision=precision)
        t_mp = p.mpf(t)
        if t_mp >= 0:
            raise DomainError("the generating-function series needs t < 0")
        value = f_star_numeric(t_mp, k, p, "numbers")
        target = -barnes_f2(t_mp, precision)
        out.append(BarnesGap(Fraction(q), value, target, abs(value - target)))
    return out


def zeta_special_value(n: int, k: int, source: str = "paper",
                       strict: bool = False) -> RegularizedValue:
    """-beta*_{n,k,q} / n from the selected closed form."""
    if source == "paper":
        beta = beta_star_paper(n, k, strict)
    elif source == "reference":
        beta = beta_star_reference(n, k, strict)
    else:
        raise ValueError(f"unknown source {source!r}")
    return beta.map(lambda v: v * Fraction(-1, n))
