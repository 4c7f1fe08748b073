"""Classical power sums S_n(k) = 1^n + ... + (k-1)^n and Bernoulli polynomials.

Bernoulli numbers use the B_1 = -1/2 convention.  Polynomials in the
abstract variable (k or x) reuse :class:`~qpowersums.field.Poly`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Optional

from .field import Poly
from .report import CheckRecord

XPoly = Poly

__all__ = [
    "XPoly",
    "bernoulli_number",
    "bernoulli_poly",
    "power_sum",
    "power_sum_poly",
    "faulhaber_check",
    "solve_exact",
    "uniqueness_witness",
]


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    # sum_{j=0}^{n} C(n+1, j) B_j = 0
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    s = sum(comb(n + 1, j) * bernoulli_number(j) for j in range(n))
    return -s / (n + 1)


def bernoulli_poly(n: int) -> XPoly:
    """B_n(x) = sum_j C(n, j) B_j x^(n-j)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Poly({n - j: comb(n, j) * bernoulli_number(j) for j in range(n + 1)})


def power_sum(n: int, k: int) -> int:
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    return sum(j**n for j in range(1, k))


def power_sum_poly(n: int) -> XPoly:
    """S_n(k) as a polynomial in k: (B_{n+1}(k) - B_{n+1}) / (n+1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (bernoulli_poly(n + 1) - bernoulli_number(n + 1)) * Fraction(1, n + 1)


def _rec(n: int, check: str, lhs, rhs) -> CheckRecord:
    ls = lhs.to_string("k") if isinstance(lhs, Poly) else str(lhs)
    rs = rhs.to_string("k") if isinstance(rhs, Poly) else str(rhs)
    diff = lhs - rhs
    resid = diff.to_string("k") if isinstance(diff, Poly) else str(diff)
    verdict = "pass" if not diff else "fail"
    return CheckRecord.make("faulhaber", {"n": n, "check": check}, ls, rs, verdict, resid)


def faulhaber_check(n: int) -> List[CheckRecord]:
    """Exact checks of the three conjectures, the derivative display and the integral claim."""
    s = power_sum_poly(n)
    ds = s.derivative()
    head = Poly({n: 1, n - 1: Fraction(-n, 2)})
    ds_head = Poly({e: c for e, c in ds.coefficients.items() if e >= n - 1})
    return [
        _rec(n, "degree", Fraction(s.degree), Fraction(n + 1)),
        _rec(n, "leading", s.lc, Fraction(1, n + 1)),
        _rec(n, "constant", s.coeff(0), Fraction(0)),
        _rec(n, "k^n", s.coeff(n), Fraction(-1, 2)),
        _rec(n, "derivative", ds_head, head),
        _rec(n, "integral", bernoulli_poly(n).antiderivative(), s),
    ]


def solve_exact(rows: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    """Gauss-Jordan over Q.

    Returns the unique solution of a consistent full-column-rank system,
    or None when the system is inconsistent or underdetermined.
    """
    m, ncols = len(rows), len(rows[0]) if rows else 0
    a = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    pivot_row = 0
    for col in range(ncols):
        piv = next((i for i in range(pivot_row, m) if a[i][col] != 0), None)
        if piv is None:
            return None
        a[pivot_row], a[piv] = a[piv], a[pivot_row]
        p = a[pivot_row][col]
        a[pivot_row] = [x / p for x in a[pivot_row]]
        for i in range(m):
            if i != pivot_row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[pivot_row])]
        pivot_row += 1
    if any(a[i][-1] != 0 for i in range(pivot_row, m)):
        return None
    return [a[i][-1] for i in range(ncols)]


def uniqueness_witness(n: int) -> Optional[XPoly]:
    """Solve for the monic degree-n P with int_0^k P = S_n(k), k = 1..n+1.

    Unknowns are the n lower coefficients of P; the system has n+1
    equations.  Returns None if no unique solution exists.
    """
    rows, rhs = [], []
    for k in range(1, n + 2):
        rows.append([Fraction(k ** (i + 1), i + 1) for i in range(n)])
        rhs.append(power_sum(n, k) - Fraction(k ** (n + 1), n + 1))
    sol = solve_exact(rows, rhs)
    if sol is None:
        return None
    return Poly(sol + [1])
