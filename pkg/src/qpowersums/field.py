"""Exact polynomials and rational functions over Q.

Every symbolic value in the package lives in Q(v) with v = q^(1/2), so
half-integer powers of q are ordinary monomials.  ``Poly`` keeps its
coefficients as an integer tuple over one shared positive denominator;
this keeps convolution and the gcd loop in plain ``int`` arithmetic while
the public surface still speaks ``Fraction``.

``RatFunc`` is always in canonical form: numerator and denominator are
coprime and the denominator is monic.  ``RatFunc2`` adds a second
indeterminate z used only for regularizing removable singularities.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .errors import (
    DivisionByZeroFunction,
    PoleAtOne,
    PoleAtPoint,
    SingularAtZ1,
    ZeroDenominator,
)

Scalar = Union[int, Fraction]
IntVec = Tuple[int, ...]

__all__ = [
    "Poly",
    "RatFunc",
    "BiPoly",
    "RatFunc2",
    "poly_gcd",
    "ratfunc_normalize",
    "ratfunc_arith",
    "eval_at",
    "limit_at_v1",
    "subst_z1",
    "to_canonical_string",
]


# ---------------------------------------------------------------------------
# integer coefficient vectors (low -> high, no trailing zeros)


def _strip(a: list) -> IntVec:
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _content(a: Sequence[int]) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _vadd(a: IntVec, b: IntVec, ca: int = 1, cb: int = 1) -> IntVec:
    """ca*a + cb*b."""
    if len(a) < len(b):
        a, b, ca, cb = b, a, cb, ca
    out = [ca * x for x in a]
    for i, y in enumerate(b):
        out[i] += cb * y
    return _strip(out)


def _vmul(a: IntVec, b: IntVec) -> IntVec:
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                out[i + j] += x * y
    return _strip(out)


def _primitive(a: IntVec) -> IntVec:
    """Primitive part with positive leading coefficient."""
    if not a:
        return a
    c = _content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def _prem(a: IntVec, b: IntVec) -> IntVec:
    """Pseudo-remainder of a by b (b nonzero)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        r = list(_strip(r))
    return tuple(r)


def _divexact(a: IntVec, b: IntVec) -> IntVec:
    """Quotient a/b over Z; the division must be exact."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return ()
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    quo = [0] * (len(a) - db) if len(a) > db else []
    while r and len(r) - 1 >= db:
        c, rem = divmod(r[-1], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        shift = len(r) - 1 - db
        quo[shift] = c
        for i, y in enumerate(b):
            r[i + shift] -= c * y
        r = list(_strip(r))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return tuple(quo)


def _pgcd(a: IntVec, b: IntVec) -> IntVec:
    """Primitive gcd over Z[v] by the primitive remainder sequence."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_prem(a, b))
    return a


# ---------------------------------------------------------------------------


class Poly:
    """Univariate polynomial with rational coefficients.

    Internally ``num / den`` with ``num`` an integer tuple (index is the
    exponent) and ``den`` a positive integer coprime to the content of
    ``num``.  The zero polynomial is ``((), 1)``.
    """

    __slots__ = ("num", "den")

    def __init__(self, coeffs: Union[Sequence[Scalar], Mapping[int, Scalar]] = ()):
        if isinstance(coeffs, Mapping):
            if not coeffs:
                dense: list = []
            else:
                if min(coeffs) < 0:
                    raise ValueError("negative exponent in Poly")
                dense = [0] * (max(coeffs) + 1)
                for e, c in coeffs.items():
                    dense[e] = c
        else:
            dense = list(coeffs)
        fr = [Fraction(c) for c in dense]
        d = 1
        for c in fr:
            d = d * c.denominator // gcd(d, c.denominator)
        num = _strip([c.numerator * (d // c.denominator) for c in fr])
        self._set(num, d)

    def _set(self, num: IntVec, den: int) -> None:
        if not num:
            self.num, self.den = (), 1
            return
        g = gcd(_content(num), den)
        if g != 1:
            num = tuple(x // g for x in num)
            den //= g
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: IntVec, den: int = 1) -> "Poly":
        p = object.__new__(cls)
        if den < 0:
            num, den = tuple(-x for x in num), -den
        p._set(num, den)
        return p

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        c = Fraction(c)
        return cls._raw((c.numerator,) if c else (), c.denominator)

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent in Poly")
        c = Fraction(c)
        if not c:
            return cls._raw(())
        return cls._raw((0,) * e + (c.numerator,), c.denominator)

    # -- inspection ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Largest stored exponent; -1 for the zero polynomial."""
        return len(self.num) - 1

    @property
    def lc(self) -> Fraction:
        return Fraction(self.num[-1], self.den) if self.num else Fraction(0)

    def coeff(self, e: int) -> Fraction:
        if 0 <= e < len(self.num):
            return Fraction(self.num[e], self.den)
        return Fraction(0)

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        """Sparse view: exponent -> nonzero coefficient."""
        return {e: Fraction(c, self.den) for e, c in enumerate(self.num) if c}

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"Poly({self.to_string()})"

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        return NotImplemented

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-x for x in self.num), self.den)

    def __add__(self, other) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return Poly._raw(_vadd(self.num, other.num), self.den)
        g = gcd(self.den, other.den)
        return Poly._raw(
            _vadd(self.num, other.num, other.den // g, self.den // g),
            self.den // g * other.den,
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Poly._raw(
                tuple(x * other.numerator for x in self.num), self.den * other.denominator
            )
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly._raw(_vmul(self.num, other.num), self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def monic(self) -> "Poly":
        if not self.num:
            return self
        lead = self.num[-1]
        return Poly._raw(self.num, lead) if lead > 0 else Poly._raw(tuple(-x for x in self.num), -lead)

    def primitive(self) -> IntVec:
        return _primitive(self.num)

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        """Euclidean division over Q."""
        if not other.num:
            raise ZeroDivisionError("division by zero polynomial")
        r = [Fraction(x, self.den) for x in self.num]
        b = [Fraction(x, other.den) for x in other.num]
        db, lb = len(b) - 1, b[-1]
        q = [Fraction(0)] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            c = r[-1] / lb
            shift = len(r) - 1 - db
            q[shift] = c
            for i, y in enumerate(b):
                r[i + shift] -= c * y
            r = list(_strip(r))
        return Poly(q), Poly(r)

    def exquo(self, other: "Poly") -> "Poly":
        """Exact quotient over Q; raises ArithmeticError if other does not divide."""
        if not other.num:
            raise ZeroDivisionError("division by zero polynomial")
        c = _content(other.num)
        if other.num[-1] < 0:
            c = -c
        pb = tuple(x // c for x in other.num)
        q = _divexact(self.num, pb)
        # self = num/den, other = c*pb/oden
        return Poly._raw(q, 1) * Fraction(other.den, self.den * c)

    def derivative(self) -> "Poly":
        return Poly._raw(tuple(i * x for i, x in enumerate(self.num))[1:], self.den)

    def antiderivative(self) -> "Poly":
        """Integral from 0, i.e. the antiderivative with zero constant term."""
        return Poly([0] + [Fraction(x, self.den * (i + 1)) for i, x in enumerate(self.num)])

    def __call__(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        p, r = x.numerator, x.denominator
        n = len(self.num)
        if not n:
            return Fraction(0)
        # sum a_i p^i r^(n-1-i), Horner in p with r-powers folded in
        acc = 0
        rp = 1
        for a in reversed(self.num):
            acc = acc * p + a * rp
            rp *= r
        return Fraction(acc, self.den * r ** (n - 1))

    def to_string(self, var: str = "v") -> str:
        terms = [(e, Fraction(c, self.den)) for e, c in enumerate(self.num) if c]
        if not terms:
            return "0"
        parts = []
        for idx, (e, c) in enumerate(reversed(terms)):
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if idx == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    __str__ = to_string


V = Poly.monomial(1)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q; ``poly_gcd(0, 0)`` is 0."""
    if not p.num and not q.num:
        return Poly._raw(())
    if not q.num:
        return p.monic()
    if not p.num:
        return q.monic()
    return Poly._raw(_pgcd(p.num, q.num), 1).monic()


# ---------------------------------------------------------------------------


class RatFunc:
    """Canonical element of Q(v): coprime ``num``/``den`` with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Union[Poly, Scalar] = 0, den: Union[Poly, Scalar] = 1):
        num = Poly._coerce(num)
        den = Poly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFunc expects Poly or rational scalars")
        n, d = _normalize(num, den)
        self.num, self.den = n, d

    @classmethod
    def _canon(cls, num: Poly, den: Poly) -> "RatFunc":
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> "RatFunc":
        """c * v^e for any integer e."""
        if e >= 0:
            return cls._canon(Poly.monomial(e, c), Poly.const(1))
        if not c:
            return cls._canon(Poly._raw(()), Poly.const(1))
        return cls._canon(Poly.const(c), Poly.monomial(-e))

    def is_zero(self) -> bool:
        return not self.num.num

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_poly(self) -> bool:
        return self.den.num == (1,) and self.den.den == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc{to_canonical_string(self)}"

    @staticmethod
    def _coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            x = Fraction(x)
            return RatFunc._canon(Poly.const(x), Poly.const(1))
        if isinstance(x, Poly):
            return RatFunc._canon(x, Poly.const(1))
        return NotImplemented

    def __neg__(self) -> "RatFunc":
        return RatFunc._canon(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a:
            return other
        if not c:
            return self
        # Henrici: with g = gcd(b, d), gcd(a d/g + c b/g, b d/g) = gcd(that, g)
        if b == d:
            if b.num == (1,):
                return RatFunc._canon(a + c, b)
            g, t, den = b, a + c, b
        else:
            g = poly_gcd(b, d)
            if g.num == (1,):
                return RatFunc._canon(a * d + c * b, b * d)
            bg, dg = b.exquo(g), d.exquo(g)
            t, den = a * dg + c * bg, b * dg
        if not t:
            return RatFunc._coerce(0)
        h = poly_gcd(t, g)
        if h.num != (1,):
            t, den = t.exquo(h), den.exquo(h)
        return RatFunc._canon(t, den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc._coerce(0)
            return RatFunc._canon(self.num * Fraction(other), self.den)
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a or not c:
            return RatFunc._coerce(0)
        # cross-cancel: a/b * c/d with gcd(a,b) = gcd(c,d) = 1
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if g1.num != (1,):
            a, d = a.exquo(g1), d.exquo(g1)
        if g2.num != (1,):
            c, b = c.exquo(g2), b.exquo(g2)
        return RatFunc._canon(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZeroFunction("inverse of the zero function")
        lead = self.num.lc
        return RatFunc._canon(self.den * (1 / lead), self.num * (1 / lead))

    def __truediv__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZeroFunction("division by the zero function")
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc._coerce(other) / self

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            return self.inverse() ** (-e)
        # coprime num/den stay coprime under powers
        return RatFunc._canon(self.num**e, self.den**e)

    def __call__(self, x: Scalar) -> Fraction:
        return eval_at(self, x)


def _normalize(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    if not den.num:
        raise ZeroDenominator("denominator is the zero polynomial")
    if not num.num:
        return Poly._raw(()), Poly.const(1)
    g = _pgcd(num.num, den.num)
    n_int, d_int = num.num, den.num
    if len(g) > 1:
        n_int = _divexact(n_int, g)
        d_int = _divexact(d_int, g)
    # value = (n_int/num.den) / (d_int/den.den); make the denominator monic
    lead = d_int[-1]
    n = Poly._raw(n_int, 1) * Fraction(den.den, num.den * lead)
    d = Poly._raw(d_int, lead) if lead > 0 else Poly._raw(tuple(-x for x in d_int), -lead)
    return n, d


def _from(num: Poly, den: Poly) -> RatFunc:
    return RatFunc._canon(*_normalize(num, den))


def ratfunc_normalize(num: Poly, den: Poly) -> RatFunc:
    return _from(num, den)


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def eval_at(f: RatFunc, x: Scalar) -> Fraction:
    d = f.den(x)
    if d == 0:
        raise PoleAtPoint(f"pole at v = {x}")
    return f.num(x) / d


def limit_at_v1(f: RatFunc) -> Fraction:
    """Value at v = 1 (equivalently the q -> 1 limit)."""
    try:
        return eval_at(f, 1)
    except PoleAtPoint:
        raise PoleAtOne("pole at v = 1") from None


def to_canonical_string(f: RatFunc) -> str:
    num = f"({f.num.to_string()})"
    if f.is_poly():
        return num
    return f"{num} / ({f.den.to_string()})"


# ---------------------------------------------------------------------------
# bivariate layer: polynomials in z whose coefficients are Polys in v


class BiPoly:
    """Polynomial in z over Q[v]; ``coeffs[i]`` multiplies z^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Poly] = ()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.coeffs: Tuple[Poly, ...] = tuple(c)

    @classmethod
    def monomial(cls, ve: int, ze: int, c: Scalar = 1) -> "BiPoly":
        return cls([Poly.const(0)] * ze + [Poly.monomial(ve, c)])

    @property
    def deg_z(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "BiPoly(" + ", ".join(f"z^{i}:({p})" for i, p in enumerate(self.coeffs) if p) + ")"

    @property
    def lc(self) -> Poly:
        return self.coeffs[-1]

    def __neg__(self) -> "BiPoly":
        return BiPoly(-p for p in self.coeffs)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, p in enumerate(b):
            out[i] = out[i] + p
        return BiPoly(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (Poly, int, Fraction)):
            return BiPoly(p * other for p in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return BiPoly()
        out = [Poly.const(0)] * (len(a) + len(b) - 1)
        for i, p in enumerate(a):
            if not p:
                continue
            for j, r in enumerate(b):
                if r:
                    out[i + j] = out[i + j] + p * r
        return BiPoly(out)

    __rmul__ = __mul__

    def shift_z(self, k: int) -> "BiPoly":
        return BiPoly([Poly.const(0)] * k + list(self.coeffs))

    def content(self) -> Poly:
        """Monic gcd in Q[v] of the z-coefficients."""
        g = Poly.const(0)
        for p in self.coeffs:
            g = poly_gcd(g, p)
            if g.degree == 0:
                break
        return g

    def exquo_poly(self, p: Poly) -> "BiPoly":
        return BiPoly(c.exquo(p) for c in self.coeffs)

    def primitive(self) -> "BiPoly":
        if not self.coeffs:
            return self
        return self.exquo_poly(self.content())

    def prem(self, other: "BiPoly") -> "BiPoly":
        r = self
        lb, db = other.lc, other.deg_z
        while r and r.deg_z >= db:
            r = r * lb - other.shift_z(r.deg_z - db) * r.lc
        return r

    def exquo(self, other: "BiPoly") -> "BiPoly":
        """Exact quotient in Q[v][z]."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        r = self
        db, lb = other.deg_z, other.lc
        q = [Poly.const(0)] * max(self.deg_z - db + 1, 0)
        while r and r.deg_z >= db:
            c = r.lc.exquo(lb)
            shift = r.deg_z - db
            q[shift] = c
            r = r - other.shift_z(shift) * c
        if r:
            raise ArithmeticError("inexact bivariate division")
        return BiPoly(q)

    def at_z1(self) -> Poly:
        out = Poly.const(0)
        for p in self.coeffs:
            out = out + p
        return out


def bipoly_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """gcd in Q[v][z]: gcd of contents times the primitive-remainder-sequence gcd."""
    if not a:
        return b
    if not b:
        return a
    if a.deg_z == 0 or b.deg_z == 0:
        return BiPoly([poly_gcd(a.content(), b.content())])
    ca, cb = a.content(), b.content()
    c = poly_gcd(ca, cb)
    pa, pb = a.exquo_poly(ca), b.exquo_poly(cb)
    if pa.deg_z < pb.deg_z:
        pa, pb = pb, pa
    while pb:
        r = pa.prem(pb)
        pa, pb = pb, r.primitive() if r else r
    if pa.deg_z == 0:
        return BiPoly([c])
    return pa * c


class RatFunc2:
    """Element of Q(v, z) with coprime numerator and denominator.

    The denominator is scaled so that its leading coefficient, taking z
    before v, equals 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly):
        if not den:
            raise ZeroDenominator("denominator is the zero polynomial")
        if num:
            g = bipoly_gcd(num, den)
            if not _is_unit(g):
                num, den = num.exquo(g), den.exquo(g)
        self._store(num, den)

    def _store(self, num: BiPoly, den: BiPoly) -> None:
        if not num:
            self.num, self.den = BiPoly(), BiPoly([Poly.const(1)])
            return
        lead = den.lc.lc
        if lead != 1:
            num, den = num * (1 / lead), den * (1 / lead)
        self.num, self.den = num, den

    @classmethod
    def _canon(cls, num: BiPoly, den: BiPoly) -> "RatFunc2":
        """Wrap an already coprime pair, only rescaling."""
        out = object.__new__(cls)
        out._store(num, den)
        return out

    @classmethod
    def monomial(cls, ve: int, ze: int, c: Scalar = 1) -> "RatFunc2":
        """c * v^ve * z^ze, negative exponents allowed."""
        num = BiPoly.monomial(max(ve, 0), max(ze, 0), c)
        den = BiPoly.monomial(max(-ve, 0), max(-ze, 0))
        return cls._canon(num, den)

    @classmethod
    def from_ratfunc(cls, f: RatFunc) -> "RatFunc2":
        return cls._canon(BiPoly([f.num]), BiPoly([f.den]))

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other) -> bool:
        return isinstance(other, RatFunc2) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc2({self.num!r} / {self.den!r})"

    @staticmethod
    def _coerce(x) -> "RatFunc2":
        if isinstance(x, RatFunc2):
            return x
        if isinstance(x, RatFunc):
            return RatFunc2.from_ratfunc(x)
        if isinstance(x, (int, Fraction, Poly)):
            return RatFunc2.from_ratfunc(RatFunc._coerce(x))
        return NotImplemented

    def __neg__(self) -> "RatFunc2":
        return RatFunc2._canon(-self.num, self.den)

    def __add__(self, other) -> "RatFunc2":
        other = RatFunc2._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a:
            return other
        if not c:
            return self
        # Henrici, as in RatFunc.__add__
        if b == d:
            g, t, den = b, a + c, b
        else:
            g = bipoly_gcd(b, d)
            if _is_unit(g):
                return RatFunc2._canon(a * d + c * b, b * d)
            bg, dg = b.exquo(g), d.exquo(g)
            t, den = a * dg + c * bg, b * dg
        if not t:
            return RatFunc2._canon(t, den)
        h = bipoly_gcd(t, g)
        if not _is_unit(h):
            t, den = t.exquo(h), den.exquo(h)
        return RatFunc2._canon(t, den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc2":
        return self + (-RatFunc2._coerce(other))

    def __rsub__(self, other) -> "RatFunc2":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc2":
        other = RatFunc2._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a or not c:
            return RatFunc2._canon(BiPoly(), b)
        g1, g2 = bipoly_gcd(a, d), bipoly_gcd(c, b)
        if not _is_unit(g1):
            a, d = a.exquo(g1), d.exquo(g1)
        if not _is_unit(g2):
            c, b = c.exquo(g2), b.exquo(g2)
        return RatFunc2._canon(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc2":
        if self.is_zero():
            raise DivisionByZeroFunction("inverse of the zero function")
        return RatFunc2._canon(self.den, self.num)

    def __truediv__(self, other) -> "RatFunc2":
        other = RatFunc2._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatFunc2":
        return RatFunc2._coerce(other) / self


def _is_unit(g: BiPoly) -> bool:
    return g.deg_z == 0 and g.coeffs[0].degree == 0


def subst_z1(f: RatFunc2) -> RatFunc:
    """Set z = 1 in the reduced fraction."""
    d = f.den.at_z1()
    if not d:
        raise SingularAtZ1("denominator vanishes identically at z = 1")
    return _from(f.num.at_z1(), d)
