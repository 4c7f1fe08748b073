"""Verification suites: each evaluates a parameter grid and emits CheckRecords.

Symbolic suites compare canonical rational functions and then re-check the
verdict by exact evaluation at v = 3/2 (q = 9/4); a disagreement between
the two is recorded as ``error``.  Numeric suites record relative gaps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import mpmath

from . import classical, closed, numeric, sums
from .closed import RegularizedValue
from .errors import InvalidRange, PoleAtPoint, QSumsError, UnknownSuite
from .field import RatFunc, eval_at, limit_at_v1, to_canonical_string
from .report import CheckRecord, Report, Suite

CHECK_V = Fraction(3, 2)
NUMERIC_TOL = Fraction(1, 10**8)
NUMERIC_TOL_TEXT = "1e-8"

SUITES = (
    "warnaar",
    "garrett-hummel",
    "schlosser",
    "kim",
    "faulhaber",
    "index-bridge",
    "classical-limits",
    "theorem1-paper",
    "theorem2-paper",
    "theorem3-paper",
    "theorem3-reference",
    "reference-difference",
    "zeta-mellin",
    "zeta-variant",
    "barnes-limit",
)

# per-suite default bounds: n, k, m
DEFAULTS: Dict[str, Dict[str, int]] = {
    "warnaar": {"n": 12},
    "garrett-hummel": {"n": 12},
    "schlosser": {"n": 10, "m": 5},
    "kim": {"n": 12},
    "faulhaber": {"n": 10, "k": 10},
    "index-bridge": {"n": 8, "k": 6},
    "classical-limits": {"n": 8, "k": 8, "m": 6},
    "theorem1-paper": {"n": 6, "k": 5},
    "theorem2-paper": {"n": 6, "k": 5},
    "theorem3-paper": {"n": 6, "k": 5},
    "theorem3-reference": {"n": 6, "k": 5},
    "reference-difference": {"n": 8, "k": 6},
    "zeta-mellin": {"k": 2},
    "zeta-variant": {},
    "barnes-limit": {},
}

NUMERIC_SUITES = {"zeta-mellin": NUMERIC_TOL_TEXT, "zeta-variant": NUMERIC_TOL_TEXT, "barnes-limit": None}

DEFAULT_Q = {
    "zeta-mellin": (Fraction(2), Fraction(3, 2)),
    "zeta-variant": (Fraction(2),),
    "barnes-limit": (Fraction(2), Fraction(3, 2), Fraction(5, 4)),
}


@dataclass
class RunConfig:
    n_max: Optional[int] = None
    k_max: Optional[int] = None
    m_max: Optional[int] = None
    q: Optional[Fraction] = None
    precision: int = 256
    tol: Fraction = Fraction(1, 10**30)

    def bound(self, suite: str, name: str) -> int:
        given = getattr(self, f"{name}_max")
        value = DEFAULTS[suite].get(name, 0) if given is None else given
        if value < 0:
            raise InvalidRange(f"--{name}-max must be >= 0")
        return value

    def q_list(self, suite: str) -> Tuple[Fraction, ...]:
        return (self.q,) if self.q is not None else DEFAULT_Q[suite]

    def params(self, q: Fraction) -> numeric.NumericParams:
        return numeric.NumericParams(q=q, tol=self.tol, precision=self.precision)


Value = Union[RatFunc, RegularizedValue]


def symbolic_record(suite: str, params: Dict[str, object], lhs: Value, rhs: Value) -> CheckRecord:
    sides = []
    for side in (lhs, rhs):
        if isinstance(side, RegularizedValue):
            if side.value is None:
                return CheckRecord.make(
                    suite, params,
                    "singular" if side is lhs else to_canonical_string(_val(lhs)),
                    "singular" if side is rhs else to_canonical_string(_val(rhs)),
                    "singular", "singular",
                )
            side = side.value
        sides.append(side)
    a, b = sides
    diff = a - b
    verdict = "pass" if diff.is_zero() else "fail"
    try:
        same_at_point = eval_at(a, CHECK_V) == eval_at(b, CHECK_V)
        if same_at_point != diff.is_zero():
            verdict = "error"
    except PoleAtPoint:
        verdict = "error"
    return CheckRecord.make(
        suite, params, to_canonical_string(a), to_canonical_string(b), verdict, to_canonical_string(diff)
    )


def _val(x: Value) -> RatFunc:
    return x.value if isinstance(x, RegularizedValue) else x


def _error_record(suite: str, params: Dict[str, object], exc: Exception) -> CheckRecord:
    return CheckRecord.make(suite, params, "", "", "error", f"{type(exc).__name__}: {exc}")


def _guard(suite: str, params: Dict[str, object], fn: Callable[[], CheckRecord]) -> CheckRecord:
    try:
        return fn()
    except QSumsError as exc:
        return _error_record(suite, params, exc)


def _num(x) -> str:
    return mpmath.nstr(x, 30)


def _gap(x) -> str:
    return mpmath.nstr(x, 6)


# -- suites ------------------------------------------------------------------


def _warnaar(cfg: RunConfig) -> Iterator[CheckRecord]:
    for n in range(1, cfg.bound("warnaar", "n") + 1):
        yield symbolic_record("warnaar", {"n": n}, sums.warnaar_lhs(n), closed.warnaar_rhs(n))


def _garrett_hummel(cfg: RunConfig) -> Iterator[CheckRecord]:
    for n in range(1, cfg.bound("garrett-hummel", "n") + 1):
        yield symbolic_record("garrett-hummel", {"n": n}, sums.garrett_hummel_lhs(n), closed.warnaar_rhs(n))


def _schlosser(cfg: RunConfig) -> Iterator[CheckRecord]:
    for m in range(2, min(cfg.bound("schlosser", "m"), 5) + 1):
        for n in range(1, cfg.bound("schlosser", "n") + 1):
            yield symbolic_record("schlosser", {"m": m, "n": n},
                                  sums.schlosser_sum(m, n), closed.schlosser_rhs(m, n))


def _kim(cfg: RunConfig) -> Iterator[CheckRecord]:
    for variant in ("linear", "square"):
        for n in range(1, cfg.bound("kim", "n") + 1):
            yield symbolic_record("kim", {"variant": variant, "n": n},
                                  sums.kim_sum(n, variant), closed.kim_rhs(n, variant))


def _faulhaber(cfg: RunConfig) -> Iterator[CheckRecord]:
    k_max = cfg.bound("faulhaber", "k")
    for n in range(1, cfg.bound("faulhaber", "n") + 1):
        yield from classical.faulhaber_check(n)
        b = classical.bernoulli_poly(n).antiderivative()
        lhs = [b(k) for k in range(k_max + 1)]
        rhs = [Fraction(classical.power_sum(n, k)) for k in range(k_max + 1)]
        yield CheckRecord.make(
            "faulhaber", {"n": n, "check": "integral-values"},
            " ".join(map(str, lhs)), " ".join(map(str, rhs)),
            "pass" if lhs == rhs else "fail",
            " ".join(str(x - y) for x, y in zip(lhs, rhs)),
        )
        sol = classical.uniqueness_witness(n)
        target = classical.bernoulli_poly(n)
        if sol is None:
            yield CheckRecord.make("faulhaber", {"n": n, "check": "uniqueness"},
                                   "no unique solution", target.to_string("x"), "fail", "no unique solution")
        else:
            yield CheckRecord.make(
                "faulhaber", {"n": n, "check": "uniqueness"}, sol.to_string("x"), target.to_string("x"),
                "pass" if sol == target else "fail", (sol - target).to_string("x"),
            )


def _index_bridge(cfg: RunConfig) -> Iterator[CheckRecord]:
    from .qobjects import q_power

    for n in range(1, cfg.bound("index-bridge", "n") + 1):
        for k in range(1, cfg.bound("index-bridge", "k") + 1):
            rhs = q_power(Fraction(n + 1, 2)) * sums.schlosser_sum(n, k - 1)
            yield symbolic_record("index-bridge", {"n": n, "k": k}, sums.thm3_lhs(n, k), rhs)


def _limit_record(params: Dict[str, object], f: Callable[[], RatFunc], expected: int) -> CheckRecord:
    def run():
        got = limit_at_v1(f())
        return CheckRecord.make("classical-limits", params, str(got), str(expected),
                                "pass" if got == expected else "fail", str(got - expected))

    return _guard("classical-limits", params, run)


def _classical_limits(cfg: RunConfig) -> Iterator[CheckRecord]:
    n_max = cfg.bound("classical-limits", "n")
    k_max = cfg.bound("classical-limits", "k")
    for m in range(1, cfg.bound("classical-limits", "m") + 1):
        for n in range(1, n_max + 1):
            yield _limit_record({"op": "schlosser", "m": m, "n": n},
                                lambda m=m, n=n: sums.schlosser_sum(m, n),
                                sum(j**m for j in range(1, n + 1)))
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            yield _limit_record({"op": "thm3", "n": n, "k": k},
                                lambda n=n, k=k: sums.thm3_lhs(n, k),
                                classical.power_sum(n, k))


def _grid(suite: str, cfg: RunConfig) -> Iterator[Tuple[int, int]]:
    for n in range(1, cfg.bound(suite, "n") + 1):
        for k in range(1, cfg.bound(suite, "k") + 1):
            yield n, k


def _theorem1(cfg: RunConfig) -> Iterator[CheckRecord]:
    for n, k in _grid("theorem1-paper", cfg):
        yield symbolic_record("theorem1-paper", {"n": n, "k": k},
                              closed.beta_star_reference(n, k), closed.beta_star_paper(n, k))


def _theorem2(cfg: RunConfig) -> Iterator[CheckRecord]:
    for n, k in _grid("theorem2-paper", cfg):
        yield symbolic_record("theorem2-paper", {"n": n, "k": k},
                              closed.beta_star_poly_reference(n, k), closed.beta_star_poly_paper(n, k))


def _theorem3(source: str) -> Callable[[RunConfig], Iterator[CheckRecord]]:
    suite = f"theorem3-{source}"

    def run(cfg: RunConfig) -> Iterator[CheckRecord]:
        for n, k in _grid(suite, cfg):
            lhs = sums.thm3_lhs(n, k)
            rhs = closed.thm3_rhs(n, k, source)
            yield symbolic_record(suite, {"n": n, "k": k, "sign": 1}, lhs, rhs)
            yield symbolic_record(suite, {"n": n, "k": k, "sign": -1}, lhs, rhs.map(lambda v: -v))

    return run


def _reference_difference(cfg: RunConfig) -> Iterator[CheckRecord]:
    for n, k in _grid("reference-difference", cfg):
        diff = closed.combine(closed.beta_star_poly_reference(n, k), closed.beta_star_reference(n, k),
                              lambda a, b: a - b)
        s = sums.thm3_lhs(n, k)
        for sign in (-1, 1):
            yield symbolic_record("reference-difference", {"n": n, "k": k, "sign": sign}, diff, s * (sign * n))


def _numeric_record(suite: str, params: Dict[str, object], lhs, rhs, tol: Fraction) -> CheckRecord:
    rel = abs(lhs / rhs - 1)
    return CheckRecord.make(suite, params, _num(lhs), _num(rhs),
                            "pass" if rel < mpmath.mpf(tol.numerator) / tol.denominator else "fail",
                            _gap(rel))


def _zeta_mellin(cfg: RunConfig) -> Iterator[CheckRecord]:
    for q in cfg.q_list("zeta-mellin"):
        p = cfg.params(q)
        for s in (3, 4):
            for k in range(1, cfg.bound("zeta-mellin", "k") + 1):
                params = {"q": q, "s": s, "k": k}

                def run(p=p, s=s, k=k, params=params):
                    quad = numeric.mellin_quadrature(s, k, p, "numbers")
                    series = numeric.zeta_star_series(s, k, p, "numbers")
                    return _numeric_record("zeta-mellin", params, quad, series, NUMERIC_TOL)

                yield _guard("zeta-mellin", params, run)


def _zeta_variant(cfg: RunConfig) -> Iterator[CheckRecord]:
    s, k = 3, 1
    for q in cfg.q_list("zeta-variant"):
        p = cfg.params(q)
        try:
            quad = numeric.mellin_quadrature(s, k, p, "polynomials")
        except QSumsError as exc:
            for variant in ("derived", "paper"):
                yield _error_record("zeta-variant", {"q": q, "s": s, "k": k, "variant": variant}, exc)
            continue
        for variant in ("derived", "paper"):
            params = {"q": q, "s": s, "k": k, "variant": variant}
            yield _guard("zeta-variant", params, lambda params=params, variant=variant: _numeric_record(
                "zeta-variant", params, quad,
                numeric.zeta_star_series(s, k, p, "polynomials", variant), NUMERIC_TOL))


def _barnes_limit(cfg: RunConfig) -> Iterator[CheckRecord]:
    t, k = -1, 1
    for q in cfg.q_list("barnes-limit"):
        params = {"q": q, "t": t, "k": k}

        def run(q=q, params=params):
            (g,) = numeric.barnes_limit_diagnostic(t, k, [q], precision=cfg.precision, tol=cfg.tol)
            # diagnostic only: the gap is recorded, no verdict is asserted
            return CheckRecord.make("barnes-limit", params, _num(g.f_star), _num(g.target), "skipped", _gap(g.gap))

        yield _guard("barnes-limit", params, run)


RUNNERS: Dict[str, Callable[[RunConfig], Iterator[CheckRecord]]] = {
    "warnaar": _warnaar,
    "garrett-hummel": _garrett_hummel,
    "schlosser": _schlosser,
    "kim": _kim,
    "faulhaber": _faulhaber,
    "index-bridge": _index_bridge,
    "classical-limits": _classical_limits,
    "theorem1-paper": _theorem1,
    "theorem2-paper": _theorem2,
    "theorem3-paper": _theorem3("paper"),
    "theorem3-reference": _theorem3("reference"),
    "reference-difference": _reference_difference,
    "zeta-mellin": _zeta_mellin,
    "zeta-variant": _zeta_variant,
    "barnes-limit": _barnes_limit,
}


def run_suite(name: str, cfg: Optional[RunConfig] = None) -> List[CheckRecord]:
    """All records of one suite, sorted by parameters."""
    if name not in RUNNERS:
        raise UnknownSuite(name)
    cfg = cfg or RunConfig()
    for dim in ("n", "k", "m"):
        cfg.bound(name, dim)
    return sorted(RUNNERS[name](cfg), key=lambda r: r.sort_key)


def build_report(names: Sequence[str], cfg: Optional[RunConfig] = None) -> Report:
    cfg = cfg or RunConfig()
    unknown = [n for n in names if n not in RUNNERS]
    if unknown:
        raise UnknownSuite(", ".join(unknown))
    ordered = [n for n in SUITES if n in names]
    return Report([Suite(n, run_suite(n, cfg), NUMERIC_SUITES.get(n)) for n in ordered])
