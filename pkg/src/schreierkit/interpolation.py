"""Interpolation gauges: Minkowski gauges of 2^n W + 2^{-n} B and their
p-aggregated norm, for W the absolutely convex hull of the unit basis.

On finite supports the W-gauge is exactly the l1 coefficient norm (the
closure in the ambient space adds nothing), so membership of x/lam in
2^n W + 2^{-n} B reduces to

    min { ||x - lam*w||_F : ||w||_1 <= 2^n }  <=  lam * 2^{-n},

a finite linear program once the family norm is written as a maximum of
member sums (absolute values linearized).  The gauge itself is bracketed by
bisection on lam; feasibility is monotone in lam, and the inner LP is exact
rational with a verified duality certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .families import Family, trace
from .lp import LPResult, solve_lp
from .norms import f_norm
from .vectors import SparseVector

DEFAULT_TOLERANCE = Fraction(1, 2**30)


@dataclass(frozen=True)
class GaugeProblem:
    """One gauge evaluation: vector, level n, family, bracket tolerance."""

    x: SparseVector
    level: int
    family: Family
    tolerance: Fraction = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError("level must be >= 0")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")


def inner_distance(
    x: SparseVector, family: Family, lam: Fraction, level: int
) -> LPResult:
    """min ||x - lam*w||_F over ||w||_1 <= 2^level, as a certified exact LP.

    Variables: t (the norm value), v_k >= |x_k - lam*w_k|, and w_k split into
    p_k - q_k.  Only support coordinates of x matter: mass of w outside the
    support can be dropped without increasing anything.
    """
    supp = x.support
    if not supp:
        raise ValueError("inner distance needs a nonzero vector")
    pos = {k: idx for idx, k in enumerate(supp)}
    m = len(supp)
    budget = Fraction(2**level)
    # variable layout: [t, v_1..v_m, p_1..p_m, q_1..q_m]
    nvars = 1 + 3 * m
    zero = Fraction(0)

    def new_row() -> list[Fraction]:
        return [zero] * nvars

    a_ub: list[list[Fraction]] = []
    b_ub: list[Fraction] = []
    # v_k >= x_k - lam*w_k  and  v_k >= -(x_k - lam*w_k)
    for k in supp:
        i = pos[k]
        row = new_row()
        row[1 + i] = Fraction(-1)
        row[1 + m + i] = -lam
        row[1 + 2 * m + i] = lam
        a_ub.append(row)
        b_ub.append(-x[k])
        row = new_row()
        row[1 + i] = Fraction(-1)
        row[1 + m + i] = lam
        row[1 + 2 * m + i] = -lam
        a_ub.append(row)
        b_ub.append(x[k])
    # family member sums stay below t; singleton sums are covered by the
    # sup-norm rows added next
    for s in trace(family, supp):
        if len(s) < 2:
            continue
        row = new_row()
        row[0] = Fraction(-1)
        for k in s:
            row[1 + pos[k]] = Fraction(1)
        a_ub.append(row)
        b_ub.append(zero)
    for k in supp:
        row = new_row()
        row[0] = Fraction(-1)
        row[1 + pos[k]] = Fraction(1)
        a_ub.append(row)
        b_ub.append(zero)
    # l1 budget on w
    row = new_row()
    for i in range(m):
        row[1 + m + i] = Fraction(1)
        row[1 + 2 * m + i] = Fraction(1)
    a_ub.append(row)
    b_ub.append(budget)

    c = new_row()
    c[0] = Fraction(1)
    res = solve_lp(c, a_ub, b_ub)
    if not res.optimal:
        raise RuntimeError(f"inner LP unexpectedly {res.status}")
    return res


def _feasible(x: SparseVector, family: Family, lam: Fraction, level: int) -> bool:
    res = inner_distance(x, family, lam, level)
    return res.objective <= lam * Fraction(1, 2**level)


@dataclass(frozen=True)
class GaugeBracket:
    lo: Fraction
    hi: Fraction
    level: int

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def dfjp_gauge(prob: GaugeProblem) -> GaugeBracket:
    """Bracket the gauge value within the requested tolerance.

    The initial upper end is min(2^{-n} ||x||_1, 2^n ||x||_F): the first is
    feasible via w = x / lam at full budget, the second via w = 0.  The
    initial lower end is ||x||_F / (2^n + 2^{-n}), below the gauge because
    ||x||_F <= lam (||w||_F + 2^{-n}) <= lam (2^n + 2^{-n}) at any feasible
    pair.  Feasibility is monotone in lam, so the gauge stays inside the
    bracket at every bisection step.
    """
    x, level, family, tol = prob.x, prob.level, prob.family, prob.tolerance
    if not x:
        return GaugeBracket(Fraction(0), Fraction(0), level)
    two_n = Fraction(2**level)
    inv_n = Fraction(1, 2**level)
    norm = f_norm(x, family)
    hi = min(inv_n * x.l1_norm(), two_n * norm)
    if not _feasible(x, family, hi, level):
        raise AssertionError("initial bracket end must be feasible")
    lo = norm / (two_n + inv_n)
    if lo > hi:  # both bounds are valid, so this cannot happen
        raise AssertionError("gauge bracket ends crossed")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _feasible(x, family, mid, level):
            hi = mid
        else:
            lo = mid
    return GaugeBracket(lo, hi, level)


@dataclass(frozen=True)
class DfjpNormResult:
    """p-aggregation of the gauge sequence with an explicit tail bound.

    ``powered_lo``/``powered_hi`` bound sum over all n >= 1 of gauge^p; the
    tail beyond n_max is controlled by gauge_n <= 2^{-n} ||x||_1, which gives
    the exact geometric remainder recorded in ``tail_powered``.
    """

    brackets: tuple[GaugeBracket, ...]
    powered_lo: Fraction
    powered_hi: Fraction
    tail_powered: Fraction
    p: int

    @property
    def value_lo(self) -> float:
        return float(self.powered_lo) ** (1.0 / self.p)

    @property
    def value_hi(self) -> float:
        return float(self.powered_hi) ** (1.0 / self.p)


def dfjp_norm(
    x: SparseVector,
    family: Family,
    p: Union[int, Fraction] = 2,
    n_max: int = 10,
    tolerance: Fraction = DEFAULT_TOLERANCE,
) -> DfjpNormResult:
    """Two-sided, tail-accounted evaluation of the interpolation norm.

    Levels n = 1..n_max are bracketed by :func:`dfjp_gauge`; the remainder
    is bounded through the l1 overestimate of the gauge.  Only integer
    p > 1 is supported exactly.
    """
    p = Fraction(p)
    if p <= 1:
        raise ValueError(f"p must be > 1, got {p}")
    if p.denominator != 1:
        raise ValueError("only integer p is supported in the exact tail bound")
    pint = p.numerator
    if not x:
        zero = Fraction(0)
        return DfjpNormResult((), zero, zero, zero, pint)
    brackets = tuple(
        dfjp_gauge(GaugeProblem(x, n, family, tolerance)) for n in range(1, n_max + 1)
    )
    powered_lo = sum((b.lo**pint for b in brackets), Fraction(0))
    powered_hi = sum((b.hi**pint for b in brackets), Fraction(0))
    l1 = x.l1_norm()
    ratio = Fraction(1, 2**pint)
    tail = (l1**pint) * ratio ** (n_max + 1) / (1 - ratio)
    return DfjpNormResult(brackets, powered_lo, powered_hi + tail, tail, pint)
