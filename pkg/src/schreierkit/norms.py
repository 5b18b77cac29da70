"""Exact evaluation of family norms and the sequence diagnostics built on them.

The central object is the family norm

    ||x||_F = max( ||x||_oo,  max over s in F of  sum_{k in s} |x_k| ),

computed exactly in rationals by branch-and-bound on the family trie.  The
block-aggregated (Baernstein-style) norm, epsilon-support families, uniform
weak bounds, spreading-model constants (via exact LP) and Cesaro profiles
are all derived from it.

Exactness policy: everything is rational; p-th roots are deferred to output
formatting.  For integer p the p-powered block norm is the canonical exact
result (see :func:`block_p_norm_power`).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .families import Family, best_set_sum, finite_set, trace
from .lp import LPResult, solve_lp
from .schreier import OrdinalCNF, schreier_enumerate
from .vectors import SparseVector

PValue = Union[int, Fraction, float]  # float only for math.inf

#: sign-pattern enumeration cutoff for `uniform_weak_bound`
MAX_SIGN_PATTERNS = 2**20


def _is_inf(p: PValue) -> bool:
    return isinstance(p, float) and math.isinf(p)


def f_norm(x: SparseVector, family: Family) -> Fraction:
    """The family norm of x: max of sup-norm and best member sum of |x|."""
    weights = {k: abs(v) for k, v in x.items()}
    return max(x.sup_norm(), best_set_sum(family, weights))


def block_p_norm_power(x: SparseVector, family: Family, p: int) -> Fraction:
    """Exact p-th power of the block-aggregated norm, integer p >= 1.

    The supremum over block sequences E_1 < ... < E_n of sum ||E_i x||_F^p
    is attained on partitions of the support into consecutive intervals
    (dropping points or leaving gaps never helps, by coordinatewise
    monotonicity of the family norm), so an interval dynamic program over
    the support positions is exact.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    support = x.support
    if not support:
        return Fraction(0)
    m = len(support)
    # seg[i][j] = ||x restricted to support positions i..j||_F
    seg = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            seg[i][j] = f_norm(x.restrict(support[i : j + 1]), family)
    best = [Fraction(0)] * (m + 1)
    for j in range(1, m + 1):
        best[j] = max(best[i] + seg[i][j - 1] ** p for i in range(j))
    return best[m]


def baernstein_norm(x: SparseVector, family: Family, p: PValue) -> Union[Fraction, float]:
    """Block-aggregated family norm; exact rational for p in {1, oo}.

    For other p the exact p-powered value is computed when p is an integer
    (take the root yourself via :func:`block_p_norm_power` if you need it
    exactly); the returned float is its correctly rounded p-th root.  Rational
    non-integer p falls back to float arithmetic throughout.
    """
    if _is_inf(p):
        return f_norm(x, family)
    p = Fraction(p)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if p.denominator == 1:
        power = block_p_norm_power(x, family, p.numerator)
        if p == 1:
            return power
        return float(power) ** (1.0 / p.numerator)
    return _block_p_norm_float(x, family, float(p))


def _block_p_norm_float(x: SparseVector, family: Family, p: float) -> float:
    support = x.support
    if not support:
        return 0.0
    m = len(support)
    seg = [[0.0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            seg[i][j] = float(f_norm(x.restrict(support[i : j + 1]), family))
    best = [0.0] * (m + 1)
    for j in range(1, m + 1):
        best[j] = max(best[i] + seg[i][j - 1] ** p for i in range(j))
    return best[m] ** (1.0 / p)


@dataclass(frozen=True)
class NormingSpec:
    """A norming set induced by a family: signed indicator functionals.

    Describes N = {+-e_k*} union {sum_{k in s} +- e_k* : s in base_family};
    the singleton functionals can be switched off.
    """

    base_family: Family
    include_singletons: bool = True


def eps_support_family(
    xs: Sequence[SparseVector], spec: NormingSpec, eps: Fraction
) -> Family:
    """The family of eps-supports {n : |f(x_n)| >= eps} over the norming set.

    For each base set the sign pattern matching the coordinates maximizes
    |f(x_n)| for every n simultaneously on sign-definite data, and dominates
    coordinatewise in general, so the recorded set per base member is
    {n : sum_{k in s} |(x_n)_k| >= eps}.  Singleton functionals contribute
    their own supports, and the empty set is always present (the norming set
    contains functionals supported away from every x_n).
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    union_supp = sorted({k for x in xs for k in x.support})
    sets: list[tuple[int, ...]] = [()]
    if spec.include_singletons:
        for k in union_supp:
            sets.append(tuple(n for n, x in enumerate(xs, start=1) if abs(x[k]) >= eps))
    for s in spec.base_family:
        hits = []
        for n, x in enumerate(xs, start=1):
            total = sum((abs(x[k]) for k in s), Fraction(0))
            if total >= eps:
                hits.append(n)
        sets.append(tuple(hits))
    return Family(sets)


def uniform_weak_bound(xs: Sequence[SparseVector], spec: NormingSpec, eps: Fraction) -> int:
    """max over functionals f in the norming set of #{n : |f(x_n)| >= eps}.

    Exact: for sign-definite data the coordinate-matching pattern is globally
    optimal; otherwise all sign patterns on the relevant coordinates are
    enumerated (refused beyond 2^20 patterns).
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    best = 0
    union_supp = {k for x in xs for k in x.support}
    if spec.include_singletons:
        for k in sorted(union_supp):
            best = max(best, sum(1 for x in xs if abs(x[k]) >= eps))
    for s in spec.base_family:
        rel = [k for k in s if k in union_supp]
        if not rel:
            continue
        definite = all(
            all(x[k] >= 0 for k in rel) or all(x[k] <= 0 for k in rel) for x in xs
        )
        if definite:
            cnt = sum(
                1 for x in xs if sum((abs(x[k]) for k in rel), Fraction(0)) >= eps
            )
            best = max(best, cnt)
            continue
        if 2 ** (len(rel) - 1) > MAX_SIGN_PATTERNS:
            raise ValueError(f"sign enumeration over {len(rel)} coordinates refused")
        for signs in itertools.product((1, -1), repeat=len(rel) - 1):
            theta = (1,) + signs
            cnt = 0
            for x in xs:
                val = sum((t * x[k] for t, k in zip(theta, rel)), Fraction(0))
                if abs(val) >= eps:
                    cnt += 1
            best = max(best, cnt)
    return best


@dataclass(frozen=True)
class SpreadingResult:
    """Minimax value over the probability simplex with its LP certificate."""

    value: Fraction
    coefficients: list[Fraction]
    lp: LPResult


def spreading_constant(ys: Sequence[SparseVector], family: Family) -> SpreadingResult:
    """min over convex coefficients a of ||sum a_n |y_n|||_F, by exact LP.

    Signed inputs are replaced by coordinatewise absolute values first; for
    the 1-unconditional norms computed here this is the honest computable
    reduction.  The norm of a nonnegative combination is the maximum of
    finitely many linear functionals (member sums and single coordinates),
    so the minimax is a linear program, solved with exact rational pivoting
    and certified by duality.
    """
    if not ys:
        raise ValueError("need at least one vector")
    ys = [y.abs() for y in ys]
    union_supp = finite_set({k for y in ys for k in y.support} or {1})
    functionals: list[tuple[int, ...]] = [(k,) for k in union_supp]
    for s in trace(family, union_supp):
        if len(s) >= 2:
            functionals.append(s)

    k = len(ys)
    # variables: a_1..a_k, t;  minimize t
    c = [Fraction(0)] * k + [Fraction(1)]
    a_ub = []
    b_ub = []
    for s in functionals:
        row = [sum((y[e] for e in s), Fraction(0)) for y in ys] + [Fraction(-1)]
        a_ub.append(row)
        b_ub.append(Fraction(0))
    a_eq = [[Fraction(1)] * k + [Fraction(0)]]
    b_eq = [Fraction(1)]
    res = solve_lp(c, a_ub, b_ub, a_eq, b_eq)
    if not res.optimal:
        raise RuntimeError(f"spreading LP unexpectedly {res.status}")
    return SpreadingResult(res.objective, res.x[:k], res)


def cesaro_profile(
    ys: Sequence[SparseVector], family: Family, p: PValue
) -> list[Union[Fraction, float]]:
    """Norms of the running averages (1/n) sum_{k<=n} y_k for n = 1..len(ys)."""
    if not ys:
        raise ValueError("need at least one vector")
    out = []
    partial = SparseVector()
    for n, y in enumerate(ys, start=1):
        partial = partial + y
        out.append(baernstein_norm(partial.scale(Fraction(1, n)), family, p))
    return out


def alpha_null_witness(
    xs: Sequence[SparseVector],
    beta: OrdinalCNF,
    eps: Fraction,
    window: Iterable[int],
) -> list[int]:
    """Indices n with ||x_n|| at level beta (on the window) at least eps."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    w = set(finite_set(window))
    out = []
    for n, x in enumerate(xs, start=1):
        sub = finite_set(k for k in x.support if k in w)
        fam = schreier_enumerate(beta, sub)
        if f_norm(x, fam) >= eps:
            out.append(n)
    return out
