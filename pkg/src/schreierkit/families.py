"""Algebra of finite families of finite subsets of the positive integers.

A *finite set* is a strictly increasing tuple of integers >= 1 (indices into
the natural numbers are 1-based throughout).  A :class:`Family` is a finite,
deduplicated collection of such sets, stored as a prefix trie keyed by the
increasing enumeration.  All operations are pure; families are immutable
after construction and safe to share between threads.

Conventions
-----------
* The empty set is a member of every hereditary closure of a nonempty
  family.  It contributes nothing to any norm.
* ``oplus``/``otimes`` treat empty operands per the same convention:
  the block-order relation ``s < t`` is vacuously true when either side is
  empty, and the empty union belongs to a block product exactly when the
  empty set belongs to the min-pattern family.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional

FiniteSet = tuple[int, ...]

#: largest member size for which exhaustive subset enumeration is allowed
MAX_CLOSURE_SIZE = 20

#: default trie-node budget for `find_uniform_trace`
DEFAULT_NODE_BUDGET = 10**7


def finite_set(elements: Iterable[int]) -> FiniteSet:
    """Normalize ``elements`` to a strictly increasing tuple of ints >= 1."""
    out = tuple(sorted(set(elements)))
    for e in out:
        if not isinstance(e, int) or isinstance(e, bool) or e < 1:
            raise ValueError(f"set elements must be integers >= 1, got {e!r}")
    return out


def interval(lo: int, hi: int) -> FiniteSet:
    """The window {lo, lo+1, ..., hi}."""
    if lo < 1 or hi < lo - 1:
        raise ValueError(f"bad interval [{lo}, {hi}]")
    return tuple(range(lo, hi + 1))


class _Node:
    __slots__ = ("children", "terminal")

    def __init__(self) -> None:
        self.children: dict[int, _Node] = {}
        self.terminal = False


class Family:
    """A finite collection of finite subsets of N, trie-backed.

    Iteration order is deterministic: lexicographic on the increasing-tuple
    encoding, so a set precedes its proper extensions and siblings ascend.

    ``hereditary_flag`` is tri-state metadata (True / False / None for
    unknown); it is not validated at construction, see :func:`is_hereditary`.
    """

    __slots__ = ("_root", "_size", "hereditary_flag")

    def __init__(
        self,
        sets: Iterable[Iterable[int]] = (),
        hereditary: Optional[bool] = None,
    ) -> None:
        self._root = _Node()
        self._size = 0
        for s in sets:
            self._insert(finite_set(s))
        self.hereditary_flag = hereditary

    def _insert(self, s: FiniteSet) -> None:
        node = self._root
        for e in s:
            nxt = node.children.get(e)
            if nxt is None:
                nxt = _Node()
                node.children[e] = nxt
            node = nxt
        if not node.terminal:
            node.terminal = True
            self._size += 1

    @property
    def contains_empty(self) -> bool:
        return self._root.terminal

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    def __iter__(self) -> Iterator[FiniteSet]:
        def walk(node: _Node, prefix: FiniteSet) -> Iterator[FiniteSet]:
            if node.terminal:
                yield prefix
            for e in sorted(node.children):
                yield from walk(node.children[e], prefix + (e,))

        return walk(self._root, ())

    def members(self) -> list[FiniteSet]:
        return list(self)

    def __contains__(self, s: Iterable[int]) -> bool:
        node = self._root
        for e in finite_set(s):
            node = node.children.get(e)  # type: ignore[assignment]
            if node is None:
                return False
        return node.terminal

    def __eq__(self, other: object) -> bool:
        # equality is extensional on member sets; flags are metadata
        if not isinstance(other, Family):
            return NotImplemented
        return len(self) == len(other) and all(s in other for s in self)

    def __repr__(self) -> str:
        shown = ", ".join("{" + ",".join(map(str, s)) + "}" for s in itertools.islice(self, 6))
        more = ", ..." if len(self) > 6 else ""
        return f"Family([{shown}{more}], n={len(self)}, hereditary={self.hereditary_flag})"


def bounded_cardinality_family(window: Iterable[int], n: int) -> Family:
    """[window]^{<=n}: all subsets of the window of size at most n."""
    w = finite_set(window)
    sets = itertools.chain.from_iterable(
        itertools.combinations(w, k) for k in range(0, min(n, len(w)) + 1)
    )
    return Family(sets, hereditary=True)


def is_hereditary(family: Family) -> bool:
    """Exhaustively check closure under subsets (members must have size <= 20)."""
    for s in family:
        if len(s) > MAX_CLOSURE_SIZE:
            raise ValueError(f"member of size {len(s)} too large for exhaustive check")
        for k in range(len(s)):
            for t in itertools.combinations(s, k):
                if t not in family:
                    return False
    return True


def hereditary_closure(family: Family) -> Family:
    """The minimal hereditary family containing ``family``.

    Every subset of every member is included; in particular the empty set
    belongs to the closure of any nonempty family.
    """
    out = Family(hereditary=True)
    for s in family:
        if len(s) > MAX_CLOSURE_SIZE:
            raise ValueError(f"member of size {len(s)} too large for subset closure")
        for k in range(len(s) + 1):
            for t in itertools.combinations(s, k):
                out._insert(t)
    return out


def trace(family: Family, m: Iterable[int]) -> Family:
    """The trace {s & M : s in family}, deduplicated."""
    mset = set(finite_set(m))
    return Family((tuple(e for e in s if e in mset) for s in family), hereditary=None)


def restrict(family: Family, m: Iterable[int]) -> Family:
    """The restriction {s in family : s subset of M}."""
    mset = set(finite_set(m))
    return Family(
        (s for s in family if mset.issuperset(s)),
        hereditary=family.hereditary_flag,
    )


def oplus(f: Family, g: Family) -> Family:
    """Block sums {s | t : s in g, t in f, max s < min t}.

    ``s < t`` holds vacuously when either side is empty, so empty members
    of either operand contribute the other operand's sets unchanged.
    """
    out = Family()
    for s in g:
        for t in f:
            if not s or not t or s[-1] < t[0]:
                out._insert(s + t)
    return out


def otimes(f: Family, g: Family, window: Iterable[int]) -> Family:
    """Block products on a finite window.

    Members are unions s_1 | ... | s_k contained in the window, where the
    s_i are nonempty members of ``f`` with max s_i < min s_{i+1} and the set
    of minima {min s_i} belongs to ``g``.  The empty set is a member exactly
    when the empty set belongs to ``g`` (empty block sequence).
    """
    w = finite_set(window)
    wset = set(w)
    blocks_by_min: dict[int, list[FiniteSet]] = {}
    for s in f:
        if s and wset.issuperset(s):
            blocks_by_min.setdefault(s[0], []).append(s)

    out = Family()
    if g.contains_empty:
        out._insert(())

    def extend(g_node: _Node, last_max: int, prefix: FiniteSet) -> None:
        for m in sorted(g_node.children):
            if m <= last_max:
                continue
            child = g_node.children[m]
            for block in blocks_by_min.get(m, ()):
                if block[0] <= last_max:
                    continue
                union = prefix + block
                if child.terminal:
                    out._insert(union)
                extend(child, block[-1], union)

    extend(g._root, 0, ())
    return out


def largeness_witness(family: Family, k: Iterable[int], n: int) -> Optional[FiniteSet]:
    """First member s (in trie order) with #(s & K) >= n, or None."""
    kset = set(finite_set(k))
    for s in family:
        if sum(1 for e in s if e in kset) >= n:
            return s
    return None


@dataclass(frozen=True)
class UniformTraceResult:
    """Outcome of `find_uniform_trace`; budget exhaustion is distinct from absence."""

    status: str  # "found" | "absent" | "budget-exceeded"
    witness: Optional[FiniteSet]
    nodes_visited: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def find_uniform_trace(
    family: Family,
    t: Iterable[int],
    size: int,
    bound: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> UniformTraceResult:
    """Search for T0 within T with #T0 = size and all member traces of size <= bound.

    Subsets of T are scanned in lexicographic order.  The search charges one
    unit of budget per trie node visited; exceeding ``node_budget`` yields a
    ``budget-exceeded`` result rather than a silent "absent".
    """
    tt = finite_set(t)
    if size > len(tt):
        raise ValueError(f"size {size} exceeds #T = {len(tt)}")
    visited = 0

    def some_trace_exceeds(t0: frozenset[int]) -> Optional[bool]:
        # True iff some member meets t0 in more than `bound` points.
        # None signals budget exhaustion.
        nonlocal visited
        stack = [(family._root, 0)]
        while stack:
            node, cnt = stack.pop()
            if cnt > bound:
                return True
            for e, child in node.children.items():
                visited += 1
                if visited > node_budget:
                    return None
                stack.append((child, cnt + (1 if e in t0 else 0)))
        return False

    for combo in itertools.combinations(tt, size):
        exceeded = some_trace_exceeds(frozenset(combo))
        if exceeded is None:
            return UniformTraceResult("budget-exceeded", None, visited)
        if not exceeded:
            return UniformTraceResult("found", combo, visited)
    return UniformTraceResult("absent", None, visited)


def best_set_sum(family: Family, weights: Mapping[int, Fraction]) -> Fraction:
    """max over members s of sum(weights[e] for e in s), weights >= 0.

    Exact branch-and-bound on the trie: a branch entered at element e is cut
    when the running sum plus the total weight sitting at indices >= e cannot
    beat the incumbent.  Elements without a weight count as zero.
    """
    best = Fraction(0)
    if not family:
        return best
    support = sorted(weights)
    # suffix[i] = total weight at support positions i..end
    suffix: list[Fraction] = [Fraction(0)] * (len(support) + 1)
    for i in range(len(support) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[support[i]]

    def tail_from(e: int) -> Fraction:
        return suffix[bisect.bisect_left(support, e)]

    def walk(node: _Node, acc: Fraction) -> None:
        nonlocal best
        if node.terminal and acc > best:
            best = acc
        for e in node.children:
            if acc + tail_from(e) <= best:
                continue
            walk(node.children[e], acc + weights.get(e, Fraction(0)))

    walk(family._root, Fraction(0))
    return best


class PartitionMeasure:
    """Disjoint finite pieces I_1, I_2, ... with a probability weight on each.

    Pieces are indexed 1-based by their position.  Weights are exact positive
    rationals summing to 1 on each piece.
    """

    __slots__ = ("pieces", "weights", "_piece_of")

    def __init__(
        self,
        pieces: Iterable[Iterable[int]],
        weights: Optional[Iterable[Mapping[int, Fraction]]] = None,
    ) -> None:
        self.pieces: tuple[FiniteSet, ...] = tuple(finite_set(p) for p in pieces)
        if any(not p for p in self.pieces):
            raise ValueError("pieces must be nonempty")
        self._piece_of: dict[int, int] = {}
        for idx, p in enumerate(self.pieces, start=1):
            for e in p:
                if e in self._piece_of:
                    raise ValueError(f"pieces are not disjoint at element {e}")
                self._piece_of[e] = idx
        if weights is None:
            self.weights = tuple(
                {e: Fraction(1, len(p)) for e in p} for p in self.pieces
            )
        else:
            self.weights = tuple(dict(w) for w in weights)
            if len(self.weights) != len(self.pieces):
                raise ValueError("one weight map per piece required")
            for p, w in zip(self.pieces, self.weights):
                if set(w) != set(p):
                    raise ValueError(f"weight map keys {sorted(w)} != piece {list(p)}")
                if any(v <= 0 for v in w.values()):
                    raise ValueError("weights must be positive")
                if sum(w.values()) != 1:
                    raise ValueError(f"weights on piece {list(p)} sum to {sum(w.values())}, not 1")

    @classmethod
    def uniform(cls, pieces: Iterable[Iterable[int]]) -> "PartitionMeasure":
        return cls(pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def piece_index(self, element: int) -> int:
        idx = self._piece_of.get(element)
        if idx is None:
            raise ValueError(f"element {element} lies outside every piece")
        return idx

    def split(self, s: FiniteSet) -> dict[int, list[int]]:
        """Partition the elements of s by piece index; error on stray elements."""
        out: dict[int, list[int]] = {}
        for e in s:
            out.setdefault(self.piece_index(e), []).append(e)
        return out


def _check_density(value: Fraction, name: str) -> Fraction:
    value = Fraction(value)
    if not 0 < value <= 1:
        raise ValueError(f"{name} must lie in (0, 1], got {value}")
    return value


def g_lambda(family: Family, measure: PartitionMeasure, lam: Fraction) -> Family:
    """{s[lam] : s in family} where s[lam] = {n : #(s & I_n) >= lam * #I_n}.

    Uses counting measure on the pieces regardless of the measure's weights.
    """
    lam = _check_density(lam, "lambda")
    out = Family()
    for s in family:
        hit = [n for n, part in measure.split(s).items()
               if len(part) >= lam * len(measure.pieces[n - 1])]
        out._insert(tuple(sorted(hit)))
    return out


def g_plus(family: Family, measure: PartitionMeasure) -> Family:
    """{s[+] : s in family} where s[+] = {n : s & I_n nonempty}."""
    out = Family()
    for s in family:
        out._insert(tuple(sorted(measure.split(s))))
    return out


def g_delta_mu(family: Family, measure: PartitionMeasure, delta: Fraction) -> Family:
    """Sets t with some s in family putting mu_n-mass >= delta on every piece n in t.

    For each member s the maximal such t is {n : mu_n(s & I_n) >= delta};
    the family returned is the hereditary closure of these maximal sets
    (every subset works with the same witness s).
    """
    delta = _check_density(delta, "delta")
    tops = Family()
    for s in family:
        hit = []
        for n, part in measure.split(s).items():
            mass = sum(measure.weights[n - 1][e] for e in part)
            if mass >= delta:
                hit.append(n)
        tops._insert(tuple(sorted(hit)))
    return hereditary_closure(tops) if tops else Family()
