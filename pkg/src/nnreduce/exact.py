"""Exact minimum reduced training sets by pruned enumeration.

Every decision wall of P has to reappear as a wall of any reduced subset, so
the subset must contain both points of some pair that is mirror-symmetric
across that wall's line, with matching labels on matching sides.  Candidates
are supersets of such transversals, smallest first.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .equivalence import is_reduced_training_set
from .geometry import bisector, reflect
from .model import LabelledPointSet, WallPiece


class BudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_size: Optional[int] = None
    node_limit: int = 2_000_000
    time_limit: float = 600.0

    def __post_init__(self):
        if self.max_size is not None and self.max_size < 1:
            raise ValueError("max_size must be positive")
        if self.node_limit < 1 or self.time_limit <= 0:
            raise ValueError("budget limits must be positive")


@dataclass
class ExactResult:
    subset: Tuple[int, ...]
    optimal: bool
    nodes: int = 0
    oracle_calls: int = 0
    lower_bound: int = 1

    @property
    def size(self) -> int:
        return len(self.subset)


def wall_pair_families(P: LabelledPointSet) -> List[Tuple[WallPiece, Tuple[Tuple[int, int], ...]]]:
    """For each decision wall, every pair (a, b) of P that could generate it:
    b is a's mirror image across the wall, a sits on p_i's side with p_i's
    label and b carries p_j's label."""
    where = {p: k for k, p in enumerate(P.points)}
    out = []
    for w in P.boundary.walls:
        ci, cj = P.labels[w.i], P.labels[w.j]
        pairs = []
        if P.d == 1:
            b2 = P.points[w.i][0] + P.points[w.j][0]
            side = P.points[w.i][0] < P.points[w.j][0]
            for a, pa in enumerate(P.points):
                if P.labels[a] != ci or (pa[0] < b2 / 2) != side:
                    continue
                b = where.get((b2 - pa[0],))
                if b is not None and P.labels[b] == cj:
                    pairs.append((a, b))
        else:
            line = bisector(P.points[w.i], P.points[w.j])
            side = line.value(P.points[w.i]) > 0
            for a, pa in enumerate(P.points):
                if P.labels[a] != ci:
                    continue
                va = line.value(pa)
                if va == 0 or (va > 0) != side:
                    continue
                b = where.get(reflect(pa, line))
                if b is not None and P.labels[b] == cj:
                    pairs.append((a, b))
        out.append((w, tuple(sorted(pairs))))
    return out


def _excluded(P: LabelledPointSet, w: WallPiece, a: int) -> FrozenSet[int]:
    """Points strictly nearer than a along the whole of w; none of them can
    sit in a subset where a generates any part of w."""
    pa = P.points[a]
    out = []
    for z, pz in enumerate(P.points):
        if z == a:
            continue
        if P.d == 1:
            x = w.start[0]
            if (x - pz[0]) ** 2 < (x - pa[0]) ** 2:
                out.append(z)
            continue

        def h(y):
            return ((y[0] - pz[0]) ** 2 + (y[1] - pz[1]) ** 2
                    - (y[0] - pa[0]) ** 2 - (y[1] - pa[1]) ** 2)

        if h(w.start) >= 0:
            continue
        if w.kind == "segment":
            ok = h(w.end) < 0
        else:
            slope = w.direction[0] * (pa[0] - pz[0]) + w.direction[1] * (pa[1] - pz[1])
            ok = slope <= 0 if w.kind == "ray" else slope == 0
        if ok:
            out.append(z)
    return frozenset(out)


def wall_options(P: LabelledPointSet):
    """Per decision wall: the candidate generating pairs, each with the set of
    points it forces out of the subset."""
    out = []
    for w, pairs in wall_pair_families(P):
        opts = []
        for a, b in pairs:
            excl = _excluded(P, w, a) | _excluded(P, w, b)
            if a in excl or b in excl:  # pragma: no cover - geometrically impossible
                continue
            opts.append((frozenset((a, b)), excl))
        out.append((w, tuple(opts)))
    return out


class _Search:
    def __init__(self, P: LabelledPointSet, budget: SearchBudget):
        self.P = P
        self.budget = budget
        self.nodes = 0
        self.calls = 0
        self.seen: Set[FrozenSet[int]] = set()
        self.deadline = time.monotonic() + budget.time_limit
        uniq = {}
        for _, opts in wall_options(P):
            uniq.setdefault(opts, None)
        self.families = sorted(uniq, key=len)

    def tick(self, amount: int = 1):
        self.nodes += amount
        if self.nodes > self.budget.node_limit or time.monotonic() > self.deadline:
            raise BudgetExhausted

    def _open_options(self, S, X, done, k):
        """Per uncommitted family, its options still compatible with (S, X)."""
        res = []
        for f, fam in enumerate(self.families):
            if f in done:
                continue
            opts = []
            for pair, excl in fam:
                if pair & X or excl & S or excl & pair:
                    continue
                T = S | pair
                if len(T) <= k:
                    opts.append((T, X | excl))
            res.append((f, opts))
        return res

    @staticmethod
    def _lower_bound(S, open_opts) -> int:
        """Disjoint packing: families whose possible new points never overlap
        each need their own new points."""
        used: Set[int] = set()
        bound = 0
        for _, opts in sorted(open_opts, key=lambda t: len(t[1])):
            need = [T - S for T, _ in opts]
            pts = set().union(*need)
            if pts & used:
                continue
            used |= pts
            bound += min(len(x) for x in need)
        return bound

    def bases(self, k: int):
        """Pairs (S, X): S meets every wall family through a pair whose
        forced-out set X avoids S; every equivalent subset of size <= k
        contains some such S and avoids its X."""
        out: Dict[FrozenSet[int], Set[FrozenSet[int]]] = {}
        visited = set()

        def rec(S, X, done):
            key = (S, X, done)
            if key in visited:
                return
            visited.add(key)
            self.tick()
            open_opts = self._open_options(S, X, done, k)
            if not open_opts:
                out.setdefault(S, set()).add(X)
                return
            if any(not opts for _, opts in open_opts):
                return
            if len(S) + self._lower_bound(S, open_opts) > k:
                return
            f, opts = min(open_opts, key=lambda t: len(t[1]))
            for T, Y in sorted(opts, key=lambda t: (len(t[0]), sorted(t[0]), sorted(t[1]))):
                rec(T, Y, done | {f})

        rec(frozenset(), frozenset(), frozenset())
        res = []
        for S, Xs in out.items():
            # keep only the least restrictive exclusion sets
            for X in Xs:
                if not any(Y < X for Y in Xs):
                    res.append((S, X))
        return sorted(res, key=lambda t: (len(t[0]), sorted(t[0]), sorted(t[1])))

    def min_transversals(self) -> Tuple[int, List[FrozenSet[int]]]:
        """Smallest size of a base, and all bases of that size."""
        for k in range(0, self.P.n + 1):
            found = sorted({S for S, _ in self.bases(k) if len(S) == k}, key=sorted)
            if found:
                return k, found
        raise AssertionError("the full set is always a base")  # pragma: no cover

    def try_size(self, k: int, collect: Optional[list] = None) -> Optional[Tuple[int, ...]]:
        n = self.P.n
        for base, X in self.bases(k):
            rest = [x for x in range(n) if x not in base and x not in X]
            if len(rest) < k - len(base):
                continue
            for extra in combinations(rest, k - len(base)):
                cand = base.union(extra)
                if cand in self.seen:
                    continue
                self.seen.add(cand)
                self.tick()
                self.calls += 1
                if is_reduced_training_set(self.P, cand).equivalent:
                    if collect is None:
                        return tuple(sorted(cand))
                    collect.append(tuple(sorted(cand)))
        return collect[0] if collect else None


def _fallback(P: LabelledPointSet) -> Tuple[int, ...]:
    from .relevant import relevant_points_by_walls

    rel = relevant_points_by_walls(P).indices
    if rel and is_reduced_training_set(P, rel).equivalent:
        return rel
    if not rel and len(set(P.labels)) == 1:
        return (0,)
    return tuple(range(P.n))


def min_reduced(P: LabelledPointSet, budget: Optional[SearchBudget] = None) -> ExactResult:
    """Smallest subset passing the equivalence oracle."""
    budget = budget or SearchBudget()
    search = _Search(P, budget)
    top = min(P.n, budget.max_size or P.n)
    k = 1
    try:
        while k <= top:
            found = search.try_size(k)
            if found is not None:
                return ExactResult(found, True, search.nodes, search.calls, k)
            k += 1
    except BudgetExhausted:
        return ExactResult(_fallback(P), False, search.nodes, search.calls, k)
    # nothing up to max_size; the full set is always a solution
    return ExactResult(_fallback(P), top >= P.n, search.nodes, search.calls, k)


def all_minimum_subsets(P: LabelledPointSet, budget: Optional[SearchBudget] = None,
                        required: Sequence[int] = ()) -> Tuple[List[Tuple[int, ...]], bool]:
    """Every minimum-size equivalent subset (optionally all containing
    ``required``), and whether the search ran to completion."""
    budget = budget or SearchBudget()
    search = _Search(P, budget)
    req = frozenset(required)
    top = min(P.n, budget.max_size or P.n)
    try:
        for k in range(max(1, len(req)), top + 1):
            found: list = []
            search.try_size(k, found)
            found = [s for s in found if req.issubset(s)]
            if found:
                return sorted(found), True
    except BudgetExhausted:
        return [], False
    return [], True


@dataclass
class Decision:
    answer: str                     # "yes" | "no" | "unknown"
    certificate: Optional[Tuple[int, ...]] = None
    nodes: int = 0


def decide(P: LabelledPointSet, k: int, budget: Optional[SearchBudget] = None) -> Decision:
    """Is there a reduced training set with at most k points?"""
    if k < 1:
        raise ValueError("k must be at least 1")
    budget = budget or SearchBudget()
    search = _Search(P, budget)
    try:
        for size in range(1, min(k, P.n) + 1):
            found = search.try_size(size)
            if found is not None:
                return Decision("yes", found, search.nodes)
    except BudgetExhausted:
        return Decision("unknown", None, search.nodes)
    if k >= P.n:  # pragma: no cover - the full set always qualifies
        return Decision("yes", tuple(range(P.n)), search.nodes)
    return Decision("no", None, search.nodes)
