"""Gadget-scale checks: minimality of truth subsets, clause completion
counts, and the swap spot checks for the variable gadget."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from ..equivalence import is_reduced_training_set
from ..exact import SearchBudget, _Search, wall_options
from ..model import LabelledPointSet
from .cells import CellComplex, GadgetError
from .gadgets import (DEFAULT, LayoutConstants, Step, build_channel, build_clause_gadget,
                      build_variable_gadget, straight)

F = Fraction


@dataclass
class MinimalityProof:
    size: int
    minima: List[Tuple[int, ...]]
    only_truth_subsets: bool


def prove_two_minima(cx: CellComplex, group: str = "x",
                     budget: Optional[SearchBudget] = None) -> MinimalityProof:
    """Every equivalent subset contains a wall transversal; when the smallest
    transversals are exactly the T and F subsets and both pass the oracle,
    they are the only minimum reduced sets."""
    P = cx.point_set()
    T, Fs = cx.selection({group: "T"}), cx.selection({group: "F"})
    for s in (T, Fs):
        v = is_reduced_training_set(P, s)
        if not v.equivalent:
            raise GadgetError(f"truth subset fails: {v.describe()}")
    if len(T) != len(Fs):
        raise GadgetError("truth subsets differ in size")
    k, bases = _Search(P, budget or SearchBudget()).min_transversals()
    minima = [tuple(sorted(b)) for b in bases]
    only = k == len(T) and sorted(minima) == sorted({T, Fs})
    return MinimalityProof(k, minima, only)


def channel_fixture(kind: str, constants: LayoutConstants = DEFAULT) -> CellComplex:
    """Short channel prototypes: straight, bend, double bend, stretch, narrow."""
    u0 = (F(0), F(1))
    c, s = constants.bend_cos, constants.bend_sin
    u1 = (s, c)
    start = {"T": (F(0), F(0)), "F": (F(0), -constants.delta)}
    routes = {
        "straight": straight(5, u0),
        "bend": straight(2, u0) + straight(3, u1),
        "double-bend": straight(2, u0) + straight(3, u1) + straight(2, u0),
        "stretch": straight(2, u0) + [Step(u0, F(3), F(1))] + straight(2, u0),
        "narrow": straight(2, u0) + [Step(u0, F(2), F(1), constants.narrow)]
                  + straight(2, u0, half_width=constants.narrow),
        # narrowing without room to do it: a spurious wall appears
        "narrow-unstretched": straight(2, u0) + [Step(u0, F(1), F(1), constants.narrow)]
                              + straight(2, u0, half_width=constants.narrow),
    }
    if kind not in routes:
        raise ValueError(f"unknown channel fixture {kind!r}")
    cx = CellComplex()
    build_channel(cx, "x", "c", start, routes[kind])
    return cx


def checked_channel(kind: str, constants: LayoutConstants = DEFAULT) -> CellComplex:
    """Build a channel prototype and reject it unless both truth subsets
    pass the oracle."""
    cx = channel_fixture(kind, constants)
    P = cx.point_set()
    for phase in ("T", "F"):
        v = is_reduced_training_set(P, cx.selection({"x": phase}))
        if not v.equivalent:
            raise GadgetError(f"channel {kind!r} rejected ({phase}): {v.describe()}")
    return cx


# ---------------------------------------------------------------------------
# clause

def clause_fixture(constants: LayoutConstants = DEFAULT, reach: Fraction = F(5, 2),
                   stub: int = 3) -> Tuple[CellComplex, object]:
    """Clause cell fed by two short channels ("L" and "R") ending at
    a1 = (0, 0) and a2 = (clause_dx, clause_dy)."""
    cx = CellComplex()
    u = (F(0), F(1))
    d = constants.delta
    a1 = (F(0), F(0))
    a2 = (constants.clause_dx, constants.clause_dy)
    for g, a in (("L", a1), ("R", a2)):
        length = 2 * stub + reach - 1
        y0 = a[1] - length
        steps = [Step(u, F(1), F(1), constants.narrow) for _ in range(stub)]
        steps[-1] = Step(u, F(1), reach, constants.narrow)
        build_channel(cx, g, g, {"T": (a[0], y0), "F": (a[0], y0 - d)}, steps)
    clause = build_clause_gadget(cx, "C", a1, a2, constants=constants)
    return cx, clause


def clause_completion_counts(constants: LayoutConstants = DEFAULT) -> Dict[Tuple[bool, bool], int]:
    """For each presence pattern of (a1, a2): the fewest clause-only points
    that complete an equivalent subset, found by trying every subset of the
    clause's own points in order of size."""
    cx, _ = clause_fixture(constants)
    P = cx.point_set()
    # a subset missing every generating pair of some wall cannot be equivalent
    families = [opts for _, opts in wall_options(P)]

    def may_pass(S):
        return all(any(pair <= S and not (excl & S) for pair, excl in opts) for opts in families)

    own = [k for k in cx.indices_of_group("C")
           if all(g == "C" for g, _ in cx.records[cx.order[k]].tags)]
    out = {}
    for on1 in (True, False):
        for on2 in (True, False):
            fixed = set(cx.selection({"L": "T" if on1 else "F", "R": "T" if on2 else "F"}))
            best = None
            for size in range(len(own) + 1):
                for extra in combinations(own, size):
                    S = fixed.union(extra)
                    if may_pass(S) and is_reduced_training_set(P, S).equivalent:
                        best = size
                        break
                if best is not None:
                    break
            out[(on1, on2)] = best
    return out


# ---------------------------------------------------------------------------
# swap checks

def min_containing(P: LabelledPointSet, required: Sequence[int],
                   budget: Optional[SearchBudget] = None) -> Optional[Tuple[int, ...]]:
    """Smallest equivalent subset that contains ``required``."""
    search = _Search(P, budget or SearchBudget())
    req = frozenset(required)
    for k in range(len(req), P.n + 1):
        for base, X in search.bases(k):
            if req & X:
                continue
            core = base | req
            if len(core) > k:
                continue
            rest = [x for x in range(P.n) if x not in core and x not in X]
            for extra in combinations(rest, k - len(core)):
                cand = core.union(extra)
                if cand in search.seen:
                    continue
                search.seen.add(cand)
                search.tick()
                if is_reduced_training_set(P, cand).equivalent:
                    return tuple(sorted(cand))
    return None  # pragma: no cover - the full set always works


def swap_checks(columns: int = 5, constants: LayoutConstants = DEFAULT,
                budget: Optional[SearchBudget] = None) -> Dict[str, Tuple[int, int]]:
    """For the minimal variable gadget: with every point of the upper
    (resp. lower) row forced in, the cheapest equivalent subset is strictly
    larger than a pure truth subset.  Returns {row: (forced size, truth size)}."""
    cx = CellComplex()
    build_variable_gadget(cx, "x", columns, (), constants=constants)
    P = cx.point_set()
    truth = len(cx.selection({"x": "T"}))
    out = {}
    for row in ("top", "bottom"):
        half = [k for k, p in enumerate(cx.order)
                if any(r.split(":")[0].startswith(f"x.{row}") for r in cx.records[p].roles)]
        best = min_containing(P, half, budget)
        if best is None or len(best) <= truth:
            raise GadgetError(f"forcing the {row} row does not cost extra")
        out[row] = (len(best), truth)
    return out
