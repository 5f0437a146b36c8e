"""Minimum reduced training sets on the line.

The classification of a 1D instance cuts the line into open regions of
constant label.  A k-chain is k points, one per consecutive region, whose
consecutive midpoints are exactly the boundary points between those regions.
An optimal subset is a union of pairwise compatible chains that covers every
boundary; picking the chains is a weighted independent set problem on the
interval graph of their spans.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .model import InstanceError, LabelledPointSet


@dataclass(frozen=True)
class RegionDecomposition:
    """Regions C_1..C_t (as label list) and boundary points b_1..b_{t-1}."""
    labels: Tuple[int, ...]
    boundaries: Tuple[Fraction, ...]

    @property
    def t(self) -> int:
        return len(self.labels)

    def region_of(self, x: Fraction) -> Optional[int]:
        """0-based region index of x, or None when x is a boundary point."""
        k = bisect_left(self.boundaries, x)
        if k < len(self.boundaries) and self.boundaries[k] == x:
            return None
        return k

    def interval(self, k: int) -> Tuple[Optional[Fraction], Optional[Fraction]]:
        lo = self.boundaries[k - 1] if k > 0 else None
        hi = self.boundaries[k] if k < len(self.boundaries) else None
        return lo, hi

    def sample(self, k: int) -> Fraction:
        """Some point inside region k."""
        lo, hi = self.interval(k)
        if lo is None and hi is None:
            return Fraction(0)
        if lo is None:
            return hi - 1
        if hi is None:
            return lo + 1
        return (lo + hi) / 2


def decompose(P: LabelledPointSet) -> RegionDecomposition:
    if P.d != 1:
        raise InstanceError("decompose needs a 1D instance")
    order = sorted(range(P.n), key=lambda k: P.points[k])
    labels = [P.labels[order[0]]]
    bounds = []
    for a, b in zip(order, order[1:]):
        if P.labels[a] != P.labels[b]:
            bounds.append((P.points[a][0] + P.points[b][0]) / 2)
            labels.append(P.labels[b])
    return RegionDecomposition(tuple(labels), tuple(bounds))


@dataclass(frozen=True)
class Chain:
    """Members (point indices, ascending position) in regions
    ``start .. start + k - 1``; covers boundaries ``start .. start + k - 2``
    (0-based)."""
    members: Tuple[int, ...]
    start: int
    lo: Fraction
    hi: Fraction

    @property
    def k(self) -> int:
        return len(self.members)

    @property
    def weight(self) -> Tuple[int, int]:
        # savings first, chain count as the infinitesimal tiebreak
        return (self.k - 2, 1)

    @property
    def covered(self) -> range:
        return range(self.start, self.start + self.k - 1)


def enumerate_chains(decomp: RegionDecomposition, P: LabelledPointSet) -> List[Chain]:
    """Every chain of length >= 2: each boundary-straddling symmetric pair
    seeds a chain whose extension to the right is forced."""
    if decomp.t < 2:
        return []
    where: Dict[Fraction, int] = {p[0]: k for k, p in enumerate(P.points)}
    region = {k: decomp.region_of(P.points[k][0]) for k in range(P.n)}
    out = []
    B = decomp.boundaries
    for k in range(P.n):
        r = region[k]
        if r is None or r >= len(B):
            continue
        x = P.points[k][0]
        members = [k]
        cur, reg = x, r
        while reg < len(B):
            nxt = 2 * B[reg] - cur
            idx = where.get(nxt)
            if idx is None or region[idx] != reg + 1:
                break
            members.append(idx)
            cur, reg = nxt, reg + 1
            out.append(Chain(tuple(members), r, x, cur))
    return out


def mwis_chains(chains: Sequence[Chain]) -> List[Chain]:
    """Maximum (lexicographic) weight set of chains with pairwise disjoint
    closed spans [lo, hi]."""
    if not chains:
        return []
    cs = sorted(chains, key=lambda c: (c.hi, c.lo))
    his = [c.hi for c in cs]
    best: List[Tuple[int, int]] = [(0, 0)] * (len(cs) + 1)
    take: List[bool] = [False] * (len(cs) + 1)
    pred: List[int] = [0] * (len(cs) + 1)
    for n, c in enumerate(cs, start=1):
        # chains ending strictly left of c.lo
        p = bisect_left(his, c.lo, 0, n - 1)
        pred[n] = p
        w = c.weight
        cand = (best[p][0] + w[0], best[p][1] + w[1])
        if cand > best[n - 1]:
            best[n], take[n] = cand, True
        else:
            best[n] = best[n - 1]
    chosen = []
    n = len(cs)
    while n > 0:
        if take[n]:
            chosen.append(cs[n - 1])
            n = pred[n]
        else:
            n -= 1
    return sorted(chosen, key=lambda c: c.lo)


@dataclass
class Solution1D:
    subset: Tuple[int, ...]
    decomposition: RegionDecomposition
    chains: List[Chain] = field(default_factory=list)
    selected: List[Chain] = field(default_factory=list)
    completions: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.subset)

    @property
    def formula_size(self) -> int:
        t = self.decomposition.t
        if t < 2:
            return 1
        return 2 * (t - 1) - sum(c.k - 2 for c in self.selected)

    def explain(self, P: LabelledPointSet) -> str:
        from .geometry import format_rational as fr

        dec = self.decomposition
        lines = [f"regions t = {dec.t}: labels {list(dec.labels)}",
                 "boundaries: " + ", ".join(fr(b) for b in dec.boundaries)]
        lines.append(f"chains enumerated: {len(self.chains)}")
        for c in self.selected:
            pos = ", ".join(fr(P.points[k][0]) for k in c.members)
            lines.append(f"  selected {c.k}-chain from region {c.start + 1}: ({pos})")
        for a, b in self.completions:
            lines.append(f"  completion 2-chain: ({fr(P.points[a][0])}, {fr(P.points[b][0])})")
        if dec.t >= 2:
            sav = " + ".join(str(c.k - 2) for c in self.selected) or "0"
            lines.append(f"size = 2({dec.t}-1) - ({sav}) = {self.formula_size}")
        lines.append(f"subset size {self.size}")
        return "\n".join(lines)


def solve_1d(P: LabelledPointSet) -> Solution1D:
    dec = decompose(P)
    if dec.t == 1:
        return Solution1D((0,), dec)
    chains = enumerate_chains(dec, P)
    selected = mwis_chains(chains)
    covered = set()
    members = set()
    for c in selected:
        covered.update(c.covered)
        members.update(c.members)
    # any boundary the independent set left open gets the adjacent pair
    # (the lexicographic tiebreak makes this a no-op on every input we have
    # found; it stays as a guard)
    completions = []
    order = sorted(range(P.n), key=lambda k: P.points[k])
    pos = [P.points[k][0] for k in order]
    for b_idx, b in enumerate(dec.boundaries):
        if b_idx in covered:
            continue
        r = bisect_left(pos, b)
        pair = (order[r - 1], order[r])
        completions.append(pair)
        members.update(pair)
    return Solution1D(tuple(sorted(members)), dec, chains, selected, completions)
