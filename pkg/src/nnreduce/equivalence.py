"""Exact test of whether a subset induces the same classification everywhere.

In the plane the classification of a point set is constant on every face,
edge fragment and vertex of the arrangement cut out by its decision walls.
Overlaying the decision walls of P and of Q therefore gives a finite set of
witness points that decides equivalence exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .geometry import Line, Point, format_rational
from .model import InstanceError, LabelledPointSet, WallPiece


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    counterexample: Optional[Point] = None
    labels: Optional[Tuple[FrozenSet[int], FrozenSet[int]]] = None
    witnesses_checked: int = 0

    def __bool__(self) -> bool:
        return self.equivalent

    def describe(self) -> str:
        if self.equivalent:
            return "equivalent"
        pt = ", ".join(format_rational(c) for c in self.counterexample)
        fp, fq = (sorted(s) for s in self.labels)
        return f"differs at ({pt}): f_P = {fp}, f_Q = {fq}"


def _check_subset(P: LabelledPointSet, Q: Iterable[int]) -> Tuple[int, ...]:
    idx = tuple(sorted(set(int(k) for k in Q)))
    if not idx:
        raise InstanceError("Q must be non-empty")
    if idx[0] < 0 or idx[-1] >= P.n:
        raise InstanceError("Q is not a subset of P's indices")
    return idx


# 1D ------------------------------------------------------------------------

def is_equivalent_1d(P: LabelledPointSet, Q: Iterable[int]) -> EquivalenceVerdict:
    """Compare the sorted region decompositions of P and Q directly."""
    from .solver1d import decompose

    if P.d != 1:
        raise InstanceError("is_equivalent_1d needs a 1D instance")
    idx = _check_subset(P, Q)
    dp = decompose(P)
    dq = decompose(P.subset(idx))
    if dp.boundaries != dq.boundaries:
        b = min(set(dp.boundaries) ^ set(dq.boundaries))
        return _verdict_at(P, idx, (b,), checked=1)
    if dp.labels != dq.labels:
        k = next(k for k, (a, b) in enumerate(zip(dp.labels, dq.labels)) if a != b)
        return _verdict_at(P, idx, (dp.sample(k),), checked=1)
    return EquivalenceVerdict(True, witnesses_checked=len(dp.boundaries) + len(dp.labels))


def _verdict_at(P, idx, x: Point, checked: int) -> EquivalenceVerdict:
    fp, fq = _classify_pair(P, idx, x)
    if fp == fq:  # pragma: no cover - would mean the decomposition is wrong
        raise AssertionError(f"decomposition mismatch without a witness at {x}")
    return EquivalenceVerdict(False, x, (fp, fq), checked)


# classification at a witness -------------------------------------------------

def _classify_pair(P: LabelledPointSet, qmask, x: Point):
    """f_P(x) and f_Q(x) from a single pass over P."""
    if not isinstance(qmask, (set, frozenset)):
        qmask = frozenset(qmask)
    bp = bq = None
    lp: set = set()
    lq: set = set()
    if len(x) == 2:
        x0, x1 = x
        for k, p in enumerate(P.points):
            dx, dy = p[0] - x0, p[1] - x1
            dd = dx * dx + dy * dy
            c = P.labels[k]
            if bp is None or dd < bp:
                bp, lp = dd, {c}
            elif dd == bp:
                lp.add(c)
            if k in qmask:
                if bq is None or dd < bq:
                    bq, lq = dd, {c}
                elif dd == bq:
                    lq.add(c)
    else:
        for k, p in enumerate(P.points):
            dd = (p[0] - x[0]) ** 2
            c = P.labels[k]
            if bp is None or dd < bp:
                bp, lp = dd, {c}
            elif dd == bp:
                lp.add(c)
            if k in qmask:
                if bq is None or dd < bq:
                    bq, lq = dd, {c}
                elif dd == bq:
                    lq.add(c)
    return frozenset(lp), frozenset(lq)


# 2D overlay ----------------------------------------------------------------

@dataclass(frozen=True)
class _Piece:
    a: Point
    u: Tuple[Fraction, Fraction]
    lo: Optional[Fraction]
    hi: Optional[Fraction]
    line: Line
    box: Optional[Tuple[Fraction, Fraction, Fraction, Fraction]]

    def at(self, t) -> Point:
        return (self.a[0] + t * self.u[0], self.a[1] + t * self.u[1])

    def inside(self, t) -> bool:
        return (self.lo is None or t >= self.lo) and (self.hi is None or t <= self.hi)

    def param(self, p: Point) -> Fraction:
        # p is known to lie on the supporting line
        if self.u[0] != 0:
            return (p[0] - self.a[0]) / self.u[0]
        return (p[1] - self.a[1]) / self.u[1]


def _as_piece(w: WallPiece, P: LabelledPointSet) -> _Piece:
    from .geometry import bisector

    line = bisector(P.points[w.i], P.points[w.j])
    if w.kind == "segment":
        u = (w.end[0] - w.start[0], w.end[1] - w.start[1])
        box = (min(w.start[0], w.end[0]), max(w.start[0], w.end[0]),
               min(w.start[1], w.end[1]), max(w.start[1], w.end[1]))
        return _Piece(w.start, u, Fraction(0), Fraction(1), line, box)
    u = (Fraction(w.direction[0]), Fraction(w.direction[1]))
    if w.kind == "ray":
        return _Piece(w.start, u, Fraction(0), None, line, None)
    return _Piece(w.start, u, None, None, line, None)


def _boxes_apart(b1, b2) -> bool:
    if b1 is None or b2 is None:
        return False
    return b1[1] < b2[0] or b2[1] < b1[0] or b1[3] < b2[2] or b2[3] < b1[2]


def _cuts(pieces: Sequence[_Piece]) -> List[set]:
    cuts = [set() for _ in pieces]
    for k, pc in enumerate(pieces):
        for t in (pc.lo, pc.hi):
            if t is not None:
                cuts[k].add(t)
    for k1 in range(len(pieces)):
        p1 = pieces[k1]
        for k2 in range(k1 + 1, len(pieces)):
            p2 = pieces[k2]
            if _boxes_apart(p1.box, p2.box):
                continue
            cross = p1.u[0] * p2.u[1] - p1.u[1] * p2.u[0]
            dx, dy = p2.a[0] - p1.a[0], p2.a[1] - p1.a[1]
            if cross != 0:
                t = (dx * p2.u[1] - dy * p2.u[0]) / cross
                s = (dx * p1.u[1] - dy * p1.u[0]) / cross
                if p1.inside(t) and p2.inside(s):
                    cuts[k1].add(t)
                    cuts[k2].add(s)
            elif p1.line == p2.line:
                # collinear: endpoints of each cut the other
                for t in (p2.lo, p2.hi):
                    if t is not None:
                        s = p1.param(p2.at(t))
                        if p1.inside(s):
                            cuts[k1].add(s)
                for t in (p1.lo, p1.hi):
                    if t is not None:
                        s = p2.param(p1.at(t))
                        if p2.inside(s):
                            cuts[k2].add(s)
    return cuts


def _step_off(m: Point, normal, lines: Sequence[Line]) -> Tuple[Fraction, Fraction]:
    """Largest safe steps (forward, backward) along ``normal`` from m before
    meeting another wall line, halved."""
    fwd = bwd = None
    for ln in lines:
        rate = ln.a * normal[0] + ln.b * normal[1]
        if rate == 0:
            continue
        s = -ln.value(m) / rate
        if s > 0:
            fwd = s if fwd is None or s < fwd else fwd
        elif s < 0:
            bwd = -s if bwd is None or -s < bwd else bwd
    return (fwd / 2 if fwd is not None else Fraction(1),
            bwd / 2 if bwd is not None else Fraction(1))


def overlay_witnesses(pieces: Sequence[_Piece]) -> Iterator[Point]:
    """Vertices, edge-fragment midpoints, points just off each fragment on
    both sides, and far points along unbounded fragments."""
    cuts = _cuts(pieces)
    lines = sorted({pc.line for pc in pieces})
    verts = [pc.at(t) for pc, cs in zip(pieces, cuts) for t in cs]
    bound = max((max(abs(v[0]), abs(v[1])) for v in verts), default=Fraction(0))
    seen = set()
    for v in verts:
        if v not in seen:
            seen.add(v)
            yield v
    for pc, cs in zip(pieces, cuts):
        ts = sorted(cs)
        mids = []
        for t0, t1 in zip(ts, ts[1:]):
            mids.append((t0 + t1) / 2)
        if pc.lo is None:
            mids.append(ts[0] - 1 if ts else Fraction(0))
            if ts:
                mids.append(ts[0] - 1 - 2 * bound)
        if pc.hi is None:
            mids.append(ts[-1] + 1 if ts else Fraction(1))
            if ts:
                mids.append(ts[-1] + 1 + 2 * bound)
        normal = (-pc.u[1], pc.u[0])
        for t in mids:
            m = pc.at(t)
            if m not in seen:
                seen.add(m)
                yield m
            fwd, bwd = _step_off(m, normal, lines)
            for s in (fwd, -bwd):
                w = (m[0] + s * normal[0], m[1] + s * normal[1])
                if w not in seen:
                    seen.add(w)
                    yield w


def _decision_pieces(S: LabelledPointSet) -> List[_Piece]:
    return [_as_piece(w, S) for w in S.boundary.walls]


def is_reduced_training_set(P: LabelledPointSet, Q: Iterable[int]) -> EquivalenceVerdict:
    """Decide f_P == f_Q on all of R^d for an index subset Q of P.

    Label *sets* are compared, so ties on walls and at vertices count.
    """
    idx = _check_subset(P, Q)
    if P.d == 1:
        return is_equivalent_1d(P, idx)
    qmask = frozenset(idx)
    checked = 0

    def probe(x) -> Optional[EquivalenceVerdict]:
        nonlocal checked
        checked += 1
        fp, fq = _classify_pair(P, qmask, x)
        if fp != fq:
            return EquivalenceVerdict(False, x, (fp, fq), checked)
        return None

    # cheap refutations first: dropped points and P's own wall interiors
    for k in range(P.n):
        if k not in qmask:
            v = probe(P.points[k])
            if v is not None:
                return v
    for w in P.boundary.walls:
        v = probe(w.witness())
        if v is not None:
            return v
    Qs = P.subset(idx)
    for w in Qs.boundary.walls:
        v = probe(w.witness())
        if v is not None:
            return v
    pieces = _decision_pieces(P) + _decision_pieces(Qs)
    if not pieces:
        v = probe((Fraction(0), Fraction(0)))
        return v if v is not None else EquivalenceVerdict(True, witnesses_checked=checked)
    for x in overlay_witnesses(pieces):
        v = probe(x)
        if v is not None:
            return v
    return EquivalenceVerdict(True, witnesses_checked=checked)
