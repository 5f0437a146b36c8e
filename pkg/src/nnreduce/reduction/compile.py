"""Lay out a V-cycle max2SAT formula as a red/blue point set.

Variables sit left to right on one horizontal line.  Each clause is a chord
of the spine on the top or bottom page; its two channels leave their
variable gadgets vertically, tilt towards each other by one bend, straighten
again and end a clause offset apart, where the clause cell sits.  Nested
chords are stacked: an enclosing clause starts converging only above
everything nested inside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..equivalence import is_reduced_training_set
from ..model import LabelledPointSet
from .cells import BLUE, RED, CellComplex, GadgetError
from .gadgets import (DEFAULT, Attachment, Channel, ClauseGadget, LayoutConstants, Step,
                      VariableGadget, attachment_column_parity, attachment_steps,
                      build_channel, build_clause_gadget, build_variable_gadget, rotate)
from .sat import BookEmbedding, Max2SatInstance, two_page_assignment

F = Fraction

GAP_COLUMNS = 2          # empty columns between neighbouring variable gadgets
CLAUSE_CLEARANCE = F(12)  # vertical room reserved above a cap for its clause
CAP_REACH = F(5, 2)        # red centre to cap distance in a channel's last cell


@dataclass
class Leg:
    clause: int
    slot: int              # 0 -> a1 (left), 1 -> a2 (right)
    var: int
    positive: bool
    side: str
    attachment: Optional[Attachment] = None
    x: Optional[Fraction] = None
    channel: Optional[Channel] = None


@dataclass
class GadgetLayout:
    instance: Max2SatInstance
    embedding: BookEmbedding
    constants: LayoutConstants
    complex: CellComplex
    variables: List[VariableGadget]
    legs: List[Leg]
    clauses: List[ClauseGadget]
    point_set: LabelledPointSet
    n1: int
    n2: int
    ranges: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    verification: Dict[str, dict] = field(default_factory=dict)

    def target_size(self, k: int) -> int:
        return self.n1 + self.n2 - k

    def var_group(self, i: int) -> str:
        return f"x{i}"

    def clause_group(self, j: int) -> str:
        return f"C{j + 1}"

    def manifest(self) -> dict:
        return {
            "a": self.instance.a,
            "b": self.instance.b,
            "k": self.instance.k,
            "n": self.point_set.n,
            "n1": self.n1,
            "n2": self.n2,
            "target_size": f"{self.n1 + self.n2} - k",
            "target_for_k": self.target_size(self.instance.k),
            "pages": list(self.embedding.pages),
            "ranges": {g: list(r) for g, r in self.ranges.items()},
            "max_coordinate_bits": max_coordinate_bits(self.point_set),
        }


def max_coordinate_bits(P: LabelledPointSet) -> int:
    return max(max(c.numerator.bit_length(), c.denominator.bit_length())
               for p in P.points for c in p)


# ---------------------------------------------------------------------------
# combinatorial layout

def _legs(inst: Max2SatInstance, emb: BookEmbedding) -> List[Leg]:
    legs = []
    for j, clause in enumerate(inst.clauses):
        lits = list(clause) if len(clause) == 2 else [clause[0], clause[0]]
        side = emb.pages[j]
        # a1 is the left leg; for one variable the first literal goes left
        if lits[0][0] > lits[1][0]:
            lits.reverse()
        for slot, (v, pos) in enumerate(lits):
            legs.append(Leg(j, slot, v, pos, side))
    return legs


def _outerness(inst, emb, j):
    i, k = emb.chords[j]
    return (k - i, j)


def _assign_columns(inst, emb, legs) -> List[int]:
    """Order the legs of every variable side so that nested chords stay
    nested, then pick columns with the right parity and spacing."""
    columns = []
    for v in range(inst.a):
        last = {}
        for side in ("top", "bottom"):
            mine = [l for l in legs if l.var == v and l.side == side]

            def key(l):
                i, k = emb.chords[l.clause]
                span, idx = _outerness(inst, emb, l.clause)
                if i == k:                 # both legs here: innermost, left leg first
                    return (1, 0, l.slot)
                if k == v:                 # chord goes left: outer ones further left
                    return (0, -span, -idx)
                return (2, span, idx)      # chord goes right: outer ones further right

            mine.sort(key=key)
            # unit chords nest by outerness too: outer legs outside inner ones
            units = [l for l in mine if emb.chords[l.clause][0] == emb.chords[l.clause][1]]
            if units:
                order = sorted({l.clause for l in units}, key=lambda j: _outerness(inst, emb, j),
                               reverse=True)
                left = [next(l for l in units if l.clause == j and l.slot == 0) for j in order]
                right = [next(l for l in units if l.clause == j and l.slot == 1)
                         for j in reversed(order)]
                s = mine.index(units[0])
                mine = [l for l in mine if l not in units]
                mine[s:s] = left + right
            c = 0
            for l in mine:
                c = c + 3 if c else 1
                want = attachment_column_parity(side, l.positive)
                if c % 2 != want:
                    c += 1
                l.attachment = Attachment(c, side, l.positive)
            last[side] = c
        columns.append(max(5, max(last.values()) + 2))
    return columns


def _nesting(legs, emb, b):
    """Horizontal interval of every clause and the clauses nested inside it."""
    span = {}
    for j in range(b):
        xs = sorted(l.x for l in legs if l.clause == j)
        span[j] = (xs[0], xs[1])
    inside = {j: [] for j in range(b)}
    for j in range(b):
        for k in range(b):
            if j != k and emb.pages[j] == emb.pages[k] and span[j][0] < span[k][0] and span[k][1] < span[j][1]:
                inside[j].append(k)
    return span, inside


# ---------------------------------------------------------------------------
# routing

def _solve_straight(length: Fraction, u, half_width, last_out=F(1)) -> List[Step]:
    """Cells of total longitudinal length ``length`` (blue row to blue row),
    the slack absorbed by stretching the first cell."""
    if last_out != 1:
        steps = _solve_straight(length - last_out + 1, u, half_width)
        st = steps[-1]
        steps[-1] = Step(st.u, st.d_in, last_out, st.half_width)
        return steps
    n = max(1, math.floor(length / 2))
    first = length - 2 * (n - 1) - 1
    if first < 1:
        n -= 1
        first = length - 2 * (n - 1) - 1
    if n < 1 or first < 1:
        raise GadgetError(f"segment of length {length} too short")
    return [Step(u, first if k == 0 else F(1), F(1), half_width) for k in range(n)]


def _route(leg: Leg, shift: Fraction, y_bend: Fraction, y_cap: Fraction,
           start_T: Tuple[Fraction, Fraction], first: Step, facing_extra: Fraction,
           cst: LayoutConstants) -> List[Step]:
    """Steps for one leg: attachment cell, narrowing cell, vertical run to
    ``y_bend``, a tilted run moving sideways by ``shift``, and a final
    vertical run whose last blue row (facing point) lands at ``y_cap``."""
    s = 1 if leg.side == "top" else -1
    u0 = (F(0), F(s))
    w = cst.narrow
    steps = [first, Step(u0, F(2), F(1), w)]
    y = start_T[1] + s * (first.d_in + first.d_out + 3)   # blue row after those two
    run = s * (y_bend - y)
    steps += _solve_straight(run, u0, w)
    y = y_bend
    if shift:
        sign = 1 if shift > 0 else -1
        # tilt towards the partner: rotate u0 so it gains an x component of sign
        sn = cst.bend_sin if sign * s > 0 else -cst.bend_sin
        u1 = rotate(u0, cst.bend_cos, -sn)
        length = abs(shift) / cst.bend_sin
        steps += _solve_straight(length, u1, w)
        y = y + s * length * cst.bend_cos
    run = s * (y_cap - y) - facing_extra
    # a long last cell keeps its side shields away from the clause apex
    steps += _solve_straight(run, u0, w, CAP_REACH)
    return steps


def compile_instance(inst: Max2SatInstance, constants: LayoutConstants = DEFAULT,
                     verify: bool = True) -> GadgetLayout:
    emb = two_page_assignment(inst)
    cst = constants
    legs = _legs(inst, emb)
    cols = _assign_columns(inst, emb, legs)

    cx = CellComplex()
    variables = []
    x0 = F(0)
    for v in range(inst.a):
        atts = [l.attachment for l in legs if l.var == v]
        g = build_variable_gadget(cx, f"x{v}", cols[v], atts, (x0, F(0)), cst)
        variables.append(g)
        for l in legs:
            if l.var == v:
                l.x = g.column_x(l.attachment.column)
        x0 += (cols[v] + GAP_COLUMNS) * cst.pitch

    span, inside = _nesting(legs, emb, inst.b)
    order = sorted(range(inst.b), key=lambda j: len(inside[j]))
    top_of: Dict[int, Fraction] = {}     # distance from the spine to the clause's top
    clauses: Dict[int, ClauseGadget] = {}
    base = F(10)
    for j in order:
        side = emb.pages[j]
        s = 1 if side == "top" else -1
        left, right = sorted((l for l in legs if l.clause == j), key=lambda l: l.slot)
        dx = right.x - left.x
        if dx < cst.clause_dx:
            raise GadgetError("clause legs closer than the clause offset")  # pragma: no cover
        shift = (dx - cst.clause_dx) / 2
        climb = shift / cst.bend_sin * cst.bend_cos
        bend_at = max([base] + [top_of[k] + 3 for k in inside[j]])
        cap = bend_at + climb + 6
        caps = {0: cap, 1: cap + cst.clause_dy}
        for leg, sh in ((left, shift), (right, -shift)):
            att = leg.attachment
            g = variables[leg.var]
            start = g.starts[att]
            first = attachment_steps(att, g)
            # facing point sits delta further along u than T when F faces
            facing_extra = cst.delta if (att.positive is False) else F(0)
            steps = _route(leg, sh, s * bend_at, s * caps[leg.slot], start["T"], first,
                           facing_extra, cst)
            leg.channel = build_channel(cx, f"x{leg.var}", f"x{leg.var}.ch{j + 1}.{leg.slot}",
                                        start, steps)
            want = "T" if leg.positive else "F"
            if leg.channel.cap.facing_phase != want:
                raise GadgetError(f"channel of clause {j + 1} exposes the wrong phase")
        a1, a2 = left.channel.cap.facing, right.channel.cap.facing
        clauses[j] = build_clause_gadget(cx, f"C{j + 1}", a1, a2, flip=(side == "bottom"),
                                         constants=cst)
        top_of[j] = cap + CLAUSE_CLEARANCE

    layout = _assemble(inst, emb, cst, cx, variables, legs, [clauses[j] for j in range(inst.b)])
    if verify:
        verify_layout(layout)
    return layout


def _owner(rec) -> str:
    groups = sorted({g for g, _ in rec.tags if g != "*"}, key=_group_key)
    return groups[0] if groups else "*"


def _group_key(g: str):
    return (0 if g.startswith("x") else 1, int(g[1:]))


def _assemble(inst, emb, cst, cx, variables, legs, clauses) -> GadgetLayout:
    # contiguous index ranges per gadget: variable groups first, then clauses
    by_owner: Dict[str, List] = {}
    for p in cx.order:
        by_owner.setdefault(_owner(cx.records[p]), []).append(p)
    cx.order = [p for g in sorted(by_owner, key=_group_key) for p in by_owner[g]]
    ranges, k = {}, 0
    for g in sorted(by_owner, key=_group_key):
        ranges[g] = (k, k + len(by_owner[g]))
        k += len(by_owner[g])
    P = cx.point_set()
    n1 = None
    for phase in ("T", "F"):
        size = len(cx.selection({f"x{v}": phase for v in range(inst.a)}))
        if n1 is None:
            n1 = size
        elif size != n1:
            raise GadgetError("truth subsets differ in size")
    return GadgetLayout(inst, emb, cst, cx, variables, legs, clauses, P, n1, 5 * inst.b, ranges)


# ---------------------------------------------------------------------------

def clause_choice(inst: Max2SatInstance, j: int, assignment: Sequence[bool]) -> str:
    clause = inst.clauses[j]
    lits = list(clause) if len(clause) == 2 else [clause[0], clause[0]]
    if lits[0][0] > lits[1][0]:
        lits.reverse()
    val = [assignment[v] == pos for v, pos in lits]
    if val[0]:
        return "alpha"
    if val[1]:
        return "beta"
    return "gamma"


def assignment_to_subset(layout: GadgetLayout, assignment: Sequence[bool]) -> Tuple[int, ...]:
    inst = layout.instance
    if len(assignment) != inst.a:
        raise ValueError(f"assignment needs {inst.a} values")
    choice = {f"x{v}": "T" if assignment[v] else "F" for v in range(inst.a)}
    for j in range(inst.b):
        choice[f"C{j + 1}"] = clause_choice(inst, j, assignment)
    return layout.complex.selection(choice)


# ---------------------------------------------------------------------------
# build-time checks

def ring_probes(points: Sequence, count: int = 128, margin: Fraction = F(3)):
    """Rational points on a circle around the bounding box."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    cx_, cy_ = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
    r = max(max(xs) - min(xs), max(ys) - min(ys)) + margin
    out = []
    for k in range(count):
        # rational parametrisation of the unit circle, covering all quadrants
        t = F(2 * k - count, count) * 2
        c, s = (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)
        out.append((cx_ + r * c, cy_ + r * s))
    return out


def verify_group(cx: CellComplex, group: str, probes: int = 128) -> dict:
    """Truth subsets of one group, taken in isolation: both equivalent to the
    group's own points, equal in size, and blue on an exterior ring."""
    from ..model import classify

    idx = cx.indices_of_group(group)
    pts = [cx.order[k] for k in idx]
    P = LabelledPointSet(pts, [cx.records[p].label for p in pts], m=2)
    alts = sorted({a for p in pts for g, a in cx.records[p].tags if g == group})
    subsets = {}
    for alt in alts:
        subsets[alt] = tuple(k for k, p in enumerate(pts) if (group, alt) in cx.records[p].tags)
    sizes = {a: len(s) for a, s in subsets.items()}
    report = {"points": P.n, "sizes": sizes, "equivalent": {}, "ring": probes}
    for alt, s in subsets.items():
        v = is_reduced_training_set(P, s)
        report["equivalent"][alt] = v.equivalent
        if not v.equivalent:
            raise GadgetError(f"{group}/{alt}: {v.describe()}")
    if len(set(sizes.values())) != 1 and group.startswith("x"):
        raise GadgetError(f"{group}: truth subsets differ in size {sizes}")
    ring = ring_probes(pts, probes)
    for alt, s in subsets.items():
        Q = P.subset(s)
        for q in ring:
            if classify(q, Q) != {BLUE}:
                raise GadgetError(f"{group}/{alt}: exterior probe {q} not blue")
    for q in ring:
        if classify(q, P) != {BLUE}:
            raise GadgetError(f"{group}: exterior probe {q} not blue")
    return report


def verify_layout(layout: GadgetLayout) -> None:
    for v in range(layout.instance.a):
        layout.verification[f"x{v}"] = verify_group(layout.complex, f"x{v}")
