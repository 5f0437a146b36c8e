"""Red cells and their mirror points: the common substrate of all gadgets.

A red cell is a convex polygon together with one or more alternative
centres.  Reflecting a centre across every edge line yields blue points whose
Voronoi cells cut out exactly that polygon, so each alternative induces the
same classification locally.  Neighbouring cells whose centres are mirror
images of each other share blue points; that sharing is where all savings
(and therefore all gadget logic) come from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from ..geometry import Line, Point, orient, reflect
from ..model import LabelledPointSet

RED, BLUE = 1, 2


class GadgetError(ValueError):
    """A construction violates its contract."""


def line_through(p: Point, q: Point) -> Line:
    # (q - p) x (x - p) = 0
    a = -(q[1] - p[1])
    b = q[0] - p[0]
    return Line.from_coefficients(a, b, a * p[0] + b * p[1])


@dataclass
class RedCell:
    name: str
    group: str
    vertices: Tuple[Point, ...]          # counter-clockwise
    centers: Dict[str, Point]            # alternative -> centre

    def __post_init__(self):
        vs = self.vertices
        k = len(vs)
        if k < 3:
            raise GadgetError(f"{self.name}: polygon needs 3 vertices")
        for i in range(k):
            if orient(vs[i], vs[(i + 1) % k], vs[(i + 2) % k]) <= 0:
                raise GadgetError(f"{self.name}: polygon not strictly convex/CCW")
        for alt, c in self.centers.items():
            if not self.strictly_inside(c):
                raise GadgetError(f"{self.name}: centre {alt} not strictly inside")

    @property
    def edges(self) -> List[Line]:
        vs = self.vertices
        return [line_through(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def strictly_inside(self, p: Point) -> bool:
        vs = self.vertices
        return all(orient(vs[i], vs[(i + 1) % len(vs)], p) > 0 for i in range(len(vs)))

    def mirrors(self, alt: str) -> List[Point]:
        c = self.centers[alt]
        return [reflect(c, e) for e in self.edges]


@dataclass
class PointRecord:
    point: Point
    label: int
    tags: Set[Tuple[str, str]] = field(default_factory=set)   # (group, alternative)
    roles: List[str] = field(default_factory=list)


class CellComplex:
    """Collects red cells, deduplicates their centres and mirror points, and
    turns a choice of alternative per group into an index subset."""

    def __init__(self):
        self.cells: List[RedCell] = []
        self.records: Dict[Point, PointRecord] = {}
        self.order: List[Point] = []
        self.extra: Dict[Point, str] = {}

    def _record(self, p: Point, label: int, tag, role: str):
        rec = self.records.get(p)
        if rec is None:
            rec = self.records[p] = PointRecord(p, label)
            self.order.append(p)
        elif rec.label != label:
            raise GadgetError(f"point {p} would be both red and blue ({role})")
        if tag is not None:
            rec.tags.add(tag)
        rec.roles.append(role)

    def add(self, cell: RedCell) -> RedCell:
        self.cells.append(cell)
        for alt, c in cell.centers.items():
            self._record(c, RED, (cell.group, alt), f"{cell.name}:{alt}")
            for k, m in enumerate(cell.mirrors(alt)):
                self._record(m, BLUE, (cell.group, alt), f"{cell.name}:{alt}:e{k}")
        return cell

    def add_fixed(self, p: Point, label: int, role: str):
        """A point present in every selection."""
        self._record(p, label, ("*", "*"), role)

    def index(self, p: Point) -> int:
        return self.order.index(p)

    def point_set(self) -> LabelledPointSet:
        return LabelledPointSet(self.order, [self.records[p].label for p in self.order], m=2)

    def selection(self, choice: Mapping[str, str]) -> Tuple[int, ...]:
        out = []
        for k, p in enumerate(self.order):
            for g, alt in self.records[p].tags:
                if g == "*" or choice.get(g) == alt:
                    out.append(k)
                    break
        return tuple(out)

    def groups(self) -> Dict[str, Set[str]]:
        out: Dict[str, Set[str]] = {}
        for c in self.cells:
            out.setdefault(c.group, set()).update(c.centers)
        return out

    def indices_of_group(self, group: str) -> Tuple[int, ...]:
        return tuple(k for k, p in enumerate(self.order)
                     if any(g == group for g, _ in self.records[p].tags))
