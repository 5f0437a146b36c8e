"""Labelled point sets, the induced nearest-neighbour classification, exact
Voronoi cells and the walls that make up the decision boundary."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .geometry import (
    DimensionError,
    Line,
    Point,
    bisector,
    common_denominator,
    format_rational,
    make_point,
    midpoint,
    parse_rational,
    primitive_direction,
    squared_distance,
)

LabelSet = FrozenSet[int]


class InstanceError(ValueError):
    """Malformed labelled point set or instance file."""


class LabelledPointSet:
    """An instance (m, P, c).  Immutable after construction.

    Labels are integers in ``1..m``.  ``origin`` maps each local index back to
    an index of a parent set when the instance was produced by
    :meth:`subset`.
    """

    def __init__(self, points: Iterable, labels: Iterable[int], m: Optional[int] = None,
                 origin: Optional[Sequence[int]] = None):
        pts = tuple(make_point(p) for p in points)
        labs = tuple(int(c) for c in labels)
        if not pts:
            raise InstanceError("a labelled point set needs at least one point")
        if len(pts) != len(labs):
            raise InstanceError("points and labels differ in length")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise InstanceError("mixed dimensions")
        if len(set(pts)) != len(pts):
            seen = set()
            dup = next(p for p in pts if p in seen or seen.add(p))
            raise InstanceError(f"duplicate coordinates {tuple(map(format_rational, dup))}")
        if m is None:
            m = max(labs)
        if any(c < 1 or c > m for c in labs):
            raise InstanceError(f"labels must lie in 1..{m}")
        self.points: Tuple[Point, ...] = pts
        self.labels: Tuple[int, ...] = labs
        self.m = int(m)
        self.d = d
        self.origin: Tuple[int, ...] = tuple(origin) if origin is not None else tuple(range(len(pts)))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabelledPointSet):
            return NotImplemented
        return (self.m, self.points, self.labels) == (other.m, other.points, other.labels)

    def __hash__(self) -> int:
        return hash((self.m, self.points, self.labels))

    def __repr__(self) -> str:
        return f"LabelledPointSet(d={self.d}, m={self.m}, n={self.n})"

    def subset(self, indices: Iterable[int]) -> "LabelledPointSet":
        idx = sorted(set(indices))
        if not idx:
            raise InstanceError("empty subset")
        if idx[0] < 0 or idx[-1] >= self.n:
            raise InstanceError("subset index out of range")
        return LabelledPointSet([self.points[i] for i in idx], [self.labels[i] for i in idx],
                                m=self.m, origin=[self.origin[i] for i in idx])

    @cached_property
    def walls(self) -> Tuple["WallPiece", ...]:
        return tuple(voronoi_walls(self))

    @cached_property
    def boundary(self) -> "DecisionBoundary":
        return decision_boundary(self)

    @cached_property
    def scale(self) -> int:
        return common_denominator(self.points)

    # I/O ----------------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.d} {self.m} {self.n}"]
        for p, c in zip(self.points, self.labels):
            lines.append(" ".join([*(format_rational(x) for x in p), str(c)]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "LabelledPointSet":
        rows = [ln.split() for ln in text.splitlines()
                if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows:
            raise InstanceError("empty instance file")
        try:
            d, m, n = (int(x) for x in rows[0])
        except ValueError:
            raise InstanceError(f"bad header {' '.join(rows[0])!r}; expected 'd m n'") from None
        if d not in (1, 2):
            raise InstanceError(f"dimension {d} not supported")
        body = rows[1:]
        if len(body) != n:
            raise InstanceError(f"header announces {n} points, found {len(body)}")
        pts, labs = [], []
        for k, row in enumerate(body, start=2):
            if len(row) != d + 1:
                raise InstanceError(f"line {k}: expected {d} coordinates and a label")
            try:
                pts.append(tuple(parse_rational(x) for x in row[:d]))
                labs.append(int(row[d]))
            except ValueError as exc:
                raise InstanceError(f"line {k}: {exc}") from None
        return cls(pts, labs, m=m)

    def to_json(self) -> str:
        doc = {
            "d": self.d,
            "m": self.m,
            "n": self.n,
            "points": [{"coords": [format_rational(x) for x in p], "label": c}
                       for p, c in zip(self.points, self.labels)],
        }
        return json.dumps(doc, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "LabelledPointSet":
        try:
            doc = json.loads(text)
            pts = [tuple(parse_rational(x) for x in e["coords"]) for e in doc["points"]]
            labs = [int(e["label"]) for e in doc["points"]]
            inst = cls(pts, labs, m=int(doc["m"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InstanceError):
                raise
            raise InstanceError(f"bad JSON instance: {exc}") from None
        if inst.d != int(doc.get("d", inst.d)) or inst.n != int(doc.get("n", inst.n)):
            raise InstanceError("JSON header fields disagree with the point list")
        return inst


def load_instance(path) -> LabelledPointSet:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return LabelledPointSet.from_json(text)
    return LabelledPointSet.from_text(text)


# classification ----------------------------------------------------------

def nn_set(q: Point, S: LabelledPointSet) -> FrozenSet[int]:
    q = make_point(q)
    if len(q) != S.d:
        raise DimensionError("query dimension differs from the instance")
    best = None
    out: List[int] = []
    for k, p in enumerate(S.points):
        dd = squared_distance(q, p)
        if best is None or dd < best:
            best, out = dd, [k]
        elif dd == best:
            out.append(k)
    return frozenset(out)


def classify(q: Point, S: LabelledPointSet) -> LabelSet:
    return frozenset(S.labels[k] for k in nn_set(q, S))


# walls ---------------------------------------------------------------------

@dataclass(frozen=True)
class WallPiece:
    """A (d-1)-dimensional Voronoi wall between sites ``i < j``.

    kind is one of ``segment`` (start/end), ``ray`` (start + direction),
    ``line`` (canonical anchor + direction) or ``point`` (1D).
    """
    i: int
    j: int
    kind: str
    start: Point
    end: Optional[Point] = None
    direction: Optional[Tuple[int, int]] = None
    labels: Tuple[int, int] = (0, 0)

    @property
    def is_decision(self) -> bool:
        return self.labels[0] != self.labels[1]

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.i, self.j)

    @property
    def key(self) -> tuple:
        """Geometry only; two pieces with equal keys are the same point set."""
        return (self.kind, self.start, self.end, self.direction)

    def point_at(self, t) -> Point:
        t = Fraction(t)
        if self.kind == "point":
            return self.start
        if self.kind == "segment":
            return tuple(a + t * (b - a) for a, b in zip(self.start, self.end))
        return (self.start[0] + t * self.direction[0], self.start[1] + t * self.direction[1])

    def witness(self) -> Point:
        """A point in the relative interior."""
        if self.kind == "point":
            return self.start
        if self.kind == "segment":
            return midpoint(self.start, self.end)
        return self.point_at(1)


@dataclass(frozen=True)
class ConvexCell:
    """Voronoi cell of one site.  ``edges`` hold (neighbour, WallPiece) in
    counter-clockwise order; ``vertices`` are the finite corners."""
    site: int
    halfplanes: Tuple[Tuple[Line, int], ...]
    vertices: Tuple[Point, ...]
    edges: Tuple[WallPiece, ...]
    bounded: bool

    def contains(self, q: Point) -> bool:
        # each halfplane stores the sign that holds at the site
        for line, side in self.halfplanes:
            if line.value(q) * side < 0:
                return False
        return True

    def interior_contains(self, q: Point) -> bool:
        return all(line.value(q) * side > 0 for line, side in self.halfplanes)


@dataclass
class DecisionBoundary:
    walls: Tuple[WallPiece, ...]
    points_1d: Tuple[Fraction, ...] = ()

    def __len__(self) -> int:
        return len(self.walls)

    def __iter__(self):
        return iter(self.walls)

    @property
    def keys(self) -> FrozenSet[tuple]:
        return frozenset(w.key + (frozenset(w.labels),) for w in self.walls)


def _canonical_piece(i, j, labels, a: Point, b: Optional[Point], inf_a: bool, inf_b: bool,
                     line: Line) -> WallPiece:
    """Build a canonical WallPiece from a clipped edge a->b along ``line``;
    ``inf_*`` flags mark endpoints produced by the bounding box."""
    if i > j:
        i, j = j, i
        labels = (labels[1], labels[0])
    if inf_a and inf_b:
        return WallPiece(i, j, "line", line.anchor, None, line.direction, labels)
    if inf_a or inf_b:
        anchor, far = (b, a) if inf_a else (a, b)
        d = primitive_direction(far[0] - anchor[0], far[1] - anchor[1])
        return WallPiece(i, j, "ray", anchor, None, d, labels)
    s, e = (a, b) if a <= b else (b, a)
    return WallPiece(i, j, "segment", s, e, None, labels)


def _box_radius(int_points: Sequence[Tuple[int, int]]) -> int:
    # circumcentres of integer triples with |coord| <= M lie within 16 M^3 + M
    M = max(max(abs(x), abs(y)) for x, y in int_points) + 1
    return 16 * M ** 3 + M + 1


def _clip_cell(i: int, ipts: Sequence[Tuple[int, int]], R: int):
    """Exact Sutherland-Hodgman clipping of the box [-R, R]^2 by the bisector
    halfplanes of site i.  Returns [(vertex, label_of_outgoing_edge)], where
    label -1 marks a box side."""
    px, py = ipts[i]
    poly = [((Fraction(-R), Fraction(-R)), -1), ((Fraction(R), Fraction(-R)), -1),
            ((Fraction(R), Fraction(R)), -1), ((Fraction(-R), Fraction(R)), -1)]
    order = sorted((j for j in range(len(ipts)) if j != i),
                   key=lambda j: (ipts[j][0] - px) ** 2 + (ipts[j][1] - py) ** 2)
    maxr2 = 2 * (2 * R) ** 2
    for j in order:
        qx, qy = ipts[j]
        d2 = (qx - px) ** 2 + (qy - py) ** 2
        if d2 > 4 * maxr2:
            break
        # keep  a*x + b*y <= c
        a, b = 2 * (qx - px), 2 * (qy - py)
        c = qx * qx + qy * qy - px * px - py * py
        vals = [a * v[0] + b * v[1] - c for v, _ in poly]
        if all(s <= 0 for s in vals):
            continue
        new = []
        k = len(poly)
        for t in range(k):
            (cur, lab), sc = poly[t], vals[t]
            nxt, sn = poly[(t + 1) % k][0], vals[(t + 1) % k]
            if sc <= 0:
                new.append([cur, j if (sc == 0 and sn > 0) else lab])
            if (sc < 0 < sn) or (sn < 0 < sc):
                r = sc / (sc - sn)
                x = (cur[0] + r * (nxt[0] - cur[0]), cur[1] + r * (nxt[1] - cur[1]))
                new.append([x, j if sc < 0 else lab])
        # drop zero-length edges, keeping the label of the later vertex
        cleaned = []
        for v in new:
            if cleaned and cleaned[-1][0] == v[0]:
                cleaned[-1] = v
            else:
                cleaned.append(v)
        while len(cleaned) > 1 and cleaned[0][0] == cleaned[-1][0]:
            cleaned[0] = [cleaned[0][0], cleaned[0][1]]
            cleaned.pop()
        poly = [tuple(v) for v in cleaned]
        maxr2 = max((v[0] - px) ** 2 + (v[1] - py) ** 2 for v, _ in poly)
    return poly


def _cell_edges_2d(S: LabelledPointSet, i: int, ipts, R: int, L: int):
    poly = _clip_cell(i, ipts, R)
    k = len(poly)
    on_box = [abs(v[0]) == R or abs(v[1]) == R for v, _ in poly]
    edges = []
    for t in range(k):
        (a, lab) = poly[t]
        b = poly[(t + 1) % k][0]
        if lab < 0:
            continue
        line = bisector(S.points[i], S.points[lab])
        ao = (a[0] / L, a[1] / L)
        bo = (b[0] / L, b[1] / L)
        piece = _canonical_piece(i, lab, (S.labels[i], S.labels[lab]), ao, bo,
                                 on_box[t], on_box[(t + 1) % k], line)
        edges.append((lab, piece))
    verts = tuple((v[0] / L, v[1] / L) for (v, _), ob in zip(poly, on_box) if not ob)
    return edges, verts, not any(on_box)


def _int_points(S: LabelledPointSet):
    L = S.scale
    return [tuple(int(c * L) for c in p) for p in S.points], L


def voronoi_cell(i: int, S: LabelledPointSet) -> ConvexCell:
    if S.d != 2:
        raise DimensionError("voronoi_cell is planar; use the 1D region helpers")
    if S.n == 1:
        return ConvexCell(i, (), (), (), False)
    ipts, L = _int_points(S)
    R = _box_radius(ipts)
    edges, verts, bounded = _cell_edges_2d(S, i, ipts, R, L)
    halfplanes = []
    for j, _ in edges:
        line = bisector(S.points[i], S.points[j])
        halfplanes.append((line, 1 if line.value(S.points[i]) > 0 else -1))
    return ConvexCell(i, tuple(halfplanes), verts, tuple(w for _, w in edges), bounded)


def voronoi_walls(S: LabelledPointSet) -> List[WallPiece]:
    """All Voronoi walls, one piece per adjacent pair, sorted canonically."""
    if S.n == 1:
        return []
    if S.d == 1:
        order = sorted(range(S.n), key=lambda k: S.points[k])
        out = []
        for a, b in zip(order, order[1:]):
            i, j = min(a, b), max(a, b)
            out.append(WallPiece(i, j, "point", midpoint(S.points[a], S.points[b]),
                                 labels=(S.labels[i], S.labels[j])))
        return out
    ipts, L = _int_points(S)
    R = _box_radius(ipts)
    found: Dict[Tuple[int, int], WallPiece] = {}
    for i in range(S.n):
        edges, _, _ = _cell_edges_2d(S, i, ipts, R, L)
        for j, piece in edges:
            found.setdefault(piece.pair, piece)
    return sorted(found.values(), key=lambda w: (w.i, w.j))


def decision_boundary(S: LabelledPointSet) -> DecisionBoundary:
    walls = tuple(w for w in S.walls if w.is_decision)
    pts = tuple(w.start[0] for w in walls) if S.d == 1 else ()
    return DecisionBoundary(walls, tuple(sorted(pts)))


def wall_on_bisector_brute(S: LabelledPointSet, i: int, j: int) -> Optional[Tuple]:
    """Independent O(n) computation of wall(i, j) as a parameter interval on
    the bisector; used to cross-check the clipping construction.  Returns
    (anchor, direction, lo, hi) with None for infinite ends, or None when the
    wall has no relative interior."""
    p, q = S.points[i], S.points[j]
    line = bisector(p, q)
    a, u = line.anchor, line.direction
    lo = hi = None
    for k, r in enumerate(S.points):
        if k in (i, j):
            continue
        # |x-p|^2 <= |x-r|^2  <=>  2(r-p).x <= |r|^2 - |p|^2, with x = a + t u
        gx, gy = 2 * (r[0] - p[0]), 2 * (r[1] - p[1])
        rhs = r[0] ** 2 + r[1] ** 2 - p[0] ** 2 - p[1] ** 2 - gx * a[0] - gy * a[1]
        coef = gx * u[0] + gy * u[1]
        if coef == 0:
            if rhs <= 0:
                return None
            continue
        bound = rhs / coef
        if coef > 0:
            hi = bound if hi is None else min(hi, bound)
        else:
            lo = bound if lo is None else max(lo, bound)
    if lo is not None and hi is not None and lo >= hi:
        return None
    return (a, u, lo, hi)
