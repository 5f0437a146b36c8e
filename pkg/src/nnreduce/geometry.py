"""Exact rational geometry: predicates, bisectors and general-position tests.

Points are plain tuples of :class:`fractions.Fraction` of length 1 or 2.
Nothing in here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Tuple

Rational = Fraction
Point = Tuple[Fraction, ...]


class DimensionError(ValueError):
    pass


class DegenerateError(ValueError):
    pass


def rat(value) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction.

    Floats are rejected on purpose: their binary expansion is almost never the
    number the caller meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError(f"float coordinate {value!r}; pass a Fraction or 'num/den' string")
    # numpy integers and similar
    try:
        return Fraction(int(value)) if int(value) == value else Fraction(value)
    except (TypeError, ValueError):
        raise TypeError(f"cannot interpret {value!r} as a rational") from None


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    if "/" in text:
        num, den = text.split("/", 1)
        if not den.strip().isdigit():
            raise ValueError(f"bad denominator in {text!r}")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    if "." in text or "e" in text.lower():
        raise ValueError(f"decimal notation not allowed: {text!r}")
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def make_point(*coords) -> Point:
    if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
        coords = tuple(coords[0])
    if len(coords) not in (1, 2):
        raise DimensionError(f"points must have 1 or 2 coordinates, got {len(coords)}")
    return tuple(rat(c) for c in coords)


def _check_dims(*points: Sequence) -> int:
    d = len(points[0])
    for p in points[1:]:
        if len(p) != d:
            raise DimensionError(f"dimension mismatch: {len(points[0])} vs {len(p)}")
    return d


def squared_distance(p: Point, q: Point) -> Fraction:
    _check_dims(p, q)
    return sum(((a - b) ** 2 for a, b in zip(p, q)), Fraction(0))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of det(q - p, r - p): +1 left turn, -1 right turn, 0 collinear."""
    if _check_dims(p, q, r) != 2:
        raise DimensionError("orient needs planar points")
    return _sign((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))


def incircle(a: Point, b: Point, c: Point, d: Point) -> int:
    """Sign of the in-circle determinant; positive when d is inside the
    circle through a, b, c (taken counter-clockwise)."""
    _check_dims(a, b, c, d)
    rows = []
    for p in (a, b, c):
        dx, dy = p[0] - d[0], p[1] - d[1]
        rows.append((dx, dy, dx * dx + dy * dy))
    (a0, a1, a2), (b0, b1, b2), (c0, c1, c2) = rows
    det = (a0 * (b1 * c2 - b2 * c1)
           - a1 * (b0 * c2 - b2 * c0)
           + a2 * (b0 * c1 - b1 * c0))
    return _sign(det)


def cocircular(a: Point, b: Point, c: Point, d: Point) -> bool:
    # no circle through a collinear triple
    if orient(a, b, c) == 0:
        return False
    return incircle(a, b, c, d) == 0


@dataclass(frozen=True)
class GeneralPositionReport:
    ok: bool
    kind: Optional[str] = None          # "collinear" | "cocircular" | "midpoint"
    witness: Tuple[Point, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def general_position(points: Iterable[Point]) -> GeneralPositionReport:
    """No three collinear and no four cocircular points (d = 2); in d = 1 all
    pairwise midpoints distinct.  Returns a falsy report carrying a witness
    tuple when violated."""
    pts = list(points)
    if not pts:
        return GeneralPositionReport(True)
    d = _check_dims(*pts)
    if d == 1:
        seen = {}
        for p, q in combinations(pts, 2):
            s = p[0] + q[0]
            if s in seen:
                a, b = seen[s]
                return GeneralPositionReport(False, "midpoint", (a, b, p, q))
            seen[s] = (p, q)
        return GeneralPositionReport(True)
    for p, q, r in combinations(pts, 3):
        if orient(p, q, r) == 0:
            return GeneralPositionReport(False, "collinear", (p, q, r))
    for a, b, c, e in combinations(pts, 4):
        if incircle(a, b, c, e) == 0:
            return GeneralPositionReport(False, "cocircular", (a, b, c, e))
    return GeneralPositionReport(True)


@dataclass(frozen=True, order=True)
class Line:
    """a*x + b*y = c in canonical form: integer coefficients with gcd 1 and the
    first nonzero of (a, b) positive.  Equal lines compare equal."""
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise DegenerateError("line needs (a, b) != (0, 0)")

    @classmethod
    def from_coefficients(cls, a, b, c) -> "Line":
        a, b, c = rat(a), rat(b), rat(c)
        if a == 0 and b == 0:
            raise DegenerateError("line needs (a, b) != (0, 0)")
        m = lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = int(a * m), int(b * m), int(c * m)
        g = gcd(ia, ib, ic)
        ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        return cls(ia, ib, ic)

    def canonical(self) -> "Line":
        return Line.from_coefficients(self.a, self.b, self.c)

    def value(self, p: Point) -> Fraction:
        return self.a * p[0] + self.b * p[1] - self.c

    def contains(self, p: Point) -> bool:
        return self.value(p) == 0

    @property
    def direction(self) -> Tuple[int, int]:
        # primitive, first nonzero positive
        dx, dy = -self.b, self.a
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        return (dx, dy)

    @property
    def anchor(self) -> Point:
        """Foot of the perpendicular from the origin; a canonical point on
        the line."""
        n2 = self.a * self.a + self.b * self.b
        return (Fraction(self.a * self.c, n2), Fraction(self.b * self.c, n2))

    def __str__(self) -> str:
        return f"{self.a}*x + {self.b}*y = {self.c}"


def bisector(p: Point, q: Point) -> Line:
    """Perpendicular bisector of a planar pair: |x-p|^2 = |x-q|^2, i.e.
    2(q-p).x = |q|^2 - |p|^2."""
    if _check_dims(p, q) != 2:
        raise DimensionError("bisector lines exist for planar points only")
    if p == q:
        raise DegenerateError("bisector of a point with itself")
    a = 2 * (q[0] - p[0])
    b = 2 * (q[1] - p[1])
    c = q[0] ** 2 + q[1] ** 2 - p[0] ** 2 - p[1] ** 2
    return Line.from_coefficients(a, b, c)


def midpoint(p: Point, q: Point) -> Point:
    _check_dims(p, q)
    return tuple((a + b) / 2 for a, b in zip(p, q))


def same_bisector(pair1: Tuple[Point, Point], pair2: Tuple[Point, Point]) -> bool:
    (p, q), (r, s) = pair1, pair2
    if len(p) == 1:
        if p == q or r == s:
            raise DegenerateError("degenerate pair")
        return p[0] + q[0] == r[0] + s[0]
    return bisector(p, q) == bisector(r, s)


def reflect(p: Point, line: Line) -> Point:
    """Mirror image of p across a line."""
    t = Fraction(2 * line.value(p), line.a * line.a + line.b * line.b)
    return (p[0] - t * line.a, p[1] - t * line.b)


def line_intersection(l1: Line, l2: Line) -> Optional[Point]:
    det = l1.a * l2.b - l1.b * l2.a
    if det == 0:
        return None
    x = Fraction(l1.c * l2.b - l1.b * l2.c, det)
    y = Fraction(l1.a * l2.c - l1.c * l2.a, det)
    return (x, y)


def primitive_direction(dx, dy) -> Tuple[int, int]:
    """Scale a rational direction to a primitive integer vector (sign kept)."""
    dx, dy = rat(dx), rat(dy)
    if dx == 0 and dy == 0:
        raise DegenerateError("zero direction")
    m = lcm(dx.denominator, dy.denominator)
    ix, iy = int(dx * m), int(dy * m)
    g = gcd(ix, iy)
    return (ix // g, iy // g)


def common_denominator(points: Iterable[Point]) -> int:
    m = 1
    for p in points:
        for c in p:
            m = lcm(m, c.denominator)
    return m
