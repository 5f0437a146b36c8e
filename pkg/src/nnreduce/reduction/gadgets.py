"""Variable gadgets, channels and clause gadgets built from red cells.

Coordinates follow one convention throughout: the vertical unit is 1, the
columns of a variable gadget are 16/5 apart, and each red cell carries a
"T" and an "F" centre that differ by a small phase offset.  The two phases
generate identical walls, so a gadget has two equally cheap subsets; mixing
them breaks the sharing of blue points between neighbouring cells and costs
extra points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..geometry import Point, reflect
from .cells import BLUE, RED, CellComplex, GadgetError, RedCell, line_through

F = Fraction


@dataclass(frozen=True)
class LayoutConstants:
    unit: Fraction = F(1)
    pitch: Fraction = F(16, 5)
    delta: Fraction = F(1, 5)             # phase offset between T and F centres
    clause_dx: Fraction = F(5)
    clause_dy: Fraction = F(1, 2)
    bend_sin: Fraction = F(11, 61)
    bend_cos: Fraction = F(60, 61)
    narrow: Fraction = F(1)               # channel half-width near clauses

    def __post_init__(self):
        if self.bend_sin ** 2 + self.bend_cos ** 2 != 1:
            raise GadgetError("bend rotation is not exactly orthogonal")


DEFAULT = LayoutConstants()


def rotate(v, cos, sin):
    return (cos * v[0] - sin * v[1], sin * v[0] + cos * v[1])


def _add(p, v, s=1):
    return (p[0] + s * v[0], p[1] + s * v[1])


def _scale(v, s):
    return (v[0] * s, v[1] * s)


# ---------------------------------------------------------------------------
# channels

@dataclass(frozen=True)
class Step:
    """One red cell of a channel: the distance from the previous blue point
    to the red centre (``d_in``, the stretchable one), from the centre to
    the next blue point (``d_out``), the half-width, and the direction."""
    u: Tuple[Fraction, Fraction]
    d_in: Fraction = F(1)
    d_out: Fraction = F(1)
    half_width: Fraction = F(8, 5)


@dataclass
class Cap:
    """The last blue row of a channel.  ``facing`` is the point nearer the
    clause, ``other`` the alternative one."""
    facing: Point
    other: Point
    facing_phase: str
    direction: Tuple[Fraction, Fraction]


@dataclass
class Channel:
    group: str
    cells: List[RedCell]
    cap: Cap
    steps: List[Step]


def build_channel(cx: CellComplex, group: str, name: str, start: Dict[str, Point],
                  steps: Sequence[Step]) -> Channel:
    """Grow a channel from a blue point pair ``start`` ({"T": .., "F": ..}).

    Every step reflects the current blue pair across the next cell's entry
    edge, so both phases stay consistent through bends and stretches.
    """
    if not steps:
        raise GadgetError("channel needs at least one cell")
    bT, bF = start["T"], start["F"]
    cells = []
    for k, st in enumerate(steps):
        u = st.u
        if u[0] ** 2 + u[1] ** 2 != 1:
            raise GadgetError("channel direction must be a rational unit vector")
        if st.d_in <= 0 or st.d_out <= 0 or st.half_width <= 0:
            raise GadgetError("channel distances must be positive")
        n = (-u[1], u[0])
        e_in = _add(bT, _scale(u, st.d_in / 2))
        cT = _add(bT, _scale(u, st.d_in))
        e_out = _add(cT, _scale(u, st.d_out / 2))
        entry = line_through(e_in, _add(e_in, n))
        cF = reflect(bF, entry)
        g = st.half_width
        verts = (_add(e_in, n, -g), _add(e_out, n, -g), _add(e_out, _scale(n, g)),
                 _add(e_in, _scale(n, g)))
        cell = cx.add(RedCell(f"{name}.{k}", group, verts, {"T": cT, "F": cF}))
        cells.append(cell)
        exit_ = line_through(e_out, _add(e_out, n))
        bT, bF = reflect(cT, exit_), reflect(cF, exit_)
    u = steps[-1].u
    sT = bT[0] * u[0] + bT[1] * u[1]
    sF = bF[0] * u[0] + bF[1] * u[1]
    if sT == sF:
        raise GadgetError("cap has no longitudinal phase offset")
    if sT > sF:
        cap = Cap(bT, bF, "T", u)
    else:
        cap = Cap(bF, bT, "F", u)
    return Channel(group, cells, cap, list(steps))


def straight(n_cells: int, u=(F(0), F(1)), half_width=F(8, 5), stretch=F(1)) -> List[Step]:
    """``n_cells`` unit cells; the first one's entry distance is ``stretch``."""
    return [Step(u, stretch if k == 0 else F(1), F(1), half_width) for k in range(n_cells)]


# ---------------------------------------------------------------------------
# variable gadget

@dataclass(frozen=True)
class Attachment:
    column: int
    side: str          # "top" | "bottom"
    positive: bool


@dataclass
class VariableGadget:
    group: str
    columns: int
    origin: Point
    cells: List[RedCell]
    starts: Dict[Attachment, Dict[str, Point]]
    constants: LayoutConstants

    def column_x(self, c: int) -> Fraction:
        return self.origin[0] + c * self.constants.pitch

    def is_red(self, c: int, side: str) -> bool:
        # upper row red on even columns, lower row red on odd columns
        return (c % 2 == 0) if side == "top" else (c % 2 == 1)


def check_attachments(columns: int, attachments: Sequence[Attachment]):
    if columns < 3:
        raise GadgetError("a variable gadget needs at least 3 columns")
    for a in attachments:
        if a.side not in ("top", "bottom"):
            raise GadgetError(f"unknown side {a.side!r}")
        if a.column <= 0 or a.column >= columns - 1:
            raise GadgetError(f"column {a.column} is outermost or out of range")
    for side in ("top", "bottom"):
        cols = sorted(a.column for a in attachments if a.side == side)
        for c1, c2 in zip(cols, cols[1:]):
            if c2 - c1 < 3:
                raise GadgetError(f"{side} attachments at columns {c1} and {c2} "
                                  "need at least two unused columns between them")


def attachment_column_parity(side: str, positive: bool) -> int:
    """Column parity to use: positive occurrences attach to unshielded
    (blue-centred) columns, negative ones to shielded (red-centred) ones."""
    red_parity = 0 if side == "top" else 1
    return 1 - red_parity if positive else red_parity


def build_variable_gadget(cx: CellComplex, group: str, columns: int,
                          attachments: Sequence[Attachment] = (),
                          origin: Point = (F(0), F(0)),
                          constants: LayoutConstants = DEFAULT) -> VariableGadget:
    """Two rows of ``columns`` cells in a checkerboard.  The lower row sits at
    height 0, the upper at 1; red cells have their T centre on the row and
    their F centre shifted by delta towards the middle line."""
    check_attachments(columns, attachments)
    p, d = constants.pitch, constants.delta
    ox, oy = origin
    half = p / 2
    cells = []
    for c in range(columns):
        x = ox + c * p
        for side, y, off in (("top", oy + 1, -d), ("bottom", oy, d)):
            if (c % 2 == 0) != (side == "top"):
                continue
            lo, hi = y - F(1, 2), y + F(1, 2)
            verts = ((x - half, lo), (x + half, lo), (x + half, hi), (x - half, hi))
            cells.append(cx.add(RedCell(f"{group}.{side}{c}", group, verts,
                                        {"T": (x, y), "F": (x, y + off)})))
    gadget = VariableGadget(group, columns, origin, cells, {}, constants)
    for a in attachments:
        red = gadget.is_red(a.column, a.side)
        if red == a.positive:
            raise GadgetError(f"column {a.column} ({'shielded' if red else 'unshielded'}) "
                              f"cannot take a {'positive' if a.positive else 'negative'} "
                              f"attachment on the {a.side}")
        x = ox + a.column * p
        s = 1 if a.side == "top" else -1
        row_y = oy + 1 if a.side == "top" else oy
        if red:
            # the shield beyond the red cell becomes the channel's first blue row
            start = {"T": (x, row_y + s), "F": (x, row_y + s + s * d)}
        else:
            start = {"T": (x, row_y), "F": (x, row_y - s * d)}
        gadget.starts[a] = start
    return gadget


def attachment_steps(attachment: Attachment, gadget: VariableGadget) -> Step:
    """First channel cell leaving the gadget: full pitch wide, so a channel
    above an unshielded column shares its side shields with the neighbours."""
    u = (F(0), F(1)) if attachment.side == "top" else (F(0), F(-1))
    return Step(u, F(1), F(1), gadget.constants.pitch / 2)


# ---------------------------------------------------------------------------
# clause gadget

@dataclass
class ClauseGadget:
    group: str
    cell: RedCell
    a1: Point
    a2: Point
    alternatives: Dict[str, str]      # "alpha" uses a1, "beta" uses a2


# the clause cell relative to a1 for a clause above its channels
_V = (F(12, 5), F(5, 4))
_W1 = (F(-1), F(2))
_W2 = (F(3), F(1))
_TOP = (F(2), F(4))
_GAMMA = (F(8, 5), F(9, 10))


def clause_template(constants: LayoutConstants = DEFAULT):
    """Vertices and centres of the clause cell for a1 = (0, 0) and
    a2 = (clause_dx, clause_dy)."""
    a1 = (F(0), F(0))
    a2 = (constants.clause_dx, constants.clause_dy)
    V = _V
    if (V[0] - a1[0]) ** 2 + (V[1] - a1[1]) ** 2 != (V[0] - a2[0]) ** 2 + (V[1] - a2[1]) ** 2:
        raise GadgetError("clause apex must be equidistant from a1 and a2")
    P3 = _add(V, _W2)
    P1 = _add(V, _scale(_W1, F(3, 2)))
    T0 = _add(V, _TOP)
    verts = (V, P3, T0, P1)
    w1 = line_through(V, P1)
    w2 = line_through(V, P3)
    centers = {"alpha": reflect(a1, w1), "beta": reflect(a2, w2), "gamma": _add(V, _GAMMA)}
    return verts, centers, a1, a2


def build_clause_gadget(cx: CellComplex, group: str, pos_a1: Point, pos_a2: Point,
                        flip: bool = False, constants: LayoutConstants = DEFAULT) -> ClauseGadget:
    """Clause cell with three alternative centres.  ``alpha`` mirrors a1
    across the wall facing the first channel, ``beta`` mirrors a2 across the
    wall facing the second; ``gamma`` needs four points of its own.  With
    ``flip`` the template is mirrored for a clause below its channels."""
    want = (pos_a2[0] - pos_a1[0], pos_a2[1] - pos_a1[1])
    s = -1 if flip else 1
    if want != (constants.clause_dx, s * constants.clause_dy):
        raise GadgetError(f"a2 - a1 must be ({constants.clause_dx}, {s * constants.clause_dy}), "
                          f"got {want}")
    verts, centers, _, _ = clause_template(constants)

    def place(q):
        return (pos_a1[0] + q[0], pos_a1[1] + s * q[1])

    vs = tuple(place(v) for v in verts)
    if flip:
        vs = tuple(reversed(vs))
    cell = cx.add(RedCell(f"{group}.K", group, vs, {k: place(c) for k, c in centers.items()}))
    # the shared mirror points must land exactly on the channel caps
    if pos_a1 not in cell.mirrors("alpha") or pos_a2 not in cell.mirrors("beta"):
        raise GadgetError("clause centres do not mirror onto a1/a2")  # pragma: no cover
    return ClauseGadget(group, cell, pos_a1, pos_a2, {"alpha": "a1", "beta": "a2"})
