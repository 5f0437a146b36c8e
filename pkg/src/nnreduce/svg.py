"""SVG 1.1 pictures of instances: Voronoi walls thin, decision boundary thick,
points coloured by label, subset members drawn as crosses."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence
from xml.sax.saxutils import escape

from .model import LabelledPointSet, WallPiece

PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2",
           "#7f7f7f", "#bcbd22", "#17becf"]


def label_colour(c: int) -> str:
    return PALETTE[(c - 1) % len(PALETTE)]


def _bbox(P: LabelledPointSet):
    xs = [float(p[0]) for p in P.points]
    ys = [float(p[1]) for p in P.points] if P.d == 2 else [0.0]
    w = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    pad = 0.08 * w + 0.5
    return min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad


def _wall_ends(w: WallPiece, reach: float):
    if w.kind == "segment":
        return [float(c) for c in w.start], [float(c) for c in w.end]
    sx, sy = (float(c) for c in w.start)
    dx, dy = (float(c) for c in w.direction)
    norm = (dx * dx + dy * dy) ** 0.5
    dx, dy = dx / norm * reach, dy / norm * reach
    if w.kind == "ray":
        return [sx, sy], [sx + dx, sy + dy]
    return [sx - dx, sy - dy], [sx + dx, sy + dy]


def render_svg(P: LabelledPointSet, subset: Optional[Iterable[int]] = None,
               walls: bool = True, title: str = "", size: int = 800) -> str:
    if P.d == 1:
        return render_number_line(P, subset, title=title, size=size)
    x0, y0, x1, y1 = _bbox(P)
    w, h = x1 - x0, y1 - y0
    scale = size / max(w, h)
    r = max(w, h) / 160
    reach = 4 * max(w, h)
    chosen = set(subset or ())

    def tx(x):
        return f"{x:.4f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w * scale:.0f}" '
        f'height="{h * scale:.0f}" viewBox="{tx(x0)} {tx(-y1)} {tx(w)} {tx(h)}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<rect x="%s" y="%s" width="%s" height="%s" fill="white"/>' % (tx(x0), tx(-y1), tx(w), tx(h)))
    # flip y so the picture is in the usual orientation
    out.append('<g transform="scale(1,-1)">')
    if walls:
        out.append(f'<g stroke="#999999" stroke-width="{r / 4:.4f}" fill="none">')
        for wall in P.walls:
            if not wall.is_decision:
                (ax, ay), (bx, by) = _wall_ends(wall, reach)
                out.append(f'<line x1="{tx(ax)}" y1="{tx(ay)}" x2="{tx(bx)}" y2="{tx(by)}"/>')
        out.append("</g>")
    out.append(f'<g stroke="black" stroke-width="{r * 0.8:.4f}" fill="none">')
    for wall in P.boundary.walls:
        (ax, ay), (bx, by) = _wall_ends(wall, reach)
        out.append(f'<line x1="{tx(ax)}" y1="{tx(ay)}" x2="{tx(bx)}" y2="{tx(by)}"/>')
    out.append("</g>")
    for k, (p, c) in enumerate(zip(P.points, P.labels)):
        x, y = float(p[0]), float(p[1])
        col = label_colour(c)
        if k in chosen:
            out.append(f'<path d="M{tx(x - r)} {tx(y - r)}L{tx(x + r)} {tx(y + r)}'
                       f'M{tx(x - r)} {tx(y + r)}L{tx(x + r)} {tx(y - r)}" '
                       f'stroke="{col}" stroke-width="{r / 2:.4f}"/>')
        else:
            out.append(f'<circle cx="{tx(x)}" cy="{tx(y)}" r="{tx(r * 0.7)}" fill="none" '
                       f'stroke="{col}" stroke-width="{r / 3:.4f}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_number_line(P: LabelledPointSet, subset: Optional[Iterable[int]] = None,
                       title: str = "", size: int = 800) -> str:
    """1D variant: points on a horizontal axis, boundary points as ticks."""
    xs = [float(p[0]) for p in P.points]
    lo, hi = min(xs), max(xs)
    pad = 0.08 * max(hi - lo, 1.0) + 0.5
    lo, hi = lo - pad, hi + pad
    scale = size / (hi - lo)
    chosen = set(subset or ())

    def X(x):
        return f"{(x - lo) * scale:.2f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="80" '
        f'viewBox="0 0 {size} 80">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<rect x="0" y="0" width="{size}" height="80" fill="white"/>')
    out.append(f'<line x1="0" y1="40" x2="{size}" y2="40" stroke="#999999" stroke-width="1"/>')
    for b in P.boundary.points_1d:
        out.append(f'<line x1="{X(float(b))}" y1="15" x2="{X(float(b))}" y2="65" '
                   'stroke="black" stroke-width="3"/>')
    for k, (x, c) in enumerate(zip(xs, P.labels)):
        col = label_colour(c)
        if k in chosen:
            out.append(f'<path d="M{float(X(x)) - 5:.2f} 35L{float(X(x)) + 5:.2f} 45'
                       f'M{float(X(x)) - 5:.2f} 45L{float(X(x)) + 5:.2f} 35" stroke="{col}" '
                       'stroke-width="2"/>')
        else:
            out.append(f'<circle cx="{X(x)}" cy="40" r="4" fill="none" stroke="{col}" '
                       'stroke-width="1.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
