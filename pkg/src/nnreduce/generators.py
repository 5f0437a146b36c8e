"""Seeded instance generators for tests and experiments."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List

from .geometry import general_position
from .model import LabelledPointSet

KINDS = ("random-gp", "degenerate-grid", "collinear", "random-1d")


def _check(**params):
    for k, v in params.items():
        if v is None or v < 1:
            raise ValueError(f"{k} must be a positive integer")


def _labels(rng, n, m) -> List[int]:
    labs = [rng.randint(1, m) for _ in range(n)]
    if m > 1 and n > 1 and len(set(labs)) == 1:
        labs[rng.randrange(n)] = 1 + labs[0] % m
    return labs


def random_gp(n: int, m: int = 2, seed: int = 0, box: int = 1000,
              max_tries: int = 10_000) -> LabelledPointSet:
    """Integer points in a box, resampled until in general position."""
    _check(n=n, m=m, box=box)
    rng = random.Random(seed)
    for _ in range(max_tries):
        pts = set()
        while len(pts) < n:
            pts.add((Fraction(rng.randrange(box)), Fraction(rng.randrange(box))))
        pts = sorted(pts)
        if general_position(pts):
            return LabelledPointSet(pts, _labels(rng, n, m), m)
    raise RuntimeError("could not find a general-position sample")  # pragma: no cover


def degenerate_grid(rows: int, cols: int, m: int = 2, seed: int = 0) -> LabelledPointSet:
    """A rows x cols integer grid; every unit square is cocircular."""
    _check(rows=rows, cols=cols, m=m)
    rng = random.Random(seed)
    pts = [(Fraction(x), Fraction(y)) for y in range(rows) for x in range(cols)]
    return LabelledPointSet(pts, _labels(rng, len(pts), m), m)


def collinear(n: int, m: int = 2, seed: int = 0, span: int = 50) -> LabelledPointSet:
    """Distinct points on one random rational line in the plane."""
    _check(n=n, m=m)
    rng = random.Random(seed)
    dx, dy = rng.randint(1, 5), rng.randint(-5, 5)
    ox, oy = rng.randint(-10, 10), rng.randint(-10, 10)
    ts = sorted(rng.sample(range(-span, span + max(n, 1)), n))
    pts = [(Fraction(ox + t * dx), Fraction(oy + t * dy)) for t in ts]
    return LabelledPointSet(pts, _labels(rng, n, m), m)


def random_1d(n: int, m: int = 2, seed: int = 0, span: int = 30) -> LabelledPointSet:
    _check(n=n, m=m)
    rng = random.Random(seed)
    xs = sorted(rng.sample(range(max(span, n)), n))
    return LabelledPointSet([(Fraction(x),) for x in xs], _labels(rng, n, m), m)


def generate(kind: str, n: int = 10, m: int = 2, seed: int = 0, rows: int = 3,
             cols: int = 3) -> LabelledPointSet:
    if kind == "random-gp":
        return random_gp(n, m, seed)
    if kind == "degenerate-grid":
        return degenerate_grid(rows, cols, m, seed)
    if kind == "collinear":
        return collinear(n, m, seed)
    if kind == "random-1d":
        return random_1d(n, m, seed)
    raise ValueError(f"unknown generator {kind!r}; choose from {', '.join(KINDS)}")
