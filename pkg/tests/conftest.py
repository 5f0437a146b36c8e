import random
from fractions import Fraction as F
from itertools import combinations

import numpy as np
import pytest

from nnreduce.equivalence import is_equivalent_1d, is_reduced_training_set
from nnreduce.model import LabelledPointSet


def pset(*entries, m=None):
    """pset(((0, 0), 1), ((2, 0), 2)) or pset((0, 1), (2, 2)) for 1D."""
    pts, labs = [], []
    for p, c in entries:
        p = p if isinstance(p, tuple) else (p,)
        pts.append(tuple(F(x) for x in p))
        labs.append(c)
    return LabelledPointSet(pts, labs, m=m)


def oracle(P, Q):
    return is_equivalent_1d(P, Q) if P.d == 1 else is_reduced_training_set(P, Q)


def brute_minimum(P):
    """Smallest size of an oracle-passing subset, and all subsets of that size."""
    for k in range(1, P.n + 1):
        found = [c for c in combinations(range(P.n), k) if oracle(P, c).equivalent]
        if found:
            return k, found
    raise AssertionError("full set must pass")


def random_instance(rng, n, m=2, kind="small-int", d=2):
    if d == 1:
        xs = rng.sample(range(0, 3 * n), n)
        pts = [(F(x),) for x in xs]
    elif kind == "small-int":
        pts = list({(F(rng.randint(0, 4)), F(rng.randint(0, 4))) for _ in range(n)})
    else:
        pts = list({(F(rng.randint(-40, 40)), F(rng.randint(-40, 40))) for _ in range(n)})
    labs = [rng.randint(1, m) for _ in pts]
    return LabelledPointSet(pts, labs, m=m)


class VectorClassifier:
    """Exact integer classification of many probe points at once: every
    coordinate (points and probes) is scaled to an integer first."""

    def __init__(self, P, probes_num, denom):
        scale = P.scale * denom
        self.pts = np.array([[int(c * scale) for c in p] for p in P.points], dtype=np.int64)
        self.labels = np.array(P.labels, dtype=np.int64)
        self.probes = np.asarray(probes_num, dtype=np.int64) * P.scale
        diff = self.probes[:, None, :] - self.pts[None, :, :]
        self.dist = (diff * diff).sum(axis=2)

    def masks(self, cols=None):
        d = self.dist if cols is None else self.dist[:, list(cols)]
        lab = self.labels if cols is None else self.labels[list(cols)]
        best = d.min(axis=1, keepdims=True)
        tie = d == best
        return np.bitwise_or.reduce(np.where(tie, 1 << lab[None, :], 0), axis=1)


def random_probes(P, rng, count, denom=997, pad=3):
    xs = [p[0] for p in P.points]
    ys = [p[1] for p in P.points]
    lo_x, hi_x = int(min(xs)) - pad, int(max(xs)) + pad
    lo_y, hi_y = int(min(ys)) - pad, int(max(ys)) + pad
    nums = np.column_stack([
        rng.integers(lo_x * denom, hi_x * denom, size=count),
        rng.integers(lo_y * denom, hi_y * denom, size=count),
    ])
    return nums, denom


@pytest.fixture
def rng():
    return random.Random(12345)
