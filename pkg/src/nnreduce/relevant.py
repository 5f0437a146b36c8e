"""Relevant points, computed two independent ways, and the general-position
shortcut where they already form the unique minimum reduced set."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .equivalence import EquivalenceVerdict, is_reduced_training_set
from .geometry import GeneralPositionReport, general_position
from .model import LabelledPointSet, WallPiece


class GeneralPositionError(ValueError):
    def __init__(self, report: GeneralPositionReport):
        self.report = report
        super().__init__(f"input is not in general position ({report.kind} points: "
                         f"{[tuple(str(c) for c in p) for p in report.witness]})")


@dataclass
class RelevantReport:
    indices: Tuple[int, ...]
    method: str
    witnesses: Dict[int, object] = field(default_factory=dict)

    def __contains__(self, k) -> bool:
        return k in self.indices

    def __len__(self) -> int:
        return len(self.indices)


def relevant_points_by_walls(P: LabelledPointSet) -> RelevantReport:
    """Points that generate a piece of the decision boundary."""
    wit: Dict[int, WallPiece] = {}
    for w in P.boundary.walls:
        wit.setdefault(w.i, w)
        wit.setdefault(w.j, w)
    return RelevantReport(tuple(sorted(wit)), "boundary-wall", wit)


def relevant_points_by_definition(P: LabelledPointSet) -> RelevantReport:
    """p is relevant iff dropping it alone changes the classification."""
    wit: Dict[int, object] = {}
    if P.n > 1:
        for k in range(P.n):
            v = is_reduced_training_set(P, [j for j in range(P.n) if j != k])
            if not v.equivalent:
                wit[k] = v.counterexample
    return RelevantReport(tuple(sorted(wit)), "removal-oracle", wit)


@dataclass
class GeneralPositionCertificate:
    subset: Tuple[int, ...]
    verdict: EquivalenceVerdict
    forced_pairs: List[Tuple[WallPiece, Tuple[int, int]]]
    single_label: bool = False

    @property
    def relevant(self) -> Tuple[int, ...]:
        return () if self.single_label else self.subset


def reduce_general_position(P: LabelledPointSet) -> GeneralPositionCertificate:
    """The relevant points, plus a certificate: the subset is equivalent and
    every boundary wall has exactly one generating pair, so each of those
    points belongs to every reduced set.

    A single-label instance has no relevant points; any one point then
    induces the same classification, and the first point is returned with
    ``single_label`` set.
    """
    report = general_position(P.points)
    if not report:
        raise GeneralPositionError(report)
    rel = relevant_points_by_walls(P)
    if not rel.indices:
        return GeneralPositionCertificate((0,), is_reduced_training_set(P, [0]), [], True)
    forced = [(w, (w.i, w.j)) for w in P.boundary.walls]
    return GeneralPositionCertificate(rel.indices, is_reduced_training_set(P, rel.indices), forced)
