"""Pick the right solver for an instance and report what was done."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

from .equivalence import is_reduced_training_set
from .exact import SearchBudget, min_reduced
from .geometry import general_position
from .model import LabelledPointSet
from .relevant import reduce_general_position
from .solver1d import solve_1d


@dataclass
class SolveReport:
    subset: Tuple[int, ...]
    method: str                  # "1d" | "general-position" | "exact"
    optimal: bool
    notes: List[str] = field(default_factory=list)
    detail: object = None

    @property
    def size(self) -> int:
        return len(self.subset)

    def text(self, P: LabelledPointSet, explain: bool = False) -> str:
        lines = [f"method: {self.method}", f"size: {self.size} of {P.n}",
                 f"optimal: {'yes' if self.optimal else 'not proven'}"]
        lines += self.notes
        if explain and self.method == "1d":
            lines.append(self.detail.explain(P))
        if explain and self.method == "general-position":
            cert = self.detail
            lines.append(f"oracle: {cert.verdict.describe()}")
            for w, (i, j) in cert.forced_pairs:
                lines.append(f"  wall {w.kind} between {i} and {j} has a single generating pair")
        if explain and self.method == "exact":
            r = self.detail
            lines.append(f"search nodes {r.nodes}, oracle calls {r.oracle_calls}")
        return "\n".join(lines)


def solve(P: LabelledPointSet, exact: bool = False,
          budget: Optional[SearchBudget] = None) -> SolveReport:
    """1D instances go to the polynomial algorithm, 2D instances in general
    position take the relevant points, the rest run the exact search."""
    if P.d == 1 and not exact:
        sol = solve_1d(P)
        return SolveReport(sol.subset, "1d", True, detail=sol)
    if P.d == 2 and not exact and general_position(P.points):
        cert = reduce_general_position(P)
        if not cert.verdict.equivalent:  # pragma: no cover - theorem says otherwise
            raise AssertionError(cert.verdict.describe())
        return SolveReport(cert.subset, "general-position", True, detail=cert)
    notes = []
    if P.d == 2:
        notes.append("warning: input is not in general position; the minimum problem is "
                     "NP-hard here and the search may exhaust its budget")
    res = min_reduced(P, budget)
    if not res.optimal:
        notes.append(f"budget exhausted; returning an equivalent subset (minimum >= {res.lower_bound})")
    return SolveReport(res.subset, "exact", res.optimal, notes, res)


def read_subset(text: str) -> Tuple[int, ...]:
    """Whitespace-separated 0-based indices; '#' starts a comment."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for tok in line.split():
            try:
                k = int(tok)
            except ValueError:
                raise ValueError(f"bad subset index {tok!r}") from None
            if k < 0:
                raise ValueError(f"negative subset index {k}")
            out.append(k)
    if len(set(out)) != len(out):
        raise ValueError("repeated subset index")
    return tuple(sorted(out))


def write_subset(subset: Iterable[int], header: str = "") -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [str(k) for k in sorted(subset)]
    return "\n".join(lines) + "\n"
