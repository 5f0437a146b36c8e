"""V-cycle max2SAT instances and their two-page book embeddings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

Literal = Tuple[int, bool]          # (variable, positive)


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class Max2SatInstance:
    a: int
    clauses: Tuple[Tuple[Literal, ...], ...]
    k: int = 0

    def __post_init__(self):
        if self.a < 1:
            raise FormulaError("need at least one variable")
        if not self.clauses:
            raise FormulaError("need at least one clause")
        for c in self.clauses:
            if not 1 <= len(c) <= 2:
                raise FormulaError(f"clause {c} must have one or two literals")
            for v, _ in c:
                if not 0 <= v < self.a:
                    raise FormulaError(f"variable x{v} out of range")
        if self.k < 0:
            raise FormulaError("k must be non-negative")

    @property
    def b(self) -> int:
        return len(self.clauses)

    def satisfied(self, assignment: Sequence[bool]) -> List[bool]:
        if len(assignment) != self.a:
            raise FormulaError(f"assignment needs {self.a} values")
        return [any(assignment[v] == pos for v, pos in c) for c in self.clauses]

    def count_satisfied(self, assignment: Sequence[bool]) -> int:
        return sum(self.satisfied(assignment))

    def to_text(self) -> str:
        lines = [f"p vcmax2sat {self.a} {self.b} {self.k}"]
        for c in self.clauses:
            lits = " ".join(str(v + 1) if pos else str(-(v + 1)) for v, pos in c)
            lines.append(f"{lits} 0")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Max2SatInstance":
        """DIMACS-like: ``p vcmax2sat a b k`` then one clause per line of
        signed 1-based literals, optionally terminated by 0; ``c`` lines
        are comments."""
        header = None
        clauses = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            tok = line.split()
            if tok[0] == "p":
                if header is not None or len(tok) != 5 or tok[1] != "vcmax2sat":
                    raise FormulaError(f"bad header line: {raw!r}")
                try:
                    header = tuple(int(t) for t in tok[2:])
                except ValueError:
                    raise FormulaError(f"bad header line: {raw!r}") from None
                continue
            if header is None:
                raise FormulaError("clause before header")
            try:
                nums = [int(t) for t in tok]
            except ValueError:
                raise FormulaError(f"bad clause line: {raw!r}") from None
            if nums and nums[-1] == 0:
                nums = nums[:-1]
            if not nums or 0 in nums:
                raise FormulaError(f"bad clause line: {raw!r}")
            clauses.append(tuple((abs(x) - 1, x > 0) for x in nums))
        if header is None:
            raise FormulaError("missing header")
        a, b, k = header
        if len(clauses) != b:
            raise FormulaError(f"header promises {b} clauses, found {len(clauses)}")
        return cls(a, tuple(clauses), k)


@dataclass
class BookEmbedding:
    """Spine x_0..x_{a-1}; each clause sits on the top or bottom page."""
    pages: Tuple[str, ...]
    chords: Tuple[Tuple[int, int], ...]

    def page_of(self, j: int) -> str:
        return self.pages[j]


class NotEmbeddable(FormulaError):
    def __init__(self, cycle: List[int]):
        self.cycle = cycle
        super().__init__("clause chords cannot be split over two pages; odd conflict "
                         f"cycle through clauses {[c + 1 for c in cycle]}")


def clause_chord(clause: Tuple[Literal, ...]) -> Tuple[int, int]:
    vs = sorted(v for v, _ in clause)
    return (vs[0], vs[-1])


def interleave(c1: Tuple[int, int], c2: Tuple[int, int]) -> bool:
    (i, j), (k, l) = c1, c2
    return i < k < j < l or k < i < l < j


def two_page_assignment(inst: Max2SatInstance) -> BookEmbedding:
    """2-colour the chord conflict graph by BFS; an odd cycle is returned as
    the rejection witness."""
    chords = [clause_chord(c) for c in inst.clauses]
    b = len(chords)
    adj = [[j for j in range(b) if j != i and interleave(chords[i], chords[j])] for i in range(b)]
    colour: Dict[int, int] = {}
    parent: Dict[int, Optional[int]] = {}
    for s in range(b):
        if s in colour:
            continue
        colour[s], parent[s] = 0, None
        queue = [s]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if w not in colour:
                    colour[w], parent[w] = 1 - colour[u], u
                    queue.append(w)
                elif colour[w] == colour[u]:
                    raise NotEmbeddable(_odd_cycle(u, w, parent))
    pages = tuple("top" if colour[i] == 0 else "bottom" for i in range(b))
    return BookEmbedding(pages, tuple(chords))


def _odd_cycle(u: int, w: int, parent) -> List[int]:
    def path(x):
        out = [x]
        while parent[x] is not None:
            x = parent[x]
            out.append(x)
        return out
    pu, pw = path(u), path(w)
    common = set(pu) & set(pw)
    lca = next(x for x in pu if x in common)
    left = pu[:pu.index(lca) + 1]
    right = pw[:pw.index(lca)]
    return left + list(reversed(right))
