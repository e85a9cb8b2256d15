"""Binary vertex labelings, their induced edge labelings and cordial deficits.

A labeling is a tuple of 0/1 ints, position ``i`` holding the label of
vertex ``i``. An edge ``uv`` is labeled ``(f(u) + f(v)) mod 2``; parallel
edges are counted once per copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import InvalidLabelingError, PreconditionError
from .graph import Edge, Multigraph

Labeling = tuple[int, ...]


def check_labeling(g: Multigraph, f: Sequence[int]) -> Labeling:
    f = tuple(int(x) for x in f)
    if len(f) != g.n:
        raise InvalidLabelingError(f"labeling has {len(f)} entries but the graph has {g.n} vertices")
    if any(x not in (0, 1) for x in f):
        raise InvalidLabelingError("labels must be 0 or 1")
    return f


def induced_edge_labeling(g: Multigraph, f: Sequence[int]) -> tuple[int, int]:
    """Return ``(zeros_e, ones_e)``."""
    f = check_labeling(g, f)
    ones = sum(f[u] ^ f[v] for u, v in g.edges)
    return g.m - ones, ones


def vertex_counts(f: Sequence[int]) -> tuple[int, int]:
    ones = sum(f)
    return len(f) - ones, ones


def is_friendly(g: Multigraph, f: Sequence[int]) -> bool:
    zeros, ones = vertex_counts(check_labeling(g, f))
    return abs(zeros - ones) <= 1


@dataclass(frozen=True)
class DeficitReport:
    zeros_e: int
    ones_e: int
    zeros_v: int
    ones_v: int

    @property
    def signed_deficit(self) -> int:
        return self.zeros_e - self.ones_e

    @property
    def deficit(self) -> int:
        return abs(self.zeros_e - self.ones_e)

    @property
    def imbalance(self) -> int:
        return abs(self.zeros_v - self.ones_v)

    @property
    def friendly(self) -> bool:
        return self.imbalance <= 1

    @property
    def cordial(self) -> bool:
        return self.friendly and self.deficit <= 1

    def as_dict(self) -> dict[str, int | bool]:
        return {
            "zeros_e": self.zeros_e,
            "ones_e": self.ones_e,
            "zeros_v": self.zeros_v,
            "ones_v": self.ones_v,
            "deficit": self.deficit,
            "friendly": self.friendly,
            "cordial": self.cordial,
        }


def deficit_report(g: Multigraph, f: Sequence[int]) -> DeficitReport:
    f = check_labeling(g, f)
    zeros_e, ones_e = induced_edge_labeling(g, f)
    zeros_v, ones_v = vertex_counts(f)
    return DeficitReport(zeros_e, ones_e, zeros_v, ones_v)


def edges_needed(g: Multigraph, f: Sequence[int]) -> int:
    report = deficit_report(g, f)
    if not report.friendly:
        raise PreconditionError("edges_needed requires a friendly labeling")
    return max(0, report.deficit - 1)


def augmenting_edges(g: Multigraph, f: Sequence[int]) -> list[Edge]:
    """Edges whose addition makes the friendly labeling ``f`` cordial.

    Every added edge carries the minority edge label and joins the
    lexicographically first vertex pair producing that label, so the list
    is one pair repeated ``edges_needed(g, f)`` times.
    """
    count = edges_needed(g, f)
    if count == 0:
        return []
    f = check_labeling(g, f)
    zeros_e, ones_e = induced_edge_labeling(g, f)
    wanted = 0 if zeros_e < ones_e else 1
    for u, v in combinations(range(g.n), 2):
        if f[u] ^ f[v] == wanted:
            return [(u, v)] * count
    raise PreconditionError(
        f"no loopless vertex pair carries edge label {wanted}; the labeling cannot be augmented"
    )


def vertices_needed(g: Multigraph, f: Sequence[int]) -> int:
    report = deficit_report(g, f)
    if report.deficit > 1:
        raise PreconditionError(f"vertices_needed requires edge deficit <= 1, got {report.deficit}")
    return max(0, report.imbalance - 1)


def augmenting_vertex_labels(g: Multigraph, f: Sequence[int]) -> Labeling:
    """Labels of the isolated vertices to append so that ``f`` becomes friendly."""
    count = vertices_needed(g, f)
    zeros_v, ones_v = vertex_counts(check_labeling(g, f))
    minority = 0 if zeros_v < ones_v else 1
    return (minority,) * count


def induced_tensor_labeling(
    f1: Sequence[int],
    f2: Sequence[int],
    g1: Multigraph | None = None,
    g2: Multigraph | None = None,
) -> Labeling:
    """Label ``(u, v)`` of the product by ``f1[u] + f2[v] mod 2``.

    Index layout matches :func:`cordial.graph.tensor_product`. Pass the
    factor graphs to have the labeling lengths checked against them.
    """
    f1 = check_labeling(g1, f1) if g1 is not None else check_labeling(Multigraph(len(f1)), f1)
    f2 = check_labeling(g2, f2) if g2 is not None else check_labeling(Multigraph(len(f2)), f2)
    return tuple((a + b) % 2 for a in f1 for b in f2)
