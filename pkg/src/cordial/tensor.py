"""Edge decomposition of a tensor product into copies of a bipartite factor,
and the cordiality of the induced product labeling."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidArgumentError, PreconditionError
from .graph import Edge, Multigraph, bipartition, is_connected, product_index, tensor_product
from .labeling import DeficitReport, Labeling, deficit_report, induced_tensor_labeling


@dataclass(frozen=True)
class Piece:
    """Copy of G1 generated by the directed G2 edge ``source -> target``.

    ``vertex_map[u]`` is the product vertex playing the role of ``u``.
    """

    source: int
    target: int
    vertex_map: tuple[int, ...]
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class TensorDecomposition:
    g1: Multigraph
    g2: Multigraph
    x_side: frozenset[int]
    y_side: frozenset[int]
    product: Multigraph
    pieces: tuple[Piece, ...]

    @property
    def q(self) -> int:
        return self.g2.m

    def dump(self) -> str:
        lines = []
        for idx, piece in enumerate(self.pieces):
            edges = " ".join(f"{u}-{v}" for u, v in piece.edges)
            lines.append(f"piece {idx} dir {piece.source} {piece.target}: {edges}")
        return "\n".join(lines) + ("\n" if lines else "")


def directed_edges(g: Multigraph) -> list[tuple[int, int]]:
    """Both orientations of each edge, ``a -> b`` (with ``a < b``) first."""
    out = []
    for a, b in g.edges:
        out.append((a, b))
        out.append((b, a))
    return out


def _require_factor(g1: Multigraph, g2: Multigraph) -> tuple[frozenset[int], frozenset[int]]:
    if not g1.is_simple():
        raise PreconditionError("G1 must be simple")
    if not g2.is_simple():
        raise PreconditionError("G2 must be simple")
    if not is_connected(g1):
        raise PreconditionError("G1 must be connected")
    sides = bipartition(g1)
    if sides is None:
        raise PreconditionError("G1 must be bipartite")
    return sides


def decompose_tensor(g1: Multigraph, g2: Multigraph) -> TensorDecomposition:
    """Split E(g1 x g2) into ``2 |E(g2)|`` edge-disjoint copies of ``g1``.

    For a directed edge ``a -> b`` of g2 the copy maps ``u`` in X to
    ``(u, a)`` and ``v`` in Y to ``(v, b)``; X is the side holding vertex 0.
    """
    x_side, y_side = _require_factor(g1, g2)
    n2 = g2.n
    pieces = []
    for a, b in directed_edges(g2):
        vmap = tuple(product_index(u, a if u in x_side else b, n2) for u in range(g1.n))
        edges = tuple(sorted(tuple(sorted((vmap[u], vmap[v]))) for u, v in g1.edges))
        pieces.append(Piece(a, b, vmap, edges))
    product = tensor_product(g1, g2)
    covered = Counter(e for piece in pieces for e in piece.edges)
    assert covered == product.multiplicities(), "pieces must partition the product edges"
    assert all(c == 1 for c in covered.values())
    return TensorDecomposition(g1, g2, x_side, y_side, product, tuple(pieces))


def piece_label_split(
    decomposition: TensorDecomposition, labeling: Sequence[int], index: int
) -> tuple[int, int]:
    """Edge label counts ``(zeros_e, ones_e)`` inside one piece."""
    if not 0 <= index < len(decomposition.pieces):
        raise InvalidArgumentError(f"piece index {index} out of range")
    edges = decomposition.pieces[index].edges
    ones = sum(labeling[u] ^ labeling[v] for u, v in edges)
    return len(edges) - ones, ones


def theorem6_check(
    g1: Multigraph, f1: Sequence[int], g2: Multigraph, f2: Sequence[int]
) -> tuple[Labeling, DeficitReport]:
    """Induced labeling of ``g1 x g2`` and its deficit report.

    With g1 connected, bipartite and even-sized, and both factors cordially
    labeled, every piece of the decomposition splits its edges evenly, so
    the product labeling must come out cordial; anything else raises.
    """
    _require_factor(g1, g2)
    if g1.m % 2:
        raise PreconditionError(f"G1 must have an even number of edges, has {g1.m}")
    if not deficit_report(g1, f1).cordial:
        raise PreconditionError("f1 is not a cordial labeling of G1")
    if not deficit_report(g2, f2).cordial:
        raise PreconditionError("f2 is not a cordial labeling of G2")
    labeling = induced_tensor_labeling(f1, f2, g1, g2)
    report = deficit_report(tensor_product(g1, g2), labeling)
    if not report.cordial:
        raise AssertionError(f"induced product labeling is not cordial: {report}")
    return labeling, report
