"""Loopless multigraphs on dense integer vertices, generators and constructions."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgumentError, InvalidSpecError, UnsupportedInputError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    """A loopless multigraph on vertices ``0..n-1``.

    ``edges`` is kept as a sorted tuple of ``(u, v)`` pairs with ``u < v``;
    a pair repeated ``r`` times is an edge of multiplicity ``r``. Equality is
    therefore label-sensitive equality of edge multisets, not isomorphism.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InvalidArgumentError(f"vertex count must be nonnegative, got {n}")
        normalized = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InvalidArgumentError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            normalized.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def m(self) -> int:
        """Edge count, with multiplicity."""
        return len(self.edges)

    def multiplicities(self) -> Counter:
        return Counter(self.edges)

    def is_simple(self) -> bool:
        return all(c == 1 for c in self.multiplicities().values())

    def adjacency(self) -> list[list[int]]:
        """Neighbour lists; a neighbour appears once per parallel edge."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency()]

    def add_edges(self, extra: Iterable[Edge]) -> Multigraph:
        return Multigraph(self.n, list(self.edges) + list(extra))

    def add_isolated(self, count: int) -> Multigraph:
        return Multigraph(self.n + count, self.edges)

    def relabel(self, mapping: Sequence[int]) -> Multigraph:
        """Rename vertex ``v`` to ``mapping[v]``; ``mapping`` must be a permutation."""
        if sorted(mapping) != list(range(self.n)):
            raise InvalidArgumentError("relabel mapping must be a permutation of the vertices")
        return Multigraph(self.n, [(mapping[u], mapping[v]) for u, v in self.edges])

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class PartSpec:
    """Part sizes of a complete multipartite graph, in vertex-block order."""

    sizes: tuple[int, ...]

    def __init__(self, sizes: Iterable[int]):
        sizes = tuple(int(s) for s in sizes)
        if not sizes:
            raise InvalidSpecError("a part specification needs at least one part")
        if any(s < 1 for s in sizes):
            raise InvalidSpecError(f"part sizes must be positive, got {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @property
    def k(self) -> int:
        """Number of parts of odd size."""
        return sum(s % 2 for s in self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def blocks(self) -> list[range]:
        """Vertex index range occupied by each part."""
        out, start = [], 0
        for s in self.sizes:
            out.append(range(start, start + s))
            start += s
        return out

    @classmethod
    def parse(cls, text: str) -> PartSpec:
        try:
            return cls(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError as exc:
            if isinstance(exc, InvalidSpecError):
                raise
            raise InvalidSpecError(f"cannot parse part sizes from {text!r}") from exc

    def __str__(self) -> str:
        return ",".join(map(str, self.sizes))


@dataclass(frozen=True)
class JoinSpec:
    """Pieces ``(G_i, H_i)`` for the join construction: every vertex of
    ``g_subsets[i]`` is joined to every vertex of ``h_parts[i]``."""

    g_subsets: tuple[frozenset[int], ...] = field(default=())
    h_parts: tuple[frozenset[int], ...] = field(default=())

    def __init__(self, g_subsets: Iterable[Iterable[int]] = (), h_parts: Iterable[Iterable[int]] = ()):
        gs = tuple(frozenset(s) for s in g_subsets)
        hs = tuple(frozenset(s) for s in h_parts)
        if len(gs) != len(hs):
            raise InvalidSpecError(f"{len(gs)} subsets of G but {len(hs)} parts of H")
        for a, b in combinations(range(len(hs)), 2):
            if hs[a] & hs[b]:
                raise InvalidSpecError(f"parts H_{a + 1} and H_{b + 1} overlap")
        object.__setattr__(self, "g_subsets", gs)
        object.__setattr__(self, "h_parts", hs)

    @property
    def ell(self) -> int:
        return len(self.h_parts)

    def validate(self, g: Multigraph, h: Multigraph) -> None:
        for i, (gi, hi) in enumerate(zip(self.g_subsets, self.h_parts), start=1):
            if any(not 0 <= v < g.n for v in gi):
                raise InvalidSpecError(f"G_{i} is not a subset of V(G)")
            if any(not 0 <= v < h.n for v in hi):
                raise InvalidSpecError(f"H_{i} is not a subset of V(H)")


# -- generators ---------------------------------------------------------------

def complete_multipartite(spec: PartSpec | Sequence[int]) -> Multigraph:
    if not isinstance(spec, PartSpec):
        spec = PartSpec(spec)
    edges = [(u, v) for a, b in combinations(spec.blocks, 2) for u in a for v in b]
    return Multigraph(spec.total, edges)


def complete(n: int) -> Multigraph:
    if n < 1:
        raise InvalidArgumentError(f"complete graph needs n >= 1, got {n}")
    return Multigraph(n, combinations(range(n), 2))


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise InvalidArgumentError(f"cycle needs n >= 3, got {n}")
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Multigraph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise InvalidArgumentError(f"path needs n >= 1, got {n}")
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def edgeless(n: int) -> Multigraph:
    if n < 1:
        raise InvalidArgumentError(f"edgeless graph needs n >= 1, got {n}")
    return Multigraph(n)


def star(leaves: int) -> Multigraph:
    """K_{1,leaves} with the centre at vertex 0."""
    if leaves < 1:
        raise InvalidArgumentError(f"star needs at least one leaf, got {leaves}")
    return Multigraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of positive integers summing to ``total``."""
    if total < 1:
        return
    for cuts in product((False, True), repeat=total - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


# -- constructions ------------------------------------------------------------

def disjoint_union(g: Multigraph, h: Multigraph) -> Multigraph:
    """G on indices ``0..|G|-1`` followed by H shifted by ``|G|``."""
    shift = g.n
    return Multigraph(g.n + h.n, list(g.edges) + [(u + shift, v + shift) for u, v in h.edges])


def lee_liu_join(g: Multigraph, h: Multigraph, spec: JoinSpec) -> Multigraph:
    """Disjoint union of ``g`` and ``h`` plus all edges between ``G_i`` and ``H_i``.

    H's vertices are shifted by ``g.n`` in the result.
    """
    spec.validate(g, h)
    base = disjoint_union(g, h)
    extra = [
        (u, v + g.n)
        for gi, hi in zip(spec.g_subsets, spec.h_parts)
        for u in sorted(gi)
        for v in sorted(hi)
    ]
    return base.add_edges(extra)


def product_index(u: int, v: int, n2: int) -> int:
    return u * n2 + v


def tensor_product(g1: Multigraph, g2: Multigraph) -> Multigraph:
    """Categorical product; vertex ``(u, v)`` gets index ``u * g2.n + v``."""
    if not g1.is_simple() or not g2.is_simple():
        raise UnsupportedInputError("tensor product is only defined here for simple graphs")
    n2 = g2.n
    edges = []
    for u1, v1 in g1.edges:
        for u2, v2 in g2.edges:
            edges.append((u1 * n2 + u2, v1 * n2 + v2))
            edges.append((u1 * n2 + v2, v1 * n2 + u2))
    return Multigraph(g1.n * n2, edges)


# -- predicates ---------------------------------------------------------------

def _two_colour(g: Multigraph) -> tuple[list[int], int, bool]:
    """BFS 2-colouring from ascending roots. Returns colours, component count, bipartite."""
    adj = g.adjacency()
    colour = [-1] * g.n
    components = 0
    bipartite = True
    for root in range(g.n):
        if colour[root] != -1:
            continue
        components += 1
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    bipartite = False
    return colour, components, bipartite


def is_connected(g: Multigraph) -> bool:
    """The null graph counts as disconnected; ``K_1`` is connected."""
    if g.n == 0:
        return False
    return _two_colour(g)[1] == 1


def is_bipartite(g: Multigraph) -> bool:
    return _two_colour(g)[2]


def bipartition(g: Multigraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Return ``(X, Y)`` with vertex 0 in X, or None if ``g`` is not bipartite.

    For a connected graph this is the unique bipartition.
    """
    colour, _, ok = _two_colour(g)
    if not ok:
        return None
    x = frozenset(v for v in range(g.n) if colour[v] == 0)
    return x, frozenset(range(g.n)) - x


COUNTEREXAMPLE1_NAMES = ("a", "b", "c", "d", "A", "B", "C", "D")


def counterexample1() -> tuple[Multigraph, tuple[str, ...]]:
    """The join of G = K4 (A, B, C, D) and H = C4 (a-b-c-d-a) with
    G_1 = {A, B}, H_1 = {a, b}, G_2 = {B, C}, H_2 = {c, d}.

    Vertices are reordered so that indices follow ``a, b, c, d, A, B, C, D``.
    """
    g, h = complete(4), cycle(4)
    spec = JoinSpec(g_subsets=[{0, 1}, {1, 2}], h_parts=[{0, 1}, {2, 3}])
    joined = lee_liu_join(g, h, spec)
    # join order is A, B, C, D, a, b, c, d
    return joined.relabel([4, 5, 6, 7, 0, 1, 2, 3]), COUNTEREXAMPLE1_NAMES
