"""Named small graphs and enumeration of small connected bipartite graphs."""

from __future__ import annotations

from itertools import permutations, product

from .errors import InvalidArgumentError
from .graph import (
    Multigraph,
    complete,
    complete_multipartite,
    cycle,
    edgeless,
    is_connected,
    path,
    star,
)


def named_graph(name: str) -> Multigraph:
    """Parse names like ``k4``, ``c5``, ``p3``, ``e2``, ``s4`` (star ``K_{1,4}``)
    and ``k2,3`` / ``k1,1,2`` (complete multipartite)."""
    key = name.strip().lower()
    if not key or key[0] not in "kcpes":
        raise InvalidArgumentError(f"unknown graph name {name!r}")
    body = key[1:]
    try:
        if key[0] == "k" and "," in body:
            return complete_multipartite([int(x) for x in body.split(",")])
        size = int(body)
    except ValueError as exc:
        raise InvalidArgumentError(f"unknown graph name {name!r}") from exc
    maker = {"k": complete, "c": cycle, "p": path, "e": edgeless, "s": star}[key[0]]
    return maker(size)


# factors for the product experiments; callers skip any without a cordial
# labeling (C6 among the left factors, since C_n is cordial iff n % 4 != 2)
TENSOR_RIGHT_FACTORS = ("K2", "K3", "P3", "P4", "C5")
TENSOR_EVEN_LEFT_FACTORS = ("C4", "C6", "K2,2", "S4", "P5", "C8")
TENSOR_ODD_LEFT_FACTORS = ("P4", "S3")


def _canonical_bipartite(a: int, b: int, edges: tuple[tuple[int, int], ...]) -> tuple:
    """Smallest relabeling of a bipartite edge set with sides ``0..a-1`` and ``0..b-1``."""
    variants = [edges]
    if a == b:
        variants.append(tuple((y, x) for x, y in edges))
    return min(
        tuple(sorted((pa[x], pb[y]) for x, y in es))
        for es in variants
        for pa in permutations(range(a))
        for pb in permutations(range(b))
    )


def connected_bipartite_graphs(n: int) -> list[tuple[str, Multigraph]]:
    """One representative per isomorphism class of connected bipartite simple
    graphs on ``n`` vertices, each laid out with the smaller side first."""
    if n < 1:
        raise InvalidArgumentError(f"need at least one vertex, got {n}")
    if n == 1:
        return [("K1", Multigraph(1))]
    seen: dict[tuple, tuple[int, int]] = {}
    for a in range(1, n // 2 + 1):
        b = n - a
        cells = [(x, y) for x in range(a) for y in range(b)]
        for bits in product((0, 1), repeat=len(cells)):
            edges = tuple(c for c, bit in zip(cells, bits) if bit)
            g = Multigraph(n, [(x, a + y) for x, y in edges])
            if not is_connected(g):
                continue
            key = (a, _canonical_bipartite(a, b, edges))
            seen.setdefault(key, (a, b))
    out = []
    for (a, form), (_, b) in sorted(seen.items(), key=lambda kv: (len(kv[0][1]), kv[0])):
        g = Multigraph(n, [(x, a + y) for x, y in form])
        out.append((_describe(g, a, b), g))
    return out


def _describe(g: Multigraph, a: int, b: int) -> str:
    degrees = sorted(g.degrees())
    if g.m == a * b:
        if a == 1:
            return "K2" if b == 1 else f"S{b}"
        return f"K{a},{b}"
    if g.m == g.n - 1 and degrees[-1] <= 2:
        return f"P{g.n}"
    if g.m == g.n and degrees == [2] * g.n:
        return f"C{g.n}"
    edges = ",".join(f"{u}-{v}" for u, v in g.edges)
    return f"B{g.n}[{edges}]"
