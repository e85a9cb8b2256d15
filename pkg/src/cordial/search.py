"""Exact search for minimum deficits, cordial labelings and cordial deficiencies.

Two independent engines live here:

* a bitmask scan over every binary labeling of a graph (numpy-vectorised,
  chunked, optionally fanned out over processes), used as ground truth;
* a part-count search for complete multipartite graphs, where vertices of
  one part are interchangeable and a labeling reduces to per-part zero
  counts.

A labeling is encoded as an integer with vertex ``i`` at bit ``n - 1 - i``,
so integer order is lexicographic order of the label tuple. Vertex 0 is
pinned to label 0: flipping every label keeps every edge label and swaps
the vertex counts, so each objective here is complement invariant.
Ties always resolve to the lexicographically smallest labeling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .errors import InvalidSpecError, InvalidSwitchError, PreconditionError, ResourceLimitError
from .graph import Edge, Multigraph, PartSpec, complete_multipartite
from .labeling import (
    Labeling,
    augmenting_edges,
    augmenting_vertex_labels,
)

DEFAULT_MAX_VERTICES = 24
DEFAULT_MAX_STATES = 10**8
# above this many vertices find_cordial_labeling switches from the scan to backtracking
SCAN_VERTEX_LIMIT = 20
_CHUNK_BITS = 16
_BIG = np.iinfo(np.int64).max

FRIENDLY_MIN = "friendly_min"
CVD_MIN = "cvd_min"
CORDIAL_FIRST = "cordial_first"


@dataclass(frozen=True)
class DeficiencyValue:
    """A cordial edge or vertex deficiency with its witness.

    ``value`` is None for an infinite deficiency (strictly noncordial);
    only vertex deficiencies can be infinite.
    """

    value: int | None
    labeling: Labeling | None = None
    added_edges: tuple[Edge, ...] = ()
    added_vertex_labels: Labeling = ()

    @property
    def infinite(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


INFINITE = DeficiencyValue(None)


def mask_to_labeling(mask: int, n: int) -> Labeling:
    return tuple((mask >> (n - 1 - i)) & 1 for i in range(n))


def labeling_to_mask(f: Sequence[int]) -> int:
    mask = 0
    for x in f:
        mask = (mask << 1) | int(x)
    return mask


# -- bitmask scan -------------------------------------------------------------

def _check_cap(g: Multigraph, max_vertices: int) -> None:
    if g.n > max_vertices:
        raise ResourceLimitError(
            f"exhaustive search over {g.n} vertices exceeds the cap of {max_vertices}; "
            "raise max_vertices explicitly or use a closed form"
        )


def _edge_arrays(g: Multigraph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    mult = g.multiplicities()
    pairs = sorted(mult)
    su = np.array([g.n - 1 - u for u, _ in pairs], dtype=np.int64)
    sv = np.array([g.n - 1 - v for _, v in pairs], dtype=np.int64)
    w = np.array([mult[p] for p in pairs], dtype=np.int64)
    return su, sv, w


def _scan_chunk(args) -> tuple[int, int]:
    """Best ``(key, mask)`` over masks ``[lo, hi)``; key is ``_BIG`` if none qualifies."""
    n, m, su, sv, w, lo, hi, mode = args
    masks = np.arange(lo, hi, dtype=np.int64)
    cut = np.zeros(masks.shape, dtype=np.int64)
    for a, b, c in zip(su, sv, w):
        cut += c * (((masks >> a) ^ (masks >> b)) & 1)
    deficit = np.abs(m - 2 * cut)
    imbalance = np.abs(n - 2 * np.bitwise_count(masks).astype(np.int64))
    if mode == FRIENDLY_MIN:
        key = np.where(imbalance <= 1, deficit, _BIG)
    elif mode == CVD_MIN:
        key = np.where(deficit <= 1, np.maximum(imbalance - 1, 0), _BIG)
    elif mode == CORDIAL_FIRST:
        key = np.where((imbalance <= 1) & (deficit <= 1), 0, _BIG)
    else:
        raise ValueError(f"unknown scan mode {mode!r}")
    idx = int(np.argmin(key))
    return int(key[idx]), lo + idx


def _scan(g: Multigraph, mode: str, workers: int = 1) -> tuple[int, Labeling] | None:
    """Minimise the mode's key over all labelings with vertex 0 labeled 0."""
    if g.n == 0:
        return None
    su, sv, w = _edge_arrays(g)
    space = 1 << (g.n - 1)
    step = 1 << _CHUNK_BITS
    jobs = [(g.n, g.m, su, sv, w, lo, min(lo + step, space), mode) for lo in range(0, space, step)]
    best = (_BIG, 0)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(_scan_chunk, jobs):
                best = min(best, result)
    else:
        for job in jobs:
            best = min(best, _scan_chunk(job))
            if best[0] == 0:
                break
    if best[0] == _BIG:
        return None
    return best[0], mask_to_labeling(best[1], g.n)


def min_friendly_deficit(
    g: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES, workers: int = 1
) -> tuple[int, Labeling]:
    """Exact minimum cordial deficit over friendly labelings, with witness."""
    _check_cap(g, max_vertices)
    if g.n == 0:
        return 0, ()
    found = _scan(g, FRIENDLY_MIN, workers)
    assert found is not None, "every graph has a friendly labeling"
    return found


def ced_exhaustive(
    g: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES, workers: int = 1
) -> DeficiencyValue:
    deficit, f = min_friendly_deficit(g, max_vertices, workers)
    try:
        extra = augmenting_edges(g, f)
    except PreconditionError:
        # two vertices joined by parallel edges: every new edge repeats the surplus label
        return INFINITE
    return DeficiencyValue(max(0, deficit - 1), f, tuple(extra))


def cvd_exhaustive(
    g: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES, workers: int = 1
) -> DeficiencyValue:
    _check_cap(g, max_vertices)
    if g.n == 0:
        return DeficiencyValue(0, ())
    found = _scan(g, CVD_MIN, workers)
    if found is None:
        return INFINITE
    value, f = found
    return DeficiencyValue(value, f, added_vertex_labels=augmenting_vertex_labels(g, f))


def _backtrack_cordial(g: Multigraph) -> Labeling | None:
    """Depth-first search in lexicographic order.

    Branches are cut when the decided edges are already too unbalanced for
    the undecided ones to repair, or on parity: the number of edges labeled
    1 is congruent mod 2 to the degree sum over vertices labeled 1, and when
    ``|E|`` is even a cordial labeling needs exactly ``|E| / 2`` of them.
    """
    n = g.n
    back: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        back[v].append(u)
    remaining = [0] * n
    left = g.m
    for i in range(n):
        left -= len(back[i])
        remaining[i] = left
    odd = [d % 2 for d in g.degrees()]
    odd_after = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        odd_after[i] = odd_after[i + 1] + odd[i]
    target_parity = (g.m // 2) % 2 if g.m % 2 == 0 else None
    cap = (n + 1) // 2
    ones_totals = sorted({n // 2, (n + 1) // 2})
    labels = [0] * n

    def parity_possible(i: int, ones: int, parity: int) -> bool:
        if target_parity is None:
            return True
        ro = odd_after[i]
        re = (n - i) - ro
        for total in ones_totals:
            t = total - ones
            if not 0 <= t <= n - i:
                continue
            lo, hi = max(0, t - re), min(ro, t)
            if lo > hi:
                continue
            if lo < hi or (parity + lo) % 2 == target_parity:
                return True
        return False

    def extend(i: int, zeros: int, ones: int, signed: int, parity: int) -> bool:
        if i == n:
            return True
        for x in (0, 1):
            if (zeros if x == 0 else ones) >= cap:
                continue
            s = signed
            for j in back[i]:
                s += 1 if labels[j] == x else -1
            if abs(s) - remaining[i] > 1:
                continue
            p = parity ^ (odd[i] & x)
            if not parity_possible(i + 1, ones + x, p):
                continue
            labels[i] = x
            if extend(i + 1, zeros + (1 - x), ones + x, s, p):
                return True
            if i == 0:
                break
        return False

    return tuple(labels) if extend(0, 0, 0, 0, 0) else None


def find_cordial_labeling(
    g: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES, workers: int = 1
) -> Labeling | None:
    """Lexicographically smallest cordial labeling, or None if ``g`` is not cordial."""
    _check_cap(g, max_vertices)
    if g.n == 0:
        return ()
    if g.n > SCAN_VERTEX_LIMIT:
        return _backtrack_cordial(g)
    found = _scan(g, CORDIAL_FIRST, workers)
    return None if found is None else found[1]


# -- complete multipartite graphs via per-part counts ------------------------

@dataclass(frozen=True)
class PartCountLabeling:
    """Part ``i`` gets ``zeros[i]`` vertices labeled 0 and the rest labeled 1."""

    spec: PartSpec
    zeros: tuple[int, ...] = field(default=())

    def __post_init__(self):
        zeros = tuple(int(z) for z in self.zeros)
        object.__setattr__(self, "zeros", zeros)
        if len(zeros) != len(self.spec.sizes):
            raise InvalidSpecError(f"{len(zeros)} zero counts for {len(self.spec.sizes)} parts")
        for z, s in zip(zeros, self.spec.sizes):
            if not 0 <= z <= s:
                raise InvalidSpecError(f"zero count {z} outside [0, {s}]")

    @property
    def ones(self) -> tuple[int, ...]:
        return tuple(s - z for s, z in zip(self.spec.sizes, self.zeros))

    @property
    def excess(self) -> tuple[int, ...]:
        """Per-part zeros minus ones."""
        return tuple(2 * z - s for s, z in zip(self.spec.sizes, self.zeros))

    @property
    def friendly(self) -> bool:
        return abs(sum(self.excess)) <= 1

    def pair_counts(self, i: int, j: int) -> tuple[int, int]:
        """Edge label counts ``(zeros_e, ones_e)`` between parts ``i`` and ``j``."""
        zi, zj = self.zeros[i], self.zeros[j]
        oi, oj = self.spec.sizes[i] - zi, self.spec.sizes[j] - zj
        return zi * zj + oi * oj, zi * oj + oi * zj

    def pair_deficit(self, i: int, j: int) -> int:
        a, b = self.pair_counts(i, j)
        return abs(a - b)

    def edge_counts(self) -> tuple[int, int]:
        zeros_e = ones_e = 0
        p = len(self.zeros)
        for i in range(p):
            for j in range(i + 1, p):
                a, b = self.pair_counts(i, j)
                zeros_e += a
                ones_e += b
        return zeros_e, ones_e

    @property
    def deficit(self) -> int:
        a, b = self.edge_counts()
        return abs(a - b)

    def labeling(self) -> Labeling:
        """Vertex labeling on ``complete_multipartite(spec)``, zeros first in each block."""
        out: list[int] = []
        for s, z in zip(self.spec.sizes, self.zeros):
            out.extend([0] * z + [1] * (s - z))
        return tuple(out)


def _signature_tables(spec: PartSpec, max_states: int) -> list[set[tuple[int, int]]]:
    """``tables[i]`` holds every ``(sum d, sum d^2)`` reachable by parts ``i..``,
    where ``d`` is a part's zeros-minus-ones excess.

    Zeros minus ones over all edges equals the sum of ``d_i d_j`` over part
    pairs, i.e. ``((sum d)^2 - sum d^2) / 2``, so this pair is all a labeling
    contributes to either objective.
    """
    p = len(spec.sizes)
    tables: list[set[tuple[int, int]]] = [set() for _ in range(p + 1)]
    tables[p] = {(0, 0)}
    visited = 1
    for i in range(p - 1, -1, -1):
        s = spec.sizes[i]
        nxt = tables[i + 1]
        cur = tables[i]
        for z in range(s + 1):
            d = 2 * z - s
            for dsum, sq in nxt:
                cur.add((dsum + d, sq + d * d))
        visited += len(cur)
        if visited > max_states:
            raise ResourceLimitError(
                f"part-count search for {spec} exceeds {max_states} states"
            )
    return tables


def _best_part_counts(spec: PartSpec, mode: str, max_states: int) -> tuple[int, PartCountLabeling] | None:
    tables = _signature_tables(spec, max_states)
    scored = {}
    for dsum, sq in tables[0]:
        signed = (dsum * dsum - sq) // 2
        if mode == FRIENDLY_MIN and abs(dsum) <= 1:
            scored[(dsum, sq)] = abs(signed)
        elif mode == CVD_MIN and abs(signed) <= 1:
            scored[(dsum, sq)] = max(0, abs(dsum) - 1)
    if not scored:
        return None
    best = min(scored.values())
    targets = [t for t, v in scored.items() if v == best]
    zeros: list[int] = []
    acc_d = acc_q = 0
    for i, s in enumerate(spec.sizes):
        for z in range(s, -1, -1):
            d = 2 * z - s
            rest = tables[i + 1]
            if any((td - acc_d - d, tq - acc_q - d * d) in rest for td, tq in targets):
                zeros.append(z)
                acc_d += d
                acc_q += d * d
                break
    return best, PartCountLabeling(spec, tuple(zeros))


def multipartite_min_deficit(
    spec: PartSpec | Sequence[int], max_states: int = DEFAULT_MAX_STATES
) -> tuple[int, PartCountLabeling]:
    """Minimum friendly deficit of ``complete_multipartite(spec)``.

    The witness is the optimum whose expanded vertex labeling is
    lexicographically smallest (zeros placed first inside every part).
    """
    spec = spec if isinstance(spec, PartSpec) else PartSpec(spec)
    found = _best_part_counts(spec, FRIENDLY_MIN, max_states)
    assert found is not None
    return found


def multipartite_cvd(
    spec: PartSpec | Sequence[int], max_states: int = DEFAULT_MAX_STATES
) -> DeficiencyValue:
    spec = spec if isinstance(spec, PartSpec) else PartSpec(spec)
    found = _best_part_counts(spec, CVD_MIN, max_states)
    if found is None:
        return INFINITE
    value, pcl = found
    excess = sum(pcl.excess)
    minority = 0 if excess < 0 else 1
    return DeficiencyValue(value, pcl.labeling(), added_vertex_labels=(minority,) * value)


def multipartite_ced(
    spec: PartSpec | Sequence[int], max_states: int = DEFAULT_MAX_STATES
) -> DeficiencyValue:
    deficit, pcl = multipartite_min_deficit(spec, max_states)
    f = pcl.labeling()
    g = complete_multipartite(pcl.spec)
    return DeficiencyValue(max(0, deficit - 1), f, tuple(augmenting_edges(g, f)))


def balance_switch(pcl: PartCountLabeling, i: int, ell: int) -> PartCountLabeling:
    """Trade a 0 of part ``ell`` for a 1 of part ``i``.

    Requires ``i`` to hold more ones than zeros, ``ell`` more zeros than ones,
    and at least one of the two to be off balance by two or more; only then
    does the pair deficit strictly drop.
    """
    if not pcl.friendly:
        raise InvalidSwitchError("balance_switch requires a friendly labeling")
    p = len(pcl.zeros)
    if not (0 <= i < p and 0 <= ell < p) or i == ell:
        raise InvalidSwitchError(f"invalid part pair ({i}, {ell})")
    di, dl = pcl.excess[i], pcl.excess[ell]
    if not (di < 0 < dl):
        raise InvalidSwitchError(f"part {i} must be short of zeros and part {ell} over, got {di}, {dl}")
    if max(-di, dl) < 2:
        raise InvalidSwitchError(f"parts {i} and {ell} are already roughly balanced")
    zeros = list(pcl.zeros)
    zeros[i] += 1
    zeros[ell] -= 1
    return replace(pcl, zeros=tuple(zeros))


def next_switch(pcl: PartCountLabeling) -> tuple[int, int] | None:
    """Lowest-index unbalanced part, paired with the lowest-index part of the other sign."""
    excess = pcl.excess
    for j, d in enumerate(excess):
        if abs(d) >= 2:
            if d < 0:
                return j, next(x for x, e in enumerate(excess) if e > 0)
            return next(x for x, e in enumerate(excess) if e < 0), j
    return None


def balance_optimize(pcl: PartCountLabeling) -> PartCountLabeling:
    if not pcl.friendly:
        raise PreconditionError("balance_optimize requires a friendly labeling")
    while (pair := next_switch(pcl)) is not None:
        pcl = balance_switch(pcl, *pair)
    return pcl


def friendly_part_counts(spec: PartSpec, rng) -> PartCountLabeling:
    """A uniformly random friendly per-part labeling (vertex-level uniform).

    ``rng`` is a :class:`random.Random`.
    """
    total = spec.total
    zeros_total = total // 2 if rng.random() < 0.5 else (total + 1) // 2
    chosen = set(rng.sample(range(total), zeros_total))
    zeros = [sum(1 for v in block if v in chosen) for block in spec.blocks]
    return PartCountLabeling(spec, tuple(zeros))


# -- product experiments ------------------------------------------------------

SCAN_MAX_FACTOR_VERTICES = 8
SCAN_MAX_PRODUCT_VERTICES = 40


@dataclass(frozen=True)
class ScanRow:
    g1: str
    g2: str
    g1_edges: int
    g2_edges: int
    induced_cordial: bool
    found: bool
    witness: Labeling | None = None


def conjecture_scan(
    max_vertices: int,
    right_factors: Sequence[str] | None = None,
    min_vertices: int = 2,
    max_product_vertices: int = SCAN_MAX_PRODUCT_VERTICES,
) -> list[ScanRow]:
    """Tensor products with a connected bipartite left factor of odd size.

    Every connected bipartite simple graph with an odd number of edges and
    ``min_vertices..max_vertices`` vertices is paired with each named right
    factor. Both factors get their lexicographically smallest cordial
    labeling; a row records whether the induced product labeling is cordial
    and whether the product has any cordial labeling at all.
    """
    from .catalog import TENSOR_RIGHT_FACTORS, connected_bipartite_graphs, named_graph
    from .graph import tensor_product
    from .labeling import deficit_report, induced_tensor_labeling

    if max_vertices > SCAN_MAX_FACTOR_VERTICES:
        raise ResourceLimitError(
            f"scan over left factors with up to {max_vertices} vertices exceeds the cap of "
            f"{SCAN_MAX_FACTOR_VERTICES}"
        )
    names = TENSOR_RIGHT_FACTORS if right_factors is None else tuple(right_factors)
    right = []
    for name in names:
        g2 = named_graph(name)
        f2 = find_cordial_labeling(g2)
        if f2 is not None:
            right.append((name, g2, f2))
    rows = []
    for n in range(max(min_vertices, 1), max_vertices + 1):
        for name1, g1 in connected_bipartite_graphs(n):
            if g1.m % 2 == 0:
                continue
            f1 = find_cordial_labeling(g1)
            if f1 is None:
                continue
            for name2, g2, f2 in right:
                prod = tensor_product(g1, g2)
                if prod.n > max_product_vertices:
                    raise ResourceLimitError(
                        f"product {name1} x {name2} has {prod.n} vertices, over the cap of "
                        f"{max_product_vertices}"
                    )
                induced = deficit_report(prod, induced_tensor_labeling(f1, f2, g1, g2)).cordial
                witness = find_cordial_labeling(prod, max_vertices=max_product_vertices)
                rows.append(ScanRow(name1, name2, g1.m, g2.m, induced, witness is not None, witness))
    return rows
