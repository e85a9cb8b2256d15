"""Closed-form cordiality results for complete and complete multipartite graphs."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt
from typing import Sequence

from .errors import NotApplicableError
from .graph import PartSpec, complete_multipartite
from .labeling import Labeling, deficit_report
from .search import INFINITE, DeficiencyValue

SQUARE_OFFSETS = (-2, 0, 2)


def _as_spec(spec: PartSpec | Sequence[int]) -> PartSpec:
    return spec if isinstance(spec, PartSpec) else PartSpec(spec)


def is_cordial_multipartite(spec: PartSpec | Sequence[int]) -> bool:
    return _as_spec(spec).k <= 3


def ced_multipartite(spec: PartSpec | Sequence[int]) -> int:
    return max(0, _as_spec(spec).k // 2 - 1)


def net_deficit_odd(k: int) -> int:
    """Net deficit of a balanced labeling with ``k`` odd parts, ``k`` odd."""
    lo, hi = (k - 1) // 2, (k + 1) // 2
    return abs(comb(lo, 2) + comb(hi, 2) - lo * hi)


def net_deficit_even(k: int) -> int:
    half = k // 2
    return abs(2 * comb(half, 2) - half * half)


def net_multipartite_deficit(k: int) -> int:
    """Deficit left once every part is split as evenly as possible.

    Equals ``k // 2``; the edge deficiency is one less, floored at 0.
    """
    if k < 0:
        raise ValueError(f"odd part count must be nonnegative, got {k}")
    return net_deficit_odd(k) if k % 2 else net_deficit_even(k)


@dataclass(frozen=True)
class SquareForm:
    """``n = j**2 + delta`` with ``delta`` in (-2, 0, 2), when such a split exists."""

    n: int
    j: int | None = None
    delta: int | None = None

    def __post_init__(self):
        if self.j is not None:
            assert self.j >= 1 and self.delta in SQUARE_OFFSETS
            assert self.n == self.j * self.j + self.delta

    @property
    def exists(self) -> bool:
        return self.j is not None


def square_forms(n: int) -> list[SquareForm]:
    """Every valid ``(j, delta)`` split of ``n``; at most one for ``n >= 1``."""
    out = []
    for delta in SQUARE_OFFSETS:
        r = n - delta
        if r >= 1:
            j = isqrt(r)
            if j * j == r:
                out.append(SquareForm(n, j, delta))
    return out


def square_form(n: int) -> SquareForm:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    forms = square_forms(n)
    return forms[0] if forms else SquareForm(n)


def cvd_complete(n: int) -> DeficiencyValue:
    """Cordial vertex deficiency of ``K_n``.

    ``K_1``..``K_3`` are cordial, so their deficiency is 0 even where the
    square form would suggest otherwise (``2 = 2**2 - 2``).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n <= 3:
        return DeficiencyValue(0)
    form = square_form(n)
    if not form.exists:
        return INFINITE
    return DeficiencyValue(form.j - 1)


def complete_split(n: int) -> int:
    """Zero count ``a`` for ``K_n`` with edge deficit at most 1 and the smallest
    vertex imbalance, preferring more zeros on ties; -1 if none exists."""
    best, best_imbalance = -1, None
    for a in range(n, -1, -1):
        signed = comb(a, 2) + comb(n - a, 2) - a * (n - a)
        if abs(signed) <= 1:
            imbalance = abs(2 * a - n)
            if best_imbalance is None or imbalance < best_imbalance:
                best, best_imbalance = a, imbalance
    return best


@dataclass(frozen=True)
class VertexAugmentation:
    spec: PartSpec
    labeling: Labeling
    added_vertex_labels: Labeling
    j: int
    representatives: tuple[int, ...]

    @property
    def added(self) -> int:
        return len(self.added_vertex_labels)

    @property
    def augmented_labeling(self) -> Labeling:
        return self.labeling + self.added_vertex_labels


def theorem5_labeling(spec: PartSpec | Sequence[int]) -> VertexAugmentation:
    """Labeling of ``complete_multipartite(spec)`` plus at most ``j - 1`` isolated
    vertices that together form a cordial labeling.

    One representative vertex (the last of its block) is set aside from each
    odd part. Everything else is split evenly inside its part, which leaves
    every cross-part edge count balanced. The representatives span a
    ``K_n``, labeled by :func:`complete_split`; isolated vertices then
    absorb the remaining vertex imbalance.
    """
    spec = _as_spec(spec)
    n = spec.k
    form = square_form(n) if n >= 1 else SquareForm(0)
    if n < 1 or not form.exists:
        raise NotApplicableError(
            f"{spec} has {n} odd parts, which is not of the form j^2 + delta with delta in {{-2, 0, 2}}"
        )
    a = complete_split(n)
    labels: list[int] = []
    reps: list[int] = []
    rep_index = 0
    for block, s in zip(spec.blocks, spec.sizes):
        half = (s - s % 2) // 2
        labels.extend([0] * half + [1] * half)
        if s % 2:
            labels.append(0 if rep_index < a else 1)
            reps.append(block[-1])
            rep_index += 1
    imbalance = abs(2 * a - n)
    minority = 1 if 2 * a > n else 0
    added = (minority,) * max(0, imbalance - 1)
    result = VertexAugmentation(spec, tuple(labels), added, form.j, tuple(reps))
    g = complete_multipartite(spec).add_isolated(result.added)
    assert deficit_report(g, result.augmented_labeling).cordial
    assert result.added <= form.j - 1
    return result
