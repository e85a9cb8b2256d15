"""Cross-checks of every closed form against exhaustive search.

Each check returns a :class:`CheckResult`; ``run_all`` drives the whole
suite for ``cordial verify-theorems``. Checks marked non-gating gather
evidence about open statements and never affect the exit status.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .catalog import (
    TENSOR_EVEN_LEFT_FACTORS,
    TENSOR_ODD_LEFT_FACTORS,
    TENSOR_RIGHT_FACTORS,
    named_graph,
)
from .closed_forms import (
    ced_multipartite,
    cvd_complete,
    is_cordial_multipartite,
    net_deficit_even,
    net_deficit_odd,
    square_form,
    theorem5_labeling,
)
from .graph import (
    PartSpec,
    complete,
    complete_multipartite,
    compositions,
    counterexample1,
    tensor_product,
)
from .labeling import deficit_report, induced_tensor_labeling
from .search import (
    PartCountLabeling,
    balance_optimize,
    balance_switch,
    ced_exhaustive,
    conjecture_scan,
    cvd_exhaustive,
    find_cordial_labeling,
    friendly_part_counts,
    min_friendly_deficit,
    multipartite_min_deficit,
    next_switch,
)
from .tensor import decompose_tensor, piece_label_split, theorem6_check

COUNTEREXAMPLE1_LABELING = (0, 1, 1, 1, 0, 0, 1, 0)

CHECKS = (
    "edge-deficiency",
    "cordiality",
    "net-deficit",
    "complete-cvd",
    "vertex-augmentation",
    "tensor-induced",
    "join-converse",
    "switching",
)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    gating: bool = True
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)


def _specs(max_total: int):
    for total in range(1, max_total + 1):
        for sizes in compositions(total):
            yield PartSpec(sizes)


def check_edge_deficiency(max_total: int = 12, fault: bool = False) -> CheckResult:
    res = CheckResult("edge-deficiency")
    for spec in _specs(max_total):
        res.cases += 1
        expected = ced_multipartite(spec) + (1 if fault and spec.k == 4 else 0)
        got = ced_exhaustive(complete_multipartite(spec)).value
        if got != expected:
            res.fail(f"{spec}: exhaustive ced {got}, closed form {expected}")
    return res


def check_cordiality(max_total: int = 12, fault: bool = False) -> CheckResult:
    res = CheckResult("cordiality")
    for spec in _specs(max_total):
        res.cases += 1
        expected = is_cordial_multipartite(spec) != (fault and spec.k == 4)
        got = find_cordial_labeling(complete_multipartite(spec)) is not None
        if got != expected:
            res.fail(f"{spec}: cordial labeling found={got}, closed form says {expected}")
    return res


def check_net_deficit(max_total: int = 12, fault: bool = False) -> CheckResult:
    res = CheckResult("net-deficit")
    for k in range(0, 101):
        res.cases += 1
        value = net_deficit_odd(k) if k % 2 else net_deficit_even(k)
        if fault and k == 4:
            value += 1
        if value != k // 2:
            res.fail(f"k={k}: binomial expression gives {value}, expected {k // 2}")
    for spec in _specs(max_total):
        res.cases += 1
        part_count, _ = multipartite_min_deficit(spec)
        brute, _ = min_friendly_deficit(complete_multipartite(spec))
        if not part_count == brute == spec.k // 2:
            res.fail(f"{spec}: part-count {part_count}, brute force {brute}, k//2 = {spec.k // 2}")
    return res


def check_complete_cvd(max_n: int = 16, fault: bool = False) -> CheckResult:
    res = CheckResult("complete-cvd")
    for n in range(1, max_n + 1):
        res.cases += 1
        closed = cvd_complete(n).value
        if fault and n == 4:
            closed = 0
        brute = cvd_exhaustive(complete(n)).value
        if closed != brute:
            res.fail(f"K_{n}: exhaustive cvd {brute}, closed form {closed}")
    return res


def check_vertex_augmentation(max_total: int = 14, fault: bool = False) -> CheckResult:
    res = CheckResult("vertex-augmentation")
    for spec in _specs(max_total):
        n = spec.k
        if n < 1 or not square_form(n).exists:
            continue
        res.cases += 1
        built = theorem5_labeling(spec)
        bound = built.j - 1 - (1 if fault and n == 4 else 0)
        g = complete_multipartite(spec).add_isolated(built.added)
        report = deficit_report(g, built.augmented_labeling)
        if not report.cordial or built.added > bound:
            res.fail(f"{spec}: added {built.added} (bound {bound}), cordial={report.cordial}")
    return res


def tensor_pairs():
    """``(name1, g1, f1, name2, g2, f2)`` for every catalog pair."""
    right = []
    for name in TENSOR_RIGHT_FACTORS:
        g2 = named_graph(name)
        f2 = find_cordial_labeling(g2)
        if f2 is not None:
            right.append((name, g2, f2))
    for name1 in TENSOR_EVEN_LEFT_FACTORS:
        g1 = named_graph(name1)
        f1 = find_cordial_labeling(g1)
        if f1 is None:
            continue
        for name2, g2, f2 in right:
            yield name1, g1, f1, name2, g2, f2


def check_tensor_induced(fault: bool = False) -> CheckResult:
    res = CheckResult("tensor-induced")
    for name1, g1, f1, name2, g2, f2 in tensor_pairs():
        res.cases += 1
        label = f"{name1} x {name2}"
        try:
            labeling, report = theorem6_check(g1, f1, g2, f2)
        except AssertionError as exc:
            res.fail(f"{label}: {exc}")
            continue
        dec = decompose_tensor(g1, g2)
        half = g1.m // 2
        for idx in range(len(dec.pieces)):
            split = piece_label_split(dec, labeling, idx)
            if fault and idx == 0:
                split = (split[0] + 1, split[1])
            if split != (half, half):
                res.fail(f"{label}: piece {idx} splits {split}")
        if len(dec.pieces) != 2 * g2.m:
            res.fail(f"{label}: {len(dec.pieces)} pieces, expected {2 * g2.m}")
    return res


def check_join_converse(fault: bool = False) -> CheckResult:
    res = CheckResult("join-converse")
    g, names = counterexample1()
    f = COUNTEREXAMPLE1_LABELING
    if fault:
        f = (1,) + f[1:]
    res.cases = 4
    if (g.n, g.m) != (8, 18):
        res.fail(f"graph has {g.n} vertices / {g.m} edges, expected 8 / 18")
    report = deficit_report(g, f)
    if not (report.cordial and report.zeros_e == report.ones_e == 9):
        res.fail(f"labeling is not a 9/9 cordial labeling: {report}")
    if find_cordial_labeling(complete(4)) is not None:
        res.fail("K_4 has a cordial labeling")
    h2 = [names.index("c"), names.index("d")]
    if sum(f[v] for v in h2) * 2 == len(h2):
        res.fail("labeling is balanced on H_2, so it does not refute the converse")
    return res


def check_switching(
    trials: int = 1000, max_total: int = 40, brute_total: int = 12, seed: int = 0, fault: bool = False
) -> CheckResult:
    res = CheckResult("switching")
    rng = random.Random(seed)
    for _ in range(trials):
        parts = rng.randint(2, 8)
        sizes = [rng.randint(1, 8) for _ in range(parts)]
        while sum(sizes) > max_total:
            sizes.pop()
        if len(sizes) < 2:
            sizes = [rng.randint(1, 8), rng.randint(1, 8)]
        spec = PartSpec(sizes)
        pcl = friendly_part_counts(spec, rng)
        res.cases += 1
        start = pcl
        while (pair := next_switch(pcl)) is not None:
            i, ell = pair
            after = balance_switch(pcl, i, ell)
            before_pair = pcl.pair_deficit(i, ell)
            after_pair = after.pair_deficit(i, ell)
            if fault:
                after_pair = before_pair
            if after_pair >= before_pair:
                res.fail(f"{spec} {pcl.zeros}: switch ({i},{ell}) pair deficit {before_pair} -> {after_pair}")
            _check_untouched(res, spec, pcl, after, i, ell)
            pcl = after
        final = balance_optimize(start)
        if final != pcl:
            res.fail(f"{spec}: balance_optimize disagrees with the stepwise run")
        best, _ = multipartite_min_deficit(spec)
        if final.deficit != best:
            res.fail(f"{spec}: optimizer reaches {final.deficit}, minimum is {best}")
        if spec.total <= brute_total:
            brute, _ = min_friendly_deficit(complete_multipartite(spec))
            if brute != final.deficit:
                res.fail(f"{spec}: optimizer reaches {final.deficit}, brute force {brute}")
    return res


def _check_untouched(res, spec, before: PartCountLabeling, after: PartCountLabeling, i: int, ell: int) -> None:
    p = len(spec.sizes)
    for a in range(p):
        for b in range(a + 1, p):
            if {a, b} & {i, ell}:
                continue
            if before.pair_counts(a, b) != after.pair_counts(a, b):
                res.fail(f"{spec}: switch ({i},{ell}) changed pair ({a},{b})")
    for j in range(p):
        if j in (i, ell):
            continue
        merged_before = tuple(map(sum, zip(before.pair_counts(i, j), before.pair_counts(ell, j))))
        merged_after = tuple(map(sum, zip(after.pair_counts(i, j), after.pair_counts(ell, j))))
        if merged_before != merged_after:
            res.fail(f"{spec}: switch ({i},{ell}) changed edges from part {j} to the switched pair")


def check_odd_edge_observation(max_vertices: int = 4) -> CheckResult:
    """Non-gating: induced labelings with odd-size left factors, and whether
    the product is cordial at all."""
    res = CheckResult("odd-edge-observation", gating=False)
    for name1 in TENSOR_ODD_LEFT_FACTORS:
        g1 = named_graph(name1)
        f1 = find_cordial_labeling(g1)
        for name2 in TENSOR_RIGHT_FACTORS:
            g2 = named_graph(name2)
            f2 = find_cordial_labeling(g2)
            if f2 is None:
                continue
            res.cases += 1
            prod = tensor_product(g1, g2)
            induced = deficit_report(prod, induced_tensor_labeling(f1, f2, g1, g2)).cordial
            found = find_cordial_labeling(prod, max_vertices=prod.n) is not None
            if induced:
                res.fail(f"{name1} x {name2}: induced labeling is cordial")
            if not found:
                res.fail(f"{name1} x {name2}: product has no cordial labeling")
    return res


def check_conjecture(max_vertices: int = 5) -> CheckResult:
    res = CheckResult("conjecture-scan", gating=False)
    for row in conjecture_scan(max_vertices):
        res.cases += 1
        if not row.found:
            res.fail(f"{row.g1} x {row.g2}: no cordial labeling of the product")
    return res


def run_all(max_total: int = 12, fault: str | None = None, seed: int = 0) -> list[CheckResult]:
    if fault is not None and fault not in CHECKS:
        raise ValueError(f"unknown check {fault!r}; choose from {', '.join(CHECKS)}")
    jobs = [
        lambda: check_edge_deficiency(max_total, fault == "edge-deficiency"),
        lambda: check_cordiality(max_total, fault == "cordiality"),
        lambda: check_net_deficit(max_total, fault == "net-deficit"),
        lambda: check_complete_cvd(16, fault == "complete-cvd"),
        lambda: check_vertex_augmentation(max_total + 2, fault == "vertex-augmentation"),
        lambda: check_tensor_induced(fault == "tensor-induced"),
        lambda: check_join_converse(fault == "join-converse"),
        lambda: check_switching(1000, 40, max_total, seed, fault == "switching"),
        lambda: check_odd_edge_observation(),
        lambda: check_conjecture(min(max_total, 5)),
    ]
    results = []
    for job in jobs:
        start = time.perf_counter()
        res = job()
        res.seconds = time.perf_counter() - start
        results.append(res)
    return results
