"""Command-line interface: ``cordial <subcommand> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import closed_forms as cf
from .catalog import named_graph
from .errors import CordialError, NotApplicableError, ParseError, PreconditionError, ResourceLimitError
from .graph import (
    JoinSpec,
    PartSpec,
    complete,
    complete_multipartite,
    counterexample1,
    cycle,
    edgeless,
    lee_liu_join,
    path,
    star,
    tensor_product,
)
from .io import format_edge_list, format_labeling, read_graph, read_labeling
from .labeling import augmenting_edges, deficit_report, edges_needed
from .search import (
    DEFAULT_MAX_STATES,
    DEFAULT_MAX_VERTICES,
    ced_exhaustive,
    conjecture_scan,
    cvd_exhaustive,
    find_cordial_labeling,
    multipartite_ced,
    multipartite_cvd,
)
from .verify import CHECKS, run_all

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class Report:
    """Ordered result fields plus status, rendered in one write."""

    def __init__(self, command: str, digest_source: str):
        self.command = command
        self.digest = hashlib.sha256(digest_source.encode()).hexdigest()[:16]
        self.fields: dict[str, object] = {}
        self.rows: list[dict[str, object]] = []
        self.status = "ok"
        self.exit_code = EXIT_OK
        self._start = time.perf_counter()

    def __setitem__(self, key: str, value: object) -> None:
        self.fields[key] = value

    def mismatch(self) -> None:
        self.status = "mismatch"
        self.exit_code = EXIT_MISMATCH

    def render(self, fmt: str) -> str:
        head = {"command": self.command, "input_digest": self.digest}
        tail = {"status": self.status, "seconds": f"{time.perf_counter() - self._start:.3f}"}
        fields = {**head, **self.fields, **tail}
        if fmt == "json":
            payload = {k: _plain(v) for k, v in fields.items()}
            if self.rows:
                payload["rows"] = [{k: _plain(v) for k, v in row.items()} for row in self.rows]
            return json.dumps(payload, indent=2) + "\n"
        if fmt == "kv":
            lines = [f"{k}={_text(v)}" for k, v in fields.items()]
            for i, row in enumerate(self.rows):
                lines += [f"row.{i}.{k}={_text(v)}" for k, v in row.items()]
            return "\n".join(lines) + "\n"
        width = max(len(k) for k in fields)
        lines = [f"{k:<{width}}  {_text(v)}" for k, v in fields.items()]
        if self.rows:
            cols = list(self.rows[0])
            widths = {c: max(len(c), *(len(_text(r[c])) for r in self.rows)) for c in cols}
            lines.append("")
            lines.append("  ".join(f"{c:<{widths[c]}}" for c in cols).rstrip())
            for r in self.rows:
                lines.append("  ".join(f"{_text(r[c]):<{widths[c]}}" for c in cols).rstrip())
        return "\n".join(lines) + "\n"


def _text(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    return str(value)


def _plain(value: object) -> object:
    if isinstance(value, (bool, int, float)) or value is None:
        return value
    return str(value)


def _labeling_text(f) -> str:
    return "-" if f is None else format_labeling(f).strip()


def _edges_text(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges) or "-"


# -- graph selection ----------------------------------------------------------

def _target(args) -> tuple[str, object]:
    """``("file", graph)``, ``("multipartite", spec)`` or ``("complete", n)``."""
    chosen = [x for x in (args.graph, args.multipartite, args.complete) if x is not None]
    if len(chosen) != 1:
        raise _Usage("give exactly one of GRAPH, --multipartite or --complete")
    if args.graph is not None:
        return "file", read_graph(args.graph)[0]
    if args.multipartite is not None:
        return "multipartite", PartSpec.parse(args.multipartite)
    if args.complete < 1:
        raise _Usage("--complete needs n >= 1")
    return "complete", args.complete


class _Usage(Exception):
    pass


def _digest_args(args) -> str:
    parts = [f"{k}={v}" for k, v in sorted(vars(args).items()) if k not in ("func", "format")]
    graph = getattr(args, "graph", None)
    if graph:
        parts.append(Path(graph).read_text())
    return "\n".join(parts)


# -- subcommands --------------------------------------------------------------

def cmd_deficit(args, report: Report) -> None:
    g, _ = read_graph(args.graph)
    f = read_labeling(args.labeling)
    if len(f) != g.n:
        raise ParseError(f"{args.labeling}: labeling has {len(f)} entries, graph has {g.n} vertices")
    rep = deficit_report(g, f)
    for key, value in rep.as_dict().items():
        report[key] = value
    if rep.friendly:
        report["edges_needed"] = edges_needed(g, f)
        try:
            report["added_edges"] = _edges_text(augmenting_edges(g, f))
        except PreconditionError as exc:
            report["added_edges"] = f"impossible ({exc})"


def cmd_ced(args, report: Report) -> None:
    kind, target = _target(args)
    if kind == "file":
        value = ced_exhaustive(target, args.max_vertices, args.workers)
        report["method"] = "exhaustive"
        report["ced"] = value
        report["witness"] = _labeling_text(value.labeling)
        report["added_edges"] = _edges_text(value.added_edges)
        return
    spec = target if kind == "multipartite" else PartSpec([1] * target)
    closed = cf.ced_multipartite(spec)
    counted = multipartite_ced(spec, args.max_states)
    report["k"] = spec.k
    report["ced"] = closed
    report["closed_form"] = closed
    report["part_count"] = counted
    values = [closed, counted.value]
    if spec.total <= args.max_vertices:
        brute = ced_exhaustive(complete_multipartite(spec), args.max_vertices, args.workers)
        report["exhaustive"] = brute
        values.append(brute.value)
    else:
        report["exhaustive"] = f"skipped (over {args.max_vertices} vertices)"
    report["witness"] = _labeling_text(counted.labeling)
    report["added_edges"] = _edges_text(counted.added_edges)
    report["agree"] = len(set(values)) == 1
    if not report.fields["agree"]:
        report.mismatch()


def cmd_cvd(args, report: Report) -> None:
    kind, target = _target(args)
    if kind == "file":
        value = cvd_exhaustive(target, args.max_vertices, args.workers)
        report["method"] = "exhaustive"
        report["cvd"] = value
        report["strictly_noncordial"] = value.infinite
        report["witness"] = _labeling_text(value.labeling)
        report["added_vertex_labels"] = "".join(map(str, value.added_vertex_labels)) or "-"
        return
    spec = target if kind == "multipartite" else PartSpec([1] * target)
    counted = multipartite_cvd(spec, args.max_states)
    values = [counted.value]
    ok = True
    if kind == "complete":
        closed = cf.cvd_complete(target)
        report["cvd"] = closed
        report["closed_form"] = closed
        values.append(closed.value)
    else:
        report["cvd"] = counted
        try:
            built = cf.theorem5_labeling(spec)
            report["upper_bound"] = built.j - 1
            ok = counted.value is not None and counted.value <= built.j - 1
            report["bound_holds"] = ok
        except NotApplicableError:
            report["upper_bound"] = "not applicable"
    report["part_count"] = counted
    if spec.total <= args.max_vertices:
        brute = cvd_exhaustive(complete_multipartite(spec), args.max_vertices, args.workers)
        report["exhaustive"] = brute
        values.append(brute.value)
    else:
        report["exhaustive"] = f"skipped (over {args.max_vertices} vertices)"
    report["strictly_noncordial"] = counted.infinite
    report["witness"] = _labeling_text(counted.labeling)
    report["added_vertex_labels"] = "".join(map(str, counted.added_vertex_labels)) or "-"
    report["agree"] = ok and len(set(values)) == 1
    if not report.fields["agree"]:
        report.mismatch()


def cmd_check(args, report: Report) -> None:
    kind, target = _target(args)
    if kind == "file":
        f = find_cordial_labeling(target, args.max_vertices, args.workers)
        report["cordial"] = f is not None
        report["witness"] = _labeling_text(f)
        return
    spec = target if kind == "multipartite" else PartSpec([1] * target)
    closed = cf.is_cordial_multipartite(spec)
    counted = multipartite_ced(spec, args.max_states)
    values = [closed, counted.value == 0]
    report["k"] = spec.k
    report["cordial"] = closed
    report["part_count"] = counted.value == 0
    if spec.total <= args.max_vertices:
        f = find_cordial_labeling(complete_multipartite(spec), args.max_vertices, args.workers)
        report["exhaustive"] = f is not None
        report["witness"] = _labeling_text(f)
        values.append(f is not None)
    else:
        report["exhaustive"] = f"skipped (over {args.max_vertices} vertices)"
    report["agree"] = len(set(values)) == 1
    if not report.fields["agree"]:
        report.mismatch()


def _int_param(params: list[str], kind: str) -> int:
    if len(params) != 1 or not params[0].isdigit():
        raise _Usage(f"construct {kind} takes one integer")
    return int(params[0])


def _parse_pieces(text: str) -> JoinSpec:
    """``"0,1:0,1;1,2:2,3"`` -> G_1={0,1}, H_1={0,1}, G_2={1,2}, H_2={2,3}."""
    gs, hs = [], []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        if chunk.count(":") != 1:
            raise _Usage(f"join piece {chunk!r} must look like 'g,g:h,h'")
        left, right = chunk.split(":")
        try:
            gs.append({int(x) for x in left.split(",") if x.strip()})
            hs.append({int(x) for x in right.split(",") if x.strip()})
        except ValueError as exc:
            raise _Usage(f"join piece {chunk!r} must list integers") from exc
    return JoinSpec(gs, hs)


def construct_graph(kind: str, params: list[str]):
    """Return ``(graph, names)`` for a ``construct`` request."""
    simple = {"complete": complete, "cycle": cycle, "path": path, "edgeless": edgeless, "star": star}
    if kind in simple:
        return simple[kind](_int_param(params, kind)), None
    if kind == "multipartite":
        if len(params) != 1:
            raise _Usage("construct multipartite takes sizes like 2,3,4")
        return complete_multipartite(PartSpec.parse(params[0])), None
    if kind == "tensor":
        if len(params) != 2:
            raise _Usage("construct tensor takes two graph names, e.g. c4 k3")
        return tensor_product(named_graph(params[0]), named_graph(params[1])), None
    if kind == "join":
        if len(params) != 3:
            raise _Usage("construct join takes G H PIECES, e.g. k4 c4 '0,1:0,1;1,2:2,3'")
        return lee_liu_join(named_graph(params[0]), named_graph(params[1]), _parse_pieces(params[2])), None
    if kind == "counterexample1":
        if params:
            raise _Usage("construct counterexample1 takes no parameters")
        return counterexample1()
    raise _Usage(f"unknown construction {kind!r}")


def cmd_construct(args) -> int:
    g, names = construct_graph(args.kind, args.params)
    text = format_edge_list(g, names)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args, report: Report) -> None:
    results = run_all(args.max_total, fault=args.inject_fault, seed=args.seed)
    failed = []
    for res in results:
        report.rows.append(
            {
                "check": res.name,
                "result": "pass" if res.ok else "FAIL",
                "gating": res.gating,
                "cases": res.cases,
                "seconds": f"{res.seconds:.2f}",
            }
        )
        if not res.ok and res.gating:
            failed.append(res)
    report["max_total"] = args.max_total
    report["gating_checks"] = sum(r.gating for r in results)
    report["gating_failures"] = len(failed)
    for res in results:
        for i, msg in enumerate(res.failures[: args.show]):
            report[f"{res.name}.failure.{i}"] = msg
    if failed:
        report.mismatch()


def cmd_scan(args, report: Report) -> None:
    factors = None if args.factors is None else [x for x in args.factors.split(",") if x]
    rows = conjecture_scan(args.max_vertices, right_factors=factors)
    for row in rows:
        report.rows.append(
            {
                "g1": row.g1,
                "g2": row.g2,
                "e1": row.g1_edges,
                "e2": row.g2_edges,
                "induced_cordial": row.induced_cordial,
                "found": row.found,
                "witness": _labeling_text(row.witness),
            }
        )
    report["rows"] = len(rows)
    report["induced_cordial_rows"] = sum(r.induced_cordial for r in rows)
    report["found_rows"] = sum(r.found for r in rows)


# -- argument parsing ---------------------------------------------------------

def _add_target(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="edge-list file")
    p.add_argument("--multipartite", metavar="S1,S2,...", help="complete multipartite graph with these part sizes")
    p.add_argument("--complete", type=int, metavar="N", help="complete graph K_N")
    _add_caps(p)


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.add_argument("--workers", type=int, default=1, help="processes for exhaustive scans")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cordial", description="Cordial labelings: deficits, deficiencies and closed-form checks."
    )
    parser.add_argument("--format", choices=("text", "kv", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deficit", help="deficit report of a labeled graph")
    p.add_argument("graph")
    p.add_argument("labeling")
    p.set_defaults(func=cmd_deficit)

    for name, func, text in (
        ("ced", cmd_ced, "cordial edge deficiency"),
        ("cvd", cmd_cvd, "cordial vertex deficiency"),
        ("check", cmd_check, "is the graph cordial"),
    ):
        p = sub.add_parser(name, help=text)
        _add_target(p)
        p.set_defaults(func=func)

    p = sub.add_parser("construct", help="emit a graph in edge-list format")
    p.add_argument(
        "kind",
        choices=("multipartite", "complete", "cycle", "path", "edgeless", "star", "tensor", "join", "counterexample1"),
    )
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=None)

    p = sub.add_parser("verify-theorems", help="check every closed form against exhaustive search")
    p.add_argument("--max-total", type=int, default=12)
    p.add_argument("--inject-fault", choices=CHECKS, help="corrupt one check to exercise the harness")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--show", type=int, default=5, help="failures listed per check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture-scan", help="tensor products with odd-size bipartite left factors")
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--factors", help="comma-separated right factors, e.g. K2,K3,C5")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = None
    try:
        if args.command == "construct":
            return cmd_construct(args)
        report = Report(args.command, _digest_args(args))
        args.func(args, report)
    except _Usage as exc:
        parser.error(str(exc))
    except ResourceLimitError as exc:
        print(f"cordial: resource limit: {exc}", file=sys.stderr)
        return _failed(report, args.format, "resource-limit", exc, EXIT_RESOURCE)
    except PreconditionError as exc:
        print(f"cordial: error: {exc}", file=sys.stderr)
        return _failed(report, args.format, "precondition-failed", exc, EXIT_USAGE)
    except (ParseError, CordialError, OSError) as exc:
        print(f"cordial: error: {exc}", file=sys.stderr)
        return _failed(report, args.format, "error", exc, EXIT_USAGE)
    sys.stdout.write(report.render(args.format))
    return report.exit_code


def _failed(report: Report | None, fmt: str, status: str, exc: Exception, code: int) -> int:
    """Emit a report carrying only the failure status, when one was started."""
    if report is not None:
        report.fields = {"error": str(exc)}
        report.rows = []
        report.status = status
        sys.stdout.write(report.render(fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
