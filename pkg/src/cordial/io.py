"""Text formats for graphs and labelings.

Edge list::

    n m
    #name <index> <string>     (optional, any number)
    u v                        (m lines; repeats encode multiplicity)

Lines starting with ``#`` are comments. A labeling is a single line of
``n`` characters from ``{0, 1}``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

from .errors import CordialError, ParseError
from .graph import Multigraph
from .labeling import Labeling


def format_edge_list(g: Multigraph, names: Mapping[int, str] | Sequence[str] | None = None) -> str:
    lines = [f"{g.n} {g.m}"]
    if names:
        items = names.items() if isinstance(names, Mapping) else enumerate(names)
        lines += [f"#name {i} {name}" for i, name in sorted(items)]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> tuple[Multigraph, dict[int, str]]:
    header = None
    edges: list[tuple[int, int]] = []
    names: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith("#name"):
                parts = line.split(maxsplit=2)
                if len(parts) != 3 or not parts[1].isdigit():
                    raise ParseError("expected '#name <index> <string>'", lineno)
                names[int(parts[1])] = parts[2]
            continue
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            what = "header 'n m'" if header is None else "edge 'u v'"
            raise ParseError(f"expected {what}, got {raw!r}", lineno)
        a, b = int(fields[0]), int(fields[1])
        if header is None:
            header = (a, b)
            continue
        if a == b:
            raise ParseError(f"loop at vertex {a}", lineno)
        if a >= header[0] or b >= header[0]:
            raise ParseError(f"vertex out of range [0, {header[0]})", lineno)
        edges.append((a, b))
    if header is None:
        raise ParseError("missing header line 'n m'")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges but {len(edges)} were given")
    bad = [i for i in names if i >= n]
    if bad:
        raise ParseError(f"name given for vertex {bad[0]} outside [0, {n})")
    return Multigraph(n, edges), names


def format_labeling(f: Sequence[int]) -> str:
    return "".join(str(int(x)) for x in f) + "\n"


def parse_labeling(text: str) -> Labeling:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 1:
        raise ParseError(f"a labeling is a single line of 0/1 characters, found {len(lines)} lines")
    line = lines[0]
    for pos, ch in enumerate(line):
        if ch not in "01":
            raise ParseError(f"invalid label {ch!r} at position {pos}", 1)
    return tuple(int(ch) for ch in line)


def read_graph(path: str | Path) -> tuple[Multigraph, dict[int, str]]:
    try:
        return parse_edge_list(Path(path).read_text())
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    except CordialError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def read_labeling(path: str | Path) -> Labeling:
    try:
        return parse_labeling(Path(path).read_text())
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc
