"""Text formats for instances and certificates.

Instance files follow a DIMACS-flavoured convention::

    # optional comment lines
    p cc <n> <m> <t>
    e <u> <v> <c>        (m lines, 1-based vertex labels, colour in 1..t)

Certificates are either a full vertex colouring (``v <vertex> <colour>``,
one line per vertex) or a deletion set (``d <u> <v>`` lines naming instance
edges).  Lines starting with ``#`` are comments everywhere.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InputError
from .graph import EdgeColouredGraph, VertexColouring


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((number, stripped.split()))
    return lines


def parse_instance(text: str) -> EdgeColouredGraph:
    """Parse instance text; raises InputError with the offending line number."""
    lines = _content_lines(text)
    if not lines:
        raise InputError("no problem line found")
    number, fields = lines[0]
    if len(fields) != 5 or fields[0] != "p" or fields[1] != "cc":
        raise InputError(f"line {number}: expected 'p cc <n> <m> <t>'")
    try:
        n, m, t = int(fields[2]), int(fields[3]), int(fields[4])
    except ValueError as exc:
        raise InputError(f"line {number}: non-integer problem parameters") from exc
    edges: list[tuple[int, int, int]] = []
    for number, fields in lines[1:]:
        if fields[0] != "e" or len(fields) != 4:
            raise InputError(f"line {number}: expected 'e <u> <v> <c>'")
        try:
            u, v, c = int(fields[1]), int(fields[2]), int(fields[3])
        except ValueError as exc:
            raise InputError(f"line {number}: non-integer edge fields") from exc
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"line {number}: vertex label outside 1..{n}")
        edges.append((u - 1, v - 1, c))
    if len(edges) != m:
        raise InputError(f"problem line declares {m} edges, found {len(edges)}")
    try:
        return EdgeColouredGraph(n=n, edges=edges, t=t)
    except InputError as exc:
        raise InputError(f"invalid instance: {exc}") from exc


def emit_instance(g: EdgeColouredGraph, comments: list[str] | None = None) -> str:
    out = [f"# {comment}" for comment in comments or []]
    out.append(f"p cc {g.n} {g.m} {g.t}")
    for u, v, c in g.edges:
        out.append(f"e {u + 1} {v + 1} {c}")
    return "\n".join(out) + "\n"


def read_instance(path: str | Path) -> EdgeColouredGraph:
    return parse_instance(Path(path).read_text())


def write_instance(
    path: str | Path, g: EdgeColouredGraph, comments: list[str] | None = None
) -> None:
    Path(path).write_text(emit_instance(g, comments))


def parse_uncoloured(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Parse an uncoloured edge list: ``p edge <n> <m>`` then ``e <u> <v>``."""
    lines = _content_lines(text)
    if not lines:
        raise InputError("no problem line found")
    number, fields = lines[0]
    if len(fields) != 4 or fields[0] != "p" or fields[1] != "edge":
        raise InputError(f"line {number}: expected 'p edge <n> <m>'")
    try:
        n, m = int(fields[2]), int(fields[3])
    except ValueError as exc:
        raise InputError(f"line {number}: non-integer problem parameters") from exc
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for number, fields in lines[1:]:
        if fields[0] != "e" or len(fields) != 3:
            raise InputError(f"line {number}: expected 'e <u> <v>'")
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError as exc:
            raise InputError(f"line {number}: non-integer edge fields") from exc
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise InputError(f"line {number}: bad edge ({u}, {v})")
        pair = (min(u, v) - 1, max(u, v) - 1)
        if pair in seen:
            raise InputError(f"line {number}: duplicate edge ({u}, {v})")
        seen.add(pair)
        edges.append((u - 1, v - 1))
    if len(edges) != m:
        raise InputError(f"problem line declares {m} edges, found {len(edges)}")
    return n, edges


def emit_colouring_certificate(f: VertexColouring) -> str:
    return "".join(f"v {v + 1} {colour}\n" for v, colour in enumerate(f))


def emit_deletion_certificate(g: EdgeColouredGraph, deleted: set[int]) -> str:
    lines = []
    for index in sorted(deleted):
        u, v, _ = g.edges[index]
        lines.append(f"d {u + 1} {v + 1}\n")
    return "".join(lines)


def parse_certificate(
    text: str, g: EdgeColouredGraph
) -> tuple[str, VertexColouring | set[int]]:
    """Parse a certificate against its instance.

    Returns ("colouring", f) or ("deletion", edge index set); any structural
    problem (mixed kinds, missing or repeated vertices, unknown edges)
    raises InputError.
    """
    lines = _content_lines(text)
    kinds = {fields[0] for _, fields in lines}
    if kinds == {"v"}:
        f: VertexColouring = [0] * g.n
        seen = [False] * g.n
        for number, fields in lines:
            if len(fields) != 3:
                raise InputError(f"line {number}: expected 'v <vertex> <colour>'")
            try:
                vertex, colour = int(fields[1]), int(fields[2])
            except ValueError as exc:
                raise InputError(f"line {number}: non-integer fields") from exc
            if not 1 <= vertex <= g.n:
                raise InputError(f"line {number}: vertex label outside 1..{g.n}")
            if seen[vertex - 1]:
                raise InputError(f"line {number}: vertex {vertex} coloured twice")
            if not 1 <= colour <= g.t:
                raise InputError(f"line {number}: colour outside 1..{g.t}")
            seen[vertex - 1] = True
            f[vertex - 1] = colour
        if not all(seen):
            missing = seen.index(False) + 1
            raise InputError(f"vertex {missing} is not coloured")
        return "colouring", f
    if kinds == {"d"} or not kinds:
        edge_index = {}
        for index, (u, v, _) in enumerate(g.edges):
            edge_index[(u, v)] = index
            edge_index[(v, u)] = index
        deleted: set[int] = set()
        for number, fields in lines:
            if len(fields) != 3:
                raise InputError(f"line {number}: expected 'd <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError as exc:
                raise InputError(f"line {number}: non-integer fields") from exc
            key = (u - 1, v - 1)
            if key not in edge_index:
                raise InputError(f"line {number}: edge ({u}, {v}) not in instance")
            if edge_index[key] in deleted:
                raise InputError(f"line {number}: edge ({u}, {v}) deleted twice")
            deleted.add(edge_index[key])
        return "deletion", deleted
    raise InputError("certificate mixes colouring and deletion lines")
