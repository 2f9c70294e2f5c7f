"""Edge-coloured graphs, vertex colourings, and edge-stability predicates.

The central objects: a simple undirected graph whose edges carry a colour in
1..t, and vertex colourings over the same palette.  An edge is *stable* under
a colouring when its own colour matches the colour of both endpoints; a
*conflict pair* is two adjacent edges of different colours.  Destroying every
conflict pair by edge deletion and maximising stable edges are two views of
the same optimisation, and the predicates here are the building blocks every
solver in this package shares.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError, PreconditionError

# A vertex colouring is a plain list: colour (1-based) per vertex id.
VertexColouring = list


@dataclass
class EdgeColouredGraph:
    """Simple undirected graph with a colour in 1..t on every edge.

    Vertices are dense integer ids 0..n-1.  Edges are (u, v, colour) tuples;
    the unordered pair {u, v} appears at most once and u != v.  ``t`` is
    stored explicitly, so colourings may legally use colours that no edge
    carries.  Instances are treated as immutable after construction.
    """

    n: int
    edges: list[tuple[int, int, int]]
    t: int
    adjacency: list[list[tuple[int, int, int]]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        if self.t < 1:
            raise InputError(f"colour count must be positive, got {self.t}")
        seen: set[tuple[int, int]] = set()
        adjacency: list[list[tuple[int, int, int]]] = [[] for _ in range(self.n)]
        for index, (u, v, colour) in enumerate(self.edges):
            if u == v:
                raise InputError(f"edge {index} is a self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {index} endpoint out of range: ({u}, {v})")
            if not (1 <= colour <= self.t):
                raise InputError(
                    f"edge {index} colour {colour} outside 1..{self.t}"
                )
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise InputError(f"duplicate edge {{{u}, {v}}}")
            seen.add(pair)
            adjacency[u].append((v, index, colour))
            adjacency[v].append((u, index, colour))
        self.adjacency = adjacency

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass
class StabilityReport:
    """Partition of the edge set into stable and unstable edges."""

    stable: list[int]
    unstable: list[int]

    @property
    def stable_count(self) -> int:
        return len(self.stable)

    @property
    def unstable_count(self) -> int:
        return len(self.unstable)


def validate_colouring(g: EdgeColouredGraph, f: VertexColouring) -> None:
    """Raise InputError unless ``f`` colours every vertex within 1..t."""
    if len(f) != g.n:
        raise InputError(f"colouring has {len(f)} entries for {g.n} vertices")
    for v, colour in enumerate(f):
        if not (1 <= colour <= g.t):
            raise InputError(f"vertex {v} coloured {colour}, outside 1..{g.t}")


def stability(g: EdgeColouredGraph, f: VertexColouring) -> StabilityReport:
    """Classify every edge as stable or unstable under the colouring ``f``.

    Edge (u, v, c) is stable exactly when f[u] == c == f[v].
    """
    validate_colouring(g, f)
    stable: list[int] = []
    unstable: list[int] = []
    for index, (u, v, colour) in enumerate(g.edges):
        if f[u] == colour and f[v] == colour:
            stable.append(index)
        else:
            unstable.append(index)
    return StabilityReport(stable=stable, unstable=unstable)


def conflict_pairs(g: EdgeColouredGraph) -> list[tuple[int, int]]:
    """All unordered pairs of adjacent edges with different colours.

    Two distinct edges of a simple graph share at most one vertex, so
    scanning each vertex's incidence list yields every pair exactly once.
    The result is sorted for deterministic output.  Materialising this list
    costs O(sum of squared degrees); production solvers avoid calling it on
    full-size inputs.
    """
    pairs: list[tuple[int, int]] = []
    for incident in g.adjacency:
        for i in range(len(incident)):
            _, e1, c1 = incident[i]
            for j in range(i + 1, len(incident)):
                _, e2, c2 = incident[j]
                if c1 != c2:
                    pairs.append((e1, e2) if e1 < e2 else (e2, e1))
    pairs.sort()
    return pairs


def is_vertex_monochromatic(g: EdgeColouredGraph) -> bool:
    """True when no vertex sees two different colours on its incident edges.

    Isolated vertices see no colour at all and never fail the check.
    """
    for incident in g.adjacency:
        if not incident:
            continue
        first = incident[0][2]
        for _, _, colour in incident:
            if colour != first:
                return False
    return True


def components_edge_monochromatic(g: EdgeColouredGraph) -> bool:
    """True when every connected component uses a single edge colour.

    Implemented with union-find over vertices, independently of
    :func:`is_vertex_monochromatic`, so the two routes can cross-check
    each other.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv

    component_colour: dict[int, int] = {}
    for u, v, colour in g.edges:
        root = find(u)
        known = component_colour.setdefault(root, colour)
        if known != colour:
            return False
    return True


def used_colours(g: EdgeColouredGraph) -> list[int]:
    """Distinct edge colours in order of first occurrence in the edge list."""
    seen: list[int] = []
    for _, _, colour in g.edges:
        if colour not in seen:
            seen.append(colour)
    return seen


def colouring_from_stable_subgraph(
    g: EdgeColouredGraph, kept: set[int]
) -> VertexColouring:
    """Canonical colouring that makes every edge in ``kept`` stable.

    Each vertex touched by a kept edge takes that edge's colour; vertices
    touched by no kept edge default to colour 1.  Requires the kept subgraph
    to be vertex-monochromatic, otherwise no single colour per vertex exists.
    """
    f: VertexColouring = [0] * g.n
    for index in kept:
        u, v, colour = g.edges[index]
        for end in (u, v):
            if f[end] == 0:
                f[end] = colour
            elif f[end] != colour:
                raise PreconditionError(
                    f"kept edges give vertex {end} colours {f[end]} and {colour}"
                )
    for v in range(g.n):
        if f[v] == 0:
            f[v] = 1
    return f
