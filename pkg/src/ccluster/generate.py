"""Instance generators: random corpora and the independent-set gadget.

The gadget turns an uncoloured subcubic graph into a three-colour bipartite
instance of maximum degree four: properly 3-colour the source, subdivide
every edge v_i v_j by a node v_ij (the halves keep the endpoint colours,
which differ), and hang a pendant v_i* off every vertex with an edge colour
different from the vertex's own.  The source then has an independent set of
size k exactly when the gadget admits a colouring with k + |E| stable edges:
each subdivided edge contributes exactly one stable half, and pendant edges
turn stable precisely for independent-set vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import InputError, PreconditionError, ReductionInapplicableError
from .graph import EdgeColouredGraph, VertexColouring, stability


def random_instance(n: int, m: int, t: int, seed: int) -> EdgeColouredGraph:
    """Uniform random simple graph with m edges, colours uniform in 1..t.

    Deterministic for a given (n, m, t, seed).
    """
    if t < 1:
        raise InputError(f"colour count must be positive, got {t}")
    max_edges = n * (n - 1) // 2
    if m > max_edges:
        raise InputError(f"{m} edges requested, only {max_edges} possible on {n} vertices")
    rng = random.Random(seed)
    if m > max_edges // 2:
        pairs = sorted(rng.sample(list(combinations(range(n), 2)), m))
    else:
        chosen: set[tuple[int, int]] = set()
        while len(chosen) < m:
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u != v:
                chosen.add((u, v) if u < v else (v, u))
        pairs = sorted(chosen)
    edges = [(u, v, rng.randrange(t) + 1) for u, v in pairs]
    return EdgeColouredGraph(n=n, edges=edges, t=t)


def random_subcubic_graph(
    n: int, m: int, seed: int
) -> tuple[int, list[tuple[int, int]]]:
    """Random simple graph with maximum degree 3 and up to m edges.

    Candidate pairs are shuffled and added while both endpoints have spare
    degree; fewer than m edges are returned when the degree cap fills up.
    Edges completing a 4-clique are skipped, so every sample admits a proper
    3-colouring and can seed the hardness gadget.
    """
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    adjacency: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []

    def completes_k4(u: int, v: int) -> bool:
        common = adjacency[u] & adjacency[v]
        return any(
            b in adjacency[a] for a, b in combinations(sorted(common), 2)
        )

    for u, v in pairs:
        if len(edges) == m:
            break
        if len(adjacency[u]) < 3 and len(adjacency[v]) < 3 and not completes_k4(u, v):
            edges.append((u, v))
            adjacency[u].add(v)
            adjacency[v].add(u)
    return n, edges


def proper_3_colouring(n: int, edges: list[tuple[int, int]]) -> list[int]:
    """Proper vertex colouring with colours in {1, 2, 3}, by backtracking.

    Vertices are processed in reverse smallest-last order, which keeps the
    number of already-coloured neighbours small.  Raises when no proper
    3-colouring exists (for subcubic graphs that means a 4-clique component).
    """
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)

    # Smallest-last order: repeatedly remove a minimum-degree vertex.
    remaining_degree = [len(a) for a in adjacency]
    removed = [False] * n
    removal: list[int] = []
    for _ in range(n):
        candidate = min(
            (v for v in range(n) if not removed[v]),
            key=lambda v: (remaining_degree[v], v),
        )
        removed[candidate] = True
        removal.append(candidate)
        for w in adjacency[candidate]:
            if not removed[w]:
                remaining_degree[w] -= 1
    order = removal[::-1]

    colour = [0] * n

    def assign(position: int) -> bool:
        if position == len(order):
            return True
        v = order[position]
        taken = {colour[w] for w in adjacency[v] if colour[w]}
        for c in (1, 2, 3):
            if c not in taken:
                colour[v] = c
                if assign(position + 1):
                    return True
                colour[v] = 0
        return False

    if not assign(0):
        raise ReductionInapplicableError(
            "source graph admits no proper 3-colouring"
        )
    return colour


@dataclass
class ReductionOutput:
    """Gadget instance plus the bookkeeping linking it to the source graph."""

    gprime: EdgeColouredGraph
    source_edge_count: int
    vertex_map: dict[str, list[int]]
    psi: list[int]
    source_edges: list[tuple[int, int]]


def hardness_reduction(n: int, edges: list[tuple[int, int]]) -> ReductionOutput:
    """Build the three-colour gadget for an uncoloured subcubic source graph.

    Gadget vertex ids: source vertices keep 0..n-1, subdivision nodes follow
    in source edge order, pendants come last in source vertex order.
    """
    seen_pairs: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise InputError(f"bad source edge ({u}, {v})")
        pair = (u, v) if u < v else (v, u)
        if pair in seen_pairs:
            raise InputError(f"duplicate source edge ({u}, {v})")
        seen_pairs.add(pair)
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    if any(d > 3 for d in degree):
        raise PreconditionError("source graph must have maximum degree 3")
    psi = proper_3_colouring(n, edges)

    subdivision_ids = [n + i for i in range(len(edges))]
    pendant_ids = [n + len(edges) + i for i in range(n)]
    gadget_edges: list[tuple[int, int, int]] = []
    for index, (u, v) in enumerate(edges):
        mid = subdivision_ids[index]
        gadget_edges.append((u, mid, psi[u]))
        gadget_edges.append((mid, v, psi[v]))
    for v in range(n):
        pendant_colour = min(c for c in (1, 2, 3) if c != psi[v])
        gadget_edges.append((v, pendant_ids[v], pendant_colour))
    gprime = EdgeColouredGraph(
        n=n + len(edges) + n, edges=gadget_edges, t=3
    )
    return ReductionOutput(
        gprime=gprime,
        source_edge_count=len(edges),
        vertex_map={
            "original": list(range(n)),
            "subdivision": subdivision_ids,
            "pendant": pendant_ids,
        },
        psi=psi,
        source_edges=[(u, v) for u, v in edges],
    )


def forward_witness(
    red: ReductionOutput, independent_set: set[int]
) -> VertexColouring:
    """Colouring of the gadget realising |I| + |E| stable edges.

    Pendants always take their edge's colour; a source vertex joins its
    pendant when it is in the independent set and keeps its proper colour
    otherwise; a subdivision node sides with whichever endpoint stayed
    proper.
    """
    n = len(red.vertex_map["original"])
    if any(not 0 <= v < n for v in independent_set):
        raise InputError("independent set mentions a vertex outside the source graph")
    for u, v in red.source_edges:
        if u in independent_set and v in independent_set:
            raise PreconditionError(
                f"vertices {u} and {v} are adjacent in the source graph"
            )
    f: VertexColouring = [0] * red.gprime.n
    pendant_ids = red.vertex_map["pendant"]
    subdivision_ids = red.vertex_map["subdivision"]
    for v in range(n):
        pendant_colour = min(c for c in (1, 2, 3) if c != red.psi[v])
        f[pendant_ids[v]] = pendant_colour
        f[v] = pendant_colour if v in independent_set else red.psi[v]
    for index, (u, v) in enumerate(red.source_edges):
        f[subdivision_ids[index]] = red.psi[v] if u in independent_set else red.psi[u]
    achieved = stability(red.gprime, f).stable_count
    assert achieved >= len(independent_set) + red.source_edge_count
    return f
