"""Deciding whether k edge deletions can destroy every conflict pair.

The pipeline condenses the input first: all vertices that see only colour c
collapse into a single hub per colour, parallel edges merge into one
weighted edge, and edges joining two same-colour monochromatic vertices are
set aside entirely (they are stable under the canonical colouring and can
never belong to a minimal deletion set).  The condensed graph of any
instance solvable with k deletions has at most 4k vertices and 2k^2 + k
edges, so exceeding either bound certifies "no" outright.  Within bounds,
the question becomes a minimum-weight vertex cover of the condensed graph's
conflict graph, solved exactly by a budget-bounded search tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conflict import ConflictGraph, build_weighted_conflict_graph
from .errors import ParameterError
from .graph import (
    EdgeColouredGraph,
    VertexColouring,
    colouring_from_stable_subgraph,
    is_vertex_monochromatic,
)


@dataclass
class CondensedGraph:
    """Weighted coloured graph after hub contraction and parallel merging.

    ``weight[i]`` source edges merged into condensed edge i (their indices
    in ``origin[i]``); ``baseline_stable`` counts the set-aside edges, so
    total weight + baseline_stable equals the source edge count.
    ``vertex_map[v]`` is the condensed vertex standing for source vertex v,
    or None when v vanished (isolated, or merged into an edgeless hub).
    """

    base: EdgeColouredGraph
    weight: list[int]
    hub_of_colour: dict[int, int]
    origin: list[list[int]]
    baseline_stable: int
    vertex_map: list[int | None]


@dataclass
class KernelVerdict:
    """Size gate: exceeding either bound is a sound "no" for parameter k."""

    n_star: int
    m_star: int
    within_bounds: bool


@dataclass
class SearchStats:
    nodes: int = 0


@dataclass
class UnstableSolveResult:
    yes: bool
    deleted_edges: set[int] | None
    colouring: VertexColouring | None
    kernel: KernelVerdict | None = None
    cover_weight: int | None = None
    search_nodes: int = 0


def condense(g: EdgeColouredGraph) -> CondensedGraph:
    """Contract monochromatic vertices into per-colour hubs and merge edges.

    Hubs that end up with no incident condensed edge are dropped along with
    isolated vertices; same-colour monochromatic pairs contribute their edge
    count to ``baseline_stable`` instead of the topology.
    """
    mono_colour: list[int | None] = [None] * g.n
    colourful: list[bool] = [False] * g.n
    for v, incident in enumerate(g.adjacency):
        if not incident:
            continue
        colours = {colour for _, _, colour in incident}
        if len(colours) == 1:
            mono_colour[v] = next(iter(colours))
        else:
            colourful[v] = True

    # Endpoint keys before ids are known: colourful vertices stay distinct,
    # monochromatic ones alias to their colour hub.
    def key(v: int) -> tuple[int, int]:
        if colourful[v]:
            return (0, v)
        return (1, mono_colour[v])  # type: ignore[arg-type]

    baseline = 0
    merged: dict[tuple[tuple[int, int], tuple[int, int]], list[int]] = {}
    merged_colour: dict[tuple[tuple[int, int], tuple[int, int]], int] = {}
    for index, (u, v, colour) in enumerate(g.edges):
        ku, kv = key(u), key(v)
        if ku == kv:
            # Same-colour monochromatic pair: always stable, never deleted.
            # Both endpoints see only this edge's colour, so it matches.
            assert ku == (1, colour)
            baseline += 1
            continue
        pair = (ku, kv) if ku <= kv else (kv, ku)
        if pair in merged:
            assert merged_colour[pair] == colour
            merged[pair].append(index)
        else:
            merged[pair] = [index]
            merged_colour[pair] = colour

    used_keys = sorted({k for pair in merged for k in pair})
    id_of = {k: i for i, k in enumerate(used_keys)}
    hub_of_colour = {k[1]: i for k, i in id_of.items() if k[0] == 1}

    edges: list[tuple[int, int, int]] = []
    weight: list[int] = []
    origin: list[list[int]] = []
    for pair in sorted(merged):
        sources = merged[pair]
        edges.append((id_of[pair[0]], id_of[pair[1]], merged_colour[pair]))
        weight.append(len(sources))
        origin.append(sorted(sources))

    vertex_map: list[int | None] = [id_of.get(key(v)) if g.adjacency[v] else None
                                    for v in range(g.n)]
    base = EdgeColouredGraph(n=len(used_keys), edges=edges, t=g.t)
    return CondensedGraph(
        base=base,
        weight=weight,
        hub_of_colour=hub_of_colour,
        origin=origin,
        baseline_stable=baseline,
        vertex_map=vertex_map,
    )


def check_kernel(gstar: CondensedGraph, k: int) -> KernelVerdict:
    """Apply the 4k-vertex / (2k^2 + k)-edge gate for parameter k."""
    if k < 0:
        raise ParameterError(f"parameter k must be non-negative, got {k}")
    n_star = gstar.base.n
    m_star = gstar.base.m
    within = n_star <= 4 * k and m_star <= 2 * k * k + k
    return KernelVerdict(n_star=n_star, m_star=m_star, within_bounds=within)


def min_weight_vertex_cover(
    x: ConflictGraph, budget: int, stats: SearchStats | None = None
) -> tuple[bool, set[int] | None]:
    """Is there a vertex cover of total weight at most ``budget``?

    Budget-bounded branching on an endpoint of the first uncovered edge.
    Reduction applied at every node: a vertex too heavy for the remaining
    budget is excluded, forcing all its uncovered neighbours in.  Returns
    the first qualifying cover found (deterministic scan order).
    """
    if budget < 0:
        raise ParameterError(f"budget must be non-negative, got {budget}")
    if stats is None:
        stats = SearchStats()
    nc = x.node_count
    weights = x.node_weight
    neighbour = [0] * nc
    for a, b in x.edges:
        neighbour[a] |= 1 << b
        neighbour[b] |= 1 << a
    edge_list = x.edges

    def search(covered: int, remaining: int) -> int | None:
        stats.nodes += 1
        # Force neighbours of unaffordable vertices into the cover.
        changed = True
        while changed:
            changed = False
            for v in range(nc):
                if covered >> v & 1 or weights[v] <= remaining:
                    continue
                pending = neighbour[v] & ~covered
                while pending:
                    u = (pending & -pending).bit_length() - 1
                    pending &= pending - 1
                    if weights[u] > remaining:
                        return None
                    covered |= 1 << u
                    remaining -= weights[u]
                    if remaining < 0:
                        return None
                    changed = True
        uncovered = None
        for a, b in edge_list:
            if not (covered >> a & 1 or covered >> b & 1):
                uncovered = (a, b)
                break
        if uncovered is None:
            return covered
        for v in uncovered:
            if weights[v] <= remaining:
                result = search(covered | 1 << v, remaining - weights[v])
                if result is not None:
                    return result
        return None

    found = search(0, budget)
    if found is None:
        return False, None
    return True, {v for v in range(nc) if found >> v & 1}


def solve_unstable_fpt(g: EdgeColouredGraph, k: int) -> UnstableSolveResult:
    """Decide whether deleting at most k edges destroys every conflict pair.

    On yes, the deletion set and the canonical colouring of the remainder
    (at least m - k stable edges) are returned along with pipeline
    diagnostics; "no" answers are exact, from the kernel gate or an
    exhausted cover search.
    """
    if k < 0:
        raise ParameterError(f"parameter k must be non-negative, got {k}")
    if k == 0:
        # Conflict-pair freeness equals vertex-monochromaticity; the latter
        # check is linear.
        if not is_vertex_monochromatic(g):
            return UnstableSolveResult(yes=False, deleted_edges=None, colouring=None)
        colouring = colouring_from_stable_subgraph(g, set(range(g.m)))
        return UnstableSolveResult(
            yes=True, deleted_edges=set(), colouring=colouring, cover_weight=0
        )
    gstar = condense(g)
    verdict = check_kernel(gstar, k)
    if not verdict.within_bounds:
        return UnstableSolveResult(
            yes=False, deleted_edges=None, colouring=None, kernel=verdict
        )
    x = build_weighted_conflict_graph(gstar)
    stats = SearchStats()
    found, cover = min_weight_vertex_cover(x, k, stats)
    if not found:
        return UnstableSolveResult(
            yes=False,
            deleted_edges=None,
            colouring=None,
            kernel=verdict,
            search_nodes=stats.nodes,
        )
    assert cover is not None
    deleted: set[int] = set()
    cover_weight = 0
    for node in cover:
        deleted.update(gstar.origin[node])
        cover_weight += gstar.weight[node]
    assert len(deleted) == cover_weight <= k
    kept = {index for index in range(g.m) if index not in deleted}
    colouring = colouring_from_stable_subgraph(g, kept)
    return UnstableSolveResult(
        yes=True,
        deleted_edges=deleted,
        colouring=colouring,
        kernel=verdict,
        cover_weight=cover_weight,
        search_nodes=stats.nodes,
    )
