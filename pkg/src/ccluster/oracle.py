"""Brute-force reference solvers for desk-scale instances.

Everything here is deliberately naive: plain enumeration with explicit size
guards and no search cleverness, so the results can be trusted as ground
truth when testing the real engines.  The only pruning in the colouring
enumerator is restricting each vertex to the colours on its own incident
edges, which is answer-preserving (a colour absent from a vertex's edges can
never stabilise anything there) and unit-tested against the unrestricted
enumeration.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import product
from typing import TYPE_CHECKING

from .errors import SizeLimitError
from .graph import EdgeColouredGraph, VertexColouring

if TYPE_CHECKING:
    from .conflict import ConflictGraph

DEFAULT_CLUSTERING_BOUND = 10**8
BOUND_ENV_VAR = "CC_ORACLE_BOUND"

MAX_INDEPENDENT_SET_NODES = 24
MAX_COVER_NODES = 20


@dataclass
class OracleResult:
    """Exact optimum over all vertex colourings."""

    opt_stable: int
    opt_colouring: VertexColouring
    min_deletion: int


def _clustering_bound(bound: int | None) -> int:
    if bound is not None:
        return bound
    env = os.environ.get(BOUND_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_CLUSTERING_BOUND


def _candidate_colours(g: EdgeColouredGraph) -> list[list[int]]:
    """Per-vertex colour menu: distinct incident edge colours, or [1]."""
    menus: list[list[int]] = []
    for incident in g.adjacency:
        colours = sorted({colour for _, _, colour in incident})
        menus.append(colours if colours else [1])
    return menus


def clustering_search_space(g: EdgeColouredGraph) -> int:
    """Number of colourings the clustering oracle would enumerate."""
    space = 1
    for menu in _candidate_colours(g):
        space *= len(menu)
    return space


def within_clustering_bound(g: EdgeColouredGraph, bound: int | None = None) -> bool:
    limit = _clustering_bound(bound)
    space = 1
    for menu in _candidate_colours(g):
        space *= len(menu)
        if space > limit:
            return False
    return True


def _max_weighted_stable(
    g: EdgeColouredGraph, weight: list[int], bound: int
) -> tuple[int, VertexColouring]:
    menus = _candidate_colours(g)
    space = 1
    for menu in menus:
        space *= len(menu)
        if space > bound:
            raise SizeLimitError(
                f"colouring search space exceeds bound {bound}"
            )
    edges = g.edges
    best = -1
    best_f: tuple[int, ...] = tuple([1] * g.n)
    for f in product(*menus):
        total = 0
        for index, (u, v, colour) in enumerate(edges):
            if f[u] == colour and f[v] == colour:
                total += weight[index]
        if total > best:
            best = total
            best_f = f
    return best, list(best_f)


def brute_force_clustering(
    g: EdgeColouredGraph, bound: int | None = None
) -> OracleResult:
    """Exact maximum number of stable edges, by enumerating colourings.

    The size guard (``bound``, default 10**8, overridable via the
    CC_ORACLE_BOUND environment variable) caps the number of colourings
    enumerated; larger instances raise SizeLimitError.
    """
    opt, f = _max_weighted_stable(g, [1] * g.m, _clustering_bound(bound))
    return OracleResult(opt_stable=opt, opt_colouring=f, min_deletion=g.m - opt)


def brute_force_weighted_unstable(
    g: EdgeColouredGraph, weight: list[int], bound: int | None = None
) -> int:
    """Exact minimum total weight of unstable edges over all colourings."""
    opt, _ = _max_weighted_stable(g, weight, _clustering_bound(bound))
    return sum(weight) - opt


def brute_force_independent_set(x: "ConflictGraph") -> int:
    """Exact maximum independent set size (weights ignored).

    Include/exclude recursion over bitmasks; a vertex with no remaining
    neighbour is always taken, which keeps sparse cases quick without
    affecting correctness.
    """
    if x.node_count > MAX_INDEPENDENT_SET_NODES:
        raise SizeLimitError(
            f"{x.node_count} nodes exceeds independent-set limit of "
            f"{MAX_INDEPENDENT_SET_NODES}"
        )
    neighbour = [0] * x.node_count
    for a, b in x.edges:
        neighbour[a] |= 1 << b
        neighbour[b] |= 1 << a

    def best(remaining: int) -> int:
        if remaining == 0:
            return 0
        v = (remaining & -remaining).bit_length() - 1
        rest = remaining & ~(1 << v)
        taken_rest = rest & ~neighbour[v]
        if taken_rest == rest:
            return 1 + best(rest)
        return max(best(rest), 1 + best(taken_rest))

    return best((1 << x.node_count) - 1)


def brute_force_weighted_cover(x: "ConflictGraph") -> int:
    """Exact minimum total weight over all vertex covers, by full subset scan."""
    if x.node_count > MAX_COVER_NODES:
        raise SizeLimitError(
            f"{x.node_count} nodes exceeds cover limit of {MAX_COVER_NODES}"
        )
    edge_masks = [(1 << a) | (1 << b) for a, b in x.edges]
    weights = x.node_weight
    best = math.inf
    for mask in range(1 << x.node_count):
        covers = True
        for em in edge_masks:
            if not mask & em:
                covers = False
                break
        if not covers:
            continue
        total = 0
        for v in range(x.node_count):
            if mask >> v & 1:
                total += weights[v]
        if total < best:
            best = total
    return int(best)
