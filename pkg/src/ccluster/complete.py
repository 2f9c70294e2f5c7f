"""Closed-form solver for two-colour complete graphs.

With every pair of vertices adjacent and only two edge colours in play, the
number of stable edges produced by colouring a vertex set V1 with colour 1
and the rest with colour 2 collapses to

    sum of d1(v) over V1  +  C(|V2|, 2)  -  m1

where d1(v) counts colour-1 edges at v and m1 is the total number of
colour-1 edges.  For a fixed |V1| = k the sum is maximised by the k vertices
of largest d1, so one sort plus a sweep over k solves the instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import UnsupportedInstanceError
from .graph import EdgeColouredGraph, VertexColouring, used_colours


@dataclass
class CompleteInstanceSummary:
    """Colour-1 degree profile of a two-colour complete graph."""

    n: int
    d1: list[int]
    m1: int


def summarize_complete(g: EdgeColouredGraph) -> CompleteInstanceSummary:
    """Degree profile of ``g``; the smallest colour in use plays role 1.

    Raises UnsupportedInstanceError when the graph is not complete or uses
    more than two edge colours.
    """
    if g.m != g.n * (g.n - 1) // 2:
        raise UnsupportedInstanceError(
            f"graph with {g.n} vertices and {g.m} edges is not complete"
        )
    colours = sorted(used_colours(g))
    if len(colours) > 2:
        raise UnsupportedInstanceError(
            f"complete-graph solver needs at most two colours, found {len(colours)}"
        )
    role1 = colours[0] if colours else 1
    d1 = [0] * g.n
    m1 = 0
    for u, v, colour in g.edges:
        if colour == role1:
            d1[u] += 1
            d1[v] += 1
            m1 += 1
    return CompleteInstanceSummary(n=g.n, d1=d1, m1=m1)


def stable_count_formula(
    summary: CompleteInstanceSummary, v1: Iterable[int]
) -> int:
    """Stable edges produced by colouring ``v1`` with role 1, the rest role 2."""
    chosen = set(v1)
    n2 = summary.n - len(chosen)
    return sum(summary.d1[v] for v in chosen) + n2 * (n2 - 1) // 2 - summary.m1


def solve_complete(g: EdgeColouredGraph) -> tuple[int, VertexColouring]:
    """Optimal stable-edge count and a witness colouring for complete graphs.

    Only the two colours present on edges are considered for vertices: on a
    complete two-colour graph a third colour stabilises no incident edge, so
    it can never beat the best two-colouring.  Vertices are sorted by
    descending d1 (ties by ascending id) and every prefix size is tried.
    """
    summary = summarize_complete(g)
    if g.n <= 1:
        return 0, [1] * g.n
    colours = sorted(used_colours(g))
    role1 = colours[0] if colours else 1
    if len(colours) >= 2:
        role2 = colours[1]
    else:
        role2 = next((c for c in range(1, g.t + 1) if c != role1), role1)

    order = sorted(range(g.n), key=lambda v: (-summary.d1[v], v))
    best_value = -1
    best_k = 0
    prefix = 0
    for k in range(g.n + 1):
        if k > 0:
            prefix += summary.d1[order[k - 1]]
        n2 = g.n - k
        value = prefix + n2 * (n2 - 1) // 2 - summary.m1
        if value > best_value:
            best_value = value
            best_k = k
    colouring: VertexColouring = [role2] * g.n
    for v in order[:best_k]:
        colouring[v] = role1
    return best_value, colouring
