"""The edge-conflict graph: one node per edge, one edge per conflict pair.

Maximising stable edges in the source graph is exactly the maximum
independent set problem on this graph, and destroying all conflict pairs by
deletion is exactly vertex cover.  The conflict graph is only materialised
for condensed graphs and small test instances: built from a full input it
has O(mn) edges, which is the bottleneck the production pipelines bypass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .graph import EdgeColouredGraph, conflict_pairs

if TYPE_CHECKING:
    from .fpt_unstable import CondensedGraph


@dataclass
class ConflictGraph:
    """Uncoloured graph over the edges of a source graph.

    ``origin[i]`` is the source edge index node ``i`` stands for, and
    ``node_weight[i]`` its weight (1 for plain graphs, the merged edge
    multiplicity when built from a condensed graph).
    """

    node_count: int
    node_weight: list[int]
    edges: list[tuple[int, int]]
    origin: list[int]


def build_conflict_graph(g: EdgeColouredGraph) -> ConflictGraph:
    """Conflict graph of a plain edge-coloured graph; all node weights 1."""
    return ConflictGraph(
        node_count=g.m,
        node_weight=[1] * g.m,
        edges=conflict_pairs(g),
        origin=list(range(g.m)),
    )


def build_weighted_conflict_graph(gstar: "CondensedGraph") -> ConflictGraph:
    """Conflict graph of a condensed graph, node weights = edge weights."""
    base = gstar.base
    return ConflictGraph(
        node_count=base.m,
        node_weight=list(gstar.weight),
        edges=conflict_pairs(base),
        origin=list(range(base.m)),
    )


def to_dot(x: ConflictGraph) -> str:
    """DOT rendering for debugging; node label = source edge, weight shown."""
    lines = ["graph conflict {"]
    for node in range(x.node_count):
        lines.append(
            f'  n{node} [label="e{x.origin[node]} (w={x.node_weight[node]})"];'
        )
    for a, b in x.edges:
        lines.append(f"  n{a} -- n{b};")
    lines.append("}")
    return "\n".join(lines)


def independent_set_value_equivalence(
    g: EdgeColouredGraph, bound: int | None = None
) -> tuple[int, int]:
    """Brute-force check pair: (optimal stable edges, max independent set).

    Test-only helper for small instances; the two values must agree because
    stable edge sets are exactly the independent sets of the conflict graph.
    """
    from . import oracle

    opt_stable = oracle.brute_force_clustering(g, bound=bound).opt_stable
    max_is = oracle.brute_force_independent_set(build_conflict_graph(g))
    return opt_stable, max_is
