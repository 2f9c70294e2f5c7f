"""Exact solver for two-colour instances via a minimum s-t cut.

Every conflict pair of a two-colour graph joins a colour-1 edge and a
colour-2 edge at a shared vertex.  The transformation builds a digraph with
one node per source edge plus the original vertices, a source s and a sink
t: a colour-1 edge v_i v_j becomes arcs s -> e, e -> v_i, e -> v_j, and a
colour-2 edge becomes arcs v_i -> e, v_j -> e, e -> t.  Each conflict pair
then corresponds to exactly one s-t path through its two edge nodes, so edge
deletion sets destroying all conflict pairs are exactly the s-t cuts made of
"external" arcs (the unit arcs touching s or t).  Middle arcs get capacity
m + 1, which no cut made of unit arcs can reach, so every minimum cut found
is automatically external-only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import UnsupportedInstanceError
from .graph import (
    EdgeColouredGraph,
    VertexColouring,
    colouring_from_stable_subgraph,
    used_colours,
)


@dataclass
class FlowNetwork:
    """Directed capacitated network with designated source and sink.

    ``arcs`` holds (tail, head, capacity) triples.  ``arc_origin[i]`` is the
    source edge index when arc i is the external arc of that edge, or None
    for middle arcs.
    """

    node_count: int
    source: int
    sink: int
    arcs: list[tuple[int, int, int]]
    arc_origin: list[int | None]


@dataclass
class CutSolution:
    """Minimum deletion set for a two-colour instance, with its colouring."""

    cut_value: int
    deleted_edges: set[int]
    colouring: VertexColouring


def build_flow_network(g: EdgeColouredGraph) -> FlowNetwork:
    """Build the cut network of a two-colour graph.

    Nodes: original vertex i -> node i, edge j -> node n + j, source n + m,
    sink n + m + 1.  Exactly 3m arcs: one unit external arc per source edge
    and two middle arcs of capacity m + 1.
    """
    colours = used_colours(g)
    if len(colours) > 2:
        raise UnsupportedInstanceError(
            f"cut reduction needs at most two edge colours, found {len(colours)}"
        )
    role1 = colours[0] if colours else None
    n, m = g.n, g.m
    source = n + m
    sink = n + m + 1
    middle_cap = m + 1
    arcs: list[tuple[int, int, int]] = []
    arc_origin: list[int | None] = []
    for index, (u, v, colour) in enumerate(g.edges):
        edge_node = n + index
        if colour == role1:
            arcs.append((source, edge_node, 1))
            arc_origin.append(index)
            arcs.append((edge_node, u, middle_cap))
            arc_origin.append(None)
            arcs.append((edge_node, v, middle_cap))
            arc_origin.append(None)
        else:
            arcs.append((u, edge_node, middle_cap))
            arc_origin.append(None)
            arcs.append((v, edge_node, middle_cap))
            arc_origin.append(None)
            arcs.append((edge_node, sink, 1))
            arc_origin.append(index)
    return FlowNetwork(
        node_count=n + m + 2,
        source=source,
        sink=sink,
        arcs=arcs,
        arc_origin=arc_origin,
    )


def _run_blocking_flow(net: FlowNetwork) -> tuple[int, list[int]]:
    """Dinic's algorithm; returns the flow value and residual capacities.

    Residual arc 2i is arc i forward, 2i+1 its reverse, so the flow pushed
    through arc i equals its capacity minus residual[2i].
    """
    node_count = net.node_count
    src, snk = net.source, net.sink
    base_arcs = net.arcs
    arc_count = len(base_arcs)

    # Residual arcs come in pairs: 2i forward, 2i+1 reverse.
    to = [0] * (2 * arc_count)
    cap = [0] * (2 * arc_count)
    adj: list[list[int]] = [[] for _ in range(node_count)]
    for i, (u, v, c) in enumerate(base_arcs):
        a = 2 * i
        to[a] = v
        cap[a] = c
        to[a + 1] = u
        adj[u].append(a)
        adj[v].append(a + 1)

    if src == snk:
        return 0, cap

    flow = 0
    while True:
        level = [-1] * node_count
        level[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            next_level = level[u] + 1
            for a in adj[u]:
                if cap[a] > 0:
                    v = to[a]
                    if level[v] < 0:
                        level[v] = next_level
                        queue.append(v)
        if level[snk] < 0:
            break

        # Blocking flow: iterative DFS with a per-node arc cursor.
        cursor = [0] * node_count
        path: list[int] = []
        u = src
        while True:
            if u == snk:
                aug = min(cap[a] for a in path)
                flow += aug
                cut_at = -1
                for idx, a in enumerate(path):
                    cap[a] -= aug
                    cap[a ^ 1] += aug
                    if cap[a] == 0 and cut_at < 0:
                        cut_at = idx
                del path[cut_at + 1 :]
                saturated = path.pop()
                u = to[saturated ^ 1]
                continue
            arcs_here = adj[u]
            i = cursor[u]
            target_level = level[u] + 1
            advanced = -1
            while i < len(arcs_here):
                a = arcs_here[i]
                if cap[a] > 0 and level[to[a]] == target_level:
                    advanced = a
                    break
                i += 1
            cursor[u] = i
            if advanced >= 0:
                path.append(advanced)
                u = to[advanced]
            else:
                level[u] = -1
                if not path:
                    break
                dead = path.pop()
                u = to[dead ^ 1]

    return flow, cap


def max_flow_min_cut(net: FlowNetwork) -> tuple[int, set[int]]:
    """Maximum flow and a minimum cut, by blocking flows on BFS level graphs.

    Returns the flow value and the set of arc indices crossing the cut
    (tail on the source-reachable residual side, head on the other), which
    is deterministic for a given network.
    """
    flow, cap = _run_blocking_flow(net)
    adj: list[list[int]] = [[] for _ in range(net.node_count)]
    to = [0] * (2 * len(net.arcs))
    for i, (u, v, _) in enumerate(net.arcs):
        to[2 * i] = v
        to[2 * i + 1] = u
        adj[u].append(2 * i)
        adj[v].append(2 * i + 1)
    reachable = [False] * net.node_count
    reachable[net.source] = True
    queue = deque([net.source])
    while queue:
        u = queue.popleft()
        for a in adj[u]:
            if cap[a] > 0 and not reachable[to[a]]:
                reachable[to[a]] = True
                queue.append(to[a])
    cut_arcs = {
        i
        for i, (u, v, _) in enumerate(net.arcs)
        if reachable[u] and not reachable[v]
    }
    return flow, cut_arcs


def solve_bicoloured(g: EdgeColouredGraph) -> CutSolution:
    """Optimal deletion set and colouring for a two-colour instance.

    The minimum cut consists of external arcs only (middle arcs never
    saturate), and its source edges form a smallest deletion set destroying
    every conflict pair.  The colouring is recovered canonically from the
    kept edges and makes exactly m - cut_value edges stable.
    """
    net = build_flow_network(g)
    value, cut_arcs = max_flow_min_cut(net)
    deleted: set[int] = set()
    for arc in cut_arcs:
        origin = net.arc_origin[arc]
        if origin is None:
            raise AssertionError("minimum cut contains a middle arc")
        deleted.add(origin)
    kept = {index for index in range(g.m) if index not in deleted}
    colouring = colouring_from_stable_subgraph(g, kept)
    return CutSolution(cut_value=value, deleted_edges=deleted, colouring=colouring)
