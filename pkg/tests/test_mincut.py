import random
from itertools import combinations

import networkx as nx
import pytest

from ccluster import (
    EdgeColouredGraph,
    FlowNetwork,
    UnsupportedInstanceError,
    brute_force_clustering,
    brute_force_weighted_cover,
    build_conflict_graph,
    build_flow_network,
    conflict_pairs,
    is_vertex_monochromatic,
    max_flow_min_cut,
    random_instance,
    solve_bicoloured,
    stability,
)


def two_colour_path():
    return EdgeColouredGraph(n=3, edges=[(0, 1, 1), (1, 2, 2)], t=2)


def random_bicoloured(rng, max_n=8):
    n = rng.randint(1, max_n)
    m = rng.randint(0, n * (n - 1) // 2)
    return random_instance(n, m, 2, seed=rng.randrange(2**32))


class TestBuildNetwork:
    def test_path_structure(self):
        net = build_flow_network(two_colour_path())
        assert net.node_count == 2 + 3 + 2
        assert len(net.arcs) == 6
        external = [o for o in net.arc_origin if o is not None]
        assert sorted(external) == [0, 1]
        # Unique augmenting route: s -> edge0 -> shared vertex -> edge1 -> t.
        value, cut = max_flow_min_cut(net)
        assert value == 1

    def test_single_colour_one_edge_has_no_path_to_sink(self):
        g = EdgeColouredGraph(n=2, edges=[(0, 1, 1)], t=2)
        net = build_flow_network(g)
        assert net.node_count == 5
        assert len(net.arcs) == 3
        value, cut = max_flow_min_cut(net)
        assert value == 0
        assert cut == set()

    def test_edgeless_graph(self):
        g = EdgeColouredGraph(n=4, edges=[], t=2)
        net = build_flow_network(g)
        assert net.node_count == 6
        assert net.arcs == []

    def test_three_colours_rejected(self):
        g = EdgeColouredGraph(
            n=4, edges=[(0, 1, 1), (1, 2, 2), (2, 3, 3)], t=3
        )
        with pytest.raises(UnsupportedInstanceError):
            build_flow_network(g)

    def test_arc_counts_and_capacities(self):
        rng = random.Random(2)
        for _ in range(20):
            g = random_bicoloured(rng)
            net = build_flow_network(g)
            assert len(net.arcs) == 3 * g.m
            external = [i for i, o in enumerate(net.arc_origin) if o is not None]
            assert len(external) == g.m
            for i in external:
                assert net.arcs[i][2] == 1
            middles = [i for i, o in enumerate(net.arc_origin) if o is None]
            assert len(middles) == 2 * g.m
            for i in middles:
                assert net.arcs[i][2] == g.m + 1


class TestMaxFlow:
    def test_two_one_star(self):
        g = EdgeColouredGraph(
            n=5,
            edges=[(0, 1, 1), (0, 2, 1), (0, 3, 2), (0, 4, 2)],
            t=2,
        )
        value, _ = max_flow_min_cut(build_flow_network(g))
        assert value == 2

    def test_against_networkx_on_random_networks(self):
        rng = random.Random(7)
        for _ in range(30):
            nodes = rng.randint(2, 8)
            arcs = []
            for u in range(nodes):
                for v in range(nodes):
                    if u != v and rng.random() < 0.35:
                        arcs.append((u, v, rng.randint(1, 5)))
            net = FlowNetwork(
                node_count=nodes, source=0, sink=nodes - 1,
                arcs=arcs, arc_origin=[None] * len(arcs),
            )
            value, cut = max_flow_min_cut(net)
            dg = nx.DiGraph()
            dg.add_nodes_from(range(nodes))
            for u, v, c in arcs:
                if dg.has_edge(u, v):
                    dg[u][v]["capacity"] += c
                else:
                    dg.add_edge(u, v, capacity=c)
            expected = nx.maximum_flow_value(dg, 0, nodes - 1)
            assert value == expected
            assert sum(arcs[i][2] for i in cut) == value

    def test_cut_capacity_always_equals_flow_value(self):
        rng = random.Random(13)
        for _ in range(25):
            g = random_bicoloured(rng)
            net = build_flow_network(g)
            value, cut = max_flow_min_cut(net)
            assert sum(net.arcs[i][2] for i in cut) == value

    def test_flow_conserved_at_internal_nodes(self):
        from ccluster.mincut import _run_blocking_flow

        rng = random.Random(17)
        for _ in range(25):
            g = random_bicoloured(rng)
            net = build_flow_network(g)
            value, residual = _run_blocking_flow(net)
            net_out = [0] * net.node_count
            for i, (u, v, capacity) in enumerate(net.arcs):
                pushed = capacity - residual[2 * i]
                assert 0 <= pushed <= capacity
                net_out[u] += pushed
                net_out[v] -= pushed
            for node in range(net.node_count):
                if node == net.source:
                    assert net_out[node] == value
                elif node == net.sink:
                    assert net_out[node] == -value
                else:
                    assert net_out[node] == 0


class TestSolveBicoloured:
    def test_two_colour_path_deletes_one(self):
        sol = solve_bicoloured(two_colour_path())
        assert sol.cut_value == 1
        assert len(sol.deleted_edges) == 1

    def test_single_colour_graph_keeps_everything(self):
        g = EdgeColouredGraph(
            n=4, edges=[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)], t=2
        )
        sol = solve_bicoloured(g)
        assert sol.cut_value == 0
        assert sol.deleted_edges == set()
        assert stability(g, sol.colouring).stable_count == g.m

    def test_matches_oracle_on_random_instances(self):
        rng = random.Random(19)
        for _ in range(150):
            g = random_bicoloured(rng)
            sol = solve_bicoloured(g)
            oracle = brute_force_clustering(g)
            assert sol.cut_value == oracle.min_deletion
            assert len(sol.deleted_edges) == sol.cut_value
            assert stability(g, sol.colouring).stable_count == g.m - sol.cut_value

    def test_deletion_set_destroys_every_conflict_pair(self):
        rng = random.Random(23)
        for _ in range(60):
            g = random_bicoloured(rng)
            sol = solve_bicoloured(g)
            remainder = EdgeColouredGraph(
                n=g.n,
                edges=[e for i, e in enumerate(g.edges) if i not in sol.deleted_edges],
                t=g.t,
            )
            assert is_vertex_monochromatic(remainder)

    def test_colour_labels_other_than_one_two_are_fine(self):
        # Roles follow first occurrence; labels need not be {1, 2}.
        g = EdgeColouredGraph(
            n=4, edges=[(0, 1, 3), (1, 2, 5), (2, 3, 3)], t=5
        )
        sol = solve_bicoloured(g)
        oracle = brute_force_clustering(g)
        assert sol.cut_value == oracle.min_deletion
        assert stability(g, sol.colouring).stable_count == g.m - sol.cut_value

    def test_agrees_with_conflict_graph_cover(self):
        rng = random.Random(29)
        for _ in range(40):
            n = rng.randint(1, 6)
            m = rng.randint(0, min(n * (n - 1) // 2, 10))
            g = random_instance(n, m, 2, seed=rng.randrange(2**32))
            sol = solve_bicoloured(g)
            assert sol.cut_value == brute_force_weighted_cover(build_conflict_graph(g))

    def test_every_minimum_deletion_set_disconnects_the_network(self):
        rng = random.Random(37)
        instances = 0
        while instances < 12:
            n = rng.randint(2, 5)
            m = rng.randint(1, min(n * (n - 1) // 2, 8))
            g = random_instance(n, m, 2, seed=rng.randrange(2**32))
            if not conflict_pairs(g):
                continue
            instances += 1
            net = build_flow_network(g)
            optimum = solve_bicoloured(g).cut_value
            external_of = {
                origin: arc
                for arc, origin in enumerate(net.arc_origin)
                if origin is not None
            }
            for subset in combinations(range(g.m), optimum):
                remainder = EdgeColouredGraph(
                    n=g.n,
                    edges=[e for i, e in enumerate(g.edges) if i not in subset],
                    t=g.t,
                )
                if not is_vertex_monochromatic(remainder):
                    continue
                # Removing the matching external arcs must cut all s-t paths.
                blocked = {external_of[i] for i in subset}
                kept_arcs = [
                    arc for i, arc in enumerate(net.arcs) if i not in blocked
                ]
                dg = nx.DiGraph()
                dg.add_nodes_from(range(net.node_count))
                dg.add_edges_from((u, v) for u, v, _ in kept_arcs)
                assert not nx.has_path(dg, net.source, net.sink)
