"""Acceptance suite: one test per release criterion, exact tolerances.

Run with ``pytest -s tests/test_acceptance.py`` to see one PASS line per
criterion.  Every expected value is computed by an independent brute-force
route (or is a stated formula), never by the engine under test.
"""

import math
import random
import time
from itertools import combinations

import pytest

from ccluster import (
    EdgeColouredGraph,
    brute_force_clustering,
    brute_force_independent_set,
    brute_force_weighted_cover,
    brute_force_weighted_unstable,
    build_conflict_graph,
    components_edge_monochromatic,
    condense,
    conflict_pairs,
    hardness_reduction,
    is_vertex_monochromatic,
    random_instance,
    random_subcubic_graph,
    run_trial,
    solve_bicoloured,
    solve_complete,
    solve_stable_fpt,
    solve_unstable_fpt,
    stability,
)

from conftest import graph_corpus


def announce(number, text):
    print(f"\nACCEPTANCE {number} PASS: {text}")


@pytest.fixture(scope="module")
def unstable_corpus():
    """Shared corpus for the deletion-parameter criteria: instances with
    their oracle minimum deletion counts."""
    corpus = []
    for g in graph_corpus(1000, seed=505, max_n=8, max_t=3):
        corpus.append((g, brute_force_clustering(g).min_deletion))
    return corpus


def test_criterion_01_mincut_matches_oracle_exactly():
    rng = random.Random(101)
    instances = 0
    while instances < 1000:
        n = rng.randint(1, 8)
        m = rng.randint(0, n * (n - 1) // 2)
        g = random_instance(n, m, 2, seed=rng.randrange(2**32))
        solution = solve_bicoloured(g)
        oracle = brute_force_clustering(g)
        assert g.m - solution.cut_value == oracle.opt_stable
        assert stability(g, solution.colouring).stable_count == oracle.opt_stable
        instances += 1
    announce(1, "min-cut optimum equals brute force on 1000 two-colour instances")


def test_criterion_02_complete_solver_matches_oracle_exactly():
    rng = random.Random(202)
    instances = 0
    while instances < 500:
        n = rng.randint(2, 7)
        edges = [
            (u, v, rng.randint(1, 2))
            for u in range(n)
            for v in range(u + 1, n)
        ]
        g = EdgeColouredGraph(n=n, edges=edges, t=2)
        opt, colouring = solve_complete(g)
        assert opt == brute_force_clustering(g).opt_stable
        assert stability(g, colouring).stable_count == opt
        instances += 1
    announce(2, "complete-graph optimum equals brute force on 500 instances")


def test_criterion_03_conflict_graph_correspondence():
    rng = random.Random(303)
    instances = 0
    while instances < 500:
        n = rng.randint(1, 8)
        m = rng.randint(0, min(12, n * (n - 1) // 2))
        g = random_instance(n, m, rng.randint(1, 4), seed=rng.randrange(2**32))
        opt = brute_force_clustering(g).opt_stable
        x = build_conflict_graph(g)
        assert brute_force_independent_set(x) == opt
        assert brute_force_weighted_cover(x) == g.m - opt
        instances += 1
    announce(3, "stable optimum = max independent set, complement = min cover, "
                "on 500 instances")


def test_criterion_04_monochromatic_predicate_equivalence():
    rng = random.Random(404)
    for _ in range(10_000):
        n = rng.randint(0, 10)
        m = rng.randint(0, n * (n - 1) // 2)
        g = random_instance(n, m, rng.randint(1, 4), seed=rng.randrange(2**32))
        vertex_view = is_vertex_monochromatic(g)
        assert vertex_view == (not conflict_pairs(g))
        assert vertex_view == components_edge_monochromatic(g)
    announce(4, "three monochromaticity predicates agree on 10000 graphs")


def test_criterion_05_unstable_pipeline_matches_oracle(unstable_corpus):
    for g, min_deletion in unstable_corpus:
        for k in range(g.m + 1):
            result = solve_unstable_fpt(g, k)
            assert result.yes == (min_deletion <= k)
            if result.yes:
                assert len(result.deleted_edges) <= k
                remainder = EdgeColouredGraph(
                    n=g.n,
                    edges=[
                        e for i, e in enumerate(g.edges)
                        if i not in result.deleted_edges
                    ],
                    t=g.t,
                )
                assert is_vertex_monochromatic(remainder)
                assert stability(g, result.colouring).stable_count >= g.m - k
    announce(5, "deletion pipeline decision matches oracle for every k on "
                "1000 instances; all deletion sets verify")


def test_criterion_06_kernel_bound_never_violated(unstable_corpus):
    for g, min_deletion in unstable_corpus:
        gstar = condense(g)
        assert gstar.base.n <= 4 * min_deletion
        assert gstar.base.m <= 2 * min_deletion * min_deletion + min_deletion
    announce(6, "condensed size within 4k vertices / 2k^2+k edges at the "
                "oracle optimum, zero violations")


def test_criterion_07_condensed_weight_equivalence(unstable_corpus):
    for g, min_deletion in unstable_corpus:
        gstar = condense(g)
        assert (
            brute_force_weighted_unstable(gstar.base, gstar.weight)
            == min_deletion
        )
    announce(7, "minimum weighted unstable total on the condensed graph "
                "equals the source minimum deletion count")


def test_criterion_08_random_partition_engine():
    # Soundness: every positive answer carries a verifying colouring.
    rng = random.Random(808)
    yes_instances = []
    while len(yes_instances) < 200:
        n = rng.randint(4, 10)
        m = rng.randint(3, n * (n - 1) // 2)
        g = random_instance(n, m, rng.randint(1, 3), seed=rng.randrange(2**32))
        if brute_force_clustering(g).opt_stable >= 3:
            yes_instances.append(g)

    found_count = 0
    for index, g in enumerate(yes_instances):
        result = solve_stable_fpt(g, 3, failure_prob=0.01, seed=index)
        if result.found:
            assert stability(g, result.colouring).stable_count >= 3
            found_count += 1
    # Completeness: per-instance miss probability is at most 0.01, so 192 of
    # 200 leaves generous slack.
    assert found_count >= 192

    # Single-trial success frequency on one fixed certified yes-instance.
    fixed = EdgeColouredGraph(
        n=6, edges=[(0, 1, 1), (2, 3, 2), (4, 5, 3)], t=3
    )
    assert brute_force_clustering(fixed).opt_stable == 3
    trials = 10_000
    successes = sum(
        1 for i in range(trials) if run_trial(fixed, 3, rng_seed=i).achieved >= 3
    )
    p_bound = 3.0 ** (-6)
    sigma = math.sqrt(p_bound * (1 - p_bound) / trials)
    assert successes / trials >= p_bound - 3 * sigma
    announce(8, f"random-partition engine: {found_count}/200 found at k=3, "
                f"single-trial rate {successes / trials:.4f} >= "
                f"{p_bound - 3 * sigma:.6f}")


def test_criterion_09_gadget_equivalence():
    rng = random.Random(909)
    checked = 0
    while checked < 200:
        n = rng.randint(2, 8)
        n, edges = random_subcubic_graph(
            n, rng.randint(0, min(8, 3 * n // 2)), seed=rng.randrange(2**32)
        )
        red = hardness_reduction(n, edges)
        gadget = red.gprime

        # Independent brute-force independence number of the source.
        present = set(edges)
        alpha = 0
        for size in range(n, -1, -1):
            if any(
                all(
                    (a, b) not in present and (b, a) not in present
                    for a, b in combinations(subset, 2)
                )
                for subset in combinations(range(n), size)
            ):
                alpha = size
                break

        assert brute_force_clustering(gadget).opt_stable == alpha + len(edges)
        assert gadget.t == 3
        assert max((len(a) for a in gadget.adjacency), default=0) <= 4
        # Bipartite: sources on one side, subdivisions and pendants on the
        # other; verify by two-colouring the actual edge set.
        side = [0] * gadget.n
        for v in range(n):
            side[v] = 1
        for u, v, _ in gadget.edges:
            assert side[u] != side[v]
        checked += 1
    announce(9, "independence number + source edges equals gadget optimum on "
                "200 subcubic sources; gadgets bipartite, degree <= 4, 3 colours")


def test_criterion_10_matching_specialisation():
    rng = random.Random(1010)
    checked = 0
    while checked < 100:
        n = rng.randint(2, 7)
        m = rng.randint(0, min(10, n * (n - 1) // 2))
        base = random_instance(n, m, 1, seed=rng.randrange(2**32))
        edges = [(u, v, i + 1) for i, (u, v, _) in enumerate(base.edges)]
        g = EdgeColouredGraph(n=n, edges=edges, t=max(m, 1))

        best_matching = 0
        for size in range(m + 1):
            for subset in combinations(range(m), size):
                touched = set()
                ok = True
                for i in subset:
                    u, v, _ = edges[i]
                    if u in touched or v in touched:
                        ok = False
                        break
                    touched.update((u, v))
                if ok:
                    best_matching = max(best_matching, size)
        assert brute_force_clustering(g).opt_stable == best_matching
        checked += 1
    announce(10, "all-distinct-colour optimum equals exhaustive maximum "
                 "matching on 100 instances")


def test_criterion_11_empirical_scaling():
    sizes = [(10**3, 127, 3), (10**4, 400, 3), (10**5, 1265, 1)]
    medians = {}
    for m, n, repeats in sizes:
        g = random_instance(n, m, 2, seed=2024)
        times = []
        for _ in range(repeats):
            start = time.perf_counter()
            solution = solve_bicoloured(g)
            times.append(time.perf_counter() - start)
        assert (
            stability(g, solution.colouring).stable_count
            == g.m - solution.cut_value
        )
        medians[m] = sorted(times)[len(times) // 2]
    assert medians[10**5] < 10.0
    slope = (math.log(medians[10**5]) - math.log(medians[10**3])) / (
        math.log(10**5) - math.log(10**3)
    )
    assert slope < 2.0
    announce(11, f"solve at m=1e5 in {medians[10**5]:.2f}s, log-log slope "
                 f"{slope:.2f} < 2 across m in {{1e3, 1e4, 1e5}}")
