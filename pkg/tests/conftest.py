import random

from ccluster import EdgeColouredGraph, random_instance


def random_graph(rng: random.Random, max_n: int = 8, max_t: int = 3,
                 min_n: int = 0) -> EdgeColouredGraph:
    """Random instance with size drawn across the full density range."""
    n = rng.randint(min_n, max_n)
    max_edges = n * (n - 1) // 2
    m = rng.randint(0, max_edges)
    t = rng.randint(1, max_t)
    return random_instance(n, m, t, seed=rng.randrange(2**32))


def graph_corpus(count: int, seed: int, max_n: int = 8, max_t: int = 3,
                 min_n: int = 0) -> list[EdgeColouredGraph]:
    rng = random.Random(seed)
    return [random_graph(rng, max_n=max_n, max_t=max_t, min_n=min_n)
            for _ in range(count)]
