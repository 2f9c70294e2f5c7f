"""Randomised search for a colouring with at least k stable edges.

One trial throws every vertex uniformly into one of k parts, gives each part
its internally most frequent edge colour, and counts the stable edges of the
induced colouring.  When some colouring achieves k stable edges, a single
trial reproduces at least k of them with probability k**(-2k) or better (the
k witness edges span at most 2k vertices, and it is enough that each lands
in the part holding its colour class), so ceil(k**(2k) * ln(1/delta))
independent trials drive the miss probability on yes-instances below delta.
A returned colouring is always checked, so "found" is never wrong; only
"not found" carries the confidence qualifier.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .graph import EdgeColouredGraph, VertexColouring, stability

_SEED_MIX = 0x9E3779B97F4A7C15
_SEED_MASK = (1 << 64) - 1
_MAX_TRIALS = (1 << 63) - 1


def _trial_seed(master_seed: int, trial_index: int) -> int:
    """Counter-based per-trial seed: trials can run in any order."""
    return (master_seed * _SEED_MIX + trial_index) & _SEED_MASK


@dataclass
class PartitionTrial:
    """Outcome of one random-partition trial.

    ``part_of[v]`` in 1..k, ``chosen_colour[i]`` is the best colour for part
    i + 1, and ``achieved`` the stable-edge count of the induced colouring
    (cross-part coincidences may push it above the per-part tally).
    """

    part_of: list[int]
    chosen_colour: list[int]
    achieved: int

    @property
    def colouring(self) -> VertexColouring:
        return [self.chosen_colour[p - 1] for p in self.part_of]


@dataclass
class StableSearchResult:
    found: bool
    colouring: VertexColouring | None
    k: int
    seed: int
    trials_budget: int
    trials_run: int
    best_achieved: int


def trials_budget(k: int, failure_prob: float) -> int:
    """ceil(k**(2k) * ln(1/failure_prob)), exact; errors when over 2**63 - 1."""
    if k < 1:
        raise ParameterError(f"parameter k must be at least 1, got {k}")
    if not 0.0 < failure_prob < 1.0:
        raise ParameterError(
            f"failure probability must lie in (0, 1), got {failure_prob}"
        )
    budget = math.ceil(Fraction(math.log(1.0 / failure_prob)) * k ** (2 * k))
    if budget > _MAX_TRIALS:
        raise ParameterError(
            f"trial budget {budget} for k={k} exceeds the 64-bit limit"
        )
    return max(budget, 1)


def run_trial(g: EdgeColouredGraph, k: int, rng_seed: int) -> PartitionTrial:
    """One random partition into k parts with per-part best colours."""
    if k < 1:
        raise ParameterError(f"parameter k must be at least 1, got {k}")
    rng = random.Random(rng_seed)
    part_of = [rng.randrange(k) + 1 for _ in range(g.n)]
    counts: list[dict[int, int]] = [{} for _ in range(k)]
    for u, v, colour in g.edges:
        part = part_of[u]
        if part == part_of[v]:
            bucket = counts[part - 1]
            bucket[colour] = bucket.get(colour, 0) + 1
    chosen_colour = []
    for bucket in counts:
        if bucket:
            # Highest count, then smallest colour: deterministic.
            chosen_colour.append(min(bucket, key=lambda c: (-bucket[c], c)))
        else:
            chosen_colour.append(1)
    trial = PartitionTrial(part_of=part_of, chosen_colour=chosen_colour, achieved=0)
    trial.achieved = stability(g, trial.colouring).stable_count
    return trial


def trivial_kernel_check(g: EdgeColouredGraph, k: int) -> VertexColouring | None:
    """Immediate witness when one colour class alone reaches k edges.

    Colouring every endpoint of a colour class c with c makes the whole
    class stable at once (no vertex needs two colours within one class), so
    any class of size >= k settles the question without any random trials.
    In particular m > k*t guarantees such a class by pigeonhole.
    """
    if k <= 0:
        return [1] * g.n
    class_size: dict[int, int] = {}
    for _, _, colour in g.edges:
        class_size[colour] = class_size.get(colour, 0) + 1
    winners = sorted(c for c, size in class_size.items() if size >= k)
    if not winners:
        return None
    winner = winners[0]
    f: VertexColouring = [1] * g.n
    for u, v, colour in g.edges:
        if colour == winner:
            f[u] = winner
            f[v] = winner
    return f


def solve_stable_fpt(
    g: EdgeColouredGraph,
    k: int,
    failure_prob: float = 0.01,
    seed: int = 0,
) -> StableSearchResult:
    """Decide whether some colouring makes at least k edges stable.

    Returns found=True with a verified witness colouring, or found=False,
    which on yes-instances happens with probability at most ``failure_prob``.
    """
    budget = trials_budget(k, failure_prob)
    witness = trivial_kernel_check(g, k)
    if witness is not None:
        achieved = stability(g, witness).stable_count
        assert achieved >= k
        return StableSearchResult(
            found=True,
            colouring=witness,
            k=k,
            seed=seed,
            trials_budget=budget,
            trials_run=0,
            best_achieved=achieved,
        )
    best_achieved = 0
    for index in range(budget):
        trial = run_trial(g, k, _trial_seed(seed, index))
        if trial.achieved > best_achieved:
            best_achieved = trial.achieved
        if trial.achieved >= k:
            colouring = trial.colouring
            assert stability(g, colouring).stable_count >= k
            return StableSearchResult(
                found=True,
                colouring=colouring,
                k=k,
                seed=seed,
                trials_budget=budget,
                trials_run=index + 1,
                best_achieved=best_achieved,
            )
    return StableSearchResult(
        found=False,
        colouring=None,
        k=k,
        seed=seed,
        trials_budget=budget,
        trials_run=budget,
        best_achieved=best_achieved,
    )
