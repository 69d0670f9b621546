"""Monte Carlo estimators of the Shapley-Shubik index.

``estimate_a1`` counts how often each player is pivotal in uniformly random
orderings.  ``estimate_a2`` instead finds the originator ``L`` of each ordering
and spreads one unit of mass evenly over the ``L`` heaviest players, which is
unbiased and has far smaller variance for light players.

Random streams
--------------
Batch ``b`` of a run with seed ``s`` draws from ``PCG64(SeedSequence(s,
spawn_key=(b,)))``; :func:`derive_seed` uses the same ``SeedSequence`` mixing
for experiment trials.  Orderings come from ``Generator.permuted``, an
unbiased Fisher-Yates shuffle.  Both kernel backends consume identical
blocks, so results do not depend on the backend, the thread schedule or the
block size.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
import os

import numpy as np

from . import kernels
from .game import WeightedMajorityGame, originator, pivot

BLOCK_ROWS = 1 << 14
ALGORITHMS = ("a1", "a2")


@dataclass(frozen=True)
class EstimatorConfig:
    samples: int
    seed: int = 0
    batches: int = 1

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if not 1 <= self.batches <= self.samples:
            raise ValueError(f"batches must be in 1..samples, got {self.batches}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    def batch_sizes(self) -> list[int]:
        base, extra = divmod(self.samples, self.batches)
        return [base + (b < extra) for b in range(self.batches)]


@dataclass(frozen=True)
class Estimate:
    """Estimated index in canonical player order."""

    values: np.ndarray
    algorithm: str
    samples_used: int
    counts: np.ndarray


def batch_generator(seed: int, batch: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(batch,))))


def derive_seed(seed: int, *key: int) -> int:
    """Mix ``seed`` and an integer key into a fresh 64-bit seed."""
    state = np.random.SeedSequence(seed, spawn_key=tuple(int(k) for k in key)).generate_state(1, np.uint64)
    return int(state[0])


def random_permutation(n: int, rng: np.random.Generator) -> np.ndarray:
    return rng.permutation(n)


def permutation_blocks(n: int, samples: int, rng: np.random.Generator, block_rows: int = BLOCK_ROWS):
    """Yield ``(rows, n)`` int64 arrays of independent uniform permutations."""
    base = np.arange(n, dtype=np.int64)
    left = samples
    while left:
        rows = min(left, block_rows)
        yield rng.permuted(np.broadcast_to(base, (rows, n)), axis=1)
        left -= rows


def _batch_counts(game, kind, samples, seed, batch, backend):
    kernel = kernels.get_kernel(kind, backend)
    rng = batch_generator(seed, batch)
    counts = np.zeros(game.n, dtype=np.int64)
    q = np.int64(game.quota)
    for block in permutation_blocks(game.n, samples, rng):
        counts += kernel(block, game.weights_array, q)
    return counts


def sample_counts(game: WeightedMajorityGame, kind: str, config: EstimatorConfig, backend=None, workers=None) -> np.ndarray:
    """Merged per-player pivot (``kind="pivot"``) or originator counts."""
    jobs = [(game, kind, m, config.seed, b, backend) for b, m in enumerate(config.batch_sizes())]
    if config.batches == 1:
        parts = [_batch_counts(*jobs[0])]
    else:
        workers = workers or min(config.batches, os.cpu_count() or 1)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _batch_counts(*job), jobs))
    total = np.zeros(game.n, dtype=np.int64)
    for part in parts:
        total += part
    return total


def a1_values(counts: np.ndarray, samples: int) -> np.ndarray:
    return counts / samples


def a2_values(counts: np.ndarray, samples: int) -> np.ndarray:
    """Turn originator counts into the averaged prefix updates.

    A sample with originator ``L`` adds ``1/L`` to players ``0..L-1``
    (zero-based ``L-1``), so player ``i`` collects ``sum_{l >= i} c_l / (l+1)``.
    """
    out = np.empty(counts.shape[0])
    acc = 0.0
    for ell in range(counts.shape[0] - 1, -1, -1):
        acc += counts[ell] / (ell + 1)
        out[ell] = acc
    return out / samples


def estimate_a1(game: WeightedMajorityGame, config: EstimatorConfig, backend=None) -> Estimate:
    counts = sample_counts(game, "pivot", config, backend)
    return Estimate(a1_values(counts, config.samples), "a1", config.samples, counts)


def estimate_a2(game: WeightedMajorityGame, config: EstimatorConfig, backend=None) -> Estimate:
    counts = sample_counts(game, "originator", config, backend)
    return Estimate(a2_values(counts, config.samples), "a2", config.samples, counts)


def estimate(game: WeightedMajorityGame, algorithm: str, config: EstimatorConfig, backend=None) -> Estimate:
    if algorithm == "a1":
        return estimate_a1(game, config, backend)
    if algorithm == "a2":
        return estimate_a2(game, config, backend)
    raise ValueError(f"unknown algorithm {algorithm!r}, expected one of {ALGORITHMS}")


# Deterministic counterparts: every ordering visited exactly once.


def a1_over_all_permutations(game: WeightedMajorityGame) -> tuple[Fraction, ...]:
    acc = [0] * game.n
    for order in permutations(range(game.n)):
        acc[pivot(game, order)] += 1
    total = factorial(game.n)
    return tuple(Fraction(c, total) for c in acc)


def a2_over_all_permutations(game: WeightedMajorityGame) -> tuple[Fraction, ...]:
    acc = [Fraction(0)] * game.n
    for order in permutations(range(game.n)):
        ell, _ = originator(game, order)
        share = Fraction(1, ell + 1)
        for i in range(ell + 1):
            acc[i] += share
    total = factorial(game.n)
    return tuple(v / total for v in acc)
