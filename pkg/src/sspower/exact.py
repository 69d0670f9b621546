"""Exact Shapley-Shubik indices as rationals.

Two independent routes: brute-force enumeration of all ``n!`` orderings and a
coalition-counting dynamic program over (size, weight).  Neither touches
floating point; they serve as the oracle for everything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

import numpy as np

from .errors import ResourceLimitExceeded, TooLargeForEnumeration
from .game import WeightedMajorityGame, _pivot_position

ENUMERATION_CAP = 10
DP_CELL_LIMIT = 50_000_000


@dataclass(frozen=True)
class ExactIndex:
    """Per-player exact index in canonical order."""

    values: tuple[Fraction, ...]
    method: str

    def as_floats(self) -> np.ndarray:
        return np.array([float(v) for v in self.values])

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def pivot_counts_by_enumeration(game: WeightedMajorityGame, cap: int = ENUMERATION_CAP) -> list[int]:
    """Number of orderings in which each player is pivotal."""
    if game.n > cap:
        raise TooLargeForEnumeration(f"n={game.n} exceeds the enumeration cap {cap}")
    counts = [0] * game.n
    w, q = game.weights, game.quota
    for order in permutations(range(game.n)):
        pos, _ = _pivot_position(w, q, order)
        counts[order[pos]] += 1
    return counts


def exact_by_enumeration(game: WeightedMajorityGame, cap: int = ENUMERATION_CAP) -> ExactIndex:
    counts = pivot_counts_by_enumeration(game, cap)
    total = factorial(game.n)
    return ExactIndex(tuple(Fraction(c, total) for c in counts), "enum")


def _coalition_table(weights, quota: int, n: int) -> np.ndarray:
    # table[k, s]: coalitions of size k and weight s < quota.
    table = np.zeros((n + 1, quota), dtype=object)
    table[0, 0] = 1
    for w in weights:
        if w < quota:
            table[1:, w:] = table[1:, w:] + table[:-1, : quota - w]
    return table


def _without(table: np.ndarray, w: int, quota: int) -> np.ndarray:
    out = table.copy()
    if w < quota:
        for k in range(1, out.shape[0]):
            out[k, w:] = table[k, w:] - out[k - 1, : quota - w]
    return out


def exact_by_dp(game: WeightedMajorityGame, cell_limit: int = DP_CELL_LIMIT) -> ExactIndex:
    """Count swing coalitions by size and weight.

    Player ``i`` is pivotal after the coalition ``S`` (not containing ``i``)
    iff ``q - w_i <= w(S) <= q - 1``; each such ``S`` of size ``k`` accounts
    for ``k! (n-1-k)!`` orderings.  The table over all players is built once
    and each distinct weight is removed from it in a single pass.
    """
    n, q = game.n, game.quota
    cells = (n + 1) * q
    if cells > cell_limit:
        raise ResourceLimitExceeded(
            f"DP table needs {cells} cells, limit is {cell_limit}"
        )
    full = _coalition_table(game.weights, q, n)
    coef = [factorial(k) * factorial(n - 1 - k) for k in range(n)]
    total = factorial(n)

    by_weight: dict[int, Fraction] = {}
    for w in set(game.weights):
        rest = _without(full, w, q)
        lo = max(0, q - w)
        swings = 0
        for k in range(n):
            swings += coef[k] * int(sum(rest[k, lo:q]))
        by_weight[w] = Fraction(swings, total)
    return ExactIndex(tuple(by_weight[w] for w in game.weights), "dp")


def exact_index(game: WeightedMajorityGame, method: str = "dp") -> ExactIndex:
    if method == "dp":
        return exact_by_dp(game)
    if method == "enum":
        return exact_by_enumeration(game)
    raise ValueError(f"unknown exact method {method!r}")
