"""Weighted majority games and the permutation primitives built on them.

Players are indexed ``0..n-1`` in *canonical* order, i.e. by non-increasing
weight.  ``label_map[k]`` is the position of canonical player ``k`` in the
weight list the user supplied, so results can always be reported back in the
original order with :meth:`WeightedMajorityGame.to_original`.

A permutation is any sequence holding each canonical player exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Integral
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptyGame,
    InvalidPermutation,
    NonPositiveWeight,
    QuotaOutOfRange,
    WeightOverflow,
)

# Kernels accumulate prefix weights in int64.
MAX_TOTAL_WEIGHT = 2**63 - 1


@dataclass(frozen=True)
class WeightedMajorityGame:
    """The game ``[quota; weights]`` with weights in canonical order."""

    quota: int
    weights: tuple[int, ...]
    label_map: tuple[int, ...]
    weights_array: np.ndarray = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def original_weights(self) -> tuple[int, ...]:
        return tuple(self.to_original(self.weights))

    def to_original(self, values: Sequence) -> list:
        """Reorder a canonical per-player vector into the user's order."""
        if len(values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(values)}")
        out = [None] * self.n
        for k, label in enumerate(self.label_map):
            out[label] = values[k]
        return out

    def __str__(self) -> str:
        return f"[{self.quota}; {', '.join(map(str, self.original_weights))}]"


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (Integral, np.integer)):
        if isinstance(value, float) and value.is_integer():
            return int(value)
        raise TypeError(f"{what} must be an integer, got {value!r}")
    return int(value)


def new_game(quota: int, weights: Iterable[int]) -> WeightedMajorityGame:
    """Validate ``[quota; weights]`` and return it in canonical order.

    The sort is stable, so equal weights keep their relative input order.

    >>> g = new_game(5, [1, 10, 1])
    >>> g.weights, g.label_map
    ((10, 1, 1), (1, 0, 2))
    """
    ws = [_as_int(w, "weight") for w in weights]
    q = _as_int(quota, "quota")
    if not ws:
        raise EmptyGame("a game needs at least one player")
    bad = [w for w in ws if w < 1]
    if bad:
        raise NonPositiveWeight(f"weights must be >= 1, got {bad[0]}")
    total = sum(ws)
    if total > MAX_TOTAL_WEIGHT:
        raise WeightOverflow(f"total weight {total} does not fit in 63 bits")
    if q <= 0 or q > total:
        raise QuotaOutOfRange(f"quota must satisfy 0 < q <= {total}, got {q}")

    order = sorted(range(len(ws)), key=lambda k: -ws[k])
    canon = tuple(ws[k] for k in order)
    arr = np.asarray(canon, dtype=np.int64)
    arr.flags.writeable = False
    return WeightedMajorityGame(q, canon, tuple(order), arr)


def check_permutation(game: WeightedMajorityGame, perm: Sequence[int]) -> tuple[int, ...]:
    order = tuple(int(p) for p in perm)
    if len(order) != game.n or sorted(order) != list(range(game.n)):
        raise InvalidPermutation(f"{order} is not a permutation of 0..{game.n - 1}")
    return order


def is_winning(game: WeightedMajorityGame, coalition: Iterable[int]) -> bool:
    members = set(coalition)
    if not members <= set(range(game.n)):
        raise ValueError(f"coalition {sorted(members)} has unknown players")
    return sum(game.weights[i] for i in members) >= game.quota


def _pivot_position(weights, quota, order) -> tuple[int, int]:
    """Return (position of the pivot, prefix weight strictly before it)."""
    acc = 0
    for pos, player in enumerate(order):
        w = weights[player]
        if acc + w >= quota:
            return pos, acc
        acc += w
    raise AssertionError("grand coalition must be winning")


def pivot(game: WeightedMajorityGame, perm: Sequence[int]) -> int:
    """Player whose arrival turns the growing prefix of ``perm`` winning."""
    order = check_permutation(game, perm)
    pos, _ = _pivot_position(game.weights, game.quota, order)
    return order[pos]


def swap_map(game: WeightedMajorityGame, perm: Sequence[int], i: int) -> tuple[int, ...]:
    """Exchange players ``i`` and ``i - 1`` in ``perm``.

    Restricted to permutations pivoted by ``i`` this is the injection onto
    permutations pivoted by ``i - 1``.
    """
    order = list(check_permutation(game, perm))
    if not 1 <= i < game.n:
        raise ValueError(f"swap index must be in 1..{game.n - 1}, got {i}")
    a, b = order.index(i), order.index(i - 1)
    order[a], order[b] = order[b], order[a]
    return tuple(order)


def originator(game: WeightedMajorityGame, perm: Sequence[int]) -> tuple[int, int]:
    """Return ``(L, a)``: the originator's pivot player and the pivot position.

    Walks up the chain of inverse swap maps starting from the pivot.  The
    pivot position ``a`` never moves along the chain, so each step is a
    constant-time test on the prefix weight ``acc`` before ``a``.
    """
    order = check_permutation(game, perm)
    w, q, n = game.weights, game.quota, game.n
    a, acc = _pivot_position(w, q, order)
    ell = order[a]
    where = [0] * n
    for pos, player in enumerate(order):
        where[player] = pos
    while ell < n - 1:
        nxt = ell + 1
        if where[nxt] > a:
            if acc + w[nxt] < q:
                break
        else:
            moved = acc + w[ell] - w[nxt]
            if moved >= q:
                break
            acc = moved
        ell = nxt
    return ell, a


def originator_reference(game: WeightedMajorityGame, perm: Sequence[int]) -> int:
    """Quadratic originator: swap and recompute the pivot at every step."""
    order = check_permutation(game, perm)
    ell = pivot(game, order)
    while ell < game.n - 1:
        candidate = swap_map(game, order, ell + 1)
        if pivot(game, candidate) != ell + 1:
            break
        order, ell = candidate, ell + 1
    return ell


def distinct_weight_count(game: WeightedMajorityGame) -> int:
    return len(set(game.weights))
