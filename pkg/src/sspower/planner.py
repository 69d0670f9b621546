"""Sample sizes for (epsilon, delta) guarantees and the tail bounds behind them."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InvalidTolerance, PlayerIndexRequired

LN_1129 = math.log(1.129)


class BoundKind(str, enum.Enum):
    A1_PER_PLAYER = "a1-per-player"
    A1_UNIFORM = "a1-uniform"
    A1_TV = "a1-tv"
    A2_PER_PLAYER = "a2-per-player"
    A2_UNIFORM = "a2-uniform"
    A2_TV = "a2-tv"

    @classmethod
    def lookup(cls, algorithm: str, bound: str) -> "BoundKind":
        return cls(f"{algorithm.lower()}-{bound.lower()}")


_NOTES = {
    BoundKind.A1_PER_PLAYER: "A1 per player: (ln 2 + ln(1/delta)) / (2 eps^2)",
    BoundKind.A1_UNIFORM: "A1 all players: (ln 2 + ln(1/delta) + ln n) / (2 eps^2)",
    BoundKind.A1_TV: "A1 total variation: (n ln 2 + ln(1/delta)) / (2 eps^2)",
    BoundKind.A2_PER_PLAYER: "A2 player i: (ln 2 + ln(1/delta)) / (2 eps^2 i^2)",
    BoundKind.A2_UNIFORM: "A2 all players: (ln 2 + ln(1/delta) + ln 1.129) / (2 eps^2)",
    BoundKind.A2_TV: "A2 total variation: (k ln 2 + ln(1/delta)) / (2 eps^2), k = distinct weights",
}


@dataclass(frozen=True)
class SamplePlan:
    epsilon: float
    delta: float
    bound_kind: BoundKind
    samples: int
    exact_value: float
    formula_note: str
    player: int | None = None
    categories: int | None = None

    def as_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "delta": self.delta,
            "bound": self.bound_kind.value,
            "samples": self.samples,
            "exact_value": self.exact_value,
            "formula": self.formula_note,
            "player": self.player,
            "categories": self.categories,
        }


def _check(epsilon, delta):
    if not epsilon > 0 or not math.isfinite(epsilon):
        raise InvalidTolerance(f"epsilon must be > 0, got {epsilon}")
    if not 0 < delta < 1:
        raise InvalidTolerance(f"delta must be in (0, 1), got {delta}")


def required_samples(
    bound_kind: BoundKind,
    epsilon: float,
    delta: float,
    *,
    n: int | None = None,
    n_distinct: int | None = None,
    player: int | None = None,
    n_star: int | None = None,
) -> float:
    """Real-valued right-hand side of the chosen sample bound.

    ``player`` is 1-based (the heaviest player is 1).  For ``A2_TV`` the
    number of categories is ``n_star`` when given, else ``n_distinct``.
    """
    bound_kind = BoundKind(bound_kind)
    _check(epsilon, delta)
    two_eps2 = 2.0 * epsilon * epsilon
    log_term = math.log(2.0) + math.log(1.0 / delta)

    if bound_kind is BoundKind.A1_PER_PLAYER:
        return log_term / two_eps2
    if bound_kind is BoundKind.A2_PER_PLAYER:
        if player is None:
            raise PlayerIndexRequired("the A2 per-player bound needs a player index")
        if player < 1 or (n is not None and player > n):
            raise PlayerIndexRequired(f"player must be in 1..n, got {player}")
        return log_term / (two_eps2 * player * player)
    if bound_kind is BoundKind.A2_UNIFORM:
        return (log_term + LN_1129) / two_eps2
    if bound_kind is BoundKind.A1_UNIFORM:
        return (log_term + math.log(_need(n, "n"))) / two_eps2
    if bound_kind is BoundKind.A1_TV:
        return (_need(n, "n") * math.log(2.0) + math.log(1.0 / delta)) / two_eps2
    k = n_star if n_star is not None else _need(n_distinct, "n_distinct")
    return (k * math.log(2.0) + math.log(1.0 / delta)) / two_eps2


def _need(value, name):
    if value is None or value < 1:
        raise ValueError(f"this bound needs {name} >= 1, got {value}")
    return value


def plan(
    bound_kind: BoundKind,
    epsilon: float,
    delta: float,
    *,
    n: int | None = None,
    n_distinct: int | None = None,
    player: int | None = None,
    n_star: int | None = None,
) -> SamplePlan:
    bound_kind = BoundKind(bound_kind)
    value = required_samples(
        bound_kind, epsilon, delta, n=n, n_distinct=n_distinct, player=player, n_star=n_star
    )
    categories = None
    if bound_kind is BoundKind.A1_TV:
        categories = n
    elif bound_kind is BoundKind.A2_TV:
        categories = n_star if n_star is not None else n_distinct
    return SamplePlan(
        epsilon=epsilon,
        delta=delta,
        bound_kind=bound_kind,
        samples=max(1, math.ceil(value)),
        exact_value=value,
        formula_note=_NOTES[bound_kind],
        player=player if bound_kind is BoundKind.A2_PER_PLAYER else None,
        categories=categories,
    )


def _check_tail_args(samples, epsilon):
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if not epsilon > 0:
        raise InvalidTolerance(f"epsilon must be > 0, got {epsilon}")


def hoeffding_tail(samples: float, epsilon: float, range_width: float = 1.0) -> float:
    """``P(|mean - E| >= eps) <= 2 exp(-2 M eps^2 / width^2)``, capped at 1.

    ``range_width`` is 1 for pivot indicators and ``1/i`` for the A2 share of
    player ``i``.
    """
    _check_tail_args(samples, epsilon)
    if not range_width > 0:
        raise ValueError(f"range_width must be > 0, got {range_width}")
    return min(1.0, 2.0 * math.exp(-2.0 * samples * epsilon**2 / range_width**2))


def bhc_tail(n_categories: int, samples: float, epsilon: float) -> float:
    """Bretagnolle-Huber-Carol bound on ``P(TV(empirical, p) >= eps)``."""
    if n_categories < 1:
        raise ValueError(f"n_categories must be >= 1, got {n_categories}")
    _check_tail_args(samples, epsilon)
    log_bound = n_categories * math.log(2.0) - 2.0 * samples * epsilon**2
    return 1.0 if log_bound >= 0 else math.exp(log_bound)


def a2_uniform_exact_failure(n: int, samples: float, epsilon: float) -> float:
    """Union bound ``2 sum_{i=1..n} exp(-2 M eps^2 i^2)`` over all A2 players.

    Whenever the first term is at most 1 the sum stays below ``1.129`` times
    the first term, for every ``n``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_tail_args(samples, epsilon)
    rate = 2.0 * samples * epsilon**2
    total = 0.0
    for i in range(1, n + 1):
        term = 2.0 * math.exp(-rate * i * i)
        if term == 0.0:
            break
        total += term
    return total
