"""Error metrics and repeated-trial batteries comparing the estimators."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateInput, LengthMismatch
from .estimators import ALGORITHMS, EstimatorConfig, derive_seed, estimate
from .exact import ExactIndex
from .game import WeightedMajorityGame


def tv_distance(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise LengthMismatch(f"vectors have shapes {a.shape} and {b.shape}")
    return 0.5 * float(np.abs(a - b).sum())


def fit_alpha(samples, errors, intercept: bool = False) -> float:
    """Least-squares ``alpha`` in ``M = alpha / err^2`` (through the origin).

    With ``intercept=True`` the model is ``M = alpha / err^2 + beta`` and only
    ``alpha`` is returned.
    """
    m = np.asarray(samples, dtype=float)
    e = np.asarray(errors, dtype=float)
    if m.shape != e.shape:
        raise LengthMismatch("samples and errors differ in length")
    if m.size < 2:
        raise DegenerateInput("need at least two (M, error) points")
    if np.any(e <= 0):
        raise DegenerateInput("zero error: precision is infinite, nothing to fit")
    x = 1.0 / e**2
    if not intercept:
        return float((m * x).sum() / (x * x).sum())
    design = np.column_stack([x, np.ones_like(x)])
    coef, *_ = np.linalg.lstsq(design, m, rcond=None)
    return float(coef[0])


@dataclass(frozen=True)
class TrialBattery:
    game: WeightedMajorityGame
    algorithms: tuple[str, ...]
    samples: tuple[int, ...]
    trials: int
    seed: int = 0
    batches: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.samples or any(b <= a for a, b in zip(self.samples, self.samples[1:])):
            raise ValueError("sample counts must be non-empty and strictly increasing")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown or not self.algorithms:
            raise ValueError(f"algorithms must be drawn from {ALGORITHMS}")


@dataclass
class AlgorithmSeries:
    """Errors for one algorithm; arrays are indexed ``[M index, player]``."""

    algorithm: str
    mean_abs_error: np.ndarray
    mse: np.ndarray
    seconds: np.ndarray
    alpha: list = field(default_factory=list)


@dataclass
class ExperimentReport:
    game: WeightedMajorityGame
    samples: tuple[int, ...]
    trials: int
    seed: int
    series: dict[str, AlgorithmSeries]

    def alpha_ratio(self, numerator="a1", denominator="a2") -> list:
        top, bottom = self.series[numerator].alpha, self.series[denominator].alpha
        return [
            None if a is None or b is None or b == 0 else a / b
            for a, b in zip(top, bottom)
        ]


def trial_seed(base: int, samples: int, trial: int) -> int:
    return derive_seed(base, samples, trial)


def run_battery(battery: TrialBattery, exact: ExactIndex, on_estimate=None, backend=None) -> ExperimentReport:
    """Run every (algorithm, M, trial) and aggregate per-player errors.

    ``on_estimate(algorithm, M, trial, estimate)`` is called for each run,
    which is how callers inspect individual estimates.  The trial seed depends
    only on (seed, M, trial), so A1 and A2 see the same streams.
    """
    game = battery.game
    truth = exact.as_floats()
    series = {}
    for algorithm in battery.algorithms:
        mae = np.zeros((len(battery.samples), game.n))
        mse = np.zeros_like(mae)
        seconds = np.zeros(len(battery.samples))
        for k, m in enumerate(battery.samples):
            started = time.perf_counter()
            for t in range(battery.trials):
                cfg = EstimatorConfig(m, trial_seed(battery.seed, m, t), battery.batches)
                est = estimate(game, algorithm, cfg, backend)
                if on_estimate is not None:
                    on_estimate(algorithm, m, t, est)
                diff = np.abs(est.values - truth)
                mae[k] += diff
                mse[k] += diff * diff
            seconds[k] = time.perf_counter() - started
        mae /= battery.trials
        mse /= battery.trials
        alphas = []
        for i in range(game.n):
            try:
                alphas.append(fit_alpha(battery.samples, mae[:, i]))
            except DegenerateInput:
                alphas.append(None)
        series[algorithm] = AlgorithmSeries(algorithm, mae, mse, seconds, alphas)
    return ExperimentReport(game, battery.samples, battery.trials, battery.seed, series)
