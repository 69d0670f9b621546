import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sspower import (
    DegenerateInput,
    LengthMismatch,
    TrialBattery,
    builtin_instance,
    exact_by_dp,
    fit_alpha,
    new_game,
    run_battery,
    tv_distance,
)


def test_tv_examples():
    assert tv_distance([0.2, 0.8], [0.2, 0.8]) == 0
    assert tv_distance([1, 0], [0, 1]) == 1
    assert tv_distance([5 / 12, 1 / 4, 1 / 4, 1 / 12], [1 / 4] * 4) == pytest.approx(1 / 6, abs=1e-15)
    with pytest.raises(LengthMismatch):
        tv_distance([1], [0.5, 0.5])


simplex = st.integers(1, 8).flatmap(
    lambda n: st.lists(st.lists(st.floats(0, 1), min_size=n, max_size=n).filter(lambda v: sum(v) > 0), min_size=3, max_size=3)
)


@given(simplex)
def test_tv_is_a_metric(triple):
    a, b, c = (np.array(v) / sum(v) for v in triple)
    assert tv_distance(a, b) == pytest.approx(tv_distance(b, a))
    assert 0 <= tv_distance(a, b) <= 1 + 1e-12
    assert tv_distance(a, c) <= tv_distance(a, b) + tv_distance(b, c) + 1e-12
    assert tv_distance(a, a) == 0


def test_fit_alpha_exact():
    m = np.array([1e4, 2e4, 4e4, 8e4])
    err = np.sqrt(0.05 / m)
    assert fit_alpha(m, err) == pytest.approx(0.05, rel=1e-12)
    assert fit_alpha(m, np.sqrt(0.05 / (m - 300)), intercept=True) == pytest.approx(0.05, rel=1e-9)


def test_fit_alpha_degenerate():
    with pytest.raises(DegenerateInput):
        fit_alpha([100], [0.1])
    with pytest.raises(DegenerateInput):
        fit_alpha([100, 200], [0.1, 0.0])
    with pytest.raises(LengthMismatch):
        fit_alpha([100, 200], [0.1])


def test_battery_validation(figure1):
    with pytest.raises(ValueError):
        TrialBattery(figure1, ("a1",), (100, 100), 2)
    with pytest.raises(ValueError):
        TrialBattery(figure1, ("a9",), (100,), 2)
    with pytest.raises(ValueError):
        TrialBattery(figure1, ("a1",), (100,), 0)


def test_dictator_battery_is_error_free():
    g = new_game(5, [10, 1, 1])
    report = run_battery(TrialBattery(g, ("a1", "a2"), (10, 20), 3, seed=1), exact_by_dp(g))
    for s in report.series.values():
        assert not s.mean_abs_error.any() and not s.mse.any()
        assert s.alpha == [None, None, None]
    assert report.alpha_ratio() == [None, None, None]


def test_eu_equal_weight_players_share_error_series():
    g = builtin_instance("eu_council").game()
    report = run_battery(TrialBattery(g, ("a2",), (2000, 4000), 5, seed=9), exact_by_dp(g))
    mae = report.series["a2"].mean_abs_error
    assert np.array_equal(mae[:, 0], mae[:, 3])
    assert np.array_equal(mae[:, 21], mae[:, 25])


def test_battery_determinism(figure1):
    battery = TrialBattery(figure1, ("a1", "a2"), (500, 1000), 4, seed=3, batches=2)
    exact = exact_by_dp(figure1)
    a, b = run_battery(battery, exact), run_battery(battery, exact)
    for name in ("a1", "a2"):
        assert np.array_equal(a.series[name].mean_abs_error, b.series[name].mean_abs_error)
        assert a.series[name].alpha == b.series[name].alpha


def test_a1_error_scale(figure1):
    # E|binomial mean - p| ~ sqrt(2/pi) sqrt(p(1-p)/M) for large M
    m = 10_000
    report = run_battery(TrialBattery(figure1, ("a1",), (m,), 100, seed=21), exact_by_dp(figure1))
    p = 5 / 12
    scale = math.sqrt(2 / math.pi) * math.sqrt(p * (1 - p) / m)
    observed = report.series["a1"].mean_abs_error[0, 0]
    assert scale / 3 < observed < 3 * scale


def test_on_estimate_hook(figure1):
    seen = []
    run_battery(TrialBattery(figure1, ("a2",), (50,), 2), exact_by_dp(figure1),
                on_estimate=lambda *args: seen.append(args[:3]))
    assert seen == [("a2", 50, 0), ("a2", 50, 1)]
