"""Exact and Monte Carlo Shapley-Shubik power indices for weighted majority games."""

from .errors import *  # noqa: F401,F403
from .estimators import (
    Estimate,
    EstimatorConfig,
    a1_over_all_permutations,
    a2_over_all_permutations,
    estimate,
    estimate_a1,
    estimate_a2,
    random_permutation,
)
from .exact import ExactIndex, exact_by_dp, exact_by_enumeration, exact_index
from .experiments import ExperimentReport, TrialBattery, fit_alpha, run_battery, tv_distance
from .game import (
    WeightedMajorityGame,
    distinct_weight_count,
    is_winning,
    new_game,
    originator,
    pivot,
    swap_map,
)
from .instances import InstanceFile, builtin_instance, load_instance, parse_instance
from .planner import (
    BoundKind,
    SamplePlan,
    a2_uniform_exact_failure,
    bhc_tail,
    hoeffding_tail,
    plan,
    required_samples,
)

__version__ = "0.1.0"
