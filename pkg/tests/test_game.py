import random
from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from sspower import (
    EmptyGame,
    InvalidPermutation,
    NonPositiveWeight,
    QuotaOutOfRange,
    WeightOverflow,
    builtin_instance,
    distinct_weight_count,
    is_winning,
    new_game,
    originator,
    pivot,
    swap_map,
)
from sspower.game import originator_reference

from conftest import random_game
from oracles import all_pivots, originators_by_search

# Orderings below are written with the 1-based labels of the game [50; 40, 30, 20, 10].


def zb(*players):
    return tuple(p - 1 for p in players)


def test_new_game_already_sorted(figure1):
    assert figure1.n == 4
    assert figure1.weights == (40, 30, 20, 10)
    assert figure1.label_map == (0, 1, 2, 3)


def test_new_game_sorts_stably():
    g = new_game(5, [1, 10, 1])
    assert g.weights == (10, 1, 1)
    assert tuple(k + 1 for k in g.label_map) == (2, 1, 3)
    assert g.to_original([0.5, 0.3, 0.2]) == [0.3, 0.5, 0.2]
    assert g.original_weights == (1, 10, 1)


@pytest.mark.parametrize(
    "quota, weights, exc",
    [
        (101, [40, 30, 20, 10], QuotaOutOfRange),
        (0, [1], QuotaOutOfRange),
        (-3, [5], QuotaOutOfRange),
        (1, [], EmptyGame),
        (1, [3, 0], NonPositiveWeight),
        (1, [2**62, 2**62], WeightOverflow),
    ],
)
def test_new_game_rejects(quota, weights, exc):
    with pytest.raises(exc):
        new_game(quota, weights)


def test_new_game_rejects_non_integers():
    with pytest.raises(TypeError):
        new_game(3, [1.5, 2])


def test_is_winning(figure1):
    assert is_winning(figure1, {0, 1})
    assert not is_winning(figure1, {2, 3})
    assert not is_winning(figure1, set())
    assert not is_winning(new_game(1, [1]), set())


@pytest.mark.parametrize(
    "order, expected",
    [((1, 2, 3, 4), 2), ((2, 1, 3, 4), 1), ((1, 4, 2, 3), 4), ((3, 2, 4, 1), 2)],
)
def test_pivot_figure1(figure1, order, expected):
    assert pivot(figure1, zb(*order)) + 1 == expected


def test_pivot_rejects_bad_permutation(figure1):
    with pytest.raises(InvalidPermutation):
        pivot(figure1, (0, 1, 1, 2))
    with pytest.raises(InvalidPermutation):
        pivot(figure1, (0, 1, 2))


def test_swap_map_matches_figure(figure1):
    # f_3 sends (1,3,2,4) to (1,2,3,4), f_2 then to (2,1,3,4)
    assert swap_map(figure1, zb(1, 3, 2, 4), 2) == zb(1, 2, 3, 4)
    assert swap_map(figure1, zb(1, 2, 3, 4), 1) == zb(2, 1, 3, 4)


@pytest.mark.parametrize(
    "order, expected",
    [
        ((3, 2, 4, 1), 3),
        ((1, 4, 2, 3), 4),
        # (2,1,3,4) -> (1,2,3,4) -> (1,3,2,4) -> (1,4,2,3): top row of the figure
        ((2, 1, 3, 4), 4),
        ((4, 1, 3, 2), 1),
    ],
)
def test_originator_figure1(figure1, order, expected):
    ell, pos = originator(figure1, zb(*order))
    assert ell + 1 == expected
    assert pos == 1


def test_figure1_originator_histogram(figure1):
    # Figure chains: two of length 4, four of length 3, four singletons in the first column.
    counts = Counter(originator(figure1, p)[0] + 1 for p in permutations(range(4)))
    assert counts == Counter({4: 8, 3: 12, 1: 4})


def test_distinct_weight_count():
    assert distinct_weight_count(new_game(10, [5, 5, 5])) == 1
    assert distinct_weight_count(builtin_instance("eu_council").game()) == 9
    assert distinct_weight_count(builtin_instance("us_electoral").game()) == 19


def _games(seed, count, n_max=7):
    rng = random.Random(seed)
    return [random_game(rng, n_max=n_max, w_max=9) for _ in range(count)]


@pytest.mark.parametrize("game", _games(11, 60), ids=str)
def test_pivot_partition_and_swap_injectivity(game):
    piv = all_pivots(game)
    assert {p: pivot(game, p) for p in piv} == piv
    groups = {}
    for order, p in piv.items():
        groups.setdefault(p, []).append(order)
    for i in range(1, game.n):
        images = {swap_map(game, order, i) for order in groups.get(i, [])}
        assert len(images) == len(groups.get(i, []))
        assert all(pivot(game, o) == i - 1 for o in images)


@pytest.mark.parametrize("game", _games(12, 60), ids=str)
def test_originator_matches_search(game):
    expected, piv = originators_by_search(game)
    per_level = Counter()
    for order, org in expected.items():
        ell, pos = originator(game, order)
        assert ell == org
        assert originator_reference(game, order) == org
        assert ell >= piv[order]
        assert order[pos] == piv[order]
        per_level[(org, piv[order])] += 1
    for ell in range(game.n):
        sizes = {per_level[(ell, i)] for i in range(ell + 1)}
        assert len(sizes) == 1
        if ell < game.n - 1 and game.weights[ell] == game.weights[ell + 1]:
            assert per_level[(ell, ell)] == 0


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=12), st.data())
def test_originator_chain_equals_reference(weights, data):
    quota = data.draw(st.integers(1, sum(weights)))
    game = new_game(quota, weights)
    order = data.draw(st.permutations(range(game.n)))
    ell, pos = originator(game, order)
    assert ell == originator_reference(game, order)
    assert order[pos] == pivot(game, order)
    assert ell >= pivot(game, order)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 50), min_size=1, max_size=15), st.data())
def test_pivot_prefix_property(weights, data):
    game = new_game(data.draw(st.integers(1, sum(weights))), weights)
    order = data.draw(st.permutations(range(game.n)))
    p = pivot(game, order)
    k = order.index(p)
    before = sum(game.weights[x] for x in order[:k])
    assert before < game.quota <= before + game.weights[p]
