from itertools import combinations
from random import Random

import pytest
from hypothesis import given, strategies as st

from chipfiring import (
    GraphStructureError,
    Multigraph,
    activation_closure,
    greedy_target_set,
    is_target_set,
    min_target_set,
)
from chipfiring.families import (
    complete_graph,
    connected_simple_graphs,
    cycle_graph,
    path_graph,
    threshold_assignments,
)

P3 = path_graph(3)
K3 = complete_graph(3)
K2 = Multigraph(2, [(0, 1, 1)])


def test_closure_cascades_along_path():
    assert activation_closure(P3, (1, 1, 1), {0}) == frozenset({0, 1, 2})


def test_closure_stalls_on_triangle():
    assert activation_closure(K3, (2, 2, 2), {0}) == frozenset({0})


def test_zero_thresholds_self_activate():
    assert activation_closure(K3, (0, 0, 0), set()) == frozenset({0, 1, 2})


def test_is_target_set_triangle():
    assert is_target_set(K3, (2, 2, 2), {0, 1})
    assert not is_target_set(K3, (2, 2, 2), {0})


def test_adjacent_pair_seeds_a_diamond():
    # 4-vertex instance: two adjacent degree-3 vertices seed everything at
    # threshold 2, and no single seed does
    diamond = Multigraph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)])
    assert is_target_set(diamond, (2, 2, 2, 2), {0, 1})
    assert min_target_set(diamond, (2, 2, 2, 2)).size == 2


def test_min_target_set_examples():
    assert min_target_set(K3, (2, 2, 2)).size == 2
    assert min_target_set(P3, (1, 1, 1)) .size == 1
    got = min_target_set(K2, (2, 1))
    assert got.members == (0,)  # vertex 0 can never be neighbor-activated


def test_min_target_set_lexicographic_witness():
    assert min_target_set(K3, (2, 2, 2)).members == (0, 1)
    assert min_target_set(P3, (1, 1, 1)).members == (0,)


def test_greedy_is_valid_but_maybe_larger():
    for g, tau in [(K3, (2, 2, 2)), (P3, (1, 1, 1)), (K3, (0, 0, 0)), (K2, (2, 1))]:
        got = greedy_target_set(g, tau)
        assert is_target_set(g, tau, got.members)
        assert got.size >= min_target_set(g, tau).size


def test_greedy_zero_thresholds_returns_empty():
    assert greedy_target_set(K3, (0, 0, 0)).members == ()


def test_simple_graph_required():
    bundle = Multigraph(2, [(0, 1, 2)])
    with pytest.raises(GraphStructureError):
        activation_closure(bundle, (1, 1), set())
    with pytest.raises(GraphStructureError):
        min_target_set(bundle, (1, 1))


def test_threshold_validation():
    with pytest.raises(GraphStructureError):
        min_target_set(K2, (3, 1))  # above degree + 1
    with pytest.raises(GraphStructureError):
        min_target_set(K2, (-1, 1))
    with pytest.raises(GraphStructureError):
        min_target_set(K2, (1,))


small_instance = st.integers(min_value=0, max_value=5000).map(
    lambda seed: _random_tss_instance(seed)
)


def _random_tss_instance(seed):
    rng = Random(seed)
    graphs = connected_simple_graphs([2, 3, 4, 5])
    g = rng.choice(graphs)
    tau = tuple(rng.randint(0, d + 1) for d in g.degrees)
    return g, tau


@given(small_instance, st.integers(min_value=0, max_value=999))
def test_closure_monotone_in_seed(inst, sseed):
    g, tau = inst
    rng = Random(sseed)
    small = {v for v in range(g.n) if rng.random() < 0.3}
    big = small | {v for v in range(g.n) if rng.random() < 0.3}
    assert activation_closure(g, tau, small) <= activation_closure(g, tau, big)


@given(small_instance, st.integers(min_value=0, max_value=999))
def test_closure_idempotent(inst, sseed):
    g, tau = inst
    rng = Random(sseed)
    seed = {v for v in range(g.n) if rng.random() < 0.4}
    once = activation_closure(g, tau, seed)
    assert activation_closure(g, tau, once) == once


def test_minimum_truly_minimal_exhaustive():
    for g in connected_simple_graphs([2, 3, 4]):
        for tau in threshold_assignments(g, low=0, high_offset=1):
            best = min_target_set(g, tau)
            assert is_target_set(g, tau, best.members)
            if best.size:
                for smaller in combinations(range(g.n), best.size - 1):
                    assert not is_target_set(g, tau, smaller)


def test_cycle_needs_alternating_seeds():
    c4 = cycle_graph(4)
    assert min_target_set(c4, (2, 2, 2, 2)).members == (0, 2)
