import json
from random import Random

import pytest
from hypothesis import given, strategies as st

from chipfiring import (
    Multigraph,
    SizeGuardError,
    is_recurrent,
    is_winnable,
    min_target_set,
    rank,
)
from chipfiring.families import (
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_multigraph,
    random_divisor,
)
from chipfiring.oracles import (
    OracleReport,
    default_winnability_bound,
    instance_fingerprint,
    rank_definitional,
    recurrent_permutation,
    ts_subset_enumeration,
    verify_reduction_chain,
    winnable_exhaustive,
    winnable_within_bound,
)

K2 = Multigraph(2, [(0, 1, 1)])
C3 = cycle_graph(3)


def test_recurrent_permutation_examples():
    assert recurrent_permutation(C3, (2, 1, 0))
    assert not recurrent_permutation(K2, (0, 0))
    assert not recurrent_permutation(C3, (2, 0, 0))


def test_recurrent_permutation_guard():
    big = path_graph(10)
    with pytest.raises(SizeGuardError):
        recurrent_permutation(big, (0,) * 10)


def test_ts_subset_examples():
    assert ts_subset_enumeration(C3, (2, 2, 2)) == 2
    assert ts_subset_enumeration(path_graph(3), (1, 1, 1)) == 1
    assert ts_subset_enumeration(C3, (0, 0, 0)) == 0


def test_rank_definitional_examples():
    assert rank_definitional(C3, (1, 1, 1)) == 2
    assert rank_definitional(K2, (0, 0)) == 0
    assert rank_definitional(K2, (-1, 5)) == 3  # deg 4 on a tree-like pair
    assert rank_definitional(C3, (-1, 0, 0)) == -1


def test_winnability_strategies_agree():
    rng = Random(31)
    for _ in range(200):
        g = random_connected_multigraph(rng, max_n=3, max_extra_edges=1, max_multiplicity=2)
        f = random_divisor(rng, g, low=-4, high_offset=2)
        bound = min(default_winnability_bound(g, f), 10)
        assert winnable_within_bound(g, f, bound) == winnable_exhaustive(g, f, bound), (
            g.edges(), f, bound,
        )


@given(st.integers(min_value=0, max_value=10_000))
def test_winnability_oracle_matches_game_path(seed):
    rng = Random(seed)
    g = random_connected_multigraph(rng, max_n=4, max_extra_edges=2)
    f = random_divisor(rng, g, low=-4, high_offset=2)
    bound = default_winnability_bound(g, f)
    assert winnable_within_bound(g, f, bound) == is_winnable(g, f)


@given(st.integers(min_value=0, max_value=10_000))
def test_recurrence_oracle_matches_greedy(seed):
    rng = Random(seed)
    g = random_connected_multigraph(rng, max_n=5, max_extra_edges=2)
    f = random_divisor(rng, g, low=-1, high_offset=1)
    assert recurrent_permutation(g, f) == is_recurrent(g, f)[0]


@given(st.integers(min_value=0, max_value=5000))
def test_ts_oracle_matches_solver(seed):
    rng = Random(seed)
    from chipfiring.families import connected_simple_graphs

    g = rng.choice(connected_simple_graphs([2, 3, 4]))
    tau = tuple(rng.randint(0, d + 1) for d in g.degrees)
    assert ts_subset_enumeration(g, tau) == min_target_set(g, tau).size


@given(st.integers(min_value=0, max_value=3000))
def test_rank_definitional_matches_pipeline(seed):
    rng = Random(seed)
    g = random_connected_multigraph(rng, max_n=4, max_extra_edges=2)
    f = random_divisor(rng, g, low=-2, high_offset=1)
    assert rank_definitional(g, f) == rank(g, f)


def test_verify_chain_triangle_all_agree():
    reports = verify_reduction_chain(C3, (2, 2, 2))
    assert len(reports) == 6
    assert all(r.agree for r in reports)
    by_name = {r.quantity: r for r in reports}
    assert by_name["target-set-size/dist-rec"].pipeline == 2
    assert by_name["target-set-size/dist-nonhalt"].oracle == 2


def test_verify_chain_two_vertices_all_agree():
    reports = verify_reduction_chain(K2, (1, 1))
    assert all(r.agree for r in reports)
    assert all(r.pipeline == 1 for r in reports if "target-set" in r.quantity and "margin" not in r.quantity)


def test_verify_chain_surfaces_threshold_boundary():
    # a threshold above the source degree breaks the gadget equality; the
    # verifier reports the disagreement instead of swallowing it
    reports = verify_reduction_chain(K2, (2, 1))
    by_name = {r.quantity: r for r in reports}
    agree_names = [r.quantity for r in reports if r.agree]
    assert by_name["target-set-size/subset-oracle"].agree  # ts itself is fine, = 1
    assert not by_name["target-set-size/dist-rec"].agree
    assert by_name["target-set-size/dist-rec"].pipeline == 1
    assert by_name["target-set-size/dist-rec"].oracle == 2
    assert by_name["dist-rec/dist-nonhalt"].agree  # the apex leg still holds
    assert "target-set-size/dist-nonhalt" not in agree_names


def test_report_json_lines():
    reports = verify_reduction_chain(K2, (1, 1))
    for r in reports:
        obj = json.loads(r.json_line())
        assert set(obj) == {"quantity", "pipeline", "oracle", "agree", "instance"}
        assert obj["agree"] is True


def test_fingerprint_stable_and_distinct():
    a = instance_fingerprint(K2, (1, 1))
    assert a == instance_fingerprint(K2, (1, 1))
    assert a != instance_fingerprint(K2, (2, 1))
    assert len(a) == 12


def test_report_dataclass():
    r = OracleReport("q", 1, 2, False, "abc")
    assert not r.agree
