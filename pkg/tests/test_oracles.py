import pytest
from hypothesis import given, settings, strategies as st

from graphsearch.decision_tree import DecisionTree, cost_contribution, cost_pathsum, validate
from graphsearch.errors import NotATree, TooLarge
from graphsearch.instance import SearchInstance, path_instance, star_instance
from graphsearch.oracles import (
    all_decision_trees,
    opt_cost,
    opt_decision_tree,
    opt_edge_search_cost,
    opt_levels,
)

from conftest import random_instance


def test_single_vertex():
    g = SearchInstance.from_edges(1, [], [6], [2])
    d, cost = opt_decision_tree(g)
    assert d.root == 0 and cost == 12
    fam = opt_levels(g)
    assert fam[0] == 1 and fam.cost_sum() == 12


def test_p3(p3):
    d, cost = opt_decision_tree(p3)
    assert cost == 5 and d.root == 1
    assert opt_levels(p3).cost_sum() == 5


def test_star(star3):
    d, cost = opt_decision_tree(star3)
    assert cost == 7 and d.root == 0


def test_p4_tie_goes_to_lowest_root():
    # roots 1 and 2 both give 4 + 1 + 3 = 8
    d, cost = opt_decision_tree(path_instance(4))
    assert cost == 8 and d.root == 1


def test_size_limit():
    with pytest.raises(TooLarge):
        opt_cost(path_instance(16))
    with pytest.raises(TooLarge):
        opt_decision_tree(star_instance(15))


def test_all_decision_trees_counts():
    assert len(list(all_decision_trees(path_instance(3)))) == 5
    # center first, or a leaf first followed by any of the 5 trees of the remaining P3
    assert len(list(all_decision_trees(star_instance(3)))) == 1 + 3 * 5


def test_edge_oracle():
    # path of 3 vertices: the first edge query costs 3, the second 2 on one side
    assert opt_edge_search_cost(path_instance(3)) == 5
    assert opt_edge_search_cost(SearchInstance.from_edges(1, [])) == 0
    with pytest.raises(NotATree):
        opt_edge_search_cost(SearchInstance.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_oracle_tree_is_valid_and_consistent(seed):
    g = random_instance(seed)
    d, cost = opt_decision_tree(g)
    validate(g, d)
    assert cost_pathsum(g, d) == cost == cost_contribution(g, d)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6))
def test_oracle_matches_exhaustive_enumeration(seed):
    g = random_instance(seed, n_max=6)
    best = None
    for parent in all_decision_trees(g):
        root = next(v for v, p in parent.items() if p is None)
        d = DecisionTree(root, tuple(parent[v] for v in range(g.n)))
        validate(g, d)
        c = cost_contribution(g, d)
        best = c if best is None else min(best, c)
    assert best == opt_cost(g)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 100), st.integers(1, 5))
def test_opt_monotone_in_weights(seed, pick, extra):
    g = random_instance(seed, n_max=9)
    v = pick % g.n
    weight = list(g.weight)
    weight[v] += extra
    heavier = SearchInstance(g.n, g.adjacency, g.cost, tuple(weight))
    assert opt_cost(heavier) >= opt_cost(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_opt_levels_identities(seed):
    g = random_instance(seed, n_max=10)
    fam = opt_levels(g)
    opt = opt_cost(g)
    assert fam.cost_sum() == opt
    assert fam.halved_sum() <= 2 * opt
