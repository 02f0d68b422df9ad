import random

import pytest

from graphsearch.decision_tree import DecisionTree
from graphsearch.instance import SearchInstance, gen_random_graph, gen_random_tree, path_instance, star_instance

# 12-vertex sample graph on letters a..l (vertices 0..11) with a hand-built decision tree
LETTERS = "abcdefghijkl"
LETTERS12_EDGES = [
    "ab", "ac", "ad", "ae", "bc", "ej", "eh", "di",
    "df", "jg", "ij", "ie", "ik", "gl", "ha", "lk",
]
LETTERS12_PARENT = {
    "e": None, "i": "e", "a": "i", "g": "i", "c": "a", "h": "a",
    "f": "a", "b": "c", "d": "f", "j": "g", "k": "g", "l": "k",
}


def ix(letter):
    return LETTERS.index(letter)


@pytest.fixture
def letters12():
    g = SearchInstance.from_edges(12, [(ix(u), ix(v)) for u, v in LETTERS12_EDGES])
    parent = [None if LETTERS12_PARENT[x] is None else ix(LETTERS12_PARENT[x]) for x in LETTERS]
    return g, DecisionTree.from_parent(parent)


@pytest.fixture
def p3():
    return path_instance(3)


@pytest.fixture
def star3():
    return star_instance(3)


def random_weighted_tree(seed, n_max=10, max_cost=20, max_weight=20, zero_weights=False):
    rng = random.Random(seed)
    n = rng.randint(1, n_max)
    t = gen_random_tree(n, max_cost, max_weight, seed)
    if zero_weights:
        weight = [rng.choice([0, 0, 1, 2, 3, 4]) for _ in range(n)]
        if sum(weight) == 0:
            weight[0] = 1
        t = SearchInstance.from_edges(n, t.edges, t.cost, weight)
    return t


def random_instance(seed, n_max=12):
    rng = random.Random(seed)
    n = rng.randint(1, n_max)
    if rng.random() < 0.5:
        return gen_random_tree(n, 9, 9, seed)
    return gen_random_graph(n, rng.uniform(0.1, 0.7), 9, 9, seed)
