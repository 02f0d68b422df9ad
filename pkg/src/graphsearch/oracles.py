"""Exponential-time ground truth for small instances."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from .decision_tree import DecisionTree, LevelFamily, levels
from .errors import GuaranteeViolation, NotATree, TooLarge
from .instance import SearchInstance, bits, components, size

OPT_LIMIT = 15


def _opt_table(g: SearchInstance):
    @lru_cache(maxsize=None)
    def solve(cand: int) -> tuple[int, int]:
        weight = g.w(cand)
        best = None
        for v in bits(cand):
            total = weight * g.cost[v]
            if best is not None and total >= best[0]:
                continue
            for h in components(g, 1 << v, cand):
                total += solve(h)[0]
            if best is None or total < best[0]:
                best = (total, v)
        return best

    return solve


def opt_decision_tree(g: SearchInstance) -> tuple[DecisionTree, int]:
    """Optimal decision tree and its cost; ties go to the lowest root index."""
    if g.n > OPT_LIMIT:
        raise TooLarge(f"optimal decision tree oracle limited to {OPT_LIMIT} vertices")
    solve = _opt_table(g)
    parent: list[Optional[int]] = [None] * g.n
    stack: list[tuple[int, Optional[int]]] = [(g.all, None)]
    while stack:
        cand, above = stack.pop()
        _, v = solve(cand)
        parent[v] = above
        stack.extend((h, v) for h in components(g, 1 << v, cand))
    return DecisionTree.from_parent(parent), solve(g.all)[0]


def opt_cost(g: SearchInstance) -> int:
    if g.n > OPT_LIMIT:
        raise TooLarge(f"optimal decision tree oracle limited to {OPT_LIMIT} vertices")
    return _opt_table(g)(g.all)[0]


def opt_levels(g: SearchInstance) -> LevelFamily:
    """Levels of an optimal tree, with both level identities checked."""
    d, best = opt_decision_tree(g)
    fam = levels(g, d)
    if fam.cost_sum() != best:
        raise GuaranteeViolation("level costs do not add up to OPT")
    if fam.halved_sum() > 2 * best:
        raise GuaranteeViolation("halved level sum exceeds 2 * OPT")
    return fam


def all_decision_trees(g: SearchInstance, cand: int | None = None) -> Iterator[dict[int, Optional[int]]]:
    """Every valid decision tree of g[cand], as {vertex: parent} maps."""
    cand = g.all if cand is None else cand
    for v in bits(cand):
        yield from _below(g, v, components(g, 1 << v, cand))


def _below(g, v, comps):
    if not comps:
        yield {v: None}
        return
    first, rest = comps[0], comps[1:]
    for sub in all_decision_trees(g, first):
        for tail in _below(g, v, rest):
            merged = dict(tail)
            for u, p in sub.items():
                merged[u] = v if p is None else p
            yield merged


def opt_edge_search_cost(t: SearchInstance) -> int:
    """Optimal average cost when queries are edges of a tree, each of unit cost.

    Querying edge uv tells which side of the edge holds the target; the
    search ends once the candidate set is a single vertex.
    """
    if not t.is_tree():
        raise NotATree("edge-query oracle needs a tree")
    if t.n > 2 * OPT_LIMIT:
        raise TooLarge("edge-query oracle instance too large")

    @lru_cache(maxsize=None)
    def solve(cand: int) -> int:
        if size(cand) == 1:
            return 0
        weight = t.w(cand)
        best = None
        for u in bits(cand):
            for v in t.adjacency[u]:
                if u < v and cand >> v & 1:
                    side = _side(t, u, 1 << v, cand)
                    total = weight + solve(side) + solve(cand & ~side)
                    if best is None or total < best:
                        best = total
        return best

    return solve(t.all)


def _side(t: SearchInstance, start: int, blocked: int, cand: int) -> int:
    return next(h for h in components(t, blocked, cand) if h >> start & 1)
