"""Recursive separator-based search strategies for trees and general graphs.

Both solvers share one skeleton: pick a separator S of the current
candidate subgraph, query the vertices of S in a fixed order, then recurse
into each component of the subgraph minus S and hang the resulting subtree
under the query whose response produced that component.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .cuts import CutSolver
from .decision_tree import DecisionTree
from .errors import Disconnected, EmptySeparator, InvalidParams, NotATree
from .instance import SearchInstance, bits, components, is_connected, lowest, size
from .separator import as_fraction, separator_fptas

log = logging.getLogger(__name__)


@dataclass
class PartialDecisionTree:
    root: int
    parent: dict[int, Optional[int]]
    # (component, node whose query returns that component as the response)
    attach: list[tuple[int, int]]

    @property
    def covered(self) -> int:
        m = 0
        for v in self.parent:
            m |= 1 << v
        return m


def partial_tree_from_separator(g: SearchInstance, sep: int, within: int | None = None) -> PartialDecisionTree:
    """Query the lowest-indexed separator vertex of each candidate set until
    every remaining candidate set avoids ``sep``."""
    within = g.all if within is None else within
    sep &= within
    if not sep:
        raise EmptySeparator("separator has no vertex inside the subgraph")
    parent: dict[int, Optional[int]] = {}
    attach: list[tuple[int, int]] = []
    stack: list[tuple[int, Optional[int]]] = [(within, None)]
    root = lowest(sep)
    while stack:
        cand, above = stack.pop()
        v = lowest(cand & sep)
        parent[v] = above
        for h in components(g, 1 << v, cand):
            if h & sep:
                stack.append((h, v))
            else:
                attach.append((h, v))
    attach.sort(key=lambda item: lowest(item[0]))
    return PartialDecisionTree(root, parent, attach)


@dataclass
class SolveStats:
    # one record per recursive call that computed a separator
    levels: list[dict] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return max((r["depth"] for r in self.levels), default=0)

    def as_dict(self) -> dict:
        return {"recursion_depth": self.depth, "separators": self.levels}


def _assemble(g: SearchInstance, choose: Callable[[int], int], stats: SolveStats | None) -> DecisionTree:
    parent: list[Optional[int]] = [None] * g.n
    root = None
    stack: list[tuple[int, Optional[int], int]] = [(g.all, None, 0)]
    while stack:
        within, above, depth = stack.pop()
        if size(within) == 1:
            top = lowest(within)
            parent[top] = above
        else:
            if g.w(within) == 0:
                # every order costs nothing here; querying all vertices keeps the tree valid
                sep = within
            else:
                sep = choose(within)
                if stats is not None:
                    stats.levels.append(
                        {
                            "depth": depth,
                            "size": size(within),
                            "weight": g.w(within),
                            "separator": list(bits(sep)),
                            "separator_cost": g.c(sep),
                        }
                    )
            part = partial_tree_from_separator(g, sep, within)
            top = part.root
            for v, p in part.parent.items():
                parent[v] = above if p is None else p
            for h, node in reversed(part.attach):
                stack.append((h, node, depth + 1))
        if above is None:
            root = top
    assert root is not None
    return DecisionTree(root, tuple(parent))


def solve_tree(t: SearchInstance, epsilon, stats: SolveStats | None = None) -> DecisionTree:
    """(4 + epsilon)-approximate search tree for a tree instance."""
    epsilon = as_fraction(epsilon)
    if epsilon <= 0:
        raise InvalidParams("epsilon must be positive")
    if not t.is_tree():
        raise NotATree("solve_tree needs a tree")
    delta = epsilon / (4 + epsilon)

    def choose(within: int) -> int:
        return separator_fptas(t, 2, delta, within).separator

    return _assemble(t, choose, stats)


def solve_graph(g: SearchInstance, solver: CutSolver | Callable | None = None, stats: SolveStats | None = None) -> DecisionTree:
    """Search tree driven by (approximately) min-ratio vertex cuts."""
    solver = solver or CutSolver("exact")
    if not is_connected(g, g.all):
        raise Disconnected("solve_graph needs a connected graph")

    def choose(within: int) -> int:
        cut = solver(g, within)
        a, b = cut.a, cut.b
        if g.w(a) < g.w(b):
            a, b = b, a
        log.debug("cut of %d vertices: |A|=%d |S|=%d |B|=%d ratio=%s", size(within), size(a), size(cut.s), size(b), cut.ratio)
        return cut.s

    return _assemble(g, choose, stats)


def tree_bound_ok(cost: int, opt: int, epsilon) -> bool:
    """``cost <= (4 + epsilon) * opt`` with exact arithmetic."""
    return cost <= (4 + as_fraction(epsilon)) * opt


def graph_bound_ok(cost: int, opt: int, f: Fraction | int = 1) -> bool:
    """``cost <= (12 + 4*sqrt(5)) * f * opt`` with exact arithmetic."""
    f = Fraction(f)
    scaled = Fraction(cost) / f
    rest = scaled - 12 * opt
    if rest <= 0:
        return True
    return rest * rest <= 80 * opt * opt
