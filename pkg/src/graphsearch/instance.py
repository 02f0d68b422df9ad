"""Search instances (G, c, w), vertex-set bitmasks and graph primitives.

Vertex sets are plain Python ints used as bitmasks: bit ``v`` is set iff
vertex ``v`` is a member.  Python ints are unbounded, so the same
representation covers word-sized and larger graphs.  Iteration over a set
is always in ascending vertex order.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import NotATree, ParseError, ValidationError, Disconnected


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def size(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class SearchInstance:
    """An immutable graph with per-vertex query cost and target weight.

    Build instances with :meth:`from_edges`, which normalizes and validates.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    cost: tuple[int, ...]
    weight: tuple[int, ...]
    adj_mask: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "adj_mask", tuple(mask_of(a) for a in self.adjacency))

    @classmethod
    def from_edges(cls, n, edges, cost=None, weight=None, *, validate=True):
        if n < 1:
            raise ValidationError("instance needs at least one vertex")
        cost = tuple(int(x) for x in (cost if cost is not None else [1] * n))
        weight = tuple(int(x) for x in (weight if weight is not None else [1] * n))
        if len(cost) != n or len(weight) != n:
            raise ValidationError("cost and weight arrays must have length n")
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge {u}-{v} references a vertex outside [0, {n})")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValidationError(f"duplicate edge {min(u, v)}-{max(u, v)}")
            adj[u].add(v)
            adj[v].add(u)
        g = cls(n, tuple(tuple(sorted(a)) for a in adj), cost, weight)
        if validate:
            g.check()
        return g

    def check(self):
        if any(c < 0 for c in self.cost):
            raise ValidationError("negative query cost")
        if any(w < 0 for w in self.weight):
            raise ValidationError("negative weight")
        if self.total_weight < 1:
            raise ValidationError("total weight must be at least 1")
        if not is_connected(self, self.all):
            raise Disconnected("graph is not connected")

    @property
    def all(self) -> int:
        return (1 << self.n) - 1

    @property
    def total_weight(self) -> int:
        return sum(self.weight)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def w(self, mask: int) -> int:
        return sum(self.weight[v] for v in bits(mask))

    def c(self, mask: int) -> int:
        return sum(self.cost[v] for v in bits(mask))

    def edge_count(self, within: int) -> int:
        return sum((self.adj_mask[v] & within).bit_count() for v in bits(within)) // 2

    def is_tree(self, within: int | None = None) -> bool:
        within = self.all if within is None else within
        return is_connected(self, within) and self.edge_count(within) == size(within) - 1


def is_connected(g: SearchInstance, within: int) -> bool:
    if not within:
        return False
    return _flood(g, lowest(within), within) == within


def _flood(g: SearchInstance, start: int, allowed: int) -> int:
    comp = frontier = 1 << start
    adj = g.adj_mask
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & allowed & ~comp
        comp |= frontier
    return comp


def components(g: SearchInstance, removed: int, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced on ``within - removed``.

    Components come back ordered by their minimum vertex.
    """
    rest = (g.all if within is None else within) & ~removed
    out = []
    while rest:
        comp = _flood(g, lowest(rest), rest)
        out.append(comp)
        rest &= ~comp
    return out


def neighbors_of_subgraph(g: SearchInstance, sub: int) -> int:
    nb = 0
    for v in bits(sub):
        nb |= g.adj_mask[v]
    return nb & ~sub


def induced(g: SearchInstance, within: int) -> SearchInstance:
    """Relabel the subgraph on ``within`` as a standalone instance (no validation)."""
    verts = list(bits(within))
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return SearchInstance.from_edges(
        len(verts), edges, [g.cost[v] for v in verts], [g.weight[v] for v in verts], validate=False
    )


# ---------------------------------------------------------------- JSON I/O

def to_dict(g: SearchInstance) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges], "cost": list(g.cost), "weight": list(g.weight)}


def save_instance(g: SearchInstance) -> bytes:
    return (json.dumps(to_dict(g)) + "\n").encode()


def from_dict(data) -> SearchInstance:
    if not isinstance(data, dict):
        raise ParseError("instance must be a JSON object")
    try:
        n = data["n"]
        edges = data["edges"]
        cost = data["cost"]
        weight = data["weight"]
    except KeyError as e:
        raise ParseError(f"missing field {e.args[0]!r}") from None
    if not _is_int(n):
        raise ParseError("'n' must be an integer")
    for name, arr in (("cost", cost), ("weight", weight)):
        if not isinstance(arr, list) or not all(_is_int(x) for x in arr):
            raise ParseError(f"'{name}' must be a list of integers")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(_is_int(x) for x in e) for e in edges
    ):
        raise ParseError("'edges' must be a list of [u, v] integer pairs")
    return SearchInstance.from_edges(n, edges, cost, weight)


def load_instance(text) -> SearchInstance:
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return from_dict(data)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


# -------------------------------------------------------------- generators

def gen_random_tree(n, max_cost=1, max_weight=1, seed=0) -> SearchInstance:
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[i], perm[rng.randrange(i)]) for i in range(1, n)]
    return SearchInstance.from_edges(
        n,
        edges,
        [rng.randint(1, max_cost) for _ in range(n)],
        [rng.randint(1, max_weight) for _ in range(n)],
    )


def gen_random_graph(n, edge_prob, max_cost=1, max_weight=1, seed=0) -> SearchInstance:
    """G(n, p) sample; leftover components are bridged by random edges."""
    rng = random.Random(seed)
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob}
    cost = [rng.randint(1, max_cost) for _ in range(n)]
    weight = [rng.randint(1, max_weight) for _ in range(n)]
    g = SearchInstance.from_edges(n, sorted(edges), cost, weight, validate=False)
    comps = components(g, 0)
    for left, right in zip(comps, comps[1:]):
        u = rng.choice(list(bits(left)))
        v = rng.choice(list(bits(right)))
        edges.add((min(u, v), max(u, v)))
    return SearchInstance.from_edges(n, sorted(edges), cost, weight)


def hardness_reduction(t: SearchInstance, budget: int) -> tuple[SearchInstance, int]:
    """Turn an edge-query tree instance into a vertex-query one.

    Original vertices keep their ids and weights and get cost ``budget + 1``.
    The i-th edge (in sorted order) is subdivided by vertex ``n + i`` of
    weight 0 and cost 1.  Returns the new instance and its budget.
    """
    if not t.is_tree():
        raise NotATree("hardness reduction needs a tree")
    if budget < 0:
        raise ValidationError("budget must be non-negative")
    n = t.n
    edges = []
    for i, (u, v) in enumerate(t.edges):
        edges += [(u, n + i), (v, n + i)]
    m = n - 1
    cost = [budget + 1] * n + [1] * m
    weight = list(t.weight) + [0] * m
    new_budget = budget + t.total_weight * (budget + 1)
    return SearchInstance.from_edges(n + m, edges, cost, weight), new_budget


def path_instance(n, cost=None, weight=None) -> SearchInstance:
    return SearchInstance.from_edges(n, [(i, i + 1) for i in range(n - 1)], cost, weight)


def star_instance(leaves, cost=None, weight=None) -> SearchInstance:
    return SearchInstance.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], cost, weight)


def diameter(g: SearchInstance) -> int:
    best = 0
    for s in range(g.n):
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in g.adjacency[u]:
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        nxt.append(v)
            frontier = nxt
        best = max(best, max(dist.values()))
    return best
