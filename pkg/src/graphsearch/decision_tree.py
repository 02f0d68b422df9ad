"""Decision trees over a search instance and their cost."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidTree, ParseError, UnknownVertex
from .instance import SearchInstance, bits, components, neighbors_of_subgraph


@dataclass(frozen=True)
class DecisionTree:
    """Rooted query tree stored as a parent array (``None`` at the root)."""

    root: int
    parent: tuple[Optional[int], ...]

    @classmethod
    def from_parent(cls, parent: Sequence[Optional[int]]) -> "DecisionTree":
        roots = [v for v, p in enumerate(parent) if p is None]
        if len(roots) != 1:
            raise InvalidTree(f"expected exactly one root, found {len(roots)}")
        return cls(roots[0], tuple(parent))

    @property
    def n(self) -> int:
        return len(self.parent)

    def children(self) -> list[list[int]]:
        ch: list[list[int]] = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if p is not None and 0 <= p < len(ch):
                ch[p].append(v)
        return ch

    def depth_order(self) -> list[int]:
        """Vertices in BFS order from the root."""
        ch = self.children()
        order = [self.root]
        for v in order:
            order.extend(ch[v])
        return order


def tree_to_dict(d: DecisionTree) -> dict:
    return {"root": d.root, "parent": list(d.parent)}


def save_tree(d: DecisionTree) -> bytes:
    return (json.dumps(tree_to_dict(d)) + "\n").encode()


def load_tree(text) -> DecisionTree:
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(data, dict) or "root" not in data or "parent" not in data:
        raise ParseError("decision tree needs 'root' and 'parent'")
    root, parent = data["root"], data["parent"]
    if not isinstance(root, int) or not isinstance(parent, list):
        raise ParseError("'root' must be an integer and 'parent' a list")
    if not all(p is None or (isinstance(p, int) and not isinstance(p, bool)) for p in parent):
        raise ParseError("'parent' entries must be integers or null")
    if not (0 <= root < len(parent)) or parent[root] is not None:
        raise InvalidTree("'parent' must be null exactly at the root")
    return DecisionTree.from_parent(parent)


def validate(g: SearchInstance, d: DecisionTree) -> tuple[int, ...]:
    """Check ``d`` against the response semantics of ``g``.

    Returns the candidate map: entry ``v`` is the vertex set in which ``v``
    is queried.  Raises :class:`InvalidTree` on the first violation.
    """
    n = g.n
    if d.n != n:
        raise InvalidTree(f"tree has {d.n} nodes, instance has {n} vertices")
    if not (0 <= d.root < n) or d.parent[d.root] is not None:
        raise InvalidTree("root must be a vertex with no parent")
    for v, p in enumerate(d.parent):
        if v != d.root and p is None:
            raise InvalidTree(f"vertex {v} has no parent but is not the root")
        if p is not None and not (0 <= p < n):
            raise InvalidTree(f"vertex {v} has out-of-range parent {p}")
    order = d.depth_order()
    if len(order) != n:
        raise InvalidTree("parent array contains a cycle or unreachable vertices")

    children = d.children()
    cand = [0] * n
    cand[d.root] = g.all
    for q in order:
        claimed = 0
        comps = components(g, 1 << q, cand[q])
        for u in children[q]:
            comp = next((h for h in comps if h >> u & 1), None)
            if comp is None:
                raise InvalidTree(f"child {u} of {q} is not in a component of the candidate set minus {q}")
            if comp & claimed:
                raise InvalidTree(f"two children of {q} share the component containing {u}")
            claimed |= comp
            cand[u] = comp
    return tuple(cand)


def cost_pathsum(g: SearchInstance, d: DecisionTree) -> int:
    validate(g, d)
    path_cost = [0] * g.n
    for v in d.depth_order():
        p = d.parent[v]
        path_cost[v] = g.cost[v] + (0 if p is None else path_cost[p])
    return sum(g.weight[x] * path_cost[x] for x in range(g.n))


def cost_contribution(g: SearchInstance, d: DecisionTree) -> int:
    cand = validate(g, d)
    return sum(g.w(cand[v]) * g.cost[v] for v in range(g.n))


cost = cost_contribution


def query_sequence(g: SearchInstance, d: DecisionTree, target: int) -> list[int]:
    validate(g, d)
    if not (0 <= target < g.n):
        raise UnknownVertex(f"vertex {target} is not in the instance")
    seq = [target]
    while d.parent[seq[-1]] is not None:
        seq.append(d.parent[seq[-1]])
    return seq[::-1]


class LevelFamily:
    """The sets ``S_k = {v : w(candidate(v)) > k}``, materialized on demand."""

    def __init__(self, g: SearchInstance, candidate_weight: Sequence[int]):
        self.cost = g.cost
        self.candidate_weight = tuple(candidate_weight)
        self.total_weight = g.total_weight

    def __getitem__(self, k: int) -> int:
        m = 0
        for v, cw in enumerate(self.candidate_weight):
            if cw > k:
                m |= 1 << v
        return m

    def level_cost(self, k: int) -> int:
        return sum(self.cost[v] for v in bits(self[k]))

    def cost_sum(self) -> int:
        """Sum of c(S_k) over k = 0 .. w(G)-1; equals the tree cost."""
        return sum(self.level_cost(k) for k in range(self.total_weight))

    def halved_sum(self) -> int:
        """Sum of c(S_{floor(k/2)}) over k = 0 .. w(G)."""
        return sum(self.level_cost(k // 2) for k in range(self.total_weight + 1))


def levels(g: SearchInstance, d: DecisionTree) -> LevelFamily:
    cand = validate(g, d)
    return LevelFamily(g, [g.w(m) for m in cand])


def ancestors(d: DecisionTree, v: int) -> list[int]:
    out = []
    p = d.parent[v]
    while p is not None:
        out.append(p)
        p = d.parent[p]
    return out


def neighbor_queries_form_path(g: SearchInstance, d: DecisionTree, sub: int) -> bool:
    """Neighbor-path property for a connected vertex set ``sub``.

    Looks at the queries to N(sub) made before any query inside ``sub`` and
    reports whether they all lie on one root-to-node path of ``d``.
    """
    nb = neighbors_of_subgraph(g, sub)
    early = []
    for v in bits(nb):
        anc = ancestors(d, v)
        if not any(sub >> a & 1 for a in anc):
            early.append((len(anc), v, set(anc)))
    early.sort()
    for (_, v1, _), (_, _, anc2) in zip(early, early[1:]):
        if v1 not in anc2:
            return False
    return True


def random_decision_tree(g: SearchInstance, rng: random.Random) -> DecisionTree:
    """A uniformly chosen root at every candidate set; always valid."""
    parent: list[Optional[int]] = [None] * g.n
    stack = [(g.all, None)]
    while stack:
        cand, above = stack.pop()
        v = rng.choice(list(bits(cand)))
        parent[v] = above
        for h in components(g, 1 << v, cand):
            stack.append((h, v))
    return DecisionTree.from_parent(parent)
