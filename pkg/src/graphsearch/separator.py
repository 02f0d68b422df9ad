"""Weighted alpha-separators on trees.

``separator_exact`` is the pseudo-polynomial tree DP: for a weight bound k
it finds a cheapest vertex set S such that every component of T - S weighs
at most k.  ``separator_fptas`` rounds weights first so that the bound the
DP works with is O(n / delta), at the price of a (1 + delta) slack on the
component weights.  ``separator_bruteforce`` enumerates subsets and is the
independent check for both.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GuaranteeViolation, InvalidParams, NotATree, TooLarge
from .instance import SearchInstance, bits, components, induced, lowest, size

BRUTEFORCE_LIMIT = 20

_IN = -1


@dataclass(frozen=True)
class SeparatorResult:
    separator: int
    components: list[int]
    separator_cost: int
    component_weights: list[int] = field(default_factory=list)
    zero_merge_hits: int = 0

    @property
    def max_component_weight(self) -> int:
        return max(self.component_weights, default=0)

    @property
    def vertices(self) -> list[int]:
        return list(bits(self.separator))


def _result(g: SearchInstance, sep: int, within: int, zero_merge_hits=0) -> SeparatorResult:
    comps = components(g, sep, within)
    return SeparatorResult(sep, comps, g.c(sep), [g.w(h) for h in comps], zero_merge_hits)


def _rooted(g: SearchInstance, within: int):
    """BFS order and ascending child lists of the tree on ``within``."""
    root = lowest(within)
    parent = {root: None}
    order = [root]
    children = {}
    for v in order:
        ch = [u for u in g.adjacency[v] if within >> u & 1 and u != parent[v]]
        for u in ch:
            parent[u] = v
        children[v] = ch
        order.extend(ch)
    return order, children


def separator_exact(t: SearchInstance, k: int, within: int | None = None) -> SeparatorResult:
    """Minimum-cost S with every component of ``T[within] - S`` of weight <= k."""
    within = t.all if within is None else within
    if not t.is_tree(within):
        raise NotATree("separator DP needs a tree")
    if k < 0:
        raise InvalidParams("weight bound must be non-negative")
    cost, weight = t.cost, t.weight
    inf = t.c(within) * (t.w(within) + 1) + 1

    order, children = _rooted(t, within)
    c_in: dict[int, int] = {}
    c_out: dict[int, list[int]] = {}
    best: dict[int, int] = {}
    # first_choice[v][w]: True when child 1 joins S at w == w(v)
    first_choice: dict[int, list[bool]] = {}
    # merge_choice[v][i][w]: _IN if child i joins S, else weight taken from child i
    merge_choice: dict[int, list[list[int]]] = {}

    for v in reversed(order):
        ch = children[v]
        wv = weight[v]
        c_in[v] = cost[v] + sum(best[c] for c in ch)
        if not ch:
            cur = [inf] * (min(k, wv) + 1)
            if wv <= k:
                cur[wv] = 0
        else:
            c1 = ch[0]
            child = c_out[c1]
            cur = [inf] * min(k + 1, wv + len(child))
            picks = [False] * len(cur)
            if wv < len(cur):
                zero = child[0] if child else inf
                if c_in[c1] <= zero:
                    cur[wv], picks[wv] = c_in[c1], True
                else:
                    cur[wv] = zero
                for x in range(wv + 1, len(cur)):
                    cur[x] = child[x - wv]
            first_choice[v] = picks
            steps = []
            for ci in ch[1:]:
                child = c_out[ci]
                nxt = [inf] * min(k + 1, len(cur) + len(child) - 1)
                pick = [_IN] * len(nxt)
                add_in = c_in[ci]
                for x, base in enumerate(cur):
                    if base < inf:
                        nxt[x] = base + add_in
                finite = [(j, cj) for j, cj in enumerate(child) if cj < inf]
                for x, base in enumerate(cur):
                    if base >= inf:
                        continue
                    for j, cj in finite:
                        y = x + j
                        if y >= len(nxt):
                            break
                        val = base + cj
                        if val < nxt[y] or (val == nxt[y] and pick[y] != _IN and j < pick[y]):
                            nxt[y] = val
                            pick[y] = j
                steps.append(pick)
                cur = nxt
            merge_choice[v] = steps
        c_out[v] = [min(x, inf) for x in cur]
        best[v] = min([c_in[v], *c_out[v]])

    sep = 0
    hits = 0
    stack: list[tuple[int, int | None]] = [(order[0], None)]
    while stack:
        v, mode = stack.pop()
        if mode is None:
            out = c_out[v]
            m = min(out, default=inf)
            mode = _IN if c_in[v] <= m else out.index(m)
        ch = children[v]
        if mode == _IN:
            sep |= 1 << v
            stack.extend((c, None) for c in ch)
            continue
        if not ch:
            continue
        x = mode
        for i in range(len(ch) - 1, 0, -1):
            j = merge_choice[v][i - 1][x]
            if j == _IN:
                stack.append((ch[i], _IN))
            else:
                stack.append((ch[i], j))
                x -= j
        if x == weight[v]:
            if first_choice[v][x]:
                stack.append((ch[0], _IN))
            else:
                hits += 1
                stack.append((ch[0], 0))
        else:
            stack.append((ch[0], x - weight[v]))

    res = _result(t, sep, within, hits)
    if res.separator_cost != best[order[0]]:
        raise GuaranteeViolation("separator reconstruction disagrees with the DP value")
    if res.max_component_weight > k:
        raise GuaranteeViolation(f"component of weight {res.max_component_weight} exceeds bound {k}")
    return res


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x)) if isinstance(x, float) else Fraction(x)


def separator_fptas(t: SearchInstance, alpha, delta, within: int | None = None) -> SeparatorResult:
    """Bicriteria separator: cost at most the optimal alpha-separator,
    components of weight at most ``(1 + delta) * w(T) / alpha``."""
    within = t.all if within is None else within
    alpha, delta = as_fraction(alpha), as_fraction(delta)
    if alpha <= 1:
        raise InvalidParams("alpha must exceed 1")
    if delta <= 0:
        raise InvalidParams("delta must be positive")
    if not t.is_tree(within):
        raise NotATree("separator FPTAS needs a tree")
    total = t.w(within)
    if total < 1:
        raise InvalidParams("tree must have positive total weight")
    n = size(within)
    scale = delta * total / (n * alpha)
    if scale <= 1:
        res = separator_exact(t, math.floor(total / alpha), within)
    else:
        rounded = list(t.weight)
        for v in bits(within):
            rounded[v] = math.floor(t.weight[v] / scale)
        coarse = SearchInstance(t.n, t.adjacency, t.cost, tuple(rounded))
        found = separator_exact(coarse, math.floor(n / delta), within)
        res = _result(t, found.separator, within, found.zero_merge_hits)
    if res.max_component_weight * alpha > (1 + delta) * total:
        raise GuaranteeViolation("FPTAS component exceeds (1 + delta) * w(T) / alpha")
    return res


# ------------------------------------------------------------- brute force

def _subset_tables(g: SearchInstance):
    """For every kept set R (bitmask over a compact instance): the heaviest
    component weight of g[R] and the cost of the removed set."""
    n = g.n
    full = (1 << n) - 1
    wsum = [0] * (1 << n)
    csum = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = lowest(m)
        wsum[m] = wsum[m & (m - 1)] + g.weight[low]
        csum[m] = csum[m & (m - 1)] + g.cost[low]
    heaviest = [0] * (1 << n)
    adj = g.adj_mask
    for r in range(1, 1 << n):
        comp = frontier = r & -r
        while frontier:
            nb = 0
            for u in bits(frontier):
                nb |= adj[u]
            frontier = nb & r & ~comp
            comp |= frontier
        rest = r & ~comp
        heaviest[r] = max(wsum[comp], heaviest[rest])
    removed_cost = [csum[full ^ r] for r in range(1 << n)]
    return heaviest, removed_cost


def _compact(g: SearchInstance, within: int | None):
    within = g.all if within is None else within
    if size(within) > BRUTEFORCE_LIMIT:
        raise TooLarge(f"brute force limited to {BRUTEFORCE_LIMIT} vertices")
    return induced(g, within), list(bits(within)), within


def separator_bruteforce(g: SearchInstance, k: int, within: int | None = None) -> SeparatorResult:
    """Cheapest S (ties: lexicographically smallest vertex list) by enumeration."""
    sub, verts, within = _compact(g, within)
    heaviest, removed_cost = _subset_tables(sub)
    full = (1 << sub.n) - 1
    best = None
    for r in range(1 << sub.n):
        if heaviest[r] <= k:
            key = (removed_cost[r], list(bits(full ^ r)))
            if best is None or key < best:
                best = key
    sep = 0
    for i in best[1]:
        sep |= 1 << verts[i]
    return _result(g, sep, within)


def separator_costs_by_threshold(g: SearchInstance, within: int | None = None) -> list[int]:
    """Optimal separator cost for every bound k = 0 .. w(G), by enumeration."""
    sub, _, _ = _compact(g, within)
    heaviest, removed_cost = _subset_tables(sub)
    total = sub.total_weight
    at = [None] * (total + 1)
    for r in range(1 << sub.n):
        h = heaviest[r]
        if at[h] is None or removed_cost[r] < at[h]:
            at[h] = removed_cost[r]
    out = []
    run = None
    for h in range(total + 1):
        if at[h] is not None and (run is None or at[h] < run):
            run = at[h]
        out.append(run)
    return out
