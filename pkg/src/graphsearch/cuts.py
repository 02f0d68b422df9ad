"""Min-ratio vertex cuts (A, S, B) and the balanced partition used by the
general-graph analysis.

The ratio of a cut is ``c(S) / (w(A | S) * w(B | S))``.  Feasible cuts
have a nonempty S, no edge between A and B, and a positive denominator;
one of A and B may be empty.  Every comparison between ratios is an exact
cross-multiplication of integers.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import GuaranteeViolation, NoCut, PreconditionViolated, TooLarge
from .instance import SearchInstance, bits, components, lowest, size

EXACT_LIMIT = 18


@dataclass(frozen=True)
class VertexCut:
    a: int
    s: int
    b: int
    cost: int
    left: int
    right: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.cost, self.left * self.right)

    def as_dict(self) -> dict:
        return {
            "A": list(bits(self.a)),
            "S": list(bits(self.s)),
            "B": list(bits(self.b)),
            "ratio": str(self.ratio),
        }


def check_cut(g: SearchInstance, cut: VertexCut, within: int | None = None) -> None:
    """Raise ``GuaranteeViolation`` unless ``cut`` is a feasible cut of g[within]."""
    within = g.all if within is None else within
    if cut.a & cut.s or cut.a & cut.b or cut.s & cut.b or (cut.a | cut.s | cut.b) != within:
        raise GuaranteeViolation("A, S, B do not partition the vertex set")
    if not cut.s:
        raise GuaranteeViolation("empty S")
    if any(g.adj_mask[v] & cut.b for v in bits(cut.a)):
        raise GuaranteeViolation("edge between A and B")
    left, right = g.w(cut.a | cut.s), g.w(cut.b | cut.s)
    if (cut.cost, cut.left, cut.right) != (g.c(cut.s), left, right) or left * right == 0:
        raise GuaranteeViolation("stored cost or weights are wrong")


def _split(comp_weights: list[int], s_weight: int):
    """Best (A-weight, chosen-component bitmask) over all ways of sending the
    components to the two sides; maximizes w(A|S) * w(B|S) with w(A) >= w(B).
    """
    rest = sum(comp_weights)
    reach = {0: 0}
    for i, cw in enumerate(comp_weights):
        for total, chosen in list(reach.items()):
            if total + cw not in reach:
                reach[total + cw] = chosen | 1 << i
    # aim for w(A) as close to rest/2 as possible from above
    a_weight = min((x for x in reach if 2 * x >= rest), key=lambda x: (2 * x - rest, x))
    return a_weight, reach[a_weight], (s_weight + a_weight) * (s_weight + rest - a_weight)


def _best_cut_for(g: SearchInstance, sep: int, within: int, proper: bool):
    comps = components(g, sep, within)
    if proper and len(comps) < 2:
        return None
    weights = [g.w(h) for h in comps]
    s_weight = g.w(sep)
    if proper:
        a_weight, chosen, prod = _proper_split(weights, s_weight)
    else:
        a_weight, chosen, prod = _split(weights, s_weight)
    if prod == 0:
        return None
    a = 0
    for i in bits(chosen):
        a |= comps[i]
    b = within & ~sep & ~a
    return VertexCut(a, sep, b, g.c(sep), s_weight + a_weight, s_weight + sum(weights) - a_weight)


def _proper_split(weights: list[int], s_weight: int):
    """Like ``_split`` but both sides receive at least one component."""
    rest = sum(weights)
    # component 0 sits on side X; the other side gets a nonempty subset of the rest
    partial: dict[int, int] = {}
    full_sum, full_mask = weights[0], 1
    for i in range(1, len(weights)):
        cw = weights[i]
        for total, chosen in list(partial.items()):
            if total + cw not in partial:
                partial[total + cw] = chosen | 1 << i
        if full_sum not in partial:
            partial[full_sum] = full_mask
        full_sum, full_mask = full_sum + cw, full_mask | 1 << i
    x_weight = min(partial, key=lambda x: (abs(2 * x - rest), -x))
    chosen = partial[x_weight]
    if 2 * x_weight < rest:
        x_weight = rest - x_weight
        chosen = ((1 << len(weights)) - 1) ^ chosen
    return x_weight, chosen, (s_weight + x_weight) * (s_weight + rest - x_weight)


def _better(x: VertexCut, y: VertexCut | None) -> bool:
    """Order: smaller ratio, then smaller c(S), then lexicographically smaller S."""
    if y is None:
        return True
    lhs, rhs = x.cost * y.left * y.right, y.cost * x.left * x.right
    if lhs != rhs:
        return lhs < rhs
    if x.cost != y.cost:
        return x.cost < y.cost
    return list(bits(x.s)) < list(bits(y.s))


def cut_exact(g: SearchInstance, within: int | None = None, *, proper: bool = False) -> VertexCut:
    """Minimum-ratio cut by enumerating every nonempty S.

    With ``proper=True`` both A and B must be nonempty, which leaves cliques
    (including single edges) without any cut.
    """
    within = g.all if within is None else within
    n = size(within)
    if n < 2:
        raise NoCut("a cut needs at least two vertices")
    if n > EXACT_LIMIT:
        raise TooLarge(f"exact cut enumeration limited to {EXACT_LIMIT} vertices")
    best = None
    sep = within
    while sep:
        cut = _best_cut_for(g, sep, within, proper)
        if cut is not None and _better(cut, best):
            best = cut
        sep = (sep - 1) & within
    if best is None:
        raise NoCut("no feasible vertex cut")
    return best


def bfs_layers(g: SearchInstance, source: int, within: int) -> list[int]:
    layers = [1 << source]
    seen = 1 << source
    while True:
        nb = 0
        for u in bits(layers[-1]):
            nb |= g.adj_mask[u]
        nb &= within & ~seen
        if not nb:
            return layers
        layers.append(nb)
        seen |= nb


def cut_heuristic(g: SearchInstance, within: int | None = None, seed: int = 0, sources: int = 4) -> VertexCut:
    """Best of all single-vertex separators and BFS-layer sweeps.

    No approximation guarantee; intended as a stand-in where exhaustive
    enumeration is too expensive.
    """
    within = g.all if within is None else within
    if size(within) < 2:
        raise NoCut("a cut needs at least two vertices")
    best = None
    verts = list(bits(within))
    for v in verts:
        cut = _best_cut_for(g, 1 << v, within, False)
        if cut is not None and _better(cut, best):
            best = cut
    rng = random.Random(seed)
    for src in rng.sample(verts, min(sources, len(verts))):
        for layer in bfs_layers(g, src, within):
            cut = _best_cut_for(g, layer, within, False)
            if cut is not None and _better(cut, best):
                best = cut
    if best is None:
        cut = _best_cut_for(g, within, within, False)
        if cut is None:
            raise NoCut("subgraph has zero weight")
        best = cut
    return best


@dataclass(frozen=True)
class CutSolver:
    """Pluggable cut routine for the general-graph search strategy."""

    strategy: str = "exact"
    exact_limit: int = EXACT_LIMIT
    seed: int = 0

    def __call__(self, g: SearchInstance, within: int) -> VertexCut:
        if self.strategy == "exact":
            if size(within) > self.exact_limit:
                raise TooLarge(f"exact cut enumeration limited to {self.exact_limit} vertices")
            return cut_exact(g, within)
        if self.strategy == "heuristic":
            return cut_heuristic(g, within, seed=self.seed)
        raise ValueError(f"unknown cut strategy {self.strategy!r}")


# --------------------------------------------------------- lambda partition

def lambda_product_ok(product: int, total: int) -> bool:
    """Exact test of ``(6 + 2*sqrt(5)) * product >= total**2``."""
    lhs = total * total - 6 * product
    if lhs <= 0:
        return True
    return 20 * product * product >= lhs * lhs


def lambda_partition(g: SearchInstance, sep: int, within: int | None = None) -> tuple[int, int]:
    """Split the components of ``G - sep`` into sides A, B with
    ``w(A | S) * w(B | S) >= w(G)**2 / (6 + 2*sqrt(5))``.

    Components are taken heaviest first and each goes to the currently
    lighter side, so ``w(A) >= w(B)`` at the end.
    """
    within = g.all if within is None else within
    total = g.w(within)
    comps = components(g, sep, within)
    weights = [g.w(h) for h in comps]
    for h, hw in zip(comps, weights):
        if 2 * hw > total:
            raise PreconditionViolated(f"component starting at {lowest(h)} weighs {hw} > w(G)/2")
    a = b = 0
    wa = wb = 0
    for i in sorted(range(len(comps)), key=lambda i: (-weights[i], i)):
        if wa <= wb:
            a, wa = a | comps[i], wa + weights[i]
        else:
            b, wb = b | comps[i], wb + weights[i]
    if wa < wb:
        a, b, wa, wb = b, a, wb, wa
    sw = g.w(sep & within)
    if not lambda_product_ok((wa + sw) * (wb + sw), total):
        raise GuaranteeViolation("balanced partition misses the w(G)^2 / lambda bound")
    return a, b
