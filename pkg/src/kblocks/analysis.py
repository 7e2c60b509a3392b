"""T-shaped separations and tangles defined by inseparable sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .blocks import find_blocks
from .connectivity import is_k_connected, kappa_bounded, split_network
from .graph import Graph, Separation, components_after_removal
from .oracle import DEFAULT_BUDGET, BudgetExceededError, SeparationCatalog, enumerate_separations


class PreconditionError(ValueError):
    """Raised when an analysis is requested outside its hypotheses."""


# -- T-shaped separations ----------------------------------------------------

@dataclass(frozen=True)
class TShapeWitness:
    target: Separation
    witness: Separation

    def check(self, k: int) -> bool:
        """Re-validate the four defining conditions from scratch."""
        t, w = self.target, self.witness
        return (t.is_proper and w.is_proper and t.order == k and w.order == k
                and t.a_only <= w.separator
                and len(t.a & w.a) <= k and len(t.a & w.b) <= k)


def is_t_shaped(g: Graph, s: Separation, k: int, catalog: SeparationCatalog) -> TShapeWitness | None:
    """First proper k-separation ``(C, D)`` in catalog order with
    ``A - B ⊆ C ∩ D``, ``|A ∩ C| <= k`` and ``|A ∩ D| <= k``."""
    if catalog.max_order < k:
        raise ValueError(f"catalog only covers order <= {catalog.max_order}, need {k}")
    if not s.is_proper or s.order != k:
        raise PreconditionError("T-shape is defined for proper separations of order exactly k")
    a, a_only = s.a, s.a_only
    for w in catalog:
        if w.order != k or w == s:
            continue
        if a_only <= w.separator and len(a & w.a) <= k and len(a & w.b) <= k:
            found = TShapeWitness(s, w)
            assert len(a) <= 1.5 * k, "T-shaped separation with a side larger than 3k/2"
            return found
    return None


@dataclass
class TShapeReport:
    k: int
    every_separation_separates_blocks: bool
    no_t_shaped: bool
    n_separations: int
    n_blocks: int
    lonely_side: Separation | None = None
    t_shaped: TShapeWitness | None = None

    @property
    def equivalent(self) -> bool:
        return self.every_separation_separates_blocks == self.no_t_shaped


def t_shaped_equivalence_report(g: Graph, k: int, budget: int = DEFAULT_BUDGET,
                                catalog: SeparationCatalog | None = None) -> TShapeReport:
    """Evaluate, by brute force, both "every proper k-separation separates two
    (k+1)-blocks" and "no k-separation is T-shaped" for a k-connected graph."""
    if not is_k_connected(g, k):
        raise PreconditionError(f"graph is not {k}-connected")
    if catalog is None:
        catalog = enumerate_separations(g, k, budget)
    blocks, _ = find_blocks(g, k + 1)
    seps = catalog.of_order(k)
    lonely = None
    for s in seps:
        # each (k+1)-block sits inside one side; it must fit in A
        if not any(b <= s.a for b in blocks):
            lonely = s
            break
    witness = None
    for s in seps:
        witness = is_t_shaped(g, s, k, catalog)
        if witness is not None:
            break
    report = TShapeReport(k, lonely is None, witness is None, len(seps), len(blocks), lonely, witness)
    assert report.equivalent, "T-shape equivalence failed"
    return report


# -- tangles -------------------------------------------------------------------

@dataclass
class Tangle:
    """The separations of order < k oriented so ``X`` is in the large side.

    ``oriented`` holds the proper ones with the small side first; every
    improper separation ``(A, V)`` with ``|A| < k`` belongs implicitly.
    """

    k: int
    defining_set: frozenset
    oriented: tuple = field(repr=False)

    def small_side(self, s: Separation) -> frozenset:
        x = self.defining_set
        return s.a if x <= s.b and not x <= s.a else s.b


@dataclass
class TangleViolation:
    axiom: str
    separations: tuple
    message: str = ""


def _mask(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


class _Cover:
    """Bitmask test for ``G[A1] ∪ G[A2] ∪ G[A3] = G``."""

    def __init__(self, g: Graph):
        self.full_v = (1 << g.n) - 1
        self.edges = list(g.edges())
        self.full_e = (1 << len(self.edges)) - 1

    def side(self, a) -> tuple[int, int]:
        em = 0
        for i, (u, v) in enumerate(self.edges):
            if u in a and v in a:
                em |= 1 << i
        return _mask(a), em

    def find_triple(self, sides: list) -> tuple | None:
        masks = [self.side(a) for a in sides]
        fv, fe = self.full_v, self.full_e
        n = len(masks)
        for i in range(n):
            vi, ei = masks[i]
            for j in range(i, n):
                vij, eij = vi | masks[j][0], ei | masks[j][1]
                for l in range(j, n):
                    if (vij | masks[l][0]) == fv and (eij | masks[l][1]) == fe:
                        return i, j, l
        return None


def _check_inseparable(g: Graph, x: frozenset, k: int) -> bool:
    net = split_network(g)
    return all(g.has_edge(u, v) or kappa_bounded(g, u, v, k, net).at_least
               for u, v in combinations(sorted(x), 2))


def _maximal_small_side(g: Graph, x: frozenset, separator: frozenset) -> frozenset:
    # the largest small side with this separator: everything off X's component
    rest = x - separator
    for comp in components_after_removal(g, separator):
        if comp & rest:
            return g.vertex_set - comp
    raise AssertionError("X lies inside the separator")


def _three_partitions(items: list):
    """Partitions of ``items`` into three non-empty blocks."""
    n = len(items)

    def rec(i, parts):
        if i == n:
            if all(parts):
                yield [frozenset(p) for p in parts]
            return
        used_empty = False
        for p in parts:
            if not p:
                if used_empty:
                    continue
                used_empty = True
            p.append(items[i])
            yield from rec(i + 1, parts)
            p.pop()

    yield from rec(0, [[], [], []])


def _constructive_triple(g: Graph, x: frozenset, k: int, cover: _Cover, limit: int = 20):
    """Try separators of the form ``X - P_i`` for 3-partitions ``P`` of ``X``."""
    if len(x) > limit:
        return None
    for parts in _three_partitions(sorted(x)):
        seps = [x - p for p in parts]
        if any(len(s) >= k for s in seps):
            continue
        sides = [_maximal_small_side(g, x, s) for s in seps]
        hit = cover.find_triple(sides)
        if hit is not None:
            return tuple(Separation(sides[i], (g.vertex_set - sides[i]) | seps[i]) for i in hit)
    return None


def pruned_theta2(g: Graph, x: frozenset, k: int, budget: int = DEFAULT_BUDGET):
    """(θ2) scan over inclusion-maximal small sides.

    For a separator ``S`` the largest small side is ``V`` minus the component
    of ``g - S`` holding ``X - S``; it only grows with ``S``, so separators of
    size exactly ``k - 1`` suffice.
    """
    size = min(k - 1, g.n)
    if comb(g.n, size) > budget:
        raise BudgetExceededError("too many separators for the pruned (θ2) scan")
    sides = {}
    for s in combinations(range(g.n), size):
        sep = frozenset(s)
        a = _maximal_small_side(g, x, sep)
        sides.setdefault(a, sep)
    candidates = [a for a in sides if not any(a < b for b in sides)]
    candidates.sort(key=lambda a: sorted(a))
    cover = _Cover(g)
    _charge_triples(len(candidates), budget)
    hit = cover.find_triple(candidates)
    if hit is None:
        return None
    return tuple(Separation(candidates[i], (g.vertex_set - candidates[i]) | sides[candidates[i]])
                 for i in hit)


def unpruned_theta2(g: Graph, x: frozenset, k: int, catalog: SeparationCatalog,
                    budget: int = DEFAULT_BUDGET):
    """(θ2) scan over every small side: proper ones from the catalog and all
    improper ones (any set of fewer than ``k`` vertices)."""
    by_side = {}
    for s in catalog:
        if s.order < k and x <= s.b and not x <= s.a:
            by_side.setdefault(s.a, s)
    for size in range(min(k, g.n + 1)):
        for c in combinations(range(g.n), size):
            by_side.setdefault(frozenset(c), Separation(frozenset(c), g.vertex_set))
    sides = sorted(by_side, key=lambda a: (len(a), sorted(a)))
    _charge_triples(len(sides), budget)
    hit = _Cover(g).find_triple(sides)
    if hit is None:
        return None
    return tuple(by_side[sides[i]] for i in hit)


def _charge_triples(n: int, budget: int) -> None:
    cost = n * (n + 1) * (n + 2) // 6
    if cost > budget * 20:
        raise BudgetExceededError(f"(θ2) scan over {n} sides needs ~{cost} triple checks")


def tangle_from_set(g: Graph, x, k: int, catalog: SeparationCatalog | None = None,
                    budget: int = DEFAULT_BUDGET, check_inseparable: bool = True):
    """Orient every separation of order < k towards ``X`` and test the tangle axioms.

    Returns a :class:`Tangle`, or a :class:`TangleViolation` carrying either a
    separation that cannot be oriented (θ1) or three small sides whose induced
    subgraphs cover ``g`` (θ2).
    """
    x = frozenset(x)
    if len(x) < k:
        raise PreconditionError("a k-inseparable set has at least k vertices")
    if check_inseparable and not _check_inseparable(g, x, k):
        raise PreconditionError(f"the given set is not {k}-inseparable")

    cover = _Cover(g)
    triple = _constructive_triple(g, x, k, cover)
    if triple is not None:
        return TangleViolation("theta2", triple, "constructed from a 3-partition of X")

    if catalog is None:
        catalog = enumerate_separations(g, k - 1, budget)
    elif catalog.max_order < k - 1:
        raise ValueError(f"catalog only covers order <= {catalog.max_order}, need {k - 1}")
    oriented = []
    for s in catalog:
        if s.order >= k:
            continue
        if x <= s.b and not x <= s.a:
            oriented.append(s)
        elif not (x <= s.a):
            return TangleViolation("theta1", (s,), "X meets both strict sides")
    triple = pruned_theta2(g, x, k, budget)
    if triple is not None:
        return TangleViolation("theta2", triple, "maximal small sides cover the graph")
    return Tangle(k, x, tuple(oriented))
