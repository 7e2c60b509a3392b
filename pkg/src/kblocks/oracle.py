"""Brute-force ground truth by separator enumeration.

Nothing here uses flows.  Pair inseparability is decided by trying every
candidate separator, blocks are maximal cliques of the resulting relation,
and separations are listed from separators and component bipartitions.
All enumeration is capped by an explicit budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .graph import Graph, Separation, canonical, components_after_removal, connected_in

DEFAULT_BUDGET = 5_000_000


class BudgetExceededError(RuntimeError):
    """Raised instead of returning a partial enumeration."""


def _charge(cost: int, budget: int, what: str) -> None:
    if cost > budget:
        raise BudgetExceededError(f"{what} needs ~{cost} checks, budget is {budget}")


def oracle_pair_inseparable(g: Graph, u: int, v: int, k: int) -> bool:
    """True iff no set of fewer than ``k`` other vertices separates ``u`` from ``v``.

    Adding vertices to a separator keeps it a separator, so it suffices to
    try every set of exactly ``min(k - 1, n - 2)`` other vertices.
    """
    if u == v:
        raise ValueError("need two distinct vertices")
    if g.has_edge(u, v):
        return True
    others = [w for w in range(g.n) if w != u and w != v]
    size = min(k - 1, len(others))
    if size < 0:
        return True
    for s in combinations(others, size):
        if not connected_in(g, u, v, frozenset(s)):
            return False
    return True


def oracle_kappa(g: Graph, u: int, v: int) -> int:
    """Smallest number of other vertices separating non-adjacent ``u`` and ``v``."""
    if g.has_edge(u, v) or u == v:
        raise ValueError("κ is only defined for distinct non-adjacent vertices")
    others = [w for w in range(g.n) if w != u and w != v]
    for size in range(len(others) + 1):
        for s in combinations(others, size):
            if not connected_in(g, u, v, frozenset(s)):
                return size
    raise AssertionError("removing all other vertices must separate a non-edge")


def maximal_cliques(adj: list) -> list[frozenset]:
    """Bron–Kerbosch with pivoting over adjacency sets."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda w: len(adj[w] & p))
        for w in sorted(p - adj[pivot]):
            expand(r | {w}, p & adj[w], x & adj[w])
            p = p - {w}
            x = x | {w}

    expand(frozenset(), frozenset(range(len(adj))), frozenset())
    return out


def oracle_blocks(g: Graph, k: int, budget: int = DEFAULT_BUDGET):
    """The k-blocks of ``g`` as maximal cliques of size >= k of the
    pairwise-inseparability relation."""
    from .blocks import BlockSet

    if k < 1:
        raise ValueError("k must be at least 1")
    if k > g.n:
        return BlockSet(k, ())
    n_pairs = g.n * (g.n - 1) // 2 - g.m
    size = min(k - 1, max(g.n - 2, 0))
    _charge(n_pairs * comb(max(g.n - 2, 0), size), budget, "pair inseparability")
    rel = [set() for _ in range(g.n)]
    for u, v in combinations(range(g.n), 2):
        if oracle_pair_inseparable(g, u, v, k):
            rel[u].add(v)
            rel[v].add(u)
    adj = [frozenset(s) for s in rel]
    return BlockSet(k, [c for c in maximal_cliques(adj) if len(c) >= k])


@dataclass(frozen=True)
class SeparationCatalog:
    """Every proper separation of order <= ``max_order``, both orientations."""

    max_order: int
    separations: tuple

    def __len__(self):
        return len(self.separations)

    def __iter__(self):
        return iter(self.separations)

    def of_order(self, order: int) -> list:
        return [s for s in self.separations if s.order == order]


def enumerate_separations(g: Graph, max_order: int, budget: int = DEFAULT_BUDGET) -> SeparationCatalog:
    """List proper separations by separator: for each set ``S`` of at most
    ``max_order`` vertices, every split of the components of ``g - S`` into
    two non-empty groups gives ``(S ∪ group1, S ∪ group2)``."""
    max_order = min(max_order, g.n)
    _charge(sum(comb(g.n, s) for s in range(max_order + 1)), budget, "separator candidates")
    spent = 0
    found = []
    for size in range(max_order + 1):
        for s in combinations(range(g.n), size):
            sep = frozenset(s)
            comps = components_after_removal(g, sep)
            if len(comps) < 2:
                continue
            spent += 2 ** len(comps)
            _charge(spent, budget, "component bipartitions")
            # fix the first component on side A; mirror for the other orientation
            first, rest = comps[0], comps[1:]
            for bits in product((0, 1), repeat=len(rest)):
                if not any(bits):
                    continue
                a = set(first)
                b = set()
                for bit, comp in zip(bits, rest):
                    (b if bit else a).update(comp)
                sa = Separation(frozenset(a) | sep, frozenset(b) | sep)
                found.append(sa)
                found.append(sa.reversed())
    found.sort(key=lambda s: s.sort_key())
    return SeparationCatalog(max_order, tuple(found))


def canonical_blocks(blocks) -> list[tuple[int, ...]]:
    return sorted(canonical(b) for b in blocks)
