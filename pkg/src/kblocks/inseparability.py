"""Pre-processing: the inseparability graph ``H_k`` and the full κ-table.

``H_k`` joins every non-adjacent pair ``x, y`` with ``κ(x,y) >= k``; each
remaining non-edge is labelled with an ``x``-``y`` separation of order ``< k``.
Labels are held as pairs of vertex bitmasks and expanded on lookup, which
keeps tables for graphs with hundreds of vertices in memory.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .connectivity import kappa_bounded, split_network
from .graph import Graph, Separation


@dataclass
class InsepGraph:
    """``H_k`` over the vertices of ``graph``, with labels on its non-edges."""

    graph: Graph
    k: int
    adj: tuple
    labels: dict = field(repr=False)

    def adjacent(self, x: int, y: int) -> bool:
        return y in self.adj[x]

    def label(self, x: int, y: int) -> Separation:
        return unpack(self.labels[(x, y) if x < y else (y, x)])

    def first_non_edge(self, vertices) -> tuple[int, int] | None:
        """Lexicographically smallest non-adjacent pair inside ``vertices``."""
        order = sorted(vertices)
        adj = self.adj
        for i, x in enumerate(order):
            ax = adj[x]
            for y in order[i + 1:]:
                if y not in ax:
                    return x, y
        return None

    def is_clique(self, vertices) -> bool:
        return self.first_non_edge(vertices) is None

    def edge_set(self) -> set[tuple[int, int]]:
        return {(x, y) for x in range(len(self.adj)) for y in self.adj[x] if x < y}


@dataclass
class KappaTable:
    """κ and a minimum-order separation for every non-adjacent pair ``x < y``."""

    graph: Graph
    entries: dict = field(repr=False)

    def kappa(self, x: int, y: int) -> int:
        return self.entries[(x, y) if x < y else (y, x)][0]

    def separation(self, x: int, y: int) -> Separation:
        return unpack(self.entries[(x, y) if x < y else (y, x)][1])


def _mask(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _members(mask: int) -> frozenset:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def pack(sep: Separation) -> tuple[int, int]:
    return _mask(sep.a), _mask(sep.b)


def unpack(packed: tuple[int, int]) -> Separation:
    return Separation(_members(packed[0]), _members(packed[1]))


def _degree_label(g: Graph, x: int, y: int, k: int, full: int):
    # the smaller-degree endpoint is cut off by its neighbourhood
    dx, dy = len(g.nbrs[x]), len(g.nbrs[y])
    if min(dx, dy) >= k:
        return None
    if dx <= dy:
        return dx, (_mask(g.adj[x]) | 1 << x, full ^ 1 << x)
    return dy, (full ^ 1 << y, _mask(g.adj[y]) | 1 << y)


def _pair_chunk(args):
    g, pairs, k, degree_cut = args
    net = split_network(g)
    full = (1 << g.n) - 1
    out = []
    for x, y in pairs:
        if degree_cut:
            lab = _degree_label(g, x, y, k, full)
            if lab is not None:
                out.append(lab)
                continue
        res = kappa_bounded(g, x, y, k, net)
        out.append((res.value, None if res.label is None else pack(res.label)))
    return out


def _run_pairs(g: Graph, pairs: list, k: int, degree_cut: bool, workers: int) -> list:
    if workers <= 1 or len(pairs) < 64:
        return _pair_chunk((g, pairs, k, degree_cut))
    size = -(-len(pairs) // (4 * workers))
    chunks = [(g, pairs[i:i + size], k, degree_cut) for i in range(0, len(pairs), size)]
    results = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves submission order, so the merge is deterministic
        for part in pool.map(_pair_chunk, chunks):
            results.extend(part)
    return results


def preprocess(g: Graph, k: int, *, degree_cut: bool = True, workers: int = 1) -> InsepGraph:
    """Build ``H_k`` for ``g``.

    Pairs with an endpoint of degree ``< k`` are labelled by that endpoint's
    neighbourhood separation without running a flow; all other non-adjacent
    pairs go through :func:`kappa_bounded` with early stop at ``k``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    pairs = list(g.non_edges())
    results = _run_pairs(g, pairs, k, degree_cut, workers)
    adj = [set(nb) for nb in g.adj]
    labels = {}
    for (x, y), (value, label) in zip(pairs, results):
        if label is None:
            adj[x].add(y)
            adj[y].add(x)
        else:
            labels[(x, y)] = label
    return InsepGraph(g, k, tuple(frozenset(s) for s in adj), labels)


def preprocess_full(g: Graph, *, workers: int = 1) -> KappaTable:
    """Exact κ and a minimum separation for every non-adjacent pair."""
    pairs = list(g.non_edges())
    bound = max(g.n, 1)
    results = _run_pairs(g, pairs, bound, False, workers)
    return KappaTable(g, {pair: res for pair, res in zip(pairs, results)})


def hk_view(table: KappaTable, k: int) -> InsepGraph:
    """``H_k`` read off a full κ-table without any flow computation."""
    if k < 1:
        raise ValueError("k must be at least 1")
    g = table.graph
    adj = [set(nb) for nb in g.adj]
    labels = {}
    for (x, y), (value, label) in table.entries.items():
        if value >= k:
            adj[x].add(y)
            adj[y].add(x)
        else:
            labels[(x, y)] = label
    return InsepGraph(g, k, tuple(frozenset(s) for s in adj), labels)
