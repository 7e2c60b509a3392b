"""Immutable simple graphs, separations and the separation calculus.

Vertices are stored as dense integers ``0..n-1``; the caller's original
vertex names are kept in ``Graph.labels`` and used for all reporting.
Vertex sets are plain ``frozenset`` objects; :func:`canonical` gives the
sorted tuple used wherever a deterministic order matters.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator

VertexSet = frozenset


class NotASeparationError(ValueError):
    """Raised when a pair of vertex sets violates the separation axioms."""


def canonical(vertices: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(vertices))


class Graph:
    """An undirected simple graph on the vertices ``0..n-1``."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in sets)
        self.nbrs = tuple(tuple(sorted(s)) for s in sets)
        self.m = sum(len(s) for s in sets) // 2
        if labels is None:
            labels = tuple(range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("need exactly one label per vertex")
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        if len(self._index) != n:
            raise ValueError("vertex labels must be distinct")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[Hashable, Hashable]],
                   vertices: Iterable[Hashable] = ()) -> "Graph":
        """Build a graph from labelled edges, in order of first appearance."""
        index: dict[Hashable, int] = {}
        for v in vertices:
            index.setdefault(v, len(index))
        pairs = []
        for u, v in edges:
            a = index.setdefault(u, len(index))
            b = index.setdefault(v, len(index))
            pairs.append((a, b))
        return cls(len(index), pairs, labels=list(index))

    # -- basic queries -------------------------------------------------
    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.nbrs[u]:
                if u < v:
                    yield u, v

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown vertex {label!r}") from None

    def label_set(self, vertices: Iterable[int]) -> list:
        """External labels of ``vertices`` in canonical order."""
        return sorted((self.labels[v] for v in vertices), key=_label_key)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for x in range(self.n):
            ax = self.adj[x]
            for y in range(x + 1, self.n):
                if y not in ax:
                    yield x, y

    def is_complete(self) -> bool:
        return 2 * self.m == self.n * (self.n - 1)

    @cached_property
    def isolated(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if not self.nbrs[v])

    # -- derived graphs ------------------------------------------------
    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u in keep for v in self.nbrs[u] if u < v and v in pos]
        return Graph(len(keep), edges, labels=[self.labels[v] for v in keep])

    def strip_isolated(self) -> "Graph":
        """Return the subgraph induced by the non-isolated vertices."""
        if not self.isolated:
            return self
        return self.induced_subgraph(v for v in range(self.n) if self.nbrs[v])

    def same_as(self, other: "Graph") -> bool:
        return (self.n == other.n and self.adj == other.adj
                and self.labels == other.labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.same_as(other)

    def __hash__(self):
        return hash((self.n, self.adj, self.labels))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph, (self.n, list(self.edges()), self.labels))


def _label_key(label):
    # ints sort numerically and before strings; everything else by str
    if isinstance(label, int):
        return (0, label, "")
    return (1, 0, str(label))


@dataclass(frozen=True)
class Separation:
    """An ordered pair ``(a, b)`` of vertex sets.

    Instances are only guaranteed to satisfy the separation axioms when they
    come from :func:`make_separation` or from operations that preserve them
    (corners, reversal).
    """

    a: frozenset
    b: frozenset
    separator: frozenset = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "a", frozenset(self.a))
        object.__setattr__(self, "b", frozenset(self.b))
        object.__setattr__(self, "separator", self.a & self.b)

    @property
    def order(self) -> int:
        return len(self.separator)

    @property
    def is_proper(self) -> bool:
        return not (self.a <= self.b or self.b <= self.a)

    @property
    def a_only(self) -> frozenset:
        return self.a - self.b

    @property
    def b_only(self) -> frozenset:
        return self.b - self.a

    def reversed(self) -> "Separation":
        return Separation(self.b, self.a)

    def separates(self, x: int, y: int) -> bool:
        """True if one of ``x, y`` lies in ``a - b`` and the other in ``b - a``."""
        ao, bo = self.a_only, self.b_only
        return (x in ao and y in bo) or (x in bo and y in ao)

    def splits(self, vertices: frozenset) -> bool:
        return bool(vertices & self.a_only) and bool(vertices & self.b_only)

    def sort_key(self):
        return (self.order, canonical(self.separator), canonical(self.a))

    def to_labels(self, g: Graph) -> dict:
        return {"a": g.label_set(self.a), "b": g.label_set(self.b),
                "separator": g.label_set(self.separator)}


def _check_subset(g: Graph, s: Iterable[int], name: str) -> frozenset:
    s = frozenset(s)
    for v in s:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValueError(f"{name} contains {v!r}, which is not a vertex")
    return s


def components_after_removal(g: Graph, removed: Iterable[int]) -> list[frozenset]:
    """Connected components of ``g - removed``, sorted by smallest member."""
    removed = _check_subset(g, removed, "removed set")
    seen = set(removed)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.nbrs[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def connected_in(g: Graph, x: int, y: int, removed: frozenset = frozenset()) -> bool:
    """Whether ``x`` and ``y`` are joined by a path avoiding ``removed``."""
    if x in removed or y in removed:
        return False
    seen = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        if u == y:
            return True
        for w in g.nbrs[u]:
            if w not in seen and w not in removed:
                seen.add(w)
                stack.append(w)
    return False


def is_connected_set(g: Graph, vertices: Iterable[int]) -> bool:
    """Whether ``g[vertices]`` is connected (the empty set counts as connected)."""
    vs = frozenset(vertices)
    if not vs:
        return True
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.nbrs[u]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def make_separation(g: Graph, a: Iterable[int], b: Iterable[int]) -> Separation:
    """Validate ``(a, b)`` as a separation of ``g``.

    Raises :class:`NotASeparationError` naming an uncovered vertex or a
    crossing edge.
    """
    a = _check_subset(g, a, "side A")
    b = _check_subset(g, b, "side B")
    missing = g.vertex_set - a - b
    if missing:
        v = min(missing)
        raise NotASeparationError(f"vertex {g.labels[v]!r} lies in neither side")
    b_only = b - a
    for u in sorted(a - b):
        for w in g.nbrs[u]:
            if w in b_only:
                raise NotASeparationError(
                    f"edge {g.labels[u]!r}-{g.labels[w]!r} joins A\\B to B\\A")
    return Separation(a, b)


def separation_from_separator(g: Graph, separator: Iterable[int], side: Iterable[int]) -> Separation:
    """The separation with separator ``separator`` whose first side is the
    separator plus the union of the components of ``g - separator`` meeting ``side``."""
    sep = frozenset(separator)
    side = frozenset(side)
    a = set(sep)
    for comp in components_after_removal(g, sep):
        if comp & side:
            a |= comp
    return Separation(frozenset(a), (g.vertex_set - a) | sep)


def corner_orders(s1: Separation, s2: Separation) -> tuple[Separation, Separation]:
    """The corners ``(A∩C, B∪D)`` and ``(B∩D, A∪C)`` of ``s1=(A,B)``, ``s2=(C,D)``.

    Their orders always sum to ``s1.order + s2.order``.
    """
    a, b, c, d = s1.a, s1.b, s2.a, s2.b
    return Separation(a & c, b | d), Separation(b & d, a | c)


def degree_stats(g: Graph) -> tuple[int, float, bool]:
    """Minimum degree, average degree ``2m/n`` and whether a triangle exists."""
    if g.n == 0:
        raise ValueError("degrees are undefined for the empty graph")
    mindeg = min(len(nb) for nb in g.nbrs)
    has_triangle = False
    for u, v in g.edges():
        if g.adj[u] & g.adj[v]:
            has_triangle = True
            break
    return mindeg, 2 * g.m / g.n, has_triangle
