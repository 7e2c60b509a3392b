"""Pairwise vertex connectivity by unit-capacity max-flow.

Each non-isolated vertex ``v`` is split into ``v_in -> v_out``; every edge
``uv`` becomes the two arcs ``u_out -> v_in`` and ``v_out -> u_in``.  All arcs
have capacity one, so the network has ``2*ñ`` nodes and ``2*m + ñ`` arcs,
where ``ñ`` counts the non-isolated vertices.  Flows are computed with
Dinitz's phase algorithm and may be stopped after a fixed number of
augmenting paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from .graph import Graph, Separation


class InvalidPairError(ValueError):
    """Raised when connectivity is requested for equal or adjacent vertices."""


@dataclass(frozen=True)
class KappaResult:
    """Either ``κ(x,y) >= bound`` or the exact value with a minimum separation.

    ``label`` is ``None`` exactly when ``at_least`` is set.
    """

    value: int
    at_least: bool
    label: Separation | None = None

    @classmethod
    def AtLeast(cls, k: int) -> "KappaResult":
        return cls(k, True)

    @classmethod
    def Exactly(cls, c: int, label: Separation) -> "KappaResult":
        return cls(c, False, label)

    @property
    def exact(self) -> bool:
        return not self.at_least


class SplitNetwork:
    """Residual-graph template for the vertex-split network of a graph.

    Arc ``e`` and its residual twin are ``e`` and ``e ^ 1``; forward arcs have
    even ids.  The first ``2*ñ`` arc ids are the internal (vertex) arcs.
    """

    def __init__(self, g: Graph):
        self.graph = g
        active = [v for v in range(g.n) if g.nbrs[v]]
        self.compact = {v: i for i, v in enumerate(active)}
        self.active = active
        nt = len(active)
        self.n_nodes = 2 * nt
        head: list[int] = []
        cap: list[int] = []
        out: list[list[int]] = [[] for _ in range(2 * nt)]

        def arc(u, w):
            e = len(head)
            head.append(w)
            cap.append(1)
            out[u].append(e)
            head.append(u)
            cap.append(0)
            out[w].append(e + 1)

        for i in range(nt):
            arc(2 * i, 2 * i + 1)
        self.first_edge_arc = len(head)
        for u, v in g.edges():
            iu, iv = self.compact[u], self.compact[v]
            arc(2 * iu + 1, 2 * iv)
            arc(2 * iv + 1, 2 * iu)
        self.head = head
        self.cap = cap
        self.out = [tuple(lst) for lst in out]
        self.n_arcs = len(head) // 2

    def node_in(self, v: int) -> int:
        return 2 * self.compact[v]

    def node_out(self, v: int) -> int:
        return 2 * self.compact[v] + 1

    def bounded_flow(self, x: int, y: int, limit: int) -> tuple[int, list[int]]:
        """Push up to ``limit`` units from ``x_out`` to ``y_in``.

        Returns the flow value and the residual capacities.  Each unit is one
        augmenting path; the search stops as soon as ``limit`` paths are found.
        """
        s, t = self.node_out(x), self.node_in(y)
        head, out = self.head, self.out
        cap = self.cap[:]
        n_nodes = self.n_nodes
        flow = 0
        while flow < limit:
            # BFS layering; nodes beyond the sink's layer are never useful
            level = [-1] * n_nodes
            level[s] = 0
            queue = [s]
            t_level = -1
            for u in queue:
                lu = level[u]
                if t_level >= 0 and lu >= t_level:
                    break
                lu += 1
                for e in out[u]:
                    if cap[e]:
                        w = head[e]
                        if level[w] < 0:
                            level[w] = lu
                            if w == t:
                                t_level = lu
                            queue.append(w)
            if t_level < 0:
                break
            ptr = [0] * n_nodes
            while flow < limit:
                stack = [s]
                arcs: list[int] = []
                while stack:
                    u = stack[-1]
                    if u == t:
                        break
                    lst = out[u]
                    i = ptr[u]
                    want = level[u] + 1
                    advanced = False
                    while i < len(lst):
                        e = lst[i]
                        if cap[e] and level[head[e]] == want:
                            stack.append(head[e])
                            arcs.append(e)
                            advanced = True
                            break
                        i += 1
                    ptr[u] = i
                    if not advanced:
                        level[u] = -1
                        stack.pop()
                        if arcs:
                            arcs.pop()
                            ptr[stack[-1]] += 1
                if not stack:
                    break
                for e in arcs:
                    cap[e] -= 1
                    cap[e ^ 1] += 1
                flow += 1
        return flow, cap

    def source_side(self, x: int, cap: list[int]) -> tuple[set[int], set[int]]:
        """Residual reachability from ``x_out`` after a maximum flow.

        Edge arcs are treated as uncapacitated here, which leaves the flow
        maximum but forces the reachable cut onto vertex arcs.  Returns the
        vertices whose out-node is reached and those with only the in-node
        reached (the separator).
        """
        head, out, first = self.head, self.out, self.first_edge_arc
        s = self.node_out(x)
        seen = [False] * self.n_nodes
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for e in out[u]:
                if cap[e] or (e >= first and not e & 1):
                    w = head[e]
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
        inner, cut = set(), set()
        for i, v in enumerate(self.active):
            if seen[2 * i + 1]:
                inner.add(v)
            elif seen[2 * i]:
                cut.add(v)
        return inner, cut


def split_network(g: Graph) -> SplitNetwork:
    """The split network of ``g``, built once and cached on the graph."""
    net = g.__dict__.get("_split_network")
    if net is None:
        net = g.__dict__["_split_network"] = SplitNetwork(g)
    return net


def _check_pair(g: Graph, x: int, y: int) -> None:
    for v in (x, y):
        if not (0 <= v < g.n):
            raise InvalidPairError(f"{v!r} is not a vertex")
    if x == y:
        raise InvalidPairError("κ(x,y) needs two distinct vertices")
    if g.has_edge(x, y):
        raise InvalidPairError(
            f"{g.labels[x]!r} and {g.labels[y]!r} are adjacent; κ is only defined for non-adjacent pairs")


def kappa_bounded(g: Graph, x: int, y: int, k: int, network: SplitNetwork | None = None) -> KappaResult:
    """``AtLeast(k)`` if ``κ(x,y) >= k``, else the exact value and a minimum
    ``x``-``y`` separation ``(A, B)`` with ``x`` in ``A - B``."""
    _check_pair(g, x, y)
    if k < 1:
        raise ValueError("k must be positive")
    if not g.nbrs[x]:
        return KappaResult.Exactly(0, Separation({x}, g.vertex_set - {x}))
    if not g.nbrs[y]:
        return KappaResult.Exactly(0, Separation(g.vertex_set - {y}, {y}))
    net = network if network is not None else split_network(g)
    flow, cap = net.bounded_flow(x, y, k)
    if flow >= k:
        return KappaResult.AtLeast(k)
    inner, cut = net.source_side(x, cap)
    assert len(cut) == flow, "residual cut does not match the flow value"
    a = frozenset(inner | cut)
    b = (g.vertex_set - inner)
    return KappaResult.Exactly(flow, Separation(a, b))


def kappa(g: Graph, x: int, y: int) -> tuple[int, Separation]:
    """Exact ``κ(x,y)`` for a non-adjacent pair together with a minimum separation."""
    res = kappa_bounded(g, x, y, max(g.n, 1))
    assert res.exact
    return res.value, res.label


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``n > k`` and no fewer than ``k`` vertices disconnect ``g``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.n <= k:
        return False
    if k == 0:
        return True
    if min(len(nb) for nb in g.nbrs) < k:
        return False
    net = split_network(g)
    return all(kappa_bounded(g, x, y, k, net).at_least for x, y in g.non_edges())
