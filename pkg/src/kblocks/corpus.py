"""Example graphs and a harness for the degree theorems on k-blocks."""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from itertools import combinations

from .blocks import find_blocks
from .connectivity import is_k_connected
from .graph import Graph, degree_stats, is_connected_set


class ConstructionError(ValueError):
    """Raised when generator parameters cannot satisfy the construction."""


# -- elementary families ----------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def cube_graph(d: int = 3) -> Graph:
    n = 1 << d
    return Graph(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def subdivided_complete(n: int) -> tuple[Graph, frozenset]:
    """``K_n`` with every edge subdivided once; returns the branch vertices too."""
    labels = [f"v{i}" for i in range(n)]
    edges = []
    for i, j in combinations(range(n), 2):
        mid = len(labels)
        labels.append(f"s{i}_{j}")
        edges += [(i, mid), (mid, j)]
    return Graph(len(labels), edges, labels), frozenset(range(n))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_regular(d: int, n: int, seed: int) -> Graph:
    import networkx as nx

    h = nx.random_regular_graph(d, n, seed=seed)
    return Graph(n, h.edges())


def random_bipartite_regular(d: int, half: int, rng: random.Random, swaps: int | None = None) -> Graph:
    """A d-regular bipartite graph: a shuffled circulant mixed by edge swaps.

    Each swap trades ``a-b, c-e`` for ``a-e, c-b``, which keeps both degrees
    and the bipartition.
    """
    if not 0 <= d <= half:
        raise ConstructionError("degree must lie between 0 and the side size")
    left, right = list(range(half)), list(range(half))
    rng.shuffle(left)
    rng.shuffle(right)
    edges = {(left[i], right[(i + j) % half]) for i in range(half) for j in range(d)}
    pool = sorted(edges)
    for _ in range(swaps if swaps is not None else 10 * len(pool)):
        if len(pool) < 2:
            break
        i, j = rng.randrange(len(pool)), rng.randrange(len(pool))
        (a, b), (c, e) = pool[i], pool[j]
        if a == c or b == e or (a, e) in edges or (c, b) in edges:
            continue
        edges -= {(a, b), (c, e)}
        edges |= {(a, e), (c, b)}
        pool[i], pool[j] = (a, e), (c, b)
    return Graph(2 * half, [(u, half + v) for u, v in sorted(edges)])


# -- graphs from the examples -------------------------------------------------------

def gen_grid(rows: int, cols: int) -> Graph:
    if rows < 2 or cols < 2:
        raise ValueError("grid needs at least 2 rows and 2 columns")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def _grid_sides(rows: int, cols: int) -> list[list[int]]:
    """The four boundary paths of a grid, corner to corner, clockwise."""
    top = [c for c in range(cols)]
    right = [r * cols + cols - 1 for r in range(rows)]
    bottom = [(rows - 1) * cols + c for c in reversed(range(cols))]
    left = [r * cols for r in reversed(range(rows))]
    return [top, right, bottom, left]


def gen_grid_with_apex(k: int, rows: int, cols: int) -> tuple[Graph, frozenset]:
    """A grid plus ``k`` apex vertices on straight boundary segments.

    The ``k`` apices are dealt round-robin to the four sides; each side is cut
    into consecutive segments, one per apex, and an apex is joined to its whole
    segment.  Corners end a segment on both of their sides, every other
    boundary vertex lies in exactly one segment, so all grid degrees become 4.
    """
    if k < 5:
        raise ConstructionError("need k >= 5")
    if min(rows, cols) < k * k:
        warnings.warn(f"grid smaller than k^2 = {k * k}; uniqueness of the apex block is not guaranteed",
                      stacklevel=2)
    grid = gen_grid(rows, cols)
    sides = _grid_sides(rows, cols)
    per_side = [k // 4 + (1 if i < k % 4 else 0) for i in range(4)]
    edges = list(grid.edges())
    apex = grid.n
    for side, count in zip(sides, per_side):
        n = len(side)
        bounds = [round(i * n / count) for i in range(count + 1)]
        for i in range(count):
            seg = side[bounds[i]:bounds[i + 1]]
            if len(seg) < k:
                raise ConstructionError(f"boundary segment of {len(seg)} < k = {k} vertices")
            edges += [(apex, v) for v in seg]
            apex += 1
    g = Graph(grid.n + k, edges)
    bad = [v for v in range(grid.n) if g.degree(v) != 4]
    if bad:
        raise ConstructionError(f"grid vertex {bad[0]} has degree {g.degree(bad[0])}")
    return g, frozenset(range(grid.n, grid.n + k))


def gen_parallel_paths(n: int, k: int) -> tuple[Graph, frozenset]:
    """``n`` core vertices, each pair joined by ``k`` internally disjoint 2-paths."""
    if not n >= k >= 1:
        raise ValueError("need n >= k >= 1")
    edges = []
    nxt = n
    for u, v in combinations(range(n), 2):
        for _ in range(k):
            edges += [(u, nxt), (nxt, v)]
            nxt += 1
    return Graph(nxt, edges), frozenset(range(n))


def gen_block_tree(n: int, k: int, depth: int, fanout: int | None = None) -> tuple[Graph, list]:
    """A tree of independent n-sets, children hooked to distinct (k-1)-subsets.

    Each child set is joined to its (k-1)-subset of the parent by a matching
    from its first k-1 vertices; leaf sets are made complete.  ``fanout``
    below ``C(n, k-1)`` gives a smaller graph for which the block structure is
    not guaranteed.
    """
    if not n >= k >= 2 or depth < 0:
        raise ValueError("need n >= k >= 2 and depth >= 0")
    subsets = list(combinations(range(n), k - 1))
    if fanout is None:
        fanout = len(subsets)
    elif fanout < len(subsets):
        warnings.warn("reduced fanout: block structure not guaranteed", stacklevel=2)
    subsets = subsets[:fanout]
    parts: list[list[int]] = []
    edges = []
    count = 0

    def grow(level):
        nonlocal count
        part = list(range(count, count + n))
        count += n
        parts.append(part)
        if level == depth:
            edges.extend(combinations(part, 2))
            return part
        for sub in subsets:
            child = grow(level + 1)
            edges.extend((part[i], child[j]) for j, i in enumerate(sub))
        return part

    grow(0)
    return Graph(count, edges), [frozenset(p) for p in parts]


def ladder(squares: int) -> Graph:
    """``P_{squares+1} x K_2``; vertex ``2*i + side``."""
    if squares < 1:
        raise ValueError("need at least one square")
    edges = [(2 * i, 2 * i + 1) for i in range(squares + 1)]
    edges += [(2 * i + s, 2 * i + 2 + s) for i in range(squares) for s in (0, 1)]
    return Graph(2 * squares + 2, edges)


def lexicographic_product(h: Graph, t: int) -> Graph:
    """``h[K_t]``: vertex ``(v, i)`` is ``v*t + i``."""
    edges = []
    for v in range(h.n):
        edges += [(v * t + i, v * t + j) for i, j in combinations(range(t), 2)]
    for u, v in h.edges():
        edges += [(u * t + i, v * t + j) for i in range(t) for j in range(t)]
    return Graph(h.n * t, edges)


def gen_ladder_lex(k: int, squares: int) -> Graph:
    """k-connected, minimum degree ``⌊3k/2⌋ - 1``, and no (k+1)-block."""
    if k < 2 or squares < 2:
        raise ValueError("need k >= 2 and at least 2 squares")
    if k % 2 == 0:
        return lexicographic_product(ladder(squares), k // 2)
    base = gen_ladder_lex(k - 1, squares)
    apex = base.n
    return Graph(base.n + 1, list(base.edges()) + [(v, apex) for v in range(base.n)])


def gen_ladder_cliques(k: int, squares: int) -> Graph:
    """Ladder with its 4 corners blown up to ``K_{(k+1)/2}`` and the other
    vertices to ``K_{(k-1)/2}``; neighbouring cliques are completely joined."""
    if k < 3 or k % 2 == 0 or squares < 2:
        raise ValueError("need odd k >= 3 and at least 2 squares")
    h = ladder(squares)
    groups = []
    nxt = 0
    for v in range(h.n):
        size = (k + 1) // 2 if h.degree(v) == 2 else (k - 1) // 2
        groups.append(list(range(nxt, nxt + size)))
        nxt += size
    edges = []
    for grp in groups:
        edges += list(combinations(grp, 2))
    for u, v in h.edges():
        edges += [(a, b) for a in groups[u] for b in groups[v]]
    return Graph(nxt, edges)


def gen_complement_three_paths() -> Graph:
    """Complement of three disjoint paths ``a_i - b_i - c_i``."""
    labels = [f"{ch}{i}" for i in (1, 2, 3) for ch in "abc"]
    missing = set()
    for i in range(3):
        a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
        missing |= {(a, b), (b, c)}
    return Graph(9, [e for e in combinations(range(9), 2) if e not in missing], labels)


GENERATORS = {
    "grid": gen_grid,
    "grid-apex": gen_grid_with_apex,
    "parallel-paths": gen_parallel_paths,
    "block-tree": gen_block_tree,
    "ladder-lex": gen_ladder_lex,
    "ladder-cliques": gen_ladder_cliques,
    "three-paths": gen_complement_three_paths,
    "complete": complete_graph,
    "path": path_graph,
    "cycle": cycle_graph,
    "bipartite": complete_bipartite,
    "petersen": petersen_graph,
    "cube": cube_graph,
    "subdivided": subdivided_complete,
}


def small_corpus() -> dict[str, Graph]:
    """Named example graphs with at most 12 vertices."""
    return {
        "K5": complete_graph(5),
        "P4": path_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "petersen": petersen_graph(),
        "grid3x3": gen_grid(3, 3),
        "grid3x4": gen_grid(3, 4),
        "cube": cube_graph(3),
        "K33": complete_bipartite(3, 3),
        "K44": complete_bipartite(4, 4),
        "three-paths": gen_complement_three_paths(),
        "ladder-lex(2,4)": gen_ladder_lex(2, 4),
        "ladder-lex(4,2)": gen_ladder_lex(4, 2),
        "ladder-cliques(3,3)": gen_ladder_cliques(3, 3),
        "TK4": subdivided_complete(4)[0],
        "parallel-paths(3,2)": gen_parallel_paths(3, 2)[0],
        "block-tree(2,2,1)": gen_block_tree(2, 2, 1)[0],
        "block-tree(3,2,1)": gen_block_tree(3, 2, 1)[0],
    }


# -- theorem harness -------------------------------------------------------------------

THEOREMS = ("min_deg", "conn_min_deg", "triangle_free", "k_regular", "avg_deg")


@dataclass
class TheoremReport:
    theorem: str
    k: int
    preconditions: dict
    conclusion: dict = field(default_factory=dict)
    blocks: list = field(default_factory=list)
    verdict: str = "vacuous"
    seed: int | None = None

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"


def _block_summary(g: Graph, blocks) -> list:
    return [{"size": len(b), "connected": is_connected_set(g, b)} for b in blocks]


def theorem_preconditions(g: Graph, theorem: str, k: int) -> tuple[dict, bool]:
    """The hypotheses of ``theorem`` evaluated on ``g``, and whether all hold."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}")
    delta, avg, triangle = degree_stats(g)
    pre: dict = {"min_degree": delta, "avg_degree": avg}
    flags = []
    if theorem == "min_deg":
        flags.append(("min_degree>=2k", delta >= 2 * k))
    elif theorem == "avg_deg":
        flags.append(("avg_degree>=3k", 2 * g.m >= 3 * k * g.n))
    else:
        if theorem == "conn_min_deg":
            flags.append(("min_degree>3k/2-1", 2 * delta > 3 * k - 2))
        elif theorem == "triangle_free":
            flags.append(("min_degree>=k+1", delta >= k + 1))
            flags.append(("triangle_free", not triangle))
        else:
            flags.append(("k_regular", all(g.degree(v) == k for v in g.vertices)))
        # connectivity last: it is the expensive one
        if all(ok for _, ok in flags):
            flags.append(("k_connected", is_k_connected(g, k)))
    pre.update(flags)
    return pre, all(ok for _, ok in flags)


def check_theorem(g: Graph, theorem: str, k: int, seed: int | None = None) -> TheoremReport:
    """Evaluate one degree theorem on ``g``; the conclusion concerns (k+1)-blocks."""
    pre, holds = theorem_preconditions(g, theorem, k)
    delta = pre["min_degree"]
    report = TheoremReport(theorem, k, pre, seed=seed)
    if not holds:
        return report

    blocks, _ = find_blocks(g, k + 1)
    report.blocks = _block_summary(g, blocks)
    whole = g.vertex_set in blocks
    connected = [b for b in blocks if is_connected_set(g, b)]
    if theorem in ("min_deg", "avg_deg"):
        good = [b for b in connected if len(b) >= delta + 1 - k]
        ok = bool(good)
        report.conclusion = {"has_block": bool(blocks), "connected_block_of_size>=δ+1-k": ok}
    elif theorem in ("conn_min_deg", "triangle_free"):
        bound = delta + 1 if theorem == "conn_min_deg" else 2 * delta
        good = [b for b in connected if len(b) >= bound]
        ok = whole or len(good) >= 2
        report.conclusion = {"V_is_block": whole, "large_connected_blocks": len(good), "size_bound": bound}
    else:
        is_clique = g.is_complete() and g.n == k + 1
        ok = is_clique or not blocks
        report.conclusion = {"is_K_{k+1}": is_clique, "has_block": bool(blocks)}
    report.verdict = "holds" if ok else "VIOLATED"
    return report


def _contract(adj: dict, u, v) -> None:
    for w in adj.pop(v):
        adj[w].discard(v)
        if w != u:
            adj[w].add(u)
            adj[u].add(w)
    adj[u].discard(u)


def minor_minimize(g: Graph, k: int) -> Graph:
    """Shrink ``g`` by single vertex deletions, edge deletions and edge
    contractions for as long as ``m >= (k-1) n`` survives."""
    adj = {v: set(g.adj[v]) for v in g.vertices}

    def m_of():
        return sum(len(s) for s in adj.values()) // 2

    m = m_of()
    changed = True
    while changed:
        changed = False
        n = len(adj)
        for v in sorted(adj):
            if n > 1 and m - len(adj[v]) >= (k - 1) * (n - 1):
                for w in adj.pop(v):
                    adj[w].discard(v)
                m = m_of()
                changed = True
                break
        if changed:
            continue
        if m - 1 >= (k - 1) * n and m > 0:
            u = min(v for v in adj if adj[v])
            w = min(adj[u])
            adj[u].discard(w)
            adj[w].discard(u)
            m -= 1
            changed = True
            continue
        for u in sorted(adj):
            for w in sorted(adj[u]):
                if u < w and m - 1 - len(adj[u] & adj[w]) >= (k - 1) * (n - 1):
                    _contract(adj, u, w)
                    m = m_of()
                    changed = True
                    break
            if changed:
                break
    keep = sorted(adj)
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[w]) for u in keep for w in adj[u] if u < w]
    return Graph(len(keep), edges, [g.labels[v] for v in keep])


def minor_minimize_check(g: Graph, k: int, seed: int | None = None) -> TheoremReport:
    """Average degree ``>= 2(k-1) > 0`` forces a minor with a connected (k+1)-block."""
    delta, avg, _ = degree_stats(g)
    pre = {"avg_degree": avg, "avg_degree>=2(k-1)>0": 2 * g.m >= 2 * (k - 1) * g.n and k > 1}
    report = TheoremReport("minor", k, pre, seed=seed)
    if not pre["avg_degree>=2(k-1)>0"]:
        return report
    h = minor_minimize(g, k)
    blocks, _ = find_blocks(h, k + 1)
    report.blocks = _block_summary(h, blocks)
    ok = any(is_connected_set(h, b) for b in blocks)
    report.conclusion = {"minor_n": h.n, "minor_m": h.m, "connected_block": ok}
    report.verdict = "holds" if ok else "VIOLATED"
    return report


# -- seeded samplers with preconditions made true -------------------------------------

def sample_for_theorem(theorem: str, seed: int) -> tuple[Graph, int]:
    """A random graph (and k) satisfying the theorem's hypotheses."""
    rng = random.Random(seed)
    for attempt in range(200):
        sub = rng.randrange(1 << 30)
        if theorem == "min_deg":
            k = rng.randint(1, 3)
            n = rng.randint(2 * k + 2, 18)
            d = rng.randint(2 * k, n - 1)
            if n * d % 2:
                d = d + 1 if d + 1 < n else d - 1
            if d < 2 * k:
                continue
            g = random_regular(d, n, sub)
            if rng.random() < 0.5:
                extra = random_graph(n, 0.2, rng)
                g = Graph(n, list(g.edges()) + list(extra.edges()))
        elif theorem == "avg_deg":
            k = rng.randint(1, 3)
            n = rng.randint(3 * k + 2, 16)
            g = random_graph(n, rng.uniform(0.5, 1.0), rng)
            if 2 * g.m < 3 * k * g.n:
                continue
        elif theorem == "conn_min_deg":
            k = rng.randint(1, 5)
            d = (3 * k) // 2 + rng.randint(0, 2)
            n = rng.randint(d + 2, 24)
            if n * d % 2:
                n += 1
            g = random_regular(d, n, sub)
        elif theorem == "triangle_free":
            k = rng.randint(1, 5)
            d = k + 1 + rng.randint(0, 1)
            half = rng.randint(d + 1, 14)
            g = random_bipartite_regular(d, half, rng)
        elif theorem == "k_regular":
            k = rng.randint(2, 5)
            if rng.random() < 0.1:
                return complete_graph(k + 1), k
            n = rng.randint(k + 2, 30)
            if n * k % 2:
                n += 1
            g = random_regular(k, n, sub)
        elif theorem == "minor":
            k = rng.randint(2, 5)
            n = rng.randint(2 * k, 30)
            p = min(1.0, rng.uniform(2 * (k - 1), 2 * (k - 1) + 3) / (n - 1))
            g = random_graph(n, p, rng)
            if 2 * g.m < 2 * (k - 1) * g.n:
                continue
            return g, k
        else:
            raise ValueError(f"unknown theorem {theorem!r}")
        if theorem_preconditions(g, theorem, k)[1]:
            return g, k
    raise ConstructionError(f"could not sample a graph for {theorem} with seed {seed}")


def run_harness(theorem: str, samples: int, seed: int = 0) -> list[TheoremReport]:
    reports = []
    for i in range(samples):
        s = seed * 100_003 + i
        g, k = sample_for_theorem(theorem, s)
        if theorem == "minor":
            reports.append(minor_minimize_check(g, k, seed=s))
        else:
            reports.append(check_theorem(g, theorem, k, seed=s))
    return reports
