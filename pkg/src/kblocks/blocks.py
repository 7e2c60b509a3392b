"""Finding all k-blocks, block-decompositions and the block number.

The main routine grows a rooted tree whose nodes carry vertex sets ``X_t``.
A list ``L`` of pending leaves is processed from its end: small sets are
dropped, sets that are cliques of ``H_k`` are recorded as k-blocks, and any
other set is split along the label of its lexicographically first
``H_k``-non-edge.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .graph import Graph, Separation, canonical, make_separation
from .inseparability import InsepGraph, hk_view, preprocess, preprocess_full

log = logging.getLogger(__name__)


@dataclass
class DecompositionNode:
    id: int
    vertices: frozenset
    parent: int | None = None
    children: list = field(default_factory=list)
    separation: Separation | None = None
    dead: bool = False
    is_block: bool = False

    @property
    def kind(self) -> str:
        if self.children:
            return "branch"
        return "dead" if self.dead else "leaf"


@dataclass
class BlockDecomposition:
    graph: Graph
    nodes: list
    k: int | None = None
    step_count: int = 0
    pruned_blocks: list = field(default_factory=list)

    @property
    def root(self) -> DecompositionNode:
        return self.nodes[0]

    def leaves(self) -> list:
        return [t for t in self.nodes if not t.children]

    def branching(self) -> list:
        return [t for t in self.nodes if t.children]

    def leaf_sets(self) -> list:
        return [t.vertices for t in self.leaves()]

    @property
    def adhesion(self) -> int:
        return max((t.separation.order for t in self.branching()), default=0)

    @property
    def width(self) -> int:
        return max((len(t.vertices) for t in self.leaves()), default=0)

    def live_size(self) -> int:
        """Nodes of the tree without the immediately discarded children."""
        return sum(1 for t in self.nodes if not t.dead)


@dataclass(frozen=True)
class BlockSet:
    k: int
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks",
                           tuple(sorted((frozenset(b) for b in self.blocks), key=canonical)))

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __bool__(self):
        return bool(self.blocks)

    def __contains__(self, item):
        return frozenset(item) in self.blocks

    def as_sets(self) -> set:
        return set(self.blocks)

    def labelled(self, g: Graph) -> list:
        return [g.label_set(b) for b in self.blocks]


def trivial_decomposition(g: Graph, k: int | None = None) -> BlockDecomposition:
    return BlockDecomposition(g, [DecompositionNode(0, g.vertex_set)], k=k, step_count=1)


def _maximal_only(sets: list) -> tuple[list, list]:
    keep, dropped = [], []
    for s in sets:
        if any(s < other for other in sets) or s in keep:
            dropped.append(s)
        else:
            keep.append(s)
    return keep, dropped


def find_blocks(g: Graph, k: int, hk: InsepGraph | None = None) -> tuple[BlockSet, BlockDecomposition]:
    """All k-blocks of ``g`` with the block-decomposition built on the way.

    ``hk`` defaults to ``preprocess(g, k)``.  For ``k > n`` no preprocessing
    happens and the decomposition is the single root.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > g.n:
        return BlockSet(k, ()), trivial_decomposition(g, k)
    if hk is None:
        hk = preprocess(g, k)
    elif hk.k != k or not hk.graph.same_as(g):
        raise ValueError("the inseparability graph was built for another graph or k")

    nodes = [DecompositionNode(0, g.vertex_set)]
    pending = [0]
    found = []
    steps = 0
    while True:
        steps += 1
        if not pending:
            break
        t = nodes[pending[-1]]
        x_t = t.vertices
        if len(x_t) < k:
            pending.pop()
            continue
        pair = hk.first_non_edge(x_t)
        if pair is None:
            t.is_block = True
            found.append(x_t)
            pending.pop()
            continue
        sep = hk.label(*pair)
        t.separation = sep
        pending.pop()
        for part in (x_t & sep.a, x_t & sep.b):
            child = DecompositionNode(len(nodes), part, parent=t.id, dead=len(x_t) == k)
            nodes.append(child)
            t.children.append(child.id)
            if not child.dead:
                pending.append(child.id)

    blocks, dropped = _maximal_only(found)
    if dropped:
        log.warning("discarded %d non-maximal block candidates", len(dropped))
    dec = BlockDecomposition(g, nodes, k=k, step_count=steps, pruned_blocks=dropped)
    return BlockSet(k, blocks), dec


def find_all_blocks(g: Graph, *, table=None, workers: int = 1) -> dict:
    """Map every ``k`` with at least one k-block to the k-blocks of ``g``.

    Uses one full κ-table; since every (k+1)-block is k-inseparable, the
    scan stops at the first ``k`` without blocks.
    """
    if table is None:
        table = preprocess_full(g, workers=workers)
    result = {}
    for k in range(1, g.n + 1):
        blocks, _ = find_blocks(g, k, hk_view(table, k))
        if not blocks:
            break
        result[k] = blocks
    return result


def block_number(g: Graph) -> int:
    """Largest ``k`` such that ``g`` has a k-block (0 for the empty graph)."""
    from .decision import decide_k_block

    if g.n == 0:
        return 0
    lo, hi = 1, g.n  # has a 1-block; nothing beyond n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if decide_k_block(g, mid).has_block:
            lo = mid
        else:
            hi = mid - 1
    return lo


def block_width_certificate(g: Graph) -> tuple[int, BlockDecomposition]:
    """``β(g)`` with a block-decomposition of adhesion and width at most ``β``.

    The decomposition is the tree built by :func:`find_blocks` at ``β + 1``.
    """
    beta = block_number(g)
    _, dec = find_blocks(g, beta + 1)
    return beta, dec


@dataclass
class DecompositionReport:
    k: int
    structure_ok: bool
    clauses: dict
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.structure_ok and all(v is not False for v in self.clauses.values())


def verify_decomposition(g: Graph, dec: BlockDecomposition, k: int, blocks=None,
                         hk: InsepGraph | None = None) -> DecompositionReport:
    """Check a block-decomposition against the three duality clauses.

    (i) every edge lies in a leaf set; (ii) if adhesion < k, every k-block lies
    in a leaf set; (iii) if the decomposition is k-complete, the k-blocks are
    exactly the leaf sets of size >= k.  Clauses that do not apply are None.
    """
    if not dec.graph.same_as(g):
        raise ValueError("decomposition was built over a different graph")
    problems = []
    for t in dec.nodes:
        if not t.children:
            continue
        sep = t.separation
        try:
            make_separation(g, sep.a, sep.b)
        except ValueError as err:
            problems.append(f"node {t.id}: {err}")
            continue
        if not sep.splits(t.vertices):
            problems.append(f"node {t.id}: label does not separate two vertices of X_t")
        kids = [dec.nodes[c].vertices for c in t.children]
        if kids != [t.vertices & sep.a, t.vertices & sep.b]:
            problems.append(f"node {t.id}: children are not X_t∩A and X_t∩B")
    leaf_sets = dec.leaf_sets()

    clauses = {}
    clauses["i"] = all(any(u in s and v in s for s in leaf_sets) for u, v in g.edges())

    need_blocks = dec.adhesion < k
    if need_blocks and blocks is None:
        blocks = find_blocks(g, k)[0]
    if need_blocks:
        clauses["ii"] = all(any(b <= s for s in leaf_sets) for b in blocks)
    else:
        clauses["ii"] = None

    complete = False
    if need_blocks:
        if hk is None and any(len(s) >= k for s in leaf_sets):
            hk = preprocess(g, k)
        complete = all(len(s) < k or hk.is_clique(s) for s in leaf_sets)
    if complete:
        block_sets = {frozenset(b) for b in blocks}
        big = {s for s in leaf_sets if len(s) >= k}
        clauses["iii"] = block_sets <= set(leaf_sets) and big == block_sets
    else:
        clauses["iii"] = None
    return DecompositionReport(k, not problems, clauses, problems)
