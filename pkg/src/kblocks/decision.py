"""Deciding whether a k-block exists, with certificates either way.

A positive answer comes with k vertices that are pairwise inseparable by
fewer than k others.  A negative answer comes with a witness set: separations
of order < k such that every k vertices contain a pair split by one of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .connectivity import kappa_bounded, split_network
from .graph import Graph, NotASeparationError, make_separation

EXHAUSTIVE_LIMIT = 10**6


@dataclass(frozen=True)
class WitnessSet:
    k: int
    separations: tuple

    def __len__(self):
        return len(self.separations)


@dataclass(frozen=True)
class Decision:
    k: int
    certificate: frozenset | None = None
    witness: WitnessSet | None = None

    @property
    def has_block(self) -> bool:
        return self.certificate is not None

    def __bool__(self):
        return self.has_block


def decide_k_block(g: Graph, k: int) -> Decision:
    """Decide whether ``g`` has a k-block without building ``H_k``.

    Starting from ``X = V``, test the k smallest vertices of ``X`` pairwise;
    on the first separable pair split ``X`` into ``X∩A`` and ``X∩B`` and
    recurse.  The separations used form the witness on a negative answer.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > g.n:
        return Decision(k, witness=WitnessSet(k, ()))
    net = split_network(g)
    cache: dict = {}
    witness = []
    stack = [g.vertex_set]
    while stack:
        x_set = stack.pop()
        if len(x_set) < k:
            continue
        chosen = sorted(x_set)[:k]
        sep = None
        for x, y in combinations(chosen, 2):
            if g.has_edge(x, y):
                continue
            res = cache.get((x, y))
            if res is None:
                res = cache[(x, y)] = kappa_bounded(g, x, y, k, net)
            if res.exact:
                sep = res.label
                break
        if sep is None:
            return Decision(k, certificate=frozenset(chosen))
        witness.append(sep)
        stack.append(x_set & sep.b)
        stack.append(x_set & sep.a)
    return Decision(k, witness=WitnessSet(k, tuple(witness)))


@dataclass
class WitnessCheck:
    ok: bool
    mode: str
    counterexample: frozenset | None = None
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _replay(g: Graph, seps, k: int) -> frozenset | None:
    """Split ``V`` by the first member separating two vertices of the current
    set; return a set of >= k vertices that no member splits, if any."""
    stack = [g.vertex_set]
    while stack:
        x_set = stack.pop()
        if len(x_set) < k:
            continue
        for s in seps:
            if s.splits(x_set):
                stack.append(x_set & s.b)
                stack.append(x_set & s.a)
                break
        else:
            return x_set
    return None


def _exhaustive(g: Graph, seps, k: int) -> frozenset | None:
    split = [0] * g.n
    for s in seps:
        a_mask = sum(1 << v for v in s.a_only)
        b_mask = sum(1 << v for v in s.b_only)
        for v in s.a_only:
            split[v] |= b_mask
        for v in s.b_only:
            split[v] |= a_mask
    for combo in combinations(range(g.n), k):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if not any(split[v] & mask for v in combo):
            return frozenset(combo)
    return None


def verify_witness(g: Graph, w: WitnessSet, exhaustive: bool | None = None) -> WitnessCheck:
    """Check that among any ``w.k`` vertices some two are split by a member.

    The replay check always runs.  The brute-force check over all k-subsets
    runs when ``C(n, k) <= 10**6`` (or when forced with ``exhaustive=True``).
    """
    k = w.k
    problems = []
    for i, s in enumerate(w.separations):
        try:
            make_separation(g, s.a, s.b)
        except (NotASeparationError, ValueError) as err:
            problems.append(f"member {i}: {err}")
        if s.order >= k:
            problems.append(f"member {i} has order {s.order} >= {k}")
    if problems:
        return WitnessCheck(False, "validation", problems=problems)
    if k > g.n:
        return WitnessCheck(True, "vacuous")

    counter = _replay(g, w.separations, k)
    mode = "replay"
    if exhaustive is None:
        exhaustive = comb(g.n, k) <= EXHAUSTIVE_LIMIT
    if exhaustive:
        mode = "replay+exhaustive"
        brute = _exhaustive(g, w.separations, k)
        if (brute is None) != (counter is None):
            problems.append("replay and exhaustive checks disagree")
            return WitnessCheck(False, mode, brute or counter, problems)
        if counter is None:
            counter = brute
    if counter is not None:
        counter = frozenset(sorted(counter)[:k])
    return WitnessCheck(counter is None, mode, counter)


def certificate_is_inseparable(g: Graph, vertices, k: int) -> bool:
    net = split_network(g)
    return all(g.has_edge(x, y) or kappa_bounded(g, x, y, k, net).at_least
               for x, y in combinations(sorted(vertices), 2))
