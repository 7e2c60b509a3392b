import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kblocks.analysis import (PreconditionError, Tangle, TangleViolation, is_t_shaped, pruned_theta2,
                              t_shaped_equivalence_report, tangle_from_set, unpruned_theta2)
from kblocks.blocks import find_blocks
from kblocks.connectivity import is_k_connected
from kblocks.corpus import (complete_bipartite, complete_graph, cycle_graph, gen_complement_three_paths,
                            small_corpus, subdivided_complete)
from kblocks.graph import Graph, Separation
from kblocks.oracle import BudgetExceededError, enumerate_separations

from conftest import graphs


@pytest.fixture(scope="module")
def three_paths():
    g = gen_complement_three_paths()
    return g, enumerate_separations(g, 6)


def _by_a_only(g, cat, labels):
    want = frozenset(g.index(x) for x in labels)
    return next(s for s in cat.of_order(6) if s.a_only == want)


def test_three_paths_end_separation_is_not_t_shaped(three_paths):
    g, cat = three_paths
    s = _by_a_only(g, cat, ["a1", "c1"])
    assert s.is_proper and s.order == 6
    assert is_t_shaped(g, s, 6, cat) is None


def test_three_paths_reverse_is_t_shaped(three_paths):
    g, cat = three_paths
    s = _by_a_only(g, cat, ["a1", "c1"]).reversed()
    w = is_t_shaped(g, s, 6, cat)
    assert w is not None and w.check(6)
    assert len(s.a) <= 9


def test_t_shape_needs_a_proper_k_separation(three_paths):
    g, cat = three_paths
    with pytest.raises(PreconditionError):
        is_t_shaped(g, Separation(g.vertex_set, g.vertex_set), 6, cat)
    with pytest.raises(ValueError):
        is_t_shaped(g, _by_a_only(g, cat, ["a1", "c1"]), 6, enumerate_separations(g, 5))


def test_k7_has_no_small_proper_separations():
    g = complete_graph(7)
    assert len(enumerate_separations(g, 5)) == 0


def test_equivalence_report_three_paths(three_paths):
    g, cat = three_paths
    rep = t_shaped_equivalence_report(g, 6, catalog=cat)
    assert not rep.every_separation_separates_blocks and not rep.no_t_shaped
    assert rep.n_blocks == 0 and rep.t_shaped.check(6)


@pytest.mark.parametrize("g,k", [(complete_bipartite(4, 4), 4), (cycle_graph(6), 2)])
def test_equivalence_reports(g, k):
    rep = t_shaped_equivalence_report(g, k)
    assert rep.equivalent


def test_equivalence_needs_k_connected():
    with pytest.raises(PreconditionError):
        t_shaped_equivalence_report(cycle_graph(6), 3)


def test_t_shapes_across_the_corpus():
    checked = 0
    for g in small_corpus().values():
        for k in range(1, 7):
            if not is_k_connected(g, k):
                continue
            cat = enumerate_separations(g, k)
            assert t_shaped_equivalence_report(g, k, catalog=cat).equivalent
            for s in cat.of_order(k):
                w = is_t_shaped(g, s, k, cat)
                if w is not None:
                    checked += 1
                    assert w.check(k) and 2 * len(s.a) <= 3 * k
    assert checked > 0


# -- tangles ------------------------------------------------------------------------------

def test_k7_tangle():
    g = complete_graph(7)
    assert isinstance(tangle_from_set(g, g.vertex_set, 4), Tangle)


def test_k5_order_2_tangle():
    g = complete_graph(5)
    t = tangle_from_set(g, g.vertex_set, 2)
    assert isinstance(t, Tangle) and t.oriented == ()


def _covers(g, sides):
    return (frozenset().union(*sides) == g.vertex_set
            and all(any(u in a and v in a for a in sides) for u, v in g.edges()))


def test_tk6_branch_vertices_violate_theta2():
    g, branch = subdivided_complete(6)
    result = tangle_from_set(g, branch, 5)
    assert isinstance(result, TangleViolation) and result.axiom == "theta2"
    sides = [s.a for s in result.separations]
    assert _covers(g, sides)
    for s in result.separations:
        assert s.order < 5 and branch <= s.b and not branch <= s.a


def test_tangle_needs_an_inseparable_set():
    g = cycle_graph(6)
    with pytest.raises(PreconditionError):
        tangle_from_set(g, {0, 1, 3}, 3)
    with pytest.raises(PreconditionError):
        tangle_from_set(g, {0}, 2)


def _inseparable_sets(g, k, rng, count):
    out = []
    for b in find_blocks(g, k)[0]:
        for size in range(k, len(b) + 1):
            for sub in combinations(sorted(b), size):
                out.append(frozenset(sub))
    rng.shuffle(out)
    return out[:count]


@given(graphs(min_n=3, max_n=8), st.integers(2, 4), st.randoms(use_true_random=False))
def test_pruned_and_unpruned_theta2_agree(g, k, rnd):
    cat = enumerate_separations(g, k - 1)
    for x in _inseparable_sets(g, k, rnd, 3):
        try:
            fast = pruned_theta2(g, x, k)
            slow = unpruned_theta2(g, x, k, cat)
        except BudgetExceededError:
            continue
        assert (fast is None) == (slow is None)
        for triple in (fast, slow):
            if triple is not None:
                assert _covers(g, [s.a for s in triple])
                assert all(s.order < k and x <= s.b for s in triple)


@given(graphs(min_n=4, max_n=9), st.integers(2, 4), st.randoms(use_true_random=False))
def test_large_inseparable_sets_give_tangles(g, k, rnd):
    for x in _inseparable_sets(g, k, rnd, 3):
        if 2 * len(x) > 3 * (k - 1):
            t = tangle_from_set(g, x, k)
            assert isinstance(t, Tangle)
            for s in t.oriented:
                assert x <= s.b and not x <= s.a


def test_orientation_is_forced_by_any_superset():
    rng = random.Random(3)
    compared = 0
    while compared < 15:
        n = rng.randint(5, 9)
        g = Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.6])
        k = rng.randint(2, 4)
        for b in find_blocks(g, k)[0]:
            need = (3 * (k - 1)) // 2 + 1
            if len(b) <= need:
                continue
            sub = frozenset(sorted(b)[:need])
            t_small, t_big = tangle_from_set(g, sub, k), tangle_from_set(g, b, k)
            assert isinstance(t_small, Tangle) and isinstance(t_big, Tangle)
            assert set(t_small.oriented) == set(t_big.oriented)
            compared += 1
