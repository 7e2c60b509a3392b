import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kblocks.blocks import (BlockSet, block_number, block_width_certificate, find_all_blocks, find_blocks,
                            trivial_decomposition, verify_decomposition)
from kblocks.corpus import (complete_graph, cycle_graph, gen_complement_three_paths, gen_grid, gen_ladder_lex,
                            path_graph)
from kblocks.graph import Graph
from kblocks.inseparability import preprocess
from kblocks.oracle import canonical_blocks, oracle_blocks

from conftest import graph_and_k, graphs


def _sets(blocks):
    return canonical_blocks(blocks)


def test_k5_single_node_tree():
    blocks, dec = find_blocks(complete_graph(5), 3)
    assert _sets(blocks) == [(0, 1, 2, 3, 4)]
    assert len(dec.nodes) == 1


def test_p4_edges_are_2_blocks():
    blocks, _ = find_blocks(path_graph(4), 2)
    assert _sets(blocks) == [(0, 1), (1, 2), (2, 3)]


def test_grid_inner_block():
    g = gen_grid(5, 5)
    blocks, dec = find_blocks(g, 4)
    inner = frozenset(r * 5 + c for r in range(1, 4) for c in range(1, 4))
    assert blocks.as_sets() == {inner}
    assert inner in dec.leaf_sets()
    assert not find_blocks(g, 5)[0]


def test_three_paths_has_no_7_block():
    assert not find_blocks(gen_complement_three_paths(), 7)[0]


def test_k_beyond_n():
    blocks, dec = find_blocks(path_graph(3), 4)
    assert not blocks and len(dec.nodes) == 1


def test_k_equals_n():
    assert _sets(find_blocks(complete_graph(4), 4)[0]) == [(0, 1, 2, 3)]
    assert not find_blocks(cycle_graph(4), 4)[0]


def test_mismatched_hk_is_rejected():
    with pytest.raises(ValueError):
        find_blocks(path_graph(4), 2, preprocess(path_graph(4), 3))
    with pytest.raises(ValueError):
        find_blocks(path_graph(4), 2, preprocess(cycle_graph(4), 2))


@given(graph_and_k())
def test_matches_oracle(case):
    g, k = case
    blocks, dec = find_blocks(g, k)
    assert _sets(blocks) == _sets(oracle_blocks(g, k))
    assert dec.pruned_blocks == []


def test_matches_frozen_oracle(frozen):
    for name, (g, rec) in frozen.items():
        for k in range(1, g.n + 1):
            expected = [tuple(b) for b in rec["blocks"].get(str(k), [])]
            assert _sets(find_blocks(g, k)[0]) == expected, (name, k)


@given(graph_and_k(max_n=9))
def test_step_bound(case):
    g, k = case
    h = g.strip_isolated()
    if 0 < k < h.n:
        _, dec = find_blocks(h, k)
        assert dec.step_count <= 4 * (h.n - k)


@given(graph_and_k())
def test_tree_structure(case):
    g, k = case
    _, dec = find_blocks(g, k)
    for t in dec.nodes:
        assert len(t.children) in (0, 2)
        if t.children:
            s = t.separation
            assert s.order < k and s.splits(t.vertices)
            kids = [dec.nodes[c].vertices for c in t.children]
            assert kids == [t.vertices & s.a, t.vertices & s.b]
            assert all(dec.nodes[c].dead == (len(t.vertices) == k) for c in t.children)
    assert verify_decomposition(g, dec, k).ok


@given(graph_and_k(), st.randoms(use_true_random=False))
def test_blocks_do_not_depend_on_split_order(case, rnd):
    g, k = case
    hk = preprocess(g, k)

    def shuffled_non_edge(vertices, adj=hk.adj):
        pairs = [(x, y) for x in sorted(vertices) for y in sorted(vertices) if x < y and y not in adj[x]]
        return rnd.choice(pairs) if pairs else None

    expected = _sets(find_blocks(g, k, hk)[0])
    hk.first_non_edge = shuffled_non_edge
    assert _sets(find_blocks(g, k, hk)[0]) == expected


@given(graph_and_k())
def test_blocks_are_maximal_hk_cliques(case):
    g, k = case
    hk = preprocess(g, k)
    blocks, _ = find_blocks(g, k, hk)
    for b in blocks:
        assert len(b) >= k and hk.is_clique(b)
        assert not any(b < other for other in blocks)


def test_find_all_blocks_examples():
    k4 = find_all_blocks(complete_graph(4))
    assert {k: _sets(b) for k, b in k4.items()} == {k: [(0, 1, 2, 3)] for k in range(1, 5)}
    p3 = find_all_blocks(path_graph(3))
    assert {k: _sets(b) for k, b in p3.items()} == {1: [(0, 1, 2)], 2: [(0, 1), (1, 2)]}
    c5 = find_all_blocks(cycle_graph(5))
    assert {k: _sets(b) for k, b in c5.items()} == {1: [tuple(range(5))], 2: [tuple(range(5))]}


@given(graphs(min_n=1, max_n=7))
def test_find_all_blocks_agrees_with_single_k(g):
    everything = find_all_blocks(g)
    for k in range(1, g.n + 1):
        assert _sets(everything.get(k, BlockSet(k, ()))) == _sets(find_blocks(g, k)[0])


def test_block_number_examples():
    assert block_number(complete_graph(6)) == 6
    assert all(block_number(path_graph(n)) == 2 for n in range(2, 8))
    assert block_number(gen_ladder_lex(4, 4)) == 4
    assert block_number(Graph(0)) == 0
    assert block_number(Graph(3)) == 1


@given(graphs(min_n=1, max_n=7))
def test_block_number_is_largest_k_with_blocks(g):
    beta = block_number(g)
    assert find_blocks(g, beta)[0] and not find_blocks(g, beta + 1)[0]


def test_block_width_examples():
    beta, dec = block_width_certificate(complete_graph(5))
    assert beta == 5 and len(dec.nodes) == 1 and dec.width == 5 and dec.adhesion == 0
    for g in (path_graph(4), cycle_graph(6)):
        beta, dec = block_width_certificate(g)
        assert beta == 2 and dec.width <= 2 and dec.adhesion <= 2


def test_verify_decomposition_examples():
    k5 = complete_graph(5)
    rep = verify_decomposition(k5, trivial_decomposition(k5), 3)
    assert rep.ok and rep.clauses == {"i": True, "ii": True, "iii": True}
    p4 = path_graph(4)
    rep = verify_decomposition(p4, find_blocks(p4, 2)[1], 2)
    assert rep.clauses["i"] and rep.ok


def test_verify_decomposition_catches_a_broken_tree():
    g = path_graph(4)
    _, dec = find_blocks(g, 2)
    dec.nodes[dec.nodes[0].children[0]].vertices = frozenset({0})
    rep = verify_decomposition(g, dec, 2)
    assert not rep.ok and rep.problems


def test_verify_decomposition_rejects_other_graph():
    with pytest.raises(ValueError):
        verify_decomposition(cycle_graph(4), find_blocks(path_graph(4), 2)[1], 2)


def test_duality_on_random_graphs():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 14)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < rng.random()])
        beta, dec = block_width_certificate(g)
        assert dec.adhesion <= beta and dec.width <= beta
