import pickle
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kblocks.corpus import complete_graph, cycle_graph, gen_grid, gen_ladder_lex, path_graph
from kblocks.graph import (Graph, NotASeparationError, Separation, components_after_removal,
                           corner_orders, degree_stats, is_connected_set, make_separation,
                           separation_from_separator)

from conftest import graphs


def test_graph_rejects_loops_and_bad_endpoints():
    with pytest.raises(ValueError, match="self-loop"):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError, match="outside"):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError, match="distinct"):
        Graph(2, [], labels=["a", "a"])


def test_parallel_edges_collapse_and_adjacency_is_symmetric():
    g = Graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2
    assert all(u in g.adj[v] for u in range(3) for v in g.adj[u])
    assert g.nbrs[1] == (0, 2)


def test_labels_survive_and_sort():
    g = Graph.from_edges([("b", "a"), ("a", 10)], vertices=["z"])
    assert g.labels == ("z", "b", "a", 10)
    assert g.label_set(range(4)) == [10, "a", "b", "z"]
    assert g.index("a") == 2
    with pytest.raises(KeyError):
        g.index("nope")


def test_pickle_round_trip():
    g = Graph.from_edges([("x", "y"), ("y", "z")])
    h = pickle.loads(pickle.dumps(g))
    assert h == g and h.labels == g.labels


def test_strip_isolated_keeps_labels():
    g = Graph(4, [(1, 3)], labels="abcd")
    h = g.strip_isolated()
    assert h.n == 2 and h.labels == ("b", "d") and h.m == 1


# -- components_after_removal -----------------------------------------------------

def test_components_of_path_without_middle():
    assert components_after_removal(path_graph(3), {1}) == [{0}, {2}]


def test_components_of_k4():
    assert components_after_removal(complete_graph(4), set()) == [{0, 1, 2, 3}]


def test_components_of_grid_without_side_midpoints():
    g = gen_grid(3, 3)
    assert components_after_removal(g, {1, 3, 5, 7}) == [{0}, {2}, {4}, {6}, {8}]


def test_components_reject_foreign_vertex():
    with pytest.raises(ValueError):
        components_after_removal(path_graph(3), {7})


@given(graphs(max_n=9), st.data())
def test_components_partition_the_rest(g, data):
    removed = frozenset(data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n))) if g.n else frozenset()
    comps = components_after_removal(g, removed)
    union = frozenset().union(*comps)
    assert union == g.vertex_set - removed
    assert sum(len(c) for c in comps) == len(union)
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)
    for c in comps:
        assert is_connected_set(g, c)
    for c1, c2 in combinations(comps, 2):
        assert not any(g.adj[u] & c2 for u in c1)


# -- make_separation ----------------------------------------------------------------

def test_separation_of_path():
    s = make_separation(path_graph(3), {0, 1}, {1, 2})
    assert s.order == 1 and s.separator == {1}


def test_crossing_edge_is_named():
    with pytest.raises(NotASeparationError, match="0.*3|3.*0"):
        make_separation(complete_graph(4), {0, 1, 2}, {2, 3})


def test_uncovered_vertex_is_named():
    with pytest.raises(NotASeparationError, match="neither side"):
        make_separation(path_graph(3), {0}, {1})


def test_cycle_cut_by_two_vertices():
    s = make_separation(cycle_graph(6), {0, 1, 2, 3}, {3, 4, 5, 0})
    assert s.order == 2 and s.separator == {0, 3} and s.is_proper


def test_improper_separation():
    s = make_separation(path_graph(3), {0, 1, 2}, {1})
    assert not s.is_proper


@st.composite
def graph_with_separation(draw, max_n=8):
    g = draw(graphs(min_n=1, max_n=max_n))
    sep = frozenset(draw(st.sets(st.integers(0, g.n - 1), max_size=g.n)))
    side = frozenset(draw(st.sets(st.integers(0, g.n - 1), max_size=g.n)))
    return g, separation_from_separator(g, sep, side)


@given(graph_with_separation())
def test_reversal_is_a_separation_with_the_same_separator(case):
    g, s = case
    make_separation(g, s.a, s.b)
    r = make_separation(g, s.b, s.a)
    assert r.separator == s.separator and r.order == s.order


@given(graph_with_separation(), st.data())
def test_corner_orders_sum(case, data):
    g, s1 = case
    sep = frozenset(data.draw(st.sets(st.integers(0, g.n - 1), max_size=g.n)))
    side = frozenset(data.draw(st.sets(st.integers(0, g.n - 1), max_size=g.n)))
    s2 = separation_from_separator(g, sep, side)
    c1, c2 = corner_orders(s1, s2)
    make_separation(g, c1.a, c1.b)
    make_separation(g, c2.a, c2.b)
    assert c1.order + c2.order == s1.order + s2.order


def test_corner_orders_on_c6():
    g = cycle_graph(6)
    s1 = make_separation(g, {0, 1, 2, 3}, {3, 4, 5, 0})
    s2 = make_separation(g, {1, 2, 3, 4}, {4, 5, 0, 1})
    c1, c2 = corner_orders(s1, s2)
    assert c1.order + c2.order == 4


def test_corner_of_a_separation_with_itself():
    s = make_separation(cycle_graph(6), {0, 1, 2, 3}, {3, 4, 5, 0})
    c1, c2 = corner_orders(s, s)
    assert (c1.a, c1.b) == (s.a, s.b)
    assert c1.order + c2.order == 2 * s.order


@given(st.integers(2, 6), st.integers(2, 6), st.data())
def test_corner_identity_on_grids(rows, cols, data):
    g = gen_grid(rows, cols)
    draw_sep = lambda: separation_from_separator(  # noqa: E731
        g, data.draw(st.sets(st.integers(0, g.n - 1), max_size=6)),
        data.draw(st.sets(st.integers(0, g.n - 1), max_size=6)))
    s1, s2 = draw_sep(), draw_sep()
    c1, c2 = corner_orders(s1, s2)
    assert c1.order + c2.order == s1.order + s2.order


def test_separates_and_splits():
    s = Separation(frozenset({0, 1}), frozenset({1, 2}))
    assert s.separates(0, 2) and s.separates(2, 0)
    assert not s.separates(0, 1)
    assert s.splits(frozenset({0, 2})) and not s.splits(frozenset({0, 1}))


# -- degree_stats ------------------------------------------------------------------------

def test_degree_stats_examples():
    assert degree_stats(complete_graph(5)) == (4, 4.0, True)
    assert degree_stats(cycle_graph(6)) == (2, 2.0, False)
    assert degree_stats(gen_ladder_lex(4, 4))[0] == 5


def test_degree_stats_empty_graph():
    with pytest.raises(ValueError):
        degree_stats(Graph(0))
