from itertools import combinations

from hypothesis import given

from kblocks.blocks import find_blocks
from kblocks.corpus import complete_graph, gen_complement_three_paths, gen_ladder_lex, path_graph
from kblocks.decision import WitnessSet, certificate_is_inseparable, decide_k_block, verify_witness
from kblocks.graph import Separation
from kblocks.oracle import oracle_pair_inseparable

from conftest import graph_and_k


def test_k4_has_a_3_block():
    d = decide_k_block(complete_graph(4), 3)
    assert d and len(d.certificate) == 3 and d.witness is None


def test_p4_has_no_3_block():
    d = decide_k_block(path_graph(4), 3)
    assert not d
    assert len(d.witness) <= 4 * (4 - 3) - 1
    assert verify_witness(path_graph(4), d.witness).ok


def test_three_paths_has_no_7_block():
    g = gen_complement_three_paths()
    d = decide_k_block(g, 7)
    assert not d.has_block
    check = verify_witness(g, d.witness)
    assert check.ok and check.mode == "replay+exhaustive"


def test_ladder_lex_witness():
    g = gen_ladder_lex(4, 4)
    d = decide_k_block(g, 5)
    assert not d
    assert len(d.witness) <= 4 * (g.n - 5) - 1
    assert verify_witness(g, d.witness).ok


def test_empty_witness_on_k4_fails():
    check = verify_witness(complete_graph(4), WitnessSet(2, ()))
    assert not check.ok and check.counterexample == {0, 1}


def test_witness_with_a_bad_member_fails_validation():
    bogus = Separation(frozenset({0, 1, 2}), frozenset({2, 3}))
    check = verify_witness(complete_graph(4), WitnessSet(3, (bogus,)))
    assert not check.ok and check.mode == "validation"


def test_k_beyond_n_is_a_vacuous_no():
    d = decide_k_block(path_graph(3), 4)
    assert not d and len(d.witness) == 0
    assert verify_witness(path_graph(3), d.witness).ok


@given(graph_and_k())
def test_agrees_with_find_blocks(case):
    g, k = case
    assert decide_k_block(g, k).has_block == bool(find_blocks(g, k)[0])


@given(graph_and_k(max_n=9))
def test_certificates_and_witnesses(case):
    g, k = case
    d = decide_k_block(g, k)
    if d.has_block:
        assert len(d.certificate) == k
        assert certificate_is_inseparable(g, d.certificate, k)
        assert all(oracle_pair_inseparable(g, x, y, k) for x, y in combinations(sorted(d.certificate), 2))
    else:
        if k < g.n:
            assert len(d.witness) <= 4 * (g.n - k) - 1
        assert all(s.order < k for s in d.witness.separations)
        assert verify_witness(g, d.witness, exhaustive=True).ok
        assert verify_witness(g, d.witness, exhaustive=False).ok
