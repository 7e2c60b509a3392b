import json
import os
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kblocks.graph import Graph

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(__file__).parent / "data"


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_k(draw, min_n=1, max_n=7):
    g = draw(graphs(min_n, max_n))
    return g, draw(st.integers(1, g.n))


@st.composite
def non_adjacent_pair(draw, min_n=2, max_n=8):
    """A graph with at least one non-edge, and one of its non-edges."""
    g = draw(graphs(min_n, max_n).filter(lambda h: any(True for _ in h.non_edges())))
    return g, draw(st.sampled_from(list(g.non_edges())))


@pytest.fixture(scope="session")
def frozen():
    doc = json.loads((DATA / "oracle_frozen.json").read_text())
    return {name: (Graph(rec["n"], rec["edges"]), rec) for name, rec in doc.items()}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
