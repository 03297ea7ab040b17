from __future__ import annotations

import os
import random
import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from bugraph.enumeration import generate_connected
from bugraph.graph import Graph, from_edge_list

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    """A random spanning tree plus a random set of extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(i, j) for j in range(n) for i in range(j)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n)) if pairs else []
    perm = draw(st.permutations(range(n)))
    return from_edge_list(n, [(perm[a], perm[b]) for a, b in edges | set(extra)])


def random_connected(rng: random.Random, n: int, density: float | None = None) -> Graph:
    density = rng.random() if density is None else density
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(i, j) for j in range(n) for i in range(j) if rng.random() < density}
    perm = list(range(n))
    rng.shuffle(perm)
    return from_edge_list(n, [(perm[a], perm[b]) for a, b in edges])


@pytest.fixture(scope="session")
def connected_upto():
    """connected_upto(m) -> list of every connected graph class on 1..m vertices."""
    cache: dict[int, list[Graph]] = {}

    def get(m: int) -> list[Graph]:
        out = []
        for n in range(1, m + 1):
            if n not in cache:
                cache[n] = list(generate_connected(n))
            out += cache[n]
        return out

    return get


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
