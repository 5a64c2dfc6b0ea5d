from hypothesis import given, settings
from hypothesis import strategies as st

from basiccovers import graph
from basiccovers.oracles import (
    brute_force_basic,
    dim_and_multiplicity_exact,
    gdim_bruteforce,
    hilbert_coefficients,
    hilbert_exact,
    r_bruteforce,
)

from conftest import bipartite_graphs


def test_hexagon_coefficients():
    assert hilbert_coefficients(graph.cycle(6)) == [1, 4, 3]
    assert [hilbert_exact(graph.cycle(6), k) for k in range(4)] == [1, 5, 12, 22]


def test_edge_and_complete_bipartite():
    assert hilbert_coefficients(graph.path(2)) == [1, 1]
    assert dim_and_multiplicity_exact(graph.complete_bipartite(3, 3)) == (2, 1)


def test_brute_force_small():
    assert brute_force_basic(graph.path(2), 2) == [(0, 2), (1, 1), (2, 0)]
    assert len(brute_force_basic(graph.cycle(6), 1)) == 5


def test_r_and_gdim_bruteforce():
    C = graph.cycle(6)
    assert r_bruteforce(C, (1, 3, 5), (2, 4, 6)) == 1
    assert r_bruteforce(C, (1, 5, 3), (2, 6, 4)) == 2
    assert gdim_bruteforce(C) == 3
    assert gdim_bruteforce(graph.path(4)) == 3


@settings(max_examples=40)
@given(bipartite_graphs(max_side=3), st.integers(0, 3))
def test_exact_polynomial_matches_brute_force(G, k):
    # HF(0) = 1 counts the empty product; the scan excludes the zero vector
    expected = 1 if k == 0 else len(brute_force_basic(G, k))
    assert hilbert_exact(G, k) == expected


@settings(max_examples=40)
@given(bipartite_graphs(max_side=4))
def test_coefficients_are_positive_and_start_at_one(G):
    c = hilbert_coefficients(G)
    assert c[0] == 1 and all(x > 0 for x in c)
    assert len(c) <= G.a + 1
