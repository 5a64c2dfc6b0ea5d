from itertools import product
from math import comb

import pytest
from hypothesis import given, reject, settings
from hypothesis import strategies as st

from basiccovers.covers import count_basic, enumerate_basic
from basiccovers.errors import Budget, InvalidParameters, LengthMismatch, NoFaces, ParseError, Unstable
from basiccovers.hypergraph import (
    WeightedHypergraph,
    count_basic_h,
    degree_bounds,
    degree_bounds_check,
    enumerate_basic_h,
    estimate_degree,
    format_hypergraph,
    is_basic_h,
    is_k_cover,
    parse_hypergraph,
    random_antichain,
    simplex,
)

from conftest import bipartite_graphs


@st.composite
def hypergraphs(draw, max_n=4, max_weight=3):
    n = draw(st.integers(1, max_n))
    nfaces = draw(st.integers(1, 3))
    seed = draw(st.integers(0, 10**6))
    try:
        return random_antichain(n, nfaces, draw(st.integers(1, max_weight)), seed)
    except InvalidParameters:
        return simplex(n)


def brute(H, k):
    """Every vector in a box twice the proven one, filtered by the definition."""
    ranges = [range(2 * b + 2) for b in H.box(k)]
    return sorted(v for v in product(*ranges) if is_basic_h(H, v, k))


def test_examples():
    H = simplex(3)
    assert is_basic_h(H, (2, 0, 0), 2)
    assert not is_basic_h(H, (1, 0, 0), 2)
    assert not is_basic_h(H, (2, 1, 0), 2)
    heavy = WeightedHypergraph(2, ((1, 2),), (3,))
    assert [c.values for c in enumerate_basic_h(heavy, 1)] == [(0, 3), (1, 2), (2, 1), (3, 0)]
    single = WeightedHypergraph(1, ((1,),), (2,))
    assert [c.values for c in enumerate_basic_h(single, 2)] == [(4,)]


def test_zero_vector_is_never_a_cover():
    assert not is_k_cover(simplex(2), (0, 0), 1)
    with pytest.raises(LengthMismatch):
        is_k_cover(simplex(2), (1,), 1)


def test_antichain_is_enforced():
    with pytest.raises(InvalidParameters):
        WeightedHypergraph(3, ((1, 2), (1, 2, 3)), (1, 1))
    with pytest.raises(InvalidParameters):
        WeightedHypergraph(2, ((1, 3),), (1,))
    with pytest.raises(InvalidParameters):
        WeightedHypergraph(2, ((1, 2),), (0,))
    with pytest.raises(LengthMismatch):
        WeightedHypergraph(2, ((1, 2),), (1, 1))


def test_errors():
    with pytest.raises(NoFaces):
        count_basic_h(WeightedHypergraph(2, (), ()), 1)
    with pytest.raises(Budget):
        count_basic_h(simplex(6, 5), 4, budget=1000)
    with pytest.raises(InvalidParameters):
        count_basic_h(simplex(2), 0)


@settings(max_examples=50)
@given(bipartite_graphs(max_side=3), st.integers(1, 3))
def test_graph_as_hypergraph(G, k):
    H = WeightedHypergraph.from_graph(G)
    assert enumerate_basic_h(H, k) == enumerate_basic(G, k)
    assert count_basic_h(H, k) == count_basic(G, k)


@settings(max_examples=40)
@given(hypergraphs(max_n=3, max_weight=2), st.integers(1, 2))
def test_box_is_sound(H, k):
    assert [c.values for c in enumerate_basic_h(H, k)] == brute(H, k)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_simplex_degree(n):
    rep = degree_bounds_check(simplex(n), 7)
    assert (rep.degree, rep.period) == (n - 1, 1)
    assert rep.within_bounds and degree_bounds(simplex(n)) == (n - 1, n - 1)


def test_simplex_counts_are_compositions():
    for n in range(1, 5):
        for w in (1, 2):
            for k in range(1, 4):
                assert count_basic_h(simplex(n, w), k) == comb(k * w + n - 1, n - 1)


def test_estimate_degree():
    assert estimate_degree([k * k for k in range(1, 9)]) == (2, 1)
    assert estimate_degree([1, 3, 2, 5, 3, 7, 4, 9, 5, 11]) == (1, 2)
    assert estimate_degree([5] * 6) == (0, 1)
    with pytest.raises(Unstable):
        estimate_degree([1, 2, 4, 8, 16, 32, 64])


def test_parse_roundtrip_and_errors():
    H = WeightedHypergraph(4, ((1, 2), (2, 3, 4)), (2, 1))
    assert parse_hypergraph(format_hypergraph(H)) == H
    assert parse_hypergraph("# two faces\nn 3\nf 1 1 2\nf 2 2 3  # heavy\n").weights == (1, 2)
    for bad in ["", "f 1 1 2\n", "n 3\nf 1\n", "n 3\nf x 1 2\n"]:
        with pytest.raises(ParseError):
            parse_hypergraph(bad)


def test_workers_identical():
    H = random_antichain(5, 3, 2, seed=7)
    assert enumerate_basic_h(H, 3, workers=2) == enumerate_basic_h(H, 3)
    assert count_basic_h(H, 3, workers=3) == count_basic_h(H, 3)


def test_random_antichain_is_reproducible_and_covering():
    H = random_antichain(6, 3, 3, seed=11)
    assert H == random_antichain(6, 3, 3, seed=11)
    assert set().union(*map(set, H.faces)) == set(range(1, 7))


@settings(max_examples=20)
@given(hypergraphs(max_n=4, max_weight=2))
def test_degree_within_bounds(H):
    try:
        rep = degree_bounds_check(H, 7, kmax_limit=12)
    except Unstable:
        reject()
    assert rep.lower <= rep.degree <= rep.upper
