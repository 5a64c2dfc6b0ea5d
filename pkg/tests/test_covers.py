import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from basiccovers import graph
from basiccovers.covers import (
    Cover,
    CoverSet,
    b_side_completion,
    count_basic,
    decompose_into_one_covers,
    enumerate_basic,
    is_basic,
    is_cover,
    lop_positions,
)
from basiccovers.errors import InvalidParameters, LengthMismatch, NotACover, NotBasic
from basiccovers.oracles import brute_force_basic

from conftest import bipartite_graphs

HEX = graph.cycle(6)
EDGE = graph.path(2)


def test_is_cover_examples():
    assert is_cover(HEX, Cover(1, (1, 0, 1, 1, 0, 1)))
    assert not is_cover(HEX, Cover(1, (1, 0, 1, 0, 0, 1)))
    assert is_cover(EDGE, Cover(5, (0, 5)))
    assert not is_cover(EDGE, Cover(1, (0, 0)))
    with pytest.raises(LengthMismatch):
        is_cover(HEX, Cover(1, (1, 0)))


def test_lop_positions_examples():
    assert 1 in lop_positions(HEX, Cover(2, (2, 1, 1, 2, 1, 1)))
    assert lop_positions(HEX, Cover(1, (1, 0, 1, 1, 0, 1))) == set()
    assert lop_positions(EDGE, Cover(1, (1, 1))) == {1, 2}
    with pytest.raises(NotACover):
        lop_positions(HEX, Cover(1, (0,) * 6))


def test_is_basic_examples():
    assert is_basic(HEX, Cover(1, (1, 1, 0, 1, 1, 0)))
    assert not is_basic(HEX, Cover(2, (2, 1, 1, 2, 1, 1)))
    for k in range(1, 6):
        assert is_basic(EDGE, Cover(k, (0, k)))
    with pytest.raises(InvalidParameters):
        is_basic(EDGE, Cover(0, (0, 0)))


def test_sum():
    s = Cover(1, (1, 0, 1, 1, 0, 1)) + Cover(1, (1, 1, 0, 1, 1, 0))
    assert s == Cover(2, (2, 1, 1, 2, 1, 1))
    assert Cover(1, (1, 0)) + Cover(1, (0, 1)) == Cover(2, (1, 1))
    with pytest.raises(LengthMismatch):
        Cover(1, (1, 0)) + Cover(1, (1, 0, 0))


def test_enumerate_counts():
    assert enumerate_basic(HEX, 1).count == 5
    for a, b in [(1, 1), (2, 3), (3, 4)]:
        assert count_basic(graph.complete_bipartite(a, b), 1) == 2
    for a in range(2, 6):
        assert count_basic(graph.regular(a), 1) == a + 2


def test_hexagon_one_covers_frozen():
    got = [c.values for c in enumerate_basic(HEX, 1)]
    assert got == [
        (0, 1, 0, 1, 0, 1),
        (0, 1, 1, 0, 1, 1),
        (1, 0, 1, 0, 1, 0),
        (1, 0, 1, 1, 0, 1),
        (1, 1, 0, 1, 1, 0),
    ]


@settings(max_examples=60)
@given(bipartite_graphs(max_side=3), st.integers(1, 3))
def test_enumeration_matches_brute_force(G, k):
    assert [c.values for c in enumerate_basic(G, k)] == brute_force_basic(G, k)


@settings(max_examples=40)
@given(bipartite_graphs(max_side=4), st.integers(1, 4))
def test_enumerated_covers_are_basic_and_bounded(G, k):
    for c in enumerate_basic(G, k):
        assert is_cover(G, c) and is_basic(G, c)
        assert max(c.values) <= k


def test_workers_do_not_change_result():
    G = graph.cycle(8)
    assert enumerate_basic(G, 4, workers=2) == enumerate_basic(G, 4)
    assert count_basic(G, 4, workers=3) == count_basic(G, 4)


def test_b_side_completion():
    c = b_side_completion(HEX, {1: 1, 3: 0, 5: 1}, 1)
    assert c is not None and c.values == (1, 1, 0, 1, 1, 0)
    assert b_side_completion(EDGE, {1: 1}, 3).values == (1, 2)
    P4 = graph.path(4)
    c = b_side_completion(P4, {v: 0 for v in P4.A}, 1)
    assert c is not None and all(c[v] == 1 for v in P4.B)


def test_b_side_completion_rejects_loppable():
    # vertex 3 of the hexagon would sit above both neighbour minima
    assert b_side_completion(HEX, {1: 0, 3: 2, 5: 1}, 2) is None


def test_b_side_completion_matches_enumeration():
    G = graph.cycle(6)
    found = set()
    for x in range(3):
        for y in range(3):
            for z in range(3):
                c = b_side_completion(G, {1: x, 3: y, 5: z}, 2)
                if c is not None:
                    found.add(c.values)
    assert found == {c.values for c in enumerate_basic(G, 2)}


def test_decompose_examples():
    c = Cover(1, (1, 0, 1, 1, 0, 1))
    assert decompose_into_one_covers(HEX, c) == [c]
    alt = Cover(1, (1, 0, 1, 0, 1, 0))
    assert decompose_into_one_covers(HEX, alt.scaled(2)) == [alt, alt]
    with pytest.raises(NotBasic):
        decompose_into_one_covers(HEX, Cover(2, (2, 1, 1, 2, 1, 1)))


def test_decompose_path5_k3():
    G = graph.path(5)
    ones = enumerate_basic(G, 1).covers
    for c in enumerate_basic(G, 3):
        parts = decompose_into_one_covers(G, c, ones)
        assert len(parts) == 3 and all(p in ones for p in parts)
        total = parts[0]
        for p in parts[1:]:
            total = total + p
        assert total == c


def test_serialisation_roundtrip():
    cs = enumerate_basic(HEX, 2)
    assert CoverSet.from_json(cs.to_json()) == cs
    c = cs.covers[3]
    assert Cover.from_text(c.to_text()) == c
