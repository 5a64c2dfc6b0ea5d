import json
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from basiccovers import algebra, graph
from basiccovers.covers import Cover, enumerate_basic
from basiccovers.errors import NotAnEdge, NotATree, NotBasic
from basiccovers.oracles import dim_and_multiplicity_exact, hilbert_exact

from conftest import bipartite_graphs, trees

HEX = graph.cycle(6)
SQUARE = graph.cycle(4)
T_DOMAIN = graph.from_edges(6, [(1, 2), (1, 3), (1, 4), (4, 5), (4, 6)])


def test_differences_and_stabilize():
    assert algebra.differences([1, 4, 9, 16, 25], 1) == [3, 5, 7, 9]
    assert algebra.stabilize([1, 4, 9, 16, 25, 36]) == (2, 2)
    assert algebra.stabilize([1, 2]) == (None, None)


def test_hexagon_profile_frozen():
    # values from the weak-order Hilbert polynomial 1 + 4k + 3 C(k,2)
    prof = algebra.hilbert_function(HEX, 10)
    assert prof.counts == (5, 12, 22, 35, 51, 70, 92, 117, 145, 176)
    assert (prof.dim, prof.multiplicity) == (3, 3)
    assert prof.hf(0) == 1


def test_non_cm_path_profile():
    prof = algebra.hilbert_function(graph.path(6), 10)
    assert (prof.dim, prof.multiplicity) == (4, 1)


def test_k23_is_linear():
    prof = algebra.hilbert_function(graph.complete_bipartite(2, 3), 6)
    assert [prof.hf(k) for k in range(1, 7)] == [2, 3, 4, 5, 6, 7]
    assert (prof.dim, prof.multiplicity) == (2, 1)


def test_short_kmax_is_unstable():
    prof = algebra.hilbert_function(graph.cycle(10), 4)
    assert not prof.stable and prof.dim is None


@settings(max_examples=30)
@given(bipartite_graphs(max_side=4))
def test_profile_matches_exact_polynomial(G):
    dim, e = dim_and_multiplicity_exact(G)
    prof = algebra.hilbert_function(G, dim + 3)
    assert [prof.hf(k) for k in range(0, dim + 4)] == [hilbert_exact(G, k) for k in range(0, dim + 4)]
    assert (prof.dim, prof.multiplicity) == (dim, e)


def test_profile_workers_identical():
    assert algebra.hilbert_function(graph.cycle(8), 6, workers=2) == algebra.hilbert_function(graph.cycle(8), 6)


@given(bipartite_graphs(max_side=3, connected=True), bipartite_graphs(max_side=3, connected=True))
@settings(max_examples=25)
def test_disjoint_union_product(G1, G2):
    U = graph.disjoint_union(G1, G2)
    for k in range(1, 5):
        assert hilbert_exact(U, k) == hilbert_exact(G1, k) * hilbert_exact(G2, k)
    d1, d2, du = (dim_and_multiplicity_exact(X)[0] for X in (G1, G2, U))
    assert du == d1 + d2 - 1


def test_wsc_examples():
    assert algebra.satisfies_wsc(SQUARE)
    res = algebra.satisfies_wsc(HEX)
    assert not res and res.violator == 1
    assert algebra.satisfies_wsc(T_DOMAIN).holds


def test_domain_criterion_examples():
    assert algebra.domain_criterion_via_covers(SQUARE)
    assert not algebra.domain_criterion_via_covers(HEX)
    assert algebra.domain_criterion_via_covers(graph.path(4))


@settings(max_examples=80)
@given(bipartite_graphs(max_side=4))
def test_wsc_equals_cover_criterion(G):
    assert algebra.satisfies_wsc(G).holds == algebra.domain_criterion_via_covers(G)


def test_always_tight_edge():
    assert all(algebra.always_tight_edge(SQUARE, u, v) for u, v in SQUARE.edges)
    assert not any(algebra.always_tight_edge(HEX, u, v) for u, v in HEX.edges)
    K = graph.complete_bipartite(2, 3)
    assert all(algebra.always_tight_edge(K, u, v) for u, v in K.edges)
    with pytest.raises(NotAnEdge):
        algebra.always_tight_edge(HEX, 1, 3)


@settings(max_examples=40)
@given(bipartite_graphs(max_side=4))
def test_always_tight_matches_covers(G):
    ones = enumerate_basic(G, 1).covers
    for u, v in G.edges:
        assert algebra.always_tight_edge(G, u, v) == all(c[u] + c[v] == 1 for c in ones)


def test_zero_divisor_witness_examples():
    wit = algebra.zero_divisor_witness(HEX, 2)
    assert [c.values for c in wit] == [(1, 0, 1, 1, 0, 1), (1, 1, 0, 1, 1, 0)]
    assert algebra.zero_divisor_witness(SQUARE, 4) is None
    w5 = algebra.zero_divisor_witness(graph.path(5), 2)
    assert w5 is not None and len(w5) == 2


def test_unmixed_examples():
    assert not algebra.is_unmixed(graph.complete_bipartite(2, 3))
    assert algebra.is_unmixed(graph.whisker(graph.path(3)))
    assert not algebra.is_unmixed(HEX)


def test_tree_tests():
    assert algebra.tree_domain_test(T_DOMAIN) and not algebra.tree_unmixed_test(T_DOMAIN)
    assert algebra.tree_domain_test(graph.path(4))
    assert not algebra.tree_domain_test(graph.path(6))
    with pytest.raises(NotATree):
        algebra.tree_domain_test(HEX)


@settings(max_examples=60)
@given(trees(max_n=8))
def test_tree_tests_match_general_criteria(T):
    assert algebra.tree_domain_test(T) == algebra.satisfies_wsc(T).holds
    assert algebra.tree_unmixed_test(T) == algebra.is_unmixed(T)


def test_nonzerodivisor_examples():
    assert algebra.nonzerodivisor_test(HEX, Cover(1, (1, 0, 1, 0, 1, 0)))
    assert not algebra.nonzerodivisor_test(HEX, Cover(1, (1, 0, 1, 1, 0, 1)))
    for G in (HEX, graph.path(5), graph.regular(4)):
        a_side, _ = algebra.depth_witness(G)
        assert algebra.nonzerodivisor_test(G, a_side)
    with pytest.raises(NotBasic):
        algebra.nonzerodivisor_test(HEX, Cover(2, (2, 1, 1, 2, 1, 1)))


def test_sum_stays_basic_examples():
    assert algebra.sum_stays_basic_sampled(HEX, Cover(1, (1, 0, 1, 0, 1, 0)), 3)
    b = Cover(1, (1, 0, 1, 1, 0, 1))
    assert not algebra.sum_stays_basic_sampled(HEX, b, 1)
    assert algebra.sum_stays_basic_counterexample(HEX, b, 1).values == (1, 1, 0, 1, 1, 0)
    assert algebra.sum_stays_basic_sampled(graph.path(2), Cover(1, (0, 1)), 4)


@settings(max_examples=30)
@given(bipartite_graphs(max_side=3), st.data())
def test_nonzerodivisor_routes_agree(G, data):
    ones = enumerate_basic(G, 1).covers
    b = data.draw(st.sampled_from(ones))
    graph_side = algebra.nonzerodivisor_test(G, b)
    assert graph_side == algebra.nonzerodivisor_test_via_covers(G, b, ones)
    if graph_side:
        # a non-zero-divisor keeps every sum basic
        assert algebra.sum_stays_basic_sampled(G, b, 2)


def test_depth_witness_examples():
    a, b = algebra.depth_witness(HEX)
    assert a.values == (1, 0, 1, 0, 1, 0) and b.values == (0, 1, 0, 1, 0, 1)
    a, b = algebra.depth_witness(graph.path(2))
    assert (a.values, b.values) == ((1, 0), (0, 1))
    K = graph.complete_bipartite(2, 3)
    assert all(algebra.is_tight_everywhere(K, c) for c in algebra.depth_witness(K))


@pytest.mark.parametrize("a", [2, 3, 4, 5, 6])
def test_cycle_degree_bound(a):
    d = algebra.dim_bound_degree(graph.cycle(2 * a))
    assert d.s == 2 and d.bound == a
    assert d.multiplicity_bound == comb(a, 2) * factorial(a - 2)


def test_degree_bound_families():
    assert algebra.dim_bound_degree(graph.regular(4)).bound == 3
    assert algebra.dim_bound_degree(graph.complete_bipartite(2, 3)).bound == 2


@settings(max_examples=30)
@given(bipartite_graphs(max_side=4, connected=True))
def test_degree_bound_holds(G):
    dim, _ = dim_and_multiplicity_exact(G)
    assert dim <= algebra.dim_bound_degree(G).bound <= G.a + 1


def test_ara_examples():
    C8 = graph.cycle(8)
    assert algebra.ara_upper_bounds(C8, profile=algebra.hilbert_function(C8, 8))[0][0] == 4
    cat = graph.caterpillar(4, 6, 6)
    assert algebra.ara_upper_bounds(cat)[0] == (5, "gdim")
    assert algebra.ara_upper_bounds(graph.complete_bipartite(3, 4))[0][0] == 2


def test_analyze_hexagon_report():
    rep = algebra.analyze(HEX, kmax=10)
    d = json.loads(rep.to_json())
    assert d["wsc"] is False and d["dim_estimate"] == 3 and d["multiplicity_estimate"] == 3 and d["gdim"] == 3
    assert d["zero_divisor_witness"] == [[1, 0, 1, 1, 0, 1], [1, 1, 0, 1, 1, 0]]
    assert d["lattice"] is None


def test_analyze_lifts_isolated_vertices():
    G = graph.from_edges(5, [(1, 2), (2, 3), (3, 4)])
    d = algebra.analyze(G, kmax=8).to_dict()
    assert d["n"] == 5 and all(len(v) == 5 for v in d["depth_witness"])


def test_analyze_unmixed_has_lattice():
    d = algebra.analyze(graph.whisker(graph.path(3)), kmax=8).to_dict()
    assert d["unmixed"] and d["lattice"]["rank"] == d["dim_estimate"] == 4
