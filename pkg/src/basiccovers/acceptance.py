"""The fifteen acceptance criteria as self-contained checks.

Each check builds its own graphs and returns (passed, detail).  The CLI
`verify` subcommand and tests/test_acceptance.py both run these.
"""

from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb, factorial, perm
from typing import Callable, TextIO

import networkx as nx

from basiccovers import algebra, drawing, graph, hypergraph, lattice, oracles
from basiccovers.covers import Cover, count_basic, enumerate_basic, is_basic, is_cover
from basiccovers.errors import Budget, Unstable
from basiccovers.graph import BipartiteGraph


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    check: Callable[[], tuple[bool, str]]


def _profile(G: BipartiteGraph, extra: int = 3) -> algebra.HilbertProfile:
    """Hilbert profile with kmax = exact dim + extra, so the window of 3 is reachable."""
    dim, _ = oracles.dim_and_multiplicity_exact(G)
    return algebra.hilbert_function(G, dim + extra)


# ------------------------------------------------------------ 1..8: named examples


def hexagon() -> tuple[bool, str]:
    G = graph.cycle(6)
    ones = enumerate_basic(G, 1).covers
    prof = _profile(G)
    wsc = algebra.satisfies_wsc(G).holds
    wit = algebra.zero_divisor_witness(G, 2)
    intro = [Cover(1, (1, 0, 1, 1, 0, 1)), Cover(1, (1, 1, 0, 1, 1, 0))]
    total = intro[0] + intro[1]
    da, db = algebra.depth_witness(G)
    nzd = algebra.nonzerodivisor_test(G, da) and algebra.nonzerodivisor_test(G, db)
    ok = (
        len(ones) == 5
        and prof.dim == 3
        and prof.multiplicity == 3
        and not wsc
        and wit == intro
        and total.values == (2, 1, 1, 2, 1, 1)
        and not is_basic(G, total)
        and nzd
    )
    detail = (
        f"N={len(ones)} dim={prof.dim} e={prof.multiplicity} wsc={wsc} "
        f"witness={[c.values for c in wit] if wit else None} depth_nzd={nzd}"
    )
    return ok, detail


def even_cycles() -> tuple[bool, str]:
    ok, parts = True, []
    for a in range(2, 7):
        G = graph.cycle(2 * a)
        g = drawing.gdim(G).value
        prof = _profile(G)
        bound = comb(a, 2) * factorial(a - 2)
        good = g == a and prof.dim == a and prof.multiplicity <= bound
        if a == 3:
            good = good and prof.multiplicity == 3
        ok &= good
        parts.append(f"C{2 * a}:gdim={g},dim={prof.dim},e={prof.multiplicity}<={bound}")
    return ok, " ".join(parts)


def paths() -> tuple[bool, str]:
    ok, parts = True, []
    for n in range(2, 10):
        G = graph.path(n)
        g = drawing.gdim(G).value
        d = _profile(G).dim
        ok &= g == d == n // 2 + 1
        parts.append(f"P{n}:{g}/{d}")
    return ok, " ".join(parts)


def complete_bipartite() -> tuple[bool, str]:
    ok, parts = True, []
    for a, b in [(1, 1), (2, 2), (2, 3), (3, 4)]:
        G = graph.complete_bipartite(a, b)
        prof = algebra.hilbert_function(G, 8)
        ones = count_basic(G, 1)
        good = ones == 2 and prof.dim == 2 and all(prof.hf(k) == k + 1 for k in range(1, 9))
        ok &= good
        parts.append(f"K{a},{b}:N={ones},dim={prof.dim}")
    return ok, " ".join(parts)


def regular_family() -> tuple[bool, str]:
    ok, parts = True, []
    for a in range(2, 6):
        G = graph.regular(a)
        ones = count_basic(G, 1)
        prof = _profile(G)
        ok &= ones == a + 2 and prof.dim == 3 and prof.multiplicity == a
        parts.append(f"a={a}:N={ones},dim={prof.dim},e={prof.multiplicity}")
    return ok, " ".join(parts)


def non_cm_path() -> tuple[bool, str]:
    G = graph.path(6)
    ones = count_basic(G, 1)
    g = drawing.gdim(G).value
    prof = _profile(G)
    dom = algebra.tree_domain_test(G)
    ok = ones == 5 and g == 4 and prof.dim == 4 and prof.multiplicity == 1 and not dom
    return ok, f"N={ones} gdim={g} dim={prof.dim} e={prof.multiplicity} tree_domain={dom}"


def c10_drawing() -> drawing.StandardDrawing:
    """C10 drawn with verticals t-t', backslashes t-(t+1)' and one slash 5-1'."""
    G = graph.from_edges(10, [(t, 5 + t) for t in range(1, 6)] + [(t, 6 + t) for t in range(1, 5)] + [(5, 6)])
    return drawing.StandardDrawing(G, (1, 2, 3, 4, 5), (6, 7, 8, 9, 10))


def c10() -> tuple[bool, str]:
    g = drawing.gdim(graph.cycle(10)).value
    D = c10_drawing()
    ok = g == 5 and D.r == 4 and D.G.num_components == 1 and drawing.gdim(D.G).value == 5
    return ok, f"gdim={g} r(drawn)={D.r}"


def caterpillars() -> tuple[bool, str]:
    ok, parts = True, []
    for r, a, b in [(2, 3, 3), (3, 4, 5), (4, 6, 6)]:
        G = graph.caterpillar(r, a, b)
        g = drawing.gdim(G).value
        ok &= g == r + 1
        parts.append(f"({r},{a},{b}):gdim={g}")
    G = graph.caterpillar(4, 6, 6)
    bounds = algebra.ara_upper_bounds(G, drawing.gdim(G).value, _profile(G))
    ok &= bounds[0][0] == 5
    parts.append(f"ara<={bounds[0][0]} via {bounds[0][1]}")
    return ok, " ".join(parts)


# ------------------------------------------------------------ 9..15: properties


def named_families() -> list[tuple[str, BipartiteGraph]]:
    out = [(f"C{2 * a}", graph.cycle(2 * a)) for a in range(2, 6)]
    out += [(f"P{n}", graph.path(n)) for n in range(2, 9)]
    out += [(f"K{a},{b}", graph.complete_bipartite(a, b)) for a, b in [(1, 1), (2, 2), (2, 3), (3, 4)]]
    out += [(f"R{a}", graph.regular(a)) for a in range(2, 6)]
    out += [(f"cat{t}", graph.caterpillar(*t)) for t in [(2, 3, 3), (3, 4, 5)]]
    out += [(f"W{m}", graph.whisker(graph.path(m))) for m in range(2, 5)]
    return out


def random_graphs(count: int, max_side: int, seed: int) -> list[BipartiteGraph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a, b = rng.randint(1, max_side), rng.randint(1, max_side)
        G = graph.random_bipartite(a, b, rng.uniform(0.2, 0.9), rng.randrange(2**32))
        if G.edges:
            out.append(graph.strip_isolated(G)[0])
    return out


def wsc_equivalence() -> tuple[bool, str]:
    ok = True
    mismatches = 0
    missing = []
    for name, G in named_families():
        w = algebra.satisfies_wsc(G).holds
        if w != algebra.domain_criterion_via_covers(G):
            mismatches += 1
            ok = False
        if not w and algebra.zero_divisor_witness(G, 4) is None:
            missing.append(name)
            ok = False
    rand = random_graphs(200, 5, seed=9)
    nonwsc = found = 0
    for G in rand:
        w = algebra.satisfies_wsc(G).holds
        if w != algebra.domain_criterion_via_covers(G):
            mismatches += 1
            ok = False
        if not w:
            nonwsc += 1
            found += algebra.zero_divisor_witness(G, 4) is not None
    rate = f"{found}/{nonwsc}" if nonwsc else "n/a"
    return ok, f"mismatches={mismatches} families_without_witness={missing} random_witness_rate={rate}"


def sandwich() -> tuple[bool, str]:
    ok = True
    bad = []
    connected = [G for _, G in named_families()] + [G for G in random_graphs(30, 4, seed=10) if G.is_connected()]
    for G in connected:
        g = drawing.gdim(G).value
        d = _profile(G).dim
        if not (g <= d <= G.a + 1):
            bad.append((G.n, g, d, G.a))
            ok = False
    rng = random.Random(11)
    union_bad = 0
    for _ in range(20):
        parts = []
        for _ in range(2):
            while True:
                H = graph.random_bipartite(rng.randint(1, 3), rng.randint(1, 3), 0.6, rng.randrange(2**32))
                H = graph.strip_isolated(H)[0] if H.edges else None
                if H is not None and H.is_connected():
                    break
            parts.append(H)
        U = graph.disjoint_union(*parts)
        p1, p2, pu = (_profile(X) for X in (parts[0], parts[1], U))
        k = min(p1.kmax, p2.kmax, pu.kmax)
        good = (
            pu.dim == p1.dim + p2.dim - 1
            and drawing.gdim(U).value == drawing.gdim(parts[0]).value + drawing.gdim(parts[1]).value - 1
            and all(pu.hf(j) == p1.hf(j) * p2.hf(j) for j in range(1, k + 1))
        )
        union_bad += not good
    ok &= union_bad == 0
    return ok, f"connected_checked={len(connected)} violations={bad} union_failures={union_bad}/20"


def injection() -> tuple[bool, str]:
    ok = True
    graphs = [graph.cycle(2 * a) for a in range(2, 6)] + [graph.path(n) for n in range(2, 10)]
    graphs += [graph.caterpillar(*t) for t in [(2, 3, 3), (3, 4, 5), (4, 6, 6)]]
    low = 0
    distinct_checked = 0
    for G in graphs:
        res = drawing.gdim(G)
        r = res.r
        prof = algebra.hilbert_function(G, 10)
        if any(comb(k + r, r) > prof.hf(k) for k in range(1, 11)):
            low += 1
            ok = False
        if r > 4:
            continue
        for k in range(1, 4):
            seen = set()
            for omega in combinations_with_replacement(range(k, -1, -1), r):
                c = drawing.descending_sequence_to_cover(G, res.drawing, omega, k)
                if not (is_cover(G, c) and is_basic(G, c)):
                    ok = False
                seen.add(c.values)
            if len(seen) != comb(k + r, r):
                ok = False
            distinct_checked += 1
    return ok, f"graphs={len(graphs)} lower_bound_failures={low} injection_cases={distinct_checked}"


def _base_trees(max_n: int) -> list[BipartiteGraph]:
    """One tree per isomorphism class on 1..max_n vertices."""
    out: list[BipartiteGraph] = [graph.from_edges(1, [])]
    for n in range(2, max_n + 1):
        seen: list[nx.Graph] = []
        for seq in _prufer_sequences(n):
            edges = graph.prufer_edges(n, seq)
            N = nx.Graph(edges)
            if any(nx.is_isomorphic(N, S) for S in seen):
                continue
            seen.append(N)
            out.append(graph.from_edges(n, edges))
    return out


def _prufer_sequences(n: int):
    return product(range(1, n + 1), repeat=n - 2)


def _lattice_matches(G: BipartiteGraph) -> tuple[bool, lattice.CoverLattice]:
    L = lattice.build_lattice(G)
    dim, e = oracles.dim_and_multiplicity_exact(G)
    prof = algebra.hilbert_function(G, dim + 3)
    return L.rank == prof.dim and L.maximal_chain_count == prof.multiplicity, L


def unmixed_lattice() -> tuple[bool, str]:
    ok = True
    bad = []
    trees = _base_trees(5)
    for T in trees:
        W = graph.whisker(T) if T.n > 1 else graph.from_edges(2, [(1, 2)])
        good, _ = _lattice_matches(W)
        if not good:
            bad.append(f"whisker(n={T.n})")
            ok = False
    posets = [P for m in range(1, 5) for P in lattice.all_posets(m)]
    gor_mismatch = 0
    for P in posets:
        G = graph.poset_graph(P)
        good, L = _lattice_matches(G)
        good &= lattice.order_isomorphic(L.lattice, lattice.poset_ideals(P))
        prof = algebra.hilbert_function(G, P.m + 4)
        hf = [1] + list(prof.counts)
        routes = {
            lattice.gorenstein_test(P),
            P.is_pure(),
            lattice.join_irreducible_poset_is_pure(L.lattice),
            lattice.h_vector_symmetric(hf, prof.dim),
        }
        if len(routes) != 1:
            gor_mismatch += 1
            good = False
        if not good:
            bad.append(f"poset{P.covers()}")
            ok = False
    return ok, f"whisker_trees={len(trees)} posets={len(posets)} failures={bad} gorenstein_mismatches={gor_mismatch}"


def suite_graphs_small() -> list[BipartiteGraph]:
    out = [G for _, G in named_families() if G.n <= 8]
    out += [graph.caterpillar(2, 3, 3)] + [G for G in random_graphs(10, 4, seed=13) if G.n <= 8]
    return out


def oracle_equivalence() -> tuple[bool, str]:
    ok = True
    graphs = suite_graphs_small()
    fails = 0
    for G in graphs:
        H = hypergraph.WeightedHypergraph.from_graph(G)
        for k in range(1, 4):
            fast = enumerate_basic(G, k)
            if [c.values for c in fast] != oracles.brute_force_basic(G, k):
                fails += 1
            if hypergraph.enumerate_basic_h(H, k).covers != fast.covers:
                fails += 1
    ok = fails == 0
    return ok, f"graphs={len(graphs)} k=1..3 mismatches={fails}"


def tree_formulas() -> tuple[bool, str]:
    dim_bad = mult_bad = leaves_bad = 0
    swapped_bad = 0
    for s in range(50):
        n = 2 + s % 11
        T = graph.random_tree(n, s)
        d, bound = drawing.tree_dim(T)
        prof = _profile(T)
        r = d - 1
        dim_bad += d != prof.dim
        mult_bad += prof.multiplicity > bound
        swapped_bad += prof.multiplicity > r ** (T.a - r) * perm(T.a, r)
        try:
            drawing.tree_optimal_leaves_right(T)
        except Exception:
            leaves_bad += 1
    ok = dim_bad == 0 and mult_bad == 0 and leaves_bad == 0
    detail = (
        f"dim_mismatch={dim_bad}/50 multiplicity_bound_violations={mult_bad}/50 "
        f"leaves_right_failures={leaves_bad}/50 (info: r^(a-r)*a!/(a-r)! violated {swapped_bad}/50)"
    )
    return ok, detail


def hypergraph_bounds() -> tuple[bool, str]:
    ok = True
    checked = skipped = 0
    bad = []
    periods: dict[int, int] = {}
    family = [hypergraph.simplex(n) for n in range(1, 5)]
    family += [hypergraph.random_antichain(3 + s % 4, 3, 2, s, max_size=3) for s in range(20)]
    for H in family:
        try:
            rep = hypergraph.degree_bounds_check(H, 8, kmax_limit=16)
        except Budget:
            skipped += 1
            continue
        except Unstable:
            bad.append((H.faces, "unstable"))
            ok = False
            continue
        checked += 1
        periods[rep.period] = periods.get(rep.period, 0) + 1
        if not rep.within_bounds:
            bad.append((H.faces, rep.degree, rep.lower, rep.upper))
            ok = False
    return ok, f"checked={checked} skipped_budget={skipped} periods={periods} failures={bad}"


CRITERIA = [
    Criterion(1, "hexagon", hexagon),
    Criterion(2, "even cycles", even_cycles),
    Criterion(3, "paths", paths),
    Criterion(4, "complete bipartite", complete_bipartite),
    Criterion(5, "regular family", regular_family),
    Criterion(6, "non-CM path", non_cm_path),
    Criterion(7, "C10 gdim", c10),
    Criterion(8, "caterpillars", caterpillars),
    Criterion(9, "WSC equivalence", wsc_equivalence),
    Criterion(10, "sandwich", sandwich),
    Criterion(11, "injection bound", injection),
    Criterion(12, "unmixed lattice", unmixed_lattice),
    Criterion(13, "oracle equivalence", oracle_equivalence),
    Criterion(14, "tree formulas", tree_formulas),
    Criterion(15, "hypergraph bounds", hypergraph_bounds),
]


def run(numbers: list[int] | None = None, out: TextIO | None = None) -> bool:
    """Run the selected criteria, one line each; True when all pass."""
    out = out or sys.stdout
    all_ok = True
    for c in CRITERIA:
        if numbers and c.number not in numbers:
            continue
        t0 = time.perf_counter()
        try:
            passed, detail = c.check()
        except Exception as exc:  # a crash counts as a failure, with the reason
            passed, detail = False, f"error: {type(exc).__name__}: {exc}"
        all_ok &= passed
        status = "PASS" if passed else "FAIL"
        print(f"[{status}] {c.number:2d} {c.title}: {detail} ({time.perf_counter() - t0:.1f}s)", file=out, flush=True)
    return all_ok
