"""Invariants of the basic-cover algebra computed from the combinatorics of G.

Hilbert function and finite-difference estimates of dimension and
multiplicity, the weak square condition (domain test), zero-divisor and
non-zero-divisor tests, unmixedness, the depth-2 witness and upper bounds
for the arithmetical rank.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Sequence

from basiccovers.covers import Cover, count_basic, enumerate_basic, is_basic, is_cover
from basiccovers.errors import NoEdges, NotAnEdge, NotATree, NotBasic
from basiccovers.graph import BipartiteGraph, strip_isolated


def _require_edges(G: BipartiteGraph) -> None:
    if not G.edges:
        raise NoEdges("graph has no edges")


# ------------------------------------------------------------ Hilbert function


def differences(seq: Sequence[int], order: int) -> list[int]:
    out = list(seq)
    for _ in range(order):
        out = [y - x for x, y in zip(out, out[1:])]
    return out


def stabilize(counts: Sequence[int], window: int = 3) -> tuple[int | None, int | None]:
    """Smallest d whose d-th differences are constant on the last `window` values.

    Returns (d, constant) or (None, None) when no order fits in the data.
    """
    for d in range(len(counts)):
        diffs = differences(counts, d)
        if len(diffs) < window:
            break
        tail = diffs[-window:]
        if len(set(tail)) == 1:
            return d, tail[0]
    return None, None


@dataclass(frozen=True)
class HilbertProfile:
    counts: tuple[int, ...]  # counts[k-1] = HF(k)
    window: int
    stabilized_degree: int | None
    multiplicity: int | None

    @property
    def kmax(self) -> int:
        return len(self.counts)

    @property
    def k_range(self) -> range:
        return range(1, self.kmax + 1)

    @property
    def stable(self) -> bool:
        return self.stabilized_degree is not None

    @property
    def dim(self) -> int | None:
        return None if self.stabilized_degree is None else self.stabilized_degree + 1

    def hf(self, k: int) -> int:
        return 1 if k == 0 else self.counts[k - 1]

    def to_dict(self) -> dict:
        return {
            "kmax": self.kmax,
            "counts": list(self.counts),
            "window": self.window,
            "stable": self.stable,
            "stabilized_degree": self.stabilized_degree,
            "dim": self.dim,
            "multiplicity": self.multiplicity,
        }


def profile_from_counts(counts: Sequence[int], window: int = 3) -> HilbertProfile:
    d, e = stabilize(counts, window)
    if d is not None and e < 1:
        d, e = None, None
    return HilbertProfile(tuple(counts), window, d, e)


def hilbert_function(G: BipartiteGraph, kmax: int, window: int = 3, workers: int = 1) -> HilbertProfile:
    """HF(k) = number of basic k-covers for k = 1..kmax, with stabilised differences.

    HF(0) = 1 by convention and takes no part in the stabilisation.
    """
    _require_edges(G)
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as ex:
            counts = list(ex.map(count_basic, [G] * kmax, range(1, kmax + 1)))
    else:
        counts = [count_basic(G, k) for k in range(1, kmax + 1)]
    return profile_from_counts(counts, window)


# ------------------------------------------------------------ domain tests


@dataclass(frozen=True)
class WscResult:
    holds: bool
    witnesses: dict[int, tuple[int, int]] = field(default_factory=dict)
    violator: int | None = None

    def __bool__(self) -> bool:
        return self.holds


def always_tight_edge(G: BipartiteGraph, i: int, j: int) -> bool:
    """Every neighbour of i is adjacent to every neighbour of j.

    Equivalent to: a_i + a_j = 1 in every basic 1-cover.
    """
    if not G.has_edge(i, j):
        raise NotAnEdge(f"{{{i},{j}}} is not an edge")
    adj = G.adj
    return all(i2 in adj[j2] for i2 in adj[i] for j2 in adj[j])


def satisfies_wsc(G: BipartiteGraph) -> WscResult:
    """Weak square condition, with one witness edge per non-isolated vertex."""
    witnesses = {}
    for i in G.vertices:
        if not G.adj[i]:
            continue
        for j in sorted(G.adj[i]):
            if always_tight_edge(G, i, j):
                witnesses[i] = (i, j)
                break
        else:
            return WscResult(False, violator=i)
    return WscResult(True, witnesses)


def domain_criterion_via_covers(G: BipartiteGraph, one_covers: Sequence[Cover] | None = None) -> bool:
    """Every non-isolated i has an edge {i,j} with c_i + c_j = 1 in all basic 1-covers."""
    _require_edges(G)
    covers = enumerate_basic(G, 1).covers if one_covers is None else one_covers
    for i in G.vertices:
        if not G.adj[i]:
            continue
        if not any(all(c[i] + c[j] == 1 for c in covers) for j in G.adj[i]):
            return False
    return True


def zero_divisor_witness(G: BipartiteGraph, m_max: int = 4) -> list[Cover] | None:
    """m basic 1-covers (2 <= m <= m_max) whose sum is not basic, or None.

    Multisets are searched smallest m first and, within each m, in
    lexicographic order over the covers sorted in decreasing order.  The
    witness is returned sorted increasingly.
    """
    _require_edges(G)
    covers = sorted(enumerate_basic(G, 1).covers, reverse=True)
    for m in range(2, m_max + 1):
        for combo in combinations_with_replacement(covers, m):
            total = combo[0]
            for c in combo[1:]:
                total = total + c
            if not is_basic(G, total):
                return sorted(combo)
    return None


def is_unmixed(G: BipartiteGraph, one_covers: Sequence[Cover] | None = None) -> bool:
    _require_edges(G)
    covers = enumerate_basic(G, 1).covers if one_covers is None else one_covers
    return len({sum(c.values) for c in covers}) == 1


def _require_tree(T: BipartiteGraph) -> None:
    if not T.is_tree():
        raise NotATree("graph is not a tree")


def tree_domain_test(T: BipartiteGraph) -> bool:
    """Every vertex is a leaf or adjacent to a leaf."""
    _require_tree(T)
    leaves = set(T.leaves())
    return all(v in leaves or T.adj[v] & leaves for v in T.vertices)


def tree_unmixed_test(T: BipartiteGraph) -> bool:
    """n even and T is a whisker tree: leaves matched one-to-one onto the other n/2 vertices."""
    _require_tree(T)
    if T.n % 2:
        return False
    if T.n == 2:
        return True
    leaves = T.leaves()
    anchors = {next(iter(T.adj[v])) for v in leaves}
    return len(leaves) == T.n // 2 and len(anchors) == len(leaves) and anchors.isdisjoint(leaves)


# ------------------------------------------------------------ non-zero-divisors


def _check_basic(G: BipartiteGraph, b: Cover) -> None:
    if not is_cover(G, b) or not is_basic(G, b):
        raise NotBasic(f"{b.values} is not a basic {b.k}-cover")


def slack_edges(G: BipartiteGraph, b: Cover) -> list[tuple[int, int]]:
    return [(i, j) for i, j in G.edges if b[i] + b[j] > b.k]


def nonzerodivisor_test(G: BipartiteGraph, b: Cover) -> bool:
    """Graph-side criterion: each slack edge {i,j} has always-tight edges at both ends."""
    _check_basic(G, b)
    for i, j in slack_edges(G, b):
        if not any(always_tight_edge(G, i, i2) for i2 in G.adj[i]):
            return False
        if not any(always_tight_edge(G, j, j2) for j2 in G.adj[j]):
            return False
    return True


def nonzerodivisor_test_via_covers(G: BipartiteGraph, b: Cover, one_covers: Sequence[Cover] | None = None) -> bool:
    """Cover-side criterion: the always-tight property checked on the basic 1-covers."""
    _check_basic(G, b)
    covers = enumerate_basic(G, 1).covers if one_covers is None else one_covers

    def tight(u: int, w: int) -> bool:
        return all(c[u] + c[w] == 1 for c in covers)

    for i, j in slack_edges(G, b):
        if not any(tight(i, i2) for i2 in G.adj[i]) or not any(tight(j, j2) for j2 in G.adj[j]):
            return False
    return True


def sum_stays_basic_sampled(G: BipartiteGraph, b: Cover, kprime_max: int) -> bool:
    """b + c is basic for every basic k'-cover c with k' <= kprime_max.

    A bounded necessary check for b being a non-zero-divisor.
    """
    _require_edges(G)
    _check_basic(G, b)
    return sum_stays_basic_counterexample(G, b, kprime_max) is None


def sum_stays_basic_counterexample(G: BipartiteGraph, b: Cover, kprime_max: int) -> Cover | None:
    """First basic k'-cover c with b + c not basic; smallest k' first, decreasing lex order within."""
    for kp in range(1, kprime_max + 1):
        for c in reversed(enumerate_basic(G, kp).covers):
            if not is_basic(G, b + c):
                return c
    return None


def depth_witness(G: BipartiteGraph) -> tuple[Cover, Cover]:
    """Indicator 1-covers of the A side and the B side (isolated vertices get 0)."""
    _require_edges(G)
    a = tuple(1 if (v in G.A and G.adj[v]) else 0 for v in G.vertices)
    b = tuple(1 if (v in G.B and G.adj[v]) else 0 for v in G.vertices)
    return Cover(1, a), Cover(1, b)


def is_tight_everywhere(G: BipartiteGraph, c: Cover) -> bool:
    return all(c[i] + c[j] == c.k for i, j in G.edges)


# ------------------------------------------------------------ bounds


@dataclass(frozen=True)
class DegreeBound:
    s: int
    bound: int
    multiplicity_bound: int  # only meaningful when dim equals `bound`
    swapped_s: int | None = None
    swapped_bound: int | None = None  # extension: same argument with the sides exchanged


def dim_bound_degree(G: BipartiteGraph, extension: bool = False) -> DegreeBound:
    """dim <= a - s + 2 with s the minimum degree on the B side."""
    H, _ = strip_isolated(G)
    a = H.a
    s = min(H.degree(j) for j in H.B)
    out = DegreeBound(s=s, bound=a - s + 2, multiplicity_bound=comb(a, s) * factorial(a - s))
    if extension:
        s2 = min(H.degree(i) for i in H.A)
        out = DegreeBound(out.s, out.bound, out.multiplicity_bound, s2, H.b - s2 + 2)
    return out


def ara_upper_bounds(
    G: BipartiteGraph,
    gdim_value: int | None = None,
    profile: HilbertProfile | None = None,
    lattice_rank: int | None = None,
) -> list[tuple[int, str]]:
    """Upper bounds for the arithmetical rank of the Alexander dual of the edge ideal.

    Provenance tags: "gdim" (trees), "a-s+2" (minimum B-degree bound), "rank(L)" (unmixed),
    "dim" (stable Hilbert profile).  Sorted by value; the first is the minimum.
    """
    H, _ = strip_isolated(G)
    out = []
    if H.is_tree():
        if gdim_value is None:
            from basiccovers.drawing import gdim

            gdim_value = gdim(H).value
        out.append((gdim_value, "gdim"))
    out.append((dim_bound_degree(H).bound, "a-s+2"))
    if lattice_rank is None and is_unmixed(H):
        from basiccovers.lattice import build_lattice

        lattice_rank = build_lattice(H).rank
    if lattice_rank is not None:
        out.append((lattice_rank, "rank(L)"))
    if profile is not None and profile.stable:
        out.append((profile.dim, "dim"))
    return sorted(out)


# ------------------------------------------------------------ report


@dataclass
class AlgebraReport:
    n: int
    a: int
    b: int
    wsc: bool
    domain: bool
    unmixed: bool
    hilbert: HilbertProfile
    gdim: int
    dim_upper_bounds: dict
    zero_divisor_witness: list[Cover] | None
    depth_witness: tuple[Cover, Cover]
    ara_upper_bounds: list[tuple[int, str]]
    lattice: dict | None = None

    @property
    def dim_estimate(self) -> int | None:
        return self.hilbert.dim

    @property
    def dim_range(self) -> tuple[int, int]:
        if self.hilbert.stable:
            return (self.hilbert.dim, self.hilbert.dim)
        return (self.gdim, self.dim_upper_bounds["a+1"])

    def to_dict(self) -> dict:
        ara_min = self.ara_upper_bounds[0] if self.ara_upper_bounds else None
        return {
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "wsc": self.wsc,
            "domain": self.domain,
            "unmixed": self.unmixed,
            "dim_estimate": self.dim_estimate,
            "stable": self.hilbert.stable,
            "dim_range": list(self.dim_range),
            "multiplicity_estimate": self.hilbert.multiplicity,
            "hilbert": self.hilbert.to_dict(),
            "gdim": self.gdim,
            "gdim_below_dim": bool(self.hilbert.stable and self.gdim < self.hilbert.dim),
            "dim_upper_bounds": self.dim_upper_bounds,
            "zero_divisor_witness": None
            if self.zero_divisor_witness is None
            else [list(c.values) for c in self.zero_divisor_witness],
            "depth_witness": [list(c.values) for c in self.depth_witness],
            "ara_upper_bound": None
            if ara_min is None
            else {
                "value": ara_min[0],
                "provenance": [tag for v, tag in self.ara_upper_bounds if v == ara_min[0]],
                "all": [{"bound": v, "provenance": tag} for v, tag in self.ara_upper_bounds],
            },
            "lattice": self.lattice,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def analyze(G: BipartiteGraph, kmax: int = 12, m_max: int = 4, window: int = 3, workers: int = 1) -> AlgebraReport:
    from basiccovers.drawing import gdim
    from basiccovers.lattice import build_lattice, lattice_to_dict

    H, _ = strip_isolated(G)
    keep = [v for v in G.vertices if G.adj[v]]

    def lift(c: Cover) -> Cover:
        full = [0] * G.n
        for new, old in enumerate(keep):
            full[old - 1] = c.values[new]
        return Cover(c.k, tuple(full))

    ones = enumerate_basic(H, 1).covers
    wsc = satisfies_wsc(H).holds
    unmixed = is_unmixed(H, ones)
    profile = hilbert_function(H, kmax, window=window, workers=workers)
    g = gdim(H).value
    deg = dim_bound_degree(H)
    lattice = build_lattice(H) if unmixed else None
    return AlgebraReport(
        n=G.n,
        a=H.a,
        b=H.b,
        wsc=wsc,
        domain=domain_criterion_via_covers(H, ones),
        unmixed=unmixed,
        hilbert=profile,
        gdim=g,
        dim_upper_bounds={"a+1": H.a + 1, "a-s+2": deg.bound},
        zero_divisor_witness=None if wsc else _lift_all(zero_divisor_witness(H, m_max), lift),
        depth_witness=depth_witness(G),
        ara_upper_bounds=ara_upper_bounds(H, g if H.is_tree() else None, profile, lattice.rank if lattice else None),
        lattice=lattice_to_dict(lattice) if lattice else None,
    )


def _lift_all(covers, lift):
    return None if covers is None else [lift(c) for c in covers]
