"""Distributive lattices: basic 1-covers of unmixed graphs and ideals of posets.

For an unmixed bipartite graph the basic 1-covers, ordered by their values on
A, form a distributive lattice with join = (max on A, min on B) and meet the
reverse.  Its rank (longest chain, counted in elements) and number of maximal
chains are the dimension and multiplicity of the fiber cone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations, product
from math import comb
from typing import Callable, Hashable, Iterator, Sequence

import networkx as nx

from basiccovers.covers import Cover, enumerate_basic
from basiccovers.errors import ClosureViolation, InvalidParameters, NotUnmixed
from basiccovers.graph import BipartiteGraph


@dataclass(frozen=True)
class FiniteLattice:
    """A finite lattice given by explicit join/meet tables on indexed elements."""

    elements: tuple[Hashable, ...]
    leq: tuple[tuple[bool, ...], ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def hasse(self) -> tuple[tuple[int, int], ...]:
        """Covering pairs (lower index, upper index)."""
        n = len(self.elements)
        le = self.leq
        out = []
        for x in range(n):
            for y in range(n):
                if x == y or not le[x][y]:
                    continue
                if not any(z != x and z != y and le[x][z] and le[z][y] for z in range(n)):
                    out.append((x, y))
        return tuple(sorted(out))

    def hasse_digraph(self) -> nx.DiGraph:
        D = nx.DiGraph()
        D.add_nodes_from(range(len(self.elements)))
        D.add_edges_from(self.hasse)
        return D

    @cached_property
    def _chains(self) -> tuple[int, int]:
        n = len(self.elements)
        ups: list[list[int]] = [[] for _ in range(n)]
        indeg = [0] * n
        for x, y in self.hasse:
            ups[x].append(y)
            indeg[y] += 1
        order = list(nx.topological_sort(self.hasse_digraph()))
        longest = [1] * n
        count = [1 if indeg[x] == 0 else 0 for x in range(n)]
        for x in order:
            for y in ups[x]:
                longest[y] = max(longest[y], longest[x] + 1)
                count[y] += count[x]
        tops = [x for x in range(n) if not ups[x]]
        return max(longest), sum(count[x] for x in tops)

    @property
    def rank(self) -> int:
        """Maximum number of elements in a chain."""
        return self._chains[0]

    @property
    def maximal_chain_count(self) -> int:
        return self._chains[1]

    def join_irreducibles(self) -> list[int]:
        """Elements covering exactly one element."""
        below = [0] * len(self.elements)
        for _, y in self.hasse:
            below[y] += 1
        return [x for x in range(len(self.elements)) if below[x] == 1]

    def to_dict(self) -> dict:
        return {
            "size": len(self.elements),
            "hasse": [list(e) for e in self.hasse],
            "rank": self.rank,
            "maximal_chain_count": str(self.maximal_chain_count),
        }


def _tabulate(
    elements: Sequence[Hashable],
    le: Callable[[Hashable, Hashable], bool],
    join: Callable[[Hashable, Hashable], Hashable],
    meet: Callable[[Hashable, Hashable], Hashable],
) -> FiniteLattice:
    """Build tables, checking closure and distributivity on every pair and triple."""
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    leq = tuple(tuple(le(x, y) for y in elements) for x in elements)
    J = [[0] * n for _ in range(n)]
    M = [[0] * n for _ in range(n)]
    for i, j in product(range(n), repeat=2):
        x, y = elements[i], elements[j]
        jx, mx = join(x, y), meet(x, y)
        if jx not in index or mx not in index:
            raise ClosureViolation(f"join or meet of {x} and {y} is not an element")
        J[i][j], M[i][j] = index[jx], index[mx]
    for x, y, z in product(range(n), repeat=3):
        if M[x][J[y][z]] != J[M[x][y]][M[x][z]]:
            raise ClosureViolation(f"distributivity fails on {elements[x]}, {elements[y]}, {elements[z]}")
    return FiniteLattice(tuple(elements), leq, tuple(map(tuple, J)), tuple(map(tuple, M)))


# ------------------------------------------------------------ cover lattice


@dataclass(frozen=True)
class CoverLattice:
    G: BipartiteGraph
    lattice: FiniteLattice

    @property
    def elements(self) -> tuple[Cover, ...]:
        return self.lattice.elements

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def maximal_chain_count(self) -> int:
        return self.lattice.maximal_chain_count

    @property
    def hasse(self) -> tuple[tuple[int, int], ...]:
        return self.lattice.hasse

    def join(self, x: Cover, y: Cover) -> Cover:
        return _cover_join(self.G, x, y)

    def meet(self, x: Cover, y: Cover) -> Cover:
        return _cover_meet(self.G, x, y)


def _cover_join(G: BipartiteGraph, x: Cover, y: Cover) -> Cover:
    return Cover(1, tuple(max(p, q) if v in G.A else min(p, q) for v, p, q in zip(G.vertices, x.values, y.values)))


def _cover_meet(G: BipartiteGraph, x: Cover, y: Cover) -> Cover:
    return Cover(1, tuple(min(p, q) if v in G.A else max(p, q) for v, p, q in zip(G.vertices, x.values, y.values)))


def build_lattice(G: BipartiteGraph, one_covers: Sequence[Cover] | None = None) -> CoverLattice:
    if G.isolated:
        raise InvalidParameters("strip isolated vertices before building the lattice")
    covers = list(enumerate_basic(G, 1).covers if one_covers is None else one_covers)
    if len({sum(c.values) for c in covers}) != 1:
        raise NotUnmixed("basic 1-covers have different sizes")
    if G.a != G.b:
        raise NotUnmixed(f"unmixed graph without isolated vertices must have |A| = |B|, got {G.a} and {G.b}")
    avs = sorted(G.A)

    def le(x: Cover, y: Cover) -> bool:
        return all(x[i] <= y[i] for i in avs)

    lat = _tabulate(covers, le, lambda x, y: _cover_join(G, x, y), lambda x, y: _cover_meet(G, x, y))
    return CoverLattice(G, lat)


def rank_and_chains(L: CoverLattice | FiniteLattice) -> tuple[int, int]:
    return L.rank, L.maximal_chain_count


def hibi_relations(L: CoverLattice) -> list[tuple[Cover, Cover, Cover, Cover]]:
    """(a, b, a v b, a ^ b) for each unordered incomparable pair."""
    lat = L.lattice
    out = []
    for i, j in combinations(range(len(lat)), 2):
        if lat.leq[i][j] or lat.leq[j][i]:
            continue
        els = lat.elements
        out.append((els[i], els[j], els[lat.join[i][j]], els[lat.meet[i][j]]))
    return out


def lattice_to_dict(L: CoverLattice) -> dict:
    d = L.lattice.to_dict()
    return {"elements": [list(c.values) for c in L.elements], **d}


def lattice_to_json(L: CoverLattice) -> str:
    return json.dumps(lattice_to_dict(L), separators=(",", ":"))


# ------------------------------------------------------------ posets


@dataclass(frozen=True)
class FinitePoset:
    m: int
    rel: tuple[tuple[bool, ...], ...]  # rel[i][j]: element i+1 <= element j+1

    def __post_init__(self):
        m, R = self.m, self.rel
        if len(R) != m or any(len(row) != m for row in R):
            raise InvalidParameters("relation matrix has the wrong shape")
        for i in range(m):
            if not R[i][i]:
                raise InvalidParameters("relation is not reflexive")
            for j in range(m):
                if i != j and R[i][j] and R[j][i]:
                    raise InvalidParameters(f"relation is not antisymmetric at {i + 1}, {j + 1}")
                for k in range(m):
                    if R[i][j] and R[j][k] and not R[i][k]:
                        raise InvalidParameters("relation is not transitive")

    def leq(self, i: int, j: int) -> bool:
        return self.rel[i - 1][j - 1]

    @classmethod
    def from_relations(cls, m: int, pairs: Sequence[tuple[int, int]]) -> "FinitePoset":
        """Reflexive-transitive closure of the given (smaller, larger) pairs."""
        R = [[i == j for j in range(m)] for i in range(m)]
        for i, j in pairs:
            if not (1 <= i <= m and 1 <= j <= m):
                raise InvalidParameters(f"pair {(i, j)} out of range")
            R[i - 1][j - 1] = True
        for k in range(m):
            for i in range(m):
                if R[i][k]:
                    for j in range(m):
                        if R[k][j]:
                            R[i][j] = True
        return cls(m, tuple(map(tuple, R)))

    @classmethod
    def chain(cls, m: int) -> "FinitePoset":
        return cls.from_relations(m, [(i, i + 1) for i in range(1, m)])

    @classmethod
    def antichain(cls, m: int) -> "FinitePoset":
        return cls.from_relations(m, [])

    def covers(self) -> list[tuple[int, int]]:
        m = self.m
        return [
            (i, j)
            for i in range(1, m + 1)
            for j in range(1, m + 1)
            if i != j
            and self.leq(i, j)
            and not any(k not in (i, j) and self.leq(i, k) and self.leq(k, j) for k in range(1, m + 1))
        ]

    def maximal_chain_lengths(self) -> set[int]:
        """Element counts of all maximal chains."""
        ups: dict[int, list[int]] = {i: [] for i in range(1, self.m + 1)}
        has_lower = set()
        for i, j in self.covers():
            ups[i].append(j)
            has_lower.add(j)
        out: set[int] = set()

        def walk(x: int, length: int) -> None:
            if not ups[x]:
                out.add(length)
            for y in ups[x]:
                walk(y, length + 1)

        for x in range(1, self.m + 1):
            if x not in has_lower:
                walk(x, 1)
        return out

    def is_pure(self) -> bool:
        return len(self.maximal_chain_lengths()) <= 1

    def canonical(self) -> tuple:
        """Isomorphism-invariant key: least relation matrix over all relabelings."""
        m = self.m
        return min(
            tuple(self.rel[p[i]][p[j]] for i in range(m) for j in range(m)) for p in permutations(range(m))
        )


def all_posets(m: int, up_to_isomorphism: bool = True) -> Iterator[FinitePoset]:
    """Every partial order on 1..m, optionally one per isomorphism class."""
    pairs = [(i, j) for i in range(m) for j in range(m) if i != j]
    seen = set()
    for bits in product((False, True), repeat=len(pairs)):
        R = [[i == j for j in range(m)] for i in range(m)]
        for (i, j), on in zip(pairs, bits):
            R[i][j] = on
        try:
            P = FinitePoset(m, tuple(map(tuple, R)))
        except InvalidParameters:
            continue
        if up_to_isomorphism:
            key = P.canonical()
            if key in seen:
                continue
            seen.add(key)
        yield P


def poset_ideals(P: FinitePoset) -> FiniteLattice:
    """Down-closed subsets ordered by inclusion; join = union, meet = intersection."""
    m = P.m
    ideals = []
    for bits in product((False, True), repeat=m):
        S = frozenset(i + 1 for i in range(m) if bits[i])
        if all(j in S for i in S for j in range(1, m + 1) if P.leq(j, i)):
            ideals.append(S)
    ideals.sort(key=lambda S: (len(S), sorted(S)))
    return _tabulate(ideals, lambda x, y: x <= y, lambda x, y: x | y, lambda x, y: x & y)


def gorenstein_test(P: FinitePoset) -> bool:
    """Gorenstein criterion for the Cohen-Macaulay graph G(P): P is pure."""
    return P.is_pure()


def join_irreducible_poset_is_pure(L: FiniteLattice) -> bool:
    """Purity of the subposet of join-irreducibles (isomorphic to P when L = J(P))."""
    irr = L.join_irreducibles()
    idx = {x: p + 1 for p, x in enumerate(irr)}
    pairs = [(idx[x], idx[y]) for x in irr for y in irr if x != y and L.leq[x][y]]
    return FinitePoset.from_relations(len(irr), pairs).is_pure()


def order_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    if len(L1) != len(L2):
        return False
    return nx.is_isomorphic(L1.hasse_digraph(), L2.hasse_digraph())


def h_vector(hf: Sequence[int], dim: int) -> list[int]:
    """Numerator coefficients of the Hilbert series, from HF(0), HF(1), ...

    h_i = sum_j (-1)^j C(dim, j) HF(i - j); needs len(hf) > dim.
    """
    if len(hf) <= dim:
        raise InvalidParameters(f"need HF(0..{dim}), got {len(hf)} values")
    h = [sum((-1) ** j * comb(dim, j) * hf[i - j] for j in range(0, min(i, dim) + 1)) for i in range(len(hf))]
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return h


def h_vector_symmetric(hf: Sequence[int], dim: int) -> bool:
    """Palindromic h-vector; for Cohen-Macaulay domains this is the Gorenstein property."""
    h = h_vector(hf, dim)
    return h == h[::-1]
