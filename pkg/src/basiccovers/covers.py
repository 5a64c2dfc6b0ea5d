"""k-covers of a bipartite graph: validity, lopping, enumeration, decomposition.

A k-cover is a nonzero vector a in N^n with a_i + a_j >= k on every edge.  It
is basic when no coordinate can be decremented ("lopped") while keeping it a
k-cover.  A basic k-cover is determined by its restriction to the A side:
every B-vertex j carries k - min(a_i : i ~ j).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from basiccovers.errors import (
    DecompositionNotFound,
    InvalidParameters,
    LengthMismatch,
    NoEdges,
    NotACover,
    NotBasic,
)
from basiccovers.graph import BipartiteGraph


@dataclass(frozen=True, order=True)
class Cover:
    k: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        if self.k < 0:
            raise InvalidParameters(f"cover degree must be >= 0, got {self.k}")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        """Value at vertex id v (1-based)."""
        return self.values[v - 1]

    def __add__(self, other: "Cover") -> "Cover":
        return cover_sum(self, other)

    def scaled(self, t: int) -> "Cover":
        return Cover(self.k * t, tuple(t * x for x in self.values))

    def to_text(self) -> str:
        return " ".join(str(x) for x in (self.k, *self.values))

    @classmethod
    def from_text(cls, text: str) -> "Cover":
        k, *vals = (int(x) for x in text.split())
        return cls(k, tuple(vals))


def cover_sum(c1: Cover, c2: Cover) -> Cover:
    if len(c1) != len(c2):
        raise LengthMismatch(f"cannot add covers of lengths {len(c1)} and {len(c2)}")
    return Cover(c1.k + c2.k, tuple(x + y for x, y in zip(c1.values, c2.values)))


def _check_length(G: BipartiteGraph, c: Cover) -> None:
    if len(c.values) != G.n:
        raise LengthMismatch(f"cover has {len(c.values)} entries, graph has {G.n} vertices")


def is_cover(G: BipartiteGraph, c: Cover) -> bool:
    _check_length(G, c)
    vals = c.values
    if any(x < 0 for x in vals) or not any(vals):
        return False
    k = c.k
    return all(vals[u - 1] + vals[v - 1] >= k for u, v in G.edges)


def lop_positions(G: BipartiteGraph, c: Cover) -> set[int]:
    """Vertices at which `c` can be decremented and stay a k-cover."""
    if not is_cover(G, c):
        raise NotACover(f"{c.values} is not a {c.k}-cover")
    vals, k = c.values, c.k
    total = sum(vals)
    out = set()
    for i in G.vertices:
        x = vals[i - 1]
        if x == 0 or total == 1:
            # total == 1: decrementing would give the zero vector
            continue
        if all(x + vals[j - 1] > k for j in G.adj[i]):
            out.add(i)
    return out


def is_basic(G: BipartiteGraph, c: Cover) -> bool:
    if c.k == 0:
        raise InvalidParameters("basic 0-covers are not defined")
    return not lop_positions(G, c)


@dataclass(frozen=True)
class CoverSet:
    k: int
    covers: tuple[Cover, ...]

    @property
    def count(self) -> int:
        return len(self.covers)

    def __len__(self) -> int:
        return len(self.covers)

    def __iter__(self) -> Iterator[Cover]:
        return iter(self.covers)

    def to_json(self) -> str:
        return json.dumps(
            {"k": self.k, "count": self.count, "covers": [list(c.values) for c in self.covers]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "CoverSet":
        data = json.loads(text)
        k = data["k"]
        return cls(k, tuple(Cover(k, tuple(v)) for v in data["covers"]))


class _Search:
    """Depth-first search over A-side assignments with tightness pruning.

    A positive A-vertex i must be tight against some neighbour j, which under
    the forced B completion means a_i = min(a over N(j)).  Once every
    neighbour j of i already sees a smaller assigned value, i is dead.
    """

    def __init__(self, G: BipartiteGraph, k: int):
        if not G.edges:
            raise NoEdges("graph has no edges")
        if k < 1:
            raise InvalidParameters(f"enumeration needs k >= 1, got {k}")
        self.G, self.k = G, k
        order = sorted((v for v in G.A if G.adj[v]), key=lambda v: (-len(G.adj[v]), v))
        self.order = order
        pos = {v: p for p, v in enumerate(order)}
        bverts = sorted(v for v in G.B if G.adj[v])
        bpos = {v: p for p, v in enumerate(bverts)}
        self.bverts = bverts
        self.a_nbrs = [[bpos[j] for j in sorted(G.adj[v])] for v in order]
        self.b_nbrs = [[pos[i] for i in sorted(G.adj[j])] for j in bverts]
        # A-vertices sharing a B-neighbour, restricted to earlier positions
        self.earlier_sq = [
            sorted({q for j in self.a_nbrs[p] for q in self.b_nbrs[j] if q < p}) for p in range(len(order))
        ]

    def run(self, root_values: Sequence[int] | None = None) -> Iterator[list[int]]:
        """Yield A-side value lists (in self.order) of all basic k-covers."""
        k = self.k
        m = len(self.order)
        vals = [0] * m
        curmin = [k + 1] * len(self.bverts)
        a_nbrs, b_nbrs, earlier = self.a_nbrs, self.b_nbrs, self.earlier_sq

        def alive(p: int) -> bool:
            x = vals[p]
            return x == 0 or any(curmin[j] >= x for j in a_nbrs[p])

        def rec(p: int):
            if p == m:
                yield vals
                return
            choices = root_values if (p == 0 and root_values is not None) else range(k + 1)
            for x in choices:
                vals[p] = x
                saved = [curmin[j] for j in a_nbrs[p]]
                for j in a_nbrs[p]:
                    if x < curmin[j]:
                        curmin[j] = x
                ok = alive(p)
                if ok:
                    for q in earlier[p]:
                        if vals[q] > x and not alive(q):
                            ok = False
                            break
                if ok:
                    yield from rec(p + 1)
                for j, s in zip(a_nbrs[p], saved):
                    curmin[j] = s

        if m == 0:
            return
        yield from rec(0)

    def to_cover(self, avals: Sequence[int]) -> Cover:
        G, k = self.G, self.k
        full = [0] * G.n
        for v, x in zip(self.order, avals):
            full[v - 1] = x
        for j in self.bverts:
            full[j - 1] = k - min(full[i - 1] for i in G.adj[j])
        return Cover(k, tuple(full))


def _root_split(k: int, workers: int) -> list[list[int]]:
    return [list(range(w, k + 1, workers)) for w in range(workers)]


def _enum_chunk(args):
    G, k, roots = args
    s = _Search(G, k)
    return [s.to_cover(v).values for v in s.run(roots)]


def _count_chunk(args):
    G, k, roots = args
    return sum(1 for _ in _Search(G, k).run(roots))


def enumerate_basic(G: BipartiteGraph, k: int, workers: int = 1) -> CoverSet:
    """All basic k-covers of G, sorted lexicographically by value vector.

    With workers > 1 the values of the first A-vertex are split across
    processes; the merged result is identical for any worker count.
    """
    s = _Search(G, k)
    if workers <= 1:
        vecs = [s.to_cover(v).values for v in s.run()]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as ex:
            parts = ex.map(_enum_chunk, [(G, k, r) for r in _root_split(k, workers)])
            vecs = [v for part in parts for v in part]
    vecs.sort()
    return CoverSet(k, tuple(Cover(k, v) for v in vecs))


def count_basic(G: BipartiteGraph, k: int, workers: int = 1) -> int:
    """Number of basic k-covers, without materialising them."""
    if workers <= 1:
        return sum(1 for _ in _Search(G, k).run())
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(workers) as ex:
        return sum(ex.map(_count_chunk, [(G, k, r) for r in _root_split(k, workers)]))


def b_side_completion(G: BipartiteGraph, a_side: Mapping[int, int], k: int) -> Cover | None:
    """Complete an A-side assignment by b_j = k - min over neighbours.

    Returns None (reject) when the result is not a basic k-cover.  Vertices
    of A missing from `a_side` get 0.
    """
    for j in G.B:
        if not G.adj[j]:
            raise InvalidParameters(f"B-vertex {j} is isolated; strip isolated vertices first")
    full = [0] * G.n
    for i, x in a_side.items():
        if i not in G.A:
            raise InvalidParameters(f"vertex {i} is not on the A side")
        full[i - 1] = x
    for j in G.B:
        full[j - 1] = k - min(full[i - 1] for i in G.adj[j])
    c = Cover(k, tuple(full))
    if not is_cover(G, c) or not is_basic(G, c):
        return None
    return c


def decompose_into_one_covers(
    G: BipartiteGraph, c: Cover, one_covers: Sequence[Cover] | None = None
) -> list[Cover]:
    """Split a basic k-cover into k basic 1-covers (backtracking)."""
    if c.k < 1:
        raise InvalidParameters("decomposition needs k >= 1")
    if not is_cover(G, c) or not is_basic(G, c):
        raise NotBasic(f"{c.values} is not a basic {c.k}-cover")
    if one_covers is None:
        one_covers = enumerate_basic(G, 1).covers
    edges = [(u - 1, v - 1) for u, v in G.edges]

    def rec(rest: tuple[int, ...], k: int, start: int) -> list[Cover] | None:
        if k == 1:
            cand = Cover(1, rest)
            return [cand] if cand in one_set else None
        for idx in range(start, len(one_covers)):
            d = one_covers[idx].values
            diff = tuple(x - y for x, y in zip(rest, d))
            if min(diff) < 0 or not any(diff):
                continue
            if any(diff[u] + diff[v] < k - 1 for u, v in edges):
                continue
            tail = rec(diff, k - 1, idx)
            if tail is not None:
                return [one_covers[idx]] + tail
        return None

    one_set = set(one_covers)
    out = rec(c.values, c.k, 0)
    if out is None:
        raise DecompositionNotFound(f"no decomposition of {c.values} into basic 1-covers")
    return out
