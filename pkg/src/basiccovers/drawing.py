"""Standard drawings of bipartite graphs and the graphical dimension.

A standard drawing places A on a top row (positions 1..a, via `sigma`) and B
on a bottom row (positions 1..b, via `tau`).  Its r is the longest prefix of
vertical edges {sigma(t), tau(t)} with no slash edge from a top position
i <= r to a bottom position j < i.  Positions beyond r are unconstrained, so
max r equals the longest sequence of edges (u_1,v_1),...,(u_r,v_r) with the
u's distinct, the v's distinct and u_t not adjacent to any earlier v.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from math import perm
from typing import Sequence

from basiccovers.covers import Cover
from basiccovers.errors import (
    Budget,
    DrawingNotEligible,
    InvalidParameters,
    NoEdges,
    NotATree,
    NotDescending,
    NotFound,
    PositionOutOfRange,
)
from basiccovers.graph import BipartiteGraph

VERTICAL, SLASH, BACKSLASH = "vertical", "slash", "backslash"


@dataclass(frozen=True)
class StandardDrawing:
    G: BipartiteGraph = field(repr=False)
    sigma: tuple[int, ...]  # sigma[p-1] = A-vertex at top position p
    tau: tuple[int, ...]  # tau[p-1] = B-vertex at bottom position p

    def __post_init__(self):
        if sorted(self.sigma) != sorted(self.G.A) or len(set(self.sigma)) != len(self.sigma):
            raise InvalidParameters("sigma is not a bijection onto A")
        if sorted(self.tau) != sorted(self.G.B) or len(set(self.tau)) != len(self.tau):
            raise InvalidParameters("tau is not a bijection onto B")

    @cached_property
    def pos_a(self) -> dict[int, int]:
        return {v: p for p, v in enumerate(self.sigma, start=1)}

    @cached_property
    def pos_b(self) -> dict[int, int]:
        return {v: p for p, v in enumerate(self.tau, start=1)}

    def top(self, p: int) -> int:
        return self.sigma[p - 1]

    def bottom(self, p: int) -> int:
        return self.tau[p - 1]

    def edge_positions(self) -> list[tuple[int, int]]:
        """Every edge as (top position, bottom position)."""
        G, pa, pb = self.G, self.pos_a, self.pos_b
        out = []
        for u, v in G.edges:
            if u in G.A:
                out.append((pa[u], pb[v]))
            else:
                out.append((pa[v], pb[u]))
        return sorted(out)

    def has(self, i: int, j: int) -> bool:
        """Is there an edge between top position i and bottom position j?"""
        return self.G.has_edge(self.sigma[i - 1], self.tau[j - 1])

    @cached_property
    def edge_classes(self) -> dict[tuple[int, int], str]:
        out = {}
        for i, j in self.edge_positions():
            cls = VERTICAL if i == j else (SLASH if i > j else BACKSLASH)
            out[(self.top(i), self.bottom(j))] = cls
        return out

    @cached_property
    def r(self) -> int:
        return r_of(self)

    # m(i), M(i) for positions beyond r
    def m_top(self, i: int) -> int | None:
        hits = [j for j in range(1, self.r + 1) if self.has(i, j)]
        return min(hits) if hits else None

    def M_top(self, i: int) -> int | None:
        hits = [j for j in range(1, self.r + 1) if self.has(i, j)]
        return max(hits) if hits else None

    def m_bottom(self, j: int) -> int | None:
        hits = [i for i in range(1, self.r + 1) if self.has(i, j)]
        return min(hits) if hits else None

    def M_bottom(self, j: int) -> int | None:
        hits = [i for i in range(1, self.r + 1) if self.has(i, j)]
        return max(hits) if hits else None

    def to_dict(self) -> dict:
        return {"sigma": list(self.sigma), "tau": list(self.tau), "r": self.r}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def render(self) -> str:
        """Two-row text rendering; each edge listed with |, / or \\ ."""
        width = max(len(str(self.G.n)), 2) + 1
        top = "".join(str(v).rjust(width) for v in self.sigma)
        bottom = "".join(str(v).rjust(width) for v in self.tau)
        marks = {VERTICAL: "|", SLASH: "/", BACKSLASH: "\\"}
        edges = " ".join(
            f"{self.pos_a[u]}{marks[c]}{self.pos_b[v]}'" for (u, v), c in sorted(self.edge_classes.items(), key=lambda kv: (self.pos_a[kv[0][0]], self.pos_b[kv[0][1]]))
        )
        ruler = "".join(("r" if p == self.r else " ").rjust(width) for p in range(1, max(len(self.sigma), 1) + 1))
        return f"A:{top}\nB:{bottom}\n  {ruler}\nr = {self.r}\nedges (top pos, bottom pos): {edges}"


def r_of(drawing: StandardDrawing) -> int:
    r = 0
    limit = min(len(drawing.sigma), len(drawing.tau))
    while r < limit:
        t = r + 1
        if not drawing.has(t, t):
            break
        if any(drawing.has(t, j) for j in range(1, t)):
            break
        r = t
    return r


def drawing_from_sequence(G: BipartiteGraph, seq: Sequence[tuple[int, int]]) -> StandardDrawing:
    """Put the sequence at positions 1..r and the remaining vertices after it in id order."""
    us = [u for u, _ in seq]
    vs = [v for _, v in seq]
    sigma = us + sorted(G.A - set(us))
    tau = vs + sorted(G.B - set(vs))
    return StandardDrawing(G, tuple(sigma), tuple(tau))


# ------------------------------------------------------------ search


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _matching_size(avail_a: int, avail_b: int, adj_a: list[int]) -> int:
    """Maximum matching between bitmask sets via augmenting paths."""
    match_b: dict[int, int] = {}

    def augment(u: int, seen: list[int]) -> bool:
        cand = adj_a[u] & avail_b & ~seen[0]
        while cand:
            low = cand & -cand
            cand ^= low
            seen[0] |= low
            v = low.bit_length() - 1
            if v not in match_b or augment(match_b[v], seen):
                match_b[v] = u
                return True
        return False

    size = 0
    x = avail_a
    while x:
        low = x & -x
        x ^= low
        if augment(low.bit_length() - 1, [0]):
            size += 1
    return size


class _OrderedMatching:
    """Longest admissible edge sequence on a vertex subset, memoised on used sets."""

    def __init__(self, G: BipartiteGraph, avs: Sequence[int], bvs: Sequence[int], budget: int):
        self.avs, self.bvs = sorted(avs), sorted(bvs)
        bidx = {v: q for q, v in enumerate(self.bvs)}
        self.adj_a = [sum(1 << bidx[v] for v in G.adj[u] if v in bidx) for u in self.avs]
        self.full_a = (1 << len(self.avs)) - 1
        self.full_b = (1 << len(self.bvs)) - 1
        self.memo: dict[tuple[int, int], int] = {}
        self.nodes = 0
        self.prunes = 0
        self.budget = budget

    def available(self, used_a: int, used_b: int) -> int:
        out = 0
        for u, nb in enumerate(self.adj_a):
            if not (used_a >> u) & 1 and not nb & used_b:
                out |= 1 << u
        return out

    def bound(self, used_a: int, used_b: int) -> int:
        return _matching_size(self.available(used_a, used_b), self.full_b & ~used_b, self.adj_a)

    def children(self, used_a: int, used_b: int):
        avail = self.available(used_a, used_b)
        free_b = self.full_b & ~used_b
        u = 0
        while avail >> u:
            if (avail >> u) & 1:
                cand = self.adj_a[u] & free_b
                v = 0
                while cand >> v:
                    if (cand >> v) & 1:
                        yield u, v
                    v += 1
            u += 1

    def best(self, used_a: int = 0, used_b: int = 0) -> int:
        key = (used_a, used_b)
        if key in self.memo:
            return self.memo[key]
        self.nodes += 1
        if self.nodes > self.budget:
            raise Budget(f"graphical dimension search exceeded {self.budget} states")
        cap = self.bound(used_a, used_b)
        best = 0
        for u, v in self.children(used_a, used_b):
            if best >= cap:
                break
            na, nb = used_a | 1 << u, used_b | 1 << v
            if 1 + self.bound(na, nb) <= best:
                self.prunes += 1
                continue
            val = 1 + self.best(na, nb)
            if val > best:
                best = val
        self.memo[key] = best
        return best

    def witness(self) -> list[tuple[int, int]]:
        """Lexicographically least optimal sequence, as vertex-id pairs."""
        seq = []
        used_a = used_b = 0
        remaining = self.best()
        while remaining:
            for u, v in self.children(used_a, used_b):
                na, nb = used_a | 1 << u, used_b | 1 << v
                if 1 + self.best(na, nb) == remaining:
                    seq.append((self.avs[u], self.bvs[v]))
                    used_a, used_b = na, nb
                    remaining -= 1
                    break
        return seq


@dataclass(frozen=True)
class GdimResult:
    value: int
    drawing: StandardDrawing
    sequence: tuple[tuple[int, int], ...]
    components: tuple[tuple[tuple[int, ...], int], ...]  # (component vertices, gdim)
    nodes: int
    prunes: int

    @property
    def r(self) -> int:
        return self.value - 1

    def to_dict(self) -> dict:
        return {
            "gdim": self.value,
            "r": self.r,
            "drawing": self.drawing.to_dict(),
            "sequence": [list(p) for p in self.sequence],
            "components": [{"vertices": list(vs), "gdim": g} for vs, g in self.components],
            "stats": {"nodes": self.nodes, "prunes": self.prunes},
        }


def gdim(G: BipartiteGraph, budget: int = 2_000_000) -> GdimResult:
    """Exact graphical dimension: 1 - m + sum of per-component values over the m components with edges."""
    if not G.edges:
        raise NoEdges("graph has no edges")
    seq: list[tuple[int, int]] = []
    comps = []
    nodes = prunes = 0
    for vs in G.component_vertices():
        if len(vs) == 1:
            continue
        search = _OrderedMatching(G, [v for v in vs if v in G.A], [v for v in vs if v in G.B], budget)
        part = search.witness()
        nodes += search.nodes
        prunes += search.prunes
        seq.extend(part)
        comps.append((tuple(vs), len(part) + 1))
    value = 1 - len(comps) + sum(g for _, g in comps)
    drawing = drawing_from_sequence(G, seq)
    assert drawing.r == value - 1
    return GdimResult(value, drawing, tuple(seq), tuple(comps), nodes, prunes)


# ------------------------------------------------------------ cover injection


def check_eligible(drawing: StandardDrawing) -> None:
    """Every position beyond r must see a position <= r on the other row."""
    r = drawing.r
    for i in range(r + 1, len(drawing.sigma) + 1):
        if drawing.m_top(i) is None:
            raise DrawingNotEligible(f"top position {i} has no neighbour among bottom positions 1..{r}")
    for j in range(r + 1, len(drawing.tau) + 1):
        if drawing.m_bottom(j) is None:
            raise DrawingNotEligible(f"bottom position {j} has no neighbour among top positions 1..{r}")


def is_eligible(drawing: StandardDrawing) -> bool:
    try:
        check_eligible(drawing)
    except DrawingNotEligible:
        return False
    return True


def descending_sequence_to_cover(
    G: BipartiteGraph, drawing: StandardDrawing, omega: Sequence[int], k: int
) -> Cover:
    """Basic k-cover built from a weakly descending r-tuple in {0..k}."""
    r = drawing.r
    if len(omega) != r:
        raise InvalidParameters(f"need {r} values, got {len(omega)}")
    if any(x < y for x, y in zip(omega, omega[1:])):
        raise NotDescending(f"{tuple(omega)} is not weakly descending")
    if any(not 0 <= x <= k for x in omega):
        raise InvalidParameters(f"values must lie in 0..{k}")
    check_eligible(drawing)
    vals = [0] * G.n
    for p in range(1, r + 1):
        vals[drawing.top(p) - 1] = omega[p - 1]
        vals[drawing.bottom(p) - 1] = k - omega[p - 1]
    for p in range(r + 1, len(drawing.sigma) + 1):
        vals[drawing.top(p) - 1] = omega[drawing.m_top(p) - 1]
    for p in range(r + 1, len(drawing.tau) + 1):
        v = drawing.bottom(p)
        vals[v - 1] = k - min(vals[u - 1] for u in G.adj[v])
    return Cover(k, tuple(vals))


def saw_connected(drawing: StandardDrawing, i: int, j: int) -> bool:
    """Positions i <= j <= r joined by an increasing chain of backslash edges {i_q, i_(q+1)'}."""
    r = drawing.r
    if not (1 <= i <= j <= r):
        raise PositionOutOfRange(f"need 1 <= i <= j <= r = {r}, got i={i}, j={j}")
    reach = {i}
    for t in range(i + 1, j + 1):
        if any(drawing.has(s, t) for s in reach):
            reach.add(t)
    return j in reach


# ------------------------------------------------------------ trees


def _require_tree(T: BipartiteGraph) -> None:
    if not T.is_tree():
        raise NotATree("graph is not a tree")


def tree_multiplicity_bound(a: int, r: int) -> int:
    """(a - r)^r * a (a-1) ... (a-r+1), the stated multiplicity bound for trees."""
    return (a - r) ** r * perm(a, r)


def tree_dim(T: BipartiteGraph) -> tuple[int, int]:
    """(dim, multiplicity upper bound) of a tree; dim equals gdim."""
    _require_tree(T)
    g = gdim(T).value
    return g, tree_multiplicity_bound(T.a, g - 1)


def optimality_criterion(drawing: StandardDrawing) -> bool:
    """No saw-connection j <= k where bottom j sees a top leaf beyond r and top k sees a bottom vertex beyond r."""
    r = drawing.r
    js = {j for i, j in drawing.edge_positions() if i > r and j <= r}
    ks = {i for i, j in drawing.edge_positions() if i <= r and j > r}
    return not any(saw_connected(drawing, j, k) for j in js for k in ks if j <= k)


def only_leaves_right(drawing: StandardDrawing) -> bool:
    G, r = drawing.G, drawing.r
    right = list(drawing.sigma[r:]) + list(drawing.tau[r:])
    return all(G.degree(v) == 1 for v in right)


def tree_optimal_leaves_right(T: BipartiteGraph, budget: int = 2_000_000) -> StandardDrawing:
    """An optimal drawing of a tree with only leaves beyond position r."""
    _require_tree(T)
    search = _OrderedMatching(T, sorted(T.A), sorted(T.B), budget)
    R = search.best()
    leaves = set(T.leaves())
    need_a = sum(1 << p for p, v in enumerate(search.avs) if v not in leaves)
    need_b = sum(1 << q for q, v in enumerate(search.bvs) if v not in leaves)
    failed: set[tuple[int, int]] = set()

    def dfs(used_a: int, used_b: int, t: int) -> list[tuple[int, int]] | None:
        if t == R:
            return [] if (need_a & ~used_a) == 0 and (need_b & ~used_b) == 0 else None
        if (used_a, used_b) in failed:
            return None
        left = R - t
        if _popcount(need_a & ~used_a) > left or _popcount(need_b & ~used_b) > left:
            failed.add((used_a, used_b))
            return None
        for u, v in search.children(used_a, used_b):
            na, nb = used_a | 1 << u, used_b | 1 << v
            if 1 + search.best(na, nb) < left:
                continue
            tail = dfs(na, nb, t + 1)
            if tail is not None:
                return [(search.avs[u], search.bvs[v])] + tail
        failed.add((used_a, used_b))
        return None

    seq = dfs(0, 0, 0)
    if seq is None:
        raise NotFound("no optimal drawing with only leaves to the right of r")
    drawing = drawing_from_sequence(T, seq)
    if drawing.r != R or not only_leaves_right(drawing):
        raise NotFound("constructed drawing does not have the required shape")
    if not optimality_criterion(drawing):
        raise NotFound("optimal leaves-right drawing violates the saw-connection criterion")
    return drawing
