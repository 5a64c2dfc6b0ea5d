"""Slow, independent reference computations used to cross-check the fast paths.

Nothing here calls the search code in covers/drawing; each routine works
from the definitions directly.
"""

from __future__ import annotations

from itertools import permutations, product
from math import comb
from typing import Iterator, Sequence

from basiccovers.graph import BipartiteGraph


def _is_basic_cover(edges: Sequence[tuple[int, int]], vals: Sequence[int], k: int) -> bool:
    if not any(vals):
        return False
    if any(vals[u] + vals[v] < k for u, v in edges):
        return False
    n = len(vals)
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    for i in range(n):
        if vals[i] == 0:
            continue
        lowered = list(vals)
        lowered[i] -= 1
        if any(lowered) and all(lowered[i] + vals[j] >= k for j in nbrs[i]):
            return False
    return True


def brute_force_basic(G: BipartiteGraph, k: int) -> list[tuple[int, ...]]:
    """All basic k-covers by scanning {0..k}^n, sorted."""
    edges = [(u - 1, v - 1) for u, v in G.edges]
    return sorted(vals for vals in product(range(k + 1), repeat=G.n) if _is_basic_cover(edges, vals, k))


# ------------------------------------------------------------ exact Hilbert polynomial


def _ordered_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _ordered_partitions(rest):
        for t in range(len(part)):
            yield part[:t] + [[first] + part[t]] + part[t + 1 :]
        for t in range(len(part) + 1):
            yield part[:t] + [[first]] + part[t:]


def hilbert_coefficients(G: BipartiteGraph) -> list[int]:
    """c with HF(k) = sum_m c[m] * C(k, m) for every k >= 0.

    A basic cover is fixed by its A-side values.  Positive A-vertex i is not
    loppable iff some neighbour j of i has a_i = min(a over N(j)), which only
    depends on the weak order of the A-values and on which of them are 0.  So
    each ordered partition of the non-isolated A-vertices into level blocks
    contributes C(k, #positive levels) when valid.
    """
    avs = sorted(v for v in G.A if G.adj[v])
    bvs = sorted(v for v in G.B if G.adj[v])
    c = [0] * (len(avs) + 1)
    for blocks in _ordered_partitions(avs):
        level = {v: t for t, blk in enumerate(blocks) for v in blk}
        lowest = {j: min(level[i] for i in G.adj[j]) for j in bvs}
        # block 0 may be the zero level or a positive level
        for zero_first in (True, False):
            ok = all(
                (zero_first and level[i] == 0) or any(lowest[j] == level[i] for j in G.adj[i]) for i in avs
            )
            if ok:
                c[len(blocks) - (1 if zero_first else 0)] += 1
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def hilbert_exact(G: BipartiteGraph, k: int) -> int:
    return sum(cm * comb(k, m) for m, cm in enumerate(hilbert_coefficients(G)))


def dim_and_multiplicity_exact(G: BipartiteGraph) -> tuple[int, int]:
    """(degree + 1, normalised leading coefficient) of the Hilbert polynomial."""
    c = hilbert_coefficients(G)
    return len(c), c[-1]


# ------------------------------------------------------------ graphical dimension


def r_bruteforce(G: BipartiteGraph, sigma: Sequence[int], tau: Sequence[int]) -> int:
    r = 0
    while r < min(len(sigma), len(tau)):
        t = r  # 0-based position of candidate r+1
        if not G.has_edge(sigma[t], tau[t]):
            break
        if any(G.has_edge(sigma[t], tau[j]) for j in range(t)):
            break
        r += 1
    return r


def gdim_bruteforce(G: BipartiteGraph) -> int:
    """1 + max r over all a! * b! standard drawings.  Only for tiny graphs."""
    A, B = sorted(G.A), sorted(G.B)
    return 1 + max(r_bruteforce(G, s, t) for s in permutations(A) for t in permutations(B))
