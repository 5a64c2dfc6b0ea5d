"""Bipartite graphs: validation, canonical bipartition, generators and text I/O.

Vertices are the integers 1..n throughout.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from basiccovers.errors import (
    InvalidParameters,
    InvalidVertexId,
    NoEdges,
    NotBipartite,
    ParseError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class BipartiteGraph:
    n: int
    edges: tuple[Edge, ...]
    A: frozenset[int]
    B: frozenset[int]
    adj: tuple[frozenset[int], ...] = field(repr=False)
    components: tuple[int, ...] = field(repr=False)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def a(self) -> int:
        return len(self.A)

    @property
    def b(self) -> int:
        return len(self.B)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def isolated(self) -> list[int]:
        return [v for v in self.vertices if not self.adj[v]]

    @property
    def num_components(self) -> int:
        return len(set(self.components[1:]))

    def component_vertices(self) -> list[list[int]]:
        """Vertex lists of the connected components, ordered by smallest id."""
        groups: dict[int, list[int]] = {}
        for v in self.vertices:
            groups.setdefault(self.components[v], []).append(v)
        return sorted(groups.values(), key=lambda vs: vs[0])

    def is_connected(self) -> bool:
        return self.num_components == 1

    def is_forest(self) -> bool:
        return len(self.edges) == self.n - self.num_components

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == self.n - 1

    def leaves(self) -> list[int]:
        return [v for v in self.vertices if len(self.adj[v]) == 1]

    def subgraph(self, keep: Sequence[int]) -> tuple["BipartiteGraph", list[int]]:
        """Induced subgraph on `keep`, relabelled 1..len(keep) in the given order.

        Returns the subgraph and the list mapping new id - 1 to old id.
        """
        index = {old: new for new, old in enumerate(keep, start=1)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return from_edges(len(keep), edges), list(keep)

    def component_subgraphs(self) -> list[tuple["BipartiteGraph", list[int]]]:
        return [self.subgraph(vs) for vs in self.component_vertices()]


def _two_color(n: int, adj: list[set[int]]) -> tuple[list[int], list[int]]:
    color = [-1] * (n + 1)
    comp = [0] * (n + 1)
    parent = [0] * (n + 1)
    depth = [0] * (n + 1)
    cid = 0
    for root in range(1, n + 1):
        if color[root] >= 0:
            continue
        cid += 1
        color[root] = 0
        comp[root] = cid
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in sorted(adj[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    comp[v] = cid
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    raise NotBipartite(_odd_cycle(u, v, parent, depth))
    return color, comp


def _odd_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> list[int]:
    left, right = [u], [v]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    cycle = left + right[-2::-1]
    # rotate so the smallest vertex comes first, direction towards its smaller neighbour
    i = cycle.index(min(cycle))
    cycle = cycle[i:] + cycle[:i]
    if len(cycle) > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return cycle


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> BipartiteGraph:
    """Validate an edge list and compute the canonical bipartition.

    Per component, the side holding the smallest vertex id is the A side
    unless it is strictly larger than the other side, in which case the
    component is flipped.  This keeps |A| <= |B| globally and per component.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidParameters(f"vertex count must be a positive integer, got {n!r}")
    adj: list[set[int]] = [set() for _ in range(n + 1)]
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidVertexId(f"edge {{{u},{v}}} has a vertex outside 1..{n}")
        if u == v:
            raise InvalidVertexId(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    color, comp = _two_color(n, adj)

    sides: dict[int, list[list[int]]] = {}
    for v in range(1, n + 1):
        sides.setdefault(comp[v], [[], []])[color[v]].append(v)
    A: set[int] = set()
    for first, second in sides.values():
        A.update(first if len(first) <= len(second) else second)
    B = set(range(1, n + 1)) - A

    edge_list = sorted({(min(u, v), max(u, v)) for u in range(1, n + 1) for v in adj[u]})
    return BipartiteGraph(
        n=n,
        edges=tuple(edge_list),
        A=frozenset(A),
        B=frozenset(B),
        adj=tuple(frozenset(s) for s in adj),
        components=tuple(comp),
    )


def strip_isolated(G: BipartiteGraph) -> tuple[BipartiteGraph, list[int]]:
    """Drop isolated vertices, relabelling the rest in increasing order.

    Returns the new graph and the sorted list of removed vertex ids.
    """
    if not G.edges:
        raise NoEdges("graph has no edges; its cover algebra is not finitely generated")
    removed = G.isolated
    if not removed:
        return G, []
    keep = [v for v in G.vertices if G.adj[v]]
    H, _ = G.subgraph(keep)
    return H, removed


def disjoint_union(*graphs: BipartiteGraph) -> BipartiteGraph:
    edges = []
    offset = 0
    for G in graphs:
        edges.extend((u + offset, v + offset) for u, v in G.edges)
        offset += G.n
    return from_edges(offset, edges)


# ---------------------------------------------------------------- generators


def cycle(length: int) -> BipartiteGraph:
    if length < 4 or length % 2:
        raise InvalidParameters(f"cycle length must be even and >= 4, got {length}")
    return from_edges(length, [(i, i % length + 1) for i in range(1, length + 1)])


def path(n: int) -> BipartiteGraph:
    if n < 2:
        raise InvalidParameters(f"path needs at least 2 vertices, got {n}")
    return from_edges(n, [(i, i + 1) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    if a < 1 or b < 1:
        raise InvalidParameters(f"complete bipartite sides must be >= 1, got ({a},{b})")
    return from_edges(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def caterpillar(r: int, a: int, b: int) -> BipartiteGraph:
    """Tree with a+b vertices and graphical dimension r+1.

    An alternating path on 2r-2 vertices (ids 1..2r-2), with b-r+1 pendant
    leaves on vertex 1 and a-r+1 pendant leaves on vertex 2r-2.
    """
    if not 2 <= r <= a <= b:
        raise InvalidParameters(f"caterpillar needs 2 <= r <= a <= b, got ({r},{a},{b})")
    spine = 2 * r - 2
    edges = [(i, i + 1) for i in range(1, spine)]
    nxt = spine + 1
    for _ in range(b - r + 1):
        edges.append((1, nxt))
        nxt += 1
    for _ in range(a - r + 1):
        edges.append((spine, nxt))
        nxt += 1
    return from_edges(a + b, edges)


def regular(a: int) -> BipartiteGraph:
    """K_{a,a} minus a perfect matching: (a-1)-regular on 2a vertices."""
    if a < 2:
        raise InvalidParameters(f"regular family needs a >= 2, got {a}")
    return from_edges(2 * a, [(i, a + j) for i in range(1, a + 1) for j in range(1, a + 1) if i != j])


def whisker(base: BipartiteGraph | tuple[int, Sequence[Edge]]) -> BipartiteGraph:
    """Attach one new leaf m+i to every vertex i of a base graph on m vertices."""
    if isinstance(base, BipartiteGraph):
        m, edges = base.n, list(base.edges)
    else:
        m, edges = base[0], list(base[1])
    if m < 1:
        raise InvalidParameters("whisker base must be nonempty")
    return from_edges(2 * m, edges + [(i, m + i) for i in range(1, m + 1)])


def poset_graph(P) -> BipartiteGraph:
    """G(P): vertices p_1..p_m and p_1'..p_m' (ids m+1..2m), edge {i, j'} iff p_i <= p_j."""
    m = P.m
    return from_edges(2 * m, [(i, m + j) for i in range(1, m + 1) for j in range(1, m + 1) if P.leq(i, j)])


def random_bipartite(a: int, b: int, p: float, seed: int) -> BipartiteGraph:
    """Each pair (i, a+j) is an edge independently with probability p.

    Uses the standard library Mersenne Twister seeded with `seed`.
    """
    if a < 1 or b < 1 or not 0.0 <= p <= 1.0:
        raise InvalidParameters(f"bad random parameters a={a} b={b} p={p}")
    rng = random.Random(seed)
    edges = [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1) if rng.random() < p]
    return from_edges(a + b, edges)


def random_tree(n: int, seed: int) -> BipartiteGraph:
    """Uniform labelled tree on n vertices via a random Pruefer sequence."""
    if n < 2:
        raise InvalidParameters(f"tree needs at least 2 vertices, got {n}")
    rng = random.Random(seed)
    if n == 2:
        return from_edges(2, [(1, 2)])
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    return from_edges(n, prufer_edges(n, seq))


def prufer_edges(n: int, seq: Sequence[int]) -> list[Edge]:
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(1, n + 1) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(1, n + 1) if degree[w] == 1)
    edges.append((u, v))
    return edges


@dataclass(frozen=True)
class GraphSpec:
    family: str
    params: tuple = ()
    seed: int = 0

    @classmethod
    def parse(cls, text: str) -> "GraphSpec":
        """Parse `family:p1,p2,...` (e.g. `cycle:6`, `caterpillar:4,6,6`, `random:3,4,0.5,7`)."""
        family, _, rest = text.partition(":")
        params = []
        for tok in filter(None, rest.split(",")):
            try:
                params.append(int(tok))
            except ValueError:
                try:
                    params.append(float(tok))
                except ValueError:
                    raise InvalidParameters(f"bad generator parameter {tok!r}") from None
        return cls(family.strip().lower(), tuple(params))


_FAMILIES = {
    "cycle": cycle,
    "path": path,
    "complete": complete_bipartite,
    "caterpillar": caterpillar,
    "regular": regular,
}


def generate(spec: GraphSpec) -> BipartiteGraph:
    fam = spec.family
    try:
        if fam in _FAMILIES:
            return _FAMILIES[fam](*spec.params)
        if fam == "whisker":
            # whisker over a path on params[0] vertices (1 vertex -> single edge)
            (m,) = spec.params
            return whisker(path(m) if m >= 2 else (1, []))
        if fam == "tree":
            n, *rest = spec.params
            return random_tree(n, rest[0] if rest else spec.seed)
        if fam == "random":
            a, b, p, *rest = spec.params
            return random_bipartite(a, b, p, rest[0] if rest else spec.seed)
        if fam == "poset":
            raise InvalidParameters("poset graphs are built from a FinitePoset via poset_graph()")
    except (TypeError, ValueError) as exc:
        raise InvalidParameters(f"bad parameters for {fam}: {spec.params}") from exc
    raise InvalidParameters(f"unknown graph family {fam!r}")


# ---------------------------------------------------------------- text format


def parse_graph(text: str) -> BipartiteGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if n is None:
            if tok[0] != "n" or len(tok) != 2:
                raise ParseError(f"line {lineno}: expected 'n <count>'")
            n = _int(tok[1], lineno)
        elif tok[0] == "e" and len(tok) == 3:
            edges.append((_int(tok[1], lineno), _int(tok[2], lineno)))
        else:
            raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
    if n is None:
        raise ParseError("missing 'n <count>' line")
    return from_edges(n, edges)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: {tok!r} is not an integer") from None


def format_graph(G: BipartiteGraph) -> str:
    lines = [f"n {G.n}"] + [f"e {u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def read_graph(path_: str) -> BipartiteGraph:
    with open(path_, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(G: BipartiteGraph, path_: str) -> None:
    with open(path_, "w", encoding="utf-8") as fh:
        fh.write(format_graph(G))
