"""Covers of weighted hypergraphs.

A k-cover of (H, w) is a nonzero a in N^n with sum(a_i : i in f) >= k w(f)
for every face f.  It is basic when no single coordinate can be decremented.
A basic cover never exceeds k * max(w(f) : f contains i) at vertex i: any
larger value leaves every face through i strictly slack, so it could be
lopped.  Vertices in no face always carry 0.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from math import prod
from typing import Iterator, Sequence

from basiccovers.algebra import differences
from basiccovers.covers import Cover, CoverSet
from basiccovers.errors import Budget, InvalidParameters, LengthMismatch, NoFaces, ParseError, Unstable
from basiccovers.graph import BipartiteGraph

BOX_BUDGET = 10**8


@dataclass(frozen=True)
class WeightedHypergraph:
    n: int
    faces: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        faces = tuple(tuple(sorted(set(f))) for f in self.faces)
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.n < 1:
            raise InvalidParameters("hypergraph needs at least one vertex")
        if len(faces) != len(self.weights):
            raise LengthMismatch(f"{len(faces)} faces but {len(self.weights)} weights")
        for f in faces:
            if not f:
                raise InvalidParameters("faces must be nonempty")
            if f[0] < 1 or f[-1] > self.n:
                raise InvalidParameters(f"face {f} has a vertex outside 1..{self.n}")
        if any(w < 1 for w in self.weights):
            raise InvalidParameters("weights must be positive")
        sets = [frozenset(f) for f in faces]
        for i, s in enumerate(sets):
            for j, t in enumerate(sets):
                if i != j and s <= t:
                    raise InvalidParameters(f"faces {faces[i]} and {faces[j]} are not an antichain")

    @property
    def M(self) -> int:
        return max((len(f) for f in self.faces), default=0)

    def faces_of(self, v: int) -> list[int]:
        return [p for p, f in enumerate(self.faces) if v in f]

    def box(self, k: int) -> tuple[int, ...]:
        """Upper bound for each coordinate of a basic k-cover."""
        return tuple(k * max((self.weights[p] for p in self.faces_of(v)), default=0) for v in range(1, self.n + 1))

    @classmethod
    def from_graph(cls, G: BipartiteGraph) -> "WeightedHypergraph":
        return cls(G.n, tuple(G.edges), (1,) * len(G.edges))


def parse_hypergraph(text: str) -> WeightedHypergraph:
    n = None
    faces, weights = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if n is None:
                if tok[0] != "n" or len(tok) != 2:
                    raise ParseError(f"line {lineno}: expected 'n <count>'")
                n = int(tok[1])
            elif tok[0] == "f" and len(tok) >= 3:
                weights.append(int(tok[1]))
                faces.append(tuple(int(x) for x in tok[2:]))
            else:
                raise ParseError(f"line {lineno}: expected 'f <weight> <v1> ...'")
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token") from None
    if n is None:
        raise ParseError("missing 'n <count>' line")
    return WeightedHypergraph(n, tuple(faces), tuple(weights))


def format_hypergraph(H: WeightedHypergraph) -> str:
    lines = [f"n {H.n}"] + [f"f {w} " + " ".join(map(str, f)) for f, w in zip(H.faces, H.weights)]
    return "\n".join(lines) + "\n"


def read_hypergraph(path_: str) -> WeightedHypergraph:
    with open(path_, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())


def is_k_cover(H: WeightedHypergraph, a: Sequence[int], k: int) -> bool:
    if len(a) != H.n:
        raise LengthMismatch(f"vector has {len(a)} entries, hypergraph has {H.n} vertices")
    if any(x < 0 for x in a) or not any(a):
        return False
    return all(sum(a[v - 1] for v in f) >= k * w for f, w in zip(H.faces, H.weights))


def is_basic_h(H: WeightedHypergraph, a: Sequence[int], k: int) -> bool:
    if not is_k_cover(H, a, k):
        return False
    sums = [sum(a[v - 1] for v in f) for f in H.faces]
    for v in range(1, H.n + 1):
        x = a[v - 1]
        if x == 0:
            continue
        if all(sums[p] > k * H.weights[p] for p in H.faces_of(v)):
            return False
    return True


def _search(H: WeightedHypergraph, k: int, first: Sequence[int] | None = None) -> Iterator[list[int]]:
    """Depth-first search over the box with face-sum pruning."""
    n = H.n
    box = H.box(k)
    need = [k * w for w in H.weights]
    vfaces = [H.faces_of(v) for v in range(1, n + 1)]
    # remaining capacity of each face after position p is assigned
    cap_after = [[sum(box[v - 1] for v in f if v - 1 > p) for p in range(n)] for f in H.faces]
    last = [max(f) - 1 for f in H.faces]
    # vertices whose faces are all complete once position p is assigned
    settle: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        if vfaces[v]:
            settle[max(last[q] for q in vfaces[v])].append(v)
    sums = [0] * len(H.faces)
    vals = [0] * n

    def rec(p: int):
        if p == n:
            yield vals
            return
        choices = first if (p == 0 and first is not None) else range(box[p] + 1)
        for x in choices:
            vals[p] = x
            for q in vfaces[p]:
                sums[q] += x
            ok = all(sums[q] + cap_after[q][p] >= need[q] for q in vfaces[p])
            if ok:
                for v in settle[p]:
                    if vals[v] and not any(sums[q] == need[q] for q in vfaces[v]):
                        ok = False
                        break
            if ok:
                yield from rec(p + 1)
            for q in vfaces[p]:
                sums[q] -= x
        vals[p] = 0

    yield from rec(0)


def _check(H: WeightedHypergraph, k: int, budget: int) -> None:
    if not H.faces:
        raise NoFaces("hypergraph has no faces")
    if k < 1:
        raise InvalidParameters(f"enumeration needs k >= 1, got {k}")
    volume = prod(x + 1 for x in H.box(k))
    if volume > budget:
        raise Budget(f"box volume {volume} exceeds budget {budget}")


def _chunk(args) -> list[tuple[int, ...]]:
    H, k, first = args
    return [tuple(v) for v in _search(H, k, first) if any(v)]


def _vectors(H: WeightedHypergraph, k: int, workers: int) -> list[tuple[int, ...]]:
    if workers <= 1:
        return [tuple(v) for v in _search(H, k) if any(v)]
    from concurrent.futures import ProcessPoolExecutor

    top = H.box(k)[0]
    splits = [list(range(w, top + 1, workers)) for w in range(workers)]
    with ProcessPoolExecutor(workers) as ex:
        return [v for part in ex.map(_chunk, [(H, k, s) for s in splits]) for v in part]


def enumerate_basic_h(H: WeightedHypergraph, k: int, budget: int = BOX_BUDGET, workers: int = 1) -> CoverSet:
    _check(H, k, budget)
    vecs = sorted(_vectors(H, k, workers))
    return CoverSet(k, tuple(Cover(k, v) for v in vecs))


def count_basic_h(H: WeightedHypergraph, k: int, budget: int = BOX_BUDGET, workers: int = 1) -> int:
    _check(H, k, budget)
    if workers <= 1:
        return sum(1 for v in _search(H, k) if any(v))
    return len(_vectors(H, k, workers))


# ------------------------------------------------------------ degree of the count


@dataclass(frozen=True)
class DegreeReport:
    counts: tuple[int, ...]  # counts[k-1] for k = 1..kmax
    degree: int
    period: int
    lower: int  # M - 1
    upper: int  # (n - 1) - floor((n - 1) / M)

    @property
    def within_bounds(self) -> bool:
        return self.lower <= self.degree <= self.upper

    @property
    def dim_estimate(self) -> int:
        return self.degree + 1

    def to_dict(self) -> dict:
        return {
            "counts": list(self.counts),
            "degree": self.degree,
            "period": self.period,
            "bounds": [self.lower, self.upper],
            "within_bounds": self.within_bounds,
            "dim_estimate": self.dim_estimate,
            "stable": True,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def estimate_degree(counts: Sequence[int], max_period: int = 3, window: int = 3) -> tuple[int, int]:
    """(degree, period) from counts at k = 1..kmax.

    For each period p the counts split into p residue classes.  A class is
    settled at order d when its d-th differences are constant and nonzero on
    the trailing window.  The smallest p where every class settles wins, and
    the degree is the largest settled order.
    """
    for p in range(1, max_period + 1):
        classes = [list(counts[r::p]) for r in range(p)]
        orders = []
        for seq in classes:
            found = None
            for d in range(len(seq)):
                diffs = differences(seq, d)
                if len(diffs) < window:
                    break
                tail = diffs[-window:]
                if len(set(tail)) == 1 and tail[0] != 0:
                    found = d
                    break
            if found is None:
                break
            orders.append(found)
        else:
            return max(orders), p
    raise Unstable(f"no period up to {max_period} stabilises within k <= {len(counts)}")


def degree_bounds(H: WeightedHypergraph) -> tuple[int, int]:
    n, M = H.n, H.M
    return M - 1, (n - 1) - (n - 1) // M


def degree_bounds_check(
    H: WeightedHypergraph,
    kmax: int,
    max_period: int = 3,
    budget: int = BOX_BUDGET,
    workers: int = 1,
    kmax_limit: int | None = None,
) -> DegreeReport:
    """Estimate the growth degree of the basic-cover count and compare with the bounds.

    With `kmax_limit` the count is extended one k at a time past `kmax` until
    the estimate settles or the limit is reached.
    """
    counts = [count_basic_h(H, k, budget, workers) for k in range(1, kmax + 1)]
    limit = max(kmax, kmax_limit or kmax)
    while True:
        try:
            degree, period = estimate_degree(counts, max_period)
            break
        except Unstable:
            if len(counts) >= limit:
                raise
            counts.append(count_basic_h(H, len(counts) + 1, budget, workers))
    lo, hi = degree_bounds(H)
    return DegreeReport(tuple(counts), degree, period, lo, hi)


# ------------------------------------------------------------ generators


def simplex(n: int, weight: int = 1) -> WeightedHypergraph:
    return WeightedHypergraph(n, (tuple(range(1, n + 1)),), (weight,))


def random_antichain(n: int, nfaces: int, max_weight: int, seed: int, max_size: int | None = None) -> WeightedHypergraph:
    """Random antichain of faces covering every vertex, weights in 1..max_weight."""
    rng = random.Random(seed)
    max_size = max_size or n
    for _ in range(1000):
        faces: list[frozenset[int]] = []
        for _ in range(50 * nfaces):
            if len(faces) == nfaces:
                break
            size = rng.randint(1, max_size)
            f = frozenset(rng.sample(range(1, n + 1), size))
            if all(not (f <= g or g <= f) for g in faces):
                faces.append(f)
        if faces and set().union(*faces) == set(range(1, n + 1)):
            ws = tuple(rng.randint(1, max_weight) for _ in faces)
            return WeightedHypergraph(n, tuple(tuple(sorted(f)) for f in faces), ws)
    raise InvalidParameters(f"could not draw a covering antichain with n={n}, {nfaces} faces")
