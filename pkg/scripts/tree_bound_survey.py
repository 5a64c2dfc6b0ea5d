"""Compare the multiplicity of tree edge rings with two candidate closed-form bounds.

For each random tree T with r = gdim(T) - 1 and a = |A| the script reports
the multiplicity e(T) next to

    (a - r)^r * a!/(a - r)!    and    r^(a - r) * a!/(a - r)!

The first form collapses to 0 whenever r = a, which is common for trees.

    python scripts/tree_bound_survey.py --trees 200 --max-n 12
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from math import perm

from basiccovers import graph
from basiccovers.drawing import tree_dim
from basiccovers.oracles import dim_and_multiplicity_exact


@dataclass
class Config:
    trees: int = 100
    max_n: int = 12
    seed: int = 0
    verbose: bool = False


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trees", type=int, default=Config.trees)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--verbose", action="store_true")
    a = p.parse_args()
    cfg = Config(a.trees, a.max_n, a.seed, a.verbose)

    stated = swapped = dim_bad = 0
    r_equals_a = 0
    for s in range(cfg.trees):
        n = 2 + s % (cfg.max_n - 1)
        T = graph.random_tree(n, cfg.seed + s)
        d, bound = tree_dim(T)
        dim, e = dim_and_multiplicity_exact(T)
        r = d - 1
        alt = r ** (T.a - r) * perm(T.a, r)
        dim_bad += d != dim
        stated += e > bound
        swapped += e > alt
        r_equals_a += r == T.a
        if cfg.verbose:
            print(f"n={n:>2} a={T.a:>2} r={r:>2} e={e:>5} stated={bound:>8} swapped={alt:>8}")
    print(f"trees={cfg.trees} dim_mismatch={dim_bad} r_equals_a={r_equals_a}")
    print(f"stated form violated: {stated}/{cfg.trees}")
    print(f"swapped form violated: {swapped}/{cfg.trees}")


if __name__ == "__main__":
    main()
