"""Growth degree and quasi-period of basic-cover counts on random weighted hypergraphs.

    python scripts/hypergraph_degree_survey.py --samples 40 --max-n 6
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from basiccovers import hypergraph
from basiccovers.errors import Budget, InvalidParameters, Unstable


@dataclass
class Config:
    samples: int = 30
    max_n: int = 6
    faces: int = 3
    max_weight: int = 2
    kmax: int = 8
    kmax_limit: int = 16
    seed: int = 0


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for field, default in vars(Config()).items():
        p.add_argument("--" + field.replace("_", "-"), type=int, default=default)
    cfg = Config(**vars(p.parse_args()))

    periods: Counter[int] = Counter()
    outside = unstable = skipped = 0
    for s in range(cfg.samples):
        n = 3 + s % (cfg.max_n - 2)
        try:
            H = hypergraph.random_antichain(n, cfg.faces, cfg.max_weight, cfg.seed + s, max_size=3)
            rep = hypergraph.degree_bounds_check(H, cfg.kmax, kmax_limit=cfg.kmax_limit)
        except (Budget, InvalidParameters):
            skipped += 1
            continue
        except Unstable:
            unstable += 1
            continue
        periods[rep.period] += 1
        outside += not rep.within_bounds
        mark = "" if rep.within_bounds else "  OUTSIDE"
        print(f"n={H.n} faces={H.faces} w={H.weights} degree={rep.degree} period={rep.period} "
              f"bounds=[{rep.lower},{rep.upper}]{mark}")
    print(f"periods={dict(sorted(periods.items()))} outside_bounds={outside} unstable={unstable} skipped={skipped}")


if __name__ == "__main__":
    main()
