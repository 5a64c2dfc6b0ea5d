"""Table of invariants for the standard graph families.

    python scripts/family_table.py --max-a 6 --kmax-extra 3
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from basiccovers import algebra, graph
from basiccovers.drawing import gdim
from basiccovers.oracles import dim_and_multiplicity_exact


@dataclass
class Config:
    max_a: int = 6
    kmax_extra: int = 3


def families(max_a: int):
    for a in range(2, max_a + 1):
        yield f"C{2 * a}", graph.cycle(2 * a)
    for n in range(2, 2 * max_a + 1):
        yield f"P{n}", graph.path(n)
    for a in range(2, max_a + 1):
        yield f"K{a},{a}", graph.complete_bipartite(a, a)
        yield f"R{a}", graph.regular(a)
    for m in range(2, max_a):
        yield f"W(P{m})", graph.whisker(graph.path(m))


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-a", type=int, default=Config.max_a)
    p.add_argument("--kmax-extra", type=int, default=Config.kmax_extra)
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(p.parse_args()).items()})

    print(f"{'graph':>8} {'n':>3} {'HF(1)':>6} {'dim':>4} {'e':>6} {'gdim':>5} {'wsc':>5} {'bound':>6}")
    for name, G in families(cfg.max_a):
        d_exact, _ = dim_and_multiplicity_exact(G)
        prof = algebra.hilbert_function(G, d_exact + cfg.kmax_extra)
        g = gdim(G).value
        wsc = algebra.satisfies_wsc(G).holds
        bound = algebra.dim_bound_degree(G).bound
        print(f"{name:>8} {G.n:>3} {prof.hf(1):>6} {prof.dim:>4} {prof.multiplicity:>6} {g:>5} {str(wsc):>5} {bound:>6}")


if __name__ == "__main__":
    main()
