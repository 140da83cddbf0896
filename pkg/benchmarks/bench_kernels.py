"""Compare the compiled and pure-Python homomorphism search kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both kernels run the same search plans; results are checked for equality
before timings are reported.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from endograph.groups import (AbelianShape, hom_plan, make_abelian, make_symmetric,
                              minimal_generating_set)
from endograph.catalog import catalog_group
from endograph.morphisms import _dividing_candidates, _equal_order_candidates
from endograph._kernels import _pykernels

try:
    from endograph._kernels import _ckernels
except ImportError:
    _ckernels = None


def _cases():
    z2_4 = make_abelian(AbelianShape(((2, 1, 4),)))
    z4_z2_3 = make_abelian(AbelianShape(((2, 2, 1), (2, 1, 3))))
    s4 = make_symmetric(4)
    q8 = catalog_group("Q8")
    yield "End((Z2)^4)", z2_4, _dividing_candidates, False
    yield "Aut((Z2)^4)", z2_4, _equal_order_candidates, True
    yield "End(Z4 x Z2^3)", z4_z2_3, _dividing_candidates, False
    yield "End(S4)", s4, _dividing_candidates, False
    yield "End(Q8)", q8, _dividing_candidates, False


def _run(kernel, g, pick, injective):
    gens = minimal_generating_set(g)
    plan = hom_plan(g, gens)
    cands = [pick(g, s) for s in gens]
    return kernel.search_homs(g.table, g.table, plan.seq, plan.parent, plan.pgen,
                              plan.level_end, plan.gens, cands, injective, 0)


def _time(kernel, g, pick, injective, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = _run(kernel, g, pick, injective)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernel not built; timing the fallback only")
    print(f"{'case':<18}{'homs':>8}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for name, g, pick, inj in _cases():
        tp, rp = _time(_pykernels, g, pick, inj, args.repeat)
        if _ckernels is None:
            print(f"{name:<18}{len(rp):>8}{tp:>11.4f}{'-':>11}{'-':>9}")
            continue
        tc, rc = _time(_ckernels, g, pick, inj, args.repeat)
        if not np.array_equal(rp, rc):
            raise SystemExit(f"{name}: kernels disagree")
        print(f"{name:<18}{len(rp):>8}{tp:>11.4f}{tc:>11.4f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
