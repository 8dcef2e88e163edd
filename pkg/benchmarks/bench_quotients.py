"""Compare the numba and numpy backends of the S_m quotient search.

    python3 benchmarks/bench_quotients.py [--max-m 7] [--repeat 3]

The first numba call per process is timed separately as "compile/load"
(a cold on-disk cache means a real JIT compile; a warm one only a load).
"""
import argparse
import time

import numpy as np

from relator_forge.presentation import A, B, baumslag_group, make_G
from relator_forge.quotients import HAVE_NUMBA, satisfying_mask
from relator_forge.words import power

CASES = {
    "B = G_{a,b}(1,2)": baumslag_group(),
    "G_{a,b^2}(2,3)": make_G(A, power(B, 2), 2, 3),
}


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    p = baumslag_group()
    t0 = time.perf_counter()
    satisfying_mask(p.relators, p.generators, 2, "numba")
    print(f"numba compile/load: {time.perf_counter() - t0:.2f}s\n")

    print(f"{'group':<18} {'m':>2} {'pairs':>11} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    for name, p in CASES.items():
        for m in range(2, args.max_m + 1):
            t_np, a = best_of(lambda: satisfying_mask(p.relators, p.generators, m, "numpy"), args.repeat)
            t_nb, b = best_of(lambda: satisfying_mask(p.relators, p.generators, m, "numba"), args.repeat)
            assert np.array_equal(a, b), "backends disagree"
            print(f"{name:<18} {m:>2} {a.size:>11,} {t_np:>9.4f} {t_nb:>9.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
