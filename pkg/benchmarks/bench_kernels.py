"""Time the subset kernels under each available backend.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

import numpy as np

from hsstab import kernels
from hsstab.constructions import direct_product, nonnormal_rees_instance, symmetric_group
from hsstab.hs import _hs_indices


def workloads():
    rees = nonnormal_rees_instance()
    big = direct_product(symmetric_group(4), symmetric_group(3))  # order 144
    rng = random.Random(0)
    for s in (rees, big):
        n = s.order
        t = np.array([rng.random() < 0.3 for _ in range(n)], dtype=np.uint8)
        small = np.zeros(n, dtype=np.uint8)
        small[rng.sample(range(n), 2)] = 1
        hs = _hs_indices(s)
        tab, star = s.table, s.star
        yield s.name, n, {
            "find_nonassociative": lambda tab=tab: kernels.find_nonassociative(tab),
            "set_product": lambda tab=tab, t=t: kernels.set_product(tab, t, t),
            "omega": lambda tab=tab, t=t: kernels.omega(tab, t),
            "closure": lambda tab=tab, star=star, s_=small: kernels.closure(tab, star, s_, True),
            "hs_saturate": lambda tab=tab, star=star, hs=hs, s_=small: kernels.hs_saturate(tab, star, hs, s_),
            "hs2_violation": lambda tab=tab, hs=hs, t=t: kernels.hs2_violation(tab, hs, t),
            "conjugated_squares": lambda tab=tab, star=star, hs=hs: kernels.conjugated_squares(tab, star, hs),
        }


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    backends = kernels.available_backends()
    print(f"{'workload':<30}" + "".join(f"{b + ' (ms)':>14}" for b in backends)
          + ("      speedup" if len(backends) == 2 else ""))
    for name, n, funcs in workloads():
        for fname, fn in funcs.items():
            times = []
            for b in backends:
                kernels.set_backend(b)
                number = 3
                best = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
                times.append(best * 1e3)
            row = f"{name + ' ' + fname:<30}" + "".join(f"{t:>14.3f}" for t in times)
            if len(times) == 2:
                row += f"{times[0] / times[1]:>12.1f}x"
            print(row)
    kernels.set_backend(backends[-1])


if __name__ == "__main__":
    main()
