"""Time each sweep kernel under the numba and numpy backends.

    python3 benchmarks/bench_kernels.py --m 11 --repeat 3

The first numba call per kernel includes compilation and is reported
separately as "warmup".
"""

import argparse
import time

import numpy as np

from trinodiff import kernels
from trinodiff import polyfun as pf
from trinodiff.curves import curve
from trinodiff.gf2m import make_field


def cases(ctx):
    D = pf.punctured_value_set(pf.catalog("f11", ctx.m), ctx)
    el = D.elements()
    f = D.mask.astype(np.int64)
    I, J = curve("c41_C3").arrays()
    t = (ctx.exp, ctx.log, ctx.order, ctx.trace_table)
    return {
        "difference_counts": lambda b: b.difference_counts(ctx.log[el], ctx.order),
        "bipoly_grid": lambda b: b.bipoly_grid(I, J, ctx.size, ctx.exp, ctx.log, ctx.order),
        "bipoly_zero_points": lambda b: b.bipoly_zero_points(I, J, ctx.size, ctx.exp, ctx.log, ctx.order),
        "fwht": lambda b: b.fwht(1 - 2 * f),
        "walsh_direct": lambda b: b.walsh_direct(f, *t),
        "code_weights": lambda b: b.code_weights(el, ctx.size, *t),
        "triple_count": lambda b: b.triple_count(el, D.mask),
        "root_counts": lambda b: b.root_counts(5, ctx.size, ctx.exp, ctx.log, ctx.order),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    ctx = make_field(args.m)
    backends = {"numpy": kernels.numpy_backend}
    if kernels.numba_backend is not None:
        backends["numba"] = kernels.numba_backend
    print(f"m={args.m}  best of {args.repeat}, seconds")
    print(f"{'kernel':<20} {'numpy':>10} {'numba':>10} {'warmup':>10} {'speedup':>8}")
    for name, run in cases(ctx).items():
        row = {}
        warm = None
        if "numba" in backends:
            t0 = time.perf_counter()
            nb_out = run(backends["numba"])
            warm = time.perf_counter() - t0
            row["numba"] = best_of(lambda: run(backends["numba"]), args.repeat)
        np_out = run(backends["numpy"])
        row["numpy"] = best_of(lambda: run(backends["numpy"]), args.repeat)
        if "numba" in backends and not np.array_equal(np.asarray(np_out), np.asarray(nb_out)):
            raise SystemExit(f"{name}: backends disagree")
        nb = row.get("numba")
        speed = f"{row['numpy'] / nb:8.1f}" if nb else "       -"
        print(f"{name:<20} {row['numpy']:10.4f} {nb if nb is not None else float('nan'):10.4f} "
              f"{warm if warm is not None else float('nan'):10.4f} {speed}")


if __name__ == "__main__":
    main()
