"""Compare the numba and numpy kernel backends on the named matroids.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Numba timings exclude the first (compiling) call.
"""
from __future__ import annotations

import argparse
import math
import time

import numpy as np

from erections import expand, graph_from_rank3
from erections._bits import popcount, to_int64
from erections._kernels import available_backends, get_backend
from erections.bounds import _Incidence
from erections.corpus import NAMED


def _best_of(fn, repeat: int) -> float:
    fn()  # warm-up (numba compile / import caches)
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def _cases():
    mats = {k: f() for k, f in NAMED.items()}

    def exact(m):
        inc = _Incidence(m)
        return lambda k: [k.exact_scan(first, m.n, *inc.args) for first in range(m.n)]

    def beta(m):
        g = graph_from_rank3(m)
        lines = [ln for ln in g.lines if popcount(ln) >= 2]
        arr = to_int64(lines)
        pairs = np.array([math.comb(popcount(ln), 2) for ln in lines], dtype=np.int64)
        free = to_int64([g.points])[0]
        return lambda k: k.beta_linear(arr, pairs, np.int64(0), free, len(g.lines))

    def refine_all():
        args = [
            (to_int64(expand(m.copoints, m.n)), to_int64(m.copoints)) for m in mats.values()
        ]
        return lambda k: [k.refine(f, g) for f, g in args]

    yield "exact scan M5 (8! perms)", exact(mats["M5"])
    yield "exact scan M6 (9! perms)", exact(mats["M6"])
    yield "beta point sets M5", beta(mats["M5"])
    yield "beta point sets M6", beta(mats["M6"])
    yield "refine, six matroids", refine_all()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    names = available_backends()
    backends = {n: get_backend(n) for n in names}
    print(f"{'case':<28}" + "".join(f"{n:>12}" for n in names) + (f"{'speedup':>10}" if len(names) == 2 else ""))
    for label, run in _cases():
        times = {n: _best_of(lambda k=k: run(k), args.repeat) for n, k in backends.items()}
        row = f"{label:<28}" + "".join(f"{times[n] * 1e3:>10.3f}ms" for n in names)
        if len(names) == 2:
            row += f"{times['numpy'] / times['numba']:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
