"""Compare the compiled and pure-Python GF(p) kernels.

Run with: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from heisurf import _pykernels
from heisurf.surfaces.quartic4 import synthetic_octic

try:
    from heisurf import _ckernels
except ImportError:
    _ckernels = None

P = 10007


def workloads(mod):
    F = synthetic_octic(0)
    exps = list(F.terms)
    coeffs = [int(F.terms[e]) % P for e in exps]
    poly = mod.ModPoly(exps, coeffs, P)
    rng = random.Random(1)
    point = [rng.randrange(P) for _ in range(8)]
    rows = [[rng.randrange(P) for _ in range(40)] for _ in range(40)]
    return {
        "octic eval": lambda: poly.eval(point),
        "rank 40x40": lambda: mod.rank_mod(rows, P),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    results = {}
    for name, mod in backends:
        for label, fn in workloads(mod).items():
            results[(label, name)] = min(timeit.repeat(fn, number=args.repeat, repeat=3)) / args.repeat
    for label in ("octic eval", "rank 40x40"):
        py = results[(label, "python")]
        line = f"{label:12s} python {py * 1e6:9.1f} us"
        if _ckernels:
            cy = results[(label, "cython")]
            line += f"   cython {cy * 1e6:9.1f} us   speedup {py / cy:5.1f}x"
        print(line)
    if not _ckernels:
        print("compiled kernels not built; only the pure-Python backend was timed")


if __name__ == "__main__":
    main()
