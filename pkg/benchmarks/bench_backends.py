"""Compare the compiled kernel against the pure-Python fallback.

Runs the same workloads twice, once per backend, in separate
interpreters so each process binds exactly one implementation.  Inside a
single process the raw term-map operations are also timed head to head,
since both modules can be imported side by side.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

_WORKLOAD = r"""
import time
from starkit import _kernel
from starkit.corpus import random_poly
from starkit.moyal import StarProduct

sp = StarProduct.standard(2, order=8)
# densify: products of sparse draws give polynomials with dozens of terms
polys = [random_poly(4, 3, seed=s) * random_poly(4, 3, seed=s + 50)
         + random_poly(4, 4, seed=s + 100)
         for s in range(8)]
pairs = list(zip(polys[::2], polys[1::2]))

t0 = time.perf_counter()
for _ in range(3):
    for f, g in pairs:
        sp.star(f, g)
elapsed = time.perf_counter() - t0
print(f"{_kernel.BACKEND} {elapsed:.4f}")
"""


def run_star_workload(backend: str) -> float:
    env = dict(os.environ, STARKIT_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", _WORKLOAD], env=env,
                         capture_output=True, text=True, check=True)
    name, seconds = out.stdout.split()
    if not name.startswith(backend[:2]):
        raise RuntimeError(f"asked for {backend}, got {name}")
    return float(seconds)


def _dense_map(arity: int, max_degree: int, salt: int):
    """Every monomial of total degree <= max_degree, simple coefficients."""
    from itertools import product
    out = {}
    for exps in product(range(max_degree + 1), repeat=arity):
        if sum(exps) > max_degree:
            continue
        k = (sum(exps) + salt) % 5 + 1
        out[exps] = (k, k + 1, (k % 3) - 1, 2)
    return out


def raw_mmul_times(repeat: int):
    """Time mmul on identical inputs for both kernel modules."""
    from starkit._kernel import py_ops
    try:
        from starkit._kernel import cy_ops
    except ImportError:
        cy_ops = None

    fm = _dense_map(4, 4, salt=0)
    gm = _dense_map(4, 4, salt=2)

    results = {}
    for label, mod in (("python", py_ops), ("cython", cy_ops)):
        if mod is None:
            continue
        t0 = time.perf_counter()
        for _ in range(repeat):
            mod.mmul(fm, gm)
        results[label] = time.perf_counter() - t0
    return results


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()

    n_terms = len(_dense_map(4, 4, salt=0))
    print(f"raw mmul, {n_terms}x{n_terms} terms, repeated",
          args.repeat, "times")
    raw = raw_mmul_times(args.repeat)
    for label, seconds in raw.items():
        print(f"  {label:7s} {seconds:.4f}s")
    if len(raw) == 2:
        print(f"  speedup {raw['python'] / raw['cython']:.2f}x")

    print("star product at order 8, 4 pairs of dense degree-6 inputs, dim 4")
    times = {}
    for backend in ("py", "c"):
        try:
            times[backend] = run_star_workload(backend)
        except (RuntimeError, subprocess.CalledProcessError) as exc:
            print(f"  backend {backend} unavailable: {exc}")
    for backend, seconds in times.items():
        label = "python" if backend == "py" else "cython"
        print(f"  {label:7s} {seconds:.4f}s")
    if len(times) == 2:
        print(f"  speedup {times['py'] / times['c']:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
