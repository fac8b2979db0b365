"""Timing comparison of the two kernel backends.

Runs each batched kernel on identical inputs through the NumPy reference
implementation and the compiled extension, and prints the per-call time of
each with the speedup factor. Usage:

    python benchmarks/bench_kernels.py [--rows 20000] [--repeats 7]
"""

import argparse
import sys
import time

import numpy as np

from dupin.clifford import build_system
from dupin._kern import pure

try:
    from dupin._kern import _fast as fast
except ImportError:
    fast = None


def best_of(fn, repeats):
    fn()  # warm-up
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=20000,
                    help="batch size for the batched kernels")
    ap.add_argument("--repeats", type=int, default=7,
                    help="timing repeats, best is kept")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if fast is None:
        print("compiled backend not available; build it with "
              "`pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    rng = np.random.default_rng(args.seed)
    n = args.rows

    X8 = rng.normal(size=(n, 8))
    X8 /= np.linalg.norm(X8, axis=1, keepdims=True)
    X5 = rng.normal(size=(n, 5))
    X5 /= np.linalg.norm(X5, axis=1, keepdims=True)
    pole = np.zeros(5)
    pole[0] = 1.0
    # keep every row clear of the warp pole
    X5 = X5[np.abs(1.0 - X5 @ pole) > 1e-2]
    invc = 1.0 / 1.5

    alpha = np.sqrt(0.3)
    beta = np.sqrt(0.7)
    e_mats = [np.asarray(m, dtype=float) for m in build_system(2, 4).mats]
    x0 = rng.normal(size=8)

    cases = [
        ("hopf5_batch", lambda k: k.hopf5_batch(X8)),
        ("hopf_jac_batch", lambda k: k.hopf_jac_batch(X8)),
        ("mobius_point_batch", lambda k: k.mobius_point_batch(X5, pole, invc)),
        ("mobius_jac_batch", lambda k: k.mobius_jac_batch(X5, pole, invc)),
        ("cartan_val_batch", lambda k: k.cartan_val_batch(X5)),
        ("cartan_grad_batch", lambda k: k.cartan_grad_batch(X5)),
        ("mo_val_batch (lifted, warped)",
         lambda k: k.mo_val_batch(X8, 0, 0.6, invc, pole, True)),
        ("mo_grad_batch (lifted, warped)",
         lambda k: k.mo_grad_batch(X8, 0, 0.6, invc, pole, True)),
        ("ptc_project x100",
         lambda k: [k.ptc_project(x0.copy(), e_mats, alpha, beta)
                    for _ in range(100)]),
    ]

    print(f"rows: {n}   repeats: {args.repeats} (best kept)")
    print(f"{'kernel':34s} {'pure':>10s} {'fast':>10s} {'speedup':>8s}")
    for name, call in cases:
        tp = best_of(lambda: call(pure), args.repeats)
        tf = best_of(lambda: call(fast), args.repeats)
        print(f"{name:34s} {tp * 1e3:9.3f}ms {tf * 1e3:9.3f}ms "
              f"{tp / tf:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
