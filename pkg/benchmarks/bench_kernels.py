"""Compare the numba kernels with the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Times the batched modular determinant on random matrices and the full
determinant of I - M_E for the d=3 permutation representation.  Results of
both backends are checked to agree before any timing is printed.
"""

import argparse
import os
import time

import numpy as np

from a2zeta import _kernels as K
from a2zeta.algebra import PolyMatrix, det
from a2zeta.cli import default_complex
from a2zeta.operators import build_edge_op
from a2zeta.rep_voltage import permutation_representation


def _with_backend(name, fn):
    old = os.environ.get("A2ZETA_KERNEL")
    os.environ["A2ZETA_KERNEL"] = name
    try:
        return fn()
    finally:
        if old is None:
            os.environ.pop("A2ZETA_KERNEL", None)
        else:
            os.environ["A2ZETA_KERNEL"] = old


def _best(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--size", type=int, default=63)
    ap.add_argument("--batch", type=int, default=64)
    args = ap.parse_args()

    p = K.primes(1)[0]
    rng = np.random.default_rng(0)
    mats = rng.integers(0, p, size=(args.batch, args.size, args.size), dtype=np.int64)

    c = default_complex()
    ME = build_edge_op(c, permutation_representation(c.group))
    A = PolyMatrix.identity(ME.shape[0], True) - ME

    cases = {
        f"det_mod_batch {args.batch}x{args.size}x{args.size}": lambda: K.det_mod_batch(mats, p),
        f"det(I - M_E) {A.shape[0]}x{A.shape[0]}": lambda: det(A),
    }
    if K.NUMBA_AVAILABLE:
        # compile outside the timed region
        _with_backend("numba", lambda: [fn() for fn in cases.values()])
    print(f"{'case':<34}{'numpy s':>10}{'numba s':>10}{'speedup':>9}")
    for name, fn in cases.items():
        t_np, r_np = _with_backend("numpy", lambda: _best(fn, args.repeat))
        if not K.NUMBA_AVAILABLE:
            print(f"{name:<34}{t_np:>10.4f}{'n/a':>10}{'':>9}")
            continue
        t_nb, r_nb = _with_backend("numba", lambda: _best(fn, args.repeat))
        same = np.array_equal(r_np, r_nb) if isinstance(r_np, np.ndarray) else r_np == r_nb
        if not same:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<34}{t_np:>10.4f}{t_nb:>10.4f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
