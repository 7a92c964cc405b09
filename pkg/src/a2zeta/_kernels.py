"""Modular linear-algebra kernels behind the exact determinant engine.

Every kernel has a numba ``@njit`` version and a pure-numpy version with the
same signature. ``A2ZETA_KERNEL=numpy`` forces the numpy path; it is also used
when numba is not importable. ``A2ZETA_THREADS`` caps numba's thread pool.

All arrays are int64 with entries reduced into ``[0, p)`` and ``p < 2**31`` so
that a product of two residues fits in int64.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
    from numba import njit, prange

    NUMBA_AVAILABLE = True
    # prefer OpenMP; an old system TBB otherwise triggers a warning on first use
    if "NUMBA_THREADING_LAYER_PRIORITY" not in os.environ:
        numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

MAX_PRIME = 2**31 - 1


def backend() -> str:
    """Name of the kernel backend selected by the environment."""
    if os.environ.get("A2ZETA_KERNEL", "").strip().lower() == "numpy" or not NUMBA_AVAILABLE:
        return "numpy"
    return "numba"


def _apply_thread_cap() -> None:
    cap = os.environ.get("A2ZETA_THREADS")
    if not (NUMBA_AVAILABLE and cap):
        return
    try:
        n = max(1, min(int(cap), numba.config.NUMBA_NUM_THREADS))
    except ValueError:
        return
    numba.set_num_threads(n)


# ---------------------------------------------------------------- numpy path


def _inv_mod_py(a: int, p: int) -> int:
    return pow(int(a) % p, -1, p)


def det_mod_batch_np(mats: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod ``p`` of a stack ``mats[B, n, n]``."""
    a = np.array(mats, dtype=np.int64, copy=True) % p
    nb, n, _ = a.shape
    det = np.ones(nb, dtype=np.int64)
    alive = np.ones(nb, dtype=bool)
    rows = np.arange(nb)
    for k in range(n):
        nz = a[:, k:, k] != 0
        has = nz.any(axis=1)
        alive &= has
        piv = np.argmax(nz, axis=1) + k
        swap = alive & (piv != k)
        if swap.any():
            idx = rows[swap]
            pk = piv[swap]
            tmp = a[idx, k, :].copy()
            a[idx, k, :] = a[idx, pk, :]
            a[idx, pk, :] = tmp
            det[idx] = (p - det[idx]) % p
        pivots = a[:, k, k]
        det = np.where(alive, det * pivots % p, 0)
        if k == n - 1:
            break
        inv = np.array([_inv_mod_py(x, p) if x else 0 for x in pivots], dtype=np.int64)
        f = a[:, k + 1 :, k] * inv[:, None] % p
        a[:, k + 1 :, k + 1 :] = (a[:, k + 1 :, k + 1 :] - f[:, :, None] * a[:, k, None, k + 1 :]) % p
    return np.where(alive, det, 0)


def eval_mod_np(coeffs: np.ndarray, xs: np.ndarray, p: int) -> np.ndarray:
    """Evaluate ``sum_k coeffs[k] x^k`` mod ``p`` at each ``x`` in ``xs``."""
    xs = np.asarray(xs, dtype=np.int64) % p
    out = np.zeros((len(xs),) + coeffs.shape[1:], dtype=np.int64)
    xb = xs[:, None, None]
    for k in range(coeffs.shape[0] - 1, -1, -1):
        out = (out * xb + coeffs[k][None]) % p
    return out


def interp_mod_np(xs: np.ndarray, ys: np.ndarray, p: int) -> np.ndarray:
    """Coefficients (constant first) of the interpolant through ``(xs, ys)`` mod ``p``."""
    xs = [int(x) % p for x in xs]
    c = [int(y) % p for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            c[i] = (c[i] - c[i - 1]) * pow((xs[i] - xs[i - j]) % p, -1, p) % p
    coef = [0] * n
    coef[0] = c[n - 1]
    for i in range(n - 2, -1, -1):
        xi = xs[i]
        for k in range(n - 1, 0, -1):
            coef[k] = (coef[k - 1] - xi * coef[k]) % p
        coef[0] = (c[i] - xi * coef[0]) % p
    return np.array(coef, dtype=np.int64)


# ---------------------------------------------------------------- numba path

if NUMBA_AVAILABLE:

    @njit(cache=True)
    def _inv_mod_nb(a, p):
        t, newt = 0, 1
        r, newr = p, a % p
        while newr != 0:
            q = r // newr
            t, newt = newt, t - q * newt
            r, newr = newr, r - q * newr
        if t < 0:
            t += p
        return t

    @njit(cache=True, parallel=True)
    def _det_mod_batch_nb(mats, p):
        nb, n, _ = mats.shape
        out = np.empty(nb, dtype=np.int64)
        for b in prange(nb):
            a = mats[b].copy()
            det = 1
            for k in range(n):
                piv = -1
                for i in range(k, n):
                    if a[i, k] != 0:
                        piv = i
                        break
                if piv < 0:
                    det = 0
                    break
                if piv != k:
                    for j in range(k, n):
                        tmp = a[k, j]
                        a[k, j] = a[piv, j]
                        a[piv, j] = tmp
                    det = (p - det) % p
                det = det * a[k, k] % p
                inv = _inv_mod_nb(a[k, k], p)
                for i in range(k + 1, n):
                    f = a[i, k] * inv % p
                    if f != 0:
                        for j in range(k + 1, n):
                            a[i, j] = (a[i, j] - f * a[k, j]) % p
            out[b] = det
        return out

    @njit(cache=True, parallel=True)
    def _eval_mod_nb(coeffs, xs, p):
        kk, n, m = coeffs.shape
        nb = xs.shape[0]
        out = np.zeros((nb, n, m), dtype=np.int64)
        for b in prange(nb):
            x = xs[b] % p
            for k in range(kk - 1, -1, -1):
                for i in range(n):
                    for j in range(m):
                        out[b, i, j] = (out[b, i, j] * x + coeffs[k, i, j]) % p
        return out

    @njit(cache=True)
    def _interp_mod_nb(xs, ys, p):
        n = xs.shape[0]
        x = xs % p
        c = ys % p
        for j in range(1, n):
            for i in range(n - 1, j - 1, -1):
                c[i] = (c[i] - c[i - 1]) % p * _inv_mod_nb((x[i] - x[i - j]) % p, p) % p
        coef = np.zeros(n, dtype=np.int64)
        coef[0] = c[n - 1]
        for i in range(n - 2, -1, -1):
            xi = x[i]
            for k in range(n - 1, 0, -1):
                coef[k] = (coef[k - 1] - xi * coef[k] % p) % p
            coef[0] = (c[i] - xi * coef[0] % p) % p
        return coef


# ---------------------------------------------------------------- dispatch


def det_mod_batch(mats: np.ndarray, p: int) -> np.ndarray:
    if mats.shape[1] == 0:
        return np.ones(mats.shape[0], dtype=np.int64)
    if backend() == "numba":
        _apply_thread_cap()
        return _det_mod_batch_nb(np.ascontiguousarray(mats, dtype=np.int64) % p, np.int64(p))
    return det_mod_batch_np(mats, p)


def eval_mod(coeffs: np.ndarray, xs: np.ndarray, p: int) -> np.ndarray:
    if backend() == "numba":
        _apply_thread_cap()
        return _eval_mod_nb(
            np.ascontiguousarray(coeffs, dtype=np.int64) % p, np.asarray(xs, dtype=np.int64), np.int64(p)
        )
    return eval_mod_np(np.asarray(coeffs, dtype=np.int64) % p, xs, p)


def interp_mod(xs: np.ndarray, ys: np.ndarray, p: int) -> np.ndarray:
    if backend() == "numba":
        return _interp_mod_nb(np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64), np.int64(p))
    return interp_mod_np(xs, ys, p)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIMES: list[int] = []


def primes(count: int) -> list[int]:
    """The ``count`` largest primes below ``2**31``, descending."""
    p = _PRIMES[-1] - 1 if _PRIMES else MAX_PRIME
    while len(_PRIMES) < count:
        if _is_prime(p):
            _PRIMES.append(p)
        p -= 1
    return _PRIMES[:count]
