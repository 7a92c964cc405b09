"""Exact univariate polynomials over Q, polynomial matrices and determinants.

Polynomials store their coefficients constant-first, with no trailing zeros;
the zero polynomial has an empty coefficient tuple and degree -1.

``PolyMatrix`` keeps a coefficient stack ``coeffs[k, i, j]`` (the u^k part of
entry (i, j)).  Exact matrices use an object array of Python ``int`` /
``Fraction``; matrices built from a floating representation use complex128.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

Scalar = int | Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


def _norm(x):
    """Fraction with unit denominator -> int, so exact arrays stay integral."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, np.integer):
        return int(x)
    return x


# ------------------------------------------------------------------ Polynomial


class Polynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def one(cls) -> "Polynomial":
        return cls([1])

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Polynomial":
        return cls(Fraction(s) for s in items)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self._c]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self._c)}])"

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    @staticmethod
    def _coerce(x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        return Polynomial([x])

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self._c), len(o._c))
        return Polynomial(self.coeff(k) + o.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self._c)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self._c)
        o = self._coerce(other)
        if not self._c or not o._c:
            return Polynomial()
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Polynomial.one(), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = len(rem) - len(o._c)
        if dq < 0:
            return Polynomial(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = o._c[-1]
        for k in range(dq, -1, -1):
            t = rem[k + len(o._c) - 1] / lead
            quo[k] = t
            if t:
                for j, b in enumerate(o._c):
                    rem[k + j] -= t * b
        return Polynomial(quo), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self._c) if k)

    def neg_var(self) -> "Polynomial":
        """p(-u)."""
        return Polynomial(c if k % 2 == 0 else -c for k, c in enumerate(self._c))

    def scale_var(self, s: Scalar) -> "Polynomial":
        """p(s u)."""
        s = _frac(s)
        return Polynomial(c * s**k for k, c in enumerate(self._c))

    def truncate(self, n: int) -> "Polynomial":
        """p mod u^n."""
        return Polynomial(self._c[:n])

    def compose(self, other) -> "RationalFunction":
        """p(r) for a polynomial or rational function r."""
        r = other if isinstance(other, RationalFunction) else RationalFunction(other)
        n = self.degree
        if n < 0:
            return RationalFunction(Polynomial())
        num = Polynomial()
        npow = Polynomial.one()
        dpows = [Polynomial.one()]
        for _ in range(n):
            dpows.append(dpows[-1] * r.den)
        for k, c in enumerate(self._c):
            if c:
                num = num + npow * dpows[n - k] * c
            npow = npow * r.num
        return RationalFunction(num, dpows[n])

    def to_complex(self) -> np.ndarray:
        return np.array([complex(c) for c in self._c], dtype=complex)


U = Polynomial([0, 1])


def one_minus_u3_pow(e: int) -> Polynomial:
    """(1 - u^3)^e for e >= 0."""
    return Polynomial([1, 0, 0, -1]) ** e


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; ``poly_gcd(0, 0) == 0``."""
    a, b = Polynomial._coerce(a), Polynomial._coerce(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def reverse_transform(p: Polynomial, s: Scalar, D: int) -> Polynomial:
    """(s u)^D p(1/(s u)) as a polynomial; needs ``D >= deg p``."""
    if D < p.degree:
        raise ValueError(f"D={D} is smaller than deg p={p.degree}")
    s = _frac(s)
    out = [Fraction(0)] * (D + 1)
    for k, c in enumerate(p.coeffs):
        out[D - k] = c * s ** (D - k)
    return Polynomial(out)


# ------------------------------------------------------------ RationalFunction


class RationalFunction:
    """num/den in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Polynomial._coerce(num)
        den = Polynomial.one() if den is None else Polynomial._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lead = den.leading
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    @staticmethod
    def _coerce(x) -> "RationalFunction":
        return x if isinstance(x, RationalFunction) else RationalFunction(x)

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __pow__(self, e: int):
        if e >= 0:
            return RationalFunction(self.num**e, self.den**e)
        return RationalFunction(self.den ** (-e), self.num ** (-e))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def compose(self, other) -> "RationalFunction":
        return self.num.compose(other) / self.den.compose(other)


# ------------------------------------------------------------------ PolyMatrix

_INT64_SAFE = 2**62


def _as_int64(a: np.ndarray) -> np.ndarray | None:
    if a.dtype != object:
        return None
    flat = a.ravel()
    if not all(type(x) is int for x in flat):
        return None
    if flat.size and max(abs(x) for x in flat) >= 2**62:
        return None
    return a.astype(np.int64)


def _normalize_obj(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        flat = a.ravel()
        for i, x in enumerate(flat):
            if type(x) is not int:
                flat[i] = _norm(x)
    return a


class PolyMatrix:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: np.ndarray):
        c = np.asarray(coeffs)
        if c.ndim != 3:
            raise ValueError("coefficient stack must have shape (K, rows, cols)")
        if c.shape[0] == 0:
            c = np.zeros((1,) + c.shape[1:], dtype=c.dtype)
        self.coeffs = c

    # construction
    @classmethod
    def zeros(cls, n: int, m: int, exact: bool = True, degree: int = 0) -> "PolyMatrix":
        if exact:
            arr = np.empty((degree + 1, n, m), dtype=object)
            arr.fill(0)
        else:
            arr = np.zeros((degree + 1, n, m), dtype=complex)
        return cls(arr)

    @classmethod
    def identity(cls, n: int, exact: bool = True) -> "PolyMatrix":
        M = cls.zeros(n, n, exact)
        for i in range(n):
            M.coeffs[0, i, i] = 1
        return M

    @classmethod
    def scalar(cls, p: Polynomial, n: int, exact: bool = True) -> "PolyMatrix":
        """p(u) times the n x n identity."""
        M = cls.zeros(n, n, exact, max(p.degree, 0))
        for k, c in enumerate(p.coeffs):
            for i in range(n):
                M.coeffs[k, i, i] = _norm(c) if exact else complex(c)
        return M

    @classmethod
    def from_polys(cls, grid: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        n = len(grid)
        m = len(grid[0]) if n else 0
        K = max([p.degree for row in grid for p in row] + [0]) + 1
        M = cls.zeros(n, m, True, K - 1)
        for i, row in enumerate(grid):
            for j, p in enumerate(row):
                for k, c in enumerate(p.coeffs):
                    M.coeffs[k, i, j] = _norm(c)
        return M

    @classmethod
    def constant(cls, a: np.ndarray) -> "PolyMatrix":
        a = np.asarray(a)
        if a.dtype != object and not np.iscomplexobj(a):
            a = a.astype(object) if np.issubdtype(a.dtype, np.integer) else a.astype(complex)
        return cls(_normalize_obj(a.copy())[None])

    # basic properties
    @property
    def exact(self) -> bool:
        return self.coeffs.dtype == object

    @property
    def shape(self) -> tuple[int, int]:
        return self.coeffs.shape[1], self.coeffs.shape[2]

    def _slice_nonzero(self, k: int) -> bool:
        s = self.coeffs[k]
        if self.exact:
            return any(x != 0 for x in s.ravel())
        return bool(np.any(s != 0))

    @property
    def degree(self) -> int:
        for k in range(self.coeffs.shape[0] - 1, -1, -1):
            if self._slice_nonzero(k):
                return k
        return -1

    def trimmed(self) -> "PolyMatrix":
        d = self.degree
        return PolyMatrix(self.coeffs[: max(d, 0) + 1].copy())

    def is_zero(self) -> bool:
        return self.degree < 0

    def entry(self, i: int, j: int) -> Polynomial:
        return Polynomial(self.coeffs[:, i, j])

    def copy(self) -> "PolyMatrix":
        return PolyMatrix(self.coeffs.copy())

    def __repr__(self) -> str:
        n, m = self.shape
        return f"PolyMatrix({n}x{m}, degree={self.degree}, exact={self.exact})"

    # arithmetic
    def _padded(self, K: int) -> np.ndarray:
        c = self.coeffs
        if c.shape[0] >= K:
            return c
        pad = np.zeros((K - c.shape[0],) + c.shape[1:], dtype=c.dtype)
        if c.dtype == object:
            pad = pad.astype(object)
            pad.fill(0)
        return np.concatenate([c, pad])

    def _unify(self, other: "PolyMatrix") -> tuple[np.ndarray, np.ndarray]:
        K = max(self.coeffs.shape[0], other.coeffs.shape[0])
        a, b = self._padded(K), other._padded(K)
        if a.dtype != b.dtype:
            a, b = a.astype(complex), b.astype(complex)
        return a, b

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        a, b = self._unify(other)
        return PolyMatrix(_normalize_obj(a + b))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        a, b = self._unify(other)
        return PolyMatrix(_normalize_obj(a - b))

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(-self.coeffs)

    def __mul__(self, other) -> "PolyMatrix":
        """Scalar or scalar-polynomial multiple."""
        if isinstance(other, Polynomial):
            if other.is_zero():
                return PolyMatrix.zeros(*self.shape, exact=self.exact)
            K = self.coeffs.shape[0] + other.degree
            out = PolyMatrix.zeros(*self.shape, exact=self.exact, degree=K - 1).coeffs
            for j, c in enumerate(other.coeffs):
                if c:
                    cc = _norm(c) if self.exact else complex(c)
                    out[j : j + self.coeffs.shape[0]] += self.coeffs * cc
            return PolyMatrix(_normalize_obj(out))
        if isinstance(other, Fraction):
            other = _norm(other)
        return PolyMatrix(_normalize_obj(self.coeffs * other))

    __rmul__ = __mul__

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        A, B = self.trimmed().coeffs, other.trimmed().coeffs
        if A.dtype != B.dtype:
            A, B = A.astype(complex), B.astype(complex)
        Ka, Kb = A.shape[0], B.shape[0]
        n, r = A.shape[1], B.shape[2]
        ia, ib = _as_int64(A), _as_int64(B)
        if ia is not None and ib is not None:
            bound = (
                int(np.abs(ia).max(initial=0)) * int(np.abs(ib).max(initial=0)) * A.shape[2] * min(Ka, Kb)
            )
            if bound < _INT64_SAFE:
                out = np.zeros((Ka + Kb - 1, n, r), dtype=np.int64)
                for i in range(Ka):
                    for j in range(Kb):
                        out[i + j] += ia[i] @ ib[j]
                return PolyMatrix(out.astype(object))
        if A.dtype == object:
            out = np.empty((Ka + Kb - 1, n, r), dtype=object)
            out.fill(0)
            for i in range(Ka):
                for j in range(Kb):
                    out[i + j] = out[i + j] + np.dot(A[i], B[j])
            return PolyMatrix(_normalize_obj(out))
        out = np.zeros((Ka + Kb - 1, n, r), dtype=complex)
        for i in range(Ka):
            for j in range(Kb):
                out[i + j] += A[i] @ B[j]
        return PolyMatrix(out)

    def __pow__(self, e: int) -> "PolyMatrix":
        out = PolyMatrix.identity(self.shape[0], self.exact)
        base = self
        while e:
            if e & 1:
                out = out @ base
            base = base @ base
            e >>= 1
        return out

    @property
    def T(self) -> "PolyMatrix":
        return PolyMatrix(self.coeffs.transpose(0, 2, 1).copy())

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def allclose(self, other: "PolyMatrix", rtol: float = 1e-9) -> bool:
        a, b = self._unify(other)
        a, b = a.astype(complex), b.astype(complex)
        scale = max(np.abs(b).max(initial=0.0), 1.0)
        return bool(np.abs(a - b).max(initial=0.0) <= rtol * scale)

    def trace(self) -> Polynomial:
        if not self.exact:
            raise TypeError("trace() is for exact matrices; use trace_complex()")
        return Polynomial(sum(np.diagonal(self.coeffs[k]).tolist()) for k in range(self.coeffs.shape[0]))

    def trace_complex(self) -> np.ndarray:
        return np.array([np.trace(self.coeffs[k]) for k in range(self.coeffs.shape[0])], dtype=complex)

    def neg_var(self) -> "PolyMatrix":
        """M(-u)."""
        c = self.coeffs.copy()
        c[1::2] = -c[1::2]
        return PolyMatrix(c)

    def shift(self, k: int) -> "PolyMatrix":
        """Multiply by u^k; negative k divides exactly by u^{-k}."""
        c = self.coeffs
        if k >= 0:
            pad = PolyMatrix.zeros(*self.shape, exact=self.exact, degree=k - 1).coeffs if k else c[:0]
            return PolyMatrix(np.concatenate([pad, c]))
        k = -k
        low = PolyMatrix(c[:k])
        if not low.is_zero():
            raise ArithmeticError(f"matrix is not divisible by u^{k}")
        return PolyMatrix(c[k:].copy())

    def evaluate(self, x) -> np.ndarray:
        """Matrix of values at u = x (object array for exact x, complex otherwise)."""
        c = self.coeffs
        if self.exact and isinstance(x, (int, Fraction)):
            out = np.empty(self.shape, dtype=object)
            out.fill(0)
            for k in range(c.shape[0] - 1, -1, -1):
                out = out * x + c[k]
            return _normalize_obj(out)
        out = np.zeros(self.shape, dtype=complex)
        for k in range(c.shape[0] - 1, -1, -1):
            out = out * x + c[k].astype(complex)
        return out

    def to_complex(self) -> "PolyMatrix":
        return PolyMatrix(self.coeffs.astype(complex))

    def nonzero_pattern(self) -> np.ndarray:
        """Boolean (rows, cols) mask of entries that are not the zero polynomial."""
        if self.exact:
            nz = np.vectorize(lambda x: x != 0, otypes=[bool])(self.coeffs)
        else:
            nz = self.coeffs != 0
        return nz.any(axis=0)

    def to_json(self) -> list:
        """Nested rows of polynomial serializations (lists of "p/q" strings)."""
        n, m = self.shape
        if not self.exact:
            return [
                [[[float(z.real), float(z.imag)] for z in np.trim_zeros(self.coeffs[:, i, j], "b")] for j in range(m)]
                for i in range(n)
            ]
        return [[self.entry(i, j).to_strings() for j in range(m)] for i in range(n)]

    @classmethod
    def from_json(cls, rows: list) -> "PolyMatrix":
        return cls.from_polys([[Polynomial.from_strings(e) for e in row] for row in rows])


def block_diag(*mats: PolyMatrix) -> PolyMatrix:
    n = sum(M.shape[0] for M in mats)
    m = sum(M.shape[1] for M in mats)
    K = max(M.coeffs.shape[0] for M in mats)
    exact = all(M.exact for M in mats)
    out = PolyMatrix.zeros(n, m, exact, K - 1).coeffs
    i = j = 0
    for M in mats:
        a, b = M.shape
        out[: M.coeffs.shape[0], i : i + a, j : j + b] = M.coeffs
        i += a
        j += b
    return PolyMatrix(out)


# --------------------------------------------------------------- determinants


def _integer_rows(M: PolyMatrix) -> tuple[np.ndarray, int]:
    """Scale each row to integer coefficients; returns (int object stack, prod of scales)."""
    c = M.trimmed().coeffs.copy()
    scale = 1
    for i in range(c.shape[1]):
        L = 1
        for x in c[:, i, :].ravel():
            if isinstance(x, Fraction):
                L = math.lcm(L, x.denominator)
        if L != 1:
            for x_idx in np.ndindex(c.shape[0], c.shape[2]):
                k, j = x_idx
                c[k, i, j] = _norm(Fraction(c[k, i, j]) * L)
            scale *= L
    return c, scale


def _degree_and_coeff_bounds(c: np.ndarray) -> tuple[int, int]:
    """Degree bound and a bound on |coefficients| of det for an integer stack."""
    K, n, _ = c.shape
    norms = np.empty((n, n), dtype=object)
    degs = np.full((n, n), -1, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            col = c[:, i, j]
            norms[i, j] = sum(abs(int(x)) for x in col)
            nz = [k for k in range(K) if col[k] != 0]
            degs[i, j] = nz[-1] if nz else -1
    row_deg = degs.max(axis=1)
    col_deg = degs.max(axis=0)
    if (row_deg < 0).any() or (col_deg < 0).any():
        return -1, 0
    D = int(min(row_deg.sum(), col_deg.sum()))
    rb = math.prod(int(sum(norms[i, :])) for i in range(n))
    cb = math.prod(int(sum(norms[:, j])) for j in range(n))
    return D, min(rb, cb)


def _det_modular_int(c: np.ndarray) -> list[int]:
    """Exact integer coefficients of det for an integer stack ``c[K, n, n]``."""
    n = c.shape[1]
    if n == 0:
        return [1]
    D, B = _degree_and_coeff_bounds(c)
    if D < 0 or B == 0:
        return []
    need = 2 * B + 1
    xs = np.arange(D + 1, dtype=np.int64)
    residues: list[int] | None = None
    modulus, count = 1, 0
    while modulus < need:
        count += 1
        modulus *= _kernels.primes(count)[-1]
    ps = _kernels.primes(count)
    for p in ps:
        cp = np.array([[[int(x) % p for x in row] for row in mat] for mat in c], dtype=np.int64)
        vals = _kernels.eval_mod(cp, xs, p)
        ys = _kernels.det_mod_batch(vals, p)
        coef = [int(v) for v in _kernels.interp_mod(xs, ys, p)]
        if residues is None:
            residues, modulus = coef, p
            continue
        inv = pow(modulus % p, -1, p)
        residues = [r + modulus * (((cp_ - r) * inv) % p) for r, cp_ in zip(residues, coef)]
        modulus *= p
    half = modulus // 2
    return [r - modulus if r > half else r for r in residues]


def _bareiss_int(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            if aik == 0:
                for j in range(k + 1, n):
                    rowi[j] = rowi[j] * akk // prev
            else:
                for j in range(k + 1, n):
                    rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _interp_points(count: int) -> list[int]:
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts


def _newton_interp(xs: Sequence[int], ys: Sequence) -> Polynomial:
    c = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j])
    poly = Polynomial([c[n - 1]])
    for i in range(n - 2, -1, -1):
        poly = poly * Polynomial([-xs[i], 1]) + c[i]
    return poly


def _det_interp_int(c: np.ndarray) -> Polynomial:
    n = c.shape[1]
    if n == 0:
        return Polynomial.one()
    D, _ = _degree_and_coeff_bounds(c)
    if D < 0:
        return Polynomial()
    xs = _interp_points(D + 1)
    ys = []
    for x in xs:
        val = [[0] * n for _ in range(n)]
        for k in range(c.shape[0] - 1, -1, -1):
            ck = c[k]
            for i in range(n):
                vi = val[i]
                for j in range(n):
                    vi[j] = vi[j] * x + int(ck[i, j])
        ys.append(_bareiss_int(val))
    return _newton_interp(xs, ys)


def _det_bareiss_poly(c: np.ndarray) -> Polynomial:
    n = c.shape[1]
    if n == 0:
        return Polynomial.one()
    a = [[Polynomial(c[:, i, j]) for j in range(n)] for i in range(n)]
    sign, prev = 1, Polynomial.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Polynomial()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def det(M: PolyMatrix, method: str = "modular") -> Polynomial:
    """Exact determinant of a square exact polynomial matrix.

    ``modular``: evaluation at u = 0..D modulo enough word-size primes to
    exceed a coefficient bound, interpolation mod p, Chinese remaindering.
    ``interp``: Bareiss over Z at the integer points 0, 1, -1, 2, ... and
    Newton interpolation over Q.  ``bareiss``: fraction-free elimination with
    polynomial entries.  All three agree; ``modular`` is the fast path.
    """
    n, m = M.shape
    if n != m:
        raise ValueError(f"det of a non-square {n}x{m} matrix")
    if not M.exact:
        raise TypeError("det() is exact; use det_float() for complex matrices")
    c, scale = _integer_rows(M)
    if method == "modular":
        p = Polynomial(_det_modular_int(c))
    elif method == "interp":
        p = _det_interp_int(c)
    elif method == "bareiss":
        p = _det_bareiss_poly(c)
    else:
        raise ValueError(f"unknown determinant method {method!r}")
    return p * Fraction(1, scale) if scale != 1 else p


def det_float(M: PolyMatrix) -> np.ndarray:
    """Complex coefficients of det(M) by evaluation on the unit circle and FFT."""
    n, m = M.shape
    if n != m:
        raise ValueError("det of a non-square matrix")
    C = M.trimmed().coeffs.astype(complex)
    if n == 0:
        return np.array([1.0 + 0j])
    degs = np.where(np.abs(C) > 0, np.arange(C.shape[0])[:, None, None], -1).max(axis=0)
    D = int(min(degs.max(axis=1).sum(), degs.max(axis=0).sum()))
    if D < 0:
        return np.zeros(0, dtype=complex)
    N = D + 1
    z = np.exp(2j * np.pi * np.arange(N) / N)
    vals = np.zeros((N, n, n), dtype=complex)
    for k in range(C.shape[0] - 1, -1, -1):
        vals = vals * z[:, None, None] + C[k][None]
    return np.fft.fft(np.linalg.det(vals)) / N


def poly_close(a: np.ndarray, b: np.ndarray, rtol: float = 1e-9) -> bool:
    """Relative closeness of two complex coefficient vectors (constant first)."""
    n = max(len(a), len(b))
    a = np.pad(np.asarray(a, dtype=complex), (0, n - len(a)))
    b = np.pad(np.asarray(b, dtype=complex), (0, n - len(b)))
    scale = max(np.abs(a).max(initial=0.0), np.abs(b).max(initial=0.0), 1.0)
    return bool(np.abs(a - b).max(initial=0.0) <= rtol * scale)
