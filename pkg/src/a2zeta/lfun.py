"""Edge, chamber and Hecke L-functions and the identities relating them.

``P0 = det(I - A1 u + q A2 u^2 - q^3 u^3 I)``, ``P1 = det(I - M_E)`` and
``P2 = det(I - M_C)`` are the reciprocals of ``L(Ind rho, qu)``, ``L1`` and
``L2``.  Exact representations give ``Polynomial`` values; floating ones give
complex coefficient arrays (constant first) and every comparison then uses a
relative tolerance of ``1e-9``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np
from numpy.polynomial import polynomial as npoly

from . import perm as P
from .algebra import PolyMatrix, Polynomial, det, det_float, one_minus_u3_pow, poly_close, reverse_transform
from .complex_core import QuotientComplex, euler_characteristic
from .groups import FiniteGroup
from .operators import OperatorSet, build_chamber_op, build_edge_op, build_operators, build_vertex_ops, hecke_polynomial_matrix
from .rep_voltage import Representation, dual_representation, induce

RTOL = 1e-9

PolyLike = Polynomial | np.ndarray


@dataclass
class Verdict:
    name: str
    passed: bool
    detail: str = ""
    data: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, **_jsonable(self.data)}


def _jsonable(x):
    if isinstance(x, Polynomial):
        return x.to_strings()
    if isinstance(x, np.ndarray):
        return [[float(z.real), float(z.imag)] for z in x.astype(complex)]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    return x


# ------------------------------------------------------------ poly helpers


def _arr(p: PolyLike) -> np.ndarray:
    return p.to_complex() if isinstance(p, Polynomial) else np.asarray(p, dtype=complex)


def _trim(a: np.ndarray, tol: float = 0.0) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.size == 0:
        return a
    scale = max(np.abs(a).max(), 1.0)
    nz = np.nonzero(np.abs(a) > tol * scale)[0]
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _mul(a: PolyLike, b: PolyLike) -> PolyLike:
    if isinstance(a, Polynomial) and isinstance(b, Polynomial):
        return a * b
    return npoly.polymul(_arr(a), _arr(b)) if len(_arr(a)) and len(_arr(b)) else np.zeros(0, complex)


def _neg(p: PolyLike) -> PolyLike:
    if isinstance(p, Polynomial):
        return p.neg_var()
    a = _arr(p).copy()
    a[1::2] = -a[1::2]
    return a


def _eq(a: PolyLike, b: PolyLike) -> bool:
    if isinstance(a, Polynomial) and isinstance(b, Polynomial):
        return a == b
    return poly_close(_arr(a), _arr(b), RTOL)


def _degree(p: PolyLike) -> int:
    if isinstance(p, Polynomial):
        return p.degree
    return len(_trim(p, 1e-10)) - 1


def _coeffs(p: PolyLike) -> list:
    return p.to_strings() if isinstance(p, Polynomial) else _jsonable(_arr(p))


def _diff_positions(a: PolyLike, b: PolyLike) -> list[int]:
    if isinstance(a, Polynomial) and isinstance(b, Polynomial):
        n = max(len(a.coeffs), len(b.coeffs))
        return [k for k in range(n) if a.coeff(k) != b.coeff(k)]
    x, y = _arr(a), _arr(b)
    n = max(len(x), len(y))
    x, y = np.pad(x, (0, n - len(x))), np.pad(y, (0, n - len(y)))
    scale = max(np.abs(x).max(initial=0), np.abs(y).max(initial=0), 1.0)
    return [int(k) for k in np.nonzero(np.abs(x - y) > RTOL * scale)[0]]


def _u3pow(e: int, exact: bool) -> PolyLike:
    p = one_minus_u3_pow(e)
    return p if exact else p.to_complex()


def _det(M: PolyMatrix, method: str = "modular") -> PolyLike:
    return det(M, method) if M.exact else _trim(det_float(M), 1e-13)


# ---------------------------------------------------------------- L report


@dataclass
class LReport:
    q: int
    d: int
    N: tuple[int, int, int]
    chi: int
    P0: PolyLike
    P1: PolyLike
    P2: PolyLike
    exact: bool = True
    rep_name: str = ""
    checks: dict[str, Verdict] = field(default_factory=dict)

    @property
    def degrees(self) -> dict[str, int]:
        return {"P0": _degree(self.P0), "P1": _degree(self.P1), "P2": _degree(self.P2)}

    @property
    def degree_bounds(self) -> dict[str, int]:
        N0, N1, N2 = self.N
        return {"P0": 3 * self.d * N0, "P1": 3 * self.d * N1, "P2": 3 * self.d * N2, "P1_stated": 2 * self.d * N1}

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.checks.values())

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "d": self.d,
            "N": list(self.N),
            "chi": self.chi,
            "exact": self.exact,
            "rep": self.rep_name,
            "P0": _coeffs(self.P0),
            "P1": _coeffs(self.P1),
            "P2": _coeffs(self.P2),
            "degrees": self.degrees,
            "degree_bounds": self.degree_bounds,
            "checks": self.check_summary(),
            "diagnostics": {k: v.to_dict() for k, v in self.checks.items()},
        }

    def check_summary(self) -> dict:
        """Flat verdicts: booleans, ``phi_determinants`` as a triple and ``trace`` keyed by ``n``."""
        out: dict[str, Any] = {}
        for k, v in self.checks.items():
            if k == "cohomology":
                out["phi_determinants"] = list(v.data["phi_determinants"])
                out["alternating"] = v.data["alternating"]
            elif k == "trace":
                out["trace"] = {str(n): ok and v.data["chamber"][n] for n, ok in v.data["edge"].items()}
            else:
                out[k] = v.passed
        return out


def compute_L(c: QuotientComplex, rho: Representation, method: str = "modular") -> LReport:
    A1, A2 = build_vertex_ops(c, rho)
    ME = build_edge_op(c, rho)
    MC = build_chamber_op(c, rho)
    exact = rho.exact
    I_E = PolyMatrix.identity(ME.shape[0], exact)
    I_C = PolyMatrix.identity(MC.shape[0], exact)
    P0 = _det(hecke_polynomial_matrix(c, A1, A2), method)
    P1 = _det(I_E - ME, method)
    P2 = _det(I_C - MC, method) if MC.shape[0] else (Polynomial.one() if exact else np.ones(1, complex))
    return LReport(c.q, rho.dim, c.counts, euler_characteristic(c), P0, P1, P2, exact, rho.name)


# ----------------------------------------------------------- geodesic oracle


@dataclass
class GeodesicTally:
    """Sum of ``Tr rho(voltage) u^{algebraic length}`` over closed walks of each length."""

    n_max: int
    edge: dict[int, PolyLike]
    chamber: dict[int, PolyLike]
    walks: dict[str, dict[int, int]]

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "edge": {n: _coeffs(p) for n, p in self.edge.items()},
            "chamber": {n: _coeffs(p) for n, p in self.chamber.items()},
            "walks": self.walks,
        }


def _closed_walks(starts, succ, weight, n_max, group: FiniteGroup, chars):
    """Depth-first enumeration of closed walks; returns {n: {degree: sum of characters}}."""
    idx = {g: i for i, g in enumerate(group.elements)}
    els = group.elements
    table = [[idx[P.mul(a, b)] for b in els] for a in els]
    e = idx[group.identity]
    succ_i = [[(t, idx[g]) for t, g in lst] for lst in succ]
    tally: dict[int, dict[int, Any]] = {n: {} for n in range(1, n_max + 1)}
    count = {n: 0 for n in range(1, n_max + 1)}
    for s in starts:
        w = weight(s)
        stack = [(s, e, 0)]
        while stack:
            node, g, depth = stack.pop()
            for t, h in succ_i[node]:
                gh = table[g][h]
                n = depth + 1
                if t == s:
                    deg = w * n
                    tally[n][deg] = tally[n].get(deg, 0) + chars[gh]
                    count[n] += 1
                if n < n_max:
                    stack.append((t, gh, n))
    return tally, count


def geodesic_oracle(c: QuotientComplex, rho: Representation, n_max: int = 6) -> GeodesicTally:
    """Brute-force closed out-neighbour walks with accumulated voltages."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    G = c.group
    chars = [rho.character(g) for g in G.elements]
    et, ec = _closed_walks(range(len(c.edges)), c.edge_out, lambda s: c.edges[s].type, n_max, G, chars)
    ct, cc = _closed_walks(range(len(c.chambers)), c.chamber_out, lambda s: 1, n_max, G, chars)

    def as_poly(d: dict[int, Any]) -> PolyLike:
        top = max(d, default=-1)
        coeffs = [d.get(k, 0) for k in range(top + 1)]
        return Polynomial(coeffs) if rho.exact else np.array(coeffs, dtype=complex)

    return GeodesicTally(
        n_max,
        {n: as_poly(et[n]) for n in et},
        {n: as_poly(ct[n]) for n in ct},
        {"edge": ec, "chamber": cc},
    )


def _matrix_traces(M: PolyMatrix, n_max: int) -> dict[int, PolyLike]:
    out = {}
    Mn = M
    for n in range(1, n_max + 1):
        out[n] = Mn.trace() if Mn.exact else _trim(Mn.trace_complex())
        if n < n_max:
            Mn = Mn @ M
    return out


def check_trace(c: QuotientComplex, rho: Representation, n_max: int = 6, tally: GeodesicTally | None = None) -> Verdict:
    """``Tr(M^n)`` against the walk tally for edges and chambers, ``n = 1..n_max``."""
    tally = tally or geodesic_oracle(c, rho, n_max)
    te = _matrix_traces(build_edge_op(c, rho), n_max)
    tc = _matrix_traces(build_chamber_op(c, rho), n_max)
    edge = {n: _eq(te[n], tally.edge[n]) for n in te}
    chamber = {n: _eq(tc[n], tally.chamber[n]) for n in tc}
    bad = [f"edge n={n}" for n, ok in edge.items() if not ok] + [f"chamber n={n}" for n, ok in chamber.items() if not ok]
    return Verdict("trace", not bad, "; ".join(bad), {"edge": edge, "chamber": chamber})


def _log_series(tallies: dict[int, PolyLike], exact: bool) -> PolyLike:
    """``-sum_n sum_k (k/n) c_{n,k} u^k``, the series of ``u P'/P``."""
    if exact:
        acc = Polynomial()
        for n, p in tallies.items():
            acc = acc + Polynomial(Fraction(k, n) * c for k, c in enumerate(p.coeffs))
        return -acc
    top = max((len(_arr(p)) for p in tallies.values()), default=0)
    acc = np.zeros(top, dtype=complex)
    for n, p in tallies.items():
        a = _arr(p)
        acc[: len(a)] += np.arange(len(a)) / n * a
    return -acc


def check_log_derivative(report: LReport, tally: GeodesicTally) -> Verdict:
    """``P S = u P'`` modulo ``u^(n_max + 1)`` with ``S`` built from the walk tallies."""
    res = {}
    for key, P_, tl in (("P1", report.P1, tally.edge), ("P2", report.P2, tally.chamber)):
        S = _log_series(tl, report.exact)
        N = tally.n_max + 1
        if report.exact:
            lhs = (P_ * S).truncate(N)
            rhs = (P_.derivative() * Polynomial([0, 1])).truncate(N)
            res[key] = lhs == rhs
        else:
            a = _arr(P_)
            lhs = npoly.polymul(a, S)[:N]
            rhs = (np.arange(len(a)) * a)[:N]
            res[key] = poly_close(lhs, rhs, RTOL)
    return Verdict("log_derivative", all(res.values()), "", res)


# ------------------------------------------------------------ main identity


def check_main_identity(report: LReport, chi: int | None = None, d: int | None = None) -> Verdict:
    """``(1 - u^3)^(chi d) P1(u) = P0(u) P2(-u)``, cross-multiplied when ``chi d < 0``."""
    chi = report.chi if chi is None else chi
    d = report.d if d is None else d
    e = chi * d
    P0, P1, P2m = report.P0, report.P1, _neg(report.P2)
    if e >= 0:
        lhs = _mul(_u3pow(e, report.exact), P1)
        rhs = _mul(P0, P2m)
    else:
        lhs = P1
        rhs = _mul(_u3pow(-e, report.exact), _mul(P0, P2m))
    ok = _eq(lhs, rhs)
    data: dict[str, Any] = {"exponent": e}
    detail = ""
    if not ok:
        pos = _diff_positions(lhs, rhs)
        data.update({"lhs": _coeffs(lhs), "rhs": _coeffs(rhs), "differing_coefficients": pos})
        detail = f"coefficients differ at u^{pos[:8]}"
    return Verdict("main_identity", ok, detail, data)


def check_degrees(report: LReport, main: Verdict | None = None) -> Verdict:
    """``deg P0 = 3 d N0``; records ``deg P1``, ``deg P2`` and the degree balance."""
    N0, N1, N2 = report.N
    d, chi = report.d, report.chi
    deg = report.degrees
    p0_ok = deg["P0"] == 3 * d * N0
    main = main if main is not None else check_main_identity(report)
    balance = 3 * chi * d + deg["P1"] == 3 * d * N0 + deg["P2"]
    passed = p0_ok and (balance or not main.passed)
    notes = []
    if deg["P1"] == 3 * d * N1:
        notes.append(f"deg P1 = {deg['P1']} = 3dN1")
    if deg["P1"] != 2 * d * N1:
        notes.append(f"deg P1 = {deg['P1']} differs from the stated bound 2dN1 = {2 * d * N1}")
    data = {
        "deg": deg,
        "deg_P0_expected": 3 * d * N0,
        "deg_P1_vs_2dN1": deg["P1"] == 2 * d * N1,
        "deg_P1_vs_3dN1": deg["P1"] == 3 * d * N1,
        "deg_P2_vs_3dN2": deg["P2"] == 3 * d * N2,
        "balance": balance,
        "balance_applies": main.passed,
        "notes": notes,
    }
    return Verdict("degrees", passed, "; ".join(notes), data)


# --------------------------------------------------------- functional equation


def _subst_inv(p: Polynomial, s) -> tuple[Polynomial, Polynomial]:
    """``p(1/(s u))`` as a (numerator, denominator) pair."""
    D = max(p.degree, 0)
    return reverse_transform(p, s, D), Polynomial.monomial(D, Fraction(s) ** D)


def _pair_eq(a: tuple[Polynomial, Polynomial], b: tuple[Polynomial, Polynomial]) -> bool:
    return a[0] * b[1] == b[0] * a[1]


def _pair_mul(*ps: tuple[Polynomial, Polynomial]) -> tuple[Polynomial, Polynomial]:
    n, d = Polynomial.one(), Polynomial.one()
    for a, b in ps:
        n, d = n * a, d * b
    return n, d


def _pair_inv(p: tuple[Polynomial, Polynomial]) -> tuple[Polynomial, Polynomial]:
    return p[1], p[0]


def _pair_pow(p: tuple[Polynomial, Polynomial], e: int) -> tuple[Polynomial, Polynomial]:
    if e < 0:
        p, e = _pair_inv(p), -e
    return p[0] ** e, p[1] ** e


def _epsilon_sq(q: int, e: int) -> Polynomial:
    """``eps(rho, y)^2 = ((1 - y^3/q^3)(1 - q^3 y^3))^(d N0)`` with ``e = d N0``."""
    return (Polynomial([1, 0, 0, Fraction(-1, q**3)]) * Polynomial([1, 0, 0, -(q**3)])) ** e


def _eval(p: PolyLike, x: complex) -> complex:
    return complex(npoly.polyval(x, _arr(p))) if len(_arr(p)) else 0j


SAMPLE_POINTS = tuple(0.21 * np.exp(1j * t) for t in (0.3, 1.1, 2.0, 2.9, 4.4))


def check_functional_equation(
    c: QuotientComplex,
    rho: Representation,
    report: LReport | None = None,
    dual_report: LReport | None = None,
) -> Verdict:
    """Reversal identity for ``P0``, the squared epsilon form and the squared quotient form."""
    report = report or compute_L(c, rho)
    if dual_report is None:
        dual_report = compute_L(c, dual_representation(rho))
    q, d, N0, chi = c.q, rho.dim, c.N0, euler_characteristic(c)
    e = d * N0
    res: dict[str, bool] = {}
    if report.exact and dual_report.exact:
        P0, P0d = report.P0, dual_report.P0
        res["reversal"] = reverse_transform(P0, q * q, 3 * e) == P0d * ((-1) ** e * q ** (3 * e))
        E = _epsilon_sq(q, e)
        E_inv = _subst_inv(E, q)  # eps(rho, 1/(qu))^2
        E_fwd = (E.scale_var(q), Polynomial.one())  # eps(rho*, qu)^2
        res["epsilon_balance"] = _pair_eq(
            _pair_mul(E_inv, (Polynomial.monomial(6 * e, Fraction(q) ** (6 * e)), Polynomial.one())), E_fwd
        )
        L_inv = _pair_inv(_subst_inv(P0, q * q))  # L(Ind rho, 1/(qu))
        L_fwd = (Polynomial.one(), P0d)  # L(Ind rho*, qu)
        res["epsilon_squared"] = _pair_eq(_pair_mul(E_inv, L_inv, L_inv), _pair_mul(E_fwd, L_fwd, L_fwd))
        # quotient form: eps~(rho, u)^2 = eps(rho, qu)^2 (1-u^3)^(-2 chi d)
        Et = (E.scale_var(q), Polynomial.one())
        U = (one_minus_u3_pow(1), Polynomial.one())
        Et = _pair_mul(Et, _pair_pow(U, -2 * chi * d))
        Et_inv = _pair_mul(_subst_inv(E.scale_var(q), q * q), _pair_pow(_subst_inv(one_minus_u3_pow(1), q * q), -2 * chi * d))
        R_inv = _pair_mul(_subst_inv(report.P2.neg_var(), q * q), _pair_inv(_subst_inv(report.P1, q * q)))
        R_fwd = (dual_report.P2.neg_var(), dual_report.P1)
        res["quotient_form"] = _pair_eq(_pair_mul(Et_inv, R_inv, R_inv), _pair_mul(Et, R_fwd, R_fwd))
    else:
        P0, P0d = _arr(report.P0), _arr(dual_report.P0)
        D = 3 * e
        rev = np.zeros(D + 1, dtype=complex)
        for k, ck in enumerate(P0[: D + 1]):
            rev[D - k] = ck * float(q * q) ** (D - k)
        res["reversal"] = poly_close(rev, (-1) ** e * float(q) ** (3 * e) * P0d, RTOL)
        E = _epsilon_sq(q, e).to_complex()
        okb = oke = okq = True
        for u in SAMPLE_POINTS:
            lhs_b = _eval(E, 1 / (q * u)) * (q**6 * u**6) ** e
            okb &= abs(lhs_b - _eval(E, q * u)) <= RTOL * max(abs(lhs_b), 1.0)
            lhs = _eval(E, 1 / (q * u)) / _eval(P0, 1 / (q * q * u)) ** 2
            rhs = _eval(E, q * u) / _eval(P0d, u) ** 2
            oke &= abs(lhs - rhs) <= RTOL * max(abs(lhs), abs(rhs))
            x = 1 / (q * q * u)
            et_x = _eval(E, q * x) * (1 - x**3) ** (-2 * chi * d)
            et_u = _eval(E, q * u) * (1 - u**3) ** (-2 * chi * d)
            lq = et_x * (_eval(report.P2, -x) / _eval(report.P1, x)) ** 2
            rq = et_u * (_eval(dual_report.P2, -u) / _eval(dual_report.P1, u)) ** 2
            okq &= abs(lq - rq) <= RTOL * max(abs(lq), abs(rq))
        res.update({"epsilon_balance": bool(okb), "epsilon_squared": bool(oke), "quotient_form": bool(okq)})
    bad = [k for k, v in res.items() if not v]
    mode = "exact" if report.exact else f"floating, rtol {RTOL}"
    return Verdict("functional", not bad, f"{mode}" + (f"; failed: {bad}" if bad else ""), res)


# ------------------------------------------------------------ induction


def check_induction(
    base: QuotientComplex,
    H: FiniteGroup,
    H_sub: FiniteGroup,
    rho_sub: Representation,
    cover: QuotientComplex,
    cover_rep: Representation | None = None,
) -> Verdict:
    """``L_i(cover, rho') = L_i(base, Ind rho')`` for ``i = 0, 1, 2``."""
    ind = induce(rho_sub, H)
    if cover_rep is None:
        cover_rep = rho_sub if rho_sub.covers(cover.group) else Representation.trivial(cover.group)
    a = compute_L(base, ind)
    b = compute_L(cover, cover_rep)
    res = {"P0": _eq(a.P0, b.P0), "P1": _eq(a.P1, b.P1), "P2": _eq(a.P2, b.P2)}
    bad = [k for k, v in res.items() if not v]
    return Verdict("induction", not bad, f"index {H.order // H_sub.order}" + (f"; differ: {bad}" if bad else ""), res)


def check_divisibility(base_report: LReport, cover_report: LReport) -> Verdict:
    """Exact division ``P_i(cover) / P_i(base)`` for ``i = 1, 2``; quotients returned in ``data``."""
    res, quots = {}, {}
    for key in ("P1", "P2"):
        qt, r = divmod(getattr(cover_report, key), getattr(base_report, key))
        res[key] = r.is_zero()
        quots[f"quotient_{key}"] = qt
    return Verdict("divisibility", all(res.values()), "", {**res, **quots})


def character_product(c: QuotientComplex, chars: list[Representation]) -> dict[str, np.ndarray]:
    """Product over the given one-dimensional characters of ``P1`` and ``P2`` (floating)."""
    p1, p2 = np.ones(1, complex), np.ones(1, complex)
    for ch in chars:
        r = compute_L(c, ch)
        p1 = npoly.polymul(p1, _arr(r.P1))
        p2 = npoly.polymul(p2, _arr(r.P2))
    return {"P1": p1, "P2": p2}


# ------------------------------------------------------ cohomological form


def check_cohomological_theorem(ops: OperatorSet, report: LReport) -> Verdict:
    """``det Phi_i`` against ``P0``, ``(1-u^3)^(dN1) P1``, ``(1-u^3)^(2dN2) P2(-u)``, plus the alternating product."""
    d = ops.d
    N0, N1, N2 = report.N
    ex = report.exact
    dets = [_det(ops["Phi0"]), _det(ops["Phi1"]), _det(ops["Phi2"])]
    want = [report.P0, _mul(_u3pow(d * N1, ex), report.P1), _mul(_u3pow(2 * d * N2, ex), _neg(report.P2))]
    thm = [_eq(a, b) for a, b in zip(dets, want)]
    e = d * (N0 - 2 * N1 + 3 * N2)
    lhs, rhs = _mul(dets[0], dets[2]), dets[1]
    if e >= 0:
        rhs = _mul(_u3pow(e, ex), rhs)
    else:
        lhs = _mul(_u3pow(-e, ex), lhs)
    alt = _eq(lhs, rhs)
    bad = [f"Phi{i}" for i, ok in enumerate(thm) if not ok] + ([] if alt else ["alternating product"])
    return Verdict(
        "cohomology",
        all(thm) and alt,
        "; ".join(bad),
        {"phi_determinants": thm, "alternating": alt, "alternating_exponent": e},
    )


# ------------------------------------------------------------ operator suite


def _id(n: int, exact: bool) -> PolyMatrix:
    return PolyMatrix.identity(n, exact)


def _same(A: PolyMatrix, B: PolyMatrix) -> bool:
    if A.shape != B.shape:
        return False
    return A == B if (A.exact and B.exact) else A.allclose(B, RTOL)


def operator_suite(ops: OperatorSet, dual_ops: OperatorSet | None = None) -> Verdict:
    """Matrix identities among the operators on one complex and representation."""
    m = ops.matrices
    ex = ops.rep.exact
    d = ops.d
    c = ops.complex
    ne, nc = m["M_E"].shape[0], m["M_C"].shape[0]
    u3 = Polynomial([0, 0, 0, 1])
    one = one_minus_u3_pow(1)
    JE, ME, N, Q, W, JC, MC = m["J_E"], m["M_E"], m["N_op"], m["Q"], m["W"], m["J_C"], m["M_C"]
    res: dict[str, bool] = {}
    res["d1_d0_zero"] = (m["d1"] @ m["d0"]).is_zero()
    res["J_E_squared"] = _same(JE @ JE, PolyMatrix.scalar(u3, ne, ex))
    res["det_Q"] = _eq(_det(Q), Polynomial.one() if ex else np.ones(1, complex))
    res["Q_at_zero"] = _same(PolyMatrix(Q.coeffs[:1]), _id(ne, ex))
    res["det_I_minus_J_E"] = _eq(_det(_id(ne, ex) - JE), _u3pow(d * c.N1, ex))
    res["N_squared_zero"] = (N @ N).is_zero()
    # W Phi1 Q = (1-u^3)(I - J_E M_E J_E^-1 - N), multiplied through by u^3 since J_E^-1 = u^-3 J_E
    lhs = (W @ m["Phi1"] @ Q).shift(3)
    rhs = (PolyMatrix.scalar(u3, ne, ex) - JE @ ME @ JE - N.shift(3)) * one
    res["conjugated_edge_factor"] = _same(lhs, rhs)
    res["phi1_factorization"] = _same(
        m["Phi1"] @ Q, ((_id(ne, ex) - JE) @ (PolyMatrix.scalar(u3, ne, ex) - JE @ ME @ JE - N.shift(3))).shift(-3)
    )
    JC2 = JC @ JC
    res["J_C_cubed"] = _same(JC2 @ JC, _id(nc, ex))
    F = _id(nc, ex) + JC.shift(1) + JC2.shift(2)
    res["phi2_factorization"] = _same(m["Phi2"], F @ (_id(nc, ex) + JC @ MC @ JC2))
    res["det_rotation_factor"] = _eq(_det(F), _u3pow(2 * d * c.N2, ex))
    res["cochain_d0"] = _same(m["d0"] @ m["Phi0"], m["Phi1"] @ m["d0"])
    res["cochain_d1"] = _same(m["d1"] @ m["Phi1"], m["Phi2"] @ m["d1"])
    res["phi0_hecke"] = _same(m["Phi0"], hecke_polynomial_matrix(c, m["A1"], m["A2"]))
    nv = m["A1"].shape[0]
    zero_v = PolyMatrix.zeros(nv, nv, ex)
    res["homotopy"] = (
        _same(m["Phi0"] - PolyMatrix.scalar(one, nv, ex), m["delta1"] @ m["d0"] + zero_v)
        and _same(m["Phi1"] - PolyMatrix.scalar(one, ne, ex), m["d0"] @ m["delta1"] + m["delta2"] @ m["d1"])
        and _same(m["Phi2"] - PolyMatrix.scalar(one, nc, ex), m["d1"] @ m["delta2"])
    )
    res["hecke_commute"] = _same(m["A1"] @ m["A2"], m["A2"] @ m["A1"])
    IE = _id(ne, ex)
    conj_det = _det((IE.shift(3) - JE @ ME @ JE - N.shift(3)))
    res["det_conjugated_edge"] = _eq(conj_det, _mul(_det(IE - ME), Polynomial.monomial(3 * ne) if ex else Polynomial.monomial(3 * ne).to_complex()))
    if dual_ops is not None:
        res["A2_dual_is_A1_transpose"] = _same(dual_ops["A2"], m["A1"].T)
    bad = [k for k, v in res.items() if not v]
    return Verdict("operators", not bad, "; ".join(bad), res)


# ------------------------------------------------------------------- suite


def run_all(
    c: QuotientComplex,
    rho: Representation,
    n_max: int = 6,
    which: tuple[str, ...] = ("identity", "functional", "cohomology", "trace", "operators"),
) -> LReport:
    report = compute_L(c, rho)
    main = check_main_identity(report)
    if "identity" in which:
        report.checks["main_identity"] = main
        report.checks["degrees"] = check_degrees(report, main)
    if "functional" in which:
        report.checks["functional"] = check_functional_equation(c, rho, report)
    if "trace" in which:
        tally = geodesic_oracle(c, rho, n_max)
        report.checks["trace"] = check_trace(c, rho, n_max, tally)
        report.checks["log_derivative"] = check_log_derivative(report, tally)
    if "cohomology" in which or "operators" in which:
        ops = build_operators(c, rho)
        if "cohomology" in which:
            report.checks["cohomology"] = check_cohomological_theorem(ops, report)
        if "operators" in which:
            dual_ops = build_operators(c, dual_representation(rho))
            report.checks["operators"] = operator_suite(ops, dual_ops)
    return report
