"""Every operator on the twisted cochains as an explicit block ``PolyMatrix``.

Cochains are functions ``f`` on lifts with ``f(g x) = rho(g) f(x)``, stored by
their values on the representatives, so each simplex contributes a ``d``-block.
Blocks follow the canonical order of the complex.  A lift ``g * y`` read from
row ``x`` contributes ``rho(g)`` at column ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import perm as P
from .algebra import PolyMatrix, Polynomial
from .complex_core import QuotientComplex
from .perm import Perm
from .rep_voltage import Representation, RepresentationError

NAMES = (
    "A1", "A2", "M_E", "M_C", "J_E", "Q", "W", "N_op", "J_C",
    "d0", "d1", "delta1", "delta2",
    "Delta0", "Delta1", "Delta2", "Phi0", "Phi1", "Phi2",
)  # fmt: skip


class _Blocks:
    """Accumulates ``coef * u^k * rho(g)`` into block ``(i, j)``."""

    def __init__(self, rows: int, cols: int, rho: Representation, degree: int = 3):
        self.rho = rho
        self.d = d = rho.dim
        self.exact = rho.exact
        if self.exact:
            self.c = np.empty((degree + 1, rows * d, cols * d), dtype=object)
            self.c.fill(0)
        else:
            self.c = np.zeros((degree + 1, rows * d, cols * d), dtype=complex)

    def add(self, i: int, j: int, k: int, g: Perm, coef=1) -> None:
        d = self.d
        m = self.rho.matrix(g)
        if coef != 1:
            m = m * (coef if self.exact else complex(coef))
        blk = self.c[k, i * d : (i + 1) * d, j * d : (j + 1) * d]
        blk += m

    def eye(self, k: int = 0, coef=1) -> None:
        n = self.c.shape[1]
        for i in range(n):
            self.c[k, i, i] += coef

    def matrix(self) -> PolyMatrix:
        if self.exact:
            flat = self.c.ravel()
            for i, x in enumerate(flat):
                if isinstance(x, Fraction) and x.denominator == 1:
                    flat[i] = x.numerator
        return PolyMatrix(self.c).trimmed()


def _check_group(c: QuotientComplex, rho: Representation) -> None:
    if not rho.covers(c.group):
        raise RepresentationError("group mismatch: the representation does not cover the complex's voltage group")


def build_vertex_ops(c: QuotientComplex, rho: Representation) -> tuple[PolyMatrix, PolyMatrix]:
    """Hecke operators: ``A_i`` sums over edges of type ``i`` leaving a vertex."""
    _check_group(c, rho)
    out = []
    for t in (1, 2):
        B = _Blocks(c.N0, c.N0, rho, 0)
        for e in c.edges:
            if e.type == t:
                B.add(e.tail, e.head, 0, P.mul(P.inv(e.tail_g), e.head_g))
        out.append(B.matrix())
    return out[0], out[1]


def build_edge_op(c: QuotientComplex, rho: Representation) -> PolyMatrix:
    """``M_E``: block ``(s, s')`` is ``u^type(s) rho(g)`` for each out-neighbour ``g s'``."""
    _check_group(c, rho)
    n = len(c.edges)
    B = _Blocks(n, n, rho, 2)
    for e in c.edges:
        for t, g in c.edge_out[e.id]:
            B.add(e.id, t, e.type, g)
    return B.matrix()


def build_chamber_op(c: QuotientComplex, rho: Representation) -> PolyMatrix:
    _check_group(c, rho)
    n = len(c.chambers)
    B = _Blocks(n, n, rho, 1)
    for ch in c.chambers:
        for t, g in c.chamber_out[ch.id]:
            B.add(ch.id, t, 1, g)
    return B.matrix()


def build_coboundaries(c: QuotientComplex, rho: Representation):
    """Deformed coboundaries ``(d0, d1, delta1, delta2)``."""
    _check_group(c, rho)
    q = c.q
    nv, ne, nc = c.N0, len(c.edges), len(c.chambers)
    edges, chambers = c.edges, c.chambers

    d0 = _Blocks(ne, nv, rho, 2)
    for e in edges:
        d0.add(e.id, e.head, e.type, e.head_g)
        d0.add(e.id, e.tail, 0, e.tail_g, -1)

    d1 = _Blocks(nc, ne, rho, 1)
    for ch in chambers:
        d1.add(ch.id, ch.e12[0], 1, ch.e12[1])
        d1.add(ch.id, ch.e02[0], 0, ch.e02[1], -1)
        d1.add(ch.id, ch.e01[0], 0, ch.e01[1])

    # edges ending at a vertex, weighted (-q)^(2-t) u^(3-t)
    delta1 = _Blocks(nv, ne, rho, 2)
    for e in edges:
        delta1.add(e.head, e.id, 3 - e.type, P.inv(e.head_g), (-q) ** (2 - e.type))

    by_e02: dict[int, list] = {}
    for ch in chambers:
        by_e02.setdefault(ch.e02[0], []).append(ch)
    delta2 = _Blocks(ne, nc, rho, 2)
    for e in edges:
        if e.type == 2:
            for ch in by_e02.get(e.id, []):
                g = P.mul(P.inv(ch.e02[1]), ch.rot_g)
                delta2.add(e.id, ch.rot, 1, g, -1)
        else:
            for ch in by_e02.get(e.opp, []):
                g = P.prod(e.opp_g, P.inv(ch.e02[1]), ch.rot_g)
                delta2.add(e.id, ch.rot, 2, g)
    return d0.matrix(), d1.matrix(), delta1.matrix(), delta2.matrix()


def build_auxiliary(c: QuotientComplex, rho: Representation):
    """``(J_E, Q, W, N_op, J_C)``."""
    _check_group(c, rho)
    ne, nc = len(c.edges), len(c.chambers)
    edges = c.edges

    JE = _Blocks(ne, ne, rho, 2)
    for e in edges:
        JE.add(e.id, e.opp, e.type, e.opp_g)

    Q = _Blocks(ne, ne, rho, 1)
    Q.eye()
    for ch in c.chambers:
        s, g = ch.e02
        Q.add(s, ch.e12[0], 1, P.mul(P.inv(g), ch.e12[1]))

    N = _Blocks(ne, ne, rho, 1)
    for e in edges:
        if e.type != 1:
            continue
        for s2 in c.star[e.tail]:
            f = edges[s2]
            if f.type == 1 and s2 != e.id:
                N.add(e.id, f.opp, 1, P.prod(e.tail_g, P.inv(f.tail_g), f.opp_g))

    JC = _Blocks(nc, nc, rho, 0)
    for ch in c.chambers:
        JC.add(ch.id, ch.rot, 0, ch.rot_g)

    je = JE.matrix()
    W = PolyMatrix.identity(ne * rho.dim, rho.exact) + je
    return je, Q.matrix(), W, N.matrix(), JC.matrix()


def build_phi(c: QuotientComplex, rho: Representation, cob=None):
    """``(Phi0, Phi1, Phi2, Delta0, Delta1, Delta2)`` with ``Phi_i = Delta_i + (1 - u^3) I``."""
    d0, d1, delta1, delta2 = cob if cob is not None else build_coboundaries(c, rho)
    D0 = delta1 @ d0
    D1 = delta2 @ d1 + d0 @ delta1
    D2 = d1 @ delta2
    one = Polynomial([1, 0, 0, -1])
    phis = [D + PolyMatrix.scalar(one, D.shape[0], rho.exact) for D in (D0, D1, D2)]
    return phis[0], phis[1], phis[2], D0, D1, D2


def hecke_polynomial_matrix(c: QuotientComplex, A1: PolyMatrix, A2: PolyMatrix) -> PolyMatrix:
    """``I - A1 u + q A2 u^2 - q^3 u^3 I``."""
    n = A1.shape[0]
    q = c.q
    exact = A1.exact
    return (
        PolyMatrix.scalar(Polynomial([1, 0, 0, -(q**3)]), n, exact)
        - A1.shift(1)
        + (A2 * q).shift(2)
    )


@dataclass
class OperatorSet:
    complex: QuotientComplex
    rep: Representation
    matrices: dict[str, PolyMatrix] = field(default_factory=dict)

    def __getitem__(self, name: str) -> PolyMatrix:
        return self.matrices[name]

    def __getattr__(self, name: str) -> PolyMatrix:
        m = self.__dict__.get("matrices")
        if m is not None and name in m:
            return m[name]
        raise AttributeError(name)

    @property
    def d(self) -> int:
        return self.rep.dim

    def shapes(self) -> dict[str, tuple[int, int]]:
        return {k: v.shape for k, v in self.matrices.items()}

    def to_json(self, names=None) -> dict:
        return {k: self.matrices[k].to_json() for k in (names or self.matrices)}


def build_operators(c: QuotientComplex, rho: Representation) -> OperatorSet:
    A1, A2 = build_vertex_ops(c, rho)
    cob = build_coboundaries(c, rho)
    JE, Q, W, N, JC = build_auxiliary(c, rho)
    Phi0, Phi1, Phi2, D0, D1, D2 = build_phi(c, rho, cob)
    mats = {
        "A1": A1,
        "A2": A2,
        "M_E": build_edge_op(c, rho),
        "M_C": build_chamber_op(c, rho),
        "J_E": JE,
        "Q": Q,
        "W": W,
        "N_op": N,
        "J_C": JC,
        "d0": cob[0],
        "d1": cob[1],
        "delta1": cob[2],
        "delta2": cob[3],
        "Delta0": D0,
        "Delta1": D1,
        "Delta2": D2,
        "Phi0": Phi0,
        "Phi1": Phi1,
        "Phi2": Phi2,
    }
    return OperatorSet(c, rho, mats)
