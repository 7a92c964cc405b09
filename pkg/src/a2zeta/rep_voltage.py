"""Representations of finite voltage groups, induction and voltage covers.

A representation stores one matrix per group element.  Exact representations
hold object arrays of ``int`` / ``Fraction``; floating ones hold complex128
and are flagged ``exact=False`` (identity checks then use a relative
tolerance).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Mapping, Sequence

import numpy as np

from . import perm as P
from .complex_core import ComplexError, QuotientComplex, build_complex
from .groups import FiniteGroup, GroupError
from .perm import Perm


class RepresentationError(ValueError):
    pass


def _exact_matrix(m) -> np.ndarray:
    a = np.array(m, dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise RepresentationError("representation matrices must be square")
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        f = Fraction(x) if not isinstance(x, Fraction) else x
        out[idx] = f.numerator if f.denominator == 1 else f
    return out


@dataclass(frozen=True)
class Representation:
    group: FiniteGroup
    dim: int
    matrices: Mapping[Perm, np.ndarray] = field(repr=False)
    exact: bool = True
    name: str = ""

    @property
    def d(self) -> int:
        return self.dim

    def matrix(self, g: Perm) -> np.ndarray:
        try:
            return self.matrices[tuple(g)]
        except KeyError:
            raise RepresentationError(f"group mismatch: {tuple(g)} is not in the representation's group") from None

    __call__ = matrix

    def character(self, g: Perm):
        t = np.trace(self.matrix(g))
        return complex(t) if not self.exact else Fraction(t)

    def covers(self, group: FiniteGroup) -> bool:
        return all(g in self.matrices for g in group.elements)

    # construction
    @classmethod
    def from_generators(
        cls, group: FiniteGroup, images: Mapping[str, Sequence], exact: bool = True, name: str = ""
    ) -> "Representation":
        """Extend generator images multiplicatively; raises if they do not define a homomorphism."""
        conv = _exact_matrix if exact else (lambda m: np.array(m, dtype=complex))
        gens = {k: conv(v) for k, v in images.items()}
        if set(gens) != set(group.generators):
            raise RepresentationError(f"images given for {sorted(gens)}, generators are {sorted(group.generators)}")
        dims = {m.shape[0] for m in gens.values()} or {1}
        if len(dims) != 1:
            raise RepresentationError("generator images have different sizes")
        d = dims.pop()
        eye = np.identity(d, dtype=object if exact else complex)
        if exact:
            eye = _exact_matrix(eye.tolist())
        mats: dict[Perm, np.ndarray] = {group.identity: eye}
        frontier = [group.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for k, g in group.generators.items():
                    y = P.mul(x, g)
                    val = mats[x].dot(gens[k])
                    if exact:
                        val = _exact_matrix(val.tolist())
                    if y in mats:
                        if not _same(mats[y], val, exact):
                            raise RepresentationError("non-homomorphism: generator images violate a group relation")
                    else:
                        mats[y] = val
                        nxt.append(y)
            frontier = nxt
        rep = cls(group, d, mats, exact, name)
        return rep

    @classmethod
    def from_function(
        cls, group: FiniteGroup, fn: Callable[[Perm], np.ndarray], exact: bool = True, name: str = ""
    ) -> "Representation":
        conv = (lambda m: _exact_matrix(np.asarray(m, dtype=object).tolist())) if exact else (
            lambda m: np.array(m, dtype=complex)
        )
        mats = {g: conv(fn(g)) for g in group.elements}
        d = mats[group.identity].shape[0]
        return cls(group, d, mats, exact, name)

    @classmethod
    def trivial(cls, group: FiniteGroup) -> "Representation":
        one = _exact_matrix([[1]])
        return cls(group, 1, {g: one for g in group.elements}, True, "trivial")

    def is_homomorphism(self) -> bool:
        els = self.group.elements
        if not _same(self.matrix(self.group.identity), np.identity(self.dim), self.exact):
            return False
        for a in els:
            for b in els:
                if not _same(self.matrix(P.mul(a, b)), self.matrix(a).dot(self.matrix(b)), self.exact):
                    return False
        return True

    def to_json(self) -> dict:
        kind = "matrix" if self.exact else "complex"
        gens = {}
        for k, g in self.group.generators.items():
            m = self.matrix(g)
            if self.exact:
                gens[k] = [[str(Fraction(x)) for x in row] for row in m]
            else:
                gens[k] = [[[float(z.real), float(z.imag)] for z in row] for row in m]
        return {"group": self.group.to_json(), "rep": {"type": kind, "matrices": gens}}


def _same(a: np.ndarray, b: np.ndarray, exact: bool) -> bool:
    if exact:
        return a.shape == b.shape and all(Fraction(x) == Fraction(y) for x, y in zip(a.ravel(), b.ravel()))
    return a.shape == b.shape and bool(np.allclose(np.asarray(a, complex), np.asarray(b, complex), rtol=1e-12, atol=1e-12))


# ---------------------------------------------------------------- operations


def _extend_action(group: FiniteGroup, action) -> dict[Perm, Perm]:
    """Action on sheets as a map element -> permutation, checked to be a homomorphism."""
    if callable(action):
        table = {g: tuple(action(g)) for g in group.elements}
    else:
        gens = {k: tuple(v) for k, v in action.items()}
        if set(gens) != set(group.generators):
            raise RepresentationError("action must give a permutation for every generator")
        n = len(next(iter(gens.values()))) if gens else 1
        table = {group.identity: P.identity(n)}
        frontier = [group.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for k, g in group.generators.items():
                    y = P.mul(x, g)
                    val = P.mul(table[x], gens[k])
                    if y in table:
                        if table[y] != val:
                            raise RepresentationError("non-homomorphism: action violates a group relation")
                    else:
                        table[y] = val
                        nxt.append(y)
            frontier = nxt
    for a in group.elements:
        for b in group.generators.values():
            if table[P.mul(a, b)] != P.mul(table[a], table[b]):
                raise RepresentationError("non-homomorphism: action is not multiplicative")
    return table


def permutation_representation(group: FiniteGroup, action=None) -> Representation:
    """``P(g) e_i = e_{g(i)}``; the default action is the group's own permutation action."""
    table = {g: g for g in group.elements} if action is None else _extend_action(group, action)
    n = len(next(iter(table.values())))

    def mat(p: Perm) -> np.ndarray:
        m = np.empty((n, n), dtype=object)
        m.fill(0)
        for i, pi in enumerate(p):
            m[pi, i] = 1
        return m

    return Representation(group, n, {g: mat(p) for g, p in table.items()}, True, "permutation")


def regular_representation(group: FiniteGroup) -> Representation:
    idx = {g: i for i, g in enumerate(group.elements)}
    rep = permutation_representation(group, lambda g: tuple(idx[P.mul(g, h)] for h in group.elements))
    return replace(rep, name="regular")


def dual_representation(rho: Representation) -> Representation:
    """``rho*(g) = rho(g^-1)^T``."""
    mats = {g: np.ascontiguousarray(rho.matrix(P.inv(g)).T) for g in rho.group.elements}
    name = f"dual({rho.name})" if rho.name else "dual"
    return Representation(rho.group, rho.dim, mats, rho.exact, name)


def character_representation(group: FiniteGroup, gen_values: Mapping[str, complex], name: str = "") -> Representation:
    """One-dimensional floating representation from scalar generator images."""
    return Representation.from_generators(group, {k: [[v]] for k, v in gen_values.items()}, exact=False, name=name)


def cyclic_character(group: FiniteGroup, n: int, k: int = 1) -> Representation:
    """``a -> exp(2 pi i k / n)`` on every generator; needs every relator to have length divisible by n."""
    z = cmath.exp(2j * cmath.pi * k / n)
    return character_representation(group, {lab: z for lab in group.generators}, name=f"zeta_{n}^{k}")


def induce(rho_sub: Representation, H: FiniteGroup) -> Representation:
    """Induced representation on right cosets ``H' r_i``.

    Block ``(i, j)`` of ``Ind(g)`` is ``rho'(r_i g r_j^-1)`` when that lies in
    ``H'`` and zero otherwise.
    """
    Hs = rho_sub.group
    if not set(Hs.elements) <= set(H.elements):
        raise RepresentationError("H' is not a subgroup")
    reps = H.right_cosets(Hs)
    sub = set(Hs.elements)
    d, n = rho_sub.dim, len(reps)
    dtype = object if rho_sub.exact else complex
    mats = {}
    for g in H.elements:
        m = np.zeros((n * d, n * d), dtype=dtype)
        for i, ri in enumerate(reps):
            rg = P.mul(ri, g)
            for j, rj in enumerate(reps):
                h = P.mul(rg, P.inv(rj))
                if h in sub:
                    m[i * d : (i + 1) * d, j * d : (j + 1) * d] = rho_sub.matrix(h)
                    break
        mats[g] = m
    return Representation(H, n * d, mats, rho_sub.exact, f"Ind({rho_sub.name or 'rho'})")


# ------------------------------------------------------------------- covers


@dataclass(frozen=True)
class CoverSpec:
    """Cover of ``base`` with sheets either the right cosets of ``subgroup``
    (cover voltages in the subgroup) or the points of ``action`` (a
    homomorphism from the voltage group to permutations; cover voltages trivial)."""

    base: QuotientComplex
    action: Mapping[str, Perm] | Callable[[Perm], Perm] | None = None
    subgroup: FiniteGroup | None = None
    connected: bool = True


def _sheet_maps(cs: CoverSpec):
    G = cs.base.group
    if cs.subgroup is not None:
        Hs = cs.subgroup
        if not set(Hs.elements) <= set(G.elements):
            raise RepresentationError("H' is not a subgroup")
        reps = G.right_cosets(Hs)
        sub = set(Hs.elements)

        def step(i: int, g: Perm) -> tuple[int, Perm]:
            rg = P.mul(reps[i], g)
            for j, rj in enumerate(reps):
                h = P.mul(rg, P.inv(rj))
                if h in sub:
                    return j, h
            raise AssertionError("coset lookup failed")

        return len(reps), step, Hs
    if cs.action is None:
        raise RepresentationError("a cover needs an action or a subgroup")
    table = _extend_action(G, cs.action)
    n = len(next(iter(table.values())))
    if cs.connected:
        orbit, frontier = {0}, [0]
        while frontier:
            i = frontier.pop()
            for g in G.generators.values():
                j = table[g][i]
                if j not in orbit:
                    orbit.add(j)
                    frontier.append(j)
        if len(orbit) != n:
            raise RepresentationError("action not transitive on sheets; the cover would be disconnected")
    inv_table = {g: P.inv(p) for g, p in table.items()}
    triv = FiniteGroup.trivial()

    def step(i: int, g: Perm) -> tuple[int, Perm]:
        return inv_table[g][i], triv.identity

    return n, step, triv


def build_cover(cs: CoverSpec) -> QuotientComplex:
    """Sheeted lift: a base reference ``x -> (y, g)`` becomes ``(x, i) -> ((y, j), h)``
    with ``r_i g = h r_j`` (coset model) or ``j = action(g)^-1 (i)`` and ``h = 1``."""
    base = cs.base
    n, step, H = _sheet_maps(cs)

    def ref(i, target, g):
        j, h = step(i, g)
        return ((target, j), h)

    edges, chambers = [], []
    for e in base.edges:
        for i in range(n):
            edges.append(
                {
                    "id": (e.id, i),
                    "type": e.type,
                    "tail": ref(i, e.tail, e.tail_g),
                    "head": ref(i, e.head, e.head_g),
                    "opp": ref(i, e.opp, e.opp_g),
                }
            )
    for c in base.chambers:
        for i in range(n):
            chambers.append(
                {
                    "id": (c.id, i),
                    "rot": ref(i, c.rot, c.rot_g),
                    "e01": ref(i, *c.e01),
                    "e12": ref(i, *c.e12),
                    "e02": ref(i, *c.e02),
                }
            )
    edge_out = {(s, i): [ref(i, t, g) for t, g in base.edge_out[s]] for s in range(len(base.edges)) for i in range(n)}
    chamber_out = {
        (s, i): [ref(i, t, g) for t, g in base.chamber_out[s]] for s in range(len(base.chambers)) for i in range(n)
    }
    vertices = [(v, i) for v in base.vertices for i in range(n)]
    data = {
        "q": base.q,
        "voltage_group": H,
        "vertices": vertices,
        "edges": edges,
        "chambers": chambers,
        "edge_out": edge_out,
        "chamber_out": chamber_out,
    }
    try:
        return build_complex(data)
    except (ComplexError, GroupError) as exc:
        raise RepresentationError(f"cover construction failed: {exc}") from None
