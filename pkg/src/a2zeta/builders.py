"""Concrete quotient complexes and a local lattice model of the building.

One-vertex complexes come from triangle presentations over PG(2, q): a
bijection ``lam`` from points to lines and a cyclically closed set ``T`` of
point triples such that ``(x, y)`` extends to a triple iff ``y`` lies on
``lam[x]``.  The group with generators ``a_x`` and relations
``a_x a_y a_z = 1`` acts simply transitively on the vertices of the building.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from . import perm as P
from .complex_core import ComplexError, QuotientComplex, build_complex
from .groups import FiniteGroup
from .perm import Perm

SUPPORTED_Q = (2, 3)


class BuildError(ValueError):
    pass


# ------------------------------------------------------------ projective plane


def _normalize(v: Sequence[int], q: int) -> tuple[int, ...]:
    lead = next(x for x in v if x % q)
    inv = pow(lead, -1, q)
    return tuple(x * inv % q for x in v)


@dataclass(frozen=True)
class ProjectivePlane:
    """PG(2, q) for prime q.  Lines are stored by their normalized normal vector."""

    q: int
    points: tuple[tuple[int, int, int], ...]
    lines: tuple[tuple[int, int, int], ...]
    line_points: tuple[tuple[int, ...], ...] = field(repr=False)
    point_lines: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.points)

    def incident(self, point: int, line: int) -> bool:
        return point in self.line_points[line]

    @property
    def incidence(self) -> list[list[bool]]:
        return [[self.incident(p, l) for l in range(self.size)] for p in range(self.size)]


def build_projective_plane(q: int) -> ProjectivePlane:
    if q not in SUPPORTED_Q:
        raise BuildError(f"unsupported q: {q} (supported: {', '.join(map(str, SUPPORTED_Q))})")
    vecs = sorted({_normalize(v, q) for v in itertools.product(range(q), repeat=3) if any(v)})
    pts = tuple(vecs)
    lines = tuple(vecs)
    line_points = tuple(
        tuple(i for i, p in enumerate(pts) if sum(a * b for a, b in zip(p, l)) % q == 0) for l in lines
    )
    point_lines = tuple(tuple(j for j, lp in enumerate(line_points) if i in lp) for i in range(len(pts)))
    return ProjectivePlane(q, pts, lines, line_points, point_lines)


# -------------------------------------------------------- triangle presentations


@dataclass(frozen=True)
class TrianglePresentation:
    plane: ProjectivePlane
    lam: tuple[int, ...]
    triples: tuple[tuple[int, int, int], ...]

    @property
    def q(self) -> int:
        return self.plane.q

    def check(self) -> list[str]:
        """Violated invariants (empty when valid)."""
        errs = []
        T = set(self.triples)
        if sorted(self.lam) != list(range(self.plane.size)):
            errs.append("lambda is not a bijection")
        for x, y, z in T:
            if (y, z, x) not in T:
                errs.append(f"not cyclically closed at {(x, y, z)}")
        ext: dict[tuple[int, int], list[int]] = {}
        for x, y, z in T:
            ext.setdefault((x, y), []).append(z)
        for x in range(self.plane.size):
            for y in range(self.plane.size):
                on = self.plane.incident(y, self.lam[x])
                zs = ext.get((x, y), [])
                if on and len(zs) != 1:
                    errs.append(f"({x},{y}) extends {len(zs)} times")
                if not on and zs:
                    errs.append(f"({x},{y}) extends but {y} is not on lambda({x})")
        return errs

    def to_json(self) -> dict:
        return {"q": self.q, "lambda": list(self.lam), "triples": [list(t) for t in self.triples]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "TrianglePresentation":
        plane = build_projective_plane(int(obj["q"]))
        T = cls(plane, tuple(obj["lambda"]), tuple(tuple(t) for t in obj["triples"]))
        errs = T.check()
        if errs:
            raise BuildError("invalid triangle presentation: " + "; ".join(errs[:3]))
        return T


def search_triangle_presentation(plane: ProjectivePlane, lam: Sequence[int]) -> TrianglePresentation | None:
    """Exact cover of the arcs ``x -> y`` (y on lam[x]) by cyclic triangles.

    Backtracking always branches on the lexicographically smallest uncovered
    arc and tries ``z`` in increasing order, so the result is deterministic.
    Returns ``None`` when ``lam`` admits no presentation.
    """
    n = plane.size
    lam = tuple(lam)
    if n * (plane.q + 1) % 3:
        return None
    arc = [[plane.incident(y, lam[x]) for y in range(n)] for x in range(n)]
    arcs = sorted((x, y) for x in range(n) for y in range(n) if arc[x][y])
    covered: set[tuple[int, int]] = set()
    chosen: list[tuple[int, int, int]] = []

    def solve() -> bool:
        nxt = next((a for a in arcs if a not in covered), None)
        if nxt is None:
            return True
        x, y = nxt
        for z in range(n):
            if x == y == z or not (arc[y][z] and arc[z][x]):
                continue
            tri = [(x, y), (y, z), (z, x)]
            if any(t in covered for t in tri):
                continue
            covered.update(tri)
            chosen.append((x, y, z))
            if solve():
                return True
            chosen.pop()
            covered.difference_update(tri)
        return False

    if not solve():
        return None
    triples = set()
    for x, y, z in chosen:
        triples.update({(x, y, z), (y, z, x), (z, x, y)})
    return TrianglePresentation(plane, lam, tuple(sorted(triples)))


def iter_lambdas(plane: ProjectivePlane) -> Iterator[tuple[int, ...]]:
    """All point -> line bijections in lexicographic order."""
    return itertools.permutations(range(plane.size))


def find_presentation(q: int, max_tries: int | None = None, seed: int | None = None) -> TrianglePresentation:
    """First lambda that admits a triangle presentation.

    Lambdas are tried in lexicographic order, or in an order shuffled by
    ``seed`` when one is given.
    """
    plane = build_projective_plane(q)
    if plane.size * (q + 1) % 3:
        # the arcs split into cyclic triangles, so their count must be divisible by 3
        raise BuildError(f"no torsion-free triangle presentation for q={q}: {plane.size * (q + 1)} arcs")
    lams = iter_lambdas(plane)
    if seed is not None:
        lams = list(lams)
        random.Random(seed).shuffle(lams)
    for k, lam in enumerate(lams):
        if max_tries is not None and k >= max_tries:
            break
        T = search_triangle_presentation(plane, lam)
        if T is not None:
            return T
    raise BuildError(f"no triangle presentation found for q={q}")


def _phi_lookup(phi, x: int) -> Perm:
    if isinstance(phi, Mapping):
        for key in (x, f"a_{x}", str(x)):
            if key in phi:
                return tuple(phi[key])
        raise BuildError(f"phi has no value for generator a_{x}")
    return tuple(phi[x])


def complex_from_presentation(
    T: TrianglePresentation, phi: Mapping | Sequence | None = None, group: FiniteGroup | None = None
) -> QuotientComplex:
    """One-vertex complex of a triangle presentation with voltages ``phi``.

    Edge ``a_x`` (type 1) has head voltage ``phi(a_x)`` and edge ``a_x^-1``
    (type 2) has ``phi(a_x)^-1``.  The triple ``(x, y, z)`` gives the chamber
    ``1 > a_x > a_x a_y`` whose rotation is ``phi(a_x)`` times the chamber of
    ``(y, z, x)``.  Out-neighbours follow from the chamber incidence; for
    ``a_x`` they are the ``a_y`` with ``y`` off ``lam[x]``.
    """
    n = T.plane.size
    if phi is None:
        group = group or FiniteGroup.trivial()
        phi = {x: group.identity for x in range(n)}
    gens = [_phi_lookup(phi, x) for x in range(n)]
    m = len(gens[0])
    if any(len(g) != m or not P.is_perm(g) for g in gens):
        raise BuildError("phi values must be permutations of a common degree")
    if group is None:
        group = FiniteGroup(m, {f"a_{x}": g for x, g in enumerate(gens)})
    e = group.identity
    for x, y, z in T.triples:
        if P.prod(gens[x], gens[y], gens[z]) != e:
            raise BuildError(f"phi violates a triangle relation at {(x, y, z)}")

    edges = []
    for x in range(n):
        edges.append({"id": ("a", x), "type": 1, "tail": 0, "head": {"v": 0, "g": gens[x]}, "opp": (("b", x), gens[x])})
    for x in range(n):
        gi = P.inv(gens[x])
        edges.append({"id": ("b", x), "type": 2, "tail": 0, "head": {"v": 0, "g": gi}, "opp": (("a", x), gi)})
    chambers = []
    for x, y, z in T.triples:
        chambers.append(
            {
                "id": (x, y, z),
                "rot": ((y, z, x), gens[x]),
                "e01": ("a", x),
                "e12": (("a", y), gens[x]),
                "e02": ("b", z),
            }
        )
    try:
        return build_complex(
            {"q": T.q, "voltage_group": group, "vertices": [0], "edges": edges, "chambers": chambers}
        )
    except ComplexError as exc:
        raise BuildError(str(exc)) from None


# ---------------------------------------------------------- local lattice model


@dataclass
class OracleReport:
    q: int
    edges_by_type: dict[int, int]
    edge_out_counts: dict[int, set[int]]
    edge_criteria_agree: bool
    chamber_out_counts: set[int]
    chamber_criteria_agree: bool
    chambers_on_type1_edge: set[int]
    chambers_per_vertex: int

    @property
    def ok(self) -> bool:
        q = self.q
        n = q * q + q + 1
        return (
            self.edges_by_type == {1: n, 2: n}
            and self.edge_out_counts == {1: {q * q}, 2: {q * q}}
            and self.edge_criteria_agree
            and self.chamber_out_counts == {q}
            and self.chamber_criteria_agree
            and self.chambers_on_type1_edge == {q + 1}
        )

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "edges_by_type": self.edges_by_type,
            "edge_out_counts": {k: sorted(v) for k, v in self.edge_out_counts.items()},
            "edge_criteria_agree": self.edge_criteria_agree,
            "chamber_out_counts": sorted(self.chamber_out_counts),
            "chamber_criteria_agree": self.chamber_criteria_agree,
            "chambers_on_type1_edge": sorted(self.chambers_on_type1_edge),
            "chambers_per_vertex": self.chambers_per_vertex,
            "ok": self.ok,
        }


class _Window:
    """Lattices L with pi^2 L0 <= L <= L0, as subgroups of (Z/q^2)^3."""

    def __init__(self, q: int):
        self.q = q
        self.m = q * q
        self.L0 = frozenset(itertools.product(range(self.m), repeat=3))

    def pi(self, a: frozenset) -> frozenset:
        q, m = self.q, self.m
        return frozenset(tuple(q * x % m for x in v) for v in a)

    def add(self, a: frozenset, b: frozenset) -> frozenset:
        m = self.m
        return frozenset(tuple((x + y) % m for x, y in zip(u, v)) for u in a for v in b)

    def _extend(self, base: frozenset, g: tuple[int, ...]) -> frozenset:
        m = self.m
        return frozenset(tuple((x + k * y) % m for x, y in zip(v, g)) for v in base for k in range(m))

    def between(self, a: frozenset) -> dict[int, list[frozenset]]:
        """Lattices b with a > b > pi a, keyed by |a/b|."""
        pa = self.pi(a)
        reps, seen = [], set()
        for v in sorted(a):
            if v in seen:
                continue
            coset = frozenset(tuple((x + y) % self.m for x, y in zip(v, w)) for w in pa)
            seen |= coset
            if v not in pa:
                reps.append(v)
        ones = {self._extend(pa, r) for r in reps}
        twos = {self._extend(b, r) for b in ones for r in reps if r not in b}
        q3 = len(a) // len(pa)
        out: dict[int, list[frozenset]] = {1: [], 2: []}
        for b in ones | twos:
            idx = len(a) // len(b)
            if 1 < idx < q3:
                out[1 if idx == self.q else 2].append(b)
        for k in out:
            out[k].sort(key=lambda s: sorted(s))
        return out

    def adjacent_to_L0(self, b: frozenset) -> bool:
        """[L0] and [b] span an edge, for pi^2 L0 <= b <= L0."""
        p1 = self.pi(self.L0)
        p2 = self.pi(p1)
        return (b < self.L0 and b > p1) or (b < p1 and b > p2)


def local_lattice_oracle(q: int) -> OracleReport:
    """Neighbour counts around a base vertex computed directly from lattices.

    Edge out-neighbours are found twice, by "same type and no chamber" and by
    ``a3 + pi a1 = a2``; chamber out-neighbours by ``[a4] != [a1]`` and by
    ``a4 + pi a1 = a3``.  Both criteria must pick the same lattices.
    """
    if q not in SUPPORTED_Q:
        raise BuildError(f"unsupported q: {q}")
    W = _Window(q)
    L0 = W.L0
    pL0 = W.pi(L0)
    star = W.between(L0)
    edges_by_type = {t: len(star[t]) for t in (1, 2)}

    out_counts: dict[int, set[int]] = {1: set(), 2: set()}
    agree = True
    for t in (1, 2):
        for a2 in star[t]:
            nxt = W.between(a2)[t]
            by_chamber = [a3 for a3 in nxt if not W.adjacent_to_L0(a3)]
            by_sum = [a3 for a3 in nxt if W.add(a3, pL0) == a2]
            agree &= set(by_chamber) == set(by_sum)
            out_counts[t].add(len(by_sum))

    ch_counts: set[int] = set()
    ch_agree = True
    n_chambers = 0
    for a2 in star[1]:
        for a3 in W.between(a2)[1]:
            if not (a3 > pL0):
                continue
            n_chambers += 1
            # (a2, a3, a4) is a chamber iff a2 > a3 > a4 > pi a2
            pa2 = W.pi(a2)
            cands = [a4 for a4 in W.between(a3)[1] if a4 > pa2]
            by_class = [a4 for a4 in cands if a4 != pL0]
            by_sum = [a4 for a4 in cands if W.add(a4, pL0) == a3]
            ch_agree &= set(by_class) == set(by_sum)
            ch_counts.add(len(by_sum))

    on_edge: set[int] = set()
    for c in star[2]:
        # type-1 pointed edge [L0 > c > pi L0] with |c / pi L0| = 1
        on_edge.add(sum(1 for b in star[1] if b > c))

    return OracleReport(q, edges_by_type, out_counts, agree, ch_counts, ch_agree, on_edge, n_chambers)
