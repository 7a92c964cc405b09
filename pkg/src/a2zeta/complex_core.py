"""Finite voltage-decorated quotients of the rank-2 building of PGL3.

Every simplex of the quotient has a chosen representative lift.  A reference
``(y, g)`` stored on simplex ``x`` means "the lift reached from the
representative of ``x`` equals ``g`` applied to the representative of ``y``".

* edge ``s``: ``tail = (v, g_t)``, ``head = (w, g_h)``, ``opp = (s', g_o)``,
  type ``|a0/a1|`` for the lift ``[a0 > a1]`` (tail ``a0``, head ``a1``).
* chamber ``c`` lifting ``x > y > z > pi x``: faces ``e01 = [x > y]`` and
  ``e12 = [y > z]`` (type 1), ``e02 = [x > z]`` (type 2), and
  ``rot = [y > z > pi x]``.
* out-neighbour lists hold ``(target, g)`` pairs in the same convention.

Ids are positions in the canonical order: type-1 edges before type-2 edges,
chambers in consecutive rotation triples ``c, rot c, rot^2 c``.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Mapping, Sequence

from . import perm as P
from .groups import FiniteGroup, GroupError
from .perm import Perm

Ref = tuple[int, Perm]


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class PointedEdge:
    id: int
    type: int
    tail: int
    head: int
    head_g: Perm
    opp: int
    opp_g: Perm
    tail_g: Perm

    @property
    def head_ref(self) -> Ref:
        return (self.head, self.head_g)

    @property
    def tail_ref(self) -> Ref:
        return (self.tail, self.tail_g)

    @property
    def opposite(self) -> int:
        return self.opp


@dataclass(frozen=True)
class PointedChamber:
    id: int
    rot: int
    rot_g: Perm
    e01: Ref
    e12: Ref
    e02: Ref

    @property
    def faces(self) -> tuple[Ref, Ref, Ref]:
        return (self.e01, self.e12, self.e02)


@dataclass(frozen=True)
class QuotientComplex:
    q: int
    group: FiniteGroup
    n_vertices: int
    edges: tuple[PointedEdge, ...]
    chambers: tuple[PointedChamber, ...]
    edge_out: tuple[tuple[Ref, ...], ...]
    chamber_out: tuple[tuple[Ref, ...], ...]
    star: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        star: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for e in self.edges:
            star[e.tail].append(e.id)
        object.__setattr__(self, "star", tuple(tuple(s) for s in star))

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    @property
    def voltage_group(self) -> FiniteGroup:
        return self.group

    @property
    def N0(self) -> int:
        return self.n_vertices

    @property
    def N1(self) -> int:
        return len(self.edges) // 2

    @property
    def N2(self) -> int:
        return len(self.chambers) // 3

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.N0, self.N1, self.N2)

    @property
    def n_type1(self) -> int:
        return sum(1 for e in self.edges if e.type == 1)

    @property
    def identity(self) -> Perm:
        return self.group.identity

    def summary(self) -> str:
        return f"QuotientComplex(q={self.q}, N=({self.N0}, {self.N1}, {self.N2}), |H|={self.group.order})"


# ----------------------------------------------------------------- assembly


def _parse_ref(obj, key_id: str, group: FiniteGroup) -> tuple[Hashable, Perm]:
    """Accept ``id``, ``(id, g)`` or ``{key_id: id, "g": g}``."""
    if isinstance(obj, Mapping):
        g = obj.get("g")
        return obj[key_id], group.identity if g is None else group.check(g)
    if isinstance(obj, (tuple, list)) and len(obj) == 2 and isinstance(obj[1], (tuple, list)):
        return obj[0], group.check(obj[1])
    return obj, group.identity


def build_complex(data: Mapping[str, Any]) -> QuotientComplex:
    """Index an incidence description into a canonical ``QuotientComplex``.

    ``data`` has keys ``q``, ``voltage_group`` (a ``FiniteGroup`` or its JSON),
    ``vertices``, ``edges`` (dicts with ``id, type, tail, head, opp``),
    ``chambers`` (dicts with ``id, rot, e01, e12, e02``) and optionally
    ``edge_out`` / ``chamber_out`` keyed by id.  References may be a bare id
    (identity voltage), a pair ``(id, g)`` or a dict.  Missing out-neighbour
    maps are derived from the chamber data.
    """
    group = data["voltage_group"]
    if not isinstance(group, FiniteGroup):
        group = FiniteGroup.from_json(group)
    q = int(data["q"])
    vlabels = list(data["vertices"])
    vidx = {v: i for i, v in enumerate(vlabels)}
    if len(vidx) != len(vlabels):
        raise ComplexError("duplicate vertex id")

    raw_edges = list(data["edges"])
    elabels = [e["id"] for e in raw_edges]
    if len(set(elabels)) != len(elabels):
        raise ComplexError("duplicate edge id")
    order = [e for e in raw_edges if int(e["type"]) == 1] + [e for e in raw_edges if int(e["type"]) == 2]
    if len(order) != len(raw_edges):
        raise ComplexError("edge type must be 1 or 2")
    eidx = {e["id"]: i for i, e in enumerate(order)}

    def vertex(label, where):
        if label not in vidx:
            raise ComplexError(f"dangling reference: vertex {label!r} in {where}")
        return vidx[label]

    def edge_ref(ref, where) -> Ref:
        label, g = _parse_ref(ref, "e", group)
        if label not in eidx:
            raise ComplexError(f"dangling reference: edge {label!r} in {where}")
        return eidx[label], g

    try:
        edges = []
        for i, e in enumerate(order):
            tv, tg = _parse_ref(e["tail"], "v", group)
            hv, hg = _parse_ref(e["head"], "v", group)
            olabel, og = _parse_ref(e["opp"], "e", group)
            if olabel not in eidx:
                raise ComplexError(f"S₁ not opposite-closed: edge {e['id']!r} has opposite {olabel!r} missing")
            edges.append(
                PointedEdge(
                    id=i,
                    type=int(e["type"]),
                    tail=vertex(tv, f"edge {e['id']!r}"),
                    tail_g=tg,
                    head=vertex(hv, f"edge {e['id']!r}"),
                    head_g=hg,
                    opp=eidx[olabel],
                    opp_g=og,
                )
            )

        raw_ch = list(data.get("chambers", []))
        clabels = {c["id"]: c for c in raw_ch}
        if len(clabels) != len(raw_ch):
            raise ComplexError("duplicate chamber id")
        corder: list[Hashable] = []
        placed: set = set()
        for c in raw_ch:
            if c["id"] in placed:
                continue
            cur = c["id"]
            for _ in range(3):
                if cur in placed:
                    raise ComplexError(f"S₂ not rotation-closed: rotation orbit of {c['id']!r} is not a 3-cycle")
                placed.add(cur)
                corder.append(cur)
                nxt, _g = _parse_ref(clabels[cur]["rot"], "c", group)
                if nxt not in clabels:
                    raise ComplexError(f"S₂ not rotation-closed: chamber {cur!r} has rotation {nxt!r} missing")
                cur = nxt
            if cur != c["id"]:
                raise ComplexError(f"S₂ not rotation-closed: rotation orbit of {c['id']!r} is not a 3-cycle")
        cidx = {lab: i for i, lab in enumerate(corder)}
        chambers = []
        for i, lab in enumerate(corder):
            c = clabels[lab]
            rl, rg = _parse_ref(c["rot"], "c", group)
            where = f"chamber {lab!r}"
            chambers.append(
                PointedChamber(
                    id=i,
                    rot=cidx[rl],
                    rot_g=rg,
                    e01=edge_ref(c["e01"], where),
                    e12=edge_ref(c["e12"], where),
                    e02=edge_ref(c["e02"], where),
                )
            )

        def out_map(raw, idx, labels_in_order, kind):
            out = []
            for lab in labels_in_order:
                lst = raw.get(lab, raw.get(str(lab)))
                if lst is None:
                    raise ComplexError(f"dangling reference: no {kind} out-neighbour list for {lab!r}")
                refs = []
                for r in lst:
                    tl, g = _parse_ref(r, "e" if kind == "edge" else "c", group)
                    if tl not in idx:
                        raise ComplexError(f"dangling reference: {kind} {tl!r} in out-neighbours of {lab!r}")
                    refs.append((idx[tl], g))
                out.append(tuple(refs))
            return tuple(out)

        edge_labels = [e["id"] for e in order]
        partial = QuotientComplex(q, group, len(vlabels), tuple(edges), tuple(chambers), (), ())
        if data.get("edge_out") is not None:
            eo = out_map(data["edge_out"], eidx, edge_labels, "edge")
        else:
            eo = derive_edge_out(partial)
        if data.get("chamber_out") is not None:
            co = out_map(data["chamber_out"], cidx, corder, "chamber")
        else:
            co = derive_chamber_out(partial)
    except GroupError as exc:
        raise ComplexError(str(exc)) from None
    return QuotientComplex(q, group, len(vlabels), tuple(edges), tuple(chambers), eo, co)


# ----------------------------------------------------------- lift algebra


def _opp_lift(c: QuotientComplex, ref: Ref) -> Ref:
    """Opposite of the lift ``g * s``."""
    s, g = ref
    e = c.edges[s]
    return e.opp, P.mul(g, e.opp_g)


def _translate(g: Perm, ref: Ref) -> Ref:
    return ref[0], P.mul(g, ref[1])


def derive_edge_out(c: QuotientComplex) -> tuple[tuple[Ref, ...], ...]:
    """Out-neighbours computed from the star and chamber incidence.

    A same-type edge leaving the head of ``e`` is excluded when the three
    vertices span a chamber: for type 1 it is the ``e12`` face of a chamber
    whose ``e01`` is ``e``; for type 2 it is the ``e02`` face of a chamber
    whose ``e01`` is ``opp(e)``.
    """
    by_e01: dict[int, list[PointedChamber]] = defaultdict(list)
    for ch in c.chambers:
        by_e01[ch.e01[0]].append(ch)
    out = []
    for e in c.edges:
        cands = [
            (s2, P.mul(e.head_g, P.inv(c.edges[s2].tail_g)))
            for s2 in c.star[e.head]
            if c.edges[s2].type == e.type
        ]
        forbidden = set()
        if e.type == 1:
            for ch in by_e01[e.id]:
                h = P.inv(ch.e01[1])
                forbidden.add(_translate(h, ch.e12))
        else:
            so, go = e.opp, e.opp_g
            for ch in by_e01[so]:
                h = P.mul(go, P.inv(ch.e01[1]))
                forbidden.add(_translate(h, ch.e02))
        out.append(tuple(r for r in cands if r not in forbidden))
    return tuple(out)


def derive_chamber_out(c: QuotientComplex) -> tuple[tuple[Ref, ...], ...]:
    """Chambers whose ``e01`` lift is ``e12`` of ``c``, except ``rot(c)``."""
    by_e01: dict[int, list[PointedChamber]] = defaultdict(list)
    for ch in c.chambers:
        by_e01[ch.e01[0]].append(ch)
    out = []
    for ch in c.chambers:
        s12, g12 = ch.e12
        rot = (ch.rot, ch.rot_g)
        lst = []
        for nb in by_e01[s12]:
            r = (nb.id, P.mul(g12, P.inv(nb.e01[1])))
            if r != rot:
                lst.append(r)
        out.append(tuple(lst))
    return tuple(out)


# --------------------------------------------------------------- validation


@dataclass
class CheckResult:
    passed: bool
    offenders: list = field(default_factory=list)
    detail: str = ""

    def to_dict(self) -> dict:
        return {"passed": self.passed, "offenders": [str(o) for o in self.offenders[:20]], "detail": self.detail}


@dataclass
class ValidationReport:
    checks: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.checks.values())

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> dict[str, CheckResult]:
        return {k: v for k, v in self.checks.items() if not v.passed}

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": {k: v.to_dict() for k, v in self.checks.items()}}

    def __str__(self) -> str:
        lines = [f"{'PASS' if r.passed else 'FAIL'}  {k}" + (f"  {r.detail}" if r.detail else "") for k, r in self.checks.items()]
        return "\n".join(lines)


def _add(report: ValidationReport, name: str, offenders: list, detail: str = "") -> None:
    report.checks[name] = CheckResult(not offenders, offenders, detail)


def validate(c: QuotientComplex) -> ValidationReport:
    """Check every local count and closure rule; failures are report entries."""
    q, G = c.q, c.group
    e_id = G.identity
    R = ValidationReport()
    edges, chambers = c.edges, c.chambers

    bad = [x.id for x in edges if x.head_g not in G or x.tail_g not in G or x.opp_g not in G]
    bad += [ch.id for ch in chambers if any(f[1] not in G for f in ch.faces) or ch.rot_g not in G]
    _add(R, "voltages_in_group", bad)

    _add(R, "nonempty", [] if chambers and edges else ["no chambers"], "degenerate complex" if not chambers else "")
    _add(
        R,
        "simplex_counts",
        [] if len(edges) % 2 == 0 and len(chambers) % 3 == 0 else [(len(edges), len(chambers))],
        "pointed edges = 2 N1, pointed chambers = 3 N2",
    )

    types = [x.type for x in edges]
    _add(R, "canonical_order", [] if types == sorted(types) else ["type-2 edge before a type-1 edge"])

    n = q * q + q + 1
    bad = []
    for v in c.vertices:
        cnt = Counter(edges[s].type for s in c.star[v])
        if cnt[1] != n or cnt[2] != n:
            bad.append((v, cnt[1], cnt[2]))
    _add(R, "star_counts", bad, f"q^2+q+1 = {n} edges of each type per vertex")

    bad = []
    for x in edges:
        o = edges[x.opp]
        if o.opp != x.id or P.mul(x.opp_g, o.opp_g) != e_id or x.type + o.type != 3:
            bad.append(x.id)
        elif o.tail != x.head or P.mul(x.opp_g, o.tail_g) != x.head_g:
            bad.append(x.id)
        elif o.head != x.tail or P.mul(x.opp_g, o.head_g) != x.tail_g:
            bad.append(x.id)
    _add(R, "opposite_involution", bad, "opp(opp e) = e, types swap, endpoints swap")

    bad = []
    for x in edges:
        outs = c.edge_out[x.id] if x.id < len(c.edge_out) else ()
        ok = len(outs) == q * q and len(set(outs)) == len(outs)
        for s2, g in outs:
            y = edges[s2]
            if y.type != x.type or y.tail != x.head or P.mul(g, y.tail_g) != x.head_g:
                ok = False
        if not ok:
            bad.append(x.id)
    _add(R, "edge_out_degree", bad, f"|N(e)| = q^2 = {q * q}, same type, leaving the head")

    bad = []
    for ch in chambers:
        (s01, g01), (s12, g12), (s02, g02) = ch.faces
        a, b, d = edges[s01], edges[s12], edges[s02]
        if (a.type, b.type, d.type) != (1, 1, 2):
            bad.append((ch.id, "face types"))
            continue
        x_ok = a.tail == d.tail and P.mul(g01, a.tail_g) == P.mul(g02, d.tail_g)
        y_ok = a.head == b.tail and P.mul(g01, a.head_g) == P.mul(g12, b.tail_g)
        z_ok = b.head == d.head and P.mul(g12, b.head_g) == P.mul(g02, d.head_g)
        if not (x_ok and y_ok and z_ok):
            bad.append((ch.id, "faces do not close"))
    _add(R, "chamber_faces", bad, "e01, e12 of type 1 and e02 of type 2 bound a triangle")

    bad = []
    for ch in chambers:
        r1 = chambers[ch.rot]
        r2 = chambers[r1.rot]
        if r2.rot != ch.id or ch.rot == ch.id or P.prod(ch.rot_g, r1.rot_g, r2.rot_g) != e_id:
            bad.append(ch.id)
            continue
        g = ch.rot_g
        if _translate(g, r1.e01) != ch.e12:
            bad.append((ch.id, "e01(rot c) != e12(c)"))
        elif _translate(g, r1.e12) != _opp_lift(c, ch.e02):
            bad.append((ch.id, "e12(rot c) != opp e02(c)"))
        elif _translate(g, r1.e02) != _opp_lift(c, ch.e01):
            bad.append((ch.id, "e02(rot c) != opp e01(c)"))
    _add(R, "rotation", bad, "rot^3 = id and rot acts on faces")

    faces = Counter()
    for ch in chambers:
        faces[("e01", ch.e01[0])] += 1
        faces[("e12", ch.e12[0])] += 1
        faces[("e02", ch.e02[0])] += 1
    bad = []
    for x in edges:
        roles = ("e01", "e12") if x.type == 1 else ("e02",)
        for role in roles:
            if faces[(role, x.id)] != q + 1:
                bad.append((x.id, role, faces[(role, x.id)]))
    _add(R, "chambers_per_edge", bad, f"type-1 edges are e01 and e12 of {q + 1} chambers, type-2 edges e02 of {q + 1}")
    _add(
        R,
        "chamber_edge_ratio",
        [] if len(chambers) == (q + 1) * c.n_type1 else [(len(chambers), c.n_type1)],
        "pointed chambers = (q+1) x type-1 edges",
    )

    bad = []
    for ch in chambers:
        outs = c.chamber_out[ch.id] if ch.id < len(c.chamber_out) else ()
        if len(outs) != q or len(set(outs)) != q or (ch.rot, ch.rot_g) in outs:
            bad.append(ch.id)
            continue
        for c2, g in outs:
            if _translate(g, chambers[c2].e01) != ch.e12:
                bad.append(ch.id)
                break
    _add(R, "chamber_out_degree", bad, f"|N(c)| = q = {q}, sharing e12(c) as e01, rot(c) excluded")

    if all(R.checks[k].passed for k in ("chamber_faces", "rotation", "chambers_per_edge")):
        de = derive_edge_out(c)
        bad = [x.id for x in edges if set(de[x.id]) != set(c.edge_out[x.id])]
        _add(R, "edge_out_matches_incidence", bad, "stored N(e) agrees with the chamber incidence")
        dc = derive_chamber_out(c)
        bad = [ch.id for ch in chambers if set(dc[ch.id]) != set(c.chamber_out[ch.id])]
        _add(R, "chamber_out_matches_incidence", bad)
    return R


def euler_characteristic(c: QuotientComplex | Sequence[int]) -> int:
    if isinstance(c, QuotientComplex):
        n0, n1, n2 = c.counts
    else:
        n0, n1, n2 = c
    return n0 - n1 + n2


# ------------------------------------------------------------------- gauge


@dataclass(frozen=True)
class Gauge:
    """Re-choice of representative lifts: new rep of x is ``h_x`` times the old one."""

    vertices: tuple[Perm, ...]
    edges: tuple[Perm, ...]
    chambers: tuple[Perm, ...]

    @classmethod
    def trivial(cls, c: QuotientComplex) -> "Gauge":
        e = c.identity
        return cls((e,) * c.N0, (e,) * len(c.edges), (e,) * len(c.chambers))

    @classmethod
    def random(cls, c: QuotientComplex, seed: int = 0) -> "Gauge":
        rng = random.Random(seed)
        els = c.group.elements
        pick = lambda n: tuple(rng.choice(els) for _ in range(n))  # noqa: E731
        return cls(pick(c.N0), pick(len(c.edges)), pick(len(c.chambers)))


def gauge_transform(c: QuotientComplex, g: Gauge | Mapping[str, Iterable[Perm]]) -> QuotientComplex:
    """Same quotient, new representative lifts; each voltage ``x -> y`` becomes ``h_x g h_y^-1``."""
    if not isinstance(g, Gauge):
        e = c.identity
        g = Gauge(
            tuple(g.get("vertices", [e] * c.N0)),
            tuple(g.get("edges", [e] * len(c.edges))),
            tuple(g.get("chambers", [e] * len(c.chambers))),
        )
    G = c.group
    hv = [G.check(x) for x in g.vertices]
    he = [G.check(x) for x in g.edges]
    hc = [G.check(x) for x in g.chambers]
    if (len(hv), len(he), len(hc)) != (c.N0, len(c.edges), len(c.chambers)):
        raise ComplexError("gauge does not match the complex")

    def conj(hx: Perm, v: Perm, hy: Perm) -> Perm:
        return P.prod(hx, v, P.inv(hy))

    edges = tuple(
        PointedEdge(
            id=x.id,
            type=x.type,
            tail=x.tail,
            tail_g=conj(he[x.id], x.tail_g, hv[x.tail]),
            head=x.head,
            head_g=conj(he[x.id], x.head_g, hv[x.head]),
            opp=x.opp,
            opp_g=conj(he[x.id], x.opp_g, he[x.opp]),
        )
        for x in c.edges
    )
    chambers = tuple(
        PointedChamber(
            id=ch.id,
            rot=ch.rot,
            rot_g=conj(hc[ch.id], ch.rot_g, hc[ch.rot]),
            e01=(ch.e01[0], conj(hc[ch.id], ch.e01[1], he[ch.e01[0]])),
            e12=(ch.e12[0], conj(hc[ch.id], ch.e12[1], he[ch.e12[0]])),
            e02=(ch.e02[0], conj(hc[ch.id], ch.e02[1], he[ch.e02[0]])),
        )
        for ch in c.chambers
    )
    eo = tuple(tuple((t, conj(he[s], v, he[t])) for t, v in lst) for s, lst in enumerate(c.edge_out))
    co = tuple(tuple((t, conj(hc[s], v, hc[t])) for t, v in lst) for s, lst in enumerate(c.chamber_out))
    return QuotientComplex(c.q, c.group, c.n_vertices, edges, chambers, eo, co)


def to_data(c: QuotientComplex) -> dict:
    """Incidence description accepted by ``build_complex`` (ids are canonical indices)."""
    e = c.identity

    def ref(key, target, g):
        return target if g == e else {key: target, "g": list(g)}

    return {
        "q": c.q,
        "voltage_group": c.group.to_json(),
        "vertices": list(c.vertices),
        "edges": [
            {
                "id": x.id,
                "type": x.type,
                "tail": ref("v", x.tail, x.tail_g),
                "head": {"v": x.head, "g": list(x.head_g)},
                "opp": ref("e", x.opp, x.opp_g),
            }
            for x in c.edges
        ],
        "chambers": [
            {
                "id": ch.id,
                "rot": ref("c", ch.rot, ch.rot_g),
                "e01": {"e": ch.e01[0], "g": list(ch.e01[1])},
                "e12": {"e": ch.e12[0], "g": list(ch.e12[1])},
                "e02": {"e": ch.e02[0], "g": list(ch.e02[1])},
            }
            for ch in c.chambers
        ],
        "edge_out": {str(s): [{"e": t, "g": list(g)} for t, g in lst] for s, lst in enumerate(c.edge_out)},
        "chamber_out": {str(s): [{"c": t, "g": list(g)} for t, g in lst] for s, lst in enumerate(c.chamber_out)},
    }
