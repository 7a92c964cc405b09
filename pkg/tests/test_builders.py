import itertools

import pytest

from a2zeta import perm as P
from a2zeta.builders import (
    BuildError,
    TrianglePresentation,
    build_projective_plane,
    complex_from_presentation,
    find_presentation,
    local_lattice_oracle,
    search_triangle_presentation,
)


@pytest.mark.parametrize("q", [2, 3])
def test_projective_plane_axioms(q):
    pl = build_projective_plane(q)
    n = q * q + q + 1
    assert pl.size == n == len(pl.lines)
    assert all(len(pts) == q + 1 for pts in pl.line_points)
    assert all(len(ls) == q + 1 for ls in pl.point_lines)
    for a, b in itertools.combinations(range(n), 2):
        common = set(pl.point_lines[a]) & set(pl.point_lines[b])
        assert len(common) == 1


def test_unsupported_q():
    with pytest.raises(BuildError, match="unsupported q"):
        build_projective_plane(5)


def test_presentation_is_valid(presentation):
    T = presentation
    assert T.check() == []
    n = T.plane.size
    assert len(T.triples) == n * (T.q + 1)
    for x, y, z in T.triples:
        assert (y, z, x) in T.triples
        assert T.plane.incident(y, T.lam[x])
        assert not (x == y == z)


def test_presentation_search_is_deterministic(presentation):
    assert find_presentation(2).to_json() == presentation.to_json()
    again = search_triangle_presentation(presentation.plane, presentation.lam)
    assert again.triples == presentation.triples


def test_seeded_search_finds_valid_presentation():
    T = find_presentation(2, seed=3)
    assert T.check() == []


def test_q3_one_vertex_is_impossible():
    with pytest.raises(BuildError, match="no torsion-free triangle presentation for q=3"):
        find_presentation(3)


def test_presentation_json_roundtrip(presentation):
    T = TrianglePresentation.from_json(presentation.to_json())
    assert T.triples == presentation.triples and T.lam == presentation.lam


def test_invalid_presentation_rejected(presentation):
    data = presentation.to_json()
    data["triples"] = data["triples"][1:]
    with pytest.raises(BuildError, match="invalid triangle presentation"):
        TrianglePresentation.from_json(data)


def test_phi_must_respect_relations(presentation):
    bad = {x: P.identity(3) for x in range(7)}
    bad[0] = P.cycle(3, 0, 1, 2)
    with pytest.raises(BuildError, match="violates a triangle relation"):
        complex_from_presentation(presentation, bad)


def test_type1_out_neighbours_are_off_the_line(presentation, base):
    T = presentation
    for e in base.edges[:7]:
        x = e.id
        outs = sorted(t for t, _ in base.edge_out[e.id])
        expected = sorted(y for y in range(7) if not T.plane.incident(y, T.lam[x]))
        assert outs == expected


def test_z3_voltages_on_out_neighbours(z3_base):
    g = P.cycle(3, 0, 1, 2)
    for e in z3_base.edges[:7]:
        assert all(v == g for _, v in z3_base.edge_out[e.id])


@pytest.mark.parametrize("q", [2, 3])
def test_local_lattice_oracle(q):
    rep = local_lattice_oracle(q)
    n = q * q + q + 1
    assert rep.edges_by_type == {1: n, 2: n}
    assert rep.edge_out_counts == {1: {q * q}, 2: {q * q}}
    assert rep.chamber_out_counts == {q}
    assert rep.chambers_on_type1_edge == {q + 1}
    assert rep.edge_criteria_agree and rep.chamber_criteria_agree
    assert rep.ok
