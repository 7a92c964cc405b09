import copy
import json

import pytest

from a2zeta import perm as P
from a2zeta.complex_core import (
    ComplexError,
    Gauge,
    build_complex,
    derive_chamber_out,
    derive_edge_out,
    euler_characteristic,
    gauge_transform,
    to_data,
    validate,
)
from a2zeta.serialize import complex_from_json, dumps


def test_counts(base, z3_base, cover):
    assert base.counts == (1, 7, 7)
    assert z3_base.counts == (1, 7, 7)
    assert cover.counts == (3, 21, 21)
    assert euler_characteristic(base) == 1
    assert euler_characteristic(cover) == 3
    assert euler_characteristic((2, 5, 4)) == 1


def test_canonical_order(base):
    types = [e.type for e in base.edges]
    assert types == sorted(types)
    for ch in base.chambers[::3]:
        r1 = base.chambers[ch.rot]
        assert base.chambers[r1.rot].rot == ch.id


@pytest.mark.parametrize("name", ["base", "z3_base", "cover", "coset_cover"])
def test_validate_passes(name, request):
    c = request.getfixturevalue(name)
    report = validate(c)
    assert report.ok, str(report)


def test_out_maps_match_derivation(z3_base):
    assert derive_edge_out(z3_base) == z3_base.edge_out
    assert derive_chamber_out(z3_base) == z3_base.chamber_out


@pytest.mark.parametrize("name", ["base", "z3_base", "cover"])
def test_json_roundtrip(name, request):
    c = request.getfixturevalue(name)
    data = json.loads(dumps(to_data(c)))
    c2 = complex_from_json(data)
    assert to_data(c2) == to_data(c)
    assert dumps(to_data(c2)) == dumps(to_data(c))


def test_opposite_closure_required(base):
    data = to_data(base)
    data["edges"] = [e for e in data["edges"] if e["id"] != 7]
    with pytest.raises(ComplexError, match="S₁ not opposite-closed|dangling reference"):
        build_complex(data)


def test_rotation_closure_required(base):
    data = to_data(base)
    data["chambers"] = data["chambers"][1:]
    with pytest.raises(ComplexError, match="S₂ not rotation-closed|dangling reference"):
        build_complex(data)


def test_dangling_vertex(base):
    data = to_data(base)
    data["edges"][0]["head"] = {"v": 99, "g": data["edges"][0]["head"]["g"]}
    with pytest.raises(ComplexError, match="dangling reference"):
        build_complex(data)


def test_voltage_outside_group(z3_base):
    data = to_data(z3_base)
    data["edges"][0]["head"]["g"] = [1, 0, 2]
    with pytest.raises(ComplexError, match="not in group"):
        build_complex(data)


def test_broken_face_map_is_localized(base):
    data = to_data(base)
    ch = data["chambers"][0]
    wrong = (ch["e12"]["e"] + 1) % 7
    ch["e12"] = {"e": wrong, "g": ch["e12"]["g"]}
    data.pop("edge_out")
    data.pop("chamber_out")
    report = validate(build_complex(data))
    assert not report.ok
    failed = report.failures()
    assert failed["rotation"].offenders[0] == (0, "e01(rot c) != e12(c)")
    assert failed["chamber_out_degree"].offenders == [0]
    assert "edge_out_degree" not in failed


def test_tampered_out_list_fails_validation(base):
    data = to_data(base)
    data["edge_out"]["0"][0]["e"] = 8
    report = validate(build_complex(data))
    assert "edge_out_matches_incidence" in report.failures()


def test_gauge_preserves_validity(z3_base):
    g = Gauge.random(z3_base, seed=7)
    c2 = gauge_transform(z3_base, g)
    assert validate(c2).ok
    assert any(e.head_g != e2.head_g for e, e2 in zip(z3_base.edges, c2.edges))
    back = gauge_transform(
        c2,
        Gauge(
            tuple(P.inv(h) for h in g.vertices),
            tuple(P.inv(h) for h in g.edges),
            tuple(P.inv(h) for h in g.chambers),
        ),
    )
    assert to_data(back) == to_data(z3_base)


def test_gauge_shape_mismatch(z3_base):
    with pytest.raises(ComplexError):
        gauge_transform(z3_base, {"vertices": [z3_base.identity] * 2})


def test_star_counts(base):
    q = base.q
    out1 = [e for e in base.edges if e.tail == 0 and e.type == 1]
    out2 = [e for e in base.edges if e.tail == 0 and e.type == 2]
    assert len(out1) == len(out2) == q * q + q + 1


def test_data_not_mutated(base):
    data = to_data(base)
    snapshot = copy.deepcopy(data)
    build_complex(data)
    assert data == snapshot
