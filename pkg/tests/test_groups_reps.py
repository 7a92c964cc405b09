import numpy as np
import pytest

from a2zeta import perm as P
from a2zeta.groups import FiniteGroup, GroupError
from a2zeta.rep_voltage import (
    Representation,
    RepresentationError,
    cyclic_character,
    dual_representation,
    induce,
    permutation_representation,
    regular_representation,
)

S3 = FiniteGroup(3, {"s": (1, 0, 2), "t": (1, 2, 0)})


def test_closure_and_order():
    assert S3.order == 6
    assert FiniteGroup.cyclic(5).order == 5
    assert FiniteGroup.trivial(4).elements == (P.identity(4),)
    assert S3.elements[0] == P.identity(3)


def test_check_rejects_foreign_element():
    C3 = FiniteGroup.cyclic(3)
    with pytest.raises(GroupError, match="not in group"):
        C3.check((1, 0, 2))


def test_right_cosets():
    H = S3.subgroup({"s": (1, 0, 2)})
    reps = S3.right_cosets(H)
    assert len(reps) == 3
    covered = {P.mul(h, r) for r in reps for h in H.elements}
    assert covered == set(S3.elements)


def test_group_json_roundtrip():
    assert FiniteGroup.from_json(S3.to_json()) == S3


def test_from_generators_rejects_non_homomorphism():
    C3 = FiniteGroup.cyclic(3)
    with pytest.raises(RepresentationError, match="non-homomorphism"):
        Representation.from_generators(C3, {"g": [[2]]})


def test_permutation_rep_is_homomorphism():
    rho = permutation_representation(S3)
    assert rho.dim == 3 and rho.is_homomorphism()
    assert rho.character(P.identity(3)) == 3
    assert rho.character((1, 2, 0)) == 0


def test_regular_rep_character():
    rho = regular_representation(S3)
    assert rho.dim == 6
    assert [rho.character(g) for g in S3.elements] == [6, 0, 0, 0, 0, 0]


def test_dual_of_character_is_conjugate():
    C3 = FiniteGroup.cyclic(3)
    chi = cyclic_character(C3, 3, 1)
    dual = dual_representation(chi)
    g = C3.generators["g"]
    assert np.isclose(dual.character(g), np.conj(chi.character(g)))


def test_induce_trivial_from_trivial_is_regular():
    H1 = FiniteGroup.trivial(3)
    ind = induce(Representation.trivial(H1), S3)
    reg = regular_representation(S3)
    assert ind.is_homomorphism()
    assert [ind.character(g) for g in S3.elements] == [reg.character(g) for g in S3.elements]


def test_induce_from_subgroup_character_values():
    H = S3.subgroup({"t": (1, 2, 0)})
    ind = induce(Representation.trivial(H), S3)
    # permutation character on the cosets of A3
    assert ind.dim == 2
    assert sorted(ind.character(g) for g in S3.elements) == [0, 0, 0, 2, 2, 2]


def test_induce_rejects_non_subgroup():
    C2 = FiniteGroup(4, {"x": (1, 0, 2, 3)})
    with pytest.raises(RepresentationError):
        induce(Representation.trivial(C2), S3)


def test_group_mismatch_message():
    rho = Representation.trivial(FiniteGroup.cyclic(3))
    with pytest.raises(RepresentationError, match="group mismatch"):
        rho.matrix((1, 0, 2))
