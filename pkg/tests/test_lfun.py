import dataclasses

import numpy as np
import pytest

from a2zeta.algebra import Polynomial, det, poly_close
from a2zeta.complex_core import Gauge, gauge_transform
from a2zeta.groups import FiniteGroup
from a2zeta.lfun import (
    character_product,
    check_degrees,
    check_divisibility,
    check_functional_equation,
    check_induction,
    check_log_derivative,
    check_main_identity,
    check_trace,
    compute_L,
    geodesic_oracle,
    run_all,
)
from a2zeta.rep_voltage import Representation, cyclic_character, permutation_representation

P0_TRIVIAL = [1, -7, 14, -8]


def _int_poly(a):
    return [int(round(x.real)) for x in np.asarray(a)]


def _det_I_minus_uB(B):
    """Coefficients of det(I - uB), constant first, from the eigenvalues of B."""
    return np.poly(np.linalg.eigvals(np.asarray(B, dtype=float)))


def _b1(T):
    n = T.plane.size
    return np.array([[0 if T.plane.incident(y, T.lam[x]) else 1 for y in range(n)] for x in range(n)])


def _chamber_matrix(T):
    tri = sorted(T.triples)
    idx = {t: i for i, t in enumerate(tri)}
    B = np.zeros((len(tri), len(tri)), dtype=int)
    for x, y, z in tri:
        for w, v in ((w, v) for (a, w, v) in tri if a == y):
            if (w, v) != (z, x):
                B[idx[(x, y, z)], idx[(y, w, v)]] = 1
    return B


def test_trivial_P0_by_hand(base, trivial_rep):
    r = compute_L(base, trivial_rep)
    assert r.P0 == Polynomial(P0_TRIVIAL)
    assert r.degrees["P0"] == 3


def test_trivial_P1_against_adjacency_oracle(presentation, base, trivial_rep):
    # type-1 block is B, type-2 block is its transpose in u^2
    c1 = _det_I_minus_uB(_b1(presentation))
    c2 = np.zeros(2 * len(c1) - 1)
    c2[::2] = c1
    expected = _int_poly(np.polynomial.polynomial.polymul(c1, c2))
    r = compute_L(base, trivial_rep)
    got = [int(x) for x in r.P1.coeffs]
    assert got == expected[: len(got)] and all(x == 0 for x in expected[len(got) :])


def test_trivial_P2_against_chamber_oracle(presentation, base, trivial_rep):
    expected = _int_poly(_det_I_minus_uB(_chamber_matrix(presentation)))
    r = compute_L(base, trivial_rep)
    got = [int(x) for x in r.P2.coeffs]
    assert got == expected[: len(got)] and all(x == 0 for x in expected[len(got) :])


def test_tally_matches_closed_walk_counts(presentation, base, trivial_rep):
    B = _b1(presentation)
    t = geodesic_oracle(base, trivial_rep, 5)
    Bn = np.identity(7, dtype=int)
    for n in range(1, 6):
        Bn = Bn @ B
        tr = int(np.trace(Bn))
        assert t.edge[n] == Polynomial.monomial(n, tr) + Polynomial.monomial(2 * n, tr)
    C = _chamber_matrix(presentation)
    assert t.chamber[3] == Polynomial.monomial(3, int(np.trace(C @ C @ C)))


def test_perm_rep_factors_over_characters(z3_base, perm_rep):
    r = compute_L(z3_base, perm_rep)
    G = z3_base.group
    chars = [Representation.trivial(G), cyclic_character(G, 3, 1), cyclic_character(G, 3, 2)]
    prod = character_product(z3_base, chars)
    assert poly_close(prod["P1"], r.P1.to_complex())
    assert poly_close(prod["P2"], r.P2.to_complex())
    assert r.P1.is_integral() and r.P2.is_integral()


def test_main_identity_cases(base, trivial_rep, z3_base, perm_rep, cover):
    for c, rho in ((base, trivial_rep), (z3_base, perm_rep), (cover, Representation.trivial(cover.group))):
        v = check_main_identity(compute_L(c, rho))
        assert v.passed, v.detail


def test_main_identity_float(z3_base):
    v = check_main_identity(compute_L(z3_base, cyclic_character(z3_base.group, 3, 1)))
    assert v.passed


def test_tampered_coefficient_is_localized(base, trivial_rep):
    r = compute_L(base, trivial_rep)
    c = list(r.P1.coeffs)
    c[5] += 1
    bad = dataclasses.replace(r, P1=Polynomial(c))
    v = check_main_identity(bad)
    assert not v.passed
    # the left side carries (1 - u^3), so the change shows at u^5 and u^8
    assert v.data["differing_coefficients"] == [5, 8]
    assert "u^[5, 8]" in v.detail


def test_negative_chi_exponent_cross_multiplies(base, trivial_rep):
    r = compute_L(base, trivial_rep)
    assert not check_main_identity(r, chi=-1).passed


def test_degrees(base, trivial_rep, z3_base, perm_rep):
    for c, rho in ((base, trivial_rep), (z3_base, perm_rep)):
        r = compute_L(c, rho)
        v = check_degrees(r)
        assert v.passed
        assert r.degrees["P0"] == 3 * rho.dim
        assert v.data["deg_P1_vs_3dN1"] and not v.data["deg_P1_vs_2dN1"]
        assert "2dN1" in v.detail


def test_trace_and_log_derivative(z3_base, perm_rep):
    t = geodesic_oracle(z3_base, perm_rep, 6)
    v = check_trace(z3_base, perm_rep, 6, t)
    assert v.passed and all(v.data["edge"].values()) and all(v.data["chamber"].values())
    assert check_log_derivative(compute_L(z3_base, perm_rep), t).passed


def test_log_derivative_detects_tampering(base, trivial_rep):
    r = compute_L(base, trivial_rep)
    t = geodesic_oracle(base, trivial_rep, 6)
    c = list(r.P1.coeffs)
    c[3] += 1
    assert not check_log_derivative(dataclasses.replace(r, P1=Polynomial(c)), t).passed


def test_functional_equation_exact(base, trivial_rep, z3_base, perm_rep):
    for c, rho in ((base, trivial_rep), (z3_base, perm_rep)):
        v = check_functional_equation(c, rho)
        assert v.passed, v.data


def test_functional_equation_dual_pair(z3_base):
    rho = cyclic_character(z3_base.group, 3, 1)
    v = check_functional_equation(z3_base, rho)
    assert v.passed, v.data
    assert "floating" in v.detail


def test_functional_equation_rejects_wrong_dual(z3_base, base, trivial_rep):
    rho = cyclic_character(z3_base.group, 3, 1)
    wrong = compute_L(z3_base, rho)  # rho itself, not its dual
    v = check_functional_equation(z3_base, rho, dual_report=wrong)
    assert not v.passed
    r = compute_L(base, trivial_rep)
    bad = dataclasses.replace(r, P0=Polynomial([1, -7, 14, -9]))
    assert not check_functional_equation(base, trivial_rep, dual_report=bad).data["reversal"]


def test_induction_action_cover(z3_base, cover):
    G = z3_base.group
    H1 = FiniteGroup.trivial(3)
    v = check_induction(z3_base, G, H1, Representation.trivial(H1), cover)
    assert v.passed, v.detail


def test_induction_coset_cover(z3_base, coset_cover):
    G = z3_base.group
    H1 = FiniteGroup.trivial(3)
    v = check_induction(z3_base, G, H1, Representation.trivial(H1), coset_cover)
    assert v.passed, v.detail


def test_induction_index_one_with_character(z3_base):
    from a2zeta.rep_voltage import CoverSpec, build_cover

    G = z3_base.group
    same = build_cover(CoverSpec(z3_base, subgroup=G))
    chi = cyclic_character(G, 3, 1)
    v = check_induction(z3_base, G, G, chi, same, chi)
    assert v.passed


def test_divisibility_quotient(z3_base, cover):
    b = compute_L(z3_base, Representation.trivial(z3_base.group))
    cv = compute_L(cover, Representation.trivial(cover.group))
    v = check_divisibility(b, cv)
    assert v.passed
    Q1 = v.data["quotient_P1"]
    assert Q1 * b.P1 == cv.P1 and Q1.degree == 42
    G = z3_base.group
    prod = character_product(z3_base, [cyclic_character(G, 3, 1), cyclic_character(G, 3, 2)])
    assert poly_close(prod["P1"], Q1.to_complex())


def test_gauge_invariance(z3_base, perm_rep):
    ref = run_all(z3_base, perm_rep, 4)
    for seed in (1, 7, 23):
        g = gauge_transform(z3_base, Gauge.random(z3_base, seed))
        r = run_all(g, perm_rep, 4)
        assert (r.P0, r.P1, r.P2) == (ref.P0, ref.P1, ref.P2)
        assert r.check_summary() == ref.check_summary()


def test_run_all_schema(base, trivial_rep):
    d = run_all(base, trivial_rep, 3).to_dict()
    for key in ("q", "d", "N", "chi", "P0", "P1", "P2", "checks"):
        assert key in d
    assert d["checks"]["main_identity"] is True
    assert d["checks"]["phi_determinants"] == [True, True, True]
    assert d["checks"]["trace"] == {"1": True, "2": True, "3": True}


def test_det_methods_agree_on_edge_matrix(z3_base, perm_rep):
    from a2zeta.algebra import PolyMatrix
    from a2zeta.operators import build_edge_op

    ME = build_edge_op(z3_base, perm_rep)
    A = PolyMatrix.identity(ME.shape[0], True) - ME
    assert det(A, "modular") == det(A, "interp")


@pytest.mark.parametrize("k", [1, 2])
def test_float_report_degrees(z3_base, k):
    r = compute_L(z3_base, cyclic_character(z3_base.group, 3, k))
    assert not r.exact
    assert r.degrees == {"P0": 3, "P1": 21, "P2": 21}


def test_perm_action_rep_equals_regular(z3_base):
    G = z3_base.group
    a = compute_L(z3_base, permutation_representation(G))
    from a2zeta.rep_voltage import regular_representation

    b = compute_L(z3_base, regular_representation(G))
    assert (a.P0, a.P1, a.P2) == (b.P0, b.P1, b.P2)
