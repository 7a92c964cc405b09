import sys

import pytest

from a2zeta import perm as P
from a2zeta.builders import complex_from_presentation, find_presentation
from a2zeta.groups import FiniteGroup
from a2zeta.rep_voltage import CoverSpec, Representation, build_cover, permutation_representation

Z3 = P.cycle(3, 0, 1, 2)


@pytest.fixture(scope="session")
def presentation():
    return find_presentation(2)


@pytest.fixture(scope="session")
def base(presentation):
    return complex_from_presentation(presentation)


@pytest.fixture(scope="session")
def z3_base(presentation):
    return complex_from_presentation(presentation, {x: Z3 for x in range(7)})


@pytest.fixture(scope="session")
def trivial_rep(base):
    return Representation.trivial(base.group)


@pytest.fixture(scope="session")
def perm_rep(z3_base):
    return permutation_representation(z3_base.group)


@pytest.fixture(scope="session")
def cover(z3_base):
    return build_cover(CoverSpec(z3_base, action=z3_base.group.generators))


@pytest.fixture(scope="session")
def coset_cover(z3_base):
    return build_cover(CoverSpec(z3_base, subgroup=FiniteGroup.trivial(3)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
