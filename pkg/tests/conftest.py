import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kchalex.algebra import RING_VARS, MultiPoly, UniPoly
from kchalex.dga import builtin_dga

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CHORDS = ("a12", "a21")
GENS = RING_VARS + CHORDS

small_fracs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def unipolys(draw, max_degree=5, var="mu"):
    cs = draw(st.lists(small_fracs, max_size=max_degree + 1))
    return UniPoly(cs, var)


@st.composite
def multipolys(draw, max_terms=5, gens=GENS):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exps = tuple(draw(st.integers(-2, 3)) if g in RING_VARS else draw(st.integers(0, 3))
                     for g in gens)
        terms[exps] = draw(small_fracs.filter(lambda c: c != 0))
    return MultiPoly(gens, terms)


@pytest.fixture(scope="session")
def trefoil():
    return builtin_dga("rh_trefoil")


@pytest.fixture(scope="session")
def unknot():
    return builtin_dga("unknot")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for key in sorted(lines):
            terminalreporter.write_line(lines[key])
