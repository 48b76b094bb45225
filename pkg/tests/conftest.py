import pytest
from hypothesis import strategies as st

from frobsig import MonomialOrder, PolyRing, RingPresentation


@pytest.fixture
def V2():
    return RingPresentation(2, "abc", ["b^2 - a*c"], name="veronese2")


@pytest.fixture
def V3():
    return RingPresentation(2, "abcd", ["b^2 - a*c", "c^2 - b*d", "b*c - a*d"],
                            name="veronese3")


@pytest.fixture
def cusp():
    return RingPresentation(2, "xy", ["y^2 - x^3"], weights=(2, 3), name="cusp")


@pytest.fixture
def regular2():
    return RingPresentation(2, "xy", name="regular2")


def monomials(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


@st.composite
def polynomials(draw, ring, max_terms=4, max_exp=3):
    terms = draw(st.lists(
        st.tuples(st.integers(0, ring.p - 1), monomials(ring.n, max_exp)),
        max_size=max_terms))
    return ring.from_terms(terms)


RINGS = [
    PolyRing(("x", "y", "z"), 2),
    PolyRing(("x", "y", "z"), 3),
    PolyRing(("x", "y"), 5, MonomialOrder.lex()),
    PolyRing(("x", "y", "z"), 7, MonomialOrder.elimination(1)),
]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
