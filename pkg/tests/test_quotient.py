import itertools
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobsig import (
    INFINITE,
    NotSOP,
    NotZeroDimensional,
    RingPresentation,
    bracket_power,
    cm_type,
    colength,
    colon_element,
    colon_ideal,
    origin_support_check,
    socle_basis,
    validate_sop,
)
from frobsig.groebner import normal_form
from frobsig.quotient import divide_exact, intersect

from conftest import polynomials


def test_bracket_power_examples(regular2, V2):
    m = regular2.maximal_ideal()
    assert bracket_power(m, 1).generators == (regular2("x^2"), regular2("y^2"))
    zero = regular2.ideal([regular2.ring.zero()])
    assert all(g.is_zero() for g in bracket_power(zero, 3).generators)
    I = V2.ideal(["a + b", "c^2"])
    assert bracket_power(bracket_power(I, 1), 1).same_as(bracket_power(I, 2))


def test_colon_element_examples(regular2, V2):
    assert colon_element(regular2.ideal(["x^2"]), "x").same_as(regular2.ideal(["x"]))
    I = V2.ideal(["a", "c"])
    assert colon_element(I, 1).same_as(I)
    assert colon_element(I, "b").same_as(V2.maximal_ideal())


def test_colon_ideal_examples(V2, V3):
    I = V2.ideal(["a", "c"])
    assert colon_ideal(I, V2.ideal([1])).same_as(I)
    assert colon_ideal(I, V2.maximal_ideal()).same_as(V2.maximal_ideal())
    J = V3.ideal(["a", "d"])
    assert colon_ideal(J, V3.maximal_ideal()).same_as(V3.maximal_ideal())


def test_colon_of_non_maximal(regular2):
    # (x^2, xy) : (x, y) = (x)
    I = regular2.ideal(["x^2", "x*y"])
    C = colon_ideal(I, regular2.maximal_ideal())
    assert C.same_as(regular2.ideal(["x"]))


def test_socle_examples(regular2, V2, V3):
    assert socle_basis(regular2.maximal_ideal()) == [regular2.ring.one()]
    assert socle_basis(V2.ideal(["a", "c"])) == [V2("b")]
    assert socle_basis(V3.ideal(["a", "d"])) == [V3("b"), V3("c")]
    with pytest.raises(NotZeroDimensional):
        socle_basis(regular2.ideal(["x"]))


def test_colength_examples(regular2, V2, V3):
    assert colength(V2.ideal(["a", "c"])) == 2
    assert colength(V3.ideal(["a", "d"])) == 3
    assert colength(regular2.ideal(["x"])) == INFINITE


def test_validate_sop_examples(regular2, V2, cusp):
    rep = validate_sop(V2, ["a", "c"])
    assert rep.accepted and rep.colength == 2
    assert rep.probe_ok and rep.probe_lengths == (8, 8)
    with pytest.raises(NotSOP):
        validate_sop(regular2, ["x"])
    with pytest.raises(NotSOP):
        validate_sop(regular2, ["x", "x^2"])
    rep = validate_sop(cusp, ["x"])
    assert rep.accepted and rep.colength == 2


def test_validate_sop_probe_warns_on_non_cm():
    # k[x,y,z]/(xz, yz) is a plane union a line, not Cohen-Macaulay
    R = RingPresentation(2, "xyz", ["x*z", "y*z"], cm_asserted=True)
    assert R.d == 2
    with pytest.warns(UserWarning, match="Cohen-Macaulay probe"):
        rep = validate_sop(R, ["x + z", "y"])
    assert rep.probe_ok is False


def test_cm_type_examples(regular2, V2, V3):
    assert cm_type(V2, ["a", "c"]) == 1
    assert cm_type(V3, ["a", "d"]) == 2
    assert cm_type(regular2, ["x", "y"]) == 1
    assert cm_type(regular2, ["x^2", "y^3"]) == 1


def test_origin_support_check(regular2, cusp):
    assert origin_support_check(cusp.maximal_ideal())
    assert origin_support_check(cusp.maximal_ideal(), (2, 3)).ok
    with pytest.warns(UserWarning):
        check = origin_support_check(regular2.ideal(["x*(x - 1)", "y"]))
    assert not check and check.diagnostics
    with pytest.warns(UserWarning):
        assert not origin_support_check(cusp.ideal(["x"]), (1, 1))


def test_divide_exact(V2):
    f = V2("a + b")
    g = V2("a^2 + c") * f
    assert divide_exact(g, f) == V2("a^2 + c")


def test_intersection(regular2):
    I = intersect(regular2.ideal(["x"]), regular2.ideal(["y"]))
    assert I.same_as(regular2.ideal(["x*y"]))


# -- properties ---------------------------------------------------------------

@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_representative_independence(data):
    R = RingPresentation(3, "abc", ["b^2 - a*c"])
    shift = data.draw(polynomials(R.ring, max_terms=2, max_exp=2)) * R.relations[0]
    x = ["a", "c"]
    base = R.ideal(x)
    moved = R.ideal([R("a") + shift, R("c")])
    assert colength(base) == colength(moved)
    assert colon_ideal(moved, R.maximal_ideal()).same_as(colon_ideal(base, R.maximal_ideal()))
    s1 = socle_basis(base)
    s2 = socle_basis(moved)
    G = base.groebner()
    assert [normal_form(s, G) for s in s1] == [normal_form(s, G) for s in s2]


@pytest.mark.parametrize("fixture,sop", [("V2", ["a", "c"]), ("V3", ["a", "d"]),
                                          ("cusp", ["x"]), ("regular2", ["x^2", "y"])])
def test_socle_correctness(request, fixture, sop):
    R = request.getfixturevalue(fixture)
    X = R.ideal(sop)
    basis = socle_basis(X)
    for s in basis:
        assert not X.contains(s)
        for v in R.gens():
            assert X.contains(v * s)
    # linearly independent modulo X: every nonzero combination stays outside X
    for coeffs in itertools.product(range(R.p), repeat=len(basis)):
        if any(coeffs):
            comb = R.ring.zero()
            for c, s in zip(coeffs, basis):
                comb = comb + s.scale(c)
            assert not X.contains(comb)


@pytest.mark.parametrize("p,n,e", [(2, 2, 3), (3, 2, 2), (2, 3, 2), (5, 1, 2)])
def test_regular_colength_of_frobenius_powers(p, n, e):
    R = RingPresentation(p, "xyz"[:n])
    assert colength(bracket_power(R.maximal_ideal(), e)) == p ** (e * n)


@pytest.mark.parametrize("fixture,sop,emax", [("V2", ["a", "c"], 4), ("V3", ["a", "d"], 3),
                                              ("cusp", ["x"], 5), ("regular2", ["x", "y"], 4)])
def test_cm_parameter_law(request, fixture, sop, emax):
    R = request.getfixturevalue(fixture)
    X = R.ideal(sop)
    base = colength(X)
    for e in range(1, emax + 1):
        q = R.p ** e
        assert colength(bracket_power(X, e)) == q ** R.d * base


def test_ring_presentation_basics(V2, V3, cusp):
    assert (V2.d, V3.d, cusp.d) == (2, 2, 1)
    assert V2.is_hypersurface() and not V3.is_hypersurface()
    Q = V2.quotient_by("c")
    assert Q.d == 1 and Q.is_hypersurface() is False
    with pytest.raises(ValueError):
        RingPresentation(2, "xy", ["x + 1", "x"])
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        validate_sop(V2, ["a", "c"])
