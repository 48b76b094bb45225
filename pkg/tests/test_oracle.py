from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from frobsig import PolyRing, RingPresentation, bracket_power, colength
from frobsig.invariants import fsig_hypersurface
from frobsig.oracle import dense_colength, dense_splitting_number

from conftest import monomials


@st.composite
def homogeneous(draw, ring, deg):
    monos = [m for m in product(range(deg + 1), repeat=ring.n) if sum(m) == deg]
    picks = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=3, unique=True))
    coeffs = draw(st.lists(st.integers(1, ring.p - 1), min_size=len(picks), max_size=len(picks)))
    return ring.from_terms(list(zip(coeffs, picks)))


@settings(max_examples=30, deadline=None)
@given(data=st.data(), p=st.sampled_from([2, 3]))
def test_oracle_matches_groebner_on_random_homogeneous(data, p):
    R = RingPresentation(p, "xyz")
    S = R.ring
    # pure powers keep the quotient finite; extra forms are random
    gens = [S.gen(i) ** data.draw(st.integers(1, 3)) for i in range(3)]
    for _ in range(data.draw(st.integers(0, 2))):
        gens.append(data.draw(homogeneous(S, data.draw(st.integers(1, 3)))))
    assert colength(R.ideal(gens)) == dense_colength(gens, S)


@settings(max_examples=20, deadline=None)
@given(m=monomials(2, 4))
def test_weighted_oracle_cusp(m):
    R = RingPresentation(2, "xy", ["y^2 - x^3"], weights=(2, 3))
    I = R.ideal([R.ring.gen(0) ** (m[0] + 1), R.ring.gen(1) ** (m[1] + 1)])
    lifted = list(R.relations) + list(I.generators)
    assert colength(I) == dense_colength(lifted, R.ring, weights=(2, 3))


def test_oracle_known_values():
    V2 = RingPresentation(2, "abc", ["b^2 - a*c"])
    for e, expect in ((1, 6), (2, 24)):
        J = bracket_power(V2.maximal_ideal(), e)
        lifted = list(V2.relations) + list(J.generators)
        assert dense_colength(lifted, V2.ring) == expect == colength(J)


def test_splitting_numbers_agree():
    T = PolyRing(("a", "b", "c"), 2)
    f = T("b^2 + a*c")
    rep = fsig_hypersurface(T, f, 2)
    assert [dense_splitting_number(f, q) for q in (2, 4)] == [2, 8]
    assert [r * q ** 2 for r, q in zip(rep.per_e_minimum, (2, 4))] == [2, 8]
    S = PolyRing(("x", "y"), 2)
    assert dense_splitting_number(S("y^2 + x^3"), 4) == 0
