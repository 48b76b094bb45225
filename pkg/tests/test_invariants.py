from fractions import Fraction

import pytest

from frobsig import (
    NotNested,
    NotSOP,
    PolyRing,
    ResourceLimit,
    RingPresentation,
    SearchConfig,
    chain_check,
    csig_estimate,
    deformation_check,
    extrapolate,
    fsig_hypersurface,
    hk_sequence,
    relative_hk,
    rsig_estimate,
    singularity_report,
)
from frobsig.invariants import SAMPLED, count_subspaces, gaussian_binomial

HALF = Fraction(1, 2)


def test_extrapolate_two_point_fit():
    # values exactly s + c/q are recovered
    qs = [2, 4, 8]
    vals = [Fraction(3) + Fraction(5, q) for q in qs]
    assert extrapolate(qs, vals) == 3
    assert extrapolate([2], [Fraction(7, 3)]) == Fraction(7, 3)


def test_hk_regular(regular2):
    rep = hk_sequence(regular2, regular2.maximal_ideal(), 3)
    assert [r.normalized for r in rep.rows] == [1, 1, 1]
    assert rep.extrapolated == 1


def test_hk_veronese2(V2):
    rep = hk_sequence(V2, V2.maximal_ideal(), 2)
    assert (rep.rows[0].length, rep.rows[0].normalized) == (6, Fraction(3, 2))
    sop = hk_sequence(V2, V2.ideal(["a", "c"]), 4)
    assert all(r.normalized == 2 for r in sop.rows)


def test_hk_resource_limit_keeps_rows():
    R = RingPresentation(2, "xyz", guard=5000)
    with pytest.raises(ResourceLimit) as info:
        hk_sequence(R, R.maximal_ideal(), 5)
    partial = info.value.partial
    assert [r.e for r in partial.rows] == [1, 2, 3, 4]
    assert partial.truncated


def test_relative_hk_examples(V2, cusp):
    zero = relative_hk(V2, ["a", "c"], V2.ideal(["a", "c"]), 3)
    assert zero.values == [0, 0, 0]
    rel = relative_hk(V2, ["a", "c"], V2.maximal_ideal(), 1)
    assert (rel.rows[0].length_sop, rel.rows[0].length_ideal) == (8, 6)
    assert rel.values == [HALF]
    c = relative_hk(cusp, ["x"], cusp.maximal_ideal(), 5)
    assert all(r.length_sop == r.length_ideal == 2 * r.q for r in c.rows)
    assert c.values == [0] * 5


def test_relative_hk_not_nested(V2):
    with pytest.raises(NotNested):
        relative_hk(V2, ["a", "c"], V2.ideal(["a", "b"]), 1)


def test_rsig_examples(V2, V3):
    r = rsig_estimate(V2, ["a", "c"], 3)
    assert [c.description for c in r.candidates] == ["b"]
    assert r.minimum == HALF
    r3 = rsig_estimate(V3, ["a", "d"], 3)
    assert sorted(c.description for c in r3.candidates) == ["b", "b + c", "c"]
    assert abs(r3.minimum - Fraction(2, 3)) <= Fraction(1, 10)


def test_csig_examples(V2, V3, regular2):
    c = csig_estimate(V2, ["a", "c"], 4)
    assert [x.description for x in c.candidates] == ["span(b)"]
    assert c.candidates[0].values[0] == HALF and c.minimum == HALF
    assert c.search_complete and c.bound_flag == "exhaustive"
    c3 = csig_estimate(V3, ["a", "d"], 3)
    full = c3.candidate("span(b, c)")
    assert full.values[0] == Fraction(12 - 8, 4 * 2)
    assert c3.minimizers == ["span(b, c)"]
    assert c3.minimum < rsig_estimate(V3, ["a", "d"], 3).minimum
    cr = csig_estimate(regular2, ["x", "y"], 3)
    assert len(cr.candidates) == 1 and cr.candidates[0].values == [1, 1, 1]


def test_csig_requires_sop(regular2):
    with pytest.raises(NotSOP):
        csig_estimate(regular2, ["x"], 2)


def test_fsig_examples():
    S = PolyRing(("x", "y"), 2)
    assert fsig_hypersurface(S, "x", 3).minimum == 1
    T = PolyRing(("a", "b", "c"), 2)
    f = fsig_hypersurface(T, "b^2 + a*c", 3)
    assert f.minimum == HALF
    cusp = fsig_hypersurface(S, "y^2 + x^3", 4)
    assert cusp.minimum == 0 and cusp.per_e_minimum == [0] * 4


def test_fsig_odd_prime():
    # A1 in characteristic 3: F-signature 1/2 as well
    T = PolyRing(("a", "b", "c"), 3)
    f = fsig_hypersurface(T, "b^2 - a*c", 2)
    assert abs(f.minimum - HALF) <= Fraction(1, 10)


def test_chain_examples(V2, V3, cusp):
    ch = chain_check(V2, ["a", "c"], 3)
    assert ch.passed and not ch.strict and ch.cm_type == 1
    assert ch.fsig is not None and ch.coincidence_ok
    ch3 = chain_check(V3, ["a", "d"], 3)
    assert ch3.passed and ch3.strict and ch3.cm_type == 2
    assert ch3.dsig_lower_bound == ch3.rsig.minimum / 2
    chc = chain_check(cusp, ["x"], 4)
    assert chc.passed and chc.csig.minimum == chc.rsig.minimum == 0


def test_singularity_report():
    assert singularity_report(1, 1, 2).flags == ["regular"]
    rep = singularity_report(HALF, 2, 2)
    assert rep.thresholds["weakly-F-regular"] == HALF
    assert "weakly-F-regular" in rep.flags
    assert singularity_report(0, 2, 2).flags == []
    assert singularity_report(Fraction(1, 3), 1, 2).warnings
    low = singularity_report(Fraction(1, 10), 3, 2)
    assert low.flags == []
    assert low.thresholds["Gorenstein-F-regular"] == Fraction(3, 4)


def test_deformation_examples(V2, regular2):
    rep = deformation_check(V2, "c", ["a", "c"], ["a"], 3)
    assert rep.passed
    assert rep.csig_ring.minimum == HALF and rep.csig_quotient.minimum == 0
    reg = deformation_check(regular2, "y", ["x", "y"], ["x"], 3)
    assert reg.passed and reg.csig_ring.minimum == reg.csig_quotient.minimum == 1
    with pytest.raises(NotSOP):
        deformation_check(V2, "b", ["a", "c"], ["a"], 2)


def test_deformation_rejects_zero_divisor():
    R = RingPresentation(2, "xy", ["x*y"])
    with pytest.raises(NotSOP):
        deformation_check(R, "x", ["x"], [], 2)


# -- properties ----------------------------------------------------------------

@pytest.mark.parametrize("fixture,sop,emax", [("V2", ["a", "c"], 3), ("V3", ["a", "d"], 3),
                                              ("cusp", ["x"], 4), ("regular2", ["x", "y"], 3)])
def test_per_e_dominance_and_nonnegativity(request, fixture, sop, emax):
    R = request.getfixturevalue(fixture)
    cs = csig_estimate(R, sop, emax)
    rs = rsig_estimate(R, sop, emax)
    lines = {c.description[len("span("):-1]: c for c in cs.candidates if c.dim == 1}
    for r in rs.candidates:
        assert lines[r.description].values == r.values
    for k in range(emax):
        assert cs.per_e_minimum[k] <= rs.per_e_minimum[k]
    for c in cs.candidates + rs.candidates:
        assert all(isinstance(v, Fraction) and v >= 0 for v in c.values)
    assert cs.minimum == min(c.extrapolated for c in cs.candidates)


def test_subspace_counts():
    assert gaussian_binomial(2, 1, 2) == 3
    assert count_subspaces(2, 2) == 4
    assert count_subspaces(3, 3) == 13 + 13 + 1


def test_sampled_search_flags_and_monotone_cap():
    # A[d] with A = k[a,b,c]/(a,b,c)^2, type 3, so 15 nonzero socle subspaces over F_2
    R = RingPresentation(2, "abcd", ["a^2", "b^2", "c^2", "a*b", "a*c", "b*c"])
    R_sop = ["d"]
    assert R.d == 1
    small = csig_estimate(R, R_sop, 1, SearchConfig(max_subspaces=5, seed=1))
    assert not small.search_complete and small.bound_flag == SAMPLED
    assert len(small.candidates) == 5
    bigger = csig_estimate(R, R_sop, 1, SearchConfig(max_subspaces=12, seed=1))
    assert bigger.minimum <= small.minimum
    assert {c.description for c in small.candidates} <= {c.description for c in bigger.candidates}


def test_deterministic_reports(V3):
    a = csig_estimate(V3, ["a", "d"], 2, SearchConfig(2, seed=7))
    b = csig_estimate(V3, ["a", "d"], 2, SearchConfig(2, seed=7))
    assert [(c.description, c.values) for c in a.candidates] == \
           [(c.description, c.values) for c in b.candidates]
