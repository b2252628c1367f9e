from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from dpcodes.bounds import candidate_families, feasibility_report, moa_bounds, q0_bounds
from dpcodes.designs import gs_construct_2_3
from dpcodes.errors import ParamsOutOfRange
from dpcodes.families import f5_construct, f5_construct_w3, mds_cw_construct, moa_cw_construct, moa_reduce
from dpcodes.ortharray import oa_feasible


def verdicts(r):
    return {v.bound: v for v in r.verdicts}


def test_moa_length_example():
    v = verdicts(moa_bounds(6, 4, 5, 8))["moa_length"]
    assert not v.violated and v.inequality == "n=6 <= q+w-2=11"


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_weight_bound_when_d_is_w_minus_1(q):
    w = q + 1
    r = moa_bounds(w + 1, w - 1, w, q)
    assert verdicts(r)["moa_weight_d_eq_w_minus_1"].violated
    ok = moa_bounds(q + 1, q - 1, q, q)
    assert not verdicts(ok)["moa_weight_d_eq_w_minus_1"].violated


@pytest.mark.parametrize("q", [4, 6, 8])
def test_distance_bound_even_q(q):
    d = q + 1
    w = d + 2
    r = moa_bounds(w + 1, d, w, q)
    assert verdicts(r)["moa_distance_even_q"].violated


def test_odd_q_and_small_alphabet():
    r = verdicts(moa_bounds(8, 3, 6, 3))  # delta 3, q-1 = 2 <= delta+1
    assert r["moa_weight_odd_q"].violated  # 6 <= 3+3-1 fails
    assert r["moa_weight_small_alphabet"].inequality == "w=6 <= delta+2=5"
    assert r["moa_weight_small_alphabet"].violated


def test_moa_needs_d_below_w():
    r = moa_bounds(5, 3, 3, 4)
    assert r.verdicts == [] and r.notes
    with pytest.raises(ParamsOutOfRange):
        moa_bounds(4, 5, 3, 4)


@pytest.mark.parametrize("w,n,lower,upper,exact", [
    (2, 7, 7, 7, 7),
    (3, 7, 6, 16, 6),
    (3, 8, 7, 22, 8),
    (4, 10, 8, 85, None),
    (4, 5, 5, 5, 5),
])
def test_q0_examples(w, n, lower, upper, exact):
    b = q0_bounds(w, n)
    assert (b.lower, b.upper, b.exact) == (lower, upper, exact)


@pytest.mark.parametrize("n", range(2, 21))
def test_q0_exact_between_bounds(n):
    for w in range(1, n):
        b = q0_bounds(w, n)
        assert b.lower <= b.upper
        if b.exact is not None:
            assert b.lower <= b.exact <= b.upper


@pytest.mark.parametrize("n", range(3, 11))
def test_q0_exact_matches_construction(n):
    assert len(f5_construct(n, 2).code) == comb(n, 2) and f5_construct(n, 2).q == q0_bounds(2, n).exact
    if n >= 4:
        assert f5_construct_w3(n).q == q0_bounds(3, n).exact


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 14), st.integers(1, 12), st.integers(2, 12), st.integers(3, 12))
def test_moa_verdicts_agree_with_oa_screen(n, d, w, q):
    """Whenever a weight inequality fails, the OA of nonzero projections on a
    support cannot exist either."""
    if not (d < w <= n):
        return
    r = moa_bounds(n, d, w, q)
    weight_bounds = {"moa_weight_d_eq_w_minus_1", "moa_weight_even_q", "moa_weight_odd_q",
                     "moa_weight_small_alphabet"}
    if any(v.violated and v.bound in weight_bounds for v in r.verdicts):
        assert oa_feasible(w - d + 1, w, q - 1).infeasible, (n, d, w, q)


def test_feasibility_examples():
    r = feasibility_report(5, 3, 3, 4)
    assert {"F3", "F4"} <= set(r.feasible_families)
    assert not r.violations()
    binary = feasibility_report(8, 4, 3, 2)
    assert set(binary.candidates) <= {"S", "S-complement"}
    assert any("q = 2" in note for note in binary.notes)
    known = feasibility_report(16, 5, 15, 3)
    assert known.feasible_families == ["F2"]
    assert any("nonexistent" in f and "16" in f for f in known.facts)


def test_gs_integrality_is_reported():
    r = feasibility_report(5, 3, 3, 8)
    bad = r.violations_for("F3")
    assert bad and "must be an integer" in bad[0].inequality
    assert not r.violations_for("F4")
    assert "F4" in r.feasible_families and "F3" not in r.feasible_families


def test_render_formats():
    r = feasibility_report(6, 4, 5, 8)
    text = r.render()
    assert text.startswith("BOUNDS n=6 d=4 w=5 q=8")
    kv = dict(line.split("=", 1) for line in r.render_kv().splitlines())
    assert kv["n"] == "6" and kv["violations"] == "0"
    assert "F6" in kv["feasible"]


def test_candidate_families():
    assert candidate_families(5, 3, 3, 4) == ["F3", "F4"]
    assert candidate_families(4, 3, 2, 4) == ["F3", "F5"]
    assert candidate_families(4, 3, 4, 4) == ["F1", "F3", "F6"]


CONSTRUCTED = [
    lambda: gs_construct_2_3(4),
    lambda: mds_cw_construct(5, 3, 4),
    lambda: mds_cw_construct(8, 4, 7),
    lambda: f5_construct(6, 2),
    lambda: f5_construct_w3(7),
    lambda: moa_cw_construct(7, 3, 1, 7),
    lambda: moa_reduce(moa_cw_construct(7, 3, 1, 7), "shorten"),
]


@pytest.mark.parametrize("build", CONSTRUCTED)
def test_constructions_have_no_own_family_violations(build):
    fc = build()
    if hasattr(fc, "certify"):
        n, d, w, q, fam = fc.n, fc.d, fc.w, fc.q, fc.family
    else:  # a generalized Steiner system
        n, w, q, fam = fc.n, fc.w, fc.q, "F3"
        d = 2 * (fc.w - fc.t) + 1
    r = feasibility_report(n, d, w, q)
    assert fam in r.candidates
    assert r.violations_for(fam) == []
    assert fam in r.feasible_families
