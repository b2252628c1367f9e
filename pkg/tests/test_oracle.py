
import pytest
from hypothesis import given, settings, strategies as st

import brute
from dpcodes.anticodes import anticode_m, anticode_s
from dpcodes.designs import gs_construct_2_3, gs_size
from dpcodes.errors import ParamsOutOfRange
from dpcodes.families import f5_construct, mds_cw_construct, moa_cw_construct
from dpcodes.oracle import (
    SearchBudget, max_anticode_search, max_code_search, perfect_code_prescreen, perfect_code_search,
)
from dpcodes.space import space_size
from dpcodes.verifier import perfect_check


def test_max_code_examples():
    r = max_code_search(4, 3, 3, 3)
    assert (r.status, r.value, r.proof_of_optimality) == ("exact", 8, True)
    assert len(r.witness) == 8 and r.witness.min_distance >= 3


def test_max_code_length_six():
    r = max_code_search(6, 4, 5, 3)
    assert r.exact and r.value == 12
    assert brute.min_dist(list(r.witness.words)) >= 4


def test_max_anticode_examples():
    r = max_anticode_search(4, 2, 3, 3)
    assert r.exact and r.value == 4 == len(anticode_m(4, 3, 2, 3))
    assert max_anticode_search(4, 0, 3, 3).value == 1


def test_s_anticode_is_optimal_at_5_3_2():
    # the search picks between |A^s(5,3,2)| = 6 and |A^m(5,3,2)| = 4
    r = max_anticode_search(5, 2, 3, 3)
    assert r.exact and r.value == 6
    assert len(anticode_s(5, 3, 2, 3)) == 6 and len(anticode_m(5, 3, 2, 3)) == 4
    assert brute.diam(list(r.witness.words)) <= 2


def test_trivial_cases():
    for n, w, q in [(4, 2, 3), (5, 3, 3), (3, 3, 4)]:
        full = space_size(n, w, q)
        assert max_code_search(n, 1, w, q).value == full
        assert max_anticode_search(n, min(2 * w, n), w, q).value == full
    r = perfect_code_search(3, 3, 3, 0)
    assert r.exact and r.value == 8 == space_size(3, 3, 3)


def test_bad_parameters():
    with pytest.raises(ParamsOutOfRange):
        max_anticode_search(4, -1, 2, 3)
    with pytest.raises(ParamsOutOfRange):
        perfect_code_search(4, 3, 3, -1)


SMALL = [(3, 2, 3), (4, 2, 3), (3, 2, 4), (5, 2, 2), (4, 3, 3), (3, 1, 5)]


@pytest.mark.parametrize("n,w,q", SMALL)
def test_code_search_matches_naive_clique(n, w, q):
    verts = brute.space(n, w, q)
    for d in range(2, min(2 * w, n) + 1):
        naive = brute.max_clique_size(verts, lambda a, b: brute.dist(a, b) >= d)
        r = max_code_search(n, d, w, q)
        assert r.exact and r.value == naive, (n, d, w, q)


@pytest.mark.parametrize("n,w,q", SMALL)
def test_anticode_search_matches_naive_clique(n, w, q):
    verts = brute.space(n, w, q)
    for D in range(0, min(2 * w, n)):
        naive = brute.max_clique_size(verts, lambda a, b: brute.dist(a, b) <= D)
        r = max_anticode_search(n, D, w, q)
        assert r.exact and r.value == naive, (n, D, w, q)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 4))
def test_code_anticode_bound_on_search_values(nwq, k):
    n, w, q = nwq
    d = 2 + k % max(1, min(2 * w, n) - 1)
    code = max_code_search(n, d, w, q).value
    anti = max_anticode_search(n, d - 1, w, q).value
    assert code * anti <= space_size(n, w, q)


def test_budget_gives_inconclusive():
    r = max_code_search(6, 4, 5, 3, SearchBudget(max_nodes=5))
    assert r.status == "inconclusive" and not r.proof_of_optimality
    assert 1 <= r.value <= 12
    assert "node limit" in r.reason
    if r.value >= 2:
        assert r.witness.min_distance >= 4
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)


def test_deterministic_witness():
    a = max_code_search(4, 3, 3, 3)
    b = max_code_search(4, 3, 3, 3)
    assert a.witness == b.witness and a.nodes == b.nodes


@pytest.mark.parametrize("fc_build,params", [
    (lambda: mds_cw_construct(4, 3, 3), (4, 3, 3, 3)),
    (lambda: f5_construct(4, 2), (4, 3, 2, 4)),
    (lambda: gs_construct_2_3(3), (4, 3, 3, 3)),
    (lambda: moa_cw_construct(6, 2, 1, 5), (5, 4, 4, 6)),
])
def test_oracle_matches_diameter_perfect_constructions(fc_build, params):
    built = fc_build()
    r = max_code_search(*params)
    assert r.exact
    assert r.value == len(built.code)


def test_perfect_code_examples():
    r = perfect_code_search(4, 3, 3, 1)
    assert r.exact and r.value == 8
    assert perfect_check(r.witness, 1).overall
    assert brute.min_dist(list(r.witness.words)) >= 3
    none = perfect_code_search(5, 4, 3, 1)
    assert none.exact and none.value == 0 and none.witness is None
    assert none.reason.startswith("nonexistence")


def test_prescreen():
    # each support class of J_3(5,4) has 16 words; the in-space ball has 1 + 4 = 5
    assert "16" in perfect_code_prescreen(5, 4, 3, 1)
    assert perfect_code_prescreen(4, 3, 3, 1) is None


def test_gs_3_4_5_3_probe():
    """A GS(3,4,5,3) would be a (5,3,4)_3 code with 20 words."""
    needed = gs_size(3, 4, 5, 3)
    assert needed == 20
    r = max_code_search(5, 3, 4, 3)
    assert r.exact and r.value == 10 < needed


def test_manifest():
    m = max_code_search(4, 3, 3, 3).manifest()
    assert m["status"] == "exact" and m["value"] == 8 and m["proof_of_optimality"] == "true"
