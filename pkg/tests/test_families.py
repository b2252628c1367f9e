from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

import brute
from dpcodes.anticodes import anticode_m
from dpcodes.designs import gs_construct_2_3
from dpcodes.errors import NotFullWeight, NotPrimePower, ParamsInfeasible, ParamsOutOfRange, ShapeMismatch
from dpcodes.families import (
    f1_convert, f1_from_mds, f5_construct, f5_construct_w3, mds_cw_construct, mds_cw_union, moa_cw_construct,
    moa_from_oa, moa_reduce, one_factorization,
)
from dpcodes.ortharray import rs_oa
from dpcodes.space import Code, colex_subsets, support
from dpcodes.verifier import diameter_perfect_check, family_labels, support_regularity


def per_support_counts(code):
    counts = {}
    for x in code.words:
        key = frozenset(support(x))
        counts[key] = counts.get(key, 0) + 1
    return counts


# F1

def test_f1_ternary_mds_lift():
    fc = f1_from_mds(2, 4, 3)
    assert len(fc.code) == 9 and (fc.n, fc.w, fc.q, fc.d) == (4, 4, 4, 3)
    assert fc.certify().overall


def test_f1_round_trip_and_repetition():
    rep = Code([(0, 0, 0), (1, 1, 1)], q=2)
    lifted = f1_convert(rep, "lift")
    assert lifted.words == ((1, 1, 1), (2, 2, 2)) and lifted.q == 3 and lifted.weight == 3
    assert f1_convert(lifted, "project") == rep
    with pytest.raises(NotFullWeight):
        f1_convert(Code([(1, 0, 1)], q=3), "project")
    with pytest.raises(ValueError):
        f1_convert(rep, "sideways")


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.tuples(*[st.integers(0, 3)] * n), min_size=2, max_size=12, unique=True)))
def test_f1_is_an_isometry(words):
    c = Code(words, q=4)
    lifted = f1_convert(c, "lift")
    assert f1_convert(lifted, "project") == c
    lookup = {x: tuple(s + 1 for s in x) for x in words}
    for a, b in combinations(words, 2):
        assert brute.dist(a, b) == brute.dist(lookup[a], lookup[b])


# F4

def test_mds_cw_examples():
    fc = mds_cw_construct(5, 3, 4)
    assert len(fc.code) == 30 and fc.code.min_distance == 3
    assert fc.certify().overall
    assert mds_cw_construct(6, 3, 5).code == gs_construct_2_3(5).code
    with pytest.raises(ParamsInfeasible):
        mds_cw_construct(6, 3, 4)
    with pytest.raises(NotPrimePower):
        mds_cw_construct(4, 3, 6)


def test_union():
    u = mds_cw_union(mds_cw_construct(4, 3, 3), mds_cw_construct(4, 3, 3))
    assert (u.n, u.w, u.q, len(u.code)) == (4, 3, 5, 16)
    assert u.certify().overall
    direct = mds_cw_construct(4, 3, 5)
    assert len(direct.code) == len(u.code)
    assert support_regularity(direct.code, 4).overall and support_regularity(u.code, 4).overall
    assert brute.min_dist(list(u.code.words)) == 3
    with pytest.raises(ShapeMismatch):
        mds_cw_union(mds_cw_construct(4, 3, 3), mds_cw_construct(4, 2, 3))


def test_union_non_prime_power_alphabet():
    u = mds_cw_union(mds_cw_construct(4, 3, 4), mds_cw_construct(4, 3, 3))
    assert u.q == 6
    assert u.certify().overall


# F5

def test_f5_examples():
    a = f5_construct(4, 2)
    assert (a.code.q, len(a.code), a.code.min_distance) == (4, 6, 3)
    b = f5_construct(5, 4)
    assert (b.code.q, len(b.code), b.code.min_distance) == (5, 5, 5)
    with pytest.raises(ParamsOutOfRange):
        f5_construct(4, 4)


@pytest.mark.parametrize("n", range(2, 9))
def test_f5_one_codeword_per_support(n):
    for w in range(1, n):
        fc = f5_construct(n, w)
        if comb(n, w) > 70:
            continue
        counts = per_support_counts(fc.code)
        assert len(counts) == comb(n, w) and set(counts.values()) == {1}
        if len(fc.code) >= 2:
            assert fc.code.min_distance == w + 1
        if (fc.q - 1) ** w <= 10 ** 4:  # certify materializes the matching anticode
            assert fc.certify().overall


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12])
def test_one_factorization(m):
    f = one_factorization(m)
    assert f.verify()
    edges = [e for factor in f.factors for e in factor]
    assert sorted(edges) == sorted(combinations(range(1, m + 1), 2))
    if m % 2 == 0:
        assert len(f.factors) == m - 1
        assert all(len(factor) == m // 2 for factor in f.factors)
    else:
        assert len(f.factors) == m
        isolated = []
        for factor in f.factors:
            covered = {p for e in factor for p in e}
            assert len(factor) == (m - 1) // 2
            missing = set(range(1, m + 1)) - covered
            assert len(missing) == 1
            isolated.append(missing.pop())
        assert sorted(isolated) == list(range(1, m + 1))


@pytest.mark.parametrize("n,q,size", [(7, 6, 35), (6, 6, 20), (4, 4, 4), (5, 4, 10), (8, 8, 56)])
def test_f5_w3_examples(n, q, size):
    fc = f5_construct_w3(n)
    assert (fc.code.q, len(fc.code), fc.code.min_distance) == (q, size, 4)
    assert set(per_support_counts(fc.code).values()) == {1}


# F6

def test_moa_small():
    fc = moa_cw_construct(6, 2, 1, 5)
    assert (fc.n, fc.d, fc.w, fc.q, len(fc.code)) == (5, 4, 4, 6, 25)
    assert fc.family == "F4"
    assert fc.certify().overall
    assert fc.manifest["subset_order"] == "colex"


def test_moa_distance_statement():
    fc = moa_cw_construct(7, 3, 1, 7)
    assert (fc.n, fc.w, fc.q, len(fc.code)) == (6, 5, 8, 294)
    assert fc.code.min_distance == 4 == 7 - 3 - 1 + 1
    assert fc.manifest["distance_formula"] == "n-t-l+1"


def test_moa_infeasible():
    with pytest.raises(ParamsInfeasible):
        moa_cw_construct(6, 2, 2, 5)
    with pytest.raises(ParamsInfeasible):
        moa_cw_construct(9, 2, 1, 7)  # n > q+1 inside rs_oa
    with pytest.raises(ParamsOutOfRange):
        moa_cw_construct(6, 1, 1, 5)


def test_moa_support_projections_are_oas():
    fc = moa_cw_construct(7, 3, 1, 7)
    rep = support_regularity(fc.code, 49, oa_strength=2)
    assert rep.overall
    assert rep.get("support_oa_index_one").measured == 0


def test_moa_from_unsorted_oa():
    oa = rs_oa(2, 6, 5)
    shuffled = type(oa)(tuple(reversed(oa.rows)), oa.n, oa.q, oa.t)
    fc = moa_from_oa(shuffled, 1)
    assert fc.certify().overall


def test_puncture_and_shorten():
    base = moa_cw_construct(7, 3, 1, 7)
    p = moa_reduce(base, "puncture")
    assert (p.n, p.d, p.w, p.q) == (5, 4, 5, 8)
    assert p.certify().overall
    s = moa_reduce(base, "shorten")
    assert (s.n, s.d, s.w, s.q) == (5, 3, 4, 8)
    assert s.certify().overall
    with pytest.raises(ValueError):
        moa_reduce(base, "fold")


def test_shorten_needs_distance_two():
    one = f1_from_mds(3, 3, 2)  # d = 1
    assert one.d == 1
    with pytest.raises(ParamsOutOfRange):
        moa_reduce(one, "shorten")


# shared invariants

CONSTRUCTIONS = [
    lambda: mds_cw_construct(5, 3, 4),
    lambda: mds_cw_construct(4, 2, 3),
    lambda: mds_cw_union(mds_cw_construct(4, 3, 3), mds_cw_construct(4, 3, 3)),
    lambda: f5_construct(5, 2),
    lambda: f5_construct_w3(6),
    lambda: moa_cw_construct(6, 2, 1, 5),
    lambda: moa_cw_construct(6, 3, 1, 5),
    lambda: f1_from_mds(2, 4, 3),
]


@pytest.mark.parametrize("build", CONSTRUCTIONS)
def test_product_equals_space_size(build):
    fc = build()
    a = anticode_m(fc.n, fc.w, fc.d - 1, fc.q)
    rep = diameter_perfect_check(fc.code, a)
    assert rep.overall
    assert len(fc.code) * len(a) == comb(fc.n, fc.w) * (fc.q - 1) ** fc.w


@pytest.mark.parametrize("build", CONSTRUCTIONS)
def test_classifier_round_trip(build):
    fc = build()
    assert fc.family in family_labels(fc.n, fc.d, fc.w, fc.q, len(fc.code))


@pytest.mark.parametrize("build", CONSTRUCTIONS)
def test_manifest_entries(build):
    m = build().manifest_entries()
    assert m["product"] == m["space_size"]
    assert {"family", "n", "d", "w", "q", "size", "anticode"} <= set(m)


def test_colex_subset_order_in_moa():
    fc = moa_cw_construct(6, 2, 2, 11)  # C(5,2) = 10 blocks of 11 rows
    block = 11
    subsets = list(colex_subsets(5, 2))
    rows = rs_oa(2, 6, 11).rows
    for b, zeros in enumerate(subsets):
        for row in rows[b * block:(b + 1) * block]:
            x = [s + 1 for s in row[:-1]]
            for i in zeros:
                x[i] = 0
            assert tuple(x) in fc.code
