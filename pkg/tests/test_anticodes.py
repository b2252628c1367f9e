from math import comb

import pytest
from hypothesis import given, settings, strategies as st

import brute
from dpcodes.anticodes import (
    AnticodeParams, anticode_binary, anticode_hamming_lift, anticode_m, anticode_s, anticode_s_diameter,
    anticode_verify, ball_anticode, complement, parse_anticode_spec,
)
from dpcodes.errors import ParamsOutOfRange
from dpcodes.space import diameter


def test_binary_examples():
    a = anticode_binary(6, 3, 1)
    assert len(a) == comb(5, 2) == 10
    assert diameter(a.words) == 2 * 2  # Johnson diameter 2
    s = anticode_binary(6, 3, 3)
    assert len(s) == 1 and diameter(s.words) == 0
    c = anticode_binary(6, 3, 1, complement=True)
    assert len(c) == 10 and c.weight == 3 and diameter(c.words) == 4
    assert all(x[0] == 0 for x in c.words)
    with pytest.raises(ParamsOutOfRange):
        anticode_binary(6, 3, 4)


def test_s_examples():
    a = anticode_s(5, 3, 2, 3)
    assert len(a) == 6 and diameter(a.words) == 2
    single = anticode_s(5, 3, 3, 4)
    assert single.words == ((1, 1, 1, 0, 0),)
    assert anticode_s(5, 3, 2, 2).words == anticode_binary(5, 3, 2).words


def test_m_examples():
    a = anticode_m(5, 3, 2, 4)
    assert len(a) == 9 and diameter(a.words) == 2
    b = anticode_m(5, 3, 3, 4)
    assert len(b) == 27 and diameter(b.words) == 3
    c = anticode_m(4, 2, 1, 2)
    assert len(c) == 1 and diameter(c.words) == 0
    with pytest.raises(ParamsOutOfRange):
        anticode_m(4, 2, 3, 3)


def test_verify_examples():
    assert anticode_verify(anticode_s(5, 3, 2, 3), 2, 6).overall
    rep = anticode_verify(anticode_m(5, 3, 2, 4), 3, 9)
    assert not rep.overall
    assert rep.get("anticode_diameter").measured == 2
    assert anticode_verify(ball_anticode(4, 3, 1, 3), 2, 4).overall


@pytest.mark.parametrize("n", range(1, 8))
def test_s_diameter_and_size_by_scan(n):
    for w in range(0, n + 1):
        for t in range(0, w + 1):
            for q in (2, 3, 4):
                if comb(n - t, w - t) * (q - 1) ** (w - t) > 400:
                    continue
                a = anticode_s(n, w, t, q)
                assert len(a) == comb(n - t, w - t) * (q - 1) ** (w - t)
                measured = brute.diam(list(a.words))
                assert measured == anticode_s_diameter(n, w, t, q), (n, w, t, q)
                if n - t >= 2 * (w - t):
                    assert measured == 2 * (w - t)


def test_s_diameter_condition_direction():
    # n >= 2w - t is what gives diameter 2(w-t); n < 2w - t falls short
    assert brute.diam(list(anticode_s(5, 3, 1, 3).words)) == 4   # n = 2w - t
    assert brute.diam(list(anticode_s(4, 3, 1, 3).words)) < 4    # n < 2w - t


def test_m_diameter_by_scan():
    for w in range(1, 6):
        for delta in range(1, w + 1):
            for q in range(2, 6):
                if (q - 1) ** delta > 300:
                    continue
                a = anticode_m(w + 1, w, delta, q)
                d = brute.diam(list(a.words))
                assert d == (delta if (q - 1) ** delta >= 2 else 0)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10).flatmap(lambda n: st.tuples(
    st.tuples(*[st.integers(0, 1)] * n), st.tuples(*[st.integers(0, 1)] * n))))
def test_complement_is_an_isometry(pair):
    x, y = pair
    assert brute.dist(x, y) == brute.dist(complement(x), complement(y))


def test_hamming_lift():
    a = anticode_hamming_lift([(0, 0), (0, 1)], 3)
    assert a.words == ((1, 1), (1, 2)) and a.weight == 2


def test_params_and_spec_parsing():
    p = parse_anticode_spec("s:5,3,2", 4)
    assert p == AnticodeParams("S_family", 5, 3, 4, t=2)
    assert p.expected_size() == len(p.build()) == comb(3, 1) * 3
    assert p.label() == "s:5,3,2"
    assert parse_anticode_spec("m:5,3,2", 4).build() == anticode_m(5, 3, 2, 4)
    assert parse_anticode_spec("ball:4,3,1", 3).expected_size() == 4
    assert parse_anticode_spec("abar:6,3,1", 2).build().weight == 3
    for bad in ("x:1,2,3", "s:1,2", "m:a,b,c"):
        with pytest.raises(ValueError):
            parse_anticode_spec(bad, 3)
