import random

import pytest
from hypothesis import given, strategies as st

from detloci.algebra.ring import PolyRing, SparsePoly, format_poly, parse_poly, random_form

R = PolyRing(4)


def exps_st(nvars=4, top=4):
    return st.lists(st.integers(0, top), min_size=nvars, max_size=nvars).map(tuple)


def _degrevlex_greater(e, f):
    if sum(e) != sum(f):
        return sum(e) > sum(f)
    for x, y in zip(reversed(e), reversed(f)):
        if x != y:
            return x < y
    return False


@given(exps_st(), exps_st())
def test_key_order_is_degrevlex(e, f):
    ke, kf = R.mono(e), R.mono(f)
    assert (ke > kf) == _degrevlex_greater(e, f)
    assert R.exps(ke) == e


@given(exps_st(), exps_st())
def test_key_arithmetic(e, f):
    ke, kf = R.mono(e), R.mono(f)
    assert ke + kf == R.mono([x + y for x, y in zip(e, f)])
    assert R.divides(ke, kf) == all(x <= y for x, y in zip(e, f))
    assert R.exps(R.lcm(ke, kf)) == tuple(max(x, y) for x, y in zip(e, f))
    assert R.deg(ke) == sum(e)


def test_variable_order():
    x = R.gens()
    assert x[0].lead_key > x[1].lead_key > x[2].lead_key > x[3].lead_key
    f = x[1] ** 2 + x[0] * x[2]
    # degrevlex: x1^2 > x0*x2 since the last variable decides
    assert f.lead_exps() == (0, 2, 0, 0)


def test_arithmetic():
    x = R.gens()
    f = (x[0] + x[1]) * (x[0] - x[1])
    assert f == x[0] ** 2 - x[1] ** 2
    assert (f - f).is_zero()
    assert (3 * x[0] - x[0] * 3).is_zero()
    assert (x[0] + 1).degree == 1
    assert not (x[0] + 1).is_homogeneous()
    assert (x[0] * R.p).is_zero()


def test_terms_sorted_and_nonzero():
    f = R.parse("x3 + 2*x0^2 - x1*x2 + 0*x1^5")
    keys = [k for k, _ in f.terms.items()]
    assert keys == sorted(keys, reverse=True)
    assert all(c % R.p for _, c in f.terms.items())


def test_format_parse_round_trip():
    f = parse_poly(R, "3*x0^2*x1 - x2^3 + 5*x3*x0*x1")
    text = format_poly(f)
    assert parse_poly(R, text) == f
    assert format_poly(R.zero()) == "0"
    assert format_poly(R.const(-1)) == "-1"


@given(st.integers(0, 3), st.integers(0, 1000))
def test_random_form_round_trip(d, seed):
    f = random_form(R, d, random.Random(seed))
    assert f.is_zero() or (f.is_homogeneous() and f.degree == d)
    assert parse_poly(R, format_poly(f)) == f


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_poly(R, "x9")
    with pytest.raises(ValueError):
        parse_poly(R, "y0 + 1")


def test_monic_and_inverse():
    f = R.parse("5*x0 + x1")
    assert f.monic().lead_coeff == 1
    assert (5 * R.inv(5)) % R.p == 1


def test_random_form_deterministic():
    f = random_form(R, 2, random.Random(7))
    g = random_form(R, 2, random.Random(7))
    assert f == g
    assert random_form(R, -1, random.Random(0)).is_zero()
    assert random_form(R, 0, random.Random(0)).lead_coeff != 0
