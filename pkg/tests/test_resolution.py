import math
import warnings
from collections import Counter
from itertools import combinations

import pytest
from hypothesis import assume, given, strategies as st

from detloci.combinatorics import binom0
from detloci.degrees import validate
from detloci.errors import EmptyFamily
from detloci.resolution import (
    BettiTable,
    HilbertPoly,
    en_betti_table,
    en_rank,
    en_rank_identity_check,
    hilbert_function,
    hilbert_polynomial,
    min_gen_degree_last_quotient,
)

from conftest import nonempty_specs

small_specs = nonempty_specs(t_max=3, c_max=4, n_max=6)


def test_twisted_cubic_table(twisted_cubic):
    T = en_betti_table(twisted_cubic)
    assert T.terms[1] == (2, 2, 2)
    assert T.terms[2] == (3, 3)
    assert T.ranks() == (1, 3, 2)


def test_points_ranks(points_spec):
    assert en_betti_table(points_spec).ranks() == (1, 6, 8, 3)


def test_text_grid(twisted_cubic):
    text = en_betti_table(twisted_cubic).to_text()
    assert text.splitlines() == ["       0 1 2", "total: 1 3 2", "    0: 1 . .", "    1: . 3 2"]


@given(small_specs)
def test_ranks_match_formula(s):
    T = en_betti_table(s)
    for p in range(1, s.c + 1):
        assert len(T.terms[p]) == math.comb(s.t + s.c - 1, s.t + p - 1) * math.comb(s.t + p - 2, p - 1)
        assert len(T.terms[p]) == en_rank(s.t, s.c, p)
    assert sum((-1) ** p * r for p, r in enumerate(T.ranks())) == 0


@given(small_specs)
def test_first_terms_are_minor_degrees(s):
    expected = sorted(sum(S) - sum(s.b) for S in combinations(s.a, s.t))
    assert list(en_betti_table(s).terms[1]) == expected


@given(small_specs)
def test_json_round_trip(s):
    T = en_betti_table(s)
    assert BettiTable.from_json(T.to_json()) == T


def test_empty_family():
    with pytest.raises(EmptyFamily):
        en_betti_table(validate(3, 2, 2, [0, 0], [0, 0, 0]))


@pytest.mark.parametrize("t, c", [(t, c) for t in range(2, 7) for c in range(2, 9)])
def test_rank_identity(t, c):
    assert en_rank_identity_check(t, c)
    assert sum((-1) ** (p - 1) * en_rank(t, c, p) for p in range(1, c + 1)) == 1


def test_rank_identity_small_by_hand():
    assert 3 - 2 == 1
    assert 6 - 8 + 3 == 1


def test_twisted_cubic_hilbert(twisted_cubic):
    assert [hilbert_function(twisted_cubic, v) for v in range(4)] == [1, 4, 7, 10]
    assert hilbert_function(twisted_cubic, -20) == 0
    H = hilbert_polynomial(twisted_cubic)
    assert str(H) == "3v+1"
    assert H.degree == 1 and H.degree_of_X == 3


def test_points_hilbert(points_spec):
    assert str(hilbert_polynomial(points_spec)) == "4"
    assert all(hilbert_function(points_spec, v) == 4 for v in range(3, 15))


def test_three_by_four_linear():
    s = validate(3, 3, 2, [0, 0, 0], [1, 1, 1, 1])
    H = hilbert_polynomial(s)
    assert str(H) == "6v-2"
    assert H.degree_of_X == 6


@given(small_specs)
def test_polynomial_agrees_past_max_shift(s):
    T = en_betti_table(s)
    H = hilbert_polynomial(s, T)
    top = T.max_shift()
    for v in range(top, top + 6):
        assert H(v) == hilbert_function(s, v, T)


@given(small_specs)
def test_below_first_generator(s):
    T = en_betti_table(s)
    first = min(T.terms[1])
    for v in range(first - 3, first):
        assert hilbert_function(s, v, T) == binom0(v + s.n, s.n)


@given(small_specs, st.integers(0, 3))
def test_degree_is_n_minus_c(s, extra):
    lift = max(0, max(s.b) + 1 - min(s.a))
    s = validate(s.c + extra, s.t, s.c, s.b, [x + lift for x in s.a])
    H = hilbert_polynomial(s)
    assert H.degree == s.n - s.c
    assert H.degree_of_X > 0


def test_hilbert_poly_str():
    assert str(HilbertPoly((0,))) == "0"
    assert str(HilbertPoly((1, 1))) == "v+2"
    assert str(HilbertPoly((0, 0, 2))) == "v^2+3v+2"


def test_min_gen_degree(points_spec):
    assert min_gen_degree_last_quotient(points_spec) == 2


@given(nonempty_specs(t_max=3, c_max=5))
def test_min_gen_degree_is_min_minor_with_last_column(s):
    assume(s.c >= 3)
    last = len(s.a) - 1
    degs = [sum(s.a[j] for j in S) - sum(s.b)
            for S in combinations(range(len(s.a)), s.t) if last in S]
    assert min_gen_degree_last_quotient(s) == min(degs)


def test_min_gen_degree_c2_warns(twisted_cubic):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        value = min_gen_degree_last_quotient(twisted_cubic)
    assert value == 2  # a quadric minor uses the last column
    assert caught
