import math
import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from detloci.algebra.ideal import Ideal, monomial_codim, standard_monomials
from detloci.algebra.matrices import build_generic_matrix, maximal_minors
from detloci.algebra.ring import PolyRing
from detloci.degrees import validate


def test_twisted_cubic(twisted_cubic):
    I = maximal_minors(build_generic_matrix(twisted_cubic, seed=1))
    assert I.codim() == 2
    assert I.krull_dim() == 2
    assert I.hilbert_fn_oracle(10) == [3 * v + 1 for v in range(11)]
    assert I.check_groebner()


def test_points_codim(points_spec):
    assert maximal_minors(build_generic_matrix(points_spec, seed=1)).codim() == 3


def test_zero_ideal():
    R = PolyRing(4)
    I = Ideal(R, [])
    assert I.krull_dim() == 4
    assert I.hilbert_fn_oracle(6) == [math.comb(v + 3, 3) for v in range(7)]


def test_rejects_inhomogeneous():
    R = PolyRing(2)
    with pytest.raises(ValueError):
        Ideal(R, [R.parse("x0 + x1^2")])


def _brute_codim(leads, nvars):
    best = nvars
    for mask in range(1 << nvars):
        chosen = [i for i in range(nvars) if mask >> i & 1]
        if all(any(e[i] for i in chosen) for e in leads):
            best = min(best, len(chosen))
    return best


@given(st.lists(st.lists(st.integers(0, 2), min_size=5, max_size=5).map(tuple), min_size=1, max_size=6))
def test_monomial_codim_matches_brute_force(leads):
    leads = [e for e in leads if any(e)]
    if not leads:
        return
    assert monomial_codim(leads) == _brute_codim(leads, 5)


def _brute_standard(leads, nvars, v):
    count = 0
    for e in product(range(v + 1), repeat=nvars):
        if sum(e) == v and not any(all(x >= y for x, y in zip(e, l)) for l in leads):
            count += 1
    return count


@given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3).map(tuple), min_size=1, max_size=4))
def test_standard_monomials_brute_force(leads):
    R = PolyRing(3)
    levels = standard_monomials(R, leads, 5)
    for v in range(6):
        assert len(levels[v]) == _brute_standard(leads, 3, v)


def test_dimension_seed_invariant():
    s = validate(4, 2, 3, [0, 0], [1, 1, 2, 2])
    dims = {maximal_minors(build_generic_matrix(s, seed=k)).krull_dim() for k in range(5)}
    assert dims == {2}


def test_sum_of_ideals():
    R = PolyRing(3)
    I = Ideal(R, [R.parse("x0")]) + Ideal(R, [R.parse("x1")])
    assert I.codim() == 2
    assert I.contains(R.parse("x0*x2 + x1^2"))
