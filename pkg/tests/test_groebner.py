import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from detloci.algebra.groebner import buchberger, normal_form, satisfies_buchberger_criterion, spoly
from detloci.algebra.ideal import Ideal
from detloci.algebra.ring import PolyRing, SparsePoly, random_form
from detloci.errors import BudgetExceeded


def _from_sympy(ring, expr, syms):
    terms = {}
    for monom, coeff in sp.Poly(expr, *syms).terms():
        terms[ring.mono(monom)] = int(coeff)
    return SparsePoly(ring, terms)


def _sympy_gb(ring, gens):
    syms = sp.symbols(f"x0:{ring.nvars}")
    exprs = [sum(int(ring.sym(c)) * sp.prod([s ** e for s, e in zip(syms, ring.exps(k))])
                 for k, c in g.terms.items()) for g in gens]
    G = sp.groebner(exprs, *syms, order="grevlex", modulus=ring.p)
    return sorted((_from_sympy(ring, g, syms).monic() for g in G.exprs), key=lambda f: f.lead_key)


def _sorted(basis):
    return sorted((g.monic() for g in basis), key=lambda f: f.lead_key)


def test_principal_ideal():
    R = PolyRing(3)
    f = R.parse("3*x0^2 + x1*x2")
    assert buchberger([f]) == [f.monic()]


def test_already_groebner():
    R = PolyRing(3)
    gens = [R.parse("x0*x1"), R.parse("x0*x2")]
    assert _sorted(buchberger(gens)) == _sorted(gens)


def test_twisted_cubic_basis():
    R = PolyRing(4)
    gens = [R.parse(t) for t in ("x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2")]
    G = buchberger(gens)
    assert satisfies_buchberger_criterion(G)
    assert _sorted(G) == _sympy_gb(R, gens)
    assert Ideal(R, gens).krull_dim() == 2


@settings(max_examples=25)
@given(st.integers(0, 10**6), st.integers(2, 4), st.integers(2, 4))
def test_matches_sympy(seed, nvars, ngens):
    rng = random.Random(seed)
    R = PolyRing(nvars)
    gens = [random_form(R, rng.randint(1, 3), rng) for _ in range(ngens)]
    # sparsify to get more interesting bases
    gens = [SparsePoly(R, {k: c for k, c in g.terms.items() if rng.random() < 0.5}) for g in gens]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    G = buchberger(gens)
    assert satisfies_buchberger_criterion(G)
    assert _sorted(G) == _sympy_gb(R, gens)


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_criterion_and_membership(seed):
    rng = random.Random(seed)
    R = PolyRing(4)
    gens = [random_form(R, 2, rng) for _ in range(3)]
    G = buchberger(gens)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            assert normal_form(spoly(G[i], G[j]), G).is_zero()
    I = Ideal(R, gens)
    for g in gens:
        assert I.contains(g * R.var(rng.randrange(4)))
    # reduced: no term of g is divisible by another lead term
    leads = [g.lead_key for g in G]
    for g in G:
        assert g.lead_coeff == 1
        for k in g.terms:
            assert not any(R.divides(l, k) for l in leads if l != g.lead_key)


def test_deterministic():
    rng = random.Random(3)
    R = PolyRing(4)
    gens = [random_form(R, 2, rng) for _ in range(3)]
    assert buchberger(list(gens)) == buchberger(list(gens))


def test_budget_exceeded():
    rng = random.Random(5)
    R = PolyRing(5)
    gens = [random_form(R, 2, rng) for _ in range(4)]
    with pytest.raises(BudgetExceeded):
        buchberger(gens, budget=2)


def test_budget_env(monkeypatch):
    from detloci.algebra.groebner import default_budget

    monkeypatch.setenv("DETLOCI_BUDGET", "17")
    assert default_budget() == 17
    monkeypatch.delenv("DETLOCI_BUDGET")
    assert default_budget() == 10**6


def test_unit_ideal():
    R = PolyRing(2)
    I = Ideal(R, [R.parse("x0"), R.parse("x1"), R.one()])
    assert I.is_unit()
    assert I.codim() == R.nvars
