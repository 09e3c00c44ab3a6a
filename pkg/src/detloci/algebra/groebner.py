"""Buchberger's algorithm for homogeneous ideals over F_p (degrevlex).

Pairs are processed by increasing lcm (the normal strategy, which for
homogeneous input is degree by degree) and pruned with the Gebauer-Moeller
criteria.  Reduction runs on a term dictionary driven by a max-heap of
monomial keys.
"""

from __future__ import annotations

import heapq
import os
from itertools import combinations

from ..errors import BudgetExceeded
from .ring import PolyRing, SparsePoly

DEFAULT_BUDGET = 10**6


def default_budget() -> int:
    raw = os.environ.get("DETLOCI_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


class _Basis:
    """Working basis: monic polynomials with cached packed lead monomials."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.polys: list[tuple[list[int], list[int]]] = []  # (keys, coeffs), sorted desc
        self.tails: list[tuple[list[int], list[int]]] = []
        self.lead_keys: list[int] = []
        self.lead_packed: list[int] = []
        self.active: list[int] = []  # indices whose leads are not redundant

    def add(self, keys: list[int], coeffs: list[int]) -> int:
        self.polys.append((keys, coeffs))
        self.tails.append((keys[1:], coeffs[1:]))
        self.lead_keys.append(keys[0])
        self.lead_packed.append(self.ring.packed(keys[0]))
        return len(self.polys) - 1

    def reduce(self, terms: dict[int, int], full: bool, reducers: list[int]) -> tuple[list[int], list[int]]:
        """Reduce ``terms`` (consumed) by the basis elements in ``reducers``.

        Returns the remainder as parallel (keys, coeffs) lists, sorted
        decreasing.  With ``full=False`` only the leading term is made
        irreducible and the tail is returned as is.
        """
        ring = self.ring
        p = ring.p
        s = ring.s
        s1 = s + 1
        guard = ring.guard
        leads = [(self.lead_packed[i], i) for i in reducers]
        tails = self.tails
        lead_of = self.lead_keys
        get = terms.get
        heap = [-k for k in terms]
        heapq.heapify(heap)
        pop = heapq.heappop
        push = heapq.heappush
        out_k: list[int] = []
        out_c: list[int] = []
        while heap:
            k = -pop(heap)
            c = terms.pop(k, 0)
            if not c:
                continue
            deg = -((-k) >> s)
            mt = (deg << s1) - k + guard
            hit = -1
            for gp, gi in leads:
                if (mt - gp) & guard == guard:
                    hit = gi
                    break
            if hit < 0:
                out_k.append(k)
                out_c.append(c)
                if not full:
                    rest = sorted(terms.items(), reverse=True)
                    for kk, cc in rest:
                        out_k.append(kk)
                        out_c.append(cc)
                    return out_k, out_c
                continue
            tk, tc = tails[hit]
            q = k - lead_of[hit]
            mul = p - c
            for gk, gc in zip(tk, tc):
                nk = gk + q
                old = get(nk)
                if old is None:
                    terms[nk] = mul * gc % p
                    push(heap, -nk)
                else:
                    v = (old + mul * gc) % p
                    if v:
                        terms[nk] = v
                    else:
                        del terms[nk]
        return out_k, out_c


def _monic(keys: list[int], coeffs: list[int], p: int) -> tuple[list[int], list[int]]:
    inv = pow(coeffs[0], p - 2, p)
    if inv == 1:
        return keys, coeffs
    return keys, [c * inv % p for c in coeffs]


def buchberger(gens: list[SparsePoly], budget: int | None = None,
               max_degree: int | None = None) -> list[SparsePoly]:
    """Reduced Groebner basis of the homogeneous ideal generated by ``gens``.

    ``budget`` caps the number of pair/generator reductions; exceeding it
    raises :class:`BudgetExceeded`.  With ``max_degree`` the computation stops
    after that degree (a truncated basis, exact up to ``max_degree``).
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    if budget is None:
        budget = default_budget()
    p = ring.p
    B = _Basis(ring)
    # queue entries: (lcm key, tiebreak, kind, payload)
    queue: list = []
    counter = 0
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("Buchberger engine expects homogeneous generators")
        queue.append((g.lead_key, counter, 0, g))
        counter += 1
    heapq.heapify(queue)
    pairs_lcm: dict[tuple[int, int], int] = {}
    steps = 0
    while queue:
        lcm_key, _, kind, payload = heapq.heappop(queue)
        if max_degree is not None and ring.deg(lcm_key) > max_degree:
            break
        if kind == 1 and payload not in pairs_lcm:
            continue  # pruned after enqueueing
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"more than {budget} reductions")
        if kind == 0:
            terms = dict(payload.terms)
        else:
            i, j = payload
            del pairs_lcm[payload]
            terms = _spoly(B, i, j, lcm_key, p)
        keys, coeffs = B.reduce(terms, full=False, reducers=B.active)
        if not keys:
            continue
        keys, coeffs = _monic(keys, coeffs, p)
        h = B.add(keys, coeffs)
        for pair, lk in _update(B, h, pairs_lcm):
            heapq.heappush(queue, (lk, counter, 1, pair))
            counter += 1
    return _interreduce(B)


def _spoly(B: _Basis, i: int, j: int, lcm_key: int, p: int) -> dict[int, int]:
    ki, ci = B.polys[i]
    kj, cj = B.polys[j]
    qi = lcm_key - ki[0]
    qj = lcm_key - kj[0]
    terms: dict[int, int] = {}
    for k, c in zip(ki[1:], ci[1:]):
        terms[k + qi] = c
    for k, c in zip(kj[1:], cj[1:]):
        nk = k + qj
        v = (terms.get(nk, 0) - c) % p
        if v:
            terms[nk] = v
        else:
            terms.pop(nk, None)
    return terms


def _update(B: _Basis, h: int, pairs_lcm: dict[tuple[int, int], int]):
    """Gebauer-Moeller update; mutates ``pairs_lcm`` and ``B.active``.

    Returns the new pairs to enqueue as ``((i, h), lcm_key)``.
    """
    ring = B.ring
    lh = B.lead_keys[h]
    eh = ring.exps(lh)

    def lcm_with(i):
        return ring.mono(tuple(map(max, ring.exps(B.lead_keys[i]), eh)))

    def coprime(i):
        return not any(x and y for x, y in zip(ring.exps(B.lead_keys[i]), eh))

    cand = {i: lcm_with(i) for i in B.active}
    # chain criterion on the new pairs: drop (i,h) if some other lcm properly divides it,
    # keeping one representative per lcm; coprime pairs are kept only to shadow others
    kept = []
    items = sorted(cand.items(), key=lambda kv: (kv[1], kv[0]))
    for i, li in items:
        dominated = False
        for j, lj in items:
            if j == i:
                continue
            if lj != li and ring.divides(lj, li):
                dominated = True
                break
        if dominated:
            continue
        kept.append((i, li))
    new_pairs = []
    seen_lcm: dict[int, int] = {}
    for i, li in kept:
        if li in seen_lcm:
            # equal lcms: keep one, preferring a coprime pair (which is then dropped)
            j = seen_lcm[li]
            if coprime(i) and not coprime(j):
                seen_lcm[li] = i
            continue
        seen_lcm[li] = i
    for li, i in seen_lcm.items():
        if not coprime(i):
            new_pairs.append(((i, h), li))
    # old pairs (i, j) whose lcm is divisible by lead(h) strictly in both directions
    for pair, lij in list(pairs_lcm.items()):
        i, j = pair
        if ring.divides(lh, lij):
            li = cand[i] if i in cand else lcm_with(i)
            lj = cand[j] if j in cand else lcm_with(j)
            if li != lij and lj != lij:
                del pairs_lcm[pair]
    for pair, lk in new_pairs:
        pairs_lcm[pair] = lk
    B.active = [i for i in B.active if not ring.divides(lh, B.lead_keys[i])] + [h]
    return new_pairs


def _interreduce(B: _Basis) -> list[SparsePoly]:
    ring = B.ring
    p = ring.p
    active = sorted(B.active, key=lambda i: B.lead_keys[i])
    # drop elements whose lead is divisible by another active lead
    minimal = []
    for i in active:
        if not any(j != i and ring.divides(B.lead_keys[j], B.lead_keys[i]) for j in active):
            minimal.append(i)
    out = []
    for i in minimal:
        keys, coeffs = B.polys[i]
        others = [j for j in minimal if j != i]
        tail = dict(zip(keys[1:], coeffs[1:]))
        rk, rc = B.reduce(tail, full=True, reducers=others)
        terms = {keys[0]: 1}
        terms.update(zip(rk, rc))
        out.append(SparsePoly._trusted(ring, dict(sorted(terms.items(), reverse=True))))
    out.sort(key=lambda f: f.lead_key)
    return out


def normal_form(f: SparsePoly, basis: list[SparsePoly]) -> SparsePoly:
    """Fully reduced remainder of f modulo a Groebner basis."""
    if f.is_zero() or not basis:
        return f
    ring = f.ring
    B = _Basis(ring)
    for g in basis:
        k, c = _monic(list(g.terms), list(g.terms.values()), ring.p)
        B.add(k, c)
    return _normal_form_with(B, f)


def _normal_form_with(B: _Basis, f: SparsePoly) -> SparsePoly:
    keys, coeffs = B.reduce(dict(f.terms), full=True, reducers=list(range(len(B.polys))))
    return SparsePoly._trusted(f.ring, dict(zip(keys, coeffs)))


class Reducer:
    """Reusable normal-form reducer for a fixed Groebner basis."""

    def __init__(self, basis: list[SparsePoly], ring: PolyRing):
        self.ring = ring
        self._B = _Basis(ring)
        for g in basis:
            k, c = _monic(list(g.terms), list(g.terms.values()), ring.p)
            self._B.add(k, c)
        self._all = list(range(len(basis)))

    def __call__(self, f: SparsePoly) -> SparsePoly:
        if f.is_zero() or not self._all:
            return f
        keys, coeffs = self._B.reduce(dict(f.terms), full=True, reducers=self._all)
        return SparsePoly._trusted(self.ring, dict(zip(keys, coeffs)))


def spoly(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """S-polynomial of two nonzero polynomials."""
    ring = f.ring
    lk = ring.lcm(f.lead_key, g.lead_key)
    a = f.mul_term(lk - f.lead_key, ring.inv(f.lead_coeff))
    b = g.mul_term(lk - g.lead_key, ring.inv(g.lead_coeff))
    return a - b


def satisfies_buchberger_criterion(basis: list[SparsePoly]) -> bool:
    """Every S-pair of ``basis`` reduces to zero (checked directly, no criteria)."""
    if not basis:
        return True
    red = Reducer(basis, basis[0].ring)
    return all(red(spoly(f, g)).is_zero() for f, g in combinations(basis, 2))
