"""Homogeneous ideals with a cached reduced Groebner basis."""

from __future__ import annotations

from itertools import combinations

from .groebner import Reducer, buchberger, normal_form, satisfies_buchberger_criterion
from .ring import PolyRing, SparsePoly


class Ideal:
    """Ideal of F_p[x0..xn] given by homogeneous generators.

    The Groebner basis is computed on first use and cached; once cached the
    object is treated as immutable.
    """

    def __init__(self, ring: PolyRing, gens):
        self.ring = ring
        self.gens = tuple(g for g in gens if not g.is_zero())
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
        self._gb: tuple[SparsePoly, ...] | None = None
        self._reducer: Reducer | None = None

    def __repr__(self):
        state = "gb cached" if self._gb is not None else "no gb"
        return f"Ideal({len(self.gens)} generators, {state})"

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.gens + other.gens)

    # -- Groebner data ----------------------------------------------------
    def groebner(self, budget: int | None = None) -> tuple[SparsePoly, ...]:
        if self._gb is None:
            self._gb = tuple(buchberger(list(self.gens), budget=budget))
        return self._gb

    @property
    def has_groebner(self) -> bool:
        return self._gb is not None

    def lead_exponents(self) -> list[tuple[int, ...]]:
        return [g.lead_exps() for g in self.groebner()]

    def is_unit(self) -> bool:
        return any(g.lead_key == 0 for g in self.groebner())

    def normal_form(self, f: SparsePoly) -> SparsePoly:
        gb = self.groebner()
        if self._reducer is None:
            self._reducer = Reducer(list(gb), self.ring)
        return self._reducer(f)

    def contains(self, f: SparsePoly) -> bool:
        return self.normal_form(f).is_zero()

    def check_groebner(self) -> bool:
        return satisfies_buchberger_criterion(list(self.groebner()))

    # -- invariants ------------------------------------------------------------
    def krull_dim(self) -> int:
        """Krull dimension of R/I (the affine cone); 0 for the unit ideal by convention."""
        return self.ring.nvars - monomial_codim(self.lead_exponents())

    def codim(self) -> int:
        return self.ring.nvars - self.krull_dim()

    def standard_monomials(self, v: int) -> list[int]:
        """Keys of degree-v monomials outside the lead-term ideal."""
        return standard_monomials(self.ring, self.lead_exponents(), v)[v]

    def hilbert_fn_oracle(self, v_max: int) -> list[int]:
        """H_{R/I}(v) for 0 <= v <= v_max by counting standard monomials."""
        levels = standard_monomials(self.ring, self.lead_exponents(), v_max)
        return [len(levels[v]) for v in range(v_max + 1)]


def _support_mask(e) -> int:
    return sum(1 << i for i, x in enumerate(e) if x)


def monomial_codim(leads: list[tuple[int, ...]]) -> int:
    """Codimension of a monomial ideal: minimum number of variables meeting every support.

    The smallest hitting set of the supports is found by branch and bound; the
    unit ideal (a constant lead) has codimension equal to the number of variables.
    """
    if not leads:
        return 0
    nvars = len(leads[0])
    masks = sorted({_support_mask(e) for e in leads}, key=lambda m: bin(m).count("1"))
    if 0 in masks:
        return nvars
    # keep only minimal supports
    minimal = []
    for m in masks:
        if not any((q & m) == q for q in minimal):
            minimal.append(m)
    best = [nvars]

    def search(chosen: int, size: int):
        if size >= best[0]:
            return
        for m in minimal:
            if not m & chosen:
                break
        else:
            best[0] = size
            return
        bits = m
        while bits:
            low = bits & -bits
            search(chosen | low, size + 1)
            bits ^= low

    search(0, 0)
    return best[0]


def standard_monomials(ring: PolyRing, leads: list[tuple[int, ...]], v_max: int) -> list[list[int]]:
    """Standard monomials of each degree 0..v_max, grown degree by degree.

    Standard monomials form an order ideal, so degree v+1 candidates are
    x_i * m for standard m of degree v.
    """
    lead_keys = [ring.mono(e) for e in leads]
    if any(k == 0 for k in lead_keys):
        return [[] for _ in range(v_max + 1)]
    by_deg: dict[int, list[int]] = {}
    for k in lead_keys:
        by_deg.setdefault(ring.deg(k), []).append(ring.packed(k))
    guard = ring.guard
    levels = [[0]]
    leads_upto: list[int] = []
    for v in range(1, v_max + 1):
        leads_upto = leads_upto + by_deg.get(v, [])
        cand = set()
        for k in levels[-1]:
            for i in range(ring.nvars):
                cand.add(k + ring.var_key(i))
        keep = []
        for k in cand:
            mt = ring.packed(k) + guard
            if not any((mt - gp) & guard == guard for gp in leads_upto):
                keep.append(k)
        keep.sort(reverse=True)
        levels.append(keep)
    return levels
