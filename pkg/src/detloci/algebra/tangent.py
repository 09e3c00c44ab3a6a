"""Degree-0 homomorphisms I -> R/I from the Eagon-Northcott syzygies, and the
dimension check for sums of submaximal and maximal minor ideals along the flag."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..errors import HypothesisViolated, NotCodimC, ShapeError
from .ideal import Ideal
from .linalg import rank_mod_p
from .matrices import DegMatrix, MinorCache, minors


def tangent_space_dim(M: DegMatrix, I: Ideal | None = None) -> int:
    """dim_k Hom_R(I, R/I)_0 for I = I_t(M), the maximal minors of a t x (t+c-1) matrix.

    A homomorphism sends the minor on column set S to u_S in (R/I)_{deg S}.
    The relations sum_k (-1)^k M[i, j_k] * minor(T - j_k) = 0, one for every
    row i and (t+1)-column set T, generate all syzygies when I has codimension
    c; u is admissible iff each relation maps to zero in R/I.  For an ACM
    scheme of positive dimension this is h^0(N_X).  For zero-dimensional X
    the degree-0 part of Hom(I, R/I) is computed as is (I is saturated, but
    no comparison with h^0(N_X) is made).
    """
    t, q = M.shape
    c = q - t + 1
    if c < 1:
        raise ShapeError("need at least t columns")
    if I is None:
        I = Ideal(M.ring, minors(M, t))
    codim = I.codim()
    if codim != c:
        raise NotCodimC(f"I_t has codimension {codim}, expected {c}")
    ring = M.ring
    p = ring.p
    base = sum(M.b)
    subsets = list(combinations(range(q), t))
    deg_of = {S: sum(M.a[j] for j in S) - base for S in subsets}

    std_cache: dict[int, list[int]] = {}

    def std(d):
        if d not in std_cache:
            std_cache[d] = I.standard_monomials(d) if d >= 0 else []
        return std_cache[d]

    offset = {}
    n_unknowns = 0
    for S in subsets:
        offset[S] = n_unknowns
        n_unknowns += len(std(deg_of[S]))
    if n_unknowns == 0:
        return 0

    nf_cache: dict[tuple[int, int, int], dict[int, int]] = {}

    def image(i, j, mono):
        key = (i, j, mono)
        if key not in nf_cache:
            f = M[i, j]
            nf_cache[key] = dict(I.normal_form(f.mul_term(mono, 1)).terms)
        return nf_cache[key]

    rows = []
    for T in combinations(range(q), t + 1):
        for i in range(t):
            target = None
            block: dict[int, dict[int, int]] = {}
            for k, j in enumerate(T):
                f = M[i, j]
                if f.is_zero():
                    continue
                S = T[:k] + T[k + 1:]
                d_target = deg_of[S] + M.a[j] - M.b[i]
                target = d_target
                sign = p - 1 if k % 2 else 1
                for col, mono in enumerate(std(deg_of[S])):
                    for tk, tc in image(i, j, mono).items():
                        block.setdefault(tk, {})
                        u = offset[S] + col
                        block[tk][u] = (block[tk].get(u, 0) + sign * tc) % p
            if target is None:
                continue
            for coeffs in block.values():
                row = [0] * n_unknowns
                for u, v in coeffs.items():
                    row[u] = v
                rows.append(row)
    rank = rank_mod_p(rows, p) if rows else 0
    return n_unknowns - rank


@dataclass(frozen=True)
class MixedSumCheck:
    i: int
    lhs_dim: int
    rhs_dim: int
    dim_D: int

    @property
    def holds(self) -> bool:
        return self.lhs_dim == self.rhs_dim


def mixed_sum_dim_check(M: DegMatrix, i: int = 1) -> MixedSumCheck:
    """Compare dim R/(I_{t-1}(phi_i) + I_t(phi_{c-1})) with dim D_{c-1} - i - 1.

    phi_k keeps the first t+k-1 columns, D_{c-1} = R/I_t(phi_{c-1}); all
    dimensions are Krull dimensions computed by Groebner bases.
    """
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")
    t, q = M.shape
    c = q - t + 1
    if min(M.a) <= max(M.b):
        raise HypothesisViolated("needs a_0 > b_t")
    if i == 1 and c < 3:
        raise HypothesisViolated("i = 1 needs c >= 3")
    if i == 2 and c < 4:
        raise HypothesisViolated("i = 2 needs c >= 4")
    cache = MinorCache(M)
    phi_last = range(t + c - 2)
    D = Ideal(M.ring, minors(M, t, cols=phi_last, cache=cache))
    dim_D = D.krull_dim()
    if i == 2 and dim_D < 3:
        raise HypothesisViolated(f"i = 2 needs dim D_(c-1) >= 3, got {dim_D}")
    sub = Ideal(M.ring, minors(M, t - 1, cols=range(t + i - 1), cache=cache))
    lhs = (sub + D).krull_dim()
    return MixedSumCheck(i, lhs, dim_D - i - 1, dim_D)
