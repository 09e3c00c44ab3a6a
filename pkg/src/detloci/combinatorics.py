"""Closed-form invariants of W(b;a): l_i, lambda_c, h_k, the K-terms and the
conjectured dimension lambda_c + K_3 + ... + K_c.

All arithmetic is exact (Python integers).
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Any

from .degrees import DegreeSpec, is_nonempty
from .errors import EmptyFamily, IndexOutOfRange, NegativeBottom


def binom0(top: int, bottom: int) -> int:
    """Binomial coefficient with binom(top, bottom) = 0 whenever top < bottom."""
    if bottom < 0:
        raise NegativeBottom(f"bottom must be >= 0, got {bottom}")
    if top < bottom:
        return 0
    return math.comb(top, bottom)


def ell(s: DegreeSpec, i: int) -> int:
    """l_i = sum_{j=0}^{t+i-2} a_j - sum_{k=1}^t b_k, for 1 <= i <= c.

    l_1 is the degree of the hypersurface cut out by the first t columns.
    """
    if not 1 <= i <= s.c:
        raise IndexOutOfRange(f"l_i needs 1 <= i <= {s.c}, got {i}")
    return sum(s.a[: s.t + i - 1]) - sum(s.b)


def lambda_c(s: DegreeSpec) -> int:
    n = s.n
    total = 1
    for ai in s.a:
        for bj in s.b:
            total += binom0(ai - bj + n, n) + binom0(bj - ai + n, n)
    for ai in s.a:
        for aj in s.a:
            total -= binom0(ai - aj + n, n)
    for bi in s.b:
        for bj in s.b:
            total -= binom0(bi - bj + n, n)
    return total


def h_index(s: DegreeSpec, k: int) -> int:
    """h_k = 2 a_{t+k+1} - l_{k+3} + n, for 0 <= k <= c-3."""
    if not 0 <= k <= s.c - 3:
        raise IndexOutOfRange(f"h_k needs 0 <= k <= {s.c - 3}, got {k}")
    return 2 * s.a[s.t + k + 1] - ell(s, k + 3) + s.n


def _check_m(s: DegreeSpec, m: int) -> int:
    if not 3 <= m <= s.c:
        raise IndexOutOfRange(f"K_m needs 3 <= m <= c={s.c}, got {m}")
    return m - 3


def K_term(s: DegreeSpec, m: int) -> int:
    """K_m by direct enumeration of the index tuples.

    With i = m - 3 this is the sum over r + s = i, strictly increasing
    0 <= i_1 < ... < i_r <= t+i and weakly increasing 1 <= j_1 <= ... <= j_s <= t
    of (-1)^(i-r) binom0(h_i + a_{i_1} + ... + a_{i_r} + b_{j_1} + ... + b_{j_s}, n).
    """
    i = _check_m(s, m)
    h = h_index(s, i)
    a_pool = s.a[: s.t + i + 1]
    total = 0
    for r in range(i + 1):
        sign = -1 if (i - r) % 2 else 1
        a_sums = [sum(tup) for tup in combinations(a_pool, r)]
        b_sums = [sum(tup) for tup in combinations_with_replacement(s.b, i - r)]
        for sa in a_sums:
            for sb in b_sums:
                total += sign * binom0(h + sa + sb, s.n)
    return total


def K_term_oracle(s: DegreeSpec, m: int) -> int:
    """K_m through generating functions, independent of :func:`K_term`.

    The y^i coefficient of prod_j (1 + y z^{a_j}) * prod_k (1 + y z^{b_k})^{-1}
    is a Laurent polynomial in z; each z^e contributes binom0(h_i + e, n).
    """
    i = _check_m(s, m)
    h = h_index(s, i)
    # series[r] maps z-exponent -> coefficient of y^r z^e; truncated at y^i
    series = [defaultdict(int) for _ in range(i + 1)]
    series[0][0] = 1
    for aj in s.a[: s.t + i + 1]:
        for r in range(i, 0, -1):
            for e, coef in list(series[r - 1].items()):
                series[r][e + aj] += coef
    for bk in s.b:
        # multiply by 1/(1 + y z^bk): new[r] = old[r] - z^bk * new[r-1]
        for r in range(1, i + 1):
            for e, coef in list(series[r - 1].items()):
                series[r][e + bk] -= coef
    return sum(coef * binom0(h + e, s.n) for e, coef in series[i].items() if coef)


def conjectured_dim(s: DegreeSpec) -> int:
    """lambda_c + K_3 + ... + K_c (just lambda_2 when c = 2)."""
    if not is_nonempty(s):
        raise EmptyFamily(f"W(b;a) is empty for {s.key()}")
    return lambda_c(s) + sum(K_term(s, m) for m in range(3, s.c + 1))


@dataclass(frozen=True)
class UpperBound:
    value: int
    is_upper_bound: bool = True
    note: str = "known unconditional upper bound for dim W(b;a)"


def upper_bound_status(s: DegreeSpec) -> UpperBound:
    return UpperBound(conjectured_dim(s))


@dataclass(frozen=True)
class InvariantBundle:
    ell: dict[int, int]
    lambda_: int
    h: dict[int, int] = field(default_factory=dict)
    K: dict[int, int] = field(default_factory=dict)
    conjectured_dim: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "ell": {str(k): v for k, v in self.ell.items()},
            "lambda": self.lambda_,
            "h": {str(k): v for k, v in self.h.items()},
            "K": {str(k): v for k, v in self.K.items()},
            "conjectured_dim": self.conjectured_dim,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "InvariantBundle":
        def ints(m):
            return {int(k): int(v) for k, v in m.items()}

        return cls(ints(d["ell"]), int(d["lambda"]), ints(d["h"]), ints(d["K"]),
                   int(d["conjectured_dim"]))


def invariants(s: DegreeSpec) -> InvariantBundle:
    """Every invariant at once; the conjectured dimension requires W(b;a) non-empty."""
    lam = lambda_c(s)
    K = {m: K_term(s, m) for m in range(3, s.c + 1)}
    return InvariantBundle(
        ell={i: ell(s, i) for i in range(1, s.c + 1)},
        lambda_=lam,
        h={k: h_index(s, k) for k in range(0, s.c - 2)},
        K=K,
        conjectured_dim=lam + sum(K.values()),
    )
