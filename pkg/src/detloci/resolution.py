"""Eagon-Northcott graded Betti data and the Hilbert function it determines.

Shift convention: the free module R(-d) is recorded by its generator degree d.
This sign flip happens here and nowhere else.
"""

from __future__ import annotations

import math
import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Any

from .combinatorics import binom0, ell
from .degrees import DegreeSpec, is_nonempty
from .errors import EmptyFamily, ShapeError

MAX_RANK = 10**6


def en_rank(t: int, c: int, p: int) -> int:
    """Rank of the p-th Eagon-Northcott module (p = 0 is R itself)."""
    if p == 0:
        return 1
    return math.comb(t + c - 1, t + p - 1) * math.comb(t + p - 2, p - 1)


def en_rank_identity_check(t: int, c: int) -> bool:
    """The alternating rank sum over p = 1..c equals 1 (R/I has rank 0)."""
    return sum((-1) ** (p - 1) * en_rank(t, c, p) for p in range(1, c + 1)) == 1


@dataclass(frozen=True)
class BettiTable:
    """terms[p] is the sorted multiset of generator degrees in homological degree p."""

    terms: dict[int, tuple[int, ...]]

    @property
    def length(self) -> int:
        return max(self.terms)

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(self.terms[p]) for p in range(self.length + 1))

    def counts(self) -> dict[int, Counter]:
        return {p: Counter(ds) for p, ds in self.terms.items()}

    def max_shift(self) -> int:
        return max(max(ds) for ds in self.terms.values() if ds)

    def to_json(self) -> list[dict[str, Any]]:
        return [{"p": p, "degrees": list(ds)} for p, ds in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, rows: list[dict[str, Any]]) -> "BettiTable":
        return cls({int(r["p"]): tuple(sorted(r["degrees"])) for r in rows})

    def to_text(self) -> str:
        """Macaulay-style grid: row r, column p holds beta_{p, p+r}."""
        counts = self.counts()
        cols = range(self.length + 1)
        rows = sorted({d - p for p, ds in self.terms.items() for d in ds})
        rows = range(rows[0], rows[-1] + 1)
        cells = {(r, p): counts[p].get(p + r, 0) for r in rows for p in cols}
        width = max(len(str(x)) for x in list(cells.values()) + list(self.ranks()))
        width = max(width, len(str(self.length)))
        label = max(len("total:"), max(len(f"{r}:") for r in rows))

        def fmt(x):
            return (str(x) if x else ".").rjust(width)

        lines = [" " * label + " " + " ".join(str(p).rjust(width) for p in cols)]
        lines.append("total:".rjust(label) + " " + " ".join(str(x).rjust(width) for x in self.ranks()))
        for r in rows:
            lines.append(f"{r}:".rjust(label) + " " + " ".join(fmt(cells[r, p]) for p in cols))
        return "\n".join(lines)


def en_betti_table(s: DegreeSpec) -> BettiTable:
    """Generator degrees of the Eagon-Northcott resolution of R/I_t.

    Homological degree p >= 1 contributes sum_{j in S} a_j - sum_{l in T} b_l - sum_k b_k
    for every column set S of size t+p-1 and row multiset T of size p-1.
    """
    if not is_nonempty(s):
        raise EmptyFamily(f"W(b;a) is empty for {s.key()}")
    if en_rank(s.t, s.c, 1) > MAX_RANK:
        raise ShapeError(f"first Betti number exceeds {MAX_RANK}")
    base = sum(s.b)
    terms: dict[int, tuple[int, ...]] = {0: (0,)}
    for p in range(1, s.c + 1):
        col_sums = [sum(S) for S in combinations(s.a, s.t + p - 1)]
        row_sums = [sum(T) for T in combinations_with_replacement(s.b, p - 1)]
        terms[p] = tuple(sorted(ca - rb - base for ca in col_sums for rb in row_sums))
    return BettiTable(terms)


def hilbert_function(s: DegreeSpec, v: int, table: BettiTable | None = None) -> int:
    """H_{R/I}(v) = sum_p (-1)^p sum_{d in terms[p]} binom0(v - d + n, n)."""
    if table is None:
        table = en_betti_table(s)
    n = s.n
    total = 0
    for p, ds in table.terms.items():
        sign = -1 if p % 2 else 1
        for d, mult in Counter(ds).items():
            total += sign * mult * binom0(v - d + n, n)
    return total


def _binom_poly(x: int, k: int) -> int:
    """x(x-1)...(x-k+1)/k! evaluated at any integer x."""
    num = 1
    for i in range(k):
        num *= x - i
    return num // math.factorial(k)


@dataclass(frozen=True)
class HilbertPoly:
    """P(v) = sum_k coeffs[k] * binom(v + k, k)."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        d = len(self.coeffs) - 1
        while d > 0 and self.coeffs[d] == 0:
            d -= 1
        return d

    @property
    def degree_of_X(self) -> int:
        return self.coeffs[self.degree]

    def __call__(self, v: int) -> int:
        return sum(ck * _binom_poly(v + k, k) for k, ck in enumerate(self.coeffs))

    def monomial_coefficients(self) -> list[Fraction]:
        """Coefficients of 1, v, v^2, ... in the ordinary power basis."""
        out = [Fraction(0)] * (len(self.coeffs))
        for k, ck in enumerate(self.coeffs):
            # binom(v+k, k) = prod_{i=1}^k (v + i) / k!
            poly = [Fraction(1)]
            for i in range(1, k + 1):
                poly = [Fraction(0)] + poly
                for e in range(len(poly) - 1):
                    poly[e] += i * poly[e + 1]
            for e, x in enumerate(poly):
                out[e] += ck * x / math.factorial(k)
        return out

    def __str__(self) -> str:
        parts = []
        for e, x in reversed(list(enumerate(self.monomial_coefficients()))):
            if x == 0:
                continue
            mag = abs(x)
            coef = "" if (mag == 1 and e) else str(mag)
            var = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            parts.append(("-" if x < 0 else "+", coef + var))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f"{sg}{body}" for sg, body in parts[1:])


def hilbert_polynomial(s: DegreeSpec, table: BettiTable | None = None) -> HilbertPoly:
    """Hilbert polynomial of R/I_t, agreeing with :func:`hilbert_function` for v >= max shift."""
    if table is None:
        table = en_betti_table(s)
    n = s.n

    def value(v):
        return sum((-1) ** p * _binom_poly(v - d + n, n) for p, ds in table.terms.items() for d in ds)

    # c_j = (backward difference^j P)(-1)
    D = n
    vals = [value(-1 - k) for k in range(D + 1)]
    coeffs = []
    for j in range(D + 1):
        coeffs.append(sum((-1) ** k * math.comb(j, k) * vals[k] for k in range(j + 1)))
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return HilbertPoly(tuple(coeffs))


def min_gen_degree_last_quotient(s: DegreeSpec) -> int:
    """Smallest generator degree of I_{D_c}/I_{D_{c-1}}: l_c - sum_{j=t-1}^{t+c-3} a_j.

    This is the least degree of a maximal minor using the last column.  The
    quotient reading is meant for c >= 3; a warning is emitted for c = 2.
    """
    if s.c < 2:
        raise ShapeError("c must be >= 2")
    if s.c == 2:
        warnings.warn("quotient I_{c-1} is only used for c >= 3", stacklevel=2)
    return ell(s, s.c) - sum(s.a[s.t - 1 : s.t + s.c - 2])
