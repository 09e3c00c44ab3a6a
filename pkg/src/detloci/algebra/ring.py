"""Polynomials over F_p in degree-reverse-lexicographic order.

A monomial is encoded as a single integer *key* that is simultaneously

* additive: ``key(m1 * m2) == key(m1) + key(m2)``, and
* order preserving: ``key(m1) > key(m2)`` iff m1 > m2 in degrevlex
  (x0 > x1 > ... > xn).

With k-bit fields, a packed word ``m = deg << s | sum e_i << (k*i)`` keeps
the exponents with a top-level degree field; the key is ``deg << s`` minus the
low part, which reverses the comparison of the exponent fields exactly as
degrevlex requires.  Divisibility is tested on the packed word with one guard
bit per field.
"""

from __future__ import annotations

import re
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

DEFAULT_PRIME = 32003
_BITS = 16


class PolyRing:
    """F_p[x0, ..., x_{nvars-1}] with degrevlex order."""

    def __init__(self, nvars: int, p: int = DEFAULT_PRIME):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        self.p = p
        self.k = _BITS
        self.s = _BITS * nvars
        self.field_mask = (1 << (_BITS - 1)) - 1
        self.guard = sum(1 << (_BITS * i + _BITS - 1) for i in range(nvars + 1))
        self._var_keys = tuple(self.mono(tuple(int(i == j) for j in range(nvars))) for i in range(nvars))

    def __repr__(self):
        return f"PolyRing(nvars={self.nvars}, p={self.p})"

    def __eq__(self, other):
        return isinstance(other, PolyRing) and (self.nvars, self.p) == (other.nvars, other.p)

    def __hash__(self):
        return hash((self.nvars, self.p))

    # -- monomials -----------------------------------------------------
    def mono(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        low = 0
        for i, e in enumerate(exps):
            if e < 0 or e > self.field_mask:
                raise ValueError(f"exponent {e} out of range")
            low |= e << (self.k * i)
        return (sum(exps) << self.s) - low

    def deg(self, key: int) -> int:
        return -((-key) >> self.s)

    def packed(self, key: int) -> int:
        return (self.deg(key) << (self.s + 1)) - key

    def exps(self, key: int) -> tuple[int, ...]:
        m = self.packed(key)
        mask = (1 << self.k) - 1
        return tuple((m >> (self.k * i)) & mask for i in range(self.nvars))

    def var_key(self, i: int) -> int:
        return self._var_keys[i]

    def divides(self, kd: int, km: int) -> bool:
        """Does monomial kd divide monomial km?"""
        g = self.guard
        return ((self.packed(km) + g) - self.packed(kd)) & g == g

    def lcm(self, k1: int, k2: int) -> int:
        return self.mono(tuple(map(max, self.exps(k1), self.exps(k2))))

    def monomials_of_degree(self, d: int) -> list[int]:
        """Keys of all monomials of degree d, in descending order."""
        out = []
        for combo in combinations_with_replacement(range(self.nvars), d):
            e = [0] * self.nvars
            for v in combo:
                e[v] += 1
            out.append(self.mono(e))
        out.sort(reverse=True)
        return out

    # -- coefficients ---------------------------------------------------
    def inv(self, c: int) -> int:
        return pow(c, self.p - 2, self.p)

    def sym(self, c: int) -> int:
        """Symmetric representative of c mod p."""
        c %= self.p
        return c - self.p if c > self.p // 2 else c

    # -- polynomials ----------------------------------------------------
    def zero(self) -> "SparsePoly":
        return SparsePoly(self, {})

    def one(self) -> "SparsePoly":
        return SparsePoly(self, {0: 1})

    def const(self, c: int) -> "SparsePoly":
        return SparsePoly(self, {0: c})

    def var(self, i: int) -> "SparsePoly":
        return SparsePoly(self, {self._var_keys[i]: 1})

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "SparsePoly":
        return SparsePoly(self, {self.mono(exps): coeff})

    def gens(self) -> list["SparsePoly"]:
        return [self.var(i) for i in range(self.nvars)]

    def parse(self, text: str) -> "SparsePoly":
        return parse_poly(self, text)


class SparsePoly:
    """Polynomial stored as ``{monomial key: coefficient}``, sorted decreasing.

    Coefficients are kept in 0..p-1 and never zero.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[int, int]):
        p = ring.p
        cleaned = {k: c % p for k, c in terms.items() if c % p}
        self.ring = ring
        self.terms = dict(sorted(cleaned.items(), reverse=True))

    @classmethod
    def _trusted(cls, ring: PolyRing, terms: dict[int, int]) -> "SparsePoly":
        """Wrap an already sorted, reduced, zero-free term dict."""
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lead_key(self) -> int:
        return next(iter(self.terms))

    @property
    def lead_coeff(self) -> int:
        return next(iter(self.terms.values()))

    def lead_exps(self) -> tuple[int, ...]:
        return self.ring.exps(self.lead_key)

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.ring.deg(k) for k in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.deg(k) for k in self.terms}
        return len(degs) <= 1

    def items(self):
        """(exponent tuple, coefficient) pairs in decreasing term order."""
        return [(self.ring.exps(k), c) for k, c in self.terms.items()]

    # -- arithmetic ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return isinstance(other, SparsePoly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __neg__(self):
        p = self.ring.p
        return SparsePoly._trusted(self.ring, {k: p - c for k, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = d.get(k, 0) + c
        return SparsePoly(self.ring, d)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        ring = self.ring
        if isinstance(other, int):
            return SparsePoly(ring, {k: c * other for k, c in self.terms.items()})
        p = ring.p
        d: dict[int, int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                d[k] = (d.get(k, 0) + c1 * c2) % p
        return SparsePoly(ring, d)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def mul_term(self, key: int, coeff: int) -> "SparsePoly":
        p = self.ring.p
        return SparsePoly._trusted(self.ring, {k + key: c * coeff % p for k, c in self.terms.items()})

    def monic(self) -> "SparsePoly":
        if not self.terms:
            return self
        return self * self.ring.inv(self.lead_coeff)

    def __repr__(self):
        return f"SparsePoly({self})"

    def __str__(self):
        return format_poly(self)


def format_poly(f: SparsePoly) -> str:
    if f.is_zero():
        return "0"
    ring = f.ring
    pieces = []
    for key, c in f.terms.items():
        c = ring.sym(c)
        e = ring.exps(key)
        factors = [f"x{i}" if x == 1 else f"x{i}^{x}" for i, x in enumerate(e) if x]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        pieces.append(("-" if c < 0 else "+", body))
    head = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    return head + "".join(f" {sg} {body}" for sg, body in pieces[1:])


_TERM = re.compile(r"([+-]?)\s*([^+-]+)")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_poly(ring: PolyRing, text: str) -> SparsePoly:
    """Parse the ``3*x0^2*x1 - x2 + 5`` syntax produced by :func:`format_poly`."""
    text = text.strip()
    if text in ("", "0"):
        return ring.zero()
    terms: dict[int, int] = {}
    pos = 0
    compact = text.replace(" ", "")
    for m in _TERM.finditer(compact):
        sign, body = m.group(1), m.group(2)
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = m.end()
        coeff = -1 if sign == "-" else 1
        exps = [0] * ring.nvars
        for factor in body.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            fm = _FACTOR.match(factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            idx = int(fm.group(1))
            if idx >= ring.nvars:
                raise ValueError(f"variable x{idx} outside ring with {ring.nvars} variables")
            exps[idx] += int(fm.group(2) or 1)
        key = ring.mono(exps)
        terms[key] = terms.get(key, 0) + coeff
    if pos != len(compact):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return SparsePoly(ring, terms)


def random_form(ring: PolyRing, degree: int, rng, nonzero_constant: bool = True) -> SparsePoly:
    """Dense random homogeneous form of the given degree, coefficients uniform in F_p.

    Negative degree gives the zero polynomial.
    """
    if degree < 0:
        return ring.zero()
    if degree == 0 and nonzero_constant:
        return ring.const(rng.randrange(1, ring.p))
    return SparsePoly(ring, {k: rng.randrange(ring.p) for k in ring.monomials_of_degree(degree)})


def combine(polys: Iterable[SparsePoly], coeffs: Iterable[int]) -> SparsePoly:
    """Linear combination sum c_i f_i."""
    polys = list(polys)
    ring = polys[0].ring
    d: dict[int, int] = {}
    for f, c in zip(polys, coeffs):
        for k, x in f.terms.items():
            d[k] = d.get(k, 0) + c * x
    return SparsePoly(ring, d)
