"""Ideals cogenerated by a minor, their mixed-determinantal description, and
the height formula pq - (p+q+1)m + sum(alpha_i + beta_i)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from ..errors import HypothesisViolated, ShapeError
from .ideal import Ideal
from .matrices import DegMatrix, MinorCache, minors, random_matrix
from .ring import DEFAULT_PRIME, PolyRing


@dataclass(frozen=True)
class CogeneratedSpec:
    """Shape p x q and 1-based index tuples alpha (rows), beta (columns) of length m."""

    p: int
    q: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        m = len(self.alpha)
        if m != len(self.beta) or m < 1:
            raise ShapeError("alpha and beta must be non-empty and of equal length")
        if m > min(self.p, self.q):
            raise ShapeError(f"m = {m} exceeds min(p, q) = {min(self.p, self.q)}")
        for name, idx, top in (("alpha", self.alpha, self.p), ("beta", self.beta, self.q)):
            if idx[0] < 1 or idx[-1] > top or any(x >= y for x, y in zip(idx, idx[1:])):
                raise ShapeError(f"{name} must be strictly increasing in 1..{top}, got {idx}")

    @property
    def m(self) -> int:
        return len(self.alpha)

    def predicted_height(self) -> int:
        p, q, m = self.p, self.q, self.m
        return p * q - (p + q + 1) * m + sum(self.alpha) + sum(self.beta)


def cogenerated_ideal(M: DegMatrix, cs: CogeneratedSpec) -> Ideal:
    """I_(alpha;beta)(M): all (m+1)-minors, plus for each i the i x i minors of rows
    1..alpha_i - 1 and of columns 1..beta_i - 1."""
    if M.shape != (cs.p, cs.q):
        raise ShapeError(f"matrix is {M.shape}, spec wants {(cs.p, cs.q)}")
    cache = MinorCache(M)
    gens = list(minors(M, cs.m + 1, cache=cache))
    for i in range(1, cs.m + 1):
        gens += minors(M, i, rows=range(cs.alpha[i - 1] - 1), cache=cache)
        gens += minors(M, i, cols=range(cs.beta[i - 1] - 1), cache=cache)
    return Ideal(M.ring, gens)


def mixed_determinantal_ideal(M: DegMatrix, beta: Sequence[int]) -> Ideal:
    """The mixed determinantal form I_{m+1}(A_{c_1}) + I_m(A_{c_2}) + ... + I_j(A_{c_{m+2-j}}).

    Valid for alpha = (1, ..., m), p <= q and m < p; A_r keeps the first q - r + 1
    columns, c_1 = 1, c_s = q + 2 - beta_{m+2-s} and j = min{i : beta_i > i}.
    """
    p, q = M.shape
    m = len(beta)
    if not (p <= q and m < p):
        raise ShapeError("needs p <= q and m < p")
    beta = tuple(beta)
    js = [i for i in range(1, m + 1) if beta[i - 1] > i]
    cache = MinorCache(M)
    gens = list(minors(M, m + 1, cache=cache))
    if js:
        j = js[0]
        for s in range(2, m + 3 - j):
            c_s = q + 2 - beta[m + 2 - s - 1]
            gens += minors(M, m + 2 - s, cols=range(q - c_s + 1), cache=cache)
    return Ideal(M.ring, gens)


@dataclass(frozen=True)
class HeightCheck:
    predicted: int
    observed: int
    n: int
    seed: int
    cm_note: str = "Cohen-Macaulayness not verified"

    @property
    def ok(self) -> bool:
        return self.predicted == self.observed


def height_check(cs: CogeneratedSpec, b: Sequence[int], a: Sequence[int], n: int | None = None,
                 field: int = DEFAULT_PRIME, seed: int = 0) -> HeightCheck:
    """Compare the predicted height with the Groebner codimension for a random matrix.

    ``b`` are the p row degrees and ``a`` the q column degrees; entries have degree
    a_j - b_i, which must all be positive.  Defaults to n = max(predicted, 1).
    """
    if len(b) != cs.p or len(a) != cs.q:
        raise ShapeError("degree vectors do not match the matrix shape")
    if any(aj <= bi for aj in a for bi in b):
        raise HypothesisViolated("every entry degree a_j - b_i must be positive")
    predicted = cs.predicted_height()
    if n is None:
        n = max(predicted, 1)
    if n + 1 < predicted:
        raise HypothesisViolated(f"needs n + 1 >= {predicted}, got n = {n}")
    ring = PolyRing(n + 1, field)
    M = random_matrix(ring, b, a, random.Random(seed))
    observed = cogenerated_ideal(M, cs).codim()
    return HeightCheck(predicted, observed, n, seed)


def random_cogenerated_spec(rng: random.Random, max_size: int = 4, max_m: int = 2) -> CogeneratedSpec:
    p, q = rng.randint(2, max_size), rng.randint(2, max_size)
    m = rng.randint(1, min(max_m, p, q))
    alpha = tuple(sorted(rng.sample(range(1, p + 1), m)))
    beta = tuple(sorted(rng.sample(range(1, q + 1), m)))
    return CogeneratedSpec(p, q, alpha, beta)


def random_height_instance(rng: random.Random, max_size: int = 4, max_m: int = 2,
                           quadratic_height: int = 6):
    """Draw (spec, b, a) with entry degrees 1 or 2.

    Quadratic entries are only allowed when the predicted height is at most
    ``quadratic_height``; past that the Groebner computation in pure Python gets
    too slow, so the entries are kept linear.
    """
    cs = random_cogenerated_spec(rng, max_size, max_m)
    while cs.predicted_height() < 1:  # ideal is zero, nothing to test
        cs = random_cogenerated_spec(rng, max_size, max_m)
    if cs.predicted_height() <= quadratic_height:
        b = [rng.randint(0, 1) for _ in range(cs.p)]
        a = [rng.randint(max(b) + 1, min(b) + 2) for _ in range(cs.q)]
    else:
        b, a = [0] * cs.p, [1] * cs.q
    return cs, b, a
