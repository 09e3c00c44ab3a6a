"""Degree data for determinantal families W(b;a) and the non-emptiness test.

Indexing convention: ``a`` is stored and addressed 0-based exactly as in the
literature (a_0 <= ... <= a_{t+c-2}).  ``b`` is *documented* 1-based
(b_1 <= ... <= b_t) but stored 0-based, so ``b_i`` lives at ``spec.b[i - 1]``.
Use :meth:`DegreeSpec.bi` when transcribing formulas to avoid drift.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import (
    BadAmbient,
    BadLength,
    NotApplicable,
    TrivialCase,
    UnsortedInput,
)


@dataclass(frozen=True)
class CharFlag:
    """Characteristic of the ground field: 0 or a prime."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p != 0 and not _is_prime(p)):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")

    @property
    def is_zero(self) -> bool:
        return self.characteristic == 0


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class DegreeSpec:
    """The tuple (n, t, c, b, a) defining W(b;a) in P^n.

    The matrix is t x (t+c-1) with entry (i, j) of degree a_j - b_i.
    Build instances through :func:`validate`.
    """

    n: int
    t: int
    c: int
    b: tuple[int, ...]
    a: tuple[int, ...]

    def bi(self, i: int) -> int:
        """b_i with the 1-based index used in the literature."""
        if not 1 <= i <= self.t:
            raise IndexError(f"b index {i} outside 1..{self.t}")
        return self.b[i - 1]

    @property
    def columns(self) -> int:
        return self.t + self.c - 1

    def key(self) -> str:
        """Canonical string key, e.g. ``n3_t2_c2_b0,0_a1,1,1``."""
        return (
            f"n{self.n}_t{self.t}_c{self.c}"
            f"_b{','.join(map(str, self.b))}_a{','.join(map(str, self.a))}"
        )

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "t": self.t, "c": self.c, "b": list(self.b), "a": list(self.a)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "DegreeSpec":
        return validate(d["n"], d["t"], d["c"], d["b"], d["a"])

    @classmethod
    def from_json(cls, text: str) -> "DegreeSpec":
        return cls.from_dict(json.loads(text))


def validate(n: int, t: int, c: int, b: Sequence[int], a: Sequence[int]) -> DegreeSpec:
    """Check raw degree data and return a :class:`DegreeSpec`.

    Vectors are never re-sorted; unsorted input is an error.
    """
    n, t, c = int(n), int(t), int(c)
    b = tuple(int(x) for x in b)
    a = tuple(int(x) for x in a)
    if n < 1:
        raise BadAmbient(f"ambient dimension n must be >= 1, got {n}")
    if t < 2 or c < 2:
        raise TrivialCase(
            f"need t >= 2 and c >= 2 (t=1 gives complete intersections), got t={t}, c={c}"
        )
    if len(b) != t:
        raise BadLength(f"b must have t={t} entries, got {len(b)}")
    if len(a) != t + c - 1:
        raise BadLength(f"a must have t+c-1={t + c - 1} entries, got {len(a)}")
    if any(x > y for x, y in zip(b, b[1:])):
        raise UnsortedInput(f"b must be weakly increasing, got {list(b)}")
    if any(x > y for x, y in zip(a, a[1:])):
        raise UnsortedInput(f"a must be weakly increasing, got {list(a)}")
    return DegreeSpec(n, t, c, b, a)


def is_nonempty(s: DegreeSpec) -> bool:
    """W(b;a) != empty iff a_{i-1} >= b_i for all i and a_{i-1} > b_i for some i."""
    pairs = [(s.a[i - 1], s.bi(i)) for i in range(1, s.t + 1)]
    return all(x >= y for x, y in pairs) and any(x > y for x, y in pairs)


def has_degenerate_entries(s: DegreeSpec) -> bool:
    """True when some a_j == b_i, so a matrix may carry constant entries."""
    return any(aj == bi for aj in s.a for bi in s.b)


def sing_codim_bound(s: DegreeSpec, alpha: int, j: int) -> int:
    """Lower bound min(2*alpha - 1, j + 2) on codim_{X_j} Sing(X_j) for general X.

    Requires a_{i-m} - b_i >= 0 for m <= i <= t, where m = min(alpha, t);
    raises :class:`NotApplicable` otherwise.
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if not 2 <= j <= s.c:
        raise ValueError(f"j must lie in 2..{s.c}")
    m = min(alpha, s.t)
    for i in range(m, s.t + 1):
        if s.a[i - m] - s.bi(i) < 0:
            raise NotApplicable(f"a_{i - m} - b_{i} = {s.a[i - m] - s.bi(i)} < 0")
    return min(2 * alpha - 1, j + 2)
