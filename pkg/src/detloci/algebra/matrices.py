"""Homogeneous polynomial matrices: generic and explicit constructions, minors,
column-deletion flags, and the plain-text matrix format."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..degrees import DegreeSpec, is_nonempty
from ..errors import EmptyFamily, HypothesisViolated, ShapeError
from .ideal import Ideal
from .ring import DEFAULT_PRIME, PolyRing, SparsePoly, random_form


@dataclass(frozen=True)
class DegMatrix:
    """A grid of homogeneous entries with row degrees ``b`` and column degrees ``a``.

    Entry (i, j) is zero or homogeneous of degree a[j] - b[i].  ``spec`` is the
    owning DegreeSpec when the grid is a t x (t+c-1) determinantal matrix.
    """

    ring: PolyRing
    rows: tuple[tuple[SparsePoly, ...], ...]
    b: tuple[int, ...]
    a: tuple[int, ...]
    spec: DegreeSpec | None = None

    def __post_init__(self):
        if len(self.rows) != len(self.b) or any(len(r) != len(self.a) for r in self.rows):
            raise ShapeError("entry grid does not match the degree vectors")
        for i, row in enumerate(self.rows):
            for j, f in enumerate(row):
                if f.is_zero():
                    continue
                if not f.is_homogeneous() or f.degree != self.a[j] - self.b[i]:
                    raise ShapeError(
                        f"entry ({i},{j}) = {f} should be homogeneous of degree {self.a[j] - self.b[i]}"
                    )

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.b), len(self.a)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def columns(self, cols: Sequence[int]) -> "DegMatrix":
        """Submatrix on the given columns (in the given order)."""
        return DegMatrix(self.ring, tuple(tuple(r[j] for j in cols) for r in self.rows),
                         self.b, tuple(self.a[j] for j in cols))

    def first_columns(self, k: int) -> "DegMatrix":
        return self.columns(range(k))

    def first_rows(self, k: int) -> "DegMatrix":
        return DegMatrix(self.ring, self.rows[:k], self.b[:k], self.a)

    # -- text format ---------------------------------------------------------
    def to_text(self) -> str:
        """Header ``t q p_char`` then one comma-separated line per row."""
        t, q = self.shape
        lines = [f"{t} {q} {self.ring.p}"]
        lines += [", ".join(str(f) for f in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, nvars: int, b: Sequence[int] | None = None,
                  a: Sequence[int] | None = None) -> "DegMatrix":
        """Parse :meth:`to_text` output; degrees are inferred when not given."""
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        t, q, p = (int(x) for x in lines[0].split())
        ring = PolyRing(nvars, p)
        rows = []
        for ln in lines[1:]:
            cells = [ring.parse(x) for x in ln.split(",")]
            if len(cells) != q:
                raise ShapeError(f"expected {q} entries per row, got {len(cells)}")
            rows.append(tuple(cells))
        if len(rows) != t:
            raise ShapeError(f"expected {t} rows, got {len(rows)}")
        if a is None or b is None:
            b, a = _infer_degrees(rows)
        return cls(ring, tuple(rows), tuple(b), tuple(a))


def _infer_degrees(rows) -> tuple[list[int], list[int]]:
    """Choose b, a with entry degrees a_j - b_i from the nonzero entries (b_1 = 0)."""
    t, q = len(rows), len(rows[0])
    b: list[int | None] = [None] * t
    a: list[int | None] = [None] * q
    b[0] = 0
    changed = True
    while changed:
        changed = False
        for i in range(t):
            for j in range(q):
                f = rows[i][j]
                if f.is_zero():
                    continue
                if b[i] is not None and a[j] is None:
                    a[j] = f.degree + b[i]
                    changed = True
                elif a[j] is not None and b[i] is None:
                    b[i] = a[j] - f.degree
                    changed = True
    if any(x is None for x in a + b):
        raise ShapeError("cannot infer degrees: matrix has an all-zero row/column block")
    return b, a


def _ring_for(s: DegreeSpec, field: int) -> PolyRing:
    return PolyRing(s.n + 1, field)


def random_matrix(ring: PolyRing, b: Sequence[int], a: Sequence[int], rng) -> DegMatrix:
    """General homogeneous matrix: entry (i, j) a dense random form of degree a_j - b_i."""
    rows = tuple(tuple(random_form(ring, aj - bi, rng) for aj in a) for bi in b)
    return DegMatrix(ring, rows, tuple(b), tuple(a))


def build_generic_matrix(s: DegreeSpec, field: int = DEFAULT_PRIME, seed: int = 0) -> DegMatrix:
    """Random t x (t+c-1) matrix with the given degrees; deterministic for a fixed seed."""
    ring = _ring_for(s, field)
    m = random_matrix(ring, s.b, s.a, random.Random(seed))
    return DegMatrix(ring, m.rows, m.b, m.a, s)


def _band_block(ring: PolyRing, b: Sequence[int], a: Sequence[int]) -> list[list[SparsePoly]]:
    """Staircase matrix with entry (r, j) = x_{j-r}^{a_j - b_r} for 0 <= j-r < c, else 0.

    If x_k is the first nonzero variable, row r's first nonzero entry sits in
    column r + k, so the rank drops only at x_0 = ... = x_{c-1} = 0: the
    maximal minors cut out a codimension c locus.
    """
    t, q = len(b), len(a)
    c = q - t + 1
    rows = []
    for r in range(t):
        row = []
        for j in range(q):
            k = j - r
            if 0 <= k < c:
                e = a[j] - b[r]
                if e < 1:
                    raise HypothesisViolated(f"staircase entry ({r},{j}) would have degree {e}")
                exps = [0] * ring.nvars
                exps[k] = e
                row.append(ring.monomial(exps))
            else:
                row.append(ring.zero())
        rows.append(row)
    return rows


def build_block_matrix(s: DegreeSpec, field: int = DEFAULT_PRIME) -> DegMatrix:
    """Witness matrix for non-emptiness: a unit block plus a staircase block.

    Every row i with a_{i-1} = b_i gets the constant 1 in column i-1 and zeros
    elsewhere in that row and column; the remaining rows and columns carry the
    staircase matrix of :func:`_band_block` (a regular sequence when one row is
    left).  Its maximal minors equal those of the staircase block.
    """
    if not is_nonempty(s):
        raise EmptyFamily(f"W(b;a) is empty for {s.key()}")
    if s.n + 1 < s.c:
        raise ShapeError(f"need n + 1 >= c variables, got n={s.n}, c={s.c}")
    ring = _ring_for(s, field)
    unit_rows = [i for i in range(s.t) if s.a[i] == s.b[i]]  # 0-based: a_{i-1} = b_i
    unit_cols = set(unit_rows)
    rest_rows = [i for i in range(s.t) if i not in unit_cols]
    rest_cols = [j for j in range(s.columns) if j not in unit_cols]
    band = _band_block(ring, [s.b[i] for i in rest_rows], [s.a[j] for j in rest_cols])
    grid = [[ring.zero() for _ in range(s.columns)] for _ in range(s.t)]
    for i in unit_rows:
        grid[i][i] = ring.one()
    for r, i in enumerate(rest_rows):
        for k, j in enumerate(rest_cols):
            grid[i][j] = band[r][k]
    return DegMatrix(ring, tuple(tuple(r) for r in grid), s.b, s.a, s)


def build_staggered_matrix(s: DegreeSpec, field: int = DEFAULT_PRIME) -> DegMatrix:
    """Monomial 2 x (c+1) matrix [C, D] for checking the mixed-sum dimension formula.

    C = [[x0^(a0-b1), x1^(a1-b1)], [x2^(a0-b2), x3^(a1-b2)]] and D is the
    staggered 2 x (c-1) block with column j (2 <= j <= c) equal to
    (x_{j+2}^(a_j-b1), x_{j+1}^(a_j-b2)), where x_{c+2} in the top row and
    x_3 in the bottom row are replaced by 0.  Columns 2..c-1 of D involve only
    x4..x_{c+1}, and the first c columns define a codimension c-1 scheme.
    """
    if s.t != 2:
        raise ShapeError("the staggered construction needs t = 2")
    if s.c < 3:
        raise ShapeError("the staggered construction needs c >= 3")
    if s.n < s.c + 1:
        raise ShapeError(f"needs variables x0..x{s.c + 1}, i.e. n >= c + 1")
    b1, b2 = s.b
    if s.a[0] <= b2:
        raise HypothesisViolated("needs a_0 > b_2 so that every exponent is positive")
    ring = _ring_for(s, field)

    def power(var, e):
        exps = [0] * ring.nvars
        exps[var] = e
        return ring.monomial(exps)

    a = s.a
    top = [power(0, a[0] - b1), power(1, a[1] - b1)]
    bottom = [power(2, a[0] - b2), power(3, a[1] - b2)]
    for j in range(2, s.c + 1):
        top.append(power(j + 2, a[j] - b1) if j < s.c else ring.zero())
        bottom.append(power(j + 1, a[j] - b2) if j > 2 else ring.zero())
    return DegMatrix(ring, (tuple(top), tuple(bottom)), s.b, s.a, s)


class MinorCache:
    """Laplace-expanded minors memoized on (row set, column set)."""

    def __init__(self, M: DegMatrix):
        self.M = M
        self._memo: dict[tuple[tuple[int, ...], tuple[int, ...]], SparsePoly] = {}

    def minor(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> SparsePoly:
        key = (rows, cols)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        M = self.M
        if len(rows) == 1:
            val = M[rows[0], cols[0]]
        else:
            val = M.ring.zero()
            r0, rest = rows[0], rows[1:]
            for idx, j in enumerate(cols):
                f = M[r0, j]
                if f.is_zero():
                    continue
                sub = self.minor(rest, cols[:idx] + cols[idx + 1:])
                if sub.is_zero():
                    continue
                term = f * sub
                val = val - term if idx % 2 else val + term
        self._memo[key] = val
        return val


def minors(M: DegMatrix, size: int, rows: Sequence[int] | None = None,
           cols: Sequence[int] | None = None, cache: MinorCache | None = None) -> list[SparsePoly]:
    """All size x size minors of the selected rows and columns (zero minors included)."""
    rows = tuple(range(M.shape[0])) if rows is None else tuple(rows)
    cols = tuple(range(M.shape[1])) if cols is None else tuple(cols)
    if size < 1 or size > min(len(rows), len(cols)):
        return []
    cache = cache or MinorCache(M)
    return [cache.minor(R, C) for R in combinations(rows, size) for C in combinations(cols, size)]


def maximal_minors(M: DegMatrix, size: int | None = None, cols: Sequence[int] | None = None) -> Ideal:
    """Ideal of the size x size minors (default: the number of rows) of the chosen columns."""
    t = M.shape[0]
    size = t if size is None else size
    if size > t:
        raise ShapeError(f"minor size {size} exceeds row count {t}")
    return Ideal(M.ring, minors(M, size, cols=cols))


def minor_ideal(M: DegMatrix, size: int, rows=None, cols=None) -> Ideal:
    return Ideal(M.ring, minors(M, size, rows=rows, cols=cols))


def flag_by_column_deletion(M: DegMatrix) -> list[Ideal]:
    """Ideals I_{D_1}, ..., I_{D_c}: maximal minors of the first t, t+1, ..., t+c-1 columns."""
    t, q = M.shape
    if q < t:
        raise ShapeError("need at least as many columns as rows")
    cache = MinorCache(M)
    return [Ideal(M.ring, minors(M, t, cols=range(k), cache=cache)) for k in range(t, q + 1)]
