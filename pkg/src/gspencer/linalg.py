"""Exact dense linear algebra over the rationals.

Everything here is built on arbitrary-precision rationals, so ranks, kernels
and complements are exact.  All tie-breaking is fixed (leftmost pivot column,
topmost eligible row, greedy complements in basis order), which makes every
result bit-reproducible across runs and platforms.

Row reduction internally clears denominators and works on integer rows with
gcd normalization; only the final normalization reintroduces fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class InputError(ValueError):
    """Invalid argument (dimension mismatch, containment violation, ...)."""


# ---------------------------------------------------------------------------
# vectors: plain tuples of Fraction
# ---------------------------------------------------------------------------

def vec(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def vzero(n: int) -> tuple[Fraction, ...]:
    return (ZERO,) * n


def vadd(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c: Fraction, a: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(c * x for x in a)


def is_zero_vec(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


# ---------------------------------------------------------------------------
# integer row reduction engine
# ---------------------------------------------------------------------------

def _clear_row(row: Sequence[Fraction]) -> list[int]:
    den = 1
    for x in row:
        d = x.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    if den == 1:
        return [x.numerator for x in row]
    return [int(x * den) for x in row]


def _normalize_int_row(row: list[int]) -> None:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        for j, v in enumerate(row):
            if v:
                row[j] = v // g


def _int_row_reduce(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Gauss-Jordan over integer rows.  Returns (reduced rows, pivot columns).

    Pivot choice: leftmost column, topmost eligible row.  After the call,
    pivot rows are in order and every pivot column is zero elsewhere; pivot
    entries are not normalized to 1 (callers divide when converting back).
    """
    nrows = len(rows)
    pivots: list[int] = []
    pr = 0
    for c in range(ncols):
        sel = -1
        for i in range(pr, nrows):
            if rows[i][c]:
                sel = i
                break
        if sel < 0:
            continue
        if sel != pr:
            rows[pr], rows[sel] = rows[sel], rows[pr]
        piv = rows[pr]
        pv = piv[c]
        for i in range(nrows):
            if i == pr:
                continue
            ri = rows[i]
            a = ri[c]
            if a:
                # piv has zeros strictly before c, so the head is only scaled
                for j in range(c):
                    if ri[j]:
                        ri[j] = ri[j] * pv
                for j in range(c, ncols):
                    ri[j] = ri[j] * pv - piv[j] * a
                _normalize_int_row(ri)
        pivots.append(c)
        pr += 1
        if pr == nrows:
            break
    return rows[:pr], pivots


def _rref_rows(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[tuple[Fraction, ...]], list[int]]:
    """Reduced row echelon form of the given rows (zero rows dropped)."""
    int_rows = [_clear_row(r) for r in rows]
    red, pivots = _int_row_reduce(int_rows, ncols)
    out = []
    for row, c in zip(red, pivots):
        pv = row[c]
        out.append(tuple(Fraction(v, pv) for v in row))
    return out, pivots


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class RMatrix:
    """Dense matrix of rationals with dimensions fixed at construction."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence], rows: int | None = None, cols: int | None = None):
        grid = tuple(tuple(Fraction(x) for x in row) for row in data)
        if rows is None:
            rows = len(grid)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise InputError("ragged or mismatched matrix data")
        self.rows = rows
        self.cols = cols
        self.data = grid

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RMatrix":
        return cls(((ZERO,) * cols,) * rows, rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence[Fraction]], nrows: int) -> "RMatrix":
        if not cols:
            return cls.zeros(nrows, 0)
        return cls(tuple(tuple(col[i] for col in cols) for i in range(nrows)), nrows, len(cols))

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> "RMatrix":
        return RMatrix(tuple(zip(*self.data)) if self.data else (), self.cols, self.rows)

    def mat_vec(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise InputError("dimension mismatch in mat_vec")
        out = []
        for row in self.data:
            s = ZERO
            for a, b in zip(row, v):
                if a and b:
                    s += a * b
            out.append(s)
        return tuple(out)

    def mat_mul(self, other: "RMatrix") -> "RMatrix":
        if self.cols != other.rows:
            raise InputError("dimension mismatch in mat_mul")
        ot = other.transpose().data
        return RMatrix(
            tuple(tuple(sum((a * b for a, b in zip(row, col) if a and b), ZERO) for col in ot)
                  for row in self.data),
            self.rows, other.cols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RMatrix) and self.data == other.data \
            and self.rows == other.rows and self.cols == other.cols

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"RMatrix({self.rows}x{self.cols})"


def rref(m: RMatrix) -> RMatrix:
    """Reduced row echelon form (deterministic, zero rows kept at bottom)."""
    red, _ = _rref_rows(m.data, m.cols)
    pad = [vzero(m.cols)] * (m.rows - len(red))
    return RMatrix(list(red) + pad, m.rows, m.cols)


def rank(m: RMatrix) -> int:
    _, pivots = _rref_rows(m.data, m.cols)
    return len(pivots)


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A linear subspace of Q^n held as a reduced column-echelon basis.

    The canonical form makes equality of subspaces a direct comparison and
    pins down every downstream choice (complements, coset representatives).
    ``pivot_rows`` are strictly increasing; basis column ``b`` has entry 1 at
    ``pivot_rows[b]`` and 0 at every other pivot row.
    """

    __slots__ = ("ambient_dim", "basis", "pivot_rows")

    def __init__(self, ambient_dim: int, basis: RMatrix, pivot_rows: tuple[int, ...]):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivot_rows = pivot_rows

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence[Fraction]]) -> "Subspace":
        vs = [tuple(Fraction(x) for x in v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise InputError("vector length does not match ambient dimension")
        red, pivots = _rref_rows(vs, ambient_dim)
        return cls(ambient_dim, RMatrix.from_cols(red, ambient_dim), tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RMatrix.zeros(ambient_dim, 0), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RMatrix.identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def basis_vectors(self) -> list[tuple[Fraction, ...]]:
        return self.basis.columns()

    def reduce(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Canonical coset representative of v modulo this subspace.

        Subtracts basis columns so the result vanishes on all pivot rows.
        """
        if len(v) != self.ambient_dim:
            raise InputError("vector length does not match ambient dimension")
        r = list(v)
        for b, prow in enumerate(self.pivot_rows):
            c = r[prow]
            if c:
                col = self.basis.col(b)
                for i in range(self.ambient_dim):
                    if col[i]:
                        r[i] -= c * col[i]
        return tuple(r)

    def coordinates(self, v: Sequence[Fraction]) -> Optional[tuple[Fraction, ...]]:
        """Coordinates of v in the echelon basis, or None if v is outside."""
        if len(v) != self.ambient_dim:
            raise InputError("vector length does not match ambient dimension")
        coords = [v[prow] for prow in self.pivot_rows]
        residual = list(v)
        for c, b in zip(coords, range(self.dim)):
            if c:
                col = self.basis.col(b)
                for i in range(self.ambient_dim):
                    if col[i]:
                        residual[i] -= c * col[i]
        if any(residual):
            return None
        return tuple(coords)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return is_zero_vec(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(c) for c in other.basis_vectors())

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.pivot_rows == other.pivot_rows
                and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.pivot_rows, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def membership(v: Sequence[Fraction], s: Subspace) -> bool:
    return s.contains(v)


def kernel_basis(m: RMatrix) -> Subspace:
    """Null space of m; dimension is cols(m) - rank(m)."""
    red, pivots = _rref_rows(m.data, m.cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][f]
        vectors.append(tuple(v))
    return Subspace.from_vectors(m.cols, vectors)


def kernel_of_rows(rows: Sequence[Sequence[Fraction]], ncols: int) -> Subspace:
    """Kernel of the linear map given by raw rows (avoids building an RMatrix)."""
    red, pivots = _rref_rows(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][f]
        vectors.append(tuple(v))
    return Subspace.from_vectors(ncols, vectors)


def rank_of_rows(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    _, pivots = _rref_rows(rows, ncols)
    return len(pivots)


def solve_linear(m: RMatrix, b: Sequence[Fraction]) -> Optional[tuple[tuple[Fraction, ...], Subspace]]:
    """One exact solution of m·x = b plus the kernel, or None if inconsistent.

    The particular solution sets all free variables to zero.
    """
    if len(b) != m.rows:
        raise InputError("right-hand side length does not match row count")
    aug = [tuple(row) + (bi,) for row, bi in zip(m.data, b)]
    red, pivots = _rref_rows(aug, m.cols + 1)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = red[i][m.cols]
    return tuple(x), kernel_basis(m)


def solve_particular(rows: Sequence[Sequence[Fraction]], ncols: int,
                     b: Sequence[Fraction]) -> Optional[tuple[Fraction, ...]]:
    """Deterministic particular solution of rows·x = b, free variables zero."""
    aug = [tuple(row) + (bi,) for row, bi in zip(rows, b)]
    red, pivots = _rref_rows(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = red[i][ncols]
    return tuple(x)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise InputError("ambient dimensions differ")
    return Subspace.from_vectors(a.ambient_dim, a.basis_vectors() + b.basis_vectors())


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Exact intersection, via the kernel of [A | -B]."""
    if a.ambient_dim != b.ambient_dim:
        raise InputError("ambient dimensions differ")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    acols = a.basis_vectors()
    bcols = b.basis_vectors()
    rows = [tuple(acols[j][i] for j in range(a.dim)) + tuple(-bcols[j][i] for j in range(b.dim))
            for i in range(a.ambient_dim)]
    ker = kernel_of_rows(rows, a.dim + b.dim)
    vectors = []
    for kv in ker.basis_vectors():
        v = [ZERO] * a.ambient_dim
        for j in range(a.dim):
            if kv[j]:
                col = acols[j]
                for i in range(a.ambient_dim):
                    if col[i]:
                        v[i] += kv[j] * col[i]
        vectors.append(tuple(v))
    return Subspace.from_vectors(a.ambient_dim, vectors)


class _IncrementalSpan:
    """Row-echelon accumulator for independence tests in fixed scan order."""

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.rows: list[tuple[Fraction, ...]] = []
        self.pivot_of_row: list[int] = []

    def try_add(self, v: Sequence[Fraction]) -> bool:
        r = list(v)
        for row, p in zip(self.rows, self.pivot_of_row):
            c = r[p]
            if c:
                for i in range(p, self.ambient_dim):
                    if row[i]:
                        r[i] -= c * row[i]
        for p in range(self.ambient_dim):
            if r[p]:
                inv = ONE / r[p]
                self.rows.append(tuple(x * inv for x in r))
                self.pivot_of_row.append(p)
                return True
        return False


def deterministic_complement(s: Subspace, superspace: Subspace) -> Subspace:
    """Greedy complement of s inside superspace.

    Scans the superspace's echelon basis in order, keeping each vector that is
    independent of the running span.  The result is reproducible and satisfies
    complement + s = superspace with zero intersection.
    """
    if s.ambient_dim != superspace.ambient_dim:
        raise InputError("ambient dimensions differ")
    if not superspace.contains_subspace(s):
        raise InputError("first subspace is not contained in the second")
    span = _IncrementalSpan(s.ambient_dim)
    for v in s.basis_vectors():
        span.try_add(v)
    kept = []
    for v in superspace.basis_vectors():
        if span.try_add(v):
            kept.append(v)
    return Subspace.from_vectors(s.ambient_dim, kept)
