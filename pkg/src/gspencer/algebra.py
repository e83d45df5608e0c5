"""Graded and quasi-graded Lie algebras given by structure constants.

An algebra of height k decomposes as the sum of components of degrees
-1, 0, ..., k-1.  For the graded kind every bracket respects degrees; the
quasi-graded kind waives the rule only for pairs of degree-(-1) elements.
Structure constants are stored sparsely for i < j only; antisymmetry is
synthesized on access.

Elements are plain tuples of Fraction over the full basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InputError
from .linalg import Subspace, ZERO, kernel_of_rows

SparseVec = dict[int, Fraction]


class GradedLieAlgebra:
    """A (quasi-)graded Lie algebra of depth 1 presented by structure constants.

    ``truncated_at`` marks algebras that are finite truncations of an infinite
    prolongation: brackets that would land above that degree are stored as
    zero, and the diagnostic reports skip checks they cannot decide.
    """

    __slots__ = ("name", "names", "degrees", "height", "grading_kind",
                 "truncated_at", "_table", "_component_cache", "_index_in_component")

    def __init__(self, name: str, names: Sequence[str], degrees: Sequence[int],
                 height: int, table: Mapping[tuple[int, int], Mapping[int, Fraction]],
                 grading_kind: str = "graded", truncated_at: int | None = None):
        if grading_kind not in ("graded", "quasi_graded"):
            raise InputError(f"unknown grading kind {grading_kind!r}")
        if height < 1:
            raise InputError("height must be at least 1")
        if len(names) != len(degrees):
            raise InputError("names and degrees must have equal length")
        if len(set(names)) != len(names):
            raise InputError("duplicate basis name")
        n = len(names)
        for d in degrees:
            if d < -1 or d > height - 1:
                raise InputError(f"degree {d} outside -1..{height - 1}")
        clean: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), coeffs in table.items():
            if not (0 <= i < n and 0 <= j < n):
                raise InputError("structure constant index out of range")
            if i >= j:
                raise InputError("structure constants must be keyed with i < j")
            entry = {t: Fraction(c) for t, c in coeffs.items() if c}
            for t in entry:
                if not 0 <= t < n:
                    raise InputError("structure constant target out of range")
            if entry:
                clean[(i, j)] = entry
        self.name = name
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.height = height
        self.grading_kind = grading_kind
        self.truncated_at = truncated_at
        self._table = clean
        self._component_cache: dict[int, tuple[int, ...]] = {}
        self._index_in_component = {}
        for d in range(-1, height):
            idxs = tuple(i for i, deg in enumerate(degrees) if deg == d)
            self._component_cache[d] = idxs
            for pos, i in enumerate(idxs):
                self._index_in_component[i] = pos

    # -- basic structure ----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.names)

    def component_indices(self, d: int) -> tuple[int, ...]:
        return self._component_cache.get(d, ())

    def component_dim(self, d: int) -> int:
        return len(self.component_indices(d))

    def degree_of(self, i: int) -> int:
        return self.degrees[i]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown basis element {name!r}") from None

    def bracket_basis(self, i: int, j: int) -> SparseVec:
        if i == j:
            return {}
        if i < j:
            return self._table.get((i, j), {})
        return {t: -c for t, c in self._table.get((j, i), {}).items()}

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Bilinear extension of the structure constants; exactly antisymmetric."""
        acc: SparseVec = {}
        xs = [(i, c) for i, c in enumerate(x) if c]
        ys = [(j, c) for j, c in enumerate(y) if c]
        for i, xi in xs:
            for j, yj in ys:
                if i == j:
                    continue
                for t, c in self.bracket_basis(i, j).items():
                    acc[t] = acc.get(t, ZERO) + xi * yj * c
        out = [ZERO] * self.dim
        for t, c in acc.items():
            out[t] = c
        return tuple(out)

    # -- coordinates --------------------------------------------------------

    def component_part(self, x: Sequence[Fraction], d: int) -> tuple[Fraction, ...]:
        """Coordinates of x restricted to the degree-d component basis."""
        return tuple(x[i] for i in self.component_indices(d))

    def embed_component(self, d: int, comp: Sequence[Fraction]) -> tuple[Fraction, ...]:
        idxs = self.component_indices(d)
        if len(comp) != len(idxs):
            raise InputError("component vector has wrong length")
        out = [ZERO] * self.dim
        for pos, i in enumerate(idxs):
            out[i] = Fraction(comp[pos])
        return tuple(out)

    def basis_element(self, i: int) -> tuple[Fraction, ...]:
        out = [ZERO] * self.dim
        out[i] = Fraction(1)
        return tuple(out)

    def project_degree(self, x: Sequence[Fraction], p: int) -> tuple[Fraction, ...]:
        """Zero out all coefficients of basis elements of degree != p."""
        if p < -1 or p > self.height - 1:
            raise InputError(f"degree {p} outside -1..{self.height - 1}")
        return tuple(c if self.degrees[i] == p else ZERO for i, c in enumerate(x))

    def max_represented_degree(self) -> int:
        return self.height - 1 if self.truncated_at is None else self.truncated_at

    def __repr__(self) -> str:
        return f"GradedLieAlgebra({self.name!r}, dim={self.dim}, height={self.height})"


def project_degree(a: GradedLieAlgebra, x: Sequence[Fraction], p: int) -> tuple[Fraction, ...]:
    return a.project_degree(x, p)


def bracket(a: GradedLieAlgebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return a.bracket(x, y)


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple[int, int, int]
    names: tuple[str, str, str]
    residual: tuple[Fraction, ...]


@dataclass(frozen=True)
class GradingViolation:
    pair: tuple[int, int]
    names: tuple[str, str]
    expected_degree: int
    stray: tuple[Fraction, ...]


def _sparse_bracket_sparse(a: GradedLieAlgebra, x: SparseVec, y: SparseVec) -> SparseVec:
    acc: SparseVec = {}
    for i, xi in x.items():
        for j, yj in y.items():
            if i == j:
                continue
            for t, c in a.bracket_basis(i, j).items():
                v = acc.get(t, ZERO) + xi * yj * c
                if v:
                    acc[t] = v
                else:
                    acc.pop(t, None)
    return acc


def jacobi_report(a: GradedLieAlgebra) -> list[JacobiViolation]:
    """Exhaustive Jacobi check on basis triples; empty list means pass.

    For truncated algebras, triples whose evaluation needs a bracket landing
    above the truncation degree are skipped (they are not decidable from the
    stored constants).
    """
    out: list[JacobiViolation] = []
    top = a.max_represented_degree()
    truncated = a.truncated_at is not None
    n = a.dim
    deg = a.degrees
    for i in range(n):
        for j in range(i + 1, n):
            bij = a.bracket_basis(i, j)
            for k in range(j + 1, n):
                if truncated and (deg[i] + deg[j] > top or deg[j] + deg[k] > top
                                  or deg[i] + deg[k] > top
                                  or deg[i] + deg[j] + deg[k] > top):
                    continue
                acc: SparseVec = {}
                for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                    byz = bij if (y, z) == (i, j) else a.bracket_basis(y, z)
                    for t, c in _sparse_bracket_sparse(a, {x: Fraction(1)}, byz).items():
                        v = acc.get(t, ZERO) + c
                        if v:
                            acc[t] = v
                        else:
                            acc.pop(t, None)
                if acc:
                    res = [ZERO] * n
                    for t, c in acc.items():
                        res[t] = c
                    out.append(JacobiViolation((i, j, k), (a.names[i], a.names[j], a.names[k]),
                                               tuple(res)))
    return out


def grading_report(a: GradedLieAlgebra) -> list[GradingViolation]:
    """Check the declared grading rule pair by pair; empty list means pass."""
    out: list[GradingViolation] = []
    top = a.max_represented_degree()
    truncated = a.truncated_at is not None
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            di, dj = a.degrees[i], a.degrees[j]
            if a.grading_kind == "quasi_graded" and di == -1 and dj == -1:
                continue
            d = di + dj
            if truncated and d > top:
                continue
            br = a.bracket_basis(i, j)
            stray = {t: c for t, c in br.items() if a.degrees[t] != d}
            if d < -1 or d > a.height - 1:
                stray = dict(br)
            if stray:
                res = [ZERO] * a.dim
                for t, c in stray.items():
                    res[t] = c
                out.append(GradingViolation((i, j), (a.names[i], a.names[j]), d, tuple(res)))
    return out


def effectiveness_report(a: GradedLieAlgebra) -> list[str]:
    """Flag nonzero X of degree >= 0 with [X, h^{-1}] = 0 (not an error)."""
    v_idx = a.component_indices(-1)
    flags = []
    for d in range(0, a.max_represented_degree() + 1):
        idxs = a.component_indices(d)
        if not idxs:
            continue
        rows = []
        for vi in v_idx:
            for out_i in range(a.dim):
                row = [a.bracket_basis(i, vi).get(out_i, ZERO) for i in idxs]
                if any(row):
                    rows.append(tuple(row))
        ker = kernel_of_rows(rows, len(idxs)) if rows else Subspace.full(len(idxs))
        if ker.dim:
            flags.append(f"degree {d}: {ker.dim}-dimensional subspace acts trivially on the "
                         f"degree -1 component")
    return flags


def g_sharp_subalgebra(a: GradedLieAlgebra, w: Subspace) -> Subspace:
    """Basis of {X in h^0 : [X, W] subset of W}, computed as a kernel.

    W is a subspace of the degree-(-1) component (component coordinates);
    the result is a subspace of the degree-0 component.
    """
    v_idx = a.component_indices(-1)
    if w.ambient_dim != len(v_idx):
        raise InputError("W must live in the degree -1 component")
    h0_idx = a.component_indices(0)
    if not h0_idx:
        return Subspace.zero(0)
    # annihilator rows of W inside the degree -1 component
    w_ann = deterministic_rows_annihilating(w)
    rows = []
    for wv in w.basis_vectors():
        full_w = a.embed_component(-1, wv)
        cols = []
        for i in h0_idx:
            bx = a.bracket(a.basis_element(i), full_w)
            cols.append(a.component_part(bx, -1))
        for ann_row in w_ann:
            row = []
            for col in cols:
                s = ZERO
                for c1, c2 in zip(ann_row, col):
                    if c1 and c2:
                        s += c1 * c2
                row.append(s)
            if any(row):
                rows.append(tuple(row))
    return kernel_of_rows(rows, len(h0_idx))


def deterministic_rows_annihilating(s: Subspace) -> list[tuple[Fraction, ...]]:
    """Rows r with r·v = 0 exactly for v in s, spanning the full annihilator."""
    if s.dim == 0:
        return [tuple(Fraction(1) if i == j else ZERO for j in range(s.ambient_dim))
                for i in range(s.ambient_dim)]
    rows = [tuple(col) for col in s.basis.transpose().data]
    ker = kernel_of_rows(rows, s.ambient_dim)
    return [tuple(v) for v in ker.basis_vectors()]
