"""Generalized Spencer complexes over a graded Lie algebra and a subspace W.

The complex in bidegree (p, q) at level r has cochains valued in the
degree-(p-1) component modulo the level-r annihilator (the iterated-adjoint
kernel of W); for p = 0 the values live in the full degree-(-1) component.
The operator sends (p, q) to (p-1, q+1) by the alternating bracket sum.

Cochains store one canonical representative per strictly increasing index
tuple, reduced against the echelon basis of the annihilator, so equality of
cosets is plain equality of stored data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .algebra import GradedLieAlgebra, deterministic_rows_annihilating, g_sharp_subalgebra
from .errors import InputError, PreconditionError
from .linalg import (RMatrix, Subspace, ZERO, deterministic_complement, is_zero_vec,
                     kernel_of_rows, rank_of_rows, solve_particular, vadd, vscale,
                     vsub, vzero)


class WFrame:
    """An algebra together with a subspace W of its degree-(-1) component.

    This is the minimal context needed to evaluate constant forms and total
    curvatures; it admits quasi-graded algebras.  The Spencer machinery lives
    on the `SpencerComplex` subclass, which insists on an honest grading.
    """

    def __init__(self, algebra: GradedLieAlgebra, w: Subspace):
        n_v = algebra.component_dim(-1)
        if n_v == 0:
            raise InputError("algebra has an empty degree -1 component")
        if w.ambient_dim != n_v:
            raise InputError("W must be a subspace of the degree -1 component")
        if w.dim == 0:
            raise InputError("W must be nonzero")
        self.algebra = algebra
        self.w = w
        self.w_vectors = w.basis_vectors()
        self.n_w = w.dim
        self.w_full = [algebra.embed_component(-1, v) for v in self.w_vectors]

    def top_degree(self) -> int:
        return self.algebra.max_represented_degree()


class SpencerComplex(WFrame):
    """Spencer complex data: annihilator filtration, fixed complements, caches.

    Annihilators and their complements are computed eagerly at construction;
    operator matrices and cocycle/coboundary spaces are memoized on first use.
    """

    def __init__(self, algebra: GradedLieAlgebra, w: Subspace):
        super().__init__(algebra, w)
        if algebra.grading_kind != "graded":
            raise InputError("Spencer complexes require a graded algebra")
        top = self.top_degree()
        # adjoint matrices by W basis vectors, per component degree
        self._ad: dict[int, list[RMatrix]] = {}
        for d in range(0, top + 1):
            idxs = algebra.component_indices(d)
            mats = []
            for wf in self.w_full:
                cols = [algebra.component_part(algebra.bracket(algebra.basis_element(i), wf),
                                               d - 1) for i in idxs]
                mats.append(RMatrix.from_cols(cols, algebra.component_dim(d - 1)))
            self._ad[d] = mats
        # annihilator filtration c_r per component degree
        self._ann: dict[tuple[int, int], Subspace] = {}
        n_v = algebra.component_dim(-1)
        self._ann[(-1, 0)] = Subspace.zero(n_v)
        self._ann[(-1, 1)] = Subspace.full(n_v)
        for d in range(0, top + 1):
            nd = algebra.component_dim(d)
            self._ann[(d, 0)] = Subspace.zero(nd)
            for r in range(1, d + 3):
                below = self._annihilator_raw(d - 1, r - 1)
                ann_rows = deterministic_rows_annihilating(below)
                rows = []
                for mat in self._ad[d]:
                    for arow in ann_rows:
                        row = []
                        for j in range(nd):
                            s = ZERO
                            col = mat.col(j)
                            for c1, c2 in zip(arow, col):
                                if c1 and c2:
                                    s += c1 * c2
                            row.append(s)
                        if any(row):
                            rows.append(tuple(row))
                self._ann[(d, r)] = kernel_of_rows(rows, nd)
        # fixed complements c_s^perp between consecutive annihilators
        self._chain: dict[int, list[Subspace]] = {}
        for d in range(0, top + 1):
            self._chain[d] = [deterministic_complement(self._annihilator_raw(d, s),
                                                       self._annihilator_raw(d, s + 1))
                              for s in range(0, d + 2)]
        self._dmat: dict[tuple[int, int, int], list[tuple[Fraction, ...]]] = {}
        self._zb: dict[tuple[int, int, int], tuple[Subspace, Subspace]] = {}
        self._gsharp: Subspace | None = None

    # -- filtration ----------------------------------------------------------

    def _annihilator_raw(self, d: int, r: int) -> Subspace:
        if d == -1:
            return self._ann[(-1, 0)] if r == 0 else self._ann[(-1, 1)]
        if d > self.top_degree():
            # components above the represented range have dimension zero
            return Subspace.zero(self.algebra.component_dim(d))
        if r >= d + 2:
            r = d + 2
        return self._ann[(d, r)]

    def annihilator(self, p_deg: int, r: int) -> Subspace:
        """The level-r annihilator inside the degree-p_deg component."""
        if p_deg < 0 or p_deg > self.top_degree():
            raise InputError(f"degree {p_deg} is not a nonnegative degree of the algebra")
        if r < 0:
            raise InputError("level must be nonnegative")
        return self._annihilator_raw(p_deg, r)

    def complement_chain(self, p_deg: int) -> list[Subspace]:
        """The fixed complements c_s^perp, s = 0..p_deg+1, inside the component."""
        if p_deg < 0 or p_deg > self.top_degree():
            raise InputError(f"degree {p_deg} is not a nonnegative degree of the algebra")
        return list(self._chain[p_deg])

    def reduce_value(self, p: int, r: int, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Canonical representative of a degree-(p-1) value modulo c_r."""
        if p == 0 or r == 0:
            return tuple(vec)
        return self._annihilator_raw(p - 1, r).reduce(vec)

    def free_rows(self, p: int, r: int) -> tuple[int, ...]:
        """Component rows that parametrize the quotient by c_r (all rows for p = 0)."""
        nd = self.algebra.component_dim(p - 1)
        if p == 0 or r == 0:
            return tuple(range(nd))
        piv = set(self._annihilator_raw(p - 1, r).pivot_rows)
        return tuple(i for i in range(nd) if i not in piv)

    def g_sharp(self) -> Subspace:
        if self._gsharp is None:
            self._gsharp = g_sharp_subalgebra(self.algebra, self.w)
        return self._gsharp

    def _check_component_available(self, d: int) -> None:
        if d > self.top_degree() and d <= self.algebra.height - 1:
            raise InputError(
                f"component of degree {d} lies beyond the truncation order "
                f"{self.algebra.truncated_at}; result would not be trustworthy")


# ---------------------------------------------------------------------------
# cochains
# ---------------------------------------------------------------------------

def _parity_sort(idxs: Sequence[int]) -> tuple[tuple[int, ...], int]:
    lst = list(idxs)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    return tuple(lst), sign


class Cochain:
    """An element of the level-r Spencer space in bidegree (p, q).

    ``values`` maps strictly increasing q-tuples of W-basis indices to the
    canonical representative (component coordinates of degree p-1, reduced
    against the annihilator echelon basis).  Missing tuples are zero.
    """

    __slots__ = ("frame", "p", "q", "level", "values")

    def __init__(self, frame: WFrame, p: int, q: int, level: int,
                 values: Mapping[tuple[int, ...], Sequence[Fraction]]):
        if p < 0 or q < 0 or level < 0:
            raise InputError("p, q and level must be nonnegative")
        if level > 0 and not isinstance(frame, SpencerComplex):
            raise InputError("level > 0 cochains need a SpencerComplex")
        nd = frame.algebra.component_dim(p - 1)
        clean: dict[tuple[int, ...], tuple[Fraction, ...]] = {}
        for tup, vec in values.items():
            tup = tuple(tup)
            if len(tup) != q or any(not 0 <= t < frame.n_w for t in tup) \
                    or any(tup[i] >= tup[i + 1] for i in range(q - 1)):
                raise InputError(f"tuple {tup} is not strictly increasing in range")
            if len(vec) != nd:
                raise InputError("value vector has wrong component dimension")
            v = tuple(Fraction(c) for c in vec)
            if p >= 1 and level > 0:
                v = frame.reduce_value(p, level, v)
            if not is_zero_vec(v):
                clean[tup] = v
        self.frame = frame
        self.p = p
        self.q = q
        self.level = level
        self.values = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, frame: WFrame, p: int, q: int, level: int = 0) -> "Cochain":
        return cls(frame, p, q, level, {})

    # -- vector space operations ----------------------------------------------

    def _compatible(self, other: "Cochain") -> None:
        if self.frame is not other.frame or (self.p, self.q, self.level) != \
                (other.p, other.q, other.level):
            raise InputError("cochains live in different spaces")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        vals = dict(self.values)
        for tup, vec in other.values.items():
            vals[tup] = vadd(vals[tup], vec) if tup in vals else vec
        return Cochain(self.frame, self.p, self.q, self.level, vals)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "Cochain":
        c = Fraction(c)
        return Cochain(self.frame, self.p, self.q, self.level,
                       {t: vscale(c, v) for t, v in self.values.items()})

    def __neg__(self) -> "Cochain":
        return self.scale(Fraction(-1))

    def is_zero(self) -> bool:
        return not self.values

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Cochain) and self.frame is other.frame
                and (self.p, self.q, self.level) == (other.p, other.q, other.level)
                and self.values == other.values)

    def __hash__(self) -> int:
        return hash((id(self.frame), self.p, self.q, self.level,
                     tuple(sorted(self.values.items()))))

    def __repr__(self) -> str:
        return f"Cochain(p={self.p}, q={self.q}, level={self.level}, " \
               f"support={len(self.values)})"

    # -- evaluation -------------------------------------------------------------

    def value(self, tup: tuple[int, ...]) -> tuple[Fraction, ...]:
        nd = self.frame.algebra.component_dim(self.p - 1)
        return self.values.get(tuple(tup), vzero(nd))

    def value_at_indices(self, idxs: Sequence[int]) -> tuple[Fraction, ...]:
        """Evaluation on arbitrary basis indices, with alternation synthesized."""
        nd = self.frame.algebra.component_dim(self.p - 1)
        if len(set(idxs)) < len(idxs):
            return vzero(nd)
        tup, sign = _parity_sort(idxs)
        v = self.values.get(tup)
        if v is None:
            return vzero(nd)
        return v if sign == 1 else vscale(Fraction(-1), v)

    def evaluate(self, vectors: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
        """Multilinear alternating evaluation on W-coordinate vectors."""
        if len(vectors) != self.q:
            raise InputError("wrong number of arguments")
        nd = self.frame.algebra.component_dim(self.p - 1)
        out = list(vzero(nd))
        for tup, val in self.values.items():
            coeff = _minor_det([tuple(v) for v in vectors], tup)
            if coeff:
                for i, c in enumerate(val):
                    if c:
                        out[i] += coeff * c
        return tuple(out)

    def project_to_level(self, r: int) -> "Cochain":
        """Image under the natural projection onto the level-r complex."""
        return Cochain(self.frame, self.p, self.q, r, dict(self.values))


def _minor_det(vectors: list[tuple[Fraction, ...]], rows: tuple[int, ...]) -> Fraction:
    q = len(rows)
    if q == 0:
        return Fraction(1)
    if q == 1:
        return vectors[0][rows[0]]
    if q == 2:
        return (vectors[0][rows[0]] * vectors[1][rows[1]]
                - vectors[0][rows[1]] * vectors[1][rows[0]])
    from itertools import permutations
    s = ZERO
    for perm in permutations(range(q)):
        sign = 1
        seen = list(perm)
        for i in range(q):
            for j in range(i + 1, q):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Fraction(sign)
        for col, row_pos in enumerate(perm):
            term *= vectors[col][rows[row_pos]]
        s += term
    return s


# ---------------------------------------------------------------------------
# the operator
# ---------------------------------------------------------------------------

def spencer_d(x: Cochain) -> Cochain:
    """The generalized Spencer operator, (p, q) -> (p-1, q+1) at fixed level.

    For p = 0 the target space does not exist; the zero cochain in bidegree
    (0, q+1) is returned by convention.
    """
    c = x.frame
    if not isinstance(c, SpencerComplex):
        raise InputError("spencer_d needs a SpencerComplex")
    if x.p == 0:
        return Cochain.zero(c, 0, x.q + 1, x.level)
    if c.algebra.component_dim(x.p - 1) == 0:
        return Cochain.zero(c, x.p - 1, x.q + 1, x.level)
    d = x.p - 1
    ad = c._ad[d]
    out: dict[tuple[int, ...], tuple[Fraction, ...]] = {}
    for tup in combinations(range(c.n_w), x.q + 1):
        acc = None
        for pos, t in enumerate(tup):
            rest = tup[:pos] + tup[pos + 1:]
            val = x.values.get(rest)
            if val is None:
                continue
            term = ad[t].mat_vec(val)
            if pos % 2 == 0:  # (-1)^i with i = pos+1 one-based
                term = vscale(Fraction(-1), term)
            acc = term if acc is None else vadd(acc, term)
        if acc is not None and not is_zero_vec(acc):
            out[tup] = acc
    return Cochain(c, x.p - 1, x.q + 1, x.level, out)


# ---------------------------------------------------------------------------
# coordinates, operator matrices, cohomology
# ---------------------------------------------------------------------------

def space_dimension(c: SpencerComplex, p: int, q: int, r: int) -> int:
    from math import comb
    return len(c.free_rows(p, r)) * comb(c.n_w, q)


def cochain_to_coords(x: Cochain) -> tuple[Fraction, ...]:
    c = x.frame
    free = c.free_rows(x.p, x.level)
    coords = []
    for tup in combinations(range(c.n_w), x.q):
        val = x.values.get(tup)
        if val is None:
            coords.extend([ZERO] * len(free))
        else:
            coords.extend(val[i] for i in free)
    return tuple(coords)


def cochain_from_coords(c: SpencerComplex, p: int, q: int, r: int,
                        coords: Sequence[Fraction]) -> Cochain:
    free = c.free_rows(p, r)
    nd = c.algebra.component_dim(p - 1)
    vals = {}
    pos = 0
    for tup in combinations(range(c.n_w), q):
        vec = [ZERO] * nd
        for i in free:
            vec[i] = Fraction(coords[pos])
            pos += 1
        vals[tup] = tuple(vec)
    return Cochain(c, p, q, r, vals)


def _d_matrix_rows(c: SpencerComplex, p: int, q: int, r: int) -> list[tuple[Fraction, ...]]:
    """Rows of the operator matrix from (p,q) to (p-1,q+1), canonical bases."""
    key = (p, q, r)
    if key in c._dmat:
        return c._dmat[key]
    src_free = c.free_rows(p, r)
    src_tuples = list(combinations(range(c.n_w), q))
    tgt_free = c.free_rows(p - 1, r) if p >= 1 else ()
    tgt_tuples = list(combinations(range(c.n_w), q + 1))
    n_src = len(src_free) * len(src_tuples)
    n_tgt = len(tgt_free) * len(tgt_tuples)
    rows = [[ZERO] * n_src for _ in range(n_tgt)]
    if p >= 1 and n_src and n_tgt:
        d = p - 1
        ad = c._ad[d]
        tgt_rank = {tup: i for i, tup in enumerate(tgt_tuples)}
        for s_t, tup in enumerate(src_tuples):
            for s_f, frow in enumerate(src_free):
                col_idx = s_t * len(src_free) + s_f
                for t in range(c.n_w):
                    if t in tup:
                        continue
                    pos = 0
                    while pos < q and tup[pos] < t:
                        pos += 1
                    new_tup = tup[:pos] + (t,) + tup[pos:]
                    sign = -1 if pos % 2 == 0 else 1
                    vec = ad[t].col(frow)
                    if p - 1 >= 1:
                        vec = c.reduce_value(p - 1, r, vec)
                    base = tgt_rank[new_tup] * len(tgt_free)
                    for t_f, frow_t in enumerate(tgt_free):
                        v = vec[frow_t]
                        if v:
                            rows[base + t_f][col_idx] += sign * v
    out = [tuple(row) for row in rows]
    c._dmat[key] = out
    return out


def _zb_spaces(c: SpencerComplex, p: int, q: int, r: int) -> tuple[Subspace, Subspace]:
    """Cocycle and coboundary subspaces of C^{p,q} at level r, in coordinates."""
    key = (p, q, r)
    if key in c._zb:
        return c._zb[key]
    dim_c = space_dimension(c, p, q, r)
    rows = _d_matrix_rows(c, p, q, r)
    z = kernel_of_rows(rows, dim_c) if rows else Subspace.full(dim_c)
    if q == 0:
        b = Subspace.zero(dim_c)
    else:
        c._check_component_available(p)
        up_rows = _d_matrix_rows(c, p + 1, q - 1, r)
        n_up = space_dimension(c, p + 1, q - 1, r)
        cols = []
        for j in range(n_up):
            cols.append(tuple(up_rows[i][j] for i in range(dim_c)))
        b = Subspace.from_vectors(dim_c, cols)
    c._zb[key] = (z, b)
    return z, b


@dataclass
class CohomologyEntry:
    """Dimensions (and optional basis certificates) of one cohomology group."""

    p: int
    q: int
    level: int
    dim_space: int
    dim_z: int
    dim_b: int
    dim_h: int
    z_basis: Optional[list[Cochain]] = None
    b_basis: Optional[list[Cochain]] = None


def cohomology_dims(c: SpencerComplex, p: int, q: int, r: int,
                    certificates: bool = False) -> CohomologyEntry:
    """Dimensions of cocycles, coboundaries and cohomology in bidegree (p, q)."""
    if p > c.algebra.height + 1:
        raise InputError("p exceeds the algebra's height plus one")
    c._check_component_available(p - 1)
    z, b = _zb_spaces(c, p, q, r)
    entry = CohomologyEntry(p=p, q=q, level=r, dim_space=space_dimension(c, p, q, r),
                            dim_z=z.dim, dim_b=b.dim, dim_h=z.dim - b.dim)
    if certificates:
        entry.z_basis = [cochain_from_coords(c, p, q, r, v) for v in z.basis_vectors()]
        entry.b_basis = [cochain_from_coords(c, p, q, r, v) for v in b.basis_vectors()]
    return entry


def _require_cocycle(c: SpencerComplex, z: Cochain) -> None:
    dz = spencer_d(z)
    if not dz.is_zero():
        parts = []
        for tup, vec in sorted(dz.values.items()):
            comp_names = [c.algebra.names[c.algebra.component_indices(dz.p - 1)[i]]
                          for i, v in enumerate(vec) if v]
            parts.append(f"{tup}: {', '.join(comp_names)}")
        raise PreconditionError(
            "input is not a cocycle; nonzero components of its differential: "
            + "; ".join(parts))


def is_coboundary(c: SpencerComplex, z: Cochain) -> Optional[Cochain]:
    """A cochain y with dy = z, deterministic (free variables zero), or None.

    The input must be a cocycle; the preimage is absent exactly when the
    class of z is nonzero.
    """
    if z.frame is not c:
        raise InputError("cochain does not belong to this complex")
    _require_cocycle(c, z)
    if z.q == 0:
        return Cochain.zero(c, z.p + 1, 0, z.level) if z.is_zero() else None
    c._check_component_available(z.p)
    rows = _d_matrix_rows(c, z.p + 1, z.q - 1, z.level)
    n_src = space_dimension(c, z.p + 1, z.q - 1, z.level)
    target = cochain_to_coords(z)
    if not rows:
        return Cochain.zero(c, z.p + 1, z.q - 1, z.level) if z.is_zero() else None
    sol = solve_particular(rows, n_src, target)
    if sol is None:
        return None
    return cochain_from_coords(c, z.p + 1, z.q - 1, z.level, sol)


def class_representative(c: SpencerComplex, z: Cochain) -> Cochain:
    """Projection of a cocycle onto the fixed complement of B inside Z.

    Zero exactly when the cocycle is a coboundary; idempotent on its image.
    """
    if z.frame is not c:
        raise InputError("cochain does not belong to this complex")
    _require_cocycle(c, z)
    zs, bs = _zb_spaces(c, z.p, z.q, z.level)
    coords = cochain_to_coords(z)
    if bs.dim == 0:
        return z
    comp = deterministic_complement(bs, zs)
    cols = bs.basis_vectors() + comp.basis_vectors()
    dim_c = len(coords)
    rows = [tuple(col[i] for col in cols) for i in range(dim_c)]
    sol = solve_particular(rows, len(cols), coords)
    if sol is None:
        raise PreconditionError("cocycle does not lie in the cocycle space")
    rep = [ZERO] * dim_c
    for j in range(bs.dim, len(cols)):
        cj = sol[j]
        if cj:
            col = cols[j]
            for i in range(dim_c):
                if col[i]:
                    rep[i] += cj * col[i]
    return cochain_from_coords(c, z.p, z.q, z.level, rep)


def g_sharp_act(c: SpencerComplex, x_elt: Sequence[Fraction], x: Cochain) -> Cochain:
    """Infinitesimal action of g-sharp on level-0 cochains.

    (X.c)(w_1..w_q) = [X, c(w_1..w_q)] - sum_i c(w_1, .., [X, w_i], .., w_q).
    """
    if x.level != 0:
        raise InputError("the action is defined at level 0 only")
    a = c.algebra
    if len(x_elt) != a.dim:
        raise InputError("element has wrong length")
    for i, coeff in enumerate(x_elt):
        if coeff and a.degrees[i] != 0:
            raise InputError("element must lie in the degree 0 component")
    comp0 = a.component_part(x_elt, 0)
    if not c.g_sharp().contains(comp0):
        raise InputError("element does not preserve W")
    # [X, w_j] expressed back in W coordinates
    act_w = []
    for wf in c.w_full:
        bw = a.component_part(a.bracket(tuple(x_elt), wf), -1)
        coords = c.w.coordinates(bw)
        if coords is None:
            raise InputError("element does not preserve W")
        act_w.append(coords)
    d = x.p - 1
    out: dict[tuple[int, ...], tuple[Fraction, ...]] = {}
    for tup in combinations(range(c.n_w), x.q):
        val = x.values.get(tup)
        acc = list(vzero(a.component_dim(d)))
        if val is not None:
            full = a.embed_component(d, val)
            br = a.component_part(a.bracket(tuple(x_elt), full), d)
            acc = list(br)
        for pos in range(x.q):
            coords = act_w[tup[pos]]
            for j, cj in enumerate(coords):
                if cj:
                    idxs = tup[:pos] + (j,) + tup[pos + 1:]
                    term = x.value_at_indices(idxs)
                    for i, v in enumerate(term):
                        if v:
                            acc[i] -= cj * v
        if any(acc):
            out[tup] = tuple(acc)
    return Cochain(c, x.p, x.q, 0, out)


def random_integer_cochain(c: SpencerComplex, p: int, q: int, r: int, rng,
                           lo: int = -3, hi: int = 3) -> Cochain:
    """Seeded integer cochain in canonical coordinates (test utility)."""
    n = space_dimension(c, p, q, r)
    coords = [Fraction(rng.randint(lo, hi)) for _ in range(n)]
    return cochain_from_coords(c, p, q, r, coords)


def random_cocycle(c: SpencerComplex, p: int, q: int, r: int, rng,
                   lo: int = -3, hi: int = 3) -> Cochain:
    """Seeded integer combination of the cocycle basis."""
    z, _ = _zb_spaces(c, p, q, r)
    coords = [ZERO] * space_dimension(c, p, q, r)
    for v in z.basis_vectors():
        coeff = Fraction(rng.randint(lo, hi))
        if coeff:
            coords = [a + coeff * b for a, b in zip(coords, v)]
    return cochain_from_coords(c, p, q, r, coords)


@lru_cache(maxsize=None)
def standard_complex(algebra: GradedLieAlgebra, w_dim: int) -> SpencerComplex:
    """Complex over W = the span of the first w_dim coordinates of V."""
    n_v = algebra.component_dim(-1)
    if not 1 <= w_dim <= n_v:
        raise InputError("W dimension out of range")
    vecs = []
    for i in range(w_dim):
        v = [ZERO] * n_v
        v[i] = Fraction(1)
        vecs.append(tuple(v))
    return SpencerComplex(algebra, Subspace.from_vectors(n_v, vecs))
