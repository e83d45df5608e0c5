"""Maximal transitive prolongation of a linear Lie algebra h^0 < gl(V).

The degree-p component (p >= 1) is realized inside V (x) S^{p+1} V*, stored in
"multilinear value" coordinates: an element T is the table of values
T(e_{m_1}, ..., e_{m_{p+1}}) indexed by the target coordinate i and the
nondecreasing index tuple (m_1 <= ... <= m_{p+1}).  Evaluation at a basis
vector is then a plain lookup, and the step

    h^{p+1} = { T in V (x) S^{p+2} V* : T(e_j, -) in h^p for every j }

reduces to one exact kernel computation.  Monomial tuples are enumerated in
graded-lexicographic order and coordinates are target-major, fixing every
output bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Optional, Sequence

from .algebra import GradedLieAlgebra
from .errors import InputError, InternalInvariantError
from .linalg import RMatrix, Subspace, ZERO, is_zero_vec, kernel_of_rows


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Nondecreasing index tuples of length d over 0..n-1, lex order."""
    if d == 0:
        return ((),)
    return tuple(combinations_with_replacement(range(n), d))


@lru_cache(maxsize=None)
def mono_rank(n: int, d: int) -> dict[tuple[int, ...], int]:
    return {m: i for i, m in enumerate(monomials(n, d))}


def sym_space_dim(n: int, p: int) -> int:
    """Coordinate dimension of V (x) S^{p+1} V* for dim V = n."""
    return n * len(monomials(n, p + 1))


def coord_index(n: int, p: int, i: int, mono: tuple[int, ...]) -> int:
    return i * len(monomials(n, p + 1)) + mono_rank(n, p + 1)[mono]


@dataclass(frozen=True)
class LinearLieAlgebra:
    """A matrix Lie algebra h^0 < gl(V) given by a spanning set of matrices."""

    v_dim: int
    generators: tuple[RMatrix, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.rows != self.v_dim or g.cols != self.v_dim:
                raise InputError("generator is not v_dim x v_dim")

    def matrix_coords(self, m: RMatrix) -> tuple[Fraction, ...]:
        """Flatten a matrix into V (x) V* coordinates (row-major)."""
        return tuple(x for row in m.data for x in row)

    def span(self) -> Subspace:
        return Subspace.from_vectors(self.v_dim * self.v_dim,
                                     [self.matrix_coords(g) for g in self.generators])

    def check(self) -> None:
        """Verify independence of the generators and closure under commutator."""
        sp = self.span()
        if sp.dim != len(self.generators):
            raise InputError("generators are linearly dependent")
        for a in self.generators:
            for b in self.generators:
                comm_coords = [x - y for x, y in
                               zip(self.matrix_coords(a.mat_mul(b)),
                                   self.matrix_coords(b.mat_mul(a)))]
                if not sp.contains(comm_coords):
                    raise InputError("generators are not closed under commutator")


def contraction(n: int, p: int, t: Sequence[Fraction], j: int) -> tuple[Fraction, ...]:
    """Evaluation of T in V (x) S^{p+1}V* at basis vector e_j, landing in degree p-1."""
    ms_out = monomials(n, p)
    rank_in = mono_rank(n, p + 1)
    width_in = len(monomials(n, p + 1))
    out = []
    for i in range(n):
        base = i * width_in
        for m in ms_out:
            out.append(t[base + rank_in[tuple(sorted((j,) + m))]])
    return tuple(out)


def prolong_step(h_p: Subspace, h0: LinearLieAlgebra) -> Subspace:
    """One prolongation step: all T with every contraction landing in h_p.

    Parametrizes T by its contractions (one element of h_p per basis
    direction) and imposes the swap symmetry T(u, v, ...) = T(v, u, ...);
    the kernel is then rebuilt in degree-(p+1) coordinates.
    """
    n = h0.v_dim
    # infer p from the ambient dimension
    p = 0
    while sym_space_dim(n, p) != h_p.ambient_dim:
        p += 1
        if sym_space_dim(n, p) > h_p.ambient_dim:
            raise InputError("subspace ambient dimension is not a symmetric power layer")
    dim_hp = h_p.dim
    if dim_hp == 0:
        return Subspace.zero(sym_space_dim(n, p + 1))
    basis = h_p.basis_vectors()
    rank_in = mono_rank(n, p + 1)
    width_in = len(monomials(n, p + 1))

    def b_entry(beta: int, i: int, mono: tuple[int, ...]) -> Fraction:
        return basis[beta][i * width_in + rank_in[mono]]

    rows = []
    for j, l in combinations(range(n), 2):
        for m in monomials(n, p):
            jm = tuple(sorted((l,) + m))
            lm = tuple(sorted((j,) + m))
            for i in range(n):
                row = [ZERO] * (n * dim_hp)
                nz = False
                for beta in range(dim_hp):
                    cj = b_entry(beta, i, jm)
                    if cj:
                        row[j * dim_hp + beta] += cj
                        nz = True
                    cl = b_entry(beta, i, lm)
                    if cl:
                        row[l * dim_hp + beta] -= cl
                        nz = True
                if nz:
                    rows.append(tuple(row))
    ker = kernel_of_rows(rows, n * dim_hp)
    out_dim = sym_space_dim(n, p + 1)
    width_out = len(monomials(n, p + 2))
    rank_out = mono_rank(n, p + 2)
    vectors = []
    for a in ker.basis_vectors():
        v = [ZERO] * out_dim
        for i in range(n):
            for mono in monomials(n, p + 2):
                j0 = mono[0]
                rest = mono[1:]
                s = ZERO
                for beta in range(dim_hp):
                    c = a[j0 * dim_hp + beta]
                    if c:
                        s += c * b_entry(beta, i, rest)
                v[i * width_out + rank_out[mono]] = s
        vectors.append(tuple(v))
    return Subspace.from_vectors(out_dim, vectors)


def insertion_bracket(n: int, p: int, q: int, x: Sequence[Fraction],
                      y: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Bracket of X in degree p and Y in degree q (both >= 0) in coordinates.

    Computed by the closed insertion formula [X,Y] = X(Y(.), ...) summed over
    argument subsets, minus the same with X and Y swapped.  The result T is
    the unique element with T(v, ...) = [[X,v],Y] + [X,[Y,v]] contraction by
    contraction, which is the defining recursion for prolongation brackets.
    """
    d_out = p + q + 1
    width_out = len(monomials(n, d_out))
    width_x = len(monomials(n, p + 1))
    rank_x = mono_rank(n, p + 1)
    width_y = len(monomials(n, q + 1))
    rank_y = mono_rank(n, q + 1)
    out = [ZERO] * (n * width_out)

    def accumulate(a: Sequence[Fraction], da: int, ranka, widtha,
                   b: Sequence[Fraction], rankb, widthb, sign: int) -> None:
        # sum over position subsets S: A(B(m_S), m_rest); A takes da arguments
        # (one of them the value of B), so B consumes d_out - da + 1
        db1 = d_out - da + 1
        for mono_i, mono in enumerate(monomials(n, d_out)):
            positions = range(d_out)
            seen: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
            for subset in combinations(positions, db1):
                sub = tuple(mono[s] for s in subset)
                rest = tuple(mono[s] for s in positions if s not in subset)
                key = (sub, rest)
                seen[key] = seen.get(key, 0) + 1
            for (sub, rest), count in seen.items():
                rsub = rankb[sub]
                for bidx in range(n):
                    c = b[bidx * widthb + rsub]
                    if c:
                        ra = ranka[tuple(sorted((bidx,) + rest))]
                        for i in range(n):
                            ca = a[i * widtha + ra]
                            if ca:
                                out[i * width_out + mono_i] += sign * count * ca * c

    accumulate(x, p + 1, rank_x, width_x, y, rank_y, width_y, 1)
    accumulate(y, q + 1, rank_y, width_y, x, rank_x, width_x, -1)
    return tuple(out)


@dataclass
class ProlongationResult:
    """Outcome of iterated prolongation, with the assembled graded algebra."""

    h0: LinearLieAlgebra
    orders: dict[int, Subspace]          # degree p >= 0 -> realized subspace
    finite_type: bool
    stabilization_order: Optional[int]   # first p with h^p = 0, when found
    truncation_order: int                # highest order that was computed
    assembled: GradedLieAlgebra

    def order_dim(self, p: int) -> int:
        if p in self.orders:
            return self.orders[p].dim
        if self.finite_type and self.stabilization_order is not None \
                and p >= self.stabilization_order:
            return 0
        raise InputError(f"order {p} was not computed (truncated at {self.truncation_order})")


def is_finite_type(result: ProlongationResult) -> bool:
    """True iff some computed prolongation order vanished."""
    return result.finite_type


def _component_coords(h_sub: Subspace, vec_coords: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Coordinates of a realized vector in the echelon basis of its layer."""
    coords = h_sub.coordinates(vec_coords)
    if coords is None:
        raise InternalInvariantError(
            "bracket left its prolongation layer; h^0 is not closed or data is corrupt")
    return coords


@lru_cache(maxsize=None)
def build_graded_algebra(h0: LinearLieAlgebra, max_order: int) -> ProlongationResult:
    """Iterate prolong_step and assemble the full bracket structure.

    Brackets: [X, v] is evaluation for X of degree >= 0 and v in V;
    degree-(-1) pairs commute (flat model); brackets of two nonnegative
    degrees come from the insertion formula and are certified by membership
    in the expected layer.  Orders above max_order are truncated to zero and
    the result records that.
    """
    if max_order < 0:
        raise InputError("max_order must be >= 0")
    h0.check()
    n = h0.v_dim
    orders: dict[int, Subspace] = {0: h0.span()}
    finite = orders[0].dim == 0
    stab: Optional[int] = 0 if finite else None
    p = 0
    while not finite and p < max_order:
        nxt = prolong_step(orders[p], h0)
        p += 1
        orders[p] = nxt
        if nxt.dim == 0:
            finite = True
            stab = p
    top = max(d for d in orders if orders[d].dim > 0) if any(
        s.dim for s in orders.values()) else -1
    truncated_at = None if finite else max_order

    names = [f"v{i + 1}" for i in range(n)]
    degrees = [-1] * n
    layer_offset = {-1: 0}
    for d in range(0, top + 1):
        layer_offset[d] = len(names)
        for b in range(orders[d].dim):
            names.append(f"p{d}_{b + 1}")
            degrees.append(d)
    height = max(top + 1, 1)

    layer_basis = {d: orders[d].basis_vectors() for d in range(0, top + 1)}
    table: dict[tuple[int, int], dict[int, Fraction]] = {}

    def put(i: int, j: int, d_target: int, comp: Sequence[Fraction]) -> None:
        entry = {}
        off = layer_offset[d_target]
        for pos, c in enumerate(comp):
            if c:
                entry[off + pos] = c
        if entry:
            if i < j:
                table[(i, j)] = entry
            else:
                table[(j, i)] = {t: -c for t, c in entry.items()}

    # [X, v] = evaluation
    for d in range(0, top + 1):
        for b, xv in enumerate(layer_basis[d]):
            i = layer_offset[d] + b
            for j in range(n):
                val = contraction(n, d, xv, j)
                if d == 0:
                    comp = val  # lands in V directly
                    put(i, j, -1, comp)
                else:
                    put(i, j, d - 1, _component_coords(orders[d - 1], val))

    # [X, Y] for nonnegative degrees
    for dx in range(0, top + 1):
        for dy in range(dx, top + 1):
            d_t = dx + dy
            if d_t > top:
                continue  # zero (finite type) or truncated
            bx = layer_basis[dx]
            by = layer_basis[dy]
            for a, xv in enumerate(bx):
                i = layer_offset[dx] + a
                start = a + 1 if dx == dy else 0
                for b in range(start, len(by)):
                    j = layer_offset[dy] + b
                    t = insertion_bracket(n, dx, dy, xv, by[b])
                    if is_zero_vec(t):
                        continue
                    put(i, j, d_t, _component_coords(orders[d_t], t))

    assembled = GradedLieAlgebra(
        name=f"prolongation(dimV={n})", names=names, degrees=degrees,
        height=height, table=table, grading_kind="graded", truncated_at=truncated_at)
    return ProlongationResult(h0=h0, orders=orders, finite_type=finite,
                              stabilization_order=stab, truncation_order=max(p, 0),
                              assembled=assembled)
