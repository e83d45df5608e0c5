"""Constructors for the worked model geometries.

Basis orders are frozen so regression output is stable:

* space forms: coordinate vectors e_1..e_n first (degree -1), then the
  antisymmetric units A_ij = E_ij - E_ji for i < j in lexicographic order
  (degree 0);
* conformal: e_1..e_n, then A_ij (i < j lex) followed by the scaling element
  I (degree 0), then the dual vectors e^1..e^n (degree 1);
* complex/CR: real coordinates of C^m arranged so the first blocks are the
  CR-distribution directions and their J-images, then the transverse
  directions and their J-images; W drops the last k coordinates.

The natural pairing used to lower/raise indices is the standard inner
product of the coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .algebra import GradedLieAlgebra
from .errors import InputError, InternalInvariantError
from .linalg import RMatrix, Subspace, ZERO, is_zero_vec, kernel_of_rows
from .prolong import LinearLieAlgebra, ProlongationResult, build_graded_algebra
from .spencer import Cochain, SpencerComplex, standard_complex

ONE = Fraction(1)


def _antisym_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _antisym_matrix(n: int, i: int, j: int) -> RMatrix:
    rows = [[ZERO] * n for _ in range(n)]
    rows[i][j] = ONE
    rows[j][i] = -ONE
    return RMatrix(rows)


def so_generators(n: int) -> LinearLieAlgebra:
    """so_n with the A_ij = E_ij - E_ji basis, i < j lexicographic."""
    if n < 2:
        raise InputError("need n >= 2")
    return LinearLieAlgebra(n, tuple(_antisym_matrix(n, i, j) for i, j in _antisym_pairs(n)))


def co_generators(n: int) -> LinearLieAlgebra:
    """co_n = so_n + R*I, scaling element last."""
    if n < 2:
        raise InputError("need n >= 2")
    gens = [_antisym_matrix(n, i, j) for i, j in _antisym_pairs(n)]
    gens.append(RMatrix.identity(n))
    return LinearLieAlgebra(n, tuple(gens))


def conformal_deg0_matrices(n: int) -> list[RMatrix]:
    """The degree-0 basis of the conformal model, as matrices (A_ij then I)."""
    return [_antisym_matrix(n, i, j) for i, j in _antisym_pairs(n)] + [RMatrix.identity(n)]


def _decompose_so(n: int, m: RMatrix) -> dict[int, Fraction]:
    """Coefficients of an antisymmetric matrix over the A_ij basis."""
    out = {}
    for idx, (i, j) in enumerate(_antisym_pairs(n)):
        if m.data[i][j] != -m.data[j][i]:
            raise InternalInvariantError("matrix is not antisymmetric")
        if m.data[i][j]:
            out[idx] = m.data[i][j]
    for i in range(n):
        if m.data[i][i]:
            raise InternalInvariantError("matrix is not antisymmetric")
    return out


def _commutator(a: RMatrix, b: RMatrix) -> RMatrix:
    ab = a.mat_mul(b)
    ba = b.mat_mul(a)
    return RMatrix([[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab.data, ba.data)])


@lru_cache(maxsize=None)
def space_form_algebra(n_tilde: int, k0: int) -> GradedLieAlgebra:
    """Isometry-model algebra of the curvature-k0 space form: V + so(V).

    Brackets: [A, v] = A v and [v1, v2] = k0 (v2 (x) <v1,.> - v1 (x) <v2,.>).
    Graded for k0 = 0, quasi-graded otherwise; height 1.
    """
    if n_tilde < 2:
        raise InputError("need n >= 2")
    n = n_tilde
    pairs = _antisym_pairs(n)
    names = [f"e{i + 1}" for i in range(n)] + [f"A{i + 1}_{j + 1}" for i, j in pairs]
    degrees = [-1] * n + [0] * len(pairs)
    off = n
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    if k0:
        for idx, (i, j) in enumerate(pairs):
            # [e_i, e_j] = k0 (E_ji - E_ij) = -k0 * A_ij
            table[(i, j)] = {off + idx: Fraction(-k0)}
    mats = [_antisym_matrix(n, i, j) for i, j in pairs]
    for a_idx, m in enumerate(mats):
        for k in range(n):
            col = m.col(k)
            entry = {t: -col[t] for t in range(n) if col[t]}
            if entry:
                table[(k, off + a_idx)] = entry  # [e_k, A] = -A e_k
    for a_idx in range(len(mats)):
        for b_idx in range(a_idx + 1, len(mats)):
            comm = _decompose_so(n, _commutator(mats[a_idx], mats[b_idx]))
            if comm:
                table[(off + a_idx, off + b_idx)] = {off + t: c for t, c in comm.items()}
    kind = "graded" if k0 == 0 else "quasi_graded"
    return GradedLieAlgebra(f"space_form({n},{k0})", names, degrees, 1, table, kind)


@lru_cache(maxsize=None)
def conformal_algebra(n_tilde: int) -> GradedLieAlgebra:
    """The graded algebra V + co(V) + V* of the conformal sphere model.

    The bracket of a dual vector with a vector is
    [a, v] = v (x) a - (a (x) v) flipped through the inner product + a(v) I.
    """
    if n_tilde < 2:
        raise InputError("need n >= 2")
    n = n_tilde
    pairs = _antisym_pairs(n)
    n_so = len(pairs)
    names = [f"e{i + 1}" for i in range(n)]
    names += [f"A{i + 1}_{j + 1}" for i, j in pairs] + ["I"]
    names += [f"f{i + 1}" for i in range(n)]
    degrees = [-1] * n + [0] * (n_so + 1) + [1] * n
    off0 = n
    off1 = n + n_so + 1
    i_idx = off0 + n_so
    mats = [_antisym_matrix(n, i, j) for i, j in pairs] + [RMatrix.identity(n)]
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    # [e_k, X] = -X e_k for X in co(V)
    for a_idx, m in enumerate(mats):
        for k in range(n):
            col = m.col(k)
            entry = {t: -col[t] for t in range(n) if col[t]}
            if entry:
                table[(k, off0 + a_idx)] = entry
    # [e_l, f^k] = -(sgn * A_{min,max} + delta_{kl} I)
    for l in range(n):
        for k in range(n):
            entry: dict[int, Fraction] = {}
            if l != k:
                a, b = min(l, k), max(l, k)
                a_pos = pairs.index((a, b))
                sgn = ONE if l < k else -ONE  # [f^k, e_l] = sgn*A_ab + ...
                entry[off0 + a_pos] = -sgn
            else:
                entry[i_idx] = -ONE
            table[(l, off1 + k)] = entry
    # degree 0 commutators
    for a_idx in range(len(mats)):
        for b_idx in range(a_idx + 1, len(mats)):
            comm = _commutator(mats[a_idx], mats[b_idx])
            if all(is_zero_vec(r) for r in comm.data):
                continue
            dec = _decompose_so(n, comm)
            table[(off0 + a_idx, off0 + b_idx)] = {off0 + t: c for t, c in dec.items()}
    # [X, f^k] = sum_l (-X[k][l]) f^l
    for a_idx, m in enumerate(mats):
        for k in range(n):
            entry = {off1 + l: -m.data[k][l] for l in range(n) if m.data[k][l]}
            if entry:
                table[(off0 + a_idx, off1 + k)] = entry
    return GradedLieAlgebra(f"conformal({n})", names, degrees, 2, table, "graded")


def r21_submodule(n: int) -> Subspace:
    """Kernel of complete antisymmetrization in W* (x) Lambda^2 W*.

    Coordinates are (a, (i < j)) with a major; the alternation rows are
    indexed by strictly increasing triples.
    """
    if n < 2:
        raise InputError("need n >= 2")
    pairs = list(combinations(range(n), 2))
    pair_rank = {pq: i for i, pq in enumerate(pairs)}
    dim = n * len(pairs)

    def coord(a: int, i: int, j: int) -> tuple[int, Fraction]:
        if i < j:
            return a * len(pairs) + pair_rank[(i, j)], ONE
        return a * len(pairs) + pair_rank[(j, i)], -ONE

    rows = []
    for r, s, t in combinations(range(n), 3):
        row = [ZERO] * dim
        for a, i, j, sgn in ((r, s, t, 1), (s, r, t, -1), (t, r, s, 1)):
            pos, c = coord(a, i, j)
            row[pos] += sgn * c
        rows.append(tuple(row))
    return kernel_of_rows(rows, dim)


# ---------------------------------------------------------------------------
# CR / complex structure models
# ---------------------------------------------------------------------------

@dataclass
class ComplexStructureData:
    """A complex structure on V = R^{2m} and the frame-block arrangement.

    ``j`` squares to -I exactly.  U and its complement refer to the blocks of
    the fixed coordinate arrangement: the first 2(m-k) coordinates span U, the
    next k span the U-complement inside W, and the final k coordinates span
    the W-complement in V.
    """

    j: RMatrix
    m_tilde: int
    k: int
    u_indices: tuple[int, ...]
    u_perp_indices: tuple[int, ...]
    w_indices: tuple[int, ...]
    w_perp_indices: tuple[int, ...]
    prolongation: ProlongationResult = field(repr=False)
    _mult_i: dict[int, list[tuple[Fraction, ...]]] = field(default_factory=dict, repr=False)

    def apply_j(self, v):
        return self.j.mat_vec(v)

    def mult_i_component(self, algebra: GradedLieAlgebra, d: int, comp):
        """Multiplication by i on the degree-d component, via J on values."""
        if d == -1:
            return tuple(self.j.mat_vec(comp))
        layer = self.prolongation.orders[d]
        cols = self._mult_i.get(d)
        if cols is None:
            n = self.j.rows
            width = layer.ambient_dim // n
            cols = []
            for bvec in layer.basis_vectors():
                out = [ZERO] * layer.ambient_dim
                for i in range(n):
                    ji = self.j.data[i]
                    for a in range(n):
                        c = ji[a]
                        if c:
                            base_a = a * width
                            base_i = i * width
                            for mpos in range(width):
                                v = bvec[base_a + mpos]
                                if v:
                                    out[base_i + mpos] += c * v
                coords = layer.coordinates(tuple(out))
                if coords is None:
                    raise InternalInvariantError("layer is not closed under J")
                cols.append(coords)
            self._mult_i[d] = cols
        out_c = [ZERO] * len(cols[0]) if cols else []
        for b, cb in enumerate(comp):
            if cb:
                col = cols[b]
                for t, v in enumerate(col):
                    if v:
                        out_c[t] += cb * v
        return tuple(out_c)


def _cr_j_matrix(m_tilde: int, k: int) -> RMatrix:
    n = 2 * m_tilde
    g = m_tilde - k
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(g):
        rows[g + i][i] = ONE       # J e_i       = e_{g+i}
        rows[i][g + i] = -ONE      # J e_{g+i}   = -e_i
    for i in range(k):
        rows[2 * g + k + i][2 * g + i] = ONE    # J e_{2g+i}   = e_{2g+k+i}
        rows[2 * g + i][2 * g + k + i] = -ONE   # J e_{2g+k+i} = -e_{2g+i}
    return RMatrix(rows)


def glc_generators(m_tilde: int, k: int | None = None) -> LinearLieAlgebra:
    """gl_m(C) as a real subalgebra of gl_{2m}(R): the centralizer of J.

    With k given, J uses the CR frame arrangement for codimension k;
    otherwise the standard arrangement (k = 0 blocks) is used.
    """
    if m_tilde < 1:
        raise InputError("need m >= 1")
    j = _cr_j_matrix(m_tilde, 0 if k is None else k)
    n = 2 * m_tilde
    rows = []
    for r in range(n):
        for c in range(n):
            row = [ZERO] * (n * n)
            for m in range(n):
                if j.data[m][c]:
                    row[r * n + m] += j.data[m][c]
                if j.data[r][m]:
                    row[m * n + c] -= j.data[r][m]
            if any(row):
                rows.append(tuple(row))
    ker = kernel_of_rows(rows, n * n)
    gens = tuple(RMatrix([v[i * n:(i + 1) * n] for i in range(n)])
                 for v in ker.basis_vectors())
    return LinearLieAlgebra(n, gens)


@lru_cache(maxsize=None)
def cr_algebra(m_tilde: int, k: int, max_order: int) -> tuple[GradedLieAlgebra, ComplexStructureData]:
    """Truncated maximal prolongation of gl_m(C) in the CR frame arrangement.

    W is the span of all but the last k coordinates; the complex structure
    maps the W-complement into the U-complement inside W.
    """
    if not 1 <= k <= m_tilde - 1:
        raise InputError("need 1 <= k <= m_tilde - 1")
    if max_order < 1:
        raise InputError("need max_order >= 1")
    h0 = glc_generators(m_tilde, k)
    result = build_graded_algebra(h0, max_order)
    g = m_tilde - k
    data = ComplexStructureData(
        j=_cr_j_matrix(m_tilde, k), m_tilde=m_tilde, k=k,
        u_indices=tuple(range(2 * g)),
        u_perp_indices=tuple(range(2 * g, 2 * g + k)),
        w_indices=tuple(range(2 * m_tilde - k)),
        w_perp_indices=tuple(range(2 * m_tilde - k, 2 * m_tilde)),
        prolongation=result)
    return result.assembled, data


def cr_w_complex(algebra: GradedLieAlgebra, data: ComplexStructureData) -> SpencerComplex:
    return standard_complex(algebra, len(data.w_indices))


def cr_expected_layer_dim(m_tilde: int, p: int) -> int:
    """Real dimension of the degree-p prolongation layer of gl_m(C)."""
    return 2 * m_tilde * comb(m_tilde + p, p + 1)


def cr_extend_cochain(x: Cochain, data: ComplexStructureData) -> Cochain:
    """Extend a 2-cochain on W to one on all of V, compatibly with J.

    On two W-complement directions the value is minus the value on their
    J-images; on the mixed pairs it is (-i) times the value at the J-image,
    using multiplication by i on the target component.
    """
    if x.q != 2 or x.level != 0:
        raise InputError("extension is defined for q = 2, level 0 cochains")
    if data.prolongation.assembled is not x.frame.algebra:
        raise InputError("cochain does not belong to this CR model")
    a = x.frame.algebra
    n_w = len(data.w_indices)
    if x.frame.n_w != n_w:
        raise InputError("cochain is not defined on the CR subspace W")
    full = standard_complex(a, a.component_dim(-1))
    n_v = a.component_dim(-1)
    d = x.p - 1

    def j_col(idx: int) -> tuple[Fraction, ...]:
        return data.j.col(idx)

    def eval_w(u: tuple[Fraction, ...], v: tuple[Fraction, ...]):
        # u, v given in V coordinates but supported on W
        return x.evaluate([u[:n_w], v[:n_w]])

    unit = [tuple(ONE if t == i else ZERO for t in range(n_v)) for i in range(n_v)]
    vals: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    for i, jdx in combinations(range(n_v), 2):
        if jdx < n_w:
            vals[(i, jdx)] = x.value((i, jdx))
        elif i < n_w:
            # value(e_i, e_j) = + i * x(J e_j, e_i), j in the W-complement
            base = eval_w(j_col(jdx), unit[i])
            vals[(i, jdx)] = data.mult_i_component(a, d, base)
        else:
            vals[(i, jdx)] = tuple(-c for c in eval_w(j_col(i), j_col(jdx)))
    return Cochain(full, x.p, 2, 0, vals)


def cr_integrability_test(t: Cochain, data: ComplexStructureData) -> bool:
    """The two J-compatibility conditions on a W-valued 2-cochain.

    True iff, for all u1, u2 in U: T(u1,u2) - T(J u1, J u2) lies in U and
    equals -J T(J u1, u2) - J T(u1, J u2).
    """
    if t.q != 2:
        raise InputError("expected a 2-cochain")
    a = t.frame.algebra
    n_v = a.component_dim(-1)
    n_w = len(data.w_indices)
    u_set = set(data.u_indices)

    def ev(u, v) -> tuple[Fraction, ...]:
        # values of t already live in full degree-(-1) coordinates
        return t.evaluate([u[:n_w], v[:n_w]])

    unit = [tuple(ONE if s == i else ZERO for s in range(n_v)) for i in range(n_v)]
    for i, jdx in combinations(data.u_indices, 2):
        u1, u2 = unit[i], unit[jdx]
        ju1, ju2 = data.j.col(i), data.j.col(jdx)
        lhs = tuple(p - q for p, q in zip(ev(u1, u2), ev(ju1, ju2)))
        # membership in U: coordinates outside the U block must vanish
        if any(lhs[s] for s in range(n_v) if s not in u_set):
            return False
        rhs = tuple(-p - q for p, q in zip(data.apply_j(ev(ju1, u2)),
                                           data.apply_j(ev(u1, ju2))))
        if lhs != rhs:
            return False
    return True
