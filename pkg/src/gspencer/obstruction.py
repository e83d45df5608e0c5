"""The iterative order-by-order solver on constant-coefficient data.

All exterior derivatives vanish in this model, so the immersion system
becomes a chain of exact algebraic identities: at each order the total
curvature must be the differential of the next form, and the solvable case
extends the admissible tuple.  Cohomology classes of the total curvature are
the only obstructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Union

from .errors import InputError, InternalInvariantError, PreconditionError
from .linalg import RMatrix, ZERO, is_zero_vec, vadd, vscale, vsub, vzero
from .spencer import Cochain, SpencerComplex, WFrame, class_representative, is_coboundary, spencer_d

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ConstantForm:
    """A constant 1-form on W with values in one degree component.

    ``columns`` holds the value at each W basis vector, in component
    coordinates of the stated degree.
    """

    degree: int
    columns: tuple[tuple[Fraction, ...], ...]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.columns[j]

    @property
    def n_w(self) -> int:
        return len(self.columns)

    def matrix(self) -> RMatrix:
        nd = len(self.columns[0]) if self.columns else 0
        return RMatrix.from_cols(list(self.columns), nd)

    def is_zero(self) -> bool:
        return all(is_zero_vec(col) for col in self.columns)

    def __add__(self, other: "ConstantForm") -> "ConstantForm":
        if self.degree != other.degree or self.n_w != other.n_w:
            raise InputError("forms are incompatible")
        return ConstantForm(self.degree, tuple(vadd(a, b) for a, b in
                                               zip(self.columns, other.columns)))


def zero_form(frame: WFrame, degree: int) -> ConstantForm:
    nd = frame.algebra.component_dim(degree)
    return ConstantForm(degree, tuple(vzero(nd) for _ in range(frame.n_w)))


def canonical_omega_minus1(frame: WFrame) -> ConstantForm:
    """The inclusion of W into V as a constant degree-(-1) form."""
    return ConstantForm(-1, tuple(tuple(v) for v in frame.w_vectors))


@dataclass(frozen=True)
class AdmissibleTuple:
    """Ordered forms of degrees 0..len-1; the degree-(-1) form is implicit."""

    forms: tuple[ConstantForm, ...]

    def __post_init__(self):
        for d, f in enumerate(self.forms):
            if f.degree != d:
                raise InputError(f"form at position {d} has degree {f.degree}")

    @property
    def order(self) -> int:
        return len(self.forms)

    def extended(self, f: ConstantForm) -> "AdmissibleTuple":
        return AdmissibleTuple(self.forms + (f,))


def empty_tuple() -> AdmissibleTuple:
    return AdmissibleTuple(())


def _check_form(frame: WFrame, f: ConstantForm) -> None:
    if f.n_w != frame.n_w:
        raise InputError("form does not match the frame's W")
    nd = frame.algebra.component_dim(f.degree)
    for col in f.columns:
        if len(col) != nd:
            raise InputError("form value has wrong component dimension")


def _omega_value(frame: WFrame, t: AdmissibleTuple, r: int, j: int) -> tuple[Fraction, ...]:
    """Full-algebra coordinates of omega^r(w_j), r = -1..order-1."""
    a = frame.algebra
    if r == -1:
        return frame.w_full[j]
    return a.embed_component(r, t.forms[r].column(j))


def total_curvature(frame: WFrame, t: AdmissibleTuple, p: int) -> Cochain:
    """Total curvature of order p+1: the degree-(p-1) valued 2-form.

    Sums the half brackets of the forms of complementary degrees plus the
    projected degree-(p-1) part of the bracket of the implicit inclusion with
    itself (nonzero only for quasi-graded algebras).
    """
    if p < 0:
        raise InputError("order must be nonnegative")
    if t.order < p:
        raise InputError(f"tuple has no form of degree {p - 1}")
    for f in t.forms:
        _check_form(frame, f)
    a = frame.algebra
    nd = a.component_dim(p - 1)
    vals = {}
    for i, j in combinations(range(frame.n_w), 2):
        acc = vzero(a.dim)
        for r in range(0, p):
            x_i = _omega_value(frame, t, r, i)
            y_j = _omega_value(frame, t, p - 1 - r, j)
            x_j = _omega_value(frame, t, r, j)
            y_i = _omega_value(frame, t, p - 1 - r, i)
            acc = vadd(acc, vsub(a.bracket(x_i, y_j), a.bracket(x_j, y_i)))
        acc = vscale(HALF, acc)
        # [omega^{-1}, omega^{-1}] term, projected onto degree p-1
        ww = a.bracket(frame.w_full[i], frame.w_full[j])
        if not is_zero_vec(ww):
            acc = vadd(acc, a.project_degree(ww, p - 1))
        val = a.component_part(acc, p - 1)
        if not is_zero_vec(val):
            vals[(i, j)] = val
    return Cochain(frame, p, 2, 0, vals)


def _d_of_form(frame: WFrame, f: ConstantForm) -> Cochain:
    """The 2-form (w_a, w_b) -> [w_a, f(w_b)] - [w_b, f(w_a)], degree shifted down."""
    a = frame.algebra
    vals = {}
    for i, j in combinations(range(frame.n_w), 2):
        x = a.embed_component(f.degree, f.column(j))
        y = a.embed_component(f.degree, f.column(i))
        v = vsub(a.bracket(frame.w_full[i], x), a.bracket(frame.w_full[j], y))
        val = a.component_part(v, f.degree - 1)
        if not is_zero_vec(val):
            vals[(i, j)] = val
    return Cochain(frame, f.degree, 2, 0, vals)


def admissibility_residuals(frame: WFrame, t: AdmissibleTuple) -> list[Cochain]:
    """Residual of the order-s equation for each s < order: Omega^{s-1} + d omega^s."""
    out = []
    for s in range(t.order):
        omega = total_curvature(frame, t, s)
        out.append(omega + _d_of_form(frame, t.forms[s]))
    return out
# note: [omega^{-1}, omega^s] evaluated on (w_a, w_b) equals
# [w_a, omega^s(w_b)] - [w_b, omega^s(w_a)], which is the generalized Spencer
# differential of omega^s read as a (s+1, 1)-cochain


def check_admissible(frame: WFrame, t: AdmissibleTuple, p: int) -> None:
    if t.order < p:
        raise PreconditionError(f"tuple provides forms only up to order {t.order - 1}, "
                                f"need order {p - 1}")
    residuals = admissibility_residuals(frame, t)
    for s in range(p):
        if not residuals[s].is_zero():
            raise PreconditionError(f"tuple is not admissible: equation of order {s} "
                                    f"has nonzero residual")


def form_to_cochain(frame: WFrame, f: ConstantForm) -> Cochain:
    vals = {(j,): f.column(j) for j in range(f.n_w)}
    return Cochain(frame, f.degree + 1, 1, 0, vals)


def cochain_to_form(x: Cochain) -> ConstantForm:
    if x.q != 1 or x.level != 0:
        raise InputError("expected a level-0 1-cochain")
    cols = [x.value((j,)) for j in range(x.frame.n_w)]
    return ConstantForm(x.p - 1, tuple(cols))


@dataclass(frozen=True)
class BianchiViolation:
    tuple_indices: tuple[int, ...]
    component: tuple[Fraction, ...]


def bianchi_check(c: SpencerComplex, t: AdmissibleTuple, p: int) -> list[BianchiViolation]:
    """Differential of the total curvature of an admissible tuple; empty = pass."""
    check_admissible(c, t, p)
    omega = total_curvature(c, t, p)
    if omega.p == 0:
        return []
    d_omega = spencer_d(omega)
    return [BianchiViolation(tup, vec) for tup, vec in sorted(d_omega.values.items())]


@dataclass(frozen=True)
class ObstructionCertificate:
    """A nonzero essential curvature class blocking the next order."""

    order: int
    class_rep: Cochain


def solve_next(c: SpencerComplex, t: AdmissibleTuple, p: int
               ) -> Union[ConstantForm, ObstructionCertificate]:
    """Solve the order-p equation for the next form, or certify the obstruction.

    On success the returned form extends the tuple admissibly (re-verified
    exactly); on failure the nonzero class representative of the total
    curvature is returned.
    """
    if not 0 <= p <= c.algebra.height - 1:
        raise InputError(f"order {p} has no form degree in this algebra")
    check_admissible(c, t, p)
    omega = total_curvature(c, t, p)
    y = is_coboundary(c, -omega)
    if y is None:
        rep = class_representative(c, omega)
        if rep.is_zero():
            raise InternalInvariantError("solver and class reduction disagree")
        return ObstructionCertificate(p, rep)
    form = cochain_to_form(y)
    extended = t.extended(form)
    residual = admissibility_residuals(c, extended)[p]
    if not residual.is_zero():
        raise InternalInvariantError("solved form fails re-verification")
    return form


def solve_to_top(c: SpencerComplex, t: AdmissibleTuple | None = None
                 ) -> tuple[AdmissibleTuple, Optional[ObstructionCertificate]]:
    """Iterate solve_next to the top order, then test the final curvature.

    Returns the extended tuple and None when every order was solvable and the
    top total curvature vanishes; otherwise the certificate for the first
    obstructed order.
    """
    if t is None:
        t = empty_tuple()
    k = c.algebra.height
    for p in range(t.order, k):
        out = solve_next(c, t, p)
        if isinstance(out, ObstructionCertificate):
            return t, out
        t = t.extended(out)
    omega_top = total_curvature(c, t, k)
    if omega_top.is_zero():
        return t, None
    return t, ObstructionCertificate(k, class_representative(c, omega_top))


# ---------------------------------------------------------------------------
# level decomposition
# ---------------------------------------------------------------------------

@dataclass
class CurvatureDecomposition:
    """Split of a total curvature into its level-r piece and lower tails.

    ``hat`` is the level-r coset cochain; ``tails`` hold the projections onto
    the fixed complements of the filtration steps below r.  Reassembly uses
    the identification of the coset with the sum of the upper complements.
    """

    complex: SpencerComplex
    level: int
    p: int
    hat: Cochain
    tails: tuple[Cochain, ...]

    def identified_hat_value(self, tup: tuple[int, ...]) -> tuple[Fraction, ...]:
        c = self.complex
        d = self.p - 1
        v = self.hat.value(tup)
        if d < 0 or self.level == 0:
            return v
        chain = c.complement_chain(d)
        out = vzero(len(v))
        for s in range(self.level, d + 2):
            out = vadd(out, _block_projection(chain, s, v))
        return out

    def reassemble(self) -> Cochain:
        c = self.complex
        vals = {}
        for tup in combinations(range(c.n_w), 2):
            v = self.identified_hat_value(tup)
            for tail in self.tails:
                v = vadd(v, tail.value(tup))
            if not is_zero_vec(v):
                vals[tup] = v
        return Cochain(c, self.p, 2, 0, vals)


def _block_projection(chain: list, s: int, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Projection of v onto chain[s] along the other complements."""
    from .linalg import solve_particular
    cols = []
    marks = []
    for t, sub in enumerate(chain):
        for bv in sub.basis_vectors():
            cols.append(bv)
            marks.append(t)
    n = len(v)
    rows = [tuple(col[i] for col in cols) for i in range(n)]
    sol = solve_particular(rows, len(cols), v)
    if sol is None:
        raise InternalInvariantError("complement chain does not span the component")
    out = [ZERO] * n
    for j, coeff in enumerate(sol):
        if coeff and marks[j] == s:
            col = cols[j]
            for i in range(n):
                if col[i]:
                    out[i] += coeff * col[i]
    return tuple(out)


def level_decompose(c: SpencerComplex, omega: Cochain, r: int) -> CurvatureDecomposition:
    """Split a level-0 total curvature at level r per the fixed complements."""
    if omega.level != 0 or omega.q != 2:
        raise InputError("expected a level-0 curvature 2-cochain")
    if not 0 <= r <= omega.p:
        raise InputError(f"level {r} out of range 0..{omega.p}")
    d = omega.p - 1
    hat = omega.project_to_level(r)
    tails = []
    if r > 0 and d >= 0:
        chain = c.complement_chain(d)
        for s in range(r):
            vals = {}
            for tup, v in omega.values.items():
                pv = _block_projection(chain, s, v)
                if not is_zero_vec(pv):
                    vals[tup] = pv
            tails.append(Cochain(c, omega.p, 2, 0, vals))
    return CurvatureDecomposition(complex=c, level=r, p=omega.p, hat=hat,
                                  tails=tuple(tails))


# ---------------------------------------------------------------------------
# strong equivalence (height-2 algebras)
# ---------------------------------------------------------------------------

def strong_equiv_transport(c: SpencerComplex, omega0: ConstantForm,
                           varpi1: Sequence[Fraction]) -> tuple[ConstantForm, ConstantForm]:
    """Gauge transport of an admissible order-0 form by a constant top form.

    Returns the transported form and the induced top-degree correction.  The
    exact curvature identity is re-verified before returning.
    """
    a = c.algebra
    if a.height != 2:
        raise InputError("strong equivalence transport requires a height-2 algebra")
    _check_form(c, omega0)
    if len(varpi1) != a.component_dim(1):
        raise InputError("expected a degree-1 component vector")
    if not admissibility_residuals(c, AdmissibleTuple((omega0,)))[0].is_zero():
        raise PreconditionError("omega0 is not admissible at order 0")
    varpi_full = a.embed_component(1, tuple(Fraction(x) for x in varpi1))
    new_cols = []
    eps_cols = []
    for j in range(c.n_w):
        wj = c.w_full[j]
        shift = a.bracket(wj, varpi_full)
        new_cols.append(a.component_part(
            vadd(a.embed_component(0, omega0.column(j)), shift), 0))
        om_full = a.embed_component(0, omega0.column(j))
        eps = vadd(a.bracket(om_full, varpi_full),
                   vscale(HALF, a.bracket(shift, varpi_full)))
        eps_cols.append(a.component_part(eps, 1))
    omega0_new = ConstantForm(0, tuple(new_cols))
    eps1 = ConstantForm(1, tuple(eps_cols))
    # exact identity: Omega'^0 = Omega^0 - [omega^{-1}, eps^1]
    lhs = total_curvature(c, AdmissibleTuple((omega0_new,)), 1)
    rhs = total_curvature(c, AdmissibleTuple((omega0,)), 1) - _d_of_form(c, eps1)
    if lhs != rhs:
        raise InternalInvariantError("strong equivalence curvature identity failed")
    return omega0_new, eps1
