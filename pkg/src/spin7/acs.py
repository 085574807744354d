"""The seven almost complex structures carried by the Cayley cross product.

J_lam acts as the triple product with (e_0, e_lam) on the complement of
those two directions; on the pair itself it swaps e_0 -> e_lam and
e_lam -> -e_0 (the latter value is forced by J^2 = -I and adopted
explicitly). The family multiplies according to the octonion unit table,
which differs from operator composition, and spans a 7-dimensional
subspace of the 8x8 endomorphisms that is stable under every frame
rotation preserving the form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .cross import CrossProduct, default_cross
from .forms import pullback, sort_with_sign
from .linalg import Matrix, RowSpan, Vector, det, rank, subspace_equal
from .octonion import SignedUnit, default_table


class ACSCertificationError(ValueError):
    """A matrix claimed as an almost complex structure failed its invariants."""


class NotUnitImaginary(ValueError):
    """The direction is not an exactly-unit vector orthogonal to e_0."""


class FrameNotAdmissible(ValueError):
    """The frame rotation does not preserve the form, metric, or orientation."""


class NoWitnessFound(RuntimeError):
    """No composition/table disagreement exists; this would mean the unit
    product coincides with operator composition and must not occur."""


@dataclass(frozen=True)
class ACS:
    """A certified almost complex structure: J^2 = -I and J antisymmetric.

    Antisymmetry together with J^2 = -I makes the identity metric Hermitian:
    g(Jx, Jy) = g(x, y) for all x, y.
    """

    matrix: Matrix
    label: int | Vector | None = None

    def __post_init__(self):
        n = self.matrix.nrows
        if self.matrix @ self.matrix != -Matrix.identity(n):
            raise ACSCertificationError("matrix does not square to -I")
        if not self.matrix.is_antisymmetric():
            raise ACSCertificationError("matrix is not antisymmetric")

    def __call__(self, v: Vector) -> Vector:
        return self.matrix @ v


def build_acs(lam: int, cp: CrossProduct | None = None) -> ACS:
    """The structure J_lam with J_lam v = P(e0, e_lam, v) off span{e0, e_lam}."""
    if not 1 <= lam <= 7:
        raise ValueError("lam must lie in 1..7")
    cp = cp or default_cross()
    basis = [Vector.basis(8, i) for i in range(8)]
    cols = []
    for i in range(8):
        if i == 0:
            cols.append(basis[lam])
        elif i == lam:
            cols.append(-basis[0])
        else:
            cols.append(cp.cross3(basis[0], basis[lam], basis[i]))
    return ACS(Matrix.from_columns([c.comps for c in cols]), label=lam)


@cache
def acs_basis() -> tuple[ACS, ...]:
    """J_1..J_7 for the Cayley form with the identity metric."""
    return tuple(build_acs(lam) for lam in range(1, 8))


@cache
def _acs_span() -> RowSpan:
    return RowSpan(j.matrix.flatten() for j in acs_basis())


def acs_span_dim() -> int:
    """Dimension of span{J_1..J_7} inside the 64-dimensional endomorphisms."""
    return _acs_span().dim


@cache
def _span_support() -> dict[tuple[int, int], tuple[int, int]]:
    """Map (i, j) -> (lam, sign) over the supports of the J family.

    The seven J matrices are signed permutation matrices with pairwise
    disjoint supports that together cover every off-diagonal position;
    both facts are asserted here and make span membership a direct
    reconstruction test.
    """
    support: dict[tuple[int, int], tuple[int, int]] = {}
    for lam, j in enumerate(acs_basis(), start=1):
        for a in range(8):
            row = j.matrix.rows[a]
            for b in range(8):
                if row[b]:
                    assert (a, b) not in support
                    support[(a, b)] = (lam, 1 if row[b] > 0 else -1)
    assert len(support) == 56
    return support


def span_contains_matrix(m: Matrix) -> bool:
    """Exact membership of an 8x8 matrix in span{J_1..J_7}.

    Column 0 of sum(c_lam J_lam) is (0, c_1, ..., c_7), so the candidate
    coefficients are read off directly and membership reduces to an exact
    reconstruction check over the disjoint supports.
    """
    support = _span_support()
    rows = m.rows
    coeffs = [rows[lam][0] for lam in range(8)]
    if rows[0][0] or any(rows[i][i] for i in range(8)):
        return False
    for (a, b), (lam, sign) in support.items():
        expected = coeffs[lam] if sign > 0 else -coeffs[lam]
        if rows[a][b] != expected:
            return False
    return True


def times_product(lam: int, mu: int) -> SignedUnit:
    """The product label of J_lam and J_mu under the unit table.

    Index 0 stands for the identity endomorphism, so the diagonal maps to
    -I just as the unit diagonal maps to -e_0.
    """
    return default_table().imaginary(lam, mu)


def matrix_for_label(unit: SignedUnit) -> Matrix:
    """The endomorphism named by a signed label: +/-I for 0, +/-J_nu otherwise."""
    base = Matrix.identity(8) if unit.index == 0 else acs_basis()[unit.index - 1].matrix
    return base if unit.sign > 0 else -base


@dataclass(frozen=True)
class CompositionWitness:
    """A basis vector on which composition and the table product disagree."""

    lam: int
    mu: int
    basis_index: int
    composition: Vector
    table: Vector


def composition_disagreement() -> CompositionWitness:
    """First (lam, mu, basis vector) where J_lam J_mu differs from the table.

    The scan is exhaustive and deterministic: lowest lam, then mu, then
    basis index. Finding nothing raises :class:`NoWitnessFound`, which would
    mean the table product is associative and must not occur.
    """
    js = acs_basis()
    basis = [Vector.basis(8, i) for i in range(8)]
    for lam in range(1, 8):
        for mu in range(1, 8):
            composed = js[lam - 1].matrix @ js[mu - 1].matrix
            table = matrix_for_label(times_product(lam, mu))
            if composed == table:
                continue
            for i, v in enumerate(basis):
                cv = composed @ v
                tv = table @ v
                if cv != tv:
                    return CompositionWitness(lam, mu, i, cv, tv)
    raise NoWitnessFound("table product coincides with composition everywhere")


def acs_from_unit(u: Vector) -> ACS:
    """The structure sum(u_lam J_lam) for an exactly-unit imaginary direction.

    Raises :class:`NotUnitImaginary` unless u is orthogonal to e_0 with
    |u|^2 = 1 exactly; for non-unit u the square would be -|u|^2 I, not -I.
    """
    if len(u) != 8 or u[0]:
        raise NotUnitImaginary("direction must be orthogonal to e0")
    norm_sq = u.dot(u)
    if norm_sq != 1:
        raise NotUnitImaginary(f"direction must have unit length, |u|^2 = {norm_sq}")
    js = acs_basis()
    m = Matrix.zero(8, 8)
    for lam in range(1, 8):
        c = u[lam]
        if c:
            m = m + js[lam - 1].matrix * c
    return ACS(m, label=u)


def rotated_acs_family(r: Matrix, cp: CrossProduct | None = None) -> list[Matrix]:
    """J_1..J_7 built from the rotated frame e'_i = R e_i, in standard coordinates."""
    cp = cp or default_cross()
    frame = [r.column(i) for i in range(8)]
    out = []
    for lam in range(1, 8):
        frame_cols = []
        for i in range(8):
            if i == 0:
                frame_cols.append(frame[lam])
            elif i == lam:
                frame_cols.append(-frame[0])
            else:
                frame_cols.append(cp.cross3(frame[0], frame[lam], frame[i]))
        sparse = [fc.nonzero() for fc in frame_cols]
        # express on the standard basis: e_j = sum_i R[j][i] e'_i for orthogonal R
        cols = []
        for j in range(8):
            acc = [0] * 8
            for i, c in enumerate(r.rows[j]):
                if c:
                    for m, x in sparse[i]:
                        acc[m] += c * x
            cols.append(acc)
        out.append(Matrix.from_columns(cols))
    return out


def rotated_acs(r: Matrix, lam: int, cp: CrossProduct | None = None) -> Matrix:
    """J_lam built from the rotated frame e'_i = R e_i, in standard coordinates."""
    return rotated_acs_family(r, cp)[lam - 1]


def _as_signed_permutation(r: Matrix) -> list[tuple[int, int]] | None:
    """Per-column (row, sign) when r is a signed permutation matrix, else None."""
    cols: list[tuple[int, int]] = []
    seen = 0
    for j in range(8):
        hit = None
        for i in range(8):
            v = r.rows[i][j]
            if v:
                if hit is not None or (v != 1 and v != -1):
                    return None
                hit = (i, 1 if v == 1 else -1)
        if hit is None or seen >> hit[0] & 1:
            return None
        seen |= 1 << hit[0]
        cols.append(hit)
    return cols


def check_frame(r: Matrix, cp: CrossProduct | None = None) -> None:
    """Raise :class:`FrameNotAdmissible` unless R is orthogonal, preserves the
    inducing form exactly, and has determinant +1."""
    cp = cp or default_cross()
    if r.nrows != 8 or r.ncols != 8:
        raise FrameNotAdmissible("frame matrix must be 8x8")
    cols = _as_signed_permutation(r)
    if cols is not None:
        # signed permutations are orthogonal; the form check reduces to
        # mapping the term monomials
        sigma = [row for row, _ in cols]
        _, sgn_sigma = sort_with_sign(sigma)
        detr = sgn_sigma
        for _, e in cols:
            detr *= e
        if detr != 1:
            raise FrameNotAdmissible("frame matrix must preserve orientation (det = +1)")
        terms = cp.phi.terms
        for key, c in terms.items():
            image, sgn = sort_with_sign([sigma[t] for t in key])
            target = terms.get(image)
            eps = 1
            for t in key:
                eps *= cols[t][1]
            if target is None or eps * sgn * target != c:
                raise FrameNotAdmissible("frame matrix does not preserve the form")
        return
    if r.transpose() @ r != Matrix.identity(8):
        raise FrameNotAdmissible("frame matrix is not orthogonal")
    if det(r) != 1:
        raise FrameNotAdmissible("frame matrix must preserve orientation (det = +1)")
    if pullback(cp.phi, r) != cp.phi:
        raise FrameNotAdmissible("frame matrix does not preserve the form")


def span_stability(r: Matrix, cp: CrossProduct | None = None) -> bool:
    """Whether the J-span from the rotated frame equals the standard J-span.

    R must be an exact form-preserving orientation-preserving orthogonal
    matrix (:class:`FrameNotAdmissible` otherwise), e.g. one returned by the
    stabilizer module's symmetry search.
    """
    cp = cp or default_cross()
    check_frame(r, cp)
    rotated = rotated_acs_family(r, cp)
    if cp is default_cross():
        if not all(span_contains_matrix(m) for m in rotated):
            return False
        # containment plus equal dimension gives span equality; the rotated
        # family's coefficients on the J basis sit in column 0
        coeff_rows = [[m.rows[lam][0] for lam in range(1, 8)] for m in rotated]
        return rank(coeff_rows) == 7
    standard = [build_acs(lam, cp).matrix.flatten() for lam in range(1, 8)]
    return subspace_equal([m.flatten() for m in rotated], standard)
