"""The seven almost complex structures and their span."""

import random
from fractions import Fraction

import pytest

from spin7.acs import (
    ACS,
    ACSCertificationError,
    FrameNotAdmissible,
    NotUnitImaginary,
    acs_basis,
    acs_from_unit,
    acs_span_dim,
    build_acs,
    composition_disagreement,
    matrix_for_label,
    rotated_acs_family,
    span_contains_matrix,
    span_stability,
    times_product,
)
from spin7.cross import default_cross
from spin7.linalg import Matrix, Vector, rank
from spin7.octonion import SignedUnit, default_table

E = [Vector.basis(8, i) for i in range(8)]
I8 = Matrix.identity(8)


class TestBuildACS:
    def test_known_images(self):
        j1 = build_acs(1)
        assert j1(E[0]) == E[1]
        assert j1(E[4]) == E[5]
        assert j1.matrix @ j1.matrix == -I8

    def test_forced_slots(self):
        for lam in range(1, 8):
            j = build_acs(lam)
            assert j(E[0]) == E[lam]
            assert j(E[lam]) == -E[0]

    def test_all_certified(self):
        for j in acs_basis():
            assert j.matrix @ j.matrix == -I8
            assert j.matrix.is_antisymmetric()
            assert j.matrix.transpose() @ j.matrix == I8  # Hermitian metric

    def test_matches_cross_product(self):
        cp = default_cross()
        for lam in range(1, 8):
            j = build_acs(lam)
            for i in range(8):
                if i not in (0, lam):
                    assert j(E[i]) == cp.cross3(E[0], E[lam], E[i])

    def test_certification_rejects_bad_matrix(self):
        with pytest.raises(ACSCertificationError):
            ACS(Matrix.identity(8))
        good = acs_basis()[0].matrix
        # symmetric defect: J1 with one flipped sign
        rows = [list(r) for r in good.rows]
        rows[0][1] = -rows[0][1]
        with pytest.raises(ACSCertificationError):
            ACS(Matrix(rows))

    def test_bad_index(self):
        with pytest.raises(ValueError):
            build_acs(0)


class TestSpan:
    def test_dimension_seven(self):
        assert acs_span_dim() == 7
        assert rank([j.matrix.flatten() for j in acs_basis()]) == 7

    def test_membership(self):
        js = [j.matrix for j in acs_basis()]
        assert span_contains_matrix(2 * js[2] - js[4])
        combo = Matrix.zero(8, 8)
        for k, j in enumerate(js):
            combo = combo + j * Fraction(k + 1, 3)
        assert span_contains_matrix(combo)

    def test_non_membership(self):
        js = [j.matrix for j in acs_basis()]
        assert not span_contains_matrix(I8)
        assert not span_contains_matrix(js[0] @ js[1])
        near = js[0] + Matrix([[1 if (i, j) == (0, 0) else 0 for j in range(8)]
                               for i in range(8)])
        assert not span_contains_matrix(near)

    def test_clifford_anticommutation(self):
        js = [j.matrix for j in acs_basis()]
        for a in range(7):
            for b in range(7):
                anti = js[a] @ js[b] + js[b] @ js[a]
                assert anti == (-2 * I8 if a == b else Matrix.zero(8, 8))


class TestTimesProduct:
    def test_known_labels(self):
        assert times_product(1, 2) == SignedUnit(3, 1)
        assert times_product(1, 1) == SignedUnit(0, -1)
        assert times_product(2, 5) == SignedUnit(7, -1)

    def test_matches_table_for_all_pairs(self):
        table = default_table()
        for lam in range(1, 8):
            for mu in range(1, 8):
                assert times_product(lam, mu) == table.imaginary(lam, mu)

    def test_label_matrices(self):
        assert matrix_for_label(SignedUnit(0, -1)) == -I8
        assert matrix_for_label(SignedUnit(3, 1)) == acs_basis()[2].matrix


class TestCompositionDisagreement:
    def test_frozen_witness(self):
        w = composition_disagreement()
        assert (w.lam, w.mu, w.basis_index) == (1, 2, 4)
        assert w.composition == E[7]
        assert w.table == -E[7]

    def test_agreement_at_e0(self):
        js = acs_basis()
        composed = js[0].matrix @ (js[1].matrix @ E[0])
        assert composed == js[2].matrix @ E[0] == E[3]

    def test_square_agrees_with_table(self):
        j1 = acs_basis()[0].matrix
        assert j1 @ j1 == matrix_for_label(times_product(1, 1))


class TestACSFromUnit:
    def test_basis_direction(self):
        assert acs_from_unit(E[1]).matrix == acs_basis()[0].matrix

    def test_pythagorean_direction(self):
        u = Vector([0, Fraction(3, 5), Fraction(4, 5), 0, 0, 0, 0, 0])
        j = acs_from_unit(u)
        assert j.matrix @ j.matrix == -I8
        assert j.matrix @ E[0] == u

    def test_rejects_non_unit(self):
        with pytest.raises(NotUnitImaginary):
            acs_from_unit(E[1] + E[2])

    def test_rejects_real_component(self):
        with pytest.raises(NotUnitImaginary):
            acs_from_unit(E[0])

    def test_square_scales_with_norm(self):
        # (sum u_lam J_lam)^2 = -|u|^2 I for any u orthogonal to e0
        js = [j.matrix for j in acs_basis()]
        rng = random.Random(13)
        for _ in range(20):
            u = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(7)]
            m = Matrix.zero(8, 8)
            for lam, c in enumerate(u):
                if c:
                    m = m + js[lam] * c
            norm_sq = sum(c * c for c in u)
            assert m @ m == -norm_sq * I8


class TestSpanStability:
    def test_identity(self):
        assert span_stability(I8)

    def test_negated_identity(self):
        assert span_stability(-I8)

    def test_nontrivial_symmetry(self):
        from spin7.stabilizers import signed_perm_symmetries

        for r in signed_perm_symmetries(limit=25):
            assert span_stability(r)

    def test_rotated_span_equals_standard_span(self):
        from spin7.linalg import subspace_equal
        from spin7.stabilizers import signed_perm_symmetries

        r = signed_perm_symmetries(limit=20)[19]
        rotated = [m.flatten() for m in rotated_acs_family(r)]
        standard = [j.matrix.flatten() for j in acs_basis()]
        assert subspace_equal(rotated, standard)

    def test_rotated_family_certifies(self):
        from spin7.stabilizers import signed_perm_symmetries

        r = signed_perm_symmetries(limit=10)[7]
        for m in rotated_acs_family(r):
            assert m @ m == -I8
            assert m.is_antisymmetric()

    def test_rejects_non_orthogonal(self):
        with pytest.raises(FrameNotAdmissible):
            span_stability(2 * I8)

    def test_rejects_orientation_reversal(self):
        flip = Matrix([[(-1 if i == j == 0 else (1 if i == j else 0))
                        for j in range(8)] for i in range(8)])
        with pytest.raises(FrameNotAdmissible):
            span_stability(flip)

    def test_rejects_non_preserving_signed_perm(self):
        rows = [[0] * 8 for _ in range(8)]
        perm = [1, 0] + list(range(2, 8))  # swap e0, e1: det -1... make det +1
        for i in range(8):
            rows[perm[i]][i] = 1
        rows[7][7] = -1  # restore det = +1 while breaking the form
        with pytest.raises(FrameNotAdmissible):
            span_stability(Matrix(rows))

    def test_rejects_exact_rotation_off_the_group(self):
        # a rational orthogonal rotation in the (1,2) plane, det +1, which
        # does not preserve the form; exercises the generic validation path
        rows = [[1 if i == j else 0 for j in range(8)] for i in range(8)]
        rows[1][1] = Fraction(3, 5)
        rows[1][2] = Fraction(-4, 5)
        rows[2][1] = Fraction(4, 5)
        rows[2][2] = Fraction(3, 5)
        with pytest.raises(FrameNotAdmissible):
            span_stability(Matrix(rows))


class TestInducedProductIdentity:
    def test_p_of_two_units_vs_table_acs(self):
        # recorded outcome: P(e_lam, e_mu, v) = J_(lam x mu) v holds exactly
        # when v avoids e_lam and e_mu (where the left side is forced to 0 by
        # alternation); 252 of the 336 ordered cases hold
        cp = default_cross()
        holds = 0
        fail_slots = set()
        for lam in range(1, 8):
            for mu in range(1, 8):
                if lam == mu:
                    continue
                jmat = matrix_for_label(times_product(lam, mu))
                for v in range(8):
                    left = cp.cross3(E[lam], E[mu], E[v])
                    right = jmat @ E[v]
                    if left == right:
                        holds += 1
                    else:
                        fail_slots.add("lam" if v == lam else ("mu" if v == mu else "other"))
                        assert left.is_zero()
        assert holds == 252
        assert fail_slots == {"lam", "mu"}
