import math
import random
from fractions import Fraction

import numpy as np
import pytest

from gammasym.geometry import (
    ambrose_singer_check,
    canonical_curvature,
    canonical_torsion,
    geodesic_closed_form,
    geodesic_curve,
    matrix_exp_numeric,
    sectional_table,
    torsionfree_curvature,
)
from gammasym.grading import block_grading
from gammasym.linalg import SymmetricForm

F = Fraction

GRADING = block_grading(5, (2, 2, 1, 0))
ALG = GRADING.algebra
# complement order: E13 E14 E23 E24 | E15 E25 | E35 E45
M = GRADING.complement_indices


def mvec(pos, coeff=1):
    v = [F(0)] * ALG.dim
    v[M[pos]] = F(coeff)
    return v


def test_canonical_torsion_values():
    t = canonical_torsion(GRADING, mvec(0), mvec(4))     # (E13, E15)
    assert t == ALG.basis_vector(ALG.pair_index[(2, 4)])  # +E35
    # torsion vanishes when the bracket lands in the fixed part
    assert canonical_torsion(GRADING, mvec(0), mvec(1)) == [F(0)] * ALG.dim


def test_canonical_curvature_values():
    r = canonical_curvature(GRADING, mvec(0), mvec(1), mvec(1))   # R(E13,E14)E14
    assert r == mvec(0)
    # pairs from different components bracket into m, so R = 0
    assert canonical_curvature(GRADING, mvec(0), mvec(4), mvec(2)) == [F(0)] * ALG.dim


def test_complement_support_enforced():
    x1 = ALG.basis_vector(0)  # E12 lies in the fixed part
    with pytest.raises(ValueError):
        canonical_torsion(GRADING, x1, mvec(0))
    with pytest.raises(ValueError):
        torsionfree_curvature(GRADING, mvec(0), x1, mvec(1))
    with pytest.raises(ValueError):
        canonical_curvature(GRADING, mvec(0), mvec(1), [F(0)] * 3)


def test_torsionfree_value():
    # R(E13, E15)E15 = 1/4 E13
    r = torsionfree_curvature(GRADING, mvec(0), mvec(4), mvec(4))
    assert r == mvec(0, F(1, 4))


def test_torsionfree_first_bianchi():
    n = len(M)
    vecs = [mvec(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                total = [
                    a + b + c
                    for a, b, c in zip(
                        torsionfree_curvature(GRADING, vecs[i], vecs[j], vecs[k]),
                        torsionfree_curvature(GRADING, vecs[j], vecs[k], vecs[i]),
                        torsionfree_curvature(GRADING, vecs[k], vecs[i], vecs[j]),
                    )
                ]
                assert all(v == 0 for v in total)


# frozen sectional numerators, complement positions 0..7
EXPECTED_SECTIONAL = {
    (0, 1): F(1), (0, 2): F(1), (0, 3): F(0), (1, 2): F(0), (1, 3): F(1),
    (2, 3): F(1),
    (0, 4): F(1, 4), (0, 5): F(0), (1, 4): F(1, 4), (1, 5): F(0),
    (2, 4): F(0), (2, 5): F(1, 4), (3, 4): F(0), (3, 5): F(1, 4),
    (0, 6): F(1, 4), (0, 7): F(0), (1, 6): F(0), (1, 7): F(1, 4),
    (2, 6): F(1, 4), (2, 7): F(0), (3, 6): F(0), (3, 7): F(1, 4),
    (4, 5): F(1), (4, 6): F(1, 4), (4, 7): F(1, 4), (5, 6): F(1, 4),
    (5, 7): F(1, 4),
    (6, 7): F(1),
}


def test_sectional_table_so5():
    table = sectional_table(GRADING, SymmetricForm.identity(8), SymmetricForm.identity(2))
    assert table.labels == ("E13", "E14", "E23", "E24", "E15", "E25", "E35", "E45")
    assert table.entries == EXPECTED_SECTIONAL
    assert table.all_nonnegative()
    assert table.entry(1, 0) == table.entry(0, 1) == 1
    assert table.entry(3, 3) == 0
    assert table.csv_rows()[0] == (1, 2, 1, 1)
    assert table.text_lines()[0].startswith("R_1221")


def test_sectional_matches_curvature_contraction():
    """Dual route: every numerator equals B(R(E_i,E_j)E_j, E_i)."""
    table = sectional_table(GRADING, SymmetricForm.identity(8), SymmetricForm.identity(2))
    for i in range(8):
        for j in range(i + 1, 8):
            r = torsionfree_curvature(GRADING, mvec(i), mvec(j), mvec(j))
            assert r[M[i]] == table.entry(i, j)


def test_sectional_requires_orthonormal_basis():
    with pytest.raises(ValueError):
        sectional_table(GRADING, SymmetricForm.diagonal([2] * 8), SymmetricForm.identity(2))
    with pytest.raises(ValueError):
        sectional_table(GRADING, SymmetricForm.identity(6), SymmetricForm.identity(2))
    with pytest.raises(ValueError):
        sectional_table(GRADING, SymmetricForm.identity(8), SymmetricForm.identity(3))


def test_ambrose_singer():
    rep = ambrose_singer_check(GRADING, SymmetricForm.identity(8))
    assert rep.contraction_vanishes and rep.totally_skew
    uneven = ambrose_singer_check(GRADING, SymmetricForm.diagonal([1, 1, 1, 1, 2, 2, 3, 3]))
    assert uneven.contraction_vanishes
    assert not uneven.totally_skew


# -- geodesics --------------------------------------------------------------

SAMPLES = (0.1, 1.0, math.pi, 5.0)


def test_geodesic_closed_form_matches_numeric():
    for pos in range(8):
        e = ALG.basis_matrix(M[pos])
        curve = geodesic_curve(e)
        for t in SAMPLES:
            gap = np.abs(curve.at(t) - matrix_exp_numeric(e, t)).max()
            assert gap <= 1e-12, (pos, t, gap)


def test_geodesic_period_and_orthogonality():
    e = ALG.basis_matrix(M[0])
    curve = geodesic_curve(e)
    assert np.abs(curve.at(curve.period()) - np.eye(5)).max() <= 1e-12
    for t in SAMPLES:
        r = curve.at(t)
        assert np.abs(r.T @ r - np.eye(5)).max() <= 1e-10


def test_geodesic_rotation_pattern():
    # exp(t E13) rotates the (1,3) coordinate plane and fixes the rest
    curve = geodesic_curve(ALG.basis_matrix(ALG.pair_index[(0, 2)]))
    for t in SAMPLES:
        r = curve.at(t)
        expected = np.eye(5)
        expected[0, 0] = expected[2, 2] = math.cos(t)
        expected[0, 2] = math.sin(t)
        expected[2, 0] = -math.sin(t)
        assert np.abs(r - expected).max() <= 1e-12


def test_geodesic_curve_exact_parts():
    curve = geodesic_curve(ALG.basis_matrix(M[0]))
    assert curve.sin_part == curve.generator
    assert np.array_equal(curve.at(0.0), np.eye(5))
    assert curve.size == 5


def test_geodesic_generator_validation():
    with pytest.raises(ValueError):
        geodesic_curve([[0, 1], [0, 0]])          # not skew
    with pytest.raises(ValueError):
        geodesic_curve([[0, 1, 0], [-1, 0, 0]])    # not square
    mixed = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 2], [0, 0, -2, 0]]
    with pytest.raises(ValueError, match="matrix_exp_numeric"):
        geodesic_curve(mixed)
    # but the numeric oracle happily exponentiates it
    r = matrix_exp_numeric(mixed, 1.0)
    assert np.abs(r @ r.T - np.eye(4)).max() <= 1e-10


def test_geodesic_closed_form_helper():
    e = ALG.basis_matrix(M[3])
    assert np.allclose(geodesic_closed_form(e, 0.7), matrix_exp_numeric(e, 0.7), atol=1e-12)


def test_matrix_exp_numeric_inverse_pairs():
    rng = random.Random(77)
    for _ in range(5):
        raw = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(5)]
        skew = [[raw[i][j] - raw[j][i] for j in range(5)] for i in range(5)]
        t = rng.uniform(0.1, 2.0)
        prod = matrix_exp_numeric(skew, t) @ matrix_exp_numeric(skew, -t)
        assert np.abs(prod - np.eye(5)).max() <= 1e-10


def test_matrix_exp_numeric_large_argument():
    # norm far above the extra-squaring threshold, checked against the
    # exact closed form of the same generator
    e = ALG.basis_matrix(M[0])
    t = 100.0
    gap = np.abs(matrix_exp_numeric(e, t) - geodesic_closed_form(e, t)).max()
    assert gap <= 1e-10


def test_matrix_exp_numeric_rejects_nonsquare():
    with pytest.raises(ValueError):
        matrix_exp_numeric([[0.0, 1.0]])
