import numpy as np
import pytest
from scipy.spatial.distance import pdist

from pabidot import (
    DataShapeError,
    ParameterError,
    apply_composite,
    make_reflection_matrix,
    make_rotation_matrix,
    make_translation_matrix,
    plane_pairs,
    rotation_block,
)


def test_plane_pairs_lexicographic():
    assert plane_pairs(2) == [(0, 1)]
    assert plane_pairs(4) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    for n in range(2, 15):
        pairs = plane_pairs(n)
        assert len(pairs) == n * (n - 1) // 2
        assert all(i < j for i, j in pairs)
        assert pairs == sorted(pairs)


def test_plane_pairs_rejects_scalar_dimension():
    with pytest.raises(ParameterError):
        plane_pairs(1)


def test_rotation_2d_quarter_turn():
    # cos 90 = 0, sin 90 = 1 -> [[0, -1], [1, 0]] in the embedded block
    m = make_rotation_matrix(2, 90)
    expected = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
    assert np.allclose(m, expected, atol=1e-12, rtol=0)


def test_rotation_oracle_explicit_product_n3():
    # Independent oracle: the three per-plane Givens matrices written out in
    # full and multiplied in pair order (1,2), (1,3), (2,3).
    theta = np.deg2rad(40.0)
    c, s = np.cos(theta), np.sin(theta)
    r12 = np.array([
        [c, -s, 0, 0],
        [s, c, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1.0],
    ])
    r13 = np.array([
        [c, 0, -s, 0],
        [0, 1, 0, 0],
        [s, 0, c, 0],
        [0, 0, 0, 1.0],
    ])
    r23 = np.array([
        [1, 0, 0, 0],
        [0, c, -s, 0],
        [0, s, c, 0],
        [0, 0, 0, 1.0],
    ])
    expected = r12 @ r13 @ r23
    assert np.allclose(make_rotation_matrix(3, 40.0), expected, atol=1e-12, rtol=0)


def test_rotation_oracle_dense_products_random(rng):
    # Same oracle for larger n: accumulate full (n+1)x(n+1) matrix products.
    for _ in range(20):
        n = int(rng.integers(2, 9))
        theta = float(rng.uniform(1.0, 179.0))
        rad = np.deg2rad(theta)
        c, s = np.cos(rad), np.sin(rad)
        expected = np.eye(n + 1)
        for i, j in plane_pairs(n):
            g = np.eye(n + 1)
            g[i, i] = c
            g[j, j] = c
            g[j, i] = s
            g[i, j] = -s
            expected = expected @ g
        assert np.allclose(make_rotation_matrix(n, theta), expected, atol=1e-12, rtol=0)


def test_rotation_orthogonal_unit_determinant(rng):
    for n in range(2, 13):
        for theta in rng.uniform(0.0, 180.0, size=25):
            m = rotation_block(n, float(theta))
            assert np.abs(m @ m.T - np.eye(n)).max() < 1e-10
            assert abs(np.linalg.det(m) - 1.0) < 1e-10


def test_rotation_homogeneous_embedding():
    m = make_rotation_matrix(5, 33.0)
    assert m.shape == (6, 6)
    assert np.array_equal(m[5], np.array([0, 0, 0, 0, 0, 1.0]))
    assert np.array_equal(m[:, 5], np.array([0, 0, 0, 0, 0, 1.0]))


def test_rotation_rejects_bad_dimension():
    with pytest.raises(ParameterError):
        make_rotation_matrix(1, 40.0)


def test_reflection_structure_and_involution():
    for n in range(2, 8):
        for ax in range(1, n + 1):
            rf = make_reflection_matrix(n, ax)
            expected_diag = np.ones(n + 1)
            expected_diag[ax - 1] = -1.0
            assert np.array_equal(np.diag(rf), expected_diag)
            assert np.array_equal(rf, np.diag(expected_diag))  # off-diagonal zeros
            assert np.array_equal(rf @ rf, np.eye(n + 1))


def test_reflection_rejects_bad_axis():
    with pytest.raises(ParameterError):
        make_reflection_matrix(4, 0)
    with pytest.raises(ParameterError):
        make_reflection_matrix(4, 5)
    with pytest.raises(ParameterError):
        make_reflection_matrix(1, 1)


def test_translation_structure(rng):
    n = 6
    t = make_translation_matrix(n, rng)
    assert t.shape == (n + 1, n + 1)
    offsets = t[:n, n]
    assert np.all(offsets > 0.0) and np.all(offsets < 1.0)
    assert np.array_equal(t[:n, :n], np.eye(n))
    assert np.array_equal(t[n], np.r_[np.zeros(n), 1.0])


def test_translation_deterministic_per_seed():
    a = make_translation_matrix(5, np.random.default_rng(7))
    b = make_translation_matrix(5, np.random.default_rng(7))
    assert np.array_equal(a, b)


def test_translation_rejects_bad_dimension(rng):
    with pytest.raises(ParameterError):
        make_translation_matrix(1, rng)


def test_composite_hand_example():
    # Reflect axis 1 then rotate 90 degrees, no translation:
    # (1, 0) -> (-1, 0) -> (0, -1).
    rot = make_rotation_matrix(2, 90)
    ref = make_reflection_matrix(2, 1)
    out = apply_composite(rot, np.eye(3), ref, np.array([[1.0, 0.0]]))
    assert np.allclose(out, [[0.0, -1.0]], atol=1e-12, rtol=0)


def test_composite_matches_sequential_homogeneous_application(rng):
    for _ in range(10):
        n = int(rng.integers(2, 7))
        data = rng.normal(size=(30, n))
        rot = make_rotation_matrix(n, float(rng.uniform(1, 179)))
        ref = make_reflection_matrix(n, int(rng.integers(1, n + 1)))
        tra = make_translation_matrix(n, rng)
        homogeneous = np.column_stack([data, np.ones(30)])
        expected = (rot @ tra @ ref @ homogeneous.T).T[:, :n]
        actual = apply_composite(rot, tra, ref, data)
        assert np.allclose(actual, expected, atol=1e-12, rtol=0)


def test_composite_preserves_pairwise_distances(rng):
    for _ in range(10):
        n = int(rng.integers(2, 8))
        data = rng.normal(size=(40, n)) * 5.0
        rot = make_rotation_matrix(n, float(rng.uniform(1, 179)))
        ref = make_reflection_matrix(n, int(rng.integers(1, n + 1)))
        tra = make_translation_matrix(n, rng)
        out = apply_composite(rot, tra, ref, data)
        assert np.abs(pdist(out) - pdist(data)).max() < 1e-9


def test_composite_rejects_mismatched_shapes(rng):
    data = rng.normal(size=(10, 3))
    rot = make_rotation_matrix(3, 20)
    ref = make_reflection_matrix(3, 1)
    tra = make_translation_matrix(3, rng)
    with pytest.raises(DataShapeError):
        apply_composite(make_rotation_matrix(4, 20), tra, ref, data)
    with pytest.raises(DataShapeError):
        apply_composite(rot, tra, ref, rng.normal(size=(10,)))
    with pytest.raises(DataShapeError):
        apply_composite(rot, make_translation_matrix(4, rng), ref, data)
