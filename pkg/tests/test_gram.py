import numpy as np
import pytest
import scipy.linalg as sla
from hypothesis import given, settings
from hypothesis import strategies as st

from lowdin_rt import (
    NotHermitian,
    NotPositiveDefinite,
    NotUnitDiagonal,
    UniformOverlap,
    identity_gram,
    matrix_inv_sqrt,
    matrix_sqrt,
    spectral_decompose,
    uniform_gram,
    uniform_spectrum,
    validate,
)
from lowdin_rt.errors import DimensionMismatch, OverlapOutOfRange
from lowdin_rt.gram import random_gram, uniform_matrix


def maxabs(a):
    return np.max(np.abs(a))


def test_validate_identity():
    g = validate(np.eye(3))
    assert g.d == 3
    assert np.array_equal(g.entries, np.eye(3))


def test_validate_uniform_half_spectrum():
    g = uniform_gram(2, 0.5)
    np.testing.assert_allclose(spectral_decompose(g).eigenvalues, [0.5, 1.5], atol=1e-12)


def test_validate_rejects_boundary_overlap():
    with pytest.raises(NotPositiveDefinite) as exc:
        validate(uniform_matrix(3, -0.5))
    assert exc.value.lambda_min < 1e-9


def test_validate_rejects_asymmetric():
    m = np.array([[1.0, 0.3], [0.2, 1.0]])
    with pytest.raises(NotHermitian):
        validate(m)


def test_validate_symmetrises_tiny_asymmetry():
    m = np.array([[1.0, 0.3 + 1e-13], [0.3, 1.0]])
    g = validate(m)
    assert np.array_equal(g.entries, g.entries.conj().T)


def test_validate_rejects_bad_diagonal():
    with pytest.raises(NotUnitDiagonal):
        validate(np.array([[1.0, 0.1], [0.1, 1.1]]))


def test_validate_rejects_non_square():
    with pytest.raises(DimensionMismatch):
        validate(np.ones((2, 3)))


def test_uniform_overlap_range():
    with pytest.raises(OverlapOutOfRange):
        UniformOverlap(3, -0.5)
    with pytest.raises(OverlapOutOfRange):
        UniformOverlap(2, 1.0)
    g = UniformOverlap(4, 0.2).to_gram()
    off = g.entries[~np.eye(4, dtype=bool)]
    assert np.all(off == 0.2)
    assert g.uniform_overlap() == 0.2


def test_spectrum_d4_closed_form_vs_solver():
    g = uniform_gram(4, 0.2)
    np.testing.assert_allclose(uniform_spectrum(4, 0.2), [0.8, 0.8, 0.8, 1.6], atol=1e-15)
    np.testing.assert_allclose(spectral_decompose(g).eigenvalues, [0.8, 0.8, 0.8, 1.6], atol=1e-12)
    np.testing.assert_allclose(np.linalg.eigvals(g.entries).real.min(), 0.8, atol=1e-12)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_identity_spectrum(d):
    np.testing.assert_array_equal(spectral_decompose(identity_gram(d)).eigenvalues, np.ones(d))


def test_sqrt_identity():
    g = identity_gram(3)
    np.testing.assert_allclose(matrix_sqrt(g), np.eye(3), atol=1e-15)
    np.testing.assert_allclose(matrix_inv_sqrt(g), np.eye(3), atol=1e-15)


def test_sqrt_2x2_closed_form():
    a = (np.sqrt(1.5) + np.sqrt(0.5)) / 2
    b = (np.sqrt(1.5) - np.sqrt(0.5)) / 2
    g = uniform_gram(2, 0.5)
    m = matrix_sqrt(g)
    np.testing.assert_allclose(m, [[a, b], [b, a]], atol=1e-14)
    assert maxabs(m @ m - g.entries) <= 1e-10


def test_sqrt_d3_against_scipy():
    g = uniform_gram(3, 0.3)
    m = matrix_sqrt(g)
    assert maxabs(m @ m - g.entries) <= 1e-10
    assert maxabs(m - sla.sqrtm(g.entries)) <= 1e-10


def test_inv_sqrt_2x2_closed_form():
    g = uniform_gram(2, 0.5)
    m = matrix_inv_sqrt(g)
    np.testing.assert_allclose(m, [[1.1153550716504106, -0.2988584907226844],
                                   [-0.2988584907226844, 1.1153550716504106]], atol=1e-14)
    np.testing.assert_allclose(np.linalg.inv(matrix_sqrt(g)), m, atol=1e-12)


def test_random_complex_invariants(rng):
    for d in range(2, 9):
        for _ in range(10):
            g = random_gram(d, rng)
            eig = spectral_decompose(g)
            u, lam = eig.eigenvectors, eig.eigenvalues
            assert np.all(np.diff(lam) >= 0)
            assert maxabs(g.entries - (u * lam) @ u.conj().T) <= 1e-10
            sq, isq = matrix_sqrt(g), matrix_inv_sqrt(g)
            s = g.entries
            assert maxabs(sq - sq.conj().T) <= 1e-12
            assert maxabs(isq - isq.conj().T) <= 1e-12
            assert maxabs(sq @ sq - s) <= 1e-10
            assert maxabs(isq @ s @ isq - np.eye(d)) <= 1e-10
            assert maxabs(np.linalg.inv(isq) - sq) <= 1e-10
            assert maxabs(sq @ s - s @ sq) <= 1e-10
            assert maxabs(isq @ s - s @ isq) <= 1e-10


@settings(max_examples=60, deadline=None)
@given(d=st.integers(2, 8), frac=st.floats(0.01, 0.99))
def test_uniform_spectrum_matches_solver(d, frac):
    lo = 1.0 / (1.0 - d)
    s = lo + frac * (1.0 - lo)
    g = uniform_gram(d, s)
    assert maxabs(spectral_decompose(g).eigenvalues - uniform_spectrum(d, s)) <= 1e-10
