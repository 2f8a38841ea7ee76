"""Overlap (Gram) matrices of a nonorthogonal basis and their matrix functions."""
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    NotHermitian,
    NotPositiveDefinite,
    NotUnitDiagonal,
    OverlapOutOfRange,
)

EPS_PD = 1e-9
HERMITIAN_TOL = 1e-12
DIAG_TOL = 1e-12
UNIFORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Validated overlap matrix ``S[i, j] = <c_i|c_j>``.

    Build instances through :func:`validate`, :func:`uniform_gram` or
    :func:`identity_gram`; the constructor does no checking.
    """

    entries: np.ndarray
    lambda_min: float

    @property
    def d(self):
        return self.entries.shape[0]

    def uniform_overlap(self, tol=UNIFORM_TOL):
        """Return ``s`` if every off-diagonal entry equals the same real ``s``."""
        d = self.d
        off = self.entries[~np.eye(d, dtype=bool)]
        s = off[0].real
        if np.all(np.abs(off - s) <= tol):
            return float(s)
        return None

    def same_as(self, other):
        return self is other or (
            self.d == other.d and np.array_equal(self.entries, other.entries)
        )


@dataclass(frozen=True)
class UniformOverlap:
    d: int
    s: float

    def __post_init__(self):
        check_uniform_range(self.d, self.s)

    def to_gram(self, eps_pd=EPS_PD):
        return validate(uniform_matrix(self.d, self.s), eps_pd=eps_pd)


@dataclass(frozen=True)
class EigenSystem:
    eigenvalues: np.ndarray  # ascending
    eigenvectors: np.ndarray  # columns


def check_uniform_range(d, s):
    if d < 2:
        raise DimensionMismatch(f"dimension must be >= 2, got {d}")
    lo = 1.0 / (1.0 - d)
    if not (lo < s < 1.0):
        raise OverlapOutOfRange(f"uniform overlap s={s!r} outside ({lo:.6g}, 1) for d={d}")


def uniform_matrix(d, s):
    """Raw ``d x d`` matrix with 1 on the diagonal and ``s`` elsewhere (unchecked)."""
    m = np.full((d, d), s, dtype=complex)
    np.fill_diagonal(m, 1.0)
    return m


def validate(raw, eps_pd=EPS_PD):
    """Check a candidate overlap matrix and wrap it as a :class:`GramMatrix`.

    Asymmetry up to ``HERMITIAN_TOL`` is symmetrised away; anything larger is
    rejected rather than repaired.
    """
    m = np.array(raw, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"overlap matrix must be square, got shape {m.shape}")
    if m.shape[0] < 2:
        raise DimensionMismatch("overlap matrix dimension must be >= 2")
    if not np.all(np.isfinite(m)):
        raise NotHermitian("overlap matrix contains non-finite entries")
    asym = np.max(np.abs(m - m.conj().T))
    if asym > HERMITIAN_TOL:
        raise NotHermitian(f"max |S - S^dagger| = {asym:.3g}")
    if asym > 0:
        m = 0.5 * (m + m.conj().T)
    diag_err = np.max(np.abs(np.diag(m) - 1.0))
    if diag_err > DIAG_TOL:
        raise NotUnitDiagonal(f"max |S_ii - 1| = {diag_err:.3g}")
    # Hermitian matrix: the diagonal is real; pin it to exactly 1.
    np.fill_diagonal(m, 1.0)
    try:
        lam = np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    if lam[0] <= eps_pd:
        raise NotPositiveDefinite(lam[0], eps_pd)
    m.setflags(write=False)
    return GramMatrix(m, float(lam[0]))


def uniform_gram(d, s, eps_pd=EPS_PD):
    return validate(uniform_matrix(d, s), eps_pd=eps_pd)


def identity_gram(d):
    return validate(np.eye(d))


def uniform_spectrum(d, s):
    """Closed-form ascending spectrum: ``1-s`` (d-1 times) and ``1+(d-1)s``."""
    check_uniform_range(d, s)
    vals = np.array([1.0 - s] * (d - 1) + [1.0 + (d - 1) * s])
    return np.sort(vals)


def spectral_decompose(g):
    try:
        lam, u = np.linalg.eigh(g.entries)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    if not np.all(np.isfinite(lam)) or lam[0] <= 0:
        raise ConvergenceFailure(f"eigensolver returned non-positive spectrum {lam}")
    return EigenSystem(lam, u)


def _matrix_function(eig, f):
    # U f(Lambda) U^dagger; depends only on eigenspaces, not on the basis
    # chosen inside a degenerate one.
    u = eig.eigenvectors
    m = (u * f(eig.eigenvalues)) @ u.conj().T
    return 0.5 * (m + m.conj().T)


def matrix_sqrt(g, eig=None):
    eig = eig or spectral_decompose(g)
    return _matrix_function(eig, np.sqrt)


def matrix_inv_sqrt(g, eig=None):
    eig = eig or spectral_decompose(g)
    return _matrix_function(eig, lambda lam: 1.0 / np.sqrt(lam))


def random_gram(d, rng, extra=2, complex_=True):
    """Gram matrix of ``d`` random unit vectors in ``C^(d+extra)``."""
    shape = (d + extra, d)
    v = rng.standard_normal(shape)
    if complex_:
        v = v + 1j * rng.standard_normal(shape)
    v /= np.linalg.norm(v, axis=0)
    return validate(v.conj().T @ v)
