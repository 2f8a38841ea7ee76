"""Pure states over the nonorthogonal basis and over its Löwdin basis."""
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    GramMismatch,
    InvalidDensity,
    NotNormalized,
    ZeroVector,
)
from .gram import GramMatrix

NORM_TOL = 1e-10
ZERO_NORM = 1e-300


@dataclass(frozen=True, eq=False)
class SuperpositionState:
    """Amplitudes ``psi_i`` of ``sum_i psi_i |c_i>``, normalised so psi^dagger S psi = 1."""

    coefficients: np.ndarray
    gram: GramMatrix
    scale: float = 1.0

    @property
    def d(self):
        return self.coefficients.shape[0]

    def norm_sq(self):
        c = self.coefficients
        return float(np.real(c.conj() @ self.gram.entries @ c))


@dataclass(frozen=True, eq=False)
class CoherentState:
    """Amplitudes over the orthonormal Löwdin basis."""

    coefficients: np.ndarray

    @property
    def d(self):
        return self.coefficients.shape[0]

    def probs(self):
        return np.abs(self.coefficients) ** 2


@dataclass(frozen=True, eq=False)
class DensityCoefficients:
    """``rho = sum_ij rho_ij |b_i><b_j|`` for ``b`` either basis.

    ``basis`` is ``"nonorthogonal"`` (then ``gram`` is required and the trace
    condition is ``Tr[rho S] = 1``) or ``"lowdin"``.
    """

    matrix: np.ndarray
    basis: str
    gram: GramMatrix = None

    def __post_init__(self):
        m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidDensity(f"density matrix must be square, got {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > NORM_TOL:
            raise InvalidDensity("density matrix is not Hermitian")
        if self.basis == "lowdin":
            tr = np.trace(m).real
        elif self.basis == "nonorthogonal":
            if self.gram is None:
                raise InvalidDensity("nonorthogonal density needs its overlap matrix")
            if self.gram.d != m.shape[0]:
                raise DimensionMismatch("density and overlap dimensions differ")
            tr = np.trace(m @ self.gram.entries).real
        else:
            raise InvalidDensity(f"unknown basis tag {self.basis!r}")
        if abs(tr - 1.0) > NORM_TOL:
            raise InvalidDensity(f"trace condition violated: {tr!r}")


def _as_vector(coeffs):
    v = np.asarray(coeffs, dtype=complex)
    if v.ndim != 1:
        raise DimensionMismatch(f"coefficients must be a vector, got shape {v.shape}")
    return v


def make_superposition(coeffs, gram):
    """Normalise ``coeffs`` against ``gram``; the applied factor is kept in ``scale``."""
    v = _as_vector(coeffs)
    if v.shape[0] != gram.d:
        raise DimensionMismatch(f"{v.shape[0]} coefficients for a d={gram.d} basis")
    nsq = float(np.real(v.conj() @ gram.entries @ v))
    if not nsq > ZERO_NORM:
        raise ZeroVector("state has zero norm under the overlap matrix")
    scale = 1.0 / np.sqrt(nsq)
    out = v * scale
    out.setflags(write=False)
    return SuperpositionState(out, gram, float(scale))


def superposition_unchecked(coeffs, gram):
    """Wrap coefficients that must already be normalised (within ``NORM_TOL``)."""
    v = _as_vector(coeffs)
    if v.shape[0] != gram.d:
        raise DimensionMismatch(f"{v.shape[0]} coefficients for a d={gram.d} basis")
    st = SuperpositionState(v, gram)
    if abs(st.norm_sq() - 1.0) > NORM_TOL:
        raise NotNormalized(f"psi^dagger S psi = {st.norm_sq()!r}")
    return st


def make_coherent(coeffs, normalize=False):
    v = _as_vector(coeffs)
    nsq = float(np.sum(np.abs(v) ** 2))
    if normalize:
        if not nsq > ZERO_NORM:
            raise ZeroVector("state has zero norm")
        v = v / np.sqrt(nsq)
    elif abs(nsq - 1.0) > NORM_TOL:
        raise NotNormalized(f"sum |coef|^2 = {nsq!r}")
    return CoherentState(v)


def sorted_probs(state):
    p = np.sort(state.probs())[::-1]
    return np.ascontiguousarray(p)


def s_inner(a, b):
    """``a^dagger S b`` for two states over the same overlap matrix."""
    if not a.gram.same_as(b.gram):
        raise GramMismatch("states are expressed against different overlap matrices")
    return complex(a.coefficients.conj() @ a.gram.entries @ b.coefficients)


def pure_density(state):
    c = state.coefficients
    rho = np.outer(c, c.conj())
    if isinstance(state, CoherentState):
        return DensityCoefficients(rho, "lowdin")
    return DensityCoefficients(rho, "nonorthogonal", state.gram)


def equal_up_to_phase(a, b, tol=NORM_TOL):
    """True when ``a = e^{i theta} b`` componentwise within ``tol``."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    overlap = np.vdot(b, a)
    if abs(overlap) == 0:
        return bool(np.max(np.abs(a - b)) <= tol)
    phase = overlap / abs(overlap)
    return bool(np.max(np.abs(a - phase * b)) <= tol)
