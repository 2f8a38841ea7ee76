"""Löwdin symmetric orthogonalization and the maps between the two bases.

The Löwdin vectors are ``|l_i> = sum_j (S^{-1/2})_{ij} |c_j>``. A state
``sum_i psi_i |c_i>`` has Löwdin amplitudes ``S^{1/2} psi`` (forward map),
and ``S^{-1/2}`` takes them back (backward map).
"""
import warnings
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DimensionMismatch, GramMismatch, ZeroCoherenceWarning
from .gram import (
    EigenSystem,
    GramMatrix,
    check_uniform_range,
    matrix_inv_sqrt,
    matrix_sqrt,
    spectral_decompose,
)
from .states import (
    CoherentState,
    SuperpositionState,
    _as_vector,
    NORM_TOL,
)


@dataclass(frozen=True, eq=False)
class LowdinMap:
    gram: GramMatrix
    sqrt_s: np.ndarray
    inv_sqrt_s: np.ndarray
    eig: EigenSystem

    @property
    def d(self):
        return self.gram.d

    def basis_rows(self):
        """Row ``i`` holds the coefficients of ``|l_i>`` over ``{|c_j>}``."""
        return self.inv_sqrt_s


@dataclass(frozen=True)
class UniformClosedForm:
    d: int
    s: float
    mu: float
    kappa: float
    alpha: float = None
    beta: float = None


def build(g):
    eig = spectral_decompose(g)
    sq = matrix_sqrt(g, eig)
    isq = matrix_inv_sqrt(g, eig)
    for m in (sq, isq):
        m.setflags(write=False)
    return LowdinMap(g, sq, isq, eig)


def _is_free(probs, tol=NORM_TOL):
    # l1 coherence of a pure state vanishes iff a single amplitude carries everything
    return np.count_nonzero(probs > tol) <= 1


def forward(lmap, psi):
    if not lmap.gram.same_as(psi.gram):
        raise GramMismatch("state and map use different overlap matrices")
    bar = lmap.sqrt_s @ psi.coefficients
    if _is_free(np.abs(bar) ** 2) and not _is_free(np.abs(psi.coefficients) ** 2):
        warnings.warn(
            "forward map produced an incoherent Löwdin state from a genuine "
            "superposition; coherence-based transformations do not apply",
            ZeroCoherenceWarning,
            stacklevel=2,
        )
    return CoherentState(bar)


def backward(lmap, bar):
    if bar.d != lmap.d:
        raise DimensionMismatch(f"d={bar.d} state for a d={lmap.d} map")
    return SuperpositionState(lmap.inv_sqrt_s @ bar.coefficients, lmap.gram)


def uniform_mu_kappa(d, s):
    check_uniform_range(d, s)
    top = 1.0 / np.sqrt(1.0 + (d - 1) * s)
    rest = 1.0 / np.sqrt(1.0 - s)
    mu = (top + (d - 1) * rest) / d
    kappa = (top - rest) / d
    if d == 2:
        # lambda_0 = 1 - s, lambda_1 = 1 + s
        alpha = (top + rest) / 2.0
        beta = (top - rest) / 2.0
        return UniformClosedForm(d, float(s), float(mu), float(kappa), float(alpha), float(beta))
    return UniformClosedForm(d, float(s), float(mu), float(kappa))


def uniform_g(x, d, s):
    """Löwdin amplitudes of ``x`` for the uniform overlap ``s`` in closed form.

    ``x`` is a :class:`SuperpositionState` or a plain coefficient vector.
    """
    cf = uniform_mu_kappa(d, s)
    v = x.coefficients if isinstance(x, SuperpositionState) else _as_vector(x)
    if v.shape[0] != d:
        raise DimensionMismatch(f"{v.shape[0]} coefficients for d={d}")
    lam_low = 1.0 - s
    lam_top = 1.0 + (d - 1) * s
    others = v.sum() - v
    g = np.sqrt(lam_top * lam_low) * ((cf.mu + (d - 2) * cf.kappa) * v - cf.kappa * others)
    return CoherentState(g)


def uniform_inv_sqrt(d, s):
    """``S^{-1/2}`` for a uniform overlap: ``mu`` on the diagonal, ``kappa`` off it."""
    cf = uniform_mu_kappa(d, s)
    m = np.full((d, d), cf.kappa)
    np.fill_diagonal(m, cf.mu)
    return m


def lowdin_distance(transforms, g):
    """``sum_i ||c_i - l_i||^2`` for each orthonormalising ``T`` in a stack.

    Uses only the overlap matrix: for ``T S T^dagger = I`` the displacement
    is ``2d - 2 Re tr(T S)``.
    """
    t = np.ascontiguousarray(np.asarray(transforms, dtype=complex))
    if t.ndim == 2:
        t = t[None]
    return _kernels.lowdin_distance(t, np.ascontiguousarray(g.entries))
