"""Seeded random instances used by the randomized checks."""
import numpy as np

from .gram import random_gram  # noqa: F401
from .states import CoherentState, make_superposition


def haar_unitaries(d, n, rng):
    """``n`` Haar-random ``d x d`` unitaries (QR of complex Ginibre matrices, phase-fixed)."""
    z = (rng.standard_normal((n, d, d)) + 1j * rng.standard_normal((n, d, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r, axis1=1, axis2=2)
    return q * (diag / np.abs(diag))[:, None, :]


def random_coefficients(d, rng, complex_=True):
    v = rng.standard_normal(d)
    if complex_:
        v = v + 1j * rng.standard_normal(d)
    return v


def random_superposition(gram, rng, complex_=True):
    return make_superposition(random_coefficients(gram.d, rng, complex_), gram)


def random_coherent(d, rng, complex_=True):
    v = random_coefficients(d, rng, complex_)
    return CoherentState(v / np.linalg.norm(v))


def random_probs(d, rng, n=None):
    """Sorted non-increasing probability vectors (rows if ``n`` is given)."""
    shape = (d,) if n is None else (n, d)
    p = rng.exponential(size=shape)
    p /= p.sum(axis=-1, keepdims=True)
    return -np.sort(-p, axis=-1)
