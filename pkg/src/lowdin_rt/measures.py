"""l1 and relative-entropy quantifiers, the qubit zero-coherence locus and the l1 sweep."""
import csv
import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import EmptyRange, InvalidDensity, NotNormalized, OverlapOutOfRange, ZeroEta
from .states import NORM_TOL, CoherentState, DensityCoefficients, pure_density

log = logging.getLogger(__name__)

SINGULAR_EPS = 1e-9
PSD_TOL = 1e-10


@dataclass(frozen=True)
class SweepRow:
    s: float
    m_l1_sup: float
    m_l1_coh: float


def l1_measure(rho):
    m = rho.matrix if isinstance(rho, DensityCoefficients) else np.asarray(rho, dtype=complex)
    return float(_kernels.offdiag_abs_sum(np.ascontiguousarray(m, dtype=complex)))


def l1_of_state(state):
    """l1 measure of ``|x><x|`` in the basis the state is written in."""
    return l1_measure(pure_density(state))


def l1_pair_qubit(psi0, psi1, s):
    """Closed-form ``(M_l1(rho), M_l1(rho_bar))`` for a real qubit state and overlap ``s``."""
    nsq = psi0 * psi0 + psi1 * psi1 + 2.0 * s * psi0 * psi1
    if abs(nsq - 1.0) > NORM_TOL:
        raise NotNormalized(f"psi^dagger S psi = {nsq!r}")
    return 2.0 * abs(psi0 * psi1), abs(2.0 * psi0 * psi1 + s * (psi0 * psi0 + psi1 * psi1))


def _entropy(p, base):
    p = p[p > 0]
    h = -float(np.sum(p * np.log(p)))
    return h / math.log(base) if base != math.e else h


def rel_entropy_coherence(bar_rho, base=math.e):
    """``S(diag rho) - S(rho)`` of a density matrix over the Löwdin basis."""
    if isinstance(bar_rho, CoherentState):
        bar_rho = pure_density(bar_rho)
    if not isinstance(bar_rho, DensityCoefficients):
        bar_rho = DensityCoefficients(np.asarray(bar_rho, dtype=complex), "lowdin")
    if bar_rho.basis != "lowdin":
        raise InvalidDensity("relative entropy of coherence needs a Löwdin-basis density")
    m = bar_rho.matrix
    lam = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    if lam[0] < -PSD_TOL:
        raise InvalidDensity(f"density has negative eigenvalue {lam[0]:.3g}")
    lam = np.clip(lam, 0.0, None)
    diag = np.clip(np.diag(m).real, 0.0, None)
    return max(_entropy(diag, base) - _entropy(lam, base), 0.0)


def zero_coherence_overlap(eta):
    """Overlap at which ``x(eta|c_0> + |c_1>)`` has no Löwdin-basis coherence."""
    if eta == 0:
        raise ZeroEta("eta must be non-zero")
    s = -2.0 * eta / (eta * eta + 1.0)
    if not (-1.0 < s < 1.0):
        raise OverlapOutOfRange(f"eta={eta!r} gives the degenerate overlap s={s!r}")
    return s


def overlap_grid(s_min, s_max, step):
    if not step > 0:
        raise EmptyRange(f"step must be positive, got {step!r}")
    if s_max < s_min:
        raise EmptyRange(f"empty range [{s_min!r}, {s_max!r}]")
    if not (-1.0 < s_min and s_max < 1.0):
        raise OverlapOutOfRange(f"[{s_min!r}, {s_max!r}] is not inside (-1, 1)")
    n = int(math.floor((s_max - s_min) / step + 1e-9)) + 1
    # round away the accumulated representation error so grid points print cleanly
    return np.round(s_min + step * np.arange(n), 12)


def sweep_l1(eta, s_min, s_max, step):
    """l1 of ``x(eta|c_0> + |c_1>)`` and of its Löwdin image along an overlap grid."""
    if eta == 0:
        raise ZeroEta("eta must be non-zero")
    grid = overlap_grid(s_min, s_max, step)
    sup, coh, valid = _kernels.qubit_l1_sweep(float(eta), grid, SINGULAR_EPS)
    if not np.all(valid):
        skipped = grid[~valid]
        warnings.warn(
            f"skipped {skipped.size} overlap values where the state cannot be normalised",
            RuntimeWarning,
            stacklevel=2,
        )
    return [
        SweepRow(float(s), float(a), float(b))
        for s, a, b, ok in zip(grid, sup, coh, valid)
        if ok
    ]


def write_sweep_csv(rows, fh, digits=9):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["s", "m_l1_superposition", "m_l1_coherent"])
    fmt = f"{{:.{digits}g}}"
    for r in rows:
        w.writerow([fmt.format(r.s), fmt.format(r.m_l1_sup), fmt.format(r.m_l1_coh)])
