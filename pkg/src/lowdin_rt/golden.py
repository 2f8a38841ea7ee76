"""Maximally coherent states and the golden (maximal superposition) states they map to."""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotMaximallyCoherent, OverlapOutOfGoldenRange
from .gram import uniform_gram
from .lso import backward
from .states import NORM_TOL, CoherentState, SuperpositionState


@dataclass(frozen=True)
class GoldenSpec:
    d: int
    s: float
    sign: str = "plus"

    def __post_init__(self):
        if self.sign not in ("plus", "minus"):
            raise ValueError(f"sign must be 'plus' or 'minus', got {self.sign!r}")
        if self.sign == "plus":
            _check_plus_range(self.d, self.s)
        else:
            _check_minus_range(self.d, self.s)

    def build(self):
        if self.sign == "plus":
            return golden_plus(self.d, self.s)
        return golden_minus_2d(self.s)


def _check_plus_range(d, s):
    if d < 2:
        raise DimensionMismatch(f"dimension must be >= 2, got {d}")
    lo = 1.0 / (1.0 - d)
    if not (lo < s <= 0.0):
        raise OverlapOutOfGoldenRange(f"plus golden state needs s in ({lo:.6g}, 0], got {s!r}")


def _check_minus_range(d, s):
    if d != 2:
        raise OverlapOutOfGoldenRange("minus golden state is only constructed for d = 2")
    if not (0.0 <= s < 1.0):
        raise OverlapOutOfGoldenRange(f"minus golden state needs s in [0, 1), got {s!r}")


def maximally_coherent(d, phases=None):
    if d < 2:
        raise DimensionMismatch(f"dimension must be >= 2, got {d}")
    if phases is None:
        return CoherentState(np.full(d, 1.0 / np.sqrt(d), dtype=complex))
    phases = np.asarray(phases, dtype=float)
    if phases.shape != (d,):
        raise DimensionMismatch(f"expected {d} phases, got shape {phases.shape}")
    return CoherentState(np.exp(1j * phases) / np.sqrt(d))


def golden_plus(d, s):
    _check_plus_range(d, s)
    amp = 1.0 / np.sqrt(d * (1.0 + (d - 1) * s))
    return SuperpositionState(np.full(d, amp, dtype=complex), uniform_gram(d, s))


def golden_minus_2d(s):
    _check_minus_range(2, s)
    amp = 1.0 / np.sqrt(2.0 * (1.0 - s))
    return SuperpositionState(np.array([amp, -amp], dtype=complex), uniform_gram(2, s))


def golden_from_coherent(lmap, phi):
    probs = phi.probs()
    if phi.d != lmap.d:
        raise DimensionMismatch(f"d={phi.d} state for a d={lmap.d} map")
    if np.max(np.abs(probs - 1.0 / phi.d)) > NORM_TOL:
        raise NotMaximallyCoherent("every squared amplitude must equal 1/d")
    return backward(lmap, phi)
