"""Majorization, optimal single-copy conversion probabilities and distillation.

Conversion between pure coherent states follows the tail-sum criterion:
with both probability vectors sorted non-increasing,

    p_max = min_{j >= 1} min(1, tail_j(source) / tail_j(target)),

and the conversion is deterministic iff every source tail dominates the
corresponding target tail. A superposition-state conversion is carried out
by mapping both states to the Löwdin basis, converting there, and mapping
back, so it inherits the same probability.
"""
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import (
    DimensionMismatch,
    GramMismatch,
    NumericalError,
    OverlapOutOfGoldenRange,
    NotUniformOverlap,
)
from .golden import golden_from_coherent, maximally_coherent
from .lso import backward, forward
from .states import CoherentState, SuperpositionState, sorted_probs

MAJORIZATION_TOL = 1e-12
CLAMP_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class TransformReport:
    probability: float
    deterministic: bool
    source_bar: CoherentState
    target_bar: CoherentState
    binding_index: int
    """Tail index attaining the minimum; 0 when no tail ratio binds (p = 1)."""
    final_state: SuperpositionState = None


def _pad(p, q):
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    d = max(p.shape[0], q.shape[0])
    if p.shape[0] != d:
        p = np.concatenate([p, np.zeros(d - p.shape[0])])
    if q.shape[0] != d:
        q = np.concatenate([q, np.zeros(d - q.shape[0])])
    return p, q


def _check_probs(p, name):
    if p.ndim != 1:
        raise DimensionMismatch(f"{name} must be a vector")
    if np.any(np.diff(p) > 0):
        raise ValueError(f"{name} must be sorted non-increasing")
    if abs(p.sum() - 1.0) > 1e-10:
        raise ValueError(f"{name} must sum to 1, got {p.sum()!r}")


def majorizes(p, q):
    """True iff every tail sum of ``p`` is at least the matching tail of ``q``.

    That is the condition for turning the state with probabilities ``p`` into
    the one with ``q`` deterministically (``p`` is majorized by ``q`` in the
    usual partial-sum language). Shorter vectors are zero-padded.
    """
    p, q = _pad(p, q)
    _check_probs(p, "p")
    _check_probs(q, "q")
    _, _, ok = _kernels.pmax_rows(p[None, :], q[None, :], MAJORIZATION_TOL)
    return bool(ok[0])


def pmax_batch(src_probs, tgt_probs):
    """Vectorised tail-ratio probabilities for rows of sorted probability vectors.

    Returns ``(probability, binding_index, majorized)`` arrays.
    """
    src = np.ascontiguousarray(src_probs, dtype=float)
    tgt = np.ascontiguousarray(tgt_probs, dtype=float)
    if src.shape != tgt.shape or src.ndim != 2:
        raise DimensionMismatch(f"shapes {src.shape} and {tgt.shape} differ")
    return _kernels.pmax_rows(src, tgt, MAJORIZATION_TOL)


def max_coherence_transform_prob(src, tgt):
    p, q = _pad(sorted_probs(src), sorted_probs(tgt))
    prob, binding, ok = _kernels.pmax_rows(p[None, :], q[None, :], MAJORIZATION_TOL)
    prob = float(prob[0])
    if prob < -CLAMP_TOL or prob > 1.0 + CLAMP_TOL:
        raise NumericalError(f"probability {prob!r} outside [0, 1]")
    prob = min(max(prob, 0.0), 1.0)
    return TransformReport(
        probability=prob,
        deterministic=bool(ok[0]),
        source_bar=src,
        target_bar=tgt,
        binding_index=int(binding[0]),
    )


def superposition_transform(lmap, psi, phi):
    """Convert ``psi`` into ``phi`` through the Löwdin basis."""
    if not psi.gram.same_as(phi.gram):
        raise GramMismatch("source and target use different overlap matrices")
    if not lmap.gram.same_as(psi.gram):
        raise GramMismatch("map and states use different overlap matrices")
    src_bar = forward(lmap, psi)
    tgt_bar = forward(lmap, phi)
    rep = max_coherence_transform_prob(src_bar, tgt_bar)
    return TransformReport(
        probability=rep.probability,
        deterministic=rep.deterministic,
        source_bar=src_bar,
        target_bar=tgt_bar,
        binding_index=rep.binding_index,
        final_state=backward(lmap, tgt_bar),
    )


def distill_coherence_prob(bar):
    """``d`` times the smallest squared amplitude.

    Values within ``CLAMP_TOL`` of 1 are reported as exactly 1, so a
    maximally coherent input distils with certainty despite rounding in
    ``|1/sqrt(d)|^2``.
    """
    probs = bar.probs()
    p = bar.d * float(probs.min())
    if p > 1.0 + CLAMP_TOL:
        raise NumericalError(f"distillation probability {p!r} exceeds 1")
    return 1.0 if p >= 1.0 - CLAMP_TOL else p


def superposition_distill(lmap, psi):
    """Single-copy distillation of ``psi`` into the uniform golden state.

    Only defined for a uniform overlap ``s <= 0``.
    """
    if not lmap.gram.same_as(psi.gram):
        raise GramMismatch("map and state use different overlap matrices")
    s = lmap.gram.uniform_overlap()
    if s is None:
        raise NotUniformOverlap("distillation target is only defined for a uniform overlap")
    if s > 0:
        raise OverlapOutOfGoldenRange(f"uniform golden state needs s <= 0, got s={s!r}")
    bar = forward(lmap, psi)
    target_bar = maximally_coherent(lmap.d)
    prob = distill_coherence_prob(bar)
    return TransformReport(
        probability=prob,
        deterministic=prob >= 1.0 - CLAMP_TOL,
        source_bar=bar,
        target_bar=target_bar,
        binding_index=0 if prob >= 1.0 - CLAMP_TOL else lmap.d - 1,
        final_state=golden_from_coherent(lmap, target_bar),
    )
