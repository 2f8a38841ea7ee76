"""Inner loops, each in two flavours: explicit loops compiled by numba and a
vectorised numpy equivalent.

The public names at the bottom of the module are bound to one flavour
according to ``_config.USE_JIT``. Both flavours are always importable so
the test-suite and the benchmark can compare them directly.

The tail-sum kernels accumulate from the last entry towards the first in
both flavours (``np.cumsum`` is sequential), so the two paths agree
bit-for-bit, not just to rounding.
"""
import numpy as np

from ._config import JIT_CACHE, USE_JIT, HAVE_NUMBA


# -- tail-ratio transformation probability ---------------------------------

def _pmax_rows_loops(src, tgt, tol):
    n, d = src.shape
    prob = np.empty(n)
    binding = np.zeros(n, dtype=np.int64)
    majorized = np.empty(n, dtype=np.bool_)
    tail_s = np.empty(d)
    tail_t = np.empty(d)
    for r in range(n):
        acc_s = 0.0
        acc_t = 0.0
        for i in range(d - 1, -1, -1):
            acc_s += src[r, i]
            acc_t += tgt[r, i]
            tail_s[i] = acc_s
            tail_t[i] = acc_t
        best = np.inf
        best_j = 0
        ok = True
        for j in range(1, d):
            if tail_s[j] < tail_t[j] - tol:
                ok = False
            if tail_t[j] > 0.0:
                ratio = tail_s[j] / tail_t[j]
                if ratio < best:
                    best = ratio
                    best_j = j
        majorized[r] = ok
        if ok:
            prob[r] = 1.0
            binding[r] = 0
        else:
            prob[r] = best if best < 1.0 else 1.0
            binding[r] = best_j
    return prob, binding, majorized


def _pmax_rows_numpy(src, tgt, tol):
    n, d = src.shape
    tail_s = np.cumsum(src[:, ::-1], axis=1)[:, ::-1][:, 1:]
    tail_t = np.cumsum(tgt[:, ::-1], axis=1)[:, ::-1][:, 1:]
    majorized = np.all(tail_s >= tail_t - tol, axis=1)
    if d < 2:
        return np.ones(n), np.zeros(n, dtype=np.int64), majorized
    positive = tail_t > 0.0
    safe = np.where(positive, tail_t, 1.0)
    ratios = np.where(positive, tail_s / safe, np.inf)
    arg = np.argmin(ratios, axis=1)
    best = ratios[np.arange(n), arg]
    prob = np.where(majorized, 1.0, np.minimum(best, 1.0))
    binding = np.where(majorized, 0, arg + 1).astype(np.int64)
    return prob, binding, majorized


# -- Löwdin displacement  sum_i ||c_i - l_i||^2 -----------------------------

def _lowdin_distance_loops(transforms, gram):
    n, d, _ = transforms.shape
    out = np.empty(n)
    for r in range(n):
        acc = 0.0
        for i in range(d):
            for k in range(d):
                acc += (transforms[r, i, k] * gram[k, i]).real
        out[r] = 2.0 * d - 2.0 * acc
    return out


def _lowdin_distance_numpy(transforms, gram):
    d = gram.shape[0]
    return 2.0 * d - 2.0 * np.einsum("nik,ki->n", transforms, gram).real


# -- l1 off-diagonal mass ---------------------------------------------------

def _offdiag_abs_sum_loops(rho):
    d = rho.shape[0]
    acc = 0.0
    for i in range(d):
        for j in range(d):
            if i != j:
                acc += abs(rho[i, j])
    return acc


def _offdiag_abs_sum_numpy(rho):
    d = rho.shape[0]
    return float(np.abs(rho[~np.eye(d, dtype=bool)]).sum())


# -- qubit l1 sweep over the overlap ---------------------------------------

def _qubit_l1_sweep_loops(eta, overlaps, eps):
    n = overlaps.shape[0]
    sup = np.zeros(n)
    coh = np.zeros(n)
    valid = np.zeros(n, dtype=np.bool_)
    for r in range(n):
        s = overlaps[r]
        denom = eta * eta + 2.0 * s * eta + 1.0
        if denom > eps:
            x2 = 1.0 / denom
            valid[r] = True
            sup[r] = 2.0 * abs(eta) * x2
            coh[r] = abs(2.0 * eta + s * (eta * eta + 1.0)) * x2
    return sup, coh, valid


def _qubit_l1_sweep_numpy(eta, overlaps, eps):
    denom = eta * eta + 2.0 * overlaps * eta + 1.0
    valid = denom > eps
    x2 = np.where(valid, 1.0 / np.where(valid, denom, 1.0), 0.0)
    sup = np.where(valid, 2.0 * abs(eta) * x2, 0.0)
    coh = np.where(valid, np.abs(2.0 * eta + overlaps * (eta * eta + 1.0)) * x2, 0.0)
    return sup, coh, valid


if HAVE_NUMBA:
    from numba import njit

    pmax_rows_jit = njit(cache=JIT_CACHE)(_pmax_rows_loops)
    lowdin_distance_jit = njit(cache=JIT_CACHE)(_lowdin_distance_loops)
    offdiag_abs_sum_jit = njit(cache=JIT_CACHE)(_offdiag_abs_sum_loops)
    qubit_l1_sweep_jit = njit(cache=JIT_CACHE)(_qubit_l1_sweep_loops)
else:  # pragma: no cover
    pmax_rows_jit = _pmax_rows_loops
    lowdin_distance_jit = _lowdin_distance_loops
    offdiag_abs_sum_jit = _offdiag_abs_sum_loops
    qubit_l1_sweep_jit = _qubit_l1_sweep_loops

pmax_rows_numpy = _pmax_rows_numpy
lowdin_distance_numpy = _lowdin_distance_numpy
offdiag_abs_sum_numpy = _offdiag_abs_sum_numpy
qubit_l1_sweep_numpy = _qubit_l1_sweep_numpy

if USE_JIT:
    pmax_rows = pmax_rows_jit
    lowdin_distance = lowdin_distance_jit
    offdiag_abs_sum = offdiag_abs_sum_jit
    qubit_l1_sweep = qubit_l1_sweep_jit
else:
    pmax_rows = pmax_rows_numpy
    lowdin_distance = lowdin_distance_numpy
    offdiag_abs_sum = offdiag_abs_sum_numpy
    qubit_l1_sweep = qubit_l1_sweep_numpy
