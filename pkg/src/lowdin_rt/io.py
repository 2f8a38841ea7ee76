"""JSON encodings of overlap matrices and states.

Overlap::

    {"kind": "matrix", "re": [[...]], "im": [[...]]}   # "im" optional
    {"kind": "uniform", "d": 3, "s": -0.25}

State::

    {"basis": "nonorthogonal" | "lowdin",
     "coefficients": {"re": [...], "im": [...]},
     "overlap": <overlap>}                             # nonorthogonal only
"""
import json
from pathlib import Path

import numpy as np

from .errors import ValidationError
from .gram import EPS_PD, uniform_gram, validate
from .states import SuperpositionState, make_coherent, make_superposition


class SchemaError(ValidationError):
    pass


def _complex_array(obj, what):
    if not isinstance(obj, dict) or "re" not in obj:
        raise SchemaError(f"{what} needs an object with 're' (and optional 'im')")
    try:
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"{what}: {exc}") from exc
    if re.shape != im.shape:
        raise SchemaError(f"{what}: 're' shape {re.shape} != 'im' shape {im.shape}")
    return re + 1j * im


def gram_from_json(obj, eps_pd=EPS_PD):
    kind = obj.get("kind") if isinstance(obj, dict) else None
    if kind == "uniform":
        try:
            d, s = int(obj["d"]), float(obj["s"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"uniform overlap needs integer 'd' and real 's': {exc}") from exc
        return uniform_gram(d, s, eps_pd=eps_pd)
    if kind == "matrix":
        return validate(_complex_array(obj, "overlap matrix"), eps_pd=eps_pd)
    raise SchemaError(f"overlap 'kind' must be 'matrix' or 'uniform', got {kind!r}")


def gram_to_json(g, as_matrix=False):
    s = None if as_matrix else g.uniform_overlap(tol=0.0)
    if s is not None and np.all(g.entries.imag == 0):
        return {"kind": "uniform", "d": g.d, "s": s}
    return {
        "kind": "matrix",
        "re": g.entries.real.tolist(),
        "im": g.entries.imag.tolist(),
    }


def state_from_json(obj, eps_pd=EPS_PD):
    """Parse a state; returns a SuperpositionState or a CoherentState.

    Coefficients are normalised on load, matching the library constructors.
    """
    if not isinstance(obj, dict):
        raise SchemaError("state must be a JSON object")
    basis = obj.get("basis")
    coeffs = _complex_array(obj.get("coefficients"), "coefficients")
    if coeffs.ndim != 1:
        raise SchemaError("coefficients must be one-dimensional")
    if basis == "nonorthogonal":
        if "overlap" not in obj:
            raise SchemaError("nonorthogonal state needs an 'overlap'")
        return make_superposition(coeffs, gram_from_json(obj["overlap"], eps_pd=eps_pd))
    if basis == "lowdin":
        return make_coherent(coeffs, normalize=True)
    raise SchemaError(f"state 'basis' must be 'nonorthogonal' or 'lowdin', got {basis!r}")


def vector_to_json(v):
    v = np.asarray(v, dtype=complex)
    return {"re": v.real.tolist(), "im": v.imag.tolist()}


def state_to_json(state):
    if isinstance(state, SuperpositionState):
        return {
            "basis": "nonorthogonal",
            "coefficients": vector_to_json(state.coefficients),
            "overlap": gram_to_json(state.gram),
        }
    return {"basis": "lowdin", "coefficients": vector_to_json(state.coefficients)}


def load_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc
