"""Command-line front end.

Examples::

    lowdin-rt lowdin gram.json --format json
    lowdin-rt transform psi.json phi.json
    lowdin-rt golden 3 -0.25 --sign plus
    lowdin-rt sweep --eta 3 --s-min -0.9 --s-max 0.9 --step 0.01 --out fig3.csv

Exit codes: 0 success, 1 numerical failure, 2 invalid input.
"""
import argparse
import csv
import json
import logging
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import gram as gram_mod
from . import io, lso, measures, transform
from .errors import GramMismatch, NumericalError, ValidationError
from .golden import GoldenSpec
from .states import CoherentState, SuperpositionState, pure_density

log = logging.getLogger("lowdin_rt")

EXIT_OK, EXIT_NUMERIC, EXIT_INPUT = 0, 1, 2


@dataclass
class RunConfig:
    subcommand: str
    inputs: list = field(default_factory=list)
    output_format: str = "text"
    digits: int = 9
    eps_pd: float = gram_mod.EPS_PD
    log_level: str = "WARNING"

    def __post_init__(self):
        if self.digits <= 0 or self.eps_pd <= 0:
            raise ValidationError("tolerances and --digits must be positive")


# -- formatting -------------------------------------------------------------

def _num(x, digits):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    return float(f"{float(x):.{digits}g}")


def _round(obj, digits):
    """Round every float in a nested structure to ``digits`` significant digits."""
    if isinstance(obj, dict):
        return {k: _round(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v, digits) for v in obj]
    if isinstance(obj, np.ndarray):
        return _round(obj.tolist(), digits)
    if isinstance(obj, complex):
        return {"re": _num(obj.real, digits), "im": _num(obj.imag, digits)}
    if isinstance(obj, (float, int, np.floating, np.integer, np.bool_, bool)):
        return _num(obj, digits)
    return obj


def _cx(arr):
    arr = np.asarray(arr, dtype=complex)
    return {"re": arr.real.tolist(), "im": arr.imag.tolist()}


def _fmt_scalar(z, digits):
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.{digits}g}"
    return f"{z.real:.{digits}g}{z.imag:+.{digits}g}j"


def _text(result, digits, prefix=""):
    lines = []
    for key, val in result.items():
        key = prefix + key
        if isinstance(val, dict) and set(val) == {"re", "im"}:
            arr = np.asarray(val["re"]) + 1j * np.asarray(val["im"])
            if arr.ndim == 2:
                lines.append(f"{key}:")
                for row in arr:
                    lines.append("  " + "  ".join(_fmt_scalar(z, digits) for z in row))
            else:
                lines.append(f"{key}: " + "  ".join(_fmt_scalar(z, digits) for z in np.atleast_1d(arr)))
        elif isinstance(val, dict):
            lines.append(_text(val, digits, prefix=f"{key}.").rstrip("\n"))
        elif isinstance(val, (list, tuple, np.ndarray)):
            lines.append(f"{key}: " + "  ".join(_fmt_scalar(z, digits) for z in np.ravel(val)))
        elif isinstance(val, (float, np.floating)):
            lines.append(f"{key}: {val:.{digits}g}")
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"


def _flatten(prefix, val, out):
    if isinstance(val, dict):
        for k, v in val.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(val, list):
        for i, v in enumerate(val):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, val))


def _emit(result, cfg, raw=None, stream=None):
    """Print ``result``; ``raw`` entries bypass rounding (full-precision round-trip data)."""
    stream = stream or sys.stdout
    fmt = cfg.output_format
    if fmt == "json":
        payload = _round(result, cfg.digits)
        if raw:
            payload.update(raw)
        stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        rows = []
        _flatten("", _round(result, cfg.digits), rows)
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerows(rows)
    else:
        stream.write(_text(result, cfg.digits))


# -- subcommands ------------------------------------------------------------

def _load_gram(path, cfg):
    return io.gram_from_json(io.load_json(path), eps_pd=cfg.eps_pd)


def _load_state(path, cfg):
    return io.state_from_json(io.load_json(path), eps_pd=cfg.eps_pd)


def _verify_minimality(lmap, n, seed):
    from .sampling import haar_unitaries

    rng = np.random.default_rng(seed)
    ws = haar_unitaries(lmap.d, n, rng)
    d_sym = float(lso.lowdin_distance(lmap.inv_sqrt_s, lmap.gram)[0])
    others = lso.lowdin_distance(ws @ lmap.inv_sqrt_s, lmap.gram)
    return {
        "samples": n,
        "seed": seed,
        "distance_symmetric": d_sym,
        "distance_min_sampled": float(others.min()),
        "holds": bool(np.all(d_sym <= others + 1e-10)),
    }


def cmd_lowdin(args, cfg):
    g = _load_gram(args.gram, cfg)
    lmap = lso.build(g)
    result = {
        "d": g.d,
        "eigenvalues": lmap.eig.eigenvalues,
        "sqrt_s": _cx(lmap.sqrt_s),
        "inv_sqrt_s": _cx(lmap.inv_sqrt_s),
        "lowdin_basis_rows": _cx(lmap.basis_rows()),
    }
    s = g.uniform_overlap()
    if s is not None:
        cf = lso.uniform_mu_kappa(g.d, s)
        result["uniform"] = {"s": s, "mu": cf.mu, "kappa": cf.kappa}
        if cf.alpha is not None:
            result["uniform"].update(alpha=cf.alpha, beta=cf.beta)
    code = EXIT_OK
    if args.verify_minimality:
        result["minimality"] = _verify_minimality(lmap, args.verify_minimality, args.seed)
        if not result["minimality"]["holds"]:
            code = EXIT_NUMERIC
    _emit(result, cfg, raw={"gram": io.gram_to_json(g, as_matrix=True)})
    return code


def cmd_forward(args, cfg):
    psi = _load_state(args.state, cfg)
    if not isinstance(psi, SuperpositionState):
        raise ValidationError("forward expects a state in the nonorthogonal basis")
    bar = lso.forward(lso.build(psi.gram), psi)
    result = {
        "coefficients": _cx(bar.coefficients),
        "probabilities": bar.probs(),
    }
    _emit(result, cfg, raw={"state": io.state_to_json(bar)})
    return EXIT_OK


def cmd_backward(args, cfg):
    bar = _load_state(args.state, cfg)
    if not isinstance(bar, CoherentState):
        raise ValidationError("backward expects a state in the Löwdin basis")
    g = _load_gram(args.gram, cfg)
    phi = lso.backward(lso.build(g), bar)
    result = {"coefficients": _cx(phi.coefficients), "norm_sq": phi.norm_sq()}
    _emit(result, cfg, raw={"state": io.state_to_json(phi)})
    return EXIT_OK


def _report_dict(rep):
    out = {
        "probability": rep.probability,
        "deterministic": rep.deterministic,
        "binding_index": rep.binding_index,
        "source_bar": _cx(rep.source_bar.coefficients),
        "target_bar": _cx(rep.target_bar.coefficients),
    }
    if rep.final_state is not None:
        out["final_state"] = _cx(rep.final_state.coefficients)
    return out


def cmd_transform(args, cfg):
    src = _load_state(args.source, cfg)
    tgt = _load_state(args.target, cfg)
    if isinstance(src, SuperpositionState) and isinstance(tgt, SuperpositionState):
        if not src.gram.same_as(tgt.gram):
            raise GramMismatch("source and target use different overlap matrices")
        rep = transform.superposition_transform(lso.build(src.gram), src, tgt)
    elif isinstance(src, CoherentState) and isinstance(tgt, CoherentState):
        rep = transform.max_coherence_transform_prob(src, tgt)
    else:
        raise ValidationError("source and target must be written in the same basis")
    _emit(_report_dict(rep), cfg)
    return EXIT_OK


def cmd_distill(args, cfg):
    st = _load_state(args.state, cfg)
    if isinstance(st, SuperpositionState):
        rep = transform.superposition_distill(lso.build(st.gram), st)
        result = _report_dict(rep)
    else:
        p = transform.distill_coherence_prob(st)
        result = {"probability": p, "deterministic": p == 1.0}
    _emit(result, cfg)
    return EXIT_OK


def cmd_golden(args, cfg):
    state = GoldenSpec(args.d, args.s, args.sign).build()
    result = {
        "d": args.d,
        "s": args.s,
        "sign": args.sign,
        "coefficients": _cx(state.coefficients),
        "norm_sq": state.norm_sq(),
    }
    _emit(result, cfg, raw={"state": io.state_to_json(state)})
    return EXIT_OK


def cmd_measure(args, cfg):
    st = _load_state(args.state, cfg)
    base = math.e if args.log_base == "e" else 2.0
    result = {}
    if isinstance(st, SuperpositionState):
        result["l1_superposition"] = measures.l1_of_state(st)
        bar = lso.forward(lso.build(st.gram), st)
    else:
        bar = st
    result["l1_coherence"] = measures.l1_of_state(bar)
    result["rel_entropy_coherence"] = measures.rel_entropy_coherence(pure_density(bar), base=base)
    result["log_base"] = args.log_base
    _emit(result, cfg)
    return EXIT_OK


def cmd_sweep(args, cfg):
    rows = measures.sweep_l1(args.eta, args.s_min, args.s_max, args.step)
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            measures.write_sweep_csv(rows, fh, digits=cfg.digits)
        log.info("wrote %d rows to %s", len(rows), args.out)
    else:
        measures.write_sweep_csv(rows, sys.stdout, digits=cfg.digits)
    return EXIT_OK


# -- argument parsing -------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--digits", type=int, default=9, help="significant digits in output (default 9)")
    common.add_argument("--eps-pd", type=float, default=gram_mod.EPS_PD,
                        help="smallest admissible overlap eigenvalue (default 1e-9)")
    common.add_argument("--log-level", default="WARNING")

    ap = argparse.ArgumentParser(prog="lowdin-rt", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("lowdin", parents=[common], help="S^(1/2), S^(-1/2), spectrum, Löwdin basis")
    p.add_argument("gram")
    p.add_argument("--verify-minimality", type=int, default=0, metavar="N",
                   help="compare against N random orthonormalisations")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_lowdin)

    p = sub.add_parser("forward", parents=[common], help="nonorthogonal -> Löwdin amplitudes")
    p.add_argument("state")
    p.set_defaults(func=cmd_forward)

    p = sub.add_parser("backward", parents=[common], help="Löwdin -> nonorthogonal amplitudes")
    p.add_argument("state")
    p.add_argument("--gram", required=True)
    p.set_defaults(func=cmd_backward)

    p = sub.add_parser("transform", parents=[common], help="optimal conversion probability")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("distill", parents=[common], help="single-copy distillation probability")
    p.add_argument("state")
    p.set_defaults(func=cmd_distill)

    p = sub.add_parser("golden", parents=[common], help="golden state for a uniform overlap")
    p.add_argument("d", type=int)
    p.add_argument("s", type=float)
    p.add_argument("--sign", choices=("plus", "minus"), default="plus")
    p.set_defaults(func=cmd_golden)

    p = sub.add_parser("measure", parents=[common], help="l1 and relative entropy measures")
    p.add_argument("state")
    p.add_argument("--log-base", choices=("e", "2"), default="e")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("sweep", parents=[common], help="qubit l1 sweep over the overlap (CSV)")
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--s-min", type=float, default=-0.99)
    p.add_argument("--s-max", type=float, default=0.99)
    p.add_argument("--step", type=float, default=0.01)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = RunConfig(
            subcommand=args.subcommand,
            inputs=[v for k, v in vars(args).items() if k in ("gram", "state", "source", "target")],
            output_format=args.output_format,
            digits=args.digits,
            eps_pd=args.eps_pd,
            log_level=args.log_level,
        )
        return args.func(args, cfg)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NumericalError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
