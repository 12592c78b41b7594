"""Command-line front end.

Exit codes: 0 clean, 1 verification found failures or ambiguity,
2 configuration or derivation error.
"""

import argparse
import json
import logging
import os
import re
import sys

from .analysis import (
    EXHAUSTIVE,
    ModelConfig,
    check_theorem1,
    dof_sweep,
    rows_to_csv,
    sampled,
    verify_zero_error,
)
from .channel import ChannelSpec, Semantics
from .codecs import model1_derive, model2_derive, model3_derive
from .codecs.model1 import infer_leading
from .codecs.model3 import K3_CHANNEL
from .errors import DetAlignError, InvalidParameter
from .numtheory import is_prime, primes_upto
from .polynomial import MultiPoly, degree_profile, parse_poly

log = logging.getLogger("detalign")

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class UsageError(DetAlignError):
    pass


def _common(parser, q_help="field prime q"):
    g = parser.add_argument_group("channel and scheme")
    g.add_argument("--model", type=int, choices=(1, 2, 3), help="scheme: 1, 2 or 3")
    g.add_argument("--config", metavar="PATH", help="JSON channel spec with fields K, h, q, semantics")
    g.add_argument("--K", type=int, default=None, help="number of users (default 3, or from --config)")
    g.add_argument("--q", default=None, help=q_help)
    g.add_argument("--h", default=None, help="channel polynomial over X1..XK (Model 1; default 'X1 + X2*X3')")
    g.add_argument("--a", type=int, default=None, help="Model 1 leading coefficient (default: read from h)")
    g.add_argument("--d", type=int, default=None, help="Model 1 leading exponent (default: read from h)")
    g.add_argument(
        "--mode",
        choices=("paper-literal", "repaired"),
        default=None,
        help="Model 1 inner-prime rule (default: paper-literal when d has odd part 1, else repaired)",
    )
    g.add_argument("--p-min", default=None, help="Model 1 floor for the inner prime p (comma list in sweep)")
    g.add_argument("--f", default=None, help="Model 2 desired-signal polynomial in X1 (default 'X1^2')")
    g.add_argument("--g", default=None, help="Model 2 interference polynomial over X2..XK (default 'X2*X3')")
    g.add_argument("--t", type=int, default=None, help="Model 2 vanish point (default 0)")
    g.add_argument("--codebook", choices=("paper", "strict"), default="paper", help="Model 3 codebook bound")
    g.add_argument(
        "--center",
        choices=("derived", "paper-literal"),
        default="derived",
        help="Model 3 completing-the-square center (paper-literal for comparison only)",
    )
    g.add_argument(
        "--semantics",
        choices=("mod_q", "integer"),
        default=None,
        help="channel arithmetic (default: integer for Model 1, mod_q otherwise)",
    )
    o = parser.add_argument_group("execution and output")
    o.add_argument("--out", metavar="PATH", default=None, help="write output here instead of stdout")
    o.add_argument("--workers", type=int, default=None, help="parallel workers (default: CPU count)")


def build_parser():
    parser = argparse.ArgumentParser(prog="detalign", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("derive", help="derive scheme parameters and print them as JSON")
    _common(p)

    p = sub.add_parser("verify", help="verify zero-error decoding against the collision oracle")
    _common(p)
    scope = p.add_mutually_exclusive_group()
    scope.add_argument("--exhaustive", action="store_true", help="enumerate every codeword tuple (default)")
    scope.add_argument("--samples", type=int, metavar="N", help="check N seeded uniform tuples")
    p.add_argument("--seed", type=int, default=0, help="seed for --samples (default 0)")

    p = sub.add_parser("sweep", help="rate rows over growing q, written as CSV")
    _common(p, q_help="comma list of primes, or 'auto' for Model 1")
    p.add_argument("--q-min", type=int, default=2, help="lower end of a q range (with --q-max)")
    p.add_argument("--q-max", type=int, default=None, help="sweep all admissible primes up to this value")

    p = sub.add_parser("check-bounds", help="check the K/2 upper-bound conditions for h")
    p.add_argument("--h", required=True, help="channel polynomial over X1..XK")
    p.add_argument("--K", type=int, default=None, help="number of users (default: highest variable index)")
    p.add_argument("--probe", default="5", help="probe prime(s) for condition 2, comma separated (default 5)")
    p.add_argument("--out", metavar="PATH", default=None, help="write output here instead of stdout")

    p = sub.add_parser("parse", help="parse a polynomial and print its canonical form")
    p.add_argument("--h", required=True, help="polynomial text")
    p.add_argument("--K", type=int, default=None, help="number of variables (default: highest index)")
    p.add_argument("--out", metavar="PATH", default=None, help="write output here instead of stdout")
    return parser


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out):
    _emit(json.dumps(obj, indent=2) + "\n", out)


def _int_list(text, name):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"--{name} expects a comma-separated list of integers, got {text!r}")


def _prime_q(value):
    try:
        q = int(value)
    except (TypeError, ValueError):
        raise UsageError(f"--q expects an integer, got {value!r}")
    if q < 2 or not is_prime(q):
        raise UsageError(f"q={q} is not prime; the constructions need a prime field")
    return q


def _guess_K(text):
    idx = [int(m) for m in re.findall(r"X\s*(\d+)", text)]
    return max(idx) if idx else 1


def _settings(args):
    """Merge --config with explicit flags; flags win."""
    cfg = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            data = json.load(fh)
        ChannelSpec.from_dict(data)  # validates fields, K/h consistency, primality
        cfg = data
    model = args.model
    if model is None:
        raise UsageError("--model is required")
    K = args.K if args.K is not None else int(cfg.get("K", 3))
    semantics = args.semantics or cfg.get("semantics") or ("integer" if model == 1 else "mod_q")
    q = args.q if args.q is not None else cfg.get("q")
    return model, K, Semantics(semantics), q, cfg


def _split_h(h: MultiPoly):
    """Model 2 config form: X1-only terms (with constants) are f, the rest g."""
    f_terms, g_terms = [], []
    for exps, c in h.items():
        (f_terms if all(e == 0 for e in exps[1:]) else g_terms).append((exps, c))
    return MultiPoly(h.K, f_terms), MultiPoly(h.K, g_terms)


def build_codec(args):
    model, K, semantics, q, cfg = _settings(args)
    if model == 1:
        h_text = args.h or cfg.get("h") or "X1 + X2*X3"
        h = parse_poly(h_text, K)
        a, d = (args.a, args.d)
        if a is None or d is None:
            a0, d0 = infer_leading(h)
            a = a0 if a is None else a
            d = d0 if d is None else d
        p_min = int(args.p_min) if args.p_min is not None else None
        q_val = _prime_q(q) if q is not None else None
        codec = model1_derive(a, d, h, args.mode, p_min=p_min, q=q_val)
    elif model == 2:
        if q is None:
            raise UsageError("Model 2 needs --q")
        q_val = _prime_q(q)
        if args.f is None and args.g is None and "h" in cfg:
            f, g = _split_h(parse_poly(cfg["h"], K))
        else:
            f = parse_poly(args.f or "X1^2", K)
            g = parse_poly(args.g or "X2*X3", K)
        codec = model2_derive(f, g, 0 if args.t is None else args.t, q_val)
    else:
        if q is None:
            raise UsageError("Model 3 needs --q")
        if K != 3:
            raise UsageError("Model 3 is defined for K = 3 only")
        if "h" in cfg and parse_poly(cfg["h"], 3) != parse_poly(K3_CHANNEL, 3):
            raise UsageError(f"Model 3 channel must be h = {K3_CHANNEL}")
        codec = model3_derive(_prime_q(q), args.codebook, args.center)
    return codec, ChannelSpec(codec.K, codec.h, codec.q, semantics)


def run_derive(args):
    codec, _ = build_codec(args)
    _emit_json(codec.to_dict(), args.out)
    return EXIT_OK


def run_verify(args):
    codec, spec = build_codec(args)
    scope = sampled(args.samples, args.seed) if args.samples is not None else EXHAUSTIVE
    workers = args.workers or os.cpu_count() or 1
    log.info("verifying model %d at q=%d (%s, %s, workers=%d)", codec.model, codec.q, spec.semantics.value, scope.kind, workers)
    report = verify_zero_error(spec, codec, scope, workers=workers)
    _emit(report.to_json() + "\n", args.out)
    return EXIT_OK if report.clean else EXIT_FAIL


def _sweep_config(args):
    model, K, _, _, cfg = _settings(args)
    if model == 1:
        return ModelConfig(1, K=K, h=args.h or cfg.get("h") or "X1 + X2*X3", a=args.a, d=args.d, mode=args.mode)
    if model == 2:
        return ModelConfig(2, K=K, f=args.f or "X1^2", g=args.g or "X2*X3", t=0 if args.t is None else args.t)
    if K != 3:
        raise UsageError("Model 3 is defined for K = 3 only")
    return ModelConfig(3, codebook_mode=args.codebook)


def _admissible(model, q):
    if model == 3:
        return q > 5 and q % 5 == 3
    return True


def run_sweep(args):
    config = _sweep_config(args)
    if config.model == 1:
        if args.p_min is not None:
            values = _int_list(args.p_min, "p-min")
        elif args.q in (None, "auto"):
            values = [None]
        else:
            raise UsageError("Model 1 derives q from p; use --q auto or --p-min")
    else:
        if args.q_max is not None:
            qs = [q for q in primes_upto(args.q_max) if q >= args.q_min]
        elif args.q is not None:
            qs = _int_list(args.q, "q")
            for q in qs:
                _prime_q(q)
        else:
            raise UsageError("sweep needs --q or --q-max")
        values = [q for q in qs if _admissible(config.model, q)]
        dropped = sorted(set(qs) - set(values))
        if dropped:
            log.info("skipping %d inadmissible q value(s) for model %d", len(dropped), config.model)
    if not values:
        raise UsageError("no admissible q values to sweep")
    rows = dof_sweep(config, values)
    for row in rows:
        if row.skipped:
            log.info("row skipped (%s): %s", row.q or "auto", row.skipped)
    if all(row.skipped for row in rows):
        raise UsageError("every sweep point failed to derive")
    _emit(rows_to_csv(rows), args.out)
    return EXIT_OK


def run_check_bounds(args):
    K = args.K or _guess_K(args.h)
    h = parse_poly(args.h, K)
    probes = _int_list(args.probe, "probe")
    reports = [check_theorem1(h, K, q).to_dict() for q in probes]
    if len(reports) == 1:
        _emit_json(reports[0], args.out)
    else:
        verdicts = [[r["strict"] for r in rep["condition2_results"]] for rep in reports]
        _emit_json({"reports": reports, "condition2_agreement": all(v == verdicts[0] for v in verdicts)}, args.out)
    return EXIT_OK


def run_parse(args):
    K = args.K or _guess_K(args.h)
    poly = parse_poly(args.h, K)
    out = {"K": K, "canonical": str(poly), "terms": [{"coeff": m.coeff, "exponents": list(m.exponents)} for m in poly.terms]}
    if not poly.is_zero():
        per_var, total, low = degree_profile(poly)
        out.update(per_variable_degrees=list(per_var), total_degree=total, min_total_degree=low)
    _emit_json(out, args.out)
    return EXIT_OK


COMMANDS = {
    "derive": run_derive,
    "verify": run_verify,
    "sweep": run_sweep,
    "check-bounds": run_check_bounds,
    "parse": run_parse,
}


def main(argv=None):
    logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG
    try:
        return COMMANDS[args.command](args)
    except (DetAlignError, ValueError, OSError, KeyError) as exc:
        if isinstance(exc, DetAlignError):
            payload = exc.to_dict()
        else:
            payload = {"error": type(exc).__name__, "message": str(exc)}
        log.error("%s: %s", payload["error"], payload["message"])
        _emit_json(payload, None)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
