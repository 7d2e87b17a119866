"""Command-line interface.

Subcommands:
  verify     run the claim registry and emit a JSON or markdown report
  classify   nifty/swell verdict and norm witnesses for one polynomial
  enumerate  bounded search for non-nifty polynomials
  sl2        finite-group checks (trace-orders | summary | sum-squares)
  tube       tube-radius bound for a geodesic length, mu expressions allowed
  pell       enumerate r^2 - 2 s^2 = +-1 up to an |s| bound

`verify` exits 0 exactly when no MustMatch claim fails; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import hypgeom, numfield, sl2fq
from .report import DEFAULT_PRECISION, MAX_PRECISION, emit_report, exit_status, run_claims
from .rigor import Interval, log3_interval, pi_interval, precision

__all__ = ["main", "parse_scalar_expr", "load_config"]


def load_config(path: str) -> dict[str, int]:
    """Simple key = value configuration: precision, precision_cap, max_height."""
    out: dict[str, int] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in ("precision", "precision_cap", "max_height", "max_q"):
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = int(value.strip())
    return out


def parse_scalar_expr(text: str) -> Interval:
    """Interval value of a mu/theta expression: a decimal, 'log3', 'pi',
    or either constant divided by a positive integer (e.g. 'log3/3')."""
    s = text.strip().lower().replace(" ", "")
    for name, builder in (("log3", log3_interval), ("pi", pi_interval)):
        if s == name:
            return builder()
        if s.startswith(name + "/"):
            denom = s[len(name) + 1 :]
            if not denom.isdigit() or int(denom) == 0:
                raise ValueError(f"bad denominator in {text!r}")
            return builder() / int(denom)
    try:
        return Interval.exact(Fraction(s))
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"cannot parse scalar expression {text!r}") from e


def _cmd_verify(args) -> int:
    start = args.precision
    cap = args.precision_cap
    if args.config:
        cfg = load_config(args.config)
        start = cfg.get("precision", start)
        cap = cfg.get("precision_cap", cap)
    try:
        results = run_claims(
            filter_prefix=args.claims, start_precision=start, precision_cap=cap
        )
    except Exception as e:  # unknown prefix etc.
        print(str(e), file=sys.stderr)
        return 2
    sys.stdout.write(emit_report(results, fmt=args.format, precision_bits=start))
    return exit_status(results)


def _cmd_classify(args) -> int:
    poly = numfield.parse_polynomial(args.poly)
    verdict = numfield.classify_nifty(poly)
    w = verdict.witnesses
    doc = {
        "poly": poly.bracket_text(),
        "verdict": verdict.verdict.value,
        "witnesses": {
            "n_tau": w.n_tau,
            "n_tau_minus_1": w.n_tau_minus_1,
            "n_tau_plus_1": w.n_tau_plus_1,
            "n_tau_sq_minus_2": w.n_tau_sq_minus_2,
        },
    }
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_enumerate(args) -> int:
    height = args.height
    if args.config:
        cfg = load_config(args.config)
        height = min(height, cfg.get("max_height", height))
    found = numfield.enumerate_nonnifty(args.degree, height)
    doc = [
        {
            "poly": f.bracket_text(),
            "verdict": v.verdict.value,
            "witnesses": list(v.witnesses.as_tuple()),
        }
        for f, v in found
    ]
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_sl2(args) -> int:
    if args.check == "trace-orders":
        report = sl2fq.verify_trace_order_lemma(args.q)
        doc = {
            "q": report.q,
            "elements_checked": report.elements_checked,
            "constrained": report.constrained,
            "counterexamples": [list(c) for c in report.counterexamples],
        }
    elif args.check == "summary":
        doc = sl2fq.group_summary(args.q).to_json()
    elif args.check == "sum-squares":
        w = sl2fq.find_sum_squares_pair(args.q)
        doc = {
            "q": w.q,
            "a": w.a,
            "b": w.b,
            "det_ok": w.det_ok,
            "anticommute": w.anticommute,
            "klein_four_in_psl2": w.klein_four_in_psl2,
        }
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(args.check)
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_tube(args) -> int:
    with precision(args.precision):
        l = parse_scalar_expr(args.length)
        mu = parse_scalar_expr(args.mu)
        out = hypgeom.tube_radius(l, mu)
        doc = {
            "l": l.to_decimal_dict(),
            "mu": mu.to_decimal_dict(),
            "R": out.radius.to_decimal_dict() if out.exists else "none",
        }
        if args.theta is not None:
            theta = parse_scalar_expr(args.theta)
            doc["zagier_n"] = hypgeom.zagier_n(l, theta)
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_pell(args) -> int:
    sols = numfield.pell_solutions(args.max)
    doc = {
        "max_s": args.max,
        "count": len(sols),
        "solutions": [[p.r, p.s, p.sign] for p in sols],
    }
    print(json.dumps(doc, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="margulis",
        description="Certified re-derivation of the finite computations behind "
        "Margulis-number bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the claim registry")
    p_verify.add_argument("--claims", default=None, help="id prefix filter, e.g. appendix.")
    p_verify.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p_verify.add_argument("--precision-cap", type=int, default=MAX_PRECISION)
    p_verify.add_argument("--format", choices=["json", "md"], default="json")
    p_verify.add_argument("--config", default=None, help="key = value settings file")
    p_verify.set_defaults(func=_cmd_verify)

    p_classify = sub.add_parser("classify", help="nifty/swell verdict for a polynomial")
    p_classify.add_argument(
        "--poly", required=True, help="'[1, 3, -14, 11]' or 'x^3+3x^2-14x+11'"
    )
    p_classify.set_defaults(func=_cmd_classify)

    p_enum = sub.add_parser("enumerate", help="bounded non-nifty search")
    p_enum.add_argument("--degree", type=int, choices=[2, 3], required=True)
    p_enum.add_argument("--height", type=int, required=True)
    p_enum.add_argument("--config", default=None)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_sl2 = sub.add_parser("sl2", help="finite-group checks")
    p_sl2.add_argument("--q", type=int, required=True)
    p_sl2.add_argument(
        "--check", choices=["trace-orders", "summary", "sum-squares"], required=True
    )
    p_sl2.set_defaults(func=_cmd_sl2)

    p_tube = sub.add_parser("tube", help="embedded-tube radius bound")
    p_tube.add_argument("--length", required=True, help="geodesic length, e.g. 0.01")
    p_tube.add_argument("--mu", required=True, help="e.g. 0.104 or log3/3")
    p_tube.add_argument("--theta", default=None, help="optional angle for the integer search")
    p_tube.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p_tube.set_defaults(func=_cmd_tube)

    p_pell = sub.add_parser("pell", help="enumerate r^2 - 2 s^2 = +-1")
    p_pell.add_argument("--max", type=int, required=True, help="|s| bound")
    p_pell.set_defaults(func=_cmd_pell)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, numfield.ContractError, sl2fq.FieldError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
