"""Batch command-line interface.

Two subcommands:

* ``error-table``  -- truncation errors of the Gauss continued fraction
  against their predicted leading asymptote, one row per requested n;
* ``dlm``          -- full discrete-Laplace analysis of a gamma-factor sum
  given as a JSON descriptor file, with automatic decomposition when the
  positivity assumption fails.

Exit codes: 0 ok, 2 input error (inadmissible parameters, malformed
descriptor), 3 math degeneracy (vanishing reference value).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

import mpmath as mp

from . import asym, cf, dlm
from .decompose import decompose as decompose_sum
from .errors import (
    BoundaryMaximum,
    DomainError,
    GaussfracError,
    Inadmissible,
    PoleAtParameter,
    ZeroTarget,
)
from .params import ParamTriple, check_gcf_admissible

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3


def _rational(text: str) -> Fraction:
    return Fraction(text)


def _n_list(text: str):
    try:
        values = sorted({int(part) for part in text.split(",") if part.strip()})
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad n-list {text!r}") from exc
    if not values or values[0] < 0:
        raise argparse.ArgumentTypeError("n-list must hold nonnegative integers")
    return values


def _emit(rows, header, fmt, out):
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        writer = csv.writer(out)
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[h] for h in header])


def cmd_error_table(args, out=sys.stdout, err=sys.stderr) -> int:
    t = ParamTriple(args.a, args.b, args.c)
    tf = ParamTriple(float(args.a), float(args.b), float(args.c))
    if not check_gcf_admissible(tf):
        print(
            "inadmissible parameters: need a, c-b not in Z<=-1 and b, c, c-a not in Z<=0",
            file=err,
        )
        return EXIT_INPUT
    if not float(args.z) < 1:
        print(f"need z < 1, got {args.z}", file=err)
        return EXIT_INPUT
    rows = []
    try:
        for n in args.n:
            actual = cf.truncation_error_actual(t, args.z, n, min_digits=args.precision_digits)
            predicted = asym.error_asymptote(tf, float(args.z), n)
            if float(args.z) == 0.0:
                ratio = 1.0
            else:
                ratio = float(actual / predicted)
            rows.append(
                {
                    "n": n,
                    "actual": mp.nstr(actual, 12),
                    "predicted": mp.nstr(predicted, 12),
                    "ratio": ratio,
                    "scaled_gap": abs(ratio - 1.0) * math.sqrt(n) if n else 0.0,
                }
            )
    except ZeroTarget as exc:
        print(f"degenerate input: {exc}", file=err)
        return EXIT_DEGENERATE
    except (Inadmissible, PoleAtParameter) as exc:
        print(f"inadmissible parameters: {exc}", file=err)
        return EXIT_INPUT
    _emit(rows, ["n", "actual", "predicted", "ratio", "scaled_gap"], args.format, out)
    return EXIT_OK


def _maxima_payload(d):
    try:
        report = dlm.find_maxima(d)
        form = dlm.leading_asymptote(d)
        return {
            "kind": "interior",
            "maxima": [
                {"x0": x0, "curvature": c2, "amplitude": _num(u)} for (x0, c2, u) in report.maxima
            ],
            "phi_max": report.phi_max,
            "boundary": list(report.boundary_values),
            "asymptote": {
                "constant": _num(form.constant),
                "algebraic_exponent": _num(form.algebraic_exponent),
                "stirling_exponent": form.stirling_exponent,
                "geometric_base": form.geometric_base,
            },
        }, form
    except BoundaryMaximum as exc:
        shape = dlm.tail_bound_shape(d, 1.25 * exc.report.phi_max)
        return {
            "kind": "boundary",
            "phi_max": exc.report.phi_max,
            "boundary": list(exc.report.boundary_values),
            "tail_bound": {"nu": shape.nu, "psi": shape.psi},
        }, None


def _num(x):
    if isinstance(x, complex):
        return x.real if x.imag == 0.0 else {"re": x.real, "im": x.imag}
    return x


def cmd_dlm(args, out=sys.stdout, err=sys.stderr) -> int:
    try:
        text = open(args.descriptor, "r", encoding="utf-8").read()
        d = dlm.descriptor_from_json(text)
    except (OSError, DomainError) as exc:
        print(f"cannot load descriptor: {exc}", file=err)
        return EXIT_INPUT
    report = dlm.validate(d)
    payload = {
        "validation": {
            "ok": report.ok,
            "balanced": report.balanced,
            "positive": report.positive,
            "delta0": report.delta0,
            "delta1": report.delta1,
            "convergence_case": report.convergence_case,
            "issues": [{"item": i.item, "message": i.message} for i in report.issues],
        }
    }
    inv = dlm.invariants(d)
    payload["invariants"] = {"rho": inv.rho, "nu": inv.nu, "gamma": _num(inv.gamma)}

    if report.ok:
        analysis, form = _maxima_payload(d)
        payload["analysis"] = analysis
        if form is not None and args.n:
            ratios = []
            for n in args.n:
                value = dlm.brute_force(d, n, precision=args.precision_digits)
                ratios.append({"n": n, "ratio": float(value / form.value(n))})
            payload["brute_force_ratios"] = ratios
    elif not report.positive and d.z != 0:
        # sign-changing factors: decompose, analyse each positive piece
        dec = decompose_sum(d)
        pieces = []
        for comp in dec.components:
            entry = {
                "interval": [comp.interval[0], "inf" if math.isinf(comp.interval[1]) else comp.interval[1]],
                "prefactor_const": comp.prefactor_const,
                "sign_exponent": comp.sign_exponent,
                "variable": comp.descriptor.z,
            }
            if comp.descriptor.z > 0:
                analysis, form = _maxima_payload(comp.descriptor)
                entry["analysis"] = analysis
                if form is not None and args.n:
                    entry["prediction_with_prefactor"] = [
                        {"n": n, "value": mp.nstr(comp.prefactor(n) * form.value(n), 10)}
                        for n in args.n
                    ]
            else:
                entry["analysis"] = {"kind": "even-odd split required (negative variable)"}
            pieces.append(entry)
        payload["decomposition"] = {"breakpoints": list(dec.breakpoints), "components": pieces}
        if args.n:
            payload["brute_force"] = [
                {"n": n, "value": mp.nstr(dec.value(n, precision=args.precision_digits), 10)}
                for n in args.n
            ]
    if args.format == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        flat = io.StringIO()
        json.dump(payload, flat)
        out.write(flat.getvalue() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gaussfrac")
    parser.add_argument("--precision-digits", type=int, default=30, help="working digits")
    parser.add_argument("--tolerance", type=float, default=1e-9, help="identity tolerance")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    sub = parser.add_subparsers(dest="command", required=True)

    et = sub.add_parser("error-table", help="truncation error vs predicted asymptote")
    et.add_argument("--a", type=_rational, required=True)
    et.add_argument("--b", type=_rational, required=True)
    et.add_argument("--c", type=_rational, required=True)
    et.add_argument("--z", type=_rational, required=True)
    et.add_argument("--n", type=_n_list, required=True, help="comma-separated indices")
    et.set_defaults(func=cmd_error_table)

    dl = sub.add_parser("dlm", help="discrete-Laplace analysis of a descriptor file")
    dl.add_argument("descriptor", help="JSON descriptor path")
    dl.add_argument("--n", type=_n_list, default=[], help="comma-separated indices")
    dl.set_defaults(func=cmd_dlm)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GaussfracError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
