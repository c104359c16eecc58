"""Command-line front end.

Subcommands: expand, coeff, check, bernoulli, nj, tau, log.  Every command
can emit text or a JSON envelope {version, command, parameters, result};
rationals are always exact "p/q" strings and repeated invocations are
byte-identical.  Exit codes: 0 success, 1 check failure, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from . import checks, magnus, trees
from .cuts import coefficient_via_cuts
from .magma import ParseError, parse
from .series import (
    bernoulli,
    exp_l,
    exp_r,
    format_series,
    log_l,
    log_l_series,
    series_to_json,
)
from .suops import PrimCombo

SCHEMA_VERSION = "1"
DEFAULT_DEGREE = 5
DEFAULT_CAP = 8
CAP_ENV = "BCH_MAX_DEGREE"


class UsageError(Exception):
    pass


def _envelope(command: str, parameters: dict, result) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "result": result,
    }


def _emit(args, command: str, parameters: dict, result_json, result_text: str) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(_envelope(command, parameters, result_json)))
    else:
        print(result_text)


def _degree_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV} must be an integer, got {raw!r}")


def _check_degree(n: int, cap_flag: int | None) -> None:
    cap = cap_flag if cap_flag is not None else _degree_cap()
    if n < 1:
        raise UsageError("degree must be >= 1")
    if n > cap:
        raise UsageError(
            f"degree {n} exceeds the cap {cap}; raise --max-degree or {CAP_ENV} explicitly"
        )


def _combo_by_degree(combo: PrimCombo, style: str) -> list[str]:
    lines = []
    for d in range(1, combo.max_degree() + 1):
        part = combo.component(d)
        if not part.is_zero():
            lines.append(f"degree {d}: {part.to_text(latex=(style == 'latex'))}")
    return lines


def cmd_expand(args) -> int:
    n = args.degree
    _check_degree(n, args.max_degree)
    params = {"degree": n, "basis": args.basis, "format": args.format}
    result_json: dict = {}
    lines: list[str] = []
    style = args.format
    if args.basis in ("monomial", "both"):
        series = magnus.bch_monomial(n)
        result_json["monomial"] = series_to_json(series)
        lines.append(format_series(series, "latex" if style == "latex" else "compact"))
    if args.basis in ("primitive", "both"):
        combo = magnus.bch_ode(n)
        result_json["primitive"] = combo.to_json()
        lines.extend(_combo_by_degree(combo, style))
    if args.basis == "both":
        equal = magnus.bch_ode(n).evaluate(n) == magnus.bch_monomial(n)
        result_json["bases_agree"] = equal
        lines.append(f"bases agree: {str(equal).lower()}")
    _emit(args, "expand", params, result_json, "\n".join(lines))
    return 0


def cmd_coeff(args) -> int:
    try:
        m = parse(args.monomial)
    except ParseError as exc:
        raise UsageError(f"bad monomial: {exc}")
    _check_degree(m.degree, args.max_degree)
    params = {"monomial": args.monomial, "method": args.method}
    if args.method == "cuts":
        value = coefficient_via_cuts(m)
        _emit(args, "coeff", params, {"value": str(value)}, str(value))
    elif args.method == "series":
        value = magnus.bch_monomial(m.degree).coefficient(m)
        _emit(args, "coeff", params, {"value": str(value)}, str(value))
    else:
        via_cuts = coefficient_via_cuts(m)
        via_series = magnus.bch_monomial(m.degree).coefficient(m)
        agree = via_cuts == via_series
        _emit(
            args,
            "coeff",
            params,
            {"cuts": str(via_cuts), "series": str(via_series), "match": agree},
            f"cuts: {via_cuts}\nseries: {via_series}\nmatch: {str(agree).lower()}",
        )
        if not agree:
            return 1
    return 0


def cmd_check(args) -> int:
    degree = args.degree if args.degree is not None else 4
    _check_degree(degree, args.max_degree)
    results = checks.run_suite(args.suite, degree)
    params = {"suite": args.suite, "degree": degree}
    payload = [
        {"name": r.name, "passed": r.passed, **({"detail": r.detail} if r.detail else {})}
        for r in results
    ]
    all_ok = all(r.passed for r in results)
    lines = []
    for r in results:
        mark = "ok" if r.passed else "FAIL"
        suffix = f"  ({r.detail})" if (r.detail and not r.passed) else ""
        lines.append(f"{mark:4s} {r.name}{suffix}")
    lines.append(f"{'all checks passed' if all_ok else 'FAILURES detected'}")
    _emit(args, "check", params, {"checks": payload, "passed": all_ok}, "\n".join(lines))
    return 0 if all_ok else 1


def cmd_bernoulli(args) -> int:
    k = args.k
    if k < 0:
        raise UsageError("k must be >= 0")
    method = args.method
    try:
        if method == "recurrence":
            value = bernoulli(k) / factorial(k)
        elif method == "woon":
            value = trees.woon_level_sum(k)
        elif method == "fuchs":
            value = trees.fuchs_level_sum(k, trees.bernoulli_weights)
        else:  # nj
            if k < 1:
                raise ValueError("the composition route needs k >= 1")
            value = trees.nj_tree_sum((1,) * k)
    except ValueError as exc:
        raise UsageError(str(exc))
    params = {"k": k, "method": method}
    _emit(args, "bernoulli", params, {"b_over_factorial": str(value)}, str(value))
    return 0


def cmd_nj(args) -> int:
    try:
        j = tuple(int(p) for p in args.tuple.split(","))
        if not j or any(p < 1 for p in j):
            raise ValueError
    except ValueError:
        raise UsageError(f"--tuple must be comma-separated integers >= 1, got {args.tuple!r}")
    value = magnus.n_coeff(j)
    params = {"tuple": list(j)}
    _emit(args, "nj", params, {"value": str(value)}, str(value))
    return 0


def cmd_tau(args) -> int:
    n = args.n
    if n < 0:
        raise UsageError("n must be >= 0")
    _check_degree(max(n, 1), args.max_degree)
    combo = magnus.tau_components(n)[n]
    params = {"n": n}
    text = combo.to_text(latex=(args.format == "latex"))
    _emit(args, "tau", params, combo.to_json(), text)
    return 0


_LOG_TARGETS = ("1+x", "exp_l", "exp_r", "product")


def cmd_log(args) -> int:
    n = args.degree
    _check_degree(n, args.max_degree)
    name = args.series
    if name == "1+x":
        series = log_l_series(n)
    elif name == "exp_l":
        series = log_l(exp_l("x", n))
    elif name == "exp_r":
        series = log_l(exp_r("x", n))
    elif name == "product":
        series = magnus.bch_monomial(n)
    else:
        raise UsageError(f"--series must be one of {_LOG_TARGETS}")
    params = {"series": name, "degree": n}
    _emit(
        args,
        "log",
        params,
        series_to_json(series),
        format_series(series, "latex" if args.format == "latex" else "compact"),
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bch",
        description="Exact non-associative Baker-Campbell-Hausdorff computations.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        p.add_argument(
            "--max-degree",
            type=int,
            default=None,
            help=f"override the degree cap (default {DEFAULT_CAP}, env {CAP_ENV})",
        )

    p = sub.add_parser("expand", help="the BCH series itself")
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--basis", choices=("monomial", "primitive", "both"), default="monomial")
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("coeff", help="one BCH coefficient, by cuts and/or the series")
    p.add_argument("--monomial", required=True, help='e.g. "(x(xy))"')
    p.add_argument("--method", choices=("cuts", "series", "both"), default="cuts")
    common(p)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("check", help="run an identity suite")
    p.add_argument("--suite", choices=("hopf", "suops", "dsw", "magnus", "cuts", "all"), default="all")
    p.add_argument("--degree", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bernoulli", help="B_k/k! by four routes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("woon", "fuchs", "nj", "recurrence"), default="recurrence")
    common(p)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("nj", help="the coefficient n_J of a composition")
    p.add_argument("--tuple", required=True, help="comma-separated parts, e.g. 2,1")
    common(p)
    p.set_defaults(func=cmd_nj)

    p = sub.add_parser("tau", help="a homogeneous component of the tangent map")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("log", help="left logarithm of a named series")
    p.add_argument("--series", choices=_LOG_TARGETS, default="1+x")
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    common(p)
    p.set_defaults(func=cmd_log)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
