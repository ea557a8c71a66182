"""Command-line front end for coefficient tables and identity checks.

Subcommands
-----------
coeffs   print the coefficient table of one family series
verify   check a single registry identity at a given order
suite    run every registry identity over its default parameter grid
oracle   cross-check a series coefficient against brute-force enumeration

Usage examples
--------------
    qident coeffs --family V --sign plus --k 3 --m inf --order 6 --format csv
    qident verify --id T4_W --k 2 --order 40
    qident verify --id L1 --k 0 --order 30 --format json
    qident suite --order 20
    qident oracle --which v --sign plus --k 3 --n 5

Exit status: 0 when the request succeeds and every checked statement holds,
1 when a verification fails or an oracle cross-check mismatches, 2 on usage
errors.  JSON output is a single document per invocation; coefficient
values serialize as decimal strings so arbitrarily large integers survive
any consumer.  With --deterministic all timing fields are omitted and
repeated invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Dict, List, Mapping, Optional, Sequence, Union

from .families import FamilySpec, InvalidSpec, family_series
from .identities import (
    REGISTRY,
    IdentityCase,
    MissingParam,
    UnknownIdentity,
    VerifyReport,
    divisor_sum_series,
    overpartition_pair_series,
    pod_bipartition_series,
    verify,
    verify_suite,
)
from .oracles import (
    DomainError,
    divisor_sigma,
    overpartition_pairs,
    pod_bipartitions,
    v_oracle,
    w_oracle,
)
from .qtools import INFINITE

_PARAM_NAMES = ("sign", "k", "j", "m", "n", "s", "e")


# ---------------------------------------------------------------------------
# Flag parsing helpers
# ---------------------------------------------------------------------------

def _m_value(text: str) -> Union[int, float]:
    """Parse the --m flag: a positive integer or the literal token "inf"."""
    if text == "inf":
        return INFINITE
    value = int(text)
    if value < 1:
        raise ValueError(f"--m must be positive or 'inf', got {text}")
    return value


def _sign_number(text: str) -> int:
    return 1 if text == "plus" else -1


def _collect_params(args: argparse.Namespace) -> Dict[str, Union[int, float]]:
    """Gather the identity parameters that were actually provided."""
    params: Dict[str, Union[int, float]] = {}
    for name in _PARAM_NAMES:
        value = getattr(args, name, None)
        if value is None:
            continue
        params[name] = _sign_number(value) if name == "sign" else value
    return params


def _params_text(params: Mapping[str, Union[int, float]], sep: str = " ") -> str:
    """Render a parameter binding as flag-style tokens, CSV-safe with sep=';'."""
    parts = []
    for name, value in params.items():
        if name == "sign":
            shown: Union[int, float, str] = "plus" if value == 1 else "minus"
        elif value == INFINITE:
            shown = "inf"
        else:
            shown = value
        parts.append(f"{name}={shown}")
    return sep.join(parts)


def _params_json(params: Mapping[str, Union[int, float]]) -> Dict[str, Union[int, str]]:
    out: Dict[str, Union[int, str]] = {}
    for name, value in params.items():
        if name == "sign":
            out[name] = "plus" if value == 1 else "minus"
        elif value == INFINITE:
            out[name] = "inf"
        else:
            out[name] = int(value)
    return out


def _report_json(report: VerifyReport, deterministic: bool) -> Dict[str, object]:
    disc = report.first_discrepancy
    doc: Dict[str, object] = {
        "id": report.case.id,
        "params": _params_json(report.case.params),
        "order": report.case.order,
        "holds": report.holds,
        "first_discrepancy": None if disc is None else {
            "exponent": disc.exponent,
            "lhs": str(disc.lhs),
            "rhs": str(disc.rhs),
        },
    }
    if not deterministic:
        doc["elapsed_ms"] = round(report.elapsed * 1000.0, 3)
    return doc


def _report_plain(report: VerifyReport, deterministic: bool) -> str:
    binding = _params_text(report.case.params)
    head = f"{report.case.id}"
    if binding:
        head += f" {binding}"
    head += f" order={report.case.order}: "
    head += "holds" if report.holds else "FAILS"
    disc = report.first_discrepancy
    if disc is not None:
        head += f" at q^{disc.exponent} (lhs={disc.lhs}, rhs={disc.rhs})"
    if not deterministic:
        head += f"  [{report.elapsed * 1000.0:.2f} ms]"
    return head


def _report_row(report: VerifyReport, deterministic: bool) -> List[str]:
    disc = report.first_discrepancy
    row = [
        report.case.id,
        _params_text(report.case.params, sep=";"),
        str(report.case.order),
        "true" if report.holds else "false",
        "" if disc is None else str(disc.exponent),
        "" if disc is None else str(disc.lhs),
        "" if disc is None else str(disc.rhs),
    ]
    if not deterministic:
        row.append(f"{report.elapsed * 1000.0:.3f}")
    return row


_REPORT_HEADER = ["id", "params", "order", "holds",
                  "disc_exponent", "disc_lhs", "disc_rhs"]


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def cmd_coeffs(args: argparse.Namespace) -> int:
    spec = FamilySpec(family=args.family, sign=_sign_number(args.sign),
                      k=args.k, m=args.m)
    series = family_series(spec, args.order)
    if args.format == "json":
        doc = {
            "family": args.family,
            "sign": args.sign,
            "k": args.k,
            "m": "inf" if args.m == INFINITE else args.m,
            "order": args.order,
            "coefficients": [str(c) for c in series.coeffs],
        }
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "coefficient"])
        for n, c in enumerate(series.coeffs):
            writer.writerow([n, c])
    else:
        for n, c in enumerate(series.coeffs):
            print(f"{n} {c}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    params = _collect_params(args)
    if "sign" in REGISTRY[args.id].required and "sign" not in params:
        params["sign"] = 1
    case = IdentityCase(id=args.id, params=params, order=args.order)
    report = verify(case)
    if args.format == "json":
        print(json.dumps(_report_json(report, args.deterministic), indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        header = list(_REPORT_HEADER)
        if not args.deterministic:
            header.append("elapsed_ms")
        writer.writerow(header)
        writer.writerow(_report_row(report, args.deterministic))
    else:
        print(_report_plain(report, args.deterministic))
    return 0 if report.holds else 1


def cmd_suite(args: argparse.Namespace) -> int:
    reports = verify_suite(order=args.order)
    passed = sum(1 for r in reports if r.holds)
    failed = len(reports) - passed
    if args.format == "json":
        doc = {
            "order": args.order,
            "passed": passed,
            "failed": failed,
            "total": len(reports),
            "cases": [_report_json(r, args.deterministic) for r in reports],
        }
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        header = list(_REPORT_HEADER)
        if not args.deterministic:
            header.append("elapsed_ms")
        writer.writerow(header)
        for r in reports:
            writer.writerow(_report_row(r, args.deterministic))
    else:
        for r in reports:
            print(_report_plain(r, args.deterministic))
        print(f"{passed} passed / {failed} failed / {len(reports)} total")
    return 0 if failed == 0 else 1


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.n is None:
        raise ValueError("oracle needs --n")
    n = args.n
    if args.which in ("v", "w"):
        if args.sign is None or args.k is None:
            raise ValueError(f"--which {args.which} needs --sign, --k, --n")
        sign = _sign_number(args.sign)
        family = "V" if args.which == "v" else "W"
        oracle_value = (v_oracle if args.which == "v" else w_oracle)(
            sign, args.k, args.m, n)
        spec = FamilySpec(family=family, sign=sign, k=args.k, m=args.m)
        series_value = family_series(spec, n).coeffs[n]
    elif args.which == "pp":
        oracle_value = overpartition_pairs(n)
        series_value = overpartition_pair_series(n).coeffs[n]
    elif args.which == "pod":
        oracle_value = pod_bipartitions(n)
        series_value = pod_bipartition_series(n).coeffs[n]
    else:
        oracle_value = divisor_sigma(n)
        series_value = divisor_sum_series(n).coeffs[n]

    match = oracle_value == series_value
    if args.format == "json":
        doc = {
            "which": args.which,
            "params": _params_json(_collect_params(args)),
            "oracle": str(oracle_value),
            "series": str(series_value),
            "match": match,
        }
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["which", "params", "n", "oracle", "series", "match"])
        writer.writerow([args.which, _params_text(_collect_params(args), sep=";"),
                         n, oracle_value, series_value,
                         "true" if match else "false"])
    else:
        verdict = "match" if match else "MISMATCH"
        print(f"{args.which} n={n}: oracle={oracle_value} series={series_value} {verdict}")
    return 0 if match else 1


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qident",
        description="Exact coefficient tables and identity checks for "
                    "nested-divisor q-series families.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=20,
                        help="truncation order N (series known mod q^(N+1))")
    common.add_argument("--format", choices=("plain", "json", "csv"),
                        default="plain", help="output format")
    common.add_argument("--deterministic", action="store_true",
                        help="omit timing fields; output depends only on flags")

    sub = parser.add_subparsers(dest="command", required=True)

    p_coeffs = sub.add_parser("coeffs", parents=[common],
                              help="coefficient table of one family series")
    p_coeffs.add_argument("--family", choices=("A", "C", "V", "W"), required=True)
    p_coeffs.add_argument("--sign", choices=("plus", "minus"), required=True)
    p_coeffs.add_argument("--k", type=int, required=True,
                          help="number of chained part magnitudes")
    p_coeffs.add_argument("--m", type=_m_value, default=INFINITE,
                          help="magnitude bound, a positive integer or 'inf'")
    p_coeffs.set_defaults(handler=cmd_coeffs)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="check one registry identity")
    p_verify.add_argument("--id", choices=sorted(REGISTRY), required=True,
                          metavar="ID", help="registry id, one of: "
                          + " ".join(sorted(REGISTRY)))
    p_verify.add_argument("--sign", choices=("plus", "minus"),
                          help="sign variant; defaults to plus for "
                               "identities that take one")
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--j", type=int)
    p_verify.add_argument("--m", type=_m_value)
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--s", type=int)
    p_verify.add_argument("--e", type=int)
    p_verify.set_defaults(handler=cmd_verify)

    p_suite = sub.add_parser("suite", parents=[common],
                             help="run the full registry over default grids")
    p_suite.set_defaults(handler=cmd_suite)

    p_oracle = sub.add_parser("oracle", parents=[common],
                              help="brute-force cross-check of one coefficient")
    p_oracle.add_argument("--which", choices=("v", "w", "pp", "pod", "sigma"),
                          required=True)
    p_oracle.add_argument("--sign", choices=("plus", "minus"))
    p_oracle.add_argument("--k", type=int)
    p_oracle.add_argument("--m", type=_m_value, default=INFINITE)
    p_oracle.add_argument("--n", type=int, required=True,
                          help="exponent to cross-check")
    p_oracle.set_defaults(handler=cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (InvalidSpec, MissingParam, UnknownIdentity, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
