"""Command-line front end: verify/evaluate identities, scan pair families,
report quadratic-field data, and tabulate the Farey sine scan.

Exit codes: 0 = ran and everything passed; 1 = ran but at least one
verification failed; 2 = usage or domain error (bad identity name, bad
parameters, malformed flags).

All numeric output is serialized as decimal strings (JSON included) via the
round-trippable formatter, so downstream tooling never sees binary-float
artifacts.  Sweep output is byte-identical whatever --jobs is.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from itertools import islice
from typing import List, Tuple

from gmpy2 import mpc, mpfr

from .catalog import (
    IdentityReport,
    eval_closed,
    eval_direct,
    get_identity,
    iter_pair_families,
    list_identities,
    search_pair_families,
    sweep,
    verify,
)
from .errors import ConsistencyError, DomainError, SingularTerm
from .precision import DEFAULT_PRECISION, decimal_str
from .quadfield import quadfield_data, unit_combination_exact
from .rh import KERNEL_NAME, growth_fit, rh_table

__all__ = ["main"]


# ---------------------------------------------------------------------------
# serialization helpers
# ---------------------------------------------------------------------------


def _value_str(v) -> str:
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, (Fraction, int)):
        return str(v)
    if isinstance(v, (mpfr, mpc)):
        return decimal_str(v)
    if isinstance(v, float):
        return "%.17g" % v
    return str(v)


def _params_str(params: dict) -> str:
    parts = []
    for name, v in params.items():
        if name == "pairs":
            v = ";".join("%d,%d" % (a, b) for a, b in v)
        parts.append("%s=%s" % (name, v))
    return " ".join(parts)


def _params_json(params: dict) -> dict:
    return {
        name: ([list(p) for p in v] if name == "pairs" else v)
        for name, v in params.items()
    }


def _report_json(r: IdentityReport) -> dict:
    return {
        "ident": r.ident,
        "params": _params_json(r.params),
        "lhs": _value_str(r.lhs),
        "rhs": _value_str(r.rhs),
        "abs_err": _value_str(r.abs_err),
        "tol": _value_str(r.tol),
        "imag_leak": _value_str(r.imag_leak),
        "passed": r.passed,
    }


_REPORT_COLUMNS = ("ident", "params", "lhs", "rhs", "abs_err", "tol", "imag_leak", "passed")


def _report_row(r: IdentityReport) -> List[str]:
    return [
        r.ident,
        _params_str(r.params),
        _value_str(r.lhs),
        _value_str(r.rhs),
        _value_str(r.abs_err),
        _value_str(r.tol),
        _value_str(r.imag_leak),
        str(r.passed),
    ]


def _csv_writer(out):
    return csv.writer(out, lineterminator="\n")


def _root_str(coeff: int, p: int) -> str:
    if coeff == 1:
        return "sqrt(%d)" % p
    return "%d*sqrt(%d)" % (coeff, p)


def _unit_str(x: int, y: int, p: int) -> str:
    """(x + y*sqrt(p))/2 printed in lowest symbolic terms."""
    if x % 2 == 0 and y % 2 == 0:
        return _combo_str(x // 2, y // 2, p)
    return "(%d+%s)/2" % (x, _root_str(y, p))


def _combo_str(a: int, b: int, p: int) -> str:
    if b == 0:
        return str(a)
    if a == 0:
        return _root_str(b, p)
    return "%d+%s" % (a, _root_str(b, p))


# ---------------------------------------------------------------------------
# key=value parameter parsing
# ---------------------------------------------------------------------------


def _parse_value(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    if "," in text or ";" in text:
        pairs = []
        for chunk in text.split(";"):
            bits = chunk.split(",")
            if len(bits) != 2:
                raise DomainError("cannot parse pair %r" % chunk)
            try:
                pairs.append((int(bits[0]), int(bits[1])))
            except ValueError:
                raise DomainError("cannot parse pair %r" % chunk) from None
        return pairs
    return text


def _parse_params(tokens: List[str]) -> dict:
    params = {}
    for token in tokens:
        name, sep, value = token.partition("=")
        if not sep or not name:
            raise DomainError(
                "parameters must be key=value tokens, got %r" % token
            )
        params[name] = _parse_value(value)
    return params


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_verify(args, out) -> int:
    if args.params and args.bound is not None:
        raise DomainError("give key=value parameters or --bound, not both")
    if args.ident == "all":
        if args.bound is None:
            raise DomainError("verify all requires --bound")
        idents = list_identities()
    else:
        get_identity(args.ident)  # fail fast on unknown names
        idents = [args.ident]

    if args.params:
        params = _parse_params(args.params)
        groups = [(args.ident, [verify(args.ident, params, args.precision, args.tol)])]
    else:
        if args.bound is None:
            raise DomainError("give key=value parameters or --bound")
        groups = [
            (ident, sweep(ident, args.bound, args.precision, args.tol, args.jobs))
            for ident in idents
        ]

    reports = [r for _, rs in groups for r in rs]
    all_passed = all(r.passed for r in reports)

    if args.format == "json":
        doc = {
            "precision": args.precision,
            "reports": [_report_json(r) for r in reports],
            "all_passed": all_passed,
        }
        if args.bound is not None:
            doc["bound"] = args.bound
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = _csv_writer(out)
        w.writerow(_REPORT_COLUMNS)
        for r in reports:
            w.writerow(_report_row(r))
    elif len(reports) == 1 and args.params:
        r = reports[0]
        print("%s %s: %s" % (r.ident, _params_str(r.params), "PASS" if r.passed else "FAIL"), file=out)
        print("  lhs       = %s" % _value_str(r.lhs), file=out)
        print("  rhs       = %s" % _value_str(r.rhs), file=out)
        print("  abs_err   = %s" % _value_str(r.abs_err), file=out)
        print("  imag_leak = %s" % _value_str(r.imag_leak), file=out)
        print("  tol       = %s" % _value_str(r.tol), file=out)
    else:
        total = failures = 0
        for ident, rs in groups:
            npass = sum(r.passed for r in rs)
            print("%s: %d/%d pass" % (ident, npass, len(rs)), file=out)
            for r in rs:
                if not r.passed:
                    print(
                        "  FAIL %s: abs_err=%s imag_leak=%s tol=%s"
                        % (
                            _params_str(r.params),
                            _value_str(r.abs_err),
                            _value_str(r.imag_leak),
                            _value_str(r.tol),
                        ),
                        file=out,
                    )
            total += len(rs)
            failures += len(rs) - npass
        if len(groups) > 1:
            print("total: %d cases, %d fail" % (total, failures), file=out)

    return 0 if all_passed else 1


def _cmd_eval(args, out) -> int:
    params = _parse_params(args.params)
    lhs = eval_direct(args.ident, params, args.precision)
    rhs = eval_closed(args.ident, params, args.precision)
    if args.format == "json":
        json.dump(
            {
                "ident": args.ident,
                "params": _params_json(params),
                "lhs": _value_str(lhs),
                "rhs": _value_str(rhs),
            },
            out,
            indent=2,
        )
        out.write("\n")
    elif args.format == "csv":
        w = _csv_writer(out)
        w.writerow(("ident", "params", "lhs", "rhs"))
        w.writerow((args.ident, _params_str(params), _value_str(lhs), _value_str(rhs)))
    else:
        print("lhs = %s" % _value_str(lhs), file=out)
        print("rhs = %s" % _value_str(rhs), file=out)
    return 0


def _cmd_scan_pairs(args, out) -> int:
    if args.limit is not None:
        if args.limit < 1:
            raise DomainError("--limit must be a positive integer")
        families = list(islice(iter_pair_families(args.k), args.limit))
    else:
        families = search_pair_families(args.k)

    rows: List[Tuple[str, IdentityReport]] = []
    for fam in families:
        r = verify(
            "I16", {"k": args.k, "pairs": fam}, args.precision, args.tol
        )
        rows.append((";".join("%d,%d" % ab for ab in fam), r))
    all_passed = all(r.passed for _, r in rows)

    if args.format == "json":
        json.dump(
            {
                "k": args.k,
                "families": [
                    {
                        "pairs": _params_json(r.params)["pairs"],
                        "lhs": _value_str(r.lhs),
                        "abs_err": _value_str(r.abs_err),
                        "passed": r.passed,
                    }
                    for _, r in rows
                ],
                "all_passed": all_passed,
            },
            out,
            indent=2,
        )
        out.write("\n")
    elif args.format == "csv":
        w = _csv_writer(out)
        w.writerow(("pairs", "lhs", "abs_err", "passed"))
        for text, r in rows:
            w.writerow((text, _value_str(r.lhs), _value_str(r.abs_err), str(r.passed)))
    else:
        print("k=%d: %d families" % (args.k, len(rows)), file=out)
        for text, r in rows:
            print("%s %s" % (text, "PASS" if r.passed else "FAIL"), file=out)
        print(
            "all %d families pass" % len(rows)
            if all_passed
            else "%d families FAIL" % sum(not r.passed for _, r in rows),
            file=out,
        )
    return 0 if all_passed else 1


def _cmd_quadfield(args, out) -> int:
    data = quadfield_data(args.p, args.precision)
    unit = data.epsilon
    minus = unit_combination_exact(args.p, "minus", data.h)
    plus = unit_combination_exact(args.p, "plus", data.h)
    eps_text = _unit_str(unit.x, unit.y, args.p)
    minus_text = _combo_str(minus[0], minus[1], args.p)
    plus_text = _combo_str(plus[0], plus[1], args.p)
    if args.format == "json":
        json.dump(
            {
                "p": args.p,
                "epsilon": {"x": unit.x, "y": unit.y, "half": unit.half, "norm": unit.norm},
                "epsilon_str": eps_text,
                "h": data.h,
                "minus": minus_text,
                "plus": plus_text,
            },
            out,
            indent=2,
        )
        out.write("\n")
    elif args.format == "csv":
        w = _csv_writer(out)
        w.writerow(("p", "epsilon", "h", "minus", "plus"))
        w.writerow((args.p, eps_text, data.h, minus_text, plus_text))
    else:
        print("p = %d" % args.p, file=out)
        print("epsilon = %s  (norm %d)" % (eps_text, unit.norm), file=out)
        print("h = %d" % data.h, file=out)
        print("epsilon^h - epsilon^(-h) = %s" % minus_text, file=out)
        print("epsilon^h + epsilon^(-h) = %s" % plus_text, file=out)
    return 0


def _cmd_rh(args, out) -> int:
    if args.qmax < 3:
        raise DomainError("--qmax must be at least 3")
    if args.step < 1:
        raise DomainError("--step must be a positive integer")
    qs = [q for q in range(args.step, args.qmax + 1, args.step) if q >= 3]
    if not qs or qs[-1] != args.qmax:
        qs.append(args.qmax)
    rows = rh_table(qs, args.mode, args.precision)

    if args.format == "json":
        json.dump(
            {
                "mode": args.mode,
                "kernel": KERNEL_NAME,
                "rows": [
                    {
                        "Q": r.Q,
                        "W": _value_str(r.W),
                        "M_odd": r.M_odd,
                        "residual": _value_str(r.residual),
                        "bound_ratio": _value_str(r.bound_ratio),
                    }
                    for r in rows
                ],
            },
            out,
            indent=2,
        )
        out.write("\n")
    elif args.format == "csv":
        w = _csv_writer(out)
        w.writerow(("Q", "W", "M_odd", "residual", "bound_ratio"))
        for r in rows:
            w.writerow(
                (r.Q, _value_str(r.W), r.M_odd, _value_str(r.residual), _value_str(r.bound_ratio))
            )
    else:
        print("kernel: %s (mode %s)" % (KERNEL_NAME, args.mode), file=out)
        print("%8s  %22s  %8s  %12s  %12s" % ("Q", "W", "M_odd", "residual", "|W|/sqrt(Q)"), file=out)
        for r in rows:
            print(
                "%8d  %22.15g  %8d  %12.5g  %12.5g"
                % (r.Q, float(r.W), r.M_odd, float(r.residual), float(r.bound_ratio)),
                file=out,
            )
        try:
            c, alpha = growth_fit(rows)
        except DomainError:
            pass
        else:
            print("growth fit: |W| ~ %.6g * Q^%.6g" % (c, alpha), file=out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("common options")
    g.add_argument(
        "--precision", type=int, default=DEFAULT_PRECISION, metavar="BITS",
        help="working precision in bits (default %(default)s)",
    )
    g.add_argument(
        "--tol", default=None, metavar="EPS",
        help="absolute tolerance as a decimal string (default: per-case term budget)",
    )
    g.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default %(default)s)",
    )
    g.add_argument(
        "--jobs", type=int, default=1, metavar="N",
        help="worker processes for sweeps (default 1; output is order-stable)",
    )
    g.add_argument(
        "--out", default=None, metavar="FILE",
        help="write output to FILE instead of stdout",
    )

    parser = argparse.ArgumentParser(
        prog="trigsum",
        parents=[common],
        description="Evaluate and verify finite trigonometric sum identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser(
        "verify", parents=[common],
        help="check identities: one parameter set, or a sweep up to --bound",
    )
    p.add_argument("ident", help="identity name, or 'all' with --bound")
    p.add_argument("params", nargs="*", metavar="key=value", help="parameter assignments")
    p.add_argument("--bound", type=int, default=None, help="sweep all parameters up to this bound")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "eval", parents=[common],
        help="evaluate both sides of one identity at one parameter set",
    )
    p.add_argument("ident", help="identity name")
    p.add_argument("params", nargs="*", metavar="key=value", help="parameter assignments")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser(
        "scan-pairs", parents=[common],
        help="enumerate and verify signed sine-quotient pair families for a modulus",
    )
    p.add_argument("k", type=int, help="modulus, congruent to 1 mod 4")
    p.add_argument("--limit", type=int, default=None, help="stop after this many families (generator order)")
    p.set_defaults(func=_cmd_scan_pairs)

    p = sub.add_parser(
        "quadfield", parents=[common],
        help="fundamental unit, class number, and unit combinations for Q(sqrt(p))",
    )
    p.add_argument("p", type=int, help="prime congruent to 1 mod 4")
    p.set_defaults(func=_cmd_quadfield)

    p = sub.add_parser(
        "rh", parents=[common],
        help="tabulate the character-weighted Farey sine scan",
    )
    p.add_argument("--qmax", type=int, required=True, help="largest modulus")
    p.add_argument("--step", type=int, default=1, help="checkpoint spacing (default 1)")
    p.add_argument("--mode", choices=("fast", "highprec"), default="fast")
    p.set_defaults(func=_cmd_rh)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        return args.func(args, out)
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except SingularTerm as exc:
        print("error: singular term: %s" % exc, file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print("error: consistency check failed: %s" % exc, file=sys.stderr)
        return 2
    finally:
        if args.out:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
