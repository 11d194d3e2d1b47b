"""Command-line front end.

Subcommands cover every solver, the bounds report, the worst-case
generator, the brute-force oracles and factorization. Results print as
stable `key = value` lines, or as a single self-describing JSON document
with `--json`; all integers in JSON are decimal strings, so nothing is
ever truncated. Exit codes: 0 solved/feasible, 2 proven infeasible,
3 undetermined (capped search), 1 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .diophsolve import SolutionReport, solve_sparse_lattice
from .errors import CapExceeded, Error, ParseError
from .fileio import (
    format_matrix,
    parse_inline_matrix,
    parse_inline_vector,
    parse_matrix_text,
    parse_vector_text,
)
from .intlinalg import IntMatrix
from .numtheory import factorize
from .oracle import DEFAULT_COORD_CAP, icr_scan, min_support_exact
from .semigroup import (
    DEFAULT_B_CAP,
    solve_knapsack_mixed,
    solve_knapsack_positive,
    solve_semigroup_posspan,
    sparsity_bounds,
)
from .sparsify import first_nonsingular_basis, sparsify, worst_case_instance

B_CAP_ENV = "SPARSEDIOPH_B_CAP"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2
EXIT_UNDETERMINED = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; exit code 2 is reserved here
    # for proven infeasibility, so usage errors must map to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _s(v) -> str:
    return str(int(v))


def _vec(values) -> list[str]:
    return [_s(v) for v in values]


def _mat(A: IntMatrix) -> dict:
    return {
        "rows": _s(A.rows),
        "cols": _s(A.cols),
        "entries": [_vec(A.row(i)) for i in range(A.rows)],
    }


def _emit(doc: dict, as_json: bool, out):
    if as_json:
        out.write(json.dumps(doc, indent=2) + "\n")
        return

    def emit_value(key, value):
        if isinstance(value, dict):
            for k, v in value.items():
                emit_value(f"{key}.{k}" if key else k, v)
        elif isinstance(value, list) and value and isinstance(value[0], list):
            for i, row in enumerate(value):
                out.write(f"{key}[{i}] = {' '.join(map(str, row))}\n")
        elif isinstance(value, list):
            out.write(f"{key} = {' '.join(map(str, value))}\n")
        else:
            out.write(f"{key} = {value}\n")

    emit_value("", doc)


def _load_matrix(args) -> IntMatrix:
    if getattr(args, "matrix_file", None):
        with open(args.matrix_file, "r", encoding="ascii") as fh:
            return parse_matrix_text(fh.read(), source=args.matrix_file)
    return parse_inline_matrix(args.matrix, source="--matrix")


def _load_rhs(args):
    if getattr(args, "rhs_file", None):
        with open(args.rhs_file, "r", encoding="ascii") as fh:
            return parse_vector_text(fh.read(), source=args.rhs_file)
    return parse_inline_vector(args.rhs, source="--rhs")


def _tau_or_default(args, A: IntMatrix):
    if args.tau is not None:
        return parse_inline_vector(args.tau, source="--tau")
    return first_nonsingular_basis(A)


def _solution_block(A: IntMatrix, b, report: SolutionReport) -> tuple[dict, dict]:
    # Regardless of which solver produced x, recheck A x = b here before
    # anything is printed.
    lhs = A.mat_vec(report.x)
    verified = {
        "lhs_equals_rhs": list(lhs) == [int(v) for v in b],
        "support_within_bound": report.support_size <= report.bound,
    }
    if not all(verified.values()):
        raise AssertionError("solver returned an invalid solution")
    result = {
        "x": _vec(report.x),
        "support": _s(report.support_size),
        "bound": _s(report.bound),
        "bound_name": report.bound_name,
    }
    return result, verified


def _add_matrix_args(p: _Parser, rhs: bool = False):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix-file", metavar="PATH", help="matrix file (`m n` header)")
    group.add_argument("--matrix", metavar="ROWS", help="inline matrix, rows separated by ';'")
    if rhs:
        rgroup = p.add_mutually_exclusive_group(required=True)
        rgroup.add_argument("--rhs-file", metavar="PATH", help="right-hand side vector file")
        rgroup.add_argument("--rhs", metavar="INTS", help="inline right-hand side")


def build_parser() -> _Parser:
    parser = _Parser(prog="sparsedioph", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sparsify", help="sparsify the generating set of a lattice")
    _add_matrix_args(p)
    p.add_argument("--tau", metavar="INTS", help="1-based basis columns (default: first nonsingular)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("solve-dioph", help="sparse integer solution of A x = b")
    _add_matrix_args(p, rhs=True)
    p.add_argument("--tau", metavar="INTS")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("solve-semigroup", help="sparse nonnegative solution, positively spanning columns")
    _add_matrix_args(p, rhs=True)
    p.add_argument("--tau", metavar="INTS")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("knapsack", help="sparse nonnegative knapsack solution")
    p.add_argument("--a", required=True, metavar="INTS", help="weights")
    p.add_argument("--b", required=True, type=int, metavar="INT")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--positive", action="store_true", help="all weights positive")
    mode.add_argument("--mixed", action="store_true", help="weights of both signs")
    p.add_argument("--b-cap", type=int, default=None, metavar="INT",
                   help=f"DP cap on b/gcd (default ${B_CAP_ENV} or {DEFAULT_B_CAP})")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bounds", help="evaluate all sparsity bounds for an instance")
    _add_matrix_args(p)
    p.add_argument("--tau", metavar="INTS")
    p.add_argument("--extreme-ray", type=int, default=None, metavar="INDEX",
                   help="1-based column to use for the pointed-cone bound")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("worst-case", help="instance with tight sparsification bound")
    p.add_argument("--m", required=True, type=int, metavar="INT")
    p.add_argument("--delta", required=True, type=int, metavar="INT")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle", help="exact minimum support by brute force")
    _add_matrix_args(p, rhs=True)
    p.add_argument("--k-max", type=int, default=None, metavar="INT")
    p.add_argument("--coord-cap", type=int, default=DEFAULT_COORD_CAP, metavar="INT")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("icr-scan", help="lower bound on the integer Caratheodory rank")
    p.add_argument("--a", required=True, metavar="INTS")
    p.add_argument("--b-max", required=True, type=int, metavar="INT")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("factor", help="prime factorization")
    p.add_argument("z", type=int)
    p.add_argument("--json", action="store_true")
    return parser


def _cmd_sparsify(args, out) -> int:
    A = _load_matrix(args)
    tau = _tau_or_default(args, A)
    cert = sparsify(A, tau)
    doc = {
        "command": "sparsify",
        "instance": {"matrix": _mat(A), "tau": _vec(cert.tau)},
        "status": "solved",
        "result": {
            "gamma": _vec(cert.gamma),
            "size": _s(len(cert.gamma)),
            "bound": _s(cert.bound),
            "delta": _s(cert.delta),
        },
        "verified": {"lattice_fingerprint_match": cert.lattice_fingerprint_match},
    }
    _emit(doc, args.json, out)
    return EXIT_OK


def _cmd_solve(args, out, semigroup: bool) -> int:
    A = _load_matrix(args)
    b = _load_rhs(args)
    tau = _tau_or_default(args, A)
    if semigroup:
        report = solve_semigroup_posspan(A, b, tau)
        name = "solve-semigroup"
    else:
        report = solve_sparse_lattice(A, b, tau)
        name = "solve-dioph"
    doc = {
        "command": name,
        "instance": {"matrix": _mat(A), "rhs": _vec(b), "tau": _vec(tau)},
    }
    if report is None:
        doc["status"] = "infeasible"
        _emit(doc, args.json, out)
        return EXIT_INFEASIBLE
    result, verified = _solution_block(A, b, report)
    doc["status"] = "solved"
    doc["result"] = result
    doc["verified"] = verified
    _emit(doc, args.json, out)
    return EXIT_OK


def _cmd_knapsack(args, out) -> int:
    a = parse_inline_vector(args.a, source="--a")
    A = IntMatrix.row_vector(a)
    doc = {
        "command": "knapsack",
        "instance": {
            "a": _vec(a),
            "b": _s(args.b),
            "mode": "positive" if args.positive else "mixed",
        },
    }
    if args.positive:
        cap = args.b_cap
        if cap is None:
            raw = os.environ.get(B_CAP_ENV, str(DEFAULT_B_CAP))
            try:
                cap = int(raw, 10)
            except ValueError:
                raise ParseError(
                    f"expected an integer, got {raw!r}", 1, 1, f"${B_CAP_ENV}"
                )
        try:
            report = solve_knapsack_positive(a, args.b, b_cap=cap)
        except CapExceeded as exc:
            doc["status"] = "undetermined"
            doc["reason"] = str(exc)
            _emit(doc, args.json, out)
            return EXIT_UNDETERMINED
    else:
        report = solve_knapsack_mixed(a, args.b)
    if report is None:
        doc["status"] = "infeasible"
        _emit(doc, args.json, out)
        return EXIT_INFEASIBLE
    result, verified = _solution_block(A, (args.b,), report)
    doc["status"] = "solved"
    doc["result"] = result
    doc["verified"] = verified
    _emit(doc, args.json, out)
    return EXIT_OK


def _cmd_bounds(args, out) -> int:
    A = _load_matrix(args)
    tau = _tau_or_default(args, A)
    report = sparsity_bounds(A, tau, extreme_ray_index=args.extreme_ray)

    def opt(v):
        return _s(v) if v is not None else None

    doc = {
        "command": "bounds",
        "instance": {"matrix": _mat(A), "tau": _vec(tau)},
        "status": "solved",
        "result": {
            "adno_bound": _s(report.adno_bound),
            "thm1_semigroup_bound": _s(report.thm1_semigroup_bound),
            "pointed_cone_bound": opt(report.pointed_cone_bound),
            "pointed_cone_note": "bound only, non-constructive",
            "knapsack_bound": opt(report.knapsack_bound),
            "gcd": _s(report.gcd_A),
        },
    }
    _emit(doc, args.json, out)
    return EXIT_OK


def _cmd_worst_case(args, out) -> int:
    A = worst_case_instance(args.m, args.delta)
    if args.json:
        doc = {
            "command": "worst-case",
            "instance": {"m": _s(args.m), "delta": _s(args.delta)},
            "status": "solved",
            "result": {"matrix": _mat(A)},
        }
        _emit(doc, True, out)
    else:
        out.write(format_matrix(A))
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    A = _load_matrix(args)
    b = _load_rhs(args)
    k_max = args.k_max if args.k_max is not None else A.cols
    found = min_support_exact(A, b, k_max=k_max, coord_cap=args.coord_cap)
    complete = A.rows == 1 and k_max >= A.cols
    doc = {
        "command": "oracle",
        "instance": {"matrix": _mat(A), "rhs": _vec(b)},
        "regime": {
            "k_max": _s(k_max),
            "coord_cap": _s(args.coord_cap),
            "complete": complete,
        },
    }
    if found is None:
        doc["status"] = "infeasible" if complete else "undetermined"
        _emit(doc, args.json, out)
        return EXIT_INFEASIBLE if complete else EXIT_UNDETERMINED
    doc["status"] = "solved"
    doc["result"] = {"min_support": _s(found)}
    _emit(doc, args.json, out)
    return EXIT_OK


def _cmd_icr_scan(args, out) -> int:
    a = parse_inline_vector(args.a, source="--a")
    value = icr_scan(a, args.b_max)
    doc = {
        "command": "icr-scan",
        "instance": {"a": _vec(a), "b_max": _s(args.b_max)},
        "status": "solved",
        "result": {"icr_lower_bound": _s(value)},
    }
    _emit(doc, args.json, out)
    return EXIT_OK


def _cmd_factor(args, out) -> int:
    fact = factorize(args.z)
    if args.json:
        doc = {
            "command": "factor",
            "instance": {"z": _s(args.z)},
            "status": "solved",
            "result": {"factors": [[_s(p), _s(s)] for p, s in fact.factors]},
        }
        _emit(doc, True, out)
    else:
        if not fact.factors:
            out.write("1\n")
        else:
            out.write(
                " * ".join(f"{p}^{s}" if s > 1 else str(p) for p, s in fact.factors)
                + "\n"
            )
    return EXIT_OK


def run(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "sparsify":
            return _cmd_sparsify(args, out)
        if args.command == "solve-dioph":
            return _cmd_solve(args, out, semigroup=False)
        if args.command == "solve-semigroup":
            return _cmd_solve(args, out, semigroup=True)
        if args.command == "knapsack":
            return _cmd_knapsack(args, out)
        if args.command == "bounds":
            return _cmd_bounds(args, out)
        if args.command == "worst-case":
            return _cmd_worst_case(args, out)
        if args.command == "oracle":
            return _cmd_oracle(args, out)
        if args.command == "icr-scan":
            return _cmd_icr_scan(args, out)
        if args.command == "factor":
            return _cmd_factor(args, out)
        raise AssertionError(f"unhandled command {args.command}")
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR
    except Error as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
