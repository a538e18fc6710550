"""Command line front end.

Exit status is 0 on success, 1 when a ``check`` fails and 2 on usage or
domain errors.
"""

from __future__ import annotations

import argparse
import csv
import re
import sys
from fractions import Fraction

import numpy as np

from . import basisops, checks, exactseq, gseq, hilbert, measure
from .exceptions import DomainError, EvaluationError, SingularMatrixError
from .records import OutputRecord, render

DEFAULT_GRID = "0.25:0.4:200"
NODE_RTOL = 1e-12


class UsageError(Exception):
    pass


def _parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _parse_z_list(items):
    out = []
    for item in items:
        out.extend(s for s in item.split(",") if s.strip())
    if not out:
        raise UsageError("--z needs at least one value")
    return out


def cmd_eval(args):
    zs = _parse_z_list(args.z)
    exact = args.exact if args.exact is not None else (args.seq == "G" and args.method != "trig")
    rec = OutputRecord("eval_table", ("z", "value"))
    for text in zs:
        if exact:
            z = _parse_rational(text)
            label = str(z)
            if args.seq == "G":
                value = exactseq.g_poly_eval(args.n, z, args.method)
            else:
                if z < Fraction(1, 4):
                    raise DomainError(f"g_n requires z >= 1/4, got {z}")
                value = gseq.g_even_exact(args.n, z)
        else:
            try:
                z = float(_parse_rational(text))
            except OverflowError:
                raise UsageError(f"value out of range: {text!r}") from None
            label = repr(z)
            if args.seq == "G":
                value = exactseq.g_poly_eval(args.n, z, args.method)
            else:
                value = gseq.g_fun_eval(args.n, z)
        rec.add(label, value)
    return [rec]


_BUILTIN_G = re.compile(r"^g(\d+)$")


def _builtin(name):
    """Return ``(f, norm_sq)``; ``norm_sq`` is None when not known in closed form."""
    if name == "inv_sqrt":
        return hilbert.inv_sqrt, 1.0
    if name == "inv_z":
        return (lambda z: 1.0 / np.asarray(z)), 2.0
    if name == "exp_neg":
        return (lambda z: np.exp(-np.asarray(z))), None
    m = _BUILTIN_G.match(name)
    if m:
        return hilbert.g_basis(int(m.group(1))), 1.0
    raise UsageError(f"unknown builtin function {name!r}; use inv_sqrt, inv_z, exp_neg or g<k>")


def read_table(path):
    """Read a tabulated function: CSV with a header row, ``z`` and ``f`` in the first two columns."""
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise UsageError(f"cannot read table {path!r}: {exc}") from None
    if len(rows) < 2:
        raise UsageError(f"{path}: expected a header row and at least one data row")
    zs, fs = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            break
        if len(row) < 2:
            raise UsageError(f"{path}:{lineno}: expected at least two columns")
        try:
            zs.append(float(row[0]))
            fs.append(float(row[1]))
        except ValueError:
            raise UsageError(f"{path}:{lineno}: non-numeric entry") from None
    return np.array(zs), np.array(fs)


def _table_function(path, rule):
    zs, fs = read_table(path)
    if len(zs) != rule.order:
        raise UsageError(f"{path}: table has {len(zs)} rows but the rule has {rule.order} nodes (see `nodes`)")
    order = np.argsort(zs)
    zs, fs = zs[order], fs[order]
    if not np.allclose(zs, rule.nodes, rtol=NODE_RTOL, atol=0.0):
        raise UsageError(f"{path}: z column does not match the quadrature nodes for N={rule.order}")

    def f(z):
        z = np.asarray(z)
        if z.shape == rule.nodes.shape and np.array_equal(z, rule.nodes):
            return fs
        raise EvaluationError("tabulated function is only known at the quadrature nodes")

    return f


def _parse_grid(text, rule):
    if text == "nodes":
        return rule.nodes
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be 'a:b:n' or 'nodes', got {text!r}")
    try:
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"bad grid {text!r}") from None
    if n < 1 or a < 0.25 or b < a:
        raise UsageError(f"grid needs 1/4 <= a <= b and n >= 1, got {text!r}")
    return np.linspace(a, b, n)


def cmd_project(args):
    rule = measure.build_quadrature(args.N)
    if args.table is not None:
        if args.grid not in (None, "nodes"):
            raise UsageError("tabulated input is only known at the nodes; use --grid nodes")
        f = _table_function(args.table, rule)
        norm_sq = None
        grid = rule.nodes
    else:
        f, norm_sq = _builtin(args.f)
        grid = _parse_grid(args.grid or DEFAULT_GRID, rule)
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    expansion = hilbert.fourier_coefficients(f, args.order, rule)
    if norm_sq is None:
        norm_sq = hilbert.inner_product(f, f, rule)

    coeffs = OutputRecord("coeff_table", ("n", "coefficient"))
    for n, c in enumerate(expansion.coeffs):
        coeffs.add(n, c)

    errors = OutputRecord("error_table", ("order", "l2_error", "parseval_error"))
    for k in range(args.order + 1):
        part = expansion.truncated(k)
        errors.add(k, hilbert.truncation_error(f, part, rule), hilbert.parseval_error(norm_sq, part))

    curves = OutputRecord("eval_table", ("z", "f", "approx", "abs_error"))
    fv = f(grid) if args.table is None else f(rule.nodes)
    fv = np.broadcast_to(np.asarray(fv, dtype=float), np.shape(grid))
    approx = expansion(grid)
    for z, a, b in zip(grid, fv, approx):
        curves.add(repr(float(z)), float(a), float(b), float(abs(a - b)))

    l2 = errors.rows[-1][1]
    print(f"L2 error (order {args.order}): {l2!r}", file=sys.stderr)
    chosen = {"curves": [curves], "coeffs": [coeffs], "errors": [errors], "all": [coeffs, errors, curves]}
    return chosen[args.emit]


def _parse_pair(text):
    if "=" not in text:
        raise UsageError(f"interpolation pairs look like node=value, got {text!r}")
    node, value = text.split("=", 1)
    return _parse_rational(node), _parse_rational(value)


def cmd_interpolate(args):
    pairs = [_parse_pair(p) for p in args.pairs]
    problem = basisops.InterpolationProblem(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
    coeffs = basisops.interpolate(problem)
    residual = basisops.interpolation_residual(problem, coeffs)
    rec = OutputRecord("coeff_table", ("basis", "coefficient"))
    for l, c in enumerate(coeffs):
        rec.add(f"g{2 * l}", c)
    worst = max(abs(r) for r in residual)
    print(f"max residual: {worst}", file=sys.stderr)
    if worst != 0:
        raise RuntimeError("exact interpolation left a nonzero residual")
    return [rec]


def cmd_check(args):
    results = checks.run_suite(args.suite, N=args.N, tol=args.tol, m=args.m, terms=args.terms)
    rec = OutputRecord("check_report", ("check", "deviation", "tolerance", "passed"))
    for r in results:
        rec.add(r.label, r.deviation, r.tolerance, int(r.passed))
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=sys.stderr)
    return [rec], (1 if failed else 0)


def cmd_nodes(args):
    rule = measure.build_quadrature(args.N)
    rec = OutputRecord("eval_table", ("z", "weight"))
    for z, w in rule:
        rec.add(repr(float(z)), float(w))
    return [rec]


def _global_flags(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--N", type=int, default=default(64), help="quadrature order (default 64)")
    parser.add_argument("--tol", type=float, default=default(1e-10), help="float tolerance (default 1e-10)")
    parser.add_argument("--format", choices=("csv", "json"), default=default("csv"))
    parser.add_argument("--out", default=default(None), metavar="PATH", help="write output here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(prog="grational", description="g-rational functions on [1/4, inf)")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate G_n or g_n")
    p.add_argument("--seq", choices=("G", "g"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z", action="append", required=True, help="comma-separated points; repeatable")
    p.add_argument("--method", choices=exactseq.METHODS, default="recurrence")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="exact", action="store_true", default=None)
    mode.add_argument("--float", dest="exact", action="store_false")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("project", parents=[common], help="project a function onto g_0 .. g_2n")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--f", help="builtin: inv_sqrt, inv_z, exp_neg, g<k>")
    src.add_argument("--table", metavar="PATH", help="CSV of (z, f) at the rule nodes")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--grid", default=None, help=f"a:b:n or 'nodes' (default {DEFAULT_GRID})")
    p.add_argument("--emit", choices=("curves", "coeffs", "errors", "all"), default="curves")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("interpolate", parents=[common], help="exact interpolation in span{g_0, ..., g_2k}")
    p.add_argument("pairs", nargs="+", metavar="NODE=VALUE")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("check", parents=[common], help="run an invariant suite")
    p.add_argument("--suite", choices=checks.SUITES + ("all",), default="all")
    p.add_argument("--m", type=int, default=1, help="index for the parseval suite")
    p.add_argument("--terms", type=int, default=2000, help="terms for the parseval suite")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("nodes", parents=[common], help="print quadrature nodes and weights")
    p.set_defaults(func=cmd_nodes)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.N < 1:
        parser.error("--N must be >= 1")
    if not args.tol > 0:
        parser.error("--tol must be > 0")
    try:
        result = args.func(args)
    except (UsageError, DomainError, EvaluationError, SingularMatrixError, ZeroDivisionError) as exc:
        print(f"grational {args.command}: error: {exc}", file=sys.stderr)
        return 2
    records, status = result if isinstance(result, tuple) else (result, 0)
    text = render(records, args.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
