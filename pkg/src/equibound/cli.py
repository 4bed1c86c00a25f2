"""Command-line surface over the bound engine.

One subcommand per layer: point queries with certificates (bound),
certificate replay (verify), the two-distance table (gtable), the
semidefinite table with its reference comparison (sdp-table), the
two-distance constructions (construct, lift), and the regime-change
analysis (analyze-crossover).  Exit status is 0 on success, 1 when a
verification or comparison fails, 2 for usage errors.

Tables print as CSV with the fixed header ``n,alpha,value,kind,source``;
--json emits the same records as structured data.  Values appear exactly
when rational and to six significant digits otherwise.
"""

import argparse
import csv
import json
import math
import multiprocessing
import sys
from fractions import Fraction

import numpy as np

from . import analysis
from . import bounds
from . import refdata
from . import sdpsolve
from . import twodist

CSV_HEADER = ("n", "alpha", "value", "kind", "source")

# converged semidefinite cells farther than this (relative) from their
# reference entry count as regressions
DEVIATION_LIMIT = 1e-2


# -- argument parsing ------------------------------------------------------

def _angle(text):
    """An integer q >= 2 abbreviates 1/q; anything else must be a fraction
    or decimal literal."""
    try:
        if "/" not in text and "." not in text:
            value = int(text)
            if value >= 2:
                return Fraction(1, value)
            return Fraction(value)
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not an angle: %r" % (text,))


def _angle_list(text):
    return tuple(_angle(part) for part in text.split(","))


def _span(text):
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("not a range: %r (want lo:hi)" % (text,))
    if lo > hi:
        raise argparse.ArgumentTypeError("empty range: %r" % (text,))
    return lo, hi


def _product_pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            "want two inner products 'a,b', got %r" % (text,)
        )
    try:
        return Fraction(parts[0]), Fraction(parts[1])
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a product pair: %r" % (text,))


# -- formatting ------------------------------------------------------------

def _format_value(value):
    """Exact rationals verbatim, floats to six significant digits, empty
    for missing values."""
    if value is None:
        return ""
    if isinstance(value, (int, Fraction)):
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return "%d/%d" % (value.numerator, value.denominator)
    if not math.isfinite(value):
        return ""
    return "%.6g" % (value,)


def _json_value(value):
    if value is None:
        return None
    if isinstance(value, (int, Fraction)):
        value = Fraction(value)
        if value.denominator == 1:
            return value.numerator
        return "%d/%d" % (value.numerator, value.denominator)
    if not math.isfinite(value):
        return None
    return float("%.6g" % (value,))


def _emit_rows(rows, as_json, stream=None):
    """rows: (n, alpha, value, kind, source) records with alpha a Fraction
    or None.  Ordering is the caller's; this only renders."""
    stream = stream or sys.stdout
    if as_json:
        records = [
            {
                "n": n,
                "alpha": _format_value(alpha) or None,
                "value": _json_value(value),
                "kind": kind,
                "source": source,
            }
            for n, alpha, value, kind, source in rows
        ]
        json.dump(records, stream, indent=2)
        stream.write("\n")
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for n, alpha, value, kind, source in rows:
        writer.writerow(
            [n, _format_value(alpha), _format_value(value), kind, source]
        )


# -- bound -----------------------------------------------------------------

def cmd_bound(args):
    """Best applicable bound at one (n, alpha), with provenance."""
    sdp_result = None
    if args.sdp:
        problem = sdpsolve.assemble(
            args.n, args.alpha, k3=args.k3, k4=args.k4, d=args.block_d
        )
        sdp_result = sdpsolve.solve(problem, tol=args.tol)
    result = bounds.best_bound(args.n, args.alpha, sdp_result=sdp_result)
    lines = math.floor(result.value)
    if args.json:
        record = {
            "n": args.n,
            "alpha": _format_value(args.alpha),
            "value": _json_value(result.value),
            "lines": lines,
            "method": result.method,
        }
        if result.certificate is not None:
            cert = result.certificate
            record["certificate"] = {
                "a": _format_value(cert.a),
                "n_sub": _format_value(cert.n_sub),
                "t": _format_value(cert.t),
                "combined_coeff": _format_value(cert.combined_coeff),
                "bound_on_A": _format_value(cert.bound_on_A),
                "final_bound": _format_value(cert.final_bound),
            }
        if sdp_result is not None:
            record["sdp"] = {
                "status": sdp_result.status,
                "objective": _json_value(sdp_result.objective),
                "reported_bound": _json_value(sdp_result.reported_bound),
                "max_violation": _json_value(sdp_result.max_violation),
            }
        json.dump(record, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 0
    print("n %d  alpha %s" % (args.n, _format_value(args.alpha)))
    print("bound %s  method %s" % (_format_value(result.value), result.method))
    if lines != result.value:
        print("lines <= %d" % (lines,))
    if result.certificate is not None:
        cert = result.certificate
        print(
            "certificate: t = %s, combined = %s, A <= %s, final = %s"
            % (
                _format_value(cert.t),
                _format_value(cert.combined_coeff),
                _format_value(cert.bound_on_A),
                _format_value(cert.final_bound),
            )
        )
    if sdp_result is not None:
        print(
            "sdp: status %s  reported %s  violation %s"
            % (
                sdp_result.status,
                _format_value(sdp_result.reported_bound),
                _format_value(sdp_result.max_violation),
            )
        )
    return 0


# -- verify ----------------------------------------------------------------

def cmd_verify(args):
    """Replay the exact certificate over a range of reciprocals, check the
    symbolic identities, and recompute the shipped closed-form table."""
    if args.odd_range is None and not args.symbolic:
        odd_range, do_symbolic = (3, 101), True
    else:
        odd_range, do_symbolic = args.odd_range, args.symbolic
    failures = []
    checked = []
    if odd_range is not None:
        lo, hi = odd_range
        for m in range(lo | 1, hi + 1, 2):
            a = Fraction(1, m)
            try:
                cert = bounds.verify_proof_chain(a)
            except bounds.CertificateError as exc:
                failures.append(str(exc))
                if not args.json:
                    print("a = 1/%d: FAIL %s" % (m, exc))
                continue
            checked.append(m)
            if not args.json:
                print(
                    "a = 1/%d: ok  t = %s  bound = %s"
                    % (m, _format_value(cert.t), _format_value(cert.final_bound))
                )
    if do_symbolic:
        if bounds.verify_proof_chain_symbolic():
            if not args.json:
                print("symbolic identities: ok")
        else:
            failures.append("symbolic identities failed")
            if not args.json:
                print("symbolic identities: FAIL")
    diffs = _closed_form_table_diffs()
    if diffs:
        failures.extend(diffs)
        if not args.json:
            for diff in diffs:
                print("closed-form table: FAIL %s" % (diff,))
    elif not args.json:
        print("closed-form table: 12 rows recomputed, 0 diffs")
    if args.json:
        json.dump(
            {
                "checked": checked,
                "symbolic": do_symbolic and not any(
                    f.startswith("symbolic") for f in failures
                ),
                "failures": failures,
            },
            sys.stdout,
            indent=2,
        )
        sys.stdout.write("\n")
    if failures:
        if not args.json:
            print("%d failure(s)" % (len(failures),), file=sys.stderr)
        return 1
    return 0


def _closed_form_table_diffs():
    # every shipped row must equal the recomputed closed form at its angle
    table = refdata.load_table("table2")
    out = []
    for row in table.rows:
        a = int(1 / row.alpha)
        expected = bounds.main_theorem_bound(a, row.n)
        if expected != row.value:
            out.append(
                "n = %d, alpha = %s: shipped %s, recomputed %s"
                % (row.n, row.alpha, row.value, expected)
            )
    return out


# -- gtable ----------------------------------------------------------------

def cmd_gtable(args):
    """Two-distance bounds over a dimension range, diffed against the
    expected set of non-tight dimensions."""
    lo, hi = args.range if args.range else (7, 417)
    try:
        m_bounds = refdata.m_bound_map(path=args.ref)
        rows = twodist.g_table(range(lo, hi + 1), m_bounds)
    except ValueError as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 1
    records = [
        (row.n, None, row.bound, "tight" if row.tight else "open", "gtable")
        for row in rows
    ]
    _emit_rows(records, args.json)
    open_dims = {row.n for row in rows if not row.tight}
    expected = {n for n in refdata.G_OPEN_DIMS if lo <= n <= hi}
    if open_dims == expected:
        print(
            "open dimensions match the expected set (%d of them)"
            % (len(open_dims),),
            file=sys.stderr,
        )
        return 0
    unexpected = sorted(open_dims - expected)
    missing = sorted(expected - open_dims)
    if unexpected:
        print(
            "unexpectedly open: %s" % (" ".join(map(str, unexpected)),),
            file=sys.stderr,
        )
    if missing:
        print(
            "expected open but tight: %s" % (" ".join(map(str, missing)),),
            file=sys.stderr,
        )
    return 1


# -- sdp-table -------------------------------------------------------------

def _sdp_cell(task):
    # top-level so worker processes can unpickle it
    n, alpha, k3, k4, d, tol = task
    problem = sdpsolve.assemble(n, alpha, k3=k3, k4=k4, d=d)
    solution = sdpsolve.solve(problem, tol=tol)
    return (
        n,
        alpha,
        solution.reported_bound,
        solution.status,
        solution.max_violation,
    )


def cmd_sdp_table(args):
    """One solve per (n, alpha) cell, compared against the reference table
    where it has an entry; row maxima and pair counts appended per row."""
    lo, hi = args.range if args.range else (401, 419)
    alphas = args.alpha if args.alpha else refdata.TABLE3_ALPHAS
    reference = refdata.table3_matrix(
        refdata.load_table("table3", path=args.ref) if args.ref else None
    )
    tasks = [
        (n, alpha, args.k3, args.k4, args.block_d, args.tol)
        for n in range(lo, hi + 1)
        for alpha in alphas
    ]
    if args.jobs > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            results = list(pool.imap_unordered(_sdp_cell, tasks))
    else:
        results = [_sdp_cell(task) for task in tasks]
    results.sort(key=lambda cell: (cell[0], -cell[1]))
    records = []
    regressions = 0
    by_dim = {}
    for n, alpha, value, status, violation in results:
        by_dim.setdefault(n, []).append((alpha, value, status, violation))
    for n in sorted(by_dim):
        converged = []
        for alpha, value, status, violation in by_dim[n]:
            if status == sdpsolve.STATUS_OPTIMAL:
                records.append((n, alpha, value, "upper", "sdp"))
                converged.append(value)
            else:
                marked = None if not math.isfinite(value) else value
                records.append((n, alpha, marked, status, "sdp"))
            ref_value = reference.get(n, {}).get(alpha)
            if status != sdpsolve.STATUS_OPTIMAL:
                print(
                    "n=%d alpha=%s: marked %s (violation %s)"
                    % (n, _format_value(alpha), status, _format_value(violation)),
                    file=sys.stderr,
                )
            elif ref_value is not None:
                deviation = float((value - ref_value) / ref_value)
                if abs(deviation) > DEVIATION_LIMIT:
                    regressions += 1
                    flag = "  REGRESSION"
                else:
                    flag = ""
                print(
                    "n=%d alpha=%s: value %s  reference %s  deviation %.3g%s"
                    % (
                        n,
                        _format_value(alpha),
                        _format_value(value),
                        _format_value(ref_value),
                        deviation,
                        flag,
                    ),
                    file=sys.stderr,
                )
        if converged:
            records.append((n, None, max(converged), "upper", "row_max"))
        records.append(
            (n, None, Fraction(n * (n + 1), 2), "exact", "pair_count")
        )
    _emit_rows(records, args.json)
    if regressions:
        print("%d cell(s) beyond %.0e" % (regressions, DEVIATION_LIMIT),
              file=sys.stderr)
        return 1
    return 0


# -- construct / lift ------------------------------------------------------

# beyond this many points the full Gram matrix stops being cheap
_GRAM_LIMIT = 1500


def _gram_deviation(points, products):
    """(max norm deviation, max pair deviation); the pair check reads the
    full Gram matrix and is skipped (None) past _GRAM_LIMIT points."""
    norm_dev = float(np.abs((points * points).sum(axis=1) - 1.0).max())
    if len(points) > _GRAM_LIMIT:
        return norm_dev, None
    gram = points @ points.T
    off = ~np.eye(len(points), dtype=bool)
    a, b = (float(products[0]), float(products[1]))
    pair_dev = float(
        np.minimum(np.abs(gram - a), np.abs(gram - b))[off].max()
    )
    return norm_dev, pair_dev


def cmd_construct(args):
    """Build the two-distance set in dimension n and report its shape."""
    s = twodist.simplex_pairs_construction(args.n)
    a, b = s.products
    norm_dev, pair_dev = _gram_deviation(s.points, s.products)
    if args.json:
        json.dump(
            {
                "dim": s.dim,
                "size": s.size,
                "products": [_format_value(a), _format_value(b)],
                "norm_deviation": norm_dev,
                "pair_deviation": pair_dev,
            },
            sys.stdout,
            indent=2,
        )
        sys.stdout.write("\n")
        return 0
    print("dim %d  size %d" % (s.dim, s.size))
    print("products a = %s, b = %s" % (_format_value(a), _format_value(b)))
    print("max norm deviation %.3g" % (norm_dev,))
    if pair_dev is not None:
        print("max pair deviation %.3g" % (pair_dev,))
    return 0


def cmd_lift(args):
    """Lift parameters for a product pair, or the lifted line system of
    the built construction when -n is given."""
    if (args.products is None) == (args.n is None):
        print("error: lift needs exactly one of --products or --n",
              file=sys.stderr)
        return 2
    if args.products is not None:
        a, b = args.products
        r_squared, cos_theta = twodist.lift_parameters(a, b)
        lifted = None
    else:
        s = twodist.simplex_pairs_construction(args.n)
        result = twodist.lift(s)
        r_squared, cos_theta = result.r_squared, result.cos_theta
        lifted = {
            "size": s.size,
            "dim": int(result.lifted.shape[1]),
            "angle_deviation": None,
        }
        if s.size <= _GRAM_LIMIT:
            gram = result.lifted @ result.lifted.T
            off = ~np.eye(len(gram), dtype=bool)
            lifted["angle_deviation"] = float(
                np.abs(np.abs(gram[off]) - float(cos_theta)).max()
            )
    if args.json:
        record = {
            "r_squared": _format_value(r_squared),
            "cos_theta": _format_value(cos_theta),
        }
        if lifted is not None:
            record["lifted"] = lifted
        json.dump(record, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 0
    print("R^2 = %s  (R = %.6g)" % (_format_value(r_squared),
                                    math.sqrt(r_squared)))
    print("cos theta = %s" % (_format_value(cos_theta),))
    if lifted is not None:
        deviation = lifted["angle_deviation"]
        print(
            "lifted %d unit vectors into dimension %d, "
            "max angle deviation %s"
            % (
                lifted["size"],
                lifted["dim"],
                "skipped" if deviation is None else "%.3g" % (deviation,),
            )
        )
    return 0


# -- analyze-crossover -----------------------------------------------------

def cmd_crossover(args):
    """Per-index case values, the regime change, and window coverage."""
    k_lo, k_hi = args.range if args.range else (1, 12)
    rows = [analysis.case_bounds(k) for k in range(k_lo, k_hi + 1)]
    cross = analysis.crossover_k()
    coverage = [
        (k, analysis.window_covers_bracket(k))
        for k in range(max(2, k_lo), k_hi + 1)
    ]
    if args.json:
        json.dump(
            {
                "rows": [
                    {"k": r.k, "caseA": r.caseA, "caseB": r.caseB}
                    for r in rows
                ],
                "crossover": {"k": cross.k, "n": cross.n},
                "coverage": [
                    {"k": k, "covers": covers} for k, covers in coverage
                ],
            },
            sys.stdout,
            indent=2,
        )
        sys.stdout.write("\n")
        return 0
    print("k  caseA  caseB  smaller")
    for r in rows:
        smaller = "A" if r.caseA < r.caseB else "B"
        print("%-2d  %d  %d  %s" % (r.k, r.caseA, r.caseB, smaller))
    print("crossover: k = %d, n = %d" % (cross.k, cross.n))
    for k, covers in coverage:
        print("window at a = %d %s its bracket"
              % (2 * k + 1, "covers" if covers else "does not cover"))
    return 0


# -- wiring ----------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="equibound",
        description="Bounds on equiangular line systems and spherical "
        "two-distance sets.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="structured output instead of text/CSV")
    truncation = argparse.ArgumentParser(add_help=False)
    truncation.add_argument("--k3", type=int, default=sdpsolve.DEFAULT_K3,
                            help="degree cutoff for the scalar constraints")
    truncation.add_argument("--k4", type=int, default=sdpsolve.DEFAULT_K4,
                            help="level cutoff for the matrix constraints")
    truncation.add_argument("--block-d", type=int, default=sdpsolve.DEFAULT_D,
                            help="size of each matrix constraint block")
    truncation.add_argument("--tol", type=float, default=1e-7,
                            help="solver tolerance")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common, truncation],
                       help="best bound at one dimension and angle")
    p.add_argument("--n", type=int, required=True, help="dimension")
    p.add_argument("--alpha", type=_angle, required=True,
                   help="cosine of the common angle; an integer q means 1/q")
    p.add_argument("--sdp", action="store_true",
                   help="also run the semidefinite solver at this point")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", parents=[common],
                       help="replay the exact certificates")
    p.add_argument("--odd-range", type=_span, default=None, metavar="LO:HI",
                   help="check cosines 1/m for odd m in this range "
                   "(default 3:101 when no mode flag is given)")
    p.add_argument("--symbolic", action="store_true",
                   help="check the identities in the rational-function field")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gtable", parents=[common],
                       help="two-distance bound table over a range")
    p.add_argument("--range", type=_span, default=None, metavar="LO:HI",
                   help="dimension range (default 7:417)")
    p.add_argument("--ref", default=None,
                   help="line-bound CSV to assemble from "
                   "(same format as the packaged file)")
    p.set_defaults(func=cmd_gtable)

    p = sub.add_parser("sdp-table", parents=[common, truncation],
                       help="semidefinite bounds over a grid of cells")
    p.add_argument("--range", type=_span, default=None, metavar="LO:HI",
                   help="dimension range (default 401:419)")
    p.add_argument("--alpha", type=_angle_list, default=None,
                   help="comma-separated angles (default: the reference "
                   "table's twelve columns)")
    p.add_argument("--ref", default=None,
                   help="reference CSV to compare against "
                   "(same format as the packaged file)")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for the cell solves")
    p.set_defaults(func=cmd_sdp_table)

    p = sub.add_parser("construct", parents=[common],
                       help="build the two-distance set in dimension n")
    p.add_argument("--n", type=int, required=True, help="dimension")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("lift", parents=[common],
                       help="map a two-distance set to a line system")
    p.add_argument("--products", type=_product_pair, default=None,
                   metavar="A,B", help="inner products, e.g. '1/5,-3/5'")
    p.add_argument("--n", type=int, default=None,
                   help="lift the built construction in this dimension")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("analyze-crossover", parents=[common],
                       help="where the two bound families change order")
    p.add_argument("--range", type=_span, default=None, metavar="LO:HI",
                   help="ladder index range (default 1:12)")
    p.set_defaults(func=cmd_crossover)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        # domain errors raised by the library layers are usage errors here
        print("error: %s" % (exc,), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
