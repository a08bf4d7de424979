"""Command line driver: construct, inspect, and verify curves as JSON.

Exit codes: 0 success, 1 verification failure, 2 usage or schema error,
3 capacity or budget exceeded.  Budgets can be set per invocation
(--budget-log2, --max-degree) or through SSCURVES_BUDGET_LOG2 and
SSCURVES_MAX_DEGREE.  With --json the standard output is machine-readable
only; all output is deterministic, so repeated runs are byte-identical.
"""

import argparse
import json
import os
import sys

from . import __version__, jsonio, render
from .builder import (CurveSpec, FibreProductSpec, build_components,
                      build_prime_field, glue_single_block,
                      stratum_certificate)
from .classify import covers_isomorphic, curves_isomorphic, radical
from .decomp import decompose
from .limits import Budget, BudgetError, CapacityError
from .quotient import decomposition, is_irreducible
from .zeta import (count_points, powersum_additivity_check,
                   verify_supersingular)


def _budget(args):
    log2 = args.budget_log2
    if log2 is None:
        log2 = int(os.environ.get("SSCURVES_BUDGET_LOG2", "24"))
    maxdeg = args.max_degree
    if maxdeg is None:
        maxdeg = int(os.environ.get("SSCURVES_MAX_DEGREE", "64"))
    return Budget(log2_points=log2, max_degree=maxdeg)


def _emit(args, doc, human_lines=None):
    if args.json or human_lines is None:
        sys.stdout.write(jsonio.dumps(doc))
    else:
        for line in human_lines:
            print(line)


def cmd_decompose(args):
    d = decompose(args.g)
    doc = {
        "g": d.g,
        "blocks": [[s, r] for s, r in d.blocks],
        "t": d.t,
        "w": d.w,
        "m": d.m,
        "u": list(d.u),
        "moduli_bound": d.moduli_bound,
    }
    lines = [
        "g = %d" % d.g,
        "blocks (s, r) = %s" % (list(d.blocks),),
        "t = %d, w = %d, m = %d" % (d.t, d.w, d.m),
        "u = %s" % (list(d.u),),
        "moduli lower bound = %s" % (d.moduli_bound,),
    ]
    _emit(args, doc, lines)
    return 0


def cmd_construct(args):
    d = decompose(args.g)
    construction = {"g": args.g, "mode": args.mode, "glue": bool(args.glue)}
    if args.mode == "f2":
        if args.glue:
            raise ValueError("--glue applies to the f2m construction only")
        curve = build_prime_field(d)
        lines = [render.equation_text(curve)]
        lines += render.xr_table(curve)
    else:
        spec = build_components(d)
        if args.glue:
            if d.t != 1:
                raise ValueError("--glue needs a single-block genus "
                                 "(g = %d has %d blocks)" % (args.g, d.t))
            curve = glue_single_block(spec)
            lines = [render.equation_text(curve)]
            lines += render.xr_table(curve)
        else:
            curve = spec
            lines = render.component_lines(spec)
    cert = stratum_certificate(d)
    lines.append("genus certificate: %s, total %d"
                 % ([[c, g] for c, g in cert.strata], cert.total))
    doc = jsonio.curve_to_json(curve, construction)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(jsonio.dumps(doc))
        lines.append("wrote %s" % args.out)
    _emit(args, doc, lines)
    return 0


def cmd_quotients(args):
    curve = jsonio.load_curve(args.curvefile)
    if not isinstance(curve, CurveSpec):
        raise ValueError("quotients need a single-equation curve file")
    budget = _budget(args)
    pieces = decomposition(curve, max_degree=budget.max_degree)
    doc = [{"alpha": jsonio.elem_to_json(p.alpha), "genus": p.genus,
            "rhs": jsonio.sparse_to_json(p.rhs)} for p in pieces]
    lines = ["%d quotients, genus total %d" % (len(pieces),
                                               sum(p.genus for p in pieces))]
    lines += ["alpha=%s  genus %d  w^2+w = %s"
              % (jsonio.elem_to_json(p.alpha), p.genus,
                 render.sparse_text(p.rhs)) for p in pieces]
    _emit(args, doc, lines)
    return 0


def cmd_count(args):
    curve = jsonio.load_curve(args.curvefile)
    n = count_points(curve, args.ext, _budget(args))
    _emit(args, {"ext": args.ext, "count": n}, ["%d" % n])
    return 0


def cmd_lpoly(args):
    curve = jsonio.load_curve(args.curvefile)
    budget = _budget(args)
    report = verify_supersingular(curve, budget)
    if report.lpoly is None:
        raise BudgetError("curve is too large to count directly; "
                          "use verify for the piecewise ladder")
    doc = {"genus": report.genus,
           "lpoly": [str(c) for c in report.lpoly.coeffs]}
    _emit(args, doc, ["genus %d" % report.genus,
                      "L = %s" % list(report.lpoly.coeffs)])
    return 0


def cmd_verify(args):
    curve = jsonio.load_curve(args.curvefile)
    budget = _budget(args)
    failures = []
    checks = {}
    if isinstance(curve, CurveSpec):
        checks["irreducible"] = is_irreducible(curve)
        if not checks["irreducible"]:
            failures.append("reducible")
    try:
        report = verify_supersingular(curve, budget)
    except ValueError as ex:
        doc = {"supersingular": False, "checks": checks,
               "failures": failures + [str(ex)]}
        _emit(args, doc, ["FAIL: %s" % ex])
        return 1
    doc = jsonio.report_to_json(report)
    doc["checks"].update(checks)
    if report.supersingular is False:
        failures.append("newton polygon rejects supersingularity")
    for key, ok in report.checks.items():
        if ok is False:
            failures.append(key)
    if not args.skip_additivity and isinstance(curve, (CurveSpec, FibreProductSpec)):
        try:
            ok = powersum_additivity_check(curve, args.kmax, budget)
            doc["checks"]["powersum_additivity"] = ok
            if not ok:
                failures.append("powersum_additivity")
        except (BudgetError, CapacityError):
            doc["checks"]["powersum_additivity"] = "skipped (budget)"
    doc["failures"] = failures
    verdict = report.supersingular
    lines = ["genus %d" % report.genus,
             "supersingular: %s" % json.dumps(verdict),
             "checks: %s" % json.dumps(doc["checks"])]
    if failures:
        lines.append("FAILURES: %s" % ", ".join(failures))
    _emit(args, doc, lines)
    return 1 if failures else 0


def cmd_iso(args):
    with open(args.first) as fh:
        a = json.load(fh)
    with open(args.second) as fh:
        b = json.load(fh)
    budget = _budget(args)
    if args.mode == "curves":
        F = jsonio.field_from_json(a.get("field", {}))
        F2 = jsonio.field_from_json(b.get("field", {}))
        if F != F2:
            raise ValueError("operands live over different fields")
        R = jsonio.linpoly_from_json(a.get("coeffs"), F)
        R2 = jsonio.linpoly_from_json(b.get("coeffs"), F)
        witness = curves_isomorphic(R, R2, max_degree=budget.max_degree)
    else:
        F = jsonio.field_from_json(a.get("field", {}))
        F2 = jsonio.field_from_json(b.get("field", {}))
        if F != F2:
            raise ValueError("operands live over different fields")
        L = [jsonio.linpoly_from_json(r, F) for r in a.get("basis", [])]
        L2 = [jsonio.linpoly_from_json(r, F) for r in b.get("basis", [])]
        witness = covers_isomorphic(L, L2, max_degree=budget.max_degree)
    if witness is None:
        doc = {"isomorphic": False, "mode": args.mode}
        _emit(args, doc, ["not isomorphic"])
    else:
        doc = {"isomorphic": True,
               "witness": jsonio.elem_to_json(witness.rho),
               "witness_field": jsonio.field_to_json(witness.field),
               "mode": witness.mode}
        _emit(args, doc, ["isomorphic via rho = %s in degree-%d field (%s)"
                          % (jsonio.elem_to_json(witness.rho),
                             witness.field.degree, witness.mode)])
    return 0


def cmd_radical(args):
    with open(args.first) as fh:
        a = json.load(fh)
    F = jsonio.field_from_json(a.get("field", {}))
    R = jsonio.linpoly_from_json(a.get("coeffs"), F)
    budget = _budget(args)
    rad = radical(R, max_degree=budget.max_degree)
    doc = {"ambient": jsonio.field_to_json(rad.ambient),
           "basis": [jsonio.elem_to_json(b) for b in rad.basis]}
    _emit(args, doc, ["radical dimension %d in degree-%d field"
                      % (len(rad.basis), rad.ambient.degree)])
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sscurves",
        description="construct and verify supersingular curves in characteristic 2")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="machine-readable output only")
        p.add_argument("--budget-log2", type=int, default=None,
                       help="log2 of the point-enumeration budget (default 24)")
        p.add_argument("--max-degree", type=int, default=None,
                       help="largest ambient field degree (default 64)")

    p = sub.add_parser("decompose", help="binary block decomposition of g")
    p.add_argument("g", type=int)
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("construct", help="build a curve of genus g")
    p.add_argument("g", type=int)
    p.add_argument("--mode", choices=("f2", "f2m"), required=True)
    p.add_argument("--glue", action="store_true",
                   help="glue a single-block f2m product into one equation")
    p.add_argument("--out", metavar="FILE", help="write the curve file here")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("quotients", help="list the quotient pieces of a curve")
    p.add_argument("curvefile")
    common(p)
    p.set_defaults(func=cmd_quotients)

    p = sub.add_parser("count", help="count points over an extension")
    p.add_argument("curvefile")
    p.add_argument("--ext", type=int, default=1, metavar="K",
                   help="extension degree over the curve's field")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("lpoly", help="L-polynomial from exact counts")
    p.add_argument("curvefile")
    common(p)
    p.set_defaults(func=cmd_lpoly)

    p = sub.add_parser("verify", help="full verification ladder")
    p.add_argument("curvefile")
    p.add_argument("--kmax", type=int, default=2,
                   help="extensions for the power-sum additivity check")
    p.add_argument("--skip-additivity", action="store_true")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("iso", help="isomorphism test for curves or covers")
    p.add_argument("--mode", choices=("curves", "covers"), default="curves")
    p.add_argument("first")
    p.add_argument("second")
    common(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("radical", help="radical of a linearized polynomial")
    p.add_argument("first", metavar="rfile")
    common(p)
    p.set_defaults(func=cmd_radical)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BudgetError, CapacityError) as ex:
        print("capacity/budget error: %s" % ex, file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError, OSError) as ex:
        print("error: %s" % ex, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
