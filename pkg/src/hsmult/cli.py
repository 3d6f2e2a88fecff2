"""Command-line front end.

Every subcommand prints one JSON report on stdout::

    {"command": [...], "result": {...}, "certificate": {...}, "wall_time_s": 0.01}

Exit codes: 0 success, 2 invalid input, 3 budget or stabilization failure,
1 internal error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
import time
from fractions import Fraction

from . import blowdown as bd
from .chern import (GradedClass, IntersectionTable, dual_class, segre_from_chern,
                    top_segre_integral)
from .curve import CurveGerm, curve_lelong_number, pullback_order, verify_curve_lelong
from .errors import BudgetExceeded, InternalError, InvalidInput
from .ideal import IdealPresentation
from .monomial import MonomialIdeal, newton_boundary, newton_multiplicity_2d, staircase_colength
from .multiplicity import (hs_multiplicity, mixed_multiplicity, polarization_check,
                           rees_sharp_check)

log = logging.getLogger("hsmult")

MAX_SAFE_INT = 2 ** 53 - 1


def to_plain(obj):
    """Canonical JSON-ready form: exact integers, fractions as ``"a/b"``."""
    if isinstance(obj, (bool, str, float)) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return to_plain(obj.numerator)
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, int):
        if abs(obj) > MAX_SAFE_INT:
            return {"bigint": str(obj)}
        return obj
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if hasattr(obj, "to_json"):
        return to_plain(obj.to_json())
    raise InternalError(f"cannot serialize {type(obj).__name__}")


def dumps(report, pretty=False):
    return json.dumps(to_plain(report), sort_keys=True, indent=2 if pretty else None,
                      separators=None if pretty else (",", ":"), ensure_ascii=False)


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from None


def _ideal(path):
    return IdealPresentation.from_json(_load(path))


def _monomial_ideal(path):
    obj = _load(path)
    gens = obj.get("generators") if isinstance(obj, dict) else None
    if gens and all(isinstance(g, list) for g in gens):
        return MonomialIdeal.from_json(obj)
    return MonomialIdeal.from_ideal(IdealPresentation.from_json(obj))


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidInput(f"expected a comma-separated integer list, got {text!r}") from None


def _need(value, flag):
    if value is None:
        raise InvalidInput(f"{flag} is required")
    return value


def _budget_kwargs(args):
    return {} if args.budget is None else {"t_budget": args.budget}


def cmd_hs(args):
    U = _ideal(_need(args.ideal, "--ideal"))
    J = _ideal(args.quotient) if args.quotient else None
    rep = hs_multiplicity(U, J, n=args.dim, backend=args.backend, **_budget_kwargs(args))
    return {"value": rep.value, "dimension": rep.dimension}, rep


def cmd_mixed(args):
    ideals = [_ideal(p) for p in _need(args.ideals, "--ideals")]
    d = _int_list(_need(args.degrees, "--degrees"))
    J = _ideal(args.quotient) if args.quotient else None
    rep = mixed_multiplicity(ideals, d, J, backend=args.backend, n=args.dim,
                             **_budget_kwargs(args))
    return {"value": rep.value, "degrees": d, "dimension": rep.dimension}, rep


def cmd_polarization(args):
    ideals = [_ideal(p) for p in _need(args.ideals, "--ideals")]
    p = _int_list(_need(args.powers, "--powers"))
    J = _ideal(args.quotient) if args.quotient else None
    rep = polarization_check(ideals, p, J, backend=args.backend)
    return {"lhs": rep.lhs, "rhs": rep.rhs, "equal": rep.equal}, {"terms": rep.to_json()["terms"]}


def cmd_rees_sharp(args):
    ideals = [_ideal(p) for p in _need(args.ideals, "--ideals")]
    if len(ideals) != 2:
        raise InvalidInput("rees-sharp takes exactly two ideals")
    J = _ideal(args.quotient) if args.quotient else None
    rep = rees_sharp_check(ideals[0], ideals[1], args.dim, J, backend=args.backend)
    out = rep.to_json()
    return {"chain": out["chain"], "pass": out["pass"]}, {"inequalities": out["inequalities"]}


def cmd_newton2d(args):
    I = _monomial_ideal(_need(args.ideal, "--ideal"))
    value = newton_multiplicity_2d(I)
    return {"value": value}, {"hull_vertices": [list(v) for v in newton_boundary(I)],
                              "generators": [list(p) for p in I.points]}


def cmd_staircase(args):
    I = _monomial_ideal(_need(args.ideal, "--ideal"))
    return {"value": staircase_colength(I)}, {"generators": [list(p) for p in I.points]}


def cmd_curve_lelong(args):
    Y = CurveGerm.from_json(_load(_need(args.germ, "--germ")))
    g = _ideal(_need(args.weights, "--weights"))
    orders = [pullback_order(g, b) for b in Y.branches]
    value = curve_lelong_number(Y, g)
    return {"value": value}, {"branch_orders": orders}


def cmd_verify_curve(args):
    Y = CurveGerm.from_json(_load(_need(args.germ, "--germ")))
    J = _ideal(_need(args.quotient, "--quotient"))
    U = _ideal(_need(args.ideal, "--ideal"))
    rep = verify_curve_lelong(Y, J, U)
    return {"lelong": rep.lelong, "hs": rep.hs, "equal": rep.equal}, rep.report


def cmd_blowdown(args):
    L = bd.LineBundleDatum.from_json(_load(_need(args.datum, "--datum")))
    lambdas = [bd.lambda_multiplicity(b, L.k0) for b in L.base_points]
    value = bd.rs_blowdown_multiplicity(L)
    cert = {"k0_squared_degree": L.k0 ** 2 * L.degree,
            "base_points": [{"generators": [list(p) for p in bd.lambda_ideal(b, L.k0).points],
                             "hull_vertices": [list(v) for v in
                                               newton_boundary(bd.lambda_ideal(b, L.k0))],
                             "lambda": lam}
                            for b, lam in zip(L.base_points, lambdas)]}
    return {"value": value}, cert


def cmd_semigroup(args):
    S = bd.Semigroup(_int_list(_need(args.gaps, "--gaps")))
    L = bd.line_bundle_of_point(S)
    b = L.base_points[0] if L.base_points else None
    result = {"first_nongap": bd.first_nongap(S), "genus": S.genus,
              "blowdown_multiplicity": bd.rs_blowdown_multiplicity(L)}
    return result, {"datum": L.to_json(), "d_seq": None if b is None else list(b.d_seq)}


def _bounds_input(args):
    for flag in ("k0", "k1", "p", "n", "vol", "volB"):
        _need(getattr(args, flag), f"--{flag}")
    try:
        vol, vol_B = Fraction(args.vol), Fraction(args.volB)
    except ValueError:
        raise InvalidInput("--vol and --volB must be rationals such as 3 or 5/2") from None
    return bd.BoundsInput(args.k0, args.k1, args.p, args.n, vol, vol_B)


def cmd_bounds(args):
    lower, upper = bd.mult_bounds(_bounds_input(args))
    return {"lower": lower, "upper": upper}, {}


def cmd_vol_control(args):
    rep = bd.vol_control_check(_bounds_input(args))
    return rep.to_json(), {}


def cmd_segre(args):
    c = GradedClass.from_json(_load(_need(args.chern, "--chern")))
    table = IntersectionTable.from_json(_load(_need(args.table, "--table")), c.symbols,
                                        c.weights, c.truncation)
    value = top_segre_integral(c, table)
    s = segre_from_chern(dual_class(c))
    return {"value": value}, {"segre_of_dual": [str(x) for x in s.components]}


COMMANDS = {
    "hs": cmd_hs,
    "mixed": cmd_mixed,
    "polarization": cmd_polarization,
    "rees-sharp": cmd_rees_sharp,
    "newton2d": cmd_newton2d,
    "staircase": cmd_staircase,
    "curve-lelong": cmd_curve_lelong,
    "verify-curve": cmd_verify_curve,
    "blowdown": cmd_blowdown,
    "semigroup": cmd_semigroup,
    "bounds": cmd_bounds,
    "vol-control": cmd_vol_control,
    "segre": cmd_segre,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    common.set_defaults(pretty=False)
    common.add_argument("--ideal")
    common.add_argument("--ideals", nargs="+")
    common.add_argument("--quotient")
    common.add_argument("--dim", type=int)
    common.add_argument("--degrees")
    common.add_argument("--powers")
    common.add_argument("--backend", default="auto", choices=["auto", "general", "monomial"])
    common.add_argument("--germ")
    common.add_argument("--weights")
    common.add_argument("--datum")
    common.add_argument("--gaps")
    common.add_argument("--chern")
    common.add_argument("--table")
    for flag in ("k0", "k1", "p", "n"):
        common.add_argument(f"--{flag}", type=int)
    common.add_argument("--vol")
    common.add_argument("--volB")
    common.add_argument("--budget", type=int, help="largest exponent t sampled")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="hsmult", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=stderr, format="%(levelname)s %(name)s: %(message)s")
    start = time.perf_counter()
    try:
        result, certificate = COMMANDS[args.command](args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=stderr)
        return 1
    except InvalidInput as exc:
        print(f"invalid input: {exc}", file=stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=stderr)
        return 3
    report = {
        "command": argv,
        "result": result,
        "certificate": certificate,
        "wall_time_s": round(time.perf_counter() - start, 6),
    }
    print(dumps(report, args.pretty), file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
