"""Command-line interface.

Exit codes: 0 success, 1 infeasible, 2 unbounded, 3 parse or format error,
4 tropical genericity violation, 5 parameter validation failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from . import formats, hull, instances, polyhedral, tropical
from .formats import FormatError, PolytopeData
from .instances import ParameterError
from .puiseux import (
    OrientationError,
    ParseError,
    PoleError,
    T_LARGE,
    T_SMALL,
    format_scalar,
    format_vector,
    parse_rational,
    pf_parse,
    scalar_parser,
)
from .simplex import LinearProgram, solve as lp_solve

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_UNBOUNDED = 2
EXIT_PARSE = 3
EXIT_NOT_GENERIC = 4
EXIT_PARAMS = 5


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _orientation(field: str):
    if field == "puiseux-tlarge":
        return T_LARGE
    if field == "puiseux-tsmall":
        return T_SMALL
    return None


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e}", EXIT_PARSE)


def _write_output(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_polytope(path: str) -> PolytopeData:
    try:
        return formats.load_polytope(_read_input(path))
    except FormatError as e:
        raise CliError(str(e), EXIT_PARSE)


def _parse_scalar(text: str, field: str):
    try:
        return scalar_parser(field)(text)
    except ValueError as e:
        raise CliError(f"bad scalar {text!r}: {e}", EXIT_PARSE)


# ---------------------------------------------------------------------------
# pf subcommands
# ---------------------------------------------------------------------------


def _cmd_pf(args) -> int:
    orient = _orientation(args.field) or (T_LARGE if args.field == "rational" else None)
    if orient is None:
        raise CliError(f"unknown field {args.field!r}", EXIT_PARSE)
    try:
        if args.pf_cmd == "normalize":
            f = pf_parse(args.value, orient)
            print(format_scalar(f))
        elif args.pf_cmd == "val":
            f = pf_parse(args.value, orient)
            v = f.val()
            print("inf" if v is None else format_scalar(Fraction(v)))
        elif args.pf_cmd == "cmp":
            f = pf_parse(args.value, orient)
            g = pf_parse(args.other, orient)
            print({-1: "LT", 0: "EQ", 1: "GT"}[f.compare(g)])
        elif args.pf_cmd == "eval":
            f = pf_parse(args.value, orient)
            tau = parse_rational(args.at)
            if args.precision is not None:
                iv = f.evaluate_interval(tau, args.precision)
                print(f"[{format_scalar(iv.lo)}, {format_scalar(iv.hi)}]")
            else:
                print(format_scalar(f.evaluate_at(tau)))
    except ParseError as e:
        raise CliError(str(e), EXIT_PARSE)
    except PoleError as e:
        raise CliError(str(e), EXIT_PARSE)
    except ValueError as e:
        raise CliError(str(e), EXIT_PARSE)
    return EXIT_OK


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


def _cmd_gen(args) -> int:
    try:
        if args.generator == "goldfarb-sit":
            field = args.field
            eps = _parse_scalar(args.eps, field)
            delta = _parse_scalar(args.delta, field)
            lp = instances.goldfarb_sit(instances.GoldfarbSitSpec(args.d, delta, eps))
        elif args.generator == "long-and-winding":
            lp = instances.long_and_winding(instances.LongWindingSpec(args.r))
        else:
            lp = instances.param_polygon()
    except ParameterError as e:
        raise CliError(str(e), EXIT_PARAMS)
    if args.evaluate is not None:
        tau = parse_rational(args.evaluate)
        lp = _evaluate_lp(lp, tau)
    data = PolytopeData.from_linear_program(lp)
    _write_output(formats.dump_polytope(data), args.output)
    return EXIT_OK


def _evaluate_lp(lp: LinearProgram, tau: Fraction) -> LinearProgram:
    try:
        rows = polyhedral.evaluate_matrix(lp.a_rows, tau)
        rhs = polyhedral.evaluate_vector(lp.b, tau)
        c = polyhedral.evaluate_vector(lp.c, tau)
    except (PoleError, ValueError) as e:
        raise CliError(str(e), EXIT_PARSE)
    return LinearProgram(rows, rhs, c, sense=lp.sense, form=lp.form)


# ---------------------------------------------------------------------------
# lp solve
# ---------------------------------------------------------------------------


def _cmd_lp(args) -> int:
    data = _load_polytope(args.input)
    try:
        lp = data.to_linear_program()
    except (FormatError, ValueError) as e:
        raise CliError(str(e), EXIT_PARSE)
    engine = "dual_steepest" if args.engine == "dual" else "primal_steepest"
    sol = lp_solve(lp, engine=engine)
    print(f"STATUS: {sol.status}")
    if sol.status == "infeasible":
        return EXIT_INFEASIBLE
    if sol.status == "unbounded":
        return EXIT_UNBOUNDED
    label = "MAXIMAL" if lp.sense == "max" else "MINIMAL"
    print(f"{label}_VALUE: ({format_scalar(sol.value)})")
    print(f"{label}_VERTEX: " + format_vector([_one_for(lp)] + list(sol.point)))
    if args.path:
        print(f"PIVOTS: {sol.pivot_count}")
        seen = []
        for _, pt in sol.pivot_path:
            if pt not in seen:
                seen.append(pt)
        print(f"VERTICES_VISITED: {len(seen)}")
    return EXIT_OK


def _one_for(lp: LinearProgram):
    sample = lp.b[0]
    zero = sample - sample
    return zero + 1


# ---------------------------------------------------------------------------
# hull subcommands
# ---------------------------------------------------------------------------


def _cone_of(data: PolytopeData):
    if not data.inequalities:
        raise CliError("file has no inequality rows", EXIT_PARSE)
    return hull.enumerate_rays(data.inequalities)


def _cmd_hull(args) -> int:
    data = _load_polytope(args.input)
    if args.hull_cmd == "vertices":
        cone = _cone_of(data)
        for ray in cone.rays:
            print(format_vector(ray))
        return EXIT_OK
    if args.hull_cmd == "facets":
        cone = _cone_of(data)
        for row in cone.inequalities:
            print(format_vector(row))
        return EXIT_OK
    # volume of the affine polytope behind the homogeneous description
    if data.points is not None:
        pts = [p[1:] for p in data.points]
    else:
        cone = _cone_of(data)
        pts = []
        for ray in cone.rays:
            if ray[0] == 0:
                raise CliError("volume needs a bounded polytope", EXIT_PARSE)
            pts.append([x / ray[0] for x in ray[1:]])
    vol = hull.volume(pts)
    print(f"({format_scalar(vol)})")
    return EXIT_OK


# ---------------------------------------------------------------------------
# cone tau0 and check-type
# ---------------------------------------------------------------------------


def _cmd_cone(args) -> int:
    data = _load_polytope(args.input)
    if _orientation(data.field) is None:
        raise CliError("tau0 needs a Puiseux field instance", EXIT_PARSE)
    cone = _cone_of(data)
    mode = "exact_root" if args.exact else "cauchy_bound"
    res = polyhedral.tau0(data.inequalities, cone.rays, mode=mode)
    print(f"TAU0: {format_scalar(res.threshold)}")
    print(f"MODE: {res.mode}")
    print(f"NEXT_INTEGER: {res.next_integer}")
    print(f"EXACT: {'true' if res.exact else 'false'}")
    return EXIT_OK


def _cmd_check_type(args) -> int:
    data = _load_polytope(args.input)
    if _orientation(data.field) is None:
        raise CliError("check-type needs a Puiseux field instance", EXIT_PARSE)
    tau = parse_rational(args.tau)
    cone_t = _cone_of(data)
    try:
        rows_tau = polyhedral.evaluate_matrix(data.inequalities, tau)
    except (PoleError, ValueError) as e:
        raise CliError(str(e), EXIT_PARSE)
    cone_q = hull.enumerate_rays(rows_tau)
    same_facets = cone_t.facet_rows == cone_q.facet_rows
    try:
        same_incidence = polyhedral.combinatorial_equal(cone_t.incidence, cone_q.incidence)
        shape_ok = True
    except ValueError:
        same_incidence = False
        shape_ok = False
    equal = same_facets and same_incidence
    print(f"PARAMETRIC_VERTICES: {len(cone_t.rays)}")
    print(f"EVALUATED_VERTICES: {len(cone_q.rays)}")
    print(f"SHAPE_MATCH: {'true' if shape_ok else 'false'}")
    print(f"TYPE_EQUAL: {'true' if equal else 'false'}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# trop subcommands
# ---------------------------------------------------------------------------


def _load_tropical(path: str):
    try:
        return formats.load_tropical(_read_input(path))
    except FormatError as e:
        raise CliError(str(e), EXIT_PARSE)


def _cmd_trop(args) -> int:
    if args.trop_cmd == "tdet":
        sys_ = _load_tropical(args.input)
        method = "hungarian" if args.hungarian else "brute"
        val, perms = tropical.tdet(sys_.combined(), method=method)
        print(f"TDET: {tropical.format_trop(val)}")
        for p in perms:
            print("PERM: " + " ".join(str(i) for i in p))
        return EXIT_OK
    if args.trop_cmd == "generic":
        sys_ = _load_tropical(args.input)
        report = tropical.is_sign_generic(sys_)
        print(f"GENERIC: {report.status}")
        if report.status == "violation":
            print(f"ROWS: {list(report.rows)}")
            print(f"COLS: {list(report.cols)}")
        return EXIT_OK if report.is_generic else EXIT_NOT_GENERIC
    if args.trop_cmd == "dual-hull":
        sys_ = _load_tropical(args.input)
        try:
            gens = tropical.trop_dual_hull(sys_, force=args.force)
        except tropical.GenericityError as e:
            print(str(e), file=sys.stderr)
            return EXIT_NOT_GENERIC
        for col in gens.columns:
            print(" ".join(f"({tropical.format_trop(x)})" for x in col))
        return EXIT_OK
    # member
    try:
        gens = formats.load_generators(_read_input(args.input))
    except FormatError as e:
        raise CliError(str(e), EXIT_PARSE)
    try:
        point = [tropical.parse_trop(tok) for tok in args.point.replace(",", " ").split()]
    except ValueError as e:
        raise CliError(f"bad point: {e}", EXIT_PARSE)
    ok = tropical.trop_member(point, gens)
    print(f"MEMBER: {'true' if ok else 'false'}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------


def _cmd_bench(args) -> int:
    print("instance,field,d,m,n,pivots,seconds")
    if args.bench_cmd == "goldfarb-sit":
        field = args.field
        for d in range(args.dmin, args.dmax + 1):
            eps = _parse_scalar(args.eps, field)
            delta = _parse_scalar(args.delta, field)
            try:
                lp = instances.goldfarb_sit(instances.GoldfarbSitSpec(d, delta, eps))
            except ParameterError as e:
                raise CliError(str(e), EXIT_PARAMS)
            t0 = time.perf_counter()
            sol = lp_solve(lp)
            elapsed = time.perf_counter() - t0
            seen = []
            for _, pt in sol.pivot_path:
                if pt not in seen:
                    seen.append(pt)
            print(f"goldfarb-sit-{d},{field},{d},{len(lp.a_rows)},{len(seen)},"
                  f"{sol.pivot_count},{elapsed:.3f}")
        return EXIT_OK
    for r in range(args.rmin, args.rmax + 1):
        lp = instances.long_and_winding(instances.LongWindingSpec(r))
        field = args.field
        if field == "rational":
            tau = Fraction(2) ** (2 ** r)
            lp = _evaluate_lp(lp, tau)
        data = PolytopeData.from_linear_program(lp)
        t0 = time.perf_counter()
        cone = hull.enumerate_rays(data.inequalities)
        elapsed = time.perf_counter() - t0
        d = 2 * r + 2
        print(f"long-and-winding-{r},{field},{d},{len(lp.a_rows)},{len(cone.rays)},"
              f",{elapsed:.3f}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="puiseuxlp",
                                 description="Exact LP and convex hulls over Puiseux fractions")
    sub = ap.add_subparsers(dest="command", required=True)

    pf = sub.add_parser("pf", help="scalar utilities")
    pf_sub = pf.add_subparsers(dest="pf_cmd", required=True)
    for name in ("normalize", "val"):
        p = pf_sub.add_parser(name)
        p.add_argument("value")
        p.add_argument("--field", default="puiseux-tlarge")
    p = pf_sub.add_parser("cmp")
    p.add_argument("value")
    p.add_argument("other")
    p.add_argument("--field", default="puiseux-tlarge")
    p = pf_sub.add_parser("eval")
    p.add_argument("value")
    p.add_argument("--at", required=True, help="evaluation point for t")
    p.add_argument("--precision", type=int, default=None,
                   help="bits: return an enclosing interval instead of an exact value")
    p.add_argument("--field", default="puiseux-tlarge")

    gen = sub.add_parser("gen", help="emit instance files")
    gen_sub = gen.add_subparsers(dest="generator", required=True)
    g = gen_sub.add_parser("goldfarb-sit")
    g.add_argument("-d", type=int, required=True)
    g.add_argument("--eps", required=True)
    g.add_argument("--delta", required=True)
    g.add_argument("--field", default="rational", choices=formats.FIELD_TAGS)
    g = gen_sub.add_parser("long-and-winding")
    g.add_argument("-r", type=int, required=True)
    g = gen_sub.add_parser("param-polygon")
    for g in gen_sub.choices.values():
        g.add_argument("--evaluate", default=None, metavar="TAU")
        g.add_argument("-o", "--output", default=None)

    lp = sub.add_parser("lp", help="linear programming")
    lp_sub = lp.add_subparsers(dest="lp_cmd", required=True)
    p = lp_sub.add_parser("solve")
    p.add_argument("input", help="polytope file or - for stdin")
    p.add_argument("--engine", choices=("primal", "dual"), default="primal")
    p.add_argument("--path", action="store_true")

    hl = sub.add_parser("hull", help="convex hull computations")
    hull_sub = hl.add_subparsers(dest="hull_cmd", required=True)
    for name in ("vertices", "facets", "volume"):
        p = hull_sub.add_parser(name)
        p.add_argument("input")

    cone = sub.add_parser("cone", help="cone diagnostics")
    cone_sub = cone.add_subparsers(dest="cone_cmd", required=True)
    p = cone_sub.add_parser("tau0")
    p.add_argument("input")
    p.add_argument("--exact", action="store_true")

    ct = sub.add_parser("check-type", help="compare parametric and evaluated types")
    ct.add_argument("input")
    ct.add_argument("--tau", required=True)

    tr = sub.add_parser("trop", help="tropical computations")
    tr_sub = tr.add_subparsers(dest="trop_cmd", required=True)
    p = tr_sub.add_parser("tdet")
    p.add_argument("input")
    p.add_argument("--hungarian", action="store_true")
    p = tr_sub.add_parser("generic")
    p.add_argument("input")
    p = tr_sub.add_parser("dual-hull")
    p.add_argument("input")
    p.add_argument("--force", action="store_true")
    p = tr_sub.add_parser("member")
    p.add_argument("input")
    p.add_argument("--point", required=True)

    bench = sub.add_parser("bench", help="timing harness (CSV on stdout)")
    bench_sub = bench.add_subparsers(dest="bench_cmd", required=True)
    b = bench_sub.add_parser("goldfarb-sit")
    b.add_argument("--dmin", type=int, default=3)
    b.add_argument("--dmax", type=int, default=10)
    b.add_argument("--eps", default="1/6")
    b.add_argument("--delta", default="1/2")
    b.add_argument("--field", default="rational", choices=formats.FIELD_TAGS)
    b = bench_sub.add_parser("law")
    b.add_argument("--rmin", type=int, default=1)
    b.add_argument("--rmax", type=int, default=3)
    b.add_argument("--field", default="rational",
                   choices=("rational", "puiseux-tlarge"))
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "pf":
            return _cmd_pf(args)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "lp":
            return _cmd_lp(args)
        if args.command == "hull":
            return _cmd_hull(args)
        if args.command == "cone":
            return _cmd_cone(args)
        if args.command == "check-type":
            return _cmd_check_type(args)
        if args.command == "trop":
            return _cmd_trop(args)
        if args.command == "bench":
            return _cmd_bench(args)
        raise CliError(f"unknown command {args.command!r}", EXIT_PARSE)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (ParseError, FormatError, OrientationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
