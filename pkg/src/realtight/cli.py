"""Command-line front end for the census, invariants, and proof replays.

Every numeric answer is exact (rationals print as num/den).  Output is
markdown for tables and JSON for single queries by default; --format
switches between json, csv, and markdown where it makes sense.  Exit
codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import dividing, invariants, lens, solid_torus, surgery
from .farey import farey_distance, farey_distance_bfs
from .slopes import NegCF, Slope, neg_cf_eval, neg_cf_expand


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (
        x.numerator,
        x.denominator,
    )


def _parse_range(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    value = int(text)
    return value, value


def _emit(payload, args, default="json"):
    fmt = getattr(args, "format", None) or default
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        if isinstance(payload, dict):
            print(" ".join("%s=%s" % (k, payload[k]) for k in sorted(payload)))
        else:
            print(payload)


def _cmd_farey_dist(args):
    a, b = Slope.parse(args.a), Slope.parse(args.b)
    steps = farey_distance(a, b)
    if args.bfs_bound:
        oracle = farey_distance_bfs(a, b, args.bfs_bound)
        _emit({"a": str(a), "b": str(b), "steps": steps, "bfs": oracle}, args)
    else:
        _emit({"a": str(a), "b": str(b), "steps": steps}, args)
    return 0


def _cmd_cf_expand(args):
    cf = neg_cf_expand(Slope.parse(args.slope))
    _emit({"slope": args.slope, "coefficients": list(cf.coeffs)}, args)
    return 0


def _cmd_cf_eval(args):
    value = neg_cf_eval([int(c) for c in args.coefficients])
    _emit({"coefficients": [int(c) for c in args.coefficients], "value": str(value)}, args)
    return 0


def _cmd_count_solid_torus(args):
    spec = solid_torus.SolidTorusSpec(
        solid_torus.real_structure(args.kind),
        Slope.parse(args.slope),
        args.gamma,
    )
    result = solid_torus.count_real_tight(spec)
    _emit(
        {"kind": args.kind, "slope": args.slope, "gamma": args.gamma, **result.to_json()},
        args,
    )
    return 0


def _cmd_count_slice(args):
    result = solid_torus.count_slices(args.kind, args.slice)
    _emit({"kind": args.kind, "slice": args.slice, **result.to_json()}, args)
    return 0


def _cmd_count_lens(args):
    p, q = args.p, args.q
    payload = {
        "p": p,
        "q": q,
        "honda": lens.honda_count_lens(p, q),
    }
    if args.type:
        if args.type == "A":
            payload["count"] = lens.l_A(p, q).to_json()
        elif args.type == "B":
            payload["count"] = lens.l_B(p, q).to_json()
        elif args.type in ("C", "C'"):
            payload["count"] = lens.l_star(p, q, args.type).to_json()
        else:
            raise ValueError("unknown structure type %r" % (args.type,))
    _emit(payload, args)
    return 0


def _cmd_table(args):
    p_min, p_max = _parse_range(args.p)
    rows = lens.bounds_table(p_min, p_max)
    fmt = args.format or "markdown"
    if fmt == "markdown":
        print(lens.table_markdown(rows))
    elif fmt == "csv":
        print(lens.table_csv(rows))
    else:
        print(lens.table_json(rows))
    return 0


def _cmd_tb(args):
    if args.mode == "cross-check":
        report = invariants.cross_check_eksEn(args.p)
        _emit(report.to_json(), args)
        return 0 if report.passed else 1
    kind = args.type
    if kind == "B":
        value = invariants.tb_type_B(args.p, args.q)
    elif kind == "C":
        value = invariants.tb_type_C(args.p, args.q)
    elif kind == "C'":
        value = invariants.tb_type_Cprime(args.p, args.q)
    elif kind in ("+", "-"):
        value = invariants.tb_singularity_link(args.p, kind)
    else:
        raise ValueError("type must be B, C, C', + or -")
    if args.format == "json":
        _emit({"p": args.p, "q": args.q, "type": kind, "tb": _fmt_fraction(value)}, args)
    else:
        print(_fmt_fraction(value))
    return 0


def _cmd_obstruction(args):
    report = invariants.genus1_obstruction(args.p, args.q)
    _emit(report.to_json(), args)
    return 0


def _cmd_dividing_enumerate(args):
    if args.surface == "disk":
        matchings = dividing.enumerate_disk_matchings(args.m)
        payload = {"m": args.m, "count": len(matchings)}
        if args.list:
            payload["matchings"] = [mt.to_json() for mt in matchings]
    else:
        systems = dividing.enumerate_annulus_systems(args.n_in, args.n_out)
        payload = {"n_in": args.n_in, "n_out": args.n_out, "count": len(systems)}
        if args.list:
            payload["systems"] = [s.to_json() for s in systems]
    _emit(payload, args)
    return 0


def _cmd_dividing_replay(args):
    report = dividing.replay_proof(args.proof)
    if args.format == "json":
        _emit(report.to_json(), args)
    else:
        print("tight survivors: %d" % report.tight_survivors)
        if report.sign_decorated_count:
            print("sign-decorated structures: %d" % report.sign_decorated_count)
    return 0


def _cmd_surgery_identify(args):
    chain, data = surgery.parse_diagram_json(args.diagram)
    space = surgery.lens_from_chain(chain)
    payload = {
        "coefficients": list(chain.coefficients),
        "result": str(space),
        "p": space.p,
        "q": space.q,
    }
    if not space.is_sphere:
        payload["honda"] = lens.honda_count_lens(space.p, space.q)
    _emit(payload, args)
    return 0


def _cmd_surgery_validate(args):
    datum = surgery.LegendrianUnknotDatum(args.tb, args.contact, args.equivariance)
    verdict = surgery.validate_equivariance(datum)
    payload = {
        "tb": args.tb,
        "contact_coeff": args.contact,
        "smooth": surgery.smooth_coefficient(datum),
        **verdict.to_json(),
    }
    _emit(payload, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realtight",
        description="Census of real tight contact structures on solid tori "
        "and lens spaces (exact arithmetic).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv", "markdown"), default=None)

    farey_p = sub.add_parser("farey", help="Farey tessellation queries")
    farey_sub = farey_p.add_subparsers(dest="subcommand", required=True)
    dist = farey_sub.add_parser("dist", help="directional distance between slopes")
    dist.add_argument("--a", required=True)
    dist.add_argument("--b", required=True)
    dist.add_argument("--bfs-bound", type=int, default=0)
    add_format(dist)
    dist.set_defaults(func=_cmd_farey_dist)

    cf_p = sub.add_parser("cf", help="negative continued fractions")
    cf_sub = cf_p.add_subparsers(dest="subcommand", required=True)
    expand = cf_sub.add_parser("expand")
    expand.add_argument("--slope", required=True)
    add_format(expand)
    expand.set_defaults(func=_cmd_cf_expand)
    evaluate = cf_sub.add_parser("eval")
    evaluate.add_argument("coefficients", nargs="+", type=int)
    add_format(evaluate)
    evaluate.set_defaults(func=_cmd_cf_eval)

    count_p = sub.add_parser("count", help="census counts")
    count_sub = count_p.add_subparsers(dest="subcommand", required=True)
    cst = count_sub.add_parser("solid-torus")
    cst.add_argument("--kind", required=True, choices=solid_torus.SOLID_TORUS_KINDS)
    cst.add_argument("--slope", required=True)
    cst.add_argument("--gamma", type=int, default=2)
    add_format(cst)
    cst.set_defaults(func=_cmd_count_solid_torus)
    csl = count_sub.add_parser("slice")
    csl.add_argument("--kind", required=True, choices=("c1", "c2", "c3"))
    csl.add_argument("--slice", required=True)
    add_format(csl)
    csl.set_defaults(func=_cmd_count_slice)
    cl = count_sub.add_parser("lens")
    cl.add_argument("--p", type=int, required=True)
    cl.add_argument("--q", type=int, required=True)
    cl.add_argument("--type", default=None)
    add_format(cl)
    cl.set_defaults(func=_cmd_count_lens)

    table = sub.add_parser("table", help="bounds table for L(p,1), L(p,p-1)")
    table.add_argument("--p", required=True, help="range a..b or single value")
    add_format(table)
    table.set_defaults(func=_cmd_table)

    tb = sub.add_parser("tb", help="rational Thurston-Bennequin values")
    tb.add_argument("mode", nargs="?", default="value", choices=("value", "cross-check"))
    tb.add_argument("--p", type=int, required=True)
    tb.add_argument("--q", type=int, default=0)
    tb.add_argument("--type", default=None)
    add_format(tb)
    tb.set_defaults(func=_cmd_tb)

    obstruction = sub.add_parser("obstruction", help="genus-1 Heegaard obstruction")
    obstruction.add_argument("--p", type=int, required=True)
    obstruction.add_argument("--q", type=int, required=True)
    add_format(obstruction)
    obstruction.set_defaults(func=_cmd_obstruction)

    div_p = sub.add_parser("dividing", help="dividing-set enumeration and replays")
    div_sub = div_p.add_subparsers(dest="subcommand", required=True)
    enum = div_sub.add_parser("enumerate")
    enum.add_argument("surface", choices=("disk", "annulus"))
    enum.add_argument("--m", type=int, default=0)
    enum.add_argument("--n-in", type=int, default=0)
    enum.add_argument("--n-out", type=int, default=0)
    enum.add_argument("--list", action="store_true")
    add_format(enum)
    enum.set_defaults(func=_cmd_dividing_enumerate)
    replay = div_sub.add_parser("replay")
    replay.add_argument(
        "proof", choices=(dividing.NOBASIC, dividing.VARDOUBLE, dividing.C2_SLICE)
    )
    add_format(replay)
    replay.set_defaults(func=_cmd_dividing_replay)

    surg = sub.add_parser("surgery", help="chain diagrams")
    surg_sub = surg.add_subparsers(dest="subcommand", required=True)
    ident = surg_sub.add_parser("identify")
    ident.add_argument("--diagram", required=True, help="JSON framings or components")
    add_format(ident)
    ident.set_defaults(func=_cmd_surgery_identify)
    val = surg_sub.add_parser("validate")
    val.add_argument("--tb", type=int, required=True)
    val.add_argument("--contact", type=int, required=True, choices=(1, -1))
    val.add_argument("--equivariance", default=surgery.NOT_EQUIVARIANT)
    add_format(val)
    val.set_defaults(func=_cmd_surgery_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
