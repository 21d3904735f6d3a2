"""Command line front end.

Every subcommand parses its arguments, calls exactly one library
operation and prints one result document.  Exit codes: 0 success,
1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .classification import (
    ELLIPTIC_NOTE,
    classify_k3_rank2,
    determinant_question_check,
    elliptic_section_lattice,
    enumerate_k3_rank2,
    ruled_lattice,
    third_negative_curve_check,
)
from .engine import (
    InvariantBreach,
    PreconditionError,
    d1_scan,
    divisibility_criterion,
    fiber_semidefinite_check,
    oracle_decompose,
    rank2_closed_form,
    single_negative_denominator_bound,
    zariski_decompose,
)
from .io import dumps_json, dumps_table, load_lattice, parse_rational, result_document
from .lattice import DomainError, genus_from_adjunction, hodge_index_check, negativity_bound_check

SHGH_NOTE = "falsifies SHGH if L is a very-general blow-up of the plane"


def _rationals(text: str):
    try:
        return tuple(parse_rational(t) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ints(text: str):
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _named(lat, idx):
    return [lat.curve_names[i] for i in idx]


def _decomposition(lat, res):
    return {
        "P": res.P,
        "N": res.N,
        "support_N": _named(lat, res.support_N),
        "denominator": res.denominator,
        "integral": res.integral,
        "iterations": res.iterations,
        "realizable": res.realizable,
    }


def _scan(report):
    return {
        "max_denominator": report.max_denominator,
        "witness": report.witness,
        "d1_verdict": report.d1_verdict,
        "grid_bound": report.grid_bound,
        "b_observed": report.b_observed,
    }


def _bound_or_none(lat):
    try:
        return single_negative_denominator_bound(lat)
    except PreconditionError:
        return None


def cmd_check_lattice(args):
    lat = load_lattice(args.lattice)
    h = hodge_index_check(lat)
    return {"lattice": lat}, {
        "signature": h.signature,
        "det": h.det,
        "hodge_index": h.passes,
        "realizable": h.passes,
        "negative_curves": _named(lat, lat.negative_curves),
        "b_observed": max((-lat.gram[i][i] for i in lat.negative_curves), default=0),
        "denominator_bound": _bound_or_none(lat),
    }


def cmd_decompose(args):
    lat = load_lattice(args.lattice)
    fn = oracle_decompose if args.oracle else zariski_decompose
    res = fn(lat, args.divisor)
    return {"lattice": lat, "divisor": args.divisor, "oracle": args.oracle}, _decomposition(lat, res)


def cmd_scan(args):
    lat = load_lattice(args.lattice)
    report = d1_scan(lat, args.max, workers=args.workers)
    return {"lattice": lat, "max": args.max}, _scan(report)


def cmd_divisibility(args):
    lat = load_lattice(args.lattice)
    rep = divisibility_criterion(lat)
    entries = [
        {
            "negative_curve": lat.curve_names[e.negative],
            "other_curve": lat.curve_names[e.other],
            "self_intersection": e.self_intersection,
            "intersection": e.intersection,
            "divides": e.divides,
        }
        for e in rep.entries
    ]
    return {"lattice": lat}, {
        "entries": entries,
        "d1_necessary_condition_holds": rep.holds,
        "falsifies_shgh": rep.falsifies_shgh,
        "note": SHGH_NOTE if rep.falsifies_shgh else None,
    }


def cmd_closed_form(args):
    lat = load_lattice(args.lattice)
    res = rank2_closed_form(lat, args.m1, args.m2)
    return {"lattice": lat, "m1": args.m1, "m2": args.m2}, _decomposition(lat, res)


def _k3(form):
    return {
        "a": form.a,
        "b": form.b,
        "gram": form.gram,
        "a_in_family": form.a_in_family,
        "parity_positivity": form.parity_positivity,
        "hodge": form.hodge,
        "divisibility": form.divisibility,
        "valid": form.valid,
        "label": form.label,
    }


def cmd_classify_k3(args):
    return {"a": args.a, "b": args.b}, _k3(classify_k3_rank2(args.a, args.b))


def cmd_enumerate_k3(args):
    forms = enumerate_k3_rank2(args.max_b)
    return {"max_b": args.max_b}, {"count": len(forms), "forms": [_k3(f) for f in forms]}


def cmd_ruled(args):
    lat = ruled_lattice(args.e)
    return {"e": args.e, "max": args.max}, {
        "lattice": lat,
        "scan": _scan(d1_scan(lat, args.max, workers=args.workers)),
        "denominator_bound": single_negative_denominator_bound(lat),
    }


def cmd_elliptic(args):
    lat = elliptic_section_lattice(args.chi)
    return {"chi": args.chi, "max": args.max}, {
        "lattice": lat,
        "section_square": lat.gram[0][0],
        "scan": _scan(d1_scan(lat, args.max, workers=args.workers)),
        "denominator_bound": single_negative_denominator_bound(lat),
        "note": ELLIPTIC_NOTE,
    }


def cmd_genus(args):
    g = genus_from_adjunction(args.c2, args.kc)
    return {"c2": args.c2, "kc": args.kc}, {
        "genus": g,
        "negativity_bound": negativity_bound_check(args.c2, g),
    }


def cmd_fiber_check(args):
    lat = load_lattice(args.lattice)
    v = fiber_semidefinite_check(lat, args.mult)
    return {"lattice": lat, "mult": args.mult}, v


def cmd_third_curve(args):
    lat = load_lattice(args.lattice)
    v = third_negative_curve_check(lat, args.v3)
    return {"lattice": lat, "v3": args.v3}, {
        "kind": v.kind,
        "message": v.message,
        "square": v.square,
        "pairings": v.pairings,
        "violated": [{"curve": lat.curve_names[i], "pairing": d} for i, d in v.violated],
    }


def cmd_det_check(args):
    lat = load_lattice(args.lattice)
    det, equal = determinant_question_check(lat, args.subset)
    return {"lattice": lat, "subset": args.subset}, {
        "det": det,
        "expected": (-1) ** len(set(args.subset)),
        "equals_sign_power": equal,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zariski", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("json", "table"), default="json")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help, lattice=True):
        p = sub.add_parser(name, help=help, parents=[common])
        if lattice:
            p.add_argument("lattice", help="lattice JSON file")
        p.set_defaults(func=fn)
        return p

    add("check-lattice", cmd_check_lattice, "signature and Hodge index check")
    p = add("decompose", cmd_decompose, "Zariski decomposition of an effective divisor")
    p.add_argument("--divisor", type=_rationals, required=True, help="p1,p2,... (integers or p/q)")
    p.add_argument("--oracle", action="store_true", help="use the brute-force subset oracle")
    p = add("scan", cmd_scan, "max denominator over the grid [0, M]^rank")
    p.add_argument("--max", type=int, default=20)
    p.add_argument("--workers", type=int, default=1)
    add("divisibility", cmd_divisibility, "C^2 | C.D criterion for every negative curve")
    p = add("closed-form", cmd_closed_form, "rank-2 closed-form decomposition of m1*C1 + m2*C2")
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    p = add("classify-k3", cmd_classify_k3, "verdicts for the K3 form [[a,b],[b,-2]]", lattice=False)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p = add("enumerate-k3", cmd_enumerate_k3, "all valid rank-2 K3 forms with 0 < b <= B", lattice=False)
    p.add_argument("--max-b", type=int, required=True)
    p = add("ruled", cmd_ruled, "ruled surface lattice with invariant e", lattice=False)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--max", type=int, default=20)
    p.add_argument("--workers", type=int, default=1)
    p = add("elliptic", cmd_elliptic, "elliptic fibration with a section, C^2 = -chi", lattice=False)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--max", type=int, default=20)
    p.add_argument("--workers", type=int, default=1)
    p = add("genus", cmd_genus, "genus by adjunction and the negativity bound", lattice=False)
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--kc", type=int, required=True)
    p = add("fiber-check", cmd_fiber_check, "Zariski's lemma for a fibre configuration")
    p.add_argument("--mult", type=_ints, required=True)
    p = add("third-curve", cmd_third_curve, "can a class be a third negative curve (rank 2)")
    p.add_argument("--v3", type=_ints, required=True)
    p = add("det-check", cmd_det_check, "det of a negative definite curve set vs (-1)^k")
    p.add_argument("--subset", type=_ints, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inputs, result = args.func(args)
    except (DomainError, InvariantBreach) as exc:
        print(f"zariski {args.command}: {exc}", file=sys.stderr)
        return 1
    doc = result_document(args.command, inputs, result)
    sys.stdout.write(dumps_json(doc) if args.format == "json" else dumps_table(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
