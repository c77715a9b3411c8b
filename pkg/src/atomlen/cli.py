"""Command-line interface: enumeration, decomposition, bijections, checks.

Exit status: 0 on success or verified identity, 1 on a verification
mismatch, 2 on usage errors.  Output is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bijections, charges, grassmannian, littlewood, qseries
from .affine_data import FAMILIES, AffineType, parse_type, registry
from .partitions import Partition


def _parse_partition(text):
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise SystemExit(2)
    try:
        return Partition(parts)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else int(obj)
    if isinstance(obj, Partition):
        return obj.to_json()
    if isinstance(obj, tuple):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, list):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    return obj


def _emit(payload, as_json=True):
    print(json.dumps(_jsonable(payload), sort_keys=True))


def cmd_littlewood(args):
    lam = _parse_partition(args.partition)
    data = littlewood.decompose(lam, args.n)
    _emit(data.to_json())
    return 0


def cmd_charge(args):
    lam = _parse_partition(args.partition)
    try:
        m = charges.phi(lam, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    beta = charges.beta_from_residues(lam, args.n)
    _emit({
        "n": args.n,
        "partition": lam,
        "m": list(m.m),
        "beta": list(beta),
        "a": list(charges.a_from_beta(beta)),
        "weight_formula": charges.weight_from_charge(m),
        "weight_direct": lam.weight(),
    })
    return 0


def cmd_types(args):
    rows = []
    for fam in FAMILIES:
        rank = {"G21": 2, "D43": 2}.get(fam, 3 if fam != "D1" else 4)
        data = registry(AffineType(fam, rank))
        rows.append(data.to_json())
    if args.emit == "json":
        for row in rows:
            _emit(row)
    else:
        hdr = f"{'type':8s} {'marks':16s} {'comarks':16s} {'eta':>4s} {'eta*':>5s} {'g':>3s} {'finite':7s} {'model'}"
        print(hdr)
        for row in rows:
            print(f"{row['type']:8s} {str(row['marks']):16s} {str(row['comarks']):16s} "
                  f"{row['eta']:4d} {row['eta_dual']:>5s} {row['eta_tilde']:3d} "
                  f"{row['finite_type']:7s} {row['core_model']}")
    return 0


def _type_from_args(args):
    try:
        return parse_type(args.type, args.rank)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)


def cmd_orbit(args):
    typ = _type_from_args(args)
    for el in grassmannian.orbit(typ, args.lmax):
        gel = grassmannian.element_of_core(typ, el.core)
        record = {
            "core": el.core,
            "beta": gel.beta,
            "nu": gel.nu,
            "u": list(gel.u),
            "L": grassmannian.atomic_length(typ, el.core),
            "Ldual": gel.dual_length(),
            "sign": gel.signature,
        }
        if args.emit == "json":
            _emit(record)
        else:
            print(f"{','.join(map(str, el.core.parts)) or '-':24s} "
                  f"L={record['L']:3d} Ldual={record['Ldual']} sign={record['sign']:+d}")
    return 0


def cmd_bijection(args):
    typ = _type_from_args(args)
    core = _parse_partition(args.core)
    try:
        td = bijections.core_to_distinct(typ, core)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    mu, g = bijections.coding_partner(typ, grassmannian.CoreElement(typ, core))
    coding = bijections.v_coding(mu, g, registry(typ).roots.rank)
    _emit({
        "type": typ.label,
        "core": core,
        "lambda_bar": td.bar,
        "companion": td.companion,
        "atomic_length": grassmannian.atomic_length(typ, core),
        "signature": bijections.signature_hooks(typ, grassmannian.CoreElement(typ, core)),
        "v_coding": list(coding.v),
        "r": list(bijections.correspondence_weight(typ, grassmannian.CoreElement(typ, core))),
    })
    return 0


def cmd_verify(args):
    if args.identity == "no":
        report = qseries.nekrasov_okounkov_check(args.order)
        out = {"identity": "nekrasov-okounkov", "order": args.order, "equal": report["equal"],
               "per_degree": [d for d in report["per_degree"] if not d["equal"]]}
    elif args.identity == "hande":
        report = qseries.hande_check(args.qorder, args.uorder)
        out = {"identity": "hook-product-deformation", "q_order": args.qorder,
               "u_order": args.uorder, "equal": report["equal"],
               "mismatch_degrees": report["mismatch_degrees"]}
    elif args.identity == "delta":
        typ = _type_from_args(args)
        report = qseries.delta_check(typ, args.order)
        out = {"identity": "denominator-expansion", "type": typ.label,
               "order": args.order, "equal": report["equal"],
               "first_mismatch": report["first_mismatch"]}
    elif args.identity == "macdonald":
        typ = _type_from_args(args)
        report = qseries.macdonald_specialization_check(typ, args.order)
        out = {"identity": "macdonald-specialization", "type": typ.label,
               "order": args.order, "power": report["power"], "equal": report["equal"],
               "mismatch_degrees": report["mismatch_degrees"]}
    else:
        raise SystemExit(2)
    _emit(out)
    return 0 if out["equal"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="atomlen",
        description="cores, abaci, affine Grassmannian lengths and the "
                    "associated generating-series identities")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("littlewood", help="core and quotient of a partition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_littlewood)

    p = sub.add_parser("charge", help="multicharge data of an n-core")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_charge)

    p = sub.add_parser("types", help="dump the affine family registry")
    p.add_argument("--list", action="store_true")
    p.add_argument("--emit", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_types)

    p = sub.add_parser("orbit", help="enumerate a model orbit by atomic length")
    p.add_argument("--type", required=True, choices=FAMILIES)
    p.add_argument("--rank", type=int)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--emit", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("bijection", help="distinct-partition data of a model core")
    p.add_argument("--type", required=True, choices=FAMILIES)
    p.add_argument("--rank", type=int)
    p.add_argument("--core", required=True)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="run one of the series identity checks")
    vsub = p.add_subparsers(dest="identity", required=True)
    v = vsub.add_parser("no")
    v.add_argument("--order", type=int, default=10)
    v.set_defaults(func=cmd_verify)
    v = vsub.add_parser("hande")
    v.add_argument("--qorder", type=int, default=4)
    v.add_argument("--uorder", type=int, default=12)
    v.set_defaults(func=cmd_verify)
    v = vsub.add_parser("delta")
    v.add_argument("--type", required=True, choices=FAMILIES)
    v.add_argument("--rank", type=int)
    v.add_argument("--order", type=int, default=5)
    v.set_defaults(func=cmd_verify)
    v = vsub.add_parser("macdonald")
    v.add_argument("--type", required=True, choices=FAMILIES)
    v.add_argument("--rank", type=int, default=2)
    v.add_argument("--order", type=int, default=30)
    v.set_defaults(func=cmd_verify)
    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
