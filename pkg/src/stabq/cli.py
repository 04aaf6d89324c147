"""Command-line interface: `stab <subcommand>`."""

from __future__ import annotations

import argparse
import json
import sys

from . import engine, ff, harness, regions
from .catalog import (
    ExcObject,
    build_matrices,
    dim_vector,
    hom_dims,
    kclass,
    parse_label,
)
from .triples import ExcTriple, MUTATION_OPS, mutate_triple


def _cmd_catalog(args) -> int:
    rows = []
    objs = [ExcObject("M", 0, 0), ExcObject("Mp", 0, 0)]
    for kind in ("a", "b"):
        objs += [ExcObject(kind, m, 0) for m in range(args.lo, args.hi + 1)]
    for o in objs:
        rows.append(
            {
                "label": str(o),
                "dim": list(dim_vector(o)),
                "kclass": list(kclass(o)),
            }
        )
    json.dump(rows, sys.stdout, indent=2)
    print()
    return 0


def _cmd_hom(args) -> int:
    x, y = parse_label(args.x), parse_label(args.y)
    h = hom_dims(x, y)
    if h is None:
        print("hom*(%s, %s) = 0" % (x, y))
    else:
        print("hom^%d(%s, %s) = %d" % (h[0], x, y, h[1]))
    return 0


def _cmd_mutate(args) -> int:
    labels = [s.strip() for s in args.triple.split(",")]
    if len(labels) != 3:
        print("expected three comma-separated labels", file=sys.stderr)
        return 2
    t = ExcTriple(tuple(parse_label(s) for s in labels))
    if args.op not in MUTATION_OPS:
        print("op must be one of %s" % (MUTATION_OPS,), file=sys.stderr)
        return 2
    print(str(mutate_triple(t, args.op)))
    return 0


def _load_point(path: str) -> engine.StabilityPoint:
    with open(path) as f:
        return engine.StabilityPoint.from_json(json.load(f))


def _cmd_classify(args) -> int:
    pt = _load_point(args.sigma)
    out = [list(entry) for entry in regions.classify(pt)]
    json.dump(out, sys.stdout, indent=2)
    print()
    return 0


def _cmd_verify(args) -> int:
    ids = harness.LEMMA_IDS if args.lemma == "all" else (args.lemma,)
    reports = [harness.verify_lemma(lid, args.n, args.seed) for lid in ids]
    payload = [r.to_json() for r in reports]
    if args.out:
        with open(args.out, "w") as f:
            json.dump(payload, f, indent=2)
    else:
        json.dump(payload, sys.stdout, indent=2)
        print()
    return 0 if all(r.ok for r in reports) else 1


def _cmd_slice(args) -> int:
    with open(args.spec) as f:
        spec = json.load(f)
    harness.slice_svg(spec, args.out)
    return 0


def _cmd_oracle(args) -> int:
    pt = _load_point(args.sigma)
    obj = parse_label(args.object)
    rep = build_matrices(obj, q=2)
    zs = tuple(
        engine.charge_of(pt, v)
        for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    )
    ok, destab = ff.semistable_in_heart(rep, zs)
    out = {
        "object": str(obj),
        "dim": list(rep.dims),
        "semistable_in_heart": ok,
    }
    if destab is not None:
        out["destabilizer_dim"] = list(destab)
    json.dump(out, sys.stdout, indent=2)
    print()
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="stab")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("catalog", help="list the exceptional objects")
    p.add_argument("--lo", type=int, default=-4)
    p.add_argument("--hi", type=int, default=5)
    p.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("hom", help="hom dimensions between two objects")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=_cmd_hom)

    p = sub.add_parser("mutate", help="mutate an exceptional triple")
    p.add_argument("triple", help='e.g. "a[0], M, b[1][-1]"')
    p.add_argument("op", help="one of %s" % (MUTATION_OPS,))
    p.set_defaults(fn=_cmd_mutate)

    p = sub.add_parser("classify", help="regions containing a stability point")
    p.add_argument("sigma", help="path to a sigma JSON file")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("verify", help="run a lemma verification suite")
    p.add_argument("lemma", help='lemma id or "all"')
    p.add_argument("-n", type=int, default=harness.DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("slice", help="render a 2D membership slice as SVG")
    p.add_argument("--spec", required=True)
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(fn=_cmd_slice)

    p = sub.add_parser("oracle", help="brute-force heart semistability check")
    p.add_argument("sigma")
    p.add_argument("object")
    p.set_defaults(fn=_cmd_oracle)

    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
