"""Batch command-line front end.

Every subcommand emits either human-readable text, canonical JSON, or CSV.
Integer payloads that third-party JSON consumers might round (counts,
Euler numbers, series coefficients) are serialized as decimal strings;
rational-form numerators stay plain integers.

Exit codes: 0 success (and, for ``verify``, all identities hold);
1 rationality-guard or identity failure; 2 parameter validation failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import engine, motives, quot, surfaces
from .partitions import count_coloured_flags, count_nested_flags
from .series import RationalityError, lpoly_eval_at_one


def _emit(args, payload, text_lines, csv_rows=None):
    if args.format == "json":
        out = json.dumps(payload, sort_keys=True, indent=2)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in csv_rows if csv_rows is not None else []:
            writer.writerow(row)
        out = buf.getvalue().rstrip("\n")
    else:
        out = "\n".join(text_lines)
    print(out)


def _parse_int_list(text):
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")


def _rational_payload(rf, series, prefix):
    return {
        "numerator": list(rf.numerator),
        "denominator": [[j, e] for j, e in sorted(rf.denominator.items())],
        "series_prefix": [str(c) for c in series.dense()[: prefix + 1]],
    }


def _cmd_fz(args):
    prefix = args.prefix
    if args.k is not None:
        k = args.k
        if any(x < 0 for x in k):
            print("gap entries must be nonnegative", file=sys.stderr)
            return 2
        rf = engine.rational_form_k(k, guard=args.guard, jobs=args.jobs)
        series = engine.fz_k(k, prefix, jobs=args.jobs)
        payload = {"command": "fz", "k": list(k)}
    else:
        if args.D is None or args.D < 1:
            print("need --D >= 1 or --k", file=sys.stderr)
            return 2
        rf = engine.rational_form_D(args.D, guard=args.guard, jobs=args.jobs)
        series = engine.fz_D(args.D, prefix, jobs=args.jobs)
        payload = {"command": "fz", "D": args.D}
    payload.update(_rational_payload(rf, series, prefix))
    text = [
        f"ratio to the partition series: {rf!r}",
        "series prefix: " + ", ".join(payload["series_prefix"]),
    ]
    rows = [["degree", "numerator"]] + [
        [i, c] for i, c in enumerate(payload["numerator"])
    ]
    _emit(args, payload, text, rows)
    return 0


def _cmd_fq(args):
    if args.r < 1 or args.D < 1:
        print("need --r >= 1 and --D >= 1", file=sys.stderr)
        return 2
    rf = quot.rational_form_rD(args.r, args.D, guard=args.guard)
    series = quot.fq_rD(args.r, args.D, args.prefix)
    payload = {"command": "fq", "r": args.r, "D": args.D}
    payload.update(_rational_payload(rf, series, args.prefix))
    text = [
        f"ratio to the rank-{args.r} partition series power: {rf!r}",
        "series prefix: " + ", ".join(payload["series_prefix"]),
    ]
    rows = [["degree", "numerator"]] + [
        [i, c] for i, c in enumerate(payload["numerator"])
    ]
    _emit(args, payload, text, rows)
    return 0


def _cmd_oracle(args):
    spec = args.nesting
    if any(a > b for a, b in zip(spec, spec[1:])):
        print("nesting sizes must be weakly increasing", file=sys.stderr)
        return 2
    if args.rank == 1:
        count = count_nested_flags(spec)
    else:
        count = count_coloured_flags(args.rank, spec)
    payload = {
        "command": "oracle",
        "nesting": list(spec),
        "rank": args.rank,
        "count": str(count),
    }
    _emit(args, payload, [str(count)], [["count"], [count]])
    return 0


def _cmd_motive(args):
    chosen = [x is not None for x in (args.nesting, args.strata, args.series)]
    if sum(chosen) != 1:
        print("choose exactly one of --nesting / --strata / --series", file=sys.stderr)
        return 2
    if args.nesting is not None:
        spec = tuple(args.nesting)
        if len(spec) != 2 or spec[0] not in (2, 3):
            print("--nesting takes 2,n or 3,n", file=sys.stderr)
            return 2
        i, n = spec
        if n < i:
            print("need n >= smallest size", file=sys.stderr)
            return 2
        poly = motives.motive_2n(n) if i == 2 else motives.motive_3n(n)
        payload = {
            "command": "motive",
            "nesting": [i, n],
            "motive": poly.to_json_list(),
            "euler": str(lpoly_eval_at_one(poly)),
        }
        text = [repr(poly), f"euler characteristic: {payload['euler']}"]
        rows = [["power", "coefficient"]] + [
            [k, c] for k, c in enumerate(poly.coefficients)
        ]
        _emit(args, payload, text, rows)
        return 0
    if args.strata is not None:
        n = args.strata
        if n < 2:
            print("--strata needs n >= 2", file=sys.stderr)
            return 2
        strata = motives.motive_strata(n)
        payload = {
            "command": "motive",
            "strata": n,
            "curvilinear": strata.curvilinear.to_json_list(),
            "h1": strata.h1.to_json_list(),
            "h2": strata.h2.to_json_list(),
            "h2_split": [p.to_json_list() for p in strata.h2_split],
            "h3": strata.h3.to_json_list(),
            "total": strata.total().to_json_list(),
        }
        text = [
            f"curvilinear: {strata.curvilinear!r}",
            f"h1: {strata.h1!r}",
            f"h2: {strata.h2!r}",
            f"h3: {strata.h3!r}",
            f"total: {strata.total()!r}",
        ]
        rows = [["stratum", "coefficients"]] + [
            [name, " ".join(map(str, p.coefficients))]
            for name, p in (
                ("curvilinear", strata.curvilinear),
                ("h1", strata.h1),
                ("h2", strata.h2),
                ("h3", strata.h3),
            )
        ]
        _emit(args, payload, text, rows)
        return 0
    if args.series not in (2, 3):
        print("--series takes 2 or 3", file=sys.stderr)
        return 2
    builder = motives.series_2bullet if args.series == 2 else motives.series_3bullet
    coeffs = builder(args.order)
    payload = {
        "command": "motive",
        "series": args.series,
        "order": args.order,
        "coefficients": [p.to_json_list() for p in coeffs],
    }
    text = [f"t^{n}: {p!r}" for n, p in enumerate(coeffs)]
    rows = [["t_power", "coefficients"]] + [
        [n, " ".join(map(str, p.coefficients))] for n, p in enumerate(coeffs)
    ]
    _emit(args, payload, text, rows)
    return 0


def _cmd_globalize(args):
    if args.n1 > args.n2 or args.rank < 1 or args.chi < 0:
        print("need n1 <= n2, rank >= 1, chi >= 0", file=sys.stderr)
        return 2
    table = surfaces.punctual_nested_table(args.rank, args.n1, args.n2)
    surface = _surface_from_args(args)
    powered = surfaces.globalize(table, surface)
    if args.coeff is not None:
        if len(args.coeff) != 2:
            print("--coeff takes a,b", file=sys.stderr)
            return 2
        a, b = args.coeff
    else:
        a, b = args.n1, args.n2
    requested = powered[(a, b)]
    rows = [["n1", "n2", "count"]]
    entries = []
    for (x, y), c in sorted(powered.coefficients.items()):
        entries.append([x, y, str(c)])
        rows.append([x, y, c])
    payload = {
        "command": "globalize",
        "rank": args.rank,
        "n1": args.n1,
        "n2": args.n2,
        "chi": args.chi,
        "requested": [a, b],
        "coefficient": str(requested),
        "table": entries,
    }
    text = [f"coefficient at ({a}, {b}): {requested}"]
    _emit(args, payload, text, rows)
    return 0


def _surface_from_args(args):
    return surfaces.SurfaceProfile(name=f"chi={args.chi}", euler_characteristic=args.chi)


def _identity_suite(quick):
    nq, ns, nv = (8, 3, 3) if quick else (12, 4, 4)
    checks = [
        ("geometric-series identity for the unnested rank table",
         lambda: quot.verify_q_identity(nq, ns)),
        ("functional equation for the one-gap rank table",
         lambda: quot.verify_fq_functional(nq, ns, nv)),
        ("exponential-operator expression for the one-gap rank table",
         lambda: quot.verify_exponential_identity(nq, ns, nv)),
        ("second-order operator identity for fixed small size 2",
         lambda: quot.verify_fq2_example(nq, ns)),
    ]
    dmax, nmax = (3, 8) if quick else (4, 10)
    def oracle_one_gap():
        for D in range(dmax + 1):
            series = engine.fz_D(D, nmax)
            for n in range(nmax + 1):
                if series[(n,)] != count_nested_flags((n, n + D)):
                    return False
        return True
    checks.append(("one-gap series equals the flag oracle", oracle_one_gap))
    def oracle_coloured():
        for r in (2, 3):
            for D in range(3):
                series = quot.fq_rD(r, D, 6)
                for n in range(7):
                    if series[(n,)] != count_coloured_flags(r, (n, n + D)):
                        return False
        return True
    checks.append(("rank series equals the colouring oracle", oracle_coloured))
    def strata_close():
        top = 12 if quick else 16
        return all(
            motives.motive_strata(n).total() == motives.gottsche_punctual(n)[n]
            for n in range(4, top + 1)
        )
    checks.append(("stratification closes on the punctual motive", strata_close))
    return checks


def _cmd_verify(args):
    results = []
    all_ok = True
    for name, check in _identity_suite(args.quick):
        try:
            ok = bool(check())
        except RationalityError as exc:
            ok = False
            name = f"{name} ({exc})"
        results.append({"name": name, "ok": ok})
        all_ok = all_ok and ok
    payload = {"command": "verify", "results": results, "all_ok": all_ok}
    text = [
        ("PASS " if r["ok"] else "FAIL ") + r["name"] for r in results
    ] + ["all identities hold" if all_ok else "identity failure"]
    rows = [["check", "ok"]] + [[r["name"], r["ok"]] for r in results]
    _emit(args, payload, text, rows)
    return 0 if all_ok else 1


def _cmd_tables(args):
    import pathlib

    outdir = pathlib.Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    one_gap = {}
    for D in range(1, args.max_gap + 1):
        rf = engine.rational_form_D(D, jobs=args.jobs)
        one_gap[str(D)] = rf.to_json_dict()
    path = outdir / "one_gap_rational_forms.json"
    path.write_text(json.dumps(one_gap, sort_keys=True, indent=2) + "\n")
    written.append(str(path))

    multi = {}
    for k in (
        (1, 1), (1, 1, 1), (1, 1, 1, 1), (1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1),
        (1, 2), (2, 1), (2, 2),
    ):
        rf = engine.rational_form_k(k, jobs=args.jobs)
        multi[",".join(map(str, k))] = rf.to_json_dict()
    path = outdir / "multi_gap_rational_forms.json"
    path.write_text(json.dumps(multi, sort_keys=True, indent=2) + "\n")
    written.append(str(path))

    payload = {"command": "tables", "written": written}
    _emit(args, payload, written, [["file"]] + [[w] for w in written])
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="flagseries",
        description=(
            "exact Euler-characteristic generating series of punctual nested "
            "Hilbert and Quot schemes of points on surfaces"
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, jobs=True):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        if jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="parallel workers; results are identical for any value")

    p = sub.add_parser("fz", help="one-gap or multi-gap flag series and rational form")
    p.add_argument("--D", type=int, default=None, help="single gap size")
    p.add_argument("--k", type=_parse_int_list, default=None,
                   help="comma-separated gap vector, e.g. 1,2")
    p.add_argument("--guard", type=int, default=None)
    p.add_argument("--prefix", type=int, default=12,
                   help="length of the emitted series prefix")
    common(p)
    p.set_defaults(func=_cmd_fz)

    p = sub.add_parser("fq", help="higher-rank one-gap series and rational form")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--guard", type=int, default=None)
    p.add_argument("--prefix", type=int, default=12)
    common(p)
    p.set_defaults(func=_cmd_fq)

    p = sub.add_parser("oracle", help="brute-force nested/coloured flag counts")
    p.add_argument("--nesting", type=_parse_int_list, required=True)
    p.add_argument("--rank", type=int, default=1)
    common(p, jobs=False)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("motive", help="motivic classes for small nestings")
    p.add_argument("--nesting", type=_parse_int_list, default=None)
    p.add_argument("--strata", type=int, default=None)
    p.add_argument("--series", type=int, default=None)
    p.add_argument("--order", type=int, default=12)
    common(p, jobs=False)
    p.set_defaults(func=_cmd_motive)

    p = sub.add_parser("globalize", help="global nested counts for a surface")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--coeff", type=_parse_int_list, default=None)
    common(p, jobs=False)
    p.set_defaults(func=_cmd_globalize)

    p = sub.add_parser("verify", help="run the full identity suite")
    p.add_argument("--quick", action="store_true")
    common(p, jobs=False)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("tables", help="regenerate the published tables to files")
    p.add_argument("--out", required=True)
    p.add_argument("--max-gap", type=int, default=10)
    common(p)
    p.set_defaults(func=_cmd_tables)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RationalityError as exc:
        print(f"rationality guard failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, AssertionError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
