"""Command-line entry point: ``primewalk <command> ...``.

Every table goes to ``--out``; the extension picks the format (``.csv``,
``.json`` or ``.svg``). Without ``--out`` a CSV is written to stdout. Exit codes:
0 success, 2 usage error, 3 domain error, 4 overflow.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import analytics, enumeration, walks
from .primality import classify
from .ring import QuadInt, Ring, norm
from .svg import scatter_svg

EXIT_USAGE, EXIT_DOMAIN, EXIT_OVERFLOW = 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # keep argparse's exit code 2, explicit here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str, n: int | None = None) -> list[int]:
    vals = [int(float(v)) if "e" in v.lower() else int(v) for v in text.split(",")]
    if n is not None and len(vals) != n:
        raise argparse.ArgumentTypeError(f"expected {n} comma-separated integers, got {text!r}")
    return vals


def _floats(text: str) -> list[float]:
    return [float(v) for v in text.split(",")]


def _pair(text: str) -> tuple[int, int]:
    a, b = _ints(text, 2)
    return a, b


def _int(text: str) -> int:
    return _ints(text, 1)[0]


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_cell(v) for v in row) + "\n")
    return buf.getvalue()


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _emit(args: argparse.Namespace, header: Sequence[str], rows: Sequence[Sequence[Any]],
          summary: dict | None = None, points: Sequence[tuple[int, int]] | None = None,
          path: Sequence[tuple[int, int]] | None = None) -> None:
    out = getattr(args, "out", None)
    if out is None:
        sys.stdout.write(_csv_text(header, rows))
        if summary is not None:
            sys.stderr.write(json.dumps(summary, sort_keys=True) + "\n")
        return
    target = Path(out)
    suffix = target.suffix.lower()
    if suffix == ".csv":
        text = _csv_text(header, rows)
    elif suffix == ".json":
        doc: dict[str, Any] = {"columns": list(header), "rows": [list(r) for r in rows]}
        if summary is not None:
            doc["summary"] = summary
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    elif suffix == ".svg":
        if points is None:
            raise ValueError("this command has no point data to plot; use .csv or .json")
        text = scatter_svg(points, asymptotes=getattr(args, "asymptotes", False), path=path)
    else:
        raise ValueError(f"unsupported output extension {suffix!r}")
    target.write_text(text, encoding="utf-8", newline="\n")
    if summary is not None and suffix != ".json":
        sys.stdout.write(json.dumps(summary, sort_keys=True) + "\n")


def _add_region(p: argparse.ArgumentParser, default_xmax: int | None = None) -> None:
    g = p.add_mutually_exclusive_group(required=default_xmax is None)
    g.add_argument("--rect", type=lambda s: _ints(s, 4), metavar="X0,X1,Y0,Y1")
    g.add_argument("--disk", type=float, metavar="RADIUS")
    g.add_argument("--strip", type=_floats, metavar="R,XMAX",
                   help="points with 0<=x<=XMAX within distance R of y=x/sqrt2")
    g.add_argument("--norm-region", type=int, metavar="R2")
    if default_xmax is not None:
        g.add_argument("--xmax", type=_int, help=f"first-quadrant square 0..XMAX (default {default_xmax})")
        p.set_defaults(xmax=None, default_xmax=default_xmax)
    p.add_argument("--ymax", type=_int, help="top edge for --xmax (defaults to XMAX)")


def _region(args: argparse.Namespace) -> enumeration.Region:
    if args.rect is not None:
        return enumeration.Rect(*args.rect)
    if args.disk is not None:
        return enumeration.Disk(args.disk)
    if args.strip is not None:
        if len(args.strip) != 2:
            raise ValueError("--strip takes R,XMAX")
        return enumeration.AsymptoteStrip(args.strip[0], int(args.strip[1]))
    if args.norm_region is not None:
        return enumeration.NormRegion(args.norm_region)
    xmax = args.xmax if getattr(args, "xmax", None) is not None else args.default_xmax
    ymax = args.ymax if args.ymax is not None else xmax
    return enumeration.Rect(0, xmax, 0, ymax)


def cmd_classify(args: argparse.Namespace) -> None:
    ring = Ring.parse(args.ring)
    q = QuadInt(args.a, args.b, ring)
    c = classify(q)
    doc = {"a": q.a, "b": q.b, "ring": ring.label, "norm": norm(q),
           "verdict": c.verdict.value, "kind": c.kind.value if c.kind else None}
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def cmd_enumerate(args: argparse.Namespace) -> None:
    ring = Ring.parse(args.ring)
    pts = enumeration.prime_points(ring, _region(args), threads=args.threads)
    rows = [(int(a), int(b), int(a) * int(a) - ring.d * int(b) * int(b)) for a, b in pts]
    _emit(args, ("a", "b", "norm"), rows, points=[(r[0], r[1]) for r in rows])


def cmd_figure_compare(args: argparse.Namespace) -> None:
    rows = analytics.compare_disk_counts(args.nmin, args.nmax)
    _emit(args, ("n", "count_zi", "count_zsqrt2"), rows)


def _family_kind(k: int) -> str:
    n = abs(k)
    if n == 2:
        return "ramified"
    return "inert" if math.isqrt(n) ** 2 == n else "split"


def cmd_families(args: argparse.Namespace) -> None:
    fams = enumeration.families_with_primes(args.r2)
    r = math.sqrt(args.r2)
    asym = analytics.family_count_asymptotic(r) if r > 1 else None
    summary = {"r2": args.r2, "count": len(fams), "asymptotic": asym,
               "ratio": len(fams) / asym if asym else None}
    _emit(args, ("k", "kind"), [(k, _family_kind(k)) for k in fams], summary=summary)


def cmd_bernays(args: argparse.Namespace) -> None:
    # the asymptotic column uses the constant measured at the largest n
    ests = [analytics.estimate_bernays_constant(n) for n in args.n]
    b_ref = max(ests, key=lambda e: e.n).b_estimate
    rows = []
    for est in ests:
        asym = b_ref * est.n / math.sqrt(math.log(est.n))
        rows.append((est.n, est.count, est.b_estimate, asym, est.count / asym))
    _emit(args, ("n", "representable", "b_estimate", "asymptotic", "ratio"), rows)


def cmd_density(args: argparse.Namespace) -> None:
    ring = Ring.parse(args.ring)
    rows = []
    for r in args.r:
        if ring is Ring.GAUSS:
            count = len(enumeration.prime_points(ring, enumeration.Disk(r), threads=args.threads))
            lattice = analytics.disk_lattice_count(r)
            emp = count / lattice
            asym = analytics.gaussian_density_asymptotic(r)
            rows.append((r, count, lattice, emp, asym, emp / asym))
        else:
            r2 = math.floor(r * r)
            fams = len(enumeration.families_with_primes(r2))
            reps = enumeration.representable_count(r2)
            emp = fams / (2 * reps)
            b = analytics.estimate_bernays_constant(args.bernays_n or r2).b_estimate
            asym = analytics.family_density_asymptotic(r, b)
            rows.append((r, fams, 2 * reps, emp, asym, emp / asym))
    header = ("r", "prime_count", "lattice_count", "empirical", "asymptotic", "ratio") \
        if ring is Ring.GAUSS else \
        ("r", "prime_families", "families", "empirical", "asymptotic", "ratio")
    _emit(args, header, rows)


def cmd_moat_bound(args: argparse.Namespace) -> None:
    fields = ("x", "c_max", "d_CC", "PD", "steps_lower", "families_upper", "ratio")
    rows = []
    for x in args.x:
        rep = analytics.moat_bound_report(args.r, args.k, x)
        rows.append(tuple(getattr(rep, f) for f in fields))
    _emit(args, fields, rows)


def _walk_start(args: argparse.Namespace, ring: Ring) -> QuadInt:
    return QuadInt(*args.start, ring)


def cmd_walk_component(args: argparse.Namespace) -> None:
    ring = Ring.parse(args.ring)
    g = walks.build_walk_graph(ring, _region(args), args.k2, threads=args.threads)
    summary = walks.component_of(g, _walk_start(args, ring))
    pts = [m.xy for m in summary.members]
    _emit(args, ("a", "b"), pts, summary=summary.as_dict(), points=pts)


def cmd_walk_random(args: argparse.Namespace) -> None:
    ring = Ring.parse(args.ring)
    g = walks.build_walk_graph(ring, _region(args), args.k2, threads=args.threads)
    path = walks.random_walk(g, _walk_start(args, ring), args.seed)
    pts = [q.xy for q in path.steps]
    rows = [(i, a, b) for i, (a, b) in enumerate(pts)]
    _emit(args, ("step", "a", "b"), rows, points=pts, path=pts)


def cmd_walk_moat_scan(args: argparse.Namespace) -> None:
    ring = Ring.parse(args.ring)
    table = walks.moat_scan(ring, _walk_start(args, ring), args.k2, _region(args))
    rows = [(k2, s.size, s.farthest.a, s.farthest.b, s.max_coordinate, s.boundary_touched)
            for k2, s in table]
    header = ("k2", "size", "farthest_a", "farthest_b", "max_coordinate", "boundary_touched")
    _emit(args, header, rows)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="primewalk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, ring: bool = True) -> None:
        if ring:
            p.add_argument("--ring", default="zsqrt2", help="zsqrt2 (default) or gauss")
        p.add_argument("--out", help="output file; .csv, .json or .svg")
        p.add_argument("--threads", type=int, default=None,
                       help="worker threads (default: all cores); never changes output")
        p.add_argument("--seed", type=_int, default=0)

    p = sub.add_parser("classify", help="primality verdict for a+b*sqrt(d)")
    p.add_argument("--ring", default="zsqrt2")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="primes of a region as a,b,norm")
    common(p)
    _add_region(p)
    p.add_argument("--asymptotes", action="store_true", help="overlay y=+-x/sqrt2 in SVG")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("figure-compare", help="disk prime counts in Z[i] and Z[sqrt2]")
    common(p, ring=False)
    p.add_argument("--nmin", type=_int, default=1)
    p.add_argument("--nmax", type=_int, required=True)
    p.set_defaults(func=cmd_figure_compare)

    p = sub.add_parser("families", help="norm curves with |k| <= R2 that carry primes")
    common(p, ring=False)
    p.add_argument("--r2", type=_int, required=True)
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("bernays", help="empirical constant for x^2-2y^2 representability")
    common(p, ring=False)
    p.add_argument("--n", type=lambda s: _ints(s), required=True, metavar="N[,N...]")
    p.set_defaults(func=cmd_bernays)

    p = sub.add_parser("density", help="empirical versus asymptotic prime density")
    common(p)
    p.add_argument("--r", type=_floats, required=True, metavar="R[,R...]")
    p.add_argument("--bernays-n", type=_int, default=None,
                   help="sample bound for the Bernays constant (default r^2)")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("moat-bound", help="step and prime bounds across the asymptote strip")
    common(p, ring=False)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--x", type=_floats, required=True, metavar="X[,X...]")
    p.set_defaults(func=cmd_moat_bound)

    walk = sub.add_parser("walk", help="bounded-step prime walks")
    wsub = walk.add_subparsers(dest="walk_command", required=True, parser_class=_Parser)
    for name, func, help_ in (
        ("component", cmd_walk_component, "connected component of a prime"),
        ("random", cmd_walk_random, "seeded norm-increasing random walk"),
        ("moat-scan", cmd_walk_moat_scan, "component sizes for several step bounds"),
    ):
        p = wsub.add_parser(name, help=help_)
        common(p)
        _add_region(p, default_xmax=500)
        p.add_argument("--start", type=_pair, default=(0, 1), metavar="A,B",
                       help="start prime (use --start=-3,2 for negative A)")
        if name == "moat-scan":
            p.add_argument("--k2", type=lambda s: _ints(s), default=[2, 4, 8], metavar="K2[,K2...]")
        else:
            p.add_argument("--k2", type=_int, default=8)
        p.add_argument("--asymptotes", action="store_true")
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except OverflowError as exc:
        print(f"primewalk: overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (ValueError, KeyError) as exc:
        print(f"primewalk: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        sys.stdout = open(os.devnull, "w")
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
