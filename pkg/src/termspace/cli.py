"""Command line interface.

Exit codes: 0 success, 1 usage or parse error, 2 monoid validation failure,
3 a theorem check failed.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import corpus
from .formats import (ParseError, analyze, dumps, export_dot, format_monoid, parse_monoid_file,
                      report_document)
from .monoid import MonoidError, OrderTooLarge
from .topology import SearchConfig, TooManyPoints
from .verifier import run_all

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_THEOREM = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_monoid(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_monoid_file(text)


def _config(args) -> SearchConfig:
    return SearchConfig(max_points=args.max_points, sample=args.sample, seed=args.seed)


def _fmt_set(m, s) -> str:
    return "{" + ", ".join(m.element_names[i] for i in s) + "}"


def _cmd_validate(args, out):
    m = _read_monoid(args.file)
    if args.format == "machine":
        out.write(dumps({"valid": True, "order": m.order, "elements": list(m.element_names),
                         "identity": m.element_names[m.identity]}))
    else:
        out.write(f"{args.file}: valid commutative monoid of order {m.order}\n")
    return EXIT_OK


def _text_ideals(a, out):
    m = a.monoid
    out.write(f"ideals ({len(a.lattice)}):\n")
    for c in a.lattice.classifications:
        flags = [f for f, v in c.flags().items() if v]
        out.write(f"  {_fmt_set(m, c.ideal)}: {', '.join(flags) if flags else '-'}\n")


def _text_topology(a, out):
    m, space = a.monoid, a.space
    out.write(f"terminal space ({len(space.points)} points):\n")
    for i, p in enumerate(space.points):
        out.write(f"  P{i} = {_fmt_set(m, p)}\n")
    out.write(f"closed sets ({len(space.closed_sets)}):\n")
    for c in space.closed_sets:
        out.write("  {" + ", ".join(f"P{i}" for i in sorted(c.members)) + "}\n")
    sep = a.separation
    out.write(f"T0: {sep.t0}  T1: {sep.t1}  antichain: {sep.antichain}\n")
    comps = a.components
    out.write(f"irreducible components: {len(comps.components)}; minimal points: "
              + ", ".join(f"P{i}" for i in comps.minimal_si) + "\n")
    rad = a.radicals
    out.write(f"radicals: m={_fmt_set(m, rad.m_radical)} p={_fmt_set(m, rad.p_radical)} "
              f"s={_fmt_set(m, rad.s_radical)}\n")
    d = a.density
    out.write(f"Spec dense: {d.spec_dense}  Max dense: {d.max_dense}  "
              f"corrected pairing: {d.corrected_pairing_holds}  literal pairing: {d.literal_pairing_holds}\n")


def _cmd_analyze(args, out):
    a = analyze(_read_monoid(args.file), name=Path(args.file).stem)
    if args.format == "machine":
        out.write(dumps(report_document(a, topology=False)))
    else:
        _text_ideals(a, out)
    return EXIT_OK


def _cmd_topology(args, out):
    a = analyze(_read_monoid(args.file), name=Path(args.file).stem)
    if len(a.space.points) > args.max_points:
        raise TooManyPoints(f"{len(a.space.points)} points exceeds --max-points {args.max_points}")
    if args.format == "machine":
        out.write(dumps(report_document(a)))
    else:
        _text_ideals(a, out)
        _text_topology(a, out)
    return EXIT_OK


def _verify_one(path: str, config: SearchConfig, fmt: str, timings: bool) -> tuple[int, str]:
    """Verify one file; returns (exit code, rendered output). Runs in worker processes."""
    try:
        m = _read_monoid(path)
    except ParseError as exc:
        return EXIT_USAGE, f"{path}: {exc}\n"
    except MonoidError as exc:
        return EXIT_INVALID, f"{path}: invalid monoid: {exc}\n"
    name = Path(path).stem
    report = run_all(m, name=name, config=config)
    if fmt == "machine":
        text = dumps(report_document(analyze(m, name), verification=report, timings=timings))
    else:
        lines = [f"{path}: order {m.order}"]
        for c in report.checks:
            extra = f"  ({c.elapsed * 1000:.1f} ms)" if timings else ""
            lines.append(f"  {c.status:<10} {c.id}{extra}")
            if c.status == "fail":
                lines.append(f"             witness: {c.payload.get('witness')}")
        summary = ", ".join(f"{k}={v}" for k, v in report.summary.items())
        lines.append(f"  summary: {summary}")
        for f in report.findings:
            lines.append(f"  finding: {f}")
        text = "\n".join(lines) + "\n"
    return (EXIT_OK if report.ok else EXIT_THEOREM), text


def _cmd_verify(args, out):
    config = _config(args)
    jobs = [(p, config, args.format, args.timings) for p in args.files]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_one, *zip(*jobs)))
    else:
        results = [_verify_one(*j) for j in jobs]
    for _, text in results:
        out.write(text)
    codes = [c for c, _ in results]
    for code in (EXIT_USAGE, EXIT_INVALID, EXIT_THEOREM):
        if code in codes:
            return code
    return EXIT_OK


def _cmd_generate(args, out):
    fam = args.family
    if "(" in fam or not args.params:
        text = fam if "(" in fam or fam == "boolean" else f"{fam}()"
    elif fam == "direct_product":
        text = f"direct_product({','.join(args.params)})"
    else:
        vals = [p.split("=", 1)[-1] for p in args.params]
        text = f"{fam}({','.join(vals)})"
    spec = corpus.FamilySpec.parse(text)
    m = corpus.make_family(spec)
    if args.format == "machine":
        out.write(dumps({"family": str(spec), "elements": list(m.element_names),
                         "identity": m.element_names[m.identity],
                         "table": [[m.element_names[v] for v in row] for row in m.table]}))
    else:
        out.write(format_monoid(m, comment=str(spec)))
    return EXIT_OK


def _cmd_census(args, out):
    ms = corpus.enumerate_commutative_monoids(args.order, args.up_to_iso,
                                              allow_order_6=args.allow_order_6)
    if args.format == "machine":
        out.write(dumps({"order": args.order, "up_to_iso": args.up_to_iso, "count": len(ms),
                         "monoids": [[[m.element_names[v] for v in row] for row in m.table]
                                     for m in ms]}))
    else:
        kind = "up to isomorphism" if args.up_to_iso else "with identity at index 0"
        out.write(f"# {len(ms)} commutative monoids of order {args.order} {kind}\n")
        for k, m in enumerate(ms):
            out.write(format_monoid(m, comment=f"census {args.order}.{k}"))
    return EXIT_OK


def _cmd_export(args, out):
    out.write(export_dot(analyze(_read_monoid(args.dot))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--max-points", type=int, default=20,
                        help="refuse terminal spaces with more points (default 20)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled-subset mode")
    common.add_argument("--sample", action="store_true",
                        help="sample subsets when a space has more than 12 points")

    parser = _Parser(prog="termspace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="parse and validate a monoid file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("analyze", parents=[common], help="ideals and their classification")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("topology", parents=[common], help="terminal space, closed sets, radicals, density")
    p.add_argument("file")
    p.set_defaults(func=_cmd_topology)

    p = sub.add_parser("verify", parents=[common], help="run the full theorem suite")
    p.add_argument("files", nargs="+")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include per-check timings")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", parents=[common], help="emit a monoid from a named family")
    p.add_argument("--family", required=True,
                   help=f"one of {', '.join(corpus.FAMILIES)}, or a full spec like 'cyclic(2,3)'")
    p.add_argument("--params", nargs="*", default=[],
                   help="integers (or key=value) for the family; factor specs for direct_product")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("census", parents=[common], help="enumerate commutative monoids of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--allow-order-6", action="store_true")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("export", parents=[common], help="DOT graphs of the lattice and the space")
    p.add_argument("--dot", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_export)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MonoidError as exc:
        print(f"invalid monoid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, ValueError, TooManyPoints, OrderTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
