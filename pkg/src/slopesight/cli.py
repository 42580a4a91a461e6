"""Command-line entry point: ``slopesight <subcommand> ...``.

Exit codes: 0 on success, 2 on invalid input or usage, 3 when
``solve --expect-unique`` finds the observation ambiguous.
"""
from __future__ import annotations

import argparse
import sys

from . import documents as docs
from .adversarial import verify_adversarial
from .census import census, compare_with_table, default_jobs
from .errors import DocumentError, SlopesightError
from .geometry import Dihedral, Point, Transform, format_slope, parse_rational, parse_slope, transform_slope
from .observation import Configuration, observe
from .solver import HiddenConfiguration, Semantics, adaptive_search, determinacy
from .tiers import TABLE_ORDER, slope_sequence, tier_slopes

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_AMBIGUOUS = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _emit(text: str, output: str | None):
    if output and output != "-":
        docs.write_atomic(output, text)
    else:
        sys.stdout.write(text)


def _slope_list(text: str) -> list:
    try:
        slopes = [parse_slope(tok) for tok in text.split(",") if tok.strip()]
    except SlopesightError as e:
        raise argparse.ArgumentTypeError(str(e))
    if not slopes:
        raise argparse.ArgumentTypeError("empty slope list")
    return slopes


def _point(text: str) -> Point:
    try:
        x, y = text.split(",")
        return Point(parse_rational(x), parse_rational(y))
    except (ValueError, SlopesightError):
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _semantics(text: str) -> Semantics:
    try:
        return Semantics(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected 'unique' or 'nophantom'")


def _order(spec: str, n: int) -> list:
    """``tiered`` or a path to an order document."""
    if spec == "tiered":
        return slope_sequence(max(len(TABLE_ORDER), n + 1))
    return docs.decode_slopes(docs.loads(_read(spec)))


def _load_config(path: str) -> Configuration:
    return docs.decode_configuration(docs.loads(_read(path)))


def cmd_tiers(args) -> int:
    lines = []
    for t in range(1, args.upto + 1):
        lines += [f"{t}\t{format_slope(s)}" for s in tier_slopes(t)]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_observe(args) -> int:
    c = _load_config(args.config)
    slopes = args.slopes if args.slopes is not None else slope_sequence(args.tiered)
    _emit(docs.dumps(docs.encode_observation(observe(c, slopes))), args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    o = docs.decode_observation(docs.loads(_read(args.observation)))
    truth = _load_config(args.truth) if args.truth else None
    if args.semantics is Semantics.NO_PHANTOM and truth is None:
        raise DocumentError("--semantics nophantom needs --truth")
    verdict = determinacy(o, args.n, args.semantics, truth, limit=args.limit)
    _emit(docs.dumps(docs.encode_verdict(verdict)), args.output)
    if args.expect_unique and verdict.kind != "unique":
        return EXIT_AMBIGUOUS
    return EXIT_OK


def _hist_text(hist: dict) -> str:
    return " ".join(f"{k}:{v}" for k, v in hist.items())


def cmd_census(args) -> int:
    rows, payload = [], []
    for n in args.n:
        order = _order(args.order, n)
        report = census(n, order, args.semantics, jobs=args.jobs)
        cmp = compare_with_table(report)
        payload.append(docs.encode_census(report, cmp))
        rows.append((report, cmp))
    if args.format == "json":
        _emit(docs.dumps(payload[0] if len(payload) == 1 else payload), args.output)
        return EXIT_OK
    out = ["Points | Examples | Slopes required:Number of examples"]
    out += [f"{r.n} | {r.total_examples} | {_hist_text(r.histogram)}" for r, _ in rows]
    for r, cmp in rows:
        if cmp is None or cmp.matches:
            continue
        other = "nophantom" if r.semantics is Semantics.UNIQUE else "unique"
        out.append("")
        out.append(
            f"n={r.n}: differs from published {cmp.expected_total} | {_hist_text(cmp.expected_histogram)}"
        )
        out.append(f"n={r.n}: {other} semantics gives {_hist_text(cmp.other_semantics_histogram)}")
        for c, k, k2 in cmp.discrepancies:
            pts = " ".join(f"({p.x},{p.y})" for p in c.points)
            out.append(f"  {pts}  {r.semantics.value}={k} {other}={k2}")
    _emit("\n".join(out) + "\n", args.output)
    return EXIT_OK


def cmd_adversarial(args) -> int:
    report = verify_adversarial(args.n, args.center)
    _emit(docs.dumps(docs.encode_adversarial(report)), args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    hidden = _load_config(args.hidden)
    oracle = HiddenConfiguration(hidden)
    result = adaptive_search(oracle, hidden.n, _order(args.order, hidden.n), args.semantics)
    doc = {
        "configuration": docs.encode_configuration(result.configuration)["points"],
        "slopes_used": result.slopes_used,
        "slopes": [format_slope(s) for s in result.slopes],
        "semantics": args.semantics.value,
    }
    _emit(docs.dumps(doc), args.output)
    return EXIT_OK


def cmd_transform(args) -> int:
    t = Transform(args.op, args.center)
    c = _load_config(args.config)
    doc = docs.encode_configuration(Configuration(tuple(t(p) for p in c.points)))
    if args.slopes is not None:
        doc["slopes"] = [format_slope(transform_slope(t, s)) for s in args.slopes]
    _emit(docs.dumps(doc), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slopesight", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--output", "-o", help="write here instead of stdout")
        return p

    p = add("tiers", cmd_tiers, "list the tiered slopes")
    p.add_argument("--upto", type=_positive, required=True)

    p = add("observe", cmd_observe, "observe a configuration")
    p.add_argument("--config", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--slopes", type=_slope_list, help="comma separated, e.g. 0,vertical,1")
    g.add_argument("--tiered", type=_positive, help="use the first K tiered slopes")

    p = add("solve", cmd_solve, "reconstruct configurations from an observation")
    p.add_argument("--observation", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--semantics", type=_semantics, default=Semantics.UNIQUE)
    p.add_argument("--limit", type=_positive)
    p.add_argument("--truth", help="hidden configuration (needed for nophantom)")
    p.add_argument("--expect-unique", action="store_true")

    p = add("census", cmd_census, "census of grid configurations")
    p.add_argument("--n", type=_positive, nargs="+", required=True)
    p.add_argument("--order", default="tiered")
    p.add_argument("--semantics", type=_semantics, default=Semantics.UNIQUE)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--jobs", type=_positive, default=None)

    p = add("adversarial", cmd_adversarial, "build and verify the phantom-center instance")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--center", type=_point, default=Point(0, 0))

    p = add("search", cmd_search, "locate a hidden configuration slope by slope")
    p.add_argument("--hidden", required=True)
    p.add_argument("--order", default="tiered")
    p.add_argument("--semantics", type=_semantics, default=Semantics.UNIQUE)

    p = add("transform", cmd_transform, "rotate or reflect a configuration")
    p.add_argument("--config", required=True)
    p.add_argument("--op", type=Dihedral.from_label, required=True,
                   help="identity, rot90, rot180, rot270, reflect-h, reflect-v, ...")
    p.add_argument("--center", type=_point, default=Point(0, 0))
    p.add_argument("--slopes", type=_slope_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) is None:
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except (SlopesightError, OSError, ValueError) as e:
        print(f"slopesight: error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
