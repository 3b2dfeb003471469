"""Command-line front end: ``ivfg classify|metrics|complement|verify|gen|export-dot``.

Exit codes: 0 success, 1 usage or I/O error, 2 invalid graph document or
constraint violation, 3 counterexamples found for an asserted theorem.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classify import classify
from .core import DegreePair, IVFGError, ValidationError, format_scalar, to_numerator
from .generate import EnumSpec, Grid, make_regular_cycle, random_graph
from .io import DocumentError, export_dot, read_graph, write_graph
from .metrics import degrees, max_degree, min_degree, order, size, total_degrees
from .transform import complement_strong
from .verify import THEOREM_IDS, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_COUNTEREXAMPLE = 3

DEFAULT_GRID = "0,0.5,1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; 2 is reserved for invalid graphs here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return read_graph(data)


def _emit(data: bytes | str, out: str | None) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if out in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        with open(out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror}") from None


def _pair(p: DegreePair, D: int) -> str:
    return f"({format_scalar(p.lo, D)}, {format_scalar(p.hi, D)})"


def _flag(value) -> str:
    return str(value).lower() if isinstance(value, bool) else str(value)


def _grid(text: str) -> Grid:
    try:
        return Grid.parse(text)
    except (ValueError, ArithmeticError) as exc:
        raise UsageError(f"bad --grid {text!r}: {exc}") from None


def _bounds(text: str, D: int, flag: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"{flag} takes lo,hi")
    try:
        return to_numerator(parts[0].strip(), D), to_numerator(parts[1].strip(), D)
    except (ValueError, ArithmeticError) as exc:
        raise UsageError(f"bad {flag} {text!r}: {exc}") from None


# -- subcommands ------------------------------------------------------------

def cmd_classify(args) -> int:
    g = _load(args.path)
    report = classify(g)
    if args.json:
        print(json.dumps({"denominator": g.denominator, **report.to_dict()}, indent=2))
        return EXIT_OK
    D = g.denominator
    for name in report.FLAGS:
        print(f"{name}: {_flag(getattr(report, name))}")
    for name in ("regular", "totally_regular"):
        pair = getattr(report, name)
        print(f"{name}_constants: {'none' if pair is None else _pair(pair, D)}")
    for note in report.errata_notes:
        print(f"note: {note}")
    return EXIT_OK


def cmd_metrics(args) -> int:
    g = _load(args.path)
    D = g.denominator
    d, td = degrees(g), total_degrees(g)
    if args.json:
        doc = {
            "denominator": D,
            "degree": {v: list(d[v]) for v in g.sorted_vertices()},
            "total_degree": {v: list(td[v]) for v in g.sorted_vertices()},
            "order": list(order(g)),
            "size": list(size(g)),
        }
        if len(g):
            doc["min_degree"] = list(min_degree(g))
            doc["max_degree"] = list(max_degree(g))
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    for v in g.sorted_vertices():
        print(f"d({v}) = {_pair(d[v], D)}")
    for v in g.sorted_vertices():
        print(f"td({v}) = {_pair(td[v], D)}")
    print(f"order = {_pair(order(g), D)}")
    print(f"size = {_pair(size(g), D)}")
    if len(g):
        print(f"min_degree = {_pair(min_degree(g), D)}")
        print(f"max_degree = {_pair(max_degree(g), D)}")
    return EXIT_OK


def cmd_complement(args) -> int:
    g = _load(args.path)
    _emit(write_graph(complement_strong(g)), args.out)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = _load(args.path)
    _emit(export_dot(g, classify(g) if args.report else None), args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.cycle is not None:
        if args.k is None or args.c is None:
            raise UsageError("--cycle needs --k lo,hi and --c lo,hi")
        D = args.denominator
        k, c = _bounds(args.k, D, "--k"), _bounds(args.c, D, "--c")
        try:
            g = make_regular_cycle(args.cycle, k[0], k[1], c, D)
        except (ValueError, IVFGError) as exc:
            raise UsageError(f"cannot build the cycle: {exc}") from None
    else:
        if args.n is None:
            raise UsageError("give --n for a random graph or --cycle for a regular cycle")
        if args.n < 1:
            raise UsageError(f"--n must be at least 1, got {args.n}")
        if args.seed is None:
            raise UsageError("random generation needs an explicit --seed")
        try:
            p = Fraction(args.edge_prob)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad --edge-prob {args.edge_prob!r}") from None
        if not 0 <= p <= 1:
            raise UsageError("--edge-prob must lie in [0, 1]")
        g = random_graph(args.n, _grid(args.grid), p, args.seed, constant_vertices=args.constant_vertices)
    _emit(write_graph(g), args.out)
    return EXIT_OK


def _theorems(text: str) -> list[str]:
    ids = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in ids if t not in THEOREM_IDS]
    if bad or not ids:
        raise UsageError(f"unknown theorem id(s) {', '.join(bad) or text!r}; choose from {','.join(THEOREM_IDS)}")
    return ids


def _summary(outcomes) -> str:
    head = f"{'theorem':<8} {'checked':>12} {'skipped':>12} {'confirmed':>12} {'counterex':>10}  status"
    lines = [head, "-" * len(head)]
    for o in outcomes:
        if not o.asserted:
            status = "search"
        else:
            status = "FAIL" if o.failed else "ok"
        lines.append(
            f"{o.theorem_id:<8} {o.instances_checked:>12} {o.skipped:>12} {o.confirmations:>12} "
            f"{o.counterexample_count:>10}  {status}"
        )
    for o in outcomes:
        for note in o.notes:
            lines.append(f"[{o.theorem_id}] {note}")
        for c in o.counterexamples:
            lines.append(f"[{o.theorem_id}] counterexample ({c.source}): {c.explanation}")
            lines.extend("    " + line for line in write_graph(c.graph).decode().splitlines())
    return "\n".join(lines)


def cmd_verify(args) -> int:
    theorems = _theorems(args.theorem)
    if args.n_max < 0:
        raise UsageError("--n-max must be non-negative")
    if args.random_count < 0 or args.constructed_count < 0:
        raise UsageError("counts must be non-negative")
    randomized = args.random_count > 0 or args.constructed_count > 0
    if args.json and randomized and args.seed is None:
        raise UsageError("--json with random or constructed instances needs an explicit --seed")
    grid = _grid(args.grid)
    # --n-max 0 skips exhaustive enumeration
    spec = EnumSpec(max(args.n_max, 1), grid, require_connected=args.connected)
    outcomes = run_suite(
        spec,
        theorems,
        args.seed,
        random_count=args.random_count,
        random_n_max=args.random_n_max,
        constructed_count=args.constructed_count,
        keep=args.max_counterexamples,
        strict_highly=args.strict_highly,
        workers=args.workers,
        exhaustive=args.n_max > 0,
    )
    if args.json:
        report = {
            "format_version": 1,
            "grid": str(grid),
            "n_max": args.n_max,
            "require_connected": args.connected,
            "seed": 0 if args.seed is None else args.seed,
            "random_count": args.random_count,
            "constructed_count": args.constructed_count,
            "strict_highly": args.strict_highly,
            "outcomes": [o.to_dict(timing=args.timing) for o in outcomes],
        }
        _emit(json.dumps(report, indent=2) + "\n", args.out)
    else:
        _emit(_summary(outcomes) + "\n", args.out)
    return EXIT_COUNTEREXAMPLE if any(o.failed for o in outcomes) else EXIT_OK


# -- wiring -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ivfg", description="Interval-valued fuzzy graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="evaluate every graph-class predicate")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("metrics", help="degrees, total degrees, order and size")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_metrics)

    p = sub.add_parser("complement", help="write the complement of a strong graph")
    p.add_argument("path")
    p.add_argument("out", nargs="?", default="-", help="output path (default: stdout)")
    p.set_defaults(fn=cmd_complement)

    p = sub.add_parser("export-dot", help="DOT text for Graphviz")
    p.add_argument("path")
    p.add_argument("--report", action="store_true", help="list classification flags in a comment")
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_export_dot)

    p = sub.add_parser("gen", help="generate a random graph or a regular even cycle")
    p.add_argument("--n", type=int, help="vertex count for a random graph")
    p.add_argument("--grid", default=DEFAULT_GRID, help=f"membership grid (default {DEFAULT_GRID})")
    p.add_argument("--seed", type=int)
    p.add_argument("--edge-prob", default="1/2", help="edge probability as a fraction or decimal")
    p.add_argument("--constant-vertices", action="store_true", help="one membership for every vertex")
    p.add_argument("--cycle", type=int, metavar="N", help="regular even cycle on N vertices")
    p.add_argument("--k", help="common degree lo,hi for --cycle")
    p.add_argument("--c", help="odd-edge membership lo,hi for --cycle")
    p.add_argument("--denominator", type=int, default=100, help="denominator for --cycle (default 100)")
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("verify", help="check the theorems over enumerated and random instances")
    p.add_argument("--theorem", default="2,3,4,5", help=f"comma-separated ids from {','.join(THEOREM_IDS)}")
    p.add_argument("--n-max", type=int, default=4, help="exhaustive enumeration up to this many vertices (0: none)")
    p.add_argument("--grid", default=DEFAULT_GRID)
    p.add_argument("--seed", type=int)
    p.add_argument("--random-count", type=int, default=0)
    p.add_argument("--random-n-max", type=int, default=6)
    p.add_argument("--constructed-count", type=int, default=0, help="seeded regular even cycles")
    p.add_argument("--connected", action="store_true", help="enumerate connected graphs only")
    p.add_argument("--strict-highly", action="store_true", help="use pairwise-distinct neighbour degrees for 4c")
    p.add_argument("--max-counterexamples", type=int, default=20)
    p.add_argument("--workers", type=int, help="worker processes (default: IVFG_THREADS or 1)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in --json output")
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"ivfg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print("ivfg: invalid graph:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_INVALID
    except DocumentError as exc:
        print(f"ivfg: invalid document: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
