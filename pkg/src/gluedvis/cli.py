"""``gluedvis`` command line.

Exit codes: 0 success, 2 verification mismatch or property failure,
3 invalid input, 4 incomplete under the time budget.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness
from .families import FAMILIES, FamilySpec, to_dot
from .graph import GraphInputError, format_edge_list, parse_edge_list
from .harness import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, Report
from .properties import run_property_suite
from .solver import DEFAULT_WITNESS_CAP
from .visibility import KIND_ORDER, VariantKind


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _kind(text: str) -> VariantKind:
    try:
        return VariantKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family_args(p, multi_r: bool = False):
    p.add_argument("--family", choices=FAMILIES)
    if multi_r:
        p.add_argument("--r", type=int, nargs="+")
    else:
        p.add_argument("--r", type=int)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--n", type=int, default=2)


def _solve_args(p):
    _family_args(p)
    p.add_argument("--graph", type=Path, help="edge-list file instead of a family")
    p.add_argument("--kind", type=_kind, required=True)
    p.add_argument("--budget", type=float, help="time limit in seconds")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", type=Path)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gluedvis", description="Exact mutual-visibility and general position invariants.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a family graph")
    _family_args(p)
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")

    p = sub.add_parser("invariant", help="compute one invariant")
    _solve_args(p)
    p.add_argument("--count", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--witnesses", type=int, default=0, metavar="CAP", help="print up to CAP maximum sets")

    p = sub.add_parser("enumerate", help="count and list maximum sets")
    _solve_args(p)
    p.add_argument("--witnesses", type=int, default=DEFAULT_WITNESS_CAP, metavar="CAP")

    p = sub.add_parser("verify", help="check solver output against closed forms")
    _family_args(p, multi_r=True)
    p.add_argument("--kind", type=_kind, nargs="+")
    p.add_argument("--budget", type=float)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", type=Path)

    p = sub.add_parser("conjecture", help="probe gp of generalized glued binary trees")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=float)
    p.add_argument("--mu", action="store_true", help="also solve the mutual-visibility number")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--log", type=Path, default=Path("conjecture_log.ndjson"))
    p.add_argument("--json", type=Path)

    p = sub.add_parser("properties", help="run the seeded property suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--json", type=Path)
    return parser


def _spec(args) -> FamilySpec:
    if args.family is None or args.r is None:
        raise GraphInputError("give --family and --r (or --graph)")
    return FamilySpec(args.family, args.r, args.t, args.n)


def _load(args):
    if args.graph is not None:
        try:
            text = args.graph.read_text(encoding="utf-8")
        except OSError as exc:
            raise GraphInputError(f"cannot read {args.graph}: {exc}") from None
        return parse_edge_list(text), None, None, {"file": str(args.graph)}
    spec = _spec(args)
    g, meta = spec.build()
    return g, spec, meta, spec.as_dict()


def _fmt_set(members) -> str:
    return "{" + ", ".join(map(str, members)) + "}"


def _print_run(run: harness.Run, out) -> None:
    res = run.result
    name = run.source.get("file") or FamilySpec(**run.source).label()
    line = f"{name:<12} {res.kind.value:<5} value={res.value}"
    if res.count is not None:
        line += f" count={res.count}"
    if not res.complete:
        line += " (incomplete: budget exhausted)"
    pred = run.prediction
    if pred is not None:
        if pred.exact:
            line += f"  predicted={pred.value}/{pred.count}"
        elif pred.lower_bound is not None:
            line += f"  bound>={pred.lower_bound}"
        line += f"  {run.status}"
    if run.structure is not None and run.structure.status != "n/a":
        line += f"  structure={run.structure.status}"
        if run.structure.failures:
            line += f" ({len(run.structure.failures)} off-pattern)"
    print(line, file=out)


def cmd_generate(args, out) -> int:
    spec = _spec(args)
    g, meta = spec.build()
    out.write(to_dot(g, meta, spec.label()) if args.format == "dot" else format_edge_list(g))
    return EXIT_OK


def cmd_invariant(args, out, enumerate_all: bool = False) -> int:
    g, spec, meta, source = _load(args)
    count = True if enumerate_all else args.count
    cap = args.witnesses if count else 1
    run = harness.solve_run(
        g, args.kind, spec, meta, source=source, count=count, cap=max(cap, 0), budget=args.budget, workers=args.workers
    )
    _print_run(run, out)
    shown = run.result.witnesses[: args.witnesses] if args.witnesses else []
    for w in shown:
        print("  " + _fmt_set(w.to_list()), file=out)
    report = Report("enumerate" if enumerate_all else "invariant", runs=[run.as_dict(with_witnesses=bool(shown))])
    if args.json:
        report.write(args.json)
    return harness.exit_code([run])


def cmd_verify(args, out) -> int:
    if args.family is None:
        specs = list(harness.DEFAULT_GRID)
    else:
        if not args.r:
            raise GraphInputError("verify --family needs --r")
        specs = [FamilySpec(args.family, r, args.t, args.n) for r in args.r]
    kinds = args.kind or list(KIND_ORDER)
    runs = harness.verify_grid(specs, kinds, budget=args.budget, workers=args.workers)
    for run in runs:
        _print_run(run, out)
    tally: dict[str, int] = {}
    for run in runs:
        tally[run.status] = tally.get(run.status, 0) + 1
    print("summary: " + ", ".join(f"{k}={v}" for k, v in sorted(tally.items())), file=out)
    if args.json:
        Report("verify", runs=[r.as_dict() for r in runs], extra={"summary": tally}).write(args.json)
    return harness.exit_code(runs)


def cmd_conjecture(args, out) -> int:
    if args.r < 2 or args.n < 2:
        raise GraphInputError("conjecture needs r >= 2 and n >= 2")
    findings = harness.explore_conjecture(args.r, args.n, args.budget, args.mu, args.workers)
    records = [f.as_dict() for f in findings]
    for f in findings:
        label = FamilySpec("generalized_glued", f.r, 2, f.n).label()
        print(f"{label:<12} {f.kind.value:<3} value={f.value} count={f.count} vs 2^r+n-2={f.bound}: {f.verdict}", file=out)
    harness.append_log(args.log, records)
    if args.json:
        Report("conjecture", extra={"findings": records}).write(args.json)
    gp = findings[0]
    if gp.complete and gp.verdict == "BELOW":
        return EXIT_MISMATCH
    if any(not f.complete for f in findings):
        return harness.EXIT_INCOMPLETE
    return EXIT_OK


def cmd_properties(args, out) -> int:
    suites = run_property_suite(args.seed, args.instances, args.samples)
    failures = 0
    for s in suites:
        failures += len(s.failures)
        print(f"{s.name:<45} instances={s.instances:<4} failures={len(s.failures)}", file=out)
        for f in s.failures:
            print(f"  {f['graph']}: {f['detail']}\n{f['edge_list']}", file=out)
    if args.json:
        Report("properties", suites=[s.as_dict() for s in suites], extra={"seed": args.seed, "instances": args.instances}).write(args.json)
    return EXIT_MISMATCH if failures else EXIT_OK


COMMANDS = {
    "gen": cmd_generate,
    "invariant": cmd_invariant,
    "enumerate": lambda args, out: cmd_invariant(args, out, enumerate_all=True),
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
    "properties": cmd_properties,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return COMMANDS[args.command](args, out)
    except GraphInputError as exc:
        print(f"gluedvis: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
