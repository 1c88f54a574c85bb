"""Verification runs and JSON reports behind the command line."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .closed_forms import Prediction, ggt_gp_lower_bound, predict
from .families import FamilySpec
from .graph import Graph
from .solver import DEFAULT_WITNESS_CAP, SolveResult, StructureCheck, enumerate_max_sets, max_set, verify_structure
from .visibility import KIND_ORDER, VariantKind

SCHEMA = "gluedvis.report/1"

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_INPUT = 3
EXIT_INCOMPLETE = 4

MATCH = "MATCH"
MISMATCH = "MISMATCH"
CONSISTENT = "CONSISTENT"
UNKNOWN = "UNKNOWN"
INCOMPLETE = "INCOMPLETE"

DEFAULT_GRID = (FamilySpec("glued", 2, 2), FamilySpec("glued", 3, 2))


@dataclass
class Run:
    source: dict
    result: SolveResult
    prediction: Prediction | None = None
    structure: StructureCheck | None = None
    status: str = UNKNOWN

    def as_dict(self, with_witnesses: bool = False) -> dict:
        return {
            "source": self.source,
            "kind": self.result.kind.value,
            "value": self.result.value,
            "count": self.result.count,
            "complete": self.result.complete,
            "prediction": None if self.prediction is None else self.prediction.as_dict(),
            "status": self.status,
            "structure": None if self.structure is None else self.structure.as_dict(),
            "stats": {"nodes": self.result.nodes},
            **({"witnesses": [w.to_list() for w in self.result.witnesses]} if with_witnesses else {}),
        }


def judge(result: SolveResult, prediction: Prediction | None) -> str:
    """MATCH needs both value and count equal; bounds only need value >= bound."""
    if not result.complete:
        return INCOMPLETE
    if prediction is None:
        return UNKNOWN
    if prediction.exact:
        if result.value != prediction.value:
            return MISMATCH
        if result.count is not None and prediction.count is not None and result.count != prediction.count:
            return MISMATCH
        if result.count is None and prediction.count is not None:
            return UNKNOWN
        return MATCH
    if prediction.lower_bound is not None:
        return CONSISTENT if result.value >= prediction.lower_bound else MISMATCH
    return UNKNOWN


def solve_run(
    g: Graph,
    kind: VariantKind,
    spec: FamilySpec | None = None,
    meta=None,
    *,
    source: dict | None = None,
    count: bool = True,
    cap: int = DEFAULT_WITNESS_CAP,
    budget: float | None = None,
    workers: int = 1,
    structure: bool = True,
) -> Run:
    if count:
        result = enumerate_max_sets(g, kind, cap, budget, workers=workers)
    else:
        result = max_set(g, kind, budget, count=False, workers=workers)
    run = Run(source=source or (spec.as_dict() if spec else {}), result=result)
    if spec is not None:
        run.prediction = predict(spec, kind)
        if structure and meta is not None and result.complete:
            run.structure = verify_structure(result, meta, g)
    run.status = judge(result, run.prediction) if spec is not None else (INCOMPLETE if not result.complete else UNKNOWN)
    return run


def exit_code(runs: list[Run], suite_failures: int = 0) -> int:
    if suite_failures or any(r.status == MISMATCH or (r.structure and r.structure.status == "fail") for r in runs):
        return EXIT_MISMATCH
    if any(r.status == INCOMPLETE for r in runs):
        return EXIT_INCOMPLETE
    return EXIT_OK


def verify_grid(
    specs, kinds=KIND_ORDER, *, budget: float | None = None, workers: int = 1, cap: int = DEFAULT_WITNESS_CAP
) -> list[Run]:
    runs = []
    for spec in specs:
        g, meta = spec.build()
        for kind in kinds:
            runs.append(solve_run(g, kind, spec, meta, budget=budget, workers=workers, cap=cap))
    return runs


@dataclass
class ConjectureFinding:
    r: int
    n: int
    kind: VariantKind
    value: int
    bound: int
    complete: bool
    verdict: str
    count: int | None = None

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "kind": self.kind.value,
            "value": self.value,
            "count": self.count,
            "conjectured": self.bound,
            "complete": self.complete,
            "verdict": self.verdict,
        }


def explore_conjecture(r: int, n: int, budget: float | None = None, with_mu: bool = False, workers: int = 1) -> list[ConjectureFinding]:
    """Solve gp (and optionally mu) on the n-copy glued binary tree against ``2**r + n - 2``."""
    spec = FamilySpec("generalized_glued", r, 2, n)
    g, _ = spec.build()
    bound = ggt_gp_lower_bound(r, n)
    findings = []
    kinds = [VariantKind.GP] + ([VariantKind.MV] if with_mu else [])
    for kind in kinds:
        res = enumerate_max_sets(g, kind, cap=0, budget=budget, workers=workers)
        if not res.complete:
            verdict = INCOMPLETE
        elif res.value == bound:
            verdict = "EQUAL"
        elif res.value > bound:
            verdict = "EXCEEDS"
        else:
            verdict = "BELOW"
        findings.append(ConjectureFinding(r, n, kind, res.value, bound, res.complete, verdict, res.count))
    return findings


def append_log(path: Path, records: list[dict]) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")


@dataclass
class Report:
    command: str
    runs: list[dict] = field(default_factory=list)
    suites: list[dict] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"schema": SCHEMA, "command": self.command, "runs": self.runs, "suites": self.suites, **self.extra}

    def dumps(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")
