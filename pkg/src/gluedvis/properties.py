"""Seeded property suite: inequality chains, hereditariness, claw and simplicial checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .families import build_generalized_glued, build_glued
from .graph import DisconnectedGraphError, Graph, claw_centers, format_edge_list, from_edge_list, simplicial_vertices
from .solver import SolveResult, enumerate_max_sets
from .visibility import KIND_ORDER, VariantKind as K, classify_set

EDGE_PROBABILITY = 0.4
MIN_ORDER, MAX_ORDER = 5, 10


def random_connected_graph(rng: random.Random, n: int | None = None, p: float = EDGE_PROBABILITY) -> Graph:
    """Erdos-Renyi G(n, p), resampled until connected."""
    if n is None:
        n = rng.randint(MIN_ORDER, MAX_ORDER)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    while True:
        edges = [e for e in pairs if rng.random() < p]
        try:
            return from_edge_list(n, edges)
        except DisconnectedGraphError:
            continue


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def fixed_graphs() -> list[tuple[str, Graph]]:
    return [
        ("C4", cycle(4)),
        ("K1,3", star(3)),
        ("P5", path(5)),
        ("Petersen", petersen()),
        ("GT(2)", build_glued(2, 2)[0]),
        ("GT_2^(3)", build_generalized_glued(2, 3)[0]),
    ]


def random_instances(seed: int, count: int) -> list[tuple[str, Graph]]:
    rng = random.Random(seed)
    return [(f"random[{seed}:{i}]", random_connected_graph(rng)) for i in range(count)]


CHAINS = (
    # (name, smaller kinds, larger kinds): max(smaller) <= min(larger)
    ("gp_t <= mu_t", (K.TOTAL_GP,), (K.TOTAL_MV,)),
    ("mu_t <= min(mu_o, mu_d)", (K.TOTAL_MV,), (K.OUTER_MV, K.DUAL_MV)),
    ("max(mu_o, mu_d) <= mu", (K.OUTER_MV, K.DUAL_MV), (K.MV,)),
    ("gp_t <= min(gp_o, gp_d)", (K.TOTAL_GP,), (K.OUTER_GP, K.DUAL_GP)),
    ("max(gp_o, gp_d) <= gp", (K.OUTER_GP, K.DUAL_GP), (K.GP,)),
    ("gp <= mu", (K.GP,), (K.MV,)),
    ("gp_o <= mu_o", (K.OUTER_GP,), (K.OUTER_MV,)),
    ("gp_d <= mu_d", (K.DUAL_GP,), (K.DUAL_MV,)),
)


@dataclass
class SuiteResult:
    name: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"property": self.name, "instances": self.instances, "failures": self.failures}


def _failure(name: str, g: Graph, detail: str) -> dict:
    return {"graph": name, "edge_list": format_edge_list(g), "detail": detail}


def check_graph(
    name: str,
    g: Graph,
    rng: random.Random,
    suites: dict[str, SuiteResult],
    samples: int = 50,
    results: dict[K, SolveResult] | None = None,
) -> dict[K, SolveResult]:
    """Solve all eight kinds on ``g`` and record every property outcome into ``suites``."""
    if results is None:
        results = {kind: enumerate_max_sets(g, kind) for kind in KIND_ORDER}
    values = {kind: res.value for kind, res in results.items()}

    def suite(key: str) -> SuiteResult:
        return suites.setdefault(key, SuiteResult(key))

    for label, low, high in CHAINS:
        s = suite(f"chain: {label}")
        s.instances += 1
        lo = max(values[k] for k in low)
        hi = min(values[k] for k in high)
        if lo > hi:
            s.failures.append(_failure(name, g, f"{lo} > {hi}"))

    s = suite("witnesses classify and have optimum size")
    for kind, res in results.items():
        s.instances += 1
        for w in res.witnesses:
            if len(w) != res.value or not classify_set(g, w, kind):
                s.failures.append(_failure(name, g, f"{kind.value} witness {w.to_list()}"))

    for kind in KIND_ORDER:
        if not kind.hereditary:
            continue
        s = suite(f"hereditary: {kind.value}")
        s.instances += 1
        base = results[kind].witnesses[0].to_list()
        for _ in range(samples):
            sub = [v for v in base if rng.random() < 0.5]
            if not classify_set(g, sub, kind):
                s.failures.append(_failure(name, g, f"subset {sub} of {kind.value}-set {base} fails"))
                break

    claws = claw_centers(g)
    s = suite("no claw center in a gp_d set")
    s.instances += 1
    for w in results[K.DUAL_GP].witnesses:
        if (w & claws).mask:
            s.failures.append(_failure(name, g, f"gp_d witness {w.to_list()} meets claw centers {claws.to_list()}"))

    simp = simplicial_vertices(g)
    s = suite("gp_t equals simplicial vertex count")
    s.instances += 1
    if values[K.TOTAL_GP] != len(simp):
        s.failures.append(_failure(name, g, f"gp_t = {values[K.TOTAL_GP]}, simplicial = {len(simp)}"))
    if not classify_set(g, simp, K.TOTAL_GP):
        s.failures.append(_failure(name, g, "simplicial set is not a total gp set"))

    if name == "Petersen":
        s = suite("gp_d(Petersen) = 0")
        s.instances += 1
        if values[K.DUAL_GP] != 0:
            s.failures.append(_failure(name, g, f"gp_d = {values[K.DUAL_GP]}"))
    return results


def run_property_suite(seed: int = 1, instances: int = 100, samples: int = 50) -> list[SuiteResult]:
    """Run every property on ``instances`` seeded random graphs plus the fixed graphs."""
    rng = random.Random(seed ^ 0x5EED)
    suites: dict[str, SuiteResult] = {}
    for name, g in fixed_graphs() + random_instances(seed, instances):
        check_graph(name, g, rng, suites, samples)
    return list(suites.values())

