"""Exact maximum-set search for the eight invariant kinds.

Hereditary kinds (everything except the two dual kinds) are solved by a
depth-first branch and bound over vertices in ascending order.  A branch keeps
only candidates that can still be added to the current set, which is sound
because every subset of a valid set is valid.

Dual kinds are not known to be hereditary, so they are solved by scanning
set sizes downwards from the plain invariant (an upper bound) to the total
invariant (a lower bound).  Within one size the search still prunes on the
plain kind, which *is* hereditary and is implied by the dual condition.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .families import FamilyMetadata
from .graph import Graph, VertexSet, bits, claw_centers, simplicial_vertices
from .visibility import VariantKind, visible_mask

DEFAULT_WITNESS_CAP = 10_000


class _OutOfBudget(Exception):
    pass


@dataclass
class SolveResult:
    """Outcome of a search.

    ``count`` is the exact number of maximum sets (``None`` when the search ran
    in value-only mode).  ``complete`` is False when the time budget ran out;
    ``value`` is then only the best size found so far.
    """

    kind: VariantKind
    value: int
    count: int | None
    witnesses: list[VertexSet] = field(default_factory=list)
    witness_cap: int = DEFAULT_WITNESS_CAP
    complete: bool = True
    nodes: int = 0
    elapsed: float = 0.0

    def as_dict(self, with_witnesses: bool = False) -> dict:
        d = {
            "kind": self.kind.value,
            "value": self.value,
            "count": self.count,
            "complete": self.complete,
            "witness_cap": self.witness_cap,
            "nodes": self.nodes,
        }
        if with_witnesses:
            d["witnesses"] = [w.to_list() for w in self.witnesses]
        return d


class _Search:
    def __init__(self, g: Graph, kind: VariantKind, deadline: float | None, cap: int, counting: bool):
        self.g = g
        self.n = n = g.n
        self.kind = kind
        # the predicate used while growing sets; for dual kinds the plain kind
        self.grow_kind = kind if kind.hereditary else kind.plain
        self.deadline = deadline
        self.cap = cap
        self.counting = counting
        self.nodes = 0
        self.cache: dict[tuple[int, int], bool] = {}
        full = (1 << n) - 1
        self.inner = [[g.interval(u, v) & ~(1 << u | 1 << v) & full for v in range(n)] for u in range(n)]
        self.through: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for a, b in combinations(range(n), 2):
            for w in bits(self.inner[a][b]):
                self.through[w].append((a, b))
        self.reset()

    def reset(self):
        self.best = -1
        self.count = 0
        self.witnesses: list[int] = []

    def tick(self):
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 255 and time.monotonic() > self.deadline:
            raise _OutOfBudget

    def pair_ok(self, u: int, v: int, s: int, positional: bool) -> bool:
        blockers = self.inner[u][v] & s
        if not blockers:
            return True
        if positional:
            return False
        key = (u * self.n + v, blockers)
        hit = self.cache.get(key)
        if hit is None:
            hit = self.cache[key] = visible_mask(self.g, u, v, blockers)
        return hit

    def extend_ok(self, s: int, x: int) -> bool:
        """Whether ``s`` is valid for ``grow_kind`` given that ``s - {x}`` is."""
        kind = self.grow_kind
        pos = kind.positional
        dom = kind.domain
        n = self.n
        if dom == "plain":
            rest = s & ~(1 << x)
            for y in bits(rest):
                a, b = (x, y) if x < y else (y, x)
                if not self.pair_ok(a, b, s, pos):
                    return False
            members = list(bits(rest))
            inner = self.inner
            for i, a in enumerate(members):
                row = inner[a]
                for b in members[i + 1:]:
                    if row[b] >> x & 1 and not self.pair_ok(a, b, s, pos):
                        return False
            return True
        for y in range(n):
            if y == x:
                continue
            a, b = (x, y) if x < y else (y, x)
            if not self.pair_ok(a, b, s, pos):
                return False
        for a, b in self.through[x]:
            if dom == "outer" and not (s >> a & 1 or s >> b & 1):
                continue
            if not self.pair_ok(a, b, s, pos):
                return False
        return True

    def full_ok(self, s: int) -> bool:
        kind = self.kind
        pos = kind.positional
        for a, b in combinations(range(self.n), 2):
            if kind.requires(bool(s >> a & 1), bool(s >> b & 1)) and not self.pair_ok(a, b, s, pos):
                return False
        return True

    def root_candidates(self, pool: int) -> list[int]:
        return [x for x in bits(pool) if self.extend_ok(1 << x, x)]

    def record(self, s: int, size: int):
        if size > self.best:
            self.best = size
            self.count = 1
            self.witnesses = [s] if self.cap > 0 else []
        elif size == self.best and self.counting:
            self.count += 1
            if len(self.witnesses) < self.cap:
                self.witnesses.append(s)

    def grow(self, s: int, size: int, cands: list[int]):
        """Branch and bound for hereditary kinds."""
        self.tick()
        self.record(s, size)
        slack = 0 if self.counting else 1
        last = len(cands) - 1
        for i, v in enumerate(cands):
            if size + 1 + (last - i) < self.best + slack:
                break
            s2 = s | 1 << v
            self.grow(s2, size + 1, [x for x in cands[i + 1:] if self.extend_ok(s2 | 1 << x, x)])

    def fixed_size(self, s: int, size: int, cands: list[int], k: int):
        """Enumerate plain-valid sets of size exactly ``k`` and keep the fully valid ones."""
        self.tick()
        if size == k:
            if self.full_ok(s):
                self.record(s, size)
            return
        last = len(cands) - 1
        for i, v in enumerate(cands):
            if size + 1 + (last - i) < k:
                break
            s2 = s | 1 << v
            self.fixed_size(s2, size + 1, [x for x in cands[i + 1:] if self.extend_ok(s2 | 1 << x, x)], k)
            if not self.counting and self.best == k:
                return


def _candidate_pool(g: Graph, kind: VariantKind) -> int:
    pool = (1 << g.n) - 1
    if kind is VariantKind.TOTAL_GP:
        pool = simplicial_vertices(g).mask
    elif kind is VariantKind.DUAL_GP:
        pool &= ~claw_centers(g).mask
    return pool


def _branch(args):
    """Worker entry point: the subtree of sets whose smallest member is ``cands[index]``."""
    g, kind, cands, index, k, cap, counting = args
    search = _Search(g, kind, None, cap, counting)
    v = cands[index]
    s = 1 << v
    rest = [x for x in cands[index + 1:] if search.extend_ok(s | 1 << x, x)]
    if k is None:
        search.grow(s, 1, rest)
    elif k >= 1:
        search.fixed_size(s, 1, rest, k)
    return search.best, search.count, search.witnesses, search.nodes


def _merge(search: _Search, parts):
    for best, count, witnesses, nodes in parts:
        search.nodes += nodes
        if best < 0:
            continue
        if best > search.best:
            search.best, search.count = best, count
            search.witnesses = list(witnesses[: search.cap])
        elif best == search.best:
            if search.counting:
                search.count += count
            room = search.cap - len(search.witnesses)
            if room > 0 and search.counting:
                search.witnesses.extend(witnesses[:room])


def _run(search: _Search, cands: list[int], k: int | None, workers: int):
    """Run one search (``k=None`` for branch and bound, else fixed size ``k``)."""
    if k == 0:
        if search.full_ok(0):
            search.record(0, 0)
        return
    if workers > 1 and len(cands) > 1:
        if k is None:
            search.tick()
            search.record(0, 0)
        jobs = [(search.g, search.kind, cands, i, k, search.cap, search.counting) for i in range(len(cands))]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            _merge(search, pool.map(_branch, jobs))
        return
    if k is None:
        search.grow(0, 0, cands)
    else:
        search.fixed_size(0, 0, cands, k)


def _solve(g, kind, budget, cap, counting, workers) -> SolveResult:
    start = time.monotonic()
    deadline = None if budget is None else start + budget
    search = _Search(g, kind, deadline, cap, counting)
    complete = True
    try:
        cands = search.root_candidates(_candidate_pool(g, kind))
        if kind.hereditary:
            _run(search, cands, None, workers)
        else:
            remaining = None if deadline is None else max(deadline - time.monotonic(), 0.0)
            upper = _solve(g, kind.plain, remaining, 0, False, workers)
            remaining = None if deadline is None else max(deadline - time.monotonic(), 0.0)
            lower = _solve(g, kind.total, remaining, 0, False, workers)
            search.nodes += upper.nodes + lower.nodes
            if not (upper.complete and lower.complete):
                raise _OutOfBudget
            for k in range(upper.value, lower.value - 1, -1):
                search.reset()
                _run(search, cands, k, workers)
                if search.best == k:
                    break
    except _OutOfBudget:
        complete = False
        if search.best < 0:
            search.reset()
            search.record(0, 0)
    return SolveResult(
        kind=kind,
        value=search.best,
        count=search.count if counting and complete else None,
        witnesses=[VertexSet(g.n, w) for w in search.witnesses],
        witness_cap=cap,
        complete=complete,
        nodes=search.nodes,
        elapsed=time.monotonic() - start,
    )


def max_set(
    g: Graph,
    kind: VariantKind,
    budget: float | None = None,
    *,
    count: bool = True,
    cap: int = DEFAULT_WITNESS_CAP,
    workers: int = 1,
) -> SolveResult:
    """Exact maximum size (and, by default, number of maximum sets) for ``kind``.

    ``budget`` is a time limit in seconds; when it runs out the result is
    returned with ``complete=False``.  With ``count=False`` the search uses the
    stricter cutoff and only one witness is kept.
    """
    return _solve(g, kind, budget, cap if count else 1, count, workers)


def enumerate_max_sets(
    g: Graph,
    kind: VariantKind,
    cap: int = DEFAULT_WITNESS_CAP,
    budget: float | None = None,
    *,
    workers: int = 1,
) -> SolveResult:
    """Count all maximum sets and materialise up to ``cap`` of them in lexicographic order."""
    return _solve(g, kind, budget, cap, True, workers)


# --- structure checks against known characterizations ---------------------------------


@dataclass
class StructureCheck:
    status: str  # "pass", "fail" or "n/a"
    checked: int = 0
    failures: list[list[int]] = field(default_factory=list)
    note: str = ""

    def as_dict(self) -> dict:
        return {"status": self.status, "checked": self.checked, "failures": self.failures, "note": self.note}


def _characterization(g: Graph, meta: FamilyMetadata, kind: VariantKind):
    """Return (predicate over a bitmask, description) or None when nothing is known."""
    spec = meta.spec
    if spec.family == "perfect_tree" or spec.r < 2:
        return None
    leaves = meta.quasi_leaves.mask
    t = spec.t
    two_copies = spec.family == "glued" or spec.n == 2
    groups = [sum(1 << v for v in grp) for grp in meta.twin_groups]

    if kind in (VariantKind.OUTER_MV, VariantKind.OUTER_GP):
        return (lambda s: s == leaves), "the quasi-leaf set"
    if kind in (VariantKind.DUAL_GP, VariantKind.TOTAL_GP):
        return (lambda s: s == 0), "the empty set"
    if kind in (VariantKind.DUAL_MV, VariantKind.TOTAL_MV):
        def one_missing_per_group(s):
            return s & ~leaves == 0 and all((s & grp).bit_count() == t - 1 for grp in groups)
        return one_missing_per_group, f"{t - 1} vertices from every twin group, nothing else"
    if not two_copies:
        return None
    if kind is VariantKind.MV:
        def leaves_plus_internal(s):
            extra = s & ~leaves
            return s & leaves == leaves and extra.bit_count() == 1
        return leaves_plus_internal, "quasi-leaves plus one internal vertex"
    if kind is VariantKind.GP and t == 2:
        allowed = {leaves}
        for grp in groups:
            u = (grp & -grp).bit_length() - 1
            allowed.add((leaves & ~grp) | g.adj_mask[u])
        return (lambda s: s in allowed), "L, or L minus a twin pair plus its common neighbourhood"
    return None


def verify_structure(result: SolveResult, meta: FamilyMetadata, g: Graph | None = None) -> StructureCheck:
    """Check every witness of ``result`` against the known shape of extremal sets."""
    if g is None:
        g, _ = meta.spec.build()
    found = _characterization(g, meta, result.kind)
    if found is None:
        return StructureCheck("n/a", note="no characterization available")
    predicate, description = found
    check = StructureCheck("pass", note=description)
    for w in result.witnesses:
        check.checked += 1
        if not predicate(w.mask):
            check.failures.append(w.to_list())
    if check.failures:
        check.status = "fail"
    return check
