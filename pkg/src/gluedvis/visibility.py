"""Pairwise S-visibility / S-positionability and set classification."""

from __future__ import annotations

import enum
from itertools import combinations
from typing import Iterable

from .graph import Graph, VertexSet, as_mask, bits


class VariantKind(enum.Enum):
    """The eight invariant kinds.

    Each kind combines a pair predicate (visible or positionable) with a rule
    saying which vertex pairs it constrains, relative to the set ``S``:

    ========  ==========================================
    plain     both ends in ``S``
    outer     at least one end in ``S``
    dual      both ends in ``S`` or both ends outside
    total     every pair
    ========  ==========================================
    """

    MV = "mu"
    OUTER_MV = "mu_o"
    DUAL_MV = "mu_d"
    TOTAL_MV = "mu_t"
    GP = "gp"
    OUTER_GP = "gp_o"
    DUAL_GP = "gp_d"
    TOTAL_GP = "gp_t"

    @property
    def positional(self) -> bool:
        return self.value.startswith("gp")

    @property
    def domain(self) -> str:
        return {"": "plain", "_o": "outer", "_d": "dual", "_t": "total"}[self.value[2:]]

    @property
    def hereditary(self) -> bool:
        return self.domain != "dual"

    @property
    def plain(self) -> "VariantKind":
        return VariantKind.GP if self.positional else VariantKind.MV

    @property
    def total(self) -> "VariantKind":
        return VariantKind.TOTAL_GP if self.positional else VariantKind.TOTAL_MV

    def requires(self, a_in: bool, b_in: bool) -> bool:
        """Whether a pair with the given membership is constrained by this kind."""
        dom = self.domain
        if dom == "plain":
            return a_in and b_in
        if dom == "outer":
            return a_in or b_in
        if dom == "dual":
            return a_in == b_in
        return True

    @classmethod
    def parse(cls, text: str) -> "VariantKind":
        key = text.strip()
        for kind in cls:
            if key in (kind.value, kind.name, kind.name.lower()):
                return kind
        aliases = {"μ": "mu", "μo": "mu_o", "μd": "mu_d", "μt": "mu_t", "gpo": "gp_o", "gpd": "gp_d", "gpt": "gp_t",
                   "muo": "mu_o", "mud": "mu_d", "mut": "mu_t"}
        if key in aliases:
            return cls(aliases[key])
        raise ValueError(f"unknown invariant kind {text!r}")


# mu first, then gp; this is also the column order of the reports
KIND_ORDER = (
    VariantKind.MV,
    VariantKind.OUTER_MV,
    VariantKind.DUAL_MV,
    VariantKind.TOTAL_MV,
    VariantKind.GP,
    VariantKind.OUTER_GP,
    VariantKind.DUAL_GP,
    VariantKind.TOTAL_GP,
)


def interior(g: Graph, u: int, v: int) -> int:
    """Bitmask of vertices strictly inside some shortest u,v-path."""
    return g.interval(u, v) & ~(1 << u | 1 << v)


def visible_mask(g: Graph, u: int, v: int, blockers: int) -> bool:
    """Layered reachability from ``u`` to ``v`` in the shortest-path DAG avoiding ``blockers``."""
    d = g.dist[u][v]
    if d <= 1:
        return True
    blocked = blockers & ~(1 << u | 1 << v)
    ru, rv, adj = g.rings[u], g.rings[v], g.adj_mask
    reach = 1 << u
    for k in range(1, d):
        layer = ru[k] & rv[d - k] & ~blocked
        if not layer:
            return False
        nxt = 0
        for w in bits(reach):
            nxt |= adj[w]
        reach = nxt & layer
        if not reach:
            return False
    # every vertex of the last layer is adjacent to v
    return True


def s_visible(g: Graph, u: int, v: int, s: VertexSet | Iterable[int] | int) -> bool:
    """True iff some shortest u,v-path has no interior vertex in ``s``."""
    return visible_mask(g, u, v, as_mask(s))


def s_positionable(g: Graph, u: int, v: int, s: VertexSet | Iterable[int] | int) -> bool:
    """True iff no shortest u,v-path has an interior vertex in ``s``."""
    return not interior(g, u, v) & as_mask(s)


def pair_ok(g: Graph, u: int, v: int, s: int, kind: VariantKind) -> bool:
    if kind.positional:
        return not interior(g, u, v) & s
    return visible_mask(g, u, v, s)


def classify_set(g: Graph, s: VertexSet | Iterable[int] | int, kind: VariantKind) -> bool:
    """Decide whether ``s`` is a set of the given kind.

    Pairs are visited in ascending lexicographic order; the first failing
    pair ends the check.
    """
    mask = as_mask(s)
    for u, v in combinations(range(g.n), 2):
        if kind.requires(bool(mask >> u & 1), bool(mask >> v & 1)) and not pair_ok(g, u, v, mask, kind):
            return False
    return True


def first_violation(g: Graph, s: VertexSet | Iterable[int] | int, kind: VariantKind) -> tuple[int, int] | None:
    """Like :func:`classify_set` but returns the offending pair, or None."""
    mask = as_mask(s)
    for u, v in combinations(range(g.n), 2):
        if kind.requires(bool(mask >> u & 1), bool(mask >> v & 1)) and not pair_ok(g, u, v, mask, kind):
            return u, v
    return None
