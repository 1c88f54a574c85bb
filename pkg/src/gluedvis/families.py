"""Generators for perfect t-ary trees and glued tree families.

Labeling contract (stable, part of the public interface):

* perfect tree: BFS order, root ``0``, children of ``i`` are
  ``t*i + 1 .. t*i + t``.
* glued / generalized glued: with ``k = (t**r - 1) // (t - 1)`` internal
  vertices per copy, copy ``c`` (0-based) holds its internal vertices at
  ``c*k .. c*k + k - 1`` in the perfect-tree BFS order, so the quasi-twin of
  vertex ``i`` in copy 0 is ``c*k + i`` in copy ``c``.  The ``t**r``
  quasi-leaves come last, in the perfect-tree leaf order; leaves of all copies
  are matched by identical root-to-leaf child-index sequences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .graph import Graph, GraphInputError, VertexSet, from_edge_list

FAMILIES = ("perfect_tree", "glued", "generalized_glued")
SHARED = "shared"

Family = Literal["perfect_tree", "glued", "generalized_glued"]


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    r: int
    t: int = 2
    n: int = 2

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphInputError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.r < 1:
            raise GraphInputError(f"depth r must be >= 1, got {self.r}")
        if self.t < 2:
            raise GraphInputError(f"arity t must be >= 2, got {self.t}")
        if self.family == "generalized_glued":
            if self.t != 2:
                raise GraphInputError("generalized glued trees are only defined for t = 2")
            if self.n < 2:
                raise GraphInputError(f"number of copies n must be >= 2, got {self.n}")
        elif self.n != 2:
            # n only carries meaning for generalized_glued; normalise it
            object.__setattr__(self, "n", 2)

    @property
    def copies(self) -> int:
        return {"perfect_tree": 1, "glued": 2, "generalized_glued": self.n}[self.family]

    def label(self) -> str:
        if self.family == "perfect_tree":
            return f"T({self.r},{self.t})"
        if self.family == "glued":
            return f"GT({self.r})" if self.t == 2 else f"GT({self.r},{self.t})"
        return f"GT_{self.r}^({self.n})"

    def as_dict(self) -> dict:
        d = {"family": self.family, "r": self.r, "t": self.t}
        if self.family == "generalized_glued":
            d["n"] = self.n
        return d

    def build(self) -> tuple[Graph, "FamilyMetadata"]:
        if self.family == "perfect_tree":
            return build_perfect_tree(self.r, self.t)
        if self.family == "glued":
            return build_glued(self.r, self.t)
        return build_generalized_glued(self.r, self.n)


@dataclass(frozen=True)
class FamilyMetadata:
    spec: FamilySpec
    quasi_leaves: VertexSet
    twin_groups: tuple[tuple[int, ...], ...]
    copy_of: dict = field(hash=False)
    depth_of: dict = field(hash=False)
    roots: tuple[int, ...]

    @property
    def twin_pairs(self) -> tuple[tuple[int, int], ...]:
        """Twin groups as pairs; only meaningful for binary families."""
        if self.spec.t != 2:
            raise ValueError("twin pairs are defined for t = 2; use twin_groups")
        return self.twin_groups  # type: ignore[return-value]

    @property
    def internal(self) -> VertexSet:
        return self.quasi_leaves.complement()


def _tree_size(r: int, t: int) -> int:
    return (t ** (r + 1) - 1) // (t - 1)


def _check(r: int, t: int) -> None:
    if r < 1:
        raise GraphInputError(f"depth r must be >= 1, got {r}")
    if t < 2:
        raise GraphInputError(f"arity t must be >= 2, got {t}")


def _tree_edges(r: int, t: int) -> list[tuple[int, int]]:
    internal = (t**r - 1) // (t - 1)
    return [(i, t * i + c) for i in range(internal) for c in range(1, t + 1)]


def _tree_depths(r: int, t: int) -> list[int]:
    depths = []
    for d in range(r + 1):
        depths.extend([d] * t**d)
    return depths


def build_perfect_tree(r: int, t: int) -> tuple[Graph, FamilyMetadata]:
    _check(r, t)
    size = _tree_size(r, t)
    g = from_edge_list(size, _tree_edges(r, t))
    meta = FamilyMetadata(
        spec=FamilySpec("perfect_tree", r, t),
        quasi_leaves=VertexSet(size),
        twin_groups=(),
        copy_of={v: 0 for v in range(size)},
        depth_of=dict(enumerate(_tree_depths(r, t))),
        roots=(0,),
    )
    return g, meta


def _glue(r: int, t: int, copies: int, spec: FamilySpec) -> tuple[Graph, FamilyMetadata]:
    k = (t**r - 1) // (t - 1)
    leaves = t**r
    total = copies * k + leaves
    tree_depth = _tree_depths(r, t)

    def relabel(c: int, x: int) -> int:
        return c * k + x if x < k else copies * k + (x - k)

    edges = []
    for c in range(copies):
        edges.extend((relabel(c, a), relabel(c, b)) for a, b in _tree_edges(r, t))
    g = from_edge_list(total, edges)

    copy_of: dict = {}
    depth_of: dict = {}
    for c in range(copies):
        for x in range(k):
            copy_of[c * k + x] = c
            depth_of[c * k + x] = tree_depth[x]
    for j in range(leaves):
        copy_of[copies * k + j] = SHARED
        depth_of[copies * k + j] = r
    # children of each depth r-1 tree vertex form one twin group
    first_parent = k - t ** (r - 1)
    groups = tuple(
        tuple(relabel(0, t * p + c) for c in range(1, t + 1)) for p in range(first_parent, k)
    )
    meta = FamilyMetadata(
        spec=spec,
        quasi_leaves=VertexSet(total, range(copies * k, total)),
        twin_groups=groups,
        copy_of=copy_of,
        depth_of=depth_of,
        roots=tuple(c * k for c in range(copies)),
    )
    return g, meta


def build_glued(r: int, t: int) -> tuple[Graph, FamilyMetadata]:
    """Glued t-ary tree GT(r,t): two copies of T_{r,t} sharing their leaves."""
    _check(r, t)
    return _glue(r, t, 2, FamilySpec("glued", r, t))


def build_generalized_glued(r: int, n: int) -> tuple[Graph, FamilyMetadata]:
    """Generalized glued binary tree: ``n`` perfect binary trees on a common leaf set."""
    _check(r, 2)
    if n < 2:
        raise GraphInputError(f"number of copies n must be >= 2, got {n}")
    return _glue(r, 2, n, FamilySpec("generalized_glued", r, 2, n))


def twin_groups(meta: FamilyMetadata) -> list[tuple[int, ...]]:
    return [tuple(group) for group in meta.twin_groups]


def find_twin_groups(g: Graph, candidates: VertexSet | None = None) -> list[tuple[int, ...]]:
    """Group vertices by identical open neighbourhood (groups of size >= 2 only)."""
    pool = range(g.n) if candidates is None else candidates
    by_nbhd: dict[int, list[int]] = {}
    for v in pool:
        by_nbhd.setdefault(g.adj_mask[v], []).append(v)
    groups = [tuple(vs) for vs in by_nbhd.values() if len(vs) > 1]
    return sorted(groups)


def quasi_twin_map(meta: FamilyMetadata, src: int = 0, dst: int = 1) -> dict[int, int]:
    """Map copy ``src`` onto copy ``dst`` (and back), fixing quasi-leaves.

    The result is a permutation of all vertices; for the glued families it is a
    graph automorphism exchanging the two copies.
    """
    spec = meta.spec
    if spec.family == "perfect_tree":
        raise ValueError("perfect trees have a single copy")
    k = (spec.t**spec.r - 1) // (spec.t - 1)
    mapping = {}
    for v, c in meta.copy_of.items():
        if c == src:
            mapping[v] = v - src * k + dst * k
        elif c == dst:
            mapping[v] = v - dst * k + src * k
        else:
            mapping[v] = v
    return mapping


def to_dot(g: Graph, meta: FamilyMetadata | None = None, name: str = "G") -> str:
    """Render ``g`` as a Graphviz DOT document, annotated with family metadata."""
    lines = [f'graph "{name}" {{']
    group_of = {}
    if meta is not None:
        for idx, group in enumerate(meta.twin_groups):
            for v in group:
                group_of[v] = idx
    for v in range(g.n):
        attrs = [f'label="{v}"']
        if meta is not None:
            attrs.append(f'copy="{meta.copy_of[v]}"')
            attrs.append(f"depth={meta.depth_of[v]}")
            if v in meta.quasi_leaves:
                attrs.append('quasi_leaf="true"')
                attrs.append("shape=box")
            if v in group_of:
                attrs.append(f"twin_group={group_of[v]}")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
