"""Closed-form values, counts and bounds for the glued tree families.

Nothing is known (and nothing is extrapolated) for depth ``r = 1`` or for
perfect trees; those predictions come back as unknown.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import FamilySpec
from .graph import GraphInputError
from .visibility import VariantKind as K


@dataclass(frozen=True)
class Prediction:
    value: int | None = None
    count: int | None = None
    lower_bound: int | None = None
    source: str = "unknown"

    @property
    def exact(self) -> bool:
        return self.value is not None

    def as_dict(self) -> dict:
        return {"value": self.value, "count": self.count, "lower_bound": self.lower_bound, "source": self.source}


UNKNOWN = Prediction()


def ggt_gp_lower_bound(r: int, n: int) -> int:
    """Size of ``(L minus a twin pair) + N(u)`` in the n-copy glued binary tree."""
    if r < 2 or n < 2:
        raise GraphInputError("bound needs r >= 2 and n >= 2")
    return 2**r + n - 2


def ggt_mu_lower_bound(r: int, n: int) -> int | None:
    """Mutual-visibility lower bound for many copies; None below its threshold on n."""
    if r < 2 or n < 2:
        raise GraphInputError("bound needs r >= 2 and n >= 2")
    if n < 2 ** (r - 2) * (2 ** (r - 1) - 1):
        return None
    return n + 2 ** (2 * r - 3) - 2 ** (r - 2)


def _glued(r: int, t: int, kind: K) -> Prediction:
    tag = "GT(r)" if t == 2 else "GT(r,t)"
    if kind is K.MV:
        return Prediction(t**r + 1, t ** (r + 1) - 2, source=f"{tag} mu theorem")
    if kind is K.OUTER_MV:
        return Prediction(t**r, 1, source=f"{tag} outer mu theorem")
    if kind in (K.DUAL_MV, K.TOTAL_MV):
        return Prediction(t ** (r - 1) * (t - 1), t ** (t ** (r - 1)), source=f"{tag} dual/total mu theorem")
    if kind is K.GP:
        return Prediction(t**r, t ** (r - 1) + 1, source=f"{tag} gp theorem")
    if kind is K.OUTER_GP:
        return Prediction(t**r, 1, source=f"{tag} outer gp theorem")
    # value 0: the empty set is the single maximum set
    return Prediction(0, 1, source=f"{tag} dual/total gp theorem (empty set)")


def _generalized(r: int, n: int, kind: K) -> Prediction:
    if kind in (K.DUAL_MV, K.TOTAL_MV):
        return Prediction(2 ** (r - 1), 2 ** (2 ** (r - 1)), source="GT_r^(n) dual/total mu proposition")
    if kind in (K.DUAL_GP, K.TOTAL_GP):
        return Prediction(0, 1, source="GT_r^(n) dual/total gp proposition (empty set)")
    if kind in (K.OUTER_MV, K.OUTER_GP):
        return Prediction(2**r, 1, source="GT_r^(n) outer theorem")
    gp_bound = ggt_gp_lower_bound(r, n)
    if kind is K.GP:
        return Prediction(lower_bound=gp_bound, source="GT_r^(n) gp lower bound (conjectured exact)")
    mu_bound = ggt_mu_lower_bound(r, n)
    if mu_bound is not None and mu_bound >= gp_bound:
        return Prediction(lower_bound=mu_bound, source="GT_r^(n) mu lower bound")
    # gp <= mu, so the gp construction bounds mu too
    return Prediction(lower_bound=gp_bound, source="GT_r^(n) gp lower bound via gp <= mu")


def predict(spec: FamilySpec, kind: K) -> Prediction:
    if not isinstance(spec, FamilySpec):
        raise GraphInputError("predict expects a FamilySpec")
    if spec.family == "perfect_tree" or spec.r < 2:
        return UNKNOWN
    if spec.family == "glued":
        return _glued(spec.r, spec.t, kind)
    if spec.n == 2:
        return _glued(spec.r, 2, kind)
    return _generalized(spec.r, spec.n, kind)
