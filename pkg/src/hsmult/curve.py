"""Generalized Lelong numbers of curve germs through branch valuations.

For a one-dimensional germ the Lelong number with respect to a weight tuple
``g`` is the sum over branches of ``min_j ord_t(g_j o branch)``.  Branches are
integer-exponent parameterizations; a Puiseux branch must be pre-substituted
``t -> t^m`` so that all exponents are integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInput, TruncationInsufficient
from .ideal import IdealPresentation
from .multiplicity import hs_multiplicity
from .poly import Polynomial, parse_polynomial

PARAMETER = ("t",)


def branch_order(p: Polynomial) -> int:
    """t-adic valuation of a univariate polynomial."""
    if p.is_zero():
        raise InvalidInput("the zero series has no order")
    return p.order()


@dataclass(frozen=True)
class BranchSeries:
    components: tuple  # univariate Polynomials in t, one per ambient coordinate
    truncation_order: int

    def __init__(self, components: Sequence[Polynomial], truncation_order: int):
        comps = []
        for c in components:
            if c.ambient != PARAMETER:
                raise InvalidInput(f"branch component {c} must be a polynomial in t")
            comps.append(c.truncate(truncation_order))
        if truncation_order < 1:
            raise InvalidInput("truncation order must be positive")
        if any((0,) in c.terms for c in comps):
            raise InvalidInput("branch components must vanish at t = 0")
        if all(c.is_zero() for c in comps):
            raise InvalidInput("a branch needs a nonzero component")
        object.__setattr__(self, "components", tuple(comps))
        object.__setattr__(self, "truncation_order", int(truncation_order))

    @classmethod
    def from_strings(cls, components: Sequence[str], truncation_order: int):
        return cls([parse_polynomial(c, PARAMETER) for c in components], truncation_order)

    def reparameterize(self, c):
        """Substitute ``t -> c t`` (``c`` a nonzero rational)."""
        if not c:
            raise InvalidInput("reparameterization needs a nonzero scalar")
        ct = Polynomial({(1,): c}, PARAMETER)
        return BranchSeries([p.compose([ct]) for p in self.components], self.truncation_order)


@dataclass(frozen=True)
class CurveGerm:
    branches: tuple
    ambient: tuple

    def __init__(self, branches: Sequence[BranchSeries], ambient: Sequence[str]):
        ambient = tuple(ambient)
        if not branches:
            raise InvalidInput("a curve germ needs at least one branch")
        for b in branches:
            if len(b.components) != len(ambient):
                raise InvalidInput("each branch needs one component per ambient variable")
        object.__setattr__(self, "branches", tuple(branches))
        object.__setattr__(self, "ambient", ambient)

    @classmethod
    def from_json(cls, obj):
        try:
            ambient = obj["ambient"]
            trunc = int(obj.get("truncation", 24))
            branches = [BranchSeries.from_strings(b, trunc) for b in obj["branches"]]
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"germ JSON needs 'ambient' and 'branches': {exc}") from None
        return cls(branches, ambient)

    def to_json(self):
        trunc = max(b.truncation_order for b in self.branches)
        return {"ambient": list(self.ambient), "truncation": trunc,
                "branches": [[str(c) for c in b.components] for b in self.branches]}


def _weights(g):
    if isinstance(g, IdealPresentation):
        return list(g.generators)
    g = list(g)
    if not g:
        raise InvalidInput("a weight tuple needs at least one component")
    return g


def pullback(f: Polynomial, b: BranchSeries) -> Polynomial:
    return f.compose(list(b.components), truncate=b.truncation_order)


def pullback_order(g, b: BranchSeries) -> int:
    """``min_j ord_t(g_j o b)``, certified below the truncation order."""
    orders = []
    for f in _weights(g):
        comp = pullback(f, b)
        if not comp.is_zero():
            orders.append(branch_order(comp))
    if not orders:
        raise TruncationInsufficient(
            f"every weight vanishes to order {b.truncation_order}; supply a longer truncation")
    return min(orders)


def curve_lelong_number(Y: CurveGerm, g) -> int:
    """Sum over branches of the pullback order of the weight tuple."""
    weights = _weights(g)
    for f in weights:
        if f.ambient != Y.ambient:
            raise InvalidInput("weights and germ must share one ambient")
    return sum(pullback_order(weights, b) for b in Y.branches)


@dataclass
class CurveCheck:
    lelong: int
    hs: int
    equal: bool
    report: object = None

    def to_json(self):
        out = {"lelong": self.lelong, "hs": self.hs, "equal": self.equal}
        if self.report is not None:
            out["certificate"] = self.report.to_json()
        return out


def verify_curve_lelong(Y: CurveGerm, J: IdealPresentation, U: IdealPresentation) -> CurveCheck:
    """Compare the Lelong number of ``Y`` for the generators of ``U`` with ``e(U)`` in ``O/J``."""
    if J.ambient != Y.ambient or U.ambient != Y.ambient:
        raise InvalidInput("J and U must use the ambient of the germ")
    for f in J.generators:
        for b in Y.branches:
            if not pullback(f, b).is_zero():
                raise InvalidInput(f"J does not vanish on germ: {f} pulls back nonzero")
    lelong = curve_lelong_number(Y, U)
    report = hs_multiplicity(U, J, n=1)
    return CurveCheck(lelong, report.value, lelong == report.value, report)


# name used by the public build contract
verify_thm13_curve = verify_curve_lelong
