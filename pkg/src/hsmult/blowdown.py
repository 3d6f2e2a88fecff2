"""Multiplicities of Grauert blow-downs over compact Riemann surfaces.

For an ample line bundle ``L`` on a curve, the blow-down of ``L*`` has
multiplicity ``k0^2 deg L + sum_j lambda_j``, where ``lambda_j`` is the
multiplicity of the monomial ideal ``(z^{d_{j,k}} w^{k-k0} : k0 <= k <= k_j)``.
Inputs are bundle data, not curve equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInput
from .monomial import MonomialIdeal, newton_multiplicity_2d


@dataclass(frozen=True)
class BasePointDatum:
    """Vanishing orders ``d_seq[k - k0]`` of sections of ``L^k`` at one base point."""

    k_j: int
    d_seq: tuple

    def __init__(self, k_j: int, d_seq: Sequence[int]):
        object.__setattr__(self, "k_j", int(k_j))
        object.__setattr__(self, "d_seq", tuple(int(d) for d in d_seq))

    def validate(self, k0):
        if len(self.d_seq) != self.k_j - k0 + 1:
            raise InvalidInput(
                f"d_seq has length {len(self.d_seq)}, expected k_j - k0 + 1 = {self.k_j - k0 + 1}")
        if any(d < 0 for d in self.d_seq):
            raise InvalidInput("vanishing orders must be natural numbers")
        if self.d_seq[0] < 1:
            raise InvalidInput("a base point of L^k0 needs d_{j,k0} >= 1")
        if self.d_seq[-1] != 0:
            raise InvalidInput("L^k_j generates the point, so d_{j,k_j} must be 0")

    def to_json(self):
        return {"kj": self.k_j, "d_seq": list(self.d_seq)}


@dataclass(frozen=True)
class LineBundleDatum:
    k0: int
    degree: int
    base_points: tuple = ()

    def __init__(self, k0: int, degree: int, base_points: Iterable[BasePointDatum] = ()):
        object.__setattr__(self, "k0", int(k0))
        object.__setattr__(self, "degree", int(degree))
        object.__setattr__(self, "base_points", tuple(base_points))
        if self.k0 < 1:
            raise InvalidInput("k0 must be a positive integer")
        if self.degree < 1:
            raise InvalidInput("an ample line bundle has positive degree")
        for b in self.base_points:
            b.validate(self.k0)

    @classmethod
    def from_json(cls, obj):
        try:
            bps = [BasePointDatum(b["kj"], b["d_seq"]) for b in obj.get("base_points", [])]
            return cls(obj["k0"], obj["degree"], bps)
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"line bundle JSON needs 'k0' and 'degree': {exc}") from None

    def to_json(self):
        return {"k0": self.k0, "degree": self.degree,
                "base_points": [b.to_json() for b in self.base_points]}


def lambda_ideal(b: BasePointDatum, k0: int) -> MonomialIdeal:
    b.validate(k0)
    return MonomialIdeal([(d, k - k0) for k, d in zip(range(k0, b.k_j + 1), b.d_seq)], 2)


def lambda_multiplicity(b: BasePointDatum, k0: int) -> int:
    """Multiplicity of ``(z^{d_k} w^{k-k0})`` at the origin of the plane."""
    return newton_multiplicity_2d(lambda_ideal(b, k0))


def rs_blowdown_multiplicity(L: LineBundleDatum) -> int:
    """``k0^2 deg L + sum of lambda_j`` over base points."""
    return L.k0 ** 2 * L.degree + sum(lambda_multiplicity(b, L.k0) for b in L.base_points)


@dataclass(frozen=True)
class Semigroup:
    """Weierstrass semigroup at a point, given by its finite gap set."""

    gaps: frozenset

    def __init__(self, gaps: Iterable[int]):
        gaps = frozenset(int(g) for g in gaps)
        if any(g < 1 for g in gaps):
            raise InvalidInput("gaps are positive integers")
        top = max(gaps, default=0)
        nongaps = [s for s in range(1, top + 1) if s not in gaps]
        for a in nongaps:
            for b in nongaps:
                if a + b in gaps:
                    raise InvalidInput(f"nongaps {a} and {b} sum to the gap {a + b}")
        object.__setattr__(self, "gaps", gaps)

    @property
    def genus(self):
        return len(self.gaps)

    def contains(self, s):
        return s >= 0 and s not in self.gaps

    def to_json(self):
        return {"gaps": sorted(self.gaps)}


def first_nongap(S: Semigroup) -> int:
    k = 1
    while k in S.gaps:
        k += 1
    return k


def dseq_from_semigroup(S: Semigroup) -> BasePointDatum | None:
    """Base-point datum of ``L_P`` (k0 = 1), or ``None`` when ``L_P`` is generated."""
    kappa = first_nongap(S)
    if kappa == 1:
        return None
    d_seq = []
    for k in range(1, kappa + 1):
        largest = max(s for s in range(k + 1) if S.contains(s))
        d_seq.append(k - largest)
    return BasePointDatum(kappa, d_seq)


def line_bundle_of_point(S: Semigroup) -> LineBundleDatum:
    """``L_P`` as bundle data: degree 1, k0 = 1, one base point unless P is not one."""
    b = dseq_from_semigroup(S)
    return LineBundleDatum(1, 1, [] if b is None else [b])


@dataclass(frozen=True)
class BoundsInput:
    k0: int
    k1: int
    p: int
    n: int
    vol: Fraction
    vol_B: Fraction

    def __init__(self, k0, k1, p, n, vol, vol_B):
        for name, v in (("k0", k0), ("k1", k1), ("p", p), ("n", n)):
            object.__setattr__(self, name, int(v))
        object.__setattr__(self, "vol", Fraction(vol))
        object.__setattr__(self, "vol_B", Fraction(vol_B))
        if not 1 <= self.k0 <= self.k1:
            raise InvalidInput("need 1 <= k0 <= k1")
        if not 1 <= self.p <= self.n:
            raise InvalidInput("need 1 <= p <= n")
        if self.vol <= 0:
            raise InvalidInput("the volume of an ample bundle is positive")
        if self.vol_B < 0:
            raise InvalidInput("vol_B is nonnegative")


@dataclass
class VolumeControl:
    bound: Fraction
    slack: Fraction
    passed: bool

    def to_json(self):
        return {"bound": self.bound, "slack": self.slack, "pass": self.passed}


def vol_control_check(b: BoundsInput) -> VolumeControl:
    """``vol_B <= (k0^p k1 - k0^{p+1}) vol``."""
    bound = (b.k0 ** b.p * b.k1 - b.k0 ** (b.p + 1)) * b.vol
    return VolumeControl(bound, bound - b.vol_B, b.vol_B <= bound)


def mult_bounds(b: BoundsInput) -> tuple:
    """Lower and upper bounds for the blow-down multiplicity."""
    n, p, k0, k1 = b.n, b.p, b.k0, b.k1
    lower = k0 ** (n + 1) * b.vol + (n + 1 - p) * k0 ** (n - p) * b.vol_B
    upper = k0 ** (p + 1) * k1 ** (n - p) * b.vol + k1 ** (n - p) * b.vol_B
    return lower, upper
