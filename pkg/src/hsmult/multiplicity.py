"""Hilbert-Samuel and mixed multiplicities by exact finite differences.

The colength function ``F(t) = dim O/(U_1^{t_1} ... U_k^{t_k} + J)`` agrees,
for large ``t``, with a polynomial

    P(t) = sum_{|d| = n} e(U^[d]) / (d_1! ... d_k!) * t^d + (lower degree)

so the mixed difference ``Delta^{d_1}_{t_1} ... Delta^{d_k}_{t_k}`` of ``F``
is the constant ``e(U^[d])`` once every sample point lies in the polynomial
regime.  There is no effective bound for that regime, so a value is only
accepted after it repeats at several consecutive base points.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import InternalError, InvalidInput, NotOriginSupported, StabilizationError
from .ideal import (IdealPresentation, colength, ideal_power_product, is_origin_supported)
from .monomial import MonomialIdeal, staircase_colength
from .poly import Polynomial

log = logging.getLogger(__name__)

T_BUDGET = {"general": 12, "monomial": 60}
DEFAULT_CONFIRMATIONS = 3
MIXED_START = 2
HS_START = 1


@dataclass(frozen=True)
class MultiplicityReport:
    """A certified multiplicity together with the samples that produced it."""

    value: int
    dimension: int
    degrees: tuple
    base_point: tuple
    samples: tuple  # ((t_1, ..., t_k), colength), sorted
    backend: str
    confirmations: int = DEFAULT_CONFIRMATIONS

    def sample_map(self):
        return dict(self.samples)

    def to_json(self):
        return {
            "value": self.value,
            "dimension": self.dimension,
            "degrees": list(self.degrees),
            "base_point": list(self.base_point),
            "confirmations": self.confirmations,
            "backend": self.backend,
            "samples": [{"t": list(t), "colength": c} for t, c in self.samples],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            value=obj["value"],
            dimension=obj["dimension"],
            degrees=tuple(obj["degrees"]),
            base_point=tuple(obj["base_point"]),
            samples=tuple((tuple(s["t"]), s["colength"]) for s in obj["samples"]),
            backend=obj["backend"],
            confirmations=obj.get("confirmations", DEFAULT_CONFIRMATIONS),
        )


def mixed_difference(f: Callable, base: Sequence[int], degrees: Sequence[int]):
    """Apply ``prod_i Delta_{t_i}^{d_i}`` to ``f`` at ``base``."""
    total = 0
    for eps in itertools.product(*(range(d + 1) for d in degrees)):
        sign = (-1) ** (sum(degrees) - sum(eps))
        weight = math.prod(math.comb(d, e) for d, e in zip(degrees, eps))
        total += sign * weight * f(tuple(b + e for b, e in zip(base, eps)))
    return total


# ---------------------------------------------------------------------------
# self-test of the extraction identity


def _shift(p: Polynomial, i: int):
    ambient = p.ambient
    values = [Polynomial.variable(v, ambient) for v in ambient]
    values[i] = values[i] + 1
    return p.compose(values)


def symbolic_mixed_difference(p: Polynomial, degrees: Sequence[int]) -> Polynomial:
    """``prod_i Delta_{t_i}^{d_i} p`` computed on the polynomial itself."""
    for i, d in enumerate(degrees):
        for _ in range(d):
            p = _shift(p, i) - p
    return p


def random_hilbert_polynomial(k: int, n: int, rng: random.Random, span: int = 9) -> Polynomial:
    """Random rational polynomial in ``t1..tk`` of total degree exactly ``n``."""
    ambient = [f"t{i + 1}" for i in range(k)]
    terms = {}
    for deg in range(n + 1):
        for exps in _compositions(deg, k):
            c = Fraction(rng.randint(-span, span), rng.randint(1, 6))
            if deg == n and not c:
                c = Fraction(1)
            terms[exps] = c
    return Polynomial(terms, ambient)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def verify_extraction_identity(k: int, n: int, rng: random.Random | None = None) -> bool:
    """Check ``Delta^d P = d! * [t^d] P`` for every ``|d| = n`` on a random ``P``.

    Both the symbolic operator and :func:`mixed_difference` (the routine the
    engine uses on colength samples) are checked.
    """
    rng = rng or random.Random(20240501 + 31 * k + n)
    p = random_hilbert_polynomial(k, n, rng)
    ambient = p.ambient

    def evaluate(t):
        point = [Polynomial.constant(v, ambient) for v in t]
        val = p.compose(point)
        return val.terms.get((0,) * k, Fraction(0))

    for d in _compositions(n, k):
        expected = math.prod(math.factorial(x) for x in d) * p.terms.get(d, Fraction(0))
        sym = symbolic_mixed_difference(p, d)
        if sym != Polynomial.constant(expected, ambient):
            return False
        base = tuple(rng.randint(-5, 8) for _ in range(k))
        if mixed_difference(evaluate, base, d) != expected:
            return False
    return True


_SELF_TESTED = set()


def _ensure_self_test(k, n):
    key = (k, n)
    if key in _SELF_TESTED:
        return
    if not verify_extraction_identity(k, n):
        raise InternalError(f"mixed-difference identity failed for k={k}, n={n}")
    _SELF_TESTED.add(key)


# ---------------------------------------------------------------------------
# colength grids


class ColengthGrid:
    """Memoized ``t -> colength(prod U_i^{t_i} (+ J))``."""

    def __init__(self, ideals, quotient_J=None, backend="auto"):
        ideals = list(ideals)
        if not ideals:
            raise InvalidInput("need at least one ideal")
        ambient = ideals[0].ambient
        if any(u.ambient != ambient for u in ideals):
            raise InvalidInput("all ideals must share one ambient")
        if quotient_J is not None and quotient_J.ambient != ambient:
            raise InvalidInput("quotient ideal is over a different ambient")
        monomial_ok = quotient_J is None and all(u.is_monomial() for u in ideals)
        if backend == "auto":
            backend = "monomial" if monomial_ok else "general"
        if backend not in T_BUDGET:
            raise InvalidInput(f"unknown backend {backend!r}")
        if backend == "monomial" and not monomial_ok:
            raise InvalidInput("the monomial backend needs monomial ideals and no quotient")
        self.ideals = ideals
        self.quotient_J = quotient_J
        self.backend = backend
        self.ambient = ambient
        self.values = {}
        if backend == "monomial":
            self._mono = [MonomialIdeal.from_ideal(u) for u in ideals]
            self._powers = [[MonomialIdeal([(0,) * len(ambient)])] for _ in ideals]

    def _mono_power(self, i, t):
        cache = self._powers[i]
        while len(cache) <= t:
            cache.append(cache[-1] * self._mono[i])
        return cache[t]

    def __call__(self, t):
        t = tuple(t)
        if t not in self.values:
            if any(x < 0 for x in t):
                raise InvalidInput(f"negative exponent in {t}")
            if self.backend == "monomial":
                prod = MonomialIdeal([(0,) * len(self.ambient)])
                for i, x in enumerate(t):
                    prod = prod * self._mono_power(i, x)
                self.values[t] = staircase_colength(prod) if any(t) else 0
            else:
                product = ideal_power_product(self.ideals, t)
                self.values[t] = colength(product, self.quotient_J)
        return self.values[t]

    def samples(self):
        return tuple(sorted(self.values.items()))


def _check_support(ideals, quotient_J):
    for u in ideals:
        if not is_origin_supported(u, quotient_J):
            raise NotOriginSupported(f"ideal {u} is not primary to the origin")


def _stabilize(grid, degrees, start, t_budget, confirmations, n):
    k = len(degrees)
    step = 0
    while True:
        base = tuple([start + step] * k)
        last = tuple(b + d + confirmations - 1 for b, d in zip(base, degrees))
        if max(last) > t_budget:
            raise StabilizationError(
                f"differences of order {tuple(degrees)} did not stabilize with t <= {t_budget}")
        values = [mixed_difference(grid, tuple(b + j for b in base), degrees)
                  for j in range(confirmations)]
        if len(set(values)) == 1:
            return base, values[0]
        step += 1


def _report(grid, degrees, n, start, t_budget, confirmations):
    _ensure_self_test(len(degrees), n)
    t_budget = T_BUDGET[grid.backend] if t_budget is None else t_budget
    base, value = _stabilize(grid, degrees, start, t_budget, confirmations, n)
    if value < 1:
        raise InternalError(f"stabilized multiplicity {value} is not positive")
    return MultiplicityReport(value, n, tuple(degrees), base, grid.samples(), grid.backend,
                              confirmations)


def infer_dimension(quotient_J: IdealPresentation | None, ambient: Sequence[str],
                    t_budget: int = T_BUDGET["general"],
                    confirmations: int = DEFAULT_CONFIRMATIONS) -> int:
    """Growth degree of ``t -> colength(M^t (+ J))``.

    The smallest ``n`` whose ``(n+1)``-th differences vanish on the last
    ``confirmations`` sample positions.
    """
    ambient = tuple(ambient)
    grid = ColengthGrid([IdealPresentation.maximal(ambient)], quotient_J)
    for t in range(1, t_budget + 1):
        grid((t,))
        for n in range(len(ambient) + 1):
            first = t - (n + 1) - confirmations + 1
            if first < 1:
                break
            if all(mixed_difference(grid, (s,), (n + 1,)) == 0
                   for s in range(first, first + confirmations)):
                return n
    raise StabilizationError(f"dimension not detected with t <= {t_budget}")


def _dimension(ideals, quotient_J, n):
    ambient = ideals[0].ambient
    if n is None:
        n = len(ambient) if quotient_J is None else infer_dimension(quotient_J, ambient)
    return n


def hs_multiplicity(U: IdealPresentation, quotient_J: IdealPresentation | None = None,
                    n: int | None = None, backend: str = "auto", t_budget: int | None = None,
                    confirmations: int = DEFAULT_CONFIRMATIONS) -> MultiplicityReport:
    """Hilbert-Samuel multiplicity e(U) in ``O/J``, localized at the origin.

    >>> U = IdealPresentation.from_strings(["x^2", "y^3"], ["x", "y"])
    >>> hs_multiplicity(U).value
    6
    """
    _check_support([U], quotient_J)
    n = _dimension([U], quotient_J, n)
    grid = ColengthGrid([U], quotient_J, backend)
    return _report(grid, (n,), n, HS_START, t_budget, confirmations)


def mixed_multiplicity(U: Sequence[IdealPresentation], d: Sequence[int],
                       quotient_J: IdealPresentation | None = None, backend: str = "auto",
                       t_budget: int | None = None, confirmations: int = DEFAULT_CONFIRMATIONS,
                       n: int | None = None, start: int = MIXED_START) -> MultiplicityReport:
    """Mixed multiplicity e(U_1^[d_1]; ...; U_k^[d_k])."""
    U = list(U)
    d = tuple(int(x) for x in d)
    if len(U) != len(d) or not U:
        raise InvalidInput("need one degree per ideal")
    if any(x < 0 for x in d):
        raise InvalidInput("degrees must be natural numbers")
    n = _dimension(U, quotient_J, n)
    if sum(d) != n:
        raise InvalidInput(f"degrees {d} must sum to the dimension {n}")
    _check_support(U, quotient_J)
    grid = ColengthGrid(U, quotient_J, backend)
    return _report(grid, d, n, start, t_budget, confirmations)


def replay(report: MultiplicityReport) -> int:
    """Recompute a report's value from its recorded samples alone."""
    samples = report.sample_map()

    def lookup(t):
        if t not in samples:
            raise InvalidInput(f"certificate is missing the sample at t={t}")
        return samples[t]

    values = {mixed_difference(lookup, tuple(b + j for b in report.base_point), report.degrees)
              for j in range(report.confirmations)}
    if len(values) != 1:
        raise InvalidInput(f"certificate differences disagree: {sorted(values)}")
    return values.pop()


def multinomial(n, parts):
    return math.factorial(n) // math.prod(math.factorial(p) for p in parts)


@dataclass
class PolarizationReport:
    lhs: int
    rhs: int
    equal: bool
    terms: list = field(default_factory=list)  # (d, e(U^[d]))

    def to_json(self):
        return {"lhs": self.lhs, "rhs": self.rhs, "equal": self.equal,
                "terms": [{"degrees": list(d), "mixed": e} for d, e in self.terms]}


def polarization_check(U: Sequence[IdealPresentation], p: Sequence[int],
                       quotient_J: IdealPresentation | None = None,
                       backend: str = "auto") -> PolarizationReport:
    """Compare ``e(prod U_i^{p_i})`` with its expansion in mixed multiplicities."""
    U = list(U)
    p = [int(x) for x in p]
    if len(U) != len(p) or any(x < 1 for x in p):
        raise InvalidInput("need one positive power per ideal")
    n = _dimension(U, quotient_J, None)
    if len(U) != n:
        raise InvalidInput(f"polarization needs exactly n = {n} ideals")
    lhs = hs_multiplicity(ideal_power_product(U, p), quotient_J, n=n, backend=backend).value
    rhs = 0
    terms = []
    for d in _compositions(n, n):
        e = mixed_multiplicity(U, d, quotient_J, backend=backend, n=n).value
        terms.append((d, e))
        rhs += multinomial(n, d) * e * math.prod(pi ** di for pi, di in zip(p, d))
    return PolarizationReport(lhs, rhs, lhs == rhs, terms)


@dataclass
class ReesSharpReport:
    chain: list  # e_i = e(U^[i]; V^[n-i]), i = 0..n
    inequalities: list  # (i, e_i^2, e_{i-1} e_{i+1}, holds)
    passed: bool

    def to_json(self):
        return {"chain": self.chain, "pass": self.passed,
                "inequalities": [{"i": i, "square": sq, "product": pr, "holds": ok}
                                 for i, sq, pr, ok in self.inequalities]}


def rees_sharp_check(U: IdealPresentation, V: IdealPresentation, n: int | None = None,
                     quotient_J: IdealPresentation | None = None,
                     backend: str = "auto") -> ReesSharpReport:
    """Log-convexity ``e_i^2 <= e_{i-1} e_{i+1}`` of the mixed chain of ``U`` and ``V``."""
    n = _dimension([U], quotient_J, n)
    if n < 2:
        raise InvalidInput("the inequalities need dimension at least 2")
    chain = [mixed_multiplicity([U, V], [i, n - i], quotient_J, backend=backend, n=n).value
             for i in range(n + 1)]
    ineq = []
    for i in range(1, n):
        sq, pr = chain[i] ** 2, chain[i - 1] * chain[i + 1]
        ineq.append((i, sq, pr, sq <= pr))
    return ReesSharpReport(chain, ineq, all(x[3] for x in ineq))
