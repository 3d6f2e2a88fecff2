"""Gröbner bases, normal forms and colengths of polynomial ideals.

Local colengths are computed in the polynomial ring.  That is only valid
when the ideal is supported at the origin, which :func:`is_origin_supported`
certifies.
"""

from __future__ import annotations

import heapq
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import BudgetExceeded, InfiniteColength, InvalidInput
from .poly import (DEGREVLEX, Polynomial, TermOrder, monomial_div, monomial_divides,
                   monomial_lcm, monomial_mul, parse_polynomial)

log = logging.getLogger(__name__)

DEFAULT_PAIR_BUDGET = 200_000
DEFAULT_GENERATOR_BUDGET = 1_000_000
DEFAULT_SUPPORT_BOUND = 10_000


@dataclass(frozen=True)
class IdealPresentation:
    generators: tuple
    ambient: tuple

    def __init__(self, generators: Sequence[Polynomial], ambient: Sequence[str] | None = None):
        gens = list(generators)
        if ambient is None:
            if not gens:
                raise InvalidInput("an ideal needs at least one generator")
            ambient = gens[0].ambient
        ambient = tuple(ambient)
        for g in gens:
            if g.ambient != ambient:
                raise InvalidInput(f"generator {g} is not over ambient {ambient}")
        kept = []
        seen = set()
        for g in gens:
            if not g.is_zero() and g not in seen:
                seen.add(g)
                kept.append(g)
        if not kept:
            raise InvalidInput("an ideal needs at least one nonzero generator")
        object.__setattr__(self, "generators", tuple(kept))
        object.__setattr__(self, "ambient", ambient)

    @classmethod
    def from_strings(cls, generators: Sequence[str], ambient: Sequence[str]):
        return cls([parse_polynomial(s, ambient) for s in generators], ambient)

    @classmethod
    def from_json(cls, obj):
        try:
            ambient = obj["ambient"]
            gens = obj["generators"]
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"ideal JSON needs 'ambient' and 'generators': {exc}") from None
        return cls.from_strings([str(g) for g in gens], ambient)

    def to_json(self):
        return {"ambient": list(self.ambient), "generators": [str(g) for g in self.generators]}

    @classmethod
    def maximal(cls, ambient):
        return cls([Polynomial.variable(v, ambient) for v in ambient], ambient)

    def is_monomial(self):
        return all(g.is_monomial() for g in self.generators)

    def __add__(self, other):
        if other is None:
            return self
        if other.ambient != self.ambient:
            raise InvalidInput("ambient mismatch in ideal sum")
        return IdealPresentation(self.generators + other.generators, self.ambient)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class GroebnerBasis:
    basis: tuple
    order: TermOrder = DEGREVLEX
    leading_monomials: tuple = field(default=())

    @property
    def ambient(self):
        return self.basis[0].ambient

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def is_unit(self):
        return any(sum(m) == 0 for m in self.leading_monomials)


# ---------------------------------------------------------------------------
# reduction on raw term dicts


def _lead(terms, key):
    return max(terms, key=key)


def _reduce_full(terms, basis, key):
    """Fully reduce ``terms`` by ``basis``: list of (lm, lc, terms)."""
    p = dict(terms)
    rem = {}
    while p:
        lm = _lead(p, key)
        lc = p[lm]
        for glm, glc, gterms in basis:
            if monomial_divides(glm, lm):
                q = monomial_div(lm, glm)
                f = lc / glc
                for m, c in gterms.items():
                    mm = monomial_mul(m, q)
                    s = p.get(mm, 0) - f * c
                    if s:
                        p[mm] = s
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[lm] = lc
            del p[lm]
    return rem


def _spoly(a, b, key):
    alm, alc, aterms = a
    blm, blc, bterms = b
    lcm = monomial_lcm(alm, blm)
    qa = monomial_div(lcm, alm)
    qb = monomial_div(lcm, blm)
    out = {}
    for m, c in aterms.items():
        out[monomial_mul(m, qa)] = c / alc
    for m, c in bterms.items():
        mm = monomial_mul(m, qb)
        s = out.get(mm, 0) - c / blc
        if s:
            out[mm] = s
        else:
            out.pop(mm, None)
    return out


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(polys, order: TermOrder = DEGREVLEX, pair_budget: int = DEFAULT_PAIR_BUDGET):
    """Reduced Gröbner basis of raw term dicts.

    Pairs are processed smallest lcm first; the Gebauer-Möller criteria
    prune pairs on insertion.  Returns a list of ``(lm, terms)`` sorted by
    decreasing leading monomial, each monic.
    """
    key = order.key
    basis = []  # (lm, lc, terms)
    active = []
    pairs = []  # heap of (key(lcm), tiebreak, i, j, lcm)
    counter = itertools.count()

    def update(h):
        hlm = h[0]
        k = len(basis)
        live = [i for i in range(k) if active[i]]
        lcms = {i: monomial_lcm(basis[i][0], hlm) for i in live}
        # criterion M: drop (i, h) when another new pair has a strictly smaller lcm dividing it
        by_lcm = {}
        for i in live:
            if any(j != i and lcms[j] != lcms[i] and monomial_divides(lcms[j], lcms[i])
                   for j in live):
                continue
            by_lcm.setdefault(lcms[i], []).append(i)
        fresh = []
        for lcm, idxs in by_lcm.items():
            # criterion F keeps one pair per lcm; a coprime representative kills the group
            if any(_coprime(basis[i][0], hlm) for i in idxs):
                continue
            fresh.append((lcm, idxs[0]))
        # criterion B on existing pairs
        survivors = [
            e for e in pairs
            if not (monomial_divides(hlm, e[4])
                    and monomial_lcm(basis[e[2]][0], hlm) != e[4]
                    and monomial_lcm(basis[e[3]][0], hlm) != e[4])
        ]
        pairs[:] = survivors
        heapq.heapify(pairs)
        for i in live:
            if monomial_divides(hlm, basis[i][0]):
                active[i] = False
        basis.append(h)
        active.append(True)
        for lcm, i in fresh:
            heapq.heappush(pairs, (key(lcm), next(counter), i, k, lcm))

    def reducers():
        return [g for g, a in zip(basis, active) if a]

    for terms in sorted((t for t in polys if t), key=lambda t: key(_lead(t, key))):
        r = _reduce_full(terms, reducers(), key)
        if r:
            lm = _lead(r, key)
            update((lm, r[lm], r))

    done = 0
    while pairs:
        _, _, i, j, _ = heapq.heappop(pairs)
        done += 1
        if done > pair_budget:
            raise BudgetExceeded(f"Gröbner pair budget of {pair_budget} reductions exceeded")
        s = _spoly(basis[i], basis[j], key)
        if not s:
            continue
        r = _reduce_full(s, reducers(), key)
        if r:
            lm = _lead(r, key)
            update((lm, r[lm], r))

    minimal = []
    for g in reducers():
        if not any(monomial_divides(h[0], g[0]) for h in minimal):
            minimal = [h for h in minimal if not monomial_divides(g[0], h[0])]
            minimal.append(g)
    out = []
    for g in minimal:
        others = [h for h in minimal if h is not g]
        tail = {m: c for m, c in g[2].items() if m != g[0]}
        rest = _reduce_full(tail, others, key)
        terms = {g[0]: Fraction(1)}
        for m, c in rest.items():
            terms[m] = c / g[1]
        out.append((g[0], terms))
    out.sort(key=lambda e: key(e[0]), reverse=True)
    return out


def groebner_basis(ideal: IdealPresentation, order: TermOrder = DEGREVLEX,
                   pair_budget: int = DEFAULT_PAIR_BUDGET) -> GroebnerBasis:
    """Return the unique reduced Gröbner basis of ``ideal`` for ``order``."""
    return _groebner_cached(ideal.generators, ideal.ambient, order, pair_budget)


@lru_cache(maxsize=4096)
def _groebner_cached(generators, ambient, order, pair_budget):
    raw = buchberger([dict(g.terms) for g in generators], order, pair_budget)
    basis = tuple(Polynomial(terms, ambient) for _, terms in raw)
    return GroebnerBasis(basis, order, tuple(lm for lm, _ in raw))


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    key = gb.order.key
    data = [(lm, Fraction(1), dict(g.terms)) for lm, g in zip(gb.leading_monomials, gb.basis)]
    return Polynomial(_reduce_full(dict(p.terms), data, key), p.ambient)


def _combined(ideal, quotient_J):
    return ideal if quotient_J is None else ideal + quotient_J


def standard_monomials(gb: GroebnerBasis, limit: int | None = None):
    """Enumerate the monomials outside the leading-term ideal.

    Raises :class:`InfiniteColength` unless every variable has a pure power
    among the leading monomials.
    """
    lms = gb.leading_monomials
    nvars = len(gb.ambient)
    for v in range(nvars):
        if not any(m[v] > 0 and sum(m) == m[v] for m in lms) and not gb.is_unit():
            raise InfiniteColength(
                f"variable {gb.ambient[v]!r} has no pure power in the leading-term ideal")
    if gb.is_unit():
        return []
    # breadth-first walk of the order ideal of standard monomials
    start = (0,) * nvars
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for v in range(nvars):
                mm = m[:v] + (m[v] + 1,) + m[v + 1:]
                if mm in seen or any(monomial_divides(lm, mm) for lm in lms):
                    continue
                seen.add(mm)
                nxt.append(mm)
        frontier = nxt
        if limit is not None and len(seen) > limit:
            raise BudgetExceeded(f"more than {limit} standard monomials")
    return sorted(seen, key=DEGREVLEX.key)


def colength(ideal: IdealPresentation, quotient_J: IdealPresentation | None = None,
             pair_budget: int = DEFAULT_PAIR_BUDGET) -> int:
    """Vector-space dimension of ``k[x]/(I + J)``, counted by standard monomials."""
    gb = groebner_basis(_combined(ideal, quotient_J), pair_budget=pair_budget)
    return len(standard_monomials(gb))


def is_origin_supported(ideal: IdealPresentation, quotient_J: IdealPresentation | None = None,
                        bound: int = DEFAULT_SUPPORT_BOUND) -> bool:
    """True iff every variable is nilpotent modulo ``I (+ J)``.

    A variable nilpotent in a quotient of dimension ``m`` satisfies
    ``v^m = 0``, so the search never needs more than ``min(m, bound)``
    steps.
    """
    gb = groebner_basis(_combined(ideal, quotient_J))
    if gb.is_unit():
        log.info("ideal is the unit ideal: empty zero set")
        return False
    try:
        m = len(standard_monomials(gb))
    except InfiniteColength as exc:
        log.info("not zero-dimensional: %s", exc)
        return False
    ambient = gb.ambient
    for name in ambient:
        v = Polynomial.variable(name, ambient)
        power = normal_form(v, gb)
        n = 1
        while not power.is_zero():
            if n >= min(m, bound):
                log.info("%s^%d is nonzero in the quotient; zeros away from the origin", name, n)
                return False
            power = normal_form(power * v, gb)
            n += 1
    return True


def ideal_power_product(ideals: Sequence[IdealPresentation], exponents: Sequence[int],
                        generator_budget: int = DEFAULT_GENERATOR_BUDGET) -> IdealPresentation:
    """Generators of ``U_1^{t_1} ... U_k^{t_k}``: all products of generator choices."""
    if len(ideals) != len(exponents) or not ideals:
        raise InvalidInput("ideals and exponents must be nonempty and of equal length")
    if any(t < 0 for t in exponents):
        raise InvalidInput("exponents must be natural numbers")
    ambient = ideals[0].ambient
    if any(u.ambient != ambient for u in ideals):
        raise InvalidInput("ambient mismatch among ideals")
    current = {Polynomial.one(ambient)}
    for u, t in zip(ideals, exponents):
        choices = list(itertools.combinations_with_replacement(range(len(u.generators)), t))
        if len(current) * len(choices) > generator_budget:
            raise BudgetExceeded(
                f"power product would need more than {generator_budget} generators")
        factors = set()
        for choice in choices:
            f = Polynomial.one(ambient)
            for i in choice:
                f = f * u.generators[i]
            factors.add(f)
        current = {a * b for a in current for b in factors}
    gens = sorted(current, key=lambda p: (DEGREVLEX.key(p.leading_monomial()), str(p)),
                  reverse=True)
    return IdealPresentation(gens, ambient)
