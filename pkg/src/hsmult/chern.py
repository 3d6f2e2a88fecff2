"""Truncated graded calculus of Chern and Segre classes.

Classes live in a polynomial ring of abstract symbols (``c1, ..., cr`` by
default, ``deg c_i = i``).  Intersection numbers are user-supplied data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InternalError, InvalidInput
from .poly import Polynomial, parse_polynomial


def chern_symbols(rank):
    return tuple(f"c{i}" for i in range(1, rank + 1)), tuple(range(1, rank + 1))


def weighted_degree(exps, weights):
    return sum(e * w for e, w in zip(exps, weights))


@dataclass(frozen=True)
class GradedClass:
    """``components[k]`` is the weighted-degree-``k`` part, ``k = 0..truncation``."""

    components: tuple
    weights: tuple

    def __init__(self, components: Sequence[Polynomial], weights: Sequence[int]):
        comps = tuple(components)
        weights = tuple(int(w) for w in weights)
        if not comps:
            raise InvalidInput("a graded class needs a degree-0 component")
        ambient = comps[0].ambient
        if len(weights) != len(ambient) or any(w < 1 for w in weights):
            raise InvalidInput("one positive weight per symbol is required")
        for k, c in enumerate(comps):
            if c.ambient != ambient:
                raise InvalidInput("all components must use the same symbols")
            for exps in c.terms:
                if weighted_degree(exps, weights) != k:
                    raise InvalidInput(f"component {k} is not homogeneous of degree {k}: {c}")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "weights", weights)

    @property
    def truncation(self):
        return len(self.components) - 1

    @property
    def symbols(self):
        return self.components[0].ambient

    @classmethod
    def chern(cls, rank: int, truncation: int, chern: Sequence[str] = ()):
        """Total class ``1 + c_1 + ... `` from strings for degrees 1, 2, ..."""
        symbols, weights = chern_symbols(rank)
        comps = [Polynomial.one(symbols)]
        for k in range(1, truncation + 1):
            text = chern[k - 1] if k - 1 < len(chern) else "0"
            comps.append(parse_polynomial(text, symbols))
        return cls(comps, weights)

    @classmethod
    def from_json(cls, obj):
        try:
            return cls.chern(int(obj["rank"]), int(obj["truncation"]), obj.get("chern", []))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"Chern JSON needs 'rank' and 'truncation': {exc}") from None

    @classmethod
    def from_total(cls, total: Polynomial, weights: Sequence[int], truncation: int):
        """Split an inhomogeneous polynomial into graded pieces up to ``truncation``."""
        pieces = [dict() for _ in range(truncation + 1)]
        for exps, c in total.terms.items():
            k = weighted_degree(exps, weights)
            if k <= truncation:
                pieces[k][exps] = c
        return cls([Polynomial(p, total.ambient) for p in pieces], weights)

    def total(self):
        out = Polynomial.zero(self.symbols)
        for c in self.components:
            out = out + c
        return out

    def __mul__(self, other):
        if other.symbols != self.symbols or other.weights != self.weights:
            raise InvalidInput("graded classes over different symbols")
        n = min(self.truncation, other.truncation)
        comps = []
        for k in range(n + 1):
            acc = Polynomial.zero(self.symbols)
            for i in range(k + 1):
                acc = acc + self.components[i] * other.components[k - i]
            comps.append(acc)
        return GradedClass(comps, self.weights)

    def __str__(self):
        return " + ".join(f"[{c}]" for c in self.components)


def segre_from_chern(c: GradedClass) -> GradedClass:
    """Multiplicative inverse of ``c`` truncated at its top degree."""
    c0 = c.components[0].terms.get((0,) * len(c.symbols), Fraction(0))
    if not c0:
        raise InvalidInput("the degree-0 component is not a unit")
    inv0 = 1 / c0
    s = [Polynomial.constant(inv0, c.symbols)]
    for k in range(1, c.truncation + 1):
        acc = Polynomial.zero(c.symbols)
        for i in range(1, k + 1):
            acc = acc + c.components[i] * s[k - i]
        s.append(acc.scale(-inv0))
    result = GradedClass(s, c.weights)
    check = c * result
    one = Polynomial.one(c.symbols)
    if check.components[0] != one or any(not x.is_zero() for x in check.components[1:]):
        raise InternalError("c * s != 1 after series inversion")
    return result


def dual_class(c: GradedClass) -> GradedClass:
    """Total class of the dual bundle: each symbol of weight ``i`` picks up ``(-1)^i``."""
    comps = []
    for comp in c.components:
        terms = {}
        for exps, v in comp.terms.items():
            sign = -1 if weighted_degree(exps, c.weights) % 2 else 1
            terms[exps] = sign * v
        comps.append(Polynomial(terms, c.symbols))
    return GradedClass(comps, c.weights)


@dataclass(frozen=True)
class IntersectionTable:
    """Integrals over the base of the top-degree monomials in the symbols."""

    values: Mapping
    symbols: tuple
    weights: tuple
    dimension: int

    @classmethod
    def from_json(cls, obj: Mapping, symbols: Sequence[str], weights: Sequence[int],
                  dimension: int):
        symbols = tuple(symbols)
        values = {}
        for key, val in obj.items():
            mono = parse_polynomial(key, symbols)
            if not mono.is_monomial() or next(iter(mono.terms.values())) != 1:
                raise InvalidInput(f"table key {key!r} is not a monomial")
            exps = next(iter(mono.terms))
            if weighted_degree(exps, weights) != dimension:
                raise InvalidInput(f"table key {key!r} does not have degree {dimension}")
            if isinstance(val, bool) or not isinstance(val, int):
                raise InvalidInput(f"intersection number for {key!r} must be an integer")
            values[exps] = val
        return cls(values, symbols, tuple(weights), dimension)

    def integrate(self, p: Polynomial) -> Fraction:
        total = Fraction(0)
        for exps, c in p.terms.items():
            if exps not in self.values:
                name = str(Polynomial.monomial(exps, self.symbols))
                raise InvalidInput(f"intersection table has no entry for {name}")
            total += c * self.values[exps]
        return total


def top_segre_integral(c_of_E: GradedClass, table: IntersectionTable) -> int:
    """``int_M s_n(E*)`` where ``n`` is the truncation (the base dimension)."""
    if table.dimension != c_of_E.truncation:
        raise InvalidInput("table dimension and class truncation differ")
    s = segre_from_chern(dual_class(c_of_E))
    value = table.integrate(s.components[-1])
    if value.denominator != 1:
        raise InvalidInput(f"top Segre integral {value} is not an integer")
    return int(value)
