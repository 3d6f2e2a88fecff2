"""Exact multivariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` (always in lowest terms, never
rounded).  Monomials are exponent tuples whose length equals the number of
ambient variables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput, ParseError, UnknownVariable

MAX_VARIABLES = 16

Scalar = Fraction
Monomial = tuple  # tuple[int, ...]


def monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class TermOrder:
    """A monomial order: ``degrevlex`` (default) or ``lex``.

    ``perm`` lists variable indices from most to least significant; ``None``
    means the ambient order.
    """

    kind: str = "degrevlex"
    perm: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise InvalidInput(f"unknown term order {self.kind!r}")

    def key(self, exps):
        if self.perm is not None:
            exps = tuple(exps[i] for i in self.perm)
        if self.kind == "lex":
            return tuple(exps)
        return (sum(exps), tuple(-e for e in reversed(exps)))


DEGREVLEX = TermOrder()
LEX = TermOrder("lex")


def _check_ambient(ambient):
    ambient = tuple(ambient)
    if len(ambient) > MAX_VARIABLES:
        raise InvalidInput(f"at most {MAX_VARIABLES} variables are supported")
    if len(set(ambient)) != len(ambient):
        raise InvalidInput(f"duplicate variable names in {ambient}")
    for name in ambient:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
            raise InvalidInput(f"bad variable name {name!r}")
    return ambient


class Polynomial:
    """Immutable sparse polynomial ``{exponent tuple: Fraction}``."""

    __slots__ = ("_terms", "ambient", "_hash")

    def __init__(self, terms: Mapping | None = None, ambient: Sequence[str] = ()):
        self.ambient = _check_ambient(ambient)
        n = len(self.ambient)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise InvalidInput(f"exponent vector {exps} does not fit ambient {self.ambient}")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms, ambient):
        # trusted constructor: terms already clean, ambient already checked
        p = object.__new__(cls)
        p._terms = terms
        p.ambient = ambient
        p._hash = None
        return p

    @classmethod
    def zero(cls, ambient):
        return cls({}, ambient)

    @classmethod
    def constant(cls, c, ambient):
        ambient = tuple(ambient)
        return cls({(0,) * len(ambient): c}, ambient)

    @classmethod
    def one(cls, ambient):
        return cls.constant(1, ambient)

    @classmethod
    def variable(cls, name, ambient):
        ambient = tuple(ambient)
        if name not in ambient:
            raise UnknownVariable(name)
        exps = tuple(int(v == name) for v in ambient)
        return cls({exps: 1}, ambient)

    @classmethod
    def monomial(cls, exps, ambient, coeff=1):
        return cls({tuple(exps): coeff}, ambient)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def order(self):
        """Lowest total degree of a term (the order at the origin)."""
        if not self._terms:
            raise InvalidInput("the zero polynomial has no order")
        return min(sum(e) for e in self._terms)

    def leading_monomial(self, order: TermOrder = DEGREVLEX):
        if not self._terms:
            raise InvalidInput("the zero polynomial has no leading term")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: TermOrder = DEGREVLEX):
        return self._terms[self.leading_monomial(order)]

    def sorted_terms(self, order: TermOrder = DEGREVLEX):
        return sorted(self._terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ambient != self.ambient:
                raise InvalidInput(f"ambient mismatch: {self.ambient} vs {other.ambient}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.ambient)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self.ambient)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.ambient)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out, self.ambient)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InvalidInput("polynomial powers need a natural exponent")
        result = Polynomial.one(self.ambient)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ambient)
        return Polynomial._raw({m: v * c for m, v in self._terms.items()}, self.ambient)

    def mul_monomial(self, exps, c=1):
        c = Fraction(c)
        return Polynomial._raw({monomial_mul(m, exps): v * c for m, v in self._terms.items()},
                               self.ambient)

    def truncate(self, degree):
        """Drop every term of total degree >= ``degree``."""
        return Polynomial._raw({m: c for m, c in self._terms.items() if sum(m) < degree},
                               self.ambient)

    def compose(self, values: Sequence[Polynomial], truncate: int | None = None):
        """Substitute ``values[i]`` for the i-th ambient variable.

        With ``truncate`` set, all arithmetic is carried out modulo terms of
        total degree >= ``truncate`` in the target ring.
        """
        if len(values) != len(self.ambient):
            raise InvalidInput("compose needs one value per ambient variable")
        if not values:
            return self
        target = values[0].ambient
        cut = (lambda p: p) if truncate is None else (lambda p: p.truncate(truncate))
        powers = [[Polynomial.one(target)] for _ in values]

        def power(i, e):
            cache = powers[i]
            while len(cache) <= e:
                cache.append(cut(cache[-1] * values[i]))
            return cache[e]

        out = Polynomial.zero(target)
        for m, c in self._terms.items():
            term = Polynomial.constant(c, target)
            for i, e in enumerate(m):
                if e:
                    term = cut(term * power(i, e))
            out = out + term
        return cut(out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.ambient)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ambient == other.ambient and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({str(self)!r}, ambient={list(self.ambient)})"

    def __str__(self):
        return format_polynomial(self)


def _format_scalar(c: Fraction):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: terms in descending degrevlex, explicit ``*`` and ``^``."""
    if p.is_zero():
        return "0"
    pieces = []
    for exps, c in p.sorted_terms(DEGREVLEX):
        factors = []
        for name, e in zip(p.ambient, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_scalar(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_scalar(mag) + "*" + "*".join(factors)
        sign = "-" if c < 0 else "+"
        if not pieces:
            pieces.append(body if sign == "+" else "-" + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            offset = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[offset]!r}", offset)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ambient):
        self.text = text
        self.ambient = tuple(ambient)
        self.index = {v: i for i, v in enumerate(self.ambient)}
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.pos]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want}, found {got!r}", tok[2])
        self.pos += 1
        return tok

    def poly(self):
        terms = {}
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            # leading sign: needed so that canonical output round-trips
            sign = -1 if tok[1] == "-" else 1
            self.take()
        while True:
            exps, c = self.term()
            c *= sign
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if tok[1] == "-" else 1
                self.take()
                continue
            if tok[0] != "end":
                raise ParseError(f"unexpected {tok[1]!r}", tok[2])
            return terms

    def term(self):
        exps = [0] * len(self.ambient)
        coeff = Fraction(1)
        tok = self.peek()
        if tok[0] == "int":
            coeff = self.coeff()
        else:
            self.factor(exps)
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            self.factor(exps)
        return tuple(exps), coeff

    def coeff(self):
        num = int(self.take("int")[1])
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "/":
            self.take()
            den_tok = self.take("int")
            den = int(den_tok[1])
            if den == 0:
                raise ParseError("zero denominator", den_tok[2])
            return Fraction(num, den)
        return Fraction(num)

    def factor(self, exps):
        tok = self.take("ident")
        name = tok[1]
        if name not in self.index:
            raise UnknownVariable(name, tok[2])
        power = 1
        nxt = self.peek()
        if nxt[0] == "op" and nxt[1] == "^":
            self.take()
            power = int(self.take("int")[1])
        exps[self.index[name]] += power


def parse_polynomial(text: str, ambient: Iterable[str]) -> Polynomial:
    """Parse ``text`` into a polynomial over the given variables.

    >>> str(parse_polynomial("3*x + x^2*y", ["x", "y"]))
    'x^2*y + 3*x'
    """
    ambient = _check_ambient(ambient)
    if not text.strip():
        raise ParseError("empty polynomial", 0)
    terms = _Parser(text, ambient).poly()
    return Polynomial._raw(terms, ambient)
