"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable,
with no zero exponents; ``()`` is the monomial 1.  Variables can be any
hashable, totally ordered objects (the jet coordinates in practice).
"""
from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from math import gcd, lcm
from numbers import Rational

Monomial = tuple


class SingularPoint(ArithmeticError):
    """A denominator vanished at the requested evaluation point."""


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    db = dict(b)
    return all(db.get(v, 0) >= e for v, e in a)


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient ``a / b``; assumes ``b`` divides ``a``."""
    d = dict(a)
    for v, e in b:
        r = d[v] - e
        if r:
            d[v] = r
        else:
            del d[v]
    return tuple(sorted(d.items()))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    db = dict(b)
    return tuple((v, min(e, db[v])) for v, e in a if v in db)


def _lex_cmp(a: Monomial, b: Monomial) -> int:
    # The first variable in the global order is the most significant.
    for (va, ea), (vb, eb) in zip(a, b):
        if va != vb:
            return 1 if va < vb else -1
        if ea != eb:
            return 1 if ea > eb else -1
    return (len(a) > len(b)) - (len(a) < len(b))


def grlex_cmp(a: Monomial, b: Monomial) -> int:
    da, db = mono_degree(a), mono_degree(b)
    if da != db:
        return 1 if da > db else -1
    return _lex_cmp(a, b)


grlex_key = cmp_to_key(grlex_cmp)


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial) -> str:
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)


class Polynomial:
    """Immutable sparse polynomial ``{monomial: nonzero Fraction}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        object.__setattr__(self, "terms", {m: c for m, c in terms.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, terms: dict) -> Polynomial:
        # Caller guarantees there are no zero coefficients.
        p = object.__new__(cls)
        object.__setattr__(p, "terms", terms)
        return p

    @classmethod
    def const(cls, c) -> Polynomial:
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, v) -> Polynomial:
        return cls._raw({((v, 1),): Fraction(1)})

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> Polynomial:
        return cls({tuple(sorted(m)): Fraction(c)})

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def sorted_terms(self) -> list:
        """Terms in descending graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        m = max(self.terms, key=grlex_key)
        return m, self.terms[m]

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self.terms:
            return Fraction(1)
        nums = 0
        dens = 1
        for c in self.terms.values():
            nums = gcd(nums, c.numerator)
            dens = lcm(dens, c.denominator)
        return Fraction(nums, dens)

    def monomial_content(self) -> Monomial:
        """The largest monomial dividing every term."""
        it = iter(self.terms)
        g = next(it, ())
        for m in it:
            if not g:
                break
            g = mono_gcd(g, m)
        return g

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        if len(self.terms) < len(other.terms):
            self, other = other, self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Polynomial:
        c = Fraction(c)
        if not c:
            return Polynomial._raw({})
        if c == 1:
            return self
        return Polynomial._raw({m: v * c for m, v in self.terms.items()})

    def mul_monomial(self, mono: Monomial, c=1) -> Polynomial:
        c = Fraction(c)
        if not c:
            return Polynomial._raw({})
        return Polynomial._raw({mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Rational)):
                return self.scale(other)
            return NotImplemented
        if len(self.terms) > len(other.terms):
            self, other = other, self
        if not self.terms:
            return self
        if len(self.terms) == 1:
            ((m, c),) = self.terms.items()
            return other.mul_monomial(m, c)
        out: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def div_monomial(self, mono: Monomial) -> Polynomial:
        return Polynomial._raw({mono_div(m, mono): c for m, c in self.terms.items()})

    def derive(self, v) -> Polynomial:
        out: dict = {}
        for m, c in self.terms.items():
            for k, (w, e) in enumerate(m):
                if w == v:
                    nm = m[:k] + m[k + 1:] if e == 1 else m[:k] + ((w, e - 1),) + m[k + 1:]
                    out[nm] = out.get(nm, 0) + c * e
                    break
        return Polynomial({m: c for m, c in out.items()})

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                try:
                    t *= point[v] ** e
                except KeyError:
                    raise ValueError(f"no value assigned to variable {v}") from None
            total += t
        return total

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    # -- comparisons / display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self.terms == Polynomial.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m:
                body = _format_coeff(a)
            elif a == 1:
                body = format_monomial(m)
            else:
                body = f"{_format_coeff(a)}*{format_monomial(m)}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"
