"""Exact rational functions ``num / den`` over :class:`Polynomial`."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .poly import Polynomial, SingularPoint, mono_gcd

#: Above this many terms (numerator plus denominator) a full polynomial gcd
#: is used to cancel common factors.
GCD_THRESHOLD = 200


def _to_sympy(polys):
    from sympy.polys.domains import QQ
    from sympy.polys.rings import ring

    gens = sorted(set().union(*(p.variables() for p in polys)))
    index = {v: k for k, v in enumerate(gens)}
    R, *_ = ring([f"g{k}" for k in range(max(len(gens), 1))], QQ)
    out = []
    for p in polys:
        d = {}
        for m, c in p.terms.items():
            exps = [0] * len(R.gens)
            for v, e in m:
                exps[index[v]] = e
            d[tuple(exps)] = QQ(c.numerator, c.denominator)
        out.append(R.from_dict(d))
    return gens, out


def _from_sympy(gens, f) -> Polynomial:
    return Polynomial({
        tuple((gens[k], e) for k, e in enumerate(exps) if e): Fraction(int(c.numerator), int(c.denominator))
        for exps, c in f.items()
    })


def _cancel_gcd(num: Polynomial, den: Polynomial):
    """Cancel the polynomial gcd of ``num`` and ``den`` (delegated to sympy)."""
    gens, (a, b) = _to_sympy([num, den])
    _, ca, cb = a.cofactors(b)
    return _from_sympy(gens, ca), _from_sympy(gens, cb)


class RationalExpr:
    """An exact rational function of jet coordinates.

    Instances are immutable and normalized: the denominator has coprime
    integer coefficients, a positive leading coefficient (graded lex order)
    and shares no monomial factor with the numerator.  Common polynomial
    factors are only cancelled once the expression exceeds
    :data:`GCD_THRESHOLD` terms, so two equal values need not have
    identical representations; compare with ``==`` (cross-multiplication).
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, *, _normalized=False):
        if not isinstance(num, Polynomial):
            num = Polynomial.const(num)
        if not isinstance(den, Polynomial):
            den = Polynomial.const(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero expression")
        if not _normalized:
            num, den = _normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalExpr is immutable")

    @classmethod
    def var(cls, v) -> RationalExpr:
        return cls(Polynomial.var(v), _ONE_POLY, _normalized=True)

    @classmethod
    def const(cls, c) -> RationalExpr:
        return cls(Polynomial.const(c), _ONE_POLY, _normalized=True)

    @classmethod
    def poly(cls, p: Polynomial) -> RationalExpr:
        return cls(p, _ONE_POLY, _normalized=True)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    def size(self) -> int:
        return len(self.num.terms) + len(self.den.terms)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalExpr):
            return other
        if isinstance(other, Polynomial):
            return RationalExpr.poly(other)
        if isinstance(other, (int, Rational)):
            return RationalExpr.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalExpr(self.num + other.num, self.den)
        if other.den.is_constant():
            return RationalExpr(self.num + other.num * self.den.scale(1 / other.den.constant_value()),
                                self.den)
        if self.den.is_constant():
            return other + self
        return RationalExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalExpr(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalExpr(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero expression")
        return RationalExpr(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of the zero expression")
            return RationalExpr(self.den ** -k, self.num ** -k)
        return RationalExpr(self.num ** k, self.den ** k, _normalized=True)

    def derive(self, v) -> RationalExpr:
        dn = self.num.derive(v)
        if self.den.is_constant():
            return RationalExpr(dn, self.den)
        dd = self.den.derive(v)
        if dd.is_zero():
            return RationalExpr(dn, self.den)
        return RationalExpr(dn * self.den - self.num * dd, self.den * self.den)

    def evaluate(self, point) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise SingularPoint("denominator vanishes at the evaluation point")
        return self.num.evaluate(point) / d

    # -- comparisons / display ---------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None

    def __str__(self):
        if self.den == _ONE_POLY:
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        den = str(self.den)
        ((m, c),) = self.den.terms.items() if self.den.is_monomial() else ((None, None),)
        if not (c == 1 and len(m) == 1):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RationalExpr({self})"


_ONE_POLY = Polynomial.const(1)


def _normalize(num: Polynomial, den: Polynomial):
    if num.is_zero():
        return num, _ONE_POLY
    if den.is_constant():
        c = den.constant_value()
        return (num if c == 1 else num.scale(1 / c)), _ONE_POLY
    g = mono_gcd(num.monomial_content(), den.monomial_content())
    if g:
        num = num.div_monomial(g)
        den = den.div_monomial(g)
    if len(num.terms) + len(den.terms) > GCD_THRESHOLD and not den.is_monomial():
        num, den = _cancel_gcd(num, den)
    _, lc = den.leading_term()
    s = 1 / den.content()
    if lc < 0:
        s = -s
    if s != 1:
        num = num.scale(s)
        den = den.scale(s)
    if den.is_constant():
        c = den.constant_value()
        return (num if c == 1 else num.scale(1 / c)), _ONE_POLY
    return num, den
