"""Exact arithmetic kernel: rationals, sparse polynomials, rational expressions."""
from fractions import Fraction

from .expr import GCD_THRESHOLD, RationalExpr
from .linalg import nullspace, rank, rref, solve
from .poly import Monomial, Polynomial, SingularPoint

__all__ = [
    "Fraction", "Monomial", "Polynomial", "RationalExpr", "SingularPoint", "GCD_THRESHOLD",
    "add", "mul", "neg", "div", "pow_int", "partial_derive", "evaluate", "is_zero", "equals",
    "rank", "rref", "nullspace", "solve",
]


def add(a: RationalExpr, b: RationalExpr) -> RationalExpr:
    return a + b


def mul(a: RationalExpr, b: RationalExpr) -> RationalExpr:
    return a * b


def neg(a: RationalExpr) -> RationalExpr:
    return -a


def div(a: RationalExpr, b: RationalExpr) -> RationalExpr:
    """Exact quotient; raises :class:`ZeroDivisionError` when ``b`` is zero."""
    return a / b


def pow_int(a: RationalExpr, k: int) -> RationalExpr:
    return a ** k


def partial_derive(e: RationalExpr, v) -> RationalExpr:
    return e.derive(v)


def evaluate(e: RationalExpr, point) -> Fraction:
    """Exact value at ``point`` (a mapping from variable to rational).

    Raises :class:`SingularPoint` if the denominator vanishes and
    :class:`ValueError` if a variable of ``e`` has no value.
    """
    return e.evaluate(point)


def is_zero(e: RationalExpr) -> bool:
    return e.is_zero()


def equals(a: RationalExpr, b: RationalExpr) -> bool:
    return a == b
