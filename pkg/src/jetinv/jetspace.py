"""Coordinates of the jet space J^(n) of E = R^p x R^q."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import NamedTuple

from .algebra import RationalExpr


class JetVar(NamedTuple):
    """A coordinate of a jet space.

    Tuple order is the global variable order: independents ``x^i`` first
    (by ``i``), then dependents ``u^a_J`` by ``(order(J), a, J)`` where J is
    compared as its sorted sequence of differentiation directions.
    """

    kind: int  # 0 independent, 1 dependent
    order: int
    index: int  # i for x^i, alpha for u^alpha_J
    seq: tuple  # sorted directions (1-based), empty for x^i and u^alpha
    p: int
    q: int

    @classmethod
    def independent(cls, i: int, p: int = 1, q: int = 1) -> JetVar:
        if not 1 <= i <= p:
            raise ValueError(f"independent index {i} outside 1..{p}")
        return cls(0, 0, i, (), p, q)

    @classmethod
    def dependent(cls, alpha: int, counts=None, p: int = 1, q: int = 1) -> JetVar:
        if not 1 <= alpha <= q:
            raise ValueError(f"dependent index {alpha} outside 1..{q}")
        counts = tuple(counts) if counts is not None else (0,) * p
        if len(counts) != p or any(c < 0 for c in counts):
            raise ValueError(f"bad multi-index {counts} for p={p}")
        seq = tuple(i + 1 for i, c in enumerate(counts) for _ in range(c))
        return cls(1, len(seq), alpha, seq, p, q)

    @property
    def is_independent(self) -> bool:
        return self.kind == 0

    @property
    def counts(self) -> tuple:
        """The multi-index as a count vector of length p."""
        c = [0] * self.p
        for i in self.seq:
            c[i - 1] += 1
        return tuple(c)

    def shifted(self, i: int) -> JetVar:
        """``u^a_{J,i}``: one more derivative in direction ``i``."""
        return _shifted(self, i)

    @property
    def name(self) -> str:
        if self.kind == 0:
            return "x" if self.p == 1 else f"x{self.index}"
        if self.p == 1 and self.q == 1:
            return "u" if self.order == 0 else f"u{self.order}"
        base = f"u[{self.index}]"
        if self.order == 0:
            return base
        return base + "_(" + ",".join(map(str, self.counts)) + ")"

    def __str__(self):
        return self.name

    def __repr__(self):
        return self.name


@lru_cache(maxsize=None)
def _shifted(v: JetVar, i: int) -> JetVar:
    if v.kind == 0:
        raise ValueError("cannot differentiate an independent coordinate index")
    seq = tuple(sorted(v.seq + (i,)))
    return JetVar(1, v.order + 1, v.index, seq, v.p, v.q)


def dim_jet(p: int, q: int, n: int) -> int:
    """Dimension ``p + q*C(p+n, n)`` of J^(n)."""
    return p + q * comb(p + n, n)


def q_n(p: int, q: int, n: int) -> int:
    """Number of derivative coordinates of order exactly ``n`` (n >= 1)."""
    if n < 1:
        raise ValueError("q_n is defined for n >= 1")
    return q * comb(p + n - 1, n)


def multi_indices(p: int, k: int):
    """Order-k multi-indices as count vectors, in coordinate order."""
    out = []
    for seq in combinations_with_replacement(range(1, p + 1), k):
        c = [0] * p
        for i in seq:
            c[i - 1] += 1
        out.append(tuple(c))
    return out


@dataclass(frozen=True)
class JetSpace:
    p: int
    q: int
    n: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1 or self.n < 0:
            raise ValueError("need p, q >= 1 and n >= 0")

    @property
    def dim(self) -> int:
        return dim_jet(self.p, self.q, self.n)

    def x(self, i: int = 1) -> JetVar:
        return JetVar.independent(i, self.p, self.q)

    def u(self, alpha: int = 1, counts=None) -> JetVar:
        return JetVar.dependent(alpha, counts, self.p, self.q)

    def coords_of_order(self, k: int) -> list:
        """Dependent coordinates of order exactly ``k``."""
        return [self.u(a, c) for a in range(1, self.q + 1) for c in multi_indices(self.p, k)]

    def variables(self) -> list:
        return enumerate_vars(self)

    def symbols(self) -> dict:
        """Name -> :class:`RationalExpr` for every coordinate; handy for building expressions."""
        return {v.name: RationalExpr.var(v) for v in self.variables()}

    def with_order(self, n: int) -> JetSpace:
        return JetSpace(self.p, self.q, n)


def enumerate_vars(space: JetSpace) -> list:
    """All coordinates of ``space`` in the global variable order."""
    out = [space.x(i) for i in range(1, space.p + 1)]
    for k in range(space.n + 1):
        out.extend(space.coords_of_order(k))
    return out


def expr_order(e: RationalExpr) -> int:
    """Highest derivative order among the coordinates appearing in ``e``."""
    return max((v.order for v in e.variables()), default=0)
