"""Vector fields on the total space and their prolongations to jet space."""
from __future__ import annotations

import threading
from dataclasses import dataclass

from .algebra import Polynomial, RationalExpr
from .jetspace import JetSpace, JetVar, expr_order


class OrderError(ValueError):
    """An expression needs a higher prolongation than the one supplied."""


def _as_expr(e) -> RationalExpr:
    return e if isinstance(e, RationalExpr) else RationalExpr.const(e)


@dataclass(frozen=True)
class VectorField:
    """``sum xi^i d/dx^i + sum phi^a d/du^a`` with coefficients in (x, u)."""

    p: int
    q: int
    xi: tuple
    phi: tuple

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(_as_expr(c) for c in self.xi))
        object.__setattr__(self, "phi", tuple(_as_expr(c) for c in self.phi))
        if len(self.xi) != self.p or len(self.phi) != self.q:
            raise ValueError(f"expected {self.p} xi and {self.q} phi components")
        for c in self.xi + self.phi:
            for v in c.variables():
                if v.order > 0 or (v.p, v.q) != (self.p, self.q):
                    raise ValueError(f"coefficient {c} is not a function on the total space")

    @property
    def space(self) -> JetSpace:
        return JetSpace(self.p, self.q, 0)

    def components(self) -> dict:
        """Coordinate of E -> coefficient."""
        sp = self.space
        out = {sp.x(i + 1): c for i, c in enumerate(self.xi)}
        out.update({sp.u(a + 1): c for a, c in enumerate(self.phi)})
        return out

    def __call__(self, f: RationalExpr) -> RationalExpr:
        """Apply as a derivation to a function on E."""
        f = _as_expr(f)
        total = RationalExpr.const(0)
        for v, c in self.components().items():
            if not c.is_zero() and v in f.variables():
                total = total + c * f.derive(v)
        return total

    def __add__(self, other: VectorField) -> VectorField:
        return VectorField(self.p, self.q,
                           tuple(a + b for a, b in zip(self.xi, other.xi)),
                           tuple(a + b for a, b in zip(self.phi, other.phi)))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> VectorField:
        return VectorField(self.p, self.q, tuple(a * c for a in self.xi), tuple(a * c for a in self.phi))

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.xi + self.phi)

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return ((self.p, self.q) == (other.p, other.q)
                and all(a == b for a, b in zip(self.xi + self.phi, other.xi + other.phi)))

    __hash__ = None

    def __str__(self):
        parts = []
        for v, c in self.components().items():
            if not c.is_zero():
                parts.append(f"({c})*d/d{v}")
        return " + ".join(parts) or "0"


def characteristic(v: VectorField) -> list:
    """``Q^a = phi^a - sum_i xi^i u^a_i``."""
    sp = v.space
    out = []
    for a in range(1, v.q + 1):
        Q = v.phi[a - 1]
        for i in range(1, v.p + 1):
            if not v.xi[i - 1].is_zero():
                Q = Q - v.xi[i - 1] * RationalExpr.var(sp.u(a).shifted(i))
        out.append(Q)
    return out


def _total_derivative_poly(P: Polynomial, i: int) -> Polynomial:
    out: dict = {}
    for m, c in P.terms.items():
        for k, (w, e) in enumerate(m):
            rest = m[:k] + m[k + 1:] if e == 1 else m[:k] + ((w, e - 1),) + m[k + 1:]
            if w.kind == 0:
                if w.index != i:
                    continue
                nm = rest
            else:
                d = dict(rest)
                s = w.shifted(i)
                d[s] = d.get(s, 0) + 1
                nm = tuple(sorted(d.items()))
            out[nm] = out.get(nm, 0) + c * e
    return Polynomial(out)


def total_derivative(F: RationalExpr, i: int = 1) -> RationalExpr:
    """``D_i F = dF/dx^i + sum u^a_{J,i} dF/du^a_J``."""
    F = _as_expr(F)
    dn = _total_derivative_poly(F.num, i)
    if F.den.is_constant():
        return RationalExpr(dn, F.den)
    dd = _total_derivative_poly(F.den, i)
    if dd.is_zero():
        return RationalExpr(dn, F.den)
    return RationalExpr(dn * F.den - F.num * dd, F.den * F.den)


def _last_direction(v: JetVar) -> int:
    return v.seq[-1]


def _drop_last(v: JetVar) -> JetVar:
    return JetVar(1, v.order - 1, v.index, v.seq[:-1], v.p, v.q)


class ProlongedVectorField:
    """The lift ``v^(n)`` of a vector field to J^(n).

    Coefficients are computed on demand and cached; the cache is guarded by
    a lock so instances may be shared between threads.
    """

    def __init__(self, base: VectorField, n: int, method: str = "characteristic"):
        if n < 0:
            raise ValueError("prolongation order must be >= 0")
        if method not in ("characteristic", "recursive"):
            raise ValueError(f"unknown prolongation method {method!r}")
        self.base = base
        self.n = n
        self.method = method
        self.space = JetSpace(base.p, base.q, n)
        self._lock = threading.RLock()
        self._cache: dict = {}
        self._DQ: dict = {}
        self._Q = characteristic(base) if method == "characteristic" else None
        self._dxi: dict = {}

    def coefficient(self, var: JetVar) -> RationalExpr:
        if var.kind == 0:
            return self.base.xi[var.index - 1]
        if var.order == 0:
            return self.base.phi[var.index - 1]
        if var.order > self.n:
            raise OrderError(f"{var} is not a coordinate of J^({self.n})")
        with self._lock:
            c = self._cache.get(var)
            if c is None:
                if self.method == "characteristic":
                    c = self._by_characteristic(var)
                else:
                    c = self._by_recursion(var)
                self._cache[var] = c
            return c

    @property
    def coeffs(self) -> dict:
        """Every coordinate of J^(n) -> its coefficient."""
        return {v: self.coefficient(v) for v in self.space.variables()}

    # D_J Q^a, applying D_i factors in increasing i
    def _d_q(self, var: JetVar) -> RationalExpr:
        if var.order == 0:
            return self._Q[var.index - 1]
        c = self._DQ.get(var)
        if c is None:
            c = total_derivative(self._d_q(_drop_last(var)), _last_direction(var))
            self._DQ[var] = c
        return c

    def _by_characteristic(self, var: JetVar) -> RationalExpr:
        c = self._d_q(var)
        for i, xi in enumerate(self.base.xi, start=1):
            if not xi.is_zero():
                c = c + xi * RationalExpr.var(var.shifted(i))
        return c

    def _d_xi(self, k: int, i: int) -> RationalExpr:
        key = (k, i)
        if key not in self._dxi:
            self._dxi[key] = total_derivative(self.base.xi[k - 1], i)
        return self._dxi[key]

    def _by_recursion(self, var: JetVar) -> RationalExpr:
        i = _last_direction(var)
        prev = _drop_last(var)
        c = total_derivative(self.coefficient(prev), i)
        for k in range(1, self.base.p + 1):
            dxi = self._d_xi(k, i)
            if not dxi.is_zero():
                c = c - dxi * RationalExpr.var(prev.shifted(k))
        return c

    def __call__(self, F: RationalExpr) -> RationalExpr:
        return apply(self, F)

    def __str__(self):
        parts = []
        for v, c in self.coeffs.items():
            if not c.is_zero():
                parts.append(f"({c})*d/d{v}")
        return " + ".join(parts) or "0"


def prolong(v: VectorField, n: int) -> ProlongedVectorField:
    """n-th prolongation via ``phi^J_a = D_J Q^a + sum_i xi^i u^a_{J,i}``."""
    return ProlongedVectorField(v, n, "characteristic")


def prolong_recursive(v: VectorField, n: int) -> ProlongedVectorField:
    """n-th prolongation via ``phi^{J,i} = D_i phi^J - sum_k D_i(xi^k) u_{J,k}``."""
    return ProlongedVectorField(v, n, "recursive")


def apply(w: ProlongedVectorField, F) -> RationalExpr:
    """Apply the prolonged field as a derivation to a differential function."""
    F = _as_expr(F)
    order = expr_order(F)
    if order > w.n:
        raise OrderError(f"expression of order {order} needs a prolongation of order >= {order}, got {w.n}")
    total = RationalExpr.const(0)
    for var in sorted(F.variables()):
        c = w.coefficient(var)
        if not c.is_zero():
            total = total + c * F.derive(var)
    return total


def bracket(v: VectorField, w: VectorField) -> VectorField:
    """Lie bracket ``[v, w]^k = v(w^k) - w(v^k)``."""
    if (v.p, v.q) != (w.p, w.q):
        raise ValueError("vector fields live on different total spaces")
    xi = tuple(v(b) - w(a) for a, b in zip(v.xi, w.xi))
    phi = tuple(v(b) - w(a) for a, b in zip(v.phi, w.phi))
    return VectorField(v.p, v.q, xi, phi)


def prolonged_bracket(P: ProlongedVectorField, R: ProlongedVectorField, F) -> RationalExpr:
    """``[P, R](F) = P(R(F)) - R(P(F))`` for prolonged fields acting as derivations."""
    return apply(P, apply(R, F)) - apply(R, apply(P, F))
