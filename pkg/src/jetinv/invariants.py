"""Differential invariants of prolonged group actions.

Invariance is decided symbolically by the infinitesimal criterion: ``I`` is
invariant iff every prolonged generator annihilates it.  Orbit dimensions
and functional independence are generic ranks, computed exactly at random
rational points.
"""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .algebra import Polynomial, RationalExpr, SingularPoint, nullspace, rank, solve
from .algebra.poly import grlex_key
from .calculus import OrderError, apply, bracket, prolong, total_derivative
from .jetspace import JetSpace, dim_jet, enumerate_vars, expr_order, q_n
from .presets import LieAlgebraBasis

__all__ = [
    "LieAlgebraBasis", "InvariantVerdict", "DimensionRow", "DimensionReport",
    "InequalityWarning", "SamplingError", "is_invariant", "generic_orbit_dim",
    "dimension_report", "functional_independence", "strict_independence",
    "invariant_diff_op", "iterate_diff_op", "search_invariants", "structure_constants",
    "random_point",
]

DEFAULT_SAMPLES = 5
RETRY_CAP = 100
#: Largest order accepted for bases of dimension >= LARGE_GROUP without ``allow_large``.
MAX_ORDER_LARGE_GROUP = 12
LARGE_GROUP = 8


class InequalityWarning(UserWarning):
    """A computed sequence breaks one of the elementary counting inequalities."""


class SamplingError(RuntimeError):
    """Could not find a non-singular sample point within the retry cap."""


@dataclass
class InvariantVerdict:
    residuals: list
    annihilated: list

    def __bool__(self):
        return all(self.annihilated)

    @property
    def invariant(self) -> bool:
        return bool(self)


def _check_order(basis: LieAlgebraBasis, n: int, allow_large: bool):
    if n < 0:
        raise ValueError("order must be >= 0")
    if n > MAX_ORDER_LARGE_GROUP and basis.group_dim >= LARGE_GROUP and not allow_large:
        raise ValueError(
            f"order {n} > {MAX_ORDER_LARGE_GROUP} for a {basis.group_dim}-dimensional algebra; "
            "pass allow_large=True to proceed")


def is_invariant(basis: LieAlgebraBasis, n: int, I) -> InvariantVerdict:
    """Apply every ``v_k^(n)`` to ``I`` and test each result for exact zero."""
    if not isinstance(I, RationalExpr):
        I = RationalExpr.const(I)
    if expr_order(I) > n:
        raise OrderError(f"invariant candidate has order {expr_order(I)} > {n}")
    residuals = [apply(prolong(v, n), I) for v in basis.generators]
    return InvariantVerdict(residuals, [r.is_zero() for r in residuals])


# -- sampling ------------------------------------------------------------------


def random_point(variables, rng: random.Random) -> dict:
    """Random rational coordinates, nonzero on derivative coordinates."""
    point = {}
    for v in variables:
        while True:
            val = Fraction(rng.randint(-50, 50), rng.randint(1, 10))
            if val or v.order == 0:
                break
        point[v] = val
    return point


def _sample(evaluate_at, variables, rng):
    for _ in range(RETRY_CAP):
        try:
            return evaluate_at(random_point(variables, rng))
        except SingularPoint:
            continue
    raise SamplingError(f"no non-singular point found in {RETRY_CAP} attempts; "
                        "the sampling box is likely inside the singular locus")


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _coefficient_matrix(prolonged, variables, point):
    return [[w.coefficient(v).evaluate(point) for v in variables] for w in prolonged]


def generic_orbit_dim(basis: LieAlgebraBasis, n: int, samples: int = DEFAULT_SAMPLES,
                      seed=0, allow_large: bool = False) -> int:
    """Maximal rank of the generator coefficient matrix on J^(n)."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    _check_order(basis, n, allow_large)
    variables = enumerate_vars(JetSpace(basis.p, basis.q, n))
    prolonged = [prolong(v, n) for v in basis.generators]
    rng = _rng(seed)
    return max(_sample(lambda pt: rank(_coefficient_matrix(prolonged, variables, pt)), variables, rng)
               for _ in range(samples))


@dataclass
class DimensionRow:
    n: int
    dim_jet: int
    s: int
    h: int
    i: int
    j: int
    q_n: int | None
    sample_ranks: list = field(default_factory=list, repr=False)

    def as_json(self) -> dict:
        return {"n": self.n, "dimJ": self.dim_jet, "s": self.s, "h": self.h,
                "i": self.i, "j": self.j, "q_n": self.q_n}


@dataclass
class DimensionReport:
    group: str
    group_dim: int
    rows: list
    flags: list = field(default_factory=list)
    unstable: list = field(default_factory=list)

    def column(self, name: str) -> list:
        return [getattr(r, name) for r in self.rows]

    def as_json(self) -> dict:
        return {"group": self.group, "rows": [r.as_json() for r in self.rows]}

    def format_table(self) -> str:
        head = f"{'n':>3} {'dimJ':>5} {'s_n':>4} {'h_n':>4} {'i_n':>4} {'j_n':>4} {'q_n':>4}"
        lines = [f"group {self.group} (dim {self.group_dim})", head]
        for r in self.rows:
            qn = "-" if r.q_n is None else r.q_n
            lines.append(f"{r.n:>3} {r.dim_jet:>5} {r.s:>4} {r.h:>4} {r.i:>4} {r.j:>4} {qn:>4}")
        return "\n".join(lines)


def _audit(rows, r) -> list:
    flags = []
    for prev, row in zip(rows, rows[1:]):
        n = row.n
        if not prev.i <= row.i <= prev.i + row.q_n:
            flags.append(f"n={n}: i_(n-1) <= i_n <= i_(n-1) + q_n fails ({prev.i}, {row.i}, q_n={row.q_n})")
        if not prev.s <= row.s <= prev.s + row.q_n:
            flags.append(f"n={n}: s_(n-1) <= s_n <= s_(n-1) + q_n fails ({prev.s}, {row.s}, q_n={row.q_n})")
    for row in rows:
        if row.s > r:
            flags.append(f"n={row.n}: s_n = {row.s} exceeds the group dimension {r}")
        if row.i + row.s != row.dim_jet or row.h + row.s != r:
            flags.append(f"n={row.n}: row identities violated")
    return flags


def dimension_report(basis: LieAlgebraBasis, n_max: int, samples: int = DEFAULT_SAMPLES,
                     seed=0, allow_large: bool = False) -> DimensionReport:
    """Orbit, isotropy and invariant counts for orders ``0..n_max``.

    Inequality violations are returned in ``flags`` and emitted as
    :class:`InequalityWarning`; orders whose sample ranks disagree are
    listed in ``unstable``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    _check_order(basis, n_max, allow_large)
    p, q, r = basis.p, basis.q, basis.group_dim
    variables = enumerate_vars(JetSpace(p, q, n_max))
    widths = [dim_jet(p, q, n) for n in range(n_max + 1)]
    prolonged = [prolong(v, n_max) for v in basis.generators]
    rng = _rng(seed)

    def ranks_at(point):
        M = _coefficient_matrix(prolonged, variables, point)
        return [rank([row[:w] for row in M]) for w in widths]

    per_sample = [_sample(ranks_at, variables, rng) for _ in range(samples)]

    rows = []
    prev_i = 0
    for n in range(n_max + 1):
        observed = [ranks[n] for ranks in per_sample]
        s = max(observed)
        i = widths[n] - s
        rows.append(DimensionRow(n=n, dim_jet=widths[n], s=s, h=r - s, i=i, j=i - prev_i,
                                 q_n=q_n(p, q, n) if n else None, sample_ranks=observed))
        prev_i = i
    report = DimensionReport(basis.name, r, rows)
    report.flags = _audit(rows, r)
    report.unstable = [row.n for row in rows if len(set(row.sample_ranks)) > 1]
    for msg in report.flags:
        warnings.warn(msg, InequalityWarning, stacklevel=2)
    return report


# -- independence ----------------------------------------------------------------


def _jacobian_rank(exprs, space: JetSpace, extra_rows, samples, seed) -> int:
    variables = enumerate_vars(space)
    partials = [[e.derive(v) for v in variables] for e in exprs]

    def at(point):
        M = [[d.evaluate(point) for d in row] for row in partials]
        return rank(M + extra_rows)

    rng = _rng(seed)
    return max(_sample(at, variables, rng) for _ in range(samples))


def _check_exprs(exprs, space):
    for e in exprs:
        if expr_order(e) > space.n:
            raise OrderError(f"{e} has order above {space.n}")


def functional_independence(exprs, space: JetSpace, samples: int = DEFAULT_SAMPLES, seed=0) -> int:
    """Generic rank of the Jacobian of ``exprs`` w.r.t. all coordinates of ``space``."""
    exprs = list(exprs)
    if not exprs:
        return 0
    _check_exprs(exprs, space)
    return _jacobian_rank(exprs, space, [], samples, seed)


def strict_independence(exprs, space: JetSpace, samples: int = DEFAULT_SAMPLES, seed=0) -> bool:
    """Whether ``dx ^ du^(n-1) ^ dI_1 ^ ... ^ dI_k`` is generically nonzero."""
    exprs = list(exprs)
    _check_exprs(exprs, space)
    variables = enumerate_vars(space)
    lower = [k for k, v in enumerate(variables) if v.kind == 0 or v.order <= space.n - 1]
    units = [[Fraction(int(c == k)) for c in range(len(variables))] for k in lower]
    return _jacobian_rank(exprs, space, units, samples, seed) == len(exprs) + len(lower)


# -- invariant differential operators -------------------------------------------


def _require_one_independent(*exprs):
    for e in exprs:
        for v in e.variables():
            if v.p != 1:
                raise ValueError("invariant differential operators need one independent variable")


def invariant_diff_op(I, J) -> RationalExpr:
    """``dJ/dI = D_x J / D_x I``."""
    I, J = (e if isinstance(e, RationalExpr) else RationalExpr.const(e) for e in (I, J))
    _require_one_independent(I, J)
    DI = total_derivative(I, 1)
    if DI.is_zero():
        raise ZeroDivisionError(f"D_x({I}) vanishes identically; the operator d/dI is undefined")
    return total_derivative(J, 1) / DI


def iterate_diff_op(I, J, k: int) -> list:
    """``[D J, D^2 J, ..., D^k J]`` with ``D = (D_x I)^-1 D_x``."""
    out = []
    cur = J
    for _ in range(k):
        cur = invariant_diff_op(I, cur)
        out.append(cur)
    return out


# -- ansatz search -------------------------------------------------------------------


def _monomial_of(denominator):
    if isinstance(denominator, RationalExpr):
        if not denominator.is_polynomial():
            raise ValueError("denominator must be a monomial")
        denominator = denominator.num.scale(1 / denominator.den.constant_value())
    if isinstance(denominator, Polynomial):
        if not denominator.is_monomial():
            raise ValueError(f"denominator {denominator} is not a monomial")
        ((m, _),) = denominator.terms.items()
        return m
    if isinstance(denominator, int) and denominator == 1:
        return ()
    return tuple(sorted(denominator))


def _ansatz_monomials(variables, max_degree):
    monos = set()
    for d in range(max_degree + 1):
        for combo in combinations_with_replacement(sorted(variables), d):
            counts: dict = {}
            for v in combo:
                counts[v] = counts.get(v, 0) + 1
            monos.add(tuple(sorted(counts.items())))
    return sorted(monos, key=grlex_key, reverse=True)


def search_invariants(basis: LieAlgebraBasis, n: int, denominator=(), max_degree: int = 2,
                      variables=None) -> list:
    """Invariants of the form ``P / m`` with ``deg P <= max_degree``.

    ``m`` is the fixed ``denominator`` monomial and ``P`` ranges over
    polynomials in ``variables`` (default: every coordinate of J^(n)).
    The annihilation conditions are linear in the coefficients of ``P``; a
    basis of their solution space is returned, each element scaled so its
    leading coefficient is 1.  Constant quotients are excluded.
    """
    if n < 0:
        raise ValueError("order must be >= 0")
    m = _monomial_of(denominator)
    space = JetSpace(basis.p, basis.q, n)
    if variables is None:
        variables = enumerate_vars(space)
    if any(v.order > n for v in variables) or any(v.order > n for v, _ in m):
        raise OrderError(f"ansatz uses coordinates above order {n}")
    ansatz = [b for b in _ansatz_monomials(variables, max_degree) if b != m]
    if not ansatz:
        return []
    m_poly = Polynomial.monomial(m)
    involved = sorted(set(variables) | {v for v, _ in m})

    rows = []
    for gen in basis.generators:
        w = prolong(gen, n)
        coeffs = {v: w.coefficient(v) for v in involved}
        dens: list = []
        for c in coeffs.values():
            if not any(c.den == d for d in dens):
                dens.append(c.den)
        # clear denominators: scaled[v] = coeff[v] * prod(dens)
        scaled = {}
        for v, c in coeffs.items():
            s = c.num
            for d in dens:
                if d != c.den:
                    s = s * d
            scaled[v] = s
        vm = Polynomial()
        for v, e in m:
            vm = vm + scaled[v] * m_poly.derive(v)
        residuals = []
        for b in ansatz:
            bp = Polynomial.monomial(b)
            vb = Polynomial()
            for v, _ in b:
                vb = vb + scaled[v] * bp.derive(v)
            residuals.append(vb * m_poly - bp * vm)
        monos = sorted({t for r in residuals for t in r.terms}, key=grlex_key)
        for t in monos:
            rows.append([r.coefficient(t) for r in residuals])

    basis_vectors = nullspace(rows, len(ansatz)) if rows else [
        [Fraction(int(i == k)) for i in range(len(ansatz))] for k in range(len(ansatz))]
    out = []
    for vec in basis_vectors:
        P = Polynomial({b: c for b, c in zip(ansatz, vec) if c})
        out.append(RationalExpr(P, m_poly))
    return out


# -- structure constants ----------------------------------------------------------------


def structure_constants(basis: LieAlgebraBasis, seed=0) -> dict:
    """``{(a, b): [c_1..c_r]}`` with ``[v_a, v_b] = sum_k c_k v_k`` (0-based pairs, a < b).

    Raises :class:`ValueError` if some bracket leaves the span of the basis.
    """
    gens = basis.generators
    r = len(gens)
    space = JetSpace(basis.p, basis.q, 0)
    variables = enumerate_vars(space)
    rng = _rng(seed)
    comps = [list(g.xi + g.phi) for g in gens]
    out = {}
    for a in range(r):
        for b in range(a + 1, r):
            w = bracket(gens[a], gens[b])
            target = list(w.xi + w.phi)
            n_points = r + 4
            while True:
                A, rhs = [], []
                for _ in range(n_points):
                    def at(pt):
                        return ([[comps[k][c].evaluate(pt) for k in range(r)] for c in range(len(target))],
                                [t.evaluate(pt) for t in target])
                    rows, vals = _sample(at, variables, rng)
                    A.extend(rows)
                    rhs.extend(vals)
                c = solve(A, rhs)
                if c is None:
                    raise ValueError(f"[v{a + 1}, v{b + 1}] is not in the span of the basis")
                combo = [sum((comps[k][i] * c[k] for k in range(r)), RationalExpr.const(0))
                         for i in range(len(target))]
                if all(x == y for x, y in zip(combo, target)):
                    out[(a, b)] = c
                    break
                if n_points > 64 * r:
                    raise ValueError(f"could not certify the bracket [v{a + 1}, v{b + 1}]")
                n_points *= 2
    return out
