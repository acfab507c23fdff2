import random
from fractions import Fraction
from itertools import combinations

import pytest

from jetinv.algebra import Polynomial, RationalExpr
from jetinv.calculus import (
    OrderError, VectorField, apply, bracket, characteristic, prolong, prolong_recursive,
    prolonged_bracket, total_derivative,
)
from jetinv.jetspace import JetSpace, enumerate_vars, expr_order
from jetinv.presets import sl2, sl3

S = JetSpace(1, 1, 10)
s = S.symbols()
x, u = s["x"], s["u"]


def uk(k):
    return s["u" if k == 0 else f"u{k}"]


def var(k):
    return S.u(1, (k,))


def compose(F, subs):
    """Substitute expressions for variables of F."""
    def poly_value(P):
        total = RationalExpr.const(0)
        for m, c in P.terms.items():
            t = RationalExpr.const(c)
            for v, e in m:
                t = t * subs[v] ** e
            total = total + t
        return total
    return poly_value(F.num) / poly_value(F.den)


def random_field(rng, p=1, q=1):
    sp = JetSpace(p, q, 0)
    base = [RationalExpr.var(v) for v in enumerate_vars(sp)]

    def rand_poly():
        e = RationalExpr.const(rng.randint(-2, 2))
        for _ in range(3):
            t = RationalExpr.const(rng.randint(-3, 3))
            for _ in range(rng.randint(0, 2)):
                t = t * rng.choice(base)
            e = e + t
        return e
    return VectorField(p, q, tuple(rand_poly() for _ in range(p)), tuple(rand_poly() for _ in range(q)))


# -- characteristic and total derivative ---------------------------------------------


def test_characteristic_examples():
    assert characteristic(VectorField(1, 1, (x**2,), (0,))) == [-x**2 * uk(1)]
    assert characteristic(VectorField(1, 1, (0,), (1,))) == [1]
    assert characteristic(VectorField(1, 1, (x * u,), (u**2,))) == [u**2 - x * u * uk(1)]


def test_total_derivative_examples():
    assert total_derivative(x * uk(1)) == uk(1) + x * uk(2)
    assert total_derivative(x) == 1
    assert total_derivative(u**2) == 2 * u * uk(1)
    assert expr_order(total_derivative(uk(3) / uk(1))) == 4


def test_total_derivative_chain_rule_identity():
    # D_x F evaluated on the jet of f equals d/dx of F evaluated on the jet of f
    X = S.x()
    f = x**4 - 2 * x**3 + x / 3 + 5
    jet = [f]
    for _ in range(5):
        jet.append(jet[-1].derive(X))
    subs = {S.x(): x}
    subs.update({var(k): jet[k] for k in range(6)})
    for F in [x * uk(1) * uk(2), u**2 / (1 + uk(1) ** 2), uk(3) * x**2 - u * uk(2) + 7]:
        lhs = compose(total_derivative(F), subs)
        rhs = compose(F, subs).derive(X)
        assert lhs == rhs


def test_total_derivatives_commute_for_two_independents():
    P = JetSpace(2, 1, 3)
    rng = random.Random(3)
    pool = [RationalExpr.var(v) for v in enumerate_vars(P.with_order(2))]
    for _ in range(5):
        F = RationalExpr.const(0)
        for _ in range(4):
            t = RationalExpr.const(rng.randint(-4, 4))
            for _ in range(rng.randint(1, 3)):
                t = t * rng.choice(pool)
            F = F + t
        assert total_derivative(total_derivative(F, 1), 2) == total_derivative(total_derivative(F, 2), 1)


# -- closed forms from the SL(2) and SL(3) case studies -------------------------------------


@pytest.mark.parametrize("n", range(1, 9))
def test_sl2_closed_forms(n):
    v1, v2, v3 = sl2().generators
    assert prolong(v1, n).coefficient(var(n)).is_zero()
    assert prolong(v2, n).coefficient(var(n)) == -n * uk(n)
    assert prolong(v3, n).coefficient(var(n)) == -(n * (n - 1) * uk(n - 1) + 2 * n * x * uk(n))


def test_sl3_printed_low_order_coefficients():
    g = sl3().generators
    assert prolong(g[5], 1).coefficient(var(1)) == -uk(1) ** 2
    w8 = prolong(g[7], 2)
    assert w8.coefficient(var(1)) == -(x * uk(1) - u) * uk(1)
    assert w8.coefficient(var(2)) == -3 * x * uk(1) * uk(2)
    w5 = prolong(g[4], 6)
    assert w5.coefficient(var(1)) == 1
    assert all(w5.coefficient(var(k)).is_zero() for k in range(2, 7))


@pytest.mark.parametrize("n", range(1, 9))
def test_sl3_scaling_generators(n):
    g = sl3().generators
    assert prolong(g[2], n).coefficient(var(n)) == -n * uk(n)
    assert prolong(g[3], n).coefficient(var(n)) == uk(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_sl3_v7_corrected_closed_form(n):
    # Leibniz on Q = xu - x^2 u1:
    # D^n Q + x^2 u_(n+1) = x u_n + n u_(n-1) - 2n x u_n - n(n-1) u_(n-1)
    v7 = sl3().generators[6]
    expected = -(n * (n - 2) * uk(n - 1) + (2 * n - 1) * x * uk(n))
    assert prolong(v7, n).coefficient(var(n)) == expected


def test_prolong_examples():
    v6 = sl3().generators[5]
    assert prolong(v6, 1).coefficient(var(1)) == -uk(1) ** 2
    v3 = sl2().generators[2]
    assert str(prolong(v3, 2).coefficient(var(2))) == "-4*x*u2 - 2*u1"


# -- prolongation: oracle equivalence and structural properties ----------------------------------


def _all_generators():
    return list(sl2().generators) + list(sl3().generators)


@pytest.mark.parametrize("k", range(11))
def test_prolong_matches_recursive_oracle(k):
    v = _all_generators()[k]
    a, b = prolong(v, 6), prolong_recursive(v, 6)
    for c in enumerate_vars(JetSpace(1, 1, 6)):
        assert a.coefficient(c) == b.coefficient(c), (k, c)


@pytest.mark.parametrize("seed", [0, 1])
def test_prolong_matches_recursive_on_random_fields(seed):
    rng = random.Random(seed)
    for p, q in [(1, 1), (2, 1), (1, 2)]:
        v = random_field(rng, p, q)
        n = 4 if p == 1 else 3
        a, b = prolong(v, n), prolong_recursive(v, n)
        for c in enumerate_vars(JetSpace(p, q, n)):
            assert a.coefficient(c) == b.coefficient(c)


def test_order_zero_prolongation_is_the_field():
    v = sl3().generators[7]
    for w in (prolong(v, 0), prolong_recursive(v, 0)):
        assert w.coefficient(S.x()) == x * u
        assert w.coefficient(S.u()) == u**2
        with pytest.raises(OrderError):
            w.coefficient(var(1))


@pytest.mark.parametrize("basis", [sl2(), sl3()], ids=["sl2", "sl3"])
def test_bracket_homomorphism(basis):
    n = 4
    coords = enumerate_vars(JetSpace(1, 1, n))
    for v, w in combinations(basis.generators, 2):
        lhs = prolong(bracket(v, w), n)
        P, R = prolong(v, n), prolong(w, n)
        for c in coords:
            assert lhs.coefficient(c) == prolonged_bracket(P, R, RationalExpr.var(c))


def test_linearity():
    rng = random.Random(7)
    g = sl3().generators
    for _ in range(4):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        v, w = rng.sample(g, 2)
        combo = prolong(a * v + b * w, 5)
        pv, pw = prolong(v, 5), prolong(w, 5)
        for c in enumerate_vars(JetSpace(1, 1, 5)):
            assert combo.coefficient(c) == a * pv.coefficient(c) + b * pw.coefficient(c)


def test_coefficient_order_bound():
    rng = random.Random(11)
    fields = _all_generators() + [random_field(rng) for _ in range(2)]
    for v in fields:
        w = prolong(v, 6)
        for c, coeff in w.coeffs.items():
            assert expr_order(coeff) <= c.order


def test_apply_examples(schwarzian):
    v1, v2, v3 = sl2().generators
    assert apply(prolong(v1, 3), u).is_zero()
    assert apply(prolong(v2, 3), uk(1)) == -uk(1)
    assert apply(prolong(v3, 3), schwarzian).is_zero()
    with pytest.raises(OrderError):
        apply(prolong(v3, 2), schwarzian)


def test_bracket_examples():
    dx = VectorField(1, 1, (1,), (0,))
    xdx = VectorField(1, 1, (x,), (0,))
    x2dx = VectorField(1, 1, (x**2,), (0,))
    assert bracket(dx, xdx) == dx
    assert bracket(xdx, x2dx) == x2dx
    assert bracket(x2dx, x2dx).is_zero()


def test_vector_field_rejects_jet_coordinates():
    with pytest.raises(ValueError):
        VectorField(1, 1, (uk(1),), (0,))
    with pytest.raises(ValueError):
        VectorField(1, 1, (x, u), (0,))


def test_prolonged_cache_is_thread_safe():
    from concurrent.futures import ThreadPoolExecutor

    w = prolong(sl3().generators[7], 8)
    coords = [var(k) for k in range(8, 0, -1)] * 4
    with ThreadPoolExecutor(max_workers=8) as ex:
        results = list(ex.map(w.coefficient, coords))
    ref = prolong_recursive(sl3().generators[7], 8)
    for c, r in zip(coords, results):
        assert r == ref.coefficient(c)
