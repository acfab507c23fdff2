import warnings
from fractions import Fraction

import pytest

from jetinv.algebra import RationalExpr
from jetinv.calculus import OrderError, VectorField
from jetinv.invariants import (
    InequalityWarning, _audit, DimensionRow, dimension_report, functional_independence,
    generic_orbit_dim, invariant_diff_op, is_invariant, iterate_diff_op, search_invariants,
    strict_independence, structure_constants,
)
from jetinv.jetspace import JetSpace, dim_jet, q_n
from jetinv.presets import LieAlgebraBasis, sl2, sl3, trivial


# -- invariance -----------------------------------------------------------------------------


def test_is_invariant_examples(SL2, sym, schwarzian):
    v = is_invariant(SL2, 3, schwarzian)
    assert v and v.annihilated == [True, True, True]
    assert is_invariant(SL2, 0, sym["u"])
    v = is_invariant(SL2, 1, sym["u1"])
    assert not v
    assert v.annihilated == [True, False, False]
    assert v.residuals[1] == -sym["u1"]


def test_printed_numerator_is_not_invariant(SL2, sym):
    u1, u3 = sym["u1"], sym["u3"]
    assert not is_invariant(SL2, 3, (2 * u1 * u3 - 3 * u1**2) / (2 * u1**4))


def test_is_invariant_order_check(SL2, schwarzian):
    with pytest.raises(OrderError):
        is_invariant(SL2, 2, schwarzian)


def test_sl3_has_no_low_order_invariant_functions(SL3, sym):
    for e in [sym["u"], sym["u1"], sym["u2"] / sym["u1"] ** 3, sym["u3"] / sym["u2"] ** 2]:
        assert not is_invariant(SL3, 6, e)


# -- orbit dimensions and counting sequences ------------------------------------------------


def test_generic_orbit_dim_sl2(SL2):
    assert [generic_orbit_dim(SL2, n) for n in range(6)] == [1, 2, 3, 3, 3, 3]


def test_generic_orbit_dim_sl3(SL3):
    assert [generic_orbit_dim(SL3, n) for n in range(6)] == [2, 3, 4, 5, 6, 7]


def test_dimension_report_sl2(SL2):
    r = dimension_report(SL2, 5)
    assert r.column("i") == [1, 1, 1, 2, 3, 4]
    assert r.column("j") == [1, 0, 0, 1, 1, 1]
    assert r.column("h") == [2, 1, 0, 0, 0, 0]
    assert r.column("s") == [1, 2, 3, 3, 3, 3]
    assert not r.flags and not r.unstable


def test_dimension_report_sl3(SL3):
    r = dimension_report(SL3, 8)
    assert r.column("i") == [0, 0, 0, 0, 0, 0, 0, 1, 2]
    assert r.column("h") == [6, 5, 4, 3, 2, 1, 0, 0, 0]
    # s_6.. are not printed; they follow from h_6 = ... = 0
    assert r.column("s") == [2, 3, 4, 5, 6, 7, 8, 8, 8]


def test_dimension_report_trivial_group():
    r = dimension_report(trivial(), 0)
    assert r.rows[0].s == 0
    assert r.rows[0].i == dim_jet(1, 1, 0)


@pytest.mark.parametrize("basis", [sl2(), sl3()], ids=["sl2", "sl3"])
def test_sequence_laws(basis):
    r = dimension_report(basis, 10)
    rows = r.rows
    for row in rows:
        assert row.i + row.s == row.dim_jet
        assert row.h + row.s == basis.group_dim
        assert row.s <= basis.group_dim
    for prev, row in zip(rows, rows[1:]):
        assert prev.i <= row.i <= prev.i + q_n(1, 1, row.n)
        assert prev.s <= row.s <= prev.s + q_n(1, 1, row.n)
        assert row.j == row.i - prev.i
    assert rows[0].j == rows[0].i
    assert not r.flags


@pytest.mark.parametrize("seed", range(5))
def test_rank_sampling_stability(seed):
    assert dimension_report(sl3(), 8, seed=seed).column("s") == [2, 3, 4, 5, 6, 7, 8, 8, 8]
    assert dimension_report(sl2(), 6, seed=seed).column("s") == [1, 2, 3, 3, 3, 3, 3]


def test_report_is_deterministic_for_a_seed(SL3):
    a = dimension_report(SL3, 6, seed=42)
    b = dimension_report(SL3, 6, seed=42)
    assert [r.sample_ranks for r in a.rows] == [r.sample_ranks for r in b.rows]


def test_audit_flags_violations():
    rows = [DimensionRow(0, 2, 1, 2, 1, 1, None), DimensionRow(1, 3, 0, 3, 3, 2, 1)]
    flags = _audit(rows, 3)
    assert any("i_(n-1)" in f for f in flags)
    assert any("s_(n-1)" in f for f in flags)


def test_order_guardrail(SL3):
    with pytest.raises(ValueError):
        dimension_report(SL3, 13)
    with pytest.raises(ValueError):
        generic_orbit_dim(SL3, 13)


def test_rational_generators_resample_singular_points():
    S = JetSpace(1, 1, 0).symbols()
    v = VectorField(1, 1, (1 / S["u"],), (0,))
    basis = LieAlgebraBasis("inv-u", 1, 1, [v])
    with warnings.catch_warnings():
        warnings.simplefilter("error", InequalityWarning)
        assert dimension_report(basis, 3).column("s") == [1, 1, 1, 1]


# -- independence ---------------------------------------------------------------------------


def test_functional_independence_examples(sym, schwarzian):
    S3 = JetSpace(1, 1, 3)
    assert functional_independence([sym["u"], sym["u"] ** 2], S3) == 1
    assert functional_independence([sym["u"], schwarzian], S3) == 2
    assert functional_independence([], S3) == 0


def test_functional_independence_jacobian_oracle(sym, schwarzian):
    # at u1=1, u2=0, u3=0 the Jacobian rows are du and du3 (coefficient 1)
    pt = {v: Fraction(0) for v in JetSpace(1, 1, 3).variables()}
    pt[JetSpace(1, 1, 3).u(1, (1,))] = Fraction(1)
    row = [schwarzian.derive(v).evaluate(pt) for v in JetSpace(1, 1, 3).variables()]
    assert row == [0, 0, 0, 0, 1]


def test_strict_independence_examples(sym, schwarzian):
    assert strict_independence([sym["u"]], JetSpace(1, 1, 0))
    assert not strict_independence([sym["u"]], JetSpace(1, 1, 3))
    assert strict_independence([schwarzian], JetSpace(1, 1, 3))


# -- invariant differential operators -------------------------------------------------------------


def test_invariant_diff_op_examples(SL2, sym, schwarzian):
    u, x = sym["u"], sym["x"]
    assert invariant_diff_op(u, u) == 1
    assert invariant_diff_op(x, sym["u2"]) == sym["u3"]
    DJ = invariant_diff_op(u, schwarzian)
    assert is_invariant(SL2, 4, DJ)
    with pytest.raises(ZeroDivisionError):
        invariant_diff_op(RationalExpr.const(3), u)


def test_iterate_diff_op(SL2, sym, schwarzian):
    assert iterate_diff_op(sym["u"], schwarzian, 0) == []
    chain = iterate_diff_op(sym["u"], schwarzian, 2)
    for k, e in enumerate(chain, start=4):
        assert is_invariant(SL2, k, e)
    assert functional_independence([sym["u"], schwarzian] + chain, JetSpace(1, 1, 5)) == 4
    assert iterate_diff_op(sym["x"], sym["u"], 3) == [sym["u1"], sym["u2"], sym["u3"]]


def test_diff_op_needs_one_independent_variable():
    S = JetSpace(2, 1, 1).symbols()
    with pytest.raises(ValueError):
        invariant_diff_op(S["x1"], S["u[1]"])


# -- ansatz search ---------------------------------------------------------------------------


def test_search_recovers_schwarzian(SL2, sym, schwarzian):
    found = search_invariants(SL2, 3, sym["u1"] ** 4, 2)
    assert len(found) == 1
    assert found[0].num.leading_term()[1] == 1
    assert found[0] == schwarzian
    S = JetSpace(1, 1, 3)
    restricted = search_invariants(SL2, 3, sym["u1"] ** 4, 2, variables=S.variables()[2:])
    assert len(restricted) == 1 and restricted[0] == schwarzian


def test_search_order_zero_finds_u(SL2, sym):
    assert [str(e) for e in search_invariants(SL2, 0, 1, 1)] == ["u"]


def test_search_sl3_low_order_is_empty(SL3):
    assert search_invariants(SL3, 3, 1, 3) == []


def test_search_results_are_invariant(SL2):
    for e in search_invariants(SL2, 2, 1, 3):
        assert is_invariant(SL2, 2, e)
        assert {v.name for v in e.variables()} == {"u"}


# -- structure constants ---------------------------------------------------------------------------


@pytest.mark.parametrize("basis", [sl2(), sl3()], ids=["sl2", "sl3"])
def test_presets_closed_under_bracket(basis):
    consts = structure_constants(basis)
    r = basis.group_dim
    assert len(consts) == r * (r - 1) // 2


def test_sl2_structure_constants(SL2):
    c = structure_constants(SL2)
    assert c[(0, 1)] == [1, 0, 0]
    assert c[(0, 2)] == [0, 2, 0]
    assert c[(1, 2)] == [0, 0, 1]


def test_non_closed_basis_is_rejected():
    S = JetSpace(1, 1, 0).symbols()
    basis = LieAlgebraBasis("open", 1, 1, [VectorField(1, 1, (1,), (0,)),
                                           VectorField(1, 1, (S["x"] ** 3,), (0,))])
    with pytest.raises(ValueError):
        structure_constants(basis)
