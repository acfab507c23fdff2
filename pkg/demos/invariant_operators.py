"""
Generating invariants with d/dI
===============================

Given two invariants I and J, the quotient D_x J / D_x I is again an
invariant, one order higher.  Starting from I = u and the third-order
SL(2) invariant we build a complete system up to order 5.
"""

from jetinv import (
    JetSpace, dimension_report, functional_independence, is_invariant, iterate_diff_op, sl2,
    strict_independence,
)
from jetinv.jetspace import expr_order

basis = sl2()
s = JetSpace(1, 1, 3).symbols()
I = s["u"]
J = (2 * s["u1"] * s["u3"] - 3 * s["u2"] ** 2) / (2 * s["u1"] ** 4)

chain = [I, J] + iterate_diff_op(I, J, 2)
for e in chain:
    n = expr_order(e)
    print(f"order {n}: invariant={bool(is_invariant(basis, n, e))}  {e}")

###############################################################################
# Functional independence is a generic Jacobian rank; it matches i_5.

J5 = JetSpace(1, 1, 5)
print("rank of {I, J, DJ, D^2J}:", functional_independence(chain, J5))
print("i_5 from the dimension table:", dimension_report(basis, 5).rows[5].i)

###############################################################################
# Each new element is strictly of its own order.

for e in chain[1:]:
    n = expr_order(e)
    print(f"strictly order {n}:", strict_independence([e], JetSpace(1, 1, n)))
