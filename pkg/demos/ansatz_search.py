"""
Searching for invariants with a polynomial ansatz
=================================================

With the denominator fixed to a monomial m, the conditions v^(n)(P/m) = 0
are linear in the coefficients of P, so the invariants of that shape form
the null space of an exact rational matrix.
"""

from jetinv import JetSpace, search_invariants, sl2, sl3

S = JetSpace(1, 1, 3).symbols()

for e in search_invariants(sl2(), 3, S["u1"] ** 4, max_degree=2):
    print("sl2, order 3, denominator u1^4:", e)

print("sl2, order 0:", [str(e) for e in search_invariants(sl2(), 0, 1, max_degree=2)])

###############################################################################
# SL(3) has no invariant below order 7; the search confirms it at order 3.

print("sl3, order 3:", search_invariants(sl3(), 3, 1, max_degree=3))
