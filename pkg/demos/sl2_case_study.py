"""
SL(2) acting on the independent variable
========================================

The projective action x -> (ax + b)/(cx + d) leaves u untouched.  We
prolong its three generators, check the classical third-order invariant
and read off the orbit/invariant counts.
"""

from jetinv import JetSpace, apply, dimension_report, is_invariant, prolong, sl2

basis = sl2()
for k, v in enumerate(basis.generators, start=1):
    print(f"v{k} = {v}")

###############################################################################
# Prolonged generators.  The coefficient of d/du_n for x^2 d/dx is
# -(n(n-1) u_(n-1) + 2n x u_n).

v3 = prolong(basis.generators[2], 4)
for var, coeff in v3.coeffs.items():
    print(f"  {var}: {coeff}")

###############################################################################
# The Schwarzian-type expression is annihilated by every prolonged generator.
# Note the u2^2 in the numerator: with u1^2 instead it is *not* invariant.

s = JetSpace(1, 1, 3).symbols()
u1, u2, u3 = s["u1"], s["u2"], s["u3"]
S = (2 * u1 * u3 - 3 * u2**2) / (2 * u1**4)
print("invariant:", bool(is_invariant(basis, 3, S)))
wrong = (2 * u1 * u3 - 3 * u1**2) / (2 * u1**4)
print("u1^2 variant residuals:", [str(r) for r in is_invariant(basis, 3, wrong).residuals])
print("v3^(3) applied to S:", apply(prolong(basis.generators[2], 3), S))

###############################################################################
# Orbit dimensions s_n, isotropy h_n and invariant counts i_n, j_n.

print(dimension_report(basis, 8).format_table())
