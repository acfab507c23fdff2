"""
Defining an action in a group file
==================================

Group files hold a ``p q`` header and one generator per line, giving the
xi components then the phi components separated by semicolons.  Here is
the Euclidean group of the plane: translations and rotation.
"""

from jetinv import dimension_report, is_invariant, parse_expr, parse_group
from jetinv.jetspace import JetSpace

text = """
# SE(2) on the plane
1 1
1  ; 0
0  ; 1
-u ; x
"""
basis = parse_group(text, name="se2")
print(dimension_report(basis, 5).format_table())

###############################################################################
# The curvature u2 / (1 + u1^2)^(3/2) is not rational, but its square is.

J2 = JetSpace(1, 1, 2)
kappa2 = parse_expr("u2^2/(1 + u1^2)^3", J2)
print("curvature squared invariant:", bool(is_invariant(basis, 2, kappa2)))
