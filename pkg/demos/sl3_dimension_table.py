"""
SL(3) acting projectively on the plane
======================================

Eight generators act on (x, u).  The generic orbit fills the jet space
until order 6, so the first differential invariant appears at order 7.
"""

import time

from jetinv import dimension_report, prolong, sl3, structure_constants
from jetinv.jetspace import JetSpace

basis = sl3()
for k, v in enumerate(basis.generators, start=1):
    print(f"v{k} = {v}")

###############################################################################
# The generators close under the bracket; the structure constants are found
# by an exact linear solve.

consts = structure_constants(basis)
for (a, b), c in consts.items():
    terms = [f"{coef}*v{k + 1}" for k, coef in enumerate(c) if coef]
    print(f"[v{a + 1}, v{b + 1}] = {' + '.join(terms) or '0'}")

###############################################################################
# Low-order prolonged coefficients of v8 = xu d/dx + u^2 d/du.

w = prolong(basis.generators[7], 3)
S = JetSpace(1, 1, 3)
for n in range(1, 4):
    print(f"  u{n}: {w.coefficient(S.u(1, (n,)))}")

###############################################################################
# The dimension table up to order 10.

t0 = time.perf_counter()
report = dimension_report(basis, 10)
print(report.format_table())
print(f"computed in {time.perf_counter() - t0:.2f} s; flags: {report.flags or 'none'}")
