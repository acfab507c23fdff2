"""Exact prolongation of Lie algebra actions and their differential invariants."""
from .algebra import Polynomial, RationalExpr, SingularPoint
from .calculus import (
    OrderError, ProlongedVectorField, VectorField, apply, bracket, characteristic, prolong,
    prolong_recursive, total_derivative,
)
from .invariants import (
    DimensionReport, InvariantVerdict, dimension_report, functional_independence,
    generic_orbit_dim, invariant_diff_op, is_invariant, iterate_diff_op, search_invariants,
    strict_independence, structure_constants,
)
from .jetspace import JetSpace, JetVar, dim_jet, enumerate_vars, q_n
from .parsing import load_group, parse_expr, parse_group
from .presets import LieAlgebraBasis, sl2, sl3, trivial

__version__ = "0.1.0"
