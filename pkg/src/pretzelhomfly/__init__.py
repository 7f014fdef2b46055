"""Exact symbolic engine for symmetric-representation colored HOMFLY
polynomials of pretzel knots, their differential expansions, and the
finite-difference structure of the resulting families."""

ENGINE_VERSION = "1"

from .laurent import LaurentPoly, Monomial  # noqa: F401
from .qcore import RationalFn  # noqa: F401
